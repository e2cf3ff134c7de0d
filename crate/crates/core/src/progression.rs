//! Finite arithmetic progressions of positive integers, viewed as sets.
//!
//! A progression is stored in canonical form so that set equality is field
//! equality: singletons carry step 0, longer progressions a positive step.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Progression {
    Empty,
    NonEmpty { base: u32, step: u32, len: u32 },
}

/// Serialized as its sorted element list.
impl Serialize for Progression {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elements())
    }
}

impl Progression {
    /// Builds a canonical progression. `step` is ignored for singletons.
    pub fn new(base: u32, step: u32, len: u32) -> Result<Self> {
        match len {
            0 => Ok(Progression::Empty),
            _ if base == 0 => Err(Error::NonPositiveElement),
            1 => Ok(Progression::NonEmpty { base, step: 0, len: 1 }),
            _ if step == 0 => Err(Error::Domain("progressions of length >= 2 need a positive step".into())),
            _ => {
                let span = u64::from(step) * u64::from(len - 1);
                if u64::from(base) + span > u64::from(u32::MAX) {
                    return Err(Error::Overflow("progression"));
                }
                Ok(Progression::NonEmpty { base, step, len })
            }
        }
    }

    pub fn singleton(x: u32) -> Result<Self> {
        Self::new(x, 0, 1)
    }

    /// The contiguous progression `{1, ..., n}`; empty for `n = 0`.
    pub fn interval(n: u32) -> Self {
        match n {
            0 => Progression::Empty,
            1 => Progression::NonEmpty { base: 1, step: 0, len: 1 },
            _ => Progression::NonEmpty { base: 1, step: 1, len: n },
        }
    }

    pub fn from_set<I: IntoIterator<Item = u32>>(elements: I) -> Result<Self> {
        let set: BTreeSet<u32> = elements.into_iter().collect();
        if set.contains(&0) {
            return Err(Error::NonPositiveElement);
        }
        let sorted: Vec<u32> = set.into_iter().collect();
        match sorted.len() {
            0 => Ok(Progression::Empty),
            1 => Self::new(sorted[0], 0, 1),
            len => {
                let step = sorted[1] - sorted[0];
                if sorted.windows(2).any(|w| w[1] - w[0] != step) {
                    return Err(Error::NotAProgression(sorted));
                }
                Self::new(sorted[0], step, len as u32)
            }
        }
    }

    pub fn len(&self) -> u32 {
        match *self {
            Progression::Empty => 0,
            Progression::NonEmpty { len, .. } => len,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Progression::Empty)
    }

    pub fn base(&self) -> Option<u32> {
        match *self {
            Progression::Empty => None,
            Progression::NonEmpty { base, .. } => Some(base),
        }
    }

    /// Step size; 0 for singletons and the empty progression.
    pub fn step(&self) -> u32 {
        match *self {
            Progression::Empty => 0,
            Progression::NonEmpty { step, .. } => step,
        }
    }

    pub fn first(&self) -> Option<u32> {
        self.base()
    }

    pub fn last(&self) -> Option<u32> {
        match *self {
            Progression::Empty => None,
            Progression::NonEmpty { base, step, len } => Some(base + step * (len - 1)),
        }
    }

    pub fn elements(&self) -> Vec<u32> {
        match *self {
            Progression::Empty => Vec::new(),
            Progression::NonEmpty { base, step, len } => (0..len).map(|i| base + i * step).collect(),
        }
    }

    pub fn contains(&self, x: u32) -> bool {
        match *self {
            Progression::Empty => false,
            Progression::NonEmpty { base, step, len } => {
                if x < base {
                    return false;
                }
                if len == 1 {
                    return x == base;
                }
                let offset = x - base;
                offset.is_multiple_of(step) && offset / step < len
            }
        }
    }

    /// Set containment `self ⊆ other`.
    pub fn leq(&self, other: &Progression) -> bool {
        match (*self, *other) {
            (Progression::Empty, _) => true,
            (_, Progression::Empty) => false,
            (Progression::NonEmpty { base, step, len }, Progression::NonEmpty { step: outer, .. }) => {
                if !other.contains(base) || !other.contains(self.last().unwrap_or(base)) {
                    return false;
                }
                len == 1 || step % outer == 0
            }
        }
    }

    pub fn lt(&self, other: &Progression) -> bool {
        self != other && self.leq(other)
    }

    /// Set intersection, re-canonicalized.
    pub fn meet(&self, other: &Progression) -> Progression {
        let theirs: BTreeSet<u32> = other.elements().into_iter().collect();
        let common = self.elements().into_iter().filter(|x| theirs.contains(x));
        // Two arithmetic progressions always intersect in an arithmetic progression.
        Progression::from_set(common).expect("intersection of progressions must be a progression")
    }

    /// The smallest progression containing both arguments.
    pub fn join(&self, other: &Progression) -> Progression {
        if self.is_empty() {
            return *other;
        }
        if other.is_empty() {
            return *self;
        }
        let union: BTreeSet<u32> = self.elements().into_iter().chain(other.elements()).collect();
        let lo = *union.iter().next().unwrap();
        let hi = *union.iter().next_back().unwrap();
        if lo == hi {
            return Progression::NonEmpty { base: lo, step: 0, len: 1 };
        }
        let step = union.iter().fold(0u64, |g, &x| numtheory::gcd(g, u64::from(x - lo))) as u32;
        Progression::NonEmpty { base: lo, step, len: (hi - lo) / step + 1 }
    }

    /// Image of `self ⊆ [len(outer)]` under the relabeling `i ↦ a + (i-1)r`
    /// onto the elements of `outer`.
    pub fn relabel_into(&self, outer: &Progression) -> Result<Progression> {
        let (Some(a), r, k) = (outer.base(), outer.step(), outer.len()) else {
            return match self {
                Progression::Empty => Ok(Progression::Empty),
                _ => Err(Error::Domain("cannot relabel into the empty progression".into())),
            };
        };
        match *self {
            Progression::Empty => Ok(Progression::Empty),
            Progression::NonEmpty { base, step, len } => {
                if base + step * (len - 1) > k {
                    return Err(Error::Domain(format!("{self} is not contained in [{k}]")));
                }
                Progression::new(a + (base - 1) * r, step * r, len)
            }
        }
    }

    /// Inverse of [`Progression::relabel_into`]: expresses `self ⊆ outer` in
    /// the coordinates `1..=len(outer)`.
    pub fn relabel_from(&self, outer: &Progression) -> Result<Progression> {
        if !self.leq(outer) {
            return Err(Error::Domain(format!("{self} is not contained in {outer}")));
        }
        match (*self, outer.base()) {
            (Progression::Empty, _) => Ok(Progression::Empty),
            (_, None) => unreachable!("nonempty subset of the empty progression"),
            (Progression::NonEmpty { base, step, len }, Some(a)) => {
                let r = outer.step().max(1);
                Progression::new((base - a) / r + 1, step / r, len)
            }
        }
    }

    fn order_key(&self) -> (u32, u32, u32) {
        match *self {
            Progression::Empty => (0, 0, 0),
            Progression::NonEmpty { base, step, len } => (len, base, step),
        }
    }

    /// Compact label when the ambient ground set is `[n]`: digits run
    /// together for `n <= 9` ("1234"), braces otherwise ("{1,10}").
    pub fn render(&self, n: u32) -> String {
        let elements = self.elements();
        if n <= 9 {
            if elements.is_empty() {
                return "∅".to_string();
            }
            elements.iter().map(u32::to_string).collect()
        } else {
            let inner: Vec<String> = elements.iter().map(u32::to_string).collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}

/// Canonical element order: by size, then base, then step.
impl Ord for Progression {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Progression {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Progression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.last().unwrap_or(0);
        f.write_str(&self.render(n))
    }
}

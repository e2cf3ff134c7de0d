//! Counting progressions by size: the closed form, and the bivariate
//! generating function expanded as a truncated power series.

use crate::error::{Error, Result};
use crate::numtheory;

/// Number of progressions of size `k` inside `[n]`.
pub fn count_progressions_formula(n: u64, k: u64) -> u64 {
    match k {
        0 => 1,
        1 => n,
        _ if k > n => 0,
        _ => {
            let d = k - 1;
            (1..=(n - 1) / d).map(|r| n - d * r).sum()
        }
    }
}

/// `|L_n| = 1 + n + Σ_{a=1}^{n-1} Σ_{r=1}^{a} τ(r)`, evaluated through the
/// divisor function; 1 for `n = 0`.
pub fn lattice_size_formula(n: u64) -> Result<u64> {
    if n == 0 {
        return Ok(1);
    }
    let mut total = 1 + n;
    for a in 1..n {
        for r in 1..=a {
            total = total.checked_add(numtheory::tau(r)?).ok_or(Error::Overflow("lattice size"))?;
        }
    }
    Ok(total)
}

/// Univariate power series truncated after `z^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Series {
    coeffs: Vec<i128>,
}

impl Series {
    fn zero(order: usize) -> Self {
        Series { coeffs: vec![0; order + 1] }
    }

    fn from_terms(order: usize, terms: &[(usize, i128)]) -> Self {
        let mut s = Self::zero(order);
        for &(e, c) in terms {
            if e <= order {
                s.coeffs[e] += c;
            }
        }
        s
    }

    fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn mul(&self, other: &Series) -> Result<Series> {
        let order = self.order().min(other.order());
        let mut out = Series::zero(order);
        for (i, &a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                let t = a.checked_mul(b).ok_or(Error::Overflow("series product"))?;
                out.coeffs[i + j] = out.coeffs[i + j].checked_add(t).ok_or(Error::Overflow("series product"))?;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    fn inverse(&self) -> Result<Series> {
        let c0 = self.coeffs[0];
        if c0 != 1 && c0 != -1 {
            return Err(Error::Domain("series inverse needs a unit constant term".into()));
        }
        let mut inv = Series::zero(self.order());
        inv.coeffs[0] = c0;
        for m in 1..=self.order() {
            let mut acc: i128 = 0;
            for i in 1..=m {
                let t = self.coeffs[i].checked_mul(inv.coeffs[m - i]).ok_or(Error::Overflow("series inverse"))?;
                acc = acc.checked_add(t).ok_or(Error::Overflow("series inverse"))?;
            }
            inv.coeffs[m] = -acc * c0;
        }
        Ok(inv)
    }
}

/// Coefficients of `z^n q^k` in
/// `(1-z)^{-2} (1 - z + zq + Σ_{k≥2} (zq)^k / (1 - z^{k-1}))`
/// for `0 <= n <= max_n`, `0 <= k <= max_k`; entry `[n][k]`.
pub fn gf_coefficients(max_n: usize, max_k: usize) -> Result<Vec<Vec<u64>>> {
    let order = max_n;
    let prefactor = Series::from_terms(order, &[(0, 1), (1, -2), (2, 1)]).inverse()?;
    let mut table = vec![vec![0u64; max_k + 1]; max_n + 1];
    for k in 0..=max_k {
        let inner = match k {
            0 => Series::from_terms(order, &[(0, 1), (1, -1)]),
            1 => Series::from_terms(order, &[(1, 1)]),
            _ => {
                let denominator = Series::from_terms(order, &[(0, 1), (k - 1, -1)]);
                Series::from_terms(order, &[(k, 1)]).mul(&denominator.inverse()?)?
            }
        };
        let column = prefactor.mul(&inner)?;
        for (n, row) in table.iter_mut().enumerate() {
            let c = column.coeffs[n];
            row[k] = u64::try_from(c).map_err(|_| Error::Internal(format!("negative coefficient {c} at z^{n} q^{k}")))?;
        }
    }
    Ok(table)
}

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

/// Sparse integer matrix, one ordered map per row.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, BigInt>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {r}");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v.into());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        self.data[r].get(&c).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of range");
        if v.is_zero() {
            self.data[r].remove(&c);
        } else {
            self.data[r].insert(c, v);
        }
    }

    pub fn row(&self, r: usize) -> &BTreeMap<usize, BigInt> {
        &self.data[r]
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                t.data[c].insert(r, v.clone());
            }
        }
        t
    }

    /// Panics on a shape mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, a) in row {
                for (&c, b) in &other.data[k] {
                    *acc.entry(c).or_default() += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[r] = acc;
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).collect()).collect()
    }

    pub(crate) fn into_rows(self) -> Vec<BTreeMap<usize, BigInt>> {
        self.data
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix {}x{} ", self.rows, self.cols)?;
        f.debug_list().entries(self.to_dense()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = IntegerMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), IntegerMatrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose().get(0, 1), BigInt::from(3));
        let mut z = IntegerMatrix::zeros(2, 3);
        assert!(z.is_zero());
        z.set(1, 2, BigInt::from(5));
        assert_eq!(z.nonzeros(), 1);
        z.set(1, 2, BigInt::from(0));
        assert!(z.is_zero());
    }
}

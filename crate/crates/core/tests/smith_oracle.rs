//! Smith normal form against determinantal divisors: the product of the
//! first k invariant factors is the gcd of all k x k minors.

use aplattice::homology::{smith_normal_form, IntegerMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn det(m: &[Vec<i64>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => i128::from(m[0][0]),
        k => (0..k)
            .map(|c| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &v)| v).collect()).collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * i128::from(m[0][c]) * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

/// `d_k` for k = 1..=min(rows, cols), stopping at the first zero.
fn determinantal_divisors(m: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut out = Vec::new();
    for k in 1..=r.min(c) {
        let mut g: i128 = 0;
        for rows in subsets(r, k) {
            for cols in subsets(c, k) {
                let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g);
    }
    out
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn invariants_match_minor_gcds(m in matrix()) {
        let snf = smith_normal_form(&IntegerMatrix::from_rows(&m));
        let divisors = determinantal_divisors(&m);
        prop_assert_eq!(snf.rank, divisors.len());
        let mut product = BigInt::from(1);
        for (k, d) in snf.diagonal.iter().enumerate() {
            prop_assert!(d.is_positive());
            if k > 0 {
                prop_assert!((d % &snf.diagonal[k - 1]).is_zero());
            }
            product *= d;
            prop_assert_eq!(&product, &BigInt::from(divisors[k]));
        }
    }
}

#[test]
fn known_forms() {
    let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
    assert_eq!(snf.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
    let snf = smith_normal_form(&IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
    assert_eq!(snf.diagonal, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
}

//! Classical arithmetic functions by trial division.
//!
//! Inputs stay small (well below 10^6), so nothing is cached.

use crate::error::{Error, Result};

/// Prime factorization of a positive integer, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs sorted by prime.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn tau(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| u64::from(e) + 1).product()
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut p = 2u64;
    while p.checked_mul(p).ok_or(Error::Overflow("factorize"))? <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { value: n, factors })
}

/// The number-theoretic Möbius function.
pub fn classical_mobius(n: u64) -> Result<i64> {
    let f = factorize(n)?;
    Ok(if !f.is_squarefree() {
        0
    } else if f.omega() % 2 == 0 {
        1
    } else {
        -1
    })
}

pub fn tau(n: u64) -> Result<u64> {
    Ok(factorize(n)?.tau())
}

pub fn omega(n: u64) -> Result<usize> {
    Ok(factorize(n)?.omega())
}

pub fn is_squarefree(n: u64) -> Result<bool> {
    Ok(factorize(n)?.is_squarefree())
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.factors == [(n, 1)]).unwrap_or(false)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, e) in f.factors() {
        let current = out.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk = pk.checked_mul(p).ok_or(Error::Overflow("divisors"))?;
            for i in 0..current {
                out.push(out[i].checked_mul(pk).ok_or(Error::Overflow("divisors"))?);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Binomial coefficient with overflow checks.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(u128::from(n - i))
            .ok_or(Error::Overflow("binomial"))?
            / u128::from(i + 1);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small_values() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(30).unwrap().factors(), &[(2, 1), (3, 1), (5, 1)]);
        assert_eq!(factorize(97).unwrap().factors(), &[(97, 1)]);
        assert_eq!(factorize(0), Err(Error::Zero));
    }

    #[test]
    fn factorization_invariants() {
        for n in 1..2000u64 {
            let f = factorize(n).unwrap();
            let product: u64 = f.factors().iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(product, n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        }
    }

    #[test]
    fn mobius_values() {
        assert_eq!(classical_mobius(1).unwrap(), 1);
        assert_eq!(classical_mobius(6).unwrap(), 1);
        assert_eq!(classical_mobius(12).unwrap(), 0);
        assert_eq!(classical_mobius(30).unwrap(), -1);
        assert_eq!(classical_mobius(0), Err(Error::Zero));
    }

    #[test]
    fn tau_omega_divisors() {
        assert_eq!(tau(6).unwrap(), 4);
        assert_eq!(omega(8).unwrap(), 1);
        assert!(!is_squarefree(4).unwrap());
        assert!(is_squarefree(1).unwrap());
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert!(tau(0).is_err() && omega(0).is_err() && divisors(0).is_err());
    }

    #[test]
    fn mobius_summation_identity() {
        for m in 1..=200u64 {
            let s: i64 = divisors(m).unwrap().into_iter().map(|d| classical_mobius(d).unwrap()).sum();
            assert_eq!(s, i64::from(m == 1), "m = {m}");
        }
    }

    #[test]
    fn squarefree_divisor_count_is_power_of_two() {
        for m in 1..=200u64 {
            let s: i64 = divisors(m).unwrap().into_iter().map(|d| classical_mobius(d).unwrap().abs()).sum();
            assert_eq!(s, 1 << omega(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn divisor_summatory_identity() {
        for m in 1..=200u64 {
            let lhs: u64 = (1..=m).map(|k| tau(k).unwrap()).sum();
            let rhs: u64 = (1..=m).map(|k| m / k).sum();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tau_matches_divisor_count() {
        for n in 1..500 {
            assert_eq!(tau(n).unwrap() as usize, divisors(n).unwrap().len());
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(3, 7).unwrap(), 0);
        assert_eq!(binomial(40, 20).unwrap(), 137846528820);
    }
}

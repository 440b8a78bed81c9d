//! Fibonacci numbers by fast doubling.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `(F_n, F_{n+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibPair {
    pub n: u64,
    pub fn0: BigInt,
    pub fn1: BigInt,
}

/// Fast doubling, most significant bit first:
/// `F_{2k} = F_k (2 F_{k+1} - F_k)`, `F_{2k+1} = F_k^2 + F_{k+1}^2`.
pub fn fib_pair(n: u64) -> FibPair {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    for bit in (0..u64::BITS - n.leading_zeros()).rev() {
        let even = &a * ((&b << 1u32) - &a);
        let odd = &a * &a + &b * &b;
        if (n >> bit) & 1 == 1 {
            b = &even + &odd;
            a = odd;
        } else {
            a = even;
            b = odd;
        }
    }
    FibPair { n, fn0: a, fn1: b }
}

pub fn fib(n: u64) -> BigInt {
    fib_pair(n).fn0
}

pub const PRODUCT_FORMULA_MAX_N: u64 = 40;

/// `|F_n - prod_{t=1}^{n-1} (alpha - beta zeta_n^t)|` in double precision.
///
/// Only `precision_bits <= 53` is supported; the product is evaluated with
/// `f64` complex arithmetic whatever smaller value is requested.
pub fn product_formula_residual(n: u64, precision_bits: u32) -> Result<f64> {
    if !(2..=PRODUCT_FORMULA_MAX_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 2,
            max: PRODUCT_FORMULA_MAX_N,
        });
    }
    if !(1..=f64::MANTISSA_DIGITS).contains(&precision_bits) {
        return Err(Error::OutOfRange {
            what: "precision_bits",
            value: precision_bits as u64,
            min: 1,
            max: f64::MANTISSA_DIGITS as u64,
        });
    }
    let sqrt5 = 5f64.sqrt();
    let alpha = (1.0 + sqrt5) / 2.0;
    let beta = (1.0 - sqrt5) / 2.0;
    let product = (1..n).fold(Complex64::new(1.0, 0.0), |acc, t| {
        let angle = 2.0 * std::f64::consts::PI * t as f64 / n as f64;
        acc * (Complex64::new(alpha, 0.0) - Complex64::from_polar(beta, angle))
    });
    let exact: f64 = fib(n).to_string().parse().expect("decimal digits");
    Ok((product - exact).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iterative(n: u64) -> BigInt {
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        for _ in 0..n {
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        a
    }

    #[test]
    fn pair_examples() {
        let p = fib_pair(0);
        assert_eq!((p.fn0, p.fn1), (BigInt::zero(), BigInt::one()));
        let p = fib_pair(13);
        assert_eq!((p.fn0, p.fn1), (BigInt::from(233), BigInt::from(377)));
        let p = fib_pair(19);
        assert_eq!((p.fn0, p.fn1), (BigInt::from(4181), BigInt::from(6765)));
    }

    #[test]
    fn fib_examples() {
        assert_eq!(fib(7), BigInt::from(13));
        assert_eq!(fib(11), BigInt::from(89));
        assert_eq!(fib(1), BigInt::one());
    }

    #[test]
    fn doubling_matches_recurrence() {
        let (mut a, mut b) = (BigInt::zero(), BigInt::one());
        for n in 0..=1000u64 {
            let pair = fib_pair(n);
            assert_eq!(pair.fn0, a, "n = {n}");
            assert_eq!(pair.fn1, b, "n = {n}");
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        assert_eq!(fib(1000), iterative(1000));
    }

    #[test]
    fn odd_index_sum_of_squares() {
        for n in 0..=100 {
            assert_eq!(fib(2 * n + 1), fib(n).pow(2) + fib(n + 1).pow(2));
        }
    }

    #[test]
    fn cassini() {
        for n in 1..=50u64 {
            let lhs = fib(n - 1) * fib(n + 1) - fib(n).pow(2);
            let rhs = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(lhs, BigInt::from(rhs), "n = {n}");
        }
    }

    #[test]
    fn pair_invariants() {
        use num_integer::Integer;
        for n in 1..200 {
            let p = fib_pair(n);
            assert!(p.fn1 >= p.fn0);
            assert!(p.fn0.gcd(&p.fn1).is_one());
        }
    }

    #[test]
    fn product_formula_examples() {
        assert!(product_formula_residual(2, 53).unwrap() < 1e-12);
        assert!(product_formula_residual(5, 53).unwrap() < 1e-9);
        assert!(product_formula_residual(12, 53).unwrap() < 1e-6);
        assert!(product_formula_residual(40, 53).unwrap() < 1e-6);
        assert!(product_formula_residual(1, 53).is_err());
        assert!(product_formula_residual(41, 53).is_err());
        assert!(product_formula_residual(10, 64).is_err());
    }
}

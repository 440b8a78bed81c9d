//! Machine-range modular arithmetic: primality, Legendre symbols, residue
//! classes and primitive roots, plus a big-integer square root.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};

/// Witnesses making Miller-Rabin deterministic below 2^64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &MR_WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Legendre symbol (a | p) by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    require_odd_prime(p)?;
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return Ok(0);
    }
    Ok(if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    })
}

/// Quadratic residues and non-residues of `Z_p^*`, both sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueSets {
    pub p: u64,
    pub residues: Vec<u64>,
    pub non_residues: Vec<u64>,
    // symbol[i] = legendre(i, p)
    symbol: Vec<i8>,
}

impl ResidueSets {
    pub fn is_residue(&self, r: u64) -> bool {
        self.symbol[(r % self.p) as usize] == 1
    }

    pub fn symbol(&self, r: u64) -> i8 {
        self.symbol[(r % self.p) as usize]
    }
}

pub fn quadratic_residues(p: u64) -> Result<ResidueSets> {
    require_odd_prime(p)?;
    let mut symbol = vec![-1i8; p as usize];
    symbol[0] = 0;
    for t in 1..=(p - 1) / 2 {
        symbol[mul_mod(t, t, p) as usize] = 1;
    }
    let residues = (1..p).filter(|&i| symbol[i as usize] == 1).collect();
    let non_residues = (1..p).filter(|&i| symbol[i as usize] == -1).collect();
    Ok(ResidueSets {
        p,
        residues,
        non_residues,
        symbol,
    })
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator `g >= 2` of `Z_p^*`.
pub fn primitive_root(p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let factors = distinct_prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .ok_or(Error::NotOddPrime(p))
}

/// `floor(sqrt(n))` for `n >= 0`.
pub fn isqrt(n: &BigInt) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::NegativeInput("isqrt"));
    }
    Ok(n.sqrt())
}

/// `Some(r)` with `r*r == n` when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

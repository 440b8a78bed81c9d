//! Elements of `Z[alpha][zeta_p]`, stored in the canonical basis
//! `1, zeta, ..., zeta^(p-2)` modulo `Phi_p(x) = 1 + x + ... + x^(p-1)`.
//!
//! Products and Galois actions are carried out in the "flat" ring
//! `Z[alpha][x]/(x^p - 1)`, which maps onto the cyclotomic ring, and are folded
//! back with `zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))`. The flat exponents
//! `1..=p-1` are permuted by `zeta -> zeta^m`, which is what makes the
//! residue-class decomposition below possible.

use std::fmt;

use crate::error::{Error, Result};
use crate::gamma::PrimeContext;
use crate::modarith::pow_mod;
use crate::zalpha::ZAlpha;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycloPoly {
    p: u64,
    coeffs: Vec<ZAlpha>,
}

/// `d_R * eta_R + d_N * eta_N`, where `eta_R` and `eta_N` are the sums of
/// `zeta^r` over residues and non-residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueDecomposition {
    pub d_r: ZAlpha,
    pub d_n: ZAlpha,
}

fn check_index(p: u64) {
    assert!(
        p >= 3 && p % 2 == 1,
        "cyclotomic index must be an odd prime, got {p}"
    );
}

impl CycloPoly {
    pub fn zero(p: u64) -> Self {
        check_index(p);
        CycloPoly {
            p,
            coeffs: vec![ZAlpha::zero(); (p - 1) as usize],
        }
    }

    pub fn constant(p: u64, c: ZAlpha) -> Self {
        let mut out = CycloPoly::zero(p);
        out.coeffs[0] = c;
        out
    }

    pub fn one(p: u64) -> Self {
        CycloPoly::constant(p, ZAlpha::one())
    }

    /// `c * zeta^e`, exponent taken mod `p`.
    pub fn monomial(p: u64, e: u64, c: ZAlpha) -> Self {
        check_index(p);
        let mut flat = vec![ZAlpha::zero(); p as usize];
        flat[(e % p) as usize] = c;
        CycloPoly::from_flat(p, flat)
    }

    /// Folds coefficients of `1, x, ..., x^(p-1)` (a residue mod `x^p - 1`)
    /// into canonical form.
    pub fn from_flat(p: u64, mut flat: Vec<ZAlpha>) -> Self {
        check_index(p);
        assert_eq!(flat.len() as u64, p, "flat vector must have p entries");
        let top = flat.pop().expect("p >= 3");
        if !top.is_zero() {
            for c in flat.iter_mut() {
                *c -= &top;
            }
        }
        CycloPoly { p, coeffs: flat }
    }

    /// Canonical coefficients with a zero appended for `zeta^(p-1)`.
    pub fn to_flat(&self) -> Vec<ZAlpha> {
        let mut flat = self.coeffs.clone();
        flat.push(ZAlpha::zero());
        flat
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[ZAlpha] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ZAlpha::is_zero)
    }

    /// The constant term, if every other coefficient vanishes.
    pub fn as_constant(&self) -> Option<&ZAlpha> {
        self.coeffs[1..]
            .iter()
            .all(ZAlpha::is_zero)
            .then(|| &self.coeffs[0])
    }

    fn same_index(&self, other: &CycloPoly) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::MismatchedPrime {
                left: self.p,
                right: other.p,
            })
        }
    }

    pub fn add(&self, other: &CycloPoly) -> Result<CycloPoly> {
        self.same_index(other)?;
        Ok(CycloPoly {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn sub(&self, other: &CycloPoly) -> Result<CycloPoly> {
        self.same_index(other)?;
        Ok(CycloPoly {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        })
    }

    pub fn neg(&self) -> CycloPoly {
        CycloPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, k: &ZAlpha) -> CycloPoly {
        CycloPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Schoolbook product; exponents wrap mod `p` before the final fold.
    pub fn mul(&self, other: &CycloPoly) -> Result<CycloPoly> {
        self.same_index(other)?;
        let p = self.p as usize;
        let mut flat = vec![ZAlpha::zero(); p];
        for (i, x) in self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in other
                .coeffs
                .iter()
                .enumerate()
                .filter(|(_, y)| !y.is_zero())
            {
                let k = (i + j) % p;
                flat[k] += &(x * y);
            }
        }
        Ok(CycloPoly::from_flat(self.p, flat))
    }

    /// `tau^k`: `zeta -> zeta^(g^k)`. Negative `k` is taken mod `p - 1`.
    pub fn apply_tau(&self, ctx: &PrimeContext, k: i64) -> Result<CycloPoly> {
        if self.p != ctx.p {
            return Err(Error::MismatchedPrime {
                left: self.p,
                right: ctx.p,
            });
        }
        let m = pow_mod(ctx.g, k.rem_euclid((ctx.p - 1) as i64) as u64, ctx.p);
        Ok(self.apply_exponent_map(m))
    }

    /// `zeta -> zeta^m` for `m` prime to `p`.
    pub(crate) fn apply_exponent_map(&self, m: u64) -> CycloPoly {
        let p = self.p;
        let mut flat = vec![ZAlpha::zero(); p as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            flat[((i as u64 * m) % p) as usize] = c.clone();
        }
        CycloPoly::from_flat(p, flat)
    }

    /// `sqrt 5 -> -sqrt 5` on every coefficient, `zeta` fixed.
    pub fn apply_sigma5(&self) -> CycloPoly {
        CycloPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(ZAlpha::conj).collect(),
        }
    }

    /// Rewrites the element on `zeta^1..zeta^(p-1)` (`d_i = c_i - c_0`) and
    /// requires `d_i` to be constant on residues and on non-residues.
    pub fn residue_decompose(&self, ctx: &PrimeContext) -> Result<ResidueDecomposition> {
        if self.p != ctx.p {
            return Err(Error::MismatchedPrime {
                left: self.p,
                right: ctx.p,
            });
        }
        let c0 = &self.coeffs[0];
        let flat_at = |i: u64| -> ZAlpha {
            match self.coeffs.get(i as usize) {
                Some(c) => c - c0,
                None => -c0,
            }
        };
        let class_value = |class: &'static str, members: &[u64]| -> Result<ZAlpha> {
            let first = flat_at(members[0]);
            match members.iter().find(|&&e| flat_at(e) != first) {
                Some(&exponent) => Err(Error::ConstancyViolation { class, exponent }),
                None => Ok(first),
            }
        };
        Ok(ResidueDecomposition {
            d_r: class_value("residue", &ctx.residues.residues)?,
            d_n: class_value("non-residue", &ctx.residues.non_residues)?,
        })
    }

    /// `prod_e (head + tail * zeta^e)`, one binomial at a time in the flat ring.
    pub fn binomial_product(p: u64, head: &ZAlpha, tail: &ZAlpha, exponents: &[u64]) -> CycloPoly {
        check_index(p);
        let n = p as usize;
        let mut flat = vec![ZAlpha::zero(); n];
        flat[0] = ZAlpha::one();
        for &e in exponents {
            let shift = (e % p) as usize;
            let next: Vec<ZAlpha> = (0..n)
                .map(|i| {
                    let j = (i + n - shift) % n;
                    let mut c = &flat[i] * head;
                    c += &(&flat[j] * tail);
                    c
                })
                .collect();
            flat = next;
        }
        CycloPoly::from_flat(p, flat)
    }

    /// Gauss period over the residues.
    pub fn eta_residues(ctx: &PrimeContext) -> CycloPoly {
        CycloPoly::class_sum(ctx.p, &ctx.residues.residues)
    }

    /// Gauss period over the non-residues.
    pub fn eta_non_residues(ctx: &PrimeContext) -> CycloPoly {
        CycloPoly::class_sum(ctx.p, &ctx.residues.non_residues)
    }

    fn class_sum(p: u64, exponents: &[u64]) -> CycloPoly {
        let mut flat = vec![ZAlpha::zero(); p as usize];
        for &e in exponents {
            flat[e as usize] = ZAlpha::one();
        }
        CycloPoly::from_flat(p, flat)
    }
}

impl ResidueDecomposition {
    pub fn recompose(&self, ctx: &PrimeContext) -> CycloPoly {
        let r = CycloPoly::eta_residues(ctx).scale(&self.d_r);
        let n = CycloPoly::eta_non_residues(ctx).scale(&self.d_n);
        r.add(&n).expect("same index")
    }
}

impl fmt::Display for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(p: u64, e: u64) -> CycloPoly {
        CycloPoly::monomial(p, e, ZAlpha::one())
    }

    fn ints(p: u64, cs: &[i64]) -> CycloPoly {
        let mut flat: Vec<ZAlpha> = cs.iter().map(|&c| ZAlpha::from_int(c)).collect();
        flat.resize(p as usize, ZAlpha::zero());
        CycloPoly::from_flat(p, flat)
    }

    #[test]
    fn mul_examples() {
        for p in [5, 7, 11] {
            assert_eq!(zeta(p, 1).mul(&zeta(p, p - 1)).unwrap(), CycloPoly::one(p));
        }
        let f = zeta(5, 1).add(&zeta(5, 4)).unwrap();
        assert_eq!(f.mul(&f).unwrap(), ints(5, &[2, 0, 1, 1]));
        let g = ints(7, &[3, -1, 4, 0, 2]);
        assert_eq!(g.mul(&CycloPoly::one(7)).unwrap(), g);
        assert_eq!(
            g.mul(&CycloPoly::one(5)),
            Err(Error::MismatchedPrime { left: 7, right: 5 })
        );
    }

    #[test]
    fn top_exponent_folds() {
        // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
        assert_eq!(zeta(5, 4), ints(5, &[-1, -1, -1, -1]));
        assert_eq!(zeta(7, 7), CycloPoly::one(7));
    }

    #[test]
    fn tau_examples() {
        let ctx = PrimeContext::new(7).unwrap();
        let c = CycloPoly::constant(7, ZAlpha::new(4, -9));
        assert_eq!(c.apply_tau(&ctx, 1).unwrap(), c);
        assert_eq!(zeta(7, 1).apply_tau(&ctx, 1).unwrap(), zeta(7, 3));
        let f = ints(7, &[1, 2, 3, 4, 5, 6]).scale(&ZAlpha::new(1, 1));
        assert_eq!(f.apply_tau(&ctx, 6).unwrap(), f);
        assert_eq!(
            f.apply_tau(&ctx, -1).unwrap().apply_tau(&ctx, 1).unwrap(),
            f
        );
        assert!(CycloPoly::one(11).apply_tau(&ctx, 1).is_err());
    }

    #[test]
    fn sigma5_examples() {
        let a_zeta = CycloPoly::monomial(7, 1, ZAlpha::alpha());
        assert_eq!(
            a_zeta.apply_sigma5(),
            CycloPoly::monomial(7, 1, ZAlpha::beta())
        );
        assert_eq!(a_zeta.apply_sigma5().apply_sigma5(), a_zeta);
        let three = CycloPoly::monomial(7, 2, ZAlpha::from_int(3));
        assert_eq!(three.apply_sigma5(), three);
    }

    #[test]
    fn decompose_examples() {
        let ctx = PrimeContext::new(7).unwrap();
        let eta = CycloPoly::eta_residues(&ctx);
        assert_eq!(
            eta.residue_decompose(&ctx).unwrap(),
            ResidueDecomposition {
                d_r: ZAlpha::one(),
                d_n: ZAlpha::zero()
            }
        );
        assert_eq!(
            CycloPoly::one(7).residue_decompose(&ctx).unwrap(),
            ResidueDecomposition {
                d_r: ZAlpha::from_int(-1),
                d_n: ZAlpha::from_int(-1)
            }
        );
        assert!(matches!(
            zeta(7, 1).residue_decompose(&ctx),
            Err(Error::ConstancyViolation {
                class: "residue",
                ..
            })
        ));
    }

    #[test]
    fn binomial_product_matches_repeated_mul() {
        let head = ZAlpha::new(2, -1);
        let tail = ZAlpha::new(-3, 5);
        let exps = [1, 4, 2, 2, 6];
        let mut expected = CycloPoly::one(7);
        for &e in &exps {
            let factor = CycloPoly::constant(7, head.clone())
                .add(&CycloPoly::monomial(7, e, tail.clone()))
                .unwrap();
            expected = expected.mul(&factor).unwrap();
        }
        assert_eq!(
            CycloPoly::binomial_product(7, &head, &tail, &exps),
            expected
        );
    }

    #[test]
    fn display() {
        let f = ints(7, &[0, 1])
            .add(&CycloPoly::monomial(7, 3, ZAlpha::new(1, -2)))
            .unwrap();
        assert_eq!(f.to_string(), "(1)z + (1 - 2a)z^3");
        assert_eq!(CycloPoly::zero(5).to_string(), "0");
    }
}

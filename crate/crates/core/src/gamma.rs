//! The relative norm `Gamma = prod_{r in R} (alpha - beta zeta^r)` from
//! `Q(sqrt 5, zeta_p)` down to `K = Q(sqrt 5, sqrt p*)`, the identities it
//! satisfies, and its exact coordinates in `K`.
//!
//! `sqrt p*` is fixed algebraically as `2 eta_R + 1`, where `eta_R` is the
//! Gauss period over the quadratic residues. No complex embedding is chosen
//! anywhere.

use std::fmt;

use num_bigint::BigInt;

use crate::cyclo::CycloPoly;
use crate::error::{Error, Result};
use crate::fib::fib;
use crate::modarith::{is_prime, primitive_root, quadratic_residues, ResidueSets};
use crate::represent::FormCase;
use crate::zalpha::{Dyadic, ZAlpha};

/// Per-prime data: `p* = (-1)^((p-1)/2) p`, the smallest primitive root `g`
/// (the generator of `tau`), and the residue classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeContext {
    pub p: u64,
    pub p_star: i64,
    pub g: u64,
    pub residues: ResidueSets,
}

impl PrimeContext {
    /// Requires a prime `p >= 7`. For `p = 5`, `sqrt 5` already lies in
    /// `Q(zeta_5)`; for `p = 3` the residue sum is not `0 mod p`. Both break
    /// the Galois bookkeeping and are rejected.
    pub fn new(p: u64) -> Result<Self> {
        if matches!(p, 2 | 3 | 5) {
            return Err(Error::UnsupportedPrime {
                p,
                reason: "the relative-norm construction needs p >= 7",
            });
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let p_star = if p % 4 == 1 { p as i64 } else { -(p as i64) };
        Ok(PrimeContext {
            p,
            p_star,
            g: primitive_root(p)?,
            residues: quadratic_residues(p)?,
        })
    }

    pub fn case(&self) -> FormCase {
        FormCase::for_prime(self.p)
    }
}

/// `alpha - beta zeta^r` multiplied over the residues `r`.
pub fn compute_gamma(ctx: &PrimeContext) -> CycloPoly {
    let minus_beta = -ZAlpha::beta();
    CycloPoly::binomial_product(ctx.p, &ZAlpha::alpha(), &minus_beta, &ctx.residues.residues)
}

/// `Gamma * tau(Gamma)`.
pub fn norm_product(ctx: &PrimeContext, gamma: &CycloPoly) -> Result<CycloPoly> {
    gamma.mul(&gamma.apply_tau(ctx, 1)?)
}

/// `Gamma * tau(Gamma) == F_p`.
pub fn verify_norm_product(ctx: &PrimeContext, gamma: &CycloPoly) -> Result<bool> {
    let expected = CycloPoly::constant(ctx.p, ZAlpha::from_int(fib(ctx.p)));
    Ok(norm_product(ctx, gamma)? == expected)
}

/// `sigma5(Gamma) = Gamma` for `p = 1 mod 4`, `sigma5(Gamma) = -tau(Gamma)`
/// for `p = 3 mod 4`.
pub fn verify_sigma5_relation(ctx: &PrimeContext, gamma: &CycloPoly) -> Result<bool> {
    let conjugated = gamma.apply_sigma5();
    Ok(match ctx.case() {
        FormCase::CaseI => conjugated == *gamma,
        FormCase::CaseII => conjugated == gamma.apply_tau(ctx, 1)?.neg(),
    })
}

/// `eta_R^2 + eta_R + (1 - p*)/4 = 0`, which certifies `(2 eta_R + 1)^2 = p*`.
pub fn gauss_period_check(ctx: &PrimeContext) -> bool {
    let eta = CycloPoly::eta_residues(ctx);
    let c = CycloPoly::constant(ctx.p, ZAlpha::from_int((1 - ctx.p_star) / 4));
    let lhs = eta
        .mul(&eta)
        .and_then(|sq| sq.add(&eta))
        .and_then(|s| s.add(&c))
        .expect("same index");
    lhs.is_zero()
}

/// `sqrt p* = 2 eta_R + 1` as a cyclotomic element.
pub fn sqrt_p_star(ctx: &PrimeContext) -> CycloPoly {
    CycloPoly::eta_residues(ctx)
        .scale(&ZAlpha::from_int(2))
        .add(&CycloPoly::one(ctx.p))
        .expect("same index")
}

/// `Gamma = w + x sqrt 5 + y sqrt p* + z sqrt(5 p*)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KCoordinates {
    pub w: Dyadic,
    pub x: Dyadic,
    pub y: Dyadic,
    pub z: Dyadic,
}

impl KCoordinates {
    pub fn as_array(&self) -> [&Dyadic; 4] {
        [&self.w, &self.x, &self.y, &self.z]
    }

    /// `tau` fixes `sqrt 5` and negates `sqrt p*`.
    pub fn tau(&self) -> KCoordinates {
        KCoordinates {
            w: self.w.clone(),
            x: self.x.clone(),
            y: -&self.y,
            z: -&self.z,
        }
    }

    /// `4 * (w + x sqrt 5 + (y + z sqrt 5)(2 eta_R + 1))` as a cyclotomic
    /// element; four times the value keeps every coefficient integral.
    pub fn reconstruct_times_four(&self, ctx: &PrimeContext) -> Result<CycloPoly> {
        let quarter = |d: &Dyadic| {
            d.scaled_int(2)
                .ok_or_else(|| Error::IntegralityViolation(format!("{d} has denominator > 4")))
        };
        let [w, x, y, z] = [
            quarter(&self.w)?,
            quarter(&self.x)?,
            quarter(&self.y)?,
            quarter(&self.z)?,
        ];
        // u + v sqrt 5 = (u - v) + 2v alpha
        let to_zalpha = |u: &BigInt, v: &BigInt| ZAlpha::new(u - v, v * 2);
        let rational = CycloPoly::constant(ctx.p, to_zalpha(&w, &x));
        let radical = sqrt_p_star(ctx).scale(&to_zalpha(&y, &z));
        rational.add(&radical)
    }
}

impl fmt::Display for KCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// Reads `Gamma` off through its residue-class decomposition:
/// `Gamma = -(d_R + d_N)/2 + ((d_R - d_N)/2) sqrt p*`.
pub fn extract_k_coordinates(ctx: &PrimeContext, gamma: &CycloPoly) -> Result<KCoordinates> {
    let dec = gamma.residue_decompose(ctx)?;
    let (sum_rational, sum_sqrt5) = (&dec.d_r + &dec.d_n).embed_sqrt5();
    let (diff_rational, diff_sqrt5) = (&dec.d_r - &dec.d_n).embed_sqrt5();
    let coords = KCoordinates {
        w: -&sum_rational.halve(),
        x: -&sum_sqrt5.halve(),
        y: diff_rational.halve(),
        z: diff_sqrt5.halve(),
    };
    if let Some(bad) = coords.as_array().into_iter().find(|d| d.shift() > 2) {
        return Err(Error::IntegralityViolation(format!(
            "coordinate {bad} of Gamma for p = {} has denominator > 4",
            ctx.p
        )));
    }
    if coords.reconstruct_times_four(ctx)? != gamma.scale(&ZAlpha::from_int(4)) {
        return Err(Error::VerificationFailed(format!(
            "coordinates {coords} do not reconstruct Gamma for p = {}",
            ctx.p
        )));
    }
    Ok(coords)
}

/// Coordinates in the integral basis
/// `{1, (1 + sqrt 5)/2, (1 + sqrt p*)/2, (1 + sqrt 5)(1 + sqrt p*)/4}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralBasisCoords {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

/// Inverts `w = a + b/2 + c/2 + d/4`, `x = b/2 + d/4`, `y = c/2 + d/4`,
/// `z = d/4`.
pub fn integral_basis_coords(k: &KCoordinates) -> Result<IntegralBasisCoords> {
    let int = |name: &str, v: Dyadic| {
        v.to_integer().ok_or_else(|| {
            Error::IntegralityViolation(format!("integral-basis coordinate {name} = {v}"))
        })
    };
    let four = BigInt::from(4);
    let two = BigInt::from(2);
    Ok(IntegralBasisCoords {
        a: int("a", &(&(&k.w - &k.x) - &k.y) + &k.z)?,
        b: int("b", (&k.x - &k.z).mul_int(&two))?,
        c: int("c", (&k.y - &k.z).mul_int(&two))?,
        d: int("d", k.z.mul_int(&four))?,
    })
}

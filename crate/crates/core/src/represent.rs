//! Verified representations `4 F_p = u^2 - p v^2` (p = 1 mod 4) and
//! `4 F_p = 5 u^2 + p v^2` (p = 3 mod 4).

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::fib::fib;
use crate::gamma::{compute_gamma, extract_k_coordinates, KCoordinates, PrimeContext};
use crate::modarith::is_prime;
use crate::pell::reduce_in_orbit;
use crate::zalpha::Dyadic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormCase {
    /// `u^2 - p v^2`
    CaseI,
    /// `5 u^2 + p v^2`
    CaseII,
}

impl FormCase {
    /// By `p mod 4`; `p = 3` falls in CaseII and `p = 5` in CaseI.
    pub fn for_prime(p: u64) -> FormCase {
        if p % 4 == 1 {
            FormCase::CaseI
        } else {
            FormCase::CaseII
        }
    }

    pub fn evaluate(self, p: u64, u: &BigInt, v: &BigInt) -> BigInt {
        let pv2 = v * v * BigInt::from(p);
        match self {
            FormCase::CaseI => u * u - pv2,
            FormCase::CaseII => u * u * 5 + pv2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FormCase::CaseI => "CaseI",
            FormCase::CaseII => "CaseII",
        }
    }
}

impl fmt::Display for FormCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for FormCase {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "CaseI" => Ok(FormCase::CaseI),
            "CaseII" => Ok(FormCase::CaseII),
            other => Err(format!("unknown case tag {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub p: u64,
    pub case: FormCase,
    pub u: BigInt,
    pub v: BigInt,
    /// `4 F_p`
    pub target: BigInt,
}

impl Representation {
    /// Signs of `u` and `v` are dropped; the forms only see squares.
    pub fn new(p: u64, case: FormCase, u: BigInt, v: BigInt) -> Self {
        Representation {
            p,
            case,
            u: u.abs(),
            v: v.abs(),
            target: fib(p) * 4,
        }
    }

    pub fn form_value(&self) -> BigInt {
        self.case.evaluate(self.p, &self.u, &self.v)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={} {} (u, v) = ({}, {})",
            self.p, self.case, self.u, self.v
        )
    }
}

/// Recomputes `4 F_p` and evaluates the form; the stored target is not trusted.
pub fn verify_representation(rep: &Representation) -> bool {
    let target = fib(rep.p) * 4;
    rep.target == target && rep.form_value() == target
}

#[derive(Debug, Clone)]
pub struct Construction {
    pub representation: Representation,
    /// `(|2w|, |2y|)` or `(|2x|, |2y|)` straight from `Gamma`, before any
    /// unit-orbit reduction. Equal to the witness for `p = 3, 5`.
    pub raw_pair: (BigInt, BigInt),
    /// `None` for `p = 3, 5`.
    pub coordinates: Option<KCoordinates>,
}

fn twice(p: u64, name: &str, d: &Dyadic) -> Result<BigInt> {
    d.scaled_int(1).map(|n| n.abs()).ok_or_else(|| {
        Error::IntegralityViolation(format!("2{name} = 2*({d}) is not an integer for p = {p}"))
    })
}

fn witness(p: u64, case: FormCase, u: u32, v: u32) -> Construction {
    let (u, v) = (BigInt::from(u), BigInt::from(v));
    Construction {
        representation: Representation::new(p, case, u.clone(), v.clone()),
        raw_pair: (u, v),
        coordinates: None,
    }
}

pub fn represent_detailed(p: u64) -> Result<Construction> {
    if p == 2 {
        return Err(Error::UnsupportedPrime {
            p,
            reason: "4F_2 is outside both forms",
        });
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let construction = match p {
        3 => witness(3, FormCase::CaseII, 1, 1),
        5 => witness(5, FormCase::CaseI, 5, 1),
        _ => {
            let ctx = PrimeContext::new(p)?;
            let gamma = compute_gamma(&ctx);
            let k = extract_k_coordinates(&ctx, &gamma)?;
            let vanishing = match ctx.case() {
                FormCase::CaseI => k.x.is_zero() && k.z.is_zero(),
                FormCase::CaseII => k.w.is_zero() && k.z.is_zero(),
            };
            if !vanishing {
                return Err(Error::VerificationFailed(format!(
                    "Gamma coordinates {k} for p = {p} do not vanish as expected"
                )));
            }
            let u = match ctx.case() {
                FormCase::CaseI => twice(p, "w", &k.w)?,
                FormCase::CaseII => twice(p, "x", &k.x)?,
            };
            let v = twice(p, "y", &k.y)?;
            let raw = Representation::new(p, ctx.case(), u.clone(), v.clone());
            let representation = match ctx.case() {
                FormCase::CaseI => reduce_in_orbit(&raw)?,
                FormCase::CaseII => raw,
            };
            Construction {
                representation,
                raw_pair: (u, v),
                coordinates: Some(k),
            }
        }
    };
    if !verify_representation(&construction.representation) {
        return Err(Error::VerificationFailed(format!(
            "{} does not represent 4F_{p}",
            construction.representation
        )));
    }
    Ok(construction)
}

pub fn represent(p: u64) -> Result<Representation> {
    represent_detailed(p).map(|c| c.representation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(rep: &Representation) -> (BigInt, BigInt) {
        (rep.u.clone(), rep.v.clone())
    }

    fn big(u: i64, v: i64) -> (BigInt, BigInt) {
        (BigInt::from(u), BigInt::from(v))
    }

    #[test]
    fn represent_examples() {
        let r7 = represent(7).unwrap();
        assert_eq!((r7.case, pair(&r7)), (FormCase::CaseII, big(3, 1)));
        assert_eq!(r7.target, BigInt::from(52));
        let r3 = represent(3).unwrap();
        assert_eq!((r3.case, pair(&r3)), (FormCase::CaseII, big(1, 1)));
        let r5 = represent(5).unwrap();
        assert_eq!((r5.case, pair(&r5)), (FormCase::CaseI, big(5, 1)));
    }

    #[test]
    fn represent_rejects() {
        assert!(matches!(
            represent(2),
            Err(Error::UnsupportedPrime { p: 2, .. })
        ));
        assert_eq!(represent(4), Err(Error::NotPrime(4)));
        assert_eq!(represent(1), Err(Error::NotPrime(1)));
        assert_eq!(represent(91), Err(Error::NotPrime(91)));
    }

    #[test]
    fn verify_examples() {
        let r = |p, case, u: i64, v: i64| Representation::new(p, case, u.into(), v.into());
        assert!(verify_representation(&r(11, FormCase::CaseII, 6, 4)));
        assert!(verify_representation(&r(13, FormCase::CaseI, 42, 8)));
        assert!(!verify_representation(&r(13, FormCase::CaseI, 42, 9)));
        let mut forged = r(13, FormCase::CaseI, 42, 8);
        forged.target += 1;
        assert!(!verify_representation(&forged));
    }

    #[test]
    fn raw_pairs_before_reduction() {
        // Gamma-derived pairs, cross-checked against a floating evaluation of
        // the residue product.
        let c = represent_detailed(13).unwrap();
        assert_eq!(c.raw_pair, big(42, 8));
        let c = represent_detailed(11).unwrap();
        assert_eq!(c.raw_pair, big(6, 4));
        assert_eq!(pair(&c.representation), big(6, 4));
        let c = represent_detailed(19).unwrap();
        assert_eq!(pair(&c.representation), big(34, 24));
        let c = represent_detailed(23).unwrap();
        assert_eq!(pair(&c.representation), big(109, 49));
    }

    #[test]
    fn case_tags_and_parity() {
        for p in (3..120).filter(|&p| is_prime(p)) {
            let rep = represent(p).unwrap();
            assert_eq!(rep.case, FormCase::for_prime(p));
            assert_eq!(&rep.u % 2u32, &rep.v % 2u32, "p = {p}");
        }
    }
}

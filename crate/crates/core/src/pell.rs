//! Continued fractions of quadratic irrationals, the units `(X + Y sqrt p)/2`
//! of the maximal order of `Q(sqrt p)`, and the unit orbits they generate on
//! CaseI representations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modarith::{exact_sqrt, is_prime};
use crate::represent::{represent, FormCase, Representation};

/// `(P + sqrt D) / Q` with `Q | D - P^2`, advanced by the usual recurrence
/// `a = floor((P + isqrt D)/Q)`, `P' = aQ - P`, `Q' = (D - P'^2)/Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct QuadraticSurd {
    d: i128,
    root: i128,
    p: i128,
    q: i128,
}

impl QuadraticSurd {
    fn new(d: u64, p: i128, q: i128) -> Self {
        let d = d as i128;
        debug_assert_eq!((d - p * p) % q, 0);
        QuadraticSurd {
            d,
            root: d.isqrt(),
            p,
            q,
        }
    }

    /// Returns the partial quotient and moves to the next complete quotient.
    fn step(&mut self) -> u64 {
        let a = (self.p + self.root).div_euclid(self.q);
        let next_p = a * self.q - self.p;
        self.q = (self.d - next_p * next_p) / self.q;
        self.p = next_p;
        a as u64
    }
}

/// Running convergents `h_k / k_k`.
#[derive(Debug, Clone)]
struct Convergents {
    h: (BigInt, BigInt),
    k: (BigInt, BigInt),
}

impl Convergents {
    fn new() -> Self {
        Convergents {
            h: (BigInt::zero(), BigInt::one()),
            k: (BigInt::one(), BigInt::zero()),
        }
    }

    fn push(&mut self, a: u64) {
        let a = BigInt::from(a);
        let h = &a * &self.h.1 + &self.h.0;
        let k = &a * &self.k.1 + &self.k.0;
        self.h = (std::mem::replace(&mut self.h.1, h.clone()), h);
        self.k = (std::mem::replace(&mut self.k.1, k.clone()), k);
    }

    fn current(&self) -> (&BigInt, &BigInt) {
        (&self.h.1, &self.k.1)
    }
}

/// `sqrt D = [a0; period...]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfExpansion {
    pub d: u64,
    pub a0: u64,
    pub period: Vec<u64>,
}

pub fn cf_sqrt(d: u64) -> Result<CfExpansion> {
    let root = d.isqrt();
    if root * root == d {
        return Err(Error::NotIrrational(d));
    }
    let mut surd = QuadraticSurd::new(d, 0, 1);
    let a0 = surd.step();
    let mut period = Vec::new();
    loop {
        let a = surd.step();
        period.push(a);
        if a == 2 * a0 {
            break;
        }
    }
    Ok(CfExpansion { d, a0, period })
}

impl CfExpansion {
    /// The convergent `x/y` just before the end of the first period, which
    /// satisfies `x^2 - D y^2 = (-1)^period_len`.
    pub fn period_convergent(&self) -> (BigInt, BigInt) {
        let mut conv = Convergents::new();
        conv.push(self.a0);
        for &a in &self.period[..self.period.len() - 1] {
            conv.push(a);
        }
        let (h, k) = conv.current();
        (h.clone(), k.clone())
    }

    /// Smallest positive solution of `x^2 - D y^2 = +-1`.
    pub fn fundamental_solution(&self) -> (BigInt, BigInt, i8) {
        let (x, y) = self.period_convergent();
        let sign = if self.period.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        (x, y, sign)
    }
}

/// `(X + Y sqrt p) / 2` with `X^2 - p Y^2 = norm4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PellUnit {
    pub x: BigInt,
    pub y: BigInt,
    pub norm4: i8,
}

impl PellUnit {
    pub fn identity() -> Self {
        PellUnit {
            x: BigInt::from(2),
            y: BigInt::zero(),
            norm4: 4,
        }
    }

    pub fn satisfies(&self, p: u64) -> bool {
        &self.x * &self.x - &self.y * &self.y * p == BigInt::from(self.norm4)
    }

    /// `((X^2 + p Y^2)/2, XY)`, norm `+4` whatever the input norm.
    pub fn square(&self, p: u64) -> PellUnit {
        PellUnit {
            x: (&self.x * &self.x + &self.y * &self.y * p) >> 1u32,
            y: &self.x * &self.y,
            norm4: 4,
        }
    }
}

fn require_case_one_prime(p: u64) -> Result<()> {
    if p >= 5 && p % 4 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{p} is not a prime congruent to 1 mod 4"
        )))
    }
}

/// Fundamental unit of the maximal order of `Q(sqrt p)`, `p = 1 mod 4`.
///
/// Expands the reduced surd `xi = (a + sqrt p)/2`, `a` the largest odd
/// integer below `sqrt p`; `Z[xi]` is the maximal order. The first
/// convergent `h/k` at which the complete quotient's denominator returns to 2
/// gives the unit `h - k conj(xi) = (2h - ak + k sqrt p)/2`.
pub fn fundamental_unit4(p: u64) -> Result<PellUnit> {
    require_case_one_prime(p)?;
    let root = p.isqrt();
    let a = if root % 2 == 1 { root } else { root - 1 };
    let mut surd = QuadraticSurd::new(p, a as i128, 2);
    let mut conv = Convergents::new();
    loop {
        conv.push(surd.step());
        if surd.q == 2 {
            break;
        }
    }
    let (h, k) = conv.current();
    let x = (h << 1u32) - k * a;
    let y = k.clone();
    let norm = &x * &x - &y * &y * p;
    let norm4 = if norm == BigInt::from(4) {
        4
    } else if norm == BigInt::from(-4) {
        -4
    } else {
        return Err(Error::VerificationFailed(format!(
            "continued fraction of (a + sqrt {p})/2 gave norm {norm}"
        )));
    };
    Ok(PellUnit { x, y, norm4 })
}

/// Ascending search over `Y = 1..=max_y` for the smallest `X^2 - pY^2 = -4`
/// or `+4` (tried in that order). Only practical when the unit is small.
pub fn search_unit4(p: u64, max_y: u64) -> Result<PellUnit> {
    require_case_one_prime(p)?;
    for y in 1..=max_y {
        let py2 = BigInt::from(y) * y * p;
        for norm4 in [-4i8, 4] {
            if let Some(x) = exact_sqrt(&(&py2 + norm4)) {
                return Ok(PellUnit {
                    x,
                    y: BigInt::from(y),
                    norm4,
                });
            }
        }
    }
    Err(Error::BudgetExceeded(format!(
        "no unit of norm +-4 for p = {p} with Y <= {max_y}"
    )))
}

pub fn norm_plus4_unit(p: u64) -> Result<PellUnit> {
    let unit = fundamental_unit4(p)?;
    Ok(if unit.norm4 == -4 {
        unit.square(p)
    } else {
        unit
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Multiplies `(u + v sqrt p)/2`-style data by the unit (or its conjugate).
pub fn orbit_step(
    rep: &Representation,
    unit: &PellUnit,
    direction: Direction,
) -> Result<Representation> {
    if rep.case != FormCase::CaseI {
        return Err(Error::Precondition("orbit steps act on CaseI only".into()));
    }
    if unit.norm4 != 4 || !unit.satisfies(rep.p) {
        return Err(Error::Precondition(format!(
            "({}, {}) is not a norm +4 unit for p = {}",
            unit.x, unit.y, rep.p
        )));
    }
    let y = match direction {
        Direction::Forward => unit.y.clone(),
        Direction::Backward => -&unit.y,
    };
    let u2 = &rep.u * &unit.x + &rep.v * &y * rep.p;
    let v2 = &rep.u * &y + &rep.v * &unit.x;
    if u2.bit(0) || v2.bit(0) {
        return Err(Error::Precondition(format!(
            "({}, {}) and unit ({}, {}) have incompatible parities",
            rep.u, rep.v, unit.x, unit.y
        )));
    }
    Ok(Representation {
        u: (u2 >> 1u32).abs(),
        v: (v2 >> 1u32).abs(),
        ..rep.clone()
    })
}

/// Backward steps while `u` strictly decreases.
pub fn reduce_with_unit(rep: &Representation, unit: &PellUnit) -> Result<Representation> {
    let mut current = rep.clone();
    loop {
        let back = orbit_step(&current, unit, Direction::Backward)?;
        if back.u < current.u {
            current = back;
        } else {
            return Ok(current);
        }
    }
}

pub fn reduce_in_orbit(rep: &Representation) -> Result<Representation> {
    reduce_with_unit(rep, &norm_plus4_unit(rep.p)?)
}

/// `represent(p)` followed by `k - 1` forward steps.
pub fn generate_solutions(p: u64, k: usize) -> Result<Vec<Representation>> {
    require_case_one_prime(p)?;
    if k == 0 {
        return Ok(Vec::new());
    }
    let unit = norm_plus4_unit(p)?;
    let mut out = Vec::with_capacity(k);
    out.push(represent(p)?);
    while out.len() < k {
        let next = orbit_step(out.last().expect("non-empty"), &unit, Direction::Forward)?;
        out.push(next);
    }
    Ok(out)
}

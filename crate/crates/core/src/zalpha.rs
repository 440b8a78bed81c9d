//! The ring `Z[alpha]`, `alpha = (1 + sqrt 5) / 2`, and dyadic rationals for
//! reading its elements off in the basis `{1, sqrt 5}`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `a + b*alpha`, with `alpha^2 = alpha + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ZAlpha {
    pub a: BigInt,
    pub b: BigInt,
}

impl ZAlpha {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        ZAlpha {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        ZAlpha::new(a, 0)
    }

    pub fn zero() -> Self {
        ZAlpha::default()
    }

    pub fn one() -> Self {
        ZAlpha::new(1, 0)
    }

    pub fn alpha() -> Self {
        ZAlpha::new(0, 1)
    }

    /// `beta = 1 - alpha`.
    pub fn beta() -> Self {
        ZAlpha::new(1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The automorphism `sqrt 5 -> -sqrt 5`, i.e. `alpha -> beta`.
    pub fn conj(&self) -> ZAlpha {
        ZAlpha {
            a: &self.a + &self.b,
            b: -&self.b,
        }
    }

    /// `x * conj(x) = a^2 + ab - b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Coordinates `(a + b/2, b/2)` in the basis `{1, sqrt 5}`.
    pub fn embed_sqrt5(&self) -> (Dyadic, Dyadic) {
        let twice_rational = (&self.a << 1u32) + &self.b;
        (
            Dyadic::new(twice_rational, 1),
            Dyadic::new(self.b.clone(), 1),
        )
    }

    pub fn mul_int(&self, k: &BigInt) -> ZAlpha {
        ZAlpha {
            a: &self.a * k,
            b: &self.b * k,
        }
    }

    /// Exact division by an integer, `None` unless both coefficients divide.
    pub fn div_exact(&self, k: &BigInt) -> Option<ZAlpha> {
        let (qa, ra) = self.a.div_rem(k);
        let (qb, rb) = self.b.div_rem(k);
        (ra.is_zero() && rb.is_zero()).then_some(ZAlpha { a: qa, b: qb })
    }
}

impl fmt::Display for ZAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}a", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}a", self.a, -&self.b),
            (false, false) => write!(f, "{} + {}a", self.a, self.b),
        }
    }
}

impl<'a> Add<&'a ZAlpha> for &'a ZAlpha {
    type Output = ZAlpha;
    fn add(self, rhs: &ZAlpha) -> ZAlpha {
        ZAlpha {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for ZAlpha {
    type Output = ZAlpha;
    fn add(mut self, rhs: ZAlpha) -> ZAlpha {
        self += &rhs;
        self
    }
}

impl AddAssign<&ZAlpha> for ZAlpha {
    fn add_assign(&mut self, rhs: &ZAlpha) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> Sub<&'a ZAlpha> for &'a ZAlpha {
    type Output = ZAlpha;
    fn sub(self, rhs: &ZAlpha) -> ZAlpha {
        ZAlpha {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Sub for ZAlpha {
    type Output = ZAlpha;
    fn sub(mut self, rhs: ZAlpha) -> ZAlpha {
        self -= &rhs;
        self
    }
}

impl SubAssign<&ZAlpha> for ZAlpha {
    fn sub_assign(&mut self, rhs: &ZAlpha) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Neg for &ZAlpha {
    type Output = ZAlpha;
    fn neg(self) -> ZAlpha {
        ZAlpha {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for ZAlpha {
    type Output = ZAlpha;
    fn neg(self) -> ZAlpha {
        ZAlpha {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<'a> Mul<&'a ZAlpha> for &'a ZAlpha {
    type Output = ZAlpha;
    /// `(a + b alpha)(c + d alpha) = (ac + bd) + (ad + bc + bd) alpha`,
    /// with `ad + bc + bd = (a + b)(c + d) - ac`.
    fn mul(self, rhs: &ZAlpha) -> ZAlpha {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let cross = (&self.a + &self.b) * (&rhs.a + &rhs.b) - &ac;
        ZAlpha {
            a: ac + bd,
            b: cross,
        }
    }
}

impl Mul for ZAlpha {
    type Output = ZAlpha;
    fn mul(self, rhs: ZAlpha) -> ZAlpha {
        &self * &rhs
    }
}

/// `num / 2^shift`, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    shift: u32,
}

impl Dyadic {
    pub fn new(num: BigInt, shift: u32) -> Self {
        let mut d = Dyadic { num, shift };
        d.normalize();
        d
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.shift = 0;
            return;
        }
        let twos = self
            .num
            .trailing_zeros()
            .unwrap_or(0)
            .min(self.shift as u64) as u32;
        self.num >>= twos;
        self.shift -= twos;
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    /// The reduced denominator is `2^shift`.
    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.shift == 0
    }

    /// The value times `2^k`, if that is an integer.
    pub fn scaled_int(&self, k: u32) -> Option<BigInt> {
        (self.shift <= k).then(|| &self.num << (k - self.shift))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.scaled_int(0)
    }

    /// Same value with the power-of-two denominator `2^k` written out, as
    /// `num/2^k`; `None` if the reduced denominator is larger.
    pub fn over_power_of_two(&self, k: u32) -> Option<String> {
        self.scaled_int(k)
            .map(|n| format!("{}/{}", n, BigInt::one() << k))
    }

    pub fn halve(&self) -> Dyadic {
        Dyadic::new(self.num.clone(), self.shift + 1)
    }

    pub fn mul_int(&self, k: &BigInt) -> Dyadic {
        Dyadic::new(&self.num * k, self.shift)
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            num: self.num.abs(),
            shift: self.shift,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shift == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << self.shift)
        }
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let shift = self.shift.max(rhs.shift);
        Dyadic::new(
            (&self.num << (shift - self.shift)) + (&rhs.num << (shift - rhs.shift)),
            shift,
        )
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic {
            num: -&self.num,
            shift: self.shift,
        }
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

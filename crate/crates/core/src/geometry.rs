//! Numerical ring of a geometrically ruled surface `u: S -> C`.
//!
//! Classes are written in the basis `h` (a section of minimal
//! self-intersection) and `f` (a fiber). For base genus `q > 0` the `f`
//! coefficient stands for the degree of a line bundle pulled back from `C`;
//! only numerical data is retained.
//!
//! The pairing is `h^2 = -e`, `h.f = 1`, `f^2 = 0` and the canonical class is
//! `-2h + (2q - 2 - e)f`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A ruled surface over a curve of genus `q` with invariant `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceGeometry {
    q: i64,
    e: i64,
}

/// Integral numerical class `a*h + b*f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
}

/// Rational numerical class, the degree-one part of a [`CycleClass`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RationalClass {
    pub a: Rational64,
    pub b: Rational64,
}

/// Element of the rational Chow ring of `S`, truncated above degree two.
///
/// `p2` is the multiple of the class of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CycleClass {
    pub r0: Rational64,
    pub d1: RationalClass,
    pub p2: Rational64,
}

/// Element of the rational Chow ring of the base curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CurveCycle {
    pub r0: Rational64,
    pub p1: Rational64,
}

impl SurfaceGeometry {
    /// Validates `q >= 0` and the Nagata-Segre bound `e >= -q`
    /// (which forces `e >= 0` on the projective line).
    pub fn new(q: i64, e: i64) -> Result<Self> {
        if q < 0 {
            return Err(Error::InvalidGeometry { q, e, reason: "genus must be nonnegative" });
        }
        if e < -q {
            return Err(Error::InvalidGeometry { q, e, reason: "invariant must satisfy e >= -q" });
        }
        Ok(Self { q, e })
    }

    /// The Hirzebruch surface `Sigma_e`.
    pub fn hirzebruch(e: i64) -> Result<Self> {
        Self::new(0, e)
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    pub fn is_rational(&self) -> bool {
        self.q == 0
    }

    pub fn intersect(&self, x: DivisorClass, y: DivisorClass) -> i64 {
        -self.e * x.a * y.a + x.a * y.b + y.a * x.b
    }

    pub fn intersect_rational(&self, x: RationalClass, y: RationalClass) -> Rational64 {
        Rational64::from_integer(-self.e) * x.a * y.a + x.a * y.b + y.a * x.b
    }

    pub fn self_intersection(&self, x: DivisorClass) -> i64 {
        self.intersect(x, x)
    }

    pub fn canonical_class(&self) -> DivisorClass {
        DivisorClass::new(-2, 2 * self.q - 2 - self.e)
    }

    /// Ampleness on a ruled surface: `a > 0` and `b > a*e` when `e >= 0`,
    /// `a > 0` and `2b > a*e` when `e < 0`.
    pub fn is_ample(&self, d: DivisorClass) -> bool {
        if d.a <= 0 {
            return false;
        }
        if self.e >= 0 {
            d.b > d.a * self.e
        } else {
            2 * d.b > d.a * self.e
        }
    }

    /// Ample `R` with `R.K + R.f < 0`, i.e. `a(e + 2q - 1) < 2b`.
    pub fn is_good_polarization(&self, r: DivisorClass) -> bool {
        if !self.is_ample(r) {
            return false;
        }
        let k = self.canonical_class();
        let lhs = self.intersect(r, k) + self.intersect(r, DivisorClass::F);
        debug_assert_eq!(lhs < 0, r.a * (self.e + 2 * self.q - 1) < 2 * r.b);
        lhs < 0
    }

    /// Smallest `t >= 0` for which `H + t*f` is a good polarization.
    pub fn min_good_twist(&self, h: DivisorClass) -> Result<i64> {
        if !self.is_ample(h) {
            return Err(Error::NotAmple(h));
        }
        // Need a(e + 2q - 1) < 2(b + t); solve directly then confirm.
        let bound = h.a * (self.e + 2 * self.q - 1);
        let t = (bound - 2 * h.b).div_euclid(2) + 1;
        let t = t.max(0);
        debug_assert!(self.is_good_polarization(h + DivisorClass::F * t));
        debug_assert!(t == 0 || !self.is_good_polarization(h + DivisorClass::F * (t - 1)));
        Ok(t)
    }

    /// Product in the Chow ring truncated above degree two.
    pub fn cycle_mul(&self, x: &CycleClass, y: &CycleClass) -> CycleClass {
        CycleClass {
            r0: x.r0 * y.r0,
            d1: x.d1.scale(y.r0) + y.d1.scale(x.r0),
            p2: x.r0 * y.p2 + y.r0 * x.p2 + self.intersect_rational(x.d1, y.d1),
        }
    }

    /// Chern character `(r, c1, (c1^2 - 2 c2)/2)` of numerical bundle data.
    pub fn chern_character(&self, rank: i64, c1: DivisorClass, c2: i64) -> CycleClass {
        let c1_sq = Rational64::from_integer(self.self_intersection(c1));
        CycleClass {
            r0: Rational64::from_integer(rank),
            d1: c1.into(),
            p2: (c1_sq - Rational64::from_integer(2 * c2)) / 2,
        }
    }

    /// `td(T_S) = 1 - K/2 + chi(O_S) [pt]`.
    pub fn todd_surface(&self) -> CycleClass {
        let k: RationalClass = self.canonical_class().into();
        CycleClass {
            r0: Rational64::one(),
            d1: k.scale(Rational64::new(-1, 2)),
            p2: Rational64::from_integer(1 - self.q),
        }
    }

    pub fn todd_curve(&self) -> CurveCycle {
        todd_curve(self.q)
    }

    /// Proper pushforward along the ruling: the section class maps to the
    /// fundamental class of `C`, points map to points, the rest vanishes.
    pub fn pushforward_to_curve(&self, x: &CycleClass) -> CurveCycle {
        CurveCycle { r0: x.d1.a, p1: x.p2 }
    }
}

/// `td(T_C) = 1 + (1 - q)[pt]` for a curve of genus `q`.
pub fn todd_curve(q: i64) -> CurveCycle {
    CurveCycle { r0: Rational64::one(), p1: Rational64::from_integer(1 - q) }
}

impl DivisorClass {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    /// Section of minimal self-intersection.
    pub const H: Self = Self { a: 1, b: 0 };
    /// Fiber of the ruling.
    pub const F: Self = Self { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl Add for DivisorClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for DivisorClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for DivisorClass {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul<i64> for DivisorClass {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        Self::new(self.a * k, self.b * k)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.b < 0 {
            format!("{}*h-{}*f", self.a, self.b.unsigned_abs())
        } else {
            format!("{}*h+{}*f", self.a, self.b)
        };
        f.pad(&s)
    }
}

impl RationalClass {
    pub fn new(a: Rational64, b: Rational64) -> Self {
        Self { a, b }
    }

    pub fn scale(self, k: Rational64) -> Self {
        Self::new(self.a * k, self.b * k)
    }
}

impl From<DivisorClass> for RationalClass {
    fn from(d: DivisorClass) -> Self {
        Self::new(Rational64::from_integer(d.a), Rational64::from_integer(d.b))
    }
}

impl TryFrom<RationalClass> for DivisorClass {
    type Error = Error;

    fn try_from(x: RationalClass) -> Result<Self> {
        if x.a.is_integer() && x.b.is_integer() {
            Ok(DivisorClass::new(x.a.to_integer(), x.b.to_integer()))
        } else {
            Err(Error::NonIntegralClass)
        }
    }
}

impl Add for RationalClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl CycleClass {
    pub fn one() -> Self {
        Self { r0: Rational64::one(), ..Self::default() }
    }

    pub fn from_integers(r0: i64, d1: DivisorClass, p2: i64) -> Self {
        Self { r0: Rational64::from_integer(r0), d1: d1.into(), p2: Rational64::from_integer(p2) }
    }

    /// Pullback of a curve class along the ruling: a point pulls back to a fiber.
    pub fn pullback(y: CurveCycle) -> Self {
        Self { r0: y.r0, d1: RationalClass::new(Rational64::zero(), y.p1), p2: Rational64::zero() }
    }
}

impl Add for CycleClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { r0: self.r0 + rhs.r0, d1: self.d1 + rhs.d1, p2: self.p2 + rhs.p2 }
    }
}

impl CurveCycle {
    pub fn new(r0: Rational64, p1: Rational64) -> Self {
        Self { r0, p1 }
    }

    pub fn from_integers(r0: i64, p1: i64) -> Self {
        Self::new(Rational64::from_integer(r0), Rational64::from_integer(p1))
    }

    /// Multiplicative inverse, defined when the rank part is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        if self.r0.is_zero() {
            return None;
        }
        let inv = self.r0.recip();
        Some(Self::new(inv, -self.p1 * inv * inv))
    }
}

impl Mul for CurveCycle {
    type Output = Self;
    fn mul(self, y: Self) -> Self {
        Self::new(self.r0 * y.r0, self.r0 * y.p1 + self.p1 * y.r0)
    }
}

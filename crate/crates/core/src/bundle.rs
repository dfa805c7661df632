//! Numerical calculus of vector bundles on a ruled surface: twisting,
//! jumping-fiber counts, Grothendieck-Riemann-Roch along the ruling,
//! extension bookkeeping and slopes.
//!
//! The jumping-fiber count `z` of a bundle `G` whose general fiber type is
//! `(a, ..., a)` is computed three independent ways:
//!
//! * the closed form `z = c2(G) - a(r-1) c1(G).h - e a^2 r(r-1)/2`,
//! * `c2` of the normalized twist `E = G(-a h)`,
//! * `-chi(G(-(a+1) h))`: after the extra twist the general fiber type is
//!   `(-1, ..., -1)`, `u_*` vanishes and only the length-one `R^1` torsion
//!   at each jumping fiber is left.
//!
//! The degree `m = c1(u_* E)` is checked against a symbolic GRR evaluation.

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::geometry::{DivisorClass, SurfaceGeometry};

/// Rank and Chern classes of a vector bundle on `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BundleNumerics {
    g: SurfaceGeometry,
    r: i64,
    c1: DivisorClass,
    c2: i64,
}

/// Numerical data of `0 -> u*(H)(a h) -> G -> u*(M)((a-1) h) -> 0` with
/// `rank H = r - x` and `rank M = x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtensionData {
    pub g: SurfaceGeometry,
    pub r: i64,
    pub x: i64,
    pub a: i64,
    pub deg_h: i64,
    pub deg_m: i64,
}

/// Both sides of the GRR identity for the normalized twist `E = G(-a h)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GrrReport {
    pub rank_ok: bool,
    pub degree_ok: bool,
    /// Degree part of `u_*(ch(E) td(T_S)) td(T_C)^{-1}`.
    pub lhs_degree: Rational64,
    /// `m` from the closed form.
    pub rhs_degree: i64,
    pub rank: Rational64,
}

impl GrrReport {
    pub fn ok(&self) -> bool {
        self.rank_ok && self.degree_ok
    }
}

impl BundleNumerics {
    pub fn new(g: SurfaceGeometry, r: i64, c1: DivisorClass, c2: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::InvalidRank { rank: r, min: 1 });
        }
        Ok(Self { g, r, c1, c2 })
    }

    pub fn geometry(&self) -> SurfaceGeometry {
        self.g
    }

    pub fn rank(&self) -> i64 {
        self.r
    }

    pub fn c1(&self) -> DivisorClass {
        self.c1
    }

    pub fn c2(&self) -> i64 {
        self.c2
    }

    /// Degree of the restriction to a fiber, `c1 . f`.
    pub fn fiber_degree(&self) -> i64 {
        let d = self.g.intersect(self.c1, DivisorClass::F);
        debug_assert_eq!(d, self.c1.a);
        d
    }

    /// `B (x) O(L)`.
    pub fn twist(&self, l: DivisorClass) -> Self {
        let r = self.r;
        Self {
            g: self.g,
            r,
            c1: self.c1 + l * r,
            c2: self.c2 + (r - 1) * self.g.intersect(self.c1, l) + r * (r - 1) / 2 * self.g.intersect(l, l),
        }
    }

    fn check_jumping_regime(&self, a: i64) -> Result<()> {
        if self.g.q() != 0 {
            return Err(Error::PositiveGenus { q: self.g.q() });
        }
        let expected = self.r * a;
        if self.fiber_degree() != expected {
            return Err(Error::FiberDegreeMismatch { fiber_degree: self.fiber_degree(), expected });
        }
        Ok(())
    }

    /// Number of jumping fibers `z` of a bundle with general fiber type `(a, ..., a)`.
    pub fn jumping_count(&self, a: i64) -> Result<i64> {
        self.check_jumping_regime(a)?;
        let (r, e) = (self.r, self.g.e());
        let c1_h = self.g.intersect(self.c1, DivisorClass::H);
        let z = self.c2 - a * (r - 1) * c1_h - e * a * a * r * (r - 1) / 2;
        assert_eq!(z, self.twist(DivisorClass::H * -a).c2, "closed form disagrees with twist");
        Ok(z)
    }

    /// `m = deg u_*(G(-a h)) = -z + c1.h + r a e`.
    pub fn pushforward_degree(&self, a: i64) -> Result<i64> {
        let z = self.jumping_count(a)?;
        Ok(-z + self.g.intersect(self.c1, DivisorClass::H) + self.r * a * self.g.e())
    }

    /// Riemann-Roch for bundles: `chi = r chi(O_S) + c1.(c1 - K)/2 - c2`.
    pub fn euler_char(&self) -> i64 {
        let twice = self.g.intersect(self.c1, self.c1 - self.g.canonical_class());
        assert!(twice % 2 == 0, "c1.(c1-K) must be even, got {twice}");
        self.r * (1 - self.g.q()) + twice / 2 - self.c2
    }

    /// `z` recomputed as `-chi(G(-(a+1) h))`.
    pub fn jumping_count_chi_oracle(&self, a: i64) -> Result<i64> {
        self.check_jumping_regime(a)?;
        Ok(-self.twist(DivisorClass::H * -(a + 1)).euler_char())
    }

    /// Evaluates `u_*(ch(E) td(T_S)) td(T_C)^{-1}` symbolically and compares
    /// with the closed forms. In this regime `R^1 u_* E = 0`, so the degree
    /// part is `c1(u_* E)`.
    pub fn grr_verify(&self, a: i64) -> Result<GrrReport> {
        self.check_jumping_regime(a)?;
        let g = self.g;
        let e_bundle = self.twist(DivisorClass::H * -a);
        let ch = g.chern_character(e_bundle.r, e_bundle.c1, e_bundle.c2);
        let pushed = g.pushforward_to_curve(&g.cycle_mul(&ch, &g.todd_surface()));
        let td_inv = g.todd_curve().inverse().expect("Todd class is a unit");
        let direct_image = pushed * td_inv;

        let m = self.pushforward_degree(a)?;
        Ok(GrrReport {
            rank_ok: direct_image.r0 == Rational64::from_integer(self.r),
            degree_ok: direct_image.p1 == Rational64::from_integer(m),
            lhs_degree: direct_image.p1,
            rhs_degree: m,
            rank: direct_image.r0,
        })
    }

    /// Mumford-Takemoto slope `c1.R / r`.
    pub fn slope(&self, polarization: DivisorClass) -> Rational64 {
        Rational64::new(self.g.intersect(self.c1, polarization), self.r)
    }
}

/// Whether `sub` has slope at least that of `whole`, which rules out
/// `R`-stability of `whole` if `sub` is a subsheaf.
pub fn destabilizes(sub: &BundleNumerics, whole: &BundleNumerics, polarization: DivisorClass) -> Result<bool> {
    if sub.g != whole.g {
        return Err(Error::GeometryMismatch);
    }
    if sub.r >= whole.r {
        return Err(Error::SubRank { sub: sub.r, whole: whole.r });
    }
    Ok(sub.slope(polarization) >= whole.slope(polarization))
}

/// `(c1, c2)` of `u*(V)(k h)` for a rank `rho` bundle `V` of degree `deg` on the base.
fn twisted_pullback(g: &SurfaceGeometry, rho: i64, k: i64, deg: i64) -> (DivisorClass, i64) {
    let c1 = DivisorClass::new(rho * k, deg);
    let c2 = rho * (rho - 1) / 2 * k * k * (-g.e()) + (rho - 1) * k * deg;
    (c1, c2)
}

impl ExtensionData {
    pub fn validate(&self) -> Result<()> {
        if self.x <= 0 || self.x >= self.r {
            return Err(Error::ExtensionOutOfRange { x: self.x, r: self.r });
        }
        Ok(())
    }

    /// Chern classes of the middle term `G`, by the Whitney formula.
    pub fn chern(&self) -> Result<BundleNumerics> {
        self.validate()?;
        let g = &self.g;
        let (c1_h, c2_h) = twisted_pullback(g, self.r - self.x, self.a, self.deg_h);
        let (c1_m, c2_m) = twisted_pullback(g, self.x, self.a - 1, self.deg_m);
        BundleNumerics::new(self.g, self.r, c1_h + c1_m, c2_h + c2_m + g.intersect(c1_h, c1_m))
    }

    /// Recovers `(deg H, deg M)` from the Chern classes of `G` given `(a, x)`.
    pub fn from_chern(bundle: &BundleNumerics, a: i64, x: i64) -> Result<Self> {
        let r = bundle.rank();
        if x <= 0 || x >= r {
            return Err(Error::ExtensionOutOfRange { x, r });
        }
        let expected = r * a - x;
        if bundle.c1().a != expected {
            return Err(Error::ExtensionShapeMismatch { found: bundle.c1().a, expected });
        }
        let g = bundle.geometry();

        // c2 is affine in (deg H, deg M); read the coefficients off the forward map.
        let probe = |deg_h, deg_m| ExtensionData { g, r, x, a, deg_h, deg_m }.chern().map(|b| b.c2());
        let base = probe(0, 0)?;
        let coef_h = probe(1, 0)? - base;
        let coef_m = probe(0, 1)? - base;

        // deg H + deg M = c1.b
        // coef_h deg H + coef_m deg M = c2 - base
        let sum = bundle.c1().b;
        let rhs = bundle.c2() - base;
        let det = coef_m - coef_h;
        if det == 0 {
            return Err(Error::NonIntegralSolution);
        }
        let deg_h = Rational64::new(coef_m * sum - rhs, det);
        if !deg_h.is_integer() {
            return Err(Error::NonIntegralSolution);
        }
        let deg_h = deg_h.to_integer();
        let data = ExtensionData { g, r, x, a, deg_h, deg_m: sum - deg_h };
        assert_eq!(data.chern()?, *bundle, "extension round trip");
        Ok(data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hz(e: i64) -> SurfaceGeometry {
        SurfaceGeometry::hirzebruch(e).unwrap()
    }

    fn bundle(e: i64, r: i64, c1: (i64, i64), c2: i64) -> BundleNumerics {
        BundleNumerics::new(hz(e), r, DivisorClass::new(c1.0, c1.1), c2).unwrap()
    }

    #[test]
    fn fiber_degrees() {
        assert_eq!(bundle(0, 2, (2, 1), 0).fiber_degree(), 2);
        assert_eq!(bundle(3, 2, (0, 5), 0).fiber_degree(), 0);
        assert_eq!(bundle(1, 2, (-3, 0), 0).fiber_degree(), -3);
        assert!(BundleNumerics::new(hz(0), 0, DivisorClass::ZERO, 0).is_err());
    }

    #[test]
    fn twists() {
        let b = bundle(1, 2, (2, 0), 3);
        assert_eq!(b.twist(DivisorClass::ZERO), b);
        assert_eq!(b.twist(-DivisorClass::H), bundle(1, 2, (0, 0), 4));
        assert_eq!(bundle(0, 2, (2, 1), 2).twist(-DivisorClass::H), bundle(0, 2, (0, 1), 1));
    }

    #[test]
    fn jumping_counts() {
        assert_eq!(bundle(1, 2, (2, 0), 3).jumping_count(1), Ok(4));
        assert_eq!(bundle(0, 2, (2, 1), 2).jumping_count(1), Ok(1));
        for e in 0..3 {
            assert_eq!(bundle(e, 3, (0, 4), 7).jumping_count(0), Ok(7));
        }
        assert_eq!(
            bundle(0, 2, (1, 0), 0).jumping_count(1),
            Err(Error::FiberDegreeMismatch { fiber_degree: 1, expected: 2 })
        );
        let elliptic = BundleNumerics::new(SurfaceGeometry::new(1, 0).unwrap(), 2, DivisorClass::ZERO, 1).unwrap();
        assert_eq!(elliptic.jumping_count(0), Err(Error::PositiveGenus { q: 1 }));
    }

    #[test]
    fn pushforward_degrees() {
        assert_eq!(bundle(1, 2, (2, 0), 3).pushforward_degree(1), Ok(-4));
        assert_eq!(bundle(0, 2, (2, 1), 2).pushforward_degree(1), Ok(0));
        assert_eq!(bundle(2, 2, (0, 0), 0).pushforward_degree(0), Ok(0));
    }

    #[test]
    fn bundle_euler_characteristics() {
        for (q, e) in [(0, 0), (1, 0), (3, -2)] {
            let g = SurfaceGeometry::new(q, e).unwrap();
            assert_eq!(BundleNumerics::new(g, 1, DivisorClass::ZERO, 0).unwrap().euler_char(), 1 - q);
        }
        assert_eq!(bundle(0, 2, (-2, 1), 0).euler_char(), -1);
        assert_eq!(bundle(1, 2, (0, 0), 4).euler_char(), -2);
    }

    #[test]
    fn grr_examples() {
        let report = bundle(1, 2, (2, 0), 3).grr_verify(1).unwrap();
        assert!(report.ok());
        assert_eq!((report.lhs_degree, report.rhs_degree), (Rational64::from_integer(-4), -4));
        let report = bundle(0, 2, (0, 0), 5).grr_verify(0).unwrap();
        assert_eq!((report.lhs_degree, report.rhs_degree), (Rational64::from_integer(-5), -5));
        let report = bundle(0, 2, (2, 1), 2).grr_verify(1).unwrap();
        assert_eq!((report.lhs_degree, report.rhs_degree), (Rational64::from_integer(0), 0));
        assert!(bundle(0, 2, (1, 1), 2).grr_verify(1).is_err());
    }

    #[test]
    fn chi_oracle() {
        assert_eq!(bundle(1, 2, (2, 0), 3).jumping_count_chi_oracle(1), Ok(4));
        assert_eq!(bundle(0, 2, (2, 1), 2).jumping_count_chi_oracle(1), Ok(1));
        assert_eq!(bundle(0, 2, (0, 0), 5).jumping_count_chi_oracle(0), Ok(5));
    }

    #[test]
    fn extension_chern_examples() {
        for e in 0..4 {
            let x = ExtensionData { g: hz(e), r: 2, x: 1, a: 0, deg_h: 0, deg_m: 0 };
            assert_eq!(x.chern(), Ok(bundle(e, 2, (-1, 0), 0)));
        }
        let x = ExtensionData { g: hz(1), r: 2, x: 1, a: 1, deg_h: 1, deg_m: 0 };
        assert_eq!(x.chern(), Ok(bundle(1, 2, (1, 1), 0)));
        let x = ExtensionData { g: hz(0), r: 3, x: 1, a: 1, deg_h: 0, deg_m: 0 };
        assert_eq!(x.chern(), Ok(bundle(0, 3, (2, 0), 0)));
        for bad in [0, 2, 5] {
            let x = ExtensionData { g: hz(0), r: 2, x: bad, a: 0, deg_h: 0, deg_m: 0 };
            assert_eq!(x.chern(), Err(Error::ExtensionOutOfRange { x: bad, r: 2 }));
        }
    }

    #[test]
    fn extension_inversion_examples() {
        let x = ExtensionData::from_chern(&bundle(2, 2, (-1, 0), 0), 0, 1).unwrap();
        assert_eq!((x.deg_h, x.deg_m), (0, 0));
        let x = ExtensionData::from_chern(&bundle(1, 2, (1, 1), 0), 1, 1).unwrap();
        assert_eq!((x.deg_h, x.deg_m), (1, 0));
        // deg H + deg M = 0 and c2 = 1 forces H of degree -1
        let x = ExtensionData::from_chern(&bundle(0, 2, (1, 0), 1), 1, 1).unwrap();
        assert_eq!((x.deg_h, x.deg_m), (-1, 1));

        assert_eq!(
            ExtensionData::from_chern(&bundle(0, 2, (2, 0), 1), 1, 1),
            Err(Error::ExtensionShapeMismatch { found: 2, expected: 1 })
        );
        assert_eq!(
            ExtensionData::from_chern(&bundle(0, 2, (1, 0), 1), 1, 2),
            Err(Error::ExtensionOutOfRange { x: 2, r: 2 })
        );
    }

    #[test]
    fn slopes() {
        let r = DivisorClass::new(1, 1);
        assert_eq!(
            bundle(2, 1, (1, 3), 0).slope(r),
            Rational64::from_integer(hz(2).intersect(DivisorClass::new(1, 3), r))
        );
        assert_eq!(bundle(0, 2, (0, 2), 0).slope(r), Rational64::from_integer(1));
        assert_eq!(bundle(3, 2, (2, 0), 0).slope(DivisorClass::F), Rational64::from_integer(1));
        assert_eq!(bundle(0, 2, (1, 2), 0).slope(r), Rational64::new(3, 2));
    }

    #[test]
    fn destabilizing_subobjects() {
        let g = hz(0);
        let sub = BundleNumerics::new(g, 1, DivisorClass::new(1, 1), 0).unwrap();
        let whole = BundleNumerics::new(g, 2, DivisorClass::new(2, 2), 0).unwrap();
        for r in [DivisorClass::new(1, 1), DivisorClass::new(2, 5)] {
            assert_eq!(destabilizes(&sub, &whole, r), Ok(true));
        }
        let sub = BundleNumerics::new(g, 1, DivisorClass::new(1, 0), 0).unwrap();
        let whole = BundleNumerics::new(g, 2, DivisorClass::new(1, 3), 0).unwrap();
        assert_eq!(destabilizes(&sub, &whole, DivisorClass::new(1, 1)), Ok(false));
        assert_eq!(destabilizes(&sub, &whole, DivisorClass::new(1, 2)), Ok(false));
        assert_eq!(destabilizes(&whole, &whole, DivisorClass::new(1, 1)), Err(Error::SubRank { sub: 2, whole: 2 }));
        let other = BundleNumerics::new(hz(1), 2, DivisorClass::new(1, 3), 0).unwrap();
        assert_eq!(destabilizes(&sub, &other, DivisorClass::new(1, 1)), Err(Error::GeometryMismatch));
    }
}

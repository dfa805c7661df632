//! Line-bundle cohomology on Hirzebruch surfaces and the endomorphism
//! counts of split bundles built from it.
//!
//! On `Sigma_e` the ruling pushes `O(a h + b f)` with `a >= 0` forward to
//! `O(b) + O(b - e) + ... + O(b - a e)` on `P^1` with no higher direct image,
//! so `h^0` and `h^1` are sums of line-bundle counts on `P^1` and `h^2 = 0`.
//! Classes with `a = -1` have no cohomology at all and classes with
//! `a <= -2` are handled by Serre duality, whose dual always has `a >= 0`.
//!
//! Positive genus only gets Euler characteristics.

use std::ops::Add;

use crate::error::{Error, Result};
use crate::geometry::{DivisorClass, SurfaceGeometry};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CohomologyTable {
    pub h0: i64,
    pub h1: i64,
    pub h2: i64,
}

impl CohomologyTable {
    pub const fn new(h0: i64, h1: i64, h2: i64) -> Self {
        Self { h0, h1, h2 }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.h0 - self.h1 + self.h2
    }

    /// `h^i <-> h^{2-i}`.
    pub fn reversed(&self) -> Self {
        Self::new(self.h2, self.h1, self.h0)
    }
}

impl Add for CohomologyTable {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.h0 + rhs.h0, self.h1 + rhs.h1, self.h2 + rhs.h2)
    }
}

impl std::iter::Sum for CohomologyTable {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::default(), Add::add)
    }
}

/// `O(D_1) + ... + O(D_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitBundle {
    summands: Vec<DivisorClass>,
}

impl SplitBundle {
    pub fn new(summands: Vec<DivisorClass>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::EmptySplitBundle);
        }
        Ok(Self { summands })
    }

    pub fn summands(&self) -> &[DivisorClass] {
        &self.summands
    }

    pub fn rank(&self) -> usize {
        self.summands.len()
    }

    pub fn c1(&self) -> DivisorClass {
        self.summands.iter().fold(DivisorClass::ZERO, |acc, &d| acc + d)
    }

    /// Classes `D_j - D_i` of the line bundles `Hom(O(D_i), O(D_j))`, over all ordered pairs.
    pub fn hom_classes(&self) -> impl Iterator<Item = DivisorClass> + '_ {
        self.summands.iter().flat_map(move |&di| self.summands.iter().map(move |&dj| dj - di))
    }
}

/// Conormal bundle `I/I^2 = O(t h + s f)` of the surface in the ambient threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConormalData {
    pub t: i64,
    pub s: i64,
}

impl ConormalData {
    /// Checks the standing ampleness assumption: `t > 0` and `s > e t` on
    /// `Sigma_e`, `t > 0` and `s > 2q - 2 + |e|` in positive genus.
    pub fn new(g: &SurfaceGeometry, t: i64, s: i64) -> Result<Self> {
        if t <= 0 {
            return Err(Error::InvalidConormal { t, s, reason: "t must be positive".into() });
        }
        if g.q() == 0 {
            if s <= g.e() * t {
                return Err(Error::InvalidConormal { t, s, reason: format!("need s > e*t = {}", g.e() * t) });
            }
        } else {
            let bound = 2 * g.q() - 2 + g.e().abs();
            if s <= bound {
                return Err(Error::InvalidConormal { t, s, reason: format!("need s > 2q - 2 + |e| = {bound}") });
            }
        }
        Ok(Self { t, s })
    }

    /// Class of `I^n / I^{n+1} = O(n t h + n s f)`.
    pub fn power(&self, n: i64) -> DivisorClass {
        DivisorClass::new(n * self.t, n * self.s)
    }
}

fn require_rational(g: &SurfaceGeometry) -> Result<()> {
    if g.q() != 0 {
        return Err(Error::PositiveGenus { q: g.q() });
    }
    Ok(())
}

/// Cohomology of `O(a h + b f)` computed through the ruling, valid for `a >= 0`.
fn pushforward_cohomology(e: i64, d: DivisorClass) -> CohomologyTable {
    assert!(d.a >= 0, "direct count needs a nonnegative h-coefficient");
    let (mut h0, mut h1) = (0, 0);
    for k in 0..=d.a {
        let deg = d.b - k * e;
        h0 += (deg + 1).max(0);
        h1 += (-deg - 1).max(0);
    }
    CohomologyTable::new(h0, h1, 0)
}

/// `(h^0, h^1, h^2)` of a line bundle on a Hirzebruch surface.
pub fn h_line(g: &SurfaceGeometry, d: DivisorClass) -> Result<CohomologyTable> {
    require_rational(g)?;
    Ok(match d.a {
        a if a >= 0 => pushforward_cohomology(g.e(), d),
        -1 => CohomologyTable::default(),
        _ => {
            let dual = serre_dual(g, d);
            assert!(dual.a >= 0, "Serre dual of a <= -2 has a >= 0");
            pushforward_cohomology(g.e(), dual).reversed()
        }
    })
}

/// Riemann-Roch: `chi(O(D)) = chi(O_S) + D.(D - K)/2`, any genus.
pub fn euler_char(g: &SurfaceGeometry, d: DivisorClass) -> i64 {
    let twice = g.intersect(d, d - g.canonical_class());
    assert!(twice % 2 == 0, "D.(D-K) must be even, got {twice} for {d}");
    (1 - g.q()) + twice / 2
}

pub fn serre_dual(g: &SurfaceGeometry, d: DivisorClass) -> DivisorClass {
    g.canonical_class() - d
}

/// Whether `h^1` and `h^2` of every conormal power `I^n/I^{n+1}`, `1 <= n <= n_max`, vanish.
pub fn conormal_vanishing(g: &SurfaceGeometry, c: &ConormalData, n_max: i64) -> Result<bool> {
    require_rational(g)?;
    let c = ConormalData::new(g, c.t, c.s)?;
    for n in 1..=n_max {
        let table = h_line(g, c.power(n))?;
        if table.h1 != 0 || table.h2 != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cohomology of `End(E)(twist)` for a split `E`, summed over all Hom-lines.
pub fn h_split_end(g: &SurfaceGeometry, bundle: &SplitBundle, twist: DivisorClass) -> Result<CohomologyTable> {
    require_rational(g)?;
    bundle.hom_classes().map(|d| h_line(g, d + twist)).sum()
}

/// `h^1(End E)`, the dimension of the local moduli space of `E`.
pub fn moduli_dimension_split(g: &SurfaceGeometry, bundle: &SplitBundle) -> Result<i64> {
    Ok(h_split_end(g, bundle, DivisorClass::ZERO)?.h1)
}

/// Result of [`stabilization_index`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Stabilization {
    /// Smallest `x >= 1` with `h^1(End(E)(y t h + y s f)) = 0` for all `y >= x`.
    pub index: i64,
    /// First `y` from which every Hom-line provably stays without `h^1`.
    pub certified_from: i64,
}

/// Whether `O(D)` has `h^1 = 0` by the direct count, in a form that
/// survives adding an ample `(t, s)` with `s > e t`.
fn h1_free_and_stable(e: i64, d: DivisorClass) -> bool {
    d.a >= -1 && d.b >= e * d.a - 1
}

/// The integer `x` after which `h^1` of the twisted endomorphism bundle
/// vanishes for good.
pub fn stabilization_index(
    g: &SurfaceGeometry,
    bundle: &SplitBundle,
    c: &ConormalData,
    y_max: i64,
) -> Result<Stabilization> {
    require_rational(g)?;
    let c = ConormalData::new(g, c.t, c.s)?;
    let e = g.e();
    let homs: Vec<DivisorClass> = bundle.hom_classes().collect();

    // Both conditions only improve under y -> y + 1 because t > 0 and s - e t > 0.
    let certified_from = (1..=y_max)
        .find(|&y| homs.iter().all(|&d| h1_free_and_stable(e, d + c.power(y))))
        .ok_or(Error::NoStabilization { y_max })?;

    let mut index = certified_from;
    while index > 1 && h_split_end(g, bundle, c.power(index - 1))?.h1 == 0 {
        index -= 1;
    }
    Ok(Stabilization { index, certified_from })
}

/// `sum_{m < n} h^0(End(E) (x) I^m/I^{m+1})`: global endomorphisms of the
/// extension of `E` to the `n`-th infinitesimal neighborhood, computed in the
/// split model where every extension step splits.
pub fn endomorphism_growth(g: &SurfaceGeometry, bundle: &SplitBundle, c: &ConormalData, n: i64) -> Result<i64> {
    require_rational(g)?;
    if n < 1 {
        return Err(Error::OutOfRange { what: "n", value: n, min: 1 });
    }
    let c = ConormalData::new(g, c.t, c.s)?;
    (0..n).map(|m| h_split_end(g, bundle, c.power(m)).map(|t| t.h0)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hz(e: i64) -> SurfaceGeometry {
        SurfaceGeometry::hirzebruch(e).unwrap()
    }

    fn d(a: i64, b: i64) -> DivisorClass {
        DivisorClass::new(a, b)
    }

    fn split(parts: &[(i64, i64)]) -> SplitBundle {
        SplitBundle::new(parts.iter().map(|&(a, b)| d(a, b)).collect()).unwrap()
    }

    #[test]
    fn line_cohomology_examples() {
        assert_eq!(h_line(&hz(0), d(1, 1)), Ok(CohomologyTable::new(4, 0, 0)));
        assert_eq!(h_line(&hz(1), d(1, 1)), Ok(CohomologyTable::new(3, 0, 0)));
        assert_eq!(h_line(&hz(2), d(-2, -4)), Ok(CohomologyTable::new(0, 0, 1)));
        for e in 0..4 {
            for b in -5..5 {
                assert_eq!(h_line(&hz(e), d(-1, b)), Ok(CohomologyTable::default()));
            }
            assert_eq!(h_line(&hz(e), DivisorClass::ZERO), Ok(CohomologyTable::new(1, 0, 0)));
        }
    }

    #[test]
    fn line_cohomology_rejects_positive_genus() {
        let g = SurfaceGeometry::new(1, 0).unwrap();
        assert_eq!(h_line(&g, d(1, 1)), Err(Error::PositiveGenus { q: 1 }));
    }

    #[test]
    fn euler_characteristics() {
        for (q, e) in [(0, 0), (0, 3), (1, -1), (2, 5)] {
            let g = SurfaceGeometry::new(q, e).unwrap();
            assert_eq!(euler_char(&g, DivisorClass::ZERO), 1 - q);
        }
        assert_eq!(euler_char(&hz(1), d(1, 1)), 3);
        assert_eq!(euler_char(&hz(2), d(-2, -4)), 1);
    }

    #[test]
    fn serre_duals() {
        let g = hz(3);
        assert_eq!(serre_dual(&g, g.canonical_class()), DivisorClass::ZERO);
        assert_eq!(serre_dual(&hz(0), d(1, 1)), d(-3, -3));
        assert_eq!(serre_dual(&SurfaceGeometry::new(1, 0).unwrap(), DivisorClass::ZERO), d(-2, 0));
    }

    #[test]
    fn conormal_examples() {
        assert_eq!(conormal_vanishing(&hz(1), &ConormalData { t: 1, s: 2 }, 6), Ok(true));
        // s > e t holds at e = 0 for any positive s
        assert_eq!(conormal_vanishing(&hz(0), &ConormalData { t: 2, s: 1 }, 1), Ok(true));
        assert!(matches!(
            conormal_vanishing(&hz(1), &ConormalData { t: 2, s: 1 }, 1),
            Err(Error::InvalidConormal { .. })
        ));
        assert!(matches!(
            conormal_vanishing(&hz(0), &ConormalData { t: 0, s: 1 }, 1),
            Err(Error::InvalidConormal { .. })
        ));
        assert_eq!(conormal_vanishing(&hz(3), &ConormalData { t: 1, s: 4 }, 8), Ok(true));
    }

    #[test]
    fn conormal_validation_positive_genus() {
        let g = SurfaceGeometry::new(2, -1).unwrap();
        assert!(ConormalData::new(&g, 1, 3).is_err());
        assert!(ConormalData::new(&g, 1, 4).is_ok());
        assert!(ConormalData::new(&hz(2), 1, 2).is_err());
        assert!(ConormalData::new(&hz(2), 1, 3).is_ok());
    }

    #[test]
    fn split_endomorphisms() {
        for e in 0..4 {
            assert_eq!(
                h_split_end(&hz(e), &split(&[(0, 0), (0, 0)]), DivisorClass::ZERO),
                Ok(CohomologyTable::new(4, 0, 0))
            );
            assert_eq!(h_split_end(&hz(e), &split(&[(0, 0)]), DivisorClass::ZERO), Ok(CohomologyTable::new(1, 0, 0)));
        }
        assert_eq!(
            h_split_end(&hz(2), &split(&[(0, 0), (1, 0)]), DivisorClass::ZERO),
            Ok(CohomologyTable::new(3, 1, 0))
        );
        assert_eq!(SplitBundle::new(vec![]), Err(Error::EmptySplitBundle));
    }

    #[test]
    fn moduli_dimensions() {
        assert_eq!(moduli_dimension_split(&hz(2), &split(&[(0, 0), (1, 0)])), Ok(1));
        assert_eq!(moduli_dimension_split(&hz(3), &split(&[(0, 0), (0, 0)])), Ok(0));
        // h^1(O(2h)) = 1 and h^1(O(-2h)) = 2 on Sigma_1
        assert_eq!(moduli_dimension_split(&hz(1), &split(&[(0, 0), (2, 0)])), Ok(3));
    }

    #[test]
    fn stabilization_examples() {
        let c = ConormalData { t: 1, s: 2 };
        let s = stabilization_index(&hz(1), &split(&[(0, 0), (0, 0)]), &c, 10).unwrap();
        assert_eq!(s.index, 1);
        let s = stabilization_index(&hz(1), &split(&[(0, 0), (2, 0)]), &c, 10).unwrap();
        assert_eq!(s.index, 1);
        let s = stabilization_index(&hz(1), &split(&[(0, 0), (0, 5)]), &c, 10).unwrap();
        assert_eq!(s.index, 4);
        assert!(s.certified_from >= s.index);
        // certificate not yet reached
        assert_eq!(
            stabilization_index(&hz(1), &split(&[(0, 0), (0, 5)]), &c, 3),
            Err(Error::NoStabilization { y_max: 3 })
        );
    }

    #[test]
    fn stabilization_matches_direct_scan() {
        let c = ConormalData { t: 1, s: 2 };
        let g = hz(1);
        let bundle = split(&[(0, 0), (0, 5)]);
        let h1: Vec<i64> = (1..=6).map(|y| h_split_end(&g, &bundle, c.power(y)).unwrap().h1).collect();
        assert_eq!(h1, vec![5, 3, 1, 0, 0, 0]);
    }

    #[test]
    fn growth_examples() {
        let c = ConormalData { t: 1, s: 1 };
        assert_eq!(endomorphism_growth(&hz(0), &split(&[(0, 0)]), &c, 1), Ok(1));
        assert_eq!(endomorphism_growth(&hz(0), &split(&[(0, 0)]), &c, 2), Ok(5));
        assert_eq!(endomorphism_growth(&hz(0), &split(&[(0, 0), (0, 0)]), &c, 2), Ok(20));
        assert!(endomorphism_growth(&hz(0), &split(&[(0, 0)]), &c, 0).is_err());
    }
}

//! Property grids behind `ruled verify`.
//!
//! Each suite walks its grid in a fixed order and stops at the first
//! failing point, which becomes the counterexample.

use std::fmt;
use std::str::FromStr;

use crate::bundle::{BundleNumerics, ExtensionData};
use crate::cohomology::{self, ConormalData, SplitBundle};
use crate::geometry::{DivisorClass, SurfaceGeometry};
use crate::splitting::{self, SplittingType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Serre,
    Euler,
    Conormal,
    TheoremC,
    Dominance,
    Rigid,
    Lifting,
    Extension,
    Growth,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Serre,
        Suite::Euler,
        Suite::Conormal,
        Suite::TheoremC,
        Suite::Dominance,
        Suite::Rigid,
        Suite::Lifting,
        Suite::Extension,
        Suite::Growth,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Serre => "serre",
            Suite::Euler => "euler",
            Suite::Conormal => "conormal",
            Suite::TheoremC => "theoremC",
            Suite::Dominance => "dominance",
            Suite::Rigid => "rigid",
            Suite::Lifting => "lifting",
            Suite::Extension => "extension",
            Suite::Growth => "growth",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown suite {0:?}; expected one of serre, euler, conormal, theoremC, dominance, rigid, lifting, extension, growth, all")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        Self::EACH
            .iter()
            .chain(std::iter::once(&Suite::All))
            .find(|suite| suite.name() == s)
            .copied()
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Overrides for the default grids. `None` keeps the documented default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GridBounds {
    /// Largest invariant `e`.
    pub e_max: Option<i64>,
    /// Largest rank.
    pub r_max: Option<i64>,
    /// Bound on divisor coefficients.
    pub coeff: Option<i64>,
    /// Depth (conormal powers, lifting levels, growth steps).
    pub n_max: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Grid {
    checked: u64,
}

type Step = Result<(), String>;

impl Grid {
    fn new() -> Self {
        Self { checked: 0 }
    }

    fn check(&mut self, ok: bool, point: impl FnOnce() -> String) -> Step {
        self.checked += 1;
        if ok {
            Ok(())
        } else {
            Err(point())
        }
    }
}

fn lib<T>(r: crate::Result<T>, point: impl FnOnce() -> String) -> Result<T, String> {
    r.map_err(|e| format!("{}: {e}", point()))
}

fn hz(e: i64) -> SurfaceGeometry {
    SurfaceGeometry::hirzebruch(e).expect("grid only uses e >= 0")
}

/// Runs one suite, or every suite in order for [`Suite::All`].
pub fn run(suite: Suite, bounds: &GridBounds) -> Vec<SuiteOutcome> {
    match suite {
        Suite::All => Suite::EACH.iter().map(|&s| run_one(s, bounds)).collect(),
        s => vec![run_one(s, bounds)],
    }
}

fn run_one(suite: Suite, bounds: &GridBounds) -> SuiteOutcome {
    let mut grid = Grid::new();
    let result = match suite {
        Suite::Serre => serre(&mut grid, bounds),
        Suite::Euler => euler(&mut grid, bounds),
        Suite::Conormal => conormal(&mut grid, bounds),
        Suite::TheoremC => jumping_fibers(&mut grid, bounds),
        Suite::Dominance => dominance(&mut grid, bounds),
        Suite::Rigid => rigid(&mut grid, bounds),
        Suite::Lifting => lifting(&mut grid, bounds),
        Suite::Extension => extension(&mut grid, bounds),
        Suite::Growth => growth(&mut grid, bounds),
        Suite::All => unreachable!("expanded by run"),
    };
    SuiteOutcome { suite, checked: grid.checked, counterexample: result.err() }
}

fn line_grid(bounds: &GridBounds) -> impl Iterator<Item = (i64, DivisorClass)> {
    let e_max = bounds.e_max.unwrap_or(4);
    let c = bounds.coeff.unwrap_or(8);
    (0..=e_max).flat_map(move |e| (-c..=c).flat_map(move |a| (-c..=c).map(move |b| (e, DivisorClass::new(a, b)))))
}

fn serre(grid: &mut Grid, bounds: &GridBounds) -> Step {
    for (e, d) in line_grid(bounds) {
        let g = hz(e);
        let point = || format!("e={e} D={d}");
        let here = lib(cohomology::h_line(&g, d), point)?;
        let dual = lib(cohomology::h_line(&g, cohomology::serre_dual(&g, d)), point)?;
        grid.check(here == dual.reversed(), || format!("e={e} D={d}: h(D)={here:?} but h(K-D)={dual:?}"))?;
    }
    Ok(())
}

fn euler(grid: &mut Grid, bounds: &GridBounds) -> Step {
    for (e, d) in line_grid(bounds) {
        let g = hz(e);
        let table = lib(cohomology::h_line(&g, d), || format!("e={e} D={d}"))?;
        let chi = cohomology::euler_char(&g, d);
        grid.check(table.euler_characteristic() == chi, || {
            format!("e={e} D={d}: h0-h1+h2={} but chi={chi}", table.euler_characteristic())
        })?;
    }
    // rank-one bundles agree with line bundles in every genus
    let c = bounds.coeff.unwrap_or(8);
    for q in 0..=3 {
        for e in -q..=bounds.e_max.unwrap_or(4) {
            let g = SurfaceGeometry::new(q, e).expect("e >= -q");
            for a in -c..=c {
                for b in -c..=c {
                    let d = DivisorClass::new(a, b);
                    let line = BundleNumerics::new(g, 1, d, 0).expect("rank one");
                    grid.check(line.euler_char() == cohomology::euler_char(&g, d), || {
                        format!("q={q} e={e} D={d}: bundle chi disagrees with line chi")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn conormal(grid: &mut Grid, bounds: &GridBounds) -> Step {
    let n_max = bounds.n_max.unwrap_or(6);
    for e in 0..=bounds.e_max.unwrap_or(3) {
        let g = hz(e);
        for t in 1..=3 {
            for s in (e * t + 1)..=(e * t + 4) {
                let c = ConormalData { t, s };
                let ok = lib(cohomology::conormal_vanishing(&g, &c, n_max), || format!("e={e} t={t} s={s}"))?;
                grid.check(ok, || format!("e={e} t={t} s={s} n_max={n_max}: h1 or h2 of a conormal power is nonzero"))?;
            }
        }
    }
    Ok(())
}

fn jumping_fibers(grid: &mut Grid, bounds: &GridBounds) -> Step {
    let c = bounds.coeff.unwrap_or(5);
    for e in 0..=bounds.e_max.unwrap_or(3) {
        let g = hz(e);
        for r in 2..=bounds.r_max.unwrap_or(5) {
            for a in -2..=2 {
                for b in -c..=c {
                    for c2 in -c..=c {
                        let bundle = BundleNumerics::new(g, r, DivisorClass::new(r * a, b), c2).expect("rank >= 2");
                        let point = || format!("{bundle} a={a}");
                        let z = lib(bundle.jumping_count(a), point)?;
                        let twisted = bundle.twist(DivisorClass::H * -a).c2();
                        let chi = lib(bundle.jumping_count_chi_oracle(a), point)?;
                        grid.check(z == twisted && z == chi, || {
                            format!("{bundle} a={a}: closed form {z}, twist {twisted}, chi oracle {chi}")
                        })?;
                        let report = lib(bundle.grr_verify(a), point)?;
                        grid.check(report.ok(), || {
                            format!(
                                "{bundle} a={a}: GRR rank {} degree {} vs m = {}",
                                report.rank, report.lhs_degree, report.rhs_degree
                            )
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn type_families(r_max: i64, d_range: i64, spread: i64) -> impl Iterator<Item = (i64, i64, Vec<SplittingType>)> {
    (1..=r_max).flat_map(move |r| {
        (-d_range..=d_range).map(move |d| {
            let types = splitting::enumerate_types(r, d, spread).expect("valid enumeration bounds");
            (r, d, types)
        })
    })
}

fn dominance(grid: &mut Grid, bounds: &GridBounds) -> Step {
    let r_max = bounds.r_max.unwrap_or(4);
    let d_range = bounds.coeff.unwrap_or(4);
    for (_, _, types) in type_families(r_max, d_range, 4) {
        for x in &types {
            grid.check(splitting::specializes(x, x), || format!("{x} is not reflexive"))?;
            for y in &types {
                let dom = splitting::specializes(x, y);
                let semi = lib(splitting::semicontinuity_oracle(x, y), || format!("{x} vs {y}"))?;
                grid.check(dom == semi, || format!("general {x} special {y}: dominance {dom}, semicontinuity {semi}"))?;
                if x != y {
                    grid.check(!(dom && splitting::specializes(y, x)), || {
                        format!("{x} and {y} specialize to each other")
                    })?;
                }
                if dom {
                    for z in &types {
                        if splitting::specializes(y, z) {
                            grid.check(splitting::specializes(x, z), || {
                                format!("transitivity fails for {x} -> {y} -> {z}")
                            })?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks a chain produced by [`splitting::specialization_chain`].
pub fn check_chain(target: &SplittingType, chain: &[SplittingType]) -> Result<(), String> {
    let rigid = splitting::rigid_type(target.rank() as i64, target.degree()).map_err(|e| e.to_string())?;
    if chain.first() != Some(&rigid) {
        return Err(format!("chain for {target} does not start at {rigid}"));
    }
    if chain.last() != Some(target) {
        return Err(format!("chain for {target} does not end there"));
    }
    for w in chain.windows(2) {
        let (from, to) = (&w[0], &w[1]);
        let diff: Vec<i64> = to.parts().iter().zip(from.parts()).map(|(t, f)| t - f).collect();
        let up = diff.iter().position(|&v| v == 1);
        let down = diff.iter().position(|&v| v == -1);
        let others_zero = diff.iter().filter(|&&v| v != 0).count() == 2;
        let elementary = matches!((up, down), (Some(i), Some(j)) if i < j) && others_zero;
        if !elementary {
            return Err(format!("{from} -> {to} is not an elementary move"));
        }
        if !splitting::specializes(from, to) {
            return Err(format!("{from} -> {to} is not a specialization"));
        }
    }
    let gap: i64 = target.prefix_sums().iter().zip(rigid.prefix_sums()).map(|(t, r)| t - r).sum();
    if chain.len() as i64 - 1 > gap {
        return Err(format!("chain for {target} has {} steps, more than the total prefix gap {gap}", chain.len() - 1));
    }
    Ok(())
}

fn rigid(grid: &mut Grid, bounds: &GridBounds) -> Step {
    let r_max = bounds.r_max.unwrap_or(4);
    let d_range = bounds.coeff.unwrap_or(4);
    for r in 1..=r_max {
        for d in -d_range..=d_range {
            let rigid = lib(splitting::rigid_type(r, d), || format!("r={r} d={d}"))?;
            let types = lib(splitting::enumerate_types(r, d, r + 2), || format!("r={r} d={d}"))?;
            let unobstructed: Vec<&SplittingType> = types.iter().filter(|t| t.h1_end() == 0).collect();
            grid.check(unobstructed == vec![&rigid], || {
                format!("r={r} d={d}: types with h1(End)=0 are {unobstructed:?}, expected only {rigid}")
            })?;
            for t in &types {
                let by_spread = t.spread() <= 1;
                let by_h1 = t.h1_end() == 0;
                grid.check(t.is_rigid() == by_spread && by_spread == by_h1, || {
                    format!("{t}: is_rigid={}, spread<=1 {by_spread}, h1(End)=0 {by_h1}", t.is_rigid())
                })?;
                grid.check(splitting::specializes(&rigid, t), || format!("{rigid} does not specialize to {t}"))?;
                let chain = splitting::specialization_chain(t);
                let verdict = check_chain(t, &chain);
                grid.check(verdict.is_ok(), || verdict.unwrap_err())?;
            }
        }
    }
    for r in 2..=6 {
        for a in -3..=3 {
            let t = lib(splitting::jumping_type(r, a), || format!("r={r} a={a}"))?;
            grid.check(t.h1_end() == 1, || format!("jumping type {t} has h1(End)={}", t.h1_end()))?;
        }
    }
    Ok(())
}

fn lifting(grid: &mut Grid, bounds: &GridBounds) -> Step {
    let n_max = bounds.n_max.unwrap_or(10);
    let r_max = bounds.r_max.unwrap_or(6);
    for r in 1..=r_max {
        for d in -2 * r..=2 * r {
            for t in 1..=3 {
                let balanced = lib(splitting::rigid_type(r, d), || format!("r={r} d={d}"))?;
                let obs =
                    lib(splitting::formal_lift_obstructions(&balanced, t, n_max), || format!("{balanced} t={t}"))?;
                grid.check(obs.iter().all(|&o| o == 0), || format!("{balanced} t={t}: obstructions {obs:?}"))?;
                for ty in lib(splitting::enumerate_types(r, d, 3), || format!("r={r} d={d}"))? {
                    let obs = lib(splitting::formal_lift_obstructions(&ty, t, n_max), || format!("{ty} t={t}"))?;
                    let unobstructed = obs.iter().all(|&o| o == 0);
                    grid.check(unobstructed == ty.is_rigid(), || {
                        format!("{ty} t={t}: obstructions {obs:?} but rigid={}", ty.is_rigid())
                    })?;
                    grid.check(obs.windows(2).all(|w| w[0] <= w[1]), || {
                        format!("{ty} t={t}: obstructions {obs:?} decrease")
                    })?;
                }
            }
        }
    }
    let jump = SplittingType::new(vec![1, -1]).expect("sorted");
    let obs = lib(splitting::formal_lift_obstructions(&jump, 1, 1), || "(1,-1) t=1".into())?;
    grid.check(obs == vec![1], || format!("(1,-1) t=1: obstructions {obs:?}, expected [1]"))?;
    Ok(())
}

fn extension(grid: &mut Grid, bounds: &GridBounds) -> Step {
    let c = bounds.coeff.unwrap_or(5);
    for e in 0..=bounds.e_max.unwrap_or(3) {
        let g = hz(e);
        for r in 2..=bounds.r_max.unwrap_or(5) {
            for x in 1..r {
                for a in -2..=2 {
                    for deg_h in -c..=c {
                        for deg_m in -c..=c {
                            let data = ExtensionData { g, r, x, a, deg_h, deg_m };
                            let point = || format!("e={e} r={r} x={x} a={a} degH={deg_h} degM={deg_m}");
                            let bundle = lib(data.chern(), point)?;
                            let back = lib(ExtensionData::from_chern(&bundle, a, x), point)?;
                            grid.check(back == data, || format!("{}: recovered {back:?}", point()))?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Twenty split bundles with admissible conormal data: five shapes on each
/// of `Sigma_0 .. Sigma_3`.
pub fn growth_samples() -> Vec<(SurfaceGeometry, SplitBundle, ConormalData)> {
    let shapes: [&[(i64, i64)]; 5] =
        [&[(0, 0)], &[(0, 0), (0, 0)], &[(0, 0), (1, 0)], &[(0, 0), (0, 3)], &[(-1, 0), (0, 2), (0, 0)]];
    let mut out = Vec::new();
    for e in 0..4 {
        let g = hz(e);
        for (i, shape) in shapes.iter().enumerate() {
            let i = i as i64;
            let t = 1 + i % 2;
            let s = e * t + 1 + i % 3;
            let bundle = SplitBundle::new(shape.iter().map(|&(a, b)| DivisorClass::new(a, b)).collect())
                .expect("nonempty shape");
            let c = ConormalData::new(&g, t, s).expect("s > e t by construction");
            out.push((g, bundle, c));
        }
    }
    out
}

fn growth(grid: &mut Grid, bounds: &GridBounds) -> Step {
    let n_max = bounds.n_max.unwrap_or(10);
    for (g, bundle, c) in growth_samples() {
        let mut previous = None;
        for n in 1..=n_max {
            let point = || format!("e={} E={:?} t={} s={} n={n}", g.e(), bundle.summands(), c.t, c.s);
            let value = lib(cohomology::endomorphism_growth(&g, &bundle, &c, n), point)?;
            if let Some(prev) = previous {
                grid.check(value > prev, || format!("{}: {value} does not exceed {prev}", point()))?;
            }
            previous = Some(value);
        }
    }
    let g = hz(1);
    let bundle = SplitBundle::new(vec![DivisorClass::ZERO, DivisorClass::new(0, 5)]).expect("nonempty");
    let stab = lib(cohomology::stabilization_index(&g, &bundle, &ConormalData { t: 1, s: 2 }, 10), || {
        "O+O(5f) e=1 t=1 s=2".into()
    })?;
    grid.check(stab.index == 4, || format!("O+O(5f) on e=1, (t,s)=(1,2): stabilization index {}", stab.index))?;
    Ok(())
}

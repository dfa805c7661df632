//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every check is exact; the only tolerances are the
//! wall-clock limits below.

use std::time::{Duration, Instant};

use ruled_surfaces::cohomology::{self, SplitBundle};
use ruled_surfaces::splitting::{
    enumerate_types, formal_lift_obstructions, jumping_type, rigid_type, semicontinuity_oracle, specialization_chain,
    specializes,
};
use ruled_surfaces::verify::{check_chain, growth_samples};
use ruled_surfaces::{BundleNumerics, ConormalData, DivisorClass, ExtensionData, SplittingType, SurfaceGeometry};

type Check = std::result::Result<u64, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hz(e: i64) -> SurfaceGeometry {
    SurfaceGeometry::hirzebruch(e).unwrap()
}

fn d(a: i64, b: i64) -> DivisorClass {
    DivisorClass::new(a, b)
}

fn intersection_ground_truth() -> Check {
    let (h, f) = (DivisorClass::H, DivisorClass::F);
    let mut n = 0;
    for e in 0..=6 {
        let g = hz(e);
        ensure(g.intersect(h, h) == -e, || format!("h^2 on e={e}"))?;
        ensure(g.intersect(h, f) == 1, || format!("h.f on e={e}"))?;
        ensure(g.intersect(f, f) == 0, || format!("f^2 on e={e}"))?;
        n += 3;
    }
    for q in 0..=3 {
        for e in -q..=6 {
            let g = SurfaceGeometry::new(q, e).unwrap();
            ensure(g.canonical_class() == d(-2, 2 * q - 2 - e), || format!("K on q={q} e={e}"))?;
            ensure(g.self_intersection(g.canonical_class()) == 8 * (1 - q), || format!("K^2 on q={q} e={e}"))?;
            n += 2;
        }
    }
    Ok(n)
}

fn hirzebruch_grid() -> impl Iterator<Item = (SurfaceGeometry, DivisorClass)> {
    (0..=4).flat_map(|e| (-8..=8).flat_map(move |a| (-8..=8).map(move |b| (hz(e), d(a, b)))))
}

fn riemann_roch() -> Check {
    let mut n = 0;
    for (g, x) in hirzebruch_grid() {
        let t = cohomology::h_line(&g, x).map_err(|e| e.to_string())?;
        ensure(t.h0 - t.h1 + t.h2 == cohomology::euler_char(&g, x), || format!("e={} D={x}", g.e()))?;
        n += 1;
    }
    Ok(n)
}

fn serre_duality() -> Check {
    let mut n = 0;
    for (g, x) in hirzebruch_grid() {
        let t = cohomology::h_line(&g, x).map_err(|e| e.to_string())?;
        let dual = cohomology::h_line(&g, g.canonical_class() - x).map_err(|e| e.to_string())?;
        ensure(t == dual.reversed(), || format!("e={} D={x}: {t:?} vs {dual:?}", g.e()))?;
        n += 1;
    }
    Ok(n)
}

fn conormal_vanishing() -> Check {
    let mut n = 0;
    for e in 0..=3 {
        let g = hz(e);
        for t in 1..=3 {
            for s in e * t + 1..=e * t + 4 {
                let c = ConormalData::new(&g, t, s).map_err(|e| e.to_string())?;
                for k in 1..=6 {
                    let table = cohomology::h_line(&g, c.power(k)).map_err(|e| e.to_string())?;
                    ensure(table.h1 == 0 && table.h2 == 0, || format!("e={e} t={t} s={s} n={k}: {table:?}"))?;
                    n += 1;
                }
                ensure(cohomology::conormal_vanishing(&g, &c, 6) == Ok(true), || format!("e={e} t={t} s={s}"))?;
            }
        }
    }
    Ok(n)
}

fn jumping_fiber_oracles() -> Check {
    let mut n = 0;
    for e in 0..=3 {
        for r in 2..=5 {
            for a in -2..=2 {
                for b in -5..=5 {
                    for c2 in -5..=5 {
                        let bn = BundleNumerics::new(hz(e), r, d(r * a, b), c2).unwrap();
                        let at = || format!("e={e} r={r} a={a} b={b} c2={c2}");
                        let z = bn.jumping_count(a).map_err(|err| format!("{}: {err}", at()))?;
                        let z_twist = bn.twist(DivisorClass::H * -a).c2();
                        let z_chi = bn.jumping_count_chi_oracle(a).map_err(|err| err.to_string())?;
                        ensure(z == z_twist && z == z_chi, || format!("{}: z {z} {z_twist} {z_chi}", at()))?;
                        let m = bn.pushforward_degree(a).map_err(|err| err.to_string())?;
                        let grr = bn.grr_verify(a).map_err(|err| err.to_string())?;
                        ensure(grr.ok() && grr.rhs_degree == m, || format!("{}: {grr:?}", at()))?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(n)
}

fn spot_values() -> Check {
    for (e, c1, c2, z, m) in [(1, d(2, 0), 3, 4, -4), (0, d(2, 1), 2, 1, 0)] {
        let bn = BundleNumerics::new(hz(e), 2, c1, c2).unwrap();
        let got = (bn.jumping_count(1).unwrap(), bn.pushforward_degree(1).unwrap());
        ensure(got == (z, m), || format!("e={e} c1={c1} c2={c2}: got {got:?}, want ({z}, {m})"))?;
    }
    Ok(2)
}

fn dominance() -> Check {
    let mut n = 0;
    for r in 1..=4 {
        for deg in -4..=4 {
            let types = enumerate_types(r, deg, 4).unwrap();
            for x in &types {
                ensure(specializes(x, x), || format!("reflexivity {x}"))?;
                for y in &types {
                    let semi = semicontinuity_oracle(x, y).map_err(|e| e.to_string())?;
                    ensure(specializes(x, y) == semi, || format!("{x} -> {y}"))?;
                    ensure(!(specializes(x, y) && specializes(y, x)) || x == y, || format!("antisymmetry {x} {y}"))?;
                    n += 1;
                }
            }
            for x in &types {
                for y in types.iter().filter(|y| specializes(x, y)) {
                    for z in types.iter().filter(|z| specializes(y, z)) {
                        ensure(specializes(x, z), || format!("transitivity {x} {y} {z}"))?;
                    }
                }
            }
        }
    }
    Ok(n)
}

fn rigidity() -> Check {
    let mut n = 0;
    for r in 1..=4 {
        for deg in -4..=4 {
            let rigid = rigid_type(r, deg).unwrap();
            let types = enumerate_types(r, deg, r + 2).unwrap();
            let zero: Vec<&SplittingType> = types.iter().filter(|t| t.h1_end() == 0).collect();
            ensure(zero == [&rigid], || format!("r={r} d={deg}: h1_end = 0 for {zero:?}"))?;
            for t in &types {
                let chain = specialization_chain(t);
                check_chain(t, &chain).map_err(|err| format!("{t}: {err}"))?;
                n += 1;
            }
        }
    }
    for r in 2..=6 {
        for a in -3..=3 {
            let t = jumping_type(r, a).unwrap();
            ensure(t.h1_end() == 1, || format!("jumping type {t}"))?;
            n += 1;
        }
    }
    Ok(n)
}

fn formal_lifting() -> Check {
    let mut n = 0;
    for r in 1..=6 {
        for deg in -2 * r..=2 * r {
            let t_type = rigid_type(r, deg).unwrap();
            for t in 1..=3 {
                let obs = formal_lift_obstructions(&t_type, t, 10).map_err(|e| e.to_string())?;
                ensure(obs.len() == 10 && obs.iter().all(|&o| o == 0), || format!("{t_type} t={t}: {obs:?}"))?;
                n += 1;
            }
        }
    }
    let t = SplittingType::new(vec![1, -1]).unwrap();
    let obs = formal_lift_obstructions(&t, 1, 1).map_err(|e| e.to_string())?;
    ensure(obs == [1], || format!("(1,-1): {obs:?}"))?;
    Ok(n + 1)
}

fn extension_round_trip() -> Check {
    let mut n = 0;
    for e in 0..=3 {
        for r in 2..=5 {
            for x in 1..r {
                for a in -2..=2 {
                    for deg_h in -5..=5 {
                        for deg_m in -5..=5 {
                            let data = ExtensionData { g: hz(e), r, x, a, deg_h, deg_m };
                            let bn = data.chern().map_err(|err| err.to_string())?;
                            let back = ExtensionData::from_chern(&bn, a, x).map_err(|err| err.to_string())?;
                            ensure(back == data, || format!("{data:?} -> {back:?}"))?;
                            n += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(n)
}

fn endomorphism_growth() -> Check {
    let samples = growth_samples();
    ensure(samples.len() == 20, || format!("{} samples", samples.len()))?;
    let mut n = 0;
    for (g, bundle, c) in &samples {
        let values: Vec<i64> = (1..=10)
            .map(|k| cohomology::endomorphism_growth(g, bundle, c, k))
            .collect::<Result<_, _>>()
            .map_err(|err| err.to_string())?;
        ensure(values.windows(2).all(|w| w[0] < w[1]), || format!("e={} {bundle:?}: {values:?}", g.e()))?;
        n += 1;
    }
    let g = hz(1);
    let bundle = SplitBundle::new(vec![DivisorClass::ZERO, d(0, 5)]).unwrap();
    let c = ConormalData::new(&g, 1, 2).unwrap();
    let st = cohomology::stabilization_index(&g, &bundle, &c, 50).map_err(|err| err.to_string())?;
    ensure(st.index == 4, || format!("stabilization index {}", st.index))?;
    Ok(n + 1)
}

fn good_polarizations() -> Check {
    let mut n = 0;
    for e in 0..=4 {
        let g = hz(e);
        for a in -10..=10 {
            for b in -10..=10 {
                let x = d(a, b);
                if g.is_ample(x) {
                    ensure(g.is_good_polarization(x), || format!("e={e} {x}"))?;
                    n += 1;
                }
            }
        }
    }
    let g = SurfaceGeometry::new(2, 0).unwrap();
    let h = d(1, 1);
    let t = g.min_good_twist(h).map_err(|err| err.to_string())?;
    ensure(t == 1, || format!("min_good_twist = {t}"))?;
    ensure(g.is_good_polarization(h + DivisorClass::F * t), || "twisted class is not good".into())?;
    Ok(n + 1)
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("intersection ground truth", Duration::from_secs(1), intersection_ground_truth),
        ("Riemann-Roch consistency", Duration::from_secs(1), riemann_roch),
        ("Serre duality", Duration::from_secs(1), serre_duality),
        ("conormal vanishing", Duration::from_secs(1), conormal_vanishing),
        ("jumping-fiber triple oracle and GRR", Duration::from_secs(5), jumping_fiber_oracles),
        ("jumping-fiber spot values", Duration::from_secs(1), spot_values),
        ("dominance vs semicontinuity", Duration::from_secs(5), dominance),
        ("rigidity and specialization chains", Duration::from_secs(2), rigidity),
        ("formal lifting obstructions", Duration::from_secs(1), formal_lifting),
        ("extension round trip", Duration::from_secs(2), extension_round_trip),
        ("endomorphism growth and stabilization", Duration::from_secs(1), endomorphism_growth),
        ("good polarizations", Duration::from_secs(1), good_polarizations),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let line = match result {
            Ok(points) if elapsed <= *limit => format!("PASS {:>2} {name}: {points} points in {elapsed:.2?}", i + 1),
            Ok(points) => format!("FAIL {:>2} {name}: {points} points in {elapsed:.2?}, limit {limit:?}", i + 1),
            Err(msg) => format!("FAIL {:>2} {name}: {msg}", i + 1),
        };
        if line.starts_with("FAIL") {
            failures += 1;
        }
        println!("{line}");
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}

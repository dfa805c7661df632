//! Intersection pairing, canonical class and Todd classes on a few surfaces.

use ruled_surfaces::literal::{format_curve_cycle, format_cycle};
use ruled_surfaces::{DivisorClass, SurfaceGeometry};

fn main() -> ruled_surfaces::Result<()> {
    for (q, e) in [(0, 0), (0, 1), (0, 3), (1, -1), (2, 0)] {
        let g = SurfaceGeometry::new(q, e)?;
        let k = g.canonical_class();
        println!(
            "q={q} e={e:>2}  h^2={:>2}  K={k:<10} K^2={:>3}  td={}  td_C={}",
            g.self_intersection(DivisorClass::H),
            g.self_intersection(k),
            format_cycle(&g.todd_surface()),
            format_curve_cycle(&g.todd_curve()),
        );
    }

    let g = SurfaceGeometry::hirzebruch(2)?;
    let x: DivisorClass = "1*h+3*f".parse()?;
    let y: DivisorClass = "2*h-1*f".parse()?;
    println!("on Sigma_2: ({x}).({y}) = {}", g.intersect(x, y));
    Ok(())
}

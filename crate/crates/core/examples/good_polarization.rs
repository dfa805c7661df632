//! Ample classes versus good polarizations, and the smallest fiber twist
//! that makes a class good.

use ruled_surfaces::{DivisorClass, SurfaceGeometry};

fn main() -> ruled_surfaces::Result<()> {
    for (q, e, h) in [(0, 1, (1, 2)), (1, 0, (1, 1)), (2, 0, (1, 1)), (3, 1, (1, 2)), (2, -1, (2, 0))] {
        let g = SurfaceGeometry::new(q, e)?;
        let h = DivisorClass::new(h.0, h.1);
        let t = g.min_good_twist(h)?;
        println!(
            "q={q} e={e:>2}  H={h:<8} ample={:<5} good={:<5} twist={t} -> {}",
            g.is_ample(h),
            g.is_good_polarization(h),
            h + DivisorClass::F * t
        );
    }
    Ok(())
}

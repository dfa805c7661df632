//! Cohomology of line bundles on Sigma_e, with Serre duality alongside.

use ruled_surfaces::cohomology::{euler_char, h_line, serre_dual};
use ruled_surfaces::{DivisorClass, SurfaceGeometry};

fn main() -> ruled_surfaces::Result<()> {
    let g = SurfaceGeometry::hirzebruch(1)?;
    println!("{:<10} {:>4} {:>4} {:>4} {:>5}   K-D", "D", "h0", "h1", "h2", "chi");
    for (a, b) in [(0, 0), (1, 1), (2, 0), (0, -3), (-2, 0), (-3, -4), (3, 1)] {
        let d = DivisorClass::new(a, b);
        let t = h_line(&g, d)?;
        println!(
            "{:<10} {:>4} {:>4} {:>4} {:>5}   {}",
            d.to_string(),
            t.h0,
            t.h1,
            t.h2,
            euler_char(&g, d),
            serre_dual(&g, d)
        );
    }
    Ok(())
}

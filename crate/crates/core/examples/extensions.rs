//! Chern classes of an extension of twisted pullbacks, and recovering the
//! degrees of the pieces from them.

use ruled_surfaces::{ExtensionData, SurfaceGeometry};

fn main() -> ruled_surfaces::Result<()> {
    let g = SurfaceGeometry::hirzebruch(1)?;
    let data = ExtensionData { g, r: 3, x: 1, a: 1, deg_h: 2, deg_m: -1 };
    let middle = data.chern()?;
    println!("rank {} sub, rank {} quotient -> {middle}", data.r - data.x, data.x);

    let back = ExtensionData::from_chern(&middle, data.a, data.x)?;
    println!("recovered deg H = {}, deg M = {}", back.deg_h, back.deg_m);
    Ok(())
}

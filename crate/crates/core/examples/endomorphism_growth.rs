//! Endomorphisms of a split bundle on growing infinitesimal neighborhoods,
//! and where the twisted h^1 of End stops.

use ruled_surfaces::cohomology::{endomorphism_growth, moduli_dimension_split, stabilization_index};
use ruled_surfaces::{ConormalData, DivisorClass, SplitBundle, SurfaceGeometry};

fn main() -> ruled_surfaces::Result<()> {
    let g = SurfaceGeometry::hirzebruch(1)?;
    let bundle = SplitBundle::new(vec![DivisorClass::ZERO, DivisorClass::new(0, 5)])?;
    let conormal = ConormalData::new(&g, 1, 2)?;

    println!("h1(End) = {}", moduli_dimension_split(&g, &bundle)?);
    let growth: Vec<i64> = (1..=8).map(|n| endomorphism_growth(&g, &bundle, &conormal, n)).collect::<Result<_, _>>()?;
    println!("h0(End) on S(n), n = 1..8: {growth:?}");

    let st = stabilization_index(&g, &bundle, &conormal, 50)?;
    println!("h1 of the twisted End vanishes from y = {}", st.index);
    Ok(())
}

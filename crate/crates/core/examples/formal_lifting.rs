//! Obstructions to extending a splitting over the formal neighborhood of a
//! fiber. Rigid types lift; anything else is eventually obstructed.

use ruled_surfaces::splitting::formal_lift_obstructions;
use ruled_surfaces::SplittingType;

fn main() -> ruled_surfaces::Result<()> {
    for literal in ["(1,1,0)", "(1,-1)", "(2,0,0)", "(3,0,-3)"] {
        let t: SplittingType = literal.parse()?;
        for conormal in [1, 2] {
            let obs = formal_lift_obstructions(&t, conormal, 6)?;
            println!("{t:<9} t={conormal}  {obs:?}");
        }
    }
    Ok(())
}

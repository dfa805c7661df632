//! Splitting types of rank 3 and degree 0: dominance, rigidity and a
//! specialization chain.

use ruled_surfaces::splitting::{enumerate_types, rigid_type, specialization_chain, specializes};

fn main() -> ruled_surfaces::Result<()> {
    let rigid = rigid_type(3, 0)?;
    let types = enumerate_types(3, 0, 4)?;
    for t in &types {
        println!("{t:<10} h1(End)={:<3} below rigid: {}", t.h1_end(), specializes(&rigid, t));
    }

    let target = types.last().expect("nonempty").clone();
    let chain: Vec<String> = specialization_chain(&target).iter().map(ToString::to_string).collect();
    println!("chain to {target}: {}", chain.join(" -> "));
    println!("rigid type of rank 5, degree 7: {}", rigid_type(5, 7)?);
    Ok(())
}

//! Counting jumping fibers of a rank-2 bundle, three ways, plus GRR.

use ruled_surfaces::{BundleNumerics, DivisorClass};

fn main() -> ruled_surfaces::Result<()> {
    let bundle: BundleNumerics = "r=2; c1=2*h+0*f; c2=3; e=1; q=0".parse()?;
    let a = 1;
    let z = bundle.jumping_count(a)?;
    println!("{bundle}");
    println!("  z (closed form)       = {z}");
    println!("  z (c2 of the twist)   = {}", bundle.twist(DivisorClass::H * -a).c2());
    println!("  z (-chi of next twist) = {}", bundle.jumping_count_chi_oracle(a)?);
    println!("  deg of direct image   = {}", bundle.pushforward_degree(a)?);

    let grr = bundle.grr_verify(a)?;
    println!("  GRR: rank {} degree {} (ok: {})", grr.rank, grr.lhs_degree, grr.ok());
    Ok(())
}

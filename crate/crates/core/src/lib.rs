//! Exact numerical geometry of Hirzebruch and ruled surfaces.
//!
//! * [`geometry`]: intersection pairing, canonical class, ampleness, the
//!   truncated Chow ring and pushforward to the base curve.
//! * [`cohomology`]: line-bundle cohomology on `Sigma_e`, Riemann-Roch in any
//!   genus, endomorphism cohomology of split bundles.
//! * [`splitting`]: splitting types on `P^1`, dominance, rigidity and the
//!   lifting obstructions along a fiber's formal neighborhood.
//! * [`bundle`]: Chern-class calculus, jumping-fiber counts with independent
//!   oracles, extension bookkeeping, slopes.
//! * [`verify`]: the property grids run by `ruled verify`.
//! * [`cli`]: the `ruled` command-line front end.
//!
//! All arithmetic is exact (`i64` and `Rational64`).

pub mod bundle;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod geometry;
pub mod literal;
pub mod splitting;
pub mod verify;

pub use bundle::{destabilizes, BundleNumerics, ExtensionData, GrrReport};
pub use cohomology::{CohomologyTable, ConormalData, SplitBundle, Stabilization};
pub use error::{Error, Result};
pub use geometry::{CurveCycle, CycleClass, DivisorClass, RationalClass, SurfaceGeometry};
pub use literal::ParseError;
pub use splitting::SplittingType;

use thiserror::Error;

use crate::geometry::DivisorClass;
use crate::literal::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid surface geometry q={q}, e={e}: {reason}")]
    InvalidGeometry { q: i64, e: i64, reason: &'static str },

    #[error("exact cohomology is only available on Hirzebruch surfaces (q = 0), got q = {q}")]
    PositiveGenus { q: i64 },

    #[error("divisor class {0} is not ample")]
    NotAmple(DivisorClass),

    #[error("invalid conormal data t={t}, s={s}: {reason}")]
    InvalidConormal { t: i64, s: i64, reason: String },

    #[error("split bundle needs at least one summand")]
    EmptySplitBundle,

    #[error("splitting type must be a nonempty nonincreasing sequence, got {0:?}")]
    InvalidSplittingType(Vec<i64>),

    #[error("rank must be at least {min}, got {rank}")]
    InvalidRank { rank: i64, min: i64 },

    #[error("splitting types differ in rank or degree: {general} vs {special}")]
    RankDegreeMismatch { general: String, special: String },

    #[error("fiber degree {fiber_degree} does not equal r*a = {expected}")]
    FiberDegreeMismatch { fiber_degree: i64, expected: i64 },

    #[error("extension index x={x} must satisfy 0 < x < r = {r}")]
    ExtensionOutOfRange { x: i64, r: i64 },

    #[error("h-coefficient of c1 is {found}, but an extension with (a, x) needs r*a - x = {expected}")]
    ExtensionShapeMismatch { found: i64, expected: i64 },

    #[error("extension degrees are not integral for this bundle")]
    NonIntegralSolution,

    #[error("no stabilization within y_max = {y_max}")]
    NoStabilization { y_max: i64 },

    #[error("{what} must be at least {min}, got {value}")]
    OutOfRange { what: &'static str, value: i64, min: i64 },

    #[error("operands live on different surfaces")]
    GeometryMismatch,

    #[error("subobject rank {sub} must be smaller than rank {whole}")]
    SubRank { sub: i64, whole: i64 },

    #[error("rational class has non-integral coefficients")]
    NonIntegralClass,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

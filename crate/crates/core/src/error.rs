use thiserror::Error;

use crate::norms::{TConorm, TNorm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {0} is outside [0, 1]")]
    DegreeOutOfRange(String),
    #[error("{0:?} is not a plain decimal number")]
    InvalidDecimal(String),
    #[error("{value} has {digits} fractional digits, more than the configured precision of {precision}")]
    TooManyDigits { value: String, digits: u32, precision: u32 },
    #[error("precision {0} is not supported (at most 28 digits)")]
    InvalidPrecision(u32),

    #[error("{tnorm:?} is not paired with {tconorm:?}; only dual pairs are allowed")]
    MixedNormPair { tnorm: TNorm, tconorm: TConorm },
    #[error("unknown norm pair {0:?} (expected product, minmax or lukasiewicz)")]
    UnknownNormPair(String),
    #[error("norm pair {name:?} rejected: {detail}")]
    AxiomViolation { name: String, detail: String },

    #[error("identifiers must not be empty")]
    EmptyName,
    #[error("the universe must contain at least one element")]
    EmptyUniverse,
    #[error("element {0:?} appears more than once")]
    DuplicateElement(String),
    #[error("parameter {0:?} appears more than once")]
    DuplicateParameter(String),
    #[error("element {0:?} is not in the universe")]
    UnknownElement(String),
    #[error("no value given for element {0:?}")]
    MissingElement(String),
    #[error("parameter {0:?} is not defined")]
    UnknownParameter(String),
    #[error("membership {mu} plus non-membership {nu} exceeds 1")]
    InvalidIfs { mu: String, nu: String },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands are defined over different universes")]
    UniverseMismatch,

    #[error("relation has no entry for ({source_param}, {target_param})")]
    MissingRelationEntry { source_param: String, target_param: String },
    #[error("relation entry ({source_param}, {target_param}) given twice")]
    DuplicateRelationEntry { source_param: String, target_param: String },
    #[error("relation entry ({source_param}, {target_param}) escapes the parent intersection: {detail}")]
    Containment { source_param: String, target_param: String, detail: String },
    #[error("relations connect different soft sets or use different norms")]
    ParentMismatch,
    #[error("cannot compose: the first relation's target is not the second relation's source")]
    ChainMismatch,
}

//! Generalised intuitionistic fuzzy soft sets.
//!
//! A soft set maps each parameter to an intuitionistic fuzzy subset of a
//! universe (a membership and a non-membership per element). The generalised
//! form attaches a preference degree to each parameter. This crate provides
//!
//! * exact unit-interval arithmetic and pluggable t-norm/t-conorm pairs
//!   ([`Degree`], [`NormPair`], [`NormContext`]);
//! * the soft sets themselves with subset, union and intersection
//!   ([`Gifss`]);
//! * soft relations between two soft sets with union, intersection, inverse
//!   and composition ([`Gifsr`]);
//! * the comparison-table ranking procedure ([`decision`]);
//! * JSON dataset files and table rendering ([`io`], [`emit`]).
//!
//! ```
//! use gifss::{decision, io, Precision};
//!
//! let json = r#"{
//!   "universe": ["x", "y"],
//!   "parameters": [{"name": "p", "preference": "0.5"}],
//!   "values": {"p": {"x": {"mu": "0.9", "nu": "0.1"}, "y": {"mu": "0.2", "nu": "0.7"}}}
//! }"#;
//! let set = io::parse_gifss(json, &io::LoadOptions::default()).unwrap();
//! let report = decision::rank(&set, Precision::DEFAULT);
//! assert_eq!(report.ranking.top_group()[0].as_str(), "x");
//! ```

pub mod decision;
mod degree;
pub mod emit;
mod error;
mod gifss;
pub mod io;
mod norms;
mod relation;

pub use degree::{Degree, Precision, MAX_DIGITS};
pub use error::Error;
pub use gifss::{ElementId, Gifss, GifssEntry, IfSet, IfsValue, ParamId, Universe};
pub use norms::{CustomNorms, NormContext, NormPair, TConorm, TNorm};
pub use relation::{Gifsr, RelationCell};

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Exact construction and invariants of link diagrams, and synthesis of
//! links with prescribed determinant density.

pub mod adequacy;
pub mod densities;
pub mod diagram;
pub mod error;
pub mod format;
pub mod invariants;
pub mod par;
pub mod synthesis;
mod unionfind;

pub use diagram::{
    BraidWord, CanonicalForm, ClosureKind, Crossing, EdgeId, LinkDiagram, Port, Tangle,
    ValidationReport,
};
pub use error::{Error, Result};
pub use par::Execution;

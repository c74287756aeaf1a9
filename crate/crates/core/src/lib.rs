//! Even-cycle decompositions of signed graphs.

pub mod certificate;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod recipe;
pub mod subdivision;

pub use certificate::{validate_certificate, CycleDecomposition, Violation, ViolationKind};
pub use decompose::{almost_decompose, decompose, DecomposeStats};
pub use error::{Error, Result};
pub use graph::{Parity, SignatureClass, SignedMultigraph};
pub use recipe::{realize, validate_recipe, Recipe};

//! Exact verification engine for twisted partial actions of
//! finite-dimensional Hopf algebras.
//!
//! Everything is represented by structure constants over Q or F_p, and
//! every algebraic identity is checked basis element by basis element.

pub mod crossed;
pub mod error;
pub mod fixtures;
pub mod gauge;
pub mod globalization;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod morita;
pub mod partial;
pub mod report;
pub mod scalar;
pub mod separability;
pub mod tensor;

pub use error::{Error, Result};
pub use report::{CheckReport, Violation};
pub use scalar::{Field, Scalar};

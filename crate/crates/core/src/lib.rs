//! Growth of filtered and graded algebras and their modules.
//!
//! Dimension sequences are counted exactly from monomial presentations, then
//! fitted with Hilbert-Samuel polynomials, exact linear recurrences and
//! rational generating functions. The `axioms` module checks GK-exactness and
//! multiplicity additivity on explicit exact sequences.

pub mod analysis;
pub mod axioms;
pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod hilbert;
pub mod poincare;
pub mod presentations;
pub mod samuel;

pub use error::{Error, Result};

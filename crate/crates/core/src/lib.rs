//! Exact construction and verification of Hopf rings over ℤ: Laurent grading
//! rings, differential Hopf rings, bosonization, and the Pareigis rings whose
//! comodules are chain complexes.

pub mod chains;
pub mod cli;
pub mod diffhopf;
pub mod error;
pub mod grading;
pub mod laws;
pub mod linalg;
pub mod pareigis;
pub mod semidirect;

pub use error::{Error, Result};

//! Closed-form and Monte Carlo evaluation of the diagonal distribution of
//! the invariant measure on unitary-type compact symmetric spaces.
//!
//! The library has two halves that check each other:
//!
//! * closed-form evaluators for the c-function and for the per-component
//!   Fourier transform of the diagonal distribution of `U/K` under the
//!   Cartan embedding (`rootsys`, `symspace`, `closedform`);
//! * independent numerical oracles: Haar-measure Monte Carlo through
//!   concrete matrix factorizations (`matreal`, `haarmc`), certification
//!   of the Evens-Lu Poisson structure on the noncompact dual
//!   (`poissonel`), and cell-coordinate identities behind the factorized
//!   proof of the c-function formula (`bottsamelson`).
//!
//! Everything is deterministic given a seed; Monte Carlo streams are
//! counter-based so results do not depend on the number of worker threads.

pub mod bottsamelson;
pub mod closedform;
pub mod haarmc;
pub mod matreal;
pub mod poissonel;
pub mod rootsys;
pub mod symspace;

pub use closedform::FormulaValue;
pub use haarmc::McEstimate;
pub use matreal::ComplexMatrix;
pub use rootsys::{RootSystem, Series, Weight, WeylWord};
pub use symspace::{ComponentIndex, SymmetricSpaceSpec};

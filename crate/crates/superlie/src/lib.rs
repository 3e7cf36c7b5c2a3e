//! Exact-arithmetic workbench for Lie superalgebras of the matrix,
//! Poisson/Hamiltonian and contact families: invariant bilinear forms,
//! Manin triples with machine-checked axioms, the induced Lie bialgebra
//! cobrackets, quadratic Casimir elements and classical Yang-Baxter
//! residual checks.
//!
//! All computation runs over the Gaussian rationals, so every verdict is
//! exact; there are no tolerances anywhere. Band-limited realizations of
//! the infinite-dimensional families carry explicit escape bookkeeping and
//! only ever report window-conditional results.

pub mod contact;
pub mod casimir;
pub mod error;
pub mod exceptional;
pub mod loops;
pub mod schema;
pub mod manin;
pub mod report;
pub mod grassmann;
pub mod matrices;
pub mod lie;
pub mod linalg;
pub mod par;
pub mod scalar;
pub mod space;
pub mod structure;

pub use error::Error;
pub use scalar::Scalar;
pub use space::{Parity, SuperSpace, Vector};

//! Exact Schubert calculus for the flag manifold, classical and quantum:
//! divided differences, (double) Schubert polynomials and their quantum
//! deformations, the cohomology quotient rings with their residue pairings,
//! quantum Monk/Pieri multiplication, and correlation functions.
//!
//! All arithmetic is exact (arbitrary-precision rationals internally,
//! integrality checked at the boundaries). Values are immutable and every
//! operation is a pure function of its inputs; internal caches are
//! synchronized and semantically invisible.

pub mod error;
pub mod polyring;
pub mod symgroup;
pub mod divdiff;
pub mod qsym;
pub mod qring;
pub mod qschub;

pub use error::{Error, Result};
pub use polyring::{ExponentVec, Monomial, Poly, VarFamily, VarId};
pub use symgroup::{BEArrow, BEPath, Code, Permutation};

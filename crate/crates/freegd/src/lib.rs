//! A computer-algebra kernel for the free Novikov algebra and the free
//! special Gelfand-Dorfman algebra.
//!
//! Both algebras are realized inside free differential algebras: the
//! Novikov algebra inside the free commutative algebra with derivation
//! under `u o v = u * d(v)`, and the SGD algebra inside the free Poisson
//! algebra with derivation under the same product together with the
//! Poisson bracket. The weight-(-1) subspaces carry the structures; the
//! basis maps send canonically ordered monomials to magma terms whose
//! expansions are unitriangular, so arbitrary products reduce to basis
//! combinations by exact triangular elimination.

pub mod comder;
pub mod error;
pub mod identities;
pub mod lincomb;
pub mod lyndon;
pub mod novikov;
pub mod poisder;
pub mod sgd;
pub mod young;

pub use error::{Error, Result};
pub use lincomb::{lc_rank, rat, ratio, LinComb, Rat};

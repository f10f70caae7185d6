//! Compositions of graded coalgebras indexed by planar trees.
//!
//! The base algebras are on permutations, binary trees and combs. Any two
//! graded coalgebras compose to a coalgebra on trees-of-trees; when the base
//! of the composite maps to a Hopf operad, the composite inherits a product
//! with a unit and antipode on one side only. Everything is computed over
//! the integers, and the `verify` module checks the identities
//! exhaustively in low degrees.

pub mod basealg;
pub mod catalog;
pub mod combinat;
pub mod compose;
pub mod error;
pub mod instances;
pub mod linear;
pub mod operad;
pub mod series;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use linear::{LinearCombination, TensorWord};

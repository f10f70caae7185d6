//! Index sets: binary trees, ordered trees, combs, and the maps between them.

mod bileveled;
mod binary;
mod comb;
mod ordered;
pub mod tamari;

pub use bileveled::{BiLeveledTree, MarkedTree};
pub use binary::BinaryTree;
pub use comb::{kappa, Comb};
pub use ordered::{tau, OrderedForest, OrderedTree};
pub use tamari::{mobius, tamari_leq, TamariPoset};

/// An ordered sequence of trees, any of which may be empty.
pub type Forest<T> = Vec<T>;

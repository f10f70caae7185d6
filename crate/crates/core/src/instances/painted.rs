//! Painted trees as elements of the self-composite of binary trees.

use crate::compose::Composed;
use crate::error::Result;
use crate::trees::{BiLeveledTree, BinaryTree, MarkedTree};

pub type PaintedTree = Composed<BinaryTree, BinaryTree>;

pub fn to_marked(p: &PaintedTree) -> Result<MarkedTree> {
    MarkedTree::from_painted(&p.base, &p.tops)
}

pub fn from_marked(m: &MarkedTree) -> Result<PaintedTree> {
    let (base, tops) = m.to_painted()?;
    Ok(Composed::new(base, tops))
}

pub fn to_bileveled(p: &PaintedTree) -> Result<BiLeveledTree> {
    to_marked(p)?.painted_to_bileveled()
}

pub fn from_bileveled(b: &BiLeveledTree) -> Result<PaintedTree> {
    from_marked(&b.to_painted())
}

/// `q⁺`: every node painted.
pub fn fully_painted(q: &BinaryTree) -> PaintedTree {
    Composed::new(q.clone(), vec![BinaryTree::Leaf; q.degree() + 1])
}

/// `q` with nothing painted.
pub fn unpainted(q: &BinaryTree) -> PaintedTree {
    Composed::new(BinaryTree::Leaf, vec![q.clone()])
}

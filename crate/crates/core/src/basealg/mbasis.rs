//! The monomial basis of binary trees, obtained from the fundamental basis
//! by Möbius inversion on the Tamari order.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Result;
use crate::trees::{BinaryTree, TamariPoset};

use super::{CofreeCoalgebra, GradedCoalgebra, Lin, Tensor, WordBasis};

/// `M_t = Σ_{s ≥ t} μ(t, s) F_s`, in fundamental coordinates.
pub fn m_basis(t: &BinaryTree) -> Lin<BinaryTree> {
    let poset = TamariPoset::of_degree(t.degree());
    let i = poset.index_of(t).expect("tree of the poset degree");
    poset
        .mobius_row(i)
        .iter()
        .map(|&(s, mu)| (poset.trees()[s].clone(), BigInt::from(mu)))
        .collect()
}

/// Monomial coordinates to fundamental coordinates.
pub fn m_to_f(x: &Lin<BinaryTree>) -> Lin<BinaryTree> {
    x.extend_linearly(m_basis)
}

/// Fundamental coordinates to monomial ones: `F_t = Σ_{s ≥ t} M_s`.
pub fn f_to_m(x: &Lin<BinaryTree>) -> Lin<BinaryTree> {
    x.extend_linearly(|t| {
        let poset = TamariPoset::of_degree(t.degree());
        let i = poset.index_of(t).expect("tree of the poset degree");
        poset
            .up_set(i)
            .into_iter()
            .map(|s| (poset.trees()[s].clone(), BigInt::one()))
            .collect()
    })
}

/// Binary trees in the monomial basis. The coproduct only cuts at leaves
/// hanging directly off the right branch from the root, which makes it
/// deconcatenation of the progressive factors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct YSymM;

impl GradedCoalgebra for YSymM {
    type Basis = BinaryTree;

    fn name(&self) -> String {
        "ysym-m".into()
    }

    fn degree(&self, b: &BinaryTree) -> usize {
        b.degree()
    }

    fn one(&self) -> BinaryTree {
        BinaryTree::Leaf
    }

    fn basis(&self, n: usize) -> Vec<BinaryTree> {
        BinaryTree::enumerate(n)
    }

    fn coproduct_basis(&self, t: &BinaryTree) -> Tensor<BinaryTree> {
        let factors = t.right_branch_factors();
        (0..=factors.len())
            .map(|i| {
                (
                    (
                        BinaryTree::join_right_branch(&factors[..i]),
                        BinaryTree::join_right_branch(&factors[i..]),
                    ),
                    BigInt::one(),
                )
            })
            .collect()
    }

    fn parse_basis(&self, s: &str) -> Result<BinaryTree> {
        s.parse()
    }

    fn render_basis(&self, b: &BinaryTree) -> String {
        format!("M{b}")
    }
}

impl CofreeCoalgebra for YSymM {
    fn primitive_basis(&self, n: usize) -> Vec<Lin<BinaryTree>> {
        BinaryTree::enumerate(n)
            .into_iter()
            .filter(BinaryTree::is_progressive)
            .map(Lin::basis)
            .collect()
    }
}

impl WordBasis for YSymM {
    fn factor(&self, b: &BinaryTree) -> Vec<BinaryTree> {
        b.right_branch_factors()
    }

    fn join(&self, letters: &[BinaryTree]) -> BinaryTree {
        BinaryTree::join_right_branch(letters)
    }
}

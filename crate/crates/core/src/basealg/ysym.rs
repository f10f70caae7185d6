use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::multisets;
use crate::error::Result;
use crate::trees::{BinaryTree, TamariPoset};

use super::{m_basis, CofreeCoalgebra, GradedAlgebra, GradedCoalgebra, Lin, Side, Tensor};

/// Planar binary trees in the fundamental basis.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct YSym;

impl GradedCoalgebra for YSym {
    type Basis = BinaryTree;

    fn name(&self) -> String {
        "ysym".into()
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
        (0..=t.degree())
            .map(|i| (t.split_at(i).expect("leaf in range"), BigInt::one()))
            .collect()
    }

    fn parse_basis(&self, s: &str) -> Result<BinaryTree> {
        s.parse()
    }
}

impl GradedAlgebra for YSym {
    fn product_basis(&self, s: &BinaryTree, t: &BinaryTree) -> Lin<BinaryTree> {
        multisets(t.degree(), s.degree())
            .iter()
            .map(|cuts| {
                let forest = s.split_multi(cuts).expect("leaves in range");
                (BinaryTree::graft(&forest, t).expect("arity"), BigInt::one())
            })
            .collect()
    }

    fn unit_side(&self) -> Side {
        Side::Both
    }
}

impl CofreeCoalgebra for YSym {
    /// `M_t` for the progressive trees `t`.
    fn primitive_basis(&self, n: usize) -> Vec<Lin<BinaryTree>> {
        TamariPoset::of_degree(n)
            .trees()
            .iter()
            .filter(|t| t.is_progressive())
            .map(m_basis)
            .collect()
    }
}

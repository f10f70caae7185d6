use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::multisets;
use crate::error::Result;
use crate::trees::OrderedTree;

use super::{GradedAlgebra, GradedCoalgebra, Lin, Side, Tensor};

/// Permutations as ordered trees. The coproduct splits, the product splits
/// the left factor and grafts the pieces onto the right one.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SSym;

impl GradedCoalgebra for SSym {
    type Basis = OrderedTree;

    fn name(&self) -> String {
        "ssym".into()
    }

    fn degree(&self, b: &OrderedTree) -> usize {
        b.degree()
    }

    fn one(&self) -> OrderedTree {
        OrderedTree::empty()
    }

    fn basis(&self, n: usize) -> Vec<OrderedTree> {
        OrderedTree::enumerate(n)
    }

    fn coproduct_basis(&self, w: &OrderedTree) -> Tensor<OrderedTree> {
        (0..=w.degree())
            .map(|i| (w.split_at(i).expect("leaf in range"), BigInt::one()))
            .collect()
    }

    fn parse_basis(&self, s: &str) -> Result<OrderedTree> {
        s.parse()
    }
}

impl GradedAlgebra for SSym {
    fn product_basis(&self, w: &OrderedTree, v: &OrderedTree) -> Lin<OrderedTree> {
        multisets(v.degree(), w.degree())
            .iter()
            .map(|cuts| {
                let forest = w.split_forest(cuts).expect("leaves in range");
                (OrderedTree::graft(&forest, v).expect("arity"), BigInt::one())
            })
            .collect()
    }

    fn unit_side(&self) -> Side {
        Side::Both
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> OrderedTree {
        s.parse().unwrap()
    }

    #[test]
    fn coproduct_of_small_elements() {
        let d = SSym.coproduct_basis(&OrderedTree::empty());
        assert_eq!(d.len(), 1);
        assert!(SSym.is_primitive(&Lin::basis(w("1"))));
        assert_eq!(SSym.coproduct_basis(&w("2 5 1 4 3")).len(), 6);
    }

    #[test]
    fn products() {
        let p = SSym.product_basis(&w("1"), &w("1"));
        assert_eq!(p.to_string(), "F1 2 + F2 1");
        let p = SSym.product_basis(&w("1 2"), &w("1"));
        assert_eq!(p.len(), 3);
        assert_eq!(p.coefficient_sum(), BigInt::from(3));
        assert_eq!(
            SSym.product_basis(&w("2 1"), &OrderedTree::empty()),
            Lin::basis(w("2 1"))
        );
        assert_eq!(
            SSym.product_basis(&OrderedTree::empty(), &w("2 1")),
            Lin::basis(w("2 1"))
        );
    }
}

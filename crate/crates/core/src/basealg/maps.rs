use crate::trees::{kappa, tau, BinaryTree, Comb, OrderedTree};

use super::{CSym, GradedCoalgebra, Lin, SSym, YSym};

/// A map sending basis elements to basis elements.
pub trait BasisMap<A: GradedCoalgebra, B: GradedCoalgebra>: Send + Sync {
    fn name(&self) -> &'static str;

    fn map_basis(&self, b: &A::Basis) -> B::Basis;

    fn apply(&self, x: &Lin<A::Basis>) -> Lin<B::Basis> {
        x.map_basis(|b| self.map_basis(b))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Identity;

impl<A: GradedCoalgebra> BasisMap<A, A> for Identity {
    fn name(&self) -> &'static str {
        "id"
    }

    fn map_basis(&self, b: &A::Basis) -> A::Basis {
        b.clone()
    }
}

/// Ordered tree to its shape.
#[derive(Clone, Copy, Debug, Default)]
pub struct Tau;

impl BasisMap<SSym, YSym> for Tau {
    fn name(&self) -> &'static str {
        "tau"
    }

    fn map_basis(&self, b: &OrderedTree) -> BinaryTree {
        tau(b)
    }
}

/// Tree to the comb with as many nodes.
#[derive(Clone, Copy, Debug, Default)]
pub struct Kappa;

impl BasisMap<YSym, CSym> for Kappa {
    fn name(&self) -> &'static str {
        "kappa"
    }

    fn map_basis(&self, b: &BinaryTree) -> Comb {
        kappa(b)
    }
}

/// Ordered tree straight to its comb.
#[derive(Clone, Copy, Debug, Default)]
pub struct KappaTau;

impl BasisMap<SSym, CSym> for KappaTau {
    fn name(&self) -> &'static str {
        "kappa-tau"
    }

    fn map_basis(&self, b: &OrderedTree) -> Comb {
        Comb(b.degree())
    }
}

/// Comb to the binary tree with every node on the right branch. A
/// coalgebra map, though not an algebra map.
#[derive(Clone, Copy, Debug, Default)]
pub struct CombInclusion;

impl BasisMap<CSym, YSym> for CombInclusion {
    fn name(&self) -> &'static str {
        "incl"
    }

    fn map_basis(&self, b: &Comb) -> BinaryTree {
        b.to_tree()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basealg::{map_tensor, GradedAlgebra};

    fn is_coalgebra_map<A, B, M>(a: &A, b: &B, m: &M, max: usize) -> bool
    where
        A: GradedCoalgebra,
        B: GradedCoalgebra,
        M: BasisMap<A, B>,
    {
        (0..=max).flat_map(|n| a.basis(n)).all(|x| {
            let lhs = b.coproduct_basis(&m.map_basis(&x));
            let f = |y: &A::Basis| Lin::basis(m.map_basis(y));
            lhs == map_tensor(&a.coproduct_basis(&x), f, f)
        })
    }

    #[test]
    fn all_maps_are_coalgebra_maps() {
        assert!(is_coalgebra_map(&SSym, &YSym, &Tau, 4));
        assert!(is_coalgebra_map(&YSym, &CSym, &Kappa, 5));
        assert!(is_coalgebra_map(&SSym, &CSym, &KappaTau, 4));
        assert!(is_coalgebra_map(&CSym, &YSym, &CombInclusion, 6));
        assert!(is_coalgebra_map(&YSym, &YSym, &Identity, 4));
    }

    #[test]
    fn kappa_after_tau_is_the_direct_map() {
        for n in 0..6 {
            for w in OrderedTree::enumerate(n) {
                let tw: BinaryTree = Tau.map_basis(&w);
                let via: Comb = Kappa.map_basis(&tw);
                assert_eq!(via, KappaTau.map_basis(&w));
            }
        }
    }

    #[test]
    fn inclusion_is_not_multiplicative() {
        let c1 = Comb(1);
        let lhs = CombInclusion.apply(&CSym.product_basis(&c1, &c1));
        let t = CombInclusion.map_basis(&c1);
        assert_ne!(lhs, YSym.product_basis(&t, &t));
    }
}

//! Second implementations of the products, checked against the library.

mod common;

use num_bigint::BigInt;
use num_traits::One;

use treehopf::basealg::{GradedAlgebra, GradedCoalgebra, Lin};
use treehopf::instances::{painted, psym_fr};
use treehopf::trees::{BinaryTree, MarkedTree};

fn leaves(t: &MarkedTree) -> usize {
    match t {
        MarkedTree::Leaf => 1,
        MarkedTree::Node(_, l, r) => leaves(l) + leaves(r),
    }
}

fn node(m: bool, l: MarkedTree, r: MarkedTree) -> MarkedTree {
    MarkedTree::Node(m, Box::new(l), Box::new(r))
}

/// Cut along the path to leaf `i`, keeping each node's mark.
fn split(t: &MarkedTree, i: usize) -> (MarkedTree, MarkedTree) {
    match t {
        MarkedTree::Leaf => (MarkedTree::Leaf, MarkedTree::Leaf),
        MarkedTree::Node(m, l, r) => {
            let nl = leaves(l);
            if i < nl {
                let (a, b) = split(l, i);
                (a, node(*m, b, (**r).clone()))
            } else {
                let (a, b) = split(r, i - nl);
                (node(*m, (**l).clone(), a), b)
            }
        }
    }
}

fn split_at_cuts(t: &MarkedTree, cuts: &[usize]) -> Vec<MarkedTree> {
    let mut pieces = Vec::new();
    let mut rest = t.clone();
    let mut offset = 0;
    for &c in cuts {
        let (a, b) = split(&rest, c - offset);
        pieces.push(a);
        rest = b;
        offset = c;
    }
    pieces.push(rest);
    pieces
}

/// Replaces the leaves of `base`, left to right, by the forest.
fn graft(base: &MarkedTree, forest: &mut std::slice::Iter<'_, MarkedTree>) -> MarkedTree {
    match base {
        MarkedTree::Leaf => forest.next().expect("one tree per leaf").clone(),
        MarkedTree::Node(m, l, r) => {
            let l = graft(l, forest);
            let r = graft(r, forest);
            node(*m, l, r)
        }
    }
}

fn painted_shape(t: &BinaryTree) -> MarkedTree {
    match t {
        BinaryTree::Leaf => MarkedTree::Leaf,
        BinaryTree::Node(l, r) => node(true, painted_shape(l), painted_shape(r)),
    }
}

fn weakly_increasing(len: usize, max: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in weakly_increasing(len - 1, max) {
        let lo = rest.last().copied().unwrap_or(0);
        for c in lo..=max {
            let mut v = rest.clone();
            v.push(c);
            out.push(v);
        }
    }
    out
}

/// Split `p` into as many pieces as the shape of `q` has leaves and
/// graft them onto that shape, fully painted.
fn painted_product(p: &MarkedTree, q_shape: &BinaryTree) -> Lin<MarkedTree> {
    let base = painted_shape(q_shape);
    let mut out = Lin::zero();
    for cuts in weakly_increasing(q_shape.degree(), leaves(p) - 1) {
        let forest = split_at_cuts(p, &cuts);
        out.add_term(graft(&base, &mut forest.iter()), BigInt::one());
    }
    out
}

#[test]
fn painted_product_by_splitting_marked_trees() {
    let a = psym_fr();
    for n in 0..=4 {
        for i in 0..=n {
            for x in a.basis(i) {
                for y in a.basis(n - i) {
                    let expected = a.product_basis(&x, &y).map_basis(|e| painted::to_marked(e).unwrap());
                    let mx = painted::to_marked(&x).unwrap();
                    let shape = painted::to_marked(&y).unwrap().shape();
                    assert_eq!(painted_product(&mx, &shape), expected, "{x} * {y}");
                }
            }
        }
    }
}

#[test]
fn operad_product_matches_the_algebra_product() {
    common::operad_product_matches(4);
}

#[test]
fn simplex_faces_are_anti_isomorphic_to_composition_trees() {
    common::alpha_anti_isomorphism(5);
}

#[test]
fn shape_and_comb_maps_are_hopf_maps() {
    common::shape_maps_are_hopf_maps(4);
}

#[test]
fn diamond_of_composites_commutes() {
    common::diamond_commutes(3);
}

//! Graded dimensions: recursion, brute-force counts and closed forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use treehopf::basealg::{CSym, GradedCoalgebra, SSym, YSym};
use treehopf::combinat::{catalan, factorial};
use treehopf::compose::{brute_force_dims, dim_composite, Composite, IndexFamily};
use treehopf::instances::{CompositionTree, DeltaSym};
use treehopf::trees::MarkedTree;

fn ints(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn recursion(base: IndexFamily, top: IndexFamily, max: usize) -> Vec<BigInt> {
    let tops: Vec<BigInt> = (0..=max).map(|n| top.dimension(n)).collect();
    dim_composite(base, &tops, max).unwrap()
}

fn agrees_with_count<A: GradedCoalgebra>(a: &A, base: IndexFamily, top: IndexFamily, max: usize) -> Vec<BigInt> {
    let r = recursion(base, top, max);
    assert_eq!(r, brute_force_dims(a, max), "{}", a.name());
    r
}

#[test]
fn permutations_over_combs() {
    let d = agrees_with_count(
        &Composite::new(CSym, SSym),
        IndexFamily::Comb,
        IndexFamily::Permutation,
        5,
    );
    assert_eq!(d, ints(&[1, 2, 5, 15, 54, 235]));
}

#[test]
fn permutations_over_trees() {
    let d = agrees_with_count(
        &Composite::new(YSym, SSym),
        IndexFamily::Tree,
        IndexFamily::Permutation,
        5,
    );
    assert_eq!(d, ints(&[1, 2, 6, 22, 92, 428]));
}

#[test]
fn combs_over_permutations_sum_falling_factorials() {
    let d = agrees_with_count(
        &Composite::new(SSym, CSym),
        IndexFamily::Permutation,
        IndexFamily::Comb,
        6,
    );
    for (n, dn) in d.iter().enumerate() {
        let expected: BigInt = (0..=n).map(|k| factorial(n) / factorial(k)).sum();
        assert_eq!(*dn, expected);
    }
}

#[test]
fn combs_over_combs_are_powers_of_two() {
    let d = agrees_with_count(&Composite::new(CSym, CSym), IndexFamily::Comb, IndexFamily::Comb, 10);
    for (n, dn) in d.iter().enumerate() {
        assert_eq!(*dn, BigInt::one() << n);
        assert_eq!(CompositionTree::enumerate(n).len(), 1 << n);
    }
    assert_eq!(brute_force_dims(&DeltaSym, 10), d);
}

#[test]
fn trees_over_combs_are_catalan() {
    let d = agrees_with_count(&Composite::new(CSym, YSym), IndexFamily::Comb, IndexFamily::Tree, 10);
    for (n, dn) in d.iter().enumerate() {
        assert_eq!(*dn, catalan(n + 1));
    }
}

#[test]
fn painted_trees_count_multiplihedron_vertices() {
    let d = agrees_with_count(&Composite::new(YSym, YSym), IndexFamily::Tree, IndexFamily::Tree, 6);
    assert_eq!(d, ints(&[1, 2, 6, 21, 80, 322, 1348]));
    for (n, dn) in d.iter().enumerate().take(6) {
        assert_eq!(BigInt::from(MarkedTree::enumerate_painted(n).len()), *dn);
    }
}

#[test]
fn weighted_trees() {
    let d = agrees_with_count(&Composite::new(YSym, CSym), IndexFamily::Tree, IndexFamily::Comb, 6);
    assert_eq!(d, ints(&[1, 2, 5, 15, 51, 188, 731]));
}

#[test]
fn every_composite_recursion_matches_the_count() {
    use IndexFamily::*;
    let families = [Permutation, Tree, Comb];
    for base in families {
        for top in families {
            let max = if base == Permutation || top == Permutation {
                4
            } else {
                6
            };
            let r = recursion(base, top, max);
            assert!(r[0].is_one() && !r[1].is_zero());
            let count = match (base, top) {
                (Permutation, Permutation) => brute_force_dims(&Composite::new(SSym, SSym), max),
                (Permutation, Tree) => brute_force_dims(&Composite::new(SSym, YSym), max),
                (Permutation, Comb) => brute_force_dims(&Composite::new(SSym, CSym), max),
                (Tree, Permutation) => brute_force_dims(&Composite::new(YSym, SSym), max),
                (Tree, Tree) => brute_force_dims(&Composite::new(YSym, YSym), max),
                (Tree, Comb) => brute_force_dims(&Composite::new(YSym, CSym), max),
                (Comb, Permutation) => brute_force_dims(&Composite::new(CSym, SSym), max),
                (Comb, Tree) => brute_force_dims(&Composite::new(CSym, YSym), max),
                (Comb, Comb) => brute_force_dims(&Composite::new(CSym, CSym), max),
            };
            assert_eq!(r, count, "{top} over {base}");
        }
    }
}

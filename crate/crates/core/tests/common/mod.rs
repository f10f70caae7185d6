//! Checks shared by the test targets and the acceptance harness. Each one
//! panics with the offending element on failure.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;

use treehopf::basealg::{
    m_basis, BasisMap, CSym, CofreeCoalgebra, GradedAlgebra, GradedCoalgebra, Kappa, KappaTau, Lin, SSym, Tau,
    WordBasis, YSym, YSymM,
};
use treehopf::compose::{
    is_letter, map_compose, map_compose_basis, phi, phi_inverse, primitive_generators, ComposedOf, Composite,
};
use treehopf::instances::{alpha, ccsym_fr, DeltaSym, SimplexFace};
use treehopf::linear::TensorWord;
use treehopf::operad::operad_product;
use treehopf::series::Series;
use treehopf::trees::{kappa, tau, BinaryTree, Comb, OrderedTree};

pub fn operad_product_matches(max: usize) {
    for n in 0..=max {
        for i in 0..=n {
            for x in YSym.basis(i) {
                for y in YSym.basis(n - i) {
                    assert_eq!(operad_product(&YSym, &x, &y), YSym.product_basis(&x, &y), "{x} * {y}");
                }
            }
            for x in CSym.basis(i) {
                for y in CSym.basis(n - i) {
                    assert_eq!(operad_product(&CSym, &x, &y), CSym.product_basis(&x, &y), "{x} * {y}");
                }
            }
        }
    }
}

/// α is an anti-isomorphism of algebras onto the f_r composition trees
/// and an isomorphism of coalgebras.
pub fn alpha_anti_isomorphism(max: usize) {
    let cc = ccsym_fr();
    let to_cc = |x: &Lin<SimplexFace>| x.map_basis(|f| alpha(f).to_composed());
    for n in 0..=max {
        for i in 0..=n {
            for x in DeltaSym.basis(i) {
                for y in DeltaSym.basis(n - i) {
                    let left = to_cc(&DeltaSym.product_basis(&x, &y));
                    let right = cc.product_basis(&alpha(&y).to_composed(), &alpha(&x).to_composed());
                    assert_eq!(left, right, "{x} * {y}");
                }
            }
        }
        for x in DeltaSym.basis(n) {
            let mapped: Lin<_> = DeltaSym
                .coproduct_basis(&x)
                .map_basis(|(a, b)| (alpha(a).to_composed(), alpha(b).to_composed()));
            assert_eq!(mapped, cc.coproduct_basis(&alpha(&x).to_composed()), "{x}");
        }
    }
}

pub fn hopf_map<A: GradedAlgebra, B: GradedAlgebra>(a: &A, b: &B, f: &impl BasisMap<A, B>, max: usize) {
    for n in 0..=max {
        for x in a.basis(n) {
            let lhs: Lin<_> = a
                .coproduct_basis(&x)
                .map_basis(|(u, v)| (f.map_basis(u), f.map_basis(v)));
            assert_eq!(lhs, b.coproduct_basis(&f.map_basis(&x)), "{} on {x:?}", f.name());
        }
        for i in 0..=n {
            for x in a.basis(i) {
                for y in a.basis(n - i) {
                    let lhs = f.apply(&a.product_basis(&x, &y));
                    let rhs = b.product_basis(&f.map_basis(&x), &f.map_basis(&y));
                    assert_eq!(lhs, rhs, "{} on {x:?}, {y:?}", f.name());
                }
            }
        }
    }
}

pub fn shape_maps_are_hopf_maps(max: usize) {
    hopf_map(&SSym, &YSym, &Tau, max);
    hopf_map(&YSym, &CSym, &Kappa, max);
    hopf_map(&SSym, &CSym, &KappaTau, max);
}

/// Checks `(F⊗F)Δ = ΔF` for the map induced on composites.
fn coalgebra_arrow<D, C, D2, C2>(
    src: &Composite<D, C>,
    dst: &Composite<D2, C2>,
    psi: impl Fn(&D::Basis) -> D2::Basis + Copy,
    phi: impl Fn(&C::Basis) -> C2::Basis + Copy,
    max: usize,
) where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D2: GradedCoalgebra,
    C2: GradedCoalgebra,
{
    let f = |e: &ComposedOf<D, C>| map_compose_basis(src, dst, psi, phi, &Lin::basis(e.clone())).unwrap();
    for n in 0..=max {
        for e in src.basis(n) {
            let mut lhs = Lin::zero();
            for ((x, y), k) in src.coproduct_basis(&e).iter() {
                lhs.add_scaled(k, &treehopf::linear::tensor(&f(x), &f(y)));
            }
            assert_eq!(lhs, dst.coproduct(&f(&e)), "{}", src.render_basis(&e));
        }
    }
}

/// The twelve arrows between the nine composites are coalgebra maps, and
/// every path from the top of the diamond reaches the bottom the same way.
pub fn diamond_commutes(max: usize) {
    let ss = Composite::new(SSym, SSym);
    let ys = Composite::new(SSym, YSym);
    let sy = Composite::new(YSym, SSym);
    let yy = Composite::new(YSym, YSym);
    let cs = Composite::new(SSym, CSym);
    let sc = Composite::new(CSym, SSym);
    let cy = Composite::new(YSym, CSym);
    let yc = Composite::new(CSym, YSym);
    let cc = Composite::new(CSym, CSym);
    let id_s = |w: &OrderedTree| w.clone();
    let id_y = |t: &BinaryTree| t.clone();
    let id_c = |c: &Comb| *c;
    let kt = |w: &OrderedTree| kappa(&tau(w));

    coalgebra_arrow(&ss, &ys, id_s, tau, max);
    coalgebra_arrow(&ss, &sy, tau, id_s, max);
    coalgebra_arrow(&ys, &yy, tau, id_y, max);
    coalgebra_arrow(&sy, &yy, id_y, tau, max);
    coalgebra_arrow(&ys, &cs, id_s, kappa, max);
    coalgebra_arrow(&sy, &sc, kappa, id_s, max);
    coalgebra_arrow(&cs, &cy, tau, id_c, max);
    coalgebra_arrow(&yy, &cy, id_y, kappa, max);
    coalgebra_arrow(&yy, &yc, kappa, id_y, max);
    coalgebra_arrow(&sc, &yc, id_c, tau, max);
    coalgebra_arrow(&cy, &cc, kappa, id_c, max);
    coalgebra_arrow(&yc, &cc, id_c, kappa, max);

    for n in 0..=max {
        for e in ss.basis(n) {
            let x = Lin::basis(e.clone());
            let direct = map_compose_basis(&ss, &cc, kt, kt, &x).unwrap();
            let via_left = {
                let a = map_compose_basis(&ss, &ys, id_s, tau, &x).unwrap();
                let b = map_compose_basis(&ys, &cs, id_s, kappa, &a).unwrap();
                let c = map_compose_basis(&cs, &cy, tau, id_c, &b).unwrap();
                map_compose_basis(&cy, &cc, kappa, id_c, &c).unwrap()
            };
            let via_right = {
                let a = map_compose_basis(&ss, &sy, tau, id_s, &x).unwrap();
                let b = map_compose_basis(&sy, &yy, id_y, tau, &a).unwrap();
                let c = map_compose_basis(&yy, &yc, kappa, id_y, &b).unwrap();
                map_compose_basis(&yc, &cc, id_c, kappa, &c).unwrap()
            };
            assert_eq!(direct, via_left);
            assert_eq!(direct, via_right);
        }
    }
}

type Word<D, C> = TensorWord<ComposedOf<D, C>>;

pub fn check_phi<D: WordBasis, C: WordBasis>(comp: &Composite<D, C>, max: usize) {
    for n in 0..=max {
        let mut seen = BTreeSet::new();
        for e in comp.basis(n) {
            let w = phi(comp, &e);
            assert!(w.0.iter().all(|l| is_letter(comp, l)));
            assert_eq!(phi_inverse(comp, &w).unwrap(), e);
            assert!(seen.insert(w.clone()));
            // φ⊗φ of the coproduct is deconcatenation of φ
            let mut lhs: Lin<(Word<D, C>, Word<D, C>)> = Lin::zero();
            for ((x, y), k) in comp.coproduct_basis(&e).iter() {
                lhs.add_term((phi(comp, x), phi(comp, y)), k.clone());
            }
            assert_eq!(lhs, w.deconcatenation(), "{}", comp.render_basis(&e));
        }
    }
}

pub fn phi_on_the_composites(max: usize) {
    check_phi(&Composite::new(YSymM, YSymM), max);
    check_phi(&Composite::new(YSymM, CSym), max);
    check_phi(&Composite::new(CSym, CSym), max);
}

fn series_of<A: GradedCoalgebra>(a: &A, max: usize) -> Series {
    Series::from_fn(max + 1, |n| BigInt::from(a.dimension(n)))
}

/// The primitives have the dimensions of `1 − 1/E(x)`.
pub fn kernel_matches_series<A: GradedCoalgebra>(a: &A, max: usize) {
    let p = series_of(a, max).primitives_series().unwrap();
    for n in 1..=max {
        let kernel = a.primitive_kernel(n);
        assert_eq!(BigInt::from(kernel.len()), p.coeff(n), "{} degree {n}", a.name());
        assert!(kernel.iter().all(|x| a.is_primitive(x)));
    }
}

pub fn primitive_dimensions(composites: usize, bases: usize) {
    kernel_matches_series(&Composite::new(YSym, YSym), composites);
    kernel_matches_series(&Composite::new(YSym, CSym), composites);
    kernel_matches_series(&Composite::new(CSym, CSym), composites);
    kernel_matches_series(&SSym, bases);
    kernel_matches_series(&YSym, bases);
    kernel_matches_series(&CSym, bases);
}

/// Generators are primitive both as words and in the F basis.
fn generators_are_primitive<D, C, DF, CF>(
    src: &Composite<D, C>,
    dst: &Composite<DF, CF>,
    to_d: impl Fn(&D::Basis) -> Lin<DF::Basis> + Copy,
    to_c: impl Fn(&C::Basis) -> Lin<CF::Basis> + Copy,
    max: usize,
) where
    D: CofreeCoalgebra,
    C: CofreeCoalgebra,
    DF: GradedCoalgebra,
    CF: GradedCoalgebra,
{
    for n in 1..=max {
        let gens = primitive_generators(src, n);
        assert_eq!(gens.len(), dst.primitive_space_dim(n));
        for g in &gens {
            assert!(src.is_primitive(g));
            assert!(dst.is_primitive(&map_compose(src, dst, to_d, to_c, g).unwrap()));
        }
    }
}

pub fn generators_on_the_composites(max: usize) {
    let id_c = |c: &Comb| Lin::basis(*c);
    generators_are_primitive(
        &Composite::new(YSymM, YSymM),
        &Composite::new(YSym, YSym),
        m_basis,
        m_basis,
        max,
    );
    generators_are_primitive(
        &Composite::new(YSymM, CSym),
        &Composite::new(YSym, CSym),
        m_basis,
        id_c,
        max,
    );
    generators_are_primitive(
        &Composite::new(CSym, CSym),
        &Composite::new(CSym, CSym),
        id_c,
        id_c,
        max,
    );
}

//! Hopf operads on trees and combs, their actions on composites, and the
//! one-sided Hopf algebras obtained from connections.

mod connection;

use crate::basealg::{CSym, GradedAlgebra, GradedCoalgebra, Lin, YSym};
use crate::compose::Composed;
use crate::error::{Error, Result};
use crate::trees::{BinaryTree, Comb};

pub use connection::{BaseConnection, Connection, TopConnection};

/// A graded Hopf operad in a basis where composition sends basis elements
/// to basis elements.
pub trait HopfOperad: GradedAlgebra {
    /// Composition `γ(d; t_0, …, t_n)`, `n = deg d`.
    fn gamma(&self, d: &Self::Basis, forest: &[Self::Basis]) -> Result<Self::Basis>;
}

impl HopfOperad for YSym {
    /// Grafts `t_i` onto leaf `i` of `d`.
    fn gamma(&self, d: &BinaryTree, forest: &[BinaryTree]) -> Result<BinaryTree> {
        BinaryTree::graft(forest, d)
    }
}

impl HopfOperad for CSym {
    /// Grafting then combing; only degrees matter.
    fn gamma(&self, d: &Comb, forest: &[Comb]) -> Result<Comb> {
        Comb::graft(forest, *d)
    }
}

/// `Δ^{(n)}`, the `n`-fold coproduct with `n + 1` tensor factors, computed
/// by repeatedly splitting the last factor.
pub fn iterated_coproduct<A: GradedCoalgebra + ?Sized>(alg: &A, b: &A::Basis, n: usize) -> Lin<Vec<A::Basis>> {
    let mut acc: Lin<Vec<A::Basis>> = Lin::basis(vec![b.clone()]);
    for _ in 0..n {
        let mut next = Lin::zero();
        for (word, c) in acc.iter() {
            let (last, init) = word.split_last().expect("nonempty tensor");
            for ((x, y), cc) in alg.coproduct_basis(last).iter() {
                let mut w = init.to_vec();
                w.push(x.clone());
                w.push(y.clone());
                next.add_term(w, c * cc);
            }
        }
        acc = next;
    }
    acc
}

/// The product induced by the operad: `a·b = γ(b; Δ^{(|b|)} a)`.
pub fn operad_product<O: HopfOperad>(o: &O, a: &O::Basis, b: &O::Basis) -> Lin<O::Basis> {
    let n = o.degree(b);
    let mut out = Lin::zero();
    for (forest, c) in iterated_coproduct(o, a, n).iter() {
        out.add_term(o.gamma(b, forest).expect("forest has deg b + 1 trees"), c.clone());
    }
    out
}

/// Left module structure of `O∘C` over `O`: the bases of `e_0, …, e_n`
/// compose into `d`, the decorations concatenate in order.
pub fn mu_l<O: HopfOperad, T: Clone>(
    o: &O,
    d: &O::Basis,
    es: &[Composed<O::Basis, T>],
) -> Result<Composed<O::Basis, T>> {
    let bases: Vec<O::Basis> = es.iter().map(|e| e.base.clone()).collect();
    let base = o.gamma(d, &bases)?;
    let tops = es.iter().flat_map(|e| e.tops.iter().cloned()).collect();
    Ok(Composed::new(base, tops))
}

/// Right module structure of `C∘O` over `O`: the decoration `d_j` absorbs
/// the next `|d_j| + 1` elements of `ds`.
pub fn mu_r<O: HopfOperad, B: Clone>(
    o: &O,
    e: &Composed<B, O::Basis>,
    ds: &[O::Basis],
) -> Result<Composed<B, O::Basis>> {
    let needed: usize = e.tops.iter().map(|t| o.degree(t) + 1).sum();
    if ds.len() != needed {
        return Err(Error::ArityMismatch {
            expected: needed,
            found: ds.len(),
        });
    }
    let mut rest = ds;
    let mut tops = Vec::with_capacity(e.tops.len());
    for t in &e.tops {
        let (head, tail) = rest.split_at(o.degree(t) + 1);
        tops.push(o.gamma(t, head)?);
        rest = tail;
    }
    Ok(Composed::new(e.base.clone(), tops))
}

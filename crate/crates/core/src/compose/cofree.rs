//! The cofree structure of a composite of cofree coalgebras.
//!
//! When both components are words in their primitives, an element of the
//! composite is a word in two kinds of letters: `(1; γ)` with `γ` a letter
//! of the top, and `(δ; 1, c_1, …, c_{m−1}, 1)` with `δ` a letter of the
//! base of degree `m` and arbitrary inner decorations. The map `φ` reads
//! the letters off left to right: the letters of `c_0`, then for each
//! letter of the base its block of decorations followed by the letters of
//! the decoration closing the block.

use crate::basealg::{CofreeCoalgebra, GradedCoalgebra, Lin, WordBasis};
use crate::combinat::weak_compositions;
use crate::error::{Error, Result};
use crate::linear::TensorWord;

use super::{Composed, ComposedOf, Composite};

use itertools::Itertools;

/// Whether `e` is one of the two kinds of letters.
pub fn is_letter<D: WordBasis, C: WordBasis>(comp: &Composite<D, C>, e: &ComposedOf<D, C>) -> bool {
    let one = comp.top.one();
    if comp.base.degree(&e.base) == 0 {
        comp.top.factor(&e.tops[0]).len() == 1
    } else {
        comp.base.factor(&e.base).len() == 1 && e.tops.first() == Some(&one) && e.tops.last() == Some(&one)
    }
}

pub fn phi<D: WordBasis, C: WordBasis>(comp: &Composite<D, C>, e: &ComposedOf<D, C>) -> TensorWord<ComposedOf<D, C>> {
    let d_one = comp.base.one();
    let c_one = comp.top.one();
    let top_letters = |c: &C::Basis| {
        comp.top
            .factor(c)
            .into_iter()
            .map(|g| Composed::new(d_one.clone(), vec![g]))
            .collect::<Vec<_>>()
    };
    let mut word = top_letters(&e.tops[0]);
    let mut pos = 1;
    for delta in comp.base.factor(&e.base) {
        let m = comp.base.degree(&delta);
        let mut tops = Vec::with_capacity(m + 1);
        tops.push(c_one.clone());
        tops.extend_from_slice(&e.tops[pos..pos + m - 1]);
        tops.push(c_one.clone());
        word.push(Composed::new(delta, tops));
        word.extend(top_letters(&e.tops[pos + m - 1]));
        pos += m;
    }
    TensorWord(word)
}

pub fn phi_inverse<D: WordBasis, C: WordBasis>(
    comp: &Composite<D, C>,
    w: &TensorWord<ComposedOf<D, C>>,
) -> Result<ComposedOf<D, C>> {
    let mut base_letters = Vec::new();
    let mut tops: Vec<Vec<C::Basis>> = vec![Vec::new()];
    for letter in &w.0 {
        comp.check_arity(letter)?;
        if !is_letter(comp, letter) {
            return Err(Error::Unsupported(format!(
                "{} is not a cogenerator",
                comp.render_basis(letter)
            )));
        }
        if comp.base.degree(&letter.base) == 0 {
            tops.last_mut().expect("nonempty").push(letter.tops[0].clone());
        } else {
            base_letters.push(letter.base.clone());
            let inner = &letter.tops[1..letter.tops.len() - 1];
            tops.extend(inner.iter().map(|c| comp.top.factor(c)));
            tops.push(Vec::new());
        }
    }
    Ok(Composed::new(
        comp.base.join(&base_letters),
        tops.iter().map(|ls| comp.top.join(ls)).collect(),
    ))
}

/// A spanning set of the primitives of total degree `n ≥ 1`: `(1; γ)` for
/// `γ` primitive in the top, and `(δ; 1, c_1, …, c_{m−1}, 1)` for `δ`
/// primitive in the base and `c_i` running over the whole top basis.
pub fn primitive_generators<D, C>(comp: &Composite<D, C>, n: usize) -> Vec<Lin<ComposedOf<D, C>>>
where
    D: CofreeCoalgebra,
    C: CofreeCoalgebra,
{
    let d_one = Lin::basis(comp.base.one());
    let c_one = Lin::basis(comp.top.one());
    let mut out: Vec<_> = comp
        .top
        .primitive_basis(n)
        .iter()
        .map(|g| comp.expand(&d_one, std::slice::from_ref(g)))
        .collect();
    for m in 1..=n {
        let deltas = comp.base.primitive_basis(m);
        if deltas.is_empty() {
            continue;
        }
        let inner_slots = m - 1;
        for degrees in weak_compositions(n - m, inner_slots) {
            let choices: Vec<Vec<C::Basis>> = degrees.iter().map(|&k| comp.top.basis(k)).collect();
            let fillings: Vec<Vec<C::Basis>> = if choices.is_empty() {
                vec![Vec::new()]
            } else {
                choices.into_iter().multi_cartesian_product().collect()
            };
            for delta in &deltas {
                for inner in &fillings {
                    let mut tops = vec![c_one.clone()];
                    tops.extend(inner.iter().cloned().map(Lin::basis));
                    tops.push(c_one.clone());
                    out.push(comp.expand(delta, &tops));
                }
            }
        }
    }
    out
}

//! Finite integer linear combinations over an ordered basis.
//!
//! Every structure constant met in this crate is an integer, so the
//! coefficient ring is `BigInt` throughout. Terms are kept in a `BTreeMap`,
//! which makes iteration and printing follow the basis order.

mod matrix;

pub use matrix::{integer_kernel, integer_rank, kernel_of, rank_of};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCombination<B: Ord> {
    terms: BTreeMap<B, BigInt>,
}

impl<B: Ord> Default for LinearCombination<B> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinearCombination<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        let mut out = Self::zero();
        out.terms.insert(b, BigInt::one());
        out
    }

    pub fn term(b: B, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coeff.into());
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, BigInt)>) -> Self {
        let mut out = Self::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn add_term(&mut self, b: B, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += k * other`
    pub fn add_scaled(&mut self, k: &BigInt, other: &Self) {
        if k.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(b.clone(), k * c);
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c * k)).collect(),
        }
    }

    pub fn coeff(&self, b: &B) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies a basis-level map and extends it linearly.
    pub fn map_basis<C: Ord + Clone>(&self, f: impl Fn(&B) -> C) -> LinearCombination<C> {
        let mut out = LinearCombination::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// `Σ coeff · f(basis)`.
    pub fn extend_linearly<C: Ord + Clone>(
        &self,
        mut f: impl FnMut(&B) -> LinearCombination<C>,
    ) -> LinearCombination<C> {
        let mut out = LinearCombination::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Same as [`extend_linearly`](Self::extend_linearly) for fallible maps.
    pub fn try_extend_linearly<C: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&B) -> Result<LinearCombination<C>, E>,
    ) -> Result<LinearCombination<C>, E> {
        let mut out = LinearCombination::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b)?);
        }
        Ok(out)
    }

    /// Keeps the terms whose basis element satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&B) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    /// Canonical text: terms in basis order, `" + "`/`" - "` separators,
    /// unit coefficients suppressed. The zero vector prints as `0`.
    pub fn to_text(&self, render: impl Fn(&B) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
            }
            out.push_str(&render(b));
        }
        out
    }
}

/// Bilinear tensor product of two combinations.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(
    x: &LinearCombination<A>,
    y: &LinearCombination<B>,
) -> LinearCombination<(A, B)> {
    let mut out = LinearCombination::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

impl<B: Ord + Clone> FromIterator<(B, BigInt)> for LinearCombination<B> {
    fn from_iter<I: IntoIterator<Item = (B, BigInt)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<B: Ord + Clone> AddAssign<&LinearCombination<B>> for LinearCombination<B> {
    fn add_assign(&mut self, rhs: &LinearCombination<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> Add for &LinearCombination<B> {
    type Output = LinearCombination<B>;
    fn add(self, rhs: Self) -> LinearCombination<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Add for LinearCombination<B> {
    type Output = LinearCombination<B>;
    fn add(mut self, rhs: Self) -> LinearCombination<B> {
        self += &rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinearCombination<B> {
    type Output = LinearCombination<B>;
    fn sub(self, rhs: Self) -> LinearCombination<B> {
        let mut out = self.clone();
        out.add_scaled(&-BigInt::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for LinearCombination<B> {
    type Output = LinearCombination<B>;
    fn sub(self, rhs: Self) -> LinearCombination<B> {
        &self - &rhs
    }
}

impl<B: Ord + Clone> Neg for &LinearCombination<B> {
    type Output = LinearCombination<B>;
    fn neg(self) -> LinearCombination<B> {
        self.scale(&-BigInt::one())
    }
}

impl<B: Ord + Clone> Neg for LinearCombination<B> {
    type Output = LinearCombination<B>;
    fn neg(self) -> LinearCombination<B> {
        -&self
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for LinearCombination<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(|b| format!("F{b}")))
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinearCombination<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// An element of `V^{⊗k}`; the empty word is the unit of the cofree coalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorWord<B>(pub Vec<B>);

impl<B: Clone + Ord> TensorWord<B> {
    pub fn empty() -> Self {
        TensorWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.0.clone();
        letters.extend(other.0.iter().cloned());
        TensorWord(letters)
    }

    /// Cuts the word at every position, ends included.
    pub fn deconcatenation(&self) -> LinearCombination<(TensorWord<B>, TensorWord<B>)> {
        (0..=self.0.len())
            .map(|i| {
                (
                    (TensorWord(self.0[..i].to_vec()), TensorWord(self.0[i..].to_vec())),
                    BigInt::one(),
                )
            })
            .collect()
    }
}

impl<B: fmt::Display> fmt::Display for TensorWord<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" \\ ")?;
            }
            write!(f, "{{{b}}}")?;
        }
        Ok(())
    }
}

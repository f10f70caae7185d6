//! Composition of graded coalgebras.
//!
//! A basis element of `D∘C` is a base `d ∈ D` of degree `n` decorated with
//! `n + 1` elements of `C`, one per leaf. Its coproduct splits `d`, and the
//! decoration sitting on the cut leaf is split as well.

mod cofree;
mod dims;

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;

use crate::basealg::{BasisElement, GradedCoalgebra, Lin, Tensor};
use crate::combinat::weak_compositions;
use crate::error::{Error, Result};

pub use cofree::{is_letter, phi, phi_inverse, primitive_generators};
pub use dims::{brute_force_dims, dim_composite, IndexFamily};

/// `(base; tops)` with `tops.len() = deg(base) + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composed<D, C> {
    pub base: D,
    pub tops: Vec<C>,
}

impl<D, C> Composed<D, C> {
    pub fn new(base: D, tops: Vec<C>) -> Self {
        Composed { base, tops }
    }
}

impl<D: fmt::Display, C: fmt::Display> fmt::Display for Composed<D, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ [{}]", self.base, self.tops.iter().join(", "))
    }
}

impl<D: fmt::Display, C: fmt::Display> fmt::Debug for Composed<D, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits `"D @ [c0, c1]"` into the base literal and the top literals.
pub fn split_composed_literal(s: &str) -> Result<(&str, Vec<&str>)> {
    let (base, rest) = s
        .split_once('@')
        .ok_or_else(|| Error::parse(s, "expected 'base @ [tops]'"))?;
    let rest = rest.trim();
    let inner = rest
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::parse(s, "tops must be enclosed in [ ]"))?;
    let mut tops = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                tops.push(inner[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    tops.push(inner[start..].trim());
    if tops.iter().any(|t| t.is_empty()) {
        return Err(Error::parse(s, "empty top entry"));
    }
    Ok((base.trim(), tops))
}

/// The composite coalgebra `D∘C`, `D` at the base.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Composite<D, C> {
    pub base: D,
    pub top: C,
}

pub type ComposedOf<D, C> = Composed<<D as GradedCoalgebra>::Basis, <C as GradedCoalgebra>::Basis>;

impl<D: GradedCoalgebra, C: GradedCoalgebra> Composite<D, C> {
    pub fn new(base: D, top: C) -> Self {
        Composite { base, top }
    }

    /// Degree of the base only.
    pub fn base_degree(&self, e: &ComposedOf<D, C>) -> usize {
        self.base.degree(&e.base)
    }

    /// Multilinear expansion of `(x; y_0, …, y_n)`.
    pub fn expand(&self, base: &Lin<D::Basis>, tops: &[Lin<C::Basis>]) -> Lin<ComposedOf<D, C>> {
        let mut out = Lin::zero();
        for (d, cd) in base.iter() {
            let mut partial: Vec<(Vec<C::Basis>, BigInt)> = vec![(Vec::new(), cd.clone())];
            for y in tops {
                let mut next = Vec::with_capacity(partial.len() * y.len());
                for (prefix, c) in &partial {
                    for (b, cb) in y.iter() {
                        let mut v = prefix.clone();
                        v.push(b.clone());
                        next.push((v, c * cb));
                    }
                }
                partial = next;
            }
            for (tops, c) in partial {
                out.add_term(Composed::new(d.clone(), tops), c);
            }
        }
        out
    }

    pub fn check_arity(&self, e: &ComposedOf<D, C>) -> Result<()> {
        let expected = self.base.degree(&e.base) + 1;
        if e.tops.len() != expected {
            return Err(Error::ArityMismatch {
                expected,
                found: e.tops.len(),
            });
        }
        Ok(())
    }
}

impl<D: GradedCoalgebra, C: GradedCoalgebra> GradedCoalgebra for Composite<D, C>
where
    ComposedOf<D, C>: BasisElement,
{
    type Basis = ComposedOf<D, C>;

    fn name(&self) -> String {
        format!("{}-o-{}", self.top.name(), self.base.name())
    }

    fn degree(&self, e: &Self::Basis) -> usize {
        self.base.degree(&e.base) + e.tops.iter().map(|c| self.top.degree(c)).sum::<usize>()
    }

    fn one(&self) -> Self::Basis {
        Composed::new(self.base.one(), vec![self.top.one()])
    }

    fn basis(&self, n: usize) -> Vec<Self::Basis> {
        let mut out = Vec::new();
        for k in 0..=n {
            let bases = self.base.basis(k);
            if bases.is_empty() {
                continue;
            }
            for degrees in weak_compositions(n - k, k + 1) {
                let choices: Vec<Vec<C::Basis>> = degrees.iter().map(|&m| self.top.basis(m)).collect();
                let forests: Vec<Vec<C::Basis>> = choices.into_iter().multi_cartesian_product().collect();
                for d in &bases {
                    for tops in &forests {
                        out.push(Composed::new(d.clone(), tops.clone()));
                    }
                }
            }
        }
        out
    }

    fn coproduct_basis(&self, e: &Self::Basis) -> Tensor<Self::Basis> {
        let mut out = Tensor::zero();
        for ((d1, d2), cd) in self.base.coproduct_basis(&e.base).iter() {
            let i = self.base.degree(d1);
            for ((x, y), cc) in self.top.coproduct_basis(&e.tops[i]).iter() {
                let mut left = e.tops[..i].to_vec();
                left.push(x.clone());
                let mut right = vec![y.clone()];
                right.extend_from_slice(&e.tops[i + 1..]);
                out.add_term(
                    (Composed::new(d1.clone(), left), Composed::new(d2.clone(), right)),
                    cd * cc,
                );
            }
        }
        out
    }

    fn counit_basis(&self, e: &Self::Basis) -> BigInt {
        let mut c = self.base.counit_basis(&e.base);
        for t in &e.tops {
            c *= self.top.counit_basis(t);
        }
        c
    }

    fn parse_basis(&self, s: &str) -> Result<Self::Basis> {
        let (base, tops) = split_composed_literal(s)?;
        let e = Composed::new(
            self.base.parse_basis(base)?,
            tops.iter()
                .map(|t| self.top.parse_basis(t))
                .collect::<Result<Vec<_>>>()?,
        );
        self.check_arity(&e)?;
        Ok(e)
    }

    fn render_basis(&self, e: &Self::Basis) -> String {
        format!(
            "{} @ [{}]",
            self.base.render_basis(&e.base),
            e.tops.iter().map(|c| self.top.render_basis(c)).join(", ")
        )
    }
}

/// Applies `ψ` to the base and `φ` to every top, extended multilinearly.
/// Both maps must preserve degree.
pub fn map_compose<D, C, D2, C2>(
    src: &Composite<D, C>,
    dst: &Composite<D2, C2>,
    psi: impl Fn(&D::Basis) -> Lin<D2::Basis>,
    phi: impl Fn(&C::Basis) -> Lin<C2::Basis>,
    x: &Lin<ComposedOf<D, C>>,
) -> Result<Lin<ComposedOf<D2, C2>>>
where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D2: GradedCoalgebra,
    C2: GradedCoalgebra,
{
    x.try_extend_linearly(|e| {
        let base = psi(&e.base);
        let d = src.base.degree(&e.base);
        if let Some((b, _)) = base.iter().find(|(b, _)| dst.base.degree(b) != d) {
            return Err(Error::DegreeMismatch(format!(
                "base map sends degree {d} to {b} of degree {}",
                dst.base.degree(b)
            )));
        }
        let mut tops = Vec::with_capacity(e.tops.len());
        for c in &e.tops {
            let image = phi(c);
            let k = src.top.degree(c);
            if let Some((b, _)) = image.iter().find(|(b, _)| dst.top.degree(b) != k) {
                return Err(Error::DegreeMismatch(format!(
                    "top map sends degree {k} to {b} of degree {}",
                    dst.top.degree(b)
                )));
            }
            tops.push(image);
        }
        Ok(dst.expand(&base, &tops))
    })
}

/// Basis-level form of [`map_compose`].
pub fn map_compose_basis<D, C, D2, C2>(
    src: &Composite<D, C>,
    dst: &Composite<D2, C2>,
    psi: impl Fn(&D::Basis) -> D2::Basis,
    phi: impl Fn(&C::Basis) -> C2::Basis,
    x: &Lin<ComposedOf<D, C>>,
) -> Result<Lin<ComposedOf<D2, C2>>>
where
    D: GradedCoalgebra,
    C: GradedCoalgebra,
    D2: GradedCoalgebra,
    C2: GradedCoalgebra,
{
    map_compose(src, dst, |d| Lin::basis(psi(d)), |c| Lin::basis(phi(c)), x)
}

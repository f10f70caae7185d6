use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;

use super::{GradedAlgebra, Lin, Side};

/// The antipode of a connected graded bialgebra, solved degree by degree
/// from `Σ S(x')x'' = ε(x)1` (left) or `Σ x'S(x'') = ε(x)1` (right).
/// Only the term carrying `S(x)` itself involves the top degree, and it
/// is `S(x)·1` or `1·S(x)`, which the one-sided unit turns into `S(x)`.
pub struct Antipode<'a, A: GradedAlgebra> {
    alg: &'a A,
    side: Side,
    memo: Mutex<HashMap<A::Basis, Lin<A::Basis>>>,
}

impl<'a, A: GradedAlgebra> Antipode<'a, A> {
    /// The antipode on the side the unit allows.
    pub fn new(alg: &'a A) -> Self {
        Self::with_side(alg, alg.antipode_side())
    }

    /// `side` is `Left` for `m(S⊗id)Δ = ηε`; `Both` solves the left
    /// equation.
    pub fn with_side(alg: &'a A, side: Side) -> Self {
        Antipode {
            alg,
            side,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn apply(&self, x: &Lin<A::Basis>) -> Lin<A::Basis> {
        x.extend_linearly(|b| self.apply_basis(b))
    }

    pub fn apply_basis(&self, b: &A::Basis) -> Lin<A::Basis> {
        if let Some(v) = self.memo.lock().expect("antipode memo").get(b) {
            return v.clone();
        }
        let alg = self.alg;
        let one = alg.one();
        let mut value = Lin::zero();
        let eps = alg.counit_basis(b);
        if !eps.is_zero() {
            value.add_term(one.clone(), eps);
        }
        let left = self.side != Side::Right;
        for ((x1, x2), c) in alg.coproduct_basis(b).iter() {
            let skip = if left {
                x1 == b && *x2 == one
            } else {
                *x1 == one && x2 == b
            };
            if skip {
                continue;
            }
            let term = if left {
                alg.product(&self.apply_basis(x1), &Lin::basis(x2.clone()))
            } else {
                alg.product(&Lin::basis(x1.clone()), &self.apply_basis(x2))
            };
            value.add_scaled(&-c.clone(), &term);
        }
        self.memo
            .lock()
            .expect("antipode memo")
            .insert(b.clone(), value.clone());
        value
    }

    /// `m(S⊗id)Δ(x) − ε(x)1` on the left, `m(id⊗S)Δ(x) − ε(x)1` on the
    /// right; zero when the identity holds.
    pub fn defect(&self, b: &A::Basis, side: Side) -> Lin<A::Basis> {
        let alg = self.alg;
        let mut total = Lin::zero();
        for ((x1, x2), c) in alg.coproduct_basis(b).iter() {
            let term = if side == Side::Right {
                alg.product(&Lin::basis(x1.clone()), &self.apply_basis(x2))
            } else {
                alg.product(&self.apply_basis(x1), &Lin::basis(x2.clone()))
            };
            total.add_scaled(c, &term);
        }
        total.add_term(alg.one(), -alg.counit_basis(b));
        total
    }
}

/// Convenience wrapper with a fresh memo.
pub fn antipode<A: GradedAlgebra>(alg: &A, x: &Lin<A::Basis>) -> Lin<A::Basis> {
    Antipode::new(alg).apply(x)
}

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::binomial;
use crate::error::Result;
use crate::trees::Comb;

use super::{CofreeCoalgebra, GradedAlgebra, GradedCoalgebra, Lin, Side, Tensor, WordBasis};

/// Combs, i.e. divided powers: `c_m · c_n = C(m+n, n) c_{m+n}` and
/// `Δ c_n = Σ c_i ⊗ c_{n−i}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CSym;

impl GradedCoalgebra for CSym {
    type Basis = Comb;

    fn name(&self) -> String {
        "csym".into()
    }

    fn degree(&self, b: &Comb) -> usize {
        b.degree()
    }

    fn one(&self) -> Comb {
        Comb(0)
    }

    fn basis(&self, n: usize) -> Vec<Comb> {
        vec![Comb(n)]
    }

    fn coproduct_basis(&self, c: &Comb) -> Tensor<Comb> {
        (0..=c.0).map(|i| ((Comb(i), Comb(c.0 - i)), BigInt::one())).collect()
    }

    fn parse_basis(&self, s: &str) -> Result<Comb> {
        s.parse()
    }
}

impl GradedAlgebra for CSym {
    fn product_basis(&self, a: &Comb, b: &Comb) -> Lin<Comb> {
        Lin::term(Comb(a.0 + b.0), binomial(a.0 + b.0, b.0))
    }

    fn unit_side(&self) -> Side {
        Side::Both
    }
}

impl CofreeCoalgebra for CSym {
    fn primitive_basis(&self, n: usize) -> Vec<Lin<Comb>> {
        if n == 1 {
            vec![Lin::basis(Comb(1))]
        } else {
            Vec::new()
        }
    }
}

impl WordBasis for CSym {
    fn factor(&self, b: &Comb) -> Vec<Comb> {
        vec![Comb(1); b.0]
    }

    fn join(&self, letters: &[Comb]) -> Comb {
        Comb(letters.iter().map(|c| c.0).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_powers() {
        for m in 0..6 {
            for n in 0..6 {
                let p = CSym.product_basis(&Comb(m), &Comb(n));
                assert_eq!(p.coeff(&Comb(m + n)), binomial(m + n, n));
            }
            assert_eq!(CSym.coproduct_basis(&Comb(m)).len(), m + 1);
        }
    }

    #[test]
    fn only_one_primitive() {
        assert_eq!(CSym.primitive_space_dim(1), 1);
        for n in 2..7 {
            assert_eq!(CSym.primitive_space_dim(n), 0);
        }
    }

    #[test]
    fn words() {
        assert_eq!(CSym.join(&CSym.factor(&Comb(4))), Comb(4));
        assert!(CSym.factor(&Comb(0)).is_empty());
    }
}

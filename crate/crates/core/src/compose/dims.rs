//! Graded dimensions of composites from the dimensions of the top.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::basealg::GradedCoalgebra;
use crate::combinat::{factorial, weak_compositions};
use crate::error::{Error, Result};

/// What indexes the basis of the base factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexFamily {
    Comb,
    Tree,
    Permutation,
}

impl IndexFamily {
    /// Dimension of the degree `n` component of the algebra indexed by the family.
    pub fn dimension(self, n: usize) -> BigInt {
        match self {
            IndexFamily::Comb => BigInt::one(),
            IndexFamily::Tree => crate::combinat::catalan(n),
            IndexFamily::Permutation => factorial(n),
        }
    }
}

impl FromStr for IndexFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csym" => Ok(IndexFamily::Comb),
            "ysym" => Ok(IndexFamily::Tree),
            "ssym" => Ok(IndexFamily::Permutation),
            other => Err(Error::UnknownAlgebra(other.to_string())),
        }
    }
}

impl fmt::Display for IndexFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndexFamily::Comb => "csym",
            IndexFamily::Tree => "ysym",
            IndexFamily::Permutation => "ssym",
        })
    }
}

/// Dimensions `E_0..=E_max` of `D∘C`, given `C_0..=C_max`.
///
/// * combs at the base: `E_n = C_n + Σ_{i<n} C_i E_{n−i−1}` (peel the root);
/// * trees at the base: `E_n = C_n + Σ_{i<n} E_i E_{n−i−1}` (split at the root);
/// * permutations at the base: `E_n = Σ_k k! Σ_{γ_0+…+γ_k = n−k} Π C_{γ_j}`.
pub fn dim_composite(base: IndexFamily, top: &[BigInt], max: usize) -> Result<Vec<BigInt>> {
    if top.len() <= max {
        return Err(Error::Unsupported(format!(
            "need top dimensions through degree {max}, got {}",
            top.len().saturating_sub(1)
        )));
    }
    let mut e: Vec<BigInt> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let value = match base {
            IndexFamily::Comb | IndexFamily::Tree if n == 0 => top[0].clone(),
            IndexFamily::Comb => {
                let mut v = top[n].clone();
                for i in 0..n {
                    v += &top[i] * &e[n - i - 1];
                }
                v
            }
            IndexFamily::Tree => {
                let mut v = top[n].clone();
                for i in 0..n {
                    v += &e[i] * &e[n - i - 1];
                }
                v
            }
            IndexFamily::Permutation => {
                let mut v = BigInt::zero();
                for k in 0..=n {
                    let mut inner = BigInt::zero();
                    for gamma in weak_compositions(n - k, k + 1) {
                        inner += gamma.iter().map(|&g| top[g].clone()).product::<BigInt>();
                    }
                    v += factorial(k) * inner;
                }
                v
            }
        };
        e.push(value);
    }
    Ok(e)
}

/// Counts basis elements directly.
pub fn brute_force_dims<A: GradedCoalgebra>(alg: &A, max: usize) -> Vec<BigInt> {
    (0..=max).map(|n| BigInt::from(alg.basis(n).len())).collect()
}

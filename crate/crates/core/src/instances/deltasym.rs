//! The algebra of simplex faces, built directly from subsets and shuffles.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use crate::basealg::{GradedAlgebra, GradedCoalgebra, Lin, Side, Tensor};
use crate::error::{Error, Result};

use super::CompositionTree;

/// A face `S ⊆ [n]` of the `(n − 1)`-simplex. Literal `{3,5,6}/10`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexFace {
    pub n: usize,
    pub subset: BTreeSet<usize>,
}

impl SimplexFace {
    pub fn new(n: usize, subset: impl IntoIterator<Item = usize>) -> Result<Self> {
        let subset: BTreeSet<usize> = subset.into_iter().collect();
        if let Some(&bad) = subset.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidSubset(format!("{bad} is not in [1, {n}]")));
        }
        Ok(SimplexFace { n, subset })
    }

    pub fn empty(n: usize) -> Self {
        SimplexFace {
            n,
            subset: BTreeSet::new(),
        }
    }

    pub fn enumerate(n: usize) -> Vec<SimplexFace> {
        (1..=n)
            .powerset()
            .map(|s| SimplexFace {
                n,
                subset: s.into_iter().collect(),
            })
            .sorted()
            .collect()
    }
}

impl fmt::Display for SimplexFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}/{}", self.subset.iter().join(","), self.n)
    }
}

impl fmt::Debug for SimplexFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SimplexFace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (set, n) = s
            .trim()
            .rsplit_once('/')
            .ok_or_else(|| Error::parse(s, "expected {i,j,...}/n"))?;
        let n: usize = n.trim().parse().map_err(|_| Error::parse(s, "bad ambient size"))?;
        let inner = set
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::parse(s, "subset must be enclosed in { }"))?;
        let mut elems = Vec::new();
        if !inner.trim().is_empty() {
            for e in inner.split(',') {
                elems.push(e.trim().parse::<usize>().map_err(|_| Error::parse(s, "bad element"))?);
            }
        }
        SimplexFace::new(n, elems)
    }
}

/// `α(S) = (a, b − a, …, d − c, n + 1 − d)` for `S = {a < b < … < c < d}`.
pub fn alpha(face: &SimplexFace) -> CompositionTree {
    let mut parts = Vec::with_capacity(face.subset.len() + 1);
    let mut prev = 0;
    for &s in &face.subset {
        parts.push(s - prev);
        prev = s;
    }
    parts.push(face.n + 1 - prev);
    CompositionTree::new(parts).expect("gaps of a strictly increasing sequence are positive")
}

pub fn alpha_inverse(c: &CompositionTree) -> SimplexFace {
    let parts = c.parts();
    let n = c.degree();
    let subset = parts[..parts.len() - 1]
        .iter()
        .scan(0, |acc, &a| {
            *acc += a;
            Some(*acc)
        })
        .collect();
    SimplexFace { n, subset }
}

/// Subsets split at `p`; shuffles of `[p]` with `ι_p([q])`, keeping all of
/// `[p]` and the image of the right subset. The empty face is a left unit
/// only.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DeltaSym;

impl GradedCoalgebra for DeltaSym {
    type Basis = SimplexFace;

    fn name(&self) -> String {
        "deltasym".into()
    }

    fn degree(&self, b: &SimplexFace) -> usize {
        b.n
    }

    fn one(&self) -> SimplexFace {
        SimplexFace::empty(0)
    }

    fn basis(&self, n: usize) -> Vec<SimplexFace> {
        SimplexFace::enumerate(n)
    }

    fn coproduct_basis(&self, b: &SimplexFace) -> Tensor<SimplexFace> {
        let mut out = Tensor::zero();
        for p in 0..=b.n {
            let left = SimplexFace {
                n: p,
                subset: b.subset.iter().copied().filter(|&s| s <= p).collect(),
            };
            let right = SimplexFace {
                n: b.n - p,
                subset: b.subset.iter().filter(|&&s| s > p).map(|&s| s - p).collect(),
            };
            out.add_term((left, right), BigInt::one());
        }
        out
    }

    fn parse_basis(&self, s: &str) -> Result<SimplexFace> {
        s.parse()
    }
}

impl GradedAlgebra for DeltaSym {
    fn product_basis(&self, a: &SimplexFace, b: &SimplexFace) -> Lin<SimplexFace> {
        let (p, q) = (a.n, b.n);
        let mut out = Lin::zero();
        // a shuffle is determined by the positions taken by [p]
        for left_positions in (1..=p + q).combinations(p) {
            let taken: BTreeSet<usize> = left_positions.iter().copied().collect();
            let right_positions: Vec<usize> = (1..=p + q).filter(|i| !taken.contains(i)).collect();
            let mut subset = taken;
            subset.extend(b.subset.iter().map(|&t| right_positions[t - 1]));
            out.add_term(SimplexFace { n: p + q, subset }, BigInt::one());
        }
        out
    }

    fn unit_side(&self) -> Side {
        Side::Left
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(s: &str) -> SimplexFace {
        s.parse().unwrap()
    }

    #[test]
    fn literals() {
        assert_eq!(face("{3,5,6}/10").subset.len(), 3);
        assert_eq!(face("{}/3").to_string(), "{}/3");
        assert!("{4}/3".parse::<SimplexFace>().is_err());
        assert!("{0}/3".parse::<SimplexFace>().is_err());
        assert!("{1}".parse::<SimplexFace>().is_err());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&face("{3,5,6}/9")).to_string(), "[3,2,1,4]");
        assert_eq!(alpha(&face("{3,5,6}/10")).to_string(), "[3,2,1,5]");
        assert_eq!(alpha(&face("{}/4")).to_string(), "[5]");
        assert_eq!(alpha(&face("{1,2,3}/3")).to_string(), "[1,1,1,1]");
        assert_eq!(alpha_inverse(&"[4]".parse().unwrap()), face("{}/3"));
    }

    #[test]
    fn alpha_round_trips() {
        for n in 0..=8 {
            for f in SimplexFace::enumerate(n) {
                assert_eq!(alpha_inverse(&alpha(&f)), f);
            }
        }
    }

    #[test]
    fn product_term_counts_and_units() {
        let x = face("{}/1");
        let y = face("{2}/2");
        let prod = DeltaSym.product_basis(&x, &y);
        assert_eq!(prod.coefficient_sum(), BigInt::from(3));
        assert_eq!(prod.coeff(&face("{1,3}/3")), BigInt::from(1));
        assert_eq!(prod.coeff(&face("{2,3}/3")), BigInt::from(2));
        let one = DeltaSym.one();
        assert_eq!(DeltaSym.product_basis(&one, &y), Lin::basis(y.clone()));
        assert_eq!(DeltaSym.product_basis(&y, &one), Lin::basis(face("{1,2}/2")));
    }
}

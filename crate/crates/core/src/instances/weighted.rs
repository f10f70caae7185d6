use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::compose::Composed;
use crate::error::{Error, Result};
use crate::trees::{BinaryTree, Comb};

/// A binary tree whose leaves carry positive weights, the weight of a leaf
/// counting the leaves of the comb grafted there. Literal `(. .) [2,1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedTree {
    pub shape: BinaryTree,
    pub weights: Vec<usize>,
}

impl WeightedTree {
    pub fn new(shape: BinaryTree, weights: Vec<usize>) -> Result<Self> {
        if weights.len() != shape.degree() + 1 {
            return Err(Error::ArityMismatch {
                expected: shape.degree() + 1,
                found: weights.len(),
            });
        }
        if weights.contains(&0) {
            return Err(Error::Parse {
                literal: format!("{weights:?}"),
                reason: "weights must be positive".into(),
            });
        }
        Ok(WeightedTree { shape, weights })
    }

    /// Total degree: nodes of the shape plus nodes of the combs.
    pub fn degree(&self) -> usize {
        self.weights.iter().sum::<usize>() - 1
    }

    pub fn to_composed(&self) -> Composed<BinaryTree, Comb> {
        Composed::new(self.shape.clone(), self.weights.iter().map(|&w| Comb(w - 1)).collect())
    }

    pub fn from_composed(e: &Composed<BinaryTree, Comb>) -> Result<Self> {
        WeightedTree::new(e.base.clone(), e.tops.iter().map(|c| c.0 + 1).collect())
    }
}

impl fmt::Display for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.shape, self.weights.iter().join(","))
    }
}

impl fmt::Debug for WeightedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for WeightedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (shape, weights) = t
            .rsplit_once(" [")
            .ok_or_else(|| Error::parse(s, "expected '<tree> [w0,...,wn]'"))?;
        let weights = weights
            .strip_suffix(']')
            .ok_or_else(|| Error::parse(s, "missing ]"))?
            .split(',')
            .map(|w| w.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::parse(s, e.to_string()))?;
        WeightedTree::new(shape.parse()?, weights)
    }
}

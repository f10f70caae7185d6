use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::combinat::compositions;
use crate::compose::Composed;
use crate::error::{Error, Result};
use crate::trees::Comb;

/// A comb with a comb grafted on each leaf, recorded by the leaf weights
/// `(a_1, …, a_k)`: the base comb has `k − 1` nodes and leaf `i` carries a
/// comb with `a_i − 1` nodes. Literal `[3,2,1,4]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositionTree(Vec<usize>);

impl CompositionTree {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Parse {
                literal: format!("{parts:?}"),
                reason: "a composition has at least one part, all positive".into(),
            });
        }
        Ok(CompositionTree(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Total degree: one less than the sum of the parts.
    pub fn degree(&self) -> usize {
        self.0.iter().sum::<usize>() - 1
    }

    pub fn to_composed(&self) -> Composed<Comb, Comb> {
        Composed::new(Comb(self.0.len() - 1), self.0.iter().map(|&a| Comb(a - 1)).collect())
    }

    pub fn from_composed(e: &Composed<Comb, Comb>) -> Result<Self> {
        if e.tops.len() != e.base.0 + 1 {
            return Err(Error::ArityMismatch {
                expected: e.base.0 + 1,
                found: e.tops.len(),
            });
        }
        Ok(CompositionTree(e.tops.iter().map(|c| c.0 + 1).collect()))
    }

    /// All composition trees of total degree `n`, in lexicographic order.
    pub fn enumerate(n: usize) -> Vec<CompositionTree> {
        let mut out: Vec<_> = compositions(n + 1).into_iter().map(CompositionTree).collect();
        out.sort();
        out
    }
}

impl fmt::Display for CompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

impl fmt::Debug for CompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CompositionTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse(s, "expected [a1,...,ak]"))?;
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::parse(s, e.to_string()))?;
        CompositionTree::new(parts).map_err(|_| Error::parse(s, "parts must be positive"))
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::BinaryTree;

/// The unique comb with the given number of nodes.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Comb(pub usize);

impl Comb {
    pub fn degree(self) -> usize {
        self.0
    }

    /// Splitting a comb at leaf `i` gives the combs with `i` and `n - i` nodes.
    pub fn split_at(self, leaf: usize) -> Result<(Comb, Comb)> {
        if leaf > self.0 {
            return Err(Error::LeafOutOfRange { leaf, degree: self.0 });
        }
        Ok((Comb(leaf), Comb(self.0 - leaf)))
    }

    /// Grafting followed by combing only sees the total degree.
    pub fn graft(forest: &[Comb], v: Comb) -> Result<Comb> {
        if forest.len() != v.0 + 1 {
            return Err(Error::ArityMismatch {
                expected: v.0 + 1,
                found: forest.len(),
            });
        }
        Ok(Comb(v.0 + forest.iter().map(|c| c.0).sum::<usize>()))
    }

    /// The comb as a binary tree, all nodes on the right branch.
    pub fn to_tree(self) -> BinaryTree {
        BinaryTree::right_comb(self.0)
    }
}

/// Moves every node to the right branch.
pub fn kappa(t: &BinaryTree) -> Comb {
    Comb(t.degree())
}

impl fmt::Display for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0)
    }
}

impl fmt::Debug for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Comb {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        t.strip_prefix('c')
            .and_then(|d| d.parse::<usize>().ok())
            .map(Comb)
            .ok_or_else(|| Error::parse(s, "expected c<degree>"))
    }
}

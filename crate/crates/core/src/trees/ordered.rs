use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::BinaryTree;

/// A binary tree whose nodes carry a linear extension of the node poset,
/// root maximal. Stored as the gap word, which is a permutation of
/// `1..=n`; the shape is the decreasing tree of that word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTree {
    word: Vec<u32>,
}

/// Pieces of a split ordered tree, still labelled by the original values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedForest {
    pub pieces: Vec<Vec<u32>>,
}

impl OrderedForest {
    pub fn degree(&self) -> usize {
        self.pieces.iter().map(Vec::len).sum()
    }

    /// Each piece re-standardized on its own.
    pub fn standardized(&self) -> Vec<OrderedTree> {
        self.pieces.iter().map(|p| OrderedTree::standardize(p)).collect()
    }
}

impl OrderedTree {
    pub fn empty() -> Self {
        OrderedTree { word: Vec::new() }
    }

    pub fn from_permutation(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(OrderedTree { word })
    }

    /// Replaces distinct values by their ranks.
    pub fn standardize(values: &[u32]) -> Self {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        let word = values
            .iter()
            .map(|v| sorted.binary_search(v).expect("value present") as u32 + 1)
            .collect();
        OrderedTree { word }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    /// Every permutation of `1..=n` in lexicographic order.
    pub fn enumerate(n: usize) -> Vec<OrderedTree> {
        use itertools::Itertools;
        (1..=n as u32)
            .permutations(n)
            .map(|word| OrderedTree { word })
            .collect()
    }

    pub fn shape(&self) -> BinaryTree {
        BinaryTree::decreasing_tree(&self.word)
    }

    pub fn split_at(&self, leaf: usize) -> Result<(OrderedTree, OrderedTree)> {
        if leaf > self.degree() {
            return Err(Error::LeafOutOfRange {
                leaf,
                degree: self.degree(),
            });
        }
        Ok((
            Self::standardize(&self.word[..leaf]),
            Self::standardize(&self.word[leaf..]),
        ))
    }

    /// Cuts at a multiset of leaves, keeping the original labels.
    pub fn split_forest(&self, leaves: &[usize]) -> Result<OrderedForest> {
        let degree = self.degree();
        if let Some(&bad) = leaves.iter().find(|&&l| l > degree) {
            return Err(Error::LeafOutOfRange { leaf: bad, degree });
        }
        let mut cuts = leaves.to_vec();
        cuts.sort_unstable();
        let mut pieces = Vec::with_capacity(cuts.len() + 1);
        let mut start = 0;
        for c in cuts {
            pieces.push(self.word[start..c].to_vec());
            start = c;
        }
        pieces.push(self.word[start..].to_vec());
        Ok(OrderedForest { pieces })
    }

    /// Standardized pieces of [`split_forest`](Self::split_forest).
    pub fn split_multi(&self, leaves: &[usize]) -> Result<Vec<OrderedTree>> {
        Ok(self.split_forest(leaves)?.standardized())
    }

    /// Raises the labels of `v` above those of the forest, then attaches
    /// piece `i` at leaf `i` of `v`.
    pub fn graft(forest: &OrderedForest, v: &OrderedTree) -> Result<OrderedTree> {
        let expected = v.degree() + 1;
        if forest.pieces.len() != expected {
            return Err(Error::ArityMismatch {
                expected,
                found: forest.pieces.len(),
            });
        }
        let shift = forest.degree() as u32;
        let mut word = Vec::with_capacity(forest.degree() + v.degree());
        for (i, piece) in forest.pieces.iter().enumerate() {
            word.extend_from_slice(piece);
            if let Some(&x) = v.word.get(i) {
                word.push(x + shift);
            }
        }
        // re-standardize in case the forest labels were not exactly 1..m
        Ok(Self::standardize(&word))
    }
}

/// The shape map, forgetting the node order.
pub fn tau(w: &OrderedTree) -> BinaryTree {
    w.shape()
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str(".");
        }
        let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedTree({self})")
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "." {
            return Ok(Self::empty());
        }
        let word = s
            .split_whitespace()
            .map(|t| t.parse::<u32>().map_err(|e| Error::parse(s, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if word.is_empty() {
            return Err(Error::parse(s, "empty permutation; write '.'"));
        }
        Self::from_permutation(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> OrderedTree {
        s.parse().unwrap()
    }

    #[test]
    fn literals() {
        assert_eq!(w("2 5 1 4 3").word(), &[2, 5, 1, 4, 3]);
        assert_eq!(w(".").degree(), 0);
        assert_eq!(w("2 1").to_string(), "2 1");
        assert!("1 1".parse::<OrderedTree>().is_err());
        assert!("2 3".parse::<OrderedTree>().is_err());
        assert!("a".parse::<OrderedTree>().is_err());
    }

    #[test]
    fn split_restandardizes_each_side() {
        let (a, b) = w("2 5 1 4 3").split_at(3).unwrap();
        assert_eq!(a, w("2 3 1"));
        assert_eq!(b, w("2 1"));
        assert!(w("1").split_at(2).is_err());
    }

    #[test]
    fn grafting_display() {
        let forest = OrderedForest {
            pieces: vec![vec![3, 2], vec![], vec![7, 5, 1], vec![6], vec![4]],
        };
        let g = OrderedTree::graft(&forest, &w("1 4 3 2")).unwrap();
        assert_eq!(g, w("3 2 8 11 7 5 1 10 6 9 4"));
    }

    #[test]
    fn shapes_of_small_permutations() {
        assert_ne!(w("2 1").shape(), w("1 2").shape());
        assert_eq!(w("1").shape(), BinaryTree::one_node());
    }

    #[test]
    fn shape_is_compatible_with_splitting() {
        for n in 0..6 {
            for p in OrderedTree::enumerate(n) {
                for i in 0..=n {
                    let (a, b) = p.split_at(i).unwrap();
                    let (ta, tb) = p.shape().split_at(i).unwrap();
                    assert_eq!((a.shape(), b.shape()), (ta, tb), "{p} at {i}");
                }
            }
        }
    }

    #[test]
    fn tau_fibres_cover_all_permutations() {
        use std::collections::BTreeMap;
        for n in 0..7 {
            let mut fibres: BTreeMap<BinaryTree, usize> = BTreeMap::new();
            for p in OrderedTree::enumerate(n) {
                *fibres.entry(tau(&p)).or_default() += 1;
            }
            assert_eq!(fibres.len(), BinaryTree::enumerate(n).len());
            let total: usize = fibres.values().sum();
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A planar rooted binary tree. Leaves are numbered `0..=degree` from left
/// to right, and internal nodes sit in the gaps between consecutive leaves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn leaf() -> Self {
        BinaryTree::Leaf
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// The tree with a single internal node.
    pub fn one_node() -> Self {
        Self::node(Self::Leaf, Self::Leaf)
    }

    /// The comb with every node on the right branch, the image of combs
    /// under the inclusion into binary trees.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(Self::Leaf, |acc, _| Self::node(Self::Leaf, acc))
    }

    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(Self::Leaf, |acc, _| Self::node(acc, Self::Leaf))
    }

    /// Number of internal nodes.
    pub fn degree(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => 1 + l.degree() + r.degree(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Leaf => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    /// Splits along the path from leaf `leaf` to the root. Path nodes whose
    /// gap lies left of the leaf go to the left piece, the others go right.
    pub fn split_at(&self, leaf: usize) -> Result<(BinaryTree, BinaryTree)> {
        let degree = self.degree();
        if leaf > degree {
            return Err(Error::LeafOutOfRange { leaf, degree });
        }
        Ok(self.split_unchecked(leaf))
    }

    fn split_unchecked(&self, leaf: usize) -> (BinaryTree, BinaryTree) {
        match self {
            BinaryTree::Leaf => (BinaryTree::Leaf, BinaryTree::Leaf),
            BinaryTree::Node(l, r) => {
                let k = l.degree();
                if leaf <= k {
                    let (l0, l1) = l.split_unchecked(leaf);
                    (l0, BinaryTree::node(l1, (**r).clone()))
                } else {
                    let (r0, r1) = r.split_unchecked(leaf - k - 1);
                    (BinaryTree::node((**l).clone(), r0), r1)
                }
            }
        }
    }

    /// Splits at a multiset of leaves, giving `leaves.len() + 1` trees.
    /// Repeated leaves produce empty trees between the cuts.
    pub fn split_multi(&self, leaves: &[usize]) -> Result<Vec<BinaryTree>> {
        let degree = self.degree();
        if let Some(&bad) = leaves.iter().find(|&&l| l > degree) {
            return Err(Error::LeafOutOfRange { leaf: bad, degree });
        }
        let mut sorted = leaves.to_vec();
        sorted.sort_unstable();
        let mut forest = Vec::with_capacity(sorted.len() + 1);
        let mut rest = self.clone();
        let mut consumed = 0;
        for leaf in sorted {
            let (piece, tail) = rest.split_unchecked(leaf - consumed);
            consumed += piece.degree();
            forest.push(piece);
            rest = tail;
        }
        forest.push(rest);
        Ok(forest)
    }

    /// Attaches `forest[i]` to leaf `i` of `self`.
    pub fn graft(forest: &[BinaryTree], base: &BinaryTree) -> Result<BinaryTree> {
        let expected = base.degree() + 1;
        if forest.len() != expected {
            return Err(Error::ArityMismatch {
                expected,
                found: forest.len(),
            });
        }
        let mut it = forest.iter();
        Ok(base.graft_with(&mut it))
    }

    fn graft_with<'a>(&self, forest: &mut impl Iterator<Item = &'a BinaryTree>) -> BinaryTree {
        match self {
            BinaryTree::Leaf => forest.next().cloned().unwrap_or(BinaryTree::Leaf),
            BinaryTree::Node(l, r) => {
                let l = l.graft_with(forest);
                let r = r.graft_with(forest);
                BinaryTree::node(l, r)
            }
        }
    }

    /// All trees with `n` internal nodes, in canonical order.
    pub fn enumerate(n: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
        for m in 1..=n {
            let mut level = Vec::new();
            for k in 0..m {
                for l in &table[k] {
                    for r in &table[m - 1 - k] {
                        level.push(BinaryTree::node(l.clone(), r.clone()));
                    }
                }
            }
            level.sort();
            table.push(level);
        }
        table.swap_remove(n)
    }

    /// The decreasing tree of a word of distinct values: the maximum is the
    /// root, the prefix and suffix around it give the two subtrees.
    pub fn decreasing_tree(word: &[u32]) -> BinaryTree {
        match word.iter().enumerate().max_by_key(|(_, v)| **v) {
            None => BinaryTree::Leaf,
            Some((i, _)) => BinaryTree::node(Self::decreasing_tree(&word[..i]), Self::decreasing_tree(&word[i + 1..])),
        }
    }

    /// No node besides the root sits on the right branch from the root.
    pub fn is_progressive(&self) -> bool {
        matches!(self, BinaryTree::Node(_, r) if r.is_leaf())
    }

    /// Factors along the right branch: `Node(L1, Node(L2, …))` gives the
    /// progressive pieces `Node(L1, |)`, `Node(L2, |)`, ….
    pub fn right_branch_factors(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        let mut cur = self;
        while let BinaryTree::Node(l, r) = cur {
            out.push(BinaryTree::node((**l).clone(), BinaryTree::Leaf));
            cur = r;
        }
        out
    }

    /// Inverse of [`right_branch_factors`](Self::right_branch_factors):
    /// stacks each tree onto the rightmost leaf of the previous one.
    pub fn join_right_branch(factors: &[BinaryTree]) -> BinaryTree {
        factors
            .iter()
            .rev()
            .fold(BinaryTree::Leaf, |acc, f| f.attach_at_rightmost(acc))
    }

    fn attach_at_rightmost(&self, t: BinaryTree) -> BinaryTree {
        match self {
            BinaryTree::Leaf => t,
            BinaryTree::Node(l, r) => BinaryTree::node((**l).clone(), r.attach_at_rightmost(t)),
        }
    }

    /// Trees covering `self` in the Tamari order: a left child moves to
    /// the right branch, `((A B) C) → (A (B C))` at any node.
    pub fn tamari_covers(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        if let BinaryTree::Node(l, r) = self {
            if let BinaryTree::Node(a, b) = &**l {
                out.push(BinaryTree::node(
                    (**a).clone(),
                    BinaryTree::node((**b).clone(), (**r).clone()),
                ));
            }
            for l2 in l.tamari_covers() {
                out.push(BinaryTree::node(l2, (**r).clone()));
            }
            for r2 in r.tamari_covers() {
                out.push(BinaryTree::node((**l).clone(), r2));
            }
        }
        out
    }

    /// Σ over nodes of the size of the left subtree; strictly decreases
    /// along Tamari covers.
    pub(crate) fn left_weight(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => l.degree() + l.left_weight() + r.left_weight(),
        }
    }

    fn write_literal(&self, out: &mut String) {
        match self {
            BinaryTree::Leaf => out.push('.'),
            BinaryTree::Node(l, r) => {
                out.push('(');
                l.write_literal(out);
                out.push(' ');
                r.write_literal(out);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_literal(&mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let tree = parse_tree(bytes, &mut pos).map_err(|reason| Error::parse(s, reason))?;
        if pos != bytes.len() {
            return Err(Error::parse(s, "trailing characters"));
        }
        Ok(tree)
    }
}

fn parse_tree(b: &[u8], pos: &mut usize) -> std::result::Result<BinaryTree, String> {
    match b.get(*pos) {
        Some(b'.') => {
            *pos += 1;
            Ok(BinaryTree::Leaf)
        }
        Some(b'(') => {
            *pos += 1;
            let l = parse_tree(b, pos)?;
            if b.get(*pos) != Some(&b' ') {
                return Err(format!("expected a single space at byte {}", *pos));
            }
            *pos += 1;
            let r = parse_tree(b, pos)?;
            if b.get(*pos) != Some(&b')') {
                return Err(format!("expected ')' at byte {}", *pos));
            }
            *pos += 1;
            Ok(BinaryTree::node(l, r))
        }
        Some(c) => Err(format!("unexpected {:?} at byte {}", *c as char, *pos)),
        None => Err("unexpected end of input".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn literal_round_trip() {
        for n in 0..5 {
            for tree in BinaryTree::enumerate(n) {
                assert_eq!(t(&tree.to_string()), tree);
            }
        }
        assert_eq!(t("((. .) .)").degree(), 2);
        assert!("(. .".parse::<BinaryTree>().is_err());
        assert!("(.  .)".parse::<BinaryTree>().is_err());
        assert!(". .".parse::<BinaryTree>().is_err());
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..8).map(|n| BinaryTree::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn splitting_the_one_node_tree() {
        let one = BinaryTree::one_node();
        assert_eq!(one.split_at(0).unwrap(), (BinaryTree::Leaf, one.clone()));
        assert_eq!(one.split_at(1).unwrap(), (one.clone(), BinaryTree::Leaf));
        assert_eq!(one.split_at(2), Err(Error::LeafOutOfRange { leaf: 2, degree: 1 }));
    }

    #[test]
    fn splittings_have_complementary_degrees() {
        for n in 0..6 {
            for tree in BinaryTree::enumerate(n) {
                for i in 0..=n {
                    let (a, b) = tree.split_at(i).unwrap();
                    assert_eq!(a.degree(), i);
                    assert_eq!(b.degree(), n - i);
                }
            }
        }
    }

    #[test]
    fn split_multi_edge_cases() {
        let one = BinaryTree::one_node();
        assert_eq!(one.split_multi(&[]).unwrap(), vec![one.clone()]);
        assert_eq!(
            one.split_multi(&[0, 0]).unwrap(),
            vec![BinaryTree::Leaf, BinaryTree::Leaf, one.clone()]
        );
        assert!(one.split_multi(&[0, 3]).is_err());
        // unsorted input is accepted
        let tree = t("((. .) (. .))");
        assert_eq!(tree.split_multi(&[3, 1]).unwrap(), tree.split_multi(&[1, 3]).unwrap());
    }

    #[test]
    fn split_multi_matches_iterated_split() {
        for tree in BinaryTree::enumerate(4) {
            for a in 0..=4 {
                for b in a..=4 {
                    let forest = tree.split_multi(&[a, b]).unwrap();
                    let (p0, rest) = tree.split_at(a).unwrap();
                    let (p1, p2) = rest.split_at(b - a).unwrap();
                    assert_eq!(forest, vec![p0, p1, p2]);
                }
            }
        }
    }

    #[test]
    fn graft_identities() {
        let v = t("(. (. .))");
        let empties = vec![BinaryTree::Leaf; 3];
        assert_eq!(BinaryTree::graft(&empties, &v).unwrap(), v);
        assert!(BinaryTree::graft(&empties[..2], &v).is_err());
        let g = BinaryTree::graft(&[BinaryTree::one_node(), BinaryTree::Leaf], &BinaryTree::one_node()).unwrap();
        assert_eq!(g, t("((. .) .)"));
    }

    #[test]
    fn graft_after_split_has_additive_degree() {
        for tree in BinaryTree::enumerate(3) {
            for v in BinaryTree::enumerate(2) {
                for a in 0..=3 {
                    for b in a..=3 {
                        let forest = tree.split_multi(&[a, b]).unwrap();
                        let g = BinaryTree::graft(&forest, &v).unwrap();
                        assert_eq!(g.degree(), 5);
                    }
                }
            }
        }
    }

    #[test]
    fn decreasing_trees() {
        assert_eq!(BinaryTree::decreasing_tree(&[1]), BinaryTree::one_node());
        assert_eq!(BinaryTree::decreasing_tree(&[2, 1]), t("(. (. .))"));
        assert_eq!(BinaryTree::decreasing_tree(&[1, 2]), t("((. .) .)"));
        assert_eq!(BinaryTree::decreasing_tree(&[2, 1, 3]), t("((. (. .)) .)"));
    }

    #[test]
    fn progressive_trees() {
        assert!(BinaryTree::one_node().is_progressive());
        assert!(!BinaryTree::Leaf.is_progressive());
        for n in 2..6 {
            assert!(!BinaryTree::right_comb(n).is_progressive());
            assert!(BinaryTree::left_comb(n).is_progressive());
        }
        // progressive trees of degree n are counted by Catalan(n-1)
        let counts: Vec<usize> = (1..7)
            .map(|n| BinaryTree::enumerate(n).iter().filter(|t| t.is_progressive()).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
    }

    #[test]
    fn right_branch_factorisation_round_trips() {
        for n in 0..6 {
            for tree in BinaryTree::enumerate(n) {
                let factors = tree.right_branch_factors();
                assert!(factors.iter().all(BinaryTree::is_progressive));
                assert_eq!(BinaryTree::join_right_branch(&factors), tree);
            }
        }
    }

    #[test]
    fn covers_decrease_left_weight() {
        for n in 0..6 {
            for tree in BinaryTree::enumerate(n) {
                for c in tree.tamari_covers() {
                    assert_eq!(c.degree(), n);
                    assert!(c.left_weight() < tree.left_weight());
                }
            }
        }
        assert!(BinaryTree::right_comb(4).tamari_covers().is_empty());
        assert_eq!(BinaryTree::left_comb(3).tamari_covers().len(), 2);
    }
}

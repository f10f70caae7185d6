//! Painted trees and bi-leveled trees as binary trees with marked nodes.
//!
//! A painted tree `(base; tops)` is the graft of the forest `tops` onto
//! `base`, with the nodes of `base` painted. A bi-leveled tree is a tree
//! with an upper ideal that contains the leftmost node but neither of its
//! children. The two families correspond by inserting (or pruning) the
//! leftmost node.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::BinaryTree;

/// A binary tree whose nodes are painted or not. Literal: `.` for a leaf,
/// `[L R]` for a painted node, `(L R)` for an unpainted one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MarkedTree {
    Leaf,
    Node(bool, Box<MarkedTree>, Box<MarkedTree>),
}

impl MarkedTree {
    fn node(painted: bool, l: MarkedTree, r: MarkedTree) -> Self {
        MarkedTree::Node(painted, Box::new(l), Box::new(r))
    }

    fn unpainted(t: &BinaryTree) -> Self {
        match t {
            BinaryTree::Leaf => MarkedTree::Leaf,
            BinaryTree::Node(l, r) => Self::node(false, Self::unpainted(l), Self::unpainted(r)),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            MarkedTree::Leaf => 0,
            MarkedTree::Node(_, l, r) => 1 + l.degree() + r.degree(),
        }
    }

    pub fn shape(&self) -> BinaryTree {
        match self {
            MarkedTree::Leaf => BinaryTree::Leaf,
            MarkedTree::Node(_, l, r) => BinaryTree::node(l.shape(), r.shape()),
        }
    }

    fn is_painted_node(&self) -> bool {
        matches!(self, MarkedTree::Node(true, _, _))
    }

    /// In-order positions of the painted nodes.
    pub fn painted_positions(&self) -> BTreeSet<usize> {
        fn walk(t: &MarkedTree, next: &mut usize, out: &mut BTreeSet<usize>) {
            if let MarkedTree::Node(p, l, r) = t {
                walk(l, next, out);
                if *p {
                    out.insert(*next);
                }
                *next += 1;
                walk(r, next, out);
            }
        }
        let mut out = BTreeSet::new();
        walk(self, &mut 0, &mut out);
        out
    }

    /// Paints the nodes at the given in-order positions.
    pub fn with_positions(shape: &BinaryTree, painted: &BTreeSet<usize>) -> Self {
        fn walk(t: &BinaryTree, next: &mut usize, painted: &BTreeSet<usize>) -> MarkedTree {
            match t {
                BinaryTree::Leaf => MarkedTree::Leaf,
                BinaryTree::Node(l, r) => {
                    let l = walk(l, next, painted);
                    let p = painted.contains(next);
                    *next += 1;
                    let r = walk(r, next, painted);
                    MarkedTree::node(p, l, r)
                }
            }
        }
        walk(shape, &mut 0, painted)
    }

    /// Every painted node has a painted parent.
    pub fn is_upper_ideal(&self) -> bool {
        fn ok(t: &MarkedTree, parent_painted: bool) -> bool {
            match t {
                MarkedTree::Leaf => true,
                MarkedTree::Node(p, l, r) => (!*p || parent_painted) && ok(l, *p) && ok(r, *p),
            }
        }
        ok(self, true)
    }

    /// The painted tree `(base; tops)` drawn as one marked tree.
    pub fn from_painted(base: &BinaryTree, tops: &[BinaryTree]) -> Result<Self> {
        if tops.len() != base.degree() + 1 {
            return Err(Error::ArityMismatch {
                expected: base.degree() + 1,
                found: tops.len(),
            });
        }
        fn walk<'a>(b: &BinaryTree, tops: &mut impl Iterator<Item = &'a BinaryTree>) -> MarkedTree {
            match b {
                BinaryTree::Leaf => MarkedTree::unpainted(tops.next().expect("arity checked")),
                BinaryTree::Node(l, r) => {
                    let l = walk(l, tops);
                    let r = walk(r, tops);
                    MarkedTree::node(true, l, r)
                }
            }
        }
        Ok(walk(base, &mut tops.iter()))
    }

    /// Splits into the painted part and the forest hanging from its leaves.
    pub fn to_painted(&self) -> Result<(BinaryTree, Vec<BinaryTree>)> {
        if !self.is_upper_ideal() {
            return Err(Error::InvalidIdeal(format!("{self} is not painted from the root")));
        }
        fn walk(t: &MarkedTree, tops: &mut Vec<BinaryTree>) -> BinaryTree {
            match t {
                MarkedTree::Node(true, l, r) => {
                    let l = walk(l, tops);
                    let r = walk(r, tops);
                    BinaryTree::node(l, r)
                }
                other => {
                    tops.push(other.shape());
                    BinaryTree::Leaf
                }
            }
        }
        let mut tops = Vec::new();
        let base = walk(self, &mut tops);
        Ok((base, tops))
    }

    /// All painted trees with `n` nodes in total: every tree with every
    /// upper ideal.
    pub fn enumerate_painted(n: usize) -> Vec<MarkedTree> {
        fn ideals(t: &BinaryTree) -> Vec<MarkedTree> {
            match t {
                BinaryTree::Leaf => vec![MarkedTree::Leaf],
                BinaryTree::Node(l, r) => {
                    let mut out = vec![MarkedTree::unpainted(t)];
                    let rs = ideals(r);
                    for a in ideals(l) {
                        for b in &rs {
                            out.push(MarkedTree::node(true, a.clone(), b.clone()));
                        }
                    }
                    out
                }
            }
        }
        let mut out: Vec<MarkedTree> = BinaryTree::enumerate(n).iter().flat_map(ideals).collect();
        out.sort();
        out
    }

    /// Adds the new leftmost node below the lowest painted node of the
    /// left branch, or above the root when nothing is painted.
    pub fn painted_to_bileveled(&self) -> Result<BiLeveledTree> {
        if !self.is_upper_ideal() {
            return Err(Error::InvalidIdeal(format!("{self} is not painted from the root")));
        }
        fn insert(t: &MarkedTree) -> MarkedTree {
            match t {
                MarkedTree::Node(true, l, r) => {
                    let l = if l.is_painted_node() {
                        insert(l)
                    } else {
                        MarkedTree::node(true, MarkedTree::Leaf, (**l).clone())
                    };
                    MarkedTree::node(true, l, (**r).clone())
                }
                other => MarkedTree::node(true, MarkedTree::Leaf, other.clone()),
            }
        }
        BiLeveledTree::from_marked(&insert(self))
    }
}

impl fmt::Display for MarkedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MarkedTree::Leaf => f.write_str("."),
            MarkedTree::Node(true, l, r) => write!(f, "[{l} {r}]"),
            MarkedTree::Node(false, l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl fmt::Debug for MarkedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MarkedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn parse(b: &[u8], pos: &mut usize) -> std::result::Result<MarkedTree, String> {
            let close = match b.get(*pos) {
                Some(b'.') => {
                    *pos += 1;
                    return Ok(MarkedTree::Leaf);
                }
                Some(b'(') => b')',
                Some(b'[') => b']',
                Some(c) => return Err(format!("unexpected {:?} at byte {}", *c as char, *pos)),
                None => return Err("unexpected end of input".into()),
            };
            *pos += 1;
            let l = parse(b, pos)?;
            if b.get(*pos) != Some(&b' ') {
                return Err(format!("expected a single space at byte {}", *pos));
            }
            *pos += 1;
            let r = parse(b, pos)?;
            if b.get(*pos) != Some(&close) {
                return Err(format!("expected {:?} at byte {}", close as char, *pos));
            }
            *pos += 1;
            Ok(MarkedTree::node(close == b']', l, r))
        }
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let t = parse(bytes, &mut pos).map_err(|r| Error::parse(s, r))?;
        if pos != bytes.len() {
            return Err(Error::parse(s, "trailing characters"));
        }
        Ok(t)
    }
}

/// A tree with an upper ideal containing the leftmost node but neither of
/// its children. Node positions are in-order indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BiLeveledTree {
    pub shape: BinaryTree,
    pub ideal: BTreeSet<usize>,
}

impl BiLeveledTree {
    pub fn new(shape: BinaryTree, ideal: BTreeSet<usize>) -> Result<Self> {
        Self::from_marked(&MarkedTree::with_positions(&shape, &ideal)).and_then(|b| {
            if b.ideal == ideal {
                Ok(b)
            } else {
                Err(Error::InvalidIdeal(format!("{ideal:?} names missing nodes")))
            }
        })
    }

    pub fn from_marked(t: &MarkedTree) -> Result<Self> {
        let MarkedTree::Node(..) = t else {
            return Err(Error::EmptyBiLeveled);
        };
        if !t.is_upper_ideal() {
            return Err(Error::InvalidIdeal(format!("{t} is not an upper ideal")));
        }
        let mut cur = t;
        while let MarkedTree::Node(_, l, _) = cur {
            if l.is_leaf() {
                break;
            }
            cur = l;
        }
        let MarkedTree::Node(painted, _, r) = cur else {
            unreachable!("walk stops at a node")
        };
        if !*painted {
            return Err(Error::InvalidIdeal(format!("{t}: leftmost node is not in the ideal")));
        }
        if r.is_painted_node() {
            return Err(Error::InvalidIdeal(format!(
                "{t}: a child of the leftmost node is in the ideal"
            )));
        }
        Ok(BiLeveledTree {
            shape: t.shape(),
            ideal: t.painted_positions(),
        })
    }

    pub fn marked(&self) -> MarkedTree {
        MarkedTree::with_positions(&self.shape, &self.ideal)
    }

    pub fn degree(&self) -> usize {
        self.shape.degree()
    }

    /// Removes the leftmost node and its leaf.
    pub fn to_painted(&self) -> MarkedTree {
        fn prune(t: &MarkedTree) -> MarkedTree {
            match t {
                MarkedTree::Node(p, l, r) => {
                    if l.is_leaf() {
                        (**r).clone()
                    } else {
                        MarkedTree::node(*p, prune(l), (**r).clone())
                    }
                }
                MarkedTree::Leaf => MarkedTree::Leaf,
            }
        }
        prune(&self.marked())
    }

    /// All bi-leveled trees with `n` nodes.
    pub fn enumerate(n: usize) -> Vec<BiLeveledTree> {
        if n == 0 {
            return Vec::new();
        }
        let mut out: Vec<BiLeveledTree> = MarkedTree::enumerate_painted(n)
            .iter()
            .filter_map(|t| Self::from_marked(t).ok())
            .collect();
        out.sort();
        out
    }
}

impl MarkedTree {
    fn is_leaf(&self) -> bool {
        matches!(self, MarkedTree::Leaf)
    }
}

impl fmt::Display for BiLeveledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.marked(), f)
    }
}

impl FromStr for BiLeveledTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_marked(&s.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MarkedTree {
        s.parse().unwrap()
    }

    #[test]
    fn marked_literals() {
        for s in [".", "[. .]", "(. .)", "[(. .) [. .]]"] {
            assert_eq!(m(s).to_string(), s);
        }
        assert!("[. .)".parse::<MarkedTree>().is_err());
    }

    #[test]
    fn painted_counts() {
        let counts: Vec<usize> = (0..6).map(|n| MarkedTree::enumerate_painted(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 6, 21, 80, 322]);
    }

    #[test]
    fn smallest_case() {
        let b = m("(. .)").painted_to_bileveled().unwrap();
        assert_eq!(b.to_string(), "[. (. .)]");
        assert_eq!(b.ideal, BTreeSet::from([0]));
        assert_eq!(b.to_painted(), m("(. .)"));
        let b = m(".").painted_to_bileveled().unwrap();
        assert_eq!(b.to_string(), "[. .]");
    }

    #[test]
    fn validation() {
        assert_eq!(
            BiLeveledTree::from_marked(&MarkedTree::Leaf),
            Err(Error::EmptyBiLeveled)
        );
        assert!("(. .)".parse::<BiLeveledTree>().is_err());
        assert!("[. [. .]]".parse::<BiLeveledTree>().is_err());
        assert!("([. .] .)".parse::<BiLeveledTree>().is_err());
        assert!("[[. .] .]".parse::<BiLeveledTree>().is_ok());
        assert!(BiLeveledTree::new(BinaryTree::one_node(), BTreeSet::from([0, 4])).is_err());
    }

    #[test]
    fn bijection_with_painted_trees() {
        for n in 0..6 {
            let painted = MarkedTree::enumerate_painted(n);
            let bileveled = BiLeveledTree::enumerate(n + 1);
            assert_eq!(painted.len(), bileveled.len());
            let mut images: Vec<BiLeveledTree> = painted
                .iter()
                .map(|p| {
                    let b = p.painted_to_bileveled().unwrap();
                    assert_eq!(b.degree(), n + 1);
                    assert_eq!(&b.to_painted(), p);
                    b
                })
                .collect();
            images.sort();
            assert_eq!(images, bileveled);
        }
    }

    #[test]
    fn painted_forms_round_trip() {
        for n in 0..5 {
            for p in MarkedTree::enumerate_painted(n) {
                let (base, tops) = p.to_painted().unwrap();
                assert_eq!(MarkedTree::from_painted(&base, &tops).unwrap(), p);
            }
        }
    }
}

//! The Tamari order on trees of a fixed degree and its Möbius function.
//!
//! Covers are right rotations. Every cover lowers
//! [`BinaryTree::left_weight`], so sorting by that statistic is a linear
//! extension and up-sets can be built in one pass. Posets are built once
//! per degree and shared; Möbius rows are filled lazily.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::BinaryTree;

pub struct TamariPoset {
    degree: usize,
    trees: Vec<BinaryTree>,
    index: HashMap<BinaryTree, usize>,
    /// `up[i]` is a bitset of all `j` with `trees[i] ≤ trees[j]`.
    up: Vec<Vec<u64>>,
    weight: Vec<usize>,
    mobius_rows: Vec<OnceLock<Vec<(usize, i64)>>>,
}

#[derive(Serialize, Deserialize)]
struct StoredPoset {
    degree: usize,
    trees: Vec<String>,
    up: Vec<Vec<u64>>,
}

fn registry() -> &'static Mutex<HashMap<usize, Arc<TamariPoset>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<usize, Arc<TamariPoset>>>> = OnceLock::new();
    REGISTRY.get_or_init(Default::default)
}

fn cache_dir() -> &'static Mutex<Option<PathBuf>> {
    static DIR: OnceLock<Mutex<Option<PathBuf>>> = OnceLock::new();
    DIR.get_or_init(Default::default)
}

/// Enables on-disk persistence of the order relations. Off by default.
pub fn set_cache_dir(dir: Option<PathBuf>) {
    *cache_dir().lock().expect("cache dir lock") = dir;
}

impl TamariPoset {
    /// The shared poset on trees with `n` nodes.
    pub fn of_degree(n: usize) -> Arc<TamariPoset> {
        let mut reg = registry().lock().expect("tamari registry lock");
        if let Some(p) = reg.get(&n) {
            return Arc::clone(p);
        }
        let dir = cache_dir().lock().expect("cache dir lock").clone();
        let poset = Arc::new(dir.as_deref().and_then(|d| Self::load(d, n)).unwrap_or_else(|| {
            let p = Self::build(n);
            if let Some(d) = dir.as_deref() {
                p.store(d);
            }
            p
        }));
        reg.insert(n, Arc::clone(&poset));
        poset
    }

    fn assemble(degree: usize, trees: Vec<BinaryTree>, up: Vec<Vec<u64>>) -> Self {
        let index = trees.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let weight = trees.iter().map(BinaryTree::left_weight).collect();
        let mobius_rows = (0..trees.len()).map(|_| OnceLock::new()).collect();
        TamariPoset {
            degree,
            trees,
            index,
            up,
            weight,
            mobius_rows,
        }
    }

    fn build(n: usize) -> Self {
        let trees = BinaryTree::enumerate(n);
        let index: HashMap<&BinaryTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let words = trees.len().div_ceil(64);
        let mut up = vec![vec![0u64; words]; trees.len()];
        let mut order: Vec<usize> = (0..trees.len()).collect();
        order.sort_by_key(|&i| trees[i].left_weight());
        for &i in &order {
            let mut set = vec![0u64; words];
            set[i / 64] |= 1 << (i % 64);
            for c in trees[i].tamari_covers() {
                let j = index[&c];
                for (a, b) in set.iter_mut().zip(&up[j]) {
                    *a |= b;
                }
            }
            up[i] = set;
        }
        Self::assemble(n, trees, up)
    }

    fn cache_file(dir: &Path, n: usize) -> PathBuf {
        dir.join(format!("tamari-{n}.json"))
    }

    fn load(dir: &Path, n: usize) -> Option<Self> {
        let text = std::fs::read_to_string(Self::cache_file(dir, n)).ok()?;
        let stored: StoredPoset = serde_json::from_str(&text).ok()?;
        let trees: Vec<BinaryTree> = stored.trees.iter().map(|s| s.parse()).collect::<Result<_>>().ok()?;
        if stored.degree != n || trees != BinaryTree::enumerate(n) || stored.up.len() != trees.len() {
            return None;
        }
        Some(Self::assemble(n, trees, stored.up))
    }

    fn store(&self, dir: &Path) {
        let stored = StoredPoset {
            degree: self.degree,
            trees: self.trees.iter().map(ToString::to_string).collect(),
            up: self.up.clone(),
        };
        // persistence is best effort; a failed write only loses the cache
        if std::fs::create_dir_all(dir).is_ok() {
            if let Ok(text) = serde_json::to_string(&stored) {
                let _ = std::fs::write(Self::cache_file(dir, self.degree), text);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn trees(&self) -> &[BinaryTree] {
        &self.trees
    }

    pub fn index_of(&self, t: &BinaryTree) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn leq_index(&self, i: usize, j: usize) -> bool {
        self.up[i][j / 64] >> (j % 64) & 1 == 1
    }

    fn indices(&self, s: &BinaryTree, t: &BinaryTree) -> Result<(usize, usize)> {
        let find = |x: &BinaryTree| {
            self.index_of(x).ok_or_else(|| {
                Error::DegreeMismatch(format!(
                    "{x} has degree {}, poset has degree {}",
                    x.degree(),
                    self.degree
                ))
            })
        };
        Ok((find(s)?, find(t)?))
    }

    pub fn leq(&self, s: &BinaryTree, t: &BinaryTree) -> Result<bool> {
        let (i, j) = self.indices(s, t)?;
        Ok(self.leq_index(i, j))
    }

    /// Indices of all `s ≥ trees[i]`.
    pub fn up_set(&self, i: usize) -> Vec<usize> {
        (0..self.trees.len()).filter(|&j| self.leq_index(i, j)).collect()
    }

    /// Nonzero values `μ(trees[i], s)` for `s ≥ trees[i]`.
    pub fn mobius_row(&self, i: usize) -> &[(usize, i64)] {
        self.mobius_rows[i].get_or_init(|| {
            let mut ups = self.up_set(i);
            // predecessors first: larger left weight sits lower in the order
            ups.sort_by(|&a, &b| self.weight[b].cmp(&self.weight[a]).then(a.cmp(&b)));
            let mut values: Vec<(usize, i64)> = Vec::with_capacity(ups.len());
            for &r in &ups {
                let mu = if r == i {
                    1
                } else {
                    -values
                        .iter()
                        .filter(|&&(s, _)| s != r && self.leq_index(s, r))
                        .map(|&(_, m)| m)
                        .sum::<i64>()
                };
                values.push((r, mu));
            }
            values.retain(|&(_, m)| m != 0);
            values.sort_unstable();
            values
        })
    }

    pub fn mobius_index(&self, i: usize, j: usize) -> i64 {
        let row = self.mobius_row(i);
        row.binary_search_by_key(&j, |&(s, _)| s).map(|k| row[k].1).unwrap_or(0)
    }

    pub fn mobius(&self, s: &BinaryTree, t: &BinaryTree) -> Result<i64> {
        let (i, j) = self.indices(s, t)?;
        Ok(self.mobius_index(i, j))
    }
}

fn poset_for(s: &BinaryTree, t: &BinaryTree) -> Result<Arc<TamariPoset>> {
    if s.degree() != t.degree() {
        return Err(Error::DegreeMismatch(format!(
            "{s} has degree {}, {t} has degree {}",
            s.degree(),
            t.degree()
        )));
    }
    Ok(TamariPoset::of_degree(s.degree()))
}

pub fn tamari_leq(s: &BinaryTree, t: &BinaryTree) -> Result<bool> {
    poset_for(s, t)?.leq(s, t)
}

pub fn mobius(s: &BinaryTree, t: &BinaryTree) -> Result<i64> {
    poset_for(s, t)?.mobius(s, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn poset_axioms() {
        for n in 0..6 {
            let p = TamariPoset::of_degree(n);
            let m = p.trees().len();
            for i in 0..m {
                assert!(p.leq_index(i, i));
                for j in 0..m {
                    if i != j && p.leq_index(i, j) {
                        assert!(!p.leq_index(j, i));
                    }
                    for k in 0..m {
                        if p.leq_index(i, j) && p.leq_index(j, k) {
                            assert!(p.leq_index(i, k));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn combs_are_the_extremes() {
        for n in 0..6 {
            let p = TamariPoset::of_degree(n);
            let lo = p.index_of(&BinaryTree::left_comb(n)).unwrap();
            let hi = p.index_of(&BinaryTree::right_comb(n)).unwrap();
            for j in 0..p.trees().len() {
                assert!(p.leq_index(lo, j));
                assert!(p.leq_index(j, hi));
            }
        }
    }

    #[test]
    fn mobius_recursion() {
        for n in 0..6 {
            let p = TamariPoset::of_degree(n);
            let m = p.trees().len();
            for i in 0..m {
                assert_eq!(p.mobius_index(i, i), 1);
                for r in 0..m {
                    if !p.leq_index(i, r) {
                        assert_eq!(p.mobius_index(i, r), 0);
                    } else if r != i {
                        let sum: i64 = (0..m)
                            .filter(|&s| p.leq_index(i, s) && p.leq_index(s, r))
                            .map(|s| p.mobius_index(i, s))
                            .sum();
                        assert_eq!(sum, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn pentagon() {
        // two atoms at -1, the coatom on the long side at 0, so the top gets +1
        let p = TamariPoset::of_degree(3);
        let lo = BinaryTree::left_comb(3);
        let hi = BinaryTree::right_comb(3);
        assert_eq!(p.mobius(&lo, &hi).unwrap(), 1);
        assert_eq!(p.trees().len(), 5);
        let atoms = lo.tamari_covers();
        assert_eq!(atoms.len(), 2);
        for a in &atoms {
            assert_eq!(p.mobius(&lo, a).unwrap(), -1);
        }
    }

    #[test]
    fn degree_mismatch() {
        assert!(matches!(
            tamari_leq(&BinaryTree::Leaf, &BinaryTree::one_node()),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(mobius(&t("(. .)"), &t("((. .) .)")).is_err());
    }

    #[test]
    fn persisted_poset_round_trips() {
        let dir = std::env::temp_dir().join(format!("tamari-cache-{}", std::process::id()));
        let built = TamariPoset::build(4);
        built.store(&dir);
        let loaded = TamariPoset::load(&dir, 4).unwrap();
        assert_eq!(loaded.trees(), built.trees());
        assert_eq!(loaded.up, built.up);
        assert!(TamariPoset::load(&dir, 3).is_none());
        let _ = std::fs::remove_dir_all(dir);
    }
}

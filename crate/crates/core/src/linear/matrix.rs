use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinearCombination;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
///
/// Every intermediate entry is a minor of the input, so the divisions are
/// exact and no rationals appear.
pub fn integer_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    for r in rows.iter_mut() {
        r.resize(ncols, BigInt::zero());
    }
    let nrows = rows.len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        let (top, rest) = rows.split_at_mut(rank + 1);
        for row in rest {
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&top[rank]) {
                *x = (&pivot * &*x - &factor * p) / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Rank of the span of a family of combinations.
pub fn rank_of<B: Ord + Clone>(vectors: &[LinearCombination<B>]) -> usize {
    let mut columns: BTreeMap<&B, usize> = BTreeMap::new();
    for v in vectors {
        for b in v.support() {
            let next = columns.len();
            columns.entry(b).or_insert(next);
        }
    }
    let rows = vectors
        .iter()
        .map(|v| {
            let mut row = vec![BigInt::zero(); columns.len()];
            for (b, c) in v.iter() {
                row[columns[b]] = c.clone();
            }
            row
        })
        .collect();
    integer_rank(rows)
}

/// A basis of `{x : Σ_j rows[i][j] x_j = 0}` as primitive integer vectors,
/// one per free column of the reduced row echelon form. Each vector has a
/// 1-like leading entry at its free column and is scaled so the entries
/// are coprime with the free entry positive.
pub fn integer_kernel(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<BigRational> = r.iter().cloned().map(BigRational::from_integer).collect();
            row.resize(ncols, BigRational::zero());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![BigRational::zero(); ncols];
        v[f] = BigRational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][f].clone();
        }
        let denom = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&denom / x.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if ints[f].is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|x| x / &g * &sign).collect()
    })
    .collect()
}

/// A basis of the combinations of `domain` that `image` sends to zero.
pub fn kernel_of<B: Clone + Ord, C: Ord + Clone>(
    domain: &[B],
    image: impl Fn(&B) -> LinearCombination<C>,
) -> Vec<LinearCombination<B>> {
    let images: Vec<_> = domain.iter().map(image).collect();
    let mut rows_of: BTreeMap<&C, usize> = BTreeMap::new();
    for v in &images {
        for c in v.support() {
            let next = rows_of.len();
            rows_of.entry(c).or_insert(next);
        }
    }
    let mut rows = vec![vec![BigInt::zero(); domain.len()]; rows_of.len()];
    for (j, v) in images.iter().enumerate() {
        for (c, k) in v.iter() {
            rows[rows_of[c]][j] = k.clone();
        }
    }
    integer_kernel(&rows, domain.len())
        .into_iter()
        .map(|v| domain.iter().cloned().zip(v).filter(|(_, k)| !k.is_zero()).collect())
        .collect()
}

//! Small enumeration helpers.

use num_bigint::BigInt;
use num_traits::One;

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 0..=total {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Sorted multisets of size `k` drawn from `0..=max`.
pub fn multisets(k: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, lo: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for v in lo..=max {
            prefix.push(v);
            go(k - 1, v, max, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 0, max, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|k| {
            weak_compositions(n - k, k)
                .into_iter()
                .map(|w| w.into_iter().map(|x| x + 1).collect())
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

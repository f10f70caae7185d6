//! Truncated power series with integer coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Degree cap used when none is given.
pub const DEFAULT_CAP: usize = 10;

/// `Σ coeffs[n] xⁿ` modulo `x^{coeffs.len()}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub coeffs: Vec<BigInt>,
}

impl Series {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Series { coeffs }
    }

    pub fn from_fn(len: usize, f: impl Fn(usize) -> BigInt) -> Self {
        Series::new((0..len).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn mul(&self, other: &Series) -> Series {
        let len = self.len().min(other.len());
        Series::from_fn(len, |n| (0..=n).map(|i| &self.coeffs[i] * &other.coeffs[n - i]).sum())
    }

    /// Multiplicative inverse; needs constant term one so no division
    /// leaves the integers.
    pub fn reciprocal(&self) -> Result<Series> {
        if self.coeffs.first().map(BigInt::is_one) != Some(true) {
            return Err(Error::Unsupported("series reciprocal needs constant term 1".into()));
        }
        let mut inv: Vec<BigInt> = Vec::with_capacity(self.len());
        for n in 0..self.len() {
            if n == 0 {
                inv.push(BigInt::one());
                continue;
            }
            let s: BigInt = (1..=n).map(|i| &self.coeffs[i] * &inv[n - i]).sum();
            inv.push(-s);
        }
        Ok(Series::new(inv))
    }

    /// `1 − 1/E(x)`: the generating function of cogenerators of a cofree
    /// coalgebra with Hilbert series `E`.
    pub fn primitives_series(&self) -> Result<Series> {
        let mut r = self.reciprocal()?;
        for c in r.coeffs.iter_mut() {
            *c = -&*c;
        }
        if let Some(c0) = r.coeffs.first_mut() {
            *c0 += 1;
            debug_assert!(c0.is_zero());
        }
        Ok(r)
    }
}

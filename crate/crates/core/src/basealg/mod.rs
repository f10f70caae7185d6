//! Graded coalgebras and algebras in a fixed basis, and the three base Hopf
//! algebras on permutations, binary trees and combs.

mod antipode;
mod csym;
mod maps;
mod mbasis;
mod ssym;
mod ysym;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::linear::{kernel_of, rank_of, LinearCombination};

pub use antipode::{antipode, Antipode};
pub use csym::CSym;
pub use maps::{BasisMap, CombInclusion, Identity, Kappa, KappaTau, Tau};
pub use mbasis::{f_to_m, m_basis, m_to_f, YSymM};
pub use ssym::SSym;
pub use ysym::YSym;

pub trait BasisElement: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T> BasisElement for T where T: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

pub type Lin<B> = LinearCombination<B>;
pub type Tensor<B> = LinearCombination<(B, B)>;

/// A connected graded coalgebra with a distinguished basis. The coproduct
/// and counit are given on basis elements and extended linearly.
pub trait GradedCoalgebra: Send + Sync {
    type Basis: BasisElement;

    fn name(&self) -> String;

    fn degree(&self, b: &Self::Basis) -> usize;

    /// The basis element of degree zero.
    fn one(&self) -> Self::Basis;

    /// Basis of the degree `n` component, in a fixed order.
    fn basis(&self, n: usize) -> Vec<Self::Basis>;

    fn coproduct_basis(&self, b: &Self::Basis) -> Tensor<Self::Basis>;

    fn parse_basis(&self, s: &str) -> Result<Self::Basis>;

    fn render_basis(&self, b: &Self::Basis) -> String {
        b.to_string()
    }

    fn counit_basis(&self, b: &Self::Basis) -> BigInt {
        if self.degree(b) == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    }

    fn coproduct(&self, x: &Lin<Self::Basis>) -> Tensor<Self::Basis> {
        x.extend_linearly(|b| self.coproduct_basis(b))
    }

    fn counit(&self, x: &Lin<Self::Basis>) -> BigInt {
        x.iter().map(|(b, c)| c * self.counit_basis(b)).sum()
    }

    fn unit(&self) -> Lin<Self::Basis> {
        Lin::basis(self.one())
    }

    fn dimension(&self, n: usize) -> usize {
        self.basis(n).len()
    }

    /// `Δ(x) − 1⊗x − x⊗1` on a basis element of positive degree.
    fn reduced_coproduct(&self, b: &Self::Basis) -> Tensor<Self::Basis> {
        let mut d = self.coproduct_basis(b);
        d.add_term((self.one(), b.clone()), -BigInt::one());
        d.add_term((b.clone(), self.one()), -BigInt::one());
        d
    }

    fn is_primitive(&self, x: &Lin<Self::Basis>) -> bool {
        let mut d = self.coproduct(x);
        let one = self.one();
        for (b, c) in x.iter() {
            d.add_term((one.clone(), b.clone()), -c);
            d.add_term((b.clone(), one.clone()), -c);
        }
        d.is_zero()
    }

    /// Dimension of the primitive elements of degree `n ≥ 1`, by exact rank
    /// of the reduced coproduct.
    fn primitive_space_dim(&self, n: usize) -> usize {
        let basis = self.basis(n);
        let images: Vec<_> = basis.iter().map(|b| self.reduced_coproduct(b)).collect();
        basis.len() - rank_of(&images)
    }

    /// An integral basis of the primitives of degree `n ≥ 1`: the kernel
    /// of the reduced coproduct.
    fn primitive_kernel(&self, n: usize) -> Vec<Lin<Self::Basis>> {
        kernel_of(&self.basis(n), |b| self.reduced_coproduct(b))
    }
}

/// Which side the unit (or antipode) acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    Both,
}

impl Side {
    pub fn includes_left(self) -> bool {
        matches!(self, Side::Left | Side::Both)
    }

    pub fn includes_right(self) -> bool {
        matches!(self, Side::Right | Side::Both)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::Both => "two-sided",
        })
    }
}

/// A graded coalgebra with an associative product for which the coproduct
/// is multiplicative. The unit may hold on one side only.
pub trait GradedAlgebra: GradedCoalgebra {
    fn product_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Lin<Self::Basis>;

    /// `Left` means `1·x = x`, `Right` means `x·1 = x`.
    fn unit_side(&self) -> Side;

    /// A right unit comes with a left antipode and vice versa.
    fn antipode_side(&self) -> Side {
        match self.unit_side() {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::Both => Side::Both,
        }
    }

    fn product(&self, x: &Lin<Self::Basis>, y: &Lin<Self::Basis>) -> Lin<Self::Basis> {
        let mut out = Lin::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out.add_scaled(&(ca * cb), &self.product_basis(a, b));
            }
        }
        out
    }

    /// Componentwise product on `A ⊗ A`.
    fn tensor_product(&self, x: &Tensor<Self::Basis>, y: &Tensor<Self::Basis>) -> Tensor<Self::Basis> {
        let mut out = Tensor::zero();
        for ((a1, a2), ca) in x.iter() {
            for ((b1, b2), cb) in y.iter() {
                let left = self.product_basis(a1, b1);
                let right = self.product_basis(a2, b2);
                let k = ca * cb;
                for (l, cl) in left.iter() {
                    for (r, cr) in right.iter() {
                        out.add_term((l.clone(), r.clone()), &k * cl * cr);
                    }
                }
            }
        }
        out
    }
}

/// A cofree coalgebra with a chosen basis of its primitive elements.
pub trait CofreeCoalgebra: GradedCoalgebra {
    /// A basis of the primitives of degree `n ≥ 1`.
    fn primitive_basis(&self, n: usize) -> Vec<Lin<Self::Basis>>;
}

/// A presentation in which every basis element is a word in primitive
/// basis elements and the coproduct is deconcatenation.
pub trait WordBasis: GradedCoalgebra {
    fn factor(&self, b: &Self::Basis) -> Vec<Self::Basis>;

    fn join(&self, letters: &[Self::Basis]) -> Self::Basis;
}

/// Basis elements grouped by degree, `0..=max`.
pub fn basis_up_to<A: GradedCoalgebra + ?Sized>(a: &A, max: usize) -> Vec<A::Basis> {
    (0..=max).flat_map(|n| a.basis(n)).collect()
}

/// Applies `(f ⊗ g)` to a tensor.
pub fn map_tensor<A: BasisElement, B: BasisElement>(
    t: &Tensor<A>,
    f: impl Fn(&A) -> Lin<B>,
    g: impl Fn(&A) -> Lin<B>,
) -> Tensor<B> {
    let mut out = Tensor::zero();
    for ((a1, a2), c) in t.iter() {
        let l = f(a1);
        let r = g(a2);
        for (x, cx) in l.iter() {
            for (y, cy) in r.iter() {
                out.add_term((x.clone(), y.clone()), c * cx * cy);
            }
        }
    }
    out
}

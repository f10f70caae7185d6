use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;

use crate::basealg::{BasisElement, BasisMap, GradedAlgebra, GradedCoalgebra, Lin, Side, Tensor};
use crate::compose::{ComposedOf, Composite};
use crate::error::Result;

use super::{iterated_coproduct, mu_l, mu_r, HopfOperad};

/// A coalgebra map `f: E → O` from an `O`-module coalgebra, together with
/// the module action. The product on `E` is the action pulled back along
/// `f`, on the right for a base connection and on the left for a top one.
pub trait Connection: GradedAlgebra {
    type Operad: HopfOperad;

    fn operad(&self) -> &Self::Operad;

    /// `Right` if `O` acts as `e⋆d`, `Left` if it acts as `d⋆e`.
    fn action_side(&self) -> Side;

    /// Name of the map `λ` the connection is built from.
    fn lambda_name(&self) -> &'static str;

    fn connect_basis(&self, e: &Self::Basis) -> <Self::Operad as GradedCoalgebra>::Basis;

    /// `e⋆d` for a right action, `d⋆e` for a left one.
    fn act_basis(&self, e: &Self::Basis, d: &<Self::Operad as GradedCoalgebra>::Basis) -> Lin<Self::Basis>;

    fn connect(&self, x: &Lin<Self::Basis>) -> Lin<<Self::Operad as GradedCoalgebra>::Basis> {
        x.map_basis(|e| self.connect_basis(e))
    }

    fn act(&self, x: &Lin<Self::Basis>, y: &Lin<<Self::Operad as GradedCoalgebra>::Basis>) -> Lin<Self::Basis> {
        let mut out = Lin::zero();
        for (e, ce) in x.iter() {
            for (d, cd) in y.iter() {
                out.add_scaled(&(ce * cd), &self.act_basis(e, d));
            }
        }
        out
    }

    /// `(id ⊗ f)Δ`.
    fn coaction_basis(&self, e: &Self::Basis) -> Lin<(Self::Basis, <Self::Operad as GradedCoalgebra>::Basis)> {
        let mut out = Lin::zero();
        for ((x, y), c) in self.coproduct_basis(e).iter() {
            out.add_term((x.clone(), self.connect_basis(y)), c.clone());
        }
        out
    }
}

type Memo<B> = Mutex<HashMap<(B, B), Lin<B>>>;

fn memoized<B: BasisElement>(memo: &Memo<B>, a: &B, b: &B, f: impl FnOnce() -> Lin<B>) -> Lin<B> {
    let key = (a.clone(), b.clone());
    if let Some(v) = memo.lock().expect("product memo").get(&key) {
        return v.clone();
    }
    let v = f();
    memo.lock().expect("product memo").insert(key, v.clone());
    v
}

/// A connection on `O∘C`, the operad at the base:
/// `f(d; c_0, …, c_n) = γ(d; λ(c_0), …, λ(c_n))`.
/// Product `x·y = x⋆f(y)`; the unit is a right unit.
pub struct BaseConnection<O: HopfOperad, C: GradedCoalgebra, L> {
    pub composite: Composite<O, C>,
    pub lambda: L,
    name: String,
    memo: Memo<ComposedOf<O, C>>,
}

/// A connection on `C∘O`, the operad on top:
/// `f(c; d_0, …, d_m) = γ(λ(c); d_0, …, d_m)`.
/// Product `x·y = f(x)⋆y`; the unit is a left unit.
pub struct TopConnection<C: GradedCoalgebra, O: HopfOperad, L> {
    pub composite: Composite<C, O>,
    pub lambda: L,
    name: String,
    memo: Memo<ComposedOf<C, O>>,
}

impl<O: HopfOperad, C: GradedCoalgebra, L: BasisMap<C, O>> BaseConnection<O, C, L>
where
    ComposedOf<O, C>: BasisElement,
{
    pub fn new(operad: O, top: C, lambda: L, name: impl Into<String>) -> Self {
        BaseConnection {
            composite: Composite::new(operad, top),
            lambda,
            name: name.into(),
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl<C: GradedCoalgebra, O: HopfOperad, L: BasisMap<C, O>> TopConnection<C, O, L>
where
    ComposedOf<C, O>: BasisElement,
{
    pub fn new(base: C, operad: O, lambda: L, name: impl Into<String>) -> Self {
        TopConnection {
            composite: Composite::new(base, operad),
            lambda,
            name: name.into(),
            memo: Mutex::new(HashMap::new()),
        }
    }
}

macro_rules! delegate_coalgebra {
    ($ty:ident < $($p:ident),* >, $basis:ty, [$($bounds:tt)*]) => {
        impl<$($p),*> GradedCoalgebra for $ty<$($p),*>
        where
            $($bounds)*
        {
            type Basis = $basis;

            fn name(&self) -> String {
                self.name.clone()
            }

            fn degree(&self, b: &Self::Basis) -> usize {
                self.composite.degree(b)
            }

            fn one(&self) -> Self::Basis {
                self.composite.one()
            }

            fn basis(&self, n: usize) -> Vec<Self::Basis> {
                self.composite.basis(n)
            }

            fn coproduct_basis(&self, b: &Self::Basis) -> Tensor<Self::Basis> {
                self.composite.coproduct_basis(b)
            }

            fn counit_basis(&self, b: &Self::Basis) -> BigInt {
                self.composite.counit_basis(b)
            }

            fn parse_basis(&self, s: &str) -> Result<Self::Basis> {
                self.composite.parse_basis(s)
            }

            fn render_basis(&self, b: &Self::Basis) -> String {
                self.composite.render_basis(b)
            }
        }
    };
}

delegate_coalgebra!(
    BaseConnection<O, C, L>,
    ComposedOf<O, C>,
    [O: HopfOperad, C: GradedCoalgebra, L: BasisMap<C, O>, ComposedOf<O, C>: BasisElement,]
);

delegate_coalgebra!(
    TopConnection<C, O, L>,
    ComposedOf<C, O>,
    [C: GradedCoalgebra, O: HopfOperad, L: BasisMap<C, O>, ComposedOf<C, O>: BasisElement,]
);

impl<O: HopfOperad, C: GradedCoalgebra, L: BasisMap<C, O>> GradedAlgebra for BaseConnection<O, C, L>
where
    ComposedOf<O, C>: BasisElement,
{
    fn product_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Lin<Self::Basis> {
        memoized(&self.memo, a, b, || self.act_basis(a, &self.connect_basis(b)))
    }

    fn unit_side(&self) -> Side {
        Side::Right
    }
}

impl<C: GradedCoalgebra, O: HopfOperad, L: BasisMap<C, O>> GradedAlgebra for TopConnection<C, O, L>
where
    ComposedOf<C, O>: BasisElement,
{
    fn product_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Lin<Self::Basis> {
        memoized(&self.memo, a, b, || self.act_basis(b, &self.connect_basis(a)))
    }

    fn unit_side(&self) -> Side {
        Side::Left
    }
}

impl<O: HopfOperad, C: GradedCoalgebra, L: BasisMap<C, O>> Connection for BaseConnection<O, C, L>
where
    ComposedOf<O, C>: BasisElement,
{
    type Operad = O;

    fn operad(&self) -> &O {
        &self.composite.base
    }

    fn action_side(&self) -> Side {
        Side::Right
    }

    fn lambda_name(&self) -> &'static str {
        self.lambda.name()
    }

    fn connect_basis(&self, e: &Self::Basis) -> O::Basis {
        let forest: Vec<O::Basis> = e.tops.iter().map(|c| self.lambda.map_basis(c)).collect();
        self.operad()
            .gamma(&e.base, &forest)
            .expect("composed element has one decoration per leaf")
    }

    /// `e⋆d = μ_l(d ⊗ Δ^{(|d|)} e)`.
    fn act_basis(&self, e: &Self::Basis, d: &O::Basis) -> Lin<Self::Basis> {
        let n = self.operad().degree(d);
        let mut out = Lin::zero();
        for (pieces, c) in iterated_coproduct(&self.composite, e, n).iter() {
            let v = mu_l(self.operad(), d, pieces).expect("Δ^{(n)} has n + 1 factors");
            out.add_term(v, c.clone());
        }
        out
    }
}

impl<C: GradedCoalgebra, O: HopfOperad, L: BasisMap<C, O>> Connection for TopConnection<C, O, L>
where
    ComposedOf<C, O>: BasisElement,
{
    type Operad = O;

    fn operad(&self) -> &O {
        &self.composite.top
    }

    fn action_side(&self) -> Side {
        Side::Left
    }

    fn lambda_name(&self) -> &'static str {
        self.lambda.name()
    }

    fn connect_basis(&self, e: &Self::Basis) -> O::Basis {
        self.operad()
            .gamma(&self.lambda.map_basis(&e.base), &e.tops)
            .expect("composed element has one decoration per leaf")
    }

    /// `d⋆e = μ_r(e ⊗ Δ^{(|e|)} d)`.
    fn act_basis(&self, e: &Self::Basis, d: &O::Basis) -> Lin<Self::Basis> {
        let n = self.composite.degree(e);
        let mut out = Lin::zero();
        for (pieces, c) in iterated_coproduct(self.operad(), d, n).iter() {
            let v = mu_r(self.operad(), e, pieces).expect("one piece per leaf of the decorations");
            out.add_term(v, c.clone());
        }
        out
    }
}

//! Every algebra by name, working on literals.
//!
//! Names: the base algebras `ssym`, `ysym`, `csym`; the simplex faces
//! `deltasym`; the nine composite coalgebras `top-o-base`; and the twelve
//! connections `top-base.fr` / `top-base.fl` with the aliases `psym`, `cksym`
//! and `ccsym`.

use num_bigint::BigInt;

use crate::basealg::{
    m_basis, Antipode, CSym, CofreeCoalgebra, GradedAlgebra, GradedCoalgebra, Lin, SSym, Side, YSym, YSymM,
};
use crate::compose::{
    brute_force_dims, dim_composite, map_compose, primitive_generators, split_composed_literal, Composed, ComposedOf,
    Composite, IndexFamily,
};
use crate::error::{Error, Result};
use crate::instances::{self, alpha, alpha_inverse, painted, CompositionTree, SimplexFace, WeightedTree};
use crate::operad::Connection;
use crate::trees::{BiLeveledTree, BinaryTree, Comb, MarkedTree};
use crate::verify::{algebra_suite, coalgebra_suite, connection_suite, Axiom, Budget, Outcome};

/// Degree cap for anything built on permutations.
pub const PERMUTATION_CAP: usize = 5;
/// Degree cap for everything else.
pub const DEFAULT_CAP: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigInt,
    pub basis: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTerm {
    pub coeff: BigInt,
    pub left: String,
    pub right: String,
}

/// A linear combination of rendered basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Terms(pub Vec<Term>);

impl Terms {
    fn from_lin<B: Ord + Clone>(x: &Lin<B>, render: impl Fn(&B) -> String) -> Self {
        Terms(
            x.iter()
                .map(|(b, c)| Term {
                    coeff: c.clone(),
                    basis: render(b),
                })
                .collect(),
        )
    }

    /// `2F[1,1,3] + F[1,2,2]`, or `0`.
    pub fn to_text(&self) -> String {
        signed_sum(self.0.iter().map(|t| (&t.coeff, f_name(&t.basis))))
    }
}

/// `F` applied to a rendered basis element, parenthesized when the literal
/// has spaces at the top level.
pub fn f_name(basis: &str) -> String {
    if basis.contains(' ') && !is_single_group(basis) {
        format!("F({basis})")
    } else {
        format!("F{basis}")
    }
}

fn is_single_group(s: &str) -> bool {
    if !s.starts_with('(') {
        return false;
    }
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => {
                depth -= 1;
                if depth == 0 {
                    return i + 1 == s.len();
                }
            }
            _ => {}
        }
    }
    false
}

fn signed_sum<'a>(terms: impl Iterator<Item = (&'a BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, name) in terms {
        let negative = c.sign() == num_bigint::Sign::Minus;
        let abs = if negative { -c } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if abs != BigInt::from(1) {
            out.push_str(&abs.to_string());
        }
        out.push_str(&name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn tensor_text(terms: &[TensorTerm]) -> String {
    let rendered: Vec<(BigInt, String)> = terms
        .iter()
        .map(|t| (t.coeff.clone(), format!("{} ⊗ {}", f_name(&t.left), f_name(&t.right))))
        .collect();
    signed_sum(rendered.iter().map(|(c, s)| (c, s.clone())))
}

/// The operations available on a named algebra.
pub trait Algebra: Send + Sync {
    fn name(&self) -> &str;
    fn uses_permutations(&self) -> bool;
    fn has_product(&self) -> bool;
    fn unit_side(&self) -> Option<Side>;
    fn axioms(&self) -> &'static [Axiom];

    fn default_cap(&self) -> usize {
        if self.uses_permutations() {
            PERMUTATION_CAP
        } else {
            DEFAULT_CAP
        }
    }

    fn degree_of(&self, literal: &str) -> Result<usize>;
    /// The literal in its canonical rendering.
    fn canonical(&self, literal: &str) -> Result<String>;
    fn basis(&self, n: usize) -> Vec<String>;
    fn coproduct(&self, literal: &str) -> Result<Vec<TensorTerm>>;
    fn product(&self, a: &str, b: &str) -> Result<Terms>;
    fn antipode(&self, a: &str) -> Result<Terms>;
    /// A basis of the primitives of degree `n ≥ 1`.
    fn primitives(&self, n: usize) -> Result<Vec<Terms>>;
    /// Dimension of the primitives of degree `n ≥ 1`, by rank.
    fn primitive_dim(&self, n: usize) -> usize;
    /// Dimensions of degrees `0..=max`.
    fn dims(&self, max: usize) -> Result<Vec<BigInt>>;
    fn verify(&self, budget: &Budget, axioms: &[Axiom]) -> Result<Vec<Outcome>>;
}

/// Fails when `degree` is above `cap`.
pub fn check_cap(degree: usize, cap: usize) -> Result<()> {
    if degree > cap {
        Err(Error::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}

type ParseFn<B> = Box<dyn Fn(&str) -> Result<B> + Send + Sync>;
type RenderFn<B> = Box<dyn Fn(&B) -> String + Send + Sync>;
type PrimFn<B> = Box<dyn Fn(usize) -> Vec<Lin<B>> + Send + Sync>;

enum DimRule {
    Family(IndexFamily),
    Composite { base: IndexFamily, top: IndexFamily },
    Count,
}

struct Entry<A: GradedCoalgebra> {
    name: String,
    alg: A,
    parse: Option<ParseFn<A::Basis>>,
    render: Option<RenderFn<A::Basis>>,
    prims: Option<PrimFn<A::Basis>>,
    dims: DimRule,
    perms: bool,
}

impl<A: GradedCoalgebra> Entry<A> {
    fn new(name: &str, alg: A, dims: DimRule, perms: bool) -> Self {
        Entry {
            name: name.to_string(),
            alg,
            parse: None,
            render: None,
            prims: None,
            dims,
            perms,
        }
    }

    fn literals(
        mut self,
        parse: impl Fn(&str) -> Result<A::Basis> + Send + Sync + 'static,
        render: impl Fn(&A::Basis) -> String + Send + Sync + 'static,
    ) -> Self {
        self.parse = Some(Box::new(parse));
        self.render = Some(Box::new(render));
        self
    }

    fn primitives_by(mut self, f: impl Fn(usize) -> Vec<Lin<A::Basis>> + Send + Sync + 'static) -> Self {
        self.prims = Some(Box::new(f));
        self
    }

    fn parse(&self, s: &str) -> Result<A::Basis> {
        match &self.parse {
            Some(p) => p(s.trim()),
            None => self.alg.parse_basis(s.trim()),
        }
    }

    fn render(&self, b: &A::Basis) -> String {
        match &self.render {
            Some(r) => r(b),
            None => self.alg.render_basis(b),
        }
    }

    fn terms(&self, x: &Lin<A::Basis>) -> Terms {
        Terms::from_lin(x, |b| self.render(b))
    }

    fn degree_of(&self, s: &str) -> Result<usize> {
        Ok(self.alg.degree(&self.parse(s)?))
    }

    fn canonical(&self, s: &str) -> Result<String> {
        Ok(self.render(&self.parse(s)?))
    }

    fn basis(&self, n: usize) -> Vec<String> {
        self.alg.basis(n).iter().map(|b| self.render(b)).collect()
    }

    fn coproduct(&self, s: &str) -> Result<Vec<TensorTerm>> {
        let b = self.parse(s)?;
        Ok(self
            .alg
            .coproduct_basis(&b)
            .iter()
            .map(|((x, y), c)| TensorTerm {
                coeff: c.clone(),
                left: self.render(x),
                right: self.render(y),
            })
            .collect())
    }

    fn primitives(&self, n: usize) -> Result<Vec<Terms>> {
        if n == 0 {
            return Err(Error::Unsupported("primitives live in positive degree".into()));
        }
        let basis = match &self.prims {
            Some(f) => f(n),
            None => self.alg.primitive_kernel(n),
        };
        Ok(basis.iter().map(|x| self.terms(x)).collect())
    }

    fn dims(&self, max: usize) -> Result<Vec<BigInt>> {
        match self.dims {
            DimRule::Family(f) => Ok((0..=max).map(|n| f.dimension(n)).collect()),
            DimRule::Composite { base, top } => {
                let tops: Vec<BigInt> = (0..=max).map(|n| top.dimension(n)).collect();
                dim_composite(base, &tops, max)
            }
            DimRule::Count => Ok(brute_force_dims(&self.alg, max)),
        }
    }

    fn check_axioms(&self, requested: &[Axiom], allowed: &[Axiom]) -> Result<()> {
        match requested.iter().find(|a| !allowed.contains(a)) {
            Some(a) => Err(Error::Unsupported(format!("{a} does not apply to {}", self.name))),
            None => Ok(()),
        }
    }
}

impl<A: GradedAlgebra> Entry<A> {
    fn product(&self, a: &str, b: &str) -> Result<Terms> {
        let (x, y) = (self.parse(a)?, self.parse(b)?);
        Ok(self.terms(&self.alg.product_basis(&x, &y)))
    }

    fn antipode(&self, a: &str) -> Result<Terms> {
        let x = self.parse(a)?;
        Ok(self.terms(&Antipode::new(&self.alg).apply_basis(&x)))
    }
}

macro_rules! forward {
    () => {
        fn name(&self) -> &str {
            &self.0.name
        }
        fn uses_permutations(&self) -> bool {
            self.0.perms
        }
        fn degree_of(&self, literal: &str) -> Result<usize> {
            self.0.degree_of(literal)
        }
        fn canonical(&self, literal: &str) -> Result<String> {
            self.0.canonical(literal)
        }
        fn basis(&self, n: usize) -> Vec<String> {
            self.0.basis(n)
        }
        fn coproduct(&self, literal: &str) -> Result<Vec<TensorTerm>> {
            self.0.coproduct(literal)
        }
        fn primitives(&self, n: usize) -> Result<Vec<Terms>> {
            self.0.primitives(n)
        }
        fn primitive_dim(&self, n: usize) -> usize {
            self.0.alg.primitive_space_dim(n)
        }
        fn dims(&self, max: usize) -> Result<Vec<BigInt>> {
            self.0.dims(max)
        }
    };
}

macro_rules! forward_product {
    () => {
        fn has_product(&self) -> bool {
            true
        }
        fn unit_side(&self) -> Option<Side> {
            Some(self.0.alg.unit_side())
        }
        fn product(&self, a: &str, b: &str) -> Result<Terms> {
            self.0.product(a, b)
        }
        fn antipode(&self, a: &str) -> Result<Terms> {
            self.0.antipode(a)
        }
    };
}

struct CoalgebraEntry<A: GradedCoalgebra>(Entry<A>);
struct AlgebraEntry<A: GradedAlgebra>(Entry<A>);
struct ConnectionEntry<C: Connection>(Entry<C>);

impl<A: GradedCoalgebra> Algebra for CoalgebraEntry<A> {
    forward!();

    fn has_product(&self) -> bool {
        false
    }

    fn unit_side(&self) -> Option<Side> {
        None
    }

    fn axioms(&self) -> &'static [Axiom] {
        &Axiom::COALGEBRA
    }

    fn product(&self, _: &str, _: &str) -> Result<Terms> {
        Err(Error::Unsupported(format!(
            "{} is a coalgebra without a product",
            self.0.name
        )))
    }

    fn antipode(&self, _: &str) -> Result<Terms> {
        Err(Error::Unsupported(format!(
            "{} is a coalgebra without a product",
            self.0.name
        )))
    }

    fn verify(&self, budget: &Budget, axioms: &[Axiom]) -> Result<Vec<Outcome>> {
        self.0.check_axioms(axioms, self.axioms())?;
        Ok(coalgebra_suite(&self.0.alg, budget, axioms))
    }
}

impl<A: GradedAlgebra> Algebra for AlgebraEntry<A> {
    forward!();
    forward_product!();

    fn axioms(&self) -> &'static [Axiom] {
        &Axiom::ALGEBRA
    }

    fn verify(&self, budget: &Budget, axioms: &[Axiom]) -> Result<Vec<Outcome>> {
        self.0.check_axioms(axioms, self.axioms())?;
        Ok(algebra_suite(&self.0.alg, budget, axioms))
    }
}

impl<C: Connection> Algebra for ConnectionEntry<C> {
    forward!();
    forward_product!();

    fn axioms(&self) -> &'static [Axiom] {
        &Axiom::ALL
    }

    fn verify(&self, budget: &Budget, axioms: &[Axiom]) -> Result<Vec<Outcome>> {
        self.0.check_axioms(axioms, self.axioms())?;
        Ok(connection_suite(&self.0.alg, budget, axioms))
    }
}

/// A cofree factor presented by its letters, with the change of basis back
/// to the fundamental basis.
trait Letters: CofreeCoalgebra + Default + Copy + 'static {
    type F: GradedCoalgebra;
    fn to_f(b: &Self::Basis) -> Lin<<Self::F as GradedCoalgebra>::Basis>;
}

impl Letters for YSymM {
    type F = YSym;
    fn to_f(b: &BinaryTree) -> Lin<BinaryTree> {
        m_basis(b)
    }
}

impl Letters for CSym {
    type F = CSym;
    fn to_f(b: &Comb) -> Lin<Comb> {
        Lin::basis(*b)
    }
}

type Generators<D, C> = Vec<Lin<ComposedOf<<D as Letters>::F, <C as Letters>::F>>>;

/// The cofree generators of `D∘C`, written in the fundamental bases.
fn cofree_primitives<D: Letters, C: Letters>() -> impl Fn(usize) -> Generators<D, C>
where
    D::F: Default,
    C::F: Default,
{
    move |n| {
        let src = Composite::new(D::default(), C::default());
        let dst = Composite::new(D::F::default(), C::F::default());
        primitive_generators(&src, n)
            .iter()
            .map(|x| map_compose(&src, &dst, D::to_f, C::to_f, x).expect("changes of basis preserve degree"))
            .collect()
    }
}

fn family(name: &str) -> IndexFamily {
    name.parse().expect("one of ssym, ysym, csym")
}

fn composition_literals<A>(e: Entry<A>) -> Entry<A>
where
    A: GradedCoalgebra<Basis = Composed<Comb, Comb>>,
{
    e.literals(
        |s| {
            if s.contains('@') {
                Composite::new(CSym, CSym).parse_basis(s)
            } else {
                Ok(s.parse::<CompositionTree>()?.to_composed())
            }
        },
        |b| {
            CompositionTree::from_composed(b)
                .map(|c| c.to_string())
                .unwrap_or_else(|_| b.to_string())
        },
    )
}

fn weighted_literals<A>(e: Entry<A>) -> Entry<A>
where
    A: GradedCoalgebra<Basis = Composed<BinaryTree, Comb>>,
{
    e.literals(
        |s| {
            if s.contains('@') {
                Composite::new(YSym, CSym).parse_basis(s)
            } else {
                Ok(s.parse::<WeightedTree>()?.to_composed())
            }
        },
        |b| {
            WeightedTree::from_composed(b)
                .map(|w| w.to_string())
                .unwrap_or_else(|_| b.to_string())
        },
    )
}

fn painted_literals<A>(e: Entry<A>) -> Entry<A>
where
    A: GradedCoalgebra<Basis = Composed<BinaryTree, BinaryTree>>,
{
    e.literals(
        |s| {
            if s.contains('@') {
                Composite::new(YSym, YSym).parse_basis(s)
            } else {
                painted::from_marked(&s.parse::<MarkedTree>()?)
            }
        },
        |b| b.to_string(),
    )
}

const COMPOSITES: [&str; 9] = [
    "ssym-o-ssym",
    "ssym-o-ysym",
    "ssym-o-csym",
    "ysym-o-ssym",
    "ysym-o-ysym",
    "ysym-o-csym",
    "csym-o-ssym",
    "csym-o-ysym",
    "csym-o-csym",
];

const CONNECTIONS: [&str; 12] = [
    "ysym-ysym.fr",
    "ysym-ysym.fl",
    "csym-ysym.fl",
    "csym-ysym.fr",
    "csym-csym.fl",
    "csym-csym.fr",
    "ssym-ysym.fr",
    "ssym-csym.fr",
    "ysym-csym.fr",
    "ysym-ssym.fl",
    "ysym-csym.fl",
    "csym-ssym.fl",
];

const ALIASES: [(&str, &str); 8] = [
    ("psym", "ysym-ysym.fr"),
    ("psym.fr", "ysym-ysym.fr"),
    ("psym.fl", "ysym-ysym.fl"),
    ("cksym", "csym-ysym.fl"),
    ("cksym.fl", "csym-ysym.fl"),
    ("cksym.fr", "csym-ysym.fr"),
    ("ccsym.fl", "csym-csym.fl"),
    ("ccsym.fr", "csym-csym.fr"),
];

/// Every accepted name, canonical names first.
pub fn names() -> Vec<&'static str> {
    let mut out = vec!["ssym", "ysym", "csym", "deltasym"];
    out.extend(COMPOSITES);
    out.extend(CONNECTIONS);
    out.extend(ALIASES.iter().map(|(a, _)| *a));
    out
}

pub fn resolve(name: &str) -> &str {
    ALIASES.iter().find(|(a, _)| *a == name).map_or(name, |(_, c)| *c)
}

fn composite_dims(name: &str) -> (DimRule, bool) {
    let (top, base) = name.split_once('-').expect("top-base");
    let base = base.trim_start_matches("o-");
    let base = base.split('.').next().unwrap_or(base);
    let rule = DimRule::Composite {
        base: family(base),
        top: family(top),
    };
    (rule, top == "ssym" || base == "ssym")
}

fn coalgebra<A: GradedCoalgebra + 'static>(name: &str, alg: A) -> Entry<A> {
    let (dims, perms) = composite_dims(name);
    Entry::new(name, alg, dims, perms)
}

fn boxed_composite<A: GradedCoalgebra + 'static>(e: Entry<A>) -> Box<dyn Algebra> {
    Box::new(CoalgebraEntry(e))
}

fn boxed_connection<C: Connection + 'static>(e: Entry<C>) -> Box<dyn Algebra> {
    Box::new(ConnectionEntry(e))
}

/// The algebra registered under `name` (canonical or alias).
pub fn lookup(name: &str) -> Result<Box<dyn Algebra>> {
    let canonical = resolve(name.trim());
    let out: Box<dyn Algebra> = match canonical {
        "ssym" => Box::new(AlgebraEntry(Entry::new(
            "ssym",
            SSym,
            DimRule::Family(IndexFamily::Permutation),
            true,
        ))),
        "ysym" => Box::new(AlgebraEntry(
            Entry::new("ysym", YSym, DimRule::Family(IndexFamily::Tree), false)
                .primitives_by(|n| YSym.primitive_basis(n)),
        )),
        "csym" => Box::new(AlgebraEntry(
            Entry::new("csym", CSym, DimRule::Family(IndexFamily::Comb), false)
                .primitives_by(|n| CSym.primitive_basis(n)),
        )),
        "deltasym" => Box::new(AlgebraEntry(Entry::new(
            "deltasym",
            instances::DeltaSym,
            DimRule::Count,
            false,
        ))),
        "ssym-o-ssym" => boxed_composite(coalgebra(canonical, Composite::new(SSym, SSym))),
        "ssym-o-ysym" => boxed_composite(coalgebra(canonical, Composite::new(YSym, SSym))),
        "ssym-o-csym" => boxed_composite(coalgebra(canonical, Composite::new(CSym, SSym))),
        "ysym-o-ssym" => boxed_composite(coalgebra(canonical, Composite::new(SSym, YSym))),
        "ysym-o-ysym" => boxed_composite(painted_literals(
            coalgebra(canonical, Composite::new(YSym, YSym)).primitives_by(cofree_primitives::<YSymM, YSymM>()),
        )),
        "ysym-o-csym" => boxed_composite(
            coalgebra(canonical, Composite::new(CSym, YSym)).primitives_by(cofree_primitives::<CSym, YSymM>()),
        ),
        "csym-o-ssym" => boxed_composite(coalgebra(canonical, Composite::new(SSym, CSym))),
        "csym-o-ysym" => boxed_composite(weighted_literals(
            coalgebra(canonical, Composite::new(YSym, CSym)).primitives_by(cofree_primitives::<YSymM, CSym>()),
        )),
        "csym-o-csym" => boxed_composite(composition_literals(
            coalgebra(canonical, Composite::new(CSym, CSym)).primitives_by(cofree_primitives::<CSym, CSym>()),
        )),
        "ysym-ysym.fr" => boxed_connection(painted_literals(
            coalgebra(canonical, instances::psym_fr()).primitives_by(cofree_primitives::<YSymM, YSymM>()),
        )),
        "ysym-ysym.fl" => boxed_connection(painted_literals(
            coalgebra(canonical, instances::psym_fl()).primitives_by(cofree_primitives::<YSymM, YSymM>()),
        )),
        "csym-ysym.fl" => boxed_connection(weighted_literals(
            coalgebra(canonical, instances::cksym_fl()).primitives_by(cofree_primitives::<YSymM, CSym>()),
        )),
        "csym-ysym.fr" => boxed_connection(weighted_literals(
            coalgebra(canonical, instances::cksym_fr()).primitives_by(cofree_primitives::<YSymM, CSym>()),
        )),
        "csym-csym.fl" => boxed_connection(composition_literals(
            coalgebra(canonical, instances::ccsym_fl()).primitives_by(cofree_primitives::<CSym, CSym>()),
        )),
        "csym-csym.fr" => boxed_connection(composition_literals(
            coalgebra(canonical, instances::ccsym_fr()).primitives_by(cofree_primitives::<CSym, CSym>()),
        )),
        "ssym-ysym.fr" => boxed_connection(coalgebra(canonical, instances::ssym_ysym_fr())),
        "ssym-csym.fr" => boxed_connection(coalgebra(canonical, instances::ssym_csym_fr())),
        "ysym-csym.fr" => boxed_connection(
            coalgebra(canonical, instances::ysym_csym_fr()).primitives_by(cofree_primitives::<CSym, YSymM>()),
        ),
        "ysym-ssym.fl" => boxed_connection(coalgebra(canonical, instances::ysym_ssym_fl())),
        "ysym-csym.fl" => boxed_connection(
            coalgebra(canonical, instances::ysym_csym_fl()).primitives_by(cofree_primitives::<CSym, YSymM>()),
        ),
        "csym-ssym.fl" => boxed_connection(coalgebra(canonical, instances::csym_ssym_fl())),
        other => return Err(Error::UnknownAlgebra(other.to_string())),
    };
    Ok(out)
}

/// Target forms of [`convert`].
pub const FORMS: [&str; 7] = [
    "painted",
    "bileveled",
    "marked",
    "composed",
    "weighted",
    "composition",
    "subset",
];

fn is_composition_literal(s: &str) -> bool {
    s.starts_with('[')
        && s.ends_with(']')
        && s[1..s.len() - 1]
            .chars()
            .all(|c| c.is_ascii_digit() || c == ',' || c == ' ')
}

fn is_subset_literal(s: &str) -> bool {
    s.starts_with('{') && s.contains('/')
}

fn is_weighted_literal(s: &str) -> bool {
    !s.starts_with('[') && !s.contains('@') && s.ends_with(']') && s.contains(" [")
}

fn composition_of(s: &str) -> Result<CompositionTree> {
    if is_subset_literal(s) {
        Ok(alpha(&s.parse::<SimplexFace>()?))
    } else if is_composition_literal(s) {
        s.parse()
    } else if s.contains('@') {
        CompositionTree::from_composed(&Composite::new(CSym, CSym).parse_basis(s)?)
    } else {
        Err(Error::parse(
            s,
            "expected a subset, a composition or a composed literal",
        ))
    }
}

fn painted_of(s: &str) -> Result<Composed<BinaryTree, BinaryTree>> {
    if s.contains('@') {
        Composite::new(YSym, YSym).parse_basis(s)
    } else {
        painted::from_marked(&s.parse::<MarkedTree>()?)
    }
}

fn unexpected(form: &str, s: &str) -> Error {
    Error::parse(s, format!("cannot be converted to {form}"))
}

/// Rewrites a literal in another presentation.
///
/// * `bileveled`: a painted tree (composed or marked) as a bi-leveled tree;
/// * `painted`: a bi-leveled tree as a composed painted tree;
/// * `marked`: a composed painted tree as a marked tree;
/// * `composed`: a weighted tree, composition, subset or marked painted
///   tree as `base @ [tops]`;
/// * `weighted`: a composed comb-over-tree as a weighted tree;
/// * `composition`, `subset`: through `α` and the comb presentation.
pub fn convert(literal: &str, form: &str) -> Result<String> {
    let s = literal.trim();
    match form {
        "bileveled" => Ok(painted::to_bileveled(&painted_of(s)?)?.marked().to_string()),
        "painted" => {
            if s.contains('@') {
                return Ok(painted_of(s)?.to_string());
            }
            let b = BiLeveledTree::from_marked(&s.parse::<MarkedTree>()?)?;
            Ok(painted::from_bileveled(&b)?.to_string())
        }
        "marked" => Ok(painted::to_marked(&painted_of(s)?)?.to_string()),
        "composed" => {
            if is_subset_literal(s) || is_composition_literal(s) {
                Ok(composition_of(s)?.to_composed().to_string())
            } else if is_weighted_literal(s) {
                Ok(s.parse::<WeightedTree>()?.to_composed().to_string())
            } else if s.contains('@') {
                split_composed_literal(s).map(|_| s.to_string())
            } else {
                Ok(painted_of(s)?.to_string())
            }
        }
        "weighted" => {
            if is_weighted_literal(s) {
                return Ok(s.parse::<WeightedTree>()?.to_string());
            }
            if !s.contains('@') {
                return Err(unexpected(form, s));
            }
            Ok(WeightedTree::from_composed(&Composite::new(YSym, CSym).parse_basis(s)?)?.to_string())
        }
        "composition" => Ok(composition_of(s)?.to_string()),
        "subset" => Ok(alpha_inverse(&composition_of(s)?).to_string()),
        other => Err(Error::Unsupported(format!(
            "unknown form {other:?}; expected one of {}",
            FORMS.join(", ")
        ))),
    }
}

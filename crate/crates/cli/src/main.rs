use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use treehopf::catalog::{self, check_cap, tensor_text, Algebra, Terms};
use treehopf::trees::{tamari, BinaryTree};
use treehopf::verify::{Axiom, Budget, Outcome};
use treehopf::Error;

const DEFAULT_VERIFY_DEGREE: usize = 3;

#[derive(Parser)]
#[command(name = "treehopf", version, about = "Hopf structures on composites of tree algebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Raise the degree cap; for `verify`, the degree to check through.
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    /// Check a seeded random subset of the cases instead of all of them.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cases per axiom when sampling with --seed.
    #[arg(long, default_value_t = 1000, global = true)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Multiply two basis elements.
    Product {
        algebra: String,
        left: String,
        right: String,
    },
    /// Coproduct of a basis element.
    Coproduct { algebra: String, element: String },
    /// Antipode of a basis element.
    Antipode { algebra: String, element: String },
    /// A basis of the primitives of a degree.
    Primitives { algebra: String, degree: usize },
    /// Graded dimensions over an inclusive range such as 0..5.
    Dim { algebra: String, range: String },
    /// The basis of a degree.
    Basis { algebra: String, degree: usize },
    /// Check the algebraic identities exhaustively in low degrees.
    Verify {
        algebra: String,
        /// Comma-separated axioms; all that apply by default.
        #[arg(long)]
        axioms: Option<String>,
    },
    /// The Möbius function of the Tamari order.
    Mobius { lower: String, upper: String },
    /// Rewrite a literal in another presentation.
    Convert { literal: String, form: String },
    /// List the algebra names.
    List,
}

enum Exit {
    Error(Error),
    Verification,
}

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        Exit::Error(e)
    }
}

type RunResult = std::result::Result<(), Exit>;

fn terms_json(t: &Terms) -> Value {
    json!({
        "terms": t.0.iter().map(|x| json!({"coeff": x.coeff.to_string(), "basis": x.basis})).collect::<Vec<_>>()
    })
}

fn parse_range(s: &str) -> treehopf::Result<(usize, usize)> {
    let bad = || Error::Parse {
        literal: s.to_string(),
        reason: "expected LO..HI or N".into(),
    };
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        }
        None => {
            let n: usize = s.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}

struct Ctx {
    format: Format,
    max_degree: Option<usize>,
    seed: Option<u64>,
    samples: usize,
}

impl Ctx {
    fn cap(&self, a: &dyn Algebra) -> usize {
        self.max_degree.unwrap_or_else(|| a.default_cap())
    }

    fn emit(&self, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
        match self.format {
            Format::Text => println!("{}", text()),
            Format::Json => println!("{}", value()),
        }
    }
}

fn outcome_json(o: &Outcome) -> Value {
    json!({
        "axiom": o.axiom.name(),
        "max_degree": o.max_degree,
        "checked": o.checked,
        "passed": o.passed(),
        "witness": o.witness().map(|w| w.to_string()),
    })
}

fn outcome_text(o: &Outcome) -> String {
    match o.witness() {
        None => format!("{}: ok ({} cases through degree {})", o.axiom, o.checked, o.max_degree),
        Some(w) => format!("{}: FAIL {} ({} failures)", o.axiom, w, o.failures.len()),
    }
}

fn run(cli: Cli) -> RunResult {
    let ctx = Ctx {
        format: cli.format,
        max_degree: cli.max_degree,
        seed: cli.seed,
        samples: cli.samples,
    };
    match cli.command {
        Command::Product { algebra, left, right } => {
            let a = catalog::lookup(&algebra)?;
            check_cap(a.degree_of(&left)? + a.degree_of(&right)?, ctx.cap(a.as_ref()))?;
            let p = a.product(&left, &right)?;
            ctx.emit(|| p.to_text(), || terms_json(&p));
        }
        Command::Coproduct { algebra, element } => {
            let a = catalog::lookup(&algebra)?;
            check_cap(a.degree_of(&element)?, ctx.cap(a.as_ref()))?;
            let d = a.coproduct(&element)?;
            ctx.emit(
                || tensor_text(&d),
                || {
                    json!({"terms": d.iter().map(|t| json!({
                        "coeff": t.coeff.to_string(), "left": t.left, "right": t.right
                    })).collect::<Vec<_>>()})
                },
            );
        }
        Command::Antipode { algebra, element } => {
            let a = catalog::lookup(&algebra)?;
            check_cap(a.degree_of(&element)?, ctx.cap(a.as_ref()))?;
            let s = a.antipode(&element)?;
            ctx.emit(|| s.to_text(), || terms_json(&s));
        }
        Command::Primitives { algebra, degree } => {
            let a = catalog::lookup(&algebra)?;
            check_cap(degree, ctx.cap(a.as_ref()))?;
            let ps = a.primitives(degree)?;
            ctx.emit(
                || ps.iter().map(Terms::to_text).collect::<Vec<_>>().join("\n"),
                || json!({"degree": degree, "primitives": ps.iter().map(terms_json).collect::<Vec<_>>()}),
            );
        }
        Command::Dim { algebra, range } => {
            let a = catalog::lookup(&algebra)?;
            let (lo, hi) = parse_range(&range)?;
            check_cap(hi, ctx.cap(a.as_ref()))?;
            let dims = a.dims(hi)?;
            let dims = &dims[lo..=hi];
            ctx.emit(
                || dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "),
                || json!({"from": lo, "to": hi, "dims": dims.iter().map(|d| d.to_string()).collect::<Vec<_>>()}),
            );
        }
        Command::Basis { algebra, degree } => {
            let a = catalog::lookup(&algebra)?;
            check_cap(degree, ctx.cap(a.as_ref()))?;
            let b = a.basis(degree);
            ctx.emit(|| b.join("\n"), || json!({"degree": degree, "basis": b}));
        }
        Command::Verify { algebra, axioms } => {
            let a = catalog::lookup(&algebra)?;
            let axioms = match axioms {
                Some(list) => Axiom::parse_list(&list)?,
                None => a.axioms().to_vec(),
            };
            let degree = ctx.max_degree.unwrap_or(DEFAULT_VERIFY_DEGREE);
            let budget = match ctx.seed {
                Some(seed) => Budget::sampled(degree, seed, ctx.samples),
                None => Budget::exhaustive(degree),
            };
            let outcomes = a.verify(&budget, &axioms)?;
            let passed = outcomes.iter().all(Outcome::passed);
            ctx.emit(
                || outcomes.iter().map(outcome_text).collect::<Vec<_>>().join("\n"),
                || {
                    json!({
                        "algebra": a.name(),
                        "passed": passed,
                        "outcomes": outcomes.iter().map(outcome_json).collect::<Vec<_>>(),
                    })
                },
            );
            if !passed {
                return Err(Exit::Verification);
            }
        }
        Command::Mobius { lower, upper } => {
            let s: BinaryTree = lower.parse()?;
            let t: BinaryTree = upper.parse()?;
            check_cap(s.degree(), ctx.max_degree.unwrap_or(catalog::DEFAULT_CAP))?;
            let m = tamari::mobius(&s, &t)?;
            ctx.emit(|| m.to_string(), || json!({"value": m.to_string()}));
        }
        Command::Convert { literal, form } => {
            let out = catalog::convert(&literal, &form)?;
            ctx.emit(|| out.clone(), || json!({"literal": out}));
        }
        Command::List => {
            let names = catalog::names();
            ctx.emit(|| names.join("\n"), || json!({"names": names}));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(dir) = std::env::var_os("COALG_CACHE_DIR") {
        tamari::set_cache_dir(Some(PathBuf::from(dir)));
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit::Verification) => ExitCode::from(2),
        Err(Exit::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

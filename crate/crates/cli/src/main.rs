//! `twistcross`: batch front-end for twistcross-core.
//!
//! Every subcommand prints one JSON document (or a text rendering with
//! `--format text`). Exit status: 0 when every verdict passes, 1 when one
//! fails, 2 on input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod format;
mod reproduction;

#[derive(Parser, Debug)]
#[command(name = "twistcross", version, about = "Twisted inverse-semigroup actions and their crossed products")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Tolerance of the floating-point backend.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Random draws for sampled verifiers.
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on closure enumeration.
    #[arg(long = "max-size", global = true, default_value_t = 100_000)]
    pub max_size: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Scalars for algebra computations.
    #[arg(long, global = true, value_enum, default_value_t = Backend::Exact)]
    pub backend: Backend,
    /// Write the document here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    /// Gaussian rationals.
    Exact,
    /// Complex floats compared at `--tol`.
    Float,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate a semigroup and print its Cayley table.
    Gen(GenArgs),
    /// Idempotents, natural order, F-tilde test, maximal group image.
    Analyze(InputArgs),
    /// Enumerate or check normal Clifford subsemigroups.
    Nclifford(NcliffordArgs),
    /// Find or verify an order-preserving cross-section.
    Section(SectionArgs),
    /// Enumerate S(G).
    Exel(GroupArgs),
    /// Build or verify twisted actions.
    Action {
        #[command(subcommand)]
        command: ActionCommand,
    },
    /// Build the crossed product of an action and report on it.
    Xprod(XprodArgs),
    /// Compare a crossed product with its iterated decomposition.
    Decompose(DecomposeArgs),
    /// The 19-element counterexample and the acceptance table.
    PaperExample,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Degree of the partial bijections given by `--gens`.
    #[arg(long, requires = "gens")]
    pub degree: Option<usize>,
    /// Generators in tuple notation, e.g. "(1,4,5,0,0,0)".
    #[arg(long, num_args = 1..)]
    pub gens: Vec<String>,
    /// The cyclic group of this order.
    #[arg(long, conflicts_with_all = ["gens", "symmetric_inverse"])]
    pub cyclic: Option<usize>,
    /// The symmetric inverse monoid of this degree.
    #[arg(long, conflicts_with = "gens")]
    pub symmetric_inverse: Option<usize>,
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Semigroup JSON.
    #[arg(long, short)]
    pub input: PathBuf,
}

#[derive(Args, Debug)]
pub struct NcliffordArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    /// Check this subset instead of enumerating.
    #[arg(long)]
    pub check: Option<PathBuf>,
    /// Largest semigroup the enumeration accepts.
    #[arg(long, default_value_t = 30)]
    pub guard: usize,
}

#[derive(Args, Debug)]
pub struct SectionArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    /// Normal Clifford subsemigroup as an index array.
    #[arg(long)]
    pub subsemigroup: PathBuf,
    /// Verify this section (class index → element index) instead of searching.
    #[arg(long)]
    pub section: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// The cyclic group of this order.
    #[arg(long, conflicts_with = "group")]
    pub cyclic: Option<usize>,
    /// A group as semigroup JSON.
    #[arg(long)]
    pub group: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum ActionCommand {
    /// Build an action bundle.
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Run the verifier matching the bundle's kind.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
pub enum BuildKind {
    /// Busby-Smith action of T/N on C*(N) from a cross-section.
    Section(SemigroupNormal),
    /// Canonical Green action of T on C*(N).
    Green(SemigroupNormal),
    /// Green action of T on the group algebra of the maximal group image of N.
    GroupImage(SemigroupNormal),
    /// Busby-Smith action of S/N induced by a Green action and a section.
    GreenToBusby {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long)]
        section: Option<PathBuf>,
    },
    /// Action of S(G) from a twisted partial action of G.
    Exel {
        #[arg(long, short)]
        input: PathBuf,
    },
    /// Twisted partial action of G read off an action of S(G).
    Partial {
        #[arg(long, short)]
        input: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Seeded random twisted partial action by block translation.
    RandomPartial {
        #[arg(long)]
        cyclic: usize,
        #[arg(long, default_value_t = 1)]
        block: usize,
    },
    /// Trivial global action on a multimatrix algebra.
    TrivialPartial {
        #[arg(long)]
        cyclic: usize,
        /// Block sizes, comma-separated.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        blocks: Vec<usize>,
    },
}

#[derive(Args, Debug)]
pub struct SemigroupNormal {
    #[arg(long, short = 'i', alias = "input")]
    pub semigroup: PathBuf,
    /// Normal Clifford subsemigroup; the idempotents when omitted.
    #[arg(long)]
    pub normal: Option<PathBuf>,
    #[arg(long)]
    pub section: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, short)]
    pub input: PathBuf,
    /// Check an exterior equivalence onto this Busby-Smith action.
    #[arg(long, requires = "witness")]
    pub against: Option<PathBuf>,
    /// Unitary family as an array of coefficient vectors.
    #[arg(long, requires = "against")]
    pub witness: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct XprodArgs {
    /// An action bundle, or a semigroup together with `--normal`.
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long)]
    pub normal: Option<PathBuf>,
    #[arg(long)]
    pub section: Option<PathBuf>,
    /// Include the quotient algebra.
    #[arg(long)]
    pub dump: bool,
    /// Check the left-regular covariant representation.
    #[arg(long)]
    pub rep: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Busby,
    Green,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    /// An action bundle, or a semigroup acted on canonically.
    #[arg(long, short)]
    pub input: PathBuf,
    /// The subsemigroup L (Busby-Smith) or K (Green).
    #[arg(long)]
    pub sub: PathBuf,
    /// N for the canonical action of a semigroup input; the idempotents when
    /// omitted.
    #[arg(long)]
    pub normal: Option<PathBuf>,
    #[arg(long)]
    pub section: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = cli.opts.clone();
    match commands::run(&cli) {
        Ok(outcome) => match commands::emit(&outcome, &opts) {
            Ok(()) => ExitCode::from(if outcome.passed { 0 } else { 1 }),
            Err(e) => {
                commands::emit_error(&e, &opts);
                ExitCode::from(2)
            }
        },
        Err(e) => {
            commands::emit_error(&e, &opts);
            ExitCode::from(2)
        }
    }
}

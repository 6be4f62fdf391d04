use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfeq::exactlin::FieldSpec;
use hopfeq::Error;
use serde_json::{json, Value};

mod input;
mod modp;
mod verbs;

#[derive(Parser, Debug)]
#[command(name = "hopfeq", version, about = "Exact checks for Hopf actions and coactions on finite-dimensional algebras")]
struct Cli {
    /// Field to work over: Q or Fp:<p>. Must agree with any field declared in the inputs.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Run the axiom checker matching the input.
    Check { input: String },
    /// Decide equivalence of two structures along an algebra isomorphism.
    Equiv(EquivArgs),
    /// Decide whether the first structure is finer than the second.
    Finer { first: String, second: String },
    /// Support coalgebra of a coaction (or of the coaction of a grading).
    SupportCoalgebra { input: String },
    /// Universal group of a grading, with bounded coset enumeration.
    UniversalGroup {
        input: String,
        #[arg(long, default_value_t = hopfeq::grading::DEFAULT_COSET_BUDGET)]
        coset_budget: usize,
        /// Check a regrading by this builtin group (z2, z4, s3 or trivial).
        #[arg(long)]
        regrade: Option<String>,
        /// Images of the support elements in the regrading group, by name or index.
        #[arg(long, value_delimiter = ',')]
        map: Vec<String>,
    },
    /// Presentation of the universal Hopf algebra of a coaction.
    UniversalHopf { input: String },
    /// Recover a grading from a coaction whose coefficients are group-likes.
    DetectGrading { input: String },
    /// Rank analysis of the canonical map of an action or coaction.
    Can { input: String },
    /// Convert between H-module algebras and H*-comodule algebras.
    Correspondence { input: String },
    /// Derivations and automorphisms inside the span of the operators.
    CocommData {
        input: String,
        #[arg(long, default_value_t = hopfeq::modulealg::G0_DEFAULT_BUDGET)]
        g0_budget: u128,
        /// A matrix file to test for membership in G0.
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Compare (h1 a)(h2 b) with (h2 a)(h1 b); without indices, search all basis triples.
    Obstruction {
        input: String,
        #[arg(long, requires_all = ["a", "b"])]
        h: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
    /// Classify a structure on the dual numbers.
    ClassifyDual { input: String },
    /// Codimension of H-identities in degree n, or the series up to --max-n.
    Codim(CodimArgs),
    /// Graded codimension compared with the codimension of the dual action.
    GradedCodim {
        input: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Write a builtin example as JSON ("all" writes every example into --output).
    Example { name: String },
    /// The action of a Hopf algebra on its dual by right translation.
    RegularDual { input: String },
}

#[derive(Args, Debug)]
struct EquivArgs {
    first: String,
    second: String,
    #[arg(long, value_enum)]
    kind: Option<EquivKind>,
    /// `identity` or a file holding the matrix of the isomorphism.
    #[arg(long, default_value = "identity")]
    iso: String,
    /// Also compare codimensions up to this degree (module structures only).
    #[arg(long)]
    codim: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum EquivKind {
    Grading,
    Module,
    Comodule,
    GroupAction,
}

#[derive(Args, Debug)]
struct CodimArgs {
    input: String,
    #[arg(long, required_unless_present = "max_n", conflicts_with = "max_n")]
    n: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    /// Dimension of the largest invariant nilpotent ideal, for the growth verdict.
    #[arg(long)]
    d: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Row budget; defaults to HOPFEQ_BUDGET or 200000.
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long, default_value_t = hopfeq::hident::DEFAULT_SHARD_SIZE)]
    shard_size: usize,
}

impl BudgetArgs {
    fn config(&self) -> hopfeq::Result<hopfeq::hident::CodimConfig> {
        let mut c = hopfeq::hident::CodimConfig::from_env()?;
        if let Some(b) = self.budget {
            c.budget = b;
        }
        c.shard_size = self.shard_size;
        Ok(c)
    }
}

/// Exit status with the JSON printed for it.
pub struct Outcome {
    pub code: u8,
    pub report: Value,
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let verb_name = verb_name(&cli.verb);
    let (code, body) = match verbs::run(&cli) {
        Ok((field, out)) => (out.code, envelope(verb_name, Some(field), out.report)),
        Err(e) => {
            eprintln!("hopfeq: {e}");
            let code = error_code(&e);
            let mut rep = json!({ "status": "error", "error": e.to_string() });
            if let Error::BudgetExceeded { what, needed, budget } = &e {
                rep["budget"] = json!({ "what": what, "needed": needed.to_string(), "budget": budget.to_string() });
            }
            (code, envelope(verb_name, None, rep))
        }
    };
    let text = serde_json::to_string_pretty(&body).expect("reports serialize") + "\n";
    match (&cli.output, &cli.verb) {
        (Some(path), v) if !matches!(v, Verb::Example { .. }) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("hopfeq: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        _ => print!("{text}"),
    }
    ExitCode::from(code)
}

fn envelope(verb: &str, field: Option<FieldSpec>, report: Value) -> Value {
    let mut v = json!({
        "tool": "hopfeq",
        "version": env!("CARGO_PKG_VERSION"),
        "verb": verb,
        "field": field.map(|f| f.to_string()),
    });
    if let Value::Object(m) = report {
        for (k, x) in m {
            v[k] = x;
        }
    }
    v
}

fn verb_name(v: &Verb) -> &'static str {
    match v {
        Verb::Check { .. } => "check",
        Verb::Equiv(_) => "equiv",
        Verb::Finer { .. } => "finer",
        Verb::SupportCoalgebra { .. } => "support-coalgebra",
        Verb::UniversalGroup { .. } => "universal-group",
        Verb::UniversalHopf { .. } => "universal-hopf",
        Verb::DetectGrading { .. } => "detect-grading",
        Verb::Can { .. } => "can",
        Verb::Correspondence { .. } => "correspondence",
        Verb::CocommData { .. } => "cocomm-data",
        Verb::Obstruction { .. } => "obstruction",
        Verb::ClassifyDual { .. } => "classify-dual",
        Verb::Codim(_) => "codim",
        Verb::GradedCodim { .. } => "graded-codim",
        Verb::Example { .. } => "example",
        Verb::RegularDual { .. } => "regular-dual",
    }
}

//! Command-line front end: validate, transform, search, generate and export
//! multiplicity tables over the canonical JSON format.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a negative verdict
//! (counterexample found, nothing within bound, obstruction, axiom failure),
//! 2 for input errors. Structured JSON goes to stdout, human-readable
//! summaries to stderr. The input path `-` means standard input.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use multimult::cardinal::{Cardinal, CardinalBound, CardinalValue};
use multimult::catalog;
use multimult::deformation::{
    search_deformation, DeformationOutcome, DeformationProblem, DEFAULT_CARRIER_CAP,
};
use multimult::error::Error;
use multimult::json;
use multimult::mms::{AssocVerdict, MultiMultisemigroup};
use multimult::semiring::{check_semiring_axioms, SamplingBudget, SemiringInstance, SemiringOps};

/// Exact algebra on multisemigroups with multiplicities.
#[derive(Parser)]
#[command(name = "multimult", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the associativity law of a multiplicity table.
    Verify {
        /// Table file in the canonical JSON format, or `-` for stdin.
        file: String,
    },
    /// Evaluate a word from both ends and report whether the results agree.
    Word {
        /// Table file, or `-` for stdin.
        file: String,
        /// The letters of the word, at least two element names.
        #[arg(required = true, num_args = 2..)]
        letters: Vec<String>,
    },
    /// Truncate all multiplicities to a smaller bound.
    Reduce {
        file: String,
        /// Target bound: a positive integer or `omega`.
        #[arg(long)]
        to: String,
    },
    /// Lift a plain multisemigroup to a larger bound (membership becomes the
    /// top of the target bound).
    Lift {
        file: String,
        /// Target bound: a positive integer or `omega`.
        #[arg(long)]
        to: String,
    },
    /// Search for a deformation of a multisemigroup within a multiplicity
    /// bound.
    Deform(DeformArgs),
    /// Generate one of the built-in example families.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Export the integer structure constants of a finitary table.
    ExportAlgebra { file: String },
    /// Run the semiring axiom checker on a named instance.
    Axioms {
        /// One of: boolean, dual-boolean, card:<n>, card:omega,
        /// tropical-min, tropical-max-plus.
        semiring: String,
    },
}

#[derive(Args)]
struct DeformArgs {
    /// A multisemigroup file, or a problem file `{"base": ...,
    /// "max_multiplicity": M}`, or `-` for stdin.
    file: String,
    /// Largest multiplicity to try (required unless the file is a problem
    /// file).
    #[arg(long)]
    max: Option<u64>,
    /// Search exhaustively even when an obstruction proves non-deformability.
    #[arg(long)]
    no_obstruction_check: bool,
    /// Split the top-level value choices across this many workers.
    #[arg(long)]
    parallel: Option<usize>,
}

#[derive(Subcommand)]
enum Family {
    /// Kazhdan-Lusztig structure constants of the dihedral group D_n.
    Dihedral {
        #[arg(long)]
        n: u64,
    },
    /// The Catalan monoid of order-preserving, order-decreasing maps on a
    /// chain of m elements.
    Catalan {
        #[arg(long)]
        m: u64,
    },
    /// Projective-functor composition for a dimension matrix, given as inline
    /// JSON, e.g. --dims '[[1,2],[0,1]]'.
    Projective {
        #[arg(long)]
        dims: String,
    },
    /// The one-element table with a chosen multiplicity.
    Singleton {
        /// The multiplicity: a non-negative integer or `omega`.
        #[arg(long)]
        lambda: String,
        /// The bound: a positive integer or `omega`.
        #[arg(long)]
        bound: String,
    },
    /// The smallest multisemigroup that admits no finitary deformation.
    Obstructed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read `{path}`: {e}")))
    }
}

fn carrier_cap_from_env() -> Result<usize, Error> {
    match std::env::var("MULTIMULT_MAX_CARRIER") {
        Ok(value) => value.parse().map_err(|_| {
            Error::Parse(format!(
                "MULTIMULT_MAX_CARRIER must be a positive integer, got `{value}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_CARRIER_CAP),
    }
}

fn json_escape(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn cardinal_json(v: CardinalValue) -> String {
    match v {
        CardinalValue::Nat(m) => m.to_string(),
        CardinalValue::Omega => "\"omega\"".to_string(),
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Verify { file } => {
            let mms = json::parse_mms(&read_input(&file)?)?;
            match mms.verify_associativity() {
                AssocVerdict::Valid => {
                    println!("{{\"outcome\": \"valid\"}}");
                    eprintln!("valid: the associativity law holds on all triples");
                    Ok(ExitCode::SUCCESS)
                }
                AssocVerdict::Counterexample(cx) => {
                    println!(
                        "{{\"outcome\": \"counterexample\", \"triple\": [{}, {}, {}], \"element\": {}, \"lhs\": {}, \"rhs\": {}}}",
                        json_escape(&cx.r),
                        json_escape(&cx.s),
                        json_escape(&cx.t),
                        json_escape(&cx.element),
                        cardinal_json(cx.lhs.value()),
                        cardinal_json(cx.rhs.value()),
                    );
                    eprintln!(
                        "counterexample: at ({}, {}, {}) the two sides differ at {} ({} vs {})",
                        cx.r, cx.s, cx.t, cx.element, cx.lhs, cx.rhs
                    );
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Word { file, letters } => {
            let mms = json::parse_mms(&read_input(&file)?)?;
            let word: Vec<&str> = letters.iter().map(String::as_str).collect();
            let prefix = mms.evaluate_word_prefix(&word)?;
            let suffix = mms.evaluate_word_suffix(&word)?;
            let agree = prefix == suffix;
            println!(
                "{{\"word\": [{}], \"prefix\": {}, \"suffix\": {}, \"agree\": {}}}",
                word.iter()
                    .map(|w| json_escape(w))
                    .collect::<Vec<_>>()
                    .join(", "),
                json::serialize_function(&prefix),
                json::serialize_function(&suffix),
                agree
            );
            if agree {
                eprintln!("word evaluates to {prefix} from either end");
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("word evaluations disagree: prefix {prefix}, suffix {suffix}");
                Ok(ExitCode::FAILURE)
            }
        }
        Command::Reduce { file, to } => {
            let mms = json::parse_mms(&read_input(&file)?)?;
            let target = CardinalBound::parse(&to)?;
            let reduced = mms.reduce(target)?;
            print!("{}", json::serialize_mms(&reduced));
            eprintln!("reduced from bound {} to bound {}", mms.bound(), target);
            Ok(ExitCode::SUCCESS)
        }
        Command::Lift { file, to } => {
            let ms = json::parse_multisemigroup(&read_input(&file)?)?;
            let target = CardinalBound::parse(&to)?;
            let lifted = MultiMultisemigroup::lift(&ms, target)?;
            print!("{}", json::serialize_mms(&lifted));
            eprintln!("lifted to bound {target}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Deform(args) => {
            let text = read_input(&args.file)?;
            let (base, max) = if json::is_deformation_problem(&text) {
                let (base, max) = json::parse_deformation_problem(&text)?;
                (base, args.max.unwrap_or(max))
            } else {
                let base = json::parse_multisemigroup(&text)?;
                let max = args.max.ok_or_else(|| {
                    Error::Parse("--max is required when the input is a bare table".to_string())
                })?;
                (base, max)
            };
            let mut problem =
                DeformationProblem::new(base, max).with_carrier_cap(carrier_cap_from_env()?);
            if args.no_obstruction_check {
                problem = problem.without_obstruction_check();
            }
            if let Some(workers) = args.parallel {
                problem = problem.with_parallelism(workers);
            }
            let result = search_deformation(&problem)?;
            print!("{}", json::serialize_deformation_result(&result));
            match &result.outcome {
                DeformationOutcome::Found(_) => {
                    eprintln!(
                        "found a deformation with multiplicities <= {} after {} assignments",
                        result.max_multiplicity, result.nodes
                    );
                    Ok(ExitCode::SUCCESS)
                }
                DeformationOutcome::NoneWithinBound => {
                    eprintln!(
                        "no deformation with multiplicities <= {} ({} assignments tried); \
                         larger multiplicities were not searched, so this is not a proof",
                        result.max_multiplicity, result.nodes
                    );
                    Ok(ExitCode::FAILURE)
                }
                DeformationOutcome::Obstructed { a, b } => {
                    eprintln!(
                        "obstructed: {a}*{a} = {{{a}}} and {{{a}, {b}}} lies in a product of \
                         {a} and {b}; no finitary deformation exists at any bound"
                    );
                    Ok(ExitCode::FAILURE)
                }
            }
        }
        Command::Generate { family } => {
            let output = match family {
                Family::Dihedral { n } => json::serialize_mms(&catalog::kl_multisemigroup(n)?),
                Family::Catalan { m } => json::serialize_mms(&catalog::catalan_monoid_mms(m)?),
                Family::Projective { dims } => {
                    let rows: Vec<Vec<u64>> = parse_dims(&dims)?;
                    let d = catalog::DimensionMatrix::new(rows)?;
                    json::serialize_mms(&catalog::projective_functor_mms(&d)?)
                }
                Family::Singleton { lambda, bound } => {
                    let bound = CardinalBound::parse(&bound)?;
                    let value = CardinalValue::parse(&lambda)?;
                    let lambda = Cardinal::new(value, bound)?;
                    if catalog::is_singleton_top(lambda) {
                        eprintln!(
                            "warning: multiplicity {lambda} equals the bound; values strictly \
                             below the bound are the intended range"
                        );
                    }
                    json::serialize_mms(&catalog::singleton(lambda)?)
                }
                Family::Obstructed => json::serialize_multisemigroup(&catalog::obstructed_fixture()),
            };
            print!("{output}");
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportAlgebra { file } => {
            let mms = json::parse_mms(&read_input(&file)?)?;
            let algebra = mms.structure_constants()?;
            print!("{}", json::serialize_structure_constants(&algebra));
            Ok(ExitCode::SUCCESS)
        }
        Command::Axioms { semiring } => {
            let instance = SemiringInstance::parse(&semiring)?;
            let report = check_semiring_axioms(&instance, &SamplingBudget::default());
            let failures: Vec<String> = report
                .failures
                .iter()
                .map(|f| {
                    format!(
                        "{{\"axiom\": {}, \"witness\": [{}]}}",
                        json_escape(f.axiom.name()),
                        f.witness
                            .iter()
                            .map(|e| json_escape(&e.to_string()))
                            .collect::<Vec<_>>()
                            .join(", ")
                    )
                })
                .collect();
            println!(
                "{{\"instance\": {}, \"mode\": {}, \"pool_size\": {}, \"checks\": {}, \"failures\": [{}]}}",
                json_escape(&instance.name()),
                json_escape(if report.exhaustive { "exhaustive" } else { "randomized" }),
                report.pool_size,
                report.checks,
                failures.join(", ")
            );
            if report.passed() {
                eprintln!(
                    "{}: all axioms hold ({} mode, {} checks)",
                    report.instance,
                    if report.exhaustive { "exhaustive" } else { "randomized" },
                    report.checks
                );
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "{}: {} axiom(s) failed",
                    report.instance,
                    report.failures.len()
                );
                Ok(ExitCode::FAILURE)
            }
        }
    }
}

fn parse_dims(text: &str) -> Result<Vec<Vec<u64>>, Error> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!(
            "--dims expects a JSON array of arrays of non-negative integers: {e}"
        ))
    })
}

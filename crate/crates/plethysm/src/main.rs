//! Command-line front end over the plethysm engine.
//!
//! Every subcommand prints deterministic output: text is sorted and stable,
//! `--json` emits compact single-line JSON with expanded partition arrays.
//! Exit status is 0 on success, 1 when a verification sweep finds a
//! counterexample (the offending products are printed), 2 on invalid input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use plethysm::plethystic::enumerate_plethystic;
use plethysm::tableau::enumerate_ssyt;
use plethysm::verify::{
    cross_check_expansions, verify_homogeneity_classification, verify_square_formula,
    verify_unique_factorization,
};
use plethysm::{
    enumerate_partitions, max_lex, max_translex, maximal_pleth_weights, Engine, Error, Partition,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "plethysm",
    version,
    about = "Exact plethysm of Schur functions and its extreme constituents"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Append computed expansions to this cache file and reuse it on startup
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Full Schur expansion of s_NU∘s_MU, leading term first
    Plethysm { nu: PartitionArg, mu: PartitionArg },
    /// Single coefficient of s_ALPHA in s_NU∘s_MU
    Coeff {
        nu: PartitionArg,
        mu: PartitionArg,
        alpha: PartitionArg,
    },
    /// Extreme constituent of s_NU∘s_MU under the chosen order
    Max {
        nu: PartitionArg,
        mu: PartitionArg,
        /// lex and translex give the unique extreme constituent; dominance
        /// lists every maximal one with its multiplicity
        #[arg(long, value_enum)]
        order: OrderArg,
    },
    /// Dominance-maximal constituents of s_NU∘s_MU with multiplicities
    MaximalDominance { nu: PartitionArg, mu: PartitionArg },
    /// Enumerate semistandard or plethystic tableaux
    #[command(subcommand)]
    Tableaux(TableauxCommand),
    /// Exhaustive verification sweeps; exit 1 reports a counterexample
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// All partitions of N in the order the sweeps use
    Partitions {
        n: u64,
        /// Only partitions with pairwise distinct parts
        #[arg(long)]
        distinct: bool,
    },
    /// Doubled shape 2[ALPHA] of a partition with distinct parts
    DoubleBracket { alpha: PartitionArg },
}

#[derive(Subcommand)]
enum TableauxCommand {
    /// Semistandard Young tableaux of SHAPE with entries bounded by --vars
    Ssyt {
        shape: PartitionArg,
        /// Largest allowed entry (default: the number of cells)
        #[arg(long, value_name = "N")]
        vars: Option<u64>,
    },
    /// Plethystic tableaux of shape MU^NU with inner entries bounded by --vars
    Plethystic {
        mu: PartitionArg,
        nu: PartitionArg,
        /// Largest allowed inner entry (default: |NU|·|MU|)
        #[arg(long, value_name = "N")]
        vars: Option<u64>,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Group all products of degree ≤ D into coincidence classes and compare
    /// them with the expected classification
    TheoremA {
        #[arg(long, value_name = "D")]
        max_degree: u64,
    },
    /// Classify every product of degree ≤ D by homogeneity and
    /// indecomposability and compare with the expected classification
    TheoremB {
        #[arg(long, value_name = "D")]
        max_degree: u64,
    },
    /// Check the double-hook expansion of s_(1^n)∘s_(2) and its conjugate
    /// for every n ≤ D
    Square {
        #[arg(long, value_name = "D")]
        max_degree: u64,
    },
    /// Recompute every product of degree ≤ D with the power-sum algorithm
    /// and compare expansions
    CrossCheck {
        #[arg(long, value_name = "D")]
        max_degree: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Translex,
    Dominance,
}

type PartitionArg = Partition;

#[derive(Serialize)]
struct CoeffOut {
    nu: Partition,
    mu: Partition,
    alpha: Partition,
    coefficient: String,
}

#[derive(Serialize)]
struct MaxOut {
    nu: Partition,
    mu: Partition,
    order: &'static str,
    partition: Partition,
}

#[derive(Serialize)]
struct WeightTerm {
    partition: Partition,
    multiplicity: String,
}

#[derive(Serialize)]
struct WeightsOut {
    nu: Partition,
    mu: Partition,
    order: &'static str,
    terms: Vec<WeightTerm>,
}

#[derive(Serialize)]
struct SsytOut {
    shape: Partition,
    max_entry: u64,
    count: usize,
    tableaux: Vec<plethysm::tableau::SemistandardTableau>,
}

#[derive(Serialize)]
struct PlethysticOut {
    inner: Partition,
    outer: Partition,
    max_entry: u64,
    count: usize,
    tableaux: Vec<plethysm::plethystic::PlethysticTableau>,
}

#[derive(Serialize)]
struct PartitionsOut {
    n: u64,
    distinct: bool,
    count: usize,
    partitions: Vec<Partition>,
}

#[derive(Serialize)]
struct DoubleBracketOut {
    alpha: Partition,
    double: Partition,
}

fn main() -> ExitCode {
    // die silently on a closed pipe (e.g. `plethysm ... | head`) instead of
    // panicking in println!
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn emit<T: Serialize>(value: &T) -> Result<(), Error> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

/// Dominance-maximal constituents as printable terms, largest key first.
fn weight_terms(engine_mu: &Partition, engine_nu: &Partition) -> Result<Vec<WeightTerm>, Error> {
    Ok(maximal_pleth_weights(engine_mu, engine_nu)?
        .into_iter()
        .rev()
        .map(|(partition, multiplicity)| WeightTerm {
            partition,
            multiplicity: multiplicity.to_string(),
        })
        .collect())
}

fn print_weight_terms(terms: &[WeightTerm]) {
    for t in terms {
        println!("{}: {}", t.partition, t.multiplicity);
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let make_engine = || -> Result<Engine, Error> {
        match &cli.cache {
            Some(path) => Engine::with_cache_file(path),
            None => Ok(Engine::new()),
        }
    };
    match cli.command {
        Command::Plethysm { nu, mu } => {
            let expansion = make_engine()?.plethysm(&nu, &mu)?;
            if cli.json {
                emit(expansion.as_ref())?;
            } else {
                println!("{expansion}");
            }
        }
        Command::Coeff { nu, mu, alpha } => {
            let coefficient = make_engine()?.coefficient(&nu, &mu, &alpha)?;
            if cli.json {
                emit(&CoeffOut {
                    nu,
                    mu,
                    alpha,
                    coefficient: coefficient.to_string(),
                })?;
            } else {
                println!("{coefficient}");
            }
        }
        Command::Max { nu, mu, order } => match order {
            OrderArg::Lex | OrderArg::Translex => {
                let (name, partition) = match order {
                    OrderArg::Lex => ("lex", max_lex(&nu, &mu)?),
                    _ => ("translex", max_translex(&nu, &mu)?),
                };
                if cli.json {
                    emit(&MaxOut {
                        nu,
                        mu,
                        order: name,
                        partition,
                    })?;
                } else {
                    println!("{partition}");
                }
            }
            OrderArg::Dominance => {
                let terms = weight_terms(&mu, &nu)?;
                if cli.json {
                    emit(&WeightsOut {
                        nu,
                        mu,
                        order: "dominance",
                        terms,
                    })?;
                } else {
                    print_weight_terms(&terms);
                }
            }
        },
        Command::MaximalDominance { nu, mu } => {
            let terms = weight_terms(&mu, &nu)?;
            if cli.json {
                emit(&WeightsOut {
                    nu,
                    mu,
                    order: "dominance",
                    terms,
                })?;
            } else {
                print_weight_terms(&terms);
            }
        }
        Command::Tableaux(TableauxCommand::Ssyt { shape, vars }) => {
            let max_entry = vars.unwrap_or_else(|| shape.size());
            let tableaux = enumerate_ssyt(&shape, max_entry);
            if cli.json {
                emit(&SsytOut {
                    shape,
                    max_entry,
                    count: tableaux.len(),
                    tableaux,
                })?;
            } else {
                for t in &tableaux {
                    println!("{t}");
                }
            }
        }
        Command::Tableaux(TableauxCommand::Plethystic { mu, nu, vars }) => {
            let max_entry = vars.unwrap_or_else(|| nu.size().saturating_mul(mu.size()));
            let tableaux = enumerate_plethystic(&mu, &nu, max_entry);
            if cli.json {
                emit(&PlethysticOut {
                    inner: mu,
                    outer: nu,
                    max_entry,
                    count: tableaux.len(),
                    tableaux,
                })?;
            } else {
                for t in &tableaux {
                    println!("{t}");
                }
            }
        }
        Command::Verify(sweep) => {
            let mut engine = make_engine()?;
            match sweep {
                VerifyCommand::TheoremA { max_degree } => {
                    let report = verify_unique_factorization(&mut engine, max_degree)?;
                    if cli.json {
                        emit(&report)?;
                    } else {
                        println!("max degree: {}", report.degree);
                        println!("coincidence classes: {}", report.classes.len());
                        for class in &report.classes {
                            let members: Vec<String> =
                                class.iter().map(ToString::to_string).collect();
                            println!("{}", members.join(" = "));
                        }
                    }
                }
                VerifyCommand::TheoremB { max_degree } => {
                    let report = verify_homogeneity_classification(&mut engine, max_degree)?;
                    if cli.json {
                        emit(&report)?;
                    } else {
                        let homogeneous: Vec<_> =
                            report.records.iter().filter(|r| r.homogeneous).collect();
                        println!("max degree: {}", report.max_degree);
                        println!("products checked: {}", report.records.len());
                        println!("homogeneous and indecomposable: {}", homogeneous.len());
                        for r in homogeneous {
                            println!("({} | {})", r.nu, r.mu);
                        }
                    }
                }
                VerifyCommand::Square { max_degree } => {
                    let report = verify_square_formula(&mut engine, max_degree)?;
                    if cli.json {
                        emit(&report)?;
                    } else {
                        println!("max n: {}", report.max_n);
                        println!("products checked: {}", report.products_checked);
                        println!("double-hook expansions match");
                    }
                }
                VerifyCommand::CrossCheck { max_degree } => {
                    let report = cross_check_expansions(&mut engine, max_degree)?;
                    if cli.json {
                        emit(&report)?;
                    } else {
                        println!("max degree: {}", report.max_degree);
                        println!("products checked: {}", report.products_checked);
                        println!("expansion algorithms agree");
                    }
                }
            }
        }
        Command::Partitions { n, distinct } => {
            let partitions = enumerate_partitions(n, distinct);
            if cli.json {
                emit(&PartitionsOut {
                    n,
                    distinct,
                    count: partitions.len(),
                    partitions,
                })?;
            } else {
                for p in &partitions {
                    println!("{p}");
                }
            }
        }
        Command::DoubleBracket { alpha } => {
            let double = alpha.double_bracket()?;
            if cli.json {
                emit(&DoubleBracketOut { alpha, double })?;
            } else {
                println!("{double}");
            }
        }
    }
    Ok(())
}

//! `arbor`: exact matroid cover computations on matroid files.

use arbor_core::arboricity::{
    arboricity_number_with_cap, arboricity_partition, arboricity_polynomial_with_cap,
    brute_force_covers_with_budget, ArboricityValue, DEFAULT_BRUTE_BUDGET, DEFAULT_POLY_N,
    DEFAULT_SCAN_N,
};
use arbor_core::demo::{
    demo_chromatic_contrast, demo_condel, demo_cycles, demo_valuativity, DemoReport,
};
use arbor_core::error::Error;
use arbor_core::matroid::{Matroid, DEFAULT_CIRCUIT_SCAN_N};
use arbor_core::partition::DEFAULT_ORDERED_N;
use arbor_core::polynomial::IntPolynomial;
use arbor_core::scheduling::{parse_formula, scheduling_polynomial_with_caps, SchedulePredicate};
use arbor_core::subset::Subset;
use arbor_core::text::parse_matroid;
use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_DEMO_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_REFUSED: u8 = 3;
const EXIT_ARITHMETIC: u8 = 4;

#[derive(Parser)]
#[command(
    name = "arbor",
    version,
    about = "Arboricity numbers, independent partitions, and cover-counting polynomials of matroids"
)]
struct Cli {
    #[command(flatten)]
    options: Options,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Options {
    /// Print only the machine-oriented lines
    #[arg(long, short = 'm', global = true)]
    machine: bool,

    /// Raise or lower the per-operation ground-size caps
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,

    /// Work budget for brute-force counting
    #[arg(long, global = true, value_name = "STEPS")]
    budget: Option<u64>,

    /// Worker threads for enumeration (results are thread-count independent)
    #[arg(long, global = true, default_value_t = 1, value_name = "T")]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Cover-counting polynomial A_M(k) of a matroid file
    Poly { file: PathBuf },
    /// Arboricity number a(M) with its witness subset
    Arboricity {
        file: PathBuf,
        /// Also build a partition into at most K independent sets
        #[arg(long, value_name = "K")]
        witness_partition: Option<usize>,
    },
    /// Evaluate A_M(k) at an integer
    Eval { file: PathBuf, k: i128 },
    /// List all circuits (output is itself a valid matroid file)
    Circuits { file: PathBuf },
    /// Count independent covers by direct enumeration (budget-guarded)
    Brute { file: PathBuf, k: u64 },
    /// Scheduling polynomial of an s-expression formula on n items
    Sched { formula: PathBuf, n: usize },
    /// Cover polynomial of the direct sum of two matroid files
    Dsum { left: PathBuf, right: PathBuf },
    /// Scripted demonstrations; exit status 1 if any claim fails
    Demo {
        #[command(subcommand)]
        which: DemoCommand,
    },
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Cover polynomials of the cycles C_3 .. C_max
    Cycles {
        #[arg(long, default_value_t = 8, value_name = "N")]
        max: usize,
    },
    /// Failure of the deletion/contraction recursion on a cycle
    Condel {
        #[arg(long, default_value_t = 4, value_name = "N")]
        n: usize,
    },
    /// The octahedron decomposition counterexample
    Valuativity,
    /// Coloring satisfies the recursion, covering does not
    Chromatic,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.options, cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::InvalidBases(_) | Error::InvalidCircuits(_) => EXIT_PARSE,
        Error::SizeCap { .. } | Error::BudgetExceeded { .. } | Error::UniverseTooLarge { .. } => {
            EXIT_REFUSED
        }
        Error::Overflow | Error::NonIntegerCoefficients => EXIT_ARITHMETIC,
        Error::HasLoop { .. } => EXIT_REFUSED,
    }
}

fn run(options: &Options, command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Poly { file } => {
            let matroid = load_matroid(&file)?;
            let poly = poly_of(options, &matroid)?;
            print_polynomial(options, &poly);
        }
        Command::Arboricity {
            file,
            witness_partition,
        } => {
            let matroid = load_matroid(&file)?;
            let cap = options.max_n.unwrap_or(DEFAULT_SCAN_N);
            let result = arboricity_number_with_cap(&matroid, cap)?;
            if options.machine {
                println!("arboricity: {}", result.value);
                println!(
                    "witness: {}",
                    result
                        .witness
                        .iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            } else {
                println!("a(M) = {}, witness X = {}", result.value, result.witness);
            }
            if let Some(k) = witness_partition {
                match result.value {
                    ArboricityValue::Unbounded => println!("partition: none (unbounded)"),
                    ArboricityValue::Finite(_) => {
                        match arboricity_partition(&matroid, k)? {
                            Some(blocks) => println!("partition: {}", render_blocks(options, &blocks)),
                            None => println!("partition: none (no cover with {k} parts)"),
                        }
                    }
                }
            }
        }
        Command::Eval { file, k } => {
            let matroid = load_matroid(&file)?;
            let poly = poly_of(options, &matroid)?;
            println!("{}", poly.eval(k)?);
        }
        Command::Circuits { file } => {
            let matroid = load_matroid(&file)?;
            let cap = options.max_n.unwrap_or(DEFAULT_CIRCUIT_SCAN_N);
            let circuits = matroid.circuits_bounded(cap)?;
            if !options.machine {
                println!("# {} circuit(s)", circuits.len());
            }
            println!("circuits {}", matroid.ground_size());
            for c in circuits.circuits() {
                let elems: Vec<String> = c.iter().map(|e| e.to_string()).collect();
                println!("circuit {}", elems.join(" "));
            }
        }
        Command::Brute { file, k } => {
            let matroid = load_matroid(&file)?;
            let budget = options.budget.unwrap_or(DEFAULT_BRUTE_BUDGET);
            println!("{}", brute_force_covers_with_budget(&matroid, k, budget)?);
        }
        Command::Sched { formula, n } => {
            let text = read_input(&formula)?;
            let parsed = parse_formula(&text, n)?;
            let ordered_cap = options.max_n.unwrap_or(DEFAULT_ORDERED_N);
            let poly = scheduling_polynomial_with_caps(
                SchedulePredicate::Formula(&parsed),
                options.threads,
                ordered_cap,
                ordered_cap,
            )?;
            print_polynomial(options, &poly);
        }
        Command::Dsum { left, right } => {
            let sum = load_matroid(&left)?.direct_sum(&load_matroid(&right)?);
            let poly = poly_of(options, &sum)?;
            print_polynomial(options, &poly);
        }
        Command::Demo { which } => {
            let report = run_demo(options, which)?;
            print!("{}", report.render());
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_DEMO_FAIL));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_demo(options: &Options, which: DemoCommand) -> Result<DemoReport, Error> {
    match which {
        DemoCommand::Cycles { max } => {
            check_demo_range("cycle demo", max, 3, 12)?;
            Ok(demo_cycles(max))
        }
        DemoCommand::Condel { n } => {
            check_demo_range("deletion/contraction demo", n, 3, 10)?;
            Ok(demo_condel(n))
        }
        DemoCommand::Valuativity => {
            let _ = options;
            Ok(demo_valuativity())
        }
        DemoCommand::Chromatic => Ok(demo_chromatic_contrast()),
    }
}

fn check_demo_range(what: &'static str, n: usize, lo: usize, hi: usize) -> Result<(), Error> {
    if n < lo || n > hi {
        return Err(Error::SizeCap {
            what,
            limit: hi,
            requested: n,
        });
    }
    Ok(())
}

fn load_matroid(path: &Path) -> Result<Matroid, Error> {
    parse_matroid(&read_input(path)?)
}

fn read_input(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|io| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {io}", path.display()),
    })
}

fn poly_of(options: &Options, matroid: &Matroid) -> Result<IntPolynomial, Error> {
    let cap = options.max_n.unwrap_or(DEFAULT_POLY_N);
    arboricity_polynomial_with_cap(matroid, cap, options.threads)
}

fn print_polynomial(options: &Options, poly: &IntPolynomial) {
    if !options.machine {
        println!("{poly}");
    }
    println!("{}", poly.coeffs_line());
}

fn render_blocks(options: &Options, blocks: &[Subset]) -> String {
    if options.machine {
        blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join(" | ")
    } else {
        blocks
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

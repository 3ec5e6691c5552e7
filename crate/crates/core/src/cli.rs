//! The `cuboid` command line. Exit status 0 means every check passed,
//! 1 a mathematical failure (nonzero residue, bad input point, parse error),
//! 2 an operational failure (I/O, corpus integrity, usage).

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::corpus::{self, CorpusError};
use crate::parse::{parse_source, render, DefinitionSet};
use crate::poly::{Polynomial, RingSignature, WeightSystem, MQL_VARIABLES};
use crate::reduction::{self, Convention, LiftError};
use crate::report::VerificationReport;
use crate::search::{self, SearchOptions};
use crate::system::{CuboidSystem, EFormSystem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_OPERATIONAL: i32 = 2;

/// Environment variable holding the default shard count for `search`.
pub const SHARDS_ENV: &str = "CUBOID_SHARDS";

#[derive(Debug, Parser)]
#[command(
    name = "cuboid",
    version,
    about = "Exact checks and integer search for the cuboid E-form system"
)]
pub struct RunConfig {
    /// Write the report or stream here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Kernel corpus to use instead of the embedded one.
    #[arg(long, global = true, value_name = "PATH")]
    pub corpus: Option<PathBuf>,
    /// Expected SHA-256 of the corpus; defaults to the embedded checksum
    /// when no --corpus is given.
    #[arg(long, global = true, value_name = "HEX")]
    pub corpus_checksum: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run identity checks on the unreduced system.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Eliminate down to the biquadratic and check the remaining equations vanish.
    Reduce {
        #[arg(long, value_enum, default_value_t = ConventionArg::Derived)]
        convention: ConventionArg,
        /// Include the derived intermediate equations in the report.
        #[arg(long)]
        emit_equations: bool,
    },
    /// Enumerate integer solutions of the biquadratic as JSON lines.
    Search(SearchArgs),
    /// Lift integer solutions given as JSON (one object per line).
    Lift {
        /// JSON or JSON-lines file; `-` reads standard input.
        #[arg(long, value_name = "PATH")]
        input: PathBuf,
    },
    /// Enumerate integer triangles with integer area.
    Heron {
        #[arg(long)]
        bound: u32,
    },
    /// Parse a `.poly` file and print its canonical form.
    Parse {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = RingArg::El)]
        ring: RingArg,
        /// Print term count, total degree and weighted degree per definition.
        #[arg(long)]
        stats: bool,
    },
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub bound: u32,
    /// Only solutions with all four coordinates positive.
    #[arg(long)]
    pub positive: bool,
    /// Only solutions not obtained by weighted scaling of a smaller one.
    #[arg(long)]
    pub primitive: bool,
    #[arg(long, env = SHARDS_ENV, default_value_t = 1)]
    pub shards: usize,
    /// Follow each solution off the denominator locus with its lift.
    #[arg(long)]
    pub lift: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    S3,
    Factor,
    Eform,
    Kernel,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Derived,
    #[value(alias = "paper")]
    Printed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    Mql,
    El,
}

#[derive(Debug)]
enum Failure {
    Math(String),
    Operational(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Operational(format!("i/o error: {e}"))
    }
}

impl From<CorpusError> for Failure {
    fn from(e: CorpusError) -> Self {
        Failure::Operational(e.to_string())
    }
}

/// Runs the command line and returns the process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_OPERATIONAL
            } else {
                EXIT_OK
            };
        }
    };
    match execute(&config) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_MATH,
        Err(Failure::Math(msg)) => {
            eprintln!("cuboid: {msg}");
            EXIT_MATH
        }
        Err(Failure::Operational(msg)) => {
            eprintln!("cuboid: {msg}");
            EXIT_OPERATIONAL
        }
    }
}

fn output(config: &RunConfig) -> Result<Box<dyn Write>, Failure> {
    Ok(match &config.out {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            Failure::Operational(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn load_kernel(config: &RunConfig) -> Result<DefinitionSet, Failure> {
    match &config.corpus {
        None => {
            let sum = config
                .corpus_checksum
                .as_deref()
                .unwrap_or(corpus::APPENDIX_SHA256);
            Ok(corpus::load_kernel(corpus::APPENDIX_TEXT, Some(sum))?)
        }
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Failure::Operational(format!("cannot read {}: {e}", path.display()))
            })?;
            Ok(corpus::load_kernel(
                &text,
                config.corpus_checksum.as_deref(),
            )?)
        }
    }
}

fn execute(config: &RunConfig) -> Result<bool, Failure> {
    match &config.command {
        Command::Verify { suite } => {
            let system = CuboidSystem::new(load_kernel(config)?);
            let report = verify(&system, *suite);
            write_json(config, &report)?;
            Ok(report.passed())
        }
        Command::Reduce {
            convention,
            emit_equations,
        } => {
            let eform = EFormSystem::new(load_kernel(config)?);
            let convention = match convention {
                ConventionArg::Derived => Convention::Derived,
                ConventionArg::Printed => Convention::Printed,
            };
            let red = reduction::reduce_system(&eform, convention)
                .map_err(|e| Failure::Math(e.to_string()))?;
            let equations = emit_equations.then(|| {
                let mut eqs: Vec<NamedPolynomial> = red
                    .midpoint
                    .named()
                    .into_iter()
                    .map(|(n, p)| NamedPolynomial::new(n, p))
                    .collect();
                eqs.push(NamedPolynomial::new("e11-square", &red.e11_square));
                eqs.push(NamedPolynomial::new("e21-numerator", &red.solution.e21));
                eqs.push(NamedPolynomial::new("e12-numerator", &red.solution.e12));
                eqs.push(NamedPolynomial::new(
                    "denominator",
                    &red.solution.denominator,
                ));
                eqs
            });
            let passed = red.report.passed();
            write_json(
                config,
                &ReduceOutput {
                    report: red.report,
                    equations,
                },
            )?;
            Ok(passed)
        }
        Command::Search(args) => run_search(config, args),
        Command::Lift { input } => run_lift(config, input),
        Command::Heron { bound } => {
            let mut out = output(config)?;
            let mut io_result = Ok(());
            search::heron_each(*bound, |r| {
                if io_result.is_ok() {
                    io_result = writeln!(out, "{}", serde_json::to_string(&r).expect("serializes"));
                }
            })
            .map_err(|e| Failure::Operational(e.to_string()))?;
            io_result?;
            out.flush()?;
            Ok(true)
        }
        Command::Parse { path, ring, stats } => run_parse(config, path, *ring, *stats),
    }
}

/// The suites behind `verify`.
pub fn verify(system: &CuboidSystem, suite: Suite) -> VerificationReport {
    let mut report = VerificationReport::new();
    if matches!(suite, Suite::S3 | Suite::All) {
        report.extend(system.verify_s3_invariance());
    }
    if matches!(suite, Suite::Factor | Suite::All) {
        report.extend(system.verify_factor_expansions());
    }
    if matches!(suite, Suite::Eform | Suite::All) {
        report.extend(system.verify_eform());
    }
    if matches!(suite, Suite::Kernel | Suite::All) {
        report.extend(system.verify_kernel_membership());
    }
    if suite == Suite::All {
        report.extend(system.verify_weighted_homogeneity());
        report.extend(system.verify_multisymmetric_images());
    }
    report
}

#[derive(Debug, Serialize, Deserialize)]
pub struct NamedPolynomial {
    pub name: String,
    pub polynomial: String,
}

impl NamedPolynomial {
    fn new(name: &str, p: &Polynomial) -> Self {
        NamedPolynomial {
            name: name.to_string(),
            polynomial: render(p),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ReduceOutput {
    #[serde(flatten)]
    pub report: VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub equations: Option<Vec<NamedPolynomial>>,
}

fn write_json<T: Serialize>(config: &RunConfig, value: &T) -> Result<(), Failure> {
    let mut out = output(config)?;
    serde_json::to_writer_pretty(&mut out, value)
        .map_err(|e| Failure::Operational(e.to_string()))?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

fn run_search(config: &RunConfig, args: &SearchArgs) -> Result<bool, Failure> {
    let opts = SearchOptions {
        bound: args.bound,
        positive_only: args.positive,
        primitive_only: args.primitive,
        shards: args.shards,
    };
    let eform = if args.lift {
        Some(EFormSystem::new(load_kernel(config)?))
    } else {
        None
    };
    let mut out = output(config)?;
    let mut outcome: Result<bool, Failure> = Ok(true);
    search::search_each(&opts, |rec| {
        if outcome.is_err() {
            return;
        }
        let mut step = || -> Result<bool, Failure> {
            writeln!(out, "{}", rec.to_json())?;
            let Some(eform) = &eform else { return Ok(true) };
            if rec.e10 == 0 && rec.e01 == 0 {
                return Ok(true);
            }
            let b = |v: i64| BigInt::from(v);
            match reduction::lift_solution(eform, &b(rec.e10), &b(rec.e01), &b(rec.e11), &b(rec.l))
            {
                Ok(lift) => {
                    writeln!(out, "{}", serde_json::to_string(&lift).expect("serializes"))?;
                    Ok(true)
                }
                Err(e) => {
                    eprintln!("cuboid: lift of {rec}: {e}");
                    Ok(false)
                }
            }
        };
        match step() {
            Ok(ok) => {
                if let Ok(all) = &mut outcome {
                    *all &= ok;
                }
            }
            Err(e) => outcome = Err(e),
        }
    })
    .map_err(|e| Failure::Operational(e.to_string()))?;
    out.flush()?;
    outcome
}

/// One point to lift; extra fields such as `positive` are ignored.
#[derive(Debug, Deserialize)]
struct LiftInput {
    e10: i64,
    e01: i64,
    e11: i64,
    l: i64,
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut text)?;
    } else {
        let f = File::open(path)
            .map_err(|e| Failure::Operational(format!("cannot read {}: {e}", path.display())))?;
        for line in BufReader::new(f).lines() {
            text.push_str(&line?);
            text.push('\n');
        }
    }
    Ok(text)
}

fn run_lift(config: &RunConfig, input: &Path) -> Result<bool, Failure> {
    let text = read_input(input)?;
    let points: Vec<LiftInput> = serde_json::Deserializer::from_str(&text)
        .into_iter::<LiftInput>()
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Operational(format!("bad lift input: {e}")))?;
    let eform = EFormSystem::new(load_kernel(config)?);
    let mut out = output(config)?;
    let mut all = true;
    for p in points {
        let b = |v: i64| BigInt::from(v);
        match reduction::lift_solution(&eform, &b(p.e10), &b(p.e01), &b(p.e11), &b(p.l)) {
            Ok(lift) => writeln!(out, "{}", serde_json::to_string(&lift).expect("serializes"))?,
            Err(e) => {
                let kind = match e {
                    LiftError::NotOnVariety(_) | LiftError::DenominatorLocus => "rejected",
                    LiftError::EquationFails(_) => "failed",
                };
                eprintln!(
                    "cuboid: ({},{},{},{}) {kind}: {e}",
                    p.e10, p.e01, p.e11, p.l
                );
                all = false;
            }
        }
    }
    out.flush()?;
    Ok(all)
}

/// Per-definition statistics printed by `parse --stats`.
pub fn stats_line(name: &str, p: &Polynomial, weights: &WeightSystem) -> String {
    let degree = p.total_degree().map_or("-".to_string(), |d| d.to_string());
    let weighted = weights
        .weighted_degree(p)
        .map_or_else(|e| e.to_string(), |w| w.to_string());
    format!(
        "{name}\tterms={}\tdegree={degree}\tweighted={weighted}",
        p.num_terms()
    )
}

fn run_parse(config: &RunConfig, path: &Path, ring: RingArg, stats: bool) -> Result<bool, Failure> {
    let text = read_input(path)?;
    let (ring, weights) = match ring {
        RingArg::El => (RingSignature::el(), WeightSystem::el()),
        RingArg::Mql => (
            RingSignature::mql(),
            WeightSystem::new(MQL_VARIABLES.iter().map(|v| (*v, 1))),
        ),
    };
    let defs = match parse_source(&text, &ring) {
        Ok(d) => d,
        Err(e) => return Err(Failure::Math(format!("{}: {e}", path.display()))),
    };
    let mut out = output(config)?;
    for (name, p) in defs.iter() {
        if stats {
            writeln!(out, "{}", stats_line(name, p, &weights))?;
        } else if name == "_" {
            writeln!(out, "{}", render(p))?;
        } else {
            writeln!(out, "{name}:={};", render(p))?;
        }
    }
    out.flush()?;
    Ok(true)
}

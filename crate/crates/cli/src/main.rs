//! Batch front end: every library module behind one binary for scripted
//! experiments. Exit codes: 0 success/pass, 1 checked-and-failed, 2 usage
//! error, 3 budget exhausted.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use partition_calculus::closure::{self, ClosureOptions, Comparison};
use partition_calculus::delta;
use partition_calculus::ops::{self, CycleDirection, RotationCorner};
use partition_calculus::relations::{self, RenderFormat, RenderOptions};
use partition_calculus::repver::{self, CheckOptions, ModelSpec, Problem, RepError};
use partition_calculus::{Partition, Row};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "partcalc", version, about = "Partition calculus toolbox")]
struct Cli {
    /// Worker threads for numeric checks (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CornerArg {
    UpperLeftDown,
    UpperRightDown,
    LowerLeftUp,
    LowerRightUp,
}

impl From<CornerArg> for RotationCorner {
    fn from(c: CornerArg) -> RotationCorner {
        match c {
            CornerArg::UpperLeftDown => RotationCorner::UpperLeftDown,
            CornerArg::UpperRightDown => RotationCorner::UpperRightDown,
            CornerArg::LowerLeftUp => RotationCorner::LowerLeftUp,
            CornerArg::LowerRightUp => RotationCorner::LowerRightUp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RowArg {
    Upper,
    Lower,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemArg {
    P34,
    P35,
}

#[derive(Subcommand)]
enum Command {
    /// Echo the canonical form of a partition literal.
    Parse { literal: String },
    /// Apply a single diagram operation.
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Evaluate delta_p at index tuples.
    Delta {
        literal: String,
        /// Upper tuple, comma-separated (empty for k = 0).
        #[arg(long, default_value = "")]
        alpha: String,
        /// Lower tuple, comma-separated (empty for l = 0).
        #[arg(long, default_value = "")]
        beta: String,
    },
    /// Render R(p) symbolically, or instantiate it at concrete indices.
    Emit {
        literal: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        beta: Option<String>,
        /// Emit the P0-decorated non-unital form.
        #[arg(long)]
        nonunital: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
        format: FormatArg,
    },
    /// Bounded closure of a generator set.
    Close {
        /// Generator literals.
        gens: Vec<String>,
        /// File with one generator literal per line.
        #[arg(long)]
        gens_file: Option<String>,
        #[arg(long, default_value_t = 6)]
        max_points: usize,
        #[arg(long, default_value_t = 2)]
        margin: usize,
        #[arg(long)]
        two_colored: bool,
        #[arg(long)]
        rotate: bool,
        /// Print every member instead of the summary.
        #[arg(long)]
        dump: bool,
    },
    /// Test whether a target is derivable (yes/no).
    Member {
        #[arg(long)]
        target: String,
        gens: Vec<String>,
        #[arg(long)]
        gens_file: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
        #[arg(long, default_value_t = 2)]
        margin: usize,
        #[arg(long)]
        two_colored: bool,
        #[arg(long)]
        rotate: bool,
    },
    /// Like member, but print the derivation witness.
    Derive {
        #[arg(long)]
        target: String,
        gens: Vec<String>,
        #[arg(long)]
        gens_file: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
        #[arg(long, default_value_t = 2)]
        margin: usize,
        #[arg(long)]
        two_colored: bool,
        #[arg(long)]
        rotate: bool,
    },
    /// Inclusion relation of two bounded closures.
    Compare {
        #[arg(long, num_args = 0.., value_delimiter = ';')]
        x: Vec<String>,
        #[arg(long, num_args = 0.., value_delimiter = ';')]
        y: Vec<String>,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
        #[arg(long, default_value_t = 0)]
        margin: usize,
        #[arg(long)]
        two_colored: bool,
        #[arg(long)]
        rotate: bool,
    },
    /// Check relations of partitions against a matrix model.
    Verify {
        /// Model spec, e.g. permutation:3:2,3,1 or haar-orthogonal:3,
        /// or @path to a model file.
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        nonunital: bool,
        partitions: Vec<String>,
        #[arg(long)]
        file: Option<String>,
    },
    /// All partitions within a bound whose relations the model satisfies.
    EmpiricalH {
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_points: usize,
        /// Probe all colorings, not just the one-colored partitions.
        #[arg(long)]
        colored: bool,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Random search for open-problem candidate models.
    Search {
        #[arg(long, value_enum)]
        problem: ProblemArg,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum OpCommand {
    Tensor {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Composition qp (q below p); prints the removed-loop count rl.
    Compose {
        #[arg(long)]
        q: String,
        #[arg(long)]
        p: String,
    },
    Involution {
        #[arg(long)]
        p: String,
    },
    /// Vertical reflection; --colored also inverts colors.
    Reflect {
        #[arg(long)]
        p: String,
        #[arg(long)]
        colored: bool,
    },
    /// One corner move; --keep-colors uses the one-colored variant.
    Rotate {
        #[arg(long)]
        p: String,
        #[arg(long, value_enum)]
        corner: CornerArg,
        #[arg(long)]
        keep_colors: bool,
    },
    /// Cycle a single-row partition left-to-right (or back with --back).
    Cycle {
        #[arg(long)]
        p: String,
        #[arg(long)]
        back: bool,
    },
    /// Erase the neighbouring points j, j+1 on a row.
    Erase {
        #[arg(long)]
        p: String,
        #[arg(long, value_enum)]
        row: RowArg,
        #[arg(long)]
        j: usize,
    },
}

/// Anything that should terminate with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

fn parse_partition(literal: &str) -> Result<Partition, Failure> {
    Partition::parse(literal).map_err(|e| Failure::usage(format!("bad partition {literal:?}: {e}")))
}

fn parse_tuple(text: &str) -> Result<Vec<usize>, Failure> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("bad index {t:?}")))
        })
        .collect()
}

fn load_generators(literals: &[String], file: &Option<String>) -> Result<Vec<Partition>, Failure> {
    let mut gens = Vec::new();
    for lit in literals {
        gens.push(parse_partition(lit)?);
    }
    if let Some(path) = file {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            gens.push(parse_partition(line)?);
        }
    }
    Ok(gens)
}

fn closure_options(max_points: usize, margin: usize, two_colored: bool, rotate: bool) -> ClosureOptions {
    let mut options = ClosureOptions::new(max_points).with_margin(margin).with_rotate(rotate);
    if two_colored {
        options = options.two_colored();
    }
    options
}

fn load_model(spec: &str, seed: u64) -> Result<repver::RepModel, Failure> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))?;
        return repver::read_model(&text)
            .map_err(|e| Failure::usage(format!("bad model file {path}: {e}")));
    }
    let parsed = ModelSpec::parse(spec).map_err(|e| Failure::usage(e.to_string()))?;
    repver::builtin_model(&parsed, seed).map_err(|e| Failure::usage(e.to_string()))
}

fn rep_failure(e: RepError) -> Failure {
    match e {
        RepError::TermCap { .. } => Failure { code: EXIT_BUDGET, message: e.to_string() },
        other => Failure::usage(other.to_string()),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Parse { literal } => {
            println!("{}", parse_partition(&literal)?);
            Ok(0)
        }
        Command::Op { op } => run_op(op),
        Command::Delta { literal, alpha, beta } => {
            let p = parse_partition(&literal)?;
            let alpha = parse_tuple(&alpha)?;
            let beta = parse_tuple(&beta)?;
            let value = delta::delta(&p, &alpha, &beta)
                .map_err(|e| Failure::usage(e.to_string()))?;
            println!("{value}");
            Ok(0)
        }
        Command::Emit { literal, n, alpha, beta, nonunital, format } => {
            let p = parse_partition(&literal)?;
            match (alpha, beta) {
                (None, None) => {
                    let format = match format {
                        FormatArg::Ascii => RenderFormat::Ascii,
                        FormatArg::Latex => RenderFormat::Latex,
                    };
                    println!("{}", relations::render(&p, RenderOptions { format }));
                    Ok(0)
                }
                (alpha, beta) => {
                    let n = n.ok_or_else(|| Failure::usage("--n required with --alpha/--beta"))?;
                    let alpha = parse_tuple(alpha.as_deref().unwrap_or(""))?;
                    let beta = parse_tuple(beta.as_deref().unwrap_or(""))?;
                    let instance = if nonunital {
                        relations::instantiate_nonunital(&p, n, &alpha, &beta)
                    } else {
                        relations::instantiate(&p, n, &alpha, &beta)
                    }
                    .map_err(|e| Failure::usage(e.to_string()))?;
                    print!("{}", instance.normalized().dump());
                    Ok(0)
                }
            }
        }
        Command::Close { gens, gens_file, max_points, margin, two_colored, rotate, dump } => {
            let gens = load_generators(&gens, &gens_file)?;
            let options = closure_options(max_points, margin, two_colored, rotate);
            let result = closure::close(&gens, &options);
            if dump {
                print!("{}", result.dump(&options));
            } else {
                println!(
                    "members={} rounds={} ops={} incomplete={}",
                    result.members.len(),
                    result.rounds.len(),
                    result.op_applications,
                    result.incomplete
                );
            }
            Ok(if result.incomplete { EXIT_BUDGET } else { 0 })
        }
        Command::Member { target, gens, gens_file, max_points, margin, two_colored, rotate } => {
            let target = parse_partition(&target)?;
            let gens = load_generators(&gens, &gens_file)?;
            let options = closure_options(max_points, margin, two_colored, rotate);
            match closure::member(&gens, &options, &target) {
                Some(_) => {
                    println!("member");
                    Ok(0)
                }
                None => {
                    println!("not derivable within bound");
                    Ok(EXIT_FAILED)
                }
            }
        }
        Command::Derive { target, gens, gens_file, max_points, margin, two_colored, rotate } => {
            let target = parse_partition(&target)?;
            let gens = load_generators(&gens, &gens_file)?;
            let options = closure_options(max_points, margin, two_colored, rotate);
            match closure::member(&gens, &options, &target) {
                Some(derivation) => {
                    println!("{}", derivation.sexp());
                    Ok(0)
                }
                None => {
                    println!("not derivable within bound");
                    Ok(EXIT_FAILED)
                }
            }
        }
        Command::Compare { x, y, max_points, margin, two_colored, rotate } => {
            let x: Vec<Partition> =
                x.iter().map(|s| parse_partition(s)).collect::<Result<_, _>>()?;
            let y: Vec<Partition> =
                y.iter().map(|s| parse_partition(s)).collect::<Result<_, _>>()?;
            let options = closure_options(max_points, margin, two_colored, rotate);
            let relation = match closure::compare(&x, &y, &options) {
                Comparison::EqualAtBound => "equal-at-bound",
                Comparison::XinY => "x-in-y",
                Comparison::YinX => "y-in-x",
                Comparison::Incomparable => "incomparable",
            };
            println!("{relation}");
            Ok(0)
        }
        Command::Verify { model, seed, tol, nonunital, partitions, file } => {
            let model = load_model(&model, seed)?;
            let targets = load_generators(&partitions, &file)?;
            if targets.is_empty() {
                return Err(Failure::usage("no partitions to verify"));
            }
            let options = CheckOptions { tolerance: tol, nonunital, ..CheckOptions::default() };
            let mut all_pass = true;
            for p in &targets {
                let report =
                    repver::check_relation(&model, p, &options).map_err(rep_failure)?;
                println!("{}", report.line());
                all_pass &= report.pass;
            }
            Ok(if all_pass { 0 } else { EXIT_FAILED })
        }
        Command::EmpiricalH { model, seed, max_points, colored, tol } => {
            let model = load_model(&model, seed)?;
            let options = CheckOptions { tolerance: tol, ..CheckOptions::default() };
            let probe = repver::empirical_h(&model, max_points, colored, &options)
                .map_err(rep_failure)?;
            for p in &probe.members {
                println!("{p}");
            }
            if probe.is_partial() {
                eprintln!("partial: {} partitions over the term cap", probe.skipped.len());
                return Ok(EXIT_BUDGET);
            }
            Ok(0)
        }
        Command::Search { problem, n, d, trials, seed, tol } => {
            let problem = match problem {
                ProblemArg::P34 => Problem::P3_4,
                ProblemArg::P35 => Problem::P3_5,
            };
            let options = CheckOptions { tolerance: tol, ..CheckOptions::default() };
            let report = repver::problem_search(problem, n, d, trials, seed, &options)
                .map_err(rep_failure)?;
            print!("{}", report.dump());
            Ok(0)
        }
    }
}

fn run_op(op: OpCommand) -> Result<u8, Failure> {
    let op_err = |e: ops::OpsError| Failure::usage(e.to_string());
    match op {
        OpCommand::Tensor { p, q } => {
            println!("{}", ops::tensor(&parse_partition(&p)?, &parse_partition(&q)?));
        }
        OpCommand::Compose { q, p } => {
            let out =
                ops::compose(&parse_partition(&q)?, &parse_partition(&p)?).map_err(op_err)?;
            println!("{}", out.result);
            println!("rl={}", out.removed_loops);
        }
        OpCommand::Involution { p } => {
            println!("{}", ops::involution(&parse_partition(&p)?));
        }
        OpCommand::Reflect { p, colored } => {
            let p = parse_partition(&p)?;
            let out = if colored { ops::verticolor_reflect(&p) } else { ops::vreflect(&p) };
            println!("{out}");
        }
        OpCommand::Rotate { p, corner, keep_colors } => {
            let p = parse_partition(&p)?;
            let corner = corner.into();
            let out = if keep_colors {
                ops::rotate_keep_colors(&p, corner)
            } else {
                ops::rotate(&p, corner)
            }
            .map_err(op_err)?;
            println!("{out}");
        }
        OpCommand::Cycle { p, back } => {
            let direction = if back { CycleDirection::RightToLeft } else { CycleDirection::LeftToRight };
            println!("{}", ops::cycle_lower(&parse_partition(&p)?, direction).map_err(op_err)?);
        }
        OpCommand::Erase { p, row, j } => {
            let row = match row {
                RowArg::Upper => Row::Upper,
                RowArg::Lower => Row::Lower,
            };
            println!("{}", ops::erase_pair(&parse_partition(&p)?, row, j).map_err(op_err)?);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

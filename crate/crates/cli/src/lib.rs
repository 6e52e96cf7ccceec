//! Command-line front end: `f5 run` computes a basis for a system file,
//! `f5 bench` compares the variants on a generated benchmark system.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use f5_core::algebra::{PrimeField, Ring};
use f5_core::bench::{compare_with, cyclic, katsura, RunStats, StatsRecord};
use f5_core::drivers::{buchberger_reduced, reduced_form, run_variant, Variant, VariantConfig};
use f5_core::system::{parse_system_with_char, System};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "f5", version, about = "Gröbner bases with F5, F5R, F5C and Buchberger")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a Gröbner basis of the system in a file.
    Run(RunArgs),
    /// Compare variants on a Katsura or Cyclic system.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Buchberger,
    F5,
    F5r,
    F5c,
}

impl Algorithm {
    fn variant(self) -> Option<Variant> {
        match self {
            Algorithm::Buchberger => None,
            Algorithm::F5 => Some(Variant::F5),
            Algorithm::F5r => Some(Variant::F5R),
            Algorithm::F5c => Some(Variant::F5C),
        }
    }
}

#[derive(Args, Debug)]
struct RunArgs {
    /// System file.
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, short, value_enum, default_value = "f5c")]
    algorithm: Algorithm,
    /// Overrides the characteristic declared in the file.
    #[arg(long = "char")]
    characteristic: Option<u64>,
    /// F5C only: keep the rule lists empty after each rebuild.
    #[arg(long)]
    skip_rule_rebuild: bool,
    /// Check signature invariants after every mutation.
    #[arg(long)]
    certified: bool,
    /// Homogenize the input with a fresh lowest variable.
    #[arg(long)]
    homogenize: bool,
    /// Print the computation trace on stderr.
    #[arg(long, short)]
    verbose: bool,
    /// Write run statistics as JSON.
    #[arg(long)]
    stats_json: Option<PathBuf>,
    /// Abort once the labeled store holds this many entries.
    #[arg(long, default_value_t = 1_000_000)]
    store_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SystemKind {
    Katsura,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchAlgorithm {
    Buchberger,
    F5,
    F5r,
    F5c,
    All,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum)]
    system: SystemKind,
    #[arg(long)]
    n: usize,
    #[arg(long = "char", default_value_t = 32003)]
    characteristic: u64,
    #[arg(long, short, value_enum, default_value = "all")]
    algorithm: BenchAlgorithm,
    #[arg(long)]
    skip_rule_rebuild: bool,
    #[arg(long)]
    certified: bool,
    /// Write one JSON record per run, as an array.
    #[arg(long)]
    stats_json: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Run(args) => run_file(&args, stdout, stderr),
        Command::Bench(args) => bench(&args, stdout),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn io_error(e: std::io::Error) -> Failure {
    Failure::new(EXIT_COMPUTE, e.to_string())
}

fn write_json(path: &PathBuf, text: serde_json::Result<String>) -> Result<(), Failure> {
    let text = text.map_err(|e| Failure::new(EXIT_COMPUTE, e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| Failure::new(EXIT_COMPUTE, format!("{}: {e}", path.display())))
}

fn sort_by_head(ring: &Ring, basis: &mut [f5_core::algebra::Polynomial]) {
    basis.sort_by(|a, b| ring.cmp(a.lm().unwrap(), b.lm().unwrap()));
}

fn run_file(args: &RunArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", args.input.display())))?;
    let mut system = parse_system_with_char(&text, args.characteristic)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("{}: {e}", args.input.display())))?;
    if args.homogenize {
        system = system.homogenize();
    }
    let System { ring, polys, .. } = &system;

    let (basis, stats, agrees) = match args.algorithm.variant() {
        None => {
            if args.skip_rule_rebuild {
                return Err(Failure::new(EXIT_USAGE, "--skip-rule-rebuild requires --algorithm f5c"));
            }
            let basis = buchberger_reduced(ring, polys);
            if basis.is_empty() {
                return Err(Failure::new(EXIT_COMPUTE, "empty input system"));
            }
            (basis, RunStats::default(), None)
        }
        Some(variant) => {
            if args.skip_rule_rebuild && variant != Variant::F5C {
                return Err(Failure::new(EXIT_USAGE, "--skip-rule-rebuild requires --algorithm f5c"));
            }
            let config = VariantConfig::new(variant)
                .skip_rule_rebuild(args.skip_rule_rebuild)
                .certified(args.certified)
                .trace(args.verbose)
                .store_cap(args.store_cap);
            let result = run_variant(ring, polys, &config).map_err(|e| Failure::new(EXIT_COMPUTE, e.to_string()))?;
            for line in &result.trace {
                writeln!(stderr, "{line}").map_err(io_error)?;
            }
            let mut basis = result.basis;
            if result.reduced {
                sort_by_head(ring, &mut basis);
            }
            let agrees = args.stats_json.as_ref().map(|_| {
                let reduced = if result.reduced { basis.clone() } else { reduced_form(ring, &basis) };
                reduced == buchberger_reduced(ring, polys)
            });
            (basis, result.stats, agrees)
        }
    };

    for p in &basis {
        writeln!(stdout, "{}", system.render(&ring.monic(p))).map_err(io_error)?;
    }
    if let Some(path) = &args.stats_json {
        let name = args.algorithm.to_possible_value().unwrap().get_name().to_string();
        let mut record = StatsRecord::new(&name, ring.field.characteristic(), ring.order.name(), &stats, basis.len());
        record.reduced_basis_agrees_with_oracle = agrees;
        write_json(path, serde_json::to_string_pretty(&record))?;
    }
    Ok(())
}

fn bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let field = PrimeField::new(args.characteristic).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let system = match args.system {
        SystemKind::Katsura => katsura(args.n, field),
        SystemKind::Cyclic => cyclic(args.n, field),
    }
    .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let ring = &system.ring;

    let variants: Vec<Variant> = match args.algorithm {
        BenchAlgorithm::All => Variant::ALL.to_vec(),
        BenchAlgorithm::F5 => vec![Variant::F5],
        BenchAlgorithm::F5r => vec![Variant::F5R],
        BenchAlgorithm::F5c => vec![Variant::F5C],
        BenchAlgorithm::Buchberger => Vec::new(),
    };
    if args.skip_rule_rebuild && !variants.contains(&Variant::F5C) {
        return Err(Failure::new(EXIT_USAGE, "--skip-rule-rebuild requires the f5c variant"));
    }

    let mut records = Vec::new();
    if variants.is_empty() {
        let basis = buchberger_reduced(ring, &system.polys);
        writeln!(stdout, "buchberger basis={}", basis.len()).map_err(io_error)?;
        records.push(StatsRecord::new(
            "buchberger",
            ring.field.characteristic(),
            ring.order.name(),
            &RunStats::default(),
            basis.len(),
        ));
    } else {
        let runs = compare_with(ring, &system.polys, &variants, |v| {
            VariantConfig::new(v)
                .certified(args.certified)
                .skip_rule_rebuild(args.skip_rule_rebuild && v == Variant::F5C)
        })
        .map_err(|e| Failure::new(EXIT_COMPUTE, e.to_string()))?;
        for run in &runs {
            let t = &run.stats.totals;
            writeln!(
                stdout,
                "{:<4} pairs={} spolys={} reduction_steps={} zero_reductions={} basis={} agrees={}",
                run.variant.name(),
                t.pairs,
                t.spolys,
                t.reduction_steps,
                t.zero_reductions,
                run.basis_size_final,
                run.agrees_with_oracle
            )
            .map_err(io_error)?;
            records.push(run.record(ring));
        }
        if runs.iter().any(|r| !r.agrees_with_oracle) {
            if let Some(path) = &args.stats_json {
                write_json(path, serde_json::to_string_pretty(&records))?;
            }
            return Err(Failure::new(EXIT_COMPUTE, "a variant disagrees with the Buchberger oracle"));
        }
    }
    if let Some(path) = &args.stats_json {
        write_json(path, serde_json::to_string_pretty(&records))?;
    }
    Ok(())
}

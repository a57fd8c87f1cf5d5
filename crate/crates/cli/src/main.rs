use std::collections::HashSet;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use maxcover::io::{parse_document, write_instance};
use maxcover::{
    curve_points, curves_csv, gen_random_frequencies, gen_tight_fpt, gen_tight_greedy, solve,
    Alg5Form, Algorithm, Instance, SolverConfig, TightFptSpec, TightGreedySpec, DEFAULT_CEILING,
};

#[derive(Parser)]
#[command(
    name = "maxcover",
    version,
    about = "MaxCover / MinNonCovered solvers and benchmarks"
)]
struct Cli {
    /// Worker threads for parallel solvers (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and print a JSON report.
    Solve(SolveArgs),
    /// Write a generated instance.
    Generate {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run several algorithms on one instance and print a CSV table.
    Compare(CompareArgs),
    /// Print guarantee curves of the two exact/greedy splits as CSV.
    Curves(CurvesArgs),
    /// Recount the coverage claimed by a JSON report.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Args)]
struct SolverFlags {
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    /// Split point X for the hybrids (default K/2).
    #[arg(long = "x")]
    x_split: Option<usize>,
    /// Frequency bound p (default: the instance's maximum frequency).
    #[arg(long)]
    p_bound: Option<usize>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include the brute-force optimum when it fits under the ceiling.
    #[arg(long)]
    with_opt: bool,
    #[arg(long, default_value_t = DEFAULT_CEILING)]
    ceiling: u128,
    /// Report wall time as null, making output reproducible byte for byte.
    #[arg(long)]
    no_timing: bool,
}

impl SolverFlags {
    fn config(&self) -> SolverConfig {
        SolverConfig {
            beta: self.beta,
            epsilon: self.epsilon,
            x_split: self.x_split,
            p_bound: self.p_bound,
            alpha: self.alpha,
            seed: self.seed,
            ceiling: self.ceiling,
            with_opt: self.with_opt,
            timing: !self.no_timing,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_parser = parse_algorithm)]
    alg: Algorithm,
    /// Instance, election or graph file (default: standard input).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    flags: SolverFlags,
}

#[derive(Args)]
struct CompareArgs {
    /// Comma-separated algorithm ids (default: all).
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm)]
    algs: Vec<Algorithm>,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    flags: SolverFlags,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Maxcover,
    Vertexcover,
}

#[derive(Args)]
struct CurvesArgs {
    /// Budget; without --grid the curve is sampled at X = K..0.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0.75)]
    beta_a: f64,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long, value_enum, default_value = "maxcover")]
    alg5_form: FormArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// Random instance with element frequencies uniform in [p-min, p-max].
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        p_max: usize,
        #[arg(long, default_value_t = 1)]
        p_min: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Family on which greedy meets its frequency guarantee.
    TightGreedy {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "alpha", required_unless_present = "alpha")]
        p: Option<usize>,
        #[arg(long)]
        alpha: Option<f64>,
    },
    /// Family on which the pool solver is held near 3/4 + 3β/4.
    TightFpt {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        beta: f64,
    },
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: maxcover::Error| e.to_string())
}

/// Coverage claimed by a report disagrees with the recount.
#[derive(Debug)]
struct Mismatch(String);

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Mismatch {}

fn read_input(path: Option<&PathBuf>) -> anyhow::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("cannot read standard input")?;
            Ok(text)
        }
    }
}

fn load_instance(path: Option<&PathBuf>) -> anyhow::Result<Instance> {
    let text = read_input(path)?;
    Ok(parse_document(&text)?.into_instance()?)
}

fn emit(out: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => io::stdout()
            .write_all(text.as_bytes())
            .context("cannot write output"),
    }
}

fn run_solve(args: &SolveArgs) -> anyhow::Result<()> {
    let inst = load_instance(args.input.as_ref())?;
    let report = solve(&inst, args.alg, &args.flags.config())?;
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    emit(args.out.as_ref(), &text)
}

fn csv_option<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn run_compare(args: &CompareArgs) -> anyhow::Result<()> {
    let inst = load_instance(args.input.as_ref())?;
    let algs = if args.algs.is_empty() {
        Algorithm::ALL.to_vec()
    } else {
        args.algs.clone()
    };
    let cfg = args.flags.config();
    // one oracle run shared by every row
    let opt = if cfg.with_opt {
        solve(
            &inst,
            Algorithm::Exact,
            &SolverConfig {
                with_opt: false,
                ..cfg.clone()
            },
        )
        .ok()
        .map(|r| r.covered)
    } else {
        None
    };
    let row_cfg = SolverConfig {
        with_opt: false,
        ..cfg
    };

    let mut out = String::from("algorithm,covered,uncovered,guarantee,opt,ratio,wall_time_ms\n");
    for alg in algs {
        let r = match solve(&inst, alg, &row_cfg) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("warning: {alg} skipped: {e}");
                let _ = writeln!(out, "{alg},,,,,,");
                continue;
            }
        };
        let ratio = opt.map(|o| {
            if o == 0 {
                1.0
            } else {
                r.covered as f64 / o as f64
            }
        });
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.algorithm,
            r.covered,
            r.uncovered,
            csv_option(r.guarantee),
            csv_option(opt),
            csv_option(ratio),
            csv_option(r.wall_time_ms),
        );
    }
    emit(args.out.as_ref(), &out)
}

fn run_curves(args: &CurvesArgs) -> anyhow::Result<()> {
    let grid = match (args.grid, args.k) {
        (Some(g), _) => g,
        (None, Some(k)) => k + 1,
        (None, None) => 101,
    };
    let form = match args.alg5_form {
        FormArg::Maxcover => Alg5Form::MaxCover,
        FormArg::Vertexcover => Alg5Form::VertexCover,
    };
    let points = curve_points(args.beta_a, grid, form)?;
    emit(args.out.as_ref(), &curves_csv(&points))
}

fn run_generate(family: &Family, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let inst = match *family {
        Family::Random {
            n,
            m,
            k,
            p_max,
            p_min,
            seed,
        } => gen_random_frequencies(n, m, k, p_min, p_max, seed)?,
        Family::TightGreedy { m, k, p, alpha } => {
            let spec = match (p, alpha) {
                (Some(p), _) => TightGreedySpec::new(m, k, p)?,
                (None, Some(a)) => TightGreedySpec::from_alpha(a, m, k)?,
                (None, None) => bail!("either --p or --alpha is required"),
            };
            gen_tight_greedy(&spec)?
        }
        Family::TightFpt { p, k, beta } => gen_tight_fpt(&TightFptSpec::new(p, k, beta)?)?,
    };
    emit(out, &write_instance(&inst))
}

fn json_count(report: &serde_json::Value, key: &str) -> anyhow::Result<usize> {
    report
        .get(key)
        .and_then(serde_json::Value::as_u64)
        .map(|v| v as usize)
        .ok_or_else(|| anyhow!("report has no integer field '{key}'"))
}

/// Deliberately avoids the library's bitsets and solution type.
fn run_verify(input: &PathBuf, report_path: &PathBuf) -> anyhow::Result<()> {
    let inst = load_instance(Some(input))?;
    let text = fs::read_to_string(report_path)
        .with_context(|| format!("cannot read {}", report_path.display()))?;
    let report: serde_json::Value = serde_json::from_str(&text)
        .with_context(|| format!("{} is not valid JSON", report_path.display()))?;
    let chosen: Vec<usize> = report
        .get("chosen")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| anyhow!("report has no 'chosen' array"))?
        .iter()
        .map(|v| {
            v.as_u64()
                .map(|i| i as usize)
                .ok_or_else(|| anyhow!("non-integer set index"))
        })
        .collect::<anyhow::Result<_>>()?;

    let mut distinct = HashSet::new();
    let mut elements = HashSet::new();
    for &idx in &chosen {
        if idx == 0 || idx > inst.m() {
            return Err(Mismatch(format!("set index {idx} outside 1..={}", inst.m())).into());
        }
        if !distinct.insert(idx) {
            return Err(Mismatch(format!("set index {idx} listed twice")).into());
        }
        elements.extend(inst.sets()[idx - 1].iter().copied());
    }
    if chosen.len() > inst.k().min(inst.m()) {
        return Err(Mismatch(format!(
            "{} sets chosen, budget is {}",
            chosen.len(),
            inst.k()
        ))
        .into());
    }
    let covered = elements.len();
    let uncovered = inst.n() - covered;
    let (claimed_cov, claimed_unc) = (
        json_count(&report, "covered")?,
        json_count(&report, "uncovered")?,
    );
    if (claimed_cov, claimed_unc) != (covered, uncovered) {
        return Err(Mismatch(format!(
            "report claims covered={claimed_cov}, uncovered={claimed_unc}; recount gives covered={covered}, uncovered={uncovered}"
        ))
        .into());
    }
    println!("ok: covered={covered} uncovered={uncovered}");
    Ok(())
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<maxcover::Error>() {
        return match e {
            maxcover::Error::Parse { .. } | maxcover::Error::InvalidInstance(_) => 1,
            _ => 2,
        };
    }
    if err.downcast_ref::<Mismatch>().is_some() {
        return 2;
    }
    1
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("cannot configure the thread pool")?;
    }
    match &cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Generate { family, out } => run_generate(family, out.as_ref()),
        Command::Compare(args) => run_compare(args),
        Command::Curves(args) => run_curves(args),
        Command::Verify { input, report } => run_verify(input, report),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

//! Command-line driver for the kcuts library.
//!
//! Machine-readable output (cut or instance JSON) goes to stdout; human
//! logs go to stderr. Row and column indices are 0-based in every file and
//! 1-based in log lines. Exit codes: 0 when a cut was found or the checked
//! object is in order, 3 when the run finished but found no violated cut
//! (or found a counterexample to a cut), 2 on bad input or arguments, 1 on
//! an internal failure.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use kcuts::cuts::violation;
use kcuts::gen::{gen_lp_greedy_point, gen_random};
use kcuts::io::{cut_to_json, instance_to_json, parse_cut, parse_instance, parse_point, parse_ssp};
use kcuts::model::{validate_instance, Instance, Point};
use kcuts::oracles::{facet_rank, max_brute_n, separate_bruteforce, validate_cut_bruteforce_instance};
use kcuts::reductions::{
    reduce_ci_to_config, reduce_ci_to_eci, reduce_ci_to_genconfig, reduce_ssp_to_wi,
    reduce_ssp_to_wi_extreme, ReductionOutput,
};
use kcuts::separators::{separate_instance, separate_row, Method, Mode, SeparationResult, SparseBudget};
use kcuts::{rat, Family};
use std::fs;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "kcuts",
    version,
    about = "Build, check, and separate knapsack cutting planes with exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a fast separator on an instance file.
    Separate(SeparateArgs),
    /// Run the exhaustive maximum-violation oracle on an instance file.
    Oracle(OracleArgs),
    /// Re-derive a cut file from its certificate and check it exhaustively.
    Verify(VerifyArgs),
    /// Transform an instance or subset-sum input into another family's question.
    Reduce(ReduceArgs),
    /// Generate a random instance with a feasible fractional point.
    Gen(GenArgs),
    /// Compare fast separators against the oracle over seeded instances.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InstanceInput {
    /// Instance file: {"name"?, "A", "d", "c", "x"?}.
    #[arg(long)]
    input: String,
    /// Point to separate as a JSON array, overriding the file's "x".
    #[arg(long)]
    point: Option<String>,
}

impl InstanceInput {
    fn load(&self) -> Result<(Instance, Point)> {
        let text = fs::read_to_string(&self.input)
            .with_context(|| format!("reading {}", self.input))?;
        let (instance, file_point) = parse_instance(&text)?;
        let point = match &self.point {
            Some(raw) => {
                let p = parse_point(raw, instance.n())?;
                validate_instance(&instance, Some(&p))?;
                p
            }
            None => file_point.ok_or_else(|| no_point_error(&self.input))?,
        };
        Ok((instance, point))
    }
}

/// A file without "x" and no --point is a usage problem, not an internal one.
fn no_point_error(input: &str) -> anyhow::Error {
    anyhow::Error::new(kcuts::Error::ParseError(format!(
        "{input} carries no \"x\" and no --point was given"
    )))
}

#[derive(Args)]
struct BudgetArgs {
    /// Cap on the fractional support size the sparse routines enumerate.
    #[arg(long, default_value_t = 10)]
    alpha_count: usize,
    /// Cap on the candidate-set mass in the sparse weight separator.
    #[arg(long, default_value_t = 10)]
    alpha_mass: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SparseBudget {
        SparseBudget { alpha_count: self.alpha_count, alpha_mass: self.alpha_mass }
    }
}

#[derive(Args)]
struct SeparateArgs {
    #[command(flatten)]
    input: InstanceInput,
    /// Inequality family: ci, eci, config, genconfig, or wi.
    #[arg(long)]
    family: String,
    /// Algorithm: dp, sparse, bruteforce, or heuristic. Defaults to dp for
    /// ci and sparse for everything else.
    #[arg(long)]
    method: Option<String>,
    /// Separate only this row (0-based), instead of scanning all rows.
    #[arg(long)]
    row: Option<usize>,
    /// Row scanning policy: first or best.
    #[arg(long, default_value = "first")]
    mode: String,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Worker count; accepted for interface stability, must be at least 1.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InstanceInput,
    /// Inequality family: ci, eci, config, genconfig, or wi.
    #[arg(long)]
    family: String,
    /// Separate only this row (0-based), instead of scanning all rows.
    #[arg(long)]
    row: Option<usize>,
    /// Row scanning policy: first or best.
    #[arg(long, default_value = "best")]
    mode: String,
    /// Also report the affine rank of the feasible 0-1 points tight at the cut.
    #[arg(long)]
    facet: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file the cut refers to.
    #[arg(long)]
    instance: String,
    /// Cut file: {"family", "row", "certificate", "coeffs", "rhs", "violation"?}.
    #[arg(long)]
    cut: String,
}

#[derive(Args)]
struct ReduceArgs {
    /// ci-to-eci, ci-to-config, ci-to-genconfig, ssp-to-wi, or
    /// ssp-to-wi-extreme.
    #[arg(long)]
    kind: String,
    /// Instance file with a point for ci-*; {"alpha", "w"} for ssp-*.
    #[arg(long)]
    input: String,
    /// Point override for ci-* inputs, as a JSON array.
    #[arg(long)]
    point: Option<String>,
}

#[derive(Args)]
struct GenArgs {
    /// Number of columns.
    #[arg(long)]
    columns: usize,
    /// Number of knapsack rows.
    #[arg(long, default_value_t = 1)]
    rows: usize,
    /// Weights are drawn uniformly from 1..=weight-max.
    #[arg(long, default_value_t = 20)]
    weight_max: u64,
    /// Seed for the deterministic generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replace the random point by the greedy relaxation point of the
    /// single row (rows must be 1).
    #[arg(long)]
    greedy_point: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Number of columns per generated row.
    #[arg(long, default_value_t = 8)]
    columns: usize,
    /// Weights are drawn uniformly from 1..=weight-max.
    #[arg(long, default_value_t = 25)]
    weight_max: u64,
    /// How many seeded instances to run.
    #[arg(long, default_value_t = 100)]
    seeds: u64,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Worker count; accepted for interface stability, must be at least 1.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    threads: u32,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Separate(args) => cmd_separate(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Reduce(args) => cmd_reduce(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let input_problem = err.downcast_ref::<kcuts::Error>().is_some()
                || err.downcast_ref::<std::io::Error>().is_some();
            ExitCode::from(if input_problem { 2 } else { 1 })
        }
    }
}

/// Runs the chosen separator over the whole instance or one row and prints
/// any cut as JSON. Returns the process exit status: 0 with a cut, 3 without.
fn run_separation(
    instance: &Instance,
    x: &Point,
    family: Family,
    method: Method,
    mode: Mode,
    row: Option<usize>,
    budget: &SparseBudget,
) -> Result<(u8, SeparationResult)> {
    let result = match row {
        Some(r) => {
            if r >= instance.m() {
                bail!(kcuts::Error::IndexOutOfRange { index: r, len: instance.m() });
            }
            validate_instance(instance, Some(x))?;
            let res = separate_row(instance.row(r), x, family, method, budget)?;
            SeparationResult {
                decision: res.decision,
                cut: res.cut.map(|c| c.with_row(r)),
                stats: res.stats,
            }
        }
        None => separate_instance(instance, x, family, method, mode, budget)?,
    };
    match &result.cut {
        Some(cut) => {
            let v = violation(cut, x)?;
            eprintln!(
                "row {}: violated {} inequality, violation {}",
                cut.row_index + 1,
                family,
                v
            );
            println!("{}", cut_to_json(cut, Some(&v)));
            Ok((0, result))
        }
        None => {
            eprintln!("no violated {family} inequality");
            Ok((3, result))
        }
    }
}

fn cmd_separate(args: SeparateArgs) -> Result<u8> {
    let (instance, x) = args.input.load()?;
    let family = Family::from_str(&args.family)?;
    let method = match &args.method {
        Some(m) => Method::from_str(m)?,
        None => match family {
            Family::Cover => Method::Dp,
            _ => Method::Sparse,
        },
    };
    let mode = Mode::from_str(&args.mode)?;
    let start = Instant::now();
    let (code, result) =
        run_separation(&instance, &x, family, method, mode, args.row, &args.budget.budget())?;
    eprintln!(
        "{} candidates, {} greedy completions, {:?}",
        result.stats.candidates,
        result.stats.greedy_calls,
        start.elapsed()
    );
    Ok(code)
}

fn cmd_oracle(args: OracleArgs) -> Result<u8> {
    let (instance, x) = args.input.load()?;
    let family = Family::from_str(&args.family)?;
    let mode = Mode::from_str(&args.mode)?;
    let (code, result) = run_separation(
        &instance,
        &x,
        family,
        Method::Bruteforce,
        mode,
        args.row,
        &SparseBudget::default(),
    )?;
    if args.facet {
        if let Some(cut) = &result.cut {
            let row = instance.row(cut.row_index);
            let rank = facet_rank(row, cut)?;
            eprintln!(
                "tight-point affine rank {rank} of at most {} (a facet of the row's polytope reaches {})",
                row.n(),
                row.n() - 1
            );
        }
    }
    Ok(code)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let instance_text =
        fs::read_to_string(&args.instance).with_context(|| format!("reading {}", args.instance))?;
    let (instance, point) = parse_instance(&instance_text)?;
    let cut_text =
        fs::read_to_string(&args.cut).with_context(|| format!("reading {}", args.cut))?;
    let cut = parse_cut(&cut_text, &instance)?;
    eprintln!(
        "cut rebuilt from its certificate: {} on row {}, {} nonzero coefficients",
        cut.family,
        cut.row_index + 1,
        cut.coeffs.iter().filter(|c| **c != rat(0, 1)).count()
    );
    if let Some(x) = &point {
        let v = violation(&cut, x)?;
        if v > rat(0, 1) {
            eprintln!("violated at the instance point by {v}");
        } else {
            eprintln!("not violated at the instance point (violation {v})");
        }
    }
    let n = instance.row(cut.row_index).n();
    if n <= max_brute_n() {
        match validate_cut_bruteforce_instance(&instance, &cut)? {
            None => {
                eprintln!("holds at every feasible 0-1 point of row {}", cut.row_index + 1);
                Ok(0)
            }
            Some(witness) => {
                eprintln!("counterexample: feasible 0-1 point violating the cut");
                println!(
                    "{}",
                    serde_json::Value::Array(
                        witness
                            .coords()
                            .iter()
                            .map(|c| serde_json::Value::String(c.to_string()))
                            .collect()
                    )
                );
                Ok(3)
            }
        }
    } else {
        eprintln!(
            "row has {n} columns, beyond the exhaustive check cap of {}; certificate rebuild is the final word",
            max_brute_n()
        );
        Ok(0)
    }
}

fn cmd_reduce(args: ReduceArgs) -> Result<u8> {
    let text =
        fs::read_to_string(&args.input).with_context(|| format!("reading {}", args.input))?;
    let out: ReductionOutput = match args.kind.as_str() {
        "ci-to-eci" | "ci-to-config" | "ci-to-genconfig" => {
            let (instance, file_point) = parse_instance(&text)?;
            let x = match &args.point {
                Some(raw) => {
                    let p = parse_point(raw, instance.n())?;
                    validate_instance(&instance, Some(&p))?;
                    p
                }
                None => file_point.ok_or_else(|| no_point_error(&args.input))?,
            };
            match args.kind.as_str() {
                "ci-to-eci" => reduce_ci_to_eci(&instance, &x)?,
                "ci-to-config" => reduce_ci_to_config(&instance, &x)?,
                _ => reduce_ci_to_genconfig(&instance, &x)?,
            }
        }
        "ssp-to-wi" => reduce_ssp_to_wi(&parse_ssp(&text)?)?,
        "ssp-to-wi-extreme" => reduce_ssp_to_wi_extreme(&parse_ssp(&text)?)?,
        other => bail!(kcuts::Error::ParseError(format!("unknown reduction kind '{other}'"))),
    };
    for note in &out.notes {
        eprintln!("{note}");
    }
    println!("{}", instance_to_json(&out.instance, Some(&out.point)));
    Ok(0)
}

fn cmd_gen(args: GenArgs) -> Result<u8> {
    let (instance, x) = gen_random(args.columns, args.rows, args.weight_max, args.seed)?;
    let x = if args.greedy_point {
        if args.rows != 1 {
            bail!(kcuts::Error::ParseError(
                "--greedy-point needs a single-row instance".into()
            ));
        }
        gen_lp_greedy_point(instance.row(0), instance.objective())?
    } else {
        x
    };
    validate_instance(&instance, Some(&x))?;
    println!("{}", instance_to_json(&instance, Some(&x)));
    Ok(0)
}

fn cmd_bench(args: BenchArgs) -> Result<u8> {
    let budget = args.budget.budget();
    let pairs = [
        (Family::Cover, Method::Dp),
        (Family::ExtendedCover, Method::Sparse),
        (Family::Config, Method::Sparse),
        (Family::GenConfig, Method::Sparse),
        (Family::Weight, Method::Sparse),
    ];
    let oracle_feasible = args.columns <= max_brute_n();
    if !oracle_feasible {
        eprintln!(
            "columns exceed the exhaustive cap of {}; reporting fast separators only",
            max_brute_n()
        );
    }
    let mut yes = [0u64; 5];
    let mut agree = [0u64; 5];
    let mut fast_time = [std::time::Duration::ZERO; 5];
    let mut brute_time = [std::time::Duration::ZERO; 5];
    for seed in 0..args.seeds {
        let (instance, x) = gen_random(args.columns, 1, args.weight_max, seed)?;
        let row = instance.row(0);
        for (slot, (family, method)) in pairs.iter().enumerate() {
            let t0 = Instant::now();
            let fast = separate_row(row, &x, *family, *method, &budget)?;
            fast_time[slot] += t0.elapsed();
            if fast.decision {
                yes[slot] += 1;
            }
            if oracle_feasible {
                let t1 = Instant::now();
                let brute = separate_bruteforce(row, &x, *family)?;
                brute_time[slot] += t1.elapsed();
                if fast.decision == brute.decision {
                    agree[slot] += 1;
                }
            }
        }
    }
    println!("family      method  yes/{:<5} agree/{}", args.seeds, args.seeds);
    for (slot, (family, method)) in pairs.iter().enumerate() {
        let agreement = if oracle_feasible { agree[slot].to_string() } else { "-".into() };
        println!(
            "{:<11} {:<7} {:<9} {}",
            family.tag(),
            method.to_string(),
            yes[slot],
            agreement
        );
    }
    for (slot, (family, method)) in pairs.iter().enumerate() {
        eprintln!(
            "{} {}: fast {:?}, oracle {:?}",
            family.tag(),
            method,
            fast_time[slot],
            brute_time[slot]
        );
    }
    if oracle_feasible && pairs.iter().enumerate().any(|(slot, _)| agree[slot] != args.seeds) {
        bail!("fast separator and oracle disagreed; this is a bug");
    }
    Ok(0)
}

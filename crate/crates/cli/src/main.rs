//! `andor`: count and list fixed points of AND-OR chain networks.

mod output;

use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use andor_chain::enumerate::{enumerate_fixed_points, EnumerateOptions};
use andor_chain::oracle::{brute_force_count, OracleOptions, DEFAULT_MAX_ORACLE_N, HARD_MAX_ORACLE_N};
use andor_chain::sequences::{closed_bounds, fibonacci_table, open_bounds, padovan_table};
use andor_chain::sweep::{sweep_closed_n, sweep_open_n, Mismatch};
use andor_chain::{
    count_chain, count_finite, format_spec, BigUint, Count, parse_spec, Chain, CountEngine, EnumerateError,
    FiniteNetwork, StateVector,
};
use clap::{Parser, Subcommand, ValueEnum};

use output::{
    print_json, BoundsRecord, CheckRecord, MismatchRecord, OutputRecord, SequenceRecord,
};

const ORACLE_ENV: &str = "ANDOR_MAX_ORACLE_N";

#[derive(Parser, Debug)]
#[command(name = "andor", version, about = "Fixed points of AND-OR networks with chain topology")]
struct Cli {
    /// Emit one JSON record per line.
    #[arg(long, global = true)]
    json: bool,

    /// Perturb formula counts by one (exercises the disagreement path).
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count fixed points of each spec (reads stdin or --file when no specs are given).
    Count {
        specs: Vec<String>,
        /// One spec per line, '#' starts a comment.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// List the fixed points of a finite chain, sorted.
    Enumerate {
        spec: String,
        /// Lift the block-count cap.
        #[arg(long)]
        force: bool,
    },
    /// Compare the exhaustive count against the formula count.
    Oracle {
        spec: String,
        /// Lift the node-count cap.
        #[arg(long)]
        force: bool,
    },
    /// Sharp lower and upper bounds for chains with m middle runs.
    Bounds {
        m: u64,
        #[arg(long)]
        closed: bool,
    },
    /// Print a_0..a_N or b_0..b_N.
    Seq { sequence: Sequence, n: usize },
    /// Time the formula count against the exhaustive count.
    Bench { spec: String },
    /// Compare formula and oracle on every open chain with n <= N and every closed chain with 3 <= n <= N.
    Check {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Sequence {
    Padovan,
    Fibonacci,
}

#[derive(Debug)]
enum Failure {
    /// Bad input: parse, validation or unsupported spec.
    Input(String),
    /// A size cap was hit.
    Resource(String),
    /// Formula and oracle disagree.
    Disagree(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
            Failure::Disagree(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Resource(m) | Failure::Disagree(m) => m,
        }
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::CapExceeded { .. } => Failure::Resource(e.to_string()),
            EnumerateError::Model(m) => Failure::Input(m.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Count { specs, file } => count(cli, specs, file.as_ref()),
        Command::Enumerate { spec, force } => enumerate(cli, spec, *force),
        Command::Oracle { spec, force } => oracle(cli, spec, *force),
        Command::Bounds { m, closed } => bounds(cli, *m, *closed),
        Command::Seq { sequence, n } => seq(cli, *sequence, *n),
        Command::Bench { spec } => bench(cli, spec),
        Command::Check { max_n } => check(cli, *max_n),
    }
}

fn parse(text: &str) -> Result<Chain, Failure> {
    parse_spec(text).map_err(|e| Failure::Input(format!("{text:?}: {e}")))
}

fn finite(chain: &Chain) -> Result<FiniteNetwork<'_>, Failure> {
    chain
        .as_finite()
        .ok_or_else(|| Failure::Input("this command needs a finite chain".into()))
}

fn oracle_cap(force: bool) -> Result<usize, Failure> {
    if force {
        return Ok(HARD_MAX_ORACLE_N);
    }
    match std::env::var(ORACLE_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{ORACLE_ENV} must be a node count, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_ORACLE_N),
    }
}

fn record(chain: &Chain, count: String) -> OutputRecord {
    OutputRecord::new(format_spec(chain), chain.kind(), chain.node_count(), count)
}

fn formula_count(cli: &Cli, engine: &mut CountEngine, net: FiniteNetwork<'_>) -> BigUint {
    let v = count_finite(engine, net);
    if cli.inject_fault {
        v + 1u32
    } else {
        v
    }
}

/// Spec lines from text: blank lines and `#` comments are skipped.
fn spec_lines(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then(|| (i + 1, line.to_string()))
        })
        .collect()
}

fn count_one(text: &str, inject_fault: bool) -> Result<(Chain, String), String> {
    let chain = parse_spec(text).map_err(|e| format!("{text:?}: {e}"))?;
    let mut engine = CountEngine::new();
    let count = match count_chain(&mut engine, &chain).map_err(|e| format!("{text:?}: {e}"))? {
        Count::Finite(v) if inject_fault => Count::Finite(v + 1u32),
        c => c,
    };
    Ok((chain, count.to_string()))
}

fn count_all(inputs: &[(usize, String)], inject_fault: bool) -> Vec<Result<(Chain, String), String>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        inputs.par_iter().map(|(_, t)| count_one(t, inject_fault)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        inputs.iter().map(|(_, t)| count_one(t, inject_fault)).collect()
    }
}

fn count(cli: &Cli, specs: &[String], file: Option<&PathBuf>) -> CliResult {
    let inputs: Vec<(usize, String)> = if !specs.is_empty() {
        specs.iter().cloned().enumerate().map(|(i, s)| (i + 1, s)).collect()
    } else {
        let text = match file {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
            None => {
                let mut buf = String::new();
                io::stdin()
                    .lock()
                    .read_to_string(&mut buf)
                    .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
                buf
            }
        };
        spec_lines(&text)
    };

    let mut failures = 0;
    for ((line, _), result) in inputs.iter().zip(count_all(&inputs, cli.inject_fault)) {
        match result {
            Ok((chain, count)) => {
                if cli.json {
                    print_json(&record(&chain, count));
                } else {
                    println!("{count}");
                }
            }
            Err(msg) => {
                failures += 1;
                if specs.is_empty() {
                    eprintln!("error: line {line}: {msg}");
                } else {
                    eprintln!("error: {msg}");
                }
            }
        }
    }
    if failures > 0 {
        return Err(Failure::Input(format!("{failures} spec(s) could not be counted")));
    }
    Ok(())
}

fn enumerate(cli: &Cli, spec: &str, force: bool) -> CliResult {
    let chain = parse(spec)?;
    let net = finite(&chain)?;
    let mut options = EnumerateOptions::default();
    if force {
        options.max_blocks = usize::MAX;
    }
    let mut states = enumerate_fixed_points(net, options)?;
    if let Chain::Closed(c) = &chain {
        states = states.iter().map(|s| c.to_original_order(s)).collect();
        states.sort();
    }
    let lines: Vec<String> = states.iter().map(StateVector::to_string).collect();
    if cli.json {
        let mut rec = record(&chain, lines.len().to_string());
        rec.fixed_points = Some(lines);
        print_json(&rec);
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    Ok(())
}

fn oracle(cli: &Cli, spec: &str, force: bool) -> CliResult {
    let chain = parse(spec)?;
    let net = finite(&chain)?;
    let options = OracleOptions {
        max_n: oracle_cap(force)?,
        ..Default::default()
    };
    let truth = brute_force_count(net, options)?;
    let formula = formula_count(cli, &mut CountEngine::new(), net);
    let agrees = truth == formula;
    if cli.json {
        let mut rec = record(&chain, formula.to_string());
        rec.oracle_count = Some(truth.to_string());
        rec.agrees = Some(agrees);
        print_json(&rec);
    } else {
        println!("oracle: {truth}");
        println!("formula: {formula}");
        println!("{}", if agrees { "AGREES" } else { "DISAGREES" });
    }
    if agrees {
        Ok(())
    } else {
        Err(Failure::Disagree(format!(
            "{}: oracle {truth} but formula {formula}",
            format_spec(&chain)
        )))
    }
}

fn bounds(cli: &Cli, m: u64, closed: bool) -> CliResult {
    let (lower, upper, representable) = if closed {
        let b = closed_bounds(m as usize).map_err(|e| Failure::Input(e.to_string()))?;
        (b.bounds.lower, b.bounds.upper, b.representable)
    } else {
        let b = open_bounds(m as usize);
        (b.lower, b.upper, true)
    };
    if !representable && !cli.json {
        eprintln!("warning: m + 2 = {} runs is odd, so no closed chain has this run count", m + 2);
    }
    if cli.json {
        print_json(&BoundsRecord {
            m,
            closed,
            lower: lower.to_string(),
            upper: upper.to_string(),
            representable,
        });
    } else {
        println!("({lower}, {upper})");
    }
    Ok(())
}

fn seq(cli: &Cli, sequence: Sequence, n: usize) -> CliResult {
    let (name, values) = match sequence {
        Sequence::Padovan => ("padovan", padovan_table(n)),
        Sequence::Fibonacci => ("fibonacci", fibonacci_table(n)),
    };
    for (index, v) in values.iter().enumerate() {
        if cli.json {
            print_json(&SequenceRecord {
                sequence: name,
                index,
                value: v.to_string(),
            });
        } else {
            println!("{v}");
        }
    }
    Ok(())
}

fn bench(cli: &Cli, spec: &str) -> CliResult {
    let chain = parse(spec)?;
    let net = finite(&chain)?;
    let start = Instant::now();
    let formula = formula_count(cli, &mut CountEngine::new(), net);
    let formula_ns = start.elapsed().as_nanos() as u64;

    let options = OracleOptions {
        max_n: oracle_cap(false)?,
        ..Default::default()
    };
    let start = Instant::now();
    let oracle = match brute_force_count(net, options) {
        Ok(v) => Some((v, start.elapsed().as_nanos() as u64)),
        Err(EnumerateError::CapExceeded { .. }) => None,
        Err(e) => return Err(e.into()),
    };

    if cli.json {
        let mut rec = record(&chain, formula.to_string());
        rec.elapsed_ns = Some(formula_ns);
        if let Some((v, ns)) = &oracle {
            rec.oracle_count = Some(v.to_string());
            rec.oracle_elapsed_ns = Some(*ns);
            rec.agrees = Some(*v == formula);
        }
        print_json(&rec);
    } else {
        println!("formula: {formula} ({formula_ns} ns)");
        match &oracle {
            Some((v, ns)) => println!("oracle: {v} ({ns} ns)"),
            None => println!(
                "oracle: skipped (n = {} above cap {})",
                net.node_count(),
                options.max_n.min(HARD_MAX_ORACLE_N)
            ),
        }
    }
    match oracle {
        Some((v, _)) if v != formula => Err(Failure::Disagree(format!(
            "oracle {v} but formula {formula}"
        ))),
        _ => Ok(()),
    }
}

fn check(cli: &Cli, max_n: usize) -> CliResult {
    let cap = oracle_cap(false)?.min(HARD_MAX_ORACLE_N);
    if max_n > cap {
        return Err(Failure::Resource(format!(
            "--max-n {max_n} is above the oracle cap {cap} (set {ORACLE_ENV} to raise it)"
        )));
    }
    let exec = andor_chain::Exec::default();
    let mut report = CheckRecord {
        max_n,
        open_networks: 0,
        closed_networks: 0,
        ok: true,
        mismatch: None,
    };
    let mut mismatch: Option<Mismatch> = None;
    for n in 2..=max_n {
        match sweep_open_n(n, exec) {
            Ok(k) => report.open_networks += k,
            Err(m) => {
                mismatch = Some(m);
                break;
            }
        }
    }
    if mismatch.is_none() {
        for n in 3..=max_n {
            match sweep_closed_n(n, exec) {
                Ok(k) => report.closed_networks += k,
                Err(m) => {
                    mismatch = Some(m);
                    break;
                }
            }
        }
    }
    if cli.inject_fault && mismatch.is_none() {
        mismatch = Some(Mismatch {
            kind: "open",
            operators: String::new(),
            formula: 3u32.into(),
            oracle: 2u32.into(),
        });
    }
    report.ok = mismatch.is_none();
    report.mismatch = mismatch.as_ref().map(|m| MismatchRecord {
        kind: m.kind,
        operators: m.operators.clone(),
        formula: m.formula.to_string(),
        oracle: m.oracle.to_string(),
    });
    if cli.json {
        print_json(&report);
    } else if let Some(m) = &mismatch {
        println!(
            "MISMATCH {} chain '{}': formula {} oracle {}",
            m.kind, m.operators, m.formula, m.oracle
        );
    } else {
        println!(
            "ok: {} open networks (n = 2..{max_n}), {} closed networks (n = 3..{max_n})",
            report.open_networks, report.closed_networks
        );
    }
    match mismatch {
        Some(m) => Err(Failure::Disagree(format!("{} chain '{}' disagrees", m.kind, m.operators))),
        None => Ok(()),
    }
}

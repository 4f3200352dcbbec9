// zxopt - exhaustive search optimisation of quantum circuits
//         using the ZX-calculus
// Copyright (C) 2026 - the zxopt developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! The `zxopt` command line: optimise circuits over ZX rewrites, verify
//! semantic equivalence with the tensor oracle, and print diagram stats.
//!
//! Exit codes: 0 success, 1 input/parse error, 2 configuration or oracle
//! budget error, 3 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde::Serialize;

use zxopt::graph::Diagram;
use zxopt::metric::Metric;
use zxopt::search::{self, Extractability, SearchConfig, Strategy, TracePoint};
use zxopt::tensor::{compare_up_to_scalar, tensor_of_diagram, OracleError};
use zxopt::{json, qasm, LinearMap64, RuleId};

#[derive(Parser)]
#[command(
    name = "zxopt",
    version,
    about = "Quantum circuit optimisation by exhaustive search over ZX-diagram rewrites"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a circuit or diagram, normalise it, and search for a rewrite
    /// sequence minimising the chosen metric.
    Optimize {
        /// Input file: .qasm or .zx.json
        input: PathBuf,
        /// Metric to minimise: tcount|edges|spiders
        #[arg(long, default_value = "tcount")]
        metric: String,
        /// Search strategy: dfs|iddfs
        #[arg(long, default_value = "iddfs")]
        strategy: String,
        /// Depth bound (final bound for iddfs)
        #[arg(long, default_value_t = 6)]
        depth: usize,
        /// Wall-clock limit, e.g. 10s, 2m, 1.5h
        #[arg(long, default_value = "60s")]
        time_limit: String,
        /// Comma-separated rule order (h,b,lc,pivot,f,i1,i2,pi,c,hd)
        #[arg(long)]
        rule_order: Option<String>,
        /// Hadamard-split batches allowed per path
        #[arg(long, default_value_t = 2)]
        hd_budget: usize,
        /// Leaf acceptance predicate: always|gflow
        #[arg(long, default_value = "always")]
        extractability: String,
        /// Check input/output equivalence with the tensor oracle
        #[arg(long)]
        verify: bool,
        /// Write the best diagram here (.zx.json)
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write a JSON run report here
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write the incumbent trace as CSV here
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Compare the linear maps of two files up to a nonzero scalar.
    Verify {
        file_a: PathBuf,
        file_b: PathBuf,
        /// Relative tolerance
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Print metrics and structure predicates of a file as JSON.
    Stats { input: PathBuf },
}

#[derive(Debug)]
enum CliError {
    /// Unreadable or unparsable input.
    Input(String),
    /// Bad flags or an exceeded oracle budget.
    Config(String),
    /// The oracle says the two maps differ.
    Verify(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Config(_) => 2,
            CliError::Verify(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Config(m) | CliError::Verify(m) => write!(f, "{m}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Cmd::Optimize {
            input,
            metric,
            strategy,
            depth,
            time_limit,
            rule_order,
            hd_budget,
            extractability,
            verify,
            output,
            report,
            trace,
        } => cmd_optimize(OptimizeArgs {
            input,
            metric,
            strategy,
            depth,
            time_limit,
            rule_order,
            hd_budget,
            extractability,
            verify,
            output,
            report,
            trace,
        }),
        Cmd::Verify { file_a, file_b, tol } => cmd_verify(&file_a, &file_b, tol),
        Cmd::Stats { input } => cmd_stats(&input),
    }
}

/// A loaded input: the diagram plus the gate count when it came from QASM.
struct LoadedInput {
    diagram: Diagram,
    gates: Option<usize>,
}

fn load_input(path: &Path) -> Result<LoadedInput, CliError> {
    let name = path.to_string_lossy().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {name}: {e}")))?;
    if name.ends_with(".qasm") {
        let circuit =
            qasm::parse_qasm(&text).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
        Ok(LoadedInput { gates: Some(circuit.gates().len()), diagram: circuit.to_diagram() })
    } else if name.ends_with(".json") {
        let diagram =
            json::from_json(&text).map_err(|e| CliError::Input(format!("{name}: {e}")))?;
        Ok(LoadedInput { diagram, gates: None })
    } else {
        Err(CliError::Config(format!(
            "unknown input format for {name}: expected .qasm or .zx.json"
        )))
    }
}

fn parse_duration(s: &str) -> Result<Duration, CliError> {
    let s = s.trim();
    let split = s
        .find(|c: char| !(c.is_ascii_digit() || c == '.'))
        .unwrap_or(s.len());
    let (num, unit) = s.split_at(split);
    let value: f64 = num
        .parse()
        .map_err(|_| CliError::Config(format!("bad duration `{s}`")))?;
    let secs = match unit {
        "" | "s" => value,
        "ms" => value / 1000.0,
        "m" => value * 60.0,
        "h" => value * 3600.0,
        _ => return Err(CliError::Config(format!("bad duration unit in `{s}`"))),
    };
    if !secs.is_finite() || secs < 0.0 {
        return Err(CliError::Config(format!("bad duration `{s}`")));
    }
    Ok(Duration::from_secs_f64(secs))
}

fn parse_rule_order(s: &str) -> Result<Vec<RuleId>, CliError> {
    let rules: Result<Vec<RuleId>, String> = s
        .split(',')
        .map(|name| name.trim().parse::<RuleId>())
        .collect();
    let rules = rules.map_err(CliError::Config)?;
    if rules.is_empty() {
        return Err(CliError::Config("rule order must name at least one rule".into()));
    }
    Ok(rules)
}

#[derive(Serialize)]
struct MetricsReport {
    tcount: u64,
    edges: u64,
    spiders: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gates: Option<usize>,
}

impl MetricsReport {
    fn of(d: &Diagram, gates: Option<usize>) -> Self {
        MetricsReport {
            tcount: Metric::TCount.value(d),
            edges: Metric::EdgeCount.value(d),
            spiders: Metric::SpiderCount.value(d),
            gates,
        }
    }
}

#[derive(Serialize)]
struct Report {
    input: String,
    strategy: String,
    metric: String,
    depth_limit: usize,
    time_limit_ms: u64,
    rule_order: Vec<String>,
    hd_budget: usize,
    extractability: String,
    initial: MetricsReport,
    #[serde(rename = "final")]
    final_metrics: MetricsReport,
    best_value: u64,
    nodes_expanded: u64,
    leaves_evaluated: u64,
    terminated_by: String,
    wall_time_ms: u64,
}

struct OptimizeArgs {
    input: PathBuf,
    metric: String,
    strategy: String,
    depth: usize,
    time_limit: String,
    rule_order: Option<String>,
    hd_budget: usize,
    extractability: String,
    verify: bool,
    output: Option<PathBuf>,
    report: Option<PathBuf>,
    trace: Option<PathBuf>,
}

fn cmd_optimize(args: OptimizeArgs) -> Result<(), CliError> {
    let metric: Metric = args.metric.parse().map_err(CliError::Config)?;
    let strategy: Strategy = args.strategy.parse().map_err(CliError::Config)?;
    let extractability: Extractability =
        args.extractability.parse().map_err(CliError::Config)?;
    let time_limit = parse_duration(&args.time_limit)?;
    let rule_order = match &args.rule_order {
        Some(s) => parse_rule_order(s)?,
        None => search::DEFAULT_RULE_ORDER.to_vec(),
    };

    let loaded = load_input(&args.input)?;
    let root = loaded.diagram.to_graph_like();
    let cfg = SearchConfig {
        strategy,
        metric,
        depth_limit: args.depth,
        time_limit: Some(time_limit),
        rule_order,
        hd_budget: args.hd_budget,
        extractability,
        normalize_root: false, // the root above is already graph-like
    };

    let started = std::time::Instant::now();
    let result = search::run(&root, &cfg);
    let wall_time_ms = started.elapsed().as_millis() as u64;

    let report = Report {
        input: args.input.to_string_lossy().into_owned(),
        strategy: strategy.to_string(),
        metric: metric.to_string(),
        depth_limit: args.depth,
        time_limit_ms: time_limit.as_millis() as u64,
        rule_order: cfg.rule_order.iter().map(|r| r.to_string()).collect(),
        hd_budget: args.hd_budget,
        extractability: extractability.to_string(),
        initial: MetricsReport::of(&root, loaded.gates),
        final_metrics: MetricsReport::of(&result.best, None),
        best_value: result.best_value,
        nodes_expanded: result.nodes_expanded,
        leaves_evaluated: result.leaves_evaluated,
        terminated_by: result.terminated_by.to_string(),
        wall_time_ms,
    };

    if let Some(path) = &args.output {
        std::fs::write(path, json::to_json(&result.best))
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = &args.report {
        let text = serde_json::to_string_pretty(&report).expect("report serialises");
        std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = &args.trace {
        write_trace(path, &result.trace)?;
    }

    println!(
        "{}: {} {} -> {} ({} nodes, {} leaves, {})",
        report.input,
        metric,
        metric.value(&root),
        result.best_value,
        result.nodes_expanded,
        result.leaves_evaluated,
        report.terminated_by
    );

    if args.verify {
        verify_pair(&loaded.diagram, &result.best, 1e-9)?;
        println!("verified: optimised diagram is equivalent to the input");
    }
    Ok(())
}

/// Collapse trace rows sharing a millisecond so elapsed_ms is strictly
/// increasing (the last improvement in a millisecond wins).
fn write_trace(path: &Path, trace: &[TracePoint]) -> Result<(), CliError> {
    let mut rows: Vec<TracePoint> = Vec::with_capacity(trace.len());
    for p in trace {
        match rows.last_mut() {
            Some(last) if last.elapsed_ms == p.elapsed_ms => *last = *p,
            _ => rows.push(*p),
        }
    }
    let mut text = String::from("elapsed_ms,best_value,nodes_expanded\n");
    for p in rows {
        text.push_str(&format!("{},{},{}\n", p.elapsed_ms, p.best_value, p.nodes_expanded));
    }
    std::fs::write(path, text)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

fn oracle_err(e: OracleError) -> CliError {
    match e {
        OracleError::DimensionMismatch(..) => CliError::Verify(e.to_string()),
        _ => CliError::Config(e.to_string()),
    }
}

fn verify_pair(a: &Diagram, b: &Diagram, tol: f64) -> Result<(), CliError> {
    let ta: LinearMap64 = tensor_of_diagram(a).map_err(oracle_err)?;
    let tb: LinearMap64 = tensor_of_diagram(b).map_err(oracle_err)?;
    let cmp = compare_up_to_scalar(&ta, &tb, tol).map_err(oracle_err)?;
    println!(
        "lambda = {:.6}{:+.6}i, max residual = {:.3e}",
        cmp.lambda.re, cmp.lambda.im, cmp.max_residual
    );
    if cmp.equal {
        Ok(())
    } else {
        Err(CliError::Verify(format!(
            "linear maps differ: max residual {:.3e} exceeds tolerance {tol:.3e}",
            cmp.max_residual
        )))
    }
}

fn cmd_verify(file_a: &Path, file_b: &Path, tol: f64) -> Result<(), CliError> {
    let a = load_input(file_a)?;
    let b = load_input(file_b)?;
    verify_pair(&a.diagram, &b.diagram, tol)?;
    println!("equivalent up to a nonzero scalar (tol {tol:.1e})");
    Ok(())
}

#[derive(Serialize)]
struct Stats {
    tcount: u64,
    edges: u64,
    spiders: u64,
    graph_like: bool,
    gflow: bool,
}

fn cmd_stats(input: &Path) -> Result<(), CliError> {
    let loaded = load_input(input)?;
    let d = &loaded.diagram;
    let graph_like = d.is_graph_like();
    let gflow = if graph_like {
        zxopt::gflow_exists(d).expect("graph-like checked")
    } else {
        zxopt::gflow_exists(&d.to_graph_like()).expect("normalised to graph-like")
    };
    let stats = Stats {
        tcount: Metric::TCount.value(d),
        edges: Metric::EdgeCount.value(d),
        spiders: Metric::SpiderCount.value(d),
        graph_like,
        gflow,
    };
    println!("{}", serde_json::to_string(&stats).expect("stats serialise"));
    Ok(())
}

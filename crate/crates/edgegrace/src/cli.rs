//! Command-line front end.
//!
//! Exit status: 0 success or pass, 1 a definitive negative answer (Lo fails,
//! no labeling exists, labeling is not edge-graceful), 2 bad input or usage.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgegrace_core::diophantine::{
    integer_solutions, reduce, solve_factor_pairs, DiophantineError, QuadraticDiophantine,
};
use edgegrace_core::search::{search, EdgeOrder, SearchError, SearchMode, SearchOptions, SearchOutcome};
use edgegrace_core::{classify_fans, cycle, fan, lo_check, path, verify, Graph, GraphError, LoError, LoReport};
use serde::Serialize;
use serde_json::json;

use crate::document::{graph_to_json, labeling_to_json, read_graph, read_labeling, DocumentError, Input};
use crate::dot::labeling_to_dot;
use crate::format::{factor_pair_table, RowRecord};
use crate::parallel::search_parallel;

#[derive(Debug, Parser)]
#[command(name = "edgegrace", version, about = "Edge-graceful labelings, Lo's condition and fan classification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a generated graph document.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
    /// Check Lo's divisibility condition for a graph or a (p, q) pair.
    Lo(LoArgs),
    /// Solve a quadratic Diophantine equation ax² + bxy + dx + ey + f = 0 by factor pairs.
    Dioph(DiophArgs),
    /// Search for edge-graceful labelings of a graph.
    Search(SearchArgs),
    /// Check whether a labeling is edge-graceful.
    Verify(VerifyArgs),
    /// List the usual fans F(1,n) that pass Lo's condition.
    ClassifyFans(ClassifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Fan F(m,n): m hub vertices joined to the path P_n.
    Fan {
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Cycle C_n.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Path P_n.
    Path {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum ReportFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct LoArgs {
    /// Graph document, or `-` for standard input. Ignored when --p and --q are given.
    pub input: Option<String>,
    #[arg(long, requires = "q")]
    pub p: Option<u64>,
    #[arg(long, requires = "p")]
    pub q: Option<u64>,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct DiophArgs {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
    /// Print every factor-pair row, not just the integer solutions.
    #[arg(long)]
    pub trace: bool,
    /// Keep only solutions with x ≥ 1.
    #[arg(long)]
    pub positive_x: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    First,
    All,
    Count,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Given,
    Heuristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchFormat {
    /// One labeling document per line.
    Labels,
    /// Graphviz, one graph per labeling.
    Dot,
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Graph document, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value = "first")]
    pub mode: ModeArg,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Only compare residues at complete assignments.
    #[arg(long)]
    pub no_prune: bool,
    #[arg(long, value_enum, default_value = "heuristic")]
    pub edge_order: OrderArg,
    /// Split the search over threads by the first edge's label.
    #[arg(long)]
    pub parallel: bool,
    #[arg(long, value_enum, default_value = "labels")]
    pub format: SearchFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Labeling document, or `-` for standard input.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long = "max", value_parser = clap::value_parser!(u64).range(1..))]
    pub max: u64,
    /// Also search each surviving fan for a witness labeling.
    #[arg(long)]
    pub confirm_search: bool,
    #[arg(long)]
    pub parallel: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lo(#[from] LoError),
    #[error(transparent)]
    Diophantine(#[from] DiophantineError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Negative = 1,
    Error = 2,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Success
        } else {
            Status::Negative
        }
    }
}

/// Runs one command. Errors are reported on `err` and mapped to [`Status::Error`].
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Status {
    let result = match cli.command {
        Command::Gen { family } => cmd_gen(family, out),
        Command::Lo(args) => cmd_lo(args, out),
        Command::Dioph(args) => cmd_dioph(args, out),
        Command::Search(args) => cmd_search(args, out, err),
        Command::Verify(args) => cmd_verify(args, out),
        Command::ClassifyFans(args) => cmd_classify_fans(args, out),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        Status::Error
    })
}

fn cmd_gen(family: Family, out: &mut dyn Write) -> Result<Status, CliError> {
    let graph = match family {
        Family::Fan { m, n } => fan(m, n)?,
        Family::Cycle { n } => cycle(n)?,
        Family::Path { n } => path(n)?,
    };
    writeln!(out, "{}", graph_to_json(&graph))?;
    Ok(Status::Success)
}

fn cmd_lo(args: LoArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let (p, q) = match (args.p, args.q) {
        (Some(p), Some(q)) => (p, q),
        _ => {
            let g = read_graph(&Input::parse(args.input.as_deref().unwrap_or("-")))?;
            (g.p() as u64, g.q() as u64)
        }
    };
    let report = lo_check(p, q)?;
    match args.format {
        ReportFormat::Json => writeln!(out, "{}", lo_json(&report))?,
        ReportFormat::Text => {
            writeln!(out, "p = {}\nq = {}\nresidual = {}", report.p, report.q, report.residual)?;
            match report.quotient() {
                Some(k) => writeln!(out, "pass: {} divides {} (quotient {k})", report.p, report.residual)?,
                None => writeln!(out, "fail: {} does not divide {}", report.p, report.residual)?,
            }
        }
    }
    Ok(Status::from_bool(report.divides))
}

fn lo_json(report: &LoReport) -> serde_json::Value {
    json!({
        "p": report.p,
        "q": report.q,
        "residual": report.residual,
        "divides": report.divides,
        "quotient": report.quotient(),
    })
}

fn cmd_dioph(args: DiophArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let eq = QuadraticDiophantine::new(args.a, args.b, args.c, args.d, args.e, args.f);
    let form = reduce(eq)?;
    let rows = solve_factor_pairs(&form)?;
    let solutions: Vec<(i128, i128)> = integer_solutions(eq)?
        .into_iter()
        .filter(|&(x, _)| !args.positive_x || x >= 1)
        .collect();
    match args.format {
        ReportFormat::Json => {
            let mut doc = json!({
                "D": form.discriminant,
                "E": form.e,
                "F": form.f,
                "N": form.norm,
                "solutions": solutions.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>(),
            });
            if args.trace {
                doc["rows"] = serde_json::to_value(rows.iter().map(RowRecord::from).collect::<Vec<_>>())
                    .expect("rows serialize");
            }
            writeln!(out, "{doc}")?;
        }
        ReportFormat::Text => {
            if args.trace {
                writeln!(out, "X^2 - {}Y^2 = {}   (E = {}, F = {})", form.discriminant, form.norm, form.e, form.f)?;
                write!(out, "{}", factor_pair_table(&rows))?;
                writeln!(out)?;
            }
            for (x, y) in &solutions {
                writeln!(out, "({x}, {y})")?;
            }
        }
    }
    Ok(Status::from_bool(!solutions.is_empty()))
}

fn search_options(args: &SearchArgs) -> SearchOptions {
    SearchOptions {
        mode: match args.mode {
            ModeArg::First => SearchMode::First,
            ModeArg::All => SearchMode::All,
            ModeArg::Count => SearchMode::Count,
        },
        limit: args.limit,
        edge_order: match args.edge_order {
            OrderArg::Given => EdgeOrder::AsGiven,
            OrderArg::Heuristic => EdgeOrder::CompletionHeuristic,
        },
        prune: !args.no_prune,
    }
}

fn run_search(graph: &Graph, options: SearchOptions, parallel: bool) -> Result<SearchOutcome, SearchError> {
    if parallel {
        search_parallel(graph, options)
    } else {
        search(graph, options)
    }
}

#[derive(Serialize)]
struct OutcomeRecord<'a> {
    count: u64,
    nodes_expanded: u64,
    exhausted: bool,
    solutions: Vec<&'a [usize]>,
}

fn cmd_search(args: SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Status, CliError> {
    let graph = read_graph(&Input::parse(&args.input))?;
    if let Ok(report) = lo_check(graph.p() as u64, graph.q() as u64) {
        if !report.divides {
            writeln!(
                err,
                "warning: Lo's condition fails ({} does not divide {}); no labeling can exist",
                report.p, report.residual
            )?;
        }
    }
    let options = search_options(&args);
    let outcome = run_search(&graph, options, args.parallel)?;
    match args.format {
        SearchFormat::Labels | SearchFormat::Dot => {
            for (i, l) in outcome.solutions.iter().enumerate() {
                match args.format {
                    SearchFormat::Dot => write!(out, "{}", labeling_to_dot(l, &format!("labeling{i}")))?,
                    _ => writeln!(out, "{}", labeling_to_json(l))?,
                }
            }
            if options.mode == SearchMode::Count {
                writeln!(out, "{}", outcome.count)?;
            }
            writeln!(err, "{}", summary(&outcome))?;
        }
        SearchFormat::Json => {
            let record = OutcomeRecord {
                count: outcome.count,
                nodes_expanded: outcome.nodes_expanded,
                exhausted: outcome.exhausted,
                solutions: outcome.solutions.iter().map(|l| l.labels()).collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&record).expect("outcome serializes"))?;
        }
        SearchFormat::Text => {
            for l in &outcome.solutions {
                writeln!(out, "labels   {:?}", l.labels())?;
                writeln!(out, "residues {:?}", verify(l).induced.residues())?;
            }
            writeln!(out, "{}", summary(&outcome))?;
        }
    }
    Ok(Status::from_bool(outcome.count > 0))
}

fn summary(outcome: &SearchOutcome) -> String {
    format!(
        "{} labeling(s) found, {} nodes expanded, {}",
        outcome.count,
        outcome.nodes_expanded,
        if outcome.exhausted { "search space exhausted" } else { "stopped early" }
    )
}

fn cmd_verify(args: VerifyArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let labeling = read_labeling(&Input::parse(&args.input))?;
    let verdict = verify(&labeling);
    let residues = verdict.induced.residues();
    match args.format {
        ReportFormat::Json => writeln!(
            out,
            "{}",
            json!({
                "edge_graceful": verdict.edge_graceful,
                "residues": residues,
                "witness": verdict.witness.map(|(u, v)| [u, v]),
            })
        )?,
        ReportFormat::Text => {
            writeln!(out, "residues {residues:?}")?;
            match verdict.witness {
                None => writeln!(out, "edge-graceful")?,
                Some((u, v)) => writeln!(
                    out,
                    "not edge-graceful: vertices {u} and {v} both have residue {}",
                    residues[u]
                )?,
            }
        }
    }
    Ok(Status::from_bool(verdict.edge_graceful))
}

fn cmd_classify_fans(args: ClassifyArgs, out: &mut dyn Write) -> Result<Status, CliError> {
    let passing = classify_fans(args.max);
    let mut witnesses = Vec::new();
    let mut all_found = true;
    if args.confirm_search {
        for &n in &passing {
            let g = fan(1, n as usize)?;
            let outcome = run_search(&g, SearchOptions::default(), args.parallel)?;
            let found = outcome.solutions.into_iter().next();
            all_found &= found.is_some();
            witnesses.push((n, found));
        }
    }
    match args.format {
        ReportFormat::Json => {
            let records: Vec<serde_json::Value> = witnesses
                .iter()
                .map(|(n, w)| match w {
                    Some(l) => {
                        let v = verify(l);
                        json!({
                            "n": n,
                            "labels": l.labels(),
                            "residues": v.induced.residues(),
                            "edge_graceful": v.edge_graceful,
                        })
                    }
                    None => json!({ "n": n, "labels": null, "edge_graceful": false }),
                })
                .collect();
            let mut doc = json!({ "max": args.max, "passing": passing });
            if args.confirm_search {
                doc["witnesses"] = records.into();
            }
            writeln!(out, "{doc}")?;
        }
        ReportFormat::Text => {
            writeln!(out, "{passing:?}")?;
            for (n, w) in &witnesses {
                match w {
                    Some(l) => {
                        let v = verify(l);
                        writeln!(
                            out,
                            "F(1,{n}): labels {:?} residues {:?} {}",
                            l.labels(),
                            v.induced.residues(),
                            if v.edge_graceful { "edge-graceful" } else { "NOT edge-graceful" }
                        )?;
                    }
                    None => writeln!(out, "F(1,{n}): no edge-graceful labeling exists")?,
                }
            }
        }
    }
    Ok(Status::from_bool(all_found))
}

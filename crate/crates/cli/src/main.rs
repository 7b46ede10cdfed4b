//! `rough-graceful` command-line front end.
//!
//! Exit codes: 0 pass/found, 1 fail/none verdict, 2 malformed input or
//! usage, 3 domain or parameter error, 4 I/O error.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indexmap::IndexMap;
use serde_json::json;

use rough_graceful::io::json::{format_weight, parse_weight};
use rough_graceful::io::{
    build_from_table, graph_from_json, graph_to_json, load_graph, load_table, membership_table, to_dot, LabeledGraph,
    LabelingFile, TargetSelector,
};
use rough_graceful::labeling::theorems::label_theorem;
use rough_graceful::search::{run_search, SearchMode};
use rough_graceful::{
    audit_all_modes, audit_theorem, verify, AuditReport, Error, Family, InformationSystem, Mode, SearchConfig,
    SearchOutcome, VertexLabeling,
};

#[derive(Parser)]
#[command(
    name = "rough-graceful",
    version,
    about = "Rough graphs and even-vertex zeta-graceful labelings"
)]
struct Cli {
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format; each command accepts a subset.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Suppress summaries on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Args)]
struct TableArgs {
    /// CSV file whose first column is `id`.
    csv: PathBuf,
    /// Column to treat as the decision attribute.
    #[arg(long)]
    decision: Option<String>,
    /// Comma-separated attributes to partition on (default: all condition attributes).
    #[arg(long, value_delimiter = ',')]
    attrs: Option<Vec<String>>,
    /// Comma-separated target object ids.
    #[arg(long, conflicts_with = "target_decision")]
    target: Option<String>,
    /// Target objects by value, as ATTRIBUTE=VALUE.
    #[arg(long)]
    target_decision: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Read an information table and report its partition and memberships.
    Ingest(TableArgs),
    /// Build the rough graph of an information table.
    BuildGraph {
        #[command(flatten)]
        table: TableArgs,
        /// Also write a DOT rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Generate a family graph.
    Generate {
        family: Family,
        #[arg(long)]
        n: usize,
        /// CSV with header `id,weight` overriding vertex weights.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
    /// Closed-form labeling of a family graph.
    Label {
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "corrected")]
        mode: Mode,
    },
    /// Induce edge labels on a graph from vertex labels.
    Induce {
        graph: PathBuf,
        /// JSON object mapping vertex id to label.
        #[arg(long)]
        labels: PathBuf,
    },
    /// Check a labeling file.
    Verify { labeling: PathBuf },
    /// Compare a theorem's claimed edge labels with the induced ones.
    Audit {
        family: Family,
        #[arg(long, conflicts_with = "range", required_unless_present = "range")]
        n: Option<usize>,
        /// Inclusive size range, `a..b`.
        #[arg(long, value_parser = parse_range)]
        range: Option<RangeInclusive<usize>>,
        /// Audit only this variant (default: every variant).
        #[arg(long)]
        mode: Option<Mode>,
    },
    /// Search for a labeling with labels from {0, 2, .., 2*cap}.
    Search {
        graph: PathBuf,
        #[arg(long)]
        cap: u64,
        /// Count every labeling within the pool.
        #[arg(long)]
        count_all: bool,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
        /// Leave 0 out of the label pool.
        #[arg(long)]
        no_zero: bool,
    },
    /// Render a graph or labeling file as DOT.
    ExportDot { input: PathBuf },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got `{s}`"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Core(Error::Io(e))
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::Parse { .. } | Error::Format(_) | Error::Json(_) | Error::Csv(_) => 2,
                Error::Parameter(_) | Error::Config(_) | Error::Domain(_) | Error::Overflow(_) => 3,
                Error::Io(_) | Error::File { .. } => 4,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

struct Output {
    out: Option<PathBuf>,
    quiet: bool,
}

impl Output {
    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => write_file(path, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(())
    }

    fn note(&self, text: &str) {
        if !self.quiet {
            eprintln!("{text}");
        }
    }
}

fn format_for(requested: Option<Format>, allowed: &[Format], default: Format, cmd: &str) -> Result<Format, CliError> {
    let f = requested.unwrap_or(default);
    if !allowed.contains(&f) {
        let name = f
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default();
        return Err(CliError::Usage(format!("{cmd} does not support --format {name}")));
    }
    Ok(f)
}

fn load_system(args: &TableArgs) -> Result<(InformationSystem, Vec<String>), CliError> {
    let mut sys = load_table(&args.csv)?;
    if let Some(d) = &args.decision {
        sys.set_decision(d)?;
    }
    let selector = match (&args.target, &args.target_decision) {
        (Some(ids), None) => TargetSelector::ids(ids),
        (None, Some(spec)) => TargetSelector::attribute_value(spec)?,
        _ => {
            return Err(CliError::Usage(
                "one of --target or --target-decision is required".into(),
            ))
        }
    };
    let target = selector.resolve(&sys)?;
    Ok((sys, target))
}

fn run(cli: Cli) -> Result<Verdict, CliError> {
    let out = Output {
        out: cli.out,
        quiet: cli.quiet,
    };
    match cli.command {
        Command::Ingest(args) => {
            let fmt = format_for(cli.format, &[Format::Json, Format::Table], Format::Table, "ingest")?;
            let (sys, target) = load_system(&args)?;
            let result = build_from_table(&sys, args.attrs.as_deref(), &target)?;
            let text = match fmt {
                Format::Json => {
                    let value = json!({
                        "objects": sys.objects(),
                        "condition_attributes": sys.condition_attributes().collect::<Vec<_>>(),
                        "decision_attribute": sys.decision_attribute(),
                        "partition": result.partition.blocks(),
                        "target": target,
                        "memberships": result.memberships.iter()
                            .map(|(id, w)| json!({"id": id, "membership": format_weight(w)}))
                            .collect::<Vec<_>>(),
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
                }
                _ => {
                    let blocks: Vec<String> = result
                        .partition
                        .blocks()
                        .iter()
                        .map(|b| format!("{{{}}}", b.join(", ")))
                        .collect();
                    format!(
                        "objects: {}\ntarget: {{{}}}\npartition: {}\nmembership:\n{}",
                        sys.objects().len(),
                        target.join(", "),
                        blocks.join(" "),
                        membership_table(&result.memberships)
                    )
                }
            };
            out.emit(&text)?;
            Ok(Verdict::Pass)
        }
        Command::BuildGraph { table, dot } => {
            let fmt = format_for(cli.format, &[Format::Json, Format::Dot], Format::Json, "build-graph")?;
            let (sys, target) = load_system(&table)?;
            let result = build_from_table(&sys, table.attrs.as_deref(), &target)?;
            if !out.quiet {
                eprint!("{}", membership_table(&result.memberships));
            }
            out.note(&format!(
                "{} vertices, {} edges",
                result.graph.vertex_count(),
                result.graph.edge_count()
            ));
            if let Some(path) = dot {
                write_file(&path, &to_dot(&result.graph, None))?;
            }
            out.emit(&match fmt {
                Format::Dot => to_dot(&result.graph, None),
                _ => graph_to_json(&result.graph),
            })?;
            Ok(Verdict::Pass)
        }
        Command::Generate { family, n, weights } => {
            let fmt = format_for(cli.format, &[Format::Json, Format::Dot], Format::Json, "generate")?;
            let mut graph = family.generate(n)?.graph;
            if let Some(path) = weights {
                graph.set_weights(&read_weights(&path)?)?;
            }
            out.emit(&match fmt {
                Format::Dot => to_dot(&graph, None),
                _ => graph_to_json(&graph),
            })?;
            Ok(Verdict::Pass)
        }
        Command::Label { family, n, mode } => {
            let fmt = format_for(cli.format, &[Format::Json, Format::Dot], Format::Json, "label")?;
            let t = label_theorem(family, n, mode)?;
            let lg = LabeledGraph::from_theorem(&t)?;
            let report = verify(&lg.graph, &lg.labels);
            out.emit(&match fmt {
                Format::Dot => to_dot(&lg.graph, Some(&lg.induced)),
                _ => lg.to_json(),
            })?;
            out.note(&format!(
                "{family} n={n}{}: {}",
                t.mode.map_or(String::new(), |m| format!(" ({m})")),
                if report.passed() { "graceful" } else { "not graceful" }
            ));
            Ok(if report.passed() { Verdict::Pass } else { Verdict::Fail })
        }
        Command::Induce { graph, labels } => {
            let fmt = format_for(cli.format, &[Format::Json, Format::Dot], Format::Json, "induce")?;
            let g = load_graph(&graph)?;
            let map: IndexMap<String, u64> = serde_json::from_str(&read_file(&labels)?).map_err(Error::from)?;
            let f = VertexLabeling::from_pairs(map)?;
            let lg = LabeledGraph::new(g, f)?;
            out.emit(&match fmt {
                Format::Dot => to_dot(&lg.graph, Some(&lg.induced)),
                _ => lg.to_json(),
            })?;
            Ok(if verify(&lg.graph, &lg.labels).passed() {
                Verdict::Pass
            } else {
                Verdict::Fail
            })
        }
        Command::Verify { labeling } => {
            let fmt = format_for(cli.format, &[Format::Json, Format::Table], Format::Table, "verify")?;
            let (file, graph) = LabelingFile::load(&labeling)?;
            let f = file.vertex_labeling();
            let report = verify(&graph, &f);
            let stale = match file.to_labeled(graph.clone()) {
                Ok(lg) => file.stale_fields(&lg),
                Err(_) => Vec::new(),
            };
            let passed = report.passed() && stale.is_empty();
            let text = match fmt {
                Format::Json => {
                    let value = json!({
                        "passed": passed,
                        "unlabeled": report.unlabeled,
                        "unknown": report.unknown,
                        "odd_labels": report.odd_labels,
                        "repeated_vertex_labels": report.repeated_vertex_labels,
                        "repeated_edge_labels": report.repeated_edge_labels,
                        "stale": stale,
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
                }
                _ => {
                    let mut s = format!("{report}\n");
                    for line in &stale {
                        s.push_str(&format!("stale: {line}\n"));
                    }
                    s
                }
            };
            out.emit(&text)?;
            Ok(if passed { Verdict::Pass } else { Verdict::Fail })
        }
        Command::Audit { family, n, range, mode } => {
            let fmt = format_for(cli.format, &[Format::Json, Format::Table], Format::Table, "audit")?;
            let sizes = match (n, range) {
                (Some(n), None) => n..=n,
                (None, Some(r)) => r,
                _ => return Err(CliError::Usage("give exactly one of --n or --range".into())),
            };
            let reports = audit_sizes(family, sizes, mode)?;
            let text = match fmt {
                Format::Json => {
                    let value: Vec<_> = reports.iter().map(audit_json).collect();
                    format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
                }
                _ => reports.iter().map(|r| format!("{r}\n\n")).collect::<String>(),
            };
            out.emit(&text)?;
            let total: usize = reports.iter().map(|r| r.discrepancies).sum();
            out.note(&format!("{} report(s), {total} discrepancies", reports.len()));
            Ok(if total == 0 { Verdict::Pass } else { Verdict::Fail })
        }
        Command::Search {
            graph,
            cap,
            count_all,
            parallel,
            no_zero,
        } => {
            format_for(cli.format, &[Format::Json], Format::Json, "search")?;
            let g = load_graph(&graph)?;
            let mut cfg = SearchConfig::new(cap).threads(parallel).mode(if count_all {
                SearchMode::CountAll
            } else {
                SearchMode::FirstSolution
            });
            if no_zero {
                cfg = cfg.without_zero();
            }
            let report = run_search(&g, &cfg)?;
            let found = match &report.outcome {
                SearchOutcome::Found(f) => Some(LabeledGraph::new(g.clone(), f.clone())?),
                SearchOutcome::NoneWithinPool => None,
            };
            let text = match (count_all, &found) {
                (false, Some(lg)) => lg.to_json(),
                _ => {
                    let value = json!({
                        "count": report.count,
                        "first": found.as_ref().map(|lg| serde_json::to_value(lg.to_file()).expect("serializable")),
                        "verdict": if found.is_some() { "found" } else { "none-within-pool" },
                    });
                    format!("{}\n", serde_json::to_string_pretty(&value).expect("serializable"))
                }
            };
            out.emit(&text)?;
            out.note(&format!(
                "{} ({} nodes)",
                if found.is_some() { "found" } else { "none within pool" },
                report.nodes
            ));
            Ok(if found.is_some() { Verdict::Pass } else { Verdict::Fail })
        }
        Command::ExportDot { input } => {
            format_for(cli.format, &[Format::Dot], Format::Dot, "export-dot")?;
            let text = read_file(&input)?;
            let dot = match LabelingFile::parse(&text) {
                Ok(file) => {
                    let graph = file.graph(input.parent())?;
                    let lg = file.to_labeled(graph)?;
                    to_dot(&lg.graph, Some(&lg.induced))
                }
                Err(_) => to_dot(&graph_from_json(&text)?, None),
            };
            out.emit(&dot)?;
            Ok(Verdict::Pass)
        }
    }
}

fn audit_sizes(family: Family, sizes: RangeInclusive<usize>, mode: Option<Mode>) -> Result<Vec<AuditReport>, CliError> {
    match mode {
        Some(mode) => {
            let mut reports = Vec::new();
            for n in sizes {
                reports.push(audit_theorem(family, n, mode)?);
            }
            Ok(reports)
        }
        None if sizes.start() == sizes.end() => Ok(audit_all_modes(family, *sizes.start())?),
        None => Ok(rough_graceful::audit_range(family, sizes)?),
    }
}

fn audit_json(r: &AuditReport) -> serde_json::Value {
    json!({
        "family": r.family.name(),
        "n": r.n,
        "mode": r.mode.map(|m| m.name()),
        "m": r.m,
        "rows": r.rows.iter().map(|row| json!({
            "name": row.name,
            "edge": [row.edge.0, row.edge.1],
            "claimed": row.claimed,
            "induced": row.induced,
            "match": row.matches,
        })).collect::<Vec<_>>(),
        "discrepancies": r.discrepancies,
        "uncovered": r.uncovered.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        "graceful": r.verified,
    })
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| {
        Error::File {
            path: path.to_path_buf(),
            source,
        }
        .into()
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| {
        Error::File {
            path: path.to_path_buf(),
            source,
        }
        .into()
    })
}

fn read_weights(path: &Path) -> Result<Vec<(String, rough_graceful::Weight)>, CliError> {
    let text = read_file(path)?;
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, header)) if header.replace(' ', "") == "id,weight" => {}
        _ => {
            return Err(Error::Parse {
                line: 1,
                message: "weights file must start with header `id,weight`".into(),
            }
            .into())
        }
    }
    lines
        .map(|(i, line)| {
            let (id, w) = line.split_once(',').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("expected `id,weight`, got `{line}`"),
            })?;
            Ok((id.trim().to_string(), parse_weight(w)?))
        })
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

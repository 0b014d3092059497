//! Command-line interface.
//!
//! Exit codes: 0 success, 1 verification failures, 2 bad input, 3 budget
//! exhausted where a point answer was demanded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use super::{verify, FamilyConfig, Ledger, RowStatus};
use crate::classifier::classify;
use crate::graph::{build_pis, export_dot, graph_stats, parse_edge_list, GraphStats, SimpleGraph};
use crate::patterns::{
    classify_graph, find_induced, find_subdivision, GraphClass, InducedWitness, Membership, Pattern,
    PatternError, SubdivisionWitness,
};
use crate::ring::{load_ring_spec, parse_ring_spec, RingSpec};
use crate::surface::{
    crosscap_complete, crosscap_complete_bipartite, crosscap_exact, crosscap_of, euler_lower_bounds,
    genus_complete, genus_complete_bipartite, genus_exact, genus_of, verify_report, SurfaceReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURES: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Parser, Debug)]
#[command(name = "pisgraph", version, about = "Prime ideal sum graphs of finite commutative rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the graph of a ring and print its statistics.
    Build {
        spec: String,
        /// Write Graphviz output to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Predict the profile of a ring from its factor shape.
    Classify {
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the direct recognizers on the graph of a ring.
    Invariants {
        spec: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Orientable genus of a ring's graph or an edge-list graph.
    Genus {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Crosscap number of a ring's graph or an edge-list graph.
    Crosscap {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compare searched values on complete graphs with closed forms.
    Formulas {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_mn: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check predictions against computation over a ring family.
    Verify {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        ledger: Option<PathBuf>,
        /// Write the full JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Search for an induced pattern or a subdivision.
    Find {
        spec: String,
        #[arg(long)]
        pattern: String,
        /// Vertex indices to search first, comma separated.
        #[arg(long, value_delimiter = ',')]
        hints: Option<Vec<usize>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(clap::Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Ring spec file or inline JSON.
    spec: Option<String>,
    /// Edge-list file, one `u v` pair per line.
    #[arg(long)]
    graph: Option<PathBuf>,
}

/// A user-facing failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn bad_input(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_BAD_INPUT,
        message: message.to_string(),
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the CLI with the given arguments (the first is the program name),
/// writing to stdout and stderr. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// As [`run`], with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Build { spec, dot, json } => build(&spec, dot.as_deref(), json, out),
        Command::Classify { spec, json } => classify_cmd(&spec, json, out),
        Command::Invariants { spec, json, budget } => invariants(&spec, budget, json, out),
        Command::Genus { input, budget, json } => surface_cmd(&input, budget, json, false, out),
        Command::Crosscap { input, budget, json } => surface_cmd(&input, budget, json, true, out),
        Command::Formulas {
            max_n,
            max_mn,
            budget,
            json,
        } => formulas(max_n, max_mn, budget, json, out),
        Command::Verify {
            config,
            ledger,
            out: report_path,
            json,
        } => verify_cmd(&config, ledger, report_path, json, out),
        Command::Find {
            spec,
            pattern,
            hints,
            budget,
            json,
        } => find(&spec, &pattern, hints, budget, json, out),
    }
}

fn io_err(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_BAD_INPUT,
        message: e.to_string(),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(io_err)
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(bad_input)?;
    emit(out, &text)?;
    emit(out, "\n")
}

/// A ring spec given as a file path or as inline JSON.
fn load_ring(spec: &str) -> Result<RingSpec, Failure> {
    let path = Path::new(spec);
    let ring = if path.exists() {
        load_ring_spec(path)
    } else if spec.trim_start().starts_with('{') {
        parse_ring_spec(spec)
    } else {
        return Err(bad_input(format!("no such ring spec file: {spec}")));
    };
    ring.map_err(bad_input)
}

fn ring_graph(spec: &str) -> Result<(RingSpec, crate::graph::LabeledGraph), Failure> {
    let ring = load_ring(spec)?;
    let g = build_pis(&ring).map_err(bad_input)?;
    Ok((ring, g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildOutput {
    pub ring: String,
    pub key: String,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub stats: GraphStats,
}

fn build(spec: &str, dot: Option<&Path>, json: bool, out: &mut dyn Write) -> CmdResult {
    let (ring, g) = ring_graph(spec)?;
    if let Some(p) = dot {
        std::fs::write(p, export_dot(&g)).map_err(io_err)?;
    }
    let stats = graph_stats(&g);
    if json {
        emit_json(
            out,
            &BuildOutput {
                ring: ring.describe(),
                key: ring.canonical_key(),
                labels: g.labels().to_vec(),
                edges: g.edges().collect(),
                stats,
            },
        )?;
    } else {
        let girth = stats.girth.map_or("inf".to_string(), |x| x.to_string());
        emit(
            out,
            &format!(
                "{}\nvertices {}\nedges {}\ngirth {}\ncomponents {}\n",
                ring.describe(),
                stats.vertices,
                stats.edges,
                girth,
                stats.components
            ),
        )?;
    }
    Ok(EXIT_OK)
}

fn classify_cmd(spec: &str, json: bool, out: &mut dyn Write) -> CmdResult {
    let ring = load_ring(spec)?;
    let p = classify(&ring.shape_summary());
    if json {
        emit_json(out, &p)?;
    } else {
        let mut text = format!("{}\n", ring.describe());
        for (k, v) in [
            ("split", p.split.to_string()),
            ("threshold", p.threshold.to_string()),
            ("cograph", p.cograph.to_string()),
            ("cactus", p.cactus.to_string()),
            ("unicyclic", p.unicyclic.to_string()),
            ("planar", p.planar.to_string()),
            ("outerplanar", p.outerplanar.to_string()),
            ("genus", p.genus_class.to_string()),
            ("crosscap", p.crosscap_class.to_string()),
        ] {
            text.push_str(&format!("{k:<12} {v}\n"));
        }
        if let Some(n) = &p.note {
            text.push_str(&format!("note         {n}\n"));
        }
        emit(out, &text)?;
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsOutput {
    pub ring: String,
    pub stats: GraphStats,
    pub classes: Vec<Membership>,
    /// `None` when the search ran out of budget.
    pub planar: Option<bool>,
    pub kuratowski: Option<SubdivisionWitness>,
    pub outerplanar: Option<bool>,
    pub outer_obstruction: Option<SubdivisionWitness>,
    pub euler_lower_bounds: Option<(u32, u32)>,
}

/// `Some(witness)` for the first pattern found, `None` if none exists.
fn first_subdivision(
    g: &SimpleGraph,
    patterns: &[crate::patterns::TopoPattern],
    budget: u64,
) -> Result<Option<SubdivisionWitness>, PatternError> {
    for &p in patterns {
        if let Some(w) = find_subdivision(g, p, None, budget)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn invariants(spec: &str, budget: u64, json: bool, out: &mut dyn Write) -> CmdResult {
    use crate::patterns::TopoPattern::*;
    let (ring, g) = ring_graph(spec)?;
    let classes: Vec<Membership> = GraphClass::ALL.iter().map(|&c| classify_graph(&g, c)).collect();
    let kura = first_subdivision(&g, &[K5, K33], budget).ok();
    let outer = first_subdivision(&g, &[K4, K23], budget).ok();
    let o = InvariantsOutput {
        ring: ring.describe(),
        stats: graph_stats(&g),
        classes,
        planar: kura.as_ref().map(|w| w.is_none()),
        kuratowski: kura.flatten(),
        outerplanar: outer.as_ref().map(|w| w.is_none()),
        outer_obstruction: outer.flatten(),
        euler_lower_bounds: euler_lower_bounds(&g).ok(),
    };
    if json {
        emit_json(out, &o)?;
    } else {
        let yn = |b: Option<bool>| b.map_or("unknown", |b| if b { "yes" } else { "no" });
        let mut text = format!("{}\n", o.ring);
        for m in &o.classes {
            text.push_str(&format!("{:<12} {}\n", m.class.name(), yn(Some(m.member))));
        }
        text.push_str(&format!("{:<12} {}\n", "planar", yn(o.planar)));
        text.push_str(&format!("{:<12} {}\n", "outerplanar", yn(o.outerplanar)));
        emit(out, &text)?;
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceOutput {
    /// Set when the bounds meet.
    pub value: Option<u32>,
    pub lower: u32,
    pub upper: u32,
    /// One report per component with edges.
    pub reports: Vec<SurfaceReport>,
}

fn surface_cmd(input: &GraphInput, budget: u64, json: bool, crosscap: bool, out: &mut dyn Write) -> CmdResult {
    let g: SimpleGraph = match (&input.spec, &input.graph) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(io_err)?;
            parse_edge_list(&text).map_err(bad_input)?
        }
        (Some(spec), None) => ring_graph(spec)?.1.graph().clone(),
        (None, None) => return Err(bad_input("give a ring spec or --graph")),
    };
    let mut reports = Vec::new();
    for comp in g.components() {
        let sub = g.induced(&comp);
        if sub.edge_count() == 0 {
            continue;
        }
        let r = if crosscap {
            crosscap_of(&sub, budget)
        } else {
            genus_of(&sub, budget)
        }
        .map_err(bad_input)?;
        verify_report(&sub, &r).map_err(bad_input)?;
        reports.push(r);
    }
    if crosscap && reports.len() > 1 && reports.iter().any(|r| r.upper_bound() > 0) {
        return Err(bad_input("crosscap number of a disconnected nonplanar graph is not supported"));
    }
    let (lower, upper) = reports
        .iter()
        .fold((0, 0), |(l, u), r| (l + r.lower_bound(), u + r.upper_bound()));
    let o = SurfaceOutput {
        value: (lower == upper).then_some(lower),
        lower,
        upper,
        reports,
    };
    if json {
        emit_json(out, &o)?;
    } else {
        let what = if crosscap { "crosscap" } else { "genus" };
        let text = match o.value {
            Some(v) => {
                let how = o.reports.first().map_or("no edges", |r| r.lower.kind());
                format!("{what} {v}\nlower bound by {how}\n")
            }
            None => format!("{what} in [{lower}, {upper}]\n"),
        };
        emit(out, &text)?;
    }
    Ok(if o.value.is_some() { EXIT_OK } else { EXIT_BUDGET })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaRow {
    pub graph: String,
    pub invariant: String,
    pub formula: u32,
    pub lower: u32,
    pub upper: u32,
    /// `agree`, `disagree`, or `open` when the search did not conclude
    /// but the interval contains the formula value.
    pub status: String,
}

fn formulas(max_n: usize, max_mn: usize, budget: u64, json: bool, out: &mut dyn Write) -> CmdResult {
    let mut rows = Vec::new();
    let mut push = |name: String, inv: &str, formula: u32, r: &SurfaceReport| {
        let (lower, upper) = (r.lower_bound(), r.upper_bound());
        let status = if lower == upper && lower == formula {
            "agree"
        } else if formula < lower || formula > upper {
            "disagree"
        } else {
            "open"
        };
        rows.push(FormulaRow {
            graph: name,
            invariant: inv.to_string(),
            formula,
            lower,
            upper,
            status: status.to_string(),
        });
    };
    for n in 3..=max_n {
        let g = SimpleGraph::complete(n);
        let r = genus_exact(&g, budget).map_err(bad_input)?;
        push(format!("K{n}"), "genus", genus_complete(n), &r);
        let r = crosscap_exact(&g, budget).map_err(bad_input)?;
        push(format!("K{n}"), "crosscap", crosscap_complete(n), &r);
    }
    for m in 1..=max_mn {
        for n in m..=max_mn {
            let g = SimpleGraph::complete_bipartite(m, n);
            let r = genus_exact(&g, budget).map_err(bad_input)?;
            push(format!("K{m},{n}"), "genus", genus_complete_bipartite(m, n), &r);
            let r = crosscap_exact(&g, budget).map_err(bad_input)?;
            push(format!("K{m},{n}"), "crosscap", crosscap_complete_bipartite(m, n), &r);
        }
    }
    if json {
        emit_json(out, &rows)?;
    } else {
        let mut text = format!("{:<8} {:<9} {:>7} {:>9} {}\n", "graph", "invariant", "formula", "search", "status");
        for r in &rows {
            let found = if r.lower == r.upper {
                r.lower.to_string()
            } else {
                format!("[{},{}]", r.lower, r.upper)
            };
            text.push_str(&format!(
                "{:<8} {:<9} {:>7} {:>9} {}\n",
                r.graph, r.invariant, r.formula, found, r.status
            ));
        }
        emit(out, &text)?;
    }
    Ok(if rows.iter().any(|r| r.status == "disagree") {
        EXIT_FAILURES
    } else {
        EXIT_OK
    })
}

fn verify_cmd(
    config: &Path,
    ledger: Option<PathBuf>,
    report_path: Option<PathBuf>,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let text = std::fs::read_to_string(config).map_err(io_err)?;
    let cfg: FamilyConfig = serde_json::from_str(&text).map_err(bad_input)?;
    cfg.validate().map_err(bad_input)?;
    let ledger = ledger.map(Ledger::new);
    let report = verify(&cfg, ledger.as_ref()).map_err(bad_input)?;
    if let Some(p) = report_path {
        let body = serde_json::to_string_pretty(&report).map_err(bad_input)?;
        std::fs::write(p, body).map_err(io_err)?;
    }
    if json {
        emit_json(out, &report)?;
    } else {
        emit(out, &report.table())?;
        for w in &report.ledger_warnings {
            emit(out, &format!("warning: {w}\n"))?;
        }
    }
    Ok(if report.rows.iter().any(|r| r.status == RowStatus::Fail) {
        EXIT_FAILURES
    } else {
        EXIT_OK
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FindOutput {
    Induced { witness: Option<InducedWitness> },
    Subdivision { witness: Option<SubdivisionWitness> },
}

fn find(
    spec: &str,
    pattern: &str,
    hints: Option<Vec<usize>>,
    budget: u64,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let pattern: Pattern = pattern.parse().map_err(bad_input)?;
    let (_, g) = ring_graph(spec)?;
    let o = match pattern {
        Pattern::Induced(p) => FindOutput::Induced {
            witness: find_induced(&g, p),
        },
        Pattern::Topological(p) => match find_subdivision(&g, p, hints.as_deref(), budget) {
            Ok(w) => FindOutput::Subdivision { witness: w },
            Err(PatternError::BudgetExhausted) => {
                return Err(Failure {
                    code: EXIT_BUDGET,
                    message: "search budget exhausted".into(),
                })
            }
            Err(e) => return Err(bad_input(e)),
        },
    };
    if json {
        emit_json(out, &o)?;
    } else {
        let name = |v: &usize| g.label(*v).to_string();
        let text = match &o {
            FindOutput::Induced { witness: Some(w) } => {
                format!("{pattern} on {}\n", w.vertices.iter().map(name).collect::<Vec<_>>().join(" "))
            }
            FindOutput::Subdivision { witness: Some(w) } => {
                let mut t = format!(
                    "{pattern} subdivision, branch vertices {}\n",
                    w.branch.iter().map(name).collect::<Vec<_>>().join(" ")
                );
                for p in &w.paths {
                    t.push_str(&format!("  {}\n", p.iter().map(name).collect::<Vec<_>>().join(" - ")));
                }
                t
            }
            _ => format!("no {pattern}\n"),
        };
        emit(out, &text)?;
    }
    Ok(EXIT_OK)
}

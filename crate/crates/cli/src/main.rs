//! Command-line front end: classify edge rings and stable set rings, run
//! the trace oracles with certificates, check posets, and drive batch
//! agreement sweeps.
//!
//! Exit codes: 0 for a completed classification (whatever the verdict),
//! 2 for input errors, 3 for resource or bound errors.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use ngor::edge_ring::{
    self, classify_nearly_gorenstein, default_degree_bound, trace_degree1, ClassificationRule,
    EdgeRingError, EdgeRingVerdict, MultipartiteType, TraceCertificate,
};
use ngor::graph::{self, Graph, GraphError};
use ngor::hibi::{self, Poset, PosetError};
use ngor::lattice::LatticeError;
use ngor::stable_set::{
    self, classify_stab, default_q_bound, trace_oracle_stab, StabError, StabTraceCertificate,
    StabVerdict,
};

#[derive(Parser)]
#[command(
    name = "ngor",
    version,
    about = "Gorenstein and nearly Gorenstein tests for graph rings"
)]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Emit a human-readable table instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the edge ring of a complete multipartite graph.
    EdgeClassify {
        /// Comma-separated part sizes, e.g. 2,2,3
        r#type: String,
    },
    /// Run the degree-one trace oracle for an edge ring, with certificates.
    EdgeOracle {
        /// Comma-separated part sizes, e.g. 2,2,3
        r#type: String,
        /// Interior enumeration bound (default 2d + 4).
        #[arg(long)]
        degree_bound: Option<i64>,
    },
    /// Classify the stable set ring of a graph (file path or `-` for stdin).
    StabClassify {
        input: String,
        /// Skip the perfectness check and record the assumption.
        #[arg(long)]
        assume_perfect: bool,
    },
    /// Run the stable-set trace oracle, with certificates.
    StabOracle {
        input: String,
        /// t-degree enumeration bound (default 2 * delta + 4).
        #[arg(long)]
        q_bound: Option<i64>,
        /// Skip the perfectness check and record the assumption.
        #[arg(long)]
        assume_perfect: bool,
    },
    /// Check the nearly-Gorenstein criterion for the Hibi ring of a poset.
    HibiCheck { input: String },
    /// Batch agreement sweeps over whole families.
    Sweep {
        /// Sweep complete multipartite types.
        #[arg(long, conflicts_with = "stab")]
        edge: bool,
        /// Sweep labeled perfect graphs.
        #[arg(long)]
        stab: bool,
        /// Largest vertex count d for the edge sweep.
        #[arg(long, default_value_t = 7)]
        max_d: usize,
        /// Largest vertex count n for the stable-set sweep.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Override the per-type interior enumeration bound.
        #[arg(long)]
        degree_bound: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let table = cli.table;
    let result = match cli.command {
        Command::EdgeClassify { r#type } => edge_classify(&r#type, table),
        Command::EdgeOracle {
            r#type,
            degree_bound,
        } => edge_oracle(&r#type, degree_bound, table),
        Command::StabClassify {
            input,
            assume_perfect,
        } => stab_classify(&input, assume_perfect, table),
        Command::StabOracle {
            input,
            q_bound,
            assume_perfect,
        } => stab_oracle(&input, q_bound, assume_perfect, table),
        Command::HibiCheck { input } => hibi_check(&input, table),
        Command::Sweep {
            edge,
            stab,
            max_d,
            max_n,
            degree_bound,
        } => {
            if stab && !edge {
                sweep_stab(max_n, table)
            } else {
                sweep_edge(max_d, degree_bound, table)
            }
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 2,
        }
    }

    fn resource(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            code: 3,
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::SearchSpaceExceeded { .. } => Self::resource(e.to_string()),
            _ => Self::input(e.to_string()),
        }
    }
}

impl From<EdgeRingError> for CliError {
    fn from(e: EdgeRingError) -> Self {
        match e {
            EdgeRingError::EmptyInterior { .. } => Self::resource(e.to_string()),
            EdgeRingError::Lattice(l) => l.into(),
            _ => Self::input(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::PerfectnessCapExceeded { .. }
            | GraphError::EnumerationCapExceeded { .. } => Self::resource(e.to_string()),
            _ => Self::input(e.to_string()),
        }
    }
}

impl From<StabError> for CliError {
    fn from(e: StabError) -> Self {
        match e {
            StabError::OracleCapExceeded { .. }
            | StabError::EnumerationCapExceeded { .. }
            | StabError::EmptyOmega { .. } => Self::resource(e.to_string()),
            StabError::Graph(g) => g.into(),
            StabError::Lattice(l) => l.into(),
            StabError::NotPerfect => Self::input(e.to_string()),
        }
    }
}

impl From<PosetError> for CliError {
    fn from(e: PosetError) -> Self {
        Self::input(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::input(format!("reading {path}: {e}")))
    }
}

fn parse_type(s: &str) -> Result<MultipartiteType, CliError> {
    Ok(s.parse::<MultipartiteType>()?)
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable report")
    );
}

fn rule_name(rule: ClassificationRule) -> &'static str {
    match rule {
        ClassificationRule::BipartiteR1One => "Bipartite-r1=1",
        ClassificationRule::BipartiteEqual => "Bipartite-equal",
        ClassificationRule::BipartiteOffByOne => "Bipartite-offby1",
        ClassificationRule::GorensteinN3 => "Gorenstein-n3",
        ClassificationRule::GorensteinN4 => "Gorenstein-n4",
        ClassificationRule::NotNearlyGorenstein => "NotNG",
    }
}

#[derive(Serialize)]
struct EdgeClassifyReport {
    r#type: MultipartiteType,
    gorenstein: bool,
    nearly_gorenstein: bool,
    rule: ClassificationRule,
    /// Enumeration bounds, present when an oracle ran.
    bounds: Option<EdgeOracleBounds>,
}

fn edge_classify(type_str: &str, table: bool) -> Result<(), CliError> {
    let t = parse_type(type_str)?;
    let verdict = classify_nearly_gorenstein(&t);
    let report = EdgeClassifyReport {
        r#type: t.clone(),
        gorenstein: verdict.gorenstein,
        nearly_gorenstein: verdict.nearly_gorenstein,
        rule: verdict.rule,
        bounds: None,
    };
    if table {
        println!(
            "{:<12} gorenstein={:<5} nearly_gorenstein={:<5} rule={}",
            t.to_string(),
            verdict.gorenstein,
            verdict.nearly_gorenstein,
            rule_name(verdict.rule)
        );
    } else {
        print_json(&report);
    }
    Ok(())
}

#[derive(Serialize)]
struct EdgeOracleBounds {
    degree_bound: i64,
    frontier_stable: bool,
    confidence: &'static str,
}

#[derive(Serialize)]
struct EdgeOracleReport {
    r#type: MultipartiteType,
    gorenstein: bool,
    nearly_gorenstein: bool,
    rule: ClassificationRule,
    degree_one_trace_empty: bool,
    trace_contains_maximal_ideal: bool,
    oracle_agrees: bool,
    bounds: EdgeOracleBounds,
    certificate: TraceCertificate,
}

fn edge_oracle(type_str: &str, degree_bound: Option<i64>, table: bool) -> Result<(), CliError> {
    let t = parse_type(type_str)?;
    let bound = degree_bound.unwrap_or_else(|| default_degree_bound(&t));
    let verdict = classify_nearly_gorenstein(&t);
    let trace = trace_degree1(&t, bound)?;
    let report = EdgeOracleReport {
        r#type: t.clone(),
        gorenstein: verdict.gorenstein,
        nearly_gorenstein: verdict.nearly_gorenstein,
        rule: verdict.rule,
        degree_one_trace_empty: trace.empty,
        trace_contains_maximal_ideal: trace.all_covered,
        oracle_agrees: trace.all_covered == verdict.nearly_gorenstein,
        bounds: EdgeOracleBounds {
            degree_bound: bound,
            frontier_stable: trace.certificate.frontier_stable,
            confidence: if trace.certificate.frontier_stable {
                "exact"
            } else {
                "bounded"
            },
        },
        certificate: trace.certificate,
    };
    if table {
        println!(
            "{:<12} NG={:<5} trace_contains_m={:<5} degree1_empty={:<5} bound={} frontier_stable={} agree={}",
            t.to_string(),
            report.nearly_gorenstein,
            report.trace_contains_maximal_ideal,
            report.degree_one_trace_empty,
            bound,
            report.bounds.frontier_stable,
            report.oracle_agrees,
        );
    } else {
        print_json(&report);
    }
    Ok(())
}

fn stab_classify(input: &str, assume_perfect: bool, table: bool) -> Result<(), CliError> {
    let text = read_input(input)?;
    let g = Graph::parse(&text)?;
    let verdict = classify_stab(&g, assume_perfect)?;
    if table {
        print_stab_table(&verdict);
    } else {
        print_json(&verdict);
    }
    Ok(())
}

fn print_stab_table(v: &StabVerdict) {
    println!(
        "perfect={:?} gorenstein={} nearly_gorenstein={}",
        v.perfect, v.gorenstein, v.nearly_gorenstein
    );
    for (i, c) in v.components.iter().enumerate() {
        println!(
            "  component {}: vertices {:?} delta={} pure={}",
            i + 1,
            c.vertices,
            c.delta,
            c.pure
        );
    }
    if let Some(w) = &v.witness {
        println!("  witness: {w:?}");
    }
}

#[derive(Serialize)]
struct StabOracleBounds {
    q_bound: i64,
    frontier_stable: bool,
    confidence: &'static str,
}

#[derive(Serialize)]
struct StabOracleReport {
    verdict: StabVerdict,
    trace_contains_maximal_ideal: bool,
    oracle_agrees: bool,
    bounds: StabOracleBounds,
    certificate: StabTraceCertificate,
}

fn stab_oracle(
    input: &str,
    q_bound: Option<i64>,
    assume_perfect: bool,
    table: bool,
) -> Result<(), CliError> {
    let text = read_input(input)?;
    let g = Graph::parse(&text)?;
    let verdict = classify_stab(&g, assume_perfect)?;
    let bound = q_bound.unwrap_or_else(|| default_q_bound(&g));
    let trace = if assume_perfect {
        stable_set::trace_oracle_stab_unchecked(&g, bound)?
    } else {
        trace_oracle_stab(&g, bound)?
    };
    let report = StabOracleReport {
        oracle_agrees: trace.contains_m == verdict.nearly_gorenstein,
        verdict,
        trace_contains_maximal_ideal: trace.contains_m,
        bounds: StabOracleBounds {
            q_bound: bound,
            frontier_stable: trace.certificate.frontier_stable,
            confidence: if trace.certificate.frontier_stable {
                "exact"
            } else {
                "bounded"
            },
        },
        certificate: trace.certificate,
    };
    if table {
        print_stab_table(&report.verdict);
        println!(
            "  trace_contains_m={} q_bound={} frontier_stable={} agree={}",
            report.trace_contains_maximal_ideal,
            bound,
            report.bounds.frontier_stable,
            report.oracle_agrees
        );
    } else {
        print_json(&report);
    }
    Ok(())
}

#[derive(Serialize)]
struct HibiComponentReport {
    size: usize,
    rank: usize,
    pure: bool,
}

#[derive(Serialize)]
struct HibiReport {
    size: usize,
    components: Vec<HibiComponentReport>,
    gorenstein: bool,
    nearly_gorenstein: bool,
}

fn hibi_check(input: &str, table: bool) -> Result<(), CliError> {
    let text = read_input(input)?;
    let p = Poset::from_json(&text)?;
    let mut components = Vec::new();
    for c in hibi::components(&p) {
        let (pure, rank) = hibi::is_pure_component(&c)?;
        components.push(HibiComponentReport {
            size: c.size(),
            rank,
            pure,
        });
    }
    let report = HibiReport {
        size: p.size(),
        components,
        gorenstein: hibi::hibi_gorenstein(&p),
        nearly_gorenstein: hibi::hibi_nearly_gorenstein(&p),
    };
    if table {
        println!(
            "poset size={} gorenstein={} nearly_gorenstein={}",
            report.size, report.gorenstein, report.nearly_gorenstein
        );
        for (i, c) in report.components.iter().enumerate() {
            println!(
                "  component {}: size={} rank={} pure={}",
                i + 1,
                c.size,
                c.rank,
                c.pure
            );
        }
    } else {
        print_json(&report);
    }
    Ok(())
}

#[derive(Serialize)]
struct EdgeSweepRow {
    r#type: MultipartiteType,
    d: usize,
    gorenstein: bool,
    nearly_gorenstein: bool,
    oracle: &'static str,
    oracle_nearly_gorenstein: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree_one_trace_empty: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    frontier_stable: Option<bool>,
    agreement: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed_form: Option<EdgeRingVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_certificate: Option<TraceCertificate>,
}

#[derive(Serialize)]
struct EdgeSweepReport {
    sweep: &'static str,
    max_d: usize,
    rows: Vec<EdgeSweepRow>,
    disagreements: usize,
}

fn sweep_edge(max_d: usize, degree_bound: Option<i64>, table: bool) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for d in 2..=max_d {
        for n in 2..=d {
            for t in edge_ring::types_with(n, d) {
                let verdict = classify_nearly_gorenstein(&t);
                let row = if n == 2 {
                    let p = t.parts();
                    let poset = hibi::bipartite_poset(p[0], p[1])?;
                    let oracle_ng = hibi::hibi_nearly_gorenstein(&poset);
                    let agree = oracle_ng == verdict.nearly_gorenstein;
                    EdgeSweepRow {
                        r#type: t.clone(),
                        d,
                        gorenstein: verdict.gorenstein,
                        nearly_gorenstein: verdict.nearly_gorenstein,
                        oracle: "poset",
                        oracle_nearly_gorenstein: oracle_ng,
                        degree_one_trace_empty: None,
                        frontier_stable: None,
                        agreement: if agree { "agree" } else { "disagree" },
                        closed_form: (!agree).then(|| verdict.clone()),
                        oracle_certificate: None,
                    }
                } else {
                    let bound = degree_bound.unwrap_or_else(|| default_degree_bound(&t));
                    let trace = trace_degree1(&t, bound)?;
                    let agree = trace.all_covered == verdict.nearly_gorenstein;
                    EdgeSweepRow {
                        r#type: t.clone(),
                        d,
                        gorenstein: verdict.gorenstein,
                        nearly_gorenstein: verdict.nearly_gorenstein,
                        oracle: "trace",
                        oracle_nearly_gorenstein: trace.all_covered,
                        degree_one_trace_empty: Some(trace.empty),
                        frontier_stable: Some(trace.certificate.frontier_stable),
                        agreement: if agree { "agree" } else { "disagree" },
                        closed_form: (!agree).then(|| verdict.clone()),
                        oracle_certificate: (!agree).then(|| trace.certificate.clone()),
                    }
                };
                rows.push(row);
            }
        }
    }
    let disagreements = rows.iter().filter(|r| r.agreement == "disagree").count();
    if table {
        println!(
            "{:<14} {:>2}  {:<6} {:<6} {:<7} {:<7} {:<9}",
            "type", "d", "gor", "ng", "oracle", "oracleNG", "agreement"
        );
        for r in &rows {
            println!(
                "{:<14} {:>2}  {:<6} {:<6} {:<7} {:<7} {:<9}",
                r.r#type.to_string(),
                r.d,
                r.gorenstein,
                r.nearly_gorenstein,
                r.oracle,
                r.oracle_nearly_gorenstein,
                r.agreement
            );
            if r.agreement == "disagree" {
                println!(
                    "  certificates: {}",
                    serde_json::to_string(&(&r.closed_form, &r.oracle_certificate))
                        .expect("serializable certificates")
                );
            }
        }
        println!("{} rows, {} disagreements", rows.len(), disagreements);
    } else {
        print_json(&EdgeSweepReport {
            sweep: "edge",
            max_d,
            disagreements,
            rows,
        });
    }
    Ok(())
}

#[derive(Serialize)]
struct StabSweepRow {
    n: usize,
    edges: Vec<(usize, usize)>,
    nearly_gorenstein: bool,
    trace_contains_maximal_ideal: bool,
    frontier_stable: bool,
    agreement: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    verdict: Option<StabVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_certificate: Option<StabTraceCertificate>,
}

#[derive(Serialize)]
struct StabSweepReport {
    sweep: &'static str,
    max_n: usize,
    graphs: usize,
    perfect: usize,
    rows: Vec<StabSweepRow>,
    disagreements: usize,
}

fn sweep_stab(max_n: usize, table: bool) -> Result<(), CliError> {
    if max_n > 5 {
        return Err(CliError::resource(format!(
            "stable-set sweeps are limited to n <= 5, got {max_n}"
        )));
    }
    let mut rows = Vec::new();
    let mut graphs = 0usize;
    let mut perfect = 0usize;
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges)?;
            graphs += 1;
            if !graph::is_perfect(&g)? {
                continue;
            }
            perfect += 1;
            let verdict = classify_stab(&g, false)?;
            let trace = trace_oracle_stab(&g, default_q_bound(&g))?;
            let agree = trace.contains_m == verdict.nearly_gorenstein;
            rows.push(StabSweepRow {
                n,
                edges,
                nearly_gorenstein: verdict.nearly_gorenstein,
                trace_contains_maximal_ideal: trace.contains_m,
                frontier_stable: trace.certificate.frontier_stable,
                agreement: if agree { "agree" } else { "disagree" },
                verdict: (!agree).then_some(verdict),
                oracle_certificate: (!agree).then_some(trace.certificate),
            });
        }
    }
    let disagreements = rows.iter().filter(|r| r.agreement == "disagree").count();
    if table {
        println!(
            "{:<3} {:<28} {:<6} {:<8} {:<9}",
            "n", "edges", "ng", "oracle", "agreement"
        );
        for r in &rows {
            println!(
                "{:<3} {:<28} {:<6} {:<8} {:<9}",
                r.n,
                format!("{:?}", r.edges),
                r.nearly_gorenstein,
                r.trace_contains_maximal_ideal,
                r.agreement
            );
            if r.agreement == "disagree" {
                println!(
                    "  certificates: {}",
                    serde_json::to_string(&(&r.verdict, &r.oracle_certificate))
                        .expect("serializable certificates")
                );
            }
        }
        println!("{graphs} graphs, {perfect} perfect, {disagreements} disagreements");
    } else {
        print_json(&StabSweepReport {
            sweep: "stab",
            max_n,
            graphs,
            perfect,
            disagreements,
            rows,
        });
    }
    Ok(())
}

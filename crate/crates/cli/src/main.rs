//! Command-line front end: `mmsieve <subcommand>`.

mod tables;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use mmsieve::catalog::{self, verify_catalog};
use mmsieve::enumerate::{EnumOptions, PlanarityFilter, DEFAULT_MAX_ORDER};
use mmsieve::io::report::SearchReport;
use mmsieve::io::{self, edgelist, graph6};
use mmsieve::minimality::is_minor_minimal_exhaustive;
use mmsieve::moves::{explore_family_with, MoveSet};
use mmsieve::properties::{find_apex_vertex, witness};
use mmsieve::search::count_candidates;
use mmsieve::{
    canonical_graph, check, find_k_subgraph, is_minor_minimal, is_planar, search_minor_minimal,
    Error, Graph, PropertyId, SearchSpec,
};

/// Overrides the largest order any enumeration or exhaustive check may reach.
const MAX_ORDER_ENV: &str = "MMSIEVE_MAX_ORDER";

#[derive(Parser)]
#[command(name = "mmsieve", version, about = "Minor-minimal graphs for apex-type properties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Test each graph in a file for a property and print a witness.
    Check {
        file: PathBuf,
        #[arg(long, short)]
        property: CheckProperty,
        #[arg(long)]
        json: bool,
    },
    /// Decide minor-minimality for each graph in a file.
    Minimal {
        file: PathBuf,
        #[arg(long, short)]
        property: PropertyId,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate graphs and report the minor-minimal ones.
    Search {
        /// A single order `N` or an inclusive range `A..B`.
        #[arg(long, value_parser = parse_range)]
        order: (usize, usize),
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        max_size: Option<usize>,
        /// Required unless `--count-only` is given.
        #[arg(long, short)]
        property: Option<PropertyId>,
        /// planar, nonplanar or all; defaults to what the property needs
        /// (nonplanar when no property is given).
        #[arg(long)]
        planarity: Option<PlanarityFilter>,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Only count the graphs passing the filter.
        #[arg(long)]
        count_only: bool,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-derive every catalog claim; exits 0 only if all pass.
    VerifyCatalog {
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Reproduce the minor-minimal counts within the scale's order bounds.
    Tables {
        #[arg(long, value_enum, default_value_t = tables::Scale::Desk)]
        scale: tables::Scale,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Close the graphs in a file under Delta-Y / Y-Delta moves and report
    /// the minor-minimal members.
    Expand {
        file: PathBuf,
        #[arg(long, short)]
        property: PropertyId,
        #[arg(long, default_value = "ty,yt")]
        moves: MoveSet,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print catalog graphs, canonically labeled.
    ExportCatalog {
        /// Only the minor-minimal list for this property.
        #[arg(long, short)]
        property: Option<PropertyId>,
        #[arg(long, value_enum, default_value_t = OutFormat::Graph6)]
        format: OutFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Graph6,
    EdgeList,
}

/// The eight properties plus plain planarity and apexness.
#[derive(Clone, Copy)]
enum CheckProperty {
    Prop(PropertyId),
    Planar,
    Apex,
}

impl std::str::FromStr for CheckProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "planar" => Ok(CheckProperty::Planar),
            "apex" => Ok(CheckProperty::Apex),
            _ => s.parse().map(CheckProperty::Prop),
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

pub(crate) enum Failure {
    /// Exit 1: a property or verification did not hold.
    Negative,
    /// Exit 2: bad input or a resource limit.
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(msg) => {
                eprintln!("error: {msg}");
                Failure::Negative
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

pub(crate) type Outcome = Result<bool, Failure>;

pub(crate) fn max_order() -> Result<usize, Failure> {
    match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_ORDER_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn read_file(path: &Path) -> Result<Vec<Graph>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    io::read_graphs(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

pub(crate) fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_check(file: &Path, prop: CheckProperty, as_json: bool) -> Outcome {
    let graphs = read_file(file)?;
    let mut rows = Vec::new();
    let mut all = true;
    for (i, g) in graphs.iter().enumerate() {
        let (name, holds, wit) = match prop {
            CheckProperty::Prop(p) => (
                p.name().to_string(),
                check(g, p),
                witness(g, p).map(|w| w.to_string()),
            ),
            CheckProperty::Planar => {
                let planar = is_planar(g);
                let wit = find_k_subgraph(g).map(|k| {
                    let b: Vec<String> = k.branch_vertices.iter().map(|v| (v + 1).to_string()).collect();
                    format!("{:?} subdivision on branch vertices {}", k.kind, b.join(","))
                });
                ("planar".to_string(), planar, wit)
            }
            CheckProperty::Apex => {
                let v = find_apex_vertex(g);
                let holds = g.order() > 0 && (is_planar(g) || v.is_some());
                ("apex".to_string(), holds, v.map(|v| format!("vertex {}", v + 1)))
            }
        };
        all &= holds;
        if as_json {
            rows.push(json!({
                "index": i + 1,
                "graph6": graph6::encode(g),
                "property": name,
                "holds": holds,
                "witness": wit,
            }));
        } else {
            match wit {
                Some(w) => println!("{} {} {name} {holds} ({w})", i + 1, graph6::encode(g)),
                None => println!("{} {} {name} {holds}", i + 1, graph6::encode(g)),
            }
        }
    }
    if as_json {
        print_json(&rows);
    }
    Ok(all)
}

fn cmd_minimal(file: &Path, p: PropertyId, as_json: bool) -> Outcome {
    let graphs = read_file(file)?;
    let bound = max_order()?;
    let mut rows = Vec::new();
    let mut all = true;
    for (i, g) in graphs.iter().enumerate() {
        let mm = match p {
            PropertyId::AN | PropertyId::CAN => is_minor_minimal_exhaustive(g, p, bound)?,
            _ => is_minor_minimal(g, p)?,
        };
        all &= mm;
        if as_json {
            rows.push(json!({
                "index": i + 1,
                "graph6": graph6::encode(g),
                "property": p.name(),
                "minor_minimal": mm,
            }));
        } else {
            println!("{} {} MM{} {mm}", i + 1, graph6::encode(g), p.name());
        }
    }
    if as_json {
        print_json(&rows);
    }
    Ok(all)
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    order: (usize, usize),
    min_degree: usize,
    connected: bool,
    max_size: Option<usize>,
    property: Option<PropertyId>,
    planarity: Option<PlanarityFilter>,
    jobs: usize,
    count_only: bool,
    as_json: bool,
    output: Option<&Path>,
) -> Outcome {
    let options = EnumOptions {
        jobs,
        max_order: max_order()?,
    };
    let make = |p: PropertyId| SearchSpec {
        property: p,
        min_order: order.0,
        max_order: order.1,
        min_degree,
        connected,
        planarity,
        max_size,
        options,
    };
    if count_only {
        // Without a property the filter defaults to nonplanar graphs, which
        // is what any NA/NE/NC/IA/IE/IC property needs.
        let spec = SearchSpec {
            planarity: planarity.or(Some(PlanarityFilter::KeepNonplanar)),
            ..make(property.unwrap_or(PropertyId::NE))
        };
        let stats = count_candidates(&spec)?;
        let total: u64 = stats.iter().map(|s| s.scanned).sum();
        if as_json {
            let per: Vec<_> = stats
                .iter()
                .map(|s| json!({"order": s.order, "scanned": s.scanned}))
                .collect();
            print_json(&json!({
                "planarity": spec.planarity_filter(),
                "per_order": per,
                "scanned": total,
            }));
        } else {
            for s in &stats {
                println!("order {}: {}", s.order, s.scanned);
            }
            println!("scanned {total}");
        }
        return Ok(true);
    }
    let p = property.ok_or_else(|| Failure::Usage("--property is required unless --count-only".into()))?;
    let out = search_minor_minimal(&make(p))?;
    let report = SearchReport::new(&out);
    if let Some(path) = output {
        fs::write(path, report.to_json() + "\n")
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    }
    if as_json {
        println!("{}", report.to_json());
    } else {
        for f in &report.found {
            println!("{}\t{}", f.graph6, f.edge_list);
        }
        println!(
            "# MM{}: scanned {}, found {}, {} ms",
            report.property,
            report.scanned,
            report.found.len(),
            report.wall_time_ms
        );
    }
    Ok(true)
}

fn cmd_verify(as_json: bool, jobs: usize) -> Outcome {
    let report = verify_catalog(jobs);
    if as_json {
        print_json(&report);
    } else {
        for c in &report.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                println!("{tag} {}", c.name);
            } else {
                println!("{tag} {} ({})", c.name, c.detail);
            }
        }
        let failed = report.failures().count();
        println!("{} checks, {failed} failed", report.checks.len());
    }
    Ok(report.passed)
}

fn cmd_expand(
    file: &Path,
    p: PropertyId,
    moves: MoveSet,
    depth: usize,
    jobs: usize,
    as_json: bool,
) -> Outcome {
    let seeds = read_file(file)?;
    let report = explore_family_with(&seeds, p, depth, moves, jobs)?;
    if as_json {
        println!("{}", report.to_json());
    } else {
        for f in &report.found {
            println!("{}\t{}", f.graph6, f.edge_list);
        }
        println!(
            "# {} family members explored, {} MM{}",
            report.scanned,
            report.found.len(),
            report.property
        );
    }
    Ok(true)
}

fn cmd_export(p: Option<PropertyId>, format: OutFormat) -> Outcome {
    let entries = match p {
        Some(p) => catalog::mm_catalog(p)?,
        None => catalog::catalog()?.to_vec(),
    };
    for e in entries {
        let g = canonical_graph(&e.graph);
        let text = match format {
            OutFormat::Graph6 => graph6::encode(&g),
            OutFormat::EdgeList => edgelist::emit(&g),
        };
        println!("{text}\t# {}", e.names().collect::<Vec<_>>().join(" = "));
    }
    Ok(true)
}

fn run(cli: Cli) -> Outcome {
    match cli.cmd {
        Cmd::Check { file, property, json } => cmd_check(&file, property, json),
        Cmd::Minimal { file, property, json } => cmd_minimal(&file, property, json),
        Cmd::Search {
            order,
            min_degree,
            connected,
            max_size,
            property,
            planarity,
            jobs,
            count_only,
            json,
            output,
        } => cmd_search(
            order,
            min_degree,
            connected,
            max_size,
            property,
            planarity,
            jobs,
            count_only,
            json,
            output.as_deref(),
        ),
        Cmd::VerifyCatalog { json, jobs } => cmd_verify(json, jobs),
        Cmd::Tables { scale, jobs, json } => tables::run(scale, jobs, json),
        Cmd::Expand {
            file,
            property,
            moves,
            depth,
            jobs,
            json,
        } => cmd_expand(&file, property, moves, depth, jobs, json),
        Cmd::ExportCatalog { property, format } => cmd_export(property, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) | Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

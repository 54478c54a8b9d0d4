//! `nesto`: inspect, enumerate, realize and verify hypergraph polytopes.

use std::path::Path;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use nestohedra::axioms::{verify_axioms, verify_inductive, VerificationReport};
use nestohedra::catalog::{
    catalog, catalog_lookup, census_digits, chart_edges, fvector_row, FVectorRow,
};
use nestohedra::construction::{enumerate_constructions, is_construction};
use nestohedra::face_lattice::{abstract_polytope, f_vector};
use nestohedra::format::{parse_graph, parse_hypergraph};
use nestohedra::notation::to_s_construction;
use nestohedra::realization::{face_lattice_isomorphic, realize};
use nestohedra::saturation::{is_asc, is_saturated, saturated_closure};
use nestohedra::tubing::{tubings_equal_constructs, GraphHypergraph, DEFAULT_TUBING_CAP};
use nestohedra::{Family, Hypergraph};

#[derive(Parser)]
#[command(
    name = "nesto",
    version,
    about = "Hypergraph polytopes: constructions, face lattices, realizations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Census, connectivity, saturation and rank.
    Info { input: String },
    /// Constructions as words, one per line.
    Enumerate { input: String },
    /// Exact vertex coordinates of the realization.
    Realize {
        input: String,
        #[arg(long, value_enum, default_value_t = RealizeFormat::Json)]
        format: RealizeFormat,
    },
    /// The face lattice.
    Lattice {
        input: String,
        #[arg(long, value_enum, default_value_t = LatticeFormat::Dot)]
        format: LatticeFormat,
    },
    /// Axiom checks, realization isomorphism and oracle comparisons.
    Verify {
        input: String,
        /// Largest carrier for the exhaustive antichain comparison.
        #[arg(long, default_value_t = 4)]
        carrier_cap: usize,
    },
    /// f-vectors of every catalog entry, then the chart's inclusion lines.
    Atlas {
        #[arg(long)]
        json: bool,
    },
    /// Compares tubings with constructs on a graph read from an edge list.
    Tubings {
        graph_file: String,
        #[arg(long, default_value_t = DEFAULT_TUBING_CAP)]
        carrier_cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RealizeFormat {
    Off,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeFormat {
    Dot,
    Json,
}

enum Failure {
    /// Bad input: unreadable file, unknown name, parse error.
    Usage(anyhow::Error),
    /// The input was fine but a check did not pass.
    Check(String),
}

impl From<nestohedra::Error> for Failure {
    fn from(e: nestohedra::Error) -> Self {
        Failure::Usage(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type Outcome = Result<(), Failure>;

/// A catalog name, or a path to a JSON or compact-text hypergraph.
fn load(input: &str) -> Result<(String, Hypergraph), Failure> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?;
        let h = parse_hypergraph(&text).with_context(|| format!("parsing {input}"))?;
        return Ok((input.to_string(), h));
    }
    let e = catalog_lookup(input)
        .map_err(|_| anyhow!("`{input}` is neither a file nor a catalog name"))?;
    Ok((e.name.clone(), e.hypergraph.clone()))
}

fn info(input: &str) -> Outcome {
    let (name, h) = load(input)?;
    println!("name: {name}");
    println!("carrier: {}", h.format_set(h.carrier()));
    println!("members: {}", h.len());
    println!("census: {}", census_digits(&h));
    println!("atomic: {}", h.is_atomic());
    println!("connected: {}", h.is_connected());
    println!("saturated: {}", is_saturated(&h));
    println!("asc: {}", is_asc(&h));
    if h.is_atomic() {
        let closure = saturated_closure(&h);
        let p = abstract_polytope(&h)?;
        println!("closure members: {}", closure.len());
        println!(
            "components: {}",
            closure.members().component_carriers().len()
        );
        println!("rank: {}", p.rank());
        println!("f-vector: {:?}", f_vector(&p).proper());
    }
    Ok(())
}

fn enumerate(input: &str) -> Outcome {
    let (_, h) = load(input)?;
    for k in enumerate_constructions(&h)? {
        let word = to_s_construction(&h, &k)?;
        println!("{}", word.display(h.atoms()));
    }
    Ok(())
}

fn realize_cmd(input: &str, format: RealizeFormat) -> Outcome {
    let (_, h) = load(input)?;
    let real = realize(&h)?;
    match format {
        RealizeFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&real.to_json()).expect("json value")
        ),
        RealizeFormat::Off => print!("{}", real.to_off()?),
    }
    Ok(())
}

fn lattice(input: &str, format: LatticeFormat) -> Outcome {
    let (_, h) = load(input)?;
    let p = abstract_polytope(&h)?;
    let label = |f: &nestohedra::face_lattice::Face| f.label(&h);
    match format {
        LatticeFormat::Dot => print!("{}", p.to_dot(label)),
        LatticeFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&p.to_json(label)).expect("json value")
        ),
    }
    Ok(())
}

fn report_line(what: &str, r: &VerificationReport) -> String {
    format!(
        "{what}: {} (P1 {} P2 {} P3 {} P4 {})",
        if r.accepted() { "ok" } else { "FAILED" },
        r.p1_ok,
        r.p2_ok,
        r.p3_ok,
        r.p4_ok
    )
}

/// Antichain recognition against enumeration, on every block of the
/// closure: the `|block|`-element subfamilies of the block accepted by the
/// antichain test are exactly the enumerated constructions.
fn antichain_matches(h: &Hypergraph) -> nestohedra::Result<bool> {
    let closure = saturated_closure(h);
    for block in closure.finest_partition().blocks {
        let members: Vec<_> = block.members().iter().cloned().collect();
        let n = block.carrier().len();
        let mut found = Vec::new();
        let mut pick: Vec<usize> = (0..n).collect();
        loop {
            let fam: Family = pick.iter().map(|&i| members[i].clone()).collect();
            if is_construction(&block, &fam)? {
                found.push(fam);
            }
            // next n-combination of members
            let Some(i) = (0..n).rev().find(|&i| pick[i] < members.len() - n + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..n {
                pick[j] = pick[j - 1] + 1;
            }
        }
        found.sort();
        if found != enumerate_constructions(&block)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn verify(input: &str, cap: usize) -> Outcome {
    let (name, h) = load(input)?;
    let p = abstract_polytope(&h)?;
    let mut failed = Vec::new();
    let direct = verify_axioms(&p)?;
    let inductive = verify_inductive(&p)?;
    println!("{}", report_line("axioms", &direct));
    println!("{}", report_line("inductive", &inductive));
    for (what, r) in [("axioms", &direct), ("inductive", &inductive)] {
        if !r.accepted() {
            failed.push(what);
        }
    }
    let iso = face_lattice_isomorphic(&h)?;
    println!(
        "realization: {}",
        if iso.isomorphic { "ok" } else { "FAILED" }
    );
    for f in &iso.failures {
        eprintln!("  {f}");
    }
    if !iso.isomorphic {
        failed.push("realization");
    }
    let union: Family = enumerate_constructions(&h)?
        .iter()
        .flat_map(|k| k.iter().cloned())
        .collect();
    let covers = &union == saturated_closure(&h).members();
    println!(
        "constructions cover the closure: {}",
        if covers { "ok" } else { "FAILED" }
    );
    if !covers {
        failed.push("closure");
    }
    if h.carrier().len() <= cap {
        let ok = antichain_matches(&h)?;
        println!(
            "antichain recognition: {}",
            if ok { "ok" } else { "FAILED" }
        );
        if !ok {
            failed.push("antichain");
        }
    } else {
        println!("antichain recognition: skipped (carrier above {cap})");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!(
            "{name}: failed {}",
            failed.join(", ")
        )))
    }
}

fn atlas(as_json: bool) -> Outcome {
    let rows: Vec<FVectorRow> = catalog()
        .par_iter()
        .map(fvector_row)
        .collect::<nestohedra::Result<_>>()?;
    let edges = chart_edges();
    if as_json {
        let value = json!({
            "entries": rows,
            "chart": edges.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("json value")
        );
        return Ok(());
    }
    for r in &rows {
        let fv: Vec<String> = r.f_vector.iter().map(|n| n.to_string()).collect();
        println!(
            "{:<10} {:>2}  {:<12} {}",
            r.name,
            r.rank,
            fv.join(","),
            r.nickname.as_deref().unwrap_or("")
        );
    }
    println!();
    println!("chart:");
    for (a, b) in edges {
        println!("{a} -> {b}");
    }
    Ok(())
}

fn tubings(file: &str, cap: usize) -> Outcome {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {file}"))?;
    let spec = parse_graph(&text).with_context(|| format!("parsing {file}"))?;
    let g = GraphHypergraph::from_spec(&spec)?;
    let check = tubings_equal_constructs(&g, cap)?;
    println!("families checked: {}", check.families_checked);
    println!("tubings: {}", check.tubings);
    println!("constructs: {}", check.constructs);
    println!("loose: {}", g.is_loose());
    match check.counterexample {
        None => {
            println!("tubings equal constructs: ok");
            Ok(())
        }
        Some(c) => Err(Failure::Check(format!(
            "tubing and construct disagree on {c}"
        ))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Info { input } => info(&input),
        Command::Enumerate { input } => enumerate(&input),
        Command::Realize { input, format } => realize_cmd(&input, format),
        Command::Lattice { input, format } => lattice(&input, format),
        Command::Verify { input, carrier_cap } => verify(&input, carrier_cap),
        Command::Atlas { json } => atlas(json),
        Command::Tubings {
            graph_file,
            carrier_cap,
        } => tubings(&graph_file, carrier_cap),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("nesto: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("nesto: {e:#}");
            ExitCode::from(2)
        }
    }
}

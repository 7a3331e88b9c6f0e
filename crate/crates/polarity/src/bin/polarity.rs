//! Command-line front end. Graphs come from a file or stdin, one graph6 word
//! per line or consecutive edge-list blocks; results go to stdout in input
//! order, as text or as JSON lines.

use std::collections::BTreeMap;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use polarity::canon::canonical_form;
use polarity::decomposition::{build_parse_tree, build_ps_tree, classify};
use polarity::dp::max_subgraph;
use polarity::obstructions::{mine, verify_catalog, Catalog, Decision, GraphClass};
use polarity::oracle::{brute_force_max_subgraph, certifies, has_property, SKBound, SUBSET_MAX_N};
use polarity::{Error, Graph, PropertyKind, VertexSet};

#[derive(Parser)]
#[command(name = "polarity", version, about = "Polar partitions on P4-sparse and P4-extendible graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// Input file; stdin when absent.
    path: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// One JSON object per output line.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeChoice {
    Auto,
    Ps,
    Parse,
}

#[derive(Subcommand)]
enum Command {
    /// Report cograph, P4-sparse and P4-extendible membership.
    Recognize(Input),
    /// Maximum induced subgraph with a property.
    Max {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        property: PropertyKind,
        /// Re-check the answer with the brute-force oracle (n <= 16).
        #[arg(long)]
        verify: bool,
    },
    /// Decide 2-polarity through the obstruction catalog.
    Check2polar(Input),
    /// Certify the obstruction catalog.
    CatalogVerify {
        /// Obstruction family, 2,2 or 2,1.
        #[arg(long, default_value = "2,2")]
        family: SKBound,
        /// Catalog file to check instead of the built-in one.
        #[arg(long)]
        catalog: Option<std::path::PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustively mine minimal obstructions of one order.
    Mine {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value = "p4-sparse")]
        class: GraphClass,
        #[arg(long, default_value = "2,2")]
        bound: SKBound,
    },
    /// Print the decomposition tree.
    Tree {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = TreeChoice::Auto)]
        kind: TreeChoice,
    },
}

/// One processed graph: the text to print and whether the check held.
struct Outcome {
    text: String,
    holds: bool,
}

/// Anything that stops a command: bad input, a graph outside both classes,
/// a size cap. All exit with status 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn read_graphs(input: &Input) -> Result<Vec<Graph>, Failure> {
    let reader: Box<dyn Read> = match &input.path {
        Some(p) => Box::new(std::fs::File::open(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?),
        None => Box::new(io::stdin()),
    };
    let mut r = BufReader::new(reader);
    let mut out = Vec::new();
    match input.format {
        Format::Graph6 => {
            for line in r.lines() {
                let line = line.map_err(|e| Failure(e.to_string()))?;
                let t = line.trim().trim_start_matches(">>graph6<<");
                if !t.is_empty() {
                    out.push(Graph::parse_graph6(t)?);
                }
            }
        }
        Format::Edgelist => {
            while let Some(g) = Graph::read_edge_list(&mut r)? {
                out.push(g);
            }
        }
    }
    Ok(out)
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.to_vec())
}

fn recognize(g: &Graph, as_json: bool) -> Outcome {
    let r = classify(g);
    let yn = |b: bool| if b { "yes" } else { "no" };
    let w = |x: &Option<polarity::decomposition::Witness>| x.as_ref().map(|w| w.to_string());
    let text = if as_json {
        json!({
            "n": g.n(),
            "cograph": r.is_cograph,
            "p4_sparse": r.is_p4_sparse,
            "p4_extendible": r.is_p4_extendible,
            "cograph_witness": w(&r.cograph_witness),
            "sparse_witness": w(&r.sparse_witness),
            "extendible_witness": w(&r.extendible_witness),
        })
        .to_string()
    } else {
        let mut t = format!(
            "cograph: {}\nsparse: {}\nextendible: {}",
            yn(r.is_cograph),
            yn(r.is_p4_sparse),
            yn(r.is_p4_extendible)
        );
        for (label, x) in [("sparse", &r.sparse_witness), ("extendible", &r.extendible_witness)] {
            if let Some(x) = x {
                t.push_str(&format!("\n{label} witness: {x}"));
            }
        }
        t
    };
    Outcome { text, holds: true }
}

fn max_cmd(g: &Graph, p: PropertyKind, verify: bool, as_json: bool) -> Result<Outcome, Failure> {
    let r = max_subgraph(g, p)?;
    let verdict = if verify {
        if g.n() > SUBSET_MAX_N {
            return Err(Failure(format!("--verify supports at most {SUBSET_MAX_N} vertices, got {}", g.n())));
        }
        let oracle = brute_force_max_subgraph(g, p)?;
        let valid = match &r.partition {
            Some(c) => certifies(g, p, &r.witness, c),
            None => has_property(g, &r.witness, p),
        };
        Some(valid && oracle.size == r.size)
    } else {
        None
    };
    let text = if as_json {
        let mut o = json!({
            "property": p.name(),
            "size": r.size,
            "witness": set_json(&r.witness),
        });
        if let Some(c) = &r.partition {
            o["partition"] = json!({ "A": set_json(&c.a), "B": set_json(&c.b) });
        }
        if let Some(v) = verdict {
            o["verified"] = json!(v);
        }
        o.to_string()
    } else {
        let mut t = format!("{}: size {} witness {}", p.name(), r.size, r.witness);
        if let Some(c) = &r.partition {
            t.push_str(&format!(" A={} B={}", c.a, c.b));
        }
        match verdict {
            Some(true) => t.push_str("\nverified"),
            Some(false) => t.push_str("\nverification FAILED"),
            None => {}
        }
        t
    };
    Ok(Outcome { text, holds: verdict != Some(false) })
}

fn check2polar(g: &Graph, as_json: bool) -> Result<Outcome, Failure> {
    let d = polarity::obstructions::decide_2polar(g)?;
    let holds = d.is_2polar();
    let show = |s: &VertexSet| if s.len() == g.n() && g.n() > 0 { "V".to_string() } else if s.is_empty() { "∅".to_string() } else { s.to_string() };
    let text = match (&d, as_json) {
        (Decision::TwoPolar { partition }, false) => match partition {
            Some((a, b)) => format!("2-polar: A={}, B={}", show(a), show(b)),
            None => "2-polar".to_string(),
        },
        (Decision::Obstructed { name, map }, false) => {
            let m: Vec<String> = map.iter().enumerate().map(|(i, v)| format!("{i}->{v}")).collect();
            format!("NOT 2-polar: contains {name} at {}", m.join(" "))
        }
        (Decision::TwoPolar { partition }, true) => json!({
            "two_polar": true,
            "partition": partition.as_ref().map(|(a, b)| json!({ "A": set_json(a), "B": set_json(b) })),
        })
        .to_string(),
        (Decision::Obstructed { name, map }, true) => json!({ "two_polar": false, "obstruction": name, "map": map }).to_string(),
    };
    Ok(Outcome { text, holds })
}

fn tree_cmd(g: &Graph, kind: TreeChoice) -> Result<Outcome, Failure> {
    let t = match kind {
        TreeChoice::Ps => build_ps_tree(g)?,
        TreeChoice::Parse => build_parse_tree(g)?,
        TreeChoice::Auto => build_ps_tree(g).or_else(|_| build_parse_tree(g))?,
    };
    Ok(Outcome { text: t.to_text().trim_end().to_string(), holds: true })
}

/// Apply `f` to every graph in parallel, print in input order, and report
/// whether all checks held.
fn batch<F>(input: &Input, f: F) -> Result<bool, Failure>
where
    F: Fn(&Graph) -> Result<Outcome, Failure> + Sync,
{
    let graphs = read_graphs(input)?;
    let results: Vec<Result<Outcome, Failure>> = graphs.par_iter().map(&f).collect();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut all = true;
    for r in results {
        let o = r?;
        all &= o.holds;
        let _ = writeln!(out, "{}", o.text);
    }
    Ok(all)
}

fn catalog_verify(family: SKBound, path: Option<&std::path::Path>, as_json: bool) -> Result<bool, Failure> {
    let owned;
    let cat = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
            owned = Catalog::parse(&text)?;
            &owned
        }
        None => Catalog::builtin(),
    };
    let report = verify_catalog(cat, family)?;
    for e in &report.entries {
        if as_json {
            println!("{}", json!({ "name": e.name, "ok": e.ok(), "problems": e.problems }));
        } else if e.ok() {
            println!("{} ok", e.name);
        } else {
            println!("{} FAILED: {}", e.name, e.problems.join("; "));
        }
    }
    let status = if report.ok() { "OK" } else { "FAILED" };
    let summary = if family == SKBound::TWO_POLAR {
        format!("{} P4-sparse, {} P4-extendible, {status}", report.sparse_count, report.extendible_count)
    } else {
        format!("{} P4-extendible, {} P4-sparse, {status}", report.extendible_count, report.sparse_count)
    };
    if as_json {
        println!(
            "{}",
            json!({ "family": family.to_string(), "p4_sparse": report.sparse_count, "p4_extendible": report.extendible_count, "ok": report.ok() })
        );
    } else {
        println!("{summary}");
    }
    Ok(report.ok())
}

fn mine_cmd(n: usize, class: GraphClass, bound: SKBound) -> Result<bool, Failure> {
    let found = mine(n, class, bound)?;
    let mut known = BTreeMap::new();
    for e in &Catalog::builtin().entries {
        if e.family == bound {
            known.insert(canonical_form(&e.graph)?, (e.name.clone(), e.figure.clone()));
        }
    }
    for (i, f) in found.iter().enumerate() {
        let (name, figure) = known.get(f).cloned().unwrap_or_else(|| (format!("new{}", i + 1), "mined".to_string()));
        println!("{name} {class} {bound} {} {figure}", f.to_graph().to_graph6());
    }
    println!("order {n}: {} minimal obstructions", found.len());
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Recognize(input) => {
            let j = input.json;
            batch(&input, |g| Ok(recognize(g, j)))
        }
        Command::Max { input, property, verify } => {
            let j = input.json;
            batch(&input, |g| max_cmd(g, property, verify, j))
        }
        Command::Check2polar(input) => {
            let j = input.json;
            batch(&input, |g| check2polar(g, j))
        }
        Command::Tree { input, kind } => batch(&input, |g| tree_cmd(g, kind)),
        Command::CatalogVerify { family, catalog, json } => catalog_verify(family, catalog.as_deref(), json),
        Command::Mine { n, class, bound } => mine_cmd(n, class, bound),
    }
}

fn main() -> ExitCode {
    if let Some(t) = std::env::var("POLARITY_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

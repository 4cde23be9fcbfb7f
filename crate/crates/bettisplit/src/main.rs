//! Command-line front end: parse graphs and ideals, run the engine, print
//! tables and verification reports.
//!
//! Exit codes: 0 success / claim verified, 1 verification failure,
//! 2 usage or parse error, 3 budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bettisplit::io;
use bettisplit::{
    associated_ideal, betti_table, cover_ideal, edge_ideal, taylor_table, verify, BipartiteContext,
    Error, FieldSpec, MonomialIdeal, Side, SimpleGraph, VertexSet,
};

#[derive(Parser)]
#[command(name = "bettisplit", version, about = "Cover ideals, multigraded Betti numbers, and Betti splittings", max_term_width = 100)]
struct Cli {
    /// Coefficient field: `q` for the rationals, `p:<prime>` for a prime field
    #[arg(long, global = true, default_value = "q")]
    field: String,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for table sweeps and searches (default: all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Include wall-clock timing in the output
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichIdeal {
    /// Cover ideal: generated by the minimal vertex covers
    Cover,
    /// Edge ideal: generated by the edges
    Edge,
    /// Neighbourhood ideal of one side of the bipartition
    Assoc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    L,
    R,
}

impl From<SideArg> for Side {
    fn from(value: SideArg) -> Side {
        match value {
            SideArg::L => Side::Left,
            SideArg::R => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the minimal vertex covers of a graph
    Covers { graph: PathBuf },

    /// Print an ideal attached to a graph
    Ideal {
        which: WhichIdeal,
        graph: PathBuf,
        /// Side of the bipartition generating the neighbourhood ideal
        #[arg(long, value_enum, default_value_t = SideArg::R)]
        side: SideArg,
    },

    /// Print the multigraded Betti table of a cover ideal or an ideal spec
    Betti {
        /// Graph file (edge list or JSON), or an ideal file (`.. @ n=..` or JSON)
        input: Option<PathBuf>,
        /// Inline ideal spec, e.g. `x1*x2, x2*x3 @ n=3`
        #[arg(long, conflicts_with = "input")]
        ideal: Option<String>,
        /// Cross-check the table against the Taylor-complex oracle
        #[arg(long)]
        oracle: bool,
        /// Print graded rows (i, j, value) instead of multidegrees
        #[arg(long)]
        graded: bool,
    },

    /// Run a named claim verifier; exits 0 iff the claim passes
    Verify {
        /// One of: thm3.3, cor1.2, prop2.2, lem3.2, thm3.4, thm1.3, leaf, search
        claim: String,
        graph: Option<PathBuf>,
        /// Vertex argument (thm3.3, leaf)
        #[arg(long)]
        vertex: Option<usize>,
        /// Vertex-set argument as a comma list, e.g. `4,5` (prop2.2, lem3.2)
        #[arg(long)]
        set: Option<String>,
        /// Bipartition side (thm3.4)
        #[arg(long, value_enum, default_value_t = SideArg::R)]
        side: SideArg,
        /// Prefix size of the bipartition (thm1.3); inferred when omitted
        #[arg(long)]
        split: Option<usize>,
        /// Largest vertex count searched (search)
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        // ignore failure: the pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::BudgetExceeded(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, message: format!("{}: {e}", path.display()) })
}

fn load_graph(path: &PathBuf) -> Result<SimpleGraph, Error> {
    io::parse_graph(&read(path)?)
}

fn looks_like_ideal(text: &str) -> bool {
    text.contains('@') || (text.trim_start().starts_with('{') && text.contains("generators"))
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let field = io::parse_field(&cli.field)?;
    match &cli.command {
        Command::Covers { graph } => {
            let g = load_graph(graph)?;
            let covers = g.minimal_vertex_covers();
            match cli.format {
                Format::Text => {
                    for c in &covers {
                        println!("{c}");
                    }
                }
                Format::Json => {
                    let lists: Vec<Vec<usize>> = covers.iter().map(|c| c.vertices()).collect();
                    println!("{}", serde_json::json!({ "covers": lists }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Ideal { which, graph, side } => {
            let g = load_graph(graph)?;
            let ideal = match which {
                WhichIdeal::Cover => cover_ideal(&g),
                WhichIdeal::Edge => edge_ideal(&g),
                WhichIdeal::Assoc => {
                    let ctx = BipartiteContext::from_graph(g)?;
                    associated_ideal(&ctx, (*side).into())?
                }
            };
            match cli.format {
                Format::Text => println!("{ideal}"),
                Format::Json => println!("{}", io::ideal_to_json(&ideal)),
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Betti { input, ideal, oracle, graded } => {
            let subject: MonomialIdeal = match (input, ideal) {
                (_, Some(spec)) => io::parse_ideal(spec)?,
                (Some(path), None) => {
                    let text = read(path)?;
                    if looks_like_ideal(&text) {
                        io::parse_ideal(&text)?
                    } else {
                        cover_ideal(&io::parse_graph(&text)?)
                    }
                }
                (None, None) => {
                    return Err(Error::Parse {
                        line: 0,
                        message: "provide a graph/ideal file or --ideal".into(),
                    })
                }
            };
            let table = betti_table(&subject, field)?;
            if *oracle {
                let reference = taylor_table(&subject, field)?;
                if reference != table {
                    eprintln!("oracle mismatch: the two Betti computations disagree");
                    for (i, a, v) in table.iter() {
                        if reference.get(i, a) != v {
                            eprintln!("  primary has ({i}, {a:?}) = {v}, oracle {}", reference.get(i, a));
                        }
                    }
                    for (i, a, v) in reference.iter() {
                        if table.get(i, a) != v {
                            eprintln!("  oracle has ({i}, {a:?}) = {v}, primary {}", table.get(i, a));
                        }
                    }
                    return Ok(ExitCode::from(1));
                }
            }
            match (cli.format, graded) {
                (Format::Text, false) => print!("{table}"),
                (Format::Text, true) => {
                    for (i, j, v) in io::graded_rows(&table) {
                        println!("{i}  {j}  {v}");
                    }
                }
                (Format::Json, false) => println!("{}", io::table_to_json(&table)),
                (Format::Json, true) => {
                    let rows: Vec<serde_json::Value> = io::graded_rows(&table)
                        .into_iter()
                        .map(|(i, j, v)| serde_json::json!({ "i": i, "j": j, "value": v }))
                        .collect();
                    println!("{}", serde_json::json!({ "graded": rows }));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { claim, graph, vertex, set, side, split, max_n } => {
            let report = run_verifier(claim, graph, *vertex, set, *side, *split, *max_n, field)?;
            match cli.format {
                Format::Text => print!("{}", io::render_report(&report, cli.timing)),
                Format::Json => println!("{}", io::report_to_json(&report, cli.timing)),
            }
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verifier(
    claim: &str,
    graph: &Option<PathBuf>,
    vertex: Option<usize>,
    set: &Option<String>,
    side: SideArg,
    split: Option<usize>,
    max_n: usize,
    field: FieldSpec,
) -> Result<verify::VerificationReport, Error> {
    let need_graph = || -> Result<SimpleGraph, Error> {
        let path = graph.as_ref().ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("claim `{claim}` needs a graph file"),
        })?;
        load_graph(path)
    };
    let need_vertex = || -> Result<usize, Error> {
        vertex.ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("claim `{claim}` needs --vertex"),
        })
    };
    let need_set = || -> Result<VertexSet, Error> {
        let raw = set.as_ref().ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("claim `{claim}` needs --set"),
        })?;
        let mut vertices = Vec::new();
        for part in raw.split(',') {
            let v: usize = part.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("invalid vertex `{part}` in --set"),
            })?;
            if v == 0 || v > 32 {
                return Err(Error::Parse { line: 0, message: format!("vertex {v} out of range") });
            }
            vertices.push(v);
        }
        Ok(VertexSet::from_vertices(&vertices))
    };

    match claim {
        "thm3.3" => verify::verify_splitting_at_vertex(&need_graph()?, need_vertex()?, field),
        "cor1.2" => verify::verify_bipartite_all_vertices(&need_graph()?, field),
        "prop2.2" => verify::verify_lower_vanishing(&need_graph()?, need_set()?, field),
        "lem3.2" => verify::verify_lower_agreement(&need_graph()?, need_set()?, field),
        "thm3.4" => {
            let ctx = BipartiteContext::from_graph(need_graph()?)?;
            verify::verify_side_splitting(&ctx, side.into(), field)
        }
        "thm1.3" => {
            let g = need_graph()?;
            let m = match split {
                Some(m) => m,
                None => {
                    let (left, _) = g.bipartition().ok_or_else(|| {
                        Error::HypothesisViolation(format!("{g} is not bipartite"))
                    })?;
                    let m = left.len();
                    if left != VertexSet::full(m) {
                        return Err(Error::HypothesisViolation(format!(
                            "bipartition side {left} is not a prefix; pass --split"
                        )));
                    }
                    m
                }
            };
            verify::verify_transfer_prefix(&g, m, field)
        }
        "leaf" => verify::verify_leaf_recursion(&need_graph()?, need_vertex()?, field),
        "search" => verify::verify_search(max_n, field),
        other => Err(Error::Parse {
            line: 0,
            message: format!(
                "unknown claim `{other}` (expected thm3.3, cor1.2, prop2.2, lem3.2, thm3.4, thm1.3, leaf, or search)"
            ),
        }),
    }
}

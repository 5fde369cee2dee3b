use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use minorbound_core::constructions::{build_cockade, exceptional_graph, k10_catalog, named_graph, CockadeRecipe};
use minorbound_core::corpus::{emit_writer, enumerate, ingest, Filter};
use minorbound_core::minor::{find_minor, hadwiger_number, petersen_family};
use minorbound_core::planarity::{apex_certificate, apex_vertices, phi};
use minorbound_core::verifier::{
    exists_triangle_free_preimage, strengthened_apex_check, verify_builtin, verify_corpus,
};
use minorbound_core::{Error, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Exit status for a minor search that ran out of node budget.
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "minorbound", version, about = "Extremal edge bounds for graphs with excluded minors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graphs on N vertices up to isomorphism, as graph6 lines.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// all, triangle-free, connected, bipartite, planar, apex, linkless,
        /// no-k<p>-minor, min-vertices-<k>
        #[arg(long = "filter")]
        filters: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweeps a theorem or conjecture over a corpus and prints JSON reports.
    Verify {
        /// thm1.1, thm1.2, thm1.3, conj1.4, thm1.5, conj1.6, conj1.7, conj1.8,
        /// thm1.8, thm1.9 or thm2
        theorem: String,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        /// graph6 corpus file used instead of the built-in enumeration
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// worker threads; never changes the report
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Hadwiger number of a graph6 graph.
    Hadwiger { graph6: String },
    /// Minor model of a pattern in a host, or "none".
    /// Both graphs may be names (k5, petersen, ...) or graph6.
    Minor { host: String, pattern: String },
    /// Apex vertices and an embedding of G - a for the first of them.
    Apex { graph6: String },
    /// phi(G, a) and the applicable case of the strengthened apex bound.
    Phi { graph6: String, apex: usize },
    /// A (base, k)-cockade with the given number of pieces, as graph6.
    Cockade {
        base: String,
        k: usize,
        pieces: usize,
        /// glue onto random cliques chosen from this seed
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Prints a built-in graph family.
    Catalog {
        family: Family,
        /// order of the exceptional graphs
        #[arg(long, default_value_t = 7)]
        v: usize,
    },
    /// Whether the graph arises from a triangle-free graph by contracting k disjoint edges.
    Preimage { graph6: String, k: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    K10,
    Petersen,
    Exceptional,
}

fn read_graph(arg: &str) -> Result<Graph, Error> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        let line = s.lines().next().unwrap_or("");
        Ok(Graph::from_graph6(line)?)
    } else {
        Ok(Graph::from_graph6(arg)?)
    }
}

fn g6(g: &Graph) -> Result<String, Error> {
    Ok(g.to_graph6()?)
}

fn write_out(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(), Error> {
    let mut stdout = io::stdout().lock();
    match cli.command {
        Command::Enumerate { n, filters, out } => {
            let filters: Vec<Filter> = filters.iter().map(|f| f.parse()).collect::<Result<_, _>>()?;
            let graphs = enumerate(n, &filters)?;
            let mut buf = Vec::new();
            emit_writer(&graphs, &mut buf)?;
            write_out(std::str::from_utf8(&buf).expect("graph6 is ASCII"), out.as_ref())?;
        }
        Command::Verify { theorem, p, n_min, n_max, corpus, out, jobs } => {
            if let Some(j) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(j)
                    .build_global()
                    .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            }
            let reports = match corpus {
                Some(path) => {
                    let graphs = ingest(&path)?;
                    verify_corpus(&theorem, p, &graphs, &format!("file {}", path.display()))?
                }
                None => verify_builtin(&theorem, p, n_min, n_max)?,
            };
            let json = serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect());
            write_out(&pretty(&json), out.as_ref())?;
        }
        Command::Hadwiger { graph6 } => {
            let g = read_graph(&graph6)?;
            if g.vertex_count() == 0 {
                return Err(Error::Precondition("the Hadwiger number needs at least one vertex".into()));
            }
            writeln!(stdout, "{}", hadwiger_number(&g)?)?;
        }
        Command::Minor { host, pattern } => {
            let g = named_graph(&host).or_else(|_| read_graph(&host))?;
            let h = named_graph(&pattern).or_else(|_| read_graph(&pattern))?;
            match find_minor(&g, &h)? {
                Some(model) => writeln!(stdout, "{}", model.to_json())?,
                None => writeln!(stdout, "none")?,
            }
        }
        Command::Apex { graph6 } => {
            let g = read_graph(&graph6)?;
            let apexes = apex_vertices(&g);
            let embedding = match apexes.first() {
                Some(&a) => apex_certificate(&g, a)?.map(|c| c.embedding.to_json()),
                None => None,
            };
            let json = serde_json::json!({ "apex_vertices": apexes, "embedding": embedding });
            write!(stdout, "{}", pretty(&json))?;
        }
        Command::Phi { graph6, apex } => {
            let g = read_graph(&graph6)?;
            let cert = apex_certificate(&g, apex)?.ok_or(Error::NotPlanar)?;
            let value = phi(&g, apex, &cert.embedding)?;
            let check = strengthened_apex_check(&g, apex)?;
            let json = serde_json::json!({
                "phi": value.to_string(),
                "face_sizes": cert.embedding.face_sizes(),
                "case": check.case,
                "bound": check.bound.to_string(),
                "edges": g.edge_count(),
                "holds": check.holds,
            });
            write!(stdout, "{}", pretty(&json))?;
        }
        Command::Cockade { base, k, pieces, seed } => {
            let base = named_graph(&base)?;
            let recipe = match seed {
                Some(s) => CockadeRecipe::random(base, k, pieces, &mut ChaCha8Rng::seed_from_u64(s))?,
                None => CockadeRecipe::chain(base, k, pieces)?,
            };
            writeln!(stdout, "{}", g6(&build_cockade(&recipe)?)?)?;
        }
        Command::Catalog { family, v } => match family {
            Family::K10 => {
                for (name, g) in k10_catalog() {
                    writeln!(stdout, "{} {}", g6(&g)?, name)?;
                }
            }
            Family::Petersen => {
                for g in petersen_family() {
                    writeln!(stdout, "{}", g6(&g)?)?;
                }
            }
            Family::Exceptional => {
                let slots = v.saturating_sub(4);
                for mask in 0u64..(1u64 << slots) {
                    let path: Vec<usize> = (1..=slots).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let (g, _) = exceptional_graph(v, &path)?;
                    writeln!(stdout, "{}", g6(&g)?)?;
                }
            }
        },
        Command::Preimage { graph6, k } => {
            let g = read_graph(&graph6)?;
            writeln!(stdout, "{}", exists_triangle_free_preimage(&g, k)?)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed pipe on stdout is not a failure
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SearchBudgetExceeded { .. } => ExitCode::from(EXIT_BUDGET),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

//! Exhaustive generation of small graphs up to isomorphism, and graph6
//! corpus files.
//!
//! Generation extends every class representative on `n - 1` vertices by one
//! vertex in all possible ways and keeps one graph per canonical form.
//! Filters closed under vertex deletion are applied at every level, which
//! keeps sparse classes (triangle-free, no `K_p` minor) cheap well past the
//! point where all graphs would be out of reach.

use std::collections::BTreeSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::minor::{find_minor_with, is_linkless_with, SearchLimits};
use crate::planarity::{is_apex, is_planar};

/// Largest order accepted by [`enumerate`].
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Graph predicates usable as corpus filters. The string forms (see
/// [`Filter::from_str`]) are stable CLI names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    TriangleFree,
    Connected,
    NoKpMinor(usize),
    MinVertices(usize),
    Bipartite,
    Planar,
    Apex,
    Linkless,
}

impl Filter {
    pub fn accepts(&self, g: &Graph) -> Result<bool> {
        self.accepts_with(g, SearchLimits::default())
    }

    pub fn accepts_with(&self, g: &Graph, limits: SearchLimits) -> Result<bool> {
        Ok(match *self {
            Filter::All => true,
            Filter::TriangleFree => g.is_triangle_free(),
            Filter::Connected => g.is_connected(),
            Filter::NoKpMinor(p) => {
                let kp = Graph::complete(p)?;
                find_minor_with(g, &kp, limits)?.0.is_none()
            }
            Filter::MinVertices(k) => g.vertex_count() >= k,
            Filter::Bipartite => g.is_bipartite(),
            Filter::Planar => is_planar(g),
            Filter::Apex => is_apex(g),
            Filter::Linkless => is_linkless_with(g, limits)?,
        })
    }

    /// Whether every induced subgraph of an accepted graph is accepted.
    pub fn is_hereditary(&self) -> bool {
        !matches!(self, Filter::Connected | Filter::MinVertices(_))
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::All => write!(f, "all"),
            Filter::TriangleFree => write!(f, "triangle-free"),
            Filter::Connected => write!(f, "connected"),
            Filter::NoKpMinor(p) => write!(f, "no-k{p}-minor"),
            Filter::MinVertices(k) => write!(f, "min-vertices-{k}"),
            Filter::Bipartite => write!(f, "bipartite"),
            Filter::Planar => write!(f, "planar"),
            Filter::Apex => write!(f, "apex"),
            Filter::Linkless => write!(f, "linkless"),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown filter {s:?}"));
        Ok(match s {
            "all" => Filter::All,
            "triangle-free" => Filter::TriangleFree,
            "connected" => Filter::Connected,
            "bipartite" => Filter::Bipartite,
            "planar" => Filter::Planar,
            "apex" => Filter::Apex,
            "linkless" => Filter::Linkless,
            _ => {
                if let Some(p) = s.strip_prefix("no-k").and_then(|r| r.strip_suffix("-minor")) {
                    Filter::NoKpMinor(p.parse().map_err(|_| bad())?)
                } else if let Some(k) = s.strip_prefix("min-vertices-") {
                    Filter::MinVertices(k.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

fn accepts_all(filters: &[Filter], g: &Graph) -> Result<bool> {
    for f in filters {
        if !f.accepts(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One representative per isomorphism class of `n`-vertex graphs passing all
/// filters, in canonical-form order. Representatives are canonically labelled.
pub fn enumerate(n: usize, filters: &[Filter]) -> Result<Vec<Graph>> {
    Ok(enumerate_range(n, n, filters)?.pop().expect("one level"))
}

/// [`enumerate`] for every order in `n_min..=n_max`, sharing the generation
/// work; entry `i` holds the graphs on `n_min + i` vertices.
pub fn enumerate_range(n_min: usize, n_max: usize, filters: &[Filter]) -> Result<Vec<Vec<Graph>>> {
    if n_min < 1 || n_max > MAX_ENUMERATION_ORDER || n_min > n_max {
        return Err(Error::InvalidArgument(format!("orders {n_min}..={n_max} outside 1..={MAX_ENUMERATION_ORDER}")));
    }
    let hereditary: Vec<Filter> = filters.iter().copied().filter(Filter::is_hereditary).collect();
    let mut level = vec![Graph::empty(1)?];
    if !accepts_all(&hereditary, &level[0])? {
        level.clear();
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        if n > 1 {
            level = extend(&level, &hereditary)?;
        }
        if n >= n_min {
            let kept: Result<Vec<Option<Graph>>> =
                level.par_iter().map(|g| Ok(accepts_all(filters, g)?.then(|| g.clone()))).collect();
            out.push(kept?.into_iter().flatten().collect());
        }
    }
    Ok(out)
}

/// All one-vertex extensions of `reps` passing `filters`, deduplicated.
fn extend(reps: &[Graph], filters: &[Filter]) -> Result<Vec<Graph>> {
    let per_parent: Result<Vec<BTreeSet<CanonicalForm>>> = reps
        .par_iter()
        .map(|g| {
            let n = g.vertex_count();
            let mut forms = BTreeSet::new();
            for nbrs in 0u64..(1u64 << n) {
                let mut adj = g.adjacency().to_vec();
                for v in crate::graph::bits(nbrs) {
                    adj[v] |= bit(n);
                }
                adj.push(nbrs);
                let child = Graph::from_adjacency_unchecked(adj);
                if accepts_all(filters, &child)? {
                    forms.insert(canonical_form(&child));
                }
            }
            Ok(forms)
        })
        .collect();
    let mut all = BTreeSet::new();
    for forms in per_parent? {
        all.extend(forms);
    }
    all.into_iter().map(|cf| Graph::from_graph6(cf.as_str()).map_err(Error::from)).collect()
}

/// Reads a newline-separated graph6 corpus. Blank lines and a leading
/// `>>graph6<<` header are ignored.
pub fn ingest(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    ingest_reader(BufReader::new(File::open(path)?))
}

pub fn ingest_reader(reader: impl BufRead) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let text = line.strip_prefix(">>graph6<<").unwrap_or(&line).trim();
        if text.is_empty() {
            continue;
        }
        let g = Graph::from_graph6(text).map_err(|source| Error::CorpusLine { line: i + 1, source })?;
        out.push(g);
    }
    Ok(out)
}

/// Writes one graph6 line per graph.
pub fn emit<'a>(graphs: impl IntoIterator<Item = &'a Graph>, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    emit_writer(graphs, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn emit_writer<'a>(graphs: impl IntoIterator<Item = &'a Graph>, w: &mut impl Write) -> Result<()> {
    for g in graphs {
        writeln!(w, "{}", g.to_graph6()?)?;
    }
    Ok(())
}

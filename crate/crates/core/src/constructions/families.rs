use crate::error::{Error, Result};
use crate::graph::Graph;

use super::cockade::{build_cockade, CockadeRecipe};

/// `K_{p-2, V-p+2}`, which has `(p-2)V - (p-2)^2` edges and no triangle.
/// Requires `p >= 3` and `V >= max(2p - 5, p - 1)`.
pub fn extremal_bipartite(p: usize, v: usize) -> Result<Graph> {
    if p < 3 || v + 5 < 2 * p || v + 1 < p {
        return Err(Error::InvalidArgument(format!(
            "extremal_bipartite needs p >= 3 and V >= 2p - 5, got p={p}, V={v}"
        )));
    }
    Graph::complete_bipartite(p - 2, v + 2 - p)
}

/// The Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes `i -- i+5`.
pub fn petersen_graph() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).expect("valid edges")
}

pub fn octahedron() -> Graph {
    Graph::complete_multipartite(&[2, 2, 2]).expect("valid parts")
}

/// Deletes the edge joining the first vertices of the two largest parts of a
/// complete multipartite graph with consecutive parts (ties go to the earlier part).
fn multipartite_minus_edge(parts: &[usize]) -> Result<Graph> {
    let g = Graph::complete_multipartite(parts)?;
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(parts[i]), i));
    let start = |i: usize| parts[..i].iter().sum::<usize>();
    let (x, y) = (start(order[0]), start(order[1]));
    g.delete_edge(x.min(y), x.max(y))
}

/// Smallest members of the eight families of dense graphs without a `K_10`
/// minor. The first entry is the single-piece `(K_{1,1,2,2,2,2,2}, 7)`-cockade.
pub fn k10_catalog() -> Vec<(String, Graph)> {
    let mp = |p: &[usize]| Graph::complete_multipartite(p).expect("valid parts");
    let base = mp(&[1, 1, 2, 2, 2, 2, 2]);
    let cockade = build_cockade(&CockadeRecipe::single(base, 7)).expect("single piece");
    let join = mp(&[2, 2, 2, 2]).join(&Graph::cycle(5).expect("C5")).expect("13 vertices");
    vec![
        ("cockade-k1,1,2,2,2,2,2".to_string(), cockade),
        ("k1,2,2,2,3,3".to_string(), mp(&[1, 2, 2, 2, 3, 3])),
        ("k2,2,2,2,2,3".to_string(), mp(&[2, 2, 2, 2, 2, 3])),
        ("k2,2,2,2,2,3-minus-edge".to_string(), multipartite_minus_edge(&[2, 2, 2, 2, 2, 3]).expect("edge")),
        ("k2,3,3,3,3".to_string(), mp(&[2, 3, 3, 3, 3])),
        ("k2,3,3,3,3-minus-edge".to_string(), multipartite_minus_edge(&[2, 3, 3, 3, 3]).expect("edge")),
        ("k2,2,3,3,4".to_string(), mp(&[2, 2, 3, 3, 4])),
        ("k2,2,2,2+c5".to_string(), join),
    ]
}

/// Parses a graph name: `k<n>`, `k<a>,<b>,...` (complete multipartite),
/// `c<n>`, `p<n>` (path), `e<n>` (edgeless), `petersen`, `octahedron`, or a
/// Petersen family member `pf0`..`pf6`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let lower = name.trim().to_ascii_lowercase();
    let unknown = || Error::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    match lower.as_str() {
        "petersen" => return Ok(petersen_graph()),
        "octahedron" => return Ok(octahedron()),
        _ => {}
    }
    if let Some(i) = lower.strip_prefix("pf") {
        let i = num(i)?;
        return crate::minor::petersen_family().get(i).cloned().ok_or_else(unknown);
    }
    if let Some(rest) = lower.strip_prefix('k') {
        let parts: Vec<usize> = rest.split(',').map(num).collect::<Result<_>>()?;
        return if parts.len() == 1 { Graph::complete(parts[0]) } else { Graph::complete_multipartite(&parts) };
    }
    if let Some(rest) = lower.strip_prefix('c') {
        return Graph::cycle(num(rest)?);
    }
    if let Some(rest) = lower.strip_prefix('p') {
        return Graph::path(num(rest)?);
    }
    if let Some(rest) = lower.strip_prefix('e') {
        return Graph::empty(num(rest)?);
    }
    Err(unknown())
}

//! ΔY / YΔ exchanges and the Petersen family.

use std::collections::{btree_map::Entry, BTreeMap};

use crate::canon::{canonical_form, canonical_graph};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

use super::search::{find_minor_with, SearchLimits};

/// Replaces the triangle `tri` by a new vertex (index `n`) joined to its corners.
pub fn delta_y(g: &Graph, tri: [usize; 3]) -> Result<Graph> {
    let [a, b, c] = tri;
    for v in tri {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
    }
    if !(g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
        return Err(Error::Precondition(format!("{{{a}, {b}, {c}}} is not a triangle")));
    }
    let n = g.vertex_count();
    let mut adj = g.adjacency().to_vec();
    for (x, y) in [(a, b), (a, c), (b, c)] {
        adj[x] &= !bit(y);
        adj[y] &= !bit(x);
    }
    adj.push(bit(a) | bit(b) | bit(c));
    for v in tri {
        adj[v] |= bit(n);
    }
    Graph::from_adjacency(adj)
}

/// Deletes the degree-3 vertex `v` and joins its neighbours pairwise,
/// keeping the result simple.
pub fn y_delta(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.vertex_count() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
    }
    if g.degree(v) != 3 {
        return Err(Error::Precondition(format!("vertex {v} has degree {}, not 3", g.degree(v))));
    }
    let nb: Vec<usize> = bits(g.neighbors(v)).collect();
    let mut adj = g.adjacency().to_vec();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                adj[nb[i]] |= bit(nb[j]);
            }
        }
    }
    let with = Graph::from_adjacency(adj)?;
    with.delete_vertex(v)
}

/// The seven graphs obtained from `K_6` by repeated ΔY and YΔ exchanges, in
/// order of vertex count (ties by canonical form). Only YΔ moves whose three
/// neighbours are pairwise non-adjacent are applied, so every member keeps
/// the 15 edges of `K_6`.
pub fn petersen_family() -> Vec<Graph> {
    let k6 = Graph::complete(6).expect("K6");
    let mut seen = BTreeMap::new();
    seen.insert(canonical_form(&k6), canonical_graph(&k6));
    let mut queue = vec![k6];
    while let Some(g) = queue.pop() {
        let mut next = Vec::new();
        for t in g.cliques_of_size(3) {
            let tri: Vec<usize> = bits(t).collect();
            next.push(delta_y(&g, [tri[0], tri[1], tri[2]]).expect("triangle"));
        }
        for v in 0..g.vertex_count() {
            if g.degree(v) == 3 && g.is_independent(g.neighbors(v)) {
                next.push(y_delta(&g, v).expect("degree 3"));
            }
        }
        for h in next {
            let cf = canonical_form(&h);
            if let Entry::Vacant(slot) = seen.entry(cf) {
                slot.insert(canonical_graph(&h));
                queue.push(h);
            }
        }
    }
    let mut family: Vec<(usize, String, Graph)> =
        seen.into_iter().map(|(cf, g)| (g.vertex_count(), cf.to_string(), g)).collect();
    family.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    family.into_iter().map(|(_, _, g)| g).collect()
}

/// Whether `g` has no minor in the Petersen family (the linkless
/// embeddability criterion).
pub fn is_linkless(g: &Graph) -> Result<bool> {
    is_linkless_with(g, SearchLimits::default())
}

pub fn is_linkless_with(g: &Graph, limits: SearchLimits) -> Result<bool> {
    for member in petersen_family_cached() {
        if find_minor_with(g, member, limits)?.0.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn petersen_family_cached() -> &'static [Graph] {
    static FAMILY: std::sync::OnceLock<Vec<Graph>> = std::sync::OnceLock::new();
    FAMILY.get_or_init(petersen_family)
}

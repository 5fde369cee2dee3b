//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` neighbour mask per vertex, so set
//! operations on neighbourhoods (common neighbours, independence checks,
//! induced subgraphs) are single word operations. Every "mutator" returns a
//! new graph; vertex deletion recompacts indices preserving relative order.

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count representable by [`Graph`].
pub const MAX_VERTICES: usize = 64;

/// A vertex set as a bit mask.
pub type VertexSet = u64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Validated list of edges `(u, v)` with `u < v`, sorted, without duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(EdgeList { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_edge_list(&EdgeList::new(n, pairs)?)
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Self> {
        let mut g = Self::empty(list.n)?;
        for &(u, v) in &list.edges {
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbour masks, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        for (v, &row) in adj.iter().enumerate() {
            if row & !low_mask(n) != 0 {
                let w = (row & !low_mask(n)).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for w in bits(row) {
                if adj[w] & bit(v) == 0 {
                    return Err(Error::InvalidArgument(format!("adjacency is not symmetric at ({v}, {w})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Unchecked constructor for internal callers that maintain the invariants.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(Self::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges)
    }

    /// Complete multipartite graph with the given part sizes; parts occupy
    /// consecutive index ranges in the given order.
    pub fn complete_multipartite(part_sizes: &[usize]) -> Result<Self> {
        if part_sizes.is_empty() {
            return Err(Error::InvalidArgument("part list is empty".into()));
        }
        if let Some(&s) = part_sizes.iter().find(|&&s| s < 1) {
            return Err(Error::InvalidArgument(format!("part size {s} is not positive")));
        }
        let n: usize = part_sizes.iter().sum();
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        let mut start = 0;
        for &s in part_sizes {
            let part = low_mask(start + s) & !low_mask(start);
            for v in start..start + s {
                g.adj[v] = all & !part;
            }
            start += s;
        }
        Ok(g)
    }

    /// `K_{a,b}`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        match (a, b) {
            (0, 0) => Self::empty(0),
            (0, m) | (m, 0) => Self::empty(m),
            _ => Self::complete_multipartite(&[a, b]),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Mask of all vertices.
    pub fn vertex_set(&self) -> VertexSet {
        low_mask(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_list(&self) -> EdgeList {
        EdgeList { n: self.n, edges: self.edges() }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(())
    }

    /// Subgraph induced by `keep`, with vertices renumbered in ascending
    /// order. Also returns the new-index → old-index map.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertex_set();
        let map: Vec<usize> = bits(keep).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map.iter().map(|&v| bits(self.adj[v] & keep).fold(0u64, |acc, w| acc | bit(pos[w]))).collect();
        (Graph { n: map.len(), adj }, map)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertex_set() & !bit(v)).0)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        g.adj[u] &= !bit(v);
        g.adj[v] &= !bit(u);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u] |= bit(v);
        g.adj[v] |= bit(u);
        Ok(g)
    }

    /// Contracts edge `uv`. The merged vertex keeps the smaller index; the
    /// larger index is removed and later vertices shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_edge(u, v)?;
        Ok(self.contract_unchecked(u.min(v), u.max(v)))
    }

    /// Contraction without validation; requires `keep < drop` (adjacency not required).
    pub(crate) fn contract_unchecked(&self, keep: usize, drop: usize) -> Graph {
        debug_assert!(keep < drop && drop < self.n);
        let merged = (self.adj[keep] | self.adj[drop]) & !bit(keep) & !bit(drop);
        let mut adj = self.adj.clone();
        adj[keep] = merged;
        for w in bits(merged) {
            adj[w] |= bit(keep);
        }
        // remove `drop` and shift higher bits down
        let lo = low_mask(drop);
        adj.remove(drop);
        for row in adj.iter_mut() {
            let r = *row & !bit(drop);
            *row = (r & lo) | ((r & !lo) >> 1);
        }
        Graph { n: self.n - 1, adj }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!("permutation has length {}, expected {}", perm.len(), self.n)));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            seen |= bit(p);
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for v in 0..self.n {
            adj[perm[v]] = bits(self.adj[v]).fold(0u64, |acc, w| acc | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_set();
        let right = other.vertex_set() << self.n;
        for v in 0..self.n {
            g.adj[v] |= right;
        }
        for v in self.n..g.n {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                t += (self.adj[u] & self.adj[v] & !low_mask(v + 1)).count_ones() as usize;
            }
        }
        t
    }

    pub fn triangles_through(&self, v: usize) -> usize {
        let nv = self.adj[v];
        bits(nv).map(|w| (self.adj[w] & nv).count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_triangle_free(&self) -> bool {
        (0..self.n).all(|u| bits(self.adj[u]).all(|v| self.adj[u] & self.adj[v] == 0))
    }

    /// Whether `set` induces no edges.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        bits(set).all(|v| self.adj[v] & set == 0)
    }

    /// Whether `set` induces a complete graph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        bits(set).all(|v| (self.adj[v] | bit(v)) & set == set)
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertex_set())
    }

    /// Components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let comp = self.reach(start, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_set()) == self.vertex_set()
    }

    /// Whether `set` is non-empty and induces a connected subgraph.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        set != 0 && self.reach(set.trailing_zeros() as usize, set) == set
    }

    /// Two-colouring if the graph is bipartite: returns the colour-0 class.
    pub fn bipartition(&self) -> Option<VertexSet> {
        let mut colour0 = 0u64;
        let mut coloured = 0u64;
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            let mut side = [bit(root), 0u64];
            let mut frontier = bit(root);
            let mut parity = 0;
            coloured |= bit(root);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                if next & side[parity] != 0 {
                    return None;
                }
                next &= !coloured;
                parity ^= 1;
                side[parity] |= next;
                coloured |= next;
                frontier = next;
            }
            colour0 |= side[0];
        }
        Some(colour0)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Size of a largest clique.
    pub fn clique_number(&self) -> usize {
        fn grow(g: &Graph, size: usize, cand: u64, best: &mut usize) {
            if cand == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let mut cand = cand;
            while cand != 0 {
                if size + cand.count_ones() as usize <= *best {
                    return;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= !bit(v);
                grow(g, size + 1, cand & g.adj[v], best);
            }
        }
        let mut best = 0;
        grow(self, 0, self.vertex_set(), &mut best);
        best
    }

    /// Some clique of exactly `k` vertices, if one exists (lexicographically first).
    pub fn find_clique(&self, k: usize) -> Option<VertexSet> {
        fn grow(g: &Graph, k: usize, chosen: u64, cand: u64) -> Option<u64> {
            if chosen.count_ones() as usize == k {
                return Some(chosen);
            }
            let mut cand = cand;
            while cand != 0 {
                if ((chosen.count_ones() + cand.count_ones()) as usize) < k {
                    return None;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= !bit(v);
                if let Some(c) = grow(g, k, chosen | bit(v), cand & g.adj[v]) {
                    return Some(c);
                }
            }
            None
        }
        grow(self, k, 0, self.vertex_set())
    }

    /// All cliques of exactly `k` vertices, in lexicographic order.
    pub fn cliques_of_size(&self, k: usize) -> Vec<VertexSet> {
        fn grow(g: &Graph, k: usize, chosen: u64, cand: u64, out: &mut Vec<u64>) {
            if chosen.count_ones() as usize == k {
                out.push(chosen);
                return;
            }
            let mut cand = cand;
            while cand != 0 {
                if ((chosen.count_ones() + cand.count_ones()) as usize) < k {
                    return;
                }
                let v = cand.trailing_zeros() as usize;
                cand &= !bit(v);
                grow(g, k, chosen | bit(v), cand & g.adj[v], out);
            }
        }
        let mut out = Vec::new();
        grow(self, k, 0, self.vertex_set(), &mut out);
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Graph {
        Graph::complete_multipartite(&[2, 2, 2]).unwrap()
    }

    #[test]
    fn multipartite_counts() {
        let g = octahedron();
        assert_eq!((g.vertex_count(), g.edge_count(), g.triangle_count()), (6, 12, 8));
        let single = Graph::complete_multipartite(&[1]).unwrap();
        assert_eq!((single.vertex_count(), single.edge_count()), (1, 0));
        let k34 = Graph::complete_multipartite(&[3, 4]).unwrap();
        assert_eq!(k34.edge_count(), 12);
        assert_eq!(k34.edge_count(), k34.edges().len());
        assert!(Graph::complete_multipartite(&[2, 0]).is_err());
        assert!(Graph::complete_multipartite(&[]).is_err());
    }

    #[test]
    fn contraction_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.contract_edge(0, 2).unwrap(), Graph::complete(2).unwrap());
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.contract_edge(1, 2).unwrap(), Graph::complete(3).unwrap());
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let c = k33.contract_edge(0, 3).unwrap();
        assert_eq!((c.vertex_count(), c.edge_count()), (5, 8));
        assert!(matches!(k33.contract_edge(0, 1), Err(Error::NotAnEdge(0, 1))));
    }

    #[test]
    fn contraction_keeps_smaller_index() {
        // path 0-1-2-3, contract (1,2): 2 disappears, 3 becomes 2
        let p = Graph::path(4).unwrap();
        let c = p.contract_edge(2, 1).unwrap();
        assert_eq!(c.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(Graph::complete(4).unwrap().delete_vertex(2).unwrap(), Graph::complete(3).unwrap());
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.delete_vertex(0).unwrap(), Graph::complete_bipartite(2, 3).unwrap());
        let o = octahedron().delete_edge(0, 2).unwrap();
        assert_eq!((o.vertex_count(), o.edge_count()), (6, 11));
        assert!(octahedron().delete_vertex(6).is_err());
        assert!(octahedron().delete_edge(0, 1).is_err());
    }

    #[test]
    fn triangle_examples() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.triangle_count(), 4);
        assert!((0..4).all(|v| k4.triangles_through(v) == 3));
        assert_eq!(Graph::complete_bipartite(3, 3).unwrap().triangle_count(), 0);
        assert_eq!(octahedron().triangle_count(), 8);
    }

    #[test]
    fn join_and_union() {
        let wheel = Graph::complete(1).unwrap().join(&Graph::cycle(4).unwrap()).unwrap();
        assert_eq!(wheel.edge_count(), 8);
        let k3 = Graph::complete(3).unwrap();
        let u = k3.disjoint_union(&k3).unwrap();
        assert_eq!((u.vertex_count(), u.edge_count()), (6, 6));
        let big = Graph::complete_multipartite(&[2, 2, 2, 2]).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!((big.vertex_count(), big.edge_count()), (13, 69));
    }

    #[test]
    fn edge_list_validation() {
        assert!(matches!(EdgeList::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(EdgeList::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(EdgeList::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1))));
        assert_eq!(EdgeList::new(3, &[(2, 0), (1, 0)]).unwrap().as_slice(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn structure_queries() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b111, 0b11000, 0b100000]);
        assert!(!g.is_connected());
        assert!(g.is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        assert_eq!(octahedron().clique_number(), 3);
        assert_eq!(Graph::complete(7).unwrap().clique_number(), 7);
        assert_eq!(Graph::complete(5).unwrap().cliques_of_size(3).len(), 10);
        assert!(Graph::complete(65).is_err());
    }
}

//! Exact canonical labelling by individualisation and refinement.
//!
//! Ordered partitions are refined to equitable partitions by neighbour
//! counts; the search tree branches on the first smallest non-singleton
//! cell. The canonical form is the lexicographically smallest relabelled
//! adjacency over all leaves. Automorphisms discovered at equivalent leaves
//! prune the tree in two ways: a leaf equivalent to the first or best leaf
//! abandons the subtree back to the common ancestor, and at every node
//! children in the same orbit of the automorphisms fixing that node's path
//! are explored once.

use std::fmt;

use crate::graph::{bit, bits, Graph};
use crate::graph6;

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labelling {
    /// `labels[v]` is the canonical index of vertex `v`.
    pub labels: Vec<usize>,
    /// Automorphism generators found during the search (as vertex maps).
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labelling {
    /// Orbit representative (smallest member) of every vertex under the
    /// group generated by the discovered automorphisms.
    pub fn orbits(&self) -> Vec<usize> {
        let n = self.labels.len();
        let mut uf = UnionFind::new(n);
        for g in &self.automorphisms {
            for (v, &w) in g.iter().enumerate() {
                uf.union(v, w);
            }
        }
        (0..n).map(|v| uf.min_of(v)).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    // roots are always the smallest member
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }

    fn min_of(&mut self, v: usize) -> usize {
        self.find(v)
    }
}

/// Refines an ordered partition to the coarsest equitable refinement,
/// splitting cells by neighbour count into each splitter cell.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let adj = g.adjacency();
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 4);
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                // bucket by count; counts are < 64
                let mut buckets: [u64; 65] = [0; 65];
                let mut used = 0u128;
                for v in bits(cell) {
                    let c = (adj[v] & splitter).count_ones() as usize;
                    buckets[c] |= bit(v);
                    used |= 1u128 << c;
                }
                if used.count_ones() == 1 {
                    next.push(cell);
                } else {
                    changed = true;
                    let mut u = used;
                    while u != 0 {
                        let c = u.trailing_zeros() as usize;
                        u &= u - 1;
                        next.push(buckets[c]);
                    }
                }
            }
            *cells = next;
            s += 1;
        }
    }
}

struct Leaf {
    path: Vec<usize>,
    cert: Vec<u64>,
    labels: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let n = self.g.vertex_count();
        let mut labels = vec![0usize; n];
        for (i, &c) in cells.iter().enumerate() {
            labels[c.trailing_zeros() as usize] = i;
        }
        let relabelled = self.g.relabel_unchecked(&labels);
        let cert = relabelled.adjacency().to_vec();
        let Some(first) = &self.first else {
            let leaf = Leaf { path: path.to_vec(), cert, labels };
            self.best = Some(Leaf { path: leaf.path.clone(), cert: leaf.cert.clone(), labels: leaf.labels.clone() });
            self.first = Some(leaf);
            return None;
        };
        if cert == first.cert {
            let auto = compose_to(&labels, &first.labels);
            let j = common_prefix(path, &first.path);
            self.autos.push(auto);
            return Some(j);
        }
        let best = self.best.as_ref().expect("best set with first");
        match cert.cmp(&best.cert) {
            std::cmp::Ordering::Equal => {
                let auto = compose_to(&labels, &best.labels);
                let j = common_prefix(path, &best.path);
                self.autos.push(auto);
                Some(j)
            }
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf { path: path.to_vec(), cert, labels });
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn node(&mut self, mut cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, &mut cells);
        let n = self.g.vertex_count();
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let (target, _) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut tried = 0u64;
        for w in bits(cell) {
            if tried != 0 && self.equivalent_to_tried(w, tried, path) {
                continue;
            }
            tried |= bit(w);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(w));
            child.push(cell & !bit(w));
            child.extend_from_slice(&cells[target + 1..]);
            path.push(w);
            let jump = self.node(child, path);
            path.pop();
            if let Some(j) = jump {
                if j < depth {
                    return Some(j);
                }
            }
        }
        None
    }

    /// Whether `w` shares an orbit with an already explored child under the
    /// automorphisms that fix `path` pointwise.
    fn equivalent_to_tried(&self, w: usize, tried: u64, path: &[usize]) -> bool {
        let n = self.g.vertex_count();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for a in &self.autos {
            if path.iter().all(|&p| a[p] == p) {
                any = true;
                for (v, &x) in a.iter().enumerate() {
                    uf.union(v, x);
                }
            }
        }
        if !any {
            return false;
        }
        let root = uf.find(w);
        bits(tried).any(|t| uf.find(t) == root)
    }
}

/// Automorphism mapping each vertex `v` of the current leaf to the vertex
/// with the same label in the reference leaf.
fn compose_to(labels: &[usize], reference: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; reference.len()];
    for (v, &l) in reference.iter().enumerate() {
        inv[l] = v;
    }
    labels.iter().map(|&l| inv[l]).collect()
}

/// Canonical labelling together with discovered automorphisms.
pub fn canonical_labelling(g: &Graph) -> Labelling {
    let n = g.vertex_count();
    if n == 0 {
        return Labelling { labels: Vec::new(), automorphisms: Vec::new() };
    }
    let mut search = Search { g, first: None, best: None, autos: Vec::new() };
    let mut path = Vec::new();
    search.node(vec![g.vertex_set()], &mut path);
    let best = search.best.expect("search visits at least one leaf");
    Labelling { labels: best.labels, automorphisms: search.autos }
}

/// The canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let l = canonical_labelling(g);
    g.relabel_unchecked(&l.labels)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let c = canonical_graph(g);
    CanonicalForm(graph6_bytes(&c))
}

// canonical forms must exist for every representable graph, including n > 62
fn graph6_bytes(g: &Graph) -> Vec<u8> {
    match graph6::encode(g) {
        Ok(s) => s.into_bytes(),
        Err(_) => {
            // not graph6: a marker, the order, then hex adjacency rows
            let mut out = format!("~~{}", g.vertex_count());
            for row in g.adjacency() {
                out.push_str(&format!(":{row:016x}"));
            }
            out.into_bytes()
        }
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && canonical_form(a) == canonical_form(b)
}

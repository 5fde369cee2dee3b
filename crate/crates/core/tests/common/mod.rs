//! Brute-force oracles shared by the integration tests. None of them calls
//! into the search code they are used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use minorbound_core::Graph;

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(i + 1, p, out);
            p.swap(i, j);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..k).collect(), &mut out);
    out
}

/// Lexicographically smallest adjacency matrix over all relabellings.
pub fn brute_canon(adj: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    let n = adj.len();
    let mut best: Option<Vec<u64>> = None;
    for p in perms {
        let mut m = vec![0u64; n];
        for u in 0..n {
            for v in 0..n {
                if adj[u] >> v & 1 == 1 {
                    m[p[u]] |= 1 << p[v];
                }
            }
        }
        if best.as_ref().is_none_or(|b| m < *b) {
            best = Some(m);
        }
    }
    best.unwrap_or_default()
}

/// Every labelled graph on `n` vertices, as adjacency masks.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..(1u64 << pairs.len())).map(move |code| {
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    })
}

/// Isomorphism classes among labelled graphs on `n` vertices accepted by `keep`.
pub fn brute_class_count(n: usize, keep: impl Fn(&Graph) -> bool) -> usize {
    let perms = permutations(n);
    let mut seen = HashSet::new();
    for adj in labelled_graphs(n) {
        let g = Graph::from_adjacency(adj.clone()).unwrap();
        if keep(&g) {
            seen.insert(brute_canon(&adj, &perms));
        }
    }
    seen.len()
}

fn connected(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = set & set.wrapping_neg();
    loop {
        let mut next = seen;
        for (v, &nb) in adj.iter().enumerate() {
            if seen >> v & 1 == 1 {
                next |= nb & set;
            }
        }
        if next == seen {
            return seen == set;
        }
        seen = next;
    }
}

/// For each `k <= max_k`, the brute canonical forms of every graph on `k`
/// vertices that is a minor of `g`: spanning subgraphs of quotients by `k`
/// disjoint connected blocks.
pub fn minor_closure(g: &Graph, max_k: usize) -> Vec<HashSet<Vec<u64>>> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut out = vec![HashSet::new(); max_k + 1];
    for (k, slot) in out.iter_mut().enumerate().take(max_k.min(n) + 1).skip(1) {
        let perms = permutations(k);
        let mut quotients = HashSet::new();
        let total = (k as u64 + 1).pow(n as u32);
        for mut code in 0..total {
            let mut blocks = vec![0u64; k];
            for v in 0..n {
                let l = (code % (k as u64 + 1)) as usize;
                code /= k as u64 + 1;
                if l < k {
                    blocks[l] |= 1 << v;
                }
            }
            if !blocks.iter().all(|&b| connected(adj, b)) {
                continue;
            }
            let mut q = vec![0u64; k];
            for i in 0..k {
                for j in 0..k {
                    if i != j && (0..n).any(|v| blocks[i] >> v & 1 == 1 && adj[v] & blocks[j] != 0) {
                        q[i] |= 1 << j;
                    }
                }
            }
            quotients.insert(brute_canon(&q, &perms));
        }
        for q in quotients {
            let pairs: Vec<(usize, usize)> =
                (0..k).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|&(u, v)| q[u] >> v & 1 == 1).collect();
            for code in 0u64..(1u64 << pairs.len()) {
                let mut sub = vec![0u64; k];
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if code >> i & 1 == 1 {
                        sub[u] |= 1 << v;
                        sub[v] |= 1 << u;
                    }
                }
                slot.insert(brute_canon(&sub, &perms));
            }
        }
    }
    out
}

/// Whether `g` contains a subdivision of `K_5` or `K_{3,3}`.
pub fn has_kuratowski_subdivision(g: &Graph) -> bool {
    let n = g.vertex_count();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for branch in 0..=all {
        let size = branch.count_ones();
        if size == 5 {
            let b: Vec<usize> = (0..n).filter(|&v| branch >> v & 1 == 1).collect();
            let edges: Vec<(usize, usize)> =
                (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).map(|(i, j)| (b[i], b[j])).collect();
            if realisable(g, &edges, all & !branch) {
                return true;
            }
        } else if size == 6 {
            let b: Vec<usize> = (0..n).filter(|&v| branch >> v & 1 == 1).collect();
            // sides {b[0], x, y} and the rest
            for x in 1..6 {
                for y in x + 1..6 {
                    let left = [b[0], b[x], b[y]];
                    let right: Vec<usize> = b.iter().copied().filter(|v| !left.contains(v)).collect();
                    let edges: Vec<(usize, usize)> =
                        left.iter().flat_map(|&l| right.iter().map(move |&r| (l, r))).collect();
                    if realisable(g, &edges, all & !branch) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Whether the pattern edges can be routed as internally disjoint paths whose
/// interiors use vertices of `spare`.
fn realisable(g: &Graph, edges: &[(usize, usize)], spare: u64) -> bool {
    fn path_exists(g: &Graph, x: usize, y: usize, via: u64) -> bool {
        // any ordering of the interior `via` forming a path x .. y
        let inner: Vec<usize> = (0..g.vertex_count()).filter(|&v| via >> v & 1 == 1).collect();
        if inner.is_empty() {
            return g.has_edge(x, y);
        }
        permutations(inner.len()).into_iter().any(|p| {
            let seq: Vec<usize> =
                std::iter::once(x).chain(p.iter().map(|&i| inner[i])).chain(std::iter::once(y)).collect();
            seq.windows(2).all(|w| g.has_edge(w[0], w[1]))
        })
    }
    fn rec(g: &Graph, edges: &[(usize, usize)], i: usize, spare: u64) -> bool {
        if i == edges.len() {
            return true;
        }
        let (x, y) = edges[i];
        // choose the interior of this path among the spare vertices
        let mut sub = spare;
        loop {
            if path_exists(g, x, y, sub) && rec(g, edges, i + 1, spare & !sub) {
                return true;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & spare;
        }
        false
    }
    rec(g, edges, 0, spare)
}

/// Every rotation system of `g`, visited one at a time.
pub fn for_each_rotation(g: &Graph, f: &mut impl FnMut(Vec<Vec<usize>>)) {
    let n = g.vertex_count();
    let choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let nb: Vec<usize> = (0..n).filter(|&u| g.has_edge(u, v)).collect();
            if nb.len() <= 2 {
                return vec![nb];
            }
            permutations(nb.len() - 1)
                .into_iter()
                .map(|p| std::iter::once(nb[0]).chain(p.iter().map(|&i| nb[i + 1])).collect())
                .collect()
        })
        .collect();
    let mut idx = vec![0usize; n];
    loop {
        f((0..n).map(|v| choices[v][idx[v]].clone()).collect());
        let mut v = 0;
        while v < n {
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
        if v == n {
            return;
        }
    }
}

/// Smallest number of vertices meeting every triangle, by subset enumeration.
pub fn brute_transversal(g: &Graph) -> usize {
    let n = g.vertex_count();
    let triangles: Vec<u64> = (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
        .filter(|&(a, b, c)| g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
        .map(|(a, b, c)| (1u64 << a) | (1 << b) | (1 << c))
        .collect();
    (0u64..(1u64 << n))
        .filter(|s| triangles.iter().all(|t| t & s != 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

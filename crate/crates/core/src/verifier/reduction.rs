use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Largest `|V(H)| + k` accepted by [`exists_triangle_free_preimage`].
pub const PREIMAGE_MAX_ORDER: usize = 9;

/// Whether every set of `k` vertices misses some triangle, i.e. the triangle
/// transversal number of `h` exceeds `k`.
pub fn triangle_transversal_exceeds(h: &Graph, k: usize) -> bool {
    // a triangle avoiding `removed`, if any
    fn triangle(h: &Graph, removed: u64) -> Option<[usize; 3]> {
        let live = h.vertex_set() & !removed;
        for u in bits(live) {
            let nu = h.neighbors(u) & live & !((bit(u) << 1) - 1);
            for v in bits(nu) {
                let common = nu & h.neighbors(v);
                if common != 0 {
                    return Some([u, v, common.trailing_zeros() as usize]);
                }
            }
        }
        None
    }
    // whether at most `budget` more vertices hit every remaining triangle
    fn coverable(h: &Graph, removed: u64, budget: usize) -> bool {
        match triangle(h, removed) {
            None => true,
            Some(_) if budget == 0 => false,
            Some(t) => t.iter().any(|&v| coverable(h, removed | bit(v), budget - 1)),
        }
    }
    !coverable(h, 0, k)
}

/// Whether `h` arises from a triangle-free graph by contracting `k` pairwise
/// disjoint edges.
///
/// Each contracted edge becomes one vertex of `h`, so the search picks `k`
/// vertices of `h` to split into adjacent pairs, then realises every edge of
/// `h` by a non-empty set of edges between the corresponding fibres, keeping
/// the preimage triangle-free throughout.
pub fn exists_triangle_free_preimage(h: &Graph, k: usize) -> Result<bool> {
    let n = h.vertex_count();
    if n + k > PREIMAGE_MAX_ORDER {
        return Err(Error::InvalidArgument(format!("|V(H)| + k = {} exceeds {PREIMAGE_MAX_ORDER}", n + k)));
    }
    if k > n {
        return Ok(false);
    }
    let edges = h.edges();
    let mut found = false;
    for_each_subset(n, k, &mut |split: u64| {
        if found {
            return;
        }
        // unsplit vertices keep their edges, which must not form a triangle
        let (rest, _) = h.induced(h.vertex_set() & !split);
        if !rest.is_triangle_free() {
            return;
        }
        // twin of split vertex v gets index n + rank of v among split vertices
        let mut twin = [usize::MAX; 64];
        for (i, v) in bits(split).enumerate() {
            twin[v] = n + i;
        }
        let fibre = |v: usize| -> Vec<usize> {
            if split & bit(v) != 0 {
                vec![v, twin[v]]
            } else {
                vec![v]
            }
        };
        let mut adj = vec![0u64; n + k];
        for v in bits(split) {
            adj[v] |= bit(twin[v]);
            adj[twin[v]] |= bit(v);
        }
        let options: Vec<Vec<(usize, usize)>> = edges
            .iter()
            .map(|&(u, v)| fibre(u).into_iter().flat_map(|x| fibre(v).into_iter().map(move |y| (x, y))).collect())
            .collect();
        found = realise(&options, 0, &mut adj);
    });
    Ok(found)
}

/// Chooses a non-empty edge set for each pattern edge in turn without
/// creating a triangle.
fn realise(options: &[Vec<(usize, usize)>], i: usize, adj: &mut [u64]) -> bool {
    if i == options.len() {
        return true;
    }
    let pairs = &options[i];
    for choice in 1u32..(1 << pairs.len()) {
        let mut added = Vec::new();
        let mut ok = true;
        for (j, &(x, y)) in pairs.iter().enumerate() {
            if choice & (1 << j) == 0 {
                continue;
            }
            if adj[x] & adj[y] != 0 {
                ok = false;
                break;
            }
            adj[x] |= bit(y);
            adj[y] |= bit(x);
            added.push((x, y));
        }
        if ok && realise(options, i + 1, adj) {
            return true;
        }
        for (x, y) in added {
            adj[x] &= !bit(y);
            adj[y] &= !bit(x);
        }
    }
    false
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(u64)) {
    fn rec(start: usize, n: usize, k: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if k == 0 {
            f(acc);
            return;
        }
        for v in start..n {
            if n - v < k {
                break;
            }
            rec(v + 1, n, k - 1, acc | bit(v), f);
        }
    }
    rec(0, n, k, 0, f);
}

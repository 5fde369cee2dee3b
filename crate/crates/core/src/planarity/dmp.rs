//! Path-addition planarity test (Demoucron, Malgrange and Pertuiset) on each
//! biconnected block, followed by amalgamation of the block rotations.

use crate::graph::{bit, bits, Graph};

use super::embedding::Embedding;

/// A planar embedding of `g`, or `None` if `g` is not planar.
pub fn planar_embedding(g: &Graph) -> Option<Embedding> {
    let n = g.vertex_count();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut local = [usize::MAX; 64];
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for &(u, v) in &block {
            adj[local[u]] |= bit(local[v]);
            adj[local[v]] |= bit(local[u]);
        }
        let rot = embed_biconnected(&adj)?;
        for (i, r) in rot.into_iter().enumerate() {
            rotation[verts[i]].extend(r.into_iter().map(|j| verts[j]));
        }
    }
    let emb = Embedding::trace(g, rotation);
    debug_assert!(emb.is_planar());
    Some(emb)
}

pub fn is_planar(g: &Graph) -> bool {
    planar_embedding(g).is_some()
}

/// Edge sets of the biconnected blocks, each edge as `(u, v)` with `u < v`.
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }
    fn dfs(s: &mut State, v: usize, parent: usize) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for w in bits(s.g.neighbors(v)) {
            if s.disc[w] == 0 {
                s.stack.push((v.min(w), v.max(w)));
                dfs(s, w, v);
                s.low[v] = s.low[v].min(s.low[w]);
                if s.low[w] >= s.disc[v] {
                    let mut block = Vec::new();
                    let key = (v.min(w), v.max(w));
                    while let Some(e) = s.stack.pop() {
                        block.push(e);
                        if e == key {
                            break;
                        }
                    }
                    s.out.push(block);
                }
            } else if w != parent && s.disc[w] < s.disc[v] {
                s.stack.push((v.min(w), v.max(w)));
                s.low[v] = s.low[v].min(s.disc[w]);
            }
        }
    }
    let n = g.vertex_count();
    let mut s = State { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, usize::MAX);
        }
    }
    s.out
}

/// Rotation system of a biconnected graph with at least three vertices, or
/// `None` if it is not planar.
fn embed_biconnected(adj: &[u64]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let total_edges: u32 = adj.iter().map(|a| a.count_ones()).sum::<u32>() / 2;
    if total_edges as usize > 3 * n - 6 {
        return None;
    }

    // initial cycle through vertex 0 and its first neighbour
    let u0 = adj[0].trailing_zeros() as usize;
    let cycle = shortest_path(adj, u0, 0, u64::MAX, Some((0, u0)))?;
    // the path u0 .. 0 closes into a cycle through the edge 0-u0
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];
    let mut h_verts = cycle.iter().fold(0u64, |m, &v| m | bit(v));
    let mut h_adj = vec![0u64; n];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        h_adj[a] |= bit(b);
        h_adj[b] |= bit(a);
    }
    let mut embedded = cycle.len();

    while embedded < total_edges as usize {
        let face_masks: Vec<u64> = faces.iter().map(|f| f.iter().fold(0u64, |m, &v| m | bit(v))).collect();
        // fragments as (path to embed, attachment set)
        let mut fragments: Vec<(Vec<usize>, u64)> = Vec::new();
        for u in bits(h_verts) {
            for v in bits(adj[u] & h_verts & !h_adj[u]) {
                if v > u {
                    fragments.push((vec![u, v], bit(u) | bit(v)));
                }
            }
        }
        let outside = crate::graph::low_mask(n) & !h_verts;
        let mut rest = outside;
        while rest != 0 {
            let comp = reach(adj, rest.trailing_zeros() as usize, outside);
            rest &= !comp;
            let attach = bits(comp).fold(0u64, |m, v| m | (adj[v] & h_verts));
            let x = attach.trailing_zeros() as usize;
            let path = path_through(adj, x, attach & !bit(x), comp)?;
            fragments.push((path, attach));
        }
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for (path, attach) in fragments {
            let admissible: Vec<usize> = (0..faces.len()).filter(|&i| face_masks[i] & attach == attach).collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    best = Some((path, admissible));
                    break;
                }
                _ if best.is_none() => best = Some((path, admissible)),
                _ => {}
            }
        }
        let (path, admissible) = best?;
        let fi = admissible[0];
        let face = faces.swap_remove(fi);
        let (fa, fb) = split_face(&face, &path);
        faces.push(fa);
        faces.push(fb);
        for w in path.windows(2) {
            h_adj[w[0]] |= bit(w[1]);
            h_adj[w[1]] |= bit(w[0]);
            h_verts |= bit(w[0]) | bit(w[1]);
        }
        embedded += path.len() - 1;
    }

    // succ[v][u] = w for consecutive u, v, w on a face
    let mut succ = vec![[usize::MAX; 64]; n];
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (u, v, w) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ[v][u] = w;
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for v in 0..n {
        let first = adj[v].trailing_zeros() as usize;
        let mut rot = vec![first];
        let mut cur = succ[v][first];
        while cur != first {
            rot.push(cur);
            cur = succ[v][cur];
        }
        debug_assert_eq!(rot.len(), adj[v].count_ones() as usize);
        rotation.push(rot);
    }
    Some(rotation)
}

/// Splits the oriented face `face` along `path`, whose two ends lie on the
/// face and whose interior is new.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let x = path[0];
    let y = *path.last().expect("non-empty path");
    let i = face.iter().position(|&v| v == x).expect("x on face");
    let j = face.iter().position(|&v| v == y).expect("y on face");
    let interior = &path[1..path.len() - 1];
    let mut fa = Vec::new();
    let mut t = i;
    loop {
        fa.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    fa.extend(interior.iter().rev());
    let mut fb = Vec::new();
    let mut t = j;
    loop {
        fb.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    fb.extend(interior.iter());
    (fa, fb)
}

fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let next = bits(frontier).fold(0u64, |m, v| m | adj[v]) & within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// BFS path from `from` to `to` through vertices of `within`, optionally
/// avoiding one edge.
fn shortest_path(adj: &[u64], from: usize, to: usize, within: u64, skip: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut seen = bit(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        for w in bits(adj[v] & within & !seen) {
            if skip.is_some_and(|(a, b)| (v, w) == (a, b) || (v, w) == (b, a)) {
                continue;
            }
            seen |= bit(w);
            parent[w] = v;
            if w == to {
                let mut path = vec![to];
                let mut c = to;
                while c != from {
                    c = parent[c];
                    path.push(c);
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

/// Path from `x` through the fragment `comp` to some vertex of `targets`.
fn path_through(adj: &[u64], x: usize, targets: u64, comp: u64) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut seen = 0u64;
    let mut queue = std::collections::VecDeque::new();
    for w in bits(adj[x] & comp) {
        seen |= bit(w);
        parent[w] = x;
        queue.push_back(w);
    }
    while let Some(v) = queue.pop_front() {
        let hit = adj[v] & targets;
        if hit != 0 {
            let y = hit.trailing_zeros() as usize;
            let mut path = vec![y, v];
            let mut c = v;
            while parent[c] != x {
                c = parent[c];
                path.push(c);
            }
            path.push(x);
            path.reverse();
            return Some(path);
        }
        for w in bits(adj[v] & comp & !seen) {
            seen |= bit(w);
            parent[w] = v;
            queue.push_back(w);
        }
    }
    None
}

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// The exceptional apex graph on `v` vertices: `K_{3, v-3}` with sides
/// `{a, b, c}` and `{v_1, ..., v_{v-3}}`, plus the edge `bc`, plus the path
/// edges `v_i v_{i+1}` for each `i` in `path_edges` (1-based, at most `v - 4`).
///
/// Vertex 0 is the apex `a`, vertices 1 and 2 are `b` and `c`, and `v_i` is
/// vertex `i + 2`. Returns the graph and its apex.
pub fn exceptional_graph(v: usize, path_edges: &[usize]) -> Result<(Graph, usize)> {
    if v < 3 {
        return Err(Error::InvalidArgument(format!("exceptional graphs need V >= 3, got {v}")));
    }
    let mut edges = vec![(1, 2)];
    for i in 3..v {
        edges.extend([(0, i), (1, i), (2, i)]);
    }
    let mut path: Vec<usize> = path_edges.to_vec();
    path.sort_unstable();
    path.dedup();
    for i in path {
        if i == 0 || i + 4 > v {
            return Err(Error::InvalidArgument(format!("path edge index {i} outside 1..={}", v.saturating_sub(4))));
        }
        edges.push((i + 2, i + 3));
    }
    Ok((Graph::from_edges(v, &edges)?, 0))
}

/// Whether `(g, a)` is isomorphic, with `a` playing the apex, to some output
/// of [`exceptional_graph`].
pub fn is_exceptional(g: &Graph, a: usize) -> bool {
    let n = g.vertex_count();
    if a >= n || n < 3 {
        return false;
    }
    let others = g.vertex_set() & !bit(a);
    let nbrs = g.neighbors(a);
    let non = others & !nbrs;
    if non.count_ones() != 2 {
        return false;
    }
    let mut it = bits(non);
    let (b, c) = (it.next().unwrap(), it.next().unwrap());
    if g.neighbors(b) != nbrs | bit(c) || g.neighbors(c) != nbrs | bit(b) {
        return false;
    }
    // the edges inside N(a) must form a linear forest
    let (inner, _) = g.induced(nbrs);
    if inner.max_degree().unwrap_or(0) > 2 {
        return false;
    }
    // a linear forest is acyclic
    inner.components().into_iter().all(|comp| inner.induced(comp).0.edge_count() + 1 == comp.count_ones() as usize)
}

/// Some apex `a` for which `(g, a)` is exceptional.
pub fn exceptional_apex(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).find(|&a| is_exceptional(g, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let (g, a) = exceptional_graph(6, &[]).unwrap();
        assert_eq!((g.edge_count(), a), (10, 0));
        let (g, _) = exceptional_graph(5, &[]).unwrap();
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.edge_count() as i64 - (3 * 5 - 9), 1);
        assert!(exceptional_graph(2, &[]).is_err());
        assert!(exceptional_graph(6, &[3]).is_err());
        assert!(exceptional_graph(6, &[0]).is_err());
    }

    #[test]
    fn recognizer() {
        let (g, a) = exceptional_graph(7, &[1, 3]).unwrap();
        assert!(is_exceptional(&g, a));
        let perm = [6, 0, 3, 5, 1, 2, 4];
        assert!(is_exceptional(&g.relabel(&perm).unwrap(), perm[a]));
        let k34 = Graph::complete_bipartite(3, 4).unwrap();
        assert!(!is_exceptional(&k34, 0));
        let oct = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
        assert!((0..6).all(|a| !is_exceptional(&oct, a)));
        // closing the path into a cycle leaves the family
        let (g, _) = exceptional_graph(6, &[1, 2]).unwrap();
        assert!(!is_exceptional(&g.add_edge(3, 5).unwrap(), 0));
    }

    #[test]
    fn all_subsets_recognised() {
        for v in 3usize..=9 {
            for mask in 0u32..(1 << v.saturating_sub(4)) {
                let path: Vec<usize> = (1..=v.saturating_sub(4)).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let (g, a) = exceptional_graph(v, &path).unwrap();
                assert!(is_exceptional(&g, a), "v={v} path={path:?}");
            }
        }
    }
}

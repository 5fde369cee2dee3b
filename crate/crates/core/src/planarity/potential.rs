use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::dmp::{is_planar, planar_embedding};
use super::embedding::Embedding;

/// Face sizes of an embedding, one entry per face.
pub fn face_sizes(emb: &Embedding) -> Vec<usize> {
    emb.face_sizes()
}

/// An apex vertex together with a planar embedding of `G - a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexCertificate {
    pub apex: usize,
    pub embedding: Embedding,
}

/// Embedding of `g - a` if it is planar.
pub fn apex_certificate(g: &Graph, a: usize) -> Result<Option<ApexCertificate>> {
    let rest = g.delete_vertex(a)?;
    Ok(planar_embedding(&rest).map(|embedding| ApexCertificate { apex: a, embedding }))
}

/// All vertices `a` with `g - a` planar, ascending.
pub fn apex_vertices(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&a| is_planar(&g.delete_vertex(a).expect("vertex in range"))).collect()
}

pub fn is_apex(g: &Graph) -> bool {
    (0..g.vertex_count()).any(|a| is_planar(&g.delete_vertex(a).expect("vertex in range")))
}

/// `psi(V) = (7 - V)^+ + (5 - V)^+`.
pub fn psi(v: usize) -> i64 {
    let v = v as i64;
    (7 - v).max(0) + (5 - v).max(0)
}

/// `phi(G, a) = t_a / 3 - sum over faces f of G - a of (|f| - 4) / 3`, where
/// `t_a` counts the triangles through `a` and `emb` embeds `G - a` (with the
/// vertex order of [`Graph::delete_vertex`]).
pub fn phi(g: &Graph, a: usize, emb: &Embedding) -> Result<Ratio<i64>> {
    let rest = g.delete_vertex(a)?;
    if !emb.is_embedding_of(&rest) {
        return Err(Error::Precondition(format!("embedding does not match G - {a}")));
    }
    if !emb.is_planar() {
        return Err(Error::NotPlanar);
    }
    let excess: i64 = emb.face_sizes().iter().map(|&s| s as i64 - 4).sum();
    Ok(Ratio::new(g.triangles_through(a) as i64 - excess, 3))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(2), 8);
        assert_eq!(psi(6), 1);
        assert_eq!(psi(7), 0);
        assert_eq!(psi(20), 0);
    }

    #[test]
    fn phi_examples() {
        // a adjacent to one isolated vertex
        let k2 = Graph::complete(2).unwrap();
        let c = apex_certificate(&k2, 0).unwrap().unwrap();
        assert_eq!(c.embedding.face_sizes(), vec![0]);
        assert_eq!(phi(&k2, 0, &c.embedding).unwrap(), r(4, 3));

        let k4 = Graph::complete(4).unwrap();
        let c = apex_certificate(&k4, 2).unwrap().unwrap();
        let p = phi(&k4, 2, &c.embedding).unwrap();
        assert_eq!(p, r(5, 3));
        // E = 3V - 9 + phi + psi(V)/3
        assert_eq!(r(6, 1), r(3, 1) + p + r(psi(4), 3));

        // C4 = 0-1-2-3, apex 4 joined to 0 and 2
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4)]).unwrap();
        let c = apex_certificate(&g, 4).unwrap().unwrap();
        assert_eq!(c.embedding.face_sizes(), vec![4, 4]);
        assert_eq!(phi(&g, 4, &c.embedding).unwrap(), r(0, 1));
    }

    #[test]
    fn phi_rejects_foreign_embedding() {
        let k4 = Graph::complete(4).unwrap();
        let c5 = Graph::cycle(5).unwrap();
        let emb = apex_certificate(&c5, 0).unwrap().unwrap().embedding;
        assert!(phi(&k4, 0, &emb).is_err());
    }

    #[test]
    fn apex_sets() {
        assert_eq!(apex_vertices(&Graph::complete(5).unwrap()), vec![0, 1, 2, 3, 4]);
        assert!(apex_vertices(&Graph::complete(6).unwrap()).is_empty());
        assert_eq!(apex_vertices(&Graph::complete_bipartite(3, 3).unwrap()).len(), 6);
        assert_eq!(apex_vertices(&Graph::complete(1).unwrap()), vec![0]);
    }
}

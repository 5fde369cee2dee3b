use serde::ser::{Serialize, SerializeMap, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// A combinatorial embedding given by a rotation system, with its traced faces.
///
/// Components are embedded side by side in the plane: the outer faces of all
/// components are merged into a single face, so `V - E + F = 1 + c` for `c`
/// components. An isolated vertex contributes a boundary walk of length 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    components: usize,
    edges: usize,
}

impl Embedding {
    /// Traces the faces of a rotation system. `rotation[v]` must list every
    /// neighbour of `v` in `g` exactly once. The result need not be planar;
    /// see [`Embedding::is_planar`].
    pub fn from_rotation(g: &Graph, rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = g.vertex_count();
        if rotation.len() != n {
            return Err(Error::InvalidArgument(format!("rotation has {} entries for {n} vertices", rotation.len())));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut seen = 0u64;
            for &u in rot {
                if u >= n || seen & bit(u) != 0 {
                    return Err(Error::InvalidArgument(format!("bad rotation at vertex {v}")));
                }
                seen |= bit(u);
            }
            if seen != g.neighbors(v) {
                return Err(Error::InvalidArgument(format!("rotation at vertex {v} does not match its neighbourhood")));
            }
        }
        Ok(Self::trace(g, rotation))
    }

    pub(crate) fn trace(g: &Graph, rotation: Vec<Vec<usize>>) -> Self {
        let n = g.vertex_count();
        // position of u in rotation[v]
        let mut pos = vec![[usize::MAX; 64]; n];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &u) in rot.iter().enumerate() {
                pos[v][u] = i;
            }
        }
        let mut used: Vec<u64> = vec![0; n];
        let mut faces = Vec::new();
        let comps = g.components();
        for &comp in &comps {
            let mut comp_faces: Vec<Vec<usize>> = Vec::new();
            for u in bits(comp) {
                for &v in &rotation[u] {
                    if used[u] & bit(v) != 0 {
                        continue;
                    }
                    let mut walk = Vec::new();
                    let (mut a, mut b) = (u, v);
                    while used[a] & bit(b) == 0 {
                        used[a] |= bit(b);
                        walk.push(a);
                        let rot = &rotation[b];
                        let next = rot[(pos[b][a] + 1) % rot.len()];
                        a = b;
                        b = next;
                    }
                    comp_faces.push(walk);
                }
            }
            if comp_faces.is_empty() {
                comp_faces.push(Vec::new());
            }
            // the outer face is the first one traced, which starts at the
            // smallest vertex of the component
            let outer = comp_faces.remove(0);
            if faces.is_empty() {
                faces.push(outer);
            } else {
                faces[0].extend(outer);
            }
            faces.extend(comp_faces);
        }
        if faces.is_empty() {
            faces.push(Vec::new());
        }
        Embedding { rotation, faces, components: comps.len(), edges: g.edge_count() }
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Cyclic neighbour order around each vertex.
    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    /// Face boundary walks as sequences of dart tails. The first face is the
    /// merged outer face.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Face sizes in face order; each edge side counts once.
    pub fn face_sizes(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Whether the rotation system has genus zero, i.e. `V - E + F = 1 + c`.
    pub fn is_planar(&self) -> bool {
        let lhs = self.vertex_count() as i64 - self.edges as i64 + self.faces.len() as i64;
        lhs == 1 + self.components as i64
    }

    /// Whether the rotation lists exactly the neighbourhoods of `g`.
    pub fn is_embedding_of(&self, g: &Graph) -> bool {
        self.rotation.len() == g.vertex_count()
            && self.edges == g.edge_count()
            && self.rotation.iter().enumerate().all(|(v, rot)| {
                let mask = rot.iter().fold(0u64, |m, &u| if u < 64 { m | bit(u) } else { u64::MAX });
                rot.len() == g.degree(v) && mask == g.neighbors(v)
            })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("embedding serialises")
    }
}

struct RotationMap<'a>(&'a [Vec<usize>]);

impl Serialize for RotationMap<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, rot) in self.0.iter().enumerate() {
            map.serialize_entry(&v.to_string(), rot)?;
        }
        map.end()
    }
}

impl Serialize for Embedding {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Embedding", 2)?;
        s.serialize_field("rotation", &RotationMap(&self.rotation))?;
        s.serialize_field("faces", &self.faces)?;
        s.end()
    }
}

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::graph::{bit, Graph};

/// Certificate that a pattern `H` is a minor of a host `G`: one branch set of
/// host vertices per pattern vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    pub fn new(branch_sets: Vec<Vec<usize>>) -> Self {
        let branch_sets = branch_sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        MinorModel { branch_sets }
    }

    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        MinorModel { branch_sets: masks.iter().map(|&m| crate::graph::bits(m).collect()).collect() }
    }

    pub fn branch_sets(&self) -> &[Vec<usize>] {
        &self.branch_sets
    }

    pub fn branch_set(&self, pattern_vertex: usize) -> &[usize] {
        &self.branch_sets[pattern_vertex]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("model serialises")
    }
}

impl Serialize for MinorModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.branch_sets.len()))?;
        for (i, set) in self.branch_sets.iter().enumerate() {
            map.serialize_entry(&i.to_string(), set)?;
        }
        map.end()
    }
}

/// Checks every model invariant: one non-empty set per pattern vertex, sets
/// pairwise disjoint and connected in the host, and a host edge between the
/// sets of every pattern edge. Malformed models yield `false`.
pub fn verify_model(host: &Graph, pattern: &Graph, model: &MinorModel) -> bool {
    let sets = model.branch_sets();
    if sets.len() != pattern.vertex_count() {
        return false;
    }
    let n = host.vertex_count();
    let mut masks = Vec::with_capacity(sets.len());
    let mut used = 0u64;
    for set in sets {
        let mut m = 0u64;
        for &v in set {
            if v >= n || m & bit(v) != 0 {
                return false;
            }
            m |= bit(v);
        }
        if m == 0 || used & m != 0 || !host.is_connected_set(m) {
            return false;
        }
        used |= m;
        masks.push(m);
    }
    pattern.edges().into_iter().all(|(a, b)| crate::graph::bits(masks[a]).any(|v| host.neighbors(v) & masks[b] != 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_model_on_triangle() {
        let k3 = Graph::complete(3).unwrap();
        let m = MinorModel::new(vec![vec![0], vec![1], vec![2]]);
        assert!(verify_model(&k3, &k3, &m));
    }

    #[test]
    fn k4_in_k33() {
        // left side 0,1,2; right side 3,4,5
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let m = MinorModel::new(vec![vec![0, 3], vec![1, 4], vec![2], vec![5]]);
        assert!(verify_model(&k33, &k4, &m));
        // {1} and {2} are both on the left, so they are not adjacent
        let bad = MinorModel::new(vec![vec![0, 3], vec![1], vec![2], vec![4]]);
        assert!(!verify_model(&k33, &k4, &bad));
    }

    #[test]
    fn malformed_models_rejected() {
        let k3 = Graph::complete(3).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert!(!verify_model(&k3, &k2, &MinorModel::new(vec![vec![0, 1], vec![1]])));
        assert!(!verify_model(&k3, &k2, &MinorModel::new(vec![vec![0], vec![]])));
        assert!(!verify_model(&k3, &k2, &MinorModel::new(vec![vec![0], vec![7]])));
        assert!(!verify_model(&k3, &k2, &MinorModel::new(vec![vec![0]])));
        let p3 = Graph::path(3).unwrap();
        // {0, 2} is not connected in the path 0-1-2
        assert!(!verify_model(&p3, &Graph::complete(1).unwrap(), &MinorModel::new(vec![vec![0, 2]])));
    }

    #[test]
    fn json_shape() {
        let m = MinorModel::new(vec![vec![3, 0], vec![1]]);
        assert_eq!(m.to_json().to_string(), r#"{"0":[0,3],"1":[1]}"#);
    }
}

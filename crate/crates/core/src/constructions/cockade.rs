use std::collections::HashMap;

use rand::seq::IndexedRandom;
use rand::Rng;

use crate::canon::{canonical_form, is_isomorphic, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// One gluing step: a new copy of the base graph is attached by identifying
/// `piece_clique[i]` (a vertex of the base) with `target[i]` (a vertex of the
/// current graph). The remaining base vertices are appended in ascending
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueStep {
    pub target: Vec<usize>,
    pub piece_clique: Vec<usize>,
}

/// Reproducible description of a `(G, k)`-cockade: the base graph followed by
/// one gluing step per additional piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CockadeRecipe {
    pub base: Graph,
    pub k: usize,
    pub steps: Vec<GlueStep>,
}

impl CockadeRecipe {
    pub fn single(base: Graph, k: usize) -> Self {
        CockadeRecipe { base, k, steps: Vec::new() }
    }

    pub fn pieces(&self) -> usize {
        self.steps.len() + 1
    }

    /// Glues `pieces` copies in a chain: each new copy goes onto the
    /// highest-indexed `k`-clique of the graph so far, matched against the
    /// lowest `k`-clique of the base.
    pub fn chain(base: Graph, k: usize, pieces: usize) -> Result<Self> {
        Self::grow(base, k, pieces, |cliques| *cliques.iter().max().expect("non-empty"), |cliques| cliques[0])
    }

    /// Glues `pieces` copies, each onto a uniformly random `k`-clique of the
    /// graph so far, using a uniformly random `k`-clique of the base.
    pub fn random(base: Graph, k: usize, pieces: usize, rng: &mut impl Rng) -> Result<Self> {
        let rng = std::cell::RefCell::new(rng);
        Self::grow(
            base,
            k,
            pieces,
            |c| *c.choose(&mut *rng.borrow_mut()).expect("non-empty"),
            |c| *c.choose(&mut *rng.borrow_mut()).expect("non-empty"),
        )
    }

    fn grow(
        base: Graph,
        k: usize,
        pieces: usize,
        pick_target: impl Fn(&[u64]) -> u64,
        pick_piece: impl Fn(&[u64]) -> u64,
    ) -> Result<Self> {
        if pieces == 0 {
            return Err(Error::InvalidArgument("a cockade has at least one piece".into()));
        }
        let base_cliques = base.cliques_of_size(k);
        if base_cliques.is_empty() {
            return Err(Error::Precondition(format!("base graph has no {k}-clique")));
        }
        let mut recipe = CockadeRecipe::single(base, k);
        let mut current = recipe.base.clone();
        for _ in 1..pieces {
            let target = pick_target(&current.cliques_of_size(k));
            let piece = pick_piece(&base_cliques);
            let step = GlueStep { target: bits(target).collect(), piece_clique: bits(piece).collect() };
            current = glue(&current, &recipe.base, &step, k)?;
            recipe.steps.push(step);
        }
        Ok(recipe)
    }
}

fn check_clique(g: &Graph, set: &[usize], k: usize, what: &str) -> Result<u64> {
    let mut mask = 0u64;
    for &v in set {
        if v >= g.vertex_count() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
        mask |= bit(v);
    }
    if set.len() != k || mask.count_ones() as usize != k || !g.is_clique(mask) {
        return Err(Error::Precondition(format!("{what} {set:?} is not a {k}-clique")));
    }
    Ok(mask)
}

fn glue(current: &Graph, base: &Graph, step: &GlueStep, k: usize) -> Result<Graph> {
    check_clique(current, &step.target, k, "target")?;
    let piece_mask = check_clique(base, &step.piece_clique, k, "piece clique")?;
    let n = current.vertex_count();
    let mut map = vec![usize::MAX; base.vertex_count()];
    for (&p, &t) in step.piece_clique.iter().zip(&step.target) {
        map[p] = t;
    }
    let mut next = n;
    for v in bits(base.vertex_set() & !piece_mask) {
        map[v] = next;
        next += 1;
    }
    if next > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices { n: next, max: crate::graph::MAX_VERTICES });
    }
    let mut adj = current.adjacency().to_vec();
    adj.resize(next, 0);
    for (u, v) in base.edges() {
        let (a, b) = (map[u], map[v]);
        adj[a] |= bit(b);
        adj[b] |= bit(a);
    }
    Graph::from_adjacency(adj)
}

/// Builds the cockade described by `recipe`.
pub fn build_cockade(recipe: &CockadeRecipe) -> Result<Graph> {
    if recipe.k > recipe.base.vertex_count() {
        return Err(Error::Precondition(format!(
            "k = {} exceeds the base order {}",
            recipe.k,
            recipe.base.vertex_count()
        )));
    }
    let mut g = recipe.base.clone();
    for step in &recipe.steps {
        g = glue(&g, &recipe.base, step, recipe.k)?;
    }
    Ok(g)
}

/// Whether `h` is a `(g, k)`-cockade: either isomorphic to `g`, or split by a
/// `k`-clique cutset into two sides that are both `(g, k)`-cockades.
pub fn is_cockade(h: &Graph, g: &Graph, k: usize) -> bool {
    if k > g.vertex_count() || g.cliques_of_size(k).is_empty() {
        return is_isomorphic(h, g);
    }
    let mut memo = HashMap::new();
    cockade_rec(h, g, k, &mut memo)
}

fn cockade_rec(h: &Graph, g: &Graph, k: usize, memo: &mut HashMap<CanonicalForm, bool>) -> bool {
    let (vh, eh) = (h.vertex_count() as i64, h.edge_count() as i64);
    let (vg, eg, kk) = (g.vertex_count() as i64, g.edge_count() as i64, k as i64);
    if vh == vg {
        return eh == eg && is_isomorphic(h, g);
    }
    // c pieces: V = c V(G) - (c - 1) k and E = c E(G) - (c - 1) C(k, 2)
    let step = vg - kk;
    if step <= 0 || vh < vg || (vh - kk) % step != 0 {
        return false;
    }
    let c = (vh - kk) / step;
    if eh != c * eg - (c - 1) * kk * (kk - 1) / 2 {
        return false;
    }
    let cf = canonical_form(h);
    if let Some(&r) = memo.get(&cf) {
        return r;
    }
    let all = h.vertex_set();
    let mut result = false;
    'cuts: for s in h.cliques_of_size(k) {
        let comps = h.components_within(all & !s);
        if comps.len() < 2 {
            continue;
        }
        // split the components into two non-empty sides; the first component
        // always goes to side A
        let m = comps.len();
        for choice in 0u64..(1u64 << (m - 1)) {
            let side_b_bits = (choice << 1) & ((1u64 << m) - 1);
            if side_b_bits == 0 {
                continue;
            }
            let (mut a, mut b) = (s, s);
            for (i, &comp) in comps.iter().enumerate() {
                if side_b_bits & bit(i) != 0 {
                    b |= comp;
                } else {
                    a |= comp;
                }
            }
            let (ha, _) = h.induced(a);
            let (hb, _) = h.induced(b);
            if cockade_rec(&ha, g, k, memo) && cockade_rec(&hb, g, k, memo) {
                result = true;
                break 'cuts;
            }
        }
    }
    memo.insert(cf, result);
    result
}

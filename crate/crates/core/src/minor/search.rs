//! Exact minor containment.
//!
//! For a connected host, any model can be grown until its branch sets cover
//! every host vertex, so `H` is a minor iff some sequence of edge
//! contractions reaches a graph containing `H` as a subgraph. The search
//! walks contraction states depth first, memoising failed states by
//! canonical form, which collapses the symmetric states that dominate dense
//! hosts such as cockades.
//!
//! Pruning, all sound for covering models:
//! - each contraction loses at least one edge, so a state on `m` vertices
//!   with `e` edges needs `e - |E(H)| >= m - |V(H)|`;
//! - a vertex of degree below `δ(H)` cannot be a branch set on its own, so
//!   only its incident edges need to be tried;
//! - if that vertex is moreover simplicial, contracting it into any single
//!   neighbour loses nothing, so one child suffices.

use std::collections::HashSet;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

use super::model::MinorModel;

/// Node-expansion budget for one `find_minor` call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_expansions: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_expansions: 200_000_000 }
    }
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        SearchLimits { max_expansions: u64::MAX }
    }
}

/// Statistics from the last search, useful for benchmarking.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub expansions: u64,
    pub memo_hits: u64,
}

pub fn find_minor(host: &Graph, pattern: &Graph) -> Result<Option<MinorModel>> {
    find_minor_with(host, pattern, SearchLimits::default()).map(|(m, _)| m)
}

pub fn has_minor(host: &Graph, pattern: &Graph) -> Result<bool> {
    Ok(find_minor(host, pattern)?.is_some())
}

pub fn find_minor_with(
    host: &Graph,
    pattern: &Graph,
    limits: SearchLimits,
) -> Result<(Option<MinorModel>, SearchStats)> {
    let mut stats = SearchStats::default();
    let hn = pattern.vertex_count();
    if hn == 0 {
        return Ok((Some(MinorModel::new(Vec::new())), stats));
    }
    if hn > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok((None, stats));
    }
    let host_comps = host.components();
    let pat_comps = pattern.components();
    let mut budget = limits.max_expansions;

    // Each pattern component goes to one host component; the pattern
    // components sharing a host component must jointly be its minor.
    let mut memo: Vec<Vec<Option<Option<Vec<u64>>>>> = vec![vec![None; 1usize << pat_comps.len()]; host_comps.len()];
    let mut assignment = vec![0usize; pat_comps.len()];

    fn solve_group(
        host: &Graph,
        pattern: &Graph,
        host_comp: u64,
        pat_comps: &[u64],
        group: usize,
        budget: &mut u64,
        stats: &mut SearchStats,
    ) -> Result<Option<Vec<u64>>> {
        let pat_mask = bits(group as u64).fold(0u64, |acc, i| acc | pat_comps[i]);
        let (sub_pat, pat_map) = pattern.induced(pat_mask);
        let (sub_host, host_map) = host.induced(host_comp);
        let found = connected_search(&sub_host, &sub_pat, budget, stats)?;
        Ok(found.map(|sets| {
            // translate to original indices, ordered by original pattern vertex
            let mut out = vec![0u64; pattern.vertex_count()];
            for (i, s) in sets.into_iter().enumerate() {
                out[pat_map[i]] = bits(s).fold(0u64, |acc, v| acc | bit(host_map[v]));
            }
            out
        }))
    }

    #[allow(clippy::too_many_arguments)]
    fn assign(
        i: usize,
        host: &Graph,
        pattern: &Graph,
        host_comps: &[u64],
        pat_comps: &[u64],
        assignment: &mut Vec<usize>,
        memo: &mut Vec<Vec<Option<Option<Vec<u64>>>>>,
        budget: &mut u64,
        stats: &mut SearchStats,
    ) -> Result<Option<Vec<u64>>> {
        if i == pat_comps.len() {
            let mut combined = vec![0u64; pattern.vertex_count()];
            for (c, &comp) in host_comps.iter().enumerate() {
                let group = (0..pat_comps.len()).filter(|&j| assignment[j] == c).fold(0usize, |acc, j| acc | (1 << j));
                if group == 0 {
                    continue;
                }
                if memo[c][group].is_none() {
                    let r = solve_group(host, pattern, comp, pat_comps, group, budget, stats)?;
                    memo[c][group] = Some(r);
                }
                match memo[c][group].as_ref().unwrap() {
                    None => return Ok(None),
                    Some(sets) => {
                        for v in bits(
                            pat_comps
                                .iter()
                                .enumerate()
                                .filter(|(j, _)| group >> j & 1 == 1)
                                .fold(0u64, |a, (_, &m)| a | m),
                        ) {
                            combined[v] = sets[v];
                        }
                    }
                }
            }
            return Ok(Some(combined));
        }
        for c in 0..host_comps.len() {
            // cheap capacity check before recursing
            let used: u32 = (0..i).filter(|&j| assignment[j] == c).map(|j| pat_comps[j].count_ones()).sum();
            if used + pat_comps[i].count_ones() > host_comps[c].count_ones() {
                continue;
            }
            assignment[i] = c;
            if let Some(found) = assign(i + 1, host, pattern, host_comps, pat_comps, assignment, memo, budget, stats)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    let found = assign(0, host, pattern, &host_comps, &pat_comps, &mut assignment, &mut memo, &mut budget, &mut stats)
        .map_err(|e| match e {
            Error::SearchBudgetExceeded { .. } => Error::SearchBudgetExceeded { budget: limits.max_expansions },
            other => other,
        })?;
    Ok((found.map(|m| MinorModel::from_masks(&m)), stats))
}

struct Connected<'a> {
    pattern: &'a Graph,
    pat_n: usize,
    pat_e: usize,
    pat_min_deg: usize,
    complete: bool,
    failed: HashSet<CanonicalForm>,
    budget: &'a mut u64,
    stats: &'a mut SearchStats,
}

/// Search on a connected host. Returns branch sets (host masks) indexed by
/// pattern vertex.
fn connected_search(
    host: &Graph,
    pattern: &Graph,
    budget: &mut u64,
    stats: &mut SearchStats,
) -> Result<Option<Vec<u64>>> {
    debug_assert!(host.is_connected());
    let pat_n = pattern.vertex_count();
    let pat_e = pattern.edge_count();
    let mut ctx = Connected {
        pattern,
        pat_n,
        pat_e,
        pat_min_deg: pattern.min_degree().unwrap_or(0),
        complete: pat_e == pat_n * pat_n.saturating_sub(1) / 2,
        failed: HashSet::new(),
        budget,
        stats,
    };
    let sets: Vec<u64> = (0..host.vertex_count()).map(bit).collect();
    ctx.dfs(host, &sets)
}

impl Connected<'_> {
    fn dfs(&mut self, g: &Graph, sets: &[u64]) -> Result<Option<Vec<u64>>> {
        let m = g.vertex_count();
        let e = g.edge_count();
        if m < self.pat_n || e < self.pat_e || e - self.pat_e < m - self.pat_n {
            return Ok(None);
        }
        let cf = if m > self.pat_n { Some(canonical_form(g)) } else { None };
        if let Some(cf) = &cf {
            if self.failed.contains(cf) {
                self.stats.memo_hits += 1;
                return Ok(None);
            }
        }
        if let Some(image) = self.embed(g) {
            return Ok(Some(absorb(g, sets, &image)));
        }
        let Some(cf) = cf else {
            return Ok(None);
        };
        if *self.budget == 0 {
            return Err(Error::SearchBudgetExceeded { budget: 0 });
        }
        *self.budget -= 1;
        self.stats.expansions += 1;

        for (u, w) in self.branching_edges(g) {
            let (keep, drop) = (u.min(w), u.max(w));
            let child = g.contract_unchecked(keep, drop);
            let mut child_sets = sets.to_vec();
            child_sets[keep] |= child_sets[drop];
            child_sets.remove(drop);
            if let Some(found) = self.dfs(&child, &child_sets)? {
                return Ok(Some(found));
            }
        }
        self.failed.insert(cf);
        Ok(None)
    }

    fn branching_edges(&self, g: &Graph) -> Vec<(usize, usize)> {
        let (v, dv) =
            (0..g.vertex_count()).map(|v| (v, g.degree(v))).min_by_key(|&(v, d)| (d, v)).expect("state is non-empty");
        if dv < self.pat_min_deg {
            let nbrs = g.neighbors(v);
            if g.is_clique(nbrs) {
                let w = nbrs.trailing_zeros() as usize;
                return vec![(v, w)];
            }
            return bits(nbrs).map(|w| (v, w)).collect();
        }
        // cheapest contractions first: they keep the most edges
        let mut edges = g.edges();
        edges.sort_by_key(|&(a, b)| ((g.neighbors(a) & g.neighbors(b)).count_ones(), a, b));
        edges
    }

    /// Injective map pattern → state vertices preserving pattern edges.
    fn embed(&self, g: &Graph) -> Option<Vec<usize>> {
        if self.complete {
            let clique = g.find_clique(self.pat_n)?;
            return Some(bits(clique).collect());
        }
        subgraph_embedding(self.pattern, g)
    }
}

/// Extends the branch sets of an embedded pattern over the whole (connected)
/// state, absorbing each unused state vertex into an adjacent used one.
fn absorb(g: &Graph, sets: &[u64], image: &[usize]) -> Vec<u64> {
    let m = g.vertex_count();
    let mut owner = vec![usize::MAX; m];
    for (h, &v) in image.iter().enumerate() {
        owner[v] = h;
    }
    let mut assigned: u64 = image.iter().fold(0, |a, &v| a | bit(v));
    let all = g.vertex_set();
    while assigned != all {
        let mut progress = false;
        for v in bits(all & !assigned) {
            if let Some(w) = bits(g.neighbors(v) & assigned).next() {
                owner[v] = owner[w];
                assigned |= bit(v);
                progress = true;
            }
        }
        assert!(progress, "state graph must be connected");
    }
    let mut out = vec![0u64; image.len()];
    for v in 0..m {
        out[owner[v]] |= sets[v];
    }
    out
}

/// Backtracking subgraph embedding (not necessarily induced).
pub(crate) fn subgraph_embedding(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    // order: repeatedly take the vertex with most already-ordered neighbours
    let mut order = Vec::with_capacity(k);
    let mut placed = 0u64;
    for _ in 0..k {
        let v = (0..k)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((pattern.neighbors(v) & placed).count_ones(), pattern.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        order.push(v);
        placed |= bit(v);
    }
    let mut image = vec![usize::MAX; k];
    fn go(i: usize, order: &[usize], pattern: &Graph, host: &Graph, image: &mut Vec<usize>, used: u64) -> bool {
        if i == order.len() {
            return true;
        }
        let h = order[i];
        let mut cand = host.vertex_set() & !used;
        for p in bits(pattern.neighbors(h)) {
            if image[p] != usize::MAX {
                cand &= host.neighbors(image[p]);
            }
        }
        let need = pattern.degree(h);
        for v in bits(cand) {
            if host.degree(v) < need {
                continue;
            }
            image[h] = v;
            if go(i + 1, order, pattern, host, image, used | bit(v)) {
                return true;
            }
        }
        image[h] = usize::MAX;
        false
    }
    if go(0, &order, pattern, host, &mut image, 0) {
        Some(image)
    } else {
        None
    }
}

/// Largest `p` such that `K_p` is a minor of `g` (0 for the empty graph).
pub fn hadwiger_number(g: &Graph) -> Result<usize> {
    hadwiger_number_with(g, SearchLimits::default())
}

pub fn hadwiger_number_with(g: &Graph, limits: SearchLimits) -> Result<usize> {
    let mut best = g.clique_number();
    let e = g.edge_count();
    loop {
        let p = best + 1;
        if p > g.vertex_count() || p * (p - 1) / 2 > e {
            return Ok(best);
        }
        let kp = Graph::complete(p)?;
        match find_minor_with(g, &kp, limits)?.0 {
            Some(_) => best = p,
            None => return Ok(best),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minor::model::verify_model;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn k5_in_k6() {
        let k6 = Graph::complete(6).unwrap();
        let k5 = Graph::complete(5).unwrap();
        let m = find_minor(&k6, &k5).unwrap().unwrap();
        assert!(verify_model(&k6, &k5, &m));
    }

    #[test]
    fn k4_in_k33() {
        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let m = find_minor(&k33, &k4).unwrap().unwrap();
        assert!(verify_model(&k33, &k4, &m));
        assert!(find_minor(&k33, &Graph::complete(5).unwrap()).unwrap().is_none());
        assert_eq!(hadwiger_number(&k33).unwrap(), 4);
    }

    #[test]
    fn petersen_hadwiger() {
        let p = petersen();
        assert!(find_minor(&p, &Graph::complete(6).unwrap()).unwrap().is_none());
        assert_eq!(hadwiger_number(&p).unwrap(), 5);
    }

    #[test]
    fn complete_graphs() {
        for p in 1..=7 {
            assert_eq!(hadwiger_number(&Graph::complete(p).unwrap()).unwrap(), p);
        }
        assert_eq!(hadwiger_number(&Graph::empty(0).unwrap()).unwrap(), 0);
        assert_eq!(hadwiger_number(&Graph::empty(3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn disconnected_pattern_and_host() {
        let two_k3 = Graph::complete(3).unwrap().disjoint_union(&Graph::complete(3).unwrap()).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let two_k2 = Graph::complete(2).unwrap().disjoint_union(&Graph::complete(2).unwrap()).unwrap();
        let m = find_minor(&two_k3, &two_k2).unwrap().unwrap();
        assert!(verify_model(&two_k3, &two_k2, &m));
        assert!(find_minor(&k3, &two_k2).unwrap().is_none());
        let c6 = Graph::cycle(6).unwrap();
        let m = find_minor(&c6, &two_k2).unwrap().unwrap();
        assert!(verify_model(&c6, &two_k2, &m));
        assert!(find_minor(&two_k3, &Graph::complete(4).unwrap()).unwrap().is_none());
    }

    #[test]
    fn budget_is_a_distinct_error() {
        let p = petersen();
        let err = find_minor_with(&p, &Graph::complete(5).unwrap(), SearchLimits { max_expansions: 0 });
        assert!(matches!(err, Err(Error::SearchBudgetExceeded { budget: 0 })));
    }
}

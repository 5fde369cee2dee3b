//! End-to-end acceptance checks. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rayon::prelude::*;

use common::{brute_canon, has_kuratowski_subdivision, minor_closure, permutations};
use minorbound_core::constructions::{
    build_cockade, exceptional_graph, extremal_bipartite, k10_catalog, octahedron, petersen_graph, CockadeRecipe,
};
use minorbound_core::corpus::{enumerate_range, Filter};
use minorbound_core::minor::{find_minor, has_minor, petersen_family, verify_model};
use minorbound_core::planarity::{apex_vertices, phi, planar_embedding};
use minorbound_core::verifier::{
    apex_bound, check_strengthened_apex, exists_triangle_free_preimage, strengthened_apex_check,
    triangle_transversal_exceeds, verify_builtin, ApexCase,
};
use minorbound_core::{is_isomorphic, Graph};

fn corpus(n_min: usize, n_max: usize, filters: &[Filter]) -> Vec<Graph> {
    enumerate_range(n_min, n_max, filters).unwrap().into_iter().flatten().collect()
}

fn girth(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in (0..n).filter(|&w| g.has_edge(u, w)) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    best
}

fn petersen_family_closure() {
    let start = Instant::now();
    let family = petersen_family();
    let elapsed = start.elapsed();
    assert_eq!(family.len(), 7);
    assert!(family.iter().all(|g| g.edge_count() == 15));
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            assert!(!is_isomorphic(a, b));
        }
    }
    let cubic: Vec<&Graph> = family
        .iter()
        .filter(|g| g.vertex_count() == 10 && g.degrees().iter().all(|&d| d == 3) && girth(g) == 5)
        .collect();
    assert_eq!(cubic.len(), 1);
    assert!(is_isomorphic(cubic[0], &petersen_graph()));
    assert!(elapsed < Duration::from_secs(1), "{elapsed:?}");
}

fn octahedron_fixture() {
    let g = Graph::complete_multipartite(&[2, 2, 2]).unwrap();
    assert!(is_isomorphic(&g, &octahedron()));
    assert_eq!((g.vertex_count(), g.edge_count(), g.triangle_count()), (6, 12, 8));
    let bound = apex_bound(6, 8);
    assert_eq!(bound, Ratio::new(35, 3));
    assert!(Ratio::from_integer(12) > bound);
}

fn apex_sweep() {
    let reports = verify_builtin("thm1.8", None, 5, 8).unwrap();
    assert_eq!(reports.len(), 2);
    for r in &reports {
        assert!(r.checked > 0, "{}", r.theorem);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }
    let mut dense = 0;
    for g in corpus(5, 8, &[Filter::Apex, Filter::TriangleFree]) {
        let v = g.vertex_count();
        if g.edge_count() + 9 >= 3 * v {
            dense += 1;
            assert!(is_isomorphic(&g, &Graph::complete_bipartite(3, v - 3).unwrap()), "{g:?}");
        }
    }
    assert_eq!(dense, 4);
}

fn triangle_free_sweep() {
    let all = corpus(1, 9, &[Filter::TriangleFree]);
    for p in 4..=6 {
        let reports = verify_builtin("thm1.9", Some(p), 1, 9).unwrap();
        let r = &reports[0];
        assert!(r.violations.is_empty(), "p={p}: {:?}", r.violations);
        // independent recount of the hypothesis and the bound
        let pp = p as i64 - 2;
        let kp = Graph::complete(p).unwrap();
        let over = all
            .par_iter()
            .filter(|g| g.vertex_count() + 5 >= 2 * p)
            .filter(|g| (g.edge_count() as i64) > pp * g.vertex_count() as i64 - pp * pp)
            .filter(|g| !has_minor(g, &kp).unwrap())
            .count();
        assert_eq!(over, 0, "p={p}");
        let tight: Vec<Graph> = r.tight.iter().map(|s| Graph::from_graph6(s).unwrap()).collect();
        for v in (2 * p - 5).max(p - 1)..=9 {
            let ext = extremal_bipartite(p, v).unwrap();
            assert!(tight.iter().any(|t| is_isomorphic(t, &ext)), "p={p} V={v}");
        }
    }
}

fn strengthened_apex() {
    let graphs = corpus(2, 7, &[Filter::Apex]);
    let failures: Vec<String> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            apex_vertices(g)
                .into_iter()
                .filter(|&a| !check_strengthened_apex(g, a).unwrap())
                .map(move |a| format!("{g:?} a={a}"))
        })
        .collect();
    assert!(failures.is_empty(), "{failures:?}");
    let pairs: usize = graphs.iter().map(|g| apex_vertices(g).len()).sum();
    assert!(pairs > graphs.len());

    for v in 5..=9 {
        for mask in 0u32..1 << (v - 4) {
            let path: Vec<usize> = (1..=v - 4).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let (g, a) = exceptional_graph(v, &path).unwrap();
            let rest = g.delete_vertex(a).unwrap();
            let emb = planar_embedding(&rest).unwrap();
            let phi = phi(&g, a, &emb).unwrap();
            let rhs = Ratio::from_integer(3 * v as i64 - 9) + phi + Ratio::new(1, 3);
            assert_eq!(Ratio::from_integer(g.edge_count() as i64), rhs, "V={v} path={path:?}");
            let check = strengthened_apex_check(&g, a).unwrap();
            assert_eq!(check.case, ApexCase::Exceptional);
            assert!(check.holds);
        }
    }
}

fn cockade_witnesses() {
    let k8 = Graph::complete(8).unwrap();
    let k9 = Graph::complete(9).unwrap();
    let five = Graph::complete_multipartite(&[2, 2, 2, 2, 2]).unwrap();
    let six = Graph::complete_multipartite(&[1, 2, 2, 2, 2, 2]).unwrap();
    for pieces in [2, 3] {
        let g = build_cockade(&CockadeRecipe::chain(five.clone(), 5, pieces).unwrap()).unwrap();
        let v = g.vertex_count() as i64;
        assert_eq!(g.edge_count() as i64, 6 * v - 20);
        assert!(!has_minor(&g, &k8).unwrap(), "K8 in {pieces}-piece cockade");
        assert!(triangle_transversal_exceeds(&g, 4));
    }
    let mut dense = vec![Graph::complete_multipartite(&[2, 2, 2, 3, 3]).unwrap()];
    for pieces in [2, 3] {
        dense.push(build_cockade(&CockadeRecipe::chain(six.clone(), 6, pieces).unwrap()).unwrap());
    }
    for g in &dense {
        let v = g.vertex_count() as i64;
        // one edge above 7V - 28
        assert_eq!(g.edge_count() as i64, 7 * v - 27);
        assert!(!has_minor(g, &k9).unwrap(), "K9 in {g:?}");
        assert!(triangle_transversal_exceeds(g, 5));
    }
}

fn oracle_equivalence() {
    let hosts = corpus(1, 6, &[]);
    let patterns = corpus(1, 5, &[]);
    let minor_mismatches = hosts
        .par_iter()
        .map(|g| {
            let closure = minor_closure(g, 5);
            patterns
                .iter()
                .filter(|h| {
                    let k = h.vertex_count();
                    let expected =
                        k <= g.vertex_count() && closure[k].contains(&brute_canon(h.adjacency(), &permutations(k)));
                    match find_minor(g, h).unwrap() {
                        Some(m) => !(expected && verify_model(g, h, &m)),
                        None => expected,
                    }
                })
                .count()
        })
        .sum::<usize>();
    assert_eq!(minor_mismatches, 0);

    let graphs = corpus(1, 7, &[]);
    let planar_mismatches =
        graphs.par_iter().filter(|g| planar_embedding(g).is_some() == has_kuratowski_subdivision(g)).count();
    assert_eq!(planar_mismatches, 0);

    for g in graphs.iter().filter(|g| planar_embedding(g).is_some()) {
        let emb = planar_embedding(g).unwrap();
        let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, emb.face_count() as i64);
        assert_eq!(emb.face_sizes().iter().sum::<usize>() as i64, 2 * e);
        assert_eq!(v - e + f, 1 + g.components().len() as i64);
        if g.is_connected() && v >= 3 {
            let excess: i64 = emb.face_sizes().iter().map(|&s| s as i64 - 4).sum();
            assert!(Ratio::from_integer(e) <= Ratio::from_integer(2 * v - 4) - Ratio::new(excess, 2));
            assert!(f <= 2 * v - 4);
        }
    }
}

fn reduction_implication() {
    let mut exceeding = 0;
    for h in corpus(1, 6, &[]) {
        for k in 0..=2 {
            if triangle_transversal_exceeds(&h, k) {
                exceeding += 1;
                assert!(!exists_triangle_free_preimage(&h, k).unwrap(), "{h:?} k={k}");
            }
        }
    }
    assert!(exceeding > 0);
    assert!(exists_triangle_free_preimage(&Graph::complete(4).unwrap(), 2).unwrap());
}

fn conjecture_sweeps() {
    for id in ["conj1.6", "conj1.7"] {
        for r in verify_builtin(id, None, 1, 8).unwrap() {
            assert!(r.checked > 0, "{id}");
            assert!(r.violations.is_empty(), "{id}: {:?}", r.violations);
        }
    }
    let expected = [(12, 61), (13, 69), (13, 70), (13, 69), (14, 78), (14, 77), (14, 77), (13, 69)];
    let catalog = k10_catalog();
    assert_eq!(catalog.len(), 8);
    for ((name, g), (v, e)) in catalog.iter().zip(expected) {
        assert_eq!((g.vertex_count(), g.edge_count()), (v, e), "{name}");
        assert!(e as i64 > 8 * v as i64 - 36, "{name}");
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 9] = [
        ("petersen family closure", petersen_family_closure),
        ("octahedron against the triangle apex bound", octahedron_fixture),
        ("apex sweep n=5..8", apex_sweep),
        ("triangle-free sweep p=4..6, n<=9", triangle_free_sweep),
        ("strengthened apex bound and exceptional equality", strengthened_apex),
        ("cockade witnesses", cockade_witnesses),
        ("oracle equivalence", oracle_equivalence),
        ("transversal excludes triangle-free preimage", reduction_implication),
        ("linkless conjecture sweeps and catalog", conjecture_sweeps),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(check)).is_ok();
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("{verdict} {}: {name} ({:.2?})", i + 1, start.elapsed());
        failed += usize::from(!ok);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

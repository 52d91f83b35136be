//! Shared fixtures, corpus builders, and independent brute-force oracles
//! for the integration suites.

#![allow(dead_code)]

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hyperconf::twosat::{Clause, Literal};
use hyperconf::{Graph, Hypergraph, VertexId, VertexSet};

pub fn vs(ids: &[u32]) -> VertexSet {
    VertexSet::from_indices(ids)
}

// ---------------------------------------------------------------- fixtures

/// The 5-cycle as a 2-uniform hypergraph.
pub fn c5_hypergraph() -> Hypergraph {
    Hypergraph::build(
        5,
        &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]],
    )
    .unwrap()
}

pub fn c5_graph() -> Graph {
    Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
}

/// Six vertices, a triangle with pendant edges and one triple.
pub fn ex33() -> Hypergraph {
    Hypergraph::build(
        6,
        &[
            vec![0, 1],
            vec![0, 2],
            vec![1, 2],
            vec![0, 3],
            vec![1, 4],
            vec![2, 5],
            vec![3, 4, 5],
        ],
    )
    .unwrap()
}

/// The triangle K3 as a hypergraph; self-dual.
pub fn ex34() -> Hypergraph {
    Hypergraph::build(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
}

/// Seven triples on six vertices; refutable in both ways.
pub fn ex35() -> Hypergraph {
    Hypergraph::build(
        6,
        &[
            vec![0, 3, 4],
            vec![0, 3, 5],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![2, 3, 5],
            vec![2, 4, 5],
            vec![3, 4, 5],
        ],
    )
    .unwrap()
}

/// Complete tripartite graph with parts {0,3}, {1,4}, {2,5}.
pub fn k222_graph() -> Graph {
    let mut edges = Vec::new();
    for u in 0..6u32 {
        for v in u + 1..6 {
            if u % 3 != v % 3 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(6, &edges).unwrap()
}

// ------------------------------------------------------------------ corpora

/// Every Sperner hypergraph on exactly `n` vertices in which each vertex is
/// used: all antichains of nonempty subsets of `[n]` whose union is `[n]`.
pub fn all_covering_sperner(n: usize) -> Vec<Hypergraph> {
    assert!(n <= 5, "antichain enumeration is meant for tiny n");
    let full: u32 = (1u32 << n) - 1;
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();

    fn incomparable(a: u32, b: u32) -> bool {
        a & !b != 0 && b & !a != 0
    }

    fn rec(
        next: u32,
        full: u32,
        n: usize,
        chosen: &mut Vec<u32>,
        union: u32,
        out: &mut Vec<Hypergraph>,
    ) {
        if union == full && !chosen.is_empty() {
            let edges: Vec<Vec<u32>> = chosen
                .iter()
                .map(|&m| (0..n as u32).filter(|&v| m >> v & 1 != 0).collect())
                .collect();
            out.push(Hypergraph::build(n, &edges).unwrap());
        }
        for m in next..=full {
            if chosen.iter().all(|&c| incomparable(c, m)) {
                chosen.push(m);
                rec(m + 1, full, n, chosen, union | m, out);
                chosen.pop();
            }
        }
    }

    rec(1, full, n, &mut chosen, 0, &mut out);
    out
}

/// One random covering Sperner hypergraph, or `None` when the draw failed
/// to cover the universe.
pub fn random_covering_sperner(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_edges: usize,
    smin: usize,
    smax: usize,
) -> Option<Hypergraph> {
    let target = rng.gen_range(1..=max_edges as u32) as usize;
    let mut seen = std::collections::BTreeSet::new();
    let mut edges: Vec<Vec<u32>> = Vec::new();
    let mut attempts = 0;
    while edges.len() < target && attempts < 400 {
        attempts += 1;
        let s = rng.gen_range(smin as u32..=smax as u32) as usize;
        if s > n {
            continue;
        }
        let mut edge: Vec<u32> = Vec::with_capacity(s);
        while edge.len() < s {
            let v = rng.gen_range(0..n as u32);
            if !edge.contains(&v) {
                edge.push(v);
            }
        }
        edge.sort_unstable();
        if seen.insert(edge.clone()) {
            edges.push(edge);
        }
    }
    if edges.is_empty() {
        return None;
    }
    let h = Hypergraph::build(n, &edges).unwrap().sperner_reduce();
    if h.is_covering() {
        Some(h)
    } else {
        None
    }
}

/// The shared oracle-equivalence corpus: every covering Sperner hypergraph
/// with up to five vertices, plus 2000 seeded random covering Sperner
/// instances with up to nine vertices (one third 2-uniform, one third of
/// dimension at most three, one third unconstrained).
pub fn oracle_corpus() -> &'static (Vec<Hypergraph>, Vec<Hypergraph>) {
    static CORPUS: OnceLock<(Vec<Hypergraph>, Vec<Hypergraph>)> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut exhaustive = Vec::new();
        for n in 1..=5 {
            exhaustive.extend(all_covering_sperner(n));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0001);
        let mut random = Vec::new();
        let mut class = 0u32;
        while random.len() < 2000 {
            let n = rng.gen_range(2..=9u32) as usize;
            let drawn = match class % 3 {
                0 => random_covering_sperner(&mut rng, n, 2 * n, 2, 2),
                1 => random_covering_sperner(&mut rng, n, 12, 1, 3.min(n)),
                _ => random_covering_sperner(&mut rng, n, 12, 1, n),
            };
            class += 1;
            if let Some(h) = drawn {
                random.push(h);
            }
        }
        (exhaustive, random)
    })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, percent: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_range(0..100) < percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
    edges.push((n as u32 - 1, 0));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn star_graph(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete_minus_edge(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if !(u == 0 && v == 1) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// All graphs on `n` labeled vertices.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len())
        .map(|mask| {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 != 0)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Smallest upper-triangle code over all vertex relabelings; equal codes
/// mean isomorphic graphs. Brute force over permutations, so `n <= 8`.
pub fn canonical_graph_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 8);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.adjacent(VertexId(p[i] as u32), VertexId(p[j] as u32)) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    });
    best
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

// ------------------------------------------------------------ brute oracles

/// Independent minimal-hitting-set enumeration by scanning all subsets.
pub fn brute_minimal_hitting_sets(h: &Hypergraph) -> Vec<VertexSet> {
    let n = h.vertex_count();
    assert!(n <= 20);
    let masks: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u32, |m, v| m | 1 << v.index()))
        .collect();
    let hits = |s: u32| masks.iter().all(|&em| em & s != 0);
    let mut out = Vec::new();
    for s in 0..1u32 << n {
        if !hits(s) {
            continue;
        }
        let mut minimal = true;
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if hits(s ^ bit) {
                minimal = false;
                break;
            }
            rest ^= bit;
        }
        if minimal {
            out.push(mask_to_set(s, n));
        }
    }
    sort_canonical(&mut out);
    out
}

fn mask_to_set(mask: u32, n: usize) -> VertexSet {
    VertexSet::from_indices(
        &(0..n as u32)
            .filter(|&v| mask >> v & 1 != 0)
            .collect::<Vec<_>>(),
    )
}

pub fn sort_canonical(sets: &mut [VertexSet]) {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// Maximal cliques by scanning all subsets.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    assert!(n <= 16);
    let is_clique = |mask: u32| {
        for i in 0..n {
            if mask >> i & 1 == 0 {
                continue;
            }
            for j in i + 1..n {
                if mask >> j & 1 != 0 && !g.adjacent(VertexId(i as u32), VertexId(j as u32)) {
                    return false;
                }
            }
        }
        true
    };
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        if !is_clique(mask) {
            continue;
        }
        let extendable = (0..n).any(|w| {
            mask >> w & 1 == 0
                && (0..n).all(|i| {
                    mask >> i & 1 == 0 || g.adjacent(VertexId(i as u32), VertexId(w as u32))
                })
        });
        if !extendable {
            out.push(mask_to_set(mask, n));
        }
    }
    sort_canonical(&mut out);
    out
}

/// Definitional clique-transversal test against the full maximal clique
/// list.
pub fn brute_is_clique_transversal(g: &Graph, x: &VertexSet) -> bool {
    brute_maximal_cliques(g)
        .iter()
        .all(|c| !c.intersection(x).is_empty())
}

/// Maximum size of a minimal clique transversal, by scanning all subsets.
pub fn brute_tau_c_plus(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!((1..=16).contains(&n));
    let clique_masks: Vec<u32> = brute_maximal_cliques(g)
        .iter()
        .map(|c| c.iter().fold(0u32, |m, v| m | 1 << v.index()))
        .collect();
    let hits = |s: u32| clique_masks.iter().all(|&cm| cm & s != 0);
    let mut best = 0;
    for s in 0..1u32 << n {
        if !hits(s) {
            continue;
        }
        let mut minimal = true;
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            if hits(s ^ bit) {
                minimal = false;
                break;
            }
            rest ^= bit;
        }
        if minimal {
            best = best.max(s.count_ones() as usize);
        }
    }
    best
}

// ----------------------------------------------------------- 2-SAT oracle

const VAR_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

fn literal_word(l: Literal, word_idx: usize) -> u64 {
    let var_true = if l.var < 6 {
        VAR_PATTERNS[l.var]
    } else if word_idx >> (l.var - 6) & 1 == 1 {
        !0
    } else {
        0
    };
    if l.positive {
        var_true
    } else {
        !var_true
    }
}

/// Exhaustive satisfiability over all `2^num_vars` assignments, evaluated
/// 64 assignments per word. Independent of the implication-graph solver.
pub fn brute_twosat_satisfiable(num_vars: usize, clauses: &[Clause]) -> bool {
    assert!(num_vars <= 16);
    let total: u64 = 1 << num_vars;
    let words = total.div_ceil(64) as usize;
    for w in 0..words {
        let mut live: u64 = if total >= 64 { !0 } else { (1 << total) - 1 };
        for &clause in clauses {
            let mask = match clause {
                Clause::Unit(a) => literal_word(a, w),
                Clause::Binary(a, b) => literal_word(a, w) | literal_word(b, w),
            };
            live &= mask;
            if live == 0 {
                break;
            }
        }
        if live != 0 {
            return true;
        }
    }
    false
}

pub fn assignment_satisfies(assignment: &[bool], clauses: &[Clause]) -> bool {
    clauses.iter().all(|c| match *c {
        Clause::Unit(a) => assignment[a.var] == a.positive,
        Clause::Binary(a, b) => assignment[a.var] == a.positive || assignment[b.var] == b.positive,
    })
}

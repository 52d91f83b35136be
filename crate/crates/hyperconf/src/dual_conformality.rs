//! Decision procedures for dual conformality: is the hypergraph of all
//! minimal transversals of `h` conformal?
//!
//! The co-occurrence graph of the dual is computed without dualizing, by
//! pairwise subtransversal tests. A hypergraph is dually conformal exactly
//! when every maximal clique of that graph is a minimal transversal, which
//! yields two kinds of refutation: a maximal clique that misses an edge, or
//! a clique with a vertex every edge through which is hit twice.
//!
//! Non-Sperner inputs are reduced to their minimal edges first; this leaves
//! the dual, and hence the answer, unchanged. Certificates are stated
//! relative to the reduced hypergraph.

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{
    clique_transversal_violation, enumerate_maximal_cliques, extend_to_maximal_clique, Graph,
};
use crate::hypergraph::Hypergraph;
use crate::set::{VertexId, VertexSet};
use crate::transversal::{is_subtransversal_unchecked, is_transversal_unchecked, removable_vertex};
use crate::twosat::{twosat_solve, Clause, Literal};

/// Machine-checkable refutation of dual conformality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A maximal clique of the dual co-occurrence graph that misses some
    /// hyperedge.
    NonTransversalClique { clique: VertexSet },
    /// A clique of the dual co-occurrence graph together with a vertex such
    /// that every hyperedge containing the vertex meets the clique in at
    /// least two vertices.
    NonMinimalWitness { clique: VertexSet, vertex: VertexId },
}

/// Which decision procedure produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionPath {
    General,
    Restricted,
    BoundedDim,
    Dim3,
    TwoUniform,
}

impl std::fmt::Display for DecisionPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            DecisionPath::General => "general",
            DecisionPath::Restricted => "restricted",
            DecisionPath::BoundedDim => "bounded-dim",
            DecisionPath::Dim3 => "dim3",
            DecisionPath::TwoUniform => "2uniform",
        };
        f.write_str(name)
    }
}

/// Outcome of a dual-conformality decision. The co-occurrence graph of the
/// dual is returned for reuse; a certificate is present exactly when the
/// answer is negative.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub dually_conformal: bool,
    pub certificate: Option<Certificate>,
    pub path: DecisionPath,
    pub dual_cooccurrence: Graph,
}

/// Execution options; `parallel` enables data-parallel evaluation of the
/// pairwise subtransversal loop and the per-vertex phase of the dimension-3
/// decider. Results are identical either way.
#[derive(Debug, Clone, Copy, Default)]
pub struct DecideOptions {
    pub parallel: bool,
}

/// Co-occurrence graph of the dual hypergraph, computed pair by pair:
/// two vertices are adjacent iff together they form a subtransversal.
/// Runs in `O(k·m·Δ²·n²)` without ever materializing the dual.
pub fn dual_cooccurrence(h: &Hypergraph) -> Graph {
    dual_cooccurrence_with(h, &DecideOptions::default())
}

pub fn dual_cooccurrence_with(h: &Hypergraph, opts: &DecideOptions) -> Graph {
    let n = h.vertex_count();
    let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
    for u in 0..n as u32 {
        for w in u + 1..n as u32 {
            pairs.push((u, w));
        }
    }
    let probe = |&(u, w): &(u32, u32)| {
        let s = VertexSet::from_sorted_unchecked(vec![VertexId(u), VertexId(w)]);
        is_subtransversal_unchecked(h, &s).0
    };
    let adjacent: Vec<bool> = if opts.parallel {
        pairs.par_iter().map(probe).collect()
    } else {
        pairs.iter().map(probe).collect()
    };
    let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for (&(u, w), &a) in pairs.iter().zip(&adjacent) {
        if a {
            adj[u as usize].push(VertexId(w));
            adj[w as usize].push(VertexId(u));
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Graph::from_neighbor_lists(adj)
}

fn verdict(path: DecisionPath, certificate: Option<Certificate>, g: Graph) -> Verdict {
    Verdict {
        dually_conformal: certificate.is_none(),
        certificate,
        path,
        dual_cooccurrence: g,
    }
}

/// Unconditional decider: enumerates the maximal cliques of the dual
/// co-occurrence graph and checks each one is a minimal transversal,
/// stopping at the first failure. Worst case exponential in the number of
/// maximal cliques.
pub fn decide_general(h: &Hypergraph) -> Verdict {
    decide_general_with(h, &DecideOptions::default())
}

pub fn decide_general_with(h: &Hypergraph, opts: &DecideOptions) -> Verdict {
    let reduced = h.sperner_reduce();
    let g = dual_cooccurrence_with(&reduced, opts);
    let mut certificate = None;
    enumerate_maximal_cliques(&g, |c| {
        if !is_transversal_unchecked(&reduced, c) {
            certificate = Some(Certificate::NonTransversalClique { clique: c.clone() });
            return ControlFlow::Break(());
        }
        if let Some(v) = removable_vertex(&reduced, c) {
            certificate = Some(Certificate::NonMinimalWitness {
                clique: c.clone(),
                vertex: v,
            });
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    verdict(DecisionPath::General, certificate, g)
}

/// Validates a certificate against `h` and `g = dual_cooccurrence(h)`.
/// Malformed certificates (ids out of range, vertex outside the clique) are
/// errors, not refutations.
pub fn verify_certificate(h: &Hypergraph, g: &Graph, c: &Certificate) -> Result<bool> {
    let n = h.vertex_count();
    let clique = match c {
        Certificate::NonTransversalClique { clique } => clique,
        Certificate::NonMinimalWitness { clique, .. } => clique,
    };
    if let Some(v) = clique.max() {
        if v.index() >= n {
            return Err(Error::MalformedCertificate(format!(
                "vertex {} out of range",
                v.0
            )));
        }
    }
    match c {
        Certificate::NonTransversalClique { clique } => {
            if !crate::graph::is_maximal_clique(g, clique)? {
                return Ok(false);
            }
            Ok(h.edges().iter().any(|e| e.intersection(clique).is_empty()))
        }
        Certificate::NonMinimalWitness { clique, vertex } => {
            if !clique.contains(*vertex) {
                return Err(Error::MalformedCertificate(format!(
                    "vertex {} is not in the clique",
                    vertex.0
                )));
            }
            if !g.is_clique(clique) {
                return Ok(false);
            }
            Ok(h.edges()
                .iter()
                .filter(|e| e.contains(*vertex))
                .all(|e| e.intersection(clique).len() >= 2))
        }
    }
}

/// Removes vertices in ascending id order while the set stays a transversal.
fn greedy_minimize_transversal(h: &Hypergraph, t: &VertexSet) -> VertexSet {
    let mut current = t.clone();
    let mut i = 0;
    while i < current.len() {
        let v = current.as_slice()[i];
        let shrunk = current.without(v);
        if is_transversal_unchecked(h, &shrunk) {
            current = shrunk;
        } else {
            i += 1;
        }
    }
    current
}

/// The shared negative test under the promise that every maximal clique of
/// `g` is a transversal: the answer is NO iff some vertex has its whole
/// neighborhood a transversal. The certificate pairs that vertex with a
/// minimal transversal found inside the neighborhood.
pub(crate) fn restricted_phase(h: &Hypergraph, g: &Graph) -> Option<Certificate> {
    for v in 0..g.vertex_count() as u32 {
        let v = VertexId(v);
        let nb = VertexSet::from_sorted_unchecked(g.neighbors(v).to_vec());
        if is_transversal_unchecked(h, &nb) {
            let t = greedy_minimize_transversal(h, &nb);
            return Some(Certificate::NonMinimalWitness {
                clique: t.with(v),
                vertex: v,
            });
        }
    }
    None
}

/// Decider for the promise problem: the caller guarantees every maximal
/// clique of the dual co-occurrence graph is a transversal of `h`. Under a
/// violated promise the verdict is undefined.
pub fn decide_restricted(h: &Hypergraph) -> Verdict {
    decide_restricted_with(h, &DecideOptions::default())
}

pub fn decide_restricted_with(h: &Hypergraph, opts: &DecideOptions) -> Verdict {
    let reduced = h.sperner_reduce();
    let g = dual_cooccurrence_with(&reduced, opts);
    let certificate = restricted_phase(&reduced, &g);
    verdict(DecisionPath::Restricted, certificate, g)
}

/// Looks for a maximal clique of `g` that misses an edge of `h`, edge by
/// edge: an edge that is not a clique transversal of `g` yields a small
/// undominated clique, which extends to a maximal clique still disjoint
/// from the edge.
pub fn condition_a(h: &Hypergraph, g: &Graph) -> Option<Certificate> {
    for e in h.edges() {
        if let Some(violating) = clique_transversal_violation(g, e) {
            let clique = extend_to_maximal_clique(g, &violating);
            debug_assert!(clique.intersection(e).is_empty());
            return Some(Certificate::NonTransversalClique { clique });
        }
    }
    None
}

/// Polynomial decider for hypergraphs of dimension at most `k`: first test
/// for a maximal clique missing an edge; if none exists the promise of the
/// restricted decider holds and it finishes the job.
pub fn decide_bounded_dim(h: &Hypergraph, k: usize) -> Result<Verdict> {
    decide_bounded_dim_with(h, k, &DecideOptions::default())
}

pub fn decide_bounded_dim_with(h: &Hypergraph, k: usize, opts: &DecideOptions) -> Result<Verdict> {
    if h.dimension() > k {
        return Err(Error::DimensionTooLarge {
            dim: h.dimension(),
            limit: k,
        });
    }
    let reduced = h.sperner_reduce();
    let g = dual_cooccurrence_with(&reduced, opts);
    let certificate = condition_a(&reduced, &g).or_else(|| restricted_phase(&reduced, &g));
    Ok(verdict(DecisionPath::BoundedDim, certificate, g))
}

fn dim3_vertex_probe(h: &Hypergraph, g: &Graph, v: VertexId) -> Option<Certificate> {
    let edge_ids: Vec<usize> = h.edges_containing(v).collect();
    if edge_ids.is_empty() {
        // No edge contains v, so the condition on the clique {v} is vacuous.
        return Some(Certificate::NonMinimalWitness {
            clique: VertexSet::singleton(v),
            vertex: v,
        });
    }
    let nb = g.neighbors(v);
    let mut hit_sets: Vec<Vec<usize>> = Vec::with_capacity(edge_ids.len());
    for &e in &edge_ids {
        let hits: Vec<usize> = h
            .edge(e)
            .iter()
            .filter_map(|u| nb.binary_search(&u).ok())
            .collect();
        if hits.is_empty() {
            return None;
        }
        hit_sets.push(hits);
    }
    // One variable per neighbor of v: "u is in the clique K".
    let mut clauses = Vec::new();
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            if !g.adjacent(nb[i], nb[j]) {
                clauses.push(Clause::Binary(Literal::negative(i), Literal::negative(j)));
            }
        }
    }
    for hits in &hit_sets {
        match hits[..] {
            [a] => clauses.push(Clause::Unit(Literal::positive(a))),
            [a, b] => clauses.push(Clause::Binary(Literal::positive(a), Literal::positive(b))),
            _ => unreachable!("edge through v has at most two other vertices in dimension 3"),
        }
    }
    let assignment = twosat_solve(nb.len(), &clauses)?;
    let mut clique: Vec<VertexId> = assignment
        .iter()
        .enumerate()
        .filter(|&(_, &t)| t)
        .map(|(i, _)| nb[i])
        .collect();
    clique.push(v);
    Some(Certificate::NonMinimalWitness {
        clique: VertexSet::from_unsorted(clique),
        vertex: v,
    })
}

/// Dimension-3 decider. The second phase reduces, per vertex, the search
/// for a clique inside the neighborhood hitting all incident edges to a
/// 2-SAT instance: edges through a vertex have at most two other vertices,
/// so the covering clauses have length at most two.
pub fn decide_dim3(h: &Hypergraph) -> Result<Verdict> {
    decide_dim3_with(h, &DecideOptions::default())
}

pub fn decide_dim3_with(h: &Hypergraph, opts: &DecideOptions) -> Result<Verdict> {
    if h.dimension() > 3 {
        return Err(Error::DimensionTooLarge {
            dim: h.dimension(),
            limit: 3,
        });
    }
    let reduced = h.sperner_reduce();
    let g = dual_cooccurrence_with(&reduced, opts);
    let certificate = condition_a(&reduced, &g).or_else(|| {
        let n = g.vertex_count() as u32;
        if opts.parallel {
            // Deterministic: keep the probe of the smallest vertex id.
            (0..n)
                .into_par_iter()
                .filter_map(|v| dim3_vertex_probe(&reduced, &g, VertexId(v)).map(|c| (v, c)))
                .min_by_key(|&(v, _)| v)
                .map(|(_, c)| c)
        } else {
            (0..n).find_map(|v| dim3_vertex_probe(&reduced, &g, VertexId(v)))
        }
    });
    Ok(verdict(DecisionPath::Dim3, certificate, g))
}

/// Decider for 2-uniform hypergraphs (graphs): after the missing-edge
/// phase, the answer is NO iff the closed neighborhood of some vertex in
/// `h` forms a clique in the dual co-occurrence graph.
pub fn decide_2uniform(h: &Hypergraph) -> Result<Verdict> {
    decide_2uniform_with(h, &DecideOptions::default())
}

pub fn decide_2uniform_with(h: &Hypergraph, opts: &DecideOptions) -> Result<Verdict> {
    if !h.is_two_uniform() {
        return Err(Error::NotTwoUniform);
    }
    let g = dual_cooccurrence_with(h, opts);
    let certificate = condition_a(h, &g).or_else(|| {
        for v in 0..h.vertex_count() as u32 {
            let v = VertexId(v);
            let mut closed: Vec<VertexId> = vec![v];
            for e in h.edges_containing(v) {
                closed.extend(h.edge(e).iter().filter(|&u| u != v));
            }
            let closed = VertexSet::from_unsorted(closed);
            if g.is_clique(&closed) {
                return Some(Certificate::NonMinimalWitness {
                    clique: closed,
                    vertex: v,
                });
            }
        }
        None
    });
    Ok(verdict(DecisionPath::TwoUniform, certificate, g))
}

const BOUNDED_DIM_WORK_LIMIT: f64 = 1e7;

/// Picks a decider by shape: 2-uniform inputs use the closed-neighborhood
/// test, dimension at most three the 2-SAT route, moderate dimensions the
/// bounded-dimension decider, and everything else the general procedure.
pub fn decide(h: &Hypergraph) -> Verdict {
    decide_with(h, &DecideOptions::default())
}

pub fn decide_with(h: &Hypergraph, opts: &DecideOptions) -> Verdict {
    if h.is_two_uniform() {
        return decide_2uniform_with(h, opts).expect("2-uniformity checked");
    }
    let dim = h.dimension();
    if dim <= 3 {
        return decide_dim3_with(h, opts).expect("dimension checked");
    }
    if (h.vertex_count() as f64).powi(dim as i32) <= BOUNDED_DIM_WORK_LIMIT {
        return decide_bounded_dim_with(h, dim, opts).expect("dimension checked");
    }
    decide_general_with(h, opts)
}

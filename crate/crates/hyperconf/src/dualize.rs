//! Exact dualization at desk scale: the dual hypergraph holds all minimal
//! transversals of the input. This is the test oracle for everything else
//! in the crate, computed by sequential edge-by-edge multiplication with
//! intermediate minimization. It is deliberately not output-sensitive.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{VertexId, VertexSet};

/// Default vertex-count guard for the brute-force dualizer.
pub const DEFAULT_DUAL_GUARD: usize = 20;

/// Hard cap: the family arithmetic runs on single-word bit masks.
pub const MAX_DUAL_VERTICES: usize = 64;

/// Computes the dual hypergraph under the default size guard.
///
/// Degenerate conventions make dualization a total involution: a hypergraph
/// with no edges dualizes to the single empty edge, and a hypergraph
/// containing the empty edge dualizes to no edges at all.
pub fn dual(h: &Hypergraph) -> Result<Hypergraph> {
    dual_with_guard(h, DEFAULT_DUAL_GUARD)
}

/// Like [`dual`] with an explicit vertex-count guard (at most
/// [`MAX_DUAL_VERTICES`]).
pub fn dual_with_guard(h: &Hypergraph, guard: usize) -> Result<Hypergraph> {
    let n = h.vertex_count();
    let limit = guard.min(MAX_DUAL_VERTICES);
    if n > limit {
        return Err(Error::GuardExceeded {
            what: "dual vertex count",
            value: n,
            limit,
        });
    }
    if h.edge_count() == 0 {
        return Hypergraph::from_sets(n, vec![VertexSet::new()], true);
    }
    if h.edges().iter().any(VertexSet::is_empty) {
        return Hypergraph::from_sets(n, Vec::new(), true);
    }

    let edge_masks: Vec<u64> = h
        .edges()
        .iter()
        .map(|e| e.iter().fold(0u64, |m, v| m | 1 << v.index()))
        .collect();

    // Berge multiplication: cross the family with each edge, minimizing
    // after every step.
    let mut family: Vec<u64> = vec![0];
    for &em in &edge_masks {
        let mut candidates = Vec::with_capacity(family.len());
        for &t in &family {
            if t & em != 0 {
                candidates.push(t);
            } else {
                let mut rest = em;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    candidates.push(t | bit);
                    rest ^= bit;
                }
            }
        }
        candidates.sort_unstable_by_key(|m| (m.count_ones(), *m));
        candidates.dedup();
        let mut minimized: Vec<u64> = Vec::with_capacity(candidates.len());
        'cand: for c in candidates {
            for &kept in &minimized {
                if kept & !c == 0 {
                    continue 'cand;
                }
            }
            minimized.push(c);
        }
        family = minimized;
    }

    let mut edges: Vec<VertexSet> = family
        .into_iter()
        .map(|m| {
            VertexSet::from_sorted_unchecked(
                (0..n as u32)
                    .filter(|&v| m >> v & 1 != 0)
                    .map(VertexId)
                    .collect(),
            )
        })
        .collect();
    edges.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let out = Hypergraph::from_sets(n, edges, false)
        .expect("minimal transversals are distinct and nonempty");
    debug_assert!(out.is_sperner());
    Ok(out)
}

/// Verifies `dual(dual(h)) == h` for a Sperner hypergraph.
pub fn check_involution(h: &Hypergraph) -> Result<bool> {
    if !h.is_sperner() {
        return Err(Error::NotSperner);
    }
    let d = dual(h)?;
    let dd = dual(&d)?;
    Ok(h.vertex_count() == dd.vertex_count() && h.canonical_edges() == dd.canonical_edges())
}

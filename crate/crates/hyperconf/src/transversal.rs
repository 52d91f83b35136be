//! Transversal, minimal-transversal, and subtransversal tests.
//!
//! A transversal meets every edge; it is minimal when no proper subset is a
//! transversal. A subtransversal is any subset of a minimal transversal.
//! The subtransversal test enumerates, for each `v ∈ S`, the edges whose
//! intersection with `S` is exactly `{v}`, and searches for a selection of
//! one such edge per vertex whose union covers no untouched edge.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::set::{VertexId, VertexSet};

/// Witness that a set extends to a minimal transversal.
///
/// `selection` maps each vertex of the tested set to an edge meeting the set
/// exactly in that vertex; `uncovered_union` is the union of the selected
/// edges minus the set and contains no edge of the hypergraph. The shortcut
/// case where the set is itself a minimal transversal carries an empty
/// selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubtransversalWitness {
    pub selection: Vec<(VertexId, usize)>,
    pub uncovered_union: VertexSet,
}

/// Edge families of a set `S`: for each `v ∈ S` the edges with
/// `e ∩ S = {v}`, plus the edges disjoint from `S`. Edges meeting `S` in two
/// or more vertices appear in neither family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceFamilies {
    pub per_vertex: Vec<(VertexId, Vec<usize>)>,
    pub omega: Vec<usize>,
}

fn check_in_range(h: &Hypergraph, s: &VertexSet) -> Result<()> {
    if let Some(v) = s.max() {
        if v.index() >= h.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v.0,
                n: h.vertex_count(),
            });
        }
    }
    Ok(())
}

/// Does `t` intersect every edge of `h`?
pub fn is_transversal(h: &Hypergraph, t: &VertexSet) -> Result<bool> {
    check_in_range(h, t)?;
    Ok(is_transversal_unchecked(h, t))
}

pub(crate) fn is_transversal_unchecked(h: &Hypergraph, t: &VertexSet) -> bool {
    let mut marked = vec![false; h.vertex_count()];
    for v in t.iter() {
        marked[v.index()] = true;
    }
    h.edges()
        .iter()
        .all(|e| e.iter().any(|v| marked[v.index()]))
}

/// Is `t` a transversal no proper subset of which is a transversal?
/// Equivalently: `t` is a transversal and every `v ∈ t` has a private edge
/// (one meeting `t` exactly in `v`).
pub fn is_minimal_transversal(h: &Hypergraph, t: &VertexSet) -> Result<bool> {
    check_in_range(h, t)?;
    Ok(is_minimal_transversal_unchecked(h, t))
}

pub(crate) fn is_minimal_transversal_unchecked(h: &Hypergraph, t: &VertexSet) -> bool {
    if !is_transversal_unchecked(h, t) {
        return false;
    }
    removable_vertex(h, t).is_none()
}

/// Smallest vertex of the transversal `t` without a private edge, i.e. with
/// `t ∖ {v}` still a transversal. `None` means `t` is minimal.
pub(crate) fn removable_vertex(h: &Hypergraph, t: &VertexSet) -> Option<VertexId> {
    let mut has_private = vec![false; t.len()];
    for e in h.edges() {
        let mut hit = None;
        let mut count = 0;
        for (i, v) in t.iter().enumerate() {
            if e.contains(v) {
                hit = Some(i);
                count += 1;
                if count > 1 {
                    break;
                }
            }
        }
        if count == 1 {
            has_private[hit.unwrap()] = true;
        }
    }
    t.iter()
        .enumerate()
        .find(|&(i, _)| !has_private[i])
        .map(|(_, v)| v)
}

/// Splits the edges of `h` by their trace on `s`.
pub fn partition_by_trace(h: &Hypergraph, s: &VertexSet) -> Result<TraceFamilies> {
    check_in_range(h, s)?;
    let mut slot = vec![usize::MAX; h.vertex_count()];
    for (i, v) in s.iter().enumerate() {
        slot[v.index()] = i;
    }
    let mut per_vertex: Vec<(VertexId, Vec<usize>)> = s.iter().map(|v| (v, Vec::new())).collect();
    let mut omega = Vec::new();
    for (e, edge) in h.edges().iter().enumerate() {
        let mut hit = usize::MAX;
        let mut count = 0;
        for v in edge.iter() {
            if slot[v.index()] != usize::MAX {
                hit = slot[v.index()];
                count += 1;
                if count > 1 {
                    break;
                }
            }
        }
        match count {
            0 => omega.push(e),
            1 => per_vertex[hit].1.push(e),
            _ => {} // edges meeting s twice or more do not influence the test
        }
    }
    Ok(TraceFamilies { per_vertex, omega })
}

/// Decides whether `s` is contained in some minimal transversal of `h`,
/// returning a witness on success.
///
/// Follows the selection-enumeration procedure: reject when `|s|` exceeds
/// the edge count or some family `E_v(s)` is empty; accept immediately when
/// no edge avoids `s` (then `s` is itself a minimal transversal); otherwise
/// try every selection of one private edge per vertex, in lexicographic
/// order over the per-vertex families (edges in input order), and accept on
/// the first whose union covers no edge disjoint from `s`. The worst case is
/// exponential in `|s|`.
pub fn is_subtransversal(
    h: &Hypergraph,
    s: &VertexSet,
) -> Result<(bool, Option<SubtransversalWitness>)> {
    check_in_range(h, s)?;
    Ok(is_subtransversal_unchecked(h, s))
}

pub(crate) fn is_subtransversal_unchecked(
    h: &Hypergraph,
    s: &VertexSet,
) -> (bool, Option<SubtransversalWitness>) {
    // A minimal transversal has at most one vertex per edge.
    if s.len() > h.edge_count() {
        return (false, None);
    }
    let families = partition_by_trace(h, s).expect("range checked by caller");
    if families.per_vertex.iter().any(|(_, f)| f.is_empty()) {
        return (false, None);
    }
    if families.omega.is_empty() {
        // s itself is a minimal transversal.
        return (
            true,
            Some(SubtransversalWitness {
                selection: Vec::new(),
                uncovered_union: VertexSet::new(),
            }),
        );
    }

    let k = families.per_vertex.len();
    let mut marks = vec![false; h.vertex_count()];
    let mut choice = vec![0usize; k];
    let mut union_scratch: Vec<VertexId> = Vec::new();
    loop {
        debug_assert!(marks.iter().all(|&m| !m));
        union_scratch.clear();
        for (i, (_, fam)) in families.per_vertex.iter().enumerate() {
            for u in h.edge(fam[choice[i]]).iter() {
                if !marks[u.index()] {
                    marks[u.index()] = true;
                    union_scratch.push(u);
                }
            }
        }
        // Edges in omega are disjoint from s, so `e ⊆ U ∖ s` iff `e ⊆ U`.
        let covered = families
            .omega
            .iter()
            .any(|&e| h.edge(e).iter().all(|u| marks[u.index()]));
        if !covered {
            let selection = families
                .per_vertex
                .iter()
                .enumerate()
                .map(|(i, (v, fam))| (*v, fam[choice[i]]))
                .collect();
            let union = VertexSet::from_unsorted(union_scratch.clone());
            for u in &union_scratch {
                marks[u.index()] = false;
            }
            debug_assert!(marks.iter().all(|&m| !m));
            return (
                true,
                Some(SubtransversalWitness {
                    selection,
                    uncovered_union: union.difference(s),
                }),
            );
        }
        for u in &union_scratch {
            marks[u.index()] = false;
        }
        debug_assert!(marks.iter().all(|&m| !m));

        // Advance the selection odometer, last coordinate fastest.
        let mut pos = k;
        loop {
            if pos == 0 {
                return (false, None);
            }
            pos -= 1;
            choice[pos] += 1;
            if choice[pos] < families.per_vertex[pos].1.len() {
                break;
            }
            choice[pos] = 0;
        }
    }
}

/// Checks a witness against its defining properties.
pub fn verify_subtransversal_witness(
    h: &Hypergraph,
    s: &VertexSet,
    w: &SubtransversalWitness,
) -> bool {
    let mut union = VertexSet::new();
    let mut seen = VertexSet::new();
    for &(v, e) in &w.selection {
        if e >= h.edge_count() || !s.contains(v) {
            return false;
        }
        if h.edge(e).intersection(s) != VertexSet::singleton(v) {
            return false;
        }
        seen = seen.with(v);
        union = union.union(h.edge(e));
    }
    if !w.selection.is_empty() && seen.len() != s.len() {
        return false;
    }
    if w.uncovered_union != union.difference(s) {
        return false;
    }
    h.edges()
        .iter()
        .all(|e| !e.is_subset_of(&w.uncovered_union))
}

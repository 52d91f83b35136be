//! Co-occurrence graphs and conformality testing.
//!
//! A hypergraph is conformal when every maximal clique of its co-occurrence
//! graph is a hyperedge. The triple criterion checks instead that for every
//! three hyperedges the union of their pairwise intersections lies inside
//! some hyperedge; both routes are implemented and must agree.

use std::ops::ControlFlow;

use crate::bits::{self, BitMatrix};
use crate::graph::{enumerate_maximal_cliques, Graph};
use crate::hypergraph::Hypergraph;
use crate::set::VertexId;

/// The graph on the vertex universe of `h` joining two vertices iff some
/// hyperedge contains both. Every hyperedge of `h` is a clique here.
pub fn co_occurrence(h: &Hypergraph) -> Graph {
    let n = h.vertex_count();
    let mut m = BitMatrix::new(n, n);
    for e in h.edges() {
        let mem = e.as_slice();
        for i in 0..mem.len() {
            for j in i + 1..mem.len() {
                m.set(mem[i].index(), mem[j].index());
                m.set(mem[j].index(), mem[i].index());
            }
        }
    }
    let adj = (0..n)
        .map(|u| bits::ones(m.row(u)).map(|v| VertexId(v as u32)).collect())
        .collect();
    Graph::from_neighbor_lists(adj)
}

/// Triple criterion for conformality.
///
/// Iterates `i ≤ j ≤ k` over edge indices (degenerate triples included; they
/// reduce to containment checks that always pass), forms the union of the
/// three pairwise intersections, and looks for an edge containing it. On
/// failure returns the first violating triple in index order.
pub fn is_conformal(h: &Hypergraph) -> (bool, Option<(usize, usize, usize)>) {
    let m = h.edge_count();
    let words = bits::words_for(h.vertex_count());
    let mut pair = vec![0u64; words];
    let mut probe = vec![0u64; words];
    for i in 0..m {
        let ei = h.edge_mask(i);
        for j in i..m {
            let ej = h.edge_mask(j);
            for (p, (a, b)) in pair.iter_mut().zip(ei.iter().zip(ej)) {
                *p = a & b;
            }
            for k in j..m {
                let ek = h.edge_mask(k);
                for (s, ((p, a), b)) in probe.iter_mut().zip(pair.iter().zip(ei).zip(ek)) {
                    *s = p | (a & b);
                }
                for (s, (a, b)) in probe.iter_mut().zip(ej.iter().zip(ek)) {
                    *s |= a & b;
                }
                let covered = (0..m).any(|e| bits::subset_of(&probe, h.edge_mask(e)));
                if !covered {
                    return (false, Some((i, j, k)));
                }
            }
        }
    }
    (true, None)
}

/// Conformality via the clique route: every maximal clique of the
/// co-occurrence graph must be a maximal hyperedge. Cross-validates
/// [`is_conformal`].
pub fn conformal_via_cliques(h: &Hypergraph) -> bool {
    let g = co_occurrence(h);
    let mut conformal = true;
    enumerate_maximal_cliques(&g, |c| {
        let is_edge = h.edges().iter().any(|e| e == c);
        let is_maximal_edge = is_edge
            && h.edges()
                .iter()
                .all(|e| e.len() <= c.len() || !c.is_subset_of(e));
        if is_maximal_edge {
            ControlFlow::Continue(())
        } else {
            conformal = false;
            ControlFlow::Break(())
        }
    });
    conformal
}

/// Re-checks a violating triple independently of the search order.
pub fn triple_violates(h: &Hypergraph, triple: (usize, usize, usize)) -> bool {
    let (i, j, k) = triple;
    let (ei, ej, ek) = (h.edge(i), h.edge(j), h.edge(k));
    let probe = ei
        .intersection(ej)
        .union(&ei.intersection(ek))
        .union(&ej.intersection(ek));
    h.edges().iter().all(|e| !probe.is_subset_of(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graphs_equal, Graph};
    use crate::set::VertexSet;

    fn vs(ids: &[u32]) -> VertexSet {
        VertexSet::from_indices(ids)
    }

    fn c5_hypergraph() -> Hypergraph {
        Hypergraph::build(
            5,
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]],
        )
        .unwrap()
    }

    fn c5_dual() -> Hypergraph {
        crate::dualize::dual(&c5_hypergraph()).unwrap()
    }

    fn k3_hypergraph() -> Hypergraph {
        Hypergraph::build(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    #[test]
    fn co_occurrence_of_two_uniform_is_the_graph_itself() {
        let g = co_occurrence(&c5_hypergraph());
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(graphs_equal(&g, &c5));
    }

    #[test]
    fn co_occurrence_of_c5_dual_is_complete() {
        let g = co_occurrence(&c5_dual());
        assert!(graphs_equal(&g, &Graph::complete(5)));
    }

    #[test]
    fn co_occurrence_of_mixed_dual_is_tripartite() {
        let dual = Hypergraph::build(
            6,
            &[
                vec![0, 1, 5],
                vec![0, 2, 4],
                vec![1, 2, 3],
                vec![3, 4],
                vec![3, 5],
                vec![4, 5],
            ],
        )
        .unwrap();
        let g = co_occurrence(&dual);
        let mut edges = Vec::new();
        for u in 0..6u32 {
            for v in u + 1..6 {
                if u % 3 != v % 3 {
                    edges.push((u, v));
                }
            }
        }
        let k222 = Graph::from_edges(6, &edges).unwrap();
        assert!(graphs_equal(&g, &k222));
    }

    #[test]
    fn c5_is_conformal_but_its_dual_is_not() {
        let (yes, w) = is_conformal(&c5_hypergraph());
        assert!(yes);
        assert!(w.is_none());

        let (yes, w) = is_conformal(&c5_dual());
        assert!(!yes);
        assert!(triple_violates(&c5_dual(), w.unwrap()));
    }

    #[test]
    fn triangle_hypergraph_witness() {
        let h = k3_hypergraph();
        let (yes, w) = is_conformal(&h);
        assert!(!yes);
        let (i, j, k) = w.unwrap();
        assert_eq!((i, j, k), (0, 1, 2));
        let probe = h
            .edge(i)
            .intersection(h.edge(j))
            .union(&h.edge(i).intersection(h.edge(k)))
            .union(&h.edge(j).intersection(h.edge(k)));
        assert_eq!(probe, vs(&[0, 1, 2]));
    }

    #[test]
    fn clique_route_examples() {
        assert!(!conformal_via_cliques(&k3_hypergraph()));
        let ex33_dual =
            Hypergraph::build(6, &[vec![0, 1, 5], vec![0, 2, 4], vec![1, 2, 3]]).unwrap();
        assert!(!conformal_via_cliques(&ex33_dual));
        let single = Hypergraph::build(3, &[vec![0, 1, 2]]).unwrap();
        assert!(conformal_via_cliques(&single));
        assert!(is_conformal(&single).0);
    }

    #[test]
    fn hyperedges_are_cliques_in_co_occurrence() {
        for h in [c5_hypergraph(), c5_dual(), k3_hypergraph()] {
            let g = co_occurrence(&h);
            for e in h.edges() {
                assert!(g.is_clique(e));
            }
        }
    }
}

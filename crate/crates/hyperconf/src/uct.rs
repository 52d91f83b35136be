//! Deciding whether a graph has a minimal clique transversal of size at
//! least `k`, via dual conformality of the hypergraph of small minimal
//! clique transversals. Includes a brute-force oracle for the upper clique
//! transversal number and a family of non-conformal hypergraphs with
//! prescribed dual dimension.

use crate::dual_conformality::{dual_cooccurrence_with, restricted_phase, DecideOptions};
use crate::dualize::dual_with_guard;
use crate::error::{Error, Result};
use crate::graph::{graphs_equal, is_minimal_clique_transversal_bounded, maximal_cliques, Graph};
use crate::hypergraph::Hypergraph;
use crate::set::VertexSet;

/// Default vertex-count guard for [`tau_c_plus_oracle`].
pub const DEFAULT_TAU_GUARD: usize = 12;

/// Hypergraph of the minimal clique transversals of a graph below a size
/// bound. The vertex universe is all of `V(G)`, so vertices lying in no
/// small transversal leave the covering flag false.
#[derive(Debug, Clone)]
pub struct MctHypergraph {
    hypergraph: Hypergraph,
    size_bound: usize,
}

impl MctHypergraph {
    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.hypergraph
    }

    /// Exclusive upper bound on edge sizes.
    pub fn size_bound(&self) -> usize {
        self.size_bound
    }
}

fn each_subset_of_size(n: usize, size: usize, visit: &mut impl FnMut(&[u32])) {
    fn rec(
        n: usize,
        size: usize,
        start: u32,
        scratch: &mut Vec<u32>,
        visit: &mut impl FnMut(&[u32]),
    ) {
        if scratch.len() == size {
            visit(scratch);
            return;
        }
        let remaining = size - scratch.len();
        for v in start..=(n as u32).saturating_sub(remaining as u32) {
            scratch.push(v);
            rec(n, size, v + 1, scratch, visit);
            scratch.pop();
        }
    }
    if size <= n {
        rec(n, size, 0, &mut Vec::with_capacity(size), visit);
    }
}

/// Enumerates all minimal clique transversals of `g` with fewer than `k`
/// vertices, in increasing size then lexicographic order. `O(n^{2k-1})`.
/// Minimality filtering makes the edge set Sperner by construction.
pub fn small_mcts(g: &Graph, k: usize) -> MctHypergraph {
    let n = g.vertex_count();
    let mut edges: Vec<VertexSet> = Vec::new();
    for size in 1..k {
        if size > n {
            break;
        }
        each_subset_of_size(n, size, &mut |combo| {
            let x = VertexSet::from_indices(combo);
            if is_minimal_clique_transversal_bounded(g, &x, size).expect("probe within bounds") {
                edges.push(x);
            }
        });
    }
    let hypergraph =
        Hypergraph::from_sets(n, edges, false).expect("distinct nonempty transversal sets");
    MctHypergraph {
        hypergraph,
        size_bound: k,
    }
}

/// How a `k`-upper-clique-transversal decision was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UctPath {
    /// `k = 1`: any nonempty graph qualifies.
    TrivialSingleton,
    /// The dual co-occurrence graph of the small-transversal hypergraph
    /// differs from the input graph, so a large minimal transversal exists.
    CooccurrenceMismatch,
    /// Graphs matched and the small-transversal hypergraph is not dually
    /// conformal, so a large minimal transversal exists.
    NotDuallyConformal,
    /// Graphs matched and the hypergraph is dually conformal: every minimal
    /// clique transversal is small.
    DuallyConformal,
}

impl std::fmt::Display for UctPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            UctPath::TrivialSingleton => "trivial-singleton",
            UctPath::CooccurrenceMismatch => "cooccurrence-mismatch",
            UctPath::NotDuallyConformal => "not-dually-conformal",
            UctPath::DuallyConformal => "dually-conformal",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UctDecision {
    /// Does the graph have a minimal clique transversal of size ≥ k?
    pub answer: bool,
    pub path: UctPath,
}

/// Decides whether the upper clique transversal number of `g` is at least
/// `k`, in time polynomial for fixed `k`.
pub fn k_uct(g: &Graph, k: usize) -> Result<UctDecision> {
    k_uct_with(g, k, &DecideOptions::default())
}

pub fn k_uct_with(g: &Graph, k: usize, opts: &DecideOptions) -> Result<UctDecision> {
    if k == 0 {
        return Err(Error::InfeasibleParameters(
            "threshold k must be at least 1".into(),
        ));
    }
    if k == 1 {
        return Ok(UctDecision {
            answer: g.vertex_count() >= 1,
            path: UctPath::TrivialSingleton,
        });
    }
    let mct = small_mcts(g, k);
    let h = mct.as_hypergraph();
    let g_prime = dual_cooccurrence_with(h, opts);
    if !graphs_equal(g, &g_prime) {
        return Ok(UctDecision {
            answer: true,
            path: UctPath::CooccurrenceMismatch,
        });
    }
    // Every maximal clique of g meets every small minimal clique
    // transversal, so the restricted decider's promise holds.
    let refuted = restricted_phase(h, &g_prime).is_some();
    Ok(UctDecision {
        answer: refuted,
        path: if refuted {
            UctPath::NotDuallyConformal
        } else {
            UctPath::DuallyConformal
        },
    })
}

/// Brute-force upper clique transversal number: dualize the clique
/// hypergraph and take the largest edge. Exponential; guarded.
pub fn tau_c_plus_oracle(g: &Graph) -> Result<usize> {
    tau_c_plus_oracle_with_guard(g, DEFAULT_TAU_GUARD)
}

pub fn tau_c_plus_oracle_with_guard(g: &Graph, guard: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n > guard {
        return Err(Error::GuardExceeded {
            what: "clique transversal oracle vertex count",
            value: n,
            limit: guard,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let clique_hypergraph = Hypergraph::from_sets(n, maximal_cliques(g), false)
        .expect("maximal cliques are distinct and nonempty");
    let dual = dual_with_guard(&clique_hypergraph, n)?;
    Ok(dual.dimension())
}

/// `m = n(n-1)/2`; equivalently, the upper clique transversal number is 1.
pub fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let mut acc: usize = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul(n - i)?;
        acc /= i + 1;
    }
    Some(acc)
}

/// A `d`-uniform nonconformal hypergraph on `k + l·C(k, d-1)` vertices whose
/// dual has dimension `k + l - (d - 1)`: all `d`-subsets of a `k`-set, plus
/// `l` fresh-vertex extensions of every `(d-1)`-subset.
pub fn gurvich_makino(d: usize, k: usize, l: usize) -> Result<Hypergraph> {
    if d < 2 || k <= d || l < 1 {
        return Err(Error::InfeasibleParameters(format!(
            "need d >= 2, k > d, l >= 1; got d={d}, k={k}, l={l}"
        )));
    }
    let pendant_groups = binomial(k, d - 1)
        .ok_or_else(|| Error::InfeasibleParameters("binomial overflow".into()))?;
    let n = pendant_groups
        .checked_mul(l)
        .and_then(|x| x.checked_add(k))
        .ok_or_else(|| Error::InfeasibleParameters("vertex count overflow".into()))?;

    let mut edges: Vec<Vec<u32>> = Vec::new();
    each_subset_of_size(k, d, &mut |combo| edges.push(combo.to_vec()));
    let mut fresh = k as u32;
    each_subset_of_size(k, d - 1, &mut |combo| {
        for _ in 0..l {
            let mut e = combo.to_vec();
            e.push(fresh);
            fresh += 1;
            edges.push(e);
        }
    });
    debug_assert_eq!(fresh as usize, n);
    Hypergraph::build(n, &edges)
}

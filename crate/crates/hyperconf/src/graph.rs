//! Graphs, maximal-clique machinery, and clique-transversal checks for
//! bounded-size vertex sets.

use std::ops::ControlFlow;
use std::sync::OnceLock;

use crate::bits::{self, BitMatrix};
use crate::error::{Error, Result};
use crate::set::{VertexId, VertexSet};

/// Adjacency matrices are materialized on demand up to this vertex count.
const MATRIX_LIMIT: usize = 1 << 13;

/// Largest supported size of the probe set in the bounded clique-transversal
/// check (dominators are tracked in a 128-bit word).
const DOMINATOR_LIMIT: usize = 128;

/// An undirected simple graph with sorted adjacency lists.
#[derive(Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<VertexId>>,
    matrix: OnceLock<Option<BitMatrix>>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            adj: self.adj.clone(),
            matrix: OnceLock::new(),
        }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v as usize >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u as usize].push(VertexId(v));
            adj[v as usize].push(VertexId(u));
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            n,
            adj,
            matrix: OnceLock::new(),
        })
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            matrix: OnceLock::new(),
        }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| {
                (0..n as u32)
                    .filter(|&v| v as usize != u)
                    .map(VertexId)
                    .collect()
            })
            .collect();
        Graph {
            n,
            adj,
            matrix: OnceLock::new(),
        }
    }

    pub(crate) fn from_neighbor_lists(adj: Vec<Vec<VertexId>>) -> Graph {
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph {
            n: adj.len(),
            adj,
            matrix: OnceLock::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    /// Edge list with each edge reported once, smaller endpoint first.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v.index() {
                    out.push((VertexId(u as u32), v));
                }
            }
        }
        out
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        if u == v {
            return false;
        }
        if let Some(m) = self.adjacency_matrix() {
            return m.get(u.index(), v.index());
        }
        self.adj[u.index()].binary_search(&v).is_ok()
    }

    fn adjacency_matrix(&self) -> Option<&BitMatrix> {
        self.matrix
            .get_or_init(|| {
                if self.n > MATRIX_LIMIT {
                    return None;
                }
                let mut m = BitMatrix::new(self.n, self.n);
                for (u, list) in self.adj.iter().enumerate() {
                    for v in list {
                        m.set(u, v.index());
                    }
                }
                Some(m)
            })
            .as_ref()
    }

    /// Is `c` a clique (pairwise adjacent)?
    pub fn is_clique(&self, c: &VertexSet) -> bool {
        let m = c.as_slice();
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if !self.adjacent(m[i], m[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Adjacency lists compare equal.
pub fn graphs_equal(g1: &Graph, g2: &Graph) -> bool {
    g1.n == g2.n && g1.adj == g2.adj
}

fn neighbor_masks(g: &Graph) -> Vec<Vec<u64>> {
    let words = bits::words_for(g.vertex_count());
    g.adj
        .iter()
        .map(|list| {
            let mut mask = vec![0u64; words];
            for v in list {
                bits::set_bit(&mut mask, v.index());
            }
            mask
        })
        .collect()
}

/// Emits every maximal clique exactly once. The visitor may abort the
/// enumeration by returning `ControlFlow::Break`.
///
/// Pivoting depth-first search; candidate vertices are tried in ascending
/// order, so the output order is deterministic.
pub fn enumerate_maximal_cliques<F>(g: &Graph, mut visit: F)
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    if n == 0 {
        return;
    }
    let masks = neighbor_masks(g);
    let p = bits::full_mask(n);
    let x = vec![0u64; p.len()];
    let mut r = Vec::new();
    let _ = bron_kerbosch(&masks, &mut r, p, x, &mut visit);
}

fn bron_kerbosch<F>(
    masks: &[Vec<u64>],
    r: &mut Vec<u32>,
    mut p: Vec<u64>,
    mut x: Vec<u64>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&VertexSet) -> ControlFlow<()>,
{
    if bits::is_zero(&p) && bits::is_zero(&x) {
        let clique = VertexSet::from_unsorted(r.iter().map(|&v| VertexId(v)).collect());
        return visit(&clique);
    }
    // Pivot on the vertex of P ∪ X with the most candidates in P.
    let mut pivot = usize::MAX;
    let mut best = usize::MAX;
    for u in bits::ones(&p).chain(bits::ones(&x)) {
        let c = bits::and_count(&p, &masks[u]);
        if best == usize::MAX || c > best {
            best = c;
            pivot = u;
        }
    }
    let mut todo = p.clone();
    bits::and_not_into(&mut todo, &masks[pivot]);
    for v in bits::ones(&todo).collect::<Vec<_>>() {
        r.push(v as u32);
        let mut np = p.clone();
        bits::and_into(&mut np, &masks[v]);
        let mut nx = x.clone();
        bits::and_into(&mut nx, &masks[v]);
        bron_kerbosch(masks, r, np, nx, visit)?;
        r.pop();
        bits::clear_bit(&mut p, v);
        bits::set_bit(&mut x, v);
    }
    ControlFlow::Continue(())
}

/// All maximal cliques, sorted by size then lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    enumerate_maximal_cliques(g, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    });
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Pairwise adjacency plus no common neighbor outside the set.
pub fn is_maximal_clique(g: &Graph, c: &VertexSet) -> Result<bool> {
    if let Some(v) = c.max() {
        if v.index() >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v.0,
                n: g.vertex_count(),
            });
        }
    }
    if !g.is_clique(c) {
        return Ok(false);
    }
    for w in 0..g.vertex_count() as u32 {
        let w = VertexId(w);
        if !c.contains(w) && c.iter().all(|u| g.adjacent(u, w)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for a clique of size at most `|x|` in `g − x` that no vertex of
/// `x` dominates. Such a clique disproves that `x` is a clique transversal;
/// its absence proves it. Returns the first violator in ascending
/// depth-first order.
pub(crate) fn clique_transversal_violation(g: &Graph, x: &VertexSet) -> Option<VertexSet> {
    let n = g.vertex_count();
    let masks = neighbor_masks(g);
    // dominator bit i set <=> x[i] is adjacent to every clique vertex so far
    let dom_of: Vec<u128> = (0..n)
        .map(|u| {
            let mut d = 0u128;
            for (i, xv) in x.iter().enumerate() {
                if g.adjacent(VertexId(u as u32), xv) {
                    d |= 1 << i;
                }
            }
            d
        })
        .collect();
    let all_doms: u128 = if x.len() == 128 {
        !0
    } else {
        (1u128 << x.len()) - 1
    };
    let mut ground = bits::full_mask(n);
    for v in x.iter() {
        bits::clear_bit(&mut ground, v.index());
    }
    let mut clique = Vec::new();
    extend_violation(&masks, &dom_of, x.len(), &mut clique, ground, all_doms).map(|c| {
        VertexSet::from_sorted_unchecked(c.into_iter().map(|v| VertexId(v as u32)).collect())
    })
}

fn extend_violation(
    masks: &[Vec<u64>],
    dom_of: &[u128],
    limit: usize,
    clique: &mut Vec<usize>,
    mut candidates: Vec<u64>,
    doms: u128,
) -> Option<Vec<usize>> {
    while let Some(v) = bits::first_one(&candidates) {
        bits::clear_bit(&mut candidates, v);
        let nd = doms & dom_of[v];
        clique.push(v);
        if nd == 0 {
            return Some(clique.clone());
        }
        if clique.len() < limit {
            let mut next = candidates.clone();
            bits::and_into(&mut next, &masks[v]);
            if let Some(hit) = extend_violation(masks, dom_of, limit, clique, next, nd) {
                return Some(hit);
            }
        }
        clique.pop();
    }
    None
}

/// Does `x` meet every maximal clique of `g`?
///
/// Only cliques of size at most `|x|` need checking: a maximal clique
/// missed by `x` yields, via one non-neighbor per member of `x`, a small
/// clique no member dominates. The search is `O(n^{|x|})`; `bound` is an
/// explicit cap on `|x|` so callers state the cost they accept.
pub fn is_clique_transversal_bounded(g: &Graph, x: &VertexSet, bound: usize) -> Result<bool> {
    if x.len() > bound {
        return Err(Error::GuardExceeded {
            what: "clique transversal probe size",
            value: x.len(),
            limit: bound,
        });
    }
    if x.len() > DOMINATOR_LIMIT {
        return Err(Error::GuardExceeded {
            what: "clique transversal probe size",
            value: x.len(),
            limit: DOMINATOR_LIMIT,
        });
    }
    if let Some(v) = x.max() {
        if v.index() >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v.0,
                n: g.vertex_count(),
            });
        }
    }
    if x.is_empty() {
        // Every nonempty graph has a maximal clique, which the empty set
        // misses.
        return Ok(g.vertex_count() == 0);
    }
    Ok(clique_transversal_violation(g, x).is_none())
}

/// Clique transversal none of whose vertices can be dropped.
pub fn is_minimal_clique_transversal_bounded(
    g: &Graph,
    x: &VertexSet,
    bound: usize,
) -> Result<bool> {
    if !is_clique_transversal_bounded(g, x, bound)? {
        return Ok(false);
    }
    for v in x.iter() {
        if is_clique_transversal_bounded(g, &x.without(v), bound)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices adjacent to all other vertices.
pub fn universal_vertices(g: &Graph) -> VertexSet {
    let n = g.vertex_count();
    VertexSet::from_sorted_unchecked(
        (0..n as u32)
            .map(VertexId)
            .filter(|&v| g.degree(v) + 1 == n)
            .collect(),
    )
}

/// Greedily grows a clique to a maximal one, always adding the smallest
/// admissible vertex.
pub(crate) fn extend_to_maximal_clique(g: &Graph, c: &VertexSet) -> VertexSet {
    let mut clique = c.clone();
    'grow: loop {
        for u in 0..g.vertex_count() as u32 {
            let u = VertexId(u);
            if !clique.contains(u) && clique.iter().all(|w| g.adjacent(u, w)) {
                clique = clique.with(u);
                continue 'grow;
            }
        }
        return clique;
    }
}

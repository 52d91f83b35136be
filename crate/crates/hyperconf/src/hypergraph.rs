//! Hypergraph representation: explicit edge list, edge-vertex incidence
//! matrix, and a doubly linked representation of incident pairs.
//!
//! The incidence matrix answers `v ∈ e` in constant time. The incident-pair
//! records form one circular horizontal list per edge and one circular
//! vertical list per vertex, so the vertices of an edge can be listed in
//! `O(|e|)` and the edges at a vertex in `O(deg v)`. Construction is
//! `O(n·m)`.

use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::set::{VertexId, VertexSet};

/// One incident pair `(v, e)` with its four circular links.
#[derive(Debug, Clone)]
struct PairRecord {
    vertex: VertexId,
    edge: u32,
    h_prev: u32,
    h_next: u32,
    v_prev: u32,
    v_next: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypergraphStats {
    pub dimension: usize,
    pub max_degree: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
}

/// An immutable hypergraph over a dense vertex universe `0..n`.
///
/// Edges are stored sorted and duplicate-free. Once built, a hypergraph is
/// never mutated, so shared read-only use from multiple threads is safe.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    incidence: BitMatrix,
    pairs: Vec<PairRecord>,
    edge_head: Vec<Option<u32>>,
    vertex_head: Vec<Option<u32>>,
    degrees: Vec<u32>,
    covering: bool,
}

impl Hypergraph {
    /// Builds a hypergraph from raw 0-based vertex lists, one per edge.
    ///
    /// Rejects out-of-range ids, repeated vertices within an edge, repeated
    /// edges, and empty edges. Use [`Hypergraph::build_with_empty_edges`]
    /// when the degenerate empty edge has to be representable.
    pub fn build(n: usize, raw_edges: &[Vec<u32>]) -> Result<Hypergraph> {
        Self::build_inner(n, raw_edges, false)
    }

    /// Like [`Hypergraph::build`], but admits empty edges. A hypergraph
    /// containing the empty edge has no transversals; its dual has no edges.
    pub fn build_with_empty_edges(n: usize, raw_edges: &[Vec<u32>]) -> Result<Hypergraph> {
        Self::build_inner(n, raw_edges, true)
    }

    fn build_inner(n: usize, raw_edges: &[Vec<u32>], allow_empty: bool) -> Result<Hypergraph> {
        let mut edges = Vec::with_capacity(raw_edges.len());
        for (idx, raw) in raw_edges.iter().enumerate() {
            let mut members = Vec::with_capacity(raw.len());
            for &id in raw {
                if id as usize >= n {
                    return Err(Error::VertexOutOfRange { vertex: id, n });
                }
                members.push(VertexId(id));
            }
            members.sort_unstable();
            if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateVertexInEdge {
                    edge: idx,
                    vertex: w[0].0,
                });
            }
            edges.push(VertexSet::from_sorted_unchecked(members));
        }
        Self::from_sets(n, edges, allow_empty)
    }

    /// Assembles the three representations from already-canonical edge sets.
    pub(crate) fn from_sets(
        n: usize,
        edges: Vec<VertexSet>,
        allow_empty: bool,
    ) -> Result<Hypergraph> {
        for (idx, e) in edges.iter().enumerate() {
            if e.is_empty() && !allow_empty {
                return Err(Error::EmptyEdge { edge: idx });
            }
            if let Some(v) = e.max() {
                if v.index() >= n {
                    return Err(Error::VertexOutOfRange { vertex: v.0, n });
                }
            }
        }
        // Duplicate edges are rejected: the edge list is a set.
        let mut order: Vec<usize> = (0..edges.len()).collect();
        order.sort_by(|&a, &b| edges[a].cmp(&edges[b]));
        for w in order.windows(2) {
            if edges[w[0]] == edges[w[1]] {
                return Err(Error::DuplicateEdge {
                    first: w[0].min(w[1]),
                    second: w[0].max(w[1]),
                });
            }
        }

        let m = edges.len();
        let mut incidence = BitMatrix::new(m, n);
        let mut pairs: Vec<PairRecord> = Vec::with_capacity(edges.iter().map(VertexSet::len).sum());
        let mut edge_head: Vec<Option<u32>> = vec![None; m];
        let mut vertex_head: Vec<Option<u32>> = vec![None; n];
        let mut degrees = vec![0u32; n];

        for (e, edge) in edges.iter().enumerate() {
            for v in edge.iter() {
                incidence.set(e, v.index());
                let rec = pairs.len() as u32;
                pairs.push(PairRecord {
                    vertex: v,
                    edge: e as u32,
                    h_prev: rec,
                    h_next: rec,
                    v_prev: rec,
                    v_next: rec,
                });
                link(&mut pairs, &mut edge_head[e], rec, Axis::Horizontal);
                link(&mut pairs, &mut vertex_head[v.index()], rec, Axis::Vertical);
                degrees[v.index()] += 1;
            }
        }

        let covering = degrees.iter().all(|&d| d > 0);
        Ok(Hypergraph {
            n,
            edges,
            incidence,
            pairs,
            edge_head,
            vertex_head,
            degrees,
            covering,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &VertexSet {
        &self.edges[e]
    }

    /// Constant-time incidence test via the matrix.
    pub fn incident(&self, v: VertexId, e: usize) -> Result<bool> {
        if v.index() >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v.0,
                n: self.n,
            });
        }
        if e >= self.edges.len() {
            return Err(Error::EdgeOutOfRange {
                edge: e,
                m: self.edges.len(),
            });
        }
        Ok(self.incidence.get(e, v.index()))
    }

    /// Bit row of edge `e` over the vertex universe.
    pub(crate) fn edge_mask(&self, e: usize) -> &[u64] {
        self.incidence.row(e)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.degrees[v.index()] as usize
    }

    /// Maximum edge size; 0 for an edgeless hypergraph.
    pub fn dimension(&self) -> usize {
        self.edges.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Maximum vertex degree; 0 when there are no incidences.
    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn stats(&self) -> HypergraphStats {
        HypergraphStats {
            dimension: self.dimension(),
            max_degree: self.max_degree(),
            vertex_count: self.n,
            edge_count: self.edges.len(),
        }
    }

    /// True when every vertex of the universe lies in some edge. Derived
    /// hypergraphs (e.g. the small-transversal hypergraph of a graph) may
    /// legitimately carry `false`; no decision procedure reads this flag.
    pub fn is_covering(&self) -> bool {
        self.covering
    }

    pub fn is_sperner(&self) -> bool {
        let m = self.edges.len();
        for i in 0..m {
            for j in 0..m {
                if i != j && self.edges[i].is_subset_of(&self.edges[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// All edges have size exactly two (vacuously true when edgeless).
    pub fn is_two_uniform(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// Keeps only the inclusion-minimal edges, preserving their relative
    /// order. The dual is unchanged by this operation.
    pub fn sperner_reduce(&self) -> Hypergraph {
        let m = self.edges.len();
        let mut keep = Vec::with_capacity(m);
        'outer: for i in 0..m {
            for j in 0..m {
                if i != j
                    && self.edges[j].is_subset_of(&self.edges[i])
                    && self.edges[j].len() < self.edges[i].len()
                {
                    continue 'outer;
                }
            }
            keep.push(self.edges[i].clone());
        }
        let allow_empty = keep.iter().any(VertexSet::is_empty);
        Hypergraph::from_sets(self.n, keep, allow_empty)
            .expect("minimal edges of a valid hypergraph are valid")
    }

    /// Walks the horizontal pair list of edge `e`, yielding its vertices in
    /// insertion order.
    pub fn edge_members_via_pairs(&self, e: usize) -> impl Iterator<Item = VertexId> + '_ {
        PairWalk::new(&self.pairs, self.edge_head[e], Axis::Horizontal).map(|r| r.vertex)
    }

    /// Walks the vertical pair list of vertex `v`, yielding the containing
    /// edges in input order.
    pub fn edges_containing(&self, v: VertexId) -> impl Iterator<Item = usize> + '_ {
        PairWalk::new(&self.pairs, self.vertex_head[v.index()], Axis::Vertical)
            .map(|r| r.edge as usize)
    }

    /// Edge list sorted by size, then lexicographically. Two hypergraphs are
    /// equal as set systems iff their canonical edge lists agree.
    pub fn canonical_edges(&self) -> Vec<VertexSet> {
        let mut edges = self.edges.clone();
        edges.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        edges
    }
}

#[derive(Clone, Copy)]
enum Axis {
    Horizontal,
    Vertical,
}

fn link(pairs: &mut [PairRecord], head: &mut Option<u32>, rec: u32, axis: Axis) {
    match *head {
        None => *head = Some(rec),
        Some(h) => {
            let (hu, ru) = (h as usize, rec as usize);
            match axis {
                Axis::Horizontal => {
                    let tail = pairs[hu].h_prev;
                    pairs[ru].h_prev = tail;
                    pairs[ru].h_next = h;
                    pairs[tail as usize].h_next = rec;
                    pairs[hu].h_prev = rec;
                }
                Axis::Vertical => {
                    let tail = pairs[hu].v_prev;
                    pairs[ru].v_prev = tail;
                    pairs[ru].v_next = h;
                    pairs[tail as usize].v_next = rec;
                    pairs[hu].v_prev = rec;
                }
            }
        }
    }
}

struct PairWalk<'a> {
    pairs: &'a [PairRecord],
    head: u32,
    next: Option<u32>,
    axis: Axis,
}

impl<'a> PairWalk<'a> {
    fn new(pairs: &'a [PairRecord], head: Option<u32>, axis: Axis) -> Self {
        PairWalk {
            pairs,
            head: head.unwrap_or(0),
            next: head,
            axis,
        }
    }
}

impl<'a> Iterator for PairWalk<'a> {
    type Item = &'a PairRecord;

    fn next(&mut self) -> Option<Self::Item> {
        let cur = self.next?;
        let rec = &self.pairs[cur as usize];
        let succ = match self.axis {
            Axis::Horizontal => rec.h_next,
            Axis::Vertical => rec.v_next,
        };
        self.next = if succ == self.head { None } else { Some(succ) };
        Some(rec)
    }
}

//! Vertex identifiers and the ordered vertex set used throughout the crate.

use std::cmp::Ordering;
use std::fmt;

/// Dense 0-based index of a vertex within its owning hypergraph or graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A strictly increasing sequence of vertex ids.
///
/// This is the unit of every transversal and clique computation. All binary
/// operations run in `O(|a| + |b|)` by merging; membership is a binary
/// search.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet::default()
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet { members: vec![v] }
    }

    /// Builds a set from arbitrary input, sorting and removing duplicates.
    pub fn from_unsorted(mut members: Vec<VertexId>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    /// Convenience constructor from raw indices.
    pub fn from_indices(ids: &[u32]) -> Self {
        Self::from_unsorted(ids.iter().map(|&i| VertexId(i)).collect())
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<VertexId>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn max(&self) -> Option<VertexId> {
        self.members.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.members, &other.members);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet { members: out }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.members, &other.members);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexSet { members: out }
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.members, &other.members);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        VertexSet { members: out }
    }

    /// Subset test; short-circuits on the first witness against inclusion.
    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        let (a, b) = (&self.members, &other.members);
        if a.len() > b.len() {
            return false;
        }
        let mut j = 0;
        for &x in a {
            loop {
                if j == b.len() {
                    return false;
                }
                match b[j].cmp(&x) {
                    Ordering::Less => j += 1,
                    Ordering::Equal => {
                        j += 1;
                        break;
                    }
                    Ordering::Greater => return false,
                }
            }
        }
        true
    }

    /// Copy of the set with `v` inserted.
    pub fn with(&self, v: VertexId) -> VertexSet {
        if self.contains(v) {
            return self.clone();
        }
        let mut members = self.members.clone();
        let pos = members.partition_point(|&x| x < v);
        members.insert(pos, v);
        VertexSet { members }
    }

    /// Copy of the set with `v` removed.
    pub fn without(&self, v: VertexId) -> VertexSet {
        let mut members = self.members.clone();
        if let Ok(pos) = members.binary_search(&v) {
            members.remove(pos);
        }
        VertexSet { members }
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, VertexId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter().copied()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v.0)?;
        }
        write!(f, "}}")
    }
}

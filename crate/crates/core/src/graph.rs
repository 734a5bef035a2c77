//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.
//!
//! Vertices are `0..n`. Graphs are immutable: every mutation returns a new
//! graph.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use crate::error::{Error, Result};

/// Largest order representable with `u64` neighbor sets.
pub const MAX_ORDER: usize = 64;

/// A set of vertex indices below 64.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ORDER);
        VertexSet(1 << v)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_ORDER && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

/// Complement within all 64 slots; intersect with [`VertexSet::full`] to
/// restrict to a graph.
impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) are collapsed.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::TooLarge {
                what: "graph",
                order: n,
                limit: MAX_ORDER,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from raw neighbor sets, validating symmetry and
    /// loop-freeness.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Graph> {
        let n = adj.len();
        let g = Graph::empty(n)?;
        let full = VertexSet::full(n);
        for (v, &nb) in adj.iter().enumerate() {
            if let Some(w) = (nb - full).min() {
                return Err(Error::IndexOutOfRange { vertex: w, order: n });
            }
            if nb.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            for w in nb {
                if !adj[w].contains(v) {
                    return Err(Error::NoSuchEdge(w, v));
                }
            }
        }
        Ok(Graph { adj, ..g })
    }

    /// Graph whose edges are the set bits of `mask`, bit `i` standing for
    /// the `i`-th vertex pair in graph6 order `(0,1), (0,2), (1,2), (0,3),
    /// ...`. Needs `n <= 11` so that all pairs fit in 64 bits.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Graph> {
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs > 64 {
            return Err(Error::TooLarge {
                what: "pair mask",
                order: n,
                limit: 11,
            });
        }
        if pairs < 64 && mask >> pairs != 0 {
            return Err(Error::PreconditionViolated(format!(
                "mask has bits beyond the {pairs} pairs of order {n}"
            )));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> bit & 1 == 1 {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
                bit += 1;
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    /// Open neighborhood. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v]`. Panics if `v` is out of range.
    #[inline]
    pub fn closed(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// `N[S]`, the union of closed neighborhoods of the members of `s`.
    #[inline]
    pub fn closed_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    #[inline]
    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|s| s.len()).collect()
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed(v))
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in the same order as
    /// [`Graph::edges`].
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let full = self.vertices();
        (0..self.n).flat_map(move |u| {
            (full - self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Removes `v` and its edges; the surviving vertices keep their relative
    /// order, so vertex `w > v` becomes `w - 1`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.delete_vertex_unchecked(v))
    }

    pub(crate) fn delete_vertex_unchecked(&self, v: usize) -> Graph {
        let low = VertexSet::full(v);
        let adj = (0..self.n)
            .filter(|&w| w != v)
            .map(|w| {
                let b = self.adj[w].bits();
                VertexSet::from_bits((b & low.bits()) | ((b >> 1) & !low.bits()))
            })
            .collect();
        Graph { n: self.n - 1, adj }
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::NoSuchEdge(u, v));
        }
        Ok(self.delete_edge_unchecked(u, v))
    }

    pub(crate) fn delete_edge_unchecked(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u, v));
        }
        Ok(self.add_edge_unchecked(u, v))
    }

    pub(crate) fn add_edge_unchecked(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        g
    }

    /// The subgraph induced by `keep`, re-indexed in ascending order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let index: Vec<usize> = keep.iter().collect();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in index.iter().enumerate() {
            pos[v] = i;
        }
        let adj = index
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|w| pos[w]).collect())
            .collect();
        Graph {
            n: index.len(),
            adj,
        }
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            self.check_vertex(p)?;
            if seen.contains(p) {
                return Err(Error::PreconditionViolated(format!(
                    "relabeling maps two vertices to {p}"
                )));
            }
            seen.insert(p);
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Graph { n: self.n, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| (full - self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut unseen = self.vertices();
        while let Some(start) = unseen.min() {
            let comp = self.component_of(start, unseen);
            unseen = unseen - comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    fn component_of(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.adj[v];
            }
            frontier = (next & within) - comp;
            comp = comp | frontier;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Vertices whose removal increases the number of connected components.
    pub fn cut_vertices(&self) -> VertexSet {
        let base = self.component_count();
        (0..self.n)
            .filter(|&v| self.delete_vertex_unchecked(v).component_count() > base)
            .collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn construction() {
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let e4 = Graph::new(4, []).unwrap();
        assert_eq!(e4.degrees(), vec![0; 4]);
        let c5 = cycle(5);
        assert_eq!(c5.degrees(), vec![2; 5]);
        // duplicates in either orientation collapse
        let g = Graph::new(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::IndexOutOfRange { vertex: 2, order: 2 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(Graph::empty(65), Err(Error::TooLarge { .. })));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn degree_and_neighborhoods() {
        assert_eq!(complete(4).degree(0), Ok(3));
        assert_eq!(cycle(5).degree(2), Ok(2));
        assert!(cycle(5).degree(5).is_err());
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.closed_neighborhood(1).unwrap().to_vec(), vec![1]);
        assert_eq!(complete(3).closed_neighborhood(0).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(e3.closed_neighborhood(3).is_err());
    }

    #[test]
    fn delete_vertex_cases() {
        let k2 = complete(2);
        assert_eq!(k2.delete_vertex(0).unwrap(), Graph::empty(1).unwrap());
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        // vertices 1..4 shift down to 0..3, path 1-2-3-4 becomes 0-1-2-3
        assert_eq!(cycle(5).delete_vertex(0).unwrap(), p4);
        assert!(k2.delete_vertex(2).is_err());
        // removing a middle vertex keeps the higher vertices' edges
        let g = Graph::new(5, [(0, 4), (3, 4), (1, 2)]).unwrap();
        let h = g.delete_vertex(2).unwrap();
        assert_eq!(h, Graph::new(4, [(0, 3), (2, 3)]).unwrap());
    }

    #[test]
    fn edge_mutation() {
        let k2 = complete(2);
        assert_eq!(k2.delete_edge(0, 1).unwrap(), Graph::empty(2).unwrap());
        assert_eq!(k2.delete_edge(1, 0).unwrap(), Graph::empty(2).unwrap());
        let e2 = Graph::empty(2).unwrap();
        assert_eq!(e2.delete_edge(0, 1), Err(Error::NoSuchEdge(0, 1)));
        assert_eq!(e2.add_edge(0, 1).unwrap(), k2);
        assert_eq!(k2.add_edge(0, 1), Err(Error::EdgeExists(0, 1)));
        assert_eq!(k2.add_edge(1, 1), Err(Error::SelfLoop(1)));

        let c5 = cycle(5);
        let p = c5.delete_edge(0, 1).unwrap();
        assert_eq!(p, Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 0)]).unwrap());
        let mut d = complete(4).delete_edge(0, 1).unwrap().degrees();
        d.sort();
        assert_eq!(d, vec![2, 2, 3, 3]);

        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.add_edge(0, 3).unwrap(), cycle(4));
        assert_eq!(c5.add_edge(0, 2).unwrap().degrees(), vec![3, 2, 3, 2, 2]);
    }

    #[test]
    fn components() {
        let e3 = Graph::empty(3).unwrap();
        let comps: Vec<_> = e3.connected_components().iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(cycle(5).connected_components().len(), 1);
        let g3 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let comps: Vec<_> = g3.connected_components().iter().map(|c| c.to_vec()).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3]]);
        assert!(Graph::empty(0).unwrap().connected_components().is_empty());
    }

    #[test]
    fn cut_vertex_cases() {
        assert!(cycle(5).cut_vertices().is_empty());
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.cut_vertices().to_vec(), vec![1]);
        // an endpoint of an isolated edge is not a cut vertex
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert!(g.cut_vertices().is_empty());
    }

    #[test]
    fn edges_and_non_edges_partition_pairs() {
        let g = Graph::new(5, [(0, 1), (1, 3), (2, 4)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 3), (2, 4)]);
        assert_eq!(g.edges().count() + g.non_edges().count(), 10);
        assert!(g.non_edges().all(|(u, v)| u < v && !g.has_edge(u, v)));
    }

    #[test]
    fn induced_and_relabel() {
        let c5 = cycle(5);
        let h = c5.induced(VertexSet::from_iter([0, 1, 2]));
        assert_eq!(h, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        let r = c5.relabel(&[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(r, c5);
        assert!(c5.relabel(&[0, 0, 1, 2, 3]).is_err());
        assert_eq!(c5.complement().complement(), c5);
        assert_eq!(c5.complement(), Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap());
    }

    #[test]
    fn from_adjacency_validates() {
        let a = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(a).is_err());
        let a = vec![VertexSet::singleton(0)];
        assert_eq!(Graph::from_adjacency(a), Err(Error::SelfLoop(0)));
        let a = vec![VertexSet::singleton(1), VertexSet::singleton(0)];
        assert_eq!(Graph::from_adjacency(a).unwrap(), complete(2));
    }
}

//! Immutable simple graphs over dense vertex labels `0..n`, with bitmask
//! neighbor sets sized for exact search on small orders.

use std::fmt;

use thiserror::Error;

/// Largest order we represent. Matches the short-form graph6 limit and keeps
/// every vertex set inside one `u64`.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: usize, got: usize },
    #[error("order {got} exceeds the supported maximum {max}", max = MAX_ORDER)]
    OrderTooLarge { got: usize },
    #[error("vertex {vertex} is out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("leaf clique size must be at least 1")]
    EmptyLeafClique,
    #[error("removing a perfect matching needs an even order, got {got}")]
    OddOrder { got: usize },
}

/// A subset of `0..62` vertices backed by a single bitmask.
///
/// Ordering and hashing follow the raw mask, which is only used for
/// deduplication; user-facing orderings are defined where they matter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1u64 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersection_size(self, other: Self) -> usize {
        (self.0 & other.0).count_ones() as usize
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> SetIter {
        SetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
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

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct SetIter(u64);

impl Iterator for SetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// An immutable simple graph. Adjacency is symmetric and loop-free by
/// construction; all constructors enforce it.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Edges may repeat;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::OrderTooSmall { min: 1, got: 0 });
        }
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { got: n });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// The path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderTooSmall { min: 3, got: n });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// `K_{s,t}` with parts `{0..s}` and `{s..s+t}`.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Self, GraphError> {
        if s == 0 || t == 0 {
            return Err(GraphError::OrderTooSmall { min: 1, got: 0 });
        }
        let mut edges = Vec::new();
        for u in 0..s {
            for v in s..s + t {
                edges.push((u, v));
            }
        }
        Graph::from_edges(s + t, &edges)
    }

    /// Corona with `K_l`: every original vertex gains its own fresh `l`-clique,
    /// joined completely to it. Original labels are preserved; the clique for
    /// vertex `v` occupies `n + v*l .. n + (v+1)*l`.
    pub fn corona(&self, l: usize) -> Result<Self, GraphError> {
        if l == 0 {
            return Err(GraphError::EmptyLeafClique);
        }
        let n = self.n;
        let total = n + n * l;
        if total > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { got: total });
        }
        let mut edges = Vec::new();
        for v in 0..n {
            for u in self.adj[v].iter() {
                if u > v {
                    edges.push((v, u));
                }
            }
            let base = n + v * l;
            for a in 0..l {
                edges.push((v, base + a));
                for b in a + 1..l {
                    edges.push((base + a, base + b));
                }
            }
        }
        Graph::from_edges(total, &edges)
    }

    /// `K_n` with the perfect matching `{0,1}, {2,3}, ...` removed.
    pub fn complete_minus_perfect_matching(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::OrderTooSmall { min: 2, got: 0 });
        }
        if n % 2 != 0 {
            return Err(GraphError::OddOrder { got: n });
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let matched = u % 2 == 0 && v == u + 1;
                if !matched {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// The triangular prism: two triangles `{0,1,2}`, `{3,4,5}` joined by the
    /// matching `0-3, 1-4, 2-5`. One of the two cubic graphs on six vertices.
    pub fn triangular_prism() -> Self {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .expect("fixed edge list is valid")
    }

    /// `K_{3,3}` with interleaved labels (parts `{0,4,5}` and `{1,2,3}`).
    /// The other cubic graph on six vertices.
    pub fn utility_graph() -> Self {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (2, 4),
                (3, 4),
                (1, 5),
                (5, 3),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .expect("fixed edge list is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Open neighborhood of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// The full vertex set as a bitmask.
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// `Some(d)` when every vertex has degree exactly `d`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        loop {
            let mut next = seen;
            for v in seen.iter() {
                next = next.union(self.adj[v]);
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        seen == self.vertex_set()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() == self.n - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        let mut first = true;
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    if !first {
                        write!(f, ", ")?;
                    }
                    write!(f, "{u}-{v}")?;
                    first = false;
                }
            }
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_degenerate_and_small() {
        let p1 = Graph::path(1).unwrap();
        assert_eq!(p1.n(), 1);
        assert_eq!(p1.edge_count(), 0);

        let p2 = Graph::path(2).unwrap();
        assert_eq!(p2.edge_count(), 1);
        assert!(p2.has_edge(0, 1));

        let p4 = Graph::path(4).unwrap();
        let degs: Vec<_> = p4.vertices().map(|v| p4.degree(v)).collect();
        assert_eq!(degs, vec![1, 2, 2, 1]);

        assert!(Graph::path(0).is_err());
    }

    #[test]
    fn family_degrees() {
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.vertices().all(|v| k4.degree(v) == 3));

        let k33 = Graph::complete_bipartite(3, 3).unwrap();
        assert_eq!(k33.regularity(), Some(3));
        assert_eq!(k33.edge_count(), 9);

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.regularity(), Some(2));
        assert_eq!(c5.edge_count(), 5);

        assert!(Graph::cycle(2).is_err());
    }

    #[test]
    fn corona_shape() {
        let g = Graph::path(4).unwrap().corona(1).unwrap();
        assert_eq!(g.n(), 8);
        let base = Graph::path(4).unwrap();
        for v in 0..4 {
            assert_eq!(g.degree(v), base.degree(v) + 1);
        }
        for v in 4..8 {
            assert_eq!(g.degree(v), 1);
        }

        // K_1 with a K_2 leaf clique is a triangle.
        let t = Graph::path(1).unwrap().corona(2).unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.regularity(), Some(2));

        assert!(Graph::path(3).unwrap().corona(0).is_err());
    }

    #[test]
    fn corona_counts() {
        for n in 1..=4 {
            for l in 1..=3 {
                let base = Graph::cycle(n.max(3)).unwrap();
                let g = base.corona(l).unwrap();
                let bn = base.n();
                assert_eq!(g.n(), bn * (l + 1));
                assert_eq!(
                    g.edge_count(),
                    base.edge_count() + bn * (l + l * (l - 1) / 2)
                );
            }
        }
    }

    #[test]
    fn matching_complement() {
        let c4 = Graph::complete_minus_perfect_matching(4).unwrap();
        assert_eq!(c4.regularity(), Some(2));
        assert_eq!(c4.edge_count(), 4);
        assert!(!c4.has_edge(0, 1));
        assert!(!c4.has_edge(2, 3));

        let g2 = Graph::complete_minus_perfect_matching(2).unwrap();
        assert_eq!(g2.edge_count(), 0);

        let g6 = Graph::complete_minus_perfect_matching(6).unwrap();
        assert_eq!(g6.regularity(), Some(4));
        assert_eq!(g6.edge_count(), 12);

        assert!(Graph::complete_minus_perfect_matching(5).is_err());
    }

    fn triangle_count(g: &Graph) -> usize {
        let mut t = 0;
        for u in g.vertices() {
            for v in g.neighbors(u).iter() {
                if v > u {
                    t += g
                        .neighbors(u)
                        .intersection(g.neighbors(v))
                        .iter()
                        .filter(|&w| w > v)
                        .count();
                }
            }
        }
        t
    }

    #[test]
    fn cubic_six_pair() {
        let a = Graph::triangular_prism();
        let b = Graph::utility_graph();
        assert_eq!(a.regularity(), Some(3));
        assert_eq!(b.regularity(), Some(3));
        assert_eq!(a.n(), 6);
        assert_eq!(b.n(), 6);

        // Distinguished by triangle count: the prism has two, K_{3,3} none.
        assert_eq!(triangle_count(&a), 2);
        assert_eq!(triangle_count(&b), 0);

        // b is bipartite with parts {0,4,5} / {1,2,3}.
        let left: VertexSet = [0usize, 4, 5].into_iter().collect();
        for u in b.vertices() {
            for v in b.neighbors(u).iter() {
                assert_ne!(left.contains(u), left.contains(v));
            }
        }
        // a is not: it contains the triangle 0-1-2.
        assert!(a.has_edge(0, 1) && a.has_edge(1, 2) && a.has_edge(2, 0));
    }

    #[test]
    fn symmetry_and_degree_sum() {
        let graphs = vec![
            Graph::path(6).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::complete_bipartite(2, 4).unwrap(),
            Graph::cycle(4).unwrap().corona(2).unwrap(),
            Graph::complete_minus_perfect_matching(8).unwrap(),
            Graph::triangular_prism(),
            Graph::utility_graph(),
        ];
        for g in graphs {
            let degsum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(degsum % 2, 0);
            assert_eq!(degsum, 2 * g.edge_count());
            for u in g.vertices() {
                assert!(!g.neighbors(u).contains(u));
                for v in g.neighbors(u).iter() {
                    assert!(g.neighbors(v).contains(u));
                }
            }
        }
    }

    #[test]
    fn connectivity_helpers() {
        assert!(Graph::path(5).unwrap().is_tree());
        assert!(!Graph::cycle(5).unwrap().is_tree());
        assert!(Graph::cycle(5).unwrap().is_connected());
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!disconnected.is_connected());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        ));
        assert!(Graph::from_edges(63, &[]).is_err());
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::EMPTY;
        assert!(s.is_empty());
        s.insert(3);
        s.insert(0);
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_vec(), vec![0, 3]);
        assert_eq!(s.min_vertex(), Some(0));
        assert!(s.contains(3));
        s.remove(0);
        assert_eq!(s.to_vec(), vec![3]);

        let a: VertexSet = [1usize, 2, 5].into_iter().collect();
        let b: VertexSet = [2usize, 3].into_iter().collect();
        assert_eq!(a.intersection_size(b), 1);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.difference(b).to_vec(), vec![1, 5]);
        assert!(!a.is_disjoint(b));
        assert!(a.intersection(b).is_subset_of(a));
        assert_eq!(format!("{a}"), "{1, 2, 5}");
        assert_eq!(VertexSet::full(3).to_vec(), vec![0, 1, 2]);
    }
}

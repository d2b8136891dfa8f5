//! Small simple graphs stored as per-vertex neighbor masks.
//!
//! Every graph has at most [`MAX_VERTICES`] vertices, so a neighborhood fits
//! in one `u32`. Values are `Copy` and never change after construction
//! unless mutated explicitly through [`Graph::add_edge`].

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices.
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph with {0} vertices exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set {mask:#x} is not contained in 0..{n}")]
    MaskOutOfRange { mask: u32, n: usize },
}

#[inline]
fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A subset of the vertices of some ambient graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const fn from_mask(mask: u32) -> Self {
        VertexSet(mask)
    }

    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn mask(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(u32);

impl Iterator for Bits {
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
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// A length that may be unbounded: girth of a forest, radius or diameter of
/// a disconnected graph.
///
/// `Infinite` compares greater than every finite value, so a minimum over
/// a mixture never picks it unless nothing finite is present.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<usize> {
        match self {
            Length::Finite(x) => Some(x),
            Length::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Length::Infinite
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(x) => write!(f, "{x}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

/// Summary of the structural quantities used throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metrics {
    pub girth: Length,
    pub radius: Length,
    pub diameter: Length,
    /// Vertex degrees sorted in descending order.
    pub degrees: Vec<usize>,
    pub components: usize,
    pub is_acyclic: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; use [`Graph::new`] for a
    /// fallible constructor.
    pub fn empty(n: usize) -> Self {
        Graph::new(n).expect("vertex count within cap")
    }

    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, checking every invariant.
    pub fn from_adjacency(rows: &[u32]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Graph::new(n)?;
        let allowed = low_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !allowed != 0 {
                return Err(GraphError::MaskOutOfRange { mask: row, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in VertexSet(g.adj[u]) {
                if g.adj[v] >> u & 1 == 0 {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: &[u32]) -> Self {
        let mut adj = [0; MAX_VERTICES];
        adj[..n].copy_from_slice(&rows[..n]);
        Graph { n, adj }
    }

    /// Path with `n` vertices, `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.link(v - 1, v);
        }
        g
    }

    /// Cycle with `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.link(0, n - 1);
        g
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.adj[v] = low_mask(n) & !(1 << v);
        }
        g
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.link(0, v);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        g.adj[..self.n].copy_from_slice(&self.adj[..self.n]);
        for v in 0..other.n {
            g.adj[self.n + v] = other.adj[v] << self.n;
        }
        Ok(g)
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.link(u, v);
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor masks of the `n` vertices.
    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n]
    }

    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adj[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Degrees in descending order.
    pub fn degree_list(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in increasing order of
    /// the original labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if !s.is_subset(self.vertices()) {
            return Err(GraphError::MaskOutOfRange {
                mask: s.mask(),
                n: self.n,
            });
        }
        Ok(self.induced(s.mask()))
    }

    /// Same as [`Graph::induced_subgraph`] for a mask already known to be
    /// in range.
    #[inline]
    pub fn induced(&self, mask: u32) -> Graph {
        let mut adj = [0u32; MAX_VERTICES];
        let mut k = 0;
        for v in VertexSet(mask) {
            adj[k] = compress(self.adj[v] & mask, mask);
            k += 1;
        }
        Graph { n: k, adj }
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced(low_mask(self.n) & !(1 << v))
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut adj = [0u32; MAX_VERTICES];
        for v in 0..self.n {
            let mut row = 0;
            for w in VertexSet(self.adj[v]) {
                row |= 1 << perm[w];
            }
            adj[perm[v]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Vertices within distance `k` of `v`.
    pub fn k_ball(&self, v: usize, k: usize) -> VertexSet {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        for _ in 0..k {
            let next = self.expand(frontier) & !seen;
            if next == 0 {
                break;
            }
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    #[inline]
    fn expand(&self, frontier: u32) -> u32 {
        let mut out = 0;
        for v in VertexSet(frontier) {
            out |= self.adj[v];
        }
        out
    }

    /// BFS layers from `v`: element `i` holds the vertices at distance `i`.
    pub fn layers(&self, v: usize) -> Vec<VertexSet> {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        let mut out = vec![VertexSet(frontier)];
        loop {
            let next = self.expand(frontier) & !seen;
            if next == 0 {
                return out;
            }
            out.push(VertexSet(next));
            seen |= next;
            frontier = next;
        }
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        self.k_ball(v, self.n)
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = low_mask(self.n);
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.component_of(v);
            rest &= !c.mask();
            out.push(c);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_of(0).len() == self.n
    }

    /// True when the graph has no cycle, i.e. edges = n - components.
    pub fn is_acyclic(&self) -> bool {
        self.edge_count() + self.component_count() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn eccentricity(&self, v: usize) -> Length {
        let mut seen = 1u32 << v;
        let mut frontier = seen;
        let mut depth = 0;
        loop {
            let next = self.expand(frontier) & !seen;
            if next == 0 {
                break;
            }
            seen |= next;
            frontier = next;
            depth += 1;
        }
        if seen == low_mask(self.n) {
            Length::Finite(depth)
        } else {
            Length::Infinite
        }
    }

    pub fn radius(&self) -> Length {
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .min()
            .unwrap_or(Length::Infinite)
    }

    pub fn diameter(&self) -> Length {
        if self.n == 0 {
            return Length::Infinite;
        }
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .max()
            .unwrap_or(Length::Infinite)
    }

    /// Vertices of minimum eccentricity (empty if disconnected).
    pub fn centers(&self) -> VertexSet {
        let ecc: Vec<Length> = (0..self.n).map(|v| self.eccentricity(v)).collect();
        match ecc.iter().min() {
            Some(&r @ Length::Finite(_)) => (0..self.n).filter(|&v| ecc[v] == r).collect(),
            _ => VertexSet::empty(),
        }
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Length {
        let mut best = usize::MAX;
        let mut dist = [usize::MAX; MAX_VERTICES];
        let mut parent = [usize::MAX; MAX_VERTICES];
        let mut queue = [0usize; MAX_VERTICES];
        for root in 0..self.n {
            dist[..self.n].fill(usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let (mut head, mut tail) = (0, 1);
            queue[0] = root;
            while head < tail {
                let u = queue[head];
                head += 1;
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in VertexSet(self.adj[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue[tail] = w;
                        tail += 1;
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Length::Infinite
        } else {
            Length::Finite(best)
        }
    }

    pub fn metrics(&self) -> Metrics {
        let components = self.component_count();
        Metrics {
            girth: self.girth(),
            radius: self.radius(),
            diameter: self.diameter(),
            degrees: self.degree_list(),
            components,
            is_acyclic: self.edge_count() + components == self.n,
        }
    }
}

/// Packs the bits of `x` selected by `mask` into the low bits (PEXT).
#[inline]
fn compress(x: u32, mask: u32) -> u32 {
    let mut out = 0;
    for (k, v) in VertexSet(mask).iter().enumerate() {
        out |= (x >> v & 1) << k;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::write_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn induced_subgraphs_of_c5() {
        let c5 = Graph::cycle(5);
        let p3 = c5.induced_subgraph(set(&[0, 1, 2])).unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        let k2k1 = c5.induced_subgraph(set(&[0, 1, 3])).unwrap();
        assert_eq!(k2k1.edges(), vec![(0, 1)]);
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap(), c5);
        assert!(matches!(
            c5.induced_subgraph(set(&[0, 7])),
            Err(GraphError::MaskOutOfRange { .. })
        ));
    }

    #[test]
    fn metrics_of_small_graphs() {
        let m = Graph::cycle(5).metrics();
        assert_eq!(m.girth, Length::Finite(5));
        assert_eq!(m.radius, Length::Finite(2));
        assert_eq!(m.diameter, Length::Finite(2));
        assert_eq!(m.degrees, vec![2; 5]);
        assert!(!m.is_acyclic);

        let m = Graph::path(7).metrics();
        assert!(m.is_acyclic);
        assert_eq!(m.girth, Length::Infinite);
        assert_eq!(m.radius, Length::Finite(3));
        assert_eq!(m.diameter, Length::Finite(6));

        let c4k1 = Graph::cycle(4).disjoint_union(&Graph::empty(1)).unwrap();
        let m = c4k1.metrics();
        assert_eq!(m.girth, Length::Finite(4));
        assert_eq!(m.radius, Length::Infinite);
        assert_eq!(m.diameter, Length::Infinite);
        assert_eq!(m.components, 2);
        assert!(!m.is_acyclic);
    }

    #[test]
    fn k_balls() {
        let p7 = Graph::path(7);
        assert_eq!(p7.k_ball(3, 2), set(&[1, 2, 3, 4, 5]));
        assert_eq!(p7.k_ball(5, 0), set(&[5]));
        assert_eq!(Graph::cycle(7).k_ball(0, 3), VertexSet::full(7));
    }

    #[test]
    fn girth_of_complete_and_petersen_like() {
        assert_eq!(Graph::complete(4).girth(), Length::Finite(3));
        assert_eq!(Graph::cycle(9).girth(), Length::Finite(9));
        // Petersen graph has girth 5.
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let pet = Graph::from_edges(10, &edges).unwrap();
        assert_eq!(pet.girth(), Length::Finite(5));
        assert_eq!(pet.diameter(), Length::Finite(2));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(33), Err(GraphError::TooManyVertices(33)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert!(Graph::from_adjacency(&[0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(&[0b10, 0b01]).is_ok());
    }

    #[test]
    fn thirty_two_vertices() {
        let c = Graph::cycle(32);
        assert_eq!(c.edge_count(), 32);
        assert_eq!(c.diameter(), Length::Finite(16));
        assert_eq!(c.girth(), Length::Finite(32));
    }
}

//! Bipartite graphs with an explicit bipartition `(X, Y)`.
//!
//! Vertices are indexed within their part. Algorithms that need a single index
//! space use the global id `index` for X-vertices and `x_count + index` for
//! Y-vertices.

mod bbg;
mod generators;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bbg::{parse_bbg, write_bbg};
pub use generators::{gen_builtin, gen_random_biregular, Builtin, DEFAULT_MAX_RETRIES};

/// An edge `(xi, yj)` in part-local coordinates.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Part {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub part: Part,
    pub index: usize,
}

impl Vertex {
    pub fn x(index: usize) -> Self {
        Vertex { part: Part::X, index }
    }

    pub fn y(index: usize) -> Self {
        Vertex { part: Part::Y, index }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.part {
            Part::X => write!(f, "x{}", self.index),
            Part::Y => write!(f, "y{}", self.index),
        }
    }
}

/// Which side(s) of the bipartition a [`VertexSet`] was built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SetPart {
    X,
    Y,
    Mixed,
}

/// A set of vertices tagged with the part it is meant to live in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSet {
    part: SetPart,
    members: BTreeSet<Vertex>,
}

impl VertexSet {
    pub fn empty(part: SetPart) -> Self {
        VertexSet {
            part,
            members: BTreeSet::new(),
        }
    }

    pub fn from_x<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VertexSet {
            part: SetPart::X,
            members: indices.into_iter().map(Vertex::x).collect(),
        }
    }

    pub fn from_y<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        VertexSet {
            part: SetPart::Y,
            members: indices.into_iter().map(Vertex::y).collect(),
        }
    }

    pub fn mixed<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        VertexSet {
            part: SetPart::Mixed,
            members: vertices.into_iter().collect(),
        }
    }

    pub fn part(&self) -> SetPart {
        self.part
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    /// True iff every member lies in `part`.
    pub fn within(&self, part: Part) -> bool {
        self.members.iter().all(|v| v.part == part)
    }
}

/// Degrees `(a, b)` of an `(a,b)`-biregular bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiregularProfile {
    pub a: usize,
    pub b: usize,
}

/// A simple bipartite graph with parts `X = {x0..}` and `Y = {y0..}`.
///
/// Immutable after construction. Edges are kept sorted lexicographically, so
/// two graphs compare equal iff they have the same parts and edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    x_count: usize,
    y_count: usize,
    edges: Vec<Edge>,
    x_adj: Vec<Vec<usize>>,
    y_adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(x_count: usize, y_count: usize, mut edges: Vec<Edge>) -> Result<Self> {
        if x_count == 0 || y_count == 0 {
            return Err(Error::InvalidParam(format!(
                "part sizes must be positive, got {x_count} and {y_count}"
            )));
        }
        for &(x, y) in &edges {
            if x >= x_count {
                return Err(Error::IndexOutOfRange {
                    vertex: Vertex::x(x),
                    size: x_count,
                });
            }
            if y >= y_count {
                return Err(Error::IndexOutOfRange {
                    vertex: Vertex::y(y),
                    size: y_count,
                });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                x: w[0].0,
                y: w[0].1,
            });
        }
        let mut x_adj = vec![Vec::new(); x_count];
        let mut y_adj = vec![Vec::new(); y_count];
        for &(x, y) in &edges {
            x_adj[x].push(y);
            y_adj[y].push(x);
        }
        for list in &mut y_adj {
            list.sort_unstable();
        }
        Ok(BipartiteGraph {
            x_count,
            y_count,
            edges,
            x_adj,
            y_adj,
        })
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn y_count(&self) -> usize {
        self.y_count
    }

    /// Total number of vertices `|X| + |Y|`.
    pub fn n(&self) -> usize {
        self.x_count + self.y_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically by `(xi, yj)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[usize] {
        match v.part {
            Part::X => &self.x_adj[v.index],
            Part::Y => &self.y_adj[v.index],
        }
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.x_adj
            .get(x)
            .is_some_and(|list| list.binary_search(&y).is_ok())
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        let (xc, yc) = (self.x_count, self.y_count);
        (0..xc).map(Vertex::x).chain((0..yc).map(Vertex::y))
    }

    pub fn global(&self, v: Vertex) -> usize {
        match v.part {
            Part::X => v.index,
            Part::Y => self.x_count + v.index,
        }
    }

    pub fn vertex(&self, id: usize) -> Vertex {
        if id < self.x_count {
            Vertex::x(id)
        } else {
            Vertex::y(id - self.x_count)
        }
    }

    /// Edges as pairs of global ids, in the same order as [`Self::edges`].
    pub fn global_edges(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(x, y)| (x, self.x_count + y))
            .collect()
    }

    /// Neighbor lists indexed by global id.
    pub fn global_adjacency(&self) -> Vec<Vec<usize>> {
        let xc = self.x_count;
        self.x_adj
            .iter()
            .map(|ys| ys.iter().map(|&y| xc + y).collect())
            .chain(self.y_adj.iter().cloned())
            .collect()
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        let size = match v.part {
            Part::X => self.x_count,
            Part::Y => self.y_count,
        };
        if v.index >= size {
            return Err(Error::IndexOutOfRange { vertex: v, size });
        }
        Ok(())
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        set.iter().try_for_each(|v| self.check_vertex(v))
    }

    /// Connected-component label for every global id, and the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let adj = self.global_adjacency();
        let n = adj.len();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 == 1
    }

    /// Subgraph with the given edges removed (same vertex set).
    pub fn without_edges(&self, removed: &[Edge]) -> BipartiteGraph {
        let removed: BTreeSet<Edge> = removed.iter().copied().collect();
        let kept = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        BipartiteGraph::new(self.x_count, self.y_count, kept).expect("subgraph of a valid graph")
    }
}

/// Checks that every X-vertex has the same degree `a` and every Y-vertex the
/// same degree `b`.
pub fn validate_biregular(g: &BipartiteGraph) -> Result<BiregularProfile> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let a = g.degree(Vertex::x(0));
    let b = g.degree(Vertex::y(0));
    for v in g.vertices() {
        let expected = match v.part {
            Part::X => a,
            Part::Y => b,
        };
        let actual = g.degree(v);
        if actual != expected {
            return Err(Error::NotBiregular {
                vertex: v,
                expected,
                actual,
            });
        }
    }
    debug_assert_eq!(a * g.x_count(), b * g.y_count());
    Ok(BiregularProfile { a, b })
}

/// Number of edges with exactly one endpoint in `set`.
pub fn cut_size(g: &BipartiteGraph, set: &VertexSet) -> Result<usize> {
    g.check_set(set)?;
    Ok(g
        .edges()
        .iter()
        .filter(|&&(x, y)| set.contains(Vertex::x(x)) != set.contains(Vertex::y(y)))
        .count())
}

/// `e(A, B)`: edges between `A ⊆ X` and `B ⊆ Y`.
pub fn cross_edges(g: &BipartiteGraph, a_set: &VertexSet, b_set: &VertexSet) -> Result<usize> {
    if !a_set.within(Part::X) || !b_set.within(Part::Y) {
        return Err(Error::PartMismatch);
    }
    g.check_set(a_set)?;
    g.check_set(b_set)?;
    let (small, large, small_is_x) = if a_set.len() <= b_set.len() {
        (a_set, b_set, true)
    } else {
        (b_set, a_set, false)
    };
    Ok(small
        .iter()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| {
                    let other = if small_is_x { Vertex::y(w) } else { Vertex::x(w) };
                    large.contains(other)
                })
                .count()
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k23() -> BipartiteGraph {
        gen_builtin(Builtin::CompleteBipartite(2, 3)).unwrap()
    }

    fn c6() -> BipartiteGraph {
        gen_builtin(Builtin::EvenCycle(6)).unwrap()
    }

    #[test]
    fn biregular_profiles() {
        assert_eq!(validate_biregular(&k23()).unwrap(), BiregularProfile { a: 3, b: 2 });
        assert_eq!(validate_biregular(&c6()).unwrap(), BiregularProfile { a: 2, b: 2 });
    }

    #[test]
    fn deleted_edge_is_not_biregular() {
        let g = k23().without_edges(&[(0, 0)]);
        assert!(matches!(
            validate_biregular(&g),
            Err(Error::NotBiregular { .. })
        ));
    }

    #[test]
    fn empty_graph_rejected() {
        let g = BipartiteGraph::new(2, 2, vec![]).unwrap();
        assert_eq!(validate_biregular(&g), Err(Error::EmptyGraph));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            BipartiteGraph::new(2, 2, vec![(0, 0), (0, 0)]),
            Err(Error::DuplicateEdge { x: 0, y: 0 })
        ));
        assert!(matches!(
            BipartiteGraph::new(2, 2, vec![(2, 0)]),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(BipartiteGraph::new(0, 2, vec![]).is_err());
    }

    #[test]
    fn cut_sizes() {
        let g = c6();
        assert_eq!(cut_size(&g, &VertexSet::from_x([0])).unwrap(), 2);
        let k33 = gen_builtin(Builtin::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(cut_size(&k33, &VertexSet::from_x(0..3)).unwrap(), 9);
        let pair = VertexSet::mixed([Vertex::x(0), Vertex::y(0)]);
        assert_eq!(cut_size(&k33, &pair).unwrap(), 4);
    }

    #[test]
    fn cross_edge_counts() {
        let k33 = gen_builtin(Builtin::CompleteBipartite(3, 3)).unwrap();
        let a = VertexSet::from_x([0]);
        assert_eq!(cross_edges(&k33, &a, &VertexSet::from_y([0])).unwrap(), 1);
        assert_eq!(cross_edges(&c6(), &a, &VertexSet::from_y(0..3)).unwrap(), 2);
        let empty = VertexSet::empty(SetPart::X);
        assert_eq!(cross_edges(&k33, &empty, &VertexSet::from_y(0..3)).unwrap(), 0);
    }

    #[test]
    fn cross_edges_rejects_wrong_part() {
        let k33 = gen_builtin(Builtin::CompleteBipartite(3, 3)).unwrap();
        let r = cross_edges(&k33, &VertexSet::from_y([0]), &VertexSet::from_y([1]));
        assert_eq!(r, Err(Error::PartMismatch));
    }

    #[test]
    fn global_ids_round_trip() {
        let g = k23();
        for v in g.vertices() {
            assert_eq!(g.vertex(g.global(v)), v);
        }
    }
}

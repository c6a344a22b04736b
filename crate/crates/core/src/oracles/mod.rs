//! Exact combinatorial verifiers.
//!
//! Every oracle returns an [`OracleResult`] whose witness can be re-checked
//! against the definition of the property independently of how it was found;
//! see the `validate_*` functions.

mod connectivity;
mod flow;
mod lemma31;
mod partition;
mod pebble;
mod rigidity;
mod rigidity_matrix;
mod trees;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::{BipartiteGraph, Edge, Vertex};

pub use connectivity::{edge_connectivity, vertex_connectivity, MAX_VERTEX_CONNECTIVITY_N};
pub use flow::FlowNetwork;
pub use lemma31::{
    lemma31_evaluate, lemma31_exhaustive, Lemma31Outcome, Lemma31Report, Lemma31Value,
    LEMMA31_MAX_N, LEMMA31_MAX_Z,
};
pub use partition::{for_each_partition, tau_partition_bruteforce, Partition, PARTITION_MAX_N};
pub use pebble::PebbleGame;
pub use rigidity::{
    greedy_rigid_packing, is_globally_rigid, is_redundantly_rigid, is_rigid, rigidity_rank,
    EXHAUSTIVE_PACKING_MAX_N,
};
pub use rigidity_matrix::{rigidity_matrix_rank, RIGIDITY_PRIME};
pub use trees::tau_exact;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleKind {
    EdgeConnectivity,
    VertexConnectivity,
    TreePacking,
    RigidityRank,
    RedundantRigidity,
    GlobalRigidity,
    RigidPacking,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum Witness {
    None,
    EdgeCut(Vec<Edge>),
    Separator(Vec<Vertex>),
    ForestPacking(Vec<Vec<Edge>>),
    LamanSubgraph(Vec<Edge>),
    LamanPacking(Vec<Vec<Edge>>),
    /// An edge whose removal leaves a non-rigid graph.
    CriticalEdge(Edge),
    PartitionWitness {
        z: Vec<Vertex>,
        blocks: Vec<Vec<Vertex>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub property: OracleKind,
    /// `κ′`, `κ`, `τ`, a rank, a packing size, or a boolean as 0/1.
    pub value: usize,
    pub witness: Witness,
    /// False only when a heuristic search failed without refuting the property.
    pub exact: bool,
}

impl OracleResult {
    pub(crate) fn exact(property: OracleKind, value: usize, witness: Witness) -> Self {
        OracleResult {
            property,
            value,
            witness,
            exact: true,
        }
    }

    pub fn holds(&self) -> bool {
        self.value != 0
    }
}

/// True iff removing `cut` disconnects `g`.
pub fn validate_edge_cut(g: &BipartiteGraph, cut: &[Edge]) -> bool {
    !g.without_edges(cut).is_connected()
}

/// True iff removing the vertices in `separator` leaves a disconnected graph
/// with at least two vertices.
pub fn validate_separator(g: &BipartiteGraph, separator: &[Vertex]) -> bool {
    let removed: BTreeSet<usize> = separator.iter().map(|&v| g.global(v)).collect();
    let adj = g.global_adjacency();
    let alive: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    if alive.len() < 2 {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] && !removed.contains(&w) {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().any(|&v| !seen[v])
}

/// True iff the forests are pairwise edge-disjoint spanning trees of `g`.
pub fn validate_forest_packing(g: &BipartiteGraph, forests: &[Vec<Edge>]) -> bool {
    let mut used = BTreeSet::new();
    for forest in forests {
        if forest.len() + 1 != g.n() {
            return false;
        }
        let mut dsu = Dsu::new(g.n());
        for &(x, y) in forest {
            if !g.has_edge(x, y) || !used.insert((x, y)) {
                return false;
            }
            if !dsu.union(x, g.x_count() + y) {
                return false;
            }
        }
    }
    true
}

/// True iff each subgraph has `2n − 3` edges of `g`, is independent in the
/// rigidity matroid, and no edge is shared.
pub fn validate_laman_packing(g: &BipartiteGraph, subgraphs: &[Vec<Edge>]) -> bool {
    let mut used = BTreeSet::new();
    let target = 2 * g.n() - 3;
    subgraphs.iter().all(|sub| {
        sub.len() == target
            && sub.iter().all(|&(x, y)| g.has_edge(x, y) && used.insert((x, y)))
            && {
                let mut game = PebbleGame::new(g.n());
                sub.iter()
                    .all(|&(x, y)| game.try_insert(x, g.x_count() + y))
            }
    })
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Merges the classes of `u` and `v`; false if they were already one.
    pub(crate) fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}

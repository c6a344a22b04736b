//! Spanning tree packing number via graphic-matroid union.
//!
//! Edges are inserted one at a time into `k` forests. An edge that closes a
//! cycle in every forest starts a breadth-first search over the exchange
//! graph: an edge `f` reaches edge `g` of forest `i` when `g` lies on the
//! cycle that `f` would close in forest `i`. The search ends at an edge that
//! fits into some forest without closing a cycle, and the shortest such path
//! is shifted one step along.

use std::collections::VecDeque;

use super::{OracleKind, OracleResult, Witness};
use crate::graph::{BipartiteGraph, Edge};

struct RootedForest {
    comp: Vec<usize>,
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
    depth: Vec<usize>,
}

impl RootedForest {
    fn build(n: usize, edges: &[(usize, usize)], members: impl Iterator<Item = usize>) -> Self {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for e in members {
            let (u, v) = edges[e];
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        let mut comp = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if comp[root] != usize::MAX {
                continue;
            }
            comp[root] = root;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &(w, e) in &adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = root;
                        parent[w] = u;
                        parent_edge[w] = e;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        RootedForest {
            comp,
            parent,
            parent_edge,
            depth,
        }
    }

    fn connected(&self, u: usize, v: usize) -> bool {
        self.comp[u] == self.comp[v]
    }

    /// Edge ids on the tree path between `u` and `v` (which must be connected).
    fn path(&self, mut u: usize, mut v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        while u != v {
            if self.depth[u] >= self.depth[v] {
                out.push(self.parent_edge[u]);
                u = self.parent[u];
            } else {
                out.push(self.parent_edge[v]);
                v = self.parent[v];
            }
        }
        out
    }
}

struct ForestUnion<'a> {
    n: usize,
    edges: &'a [(usize, usize)],
    forest_of: Vec<Option<usize>>,
    k: usize,
}

impl ForestUnion<'_> {
    fn size(&self) -> usize {
        self.forest_of.iter().filter(|f| f.is_some()).count()
    }

    fn augment(&mut self, start: usize) -> bool {
        let forests: Vec<RootedForest> = (0..self.k)
            .map(|i| {
                let members = (0..self.edges.len()).filter(|&e| self.forest_of[e] == Some(i));
                RootedForest::build(self.n, self.edges, members)
            })
            .collect();
        let mut label: Vec<Option<(usize, usize)>> = vec![None; self.edges.len()];
        let mut visited = vec![false; self.edges.len()];
        visited[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let (u, v) = self.edges[f];
            let own = self.forest_of[f];
            if let Some(i) = (0..self.k).find(|&i| own != Some(i) && !forests[i].connected(u, v)) {
                self.shift(start, f, i, &label);
                return true;
            }
            for (i, forest) in forests.iter().enumerate() {
                if own == Some(i) {
                    continue;
                }
                for g in forest.path(u, v) {
                    if !visited[g] {
                        visited[g] = true;
                        label[g] = Some((f, i));
                        queue.push_back(g);
                    }
                }
            }
        }
        false
    }

    fn shift(&mut self, start: usize, mut cur: usize, mut target: usize, label: &[Option<(usize, usize)>]) {
        loop {
            self.forest_of[cur] = Some(target);
            if cur == start {
                return;
            }
            let (prev, forest) = label[cur].expect("labelled edge on augmenting path");
            cur = prev;
            target = forest;
        }
    }

    fn forests(&self, g: &BipartiteGraph) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.k];
        for (e, f) in self.forest_of.iter().enumerate() {
            if let Some(i) = f {
                out[*i].push(g.edges()[e]);
            }
        }
        out
    }
}

/// `τ(g)`, searched up to `k_max`, with a witness packing of `τ` spanning trees.
pub fn tau_exact(g: &BipartiteGraph, k_max: usize) -> OracleResult {
    let kind = OracleKind::TreePacking;
    let n = g.n();
    if !g.is_connected() || n < 2 {
        return OracleResult::exact(kind, 0, Witness::ForestPacking(Vec::new()));
    }
    let edges = g.global_edges();
    let bound = k_max.min(edges.len() / (n - 1));
    let mut union = ForestUnion {
        n,
        edges: &edges,
        forest_of: vec![None; edges.len()],
        k: 0,
    };
    let mut best = Vec::new();
    for k in 1..=bound {
        union.k = k;
        for e in 0..edges.len() {
            if union.forest_of[e].is_none() {
                union.augment(e);
            }
        }
        if union.size() < k * (n - 1) {
            break;
        }
        best = union.forests(g);
    }
    OracleResult::exact(kind, best.len(), Witness::ForestPacking(best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_builtin, Builtin};
    use crate::oracles::validate_forest_packing;

    fn packing(r: &OracleResult) -> &[Vec<Edge>] {
        match &r.witness {
            Witness::ForestPacking(f) => f,
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn examples() {
        for (kind, want) in [
            (Builtin::CompleteBipartite(4, 4), 2),
            (Builtin::EvenCycle(6), 1),
            (Builtin::CompleteBipartite(3, 3), 1),
            (Builtin::CompleteBipartite(6, 6), 3),
            (Builtin::Heawood, 1),
        ] {
            let g = gen_builtin(kind).unwrap();
            let r = tau_exact(&g, 16);
            assert_eq!(r.value, want, "{kind:?}");
            assert_eq!(packing(&r).len(), want);
            assert!(validate_forest_packing(&g, packing(&r)));
        }
    }

    #[test]
    fn k_max_caps_search() {
        let g = gen_builtin(Builtin::CompleteBipartite(6, 6)).unwrap();
        assert_eq!(tau_exact(&g, 2).value, 2);
    }

    #[test]
    fn disconnected_is_zero() {
        let g = BipartiteGraph::new(2, 2, vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(tau_exact(&g, 4).value, 0);
    }
}

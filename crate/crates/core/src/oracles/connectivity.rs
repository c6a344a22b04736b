use super::flow::FlowNetwork;
use super::{OracleKind, OracleResult, Witness};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge, Vertex};

pub const MAX_VERTEX_CONNECTIVITY_N: usize = 512;

fn to_edge(g: &BipartiteGraph, u: usize, v: usize) -> Edge {
    let (x, y) = if u < v { (u, v) } else { (v, u) };
    (x, y - g.x_count())
}

/// `κ′(g)` as the minimum over `t` of the unit-capacity max flow from vertex 0.
pub fn edge_connectivity(g: &BipartiteGraph) -> OracleResult {
    let kind = OracleKind::EdgeConnectivity;
    if !g.is_connected() {
        return OracleResult::exact(kind, 0, Witness::EdgeCut(Vec::new()));
    }
    let n = g.n();
    let edges = g.global_edges();
    let mut best = u32::MAX;
    let mut cut = Vec::new();
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for &(u, v) in &edges {
            net.add_edge(u, v, 1);
        }
        let flow = net.max_flow(0, t, best);
        if flow < best {
            best = flow;
            let side = net.residual_reachable(0);
            cut = edges
                .iter()
                .filter(|&&(u, v)| side[u] != side[v])
                .map(|&(u, v)| to_edge(g, u, v))
                .collect();
        }
    }
    OracleResult::exact(kind, best as usize, Witness::EdgeCut(cut))
}

/// `κ(g)` as the minimum vertex-disjoint path count over all non-adjacent
/// pairs, via the split-vertex network (`v_in = 2v`, `v_out = 2v + 1`).
pub fn vertex_connectivity(g: &BipartiteGraph) -> Result<OracleResult> {
    let kind = OracleKind::VertexConnectivity;
    let n = g.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n > MAX_VERTEX_CONNECTIVITY_N {
        return Err(Error::TooLarge {
            n,
            limit: MAX_VERTEX_CONNECTIVITY_N,
        });
    }
    if !g.is_connected() {
        return Ok(OracleResult::exact(kind, 0, Witness::Separator(Vec::new())));
    }
    let adj = g.global_adjacency();
    let edges = g.global_edges();
    let big = n as u32;
    let mut best = (n - 2) as u32;
    let mut separator: Option<Vec<Vertex>> = None;
    for s in 0..n {
        for t in s + 1..n {
            if adj[s].binary_search(&t).is_ok() {
                continue;
            }
            let mut net = FlowNetwork::new(2 * n);
            for v in 0..n {
                net.add_arc(2 * v, 2 * v + 1, 1);
            }
            for &(u, v) in &edges {
                net.add_arc(2 * u + 1, 2 * v, big);
                net.add_arc(2 * v + 1, 2 * u, big);
            }
            let limit = if separator.is_some() { best } else { best + 1 };
            let flow = net.max_flow(2 * s + 1, 2 * t, limit);
            if flow < limit {
                best = flow;
                let side = net.residual_reachable(2 * s + 1);
                separator = Some(
                    (0..n)
                        .filter(|&v| side[2 * v] && !side[2 * v + 1])
                        .map(|v| g.vertex(v))
                        .collect(),
                );
            }
        }
    }
    let separator = separator.expect("a connected bipartite graph on 3+ vertices has a non-adjacent pair");
    Ok(OracleResult::exact(
        kind,
        best as usize,
        Witness::Separator(separator),
    ))
}

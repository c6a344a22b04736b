#![allow(dead_code)]

use bicert::audit::AuditConfig;
use bicert::graph::{gen_builtin, Builtin};
use bicert::BipartiteGraph;
use nalgebra::DMatrix;

pub const CORPUS_SEED: u64 = 42;

/// The graphs sampled by the default audit corpus, in trial order.
pub fn default_corpus() -> Vec<BipartiteGraph> {
    let cfg = AuditConfig::default_corpus(CORPUS_SEED);
    (0..cfg.trials).filter_map(|t| cfg.trial_graph(t).ok()).collect()
}

/// One graph per grid point, which keeps the expensive exhaustive checks cheap.
pub fn corpus_sample(per_point: usize) -> Vec<BipartiteGraph> {
    let cfg = AuditConfig::default_corpus(CORPUS_SEED);
    let points = cfg.size_grid.len();
    (0..points * per_point)
        .filter_map(|t| cfg.trial_graph(t).ok())
        .collect()
}

pub fn builtin(kind: Builtin) -> BipartiteGraph {
    gen_builtin(kind).unwrap()
}

/// Adjacency eigenvalues of the full `n × n` matrix, in descending order,
/// from nalgebra's dense symmetric solver.
pub fn dense_eigenvalues(g: &BipartiteGraph) -> Vec<f64> {
    let n = g.n();
    let mut m = DMatrix::<f64>::zeros(n, n);
    for (u, v) in g.global_edges() {
        m[(u, v)] = 1.0;
        m[(v, u)] = 1.0;
    }
    let mut values: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    values.sort_by(|p, q| q.total_cmp(p));
    values
}

/// Second largest adjacency eigenvalue from the dense oracle.
pub fn dense_lambda2(g: &BipartiteGraph) -> f64 {
    dense_eigenvalues(g)[1]
}

/// Brute-force `κ′`: smallest edge set whose removal disconnects `g`.
pub fn brute_edge_connectivity(g: &BipartiteGraph) -> usize {
    if !g.is_connected() {
        return 0;
    }
    let edges = g.edges();
    for size in 1..=edges.len() {
        if subsets(edges.len(), size).any(|s| {
            let cut: Vec<_> = s.iter().map(|&i| edges[i]).collect();
            !g.without_edges(&cut).is_connected()
        }) {
            return size;
        }
    }
    edges.len()
}

/// Brute-force `κ`: smallest vertex set whose removal disconnects `g`, or
/// `n − 1` for complete-like graphs with no separator.
pub fn brute_vertex_connectivity(g: &BipartiteGraph) -> usize {
    let n = g.n();
    let adj = g.global_adjacency();
    for size in 0..n.saturating_sub(1) {
        for removed in subsets(n, size) {
            if !connected_without(&adj, &removed) {
                return size;
            }
        }
    }
    n - 1
}

fn connected_without(adj: &[Vec<usize>], removed: &[usize]) -> bool {
    let n = adj.len();
    let mut gone = vec![false; n];
    for &v in removed {
        gone[v] = true;
    }
    let Some(start) = (0..n).find(|&v| !gone[v]) else { return true };
    let mut seen = gone.clone();
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// All `size`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = (size <= n).then(|| (0..size).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut next = out.clone();
        let mut i = size;
        loop {
            if i == 0 {
                current = None;
                break;
            }
            i -= 1;
            if next[i] < n - size + i {
                next[i] += 1;
                for j in i + 1..size {
                    next[j] = next[j - 1] + 1;
                }
                current = Some(next);
                break;
            }
        }
        Some(out)
    })
}

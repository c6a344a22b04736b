use serde::{Deserialize, Serialize};

use super::{BipartiteGraph, Edge};
use crate::error::{Error, Result};
use crate::rng::SplitMix64;

pub const DEFAULT_MAX_RETRIES: usize = 10_000;

/// Named deterministic graphs used as fixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Builtin {
    /// `K_{m,n}` with `|X| = m`, `|Y| = n`.
    CompleteBipartite(usize, usize),
    /// Cycle on the given (even) number of vertices, alternating X and Y:
    /// `x0 y0 x1 y1 ...`.
    EvenCycle(usize),
    /// Point-line incidence graph of the Fano plane; X = points, Y = lines,
    /// line `j` = `{j, j+1, j+3} mod 7`.
    Heawood,
}

pub fn gen_builtin(kind: Builtin) -> Result<BipartiteGraph> {
    match kind {
        Builtin::CompleteBipartite(m, n) => {
            if m == 0 || n == 0 {
                return Err(Error::InvalidParam(format!(
                    "complete bipartite sizes must be positive, got {m},{n}"
                )));
            }
            let edges = (0..m).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
            BipartiteGraph::new(m, n, edges)
        }
        Builtin::EvenCycle(len) => {
            if len < 4 || len % 2 != 0 {
                return Err(Error::InvalidParam(format!(
                    "cycle length must be even and at least 4, got {len}"
                )));
            }
            let m = len / 2;
            let edges = (0..m).flat_map(|i| [(i, i), ((i + 1) % m, i)]).collect();
            BipartiteGraph::new(m, m, edges)
        }
        Builtin::Heawood => {
            let edges = (0..7)
                .flat_map(|line| [0, 1, 3].map(|off| ((line + off) % 7, line)))
                .collect();
            BipartiteGraph::new(7, 7, edges)
        }
    }
}

/// Samples a simple `(a,b)`-biregular graph on `x + y` vertices from the
/// configuration model.
///
/// The `b·y` Y-stubs are shuffled and matched in order to the `a·x` X-stubs
/// (X-vertex `i` owns stubs `i·a .. (i+1)·a`). Any matching that produces a
/// repeated edge is thrown away whole and a fresh shuffle is drawn from the
/// same generator stream.
pub fn gen_random_biregular(
    x: usize,
    y: usize,
    a: usize,
    b: usize,
    seed: u64,
    max_retries: usize,
) -> Result<BipartiteGraph> {
    if x == 0 || y == 0 || a == 0 || b == 0 {
        return Err(Error::InvalidParam(
            "part sizes and degrees must be positive".into(),
        ));
    }
    if a * x != b * y {
        return Err(Error::DegreeEquationViolated {
            lhs: a * x,
            rhs: b * y,
        });
    }
    if a > y || b > x {
        return Err(Error::InvalidParam(format!(
            "degrees ({a},{b}) too large for parts ({x},{y})"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut stubs: Vec<usize> = (0..y).flat_map(|j| std::iter::repeat_n(j, b)).collect();
    let mut seen = vec![false; y];
    let mut rejections = 0;
    loop {
        rng.shuffle(&mut stubs);
        if let Some(edges) = simple_matching(&stubs, a, &mut seen) {
            return BipartiteGraph::new(x, y, edges);
        }
        rejections += 1;
        if rejections >= max_retries {
            return Err(Error::RetriesExhausted {
                retries: rejections,
            });
        }
    }
}

fn simple_matching(stubs: &[usize], a: usize, seen: &mut [bool]) -> Option<Vec<Edge>> {
    let mut edges = Vec::with_capacity(stubs.len());
    for (xi, chunk) in stubs.chunks(a).enumerate() {
        let mut ok = true;
        for &yj in chunk {
            if seen[yj] {
                ok = false;
                break;
            }
            seen[yj] = true;
        }
        for &yj in chunk {
            seen[yj] = false;
        }
        if !ok {
            return None;
        }
        edges.extend(chunk.iter().map(|&yj| (xi, yj)));
    }
    Some(edges)
}

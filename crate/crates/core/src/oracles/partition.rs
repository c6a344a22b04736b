use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::{OracleKind, OracleResult, Witness};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex};

/// Largest vertex count for Nash-Williams/Tutte enumeration (Bell(12) ≈ 4.2M).
pub const PARTITION_MAX_N: usize = 12;

/// A partition of some vertex set into nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub blocks: Vec<Vec<Vertex>>,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<Vertex>>) -> Self {
        Partition { blocks }
    }

    pub fn singletons<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Partition {
            blocks: vertices.into_iter().map(|v| vec![v]).collect(),
        }
    }

    /// Number of single-vertex blocks (`n₀`).
    pub fn trivial_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    /// Number of blocks with two or more vertices (`n₀′`).
    pub fn nontrivial_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() > 1).count()
    }

    pub(crate) fn from_labels(items: &[usize], labels: &[usize], blocks: usize, g: &BipartiteGraph) -> Self {
        let mut out = vec![Vec::new(); blocks];
        for (&v, &l) in items.iter().zip(labels) {
            out[l].push(g.vertex(v));
        }
        Partition { blocks: out }
    }
}

/// Calls `visit(labels, block_count)` for every set partition of `0..n`,
/// encoded as a restricted growth string: `labels[0] = 0` and each label is at
/// most one more than the largest label before it.
pub fn for_each_partition<F>(n: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize], usize) -> ControlFlow<()>,
{
    if n == 0 {
        return visit(&[], 0);
    }
    let mut labels = vec![0usize; n];
    // prefix_max[i] = max(labels[..=i])
    let mut prefix_max = vec![0usize; n];
    loop {
        visit(&labels, prefix_max[n - 1] + 1)?;
        let mut i = n - 1;
        loop {
            if i == 0 {
                return ControlFlow::Continue(());
            }
            if labels[i] <= prefix_max[i - 1] {
                labels[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(labels[i]);
                for j in i + 1..n {
                    labels[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

/// `min ⌊e(π)/(t−1)⌋` over all partitions `π` of `V(g)` into `t ≥ 2` blocks,
/// which equals `τ(g)`. When the minimum is below `k`, the witness is a
/// partition attaining it.
pub fn tau_partition_bruteforce(g: &BipartiteGraph, k: usize) -> Result<OracleResult> {
    let n = g.n();
    if n > PARTITION_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: PARTITION_MAX_N,
        });
    }
    let edges = g.global_edges();
    let mut best = usize::MAX;
    let mut best_labels = Vec::new();
    let mut best_t = 0;
    let _ = for_each_partition(n, |labels, t| {
        if t >= 2 {
            let crossing = edges.iter().filter(|&&(u, v)| labels[u] != labels[v]).count();
            let ratio = crossing / (t - 1);
            if ratio < best {
                best = ratio;
                best_labels = labels.to_vec();
                best_t = t;
            }
        }
        ControlFlow::Continue(())
    });
    let witness = if best < k {
        let items: Vec<usize> = (0..n).collect();
        Witness::PartitionWitness {
            z: Vec::new(),
            blocks: Partition::from_labels(&items, &best_labels, best_t, g).blocks,
        }
    } else {
        Witness::None
    };
    Ok(OracleResult::exact(OracleKind::TreePacking, best, witness))
}

//! Partition condition for packings of spanning rigid subgraphs.
//!
//! `g` has `k` edge-disjoint spanning rigid subgraphs if for every `Z ⊂ V` and
//! every partition `π` of `V − Z` with `n₀` singleton blocks and `n₀′` larger
//! blocks,
//!
//! ```text
//! e_{G−Z}(π) ≥ k(3 − |Z|)·n₀′ + 2k·n₀ − 3k − n_Z(π)
//! ```
//!
//! where `n_Z(π)` sums, over the singleton blocks `{v}`, the number of
//! neighbours of `v` inside `Z`.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::partition::{for_each_partition, Partition};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Vertex, VertexSet};

pub const LEMMA31_MAX_N: usize = 9;
pub const LEMMA31_MAX_Z: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma31Value {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

fn rhs(k: usize, z_len: usize, trivial: usize, nontrivial: usize, n_z: usize) -> i64 {
    let k = k as i64;
    k * (3 - z_len as i64) * nontrivial as i64 + 2 * k * trivial as i64 - 3 * k - n_z as i64
}

pub fn lemma31_evaluate(
    g: &BipartiteGraph,
    k: usize,
    z: &VertexSet,
    pi: &Partition,
) -> Result<Lemma31Value> {
    g.check_set(z)?;
    if z.len() >= g.n() {
        return Err(Error::InvalidPartition("Z must be a proper subset of V".into()));
    }
    let mut block_of = vec![usize::MAX; g.n()];
    for (b, block) in pi.blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::InvalidPartition(format!("block {b} is empty")));
        }
        for &v in block {
            g.check_vertex(v)?;
            if z.contains(v) {
                return Err(Error::InvalidPartition(format!("{v} lies in Z")));
            }
            let id = g.global(v);
            if block_of[id] != usize::MAX {
                return Err(Error::InvalidPartition(format!("{v} appears twice")));
            }
            block_of[id] = b;
        }
    }
    if let Some(v) = g
        .vertices()
        .find(|&v| !z.contains(v) && block_of[g.global(v)] == usize::MAX)
    {
        return Err(Error::InvalidPartition(format!("{v} is not covered")));
    }

    let lhs = g
        .global_edges()
        .iter()
        .filter(|&&(u, v)| {
            block_of[u] != usize::MAX && block_of[v] != usize::MAX && block_of[u] != block_of[v]
        })
        .count() as i64;
    let n_z: usize = pi
        .blocks
        .iter()
        .filter(|b| b.len() == 1)
        .map(|b| {
            let v = b[0];
            let other = |w: usize| match v.part {
                crate::Part::X => Vertex::y(w),
                crate::Part::Y => Vertex::x(w),
            };
            g.neighbors(v).iter().filter(|&&w| z.contains(other(w))).count()
        })
        .sum();
    let rhs = rhs(k, z.len(), pi.trivial_count(), pi.nontrivial_count(), n_z);
    Ok(Lemma31Value {
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma31Outcome {
    /// The inequality held for every `(Z, π)` examined.
    Sufficient,
    /// Some `(Z, π)` violated it; the lemma then says nothing.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma31Report {
    pub outcome: Lemma31Outcome,
    pub k: usize,
    pub z_cap: usize,
    /// True when `z_cap` reaches `n − 1`, so every proper `Z` was examined and
    /// a `Sufficient` outcome is the full hypothesis of the lemma.
    pub complete: bool,
    /// Number of `(Z, π)` pairs evaluated.
    pub checked: u64,
    pub failing_z: Option<Vec<Vertex>>,
    pub failing_partition: Option<Partition>,
    pub failing_value: Option<Lemma31Value>,
}

/// Checks the inequality for every `Z` with `|Z| ≤ z_cap` and every partition
/// of `V − Z`, stopping at the first violation.
pub fn lemma31_exhaustive(g: &BipartiteGraph, k: usize, z_cap: usize) -> Result<Lemma31Report> {
    let n = g.n();
    if n > LEMMA31_MAX_N {
        return Err(Error::TooLarge {
            n,
            limit: LEMMA31_MAX_N,
        });
    }
    if z_cap > LEMMA31_MAX_Z {
        return Err(Error::TooLarge {
            n: z_cap,
            limit: LEMMA31_MAX_Z,
        });
    }
    let adj = g.global_adjacency();
    let edges = g.global_edges();
    let z_max = z_cap.min(n - 1);
    let mut report = Lemma31Report {
        outcome: Lemma31Outcome::Sufficient,
        k,
        z_cap,
        complete: z_max == n - 1,
        checked: 0,
        failing_z: None,
        failing_partition: None,
        failing_value: None,
    };

    for size in 0..=z_max {
        let mut subset: Vec<usize> = (0..size).collect();
        loop {
            let in_z: BTreeSet<usize> = subset.iter().copied().collect();
            let alive: Vec<usize> = (0..n).filter(|v| !in_z.contains(v)).collect();
            let z_degree: Vec<usize> = (0..n)
                .map(|v| adj[v].iter().filter(|w| in_z.contains(w)).count())
                .collect();
            let mut pos = vec![usize::MAX; n];
            for (i, &v) in alive.iter().enumerate() {
                pos[v] = i;
            }
            let mut block_size = vec![0usize; alive.len()];
            let flow = for_each_partition(alive.len(), |labels, t| {
                report.checked += 1;
                block_size[..t].fill(0);
                for &l in labels {
                    block_size[l] += 1;
                }
                let lhs = edges
                    .iter()
                    .filter(|&&(u, v)| {
                        pos[u] != usize::MAX && pos[v] != usize::MAX && labels[pos[u]] != labels[pos[v]]
                    })
                    .count() as i64;
                let trivial = block_size[..t].iter().filter(|&&s| s == 1).count();
                let n_z: usize = alive
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| block_size[labels[i]] == 1)
                    .map(|(_, &v)| z_degree[v])
                    .sum();
                let rhs = rhs(k, size, trivial, t - trivial, n_z);
                if lhs < rhs {
                    report.outcome = Lemma31Outcome::Inconclusive;
                    report.failing_z = Some(subset.iter().map(|&v| g.vertex(v)).collect());
                    report.failing_partition = Some(Partition::from_labels(&alive, labels, t, g));
                    report.failing_value = Some(Lemma31Value {
                        lhs,
                        rhs,
                        holds: false,
                    });
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            if flow.is_break() {
                return Ok(report);
            }
            if !next_combination(&mut subset, n) {
                break;
            }
        }
    }
    Ok(report)
}

/// Advances `subset` to the next `len`-combination of `0..n` in lexicographic
/// order; false when exhausted.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let len = subset.len();
    for i in (0..len).rev() {
        if subset[i] < n - len + i {
            subset[i] += 1;
            for j in i + 1..len {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_builtin, Builtin, SetPart};
    use crate::oracles::is_rigid;

    fn graph(kind: Builtin) -> BipartiteGraph {
        gen_builtin(kind).unwrap()
    }

    #[test]
    fn k33_singletons_is_tight() {
        let g = graph(Builtin::CompleteBipartite(3, 3));
        let pi = Partition::singletons(g.vertices());
        let v = lemma31_evaluate(&g, 1, &VertexSet::empty(SetPart::Mixed), &pi).unwrap();
        assert_eq!(v, Lemma31Value { lhs: 9, rhs: 9, holds: true });
    }

    #[test]
    fn k33_two_sides() {
        let g = graph(Builtin::CompleteBipartite(3, 3));
        let pi = Partition::new(vec![
            (0..3).map(Vertex::x).collect(),
            (0..3).map(Vertex::y).collect(),
        ]);
        let v = lemma31_evaluate(&g, 1, &VertexSet::empty(SetPart::Mixed), &pi).unwrap();
        assert_eq!(v, Lemma31Value { lhs: 9, rhs: 3, holds: true });
    }

    #[test]
    fn single_block() {
        let g = graph(Builtin::Heawood);
        let pi = Partition::new(vec![g.vertices().collect()]);
        let v = lemma31_evaluate(&g, 1, &VertexSet::empty(SetPart::Mixed), &pi).unwrap();
        assert_eq!(v, Lemma31Value { lhs: 0, rhs: 0, holds: true });
    }

    #[test]
    fn n_z_counts_neighbours_in_z() {
        // K_{3,3}, Z = {x0}: each y is a singleton with one neighbour in Z.
        let g = graph(Builtin::CompleteBipartite(3, 3));
        let z = VertexSet::from_x([0]);
        let pi = Partition::singletons(g.vertices().filter(|&v| v != Vertex::x(0)));
        let v = lemma31_evaluate(&g, 1, &z, &pi).unwrap();
        // lhs = 6, rhs = 0 + 2·5 − 3 − 3 = 4
        assert_eq!(v, Lemma31Value { lhs: 6, rhs: 4, holds: true });
    }

    #[test]
    fn invalid_partitions() {
        let g = graph(Builtin::EvenCycle(6));
        let none = VertexSet::empty(SetPart::Mixed);
        let missing = Partition::singletons(g.vertices().skip(1));
        assert!(matches!(
            lemma31_evaluate(&g, 1, &none, &missing),
            Err(Error::InvalidPartition(_))
        ));
        let z = VertexSet::from_x([0]);
        let overlapping = Partition::singletons(g.vertices());
        assert!(matches!(
            lemma31_evaluate(&g, 1, &z, &overlapping),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn exhaustive_matches_evaluate_on_failure() {
        let g = graph(Builtin::EvenCycle(6));
        let r = lemma31_exhaustive(&g, 1, 2).unwrap();
        assert_eq!(r.outcome, Lemma31Outcome::Inconclusive);
        let z = VertexSet::mixed(r.failing_z.clone().unwrap());
        let v = lemma31_evaluate(&g, 1, &z, r.failing_partition.as_ref().unwrap()).unwrap();
        assert_eq!(Some(v), r.failing_value);
        assert!(!v.holds);
    }

    #[test]
    fn sufficient_implies_rigid_on_small_graphs() {
        for kind in [
            Builtin::CompleteBipartite(3, 3),
            Builtin::CompleteBipartite(4, 4),
            Builtin::CompleteBipartite(3, 4),
            Builtin::CompleteBipartite(2, 3),
            Builtin::EvenCycle(8),
        ] {
            let g = graph(kind);
            let r = lemma31_exhaustive(&g, 1, 3).unwrap();
            if r.outcome == Lemma31Outcome::Sufficient {
                assert!(is_rigid(&g), "{kind:?}");
            }
        }
    }

    #[test]
    fn guards() {
        let g = graph(Builtin::Heawood);
        assert!(matches!(lemma31_exhaustive(&g, 1, 1), Err(Error::TooLarge { .. })));
        let g = graph(Builtin::EvenCycle(6));
        assert!(matches!(lemma31_exhaustive(&g, 1, 4), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn combinations_enumerate_binomials() {
        let mut s = vec![0, 1];
        let mut count = 1;
        while next_combination(&mut s, 5) {
            count += 1;
        }
        assert_eq!(count, 10);
    }
}

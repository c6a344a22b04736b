//! Randomized generic rank of the 2-dimensional rigidity matrix.
//!
//! Vertices get uniformly random coordinates in `GF(p)`, `p = 2³¹ − 1`. The row
//! of edge `uv` holds `p(u) − p(v)` in the two columns of `u` and `p(v) − p(u)`
//! in those of `v`. Its rank never exceeds the generic rank and equals it
//! unless the positions hit a proper algebraic subset, which happens with
//! probability at most `(2n−3)/p` by Schwartz-Zippel.

use crate::graph::BipartiteGraph;
use crate::rng::SplitMix64;

pub const RIGIDITY_PRIME: u64 = (1 << 31) - 1;

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % RIGIDITY_PRIME;
        }
        base = base * base % RIGIDITY_PRIME;
        exp >>= 1;
    }
    acc
}

fn inverse(a: u64) -> u64 {
    pow_mod(a, RIGIDITY_PRIME - 2)
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let p = RIGIDITY_PRIME;
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inverse(rows[rank][col]);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col] == 0 {
                continue;
            }
            let factor = row[col] * inv % p;
            for (c, &pv) in pivot_row.iter().enumerate().skip(col) {
                row[c] = (row[c] + p - factor * pv % p) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rigidity_matrix_rank(g: &BipartiteGraph, seed: u64) -> usize {
    let n = g.n();
    let p = RIGIDITY_PRIME;
    let mut rng = SplitMix64::new(seed);
    let coords: Vec<[u64; 2]> = (0..n).map(|_| [rng.below(p), rng.below(p)]).collect();
    let rows = g
        .global_edges()
        .into_iter()
        .map(|(u, v)| {
            let mut row = vec![0u64; 2 * n];
            for d in 0..2 {
                let diff = (coords[u][d] + p - coords[v][d]) % p;
                row[2 * u + d] = diff;
                row[2 * v + d] = (p - diff) % p;
            }
            row
        })
        .collect();
    rank_mod_p(rows, 2 * n)
}

use super::connectivity::vertex_connectivity;
use super::pebble::PebbleGame;
use super::{OracleKind, OracleResult, Witness};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Edge};
use crate::rng::SplitMix64;

/// Exhaustive rigid-packing search is only attempted up to this many vertices.
pub const EXHAUSTIVE_PACKING_MAX_N: usize = 8;

fn full_rank(n: usize) -> usize {
    (2 * n).saturating_sub(3)
}

/// Pebble-game basis of the rigidity matroid restricted to `edges`, inserted in
/// the given order.
fn independent_subset(g: &BipartiteGraph, edges: &[Edge]) -> Vec<Edge> {
    let mut game = PebbleGame::new(g.n());
    edges
        .iter()
        .copied()
        .filter(|&(x, y)| game.try_insert(x, g.x_count() + y))
        .collect()
}

/// Rank of the generic 2-dimensional rigidity matroid; the witness is the
/// independent set found, a spanning Laman subgraph when `g` is rigid.
pub fn rigidity_rank(g: &BipartiteGraph) -> OracleResult {
    let basis = independent_subset(g, g.edges());
    OracleResult::exact(OracleKind::RigidityRank, basis.len(), Witness::LamanSubgraph(basis))
}

pub fn is_rigid(g: &BipartiteGraph) -> bool {
    g.n() >= 2 && rigidity_rank(g).value == full_rank(g.n())
}

/// Whether `g − e` stays rigid for every edge `e`. Removing an edge outside a
/// basis leaves the basis intact, so only basis edges are tried.
pub fn is_redundantly_rigid(g: &BipartiteGraph) -> OracleResult {
    let kind = OracleKind::RedundantRigidity;
    let target = full_rank(g.n());
    let basis = independent_subset(g, g.edges());
    if basis.len() < target {
        return OracleResult::exact(kind, 0, Witness::None);
    }
    for &e in &basis {
        let rest: Vec<Edge> = g.edges().iter().copied().filter(|&f| f != e).collect();
        if independent_subset(g, &rest).len() < target {
            return OracleResult::exact(kind, 0, Witness::CriticalEdge(e));
        }
    }
    OracleResult::exact(kind, 1, Witness::None)
}

/// 3-connected and redundantly rigid.
pub fn is_globally_rigid(g: &BipartiteGraph) -> Result<OracleResult> {
    let n = g.n();
    if n < 4 {
        return Err(Error::TooSmall { n, min: 4 });
    }
    let kappa = vertex_connectivity(g)?;
    if kappa.value < 3 {
        return Ok(OracleResult::exact(OracleKind::GlobalRigidity, 0, kappa.witness));
    }
    let redundant = is_redundantly_rigid(g);
    Ok(OracleResult::exact(
        OracleKind::GlobalRigidity,
        redundant.value,
        redundant.witness,
    ))
}

/// Number of shuffled edge orders tried after the canonical and diagonal ones.
const SHUFFLED_ORDERS: u64 = 8;

/// Deterministic edge orders for greedy extraction: canonical sorted order,
/// then the diagonal order `((y − x) mod |Y|, x)` which spreads each prefix
/// evenly over the vertices, then seeded shuffles.
fn extraction_orders(g: &BipartiteGraph) -> impl Iterator<Item = Vec<Edge>> + '_ {
    let canonical = g.edges().to_vec();
    let mut diagonal = canonical.clone();
    let yc = g.y_count();
    diagonal.sort_by_key(|&(x, y)| ((y + yc - x % yc) % yc, x));
    let shuffled = (1..=SHUFFLED_ORDERS).map(move |seed| {
        let mut order = g.edges().to_vec();
        SplitMix64::new(seed).shuffle(&mut order);
        order
    });
    [canonical, diagonal].into_iter().chain(shuffled)
}

/// Repeatedly takes the pebble-game basis of the remaining edges (in `order`)
/// while it spans.
fn peel(g: &BipartiteGraph, order: &[Edge], k: usize) -> Vec<Vec<Edge>> {
    let target = full_rank(g.n());
    let mut remaining = order.to_vec();
    let mut found = Vec::new();
    while found.len() < k {
        let mut basis = independent_subset(g, &remaining);
        if basis.len() < target {
            break;
        }
        basis.sort_unstable();
        remaining.retain(|e| basis.binary_search(e).is_err());
        found.push(basis);
    }
    found
}

/// Peels spanning Laman subgraphs off `g` one at a time.
///
/// Each attempt fixes an edge order and extracts pebble-game bases until one
/// fails to span; a few deterministic orders are tried. Success
/// (`value ≥ k`) is exact. A failure is exact when `k = 1` (the rank test
/// decides rigidity) or when `n ≤ 8`, where an exhaustive search over bases
/// settles the question; otherwise the result is inconclusive and `exact` is
/// false. `value` is the largest number of subgraphs extracted.
pub fn greedy_rigid_packing(g: &BipartiteGraph, k: usize) -> OracleResult {
    let kind = OracleKind::RigidPacking;
    let n = g.n();
    let mut best: Vec<Vec<Edge>> = Vec::new();
    if n >= 2 {
        for order in extraction_orders(g) {
            let found = peel(g, &order, k);
            if found.len() > best.len() {
                best = found;
            }
            // One order decides k = 1, since every order reaches the full rank.
            if best.len() >= k || k == 1 {
                break;
            }
        }
    }
    if best.len() >= k {
        return OracleResult::exact(kind, best.len(), Witness::LamanPacking(best));
    }
    if k >= 2 && (2..=EXHAUSTIVE_PACKING_MAX_N).contains(&n) {
        let target = full_rank(n);
        if let Some(packing) = exhaustive_packing(g, g.edges(), k, target) {
            return OracleResult::exact(kind, k, Witness::LamanPacking(packing));
        }
        return OracleResult::exact(kind, best.len(), Witness::LamanPacking(best));
    }
    OracleResult {
        property: kind,
        value: best.len(),
        witness: Witness::LamanPacking(best),
        exact: k == 1,
    }
}

fn exhaustive_packing(
    g: &BipartiteGraph,
    edges: &[Edge],
    need: usize,
    target: usize,
) -> Option<Vec<Vec<Edge>>> {
    if need == 0 {
        return Some(Vec::new());
    }
    if edges.len() < need * target {
        return None;
    }
    let mut chosen = Vec::with_capacity(target);
    search_bases(g, edges, 0, target, &mut chosen, &mut |basis| {
        let rest: Vec<Edge> = edges.iter().copied().filter(|e| !basis.contains(e)).collect();
        exhaustive_packing(g, &rest, need - 1, target).map(|mut tail| {
            tail.insert(0, basis.to_vec());
            tail
        })
    })
}

/// Enumerates `target`-subsets of `edges` (in lexicographic index order) that
/// are independent, pruning as soon as a prefix becomes dependent.
fn search_bases<F>(
    g: &BipartiteGraph,
    edges: &[Edge],
    start: usize,
    target: usize,
    chosen: &mut Vec<Edge>,
    found: &mut F,
) -> Option<Vec<Vec<Edge>>>
where
    F: FnMut(&[Edge]) -> Option<Vec<Vec<Edge>>>,
{
    if chosen.len() == target {
        return found(chosen);
    }
    let missing = target - chosen.len();
    for i in start..=edges.len().saturating_sub(missing) {
        chosen.push(edges[i]);
        if independent_subset(g, chosen).len() == chosen.len() {
            if let Some(result) = search_bases(g, edges, i + 1, target, chosen, found) {
                return Some(result);
            }
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_builtin, Builtin};
    use crate::oracles::validate_laman_packing;

    fn graph(kind: Builtin) -> BipartiteGraph {
        gen_builtin(kind).unwrap()
    }

    #[test]
    fn ranks() {
        let k33 = graph(Builtin::CompleteBipartite(3, 3));
        let r = rigidity_rank(&k33);
        assert_eq!(r.value, 9);
        assert_eq!(r.witness, Witness::LamanSubgraph(k33.edges().to_vec()));
        assert!(is_rigid(&k33));
        assert_eq!(rigidity_rank(&graph(Builtin::EvenCycle(6))).value, 6);
        assert!(!is_rigid(&graph(Builtin::EvenCycle(6))));
        assert_eq!(rigidity_rank(&graph(Builtin::CompleteBipartite(6, 6))).value, 21);
    }

    #[test]
    fn redundancy() {
        assert!(!is_redundantly_rigid(&graph(Builtin::CompleteBipartite(3, 3))).holds());
        assert!(is_redundantly_rigid(&graph(Builtin::CompleteBipartite(6, 6))).holds());
        assert!(!is_redundantly_rigid(&graph(Builtin::EvenCycle(6))).holds());
    }

    #[test]
    fn global_rigidity() {
        assert!(is_globally_rigid(&graph(Builtin::CompleteBipartite(6, 6))).unwrap().holds());
        assert!(!is_globally_rigid(&graph(Builtin::CompleteBipartite(3, 3))).unwrap().holds());
        assert!(!is_globally_rigid(&graph(Builtin::EvenCycle(6))).unwrap().holds());
        assert!(is_globally_rigid(&graph(Builtin::CompleteBipartite(1, 2))).is_err());
    }

    #[test]
    fn packing_k66_single() {
        let g = graph(Builtin::CompleteBipartite(6, 6));
        let r = greedy_rigid_packing(&g, 1);
        assert!(r.exact);
        assert_eq!(r.value, 1);
        let Witness::LamanPacking(subs) = &r.witness else { panic!() };
        assert_eq!(subs[0].len(), 21);
        assert!(validate_laman_packing(&g, subs));
    }

    #[test]
    fn packing_k12_12_two() {
        let g = graph(Builtin::CompleteBipartite(12, 12));
        let r = greedy_rigid_packing(&g, 2);
        assert!(r.exact);
        assert_eq!(r.value, 2);
        let Witness::LamanPacking(subs) = &r.witness else { panic!() };
        assert!(subs.iter().all(|s| s.len() == 45));
        assert!(validate_laman_packing(&g, subs));
    }

    #[test]
    fn cycle_is_refuted_exactly() {
        let r = greedy_rigid_packing(&graph(Builtin::EvenCycle(6)), 1);
        assert_eq!((r.value, r.exact), (0, true));
    }

    #[test]
    fn small_graphs_decided_exhaustively() {
        // K_{4,4}: 16 edges, a spanning Laman subgraph needs 13, so two cannot fit.
        let r = greedy_rigid_packing(&graph(Builtin::CompleteBipartite(4, 4)), 2);
        assert_eq!((r.value, r.exact), (1, true));
    }
}

//! Randomized soundness audit: sample biregular graphs, evaluate certificates,
//! and compare every verdict with the exact oracles.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certify::{certify, PropertyKind, SpectralInput, Verdict};
use crate::error::Error;
use crate::graph::{gen_random_biregular, BipartiteGraph, VertexSet, DEFAULT_MAX_RETRIES};
use crate::oracles::{
    edge_connectivity, greedy_rigid_packing, is_globally_rigid, tau_exact, vertex_connectivity,
};
use crate::report::AuditRecord;
use crate::rng::{derive_seed, SplitMix64};
use crate::spectral::{mixing_check, singular_values, MixingReport};

/// Part sizes and degrees `(x, y, a, b)` with `a·x = b·y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridPoint {
    pub x: usize,
    pub y: usize,
    pub a: usize,
    pub b: usize,
}

impl GridPoint {
    pub const fn new(x: usize, y: usize, a: usize, b: usize) -> Self {
        GridPoint { x, y, a, b }
    }

    pub fn n(&self) -> usize {
        self.x + self.y
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.x, self.y, self.a, self.b)
    }
}

impl FromStr for GridPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| Error::InvalidParam(format!("bad grid point `{s}`")))?;
        match parts[..] {
            [x, y, a, b] => Ok(GridPoint { x, y, a, b }),
            _ => Err(Error::InvalidParam(format!("grid point `{s}` needs x,y,a,b"))),
        }
    }
}

/// Parses `x,y,a,b;x,y,a,b;...`.
pub fn parse_grid(s: &str) -> Result<Vec<GridPoint>, Error> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(str::parse)
        .collect()
}

/// Default corpus: degrees in `2..=8`, at most 60 vertices, chosen so that
/// rejection sampling from the configuration model succeeds quickly.
pub const DEFAULT_GRID: [GridPoint; 20] = [
    GridPoint::new(3, 3, 2, 2),
    GridPoint::new(4, 4, 2, 2),
    GridPoint::new(3, 6, 4, 2),
    GridPoint::new(4, 4, 3, 3),
    GridPoint::new(4, 6, 3, 2),
    GridPoint::new(5, 5, 3, 3),
    GridPoint::new(6, 6, 3, 3),
    GridPoint::new(8, 4, 2, 4),
    GridPoint::new(10, 10, 3, 3),
    GridPoint::new(12, 8, 2, 3),
    GridPoint::new(15, 15, 4, 4),
    GridPoint::new(12, 16, 4, 3),
    GridPoint::new(10, 30, 6, 2),
    GridPoint::new(16, 20, 5, 4),
    GridPoint::new(24, 12, 2, 4),
    GridPoint::new(15, 30, 6, 3),
    GridPoint::new(7, 28, 8, 2),
    GridPoint::new(30, 30, 4, 4),
    GridPoint::new(20, 40, 4, 2),
    GridPoint::new(14, 42, 6, 2),
];

pub const DEFAULT_TRIALS: usize = 500;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditConfig {
    /// Number of graphs; trial `t` samples from `size_grid[t % len]`.
    pub trials: usize,
    pub size_grid: Vec<GridPoint>,
    pub k_grid: Vec<usize>,
    pub properties: BTreeSet<PropertyKind>,
    pub seed: u64,
    pub output_path: Option<PathBuf>,
    pub max_retries: usize,
}

impl AuditConfig {
    pub fn default_corpus(seed: u64) -> Self {
        AuditConfig {
            trials: DEFAULT_TRIALS,
            size_grid: DEFAULT_GRID.to_vec(),
            k_grid: (1..=8).collect(),
            properties: [
                PropertyKind::EdgeConn,
                PropertyKind::VertexConn,
                PropertyKind::TreePacking,
                PropertyKind::RigidPacking,
                PropertyKind::GlobalRigidity,
            ]
            .into_iter()
            .collect(),
            seed,
            output_path: None,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.trials == 0 {
            return Err(Error::InvalidParam("trials must be at least 1".into()));
        }
        if self.size_grid.is_empty() {
            return Err(Error::InvalidParam("size grid is empty".into()));
        }
        for p in &self.size_grid {
            if p.a * p.x != p.b * p.y {
                return Err(Error::DegreeEquationViolated {
                    lhs: p.a * p.x,
                    rhs: p.b * p.y,
                });
            }
            if p.n() < 4 {
                return Err(Error::InvalidParam(format!("grid point {p} has fewer than 4 vertices")));
            }
        }
        if self.properties.is_empty() {
            return Err(Error::InvalidParam("no properties selected".into()));
        }
        if self.properties.contains(&PropertyKind::Ramanujan) {
            return Err(Error::InvalidParam(
                "ramanujan has no combinatorial oracle to audit against".into(),
            ));
        }
        let needs_k = self.properties.iter().any(|p| p.takes_k());
        if needs_k && (self.k_grid.is_empty() || self.k_grid.contains(&0)) {
            return Err(Error::InvalidParam("k grid must be nonempty and positive".into()));
        }
        Ok(())
    }

    pub fn trial_seed(&self, trial: usize) -> u64 {
        derive_seed(self.seed, trial as u64)
    }

    pub fn graph_id(&self, trial: usize) -> String {
        format!("{trial:06}-{:016x}", self.trial_seed(trial))
    }

    /// The graph sampled for `trial`.
    pub fn trial_graph(&self, trial: usize) -> Result<BipartiteGraph, Error> {
        let p = self.size_grid[trial % self.size_grid.len()];
        gen_random_biregular(p.x, p.y, p.a, p.b, self.trial_seed(trial), self.max_retries)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedTrial {
    pub trial: usize,
    pub graph_id: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditOutcome {
    pub records: Vec<AuditRecord>,
    pub skipped: Vec<SkippedTrial>,
}

#[derive(Debug, Error)]
pub enum AuditError {
    #[error("invalid audit config: {0}")]
    Config(Error),
    #[error("unsound certificate on graph {} (trial seed {trial_seed:#x}): {} k={} verdict={} oracle={}", record.graph_id, record.property, record.k, record.verdict, record.oracle)]
    Unsound {
        record: Box<AuditRecord>,
        trial_seed: u64,
    },
    #[error("oracle or solver failure on graph {graph_id}: {error}")]
    Oracle { graph_id: String, error: Error },
}

/// Oracle answers for one graph, computed once per property.
struct OracleValues {
    edge: Option<usize>,
    vertex: Option<usize>,
    tau: Option<usize>,
    global: Option<bool>,
}

fn record_for(
    graph_id: &str,
    input: &SpectralInput,
    property: PropertyKind,
    k: usize,
    oracle: usize,
    refuted: bool,
) -> AuditRecord {
    let cert = certify(input, property, k);
    AuditRecord {
        graph_id: graph_id.to_string(),
        a: input.a,
        b: input.b,
        x: input.x,
        y: input.y,
        lambda2: input.lambda2,
        property,
        k: if property.takes_k() { k } else { 0 },
        threshold: cert.threshold,
        verdict: cert.verdict,
        oracle,
        sound: !(cert.verdict == Verdict::Certified && refuted),
    }
}

enum TrialResult {
    Records(Vec<AuditRecord>),
    Skipped(SkippedTrial),
}

fn run_trial(cfg: &AuditConfig, trial: usize) -> Result<TrialResult, AuditError> {
    let graph_id = cfg.graph_id(trial);
    let g = match cfg.trial_graph(trial) {
        Ok(g) => g,
        Err(e @ Error::RetriesExhausted { .. }) => {
            return Ok(TrialResult::Skipped(SkippedTrial {
                trial,
                graph_id,
                reason: e.to_string(),
            }))
        }
        Err(e) => return Err(AuditError::Config(e)),
    };
    let oracle_err = |error| AuditError::Oracle {
        graph_id: graph_id.clone(),
        error,
    };
    let spectrum = singular_values(&g).map_err(oracle_err)?;
    let input = SpectralInput::new(&g, &spectrum);
    let props = &cfg.properties;
    let k_max = cfg.k_grid.iter().copied().max().unwrap_or(1);

    let values = OracleValues {
        edge: props
            .contains(&PropertyKind::EdgeConn)
            .then(|| edge_connectivity(&g).value),
        vertex: props
            .contains(&PropertyKind::VertexConn)
            .then(|| vertex_connectivity(&g).map(|r| r.value))
            .transpose()
            .map_err(oracle_err)?,
        tau: props
            .contains(&PropertyKind::TreePacking)
            .then(|| tau_exact(&g, k_max).value),
        global: props
            .contains(&PropertyKind::GlobalRigidity)
            .then(|| is_globally_rigid(&g).map(|r| r.holds()))
            .transpose()
            .map_err(oracle_err)?,
    };

    let mut records = Vec::new();
    for &property in props {
        if !property.takes_k() {
            if property == PropertyKind::GlobalRigidity {
                let rigid = values.global.expect("computed above");
                records.push(record_for(&graph_id, &input, property, 0, rigid as usize, !rigid));
            }
            continue;
        }
        for &k in &cfg.k_grid {
            let record = match property {
                PropertyKind::EdgeConn => {
                    let v = values.edge.expect("computed above");
                    record_for(&graph_id, &input, property, k, v, v < k)
                }
                PropertyKind::VertexConn => {
                    let v = values.vertex.expect("computed above");
                    record_for(&graph_id, &input, property, k, v, v < k)
                }
                PropertyKind::TreePacking => {
                    let v = values.tau.expect("computed above");
                    record_for(&graph_id, &input, property, k, v, v < k)
                }
                PropertyKind::RigidPacking => {
                    let r = greedy_rigid_packing(&g, k);
                    record_for(&graph_id, &input, property, k, r.value, r.exact && r.value < k)
                }
                PropertyKind::GlobalRigidity | PropertyKind::Ramanujan => unreachable!(),
            };
            records.push(record);
        }
    }
    if let Some(bad) = records.iter().find(|r| !r.sound) {
        return Err(AuditError::Unsound {
            record: Box::new(bad.clone()),
            trial_seed: cfg.trial_seed(trial),
        });
    }
    Ok(TrialResult::Records(records))
}

/// Runs every trial (in parallel) and returns the records sorted by
/// `(graph_id, property, k)`. The first unsound record, in trial order, aborts
/// the audit.
pub fn audit_random(cfg: &AuditConfig) -> Result<AuditOutcome, AuditError> {
    cfg.validate().map_err(AuditError::Config)?;
    let results: Vec<Result<TrialResult, AuditError>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, t))
        .collect();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for result in results {
        match result? {
            TrialResult::Records(r) => records.extend(r),
            TrialResult::Skipped(s) => skipped.push(s),
        }
    }
    records.sort_by(|p, q| {
        (&p.graph_id, p.property, p.k).cmp(&(&q.graph_id, q.property, q.k))
    });
    Ok(AuditOutcome { records, skipped })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingViolation {
    pub a_set: Vec<usize>,
    pub b_set: Vec<usize>,
    pub report: MixingReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MixingAuditReport {
    pub pairs: usize,
    pub violations: usize,
    pub min_slack: f64,
    pub max_slack: f64,
    pub lambda2: f64,
    pub first_violation: Option<MixingViolation>,
}

/// Checks the mixing inequality on `pairs` uniformly random subset pairs
/// `(A ⊆ X, B ⊆ Y)`; each vertex joins its set with probability 1/2.
pub fn mixing_audit(g: &BipartiteGraph, pairs: usize, seed: u64) -> Result<MixingAuditReport, Error> {
    let spectrum = singular_values(g)?;
    let mut rng = SplitMix64::new(seed);
    let mut report = MixingAuditReport {
        pairs,
        violations: 0,
        min_slack: f64::INFINITY,
        max_slack: f64::NEG_INFINITY,
        lambda2: spectrum.lambda2,
        first_violation: None,
    };
    for _ in 0..pairs {
        let a_idx: Vec<usize> = (0..g.x_count()).filter(|_| rng.coin()).collect();
        let b_idx: Vec<usize> = (0..g.y_count()).filter(|_| rng.coin()).collect();
        let r = mixing_check(
            g,
            &spectrum,
            &VertexSet::from_x(a_idx.iter().copied()),
            &VertexSet::from_y(b_idx.iter().copied()),
        )?;
        report.min_slack = report.min_slack.min(r.slack());
        report.max_slack = report.max_slack.max(r.slack());
        if !r.holds {
            report.violations += 1;
            if report.first_violation.is_none() {
                report.first_violation = Some(MixingViolation {
                    a_set: a_idx,
                    b_set: b_idx,
                    report: r,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_builtin, Builtin};

    fn small_cfg(grid: Vec<GridPoint>, k_grid: Vec<usize>, props: &[PropertyKind], trials: usize) -> AuditConfig {
        AuditConfig {
            trials,
            size_grid: grid,
            k_grid,
            properties: props.iter().copied().collect(),
            seed: 42,
            output_path: None,
            max_retries: DEFAULT_MAX_RETRIES,
        }
    }

    #[test]
    fn edge_conn_records_are_sound() {
        let cfg = small_cfg(vec![GridPoint::new(6, 6, 3, 3)], vec![2, 3], &[PropertyKind::EdgeConn], 100);
        let out = audit_random(&cfg).unwrap();
        assert_eq!(out.records.len(), 200);
        assert!(out.skipped.is_empty());
        assert!(out.records.iter().all(|r| r.sound));
    }

    #[test]
    fn six_cycle_grid_reproduces_closed_forms() {
        let cfg = small_cfg(vec![GridPoint::new(3, 3, 2, 2)], vec![2], &[PropertyKind::EdgeConn], 5);
        let out = audit_random(&cfg).unwrap();
        for r in &out.records {
            assert!((r.lambda2 - 1.0).abs() < 1e-9);
            assert_eq!(r.oracle, 2);
            assert_eq!(r.verdict, Verdict::Certified);
        }
    }

    #[test]
    fn zero_trials_rejected() {
        let cfg = small_cfg(vec![GridPoint::new(3, 3, 2, 2)], vec![2], &[PropertyKind::EdgeConn], 0);
        assert!(matches!(audit_random(&cfg), Err(AuditError::Config(_))));
    }

    #[test]
    fn bad_grid_rejected() {
        let cfg = small_cfg(vec![GridPoint::new(3, 4, 2, 2)], vec![2], &[PropertyKind::EdgeConn], 1);
        assert!(matches!(
            audit_random(&cfg),
            Err(AuditError::Config(Error::DegreeEquationViolated { .. }))
        ));
    }

    #[test]
    fn records_are_sorted_and_deterministic() {
        let cfg = small_cfg(
            vec![GridPoint::new(4, 4, 2, 2), GridPoint::new(5, 5, 3, 3)],
            vec![1, 2],
            &[PropertyKind::TreePacking, PropertyKind::VertexConn, PropertyKind::GlobalRigidity],
            12,
        );
        let first = audit_random(&cfg).unwrap();
        let second = audit_random(&cfg).unwrap();
        assert_eq!(first, second);
        let keys: Vec<_> = first.records.iter().map(|r| (r.graph_id.clone(), r.property, r.k)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn exhausted_trials_are_skipped() {
        let cfg = AuditConfig {
            max_retries: 2,
            ..small_cfg(vec![GridPoint::new(8, 8, 7, 7)], vec![2], &[PropertyKind::EdgeConn], 3)
        };
        let out = audit_random(&cfg).unwrap();
        assert_eq!(out.skipped.len(), 3);
        assert!(out.records.is_empty());
    }

    #[test]
    fn grid_parsing() {
        let grid = parse_grid("6,6,3,3;3,3,2,2").unwrap();
        assert_eq!(grid, vec![GridPoint::new(6, 6, 3, 3), GridPoint::new(3, 3, 2, 2)]);
        assert!(parse_grid("1,2,3").is_err());
    }

    #[test]
    fn mixing_audit_examples() {
        for kind in [Builtin::CompleteBipartite(3, 3), Builtin::Heawood] {
            let g = gen_builtin(kind).unwrap();
            let r = mixing_audit(&g, 1000, 5).unwrap();
            assert_eq!(r.violations, 0);
            assert!(r.min_slack >= -1e-9);
        }
    }
}

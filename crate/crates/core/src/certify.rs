//! Spectral sufficient conditions.
//!
//! Each certificate compares `λ₂` against a threshold of the form
//! `√(ab) − penalty(a, b, k, ...)`. A certificate only ever asserts that the
//! property holds; `NotFired` says nothing about the graph.
//!
//! Floating-point policy, with `ε = 1e-9`:
//! * `|λ₂ − threshold| < ε` is reported as `Marginal` and never certifies;
//! * strict conditions certify when `λ₂ < threshold − ε`;
//! * non-strict conditions certify when `λ₂ ≤ threshold` outside the band.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{validate_biregular, BipartiteGraph};
use crate::spectral::{singular_values, Spectrum};

pub const EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyKind {
    EdgeConn,
    VertexConn,
    #[serde(rename = "stp")]
    TreePacking,
    RigidPacking,
    GlobalRigidity,
    Ramanujan,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 6] = [
        PropertyKind::EdgeConn,
        PropertyKind::VertexConn,
        PropertyKind::TreePacking,
        PropertyKind::RigidPacking,
        PropertyKind::GlobalRigidity,
        PropertyKind::Ramanujan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::EdgeConn => "edge-conn",
            PropertyKind::VertexConn => "vertex-conn",
            PropertyKind::TreePacking => "stp",
            PropertyKind::RigidPacking => "rigid-packing",
            PropertyKind::GlobalRigidity => "global-rigidity",
            PropertyKind::Ramanujan => "ramanujan",
        }
    }

    /// Whether the property is parameterized by `k`.
    pub fn takes_k(self) -> bool {
        !matches!(self, PropertyKind::GlobalRigidity | PropertyKind::Ramanujan)
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyKind::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown property `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    NotFired,
    Marginal,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Certified => "certified",
            Verdict::NotFired => "not-fired",
            Verdict::Marginal => "marginal",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Verdict::Certified, Verdict::NotFired, Verdict::Marginal]
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown verdict `{s}`")))
    }
}

/// Everything a threshold evaluation depends on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralInput {
    pub a: usize,
    pub b: usize,
    pub x: usize,
    pub y: usize,
    pub lambda2: f64,
    pub tol: f64,
}

impl SpectralInput {
    pub fn new(g: &BipartiteGraph, spectrum: &Spectrum) -> Self {
        SpectralInput {
            a: spectrum.a,
            b: spectrum.b,
            x: g.x_count(),
            y: g.y_count(),
            lambda2: spectrum.lambda2,
            tol: spectrum.tol,
        }
    }

    pub fn from_graph(g: &BipartiteGraph) -> Result<Self> {
        validate_biregular(g)?;
        Ok(Self::new(g, &singular_values(g)?))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub property: PropertyKind,
    pub k: Option<usize>,
    pub a: usize,
    pub b: usize,
    pub x: usize,
    pub y: usize,
    pub lambda2: f64,
    pub tol: f64,
    /// Threshold the verdict was decided against; `None` when the formula is
    /// undefined for these degrees.
    pub threshold: Option<f64>,
    /// Edge connectivity only: the part-size-dependent bound, when its side
    /// conditions `|X| > ⌈(b+1)/2⌉`, `|Y| > ⌈(a+1)/2⌉` hold.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threshold_eq1: Option<f64>,
    /// Edge connectivity only: the part-size-free bound.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threshold_eq2: Option<f64>,
    pub verdict: Verdict,
    pub strict: bool,
    pub hypothesis_ok: bool,
    /// Rigid packing only: a certified packing of `k` spanning rigid subgraphs
    /// also yields `k` edge-disjoint spanning 2-connected subgraphs.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub implies_two_connected_packing: bool,
}

fn decide(lambda2: f64, threshold: Option<f64>, strict: bool, hypothesis_ok: bool) -> Verdict {
    let Some(t) = threshold.filter(|t| t.is_finite()) else {
        return Verdict::NotFired;
    };
    if !hypothesis_ok {
        return Verdict::NotFired;
    }
    if (lambda2 - t).abs() < EPSILON {
        return Verdict::Marginal;
    }
    let fires = if strict {
        lambda2 < t - EPSILON
    } else {
        lambda2 <= t
    };
    if fires {
        Verdict::Certified
    } else {
        Verdict::NotFired
    }
}

fn base(input: &SpectralInput, property: PropertyKind, k: Option<usize>) -> Certificate {
    Certificate {
        property,
        k,
        a: input.a,
        b: input.b,
        x: input.x,
        y: input.y,
        lambda2: input.lambda2,
        tol: input.tol,
        threshold: None,
        threshold_eq1: None,
        threshold_eq2: None,
        verdict: Verdict::NotFired,
        strict: false,
        hypothesis_ok: false,
        implies_two_connected_packing: false,
    }
}

/// `⌈(d + shift)/2⌉` for small signed shifts, clamped at zero.
fn half_ceil(d: usize, shift: i64) -> u64 {
    let v = d as i64 + shift;
    if v <= 0 {
        0
    } else {
        (v as u64).div_ceil(2)
    }
}

/// Threshold from the part-size-dependent edge-connectivity bound, if its side
/// conditions hold.
pub fn edge_threshold_eq1(a: usize, b: usize, x: usize, y: usize, k: usize) -> Option<f64> {
    let ca = half_ceil(a, 1);
    let cb = half_ceil(b, 1);
    let (x, y) = (x as u64, y as u64);
    if x <= cb || y <= ca {
        return None;
    }
    let radicand = ca * cb * (x - cb) * (y - ca);
    let numer = (k as f64 - 1.0) * ((x * y) as f64).sqrt();
    Some(((a * b) as f64).sqrt() - numer / (2.0 * (radicand as f64).sqrt()))
}

pub fn edge_threshold_eq2(a: usize, b: usize, k: usize) -> f64 {
    let prod = half_ceil(a, 1) * half_ceil(b, 1);
    ((a * b) as f64).sqrt() - (k as f64 - 1.0) / (prod as f64).sqrt()
}

pub fn vertex_threshold(a: usize, b: usize, k: usize) -> Option<f64> {
    let max = a.max(b) as i64;
    let penalty = (k as i64 - 1) * max;
    let radicand = (a * b) as i64 - penalty;
    (radicand > 0)
        .then(|| ((a * b) as f64).sqrt() - penalty as f64 / (2.0 * (radicand as f64).sqrt()))
}

pub fn stp_threshold(a: usize, b: usize, k: usize) -> f64 {
    let prod = half_ceil(a, 1) * half_ceil(b, 1);
    ((a * b) as f64).sqrt() - k as f64 / (prod as f64).sqrt()
}

pub fn rigid_packing_threshold(a: usize, b: usize, k: usize) -> Option<f64> {
    let prod = half_ceil(a, -1) * half_ceil(b, -1);
    let numer = (3 * k + a.max(b)) as f64;
    (prod > 0).then(|| ((a * b) as f64).sqrt() - numer / (prod as f64).sqrt())
}

pub fn global_rigidity_threshold(a: usize, b: usize) -> Option<f64> {
    let prod = half_ceil(a, -2) * half_ceil(b, -2);
    let numer = (3 + a.max(b)) as f64;
    (prod > 0).then(|| ((a * b) as f64).sqrt() - numer / (prod as f64).sqrt())
}

pub fn ramanujan_bound(a: usize, b: usize) -> f64 {
    ((a.saturating_sub(1)) as f64).sqrt() + ((b.saturating_sub(1)) as f64).sqrt()
}

/// Simplified thresholds stated in terms of the spectral gap, without
/// ceilings. Each is never larger than its ceiling-form counterpart.
pub mod simplified {
    /// `gap > 2(k−1)/√((a+1)(b+1))`
    pub fn edge_threshold(a: usize, b: usize, k: usize) -> f64 {
        ((a * b) as f64).sqrt() - 2.0 * (k as f64 - 1.0) / (((a + 1) * (b + 1)) as f64).sqrt()
    }

    /// `gap ≥ 2k/√((a+1)(b+1))`
    pub fn stp_threshold(a: usize, b: usize, k: usize) -> f64 {
        ((a * b) as f64).sqrt() - 2.0 * k as f64 / (((a + 1) * (b + 1)) as f64).sqrt()
    }

    /// `gap ≥ (6k + 2·max{a,b})/√((a−1)(b−1))`, for `a, b ≥ 2`.
    pub fn rigid_packing_threshold(a: usize, b: usize, k: usize) -> f64 {
        let numer = (6 * k + 2 * a.max(b)) as f64;
        ((a * b) as f64).sqrt() - numer / (((a - 1) * (b - 1)) as f64).sqrt()
    }
}

pub fn certify_edge_connectivity(input: &SpectralInput, k: usize) -> Certificate {
    let mut cert = base(input, PropertyKind::EdgeConn, Some(k));
    cert.strict = true;
    cert.hypothesis_ok = k >= 1 && input.a >= k && input.b >= k;
    let eq1 = edge_threshold_eq1(input.a, input.b, input.x, input.y, k);
    let eq2 = edge_threshold_eq2(input.a, input.b, k);
    cert.threshold_eq1 = eq1;
    cert.threshold_eq2 = Some(eq2);
    cert.threshold = Some(eq1.map_or(eq2, |t1| t1.max(eq2)));
    cert.verdict = decide(input.lambda2, cert.threshold, true, cert.hypothesis_ok);
    cert
}

/// For `k = 1` connectivity and 1-edge-connectivity coincide, so the decision
/// is taken from the edge-connectivity bound.
pub fn certify_vertex_connectivity(input: &SpectralInput, k: usize) -> Certificate {
    if k == 1 {
        let edge = certify_edge_connectivity(input, 1);
        return Certificate {
            property: PropertyKind::VertexConn,
            ..edge
        };
    }
    let mut cert = base(input, PropertyKind::VertexConn, Some(k));
    cert.hypothesis_ok = k >= 2 && input.a.min(input.b) >= k;
    cert.threshold = vertex_threshold(input.a, input.b, k);
    cert.verdict = decide(input.lambda2, cert.threshold, false, cert.hypothesis_ok);
    cert
}

pub fn certify_stp(input: &SpectralInput, k: usize) -> Certificate {
    let mut cert = base(input, PropertyKind::TreePacking, Some(k));
    cert.hypothesis_ok = k >= 1 && input.a.min(input.b) >= 2 * k;
    cert.threshold = Some(stp_threshold(input.a, input.b, k));
    cert.verdict = decide(input.lambda2, cert.threshold, false, cert.hypothesis_ok);
    cert
}

pub fn certify_rigid_packing(input: &SpectralInput, k: usize) -> Certificate {
    let mut cert = base(input, PropertyKind::RigidPacking, Some(k));
    cert.hypothesis_ok = k >= 1 && input.a.min(input.b) >= 6 * k;
    cert.threshold = rigid_packing_threshold(input.a, input.b, k);
    cert.verdict = decide(input.lambda2, cert.threshold, false, cert.hypothesis_ok);
    cert.implies_two_connected_packing = cert.verdict == Verdict::Certified;
    cert
}

pub fn certify_global_rigidity(input: &SpectralInput) -> Certificate {
    let mut cert = base(input, PropertyKind::GlobalRigidity, None);
    cert.hypothesis_ok = input.a.min(input.b) >= 6;
    cert.threshold = global_rigidity_threshold(input.a, input.b);
    cert.verdict = decide(input.lambda2, cert.threshold, false, cert.hypothesis_ok);
    cert
}

/// Ramanujan is a classification rather than a sufficient condition, so the
/// ε-band counts in favour: `λ₂ ≤ √(a−1) + √(b−1) + ε`.
pub fn is_ramanujan(input: &SpectralInput) -> Certificate {
    let mut cert = base(input, PropertyKind::Ramanujan, None);
    let bound = ramanujan_bound(input.a, input.b);
    cert.hypothesis_ok = true;
    cert.threshold = Some(bound);
    cert.verdict = if input.lambda2 <= bound + EPSILON {
        Verdict::Certified
    } else {
        Verdict::NotFired
    };
    cert
}

/// Dispatches on `property`; `k` is ignored for properties without one.
pub fn certify(input: &SpectralInput, property: PropertyKind, k: usize) -> Certificate {
    match property {
        PropertyKind::EdgeConn => certify_edge_connectivity(input, k),
        PropertyKind::VertexConn => certify_vertex_connectivity(input, k),
        PropertyKind::TreePacking => certify_stp(input, k),
        PropertyKind::RigidPacking => certify_rigid_packing(input, k),
        PropertyKind::GlobalRigidity => certify_global_rigidity(input),
        PropertyKind::Ramanujan => is_ramanujan(input),
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::graph::{gen_builtin, Builtin};

    fn input(kind: Builtin) -> SpectralInput {
        SpectralInput::from_graph(&gen_builtin(kind).unwrap()).unwrap()
    }

    fn close(a: Option<f64>, b: f64) -> bool {
        a.is_some_and(|a| (a - b).abs() < 1e-12)
    }

    #[test]
    fn edge_connectivity_examples() {
        let c = certify_edge_connectivity(&input(Builtin::EvenCycle(6)), 2);
        assert!(close(c.threshold_eq2, 1.5));
        assert!(close(c.threshold_eq1, 1.25));
        assert!(close(c.threshold, 1.5));
        assert_eq!(c.verdict, Verdict::Certified);
        assert!(c.strict);

        let k33 = input(Builtin::CompleteBipartite(3, 3));
        let c = certify_edge_connectivity(&k33, 3);
        assert!(close(c.threshold_eq2, 2.0));
        assert_eq!(c.verdict, Verdict::Certified);

        let c = certify_edge_connectivity(&k33, 4);
        assert!(!c.hypothesis_ok);
        assert_eq!(c.verdict, Verdict::NotFired);
    }

    #[test]
    fn eq1_needs_large_parts() {
        // K_{3,3}: ⌈(3+1)/2⌉ = 2 < 3, so Eq. 1 applies; K_{2,2} it does not.
        assert!(edge_threshold_eq1(3, 3, 3, 3, 2).is_some());
        assert!(edge_threshold_eq1(2, 2, 2, 2, 2).is_none());
    }

    #[test]
    fn vertex_connectivity_examples() {
        let k33 = input(Builtin::CompleteBipartite(3, 3));
        let c = certify_vertex_connectivity(&k33, 3);
        assert!(close(c.threshold, 3.0 - 3f64.sqrt()));
        assert_eq!(c.verdict, Verdict::Certified);
        assert!(!c.strict);
        let c = certify_vertex_connectivity(&k33, 2);
        assert!(close(c.threshold, 3.0 - 3.0 / (2.0 * 6f64.sqrt())));
        assert_eq!(c.verdict, Verdict::Certified);
        let c = certify_vertex_connectivity(&input(Builtin::EvenCycle(6)), 2);
        assert!(close(c.threshold, 2.0 - 1.0 / 2f64.sqrt()));
        assert_eq!(c.verdict, Verdict::Certified);
        let c = certify_vertex_connectivity(&k33, 4);
        assert_eq!((c.hypothesis_ok, c.verdict), (false, Verdict::NotFired));
    }

    #[test]
    fn vertex_connectivity_k1_delegates() {
        let c = certify_vertex_connectivity(&input(Builtin::EvenCycle(6)), 1);
        assert_eq!(c.property, PropertyKind::VertexConn);
        assert!(c.strict);
        assert!(close(c.threshold, 2.0));
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn stp_examples() {
        let c = certify_stp(&input(Builtin::CompleteBipartite(4, 4)), 2);
        assert!(close(c.threshold, 4.0 - 2.0 / 3.0));
        assert_eq!(c.verdict, Verdict::Certified);
        let c6 = input(Builtin::EvenCycle(6));
        let c = certify_stp(&c6, 1);
        assert!(close(c.threshold, 1.5));
        assert_eq!(c.verdict, Verdict::Certified);
        assert_eq!(certify_stp(&c6, 2).verdict, Verdict::NotFired);
    }

    #[test]
    fn rigid_packing_examples() {
        let k66 = input(Builtin::CompleteBipartite(6, 6));
        let c = certify_rigid_packing(&k66, 1);
        assert!(close(c.threshold, 3.0));
        assert_eq!(c.verdict, Verdict::Certified);
        assert!(c.implies_two_connected_packing);
        let c = certify_rigid_packing(&input(Builtin::CompleteBipartite(12, 12)), 2);
        assert!(close(c.threshold, 9.0));
        assert_eq!(c.verdict, Verdict::Certified);
        let c = certify_rigid_packing(&k66, 2);
        assert_eq!((c.hypothesis_ok, c.verdict), (false, Verdict::NotFired));
    }

    #[test]
    fn global_rigidity_examples() {
        let c = certify_global_rigidity(&input(Builtin::CompleteBipartite(6, 6)));
        assert!(close(c.threshold, 1.5));
        assert_eq!(c.verdict, Verdict::Certified);
        let c = certify_global_rigidity(&input(Builtin::CompleteBipartite(7, 7)));
        assert!(close(c.threshold, 7.0 - 10.0 / 3.0));
        assert_eq!(c.verdict, Verdict::Certified);
        let c = certify_global_rigidity(&input(Builtin::Heawood));
        assert_eq!((c.hypothesis_ok, c.verdict), (false, Verdict::NotFired));
    }

    #[test]
    fn ramanujan_examples() {
        for kind in [
            Builtin::Heawood,
            Builtin::CompleteBipartite(3, 3),
            Builtin::EvenCycle(6),
        ] {
            assert_eq!(is_ramanujan(&input(kind)).verdict, Verdict::Certified);
        }
        let path_like = SpectralInput {
            a: 2,
            b: 2,
            x: 10,
            y: 10,
            lambda2: 2.0,
            tol: 1e-12,
        };
        assert_eq!(is_ramanujan(&path_like).verdict, Verdict::Certified);
        let bad = SpectralInput {
            lambda2: 2.1,
            ..path_like
        };
        assert_eq!(is_ramanujan(&bad).verdict, Verdict::NotFired);
    }

    #[test]
    fn marginal_band() {
        let mut inp = input(Builtin::EvenCycle(6));
        inp.lambda2 = 1.5 - 0.5 * EPSILON;
        assert_eq!(certify_edge_connectivity(&inp, 2).verdict, Verdict::Marginal);
        inp.lambda2 = 1.5 + 0.5 * EPSILON;
        assert_eq!(certify_stp(&inp, 1).verdict, Verdict::Marginal);
        inp.lambda2 = 1.5 - 2.0 * EPSILON;
        assert_eq!(certify_stp(&inp, 1).verdict, Verdict::Certified);
    }

    #[test]
    fn negative_threshold_never_fires() {
        // a = b = k = 9: 9 − 8·9/(2·√9) = −3.
        let inp = SpectralInput {
            a: 9,
            b: 9,
            x: 9,
            y: 9,
            lambda2: 0.0,
            tol: 1e-12,
        };
        let c = certify_vertex_connectivity(&inp, 9);
        assert!(c.hypothesis_ok);
        assert!(close(c.threshold, -3.0));
        assert_eq!(c.verdict, Verdict::NotFired);
    }

    #[test]
    fn property_names_round_trip() {
        for p in PropertyKind::ALL {
            assert_eq!(p.name().parse::<PropertyKind>().unwrap(), p);
            assert_eq!(serde_json::to_string(&p).unwrap(), format!("\"{}\"", p.name()));
        }
    }

    proptest! {
        #[test]
        fn thresholds_nonincreasing_in_k(a in 1usize..40, b in 1usize..40, x in 1usize..80, y in 1usize..80, k in 1usize..20) {
            prop_assert!(edge_threshold_eq2(a, b, k + 1) <= edge_threshold_eq2(a, b, k));
            if let (Some(t1), Some(t0)) = (edge_threshold_eq1(a, b, x, y, k + 1), edge_threshold_eq1(a, b, x, y, k)) {
                prop_assert!(t1 <= t0);
            }
            if let (Some(t1), Some(t0)) = (vertex_threshold(a, b, k + 1), vertex_threshold(a, b, k)) {
                prop_assert!(t1 <= t0);
            }
            prop_assert!(stp_threshold(a, b, k + 1) <= stp_threshold(a, b, k));
            if let (Some(t1), Some(t0)) = (rigid_packing_threshold(a, b, k + 1), rigid_packing_threshold(a, b, k)) {
                prop_assert!(t1 <= t0);
            }
        }

        #[test]
        fn certified_is_monotone_in_k(a in 2usize..30, b in 2usize..30, lambda2 in 0.0f64..30.0, k in 2usize..15) {
            let x = b * 3;
            let y = a * 3;
            let inp = SpectralInput { a, b, x, y, lambda2, tol: 1e-12 };
            type Cert = fn(&SpectralInput, usize) -> Certificate;
            let ops: [Cert; 4] = [certify_edge_connectivity, certify_vertex_connectivity, certify_stp, certify_rigid_packing];
            for op in ops {
                if op(&inp, k).verdict == Verdict::Certified {
                    for smaller in 1..k {
                        let c = op(&inp, smaller);
                        if c.hypothesis_ok {
                            prop_assert_eq!(c.verdict, Verdict::Certified);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn simplified_thresholds_never_exceed_ceiling_forms() {
        for a in 2..=64 {
            for b in 2..=64 {
                for k in 1..=a.min(b) {
                    assert!(simplified::edge_threshold(a, b, k) <= edge_threshold_eq2(a, b, k) + 1e-12);
                    assert!(simplified::stp_threshold(a, b, k) <= stp_threshold(a, b, k) + 1e-12);
                    let rigid = rigid_packing_threshold(a, b, k).unwrap();
                    assert!(simplified::rigid_packing_threshold(a, b, k) <= rigid + 1e-12);
                }
            }
        }
    }
}

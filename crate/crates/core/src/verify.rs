//! Seeded random matrices and exact cross-checking of every determinant
//! route against the permutation oracle.

use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use crate::core3d::{Axis, CubicMatrix, Index3};
use crate::determinant::{det_closed, det_permutation, sign_expansion, Sign};
use crate::error::{Error, Result};
use crate::io::serialize_text;
use crate::laplace::{det_laplace, expand_with_sign};
use crate::scalar::Scalar;

/// Largest entry bound accepted by the generator. Keeps every order-3
/// determinant (36 products of three entries) and its law checks inside
/// 64 bits.
pub const MAX_RANGE: i64 = 100_000;

/// splitmix64: `state += 0x9E3779B97F4A7C15` followed by the standard
/// xor-shift-multiply finaliser.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GenSpec {
    pub order: usize,
    pub seed: u64,
    /// Entries are drawn from the integers in `[-range, range]`.
    pub range: i64,
}

impl GenSpec {
    pub fn new(order: usize, seed: u64, range: i64) -> Result<Self> {
        crate::core3d::check_shape(crate::core3d::Dim3 { m: order, n: order, p: order })?;
        if !(1..=MAX_RANGE).contains(&range) {
            return Err(Error::InvalidRange(range));
        }
        Ok(GenSpec { order, seed, range })
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "--order {} --seed {} --range {}", self.order, self.seed, self.range)
    }
}

/// Deterministic matrix for `spec`: one splitmix64 draw per entry in
/// canonical layout order, mapped to `(draw mod (2R+1)) - R`. The small
/// modulo bias is irrelevant for identity checks.
pub fn random_cubic(spec: &GenSpec) -> CubicMatrix {
    let mut rng = SplitMix64::new(spec.seed);
    let width = 2 * spec.range as u64 + 1;
    CubicMatrix::from_fn(spec.order, |_| Scalar::from_int((rng.next_u64() % width) as i64 - spec.range))
        .expect("GenSpec validated the order")
}

/// FNV-1a over the canonical text form, prefixed with the order.
pub fn digest(a: &CubicMatrix) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in serialize_text(a).bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("order{}:{hash:016x}", a.order())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathResult {
    pub name: String,
    #[serde(serialize_with = "crate::io::serialize_scalar")]
    pub value: Scalar,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub subject: String,
    #[serde(serialize_with = "crate::io::serialize_scalar")]
    pub det_value: Scalar,
    pub paths: Vec<PathResult>,
    pub derived_laws: Vec<LawResult>,
    pub overall: bool,
}

impl VerifyReport {
    /// Derives per-path agreement and the overall verdict.
    pub fn assemble(
        subject: String,
        det_value: Scalar,
        paths: Vec<(String, Scalar)>,
        laws: Vec<(String, bool)>,
    ) -> Self {
        let paths: Vec<_> = paths
            .into_iter()
            .map(|(name, value)| PathResult { agrees: value == det_value, name, value })
            .collect();
        let derived_laws: Vec<_> = laws.into_iter().map(|(name, pass)| LawResult { name, pass }).collect();
        let overall = paths.iter().all(|p| p.agrees) && derived_laws.iter().all(|l| l.pass);
        VerifyReport { subject, det_value, paths, derived_laws, overall }
    }

    /// Re-evaluates agreement after paths or laws were edited in place.
    pub fn reassess(self) -> Self {
        let paths = self.paths.into_iter().map(|p| (p.name, p.value)).collect();
        let laws = self.derived_laws.into_iter().map(|l| (l.name, l.pass)).collect();
        Self::assemble(self.subject, self.det_value, paths, laws)
    }

    pub fn failing_paths(&self) -> Vec<&str> {
        self.paths.iter().filter(|p| !p.agrees).map(|p| p.name.as_str()).collect()
    }

    pub fn failing_laws(&self) -> Vec<&str> {
        self.derived_laws.iter().filter(|l| !l.pass).map(|l| l.name.as_str()).collect()
    }
}

pub fn path_name(axis: Axis, index: usize) -> String {
    format!("laplace:{}:{index}", axis.code())
}

/// Evaluates the closed form, the permutation oracle and every layer
/// expansion, then checks the derived layer laws against the oracle.
/// Only arithmetic overflow is an error; disagreements are report content.
pub fn cross_check(a: &CubicMatrix) -> Result<VerifyReport> {
    cross_check_with_sign(a, sign_expansion)
}

/// [`cross_check`] with the expansion sign replaced at the top level.
pub fn cross_check_with_sign(a: &CubicMatrix, sign: fn(Index3) -> Sign) -> Result<VerifyReport> {
    let oracle = det_permutation(a)?;
    let mut paths = vec![("closed".to_string(), det_closed(a)?), ("permutation".to_string(), oracle)];
    for axis in Axis::ALL {
        for index in 1..=a.order() {
            let value = if a.order() == 1 {
                det_laplace(a, axis, index)?
            } else {
                expand_with_sign(a, axis, index, sign)?.total
            };
            paths.push((path_name(axis, index), value));
        }
    }
    let laws = derived_laws(a, oracle)?;
    Ok(VerifyReport::assemble(digest(a), oracle, paths, laws))
}

fn derived_laws(a: &CubicMatrix, det: Scalar) -> Result<Vec<(String, bool)>> {
    let n = a.order();
    let c = Scalar::new(-3, 2)?;
    let scaled_det = det.checked_mul(c)?;
    let negated = det.checked_neg()?;

    let mut scaling = true;
    let mut zero = true;
    for axis in Axis::ALL {
        for index in 1..=n {
            scaling &= det_permutation(&a.scale_layer(axis, index, c)?)? == scaled_det;
            zero &= det_permutation(&a.scale_layer(axis, index, Scalar::ZERO)?)?.is_zero();
        }
    }

    let swap_law = |axis: Axis, expected: Scalar| -> Result<bool> {
        let mut ok = true;
        for x in 1..=n {
            for y in x + 1..=n {
                ok &= det_permutation(&a.swap_layers(axis, x, y)?)? == expected;
            }
        }
        Ok(ok)
    };

    Ok(vec![
        ("layer-scaling".to_string(), scaling),
        ("horizontal-swap-preserves".to_string(), swap_law(Axis::HorizontalLayer, det)?),
        ("page-swap-negates".to_string(), swap_law(Axis::VerticalPage, negated)?),
        ("vertical-layer-swap-negates".to_string(), swap_law(Axis::VerticalLayer, negated)?),
        ("zero-layer".to_string(), zero),
    ])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub spec: GenSpec,
    pub failing: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub trials_run: usize,
    pub failures: Vec<TrialFailure>,
}

impl BatchSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&TrialFailure> {
        self.failures.first()
    }
}

/// Per-trial specs: a master splitmix64 stream seeded with `seed` hands out
/// one trial seed per (order, trial) in argument order.
pub fn trial_specs(orders: &[usize], trials: usize, seed: u64, range: i64) -> Result<Vec<GenSpec>> {
    let mut master = SplitMix64::new(seed);
    let mut specs = Vec::with_capacity(orders.len() * trials);
    for &order in orders {
        for _ in 0..trials {
            specs.push(GenSpec::new(order, master.next_u64(), range)?);
        }
    }
    Ok(specs)
}

/// Runs [`cross_check`] on `trials` seeded matrices of each order.
pub fn batch_verify(orders: &[usize], trials: usize, seed: u64, range: i64) -> Result<BatchSummary> {
    batch_verify_with_sign(orders, trials, seed, range, sign_expansion)
}

pub fn batch_verify_with_sign(
    orders: &[usize],
    trials: usize,
    seed: u64,
    range: i64,
    sign: fn(Index3) -> Sign,
) -> Result<BatchSummary> {
    let specs = trial_specs(orders, trials, seed, range)?;
    let run = |(trial, spec): (usize, &GenSpec)| -> Option<TrialFailure> {
        let failing = match cross_check_with_sign(&random_cubic(spec), sign) {
            Ok(report) if report.overall => return None,
            Ok(report) => {
                report.failing_paths().into_iter().chain(report.failing_laws()).map(str::to_string).collect()
            }
            Err(e) => vec![format!("error: {e}")],
        };
        Some(TrialFailure { trial, spec: *spec, failing })
    };
    #[cfg(feature = "parallel")]
    let failures: Vec<_> = specs.par_iter().enumerate().filter_map(run).collect();
    #[cfg(not(feature = "parallel"))]
    let failures: Vec<_> = specs.iter().enumerate().filter_map(run).collect();
    Ok(BatchSummary { trials_run: specs.len(), failures })
}

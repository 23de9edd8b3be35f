//! Brute-force verification of the closed-form limits.
//!
//! The oracle never touches the quadratic algebra: it evaluates Condition 1
//! (Fraunhofer comparison) and Condition 2 (Friis SNR in dB) directly on a
//! uniform (D1, D2) grid over [0, √(λ d_min)/2]² and bisects the bandwidth
//! (or transmit power) over that feasibility predicate, so a bug shared with
//! the analytic path cannot confirm itself. Grid feasibility only ever
//! under-approximates the true region, so the oracle's limit sits at or
//! below the analytic one.

use crate::feasibility::{self, FeasibilityError};
use crate::linkbudget::{
    condition1_holds, condition2_holds, snr_at_distance, LinkBudgetError, LinkGeometry,
    RadioParams,
};
use thiserror::Error;

/// Reference carrier for the power oracle; the quantity it checks is
/// frequency-invariant, so any positive value works.
const REF_FREQUENCY_HZ: f64 = 300e9;
/// Reference minimum distance for the power oracle, same reasoning.
const REF_D_MIN_M: f64 = 10.0;
/// Hard cap for bracket expansion before the search gives up.
const MAX_BANDWIDTH_BRACKET_HZ: f64 = 1e24;
const POWER_BRACKET_DBM: (f64, f64) = (-600.0, 600.0);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("invalid oracle config: {0}")]
    InvalidConfig(String),
    #[error("no feasible design exists even at the smallest probed value")]
    NoFeasibleBandwidth,
    #[error("bracket expansion for {quantity} exhausted at {bound}")]
    BracketExhausted { quantity: &'static str, bound: f64 },
    #[error("bisection did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error(transparent)]
    LinkBudget(#[from] LinkBudgetError),
    #[error(transparent)]
    Feasibility(#[from] FeasibilityError),
}

/// Search resolution and stopping rules.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Grid points per antenna-size axis (>= 64).
    pub d_grid_points: usize,
    /// Relative width at which the bisection stops (0 < tol <= 1e-3).
    pub b_rel_tolerance: f64,
    /// Bound on bisection iterations.
    pub max_iterations: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            d_grid_points: 512,
            b_rel_tolerance: 1e-4,
            max_iterations: 200,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<(), OracleError> {
        if self.d_grid_points < 64 {
            return Err(OracleError::InvalidConfig(format!(
                "d_grid_points must be >= 64, got {}",
                self.d_grid_points
            )));
        }
        if !(self.b_rel_tolerance > 0.0 && self.b_rel_tolerance <= 1e-3) {
            return Err(OracleError::InvalidConfig(format!(
                "b_rel_tolerance must be in (0, 1e-3], got {}",
                self.b_rel_tolerance
            )));
        }
        if self.max_iterations == 0 {
            return Err(OracleError::InvalidConfig(
                "max_iterations must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// A grid pair that passed both condition checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridWitness {
    pub d1_m: f64,
    pub d2_m: f64,
    /// SNR headroom over the threshold at the cell edge, dB.
    pub snr_margin_db: f64,
}

/// Comparison of an analytic limit against the brute-force one.
///
/// `analytic` and `oracle` are in Hz for the bandwidth oracle and in dBm for
/// the required-power oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleVerdict {
    pub analytic: f64,
    pub oracle: f64,
    pub relative_gap: f64,
    pub witness_d1_m: f64,
    pub witness_d2_m: f64,
}

fn relative_gap(analytic: f64, oracle: f64) -> f64 {
    (analytic - oracle).abs() / analytic.abs().max(f64::MIN_POSITIVE)
}

/// Checks by direct grid search whether any (D1, D2) pair passes both
/// conditions at `bandwidth_hz`, returning the best-margin witness.
///
/// For each D1 the largest Condition-1-compliant D2 is the only candidate
/// worth checking: the cell-edge SNR grows with D2, so smaller values can
/// only do worse.
pub fn oracle_feasible(
    radio: &RadioParams,
    geom: &LinkGeometry,
    bandwidth_hz: f64,
    cfg: &OracleConfig,
) -> Result<Option<GridWitness>, OracleError> {
    cfg.validate()?;
    if !(bandwidth_hz.is_finite() && bandwidth_hz > 0.0) {
        return Err(OracleError::Feasibility(FeasibilityError::NotPositive {
            name: "bandwidth",
            value: bandwidth_hz,
        }));
    }
    let lambda = geom.wavelength_m();
    let x = (lambda * geom.d_min_m).sqrt() / 2.0;
    let n = cfg.d_grid_points;
    let step = x / (n - 1) as f64;

    let mut best: Option<GridWitness> = None;
    for i in 0..n {
        let d1 = i as f64 * step;
        // Largest grid D2 that keeps the pair far-field; i + j = n - 1 puts
        // the sum on the boundary, so at most a step or two of walk-down.
        let mut j = n - 1 - i;
        while j > 0 && !condition1_holds(geom, d1, j as f64 * step)? {
            j -= 1;
        }
        let d2 = j as f64 * step;
        if !condition1_holds(geom, d1, d2)? {
            continue;
        }
        if !condition2_holds(radio, geom, d1, d2, bandwidth_hz)? {
            continue;
        }
        let margin =
            snr_at_distance(radio, lambda, d1, d2, bandwidth_hz, geom.d_max_m)?
                - radio.snr_threshold_db;
        if best.map_or(true, |w| margin > w.snr_margin_db) {
            best = Some(GridWitness {
                d1_m: d1,
                d2_m: d2,
                snr_margin_db: margin,
            });
        }
    }
    Ok(best)
}

/// Largest feasible bandwidth per the grid oracle, compared against the
/// analytic general limit.
pub fn oracle_max_bandwidth(
    radio: &RadioParams,
    geom: &LinkGeometry,
    cfg: &OracleConfig,
) -> Result<OracleVerdict, OracleError> {
    cfg.validate()?;

    let mut lo = 1.0;
    let mut witness = match oracle_feasible(radio, geom, lo, cfg)? {
        Some(w) => w,
        None => return Err(OracleError::NoFeasibleBandwidth),
    };

    // The closed-form limit can exceed 1e16 Hz for strong radios, so the
    // upper bracket expands until infeasible.
    let mut hi = 1e16;
    while let Some(w) = oracle_feasible(radio, geom, hi, cfg)? {
        witness = w;
        lo = hi;
        hi *= 16.0;
        if hi > MAX_BANDWIDTH_BRACKET_HZ {
            return Err(OracleError::BracketExhausted {
                quantity: "bandwidth",
                bound: MAX_BANDWIDTH_BRACKET_HZ,
            });
        }
    }

    let mut iterations = 0;
    while hi / lo - 1.0 > cfg.b_rel_tolerance {
        if iterations >= cfg.max_iterations {
            return Err(OracleError::NoConvergence { iterations });
        }
        iterations += 1;
        let mid = (lo * hi).sqrt();
        match oracle_feasible(radio, geom, mid, cfg)? {
            Some(w) => {
                witness = w;
                lo = mid;
            }
            None => hi = mid,
        }
    }

    let analytic = feasibility::max_bandwidth_general(radio, geom).max_bandwidth_hz;
    Ok(OracleVerdict {
        analytic,
        oracle: lo,
        relative_gap: relative_gap(analytic, lo),
        witness_d1_m: witness.d1_m,
        witness_d2_m: witness.d2_m,
    })
}

/// Smallest transmit power (dBm) whose L-constrained grid feasibility admits
/// `bandwidth_hz`, compared against the closed-form required power.
///
/// The quantity is invariant in frequency and absolute distance, so the grid
/// runs at a fixed reference geometry with d_max = M·d_min.
pub fn oracle_required_power(
    bandwidth_hz: f64,
    m: f64,
    l: f64,
    snr_db: f64,
    nf_db: f64,
    temperature_k: f64,
    cfg: &OracleConfig,
) -> Result<OracleVerdict, OracleError> {
    cfg.validate()?;
    let analytic =
        feasibility::required_tx_power(bandwidth_hz, m, l, snr_db, nf_db, temperature_k)?;

    let geom = LinkGeometry::new(REF_FREQUENCY_HZ, REF_D_MIN_M, REF_D_MIN_M * m)?;
    let lambda = geom.wavelength_m();
    let x = (lambda * geom.d_min_m).sqrt() / 2.0;
    let d2_top = x / (1.0 + l);
    let n = cfg.d_grid_points;
    let step = d2_top / (n - 1) as f64;

    let feasible_at = |p_dbm: f64| -> Result<Option<GridWitness>, OracleError> {
        let radio = RadioParams::new(p_dbm, snr_db, nf_db, temperature_k)?;
        let mut best: Option<GridWitness> = None;
        for i in 1..n {
            let d2 = i as f64 * step;
            let d1 = l * d2;
            if !condition1_holds(&geom, d1, d2)? {
                continue;
            }
            if !condition2_holds(&radio, &geom, d1, d2, bandwidth_hz)? {
                continue;
            }
            let margin = snr_at_distance(&radio, lambda, d1, d2, bandwidth_hz, geom.d_max_m)?
                - radio.snr_threshold_db;
            if best.map_or(true, |w| margin > w.snr_margin_db) {
                best = Some(GridWitness {
                    d1_m: d1,
                    d2_m: d2,
                    snr_margin_db: margin,
                });
            }
        }
        Ok(best)
    };

    let (floor, ceil) = POWER_BRACKET_DBM;
    let mut lo = -150.0;
    let mut hi = 150.0;
    while feasible_at(lo)?.is_some() {
        hi = lo;
        lo -= 150.0;
        if lo < floor {
            return Err(OracleError::BracketExhausted {
                quantity: "transmit power",
                bound: floor,
            });
        }
    }
    let mut witness = loop {
        match feasible_at(hi)? {
            Some(w) => break w,
            None => {
                lo = hi;
                hi += 150.0;
                if hi > ceil {
                    return Err(OracleError::BracketExhausted {
                        quantity: "transmit power",
                        bound: ceil,
                    });
                }
            }
        }
    };

    let tol_db = 10.0 * (1.0 + cfg.b_rel_tolerance).log10();
    let mut iterations = 0;
    while hi - lo > tol_db {
        if iterations >= cfg.max_iterations {
            return Err(OracleError::NoConvergence { iterations });
        }
        iterations += 1;
        let mid = (lo + hi) / 2.0;
        match feasible_at(mid)? {
            Some(w) => {
                witness = w;
                hi = mid;
            }
            None => lo = mid,
        }
    }

    Ok(OracleVerdict {
        analytic,
        oracle: hi,
        relative_gap: relative_gap(analytic, hi),
        witness_d1_m: witness.d1_m,
        witness_d2_m: witness.d2_m,
    })
}

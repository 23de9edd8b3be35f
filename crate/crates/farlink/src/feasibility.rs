//! Closed-form feasibility limits for far-field links.
//!
//! Substituting D2 = √(λ d_min)/2 − D1 (Condition 1 at its limit) into the
//! cell-edge SNR requirement turns the joint condition system into a monic
//! quadratic in D1, D1² + p·D1 + q ≤ 0, with p = −√(λ d_min)/2 and
//! q = λ·d_max·√(Z)·10^(S_L/20), Z = N_F·k·T·B/P. A compliant antenna size
//! exists iff the discriminant (p/2)² − q is non-negative, which caps the
//! bandwidth; the tangent case pins the optimal symmetric design
//! D1 = D2 = √(λ d_min)/4. The mobile variants fix the receiver size
//! directly or through the size ratio L = D1/D2.

use crate::linkbudget::{LinkBudgetError, LinkGeometry, RadioParams};
use crate::units::BOLTZMANN;
use thiserror::Error;

/// Relative tolerance (vs q) under which a barely negative discriminant is
/// treated as the tangent case; absorbs f64 rounding when the probed
/// bandwidth sits exactly on the closed-form limit.
const DISCRIMINANT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FeasibilityError {
    #[error("{name} must be >= 1, got {value}")]
    BelowUnity { name: &'static str, value: f64 },
    #[error("{name} must be positive, got {value}")]
    NotPositive { name: &'static str, value: f64 },
    #[error(
        "no far-field design exists: rx size {d2_max_m} m outside (0, {limit_m} m) for this link"
    )]
    NoFarFieldDesign { d2_max_m: f64, limit_m: f64 },
    #[error(transparent)]
    LinkBudget(#[from] LinkBudgetError),
}

fn require_positive(name: &'static str, value: f64) -> Result<f64, FeasibilityError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(FeasibilityError::NotPositive { name, value })
    }
}

fn require_at_least_one(name: &'static str, value: f64) -> Result<f64, FeasibilityError> {
    if value.is_finite() && value >= 1.0 {
        Ok(value)
    } else {
        Err(FeasibilityError::BelowUnity { name, value })
    }
}

/// Which closed form produced a [`BandwidthLimit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Stationary,
    MobileRatio,
    MobileFixedRx,
    General,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::Stationary => "stationary",
            Regime::MobileRatio => "mobile_ratio",
            Regime::MobileFixedRx => "mobile_fixed_rx",
            Regime::General => "general",
        }
    }
}

/// A bandwidth cap together with the array sizes that attain it (when the
/// producing form pins them).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandwidthLimit {
    pub max_bandwidth_hz: f64,
    pub regime: Regime,
    pub optimal_d1_m: Option<f64>,
    pub optimal_d2_m: Option<f64>,
}

/// Outcome of solving the quadratic condition system for D1.
///
/// `feasible` holds exactly when the discriminant is non-negative; the root
/// interval `[root_low_x1_m, root_high_x2_m]` is the admissible D1 range and
/// is present only in that case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibilityReport {
    /// Linear coefficient p = −√(λ d_min)/2, m.
    pub p_m: f64,
    /// Constant coefficient q = λ·d_max·√(Z)·10^(S_L/20), m².
    pub q_m2: f64,
    /// (p/2)² − q, m².
    pub discriminant_m2: f64,
    pub feasible: bool,
    pub root_low_x1_m: Option<f64>,
    pub root_high_x2_m: Option<f64>,
}

/// Exponent-form factor 10^((P_dBm − S_L − N_F − 30)/10) shared by the
/// dB-parameterized limits.
fn db_chain_factor(ptx_dbm: f64, snr_db: f64, nf_db: f64) -> f64 {
    10f64.powf((ptx_dbm - snr_db - nf_db - 30.0) / 10.0)
}

/// Solves the admissible-D1 interval for a candidate bandwidth.
///
/// Infeasibility (negative discriminant) is a result, not an error, so
/// sweeps can record infeasible cells.
pub fn solve_d1_interval(
    radio: &RadioParams,
    geom: &LinkGeometry,
    bandwidth_hz: f64,
) -> Result<FeasibilityReport, FeasibilityError> {
    require_positive("bandwidth", bandwidth_hz)?;
    let lambda = geom.wavelength_m();
    let p = -(lambda * geom.d_min_m).sqrt() / 2.0;
    let z = radio.noise_factor() * BOLTZMANN * radio.temperature_k * bandwidth_hz
        / radio.ptx_watts();
    let q = lambda * geom.d_max_m * z.sqrt() * 10f64.powf(radio.snr_threshold_db / 20.0);

    let half_p = p / 2.0;
    let mut discriminant = half_p * half_p - q;
    if discriminant < 0.0 && discriminant >= -DISCRIMINANT_TOL * q {
        // Tangent case up to rounding.
        discriminant = 0.0;
    }

    if discriminant >= 0.0 {
        let s = discriminant.sqrt();
        // Both roots are non-negative (q > 0 and x1 + x2 = -p >= 0); clamp
        // the low root against rounding below zero when q is tiny.
        let x1 = (-half_p - s).max(0.0);
        let x2 = -half_p + s;
        Ok(FeasibilityReport {
            p_m: p,
            q_m2: q,
            discriminant_m2: discriminant,
            feasible: true,
            root_low_x1_m: Some(x1),
            root_high_x2_m: Some(x2),
        })
    } else {
        Ok(FeasibilityReport {
            p_m: p,
            q_m2: q,
            discriminant_m2: discriminant,
            feasible: false,
            root_low_x1_m: None,
            root_high_x2_m: None,
        })
    }
}

/// General bandwidth cap P·d_min²/(256·d_max²·10^(S_L/10)·N_F·k·T), with the
/// symmetric optimal design attached.
///
/// Depends on the distances only through their ratio and not on the carrier
/// frequency at all.
pub fn max_bandwidth_general(radio: &RadioParams, geom: &LinkGeometry) -> BandwidthLimit {
    let ratio = geom.d_min_m / geom.d_max_m;
    let b = radio.ptx_watts() * ratio * ratio
        / (256.0
            * 10f64.powf(radio.snr_threshold_db / 10.0)
            * radio.noise_factor()
            * BOLTZMANN
            * radio.temperature_k);
    let side = optimal_symmetric_size(geom.wavelength_m(), geom.d_min_m)
        .expect("link geometry is validated");
    BandwidthLimit {
        max_bandwidth_hz: b,
        regime: Regime::General,
        optimal_d1_m: Some(side),
        optimal_d2_m: Some(side),
    }
}

/// Stationary cap 10^((P_dBm − S_L − N_F − 30)/10)/(256·k·T).
///
/// Equals [`max_bandwidth_general`] with d_min = d_max; no geometry is
/// involved, so no array sizes are attached here.
pub fn max_bandwidth_stationary(radio: &RadioParams) -> BandwidthLimit {
    let b = db_chain_factor(radio.ptx_dbm, radio.snr_threshold_db, radio.noise_figure_db)
        / (256.0 * BOLTZMANN * radio.temperature_k);
    BandwidthLimit {
        max_bandwidth_hz: b,
        regime: Regime::Stationary,
        optimal_d1_m: None,
        optimal_d2_m: None,
    }
}

/// Optimal symmetric array side √(λ·d_min)/4; the resulting pair sits
/// exactly on the Fraunhofer boundary at d_min.
pub fn optimal_symmetric_size(lambda_m: f64, d_min_m: f64) -> Result<f64, FeasibilityError> {
    require_positive("wavelength", lambda_m)?;
    require_positive("d_min", d_min_m)?;
    Ok((lambda_m * d_min_m).sqrt() / 4.0)
}

/// Mobile cap when the receiver size is pinned to `d2_max_m`:
/// Q²/(4·k·T·λ²·d_max²)·10^((P − S_L − N_F − 30)/10) with
/// Q = D2·(√(λ d_min) − 2·D2).
pub fn max_bandwidth_mobile_fixed_rx(
    radio: &RadioParams,
    geom: &LinkGeometry,
    d2_max_m: f64,
) -> Result<BandwidthLimit, FeasibilityError> {
    let lambda = geom.wavelength_m();
    let sqrt_ld = (lambda * geom.d_min_m).sqrt();
    let limit = sqrt_ld / 2.0;
    if !(d2_max_m.is_finite() && d2_max_m > 0.0 && d2_max_m < limit) {
        return Err(FeasibilityError::NoFarFieldDesign {
            d2_max_m,
            limit_m: limit,
        });
    }
    let q = d2_max_m * (sqrt_ld - 2.0 * d2_max_m);
    let b = q * q
        / (4.0 * BOLTZMANN * radio.temperature_k * lambda * lambda * geom.d_max_m * geom.d_max_m)
        * db_chain_factor(radio.ptx_dbm, radio.snr_threshold_db, radio.noise_figure_db);
    Ok(BandwidthLimit {
        max_bandwidth_hz: b,
        regime: Regime::MobileFixedRx,
        optimal_d1_m: Some(limit - d2_max_m),
        optimal_d2_m: Some(d2_max_m),
    })
}

/// Factor by which mobility shrinks the stationary cap:
/// M²·(L+1)⁴/(16·L²). Unity only at M = L = 1.
pub fn mobility_penalty(m: f64, l: f64) -> Result<f64, FeasibilityError> {
    require_at_least_one("mobility coefficient", m)?;
    require_at_least_one("antenna inequality coefficient", l)?;
    let lp1 = l + 1.0;
    Ok(m * m * lp1 * lp1 * lp1 * lp1 / (16.0 * l * l))
}

/// Mobile cap via the size-ratio formulation: stationary cap divided by the
/// mobility penalty.
pub fn max_bandwidth_mobile(
    radio: &RadioParams,
    m: f64,
    l: f64,
) -> Result<BandwidthLimit, FeasibilityError> {
    let penalty = mobility_penalty(m, l)?;
    let b = max_bandwidth_stationary(radio).max_bandwidth_hz / penalty;
    Ok(BandwidthLimit {
        max_bandwidth_hz: b,
        regime: Regime::MobileRatio,
        optimal_d1_m: None,
        optimal_d2_m: None,
    })
}

/// Transmit power in dBm needed for a mobile link to sustain `bandwidth_hz`:
/// 30 + 10·log10(256) + S_L + N_F + 10·log10(kT) + 10·log10(B)
/// + 20·log10(M) + 20·log10((L+1)²/(4L)).
///
/// Exact inverse of [`max_bandwidth_mobile`]; the leading constant is kept
/// in closed form rather than the rounded 54.08.
pub fn required_tx_power(
    bandwidth_hz: f64,
    m: f64,
    l: f64,
    snr_db: f64,
    nf_db: f64,
    temperature_k: f64,
) -> Result<f64, FeasibilityError> {
    require_positive("bandwidth", bandwidth_hz)?;
    require_at_least_one("mobility coefficient", m)?;
    require_at_least_one("antenna inequality coefficient", l)?;
    require_positive("temperature", temperature_k)?;
    if !snr_db.is_finite() {
        return Err(FeasibilityError::NotPositive {
            name: "SNR threshold",
            value: snr_db,
        });
    }
    if !nf_db.is_finite() {
        return Err(FeasibilityError::NotPositive {
            name: "noise figure",
            value: nf_db,
        });
    }
    let lp1 = l + 1.0;
    Ok(30.0
        + 10.0 * 256f64.log10()
        + snr_db
        + nf_db
        + 10.0 * (BOLTZMANN * temperature_k).log10()
        + 10.0 * bandwidth_hz.log10()
        + 20.0 * m.log10()
        + 20.0 * (lp1 * lp1 / (4.0 * l)).log10())
}

/// Shannon capacity at a bandwidth cap: B·log2(1 + 10^(S_L/10)).
pub fn max_capacity(bandwidth_limit_hz: f64, snr_db: f64) -> f64 {
    bandwidth_limit_hz * (1.0 + 10f64.powf(snr_db / 10.0)).log2()
}

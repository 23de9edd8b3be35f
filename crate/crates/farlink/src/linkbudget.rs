//! Free-space SNR chain with square-array gains.
//!
//! This is the primitive evaluator shared by the closed forms and the
//! brute-force oracle: Friis spreading loss, aperture gains 4πD²/λ², thermal
//! noise B·N_F·k·T, and the two feasibility conditions — staying beyond the
//! two-array Fraunhofer distance at `d_min` (Condition 1) and meeting the
//! SNR threshold at `d_max` (Condition 2).
//!
//! Line-of-sight free-space propagation only; molecular absorption and
//! fading are outside the model.

use std::f64::consts::PI;

use crate::geometry::{self, GeometryError};
use crate::units::{self, BOLTZMANN};
use thiserror::Error;

/// Relative slack on the inclusive Condition-1 boundary, so designs sized
/// exactly on the Fraunhofer distance evaluate as far-field under f64
/// rounding. A real violation at the 1e-4 scale still fails decisively.
pub const FRAUNHOFER_BOUNDARY_TOL: f64 = 1e-9;

/// Slack in dB on the inclusive Condition-2 boundary, same purpose.
pub const SNR_BOUNDARY_TOL_DB: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinkBudgetError {
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("{name} must be positive, got {value}")]
    NotPositive { name: &'static str, value: f64 },
    #[error("noise factor must be >= 1, got {0}")]
    NoiseFactorBelowUnity(f64),
    #[error("distance interval requires 0 < d_min <= d_max, got [{d_min}, {d_max}]")]
    InvalidDistanceInterval { d_min: f64, d_max: f64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

fn require_finite(name: &'static str, value: f64) -> Result<f64, LinkBudgetError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(LinkBudgetError::NonFinite { name, value })
    }
}

fn require_positive(name: &'static str, value: f64) -> Result<f64, LinkBudgetError> {
    require_finite(name, value)?;
    if value > 0.0 {
        Ok(value)
    } else {
        Err(LinkBudgetError::NotPositive { name, value })
    }
}

/// Radio-side parameters of the link budget.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadioParams {
    /// Transmit power, dBm.
    pub ptx_dbm: f64,
    /// Cell-edge SNR threshold, dB.
    pub snr_threshold_db: f64,
    /// Receiver noise figure, dB.
    pub noise_figure_db: f64,
    /// System temperature, K.
    pub temperature_k: f64,
}

impl RadioParams {
    pub fn new(
        ptx_dbm: f64,
        snr_threshold_db: f64,
        noise_figure_db: f64,
        temperature_k: f64,
    ) -> Result<Self, LinkBudgetError> {
        require_finite("transmit power", ptx_dbm)?;
        require_finite("SNR threshold", snr_threshold_db)?;
        require_finite("noise figure", noise_figure_db)?;
        require_positive("temperature", temperature_k)?;
        Ok(Self {
            ptx_dbm,
            snr_threshold_db,
            noise_figure_db,
            temperature_k,
        })
    }

    /// Transmit power in watts.
    pub fn ptx_watts(&self) -> f64 {
        units::dbm_to_watts(self.ptx_dbm).expect("validated finite")
    }

    /// Noise factor (linear).
    pub fn noise_factor(&self) -> f64 {
        units::db_to_linear(self.noise_figure_db).expect("validated finite")
    }

    /// SNR threshold (linear).
    pub fn snr_threshold_linear(&self) -> f64 {
        units::db_to_linear(self.snr_threshold_db).expect("validated finite")
    }
}

/// Carrier and the distance interval the link must serve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkGeometry {
    /// Carrier frequency, Hz.
    pub frequency_hz: f64,
    /// Smallest separation, m.
    pub d_min_m: f64,
    /// Largest separation (cell edge), m.
    pub d_max_m: f64,
}

impl LinkGeometry {
    pub fn new(frequency_hz: f64, d_min_m: f64, d_max_m: f64) -> Result<Self, LinkBudgetError> {
        require_positive("frequency", frequency_hz)?;
        require_finite("d_min", d_min_m)?;
        require_finite("d_max", d_max_m)?;
        if !(d_min_m > 0.0 && d_min_m <= d_max_m) {
            return Err(LinkBudgetError::InvalidDistanceInterval {
                d_min: d_min_m,
                d_max: d_max_m,
            });
        }
        Ok(Self {
            frequency_hz,
            d_min_m,
            d_max_m,
        })
    }

    /// Stationary link: a single fixed range.
    pub fn stationary(frequency_hz: f64, d_m: f64) -> Result<Self, LinkBudgetError> {
        Self::new(frequency_hz, d_m, d_m)
    }

    /// Carrier wavelength, m.
    pub fn wavelength_m(&self) -> f64 {
        units::wavelength(self.frequency_hz).expect("validated positive")
    }

    /// Mobility coefficient M = d_max/d_min (>= 1).
    pub fn mobility_m(&self) -> f64 {
        self.d_max_m / self.d_min_m
    }
}

/// Aperture gain of a square array: 4πd²/λ².
pub fn array_gain(d_m: f64, lambda_m: f64) -> Result<f64, LinkBudgetError> {
    if !(lambda_m.is_finite() && lambda_m > 0.0) {
        return Err(LinkBudgetError::NotPositive {
            name: "wavelength",
            value: lambda_m,
        });
    }
    require_finite("array size", d_m)?;
    if d_m < 0.0 {
        return Err(LinkBudgetError::NotPositive {
            name: "array size",
            value: d_m,
        });
    }
    Ok(4.0 * PI * d_m * d_m / (lambda_m * lambda_m))
}

/// Receiver noise power: B·N_F·k·T.
pub fn noise_power(nf_linear: f64, temperature_k: f64, bandwidth_hz: f64) -> Result<f64, LinkBudgetError> {
    require_finite("noise factor", nf_linear)?;
    if nf_linear < 1.0 {
        return Err(LinkBudgetError::NoiseFactorBelowUnity(nf_linear));
    }
    require_positive("temperature", temperature_k)?;
    require_positive("bandwidth", bandwidth_hz)?;
    Ok(bandwidth_hz * nf_linear * BOLTZMANN * temperature_k)
}

/// SNR in dB of the Friis chain at separation `d_m`:
/// 10·log10(P·G1·G2·(λ/4πd)²/N0).
pub fn snr_at_distance(
    radio: &RadioParams,
    lambda_m: f64,
    d1_m: f64,
    d2_m: f64,
    bandwidth_hz: f64,
    d_m: f64,
) -> Result<f64, LinkBudgetError> {
    require_positive("wavelength", lambda_m)?;
    require_positive("tx array size", d1_m)?;
    require_positive("rx array size", d2_m)?;
    require_positive("distance", d_m)?;
    let g1 = array_gain(d1_m, lambda_m)?;
    let g2 = array_gain(d2_m, lambda_m)?;
    let n0 = noise_power(radio.noise_factor(), radio.temperature_k, bandwidth_hz)?;
    let spreading = lambda_m / (4.0 * PI * d_m);
    let snr_linear = radio.ptx_watts() * g1 * g2 * spreading * spreading / n0;
    Ok(10.0 * snr_linear.log10())
}

/// Condition 1: the whole interval is far-field, d_min >= 4(D1+D2)²/λ.
pub fn condition1_holds(
    geom: &LinkGeometry,
    d1_m: f64,
    d2_m: f64,
) -> Result<bool, LinkBudgetError> {
    let d_f = geometry::fraunhofer_two_arrays(d1_m, d2_m, geom.wavelength_m())?;
    Ok(d_f <= geom.d_min_m * (1.0 + FRAUNHOFER_BOUNDARY_TOL))
}

/// Condition 2: the SNR threshold is met at the cell edge, S(d_max) >= S_L.
///
/// SNR is monotone decreasing in distance, so the check at d_max covers the
/// whole interval.
pub fn condition2_holds(
    radio: &RadioParams,
    geom: &LinkGeometry,
    d1_m: f64,
    d2_m: f64,
    bandwidth_hz: f64,
) -> Result<bool, LinkBudgetError> {
    require_positive("bandwidth", bandwidth_hz)?;
    require_finite("tx array size", d1_m)?;
    require_finite("rx array size", d2_m)?;
    if d1_m <= 0.0 || d2_m <= 0.0 {
        // Zero aperture has zero gain and cannot meet a finite threshold.
        return Ok(false);
    }
    let snr_db = snr_at_distance(
        radio,
        geom.wavelength_m(),
        d1_m,
        d2_m,
        bandwidth_hz,
        geom.d_max_m,
    )?;
    Ok(snr_db >= radio.snr_threshold_db - SNR_BOUNDARY_TOL_DB)
}

/// Condition 2 in product form: D1·D2 >= λ·d_max·√(N_F·k·T·B/P)·10^(S_L/20).
///
/// Algebraically equivalent to [`condition2_holds`]; kept as a second route
/// so the two can be cross-checked.
pub fn condition2_product_holds(
    radio: &RadioParams,
    geom: &LinkGeometry,
    d1_m: f64,
    d2_m: f64,
    bandwidth_hz: f64,
) -> Result<bool, LinkBudgetError> {
    require_positive("bandwidth", bandwidth_hz)?;
    require_finite("tx array size", d1_m)?;
    require_finite("rx array size", d2_m)?;
    if d1_m < 0.0 || d2_m < 0.0 {
        return Err(LinkBudgetError::NotPositive {
            name: "array size",
            value: d1_m.min(d2_m),
        });
    }
    let z = radio.noise_factor() * BOLTZMANN * radio.temperature_k * bandwidth_hz
        / radio.ptx_watts();
    let required = geom.wavelength_m()
        * geom.d_max_m
        * z.sqrt()
        * 10f64.powf(radio.snr_threshold_db / 20.0);
    // Same boundary slack as the SNR route: S >= S_L - tol in dB maps to a
    // 10^(-tol/20) factor on the required product.
    Ok(d1_m * d2_m >= required * 10f64.powf(-SNR_BOUNDARY_TOL_DB / 20.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn radio() -> RadioParams {
        RadioParams::new(-10.0, 20.0, 10.0, 296.0).unwrap()
    }

    #[test]
    fn radio_params_validation() {
        assert!(RadioParams::new(f64::NAN, 20.0, 10.0, 296.0).is_err());
        assert!(RadioParams::new(0.0, 20.0, 10.0, 0.0).is_err());
        assert!(RadioParams::new(0.0, 20.0, 10.0, -3.0).is_err());
    }

    #[test]
    fn link_geometry_validation() {
        assert!(LinkGeometry::new(300e9, 0.0, 10.0).is_err());
        assert!(LinkGeometry::new(300e9, 20.0, 10.0).is_err());
        assert!(LinkGeometry::new(0.0, 1.0, 10.0).is_err());
        let g = LinkGeometry::new(300e9, 2.0, 100.0).unwrap();
        assert_relative_eq!(g.mobility_m(), 50.0, max_relative = 1e-12);
    }

    #[test]
    fn gain_examples() {
        // Single element: D = λ/2 gives G = π.
        assert_relative_eq!(
            array_gain(0.5e-3, 1e-3).unwrap(),
            PI,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            array_gain(0.05, 1e-3).unwrap(),
            4.0 * PI * 2500.0,
            max_relative = 1e-12
        );
        assert_eq!(array_gain(0.0, 1e-3).unwrap(), 0.0);
        assert!(array_gain(0.05, 0.0).is_err());
        assert!(array_gain(-0.05, 1e-3).is_err());
    }

    #[test]
    fn gain_matches_element_count_form() {
        // With λ a power of two, D = λN/2 is exact and G should equal πN².
        let lambda = 2f64.powi(-10);
        for n in [1u32, 2, 7, 100, 999] {
            let d = lambda * n as f64 / 2.0;
            let gain = array_gain(d, lambda).unwrap();
            assert_relative_eq!(gain, PI * (n * n) as f64, max_relative = 1e-14);
        }
    }

    #[test]
    fn noise_power_examples() {
        assert_relative_eq!(
            noise_power(1.0, 290.0, 1.0).unwrap(),
            4.0038821e-21,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            noise_power(10.0, 296.0, 1e9).unwrap(),
            4.08672104e-11,
            max_relative = 1e-12
        );
        // Doubling bandwidth doubles the output exactly.
        let single = noise_power(7.0, 296.0, 1e9).unwrap();
        let double = noise_power(7.0, 296.0, 2e9).unwrap();
        assert_eq!(double, 2.0 * single);
        assert!(noise_power(10.0, 296.0, 0.0).is_err());
        assert!(noise_power(10.0, 0.0, 1e9).is_err());
        assert!(noise_power(0.5, 296.0, 1e9).is_err());
    }

    #[test]
    fn halving_distance_adds_six_db() {
        let r = radio();
        let lambda = 1e-3;
        let a = snr_at_distance(&r, lambda, 0.05, 0.05, 1e9, 100.0).unwrap();
        let b = snr_at_distance(&r, lambda, 0.05, 0.05, 1e9, 50.0).unwrap();
        assert_relative_eq!(b - a, 6.020599913279624, max_relative = 1e-9);
    }

    #[test]
    fn single_element_spreading_cancels_gains() {
        // With G1 = G2 = π and d = λ/4, the FSPL factor is 1/π², so the SNR
        // collapses to P/N0.
        let r = RadioParams::new(0.0, 0.0, 0.0, 296.0).unwrap();
        let lambda = 1e-3;
        let b = 1e9;
        let snr = snr_at_distance(&r, lambda, lambda / 2.0, lambda / 2.0, b, lambda / 4.0).unwrap();
        let n0 = noise_power(1.0, 296.0, b).unwrap();
        let expected = 10.0 * (r.ptx_watts() / n0).log10();
        assert_relative_eq!(snr, expected, max_relative = 1e-12);
    }

    #[test]
    fn symmetric_optimum_is_snr_tight_at_the_limit() {
        // The discriminant-zero design evaluated at the closed-form
        // stationary limit must sit exactly on the SNR threshold.
        let r = radio();
        let lambda = crate::units::wavelength(300e9).unwrap();
        let d = 200.0;
        let side = (lambda * d).sqrt() / 4.0;
        let b_limit = 95583964791.48965; // frozen from 10^((-10-20-10-30)/10)/(256 k 296)
        let snr = snr_at_distance(&r, lambda, side, side, b_limit, d).unwrap();
        assert!((snr - 20.0).abs() < 1e-9, "snr = {snr}");
    }

    #[test]
    fn condition1_boundary_inclusive() {
        let geom = LinkGeometry::new(300e9, 10.0, 100.0).unwrap();
        let side = (geom.wavelength_m() * geom.d_min_m).sqrt() / 4.0;
        assert!(condition1_holds(&geom, side, side).unwrap());
        assert!(!condition1_holds(&geom, side * 1.01, side * 1.01).unwrap());
        assert!(condition1_holds(&geom, 0.0, 0.0).unwrap());
    }

    #[test]
    fn condition2_zero_aperture_fails() {
        let geom = LinkGeometry::new(300e9, 10.0, 100.0).unwrap();
        assert!(!condition2_holds(&radio(), &geom, 0.0, 0.05, 1e9).unwrap());
    }

    #[test]
    fn condition2_fails_for_huge_bandwidth() {
        let geom = LinkGeometry::new(300e9, 10.0, 100.0).unwrap();
        assert!(!condition2_holds(&radio(), &geom, 0.05, 0.05, 1e20).unwrap());
    }

    #[test]
    fn condition2_tight_at_stationary_limit() {
        let r = radio();
        let geom = LinkGeometry::stationary(300e9, 200.0).unwrap();
        let side = (geom.wavelength_m() * geom.d_min_m).sqrt() / 4.0;
        let b_limit = 95583964791.48965;
        assert!(condition2_holds(&r, &geom, side, side, b_limit).unwrap());
        assert!(condition2_product_holds(&r, &geom, side, side, b_limit).unwrap());
        assert!(!condition2_holds(&r, &geom, side, side, b_limit * 1.0001).unwrap());
    }

    proptest! {
        #[test]
        fn snr_and_product_forms_agree(
            ptx_dbm in -20.0f64..40.0,
            snr_db in 0.0f64..40.0,
            nf_db in 0.0f64..30.0,
            freq in 1e11f64..1e12,
            d_min in 0.5f64..20.0,
            m in 1.0f64..100.0,
            d1 in 1e-4f64..0.5,
            d2 in 1e-4f64..0.5,
            b in 1e6f64..1e12,
        ) {
            let r = RadioParams::new(ptx_dbm, snr_db, nf_db, 296.0).unwrap();
            let geom = LinkGeometry::new(freq, d_min, d_min * m).unwrap();
            let snr = snr_at_distance(&r, geom.wavelength_m(), d1, d2, b, geom.d_max_m).unwrap();
            // Only compare away from the boundary where rounding could
            // legitimately flip one route.
            prop_assume!((snr - snr_db).abs() > 1e-9);
            let via_snr = condition2_holds(&r, &geom, d1, d2, b).unwrap();
            let via_product = condition2_product_holds(&r, &geom, d1, d2, b).unwrap();
            prop_assert_eq!(via_snr, via_product);
        }

        #[test]
        fn snr_minimized_at_cell_edge(
            d1 in 1e-3f64..0.5,
            d2 in 1e-3f64..0.5,
            b in 1e6f64..1e11,
            steps in 2usize..20,
        ) {
            let r = radio();
            let geom = LinkGeometry::new(300e9, 1.0, 100.0).unwrap();
            let lambda = geom.wavelength_m();
            let at_edge = snr_at_distance(&r, lambda, d1, d2, b, geom.d_max_m).unwrap();
            for k in 0..steps {
                let d = geom.d_min_m
                    + (geom.d_max_m - geom.d_min_m) * k as f64 / steps as f64;
                let s = snr_at_distance(&r, lambda, d1, d2, b, d).unwrap();
                prop_assert!(s >= at_edge);
            }
        }
    }
}

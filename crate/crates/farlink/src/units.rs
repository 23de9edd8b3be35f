//! Unit conversions and physical constants.
//!
//! Every other module computes in SI units (W, Hz, m, K); decibel scales
//! cross into linear space only through the functions here.

use thiserror::Error;

/// Boltzmann constant, J/K (exact SI value).
pub const BOLTZMANN: f64 = 1.380649e-23;

/// Speed of light in vacuum, m/s (exact SI value).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Out-of-domain input to a unit conversion.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum UnitError {
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("{name} must be positive, got {value}")]
    NotPositive { name: &'static str, value: f64 },
}

fn check_finite(name: &'static str, value: f64) -> Result<f64, UnitError> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(UnitError::NonFinite { name, value })
    }
}

/// Converts a ratio in dB to linear scale: 10^(x/10).
pub fn db_to_linear(x_db: f64) -> Result<f64, UnitError> {
    check_finite("dB ratio", x_db)?;
    Ok(10f64.powf(x_db / 10.0))
}

/// Converts a positive linear ratio to dB: 10·log10(x).
pub fn linear_to_db(x: f64) -> Result<f64, UnitError> {
    check_finite("linear ratio", x)?;
    if x <= 0.0 {
        return Err(UnitError::NotPositive {
            name: "linear ratio",
            value: x,
        });
    }
    Ok(10.0 * x.log10())
}

/// Converts a power in dBm to watts.
pub fn dbm_to_watts(p_dbm: f64) -> Result<f64, UnitError> {
    check_finite("power in dBm", p_dbm)?;
    // Same exponent arithmetic as db_to_linear, shifted by the 1 mW reference,
    // so dbm_to_watts(p) == db_to_linear(p) / 1000 bit-for-bit.
    Ok(10f64.powf(p_dbm / 10.0) / 1000.0)
}

/// Wavelength in meters of a carrier at `frequency_hz`.
pub fn wavelength(frequency_hz: f64) -> Result<f64, UnitError> {
    check_finite("frequency", frequency_hz)?;
    if frequency_hz <= 0.0 {
        return Err(UnitError::NotPositive {
            name: "frequency",
            value: frequency_hz,
        });
    }
    Ok(SPEED_OF_LIGHT / frequency_hz)
}

//! Square-array geometry and the near-field/far-field boundary.
//!
//! The classic Fraunhofer distance 2D²/λ assumes a point receiver. With
//! square arrays on both ends the boundary is set by the joint aperture:
//! 4(D1+D2)²/λ, equivalently λ(N1+N2)² at half-wavelength element spacing.
//! Element counts stay continuous in all analysis paths; only
//! [`SquareArray::realizable_elements`] rounds down to a buildable count.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeometryError {
    #[error("wavelength must be positive, got {0} m")]
    NonPositiveWavelength(f64),
    #[error("{name} must be non-negative, got {value}")]
    NegativeLength { name: &'static str, value: f64 },
    #[error("{name} must be non-negative, got {value}")]
    NegativeCount { name: &'static str, value: f64 },
}

fn check_wavelength(lambda_m: f64) -> Result<(), GeometryError> {
    if lambda_m.is_finite() && lambda_m > 0.0 {
        Ok(())
    } else {
        Err(GeometryError::NonPositiveWavelength(lambda_m))
    }
}

fn check_length(name: &'static str, value: f64) -> Result<(), GeometryError> {
    if value.is_finite() && value >= 0.0 {
        Ok(())
    } else {
        Err(GeometryError::NegativeLength { name, value })
    }
}

/// A square planar array with half-wavelength element spacing.
///
/// `elements_per_side` is continuous: the closed forms treat the array side
/// as a free real variable and integer-snapping would perturb them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SquareArray {
    /// Physical side length, m.
    pub side_m: f64,
    /// Elements per side (continuous).
    pub elements_per_side: f64,
}

impl SquareArray {
    /// Builds an array from its physical side length.
    pub fn from_side(side_m: f64, lambda_m: f64) -> Result<Self, GeometryError> {
        let elements_per_side = elements_from_size(side_m, lambda_m)?;
        Ok(Self {
            side_m,
            elements_per_side,
        })
    }

    /// Builds an array from a (continuous) element count per side.
    pub fn from_elements(elements_per_side: f64, lambda_m: f64) -> Result<Self, GeometryError> {
        check_wavelength(lambda_m)?;
        if !(elements_per_side.is_finite() && elements_per_side >= 0.0) {
            return Err(GeometryError::NegativeCount {
                name: "elements per side",
                value: elements_per_side,
            });
        }
        Ok(Self {
            side_m: lambda_m / 2.0 * elements_per_side,
            elements_per_side,
        })
    }

    /// Largest whole element count that fits the side.
    pub fn realizable_elements(&self) -> u64 {
        self.elements_per_side.floor() as u64
    }
}

/// A transmit/receive array pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayPair {
    pub tx: SquareArray,
    pub rx: SquareArray,
}

impl ArrayPair {
    pub fn new(tx: SquareArray, rx: SquareArray) -> Self {
        Self { tx, rx }
    }

    /// Antenna inequality coefficient L = D1/D2 (requires rx side > 0).
    pub fn inequality_l(&self) -> Option<f64> {
        if self.rx.side_m > 0.0 {
            Some(self.tx.side_m / self.rx.side_m)
        } else {
            None
        }
    }
}

/// Classic single-aperture Fraunhofer distance 2d²/λ (point receiver).
pub fn fraunhofer_classic(d_m: f64, lambda_m: f64) -> Result<f64, GeometryError> {
    check_wavelength(lambda_m)?;
    check_length("aperture size", d_m)?;
    Ok(2.0 * d_m * d_m / lambda_m)
}

/// Two-array Fraunhofer distance 4(d1+d2)²/λ.
pub fn fraunhofer_two_arrays(d1_m: f64, d2_m: f64, lambda_m: f64) -> Result<f64, GeometryError> {
    check_wavelength(lambda_m)?;
    check_length("tx array size", d1_m)?;
    check_length("rx array size", d2_m)?;
    let sum = d1_m + d2_m;
    Ok(4.0 * sum * sum / lambda_m)
}

/// Two-array Fraunhofer distance in element-count form: λ(n1+n2)².
pub fn fraunhofer_from_elements(n1: f64, n2: f64, lambda_m: f64) -> Result<f64, GeometryError> {
    check_wavelength(lambda_m)?;
    check_length("tx element count", n1)?;
    check_length("rx element count", n2)?;
    let sum = n1 + n2;
    Ok(lambda_m * sum * sum)
}

/// Continuous element count per side for a given physical size: 2d/λ.
pub fn elements_from_size(d_m: f64, lambda_m: f64) -> Result<f64, GeometryError> {
    check_wavelength(lambda_m)?;
    check_length("array size", d_m)?;
    Ok(2.0 * d_m / lambda_m)
}

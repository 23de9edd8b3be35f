//! Far-field feasibility analysis for terahertz wireless links.
//!
//! A link between two square antenna arrays is only "far-field" beyond the
//! Fraunhofer distance of the pair, and only useful while the cell-edge SNR
//! stays above a threshold. Squeezing a design between those two constraints
//! caps the signal bandwidth, and this crate computes that cap from first
//! principles:
//!
//! - [`geometry`] — square-array sizing and the two-array Fraunhofer boundary;
//! - [`linkbudget`] — the free-space SNR chain and the two feasibility
//!   conditions evaluated directly;
//! - [`feasibility`] — closed-form bandwidth limits (stationary, mobile,
//!   fixed-UE), the admissible antenna-size interval, and required transmit
//!   power;
//! - [`oracle`] — independent brute-force verification of every closed form
//!   by grid search plus bisection over the direct condition checks;
//! - [`sweep`] — scenario presets that reproduce the reference figure
//!   datasets as CSV/JSON tables;
//! - [`cli`] — the `farlink` command-line frontend.
//!
//! All internal math is in SI units (W, Hz, m, K); dB and dBm appear only at
//! the boundaries via [`units`].

pub mod cli;
pub mod feasibility;
pub mod geometry;
pub mod linkbudget;
pub mod oracle;
pub mod scenario;
pub mod sweep;
pub mod units;

//! Harmonic-balance reference frequencies used in the comparison tables.

use std::f64::consts::FRAC_PI_4;

use crate::error::{Error, Result};
use crate::iaff::{first_harmonic_projection, FrequencyEstimate};
use crate::model::OscillatorSpec;
use crate::numerics::ToleranceProfile;

/// First-order harmonic balance: assume `u = A cos ωt` and balance the
/// fundamental, giving `ω² = (4/(πA))·∫₀^{π/2} f(A cos θ) cos θ dθ`.
///
/// For any odd spec this coincides with the Galerkin-closed collocation
/// frequency [`crate::iaff::frequency`]; it is kept as a separate route so
/// the identity can be checked rather than assumed.
pub fn hb1_frequency(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<FrequencyEstimate> {
    if !(amplitude > 0.0) {
        return Err(Error::Domain(format!(
            "amplitude must be > 0, got {amplitude}"
        )));
    }
    let projection = first_harmonic_projection(spec, amplitude, tol)?;
    let omega_sq = projection / (amplitude * FRAC_PI_4);
    if !(omega_sq > 0.0) {
        return Err(Error::NonOscillatory {
            amplitude,
            reason: format!("harmonic balance gives omega^2 = {omega_sq} <= 0"),
        });
    }
    Ok(FrequencyEstimate {
        omega: omega_sq.sqrt(),
        k: None,
        method: "hb1".into(),
        galerkin_residual: 0.0,
        iterations: 0,
    })
}

/// Closed-form first-order harmonic-balance frequency of the stretched-wire
/// oscillator `u'' + u − λu/√(1+u²) = 0`:
///
/// `ω = √(1 − λ/√(1 + (3/4)A²))`
///
/// (Beléndez et al., J. Sound Vib. 302 (2007) 1018–1029.)
pub fn belendez_wire_frequency(lambda: f64, amplitude: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::Domain(format!(
            "lambda must satisfy 0 < lambda <= 1, got {lambda}"
        )));
    }
    if !(amplitude > 0.0) {
        return Err(Error::Domain(format!(
            "amplitude must be > 0, got {amplitude}"
        )));
    }
    Ok((1.0 - lambda / (1.0 + 0.75 * amplitude * amplitude).sqrt()).sqrt())
}

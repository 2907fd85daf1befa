//! Reference-exact periods via two independent routes: quadrature of the
//! energy integral with the turning-point singularity removed analytically,
//! and direct adaptive ODE integration with event detection. The two must
//! agree; every approximate method is judged against them.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::model::{ForceTerm, OscillatorSpec, Parity};
use crate::numerics::{integrate, ToleranceProfile};
use crate::ode::{detect_period, PeriodEvent};

/// Trajectory of `u'' + f(u) = 0` from `(u, u') = (A, 0)` up to the
/// detected period event.
#[derive(Debug, Clone)]
pub struct OdeSolution {
    /// (t, u, u') at every accepted step, ending with the refined event.
    pub samples: Vec<(f64, f64, f64)>,
    /// Detected period.
    pub period: f64,
    /// |event function| after bisection refinement.
    pub event_residual: f64,
}

fn require_positive_amplitude(amplitude: f64) -> Result<()> {
    if amplitude > 0.0 && amplitude.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "amplitude must be > 0, got {amplitude}"
        )))
    }
}

fn has_even_term(spec: &OscillatorSpec) -> bool {
    spec.terms()
        .iter()
        .any(|t| matches!(t, ForceTerm::EvenPower { coeff, .. } if *coeff != 0.0))
}

/// Period from the energy integral
/// `T = 4·∫₀^{A} du/√(2(V(A) − V(u)))`
/// computed with the substitution `u = A sin φ`, which turns the
/// turning-point square-root singularity into a finite integrand with
/// limit `√(A/f(A))` at φ = π/2.
///
/// Requires an odd restoring force (decompose mixed-parity systems into
/// branches first) that is restoring over the whole swing:
/// `V(A) > V(u)` for `0 ≤ u < A`.
pub fn period_quadrature(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<f64> {
    require_positive_amplitude(amplitude)?;
    if has_even_term(spec) {
        return Err(Error::Domain(
            "energy-integral period requires an odd force; \
             decompose mixed-parity specs into branches first"
                .into(),
        ));
    }

    let v_total = spec.potential(amplitude);
    let f_at_a = spec.force(amplitude);
    // Restoring-force check on a grid across the swing.
    for i in 0..64 {
        let u = amplitude * i as f64 / 64.0;
        if spec.potential(u) >= v_total {
            return Err(Error::NonOscillatory {
                amplitude,
                reason: format!(
                    "potential at u = {u} is not below the turning-point \
                     energy; the motion does not span [0, A]"
                ),
            });
        }
    }
    if !(f_at_a > 0.0) {
        return Err(Error::NonOscillatory {
            amplitude,
            reason: format!("force at the turning point is {f_at_a} <= 0"),
        });
    }

    let turning_limit = (amplitude / f_at_a).sqrt();
    let integrand = |phi: f64| {
        let radicand = 2.0 * (v_total - spec.potential(amplitude * phi.sin()));
        if radicand > 0.0 {
            amplitude * phi.cos() / radicand.sqrt()
        } else {
            // Rounding can drive the radicand to zero only in the last few
            // ulps before φ = π/2, where the integrand equals its limit.
            turning_limit
        }
    };
    Ok(4.0 * integrate(integrand, 0.0, FRAC_PI_2, tol)?)
}

/// Trajectory-based period: integrate the equation of motion and detect
/// the period event.
///
/// Odd specs measure the first zero crossing (a quarter period). Mixed
/// specs integrate the piecewise half-cycle reconstruction — the plus
/// branch on u ≥ 0 and the minus branch on u < 0 — over one full cycle
/// (second turning point). For true even terms the reconstruction is
/// identical to the spec's own force; for sgn-absorbed even terms it is
/// the mixed system the notation denotes.
pub fn ode_solution(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<OdeSolution> {
    require_positive_amplitude(amplitude)?;
    let detection = match spec.parity() {
        Parity::Odd => {
            let force = |u: f64| spec.force(u);
            detect_period(
                &force,
                amplitude,
                omega_guess(spec, amplitude),
                tol.ode_rel_tol,
                PeriodEvent::QuarterAtZeroCrossing,
            )?
        }
        Parity::Mixed => {
            let (plus, minus) = spec.branches();
            let force = |u: f64| {
                if u >= 0.0 {
                    plus.force(u)
                } else {
                    minus.force(u)
                }
            };
            detect_period(
                &force,
                amplitude,
                omega_guess(&plus, amplitude),
                tol.ode_rel_tol,
                PeriodEvent::FullAtSecondTurning,
            )?
        }
    };
    Ok(OdeSolution {
        samples: detection.samples,
        period: detection.period,
        event_residual: detection.event_residual,
    })
}

/// Period from [`ode_solution`].
pub fn period_ode(spec: &OscillatorSpec, amplitude: f64, tol: &ToleranceProfile) -> Result<f64> {
    ode_solution(spec, amplitude, tol).map(|s| s.period)
}

/// Full-cycle ODE period of an arbitrary restoring force, for callers
/// working outside the term algebra (e.g. equations in physical units).
pub fn period_ode_fn<F: Fn(f64) -> f64>(
    force: F,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<f64> {
    require_positive_amplitude(amplitude)?;
    let slope = force(amplitude) / amplitude;
    let guess = slope
        .max(finite_difference_slope(&force, amplitude))
        .max(1e-12);
    detect_period(
        &force,
        amplitude,
        guess.sqrt(),
        tol.ode_rel_tol,
        PeriodEvent::FullAtSecondTurning,
    )
    .map(|d| d.period)
}

fn finite_difference_slope<F: Fn(f64) -> f64>(force: &F, amplitude: f64) -> f64 {
    let h = 1e-6 * amplitude.max(1.0);
    ((force(h) - force(-h)) / (2.0 * h)).abs()
}

fn omega_guess(spec: &OscillatorSpec, amplitude: f64) -> f64 {
    let secant = spec.force(amplitude) / amplitude;
    let slope = finite_difference_slope(&|u| spec.force(u), amplitude);
    secant.max(slope).max(1e-12).sqrt()
}

/// Exact period of a mixed-parity system: the positive half-cycle runs at
/// amplitude A under the plus branch; the negative swing turns at the
/// energy-matched amplitude B solving `V₋(B) = V₊(A)` and runs under the
/// minus branch. `T = ½·T_quad(plus, A) + ½·T_quad(minus, B)`.
///
/// For an odd spec the branches and turning points coincide and this
/// reduces to the plain energy integral.
pub fn exact_period_mixed(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<f64> {
    require_positive_amplitude(amplitude)?;
    let (plus, minus) = spec.branches();
    let energy = plus.potential(amplitude);
    let negative_amplitude = matching_turning_point(&minus, energy, amplitude, tol)?;
    Ok(0.5 * period_quadrature(&plus, amplitude, tol)?
        + 0.5 * period_quadrature(&minus, negative_amplitude, tol)?)
}

/// Amplitude at which the branch potential reaches the given energy.
fn matching_turning_point(
    branch: &OscillatorSpec,
    energy: f64,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<f64> {
    let gap = |u: f64| branch.potential(u) - energy;
    let at_a = gap(amplitude);
    if at_a == 0.0 {
        return Ok(amplitude);
    }
    // Expand or shrink a bracket around the starting amplitude.
    let (mut lo, mut hi) = (amplitude, amplitude);
    if at_a < 0.0 {
        for _ in 0..200 {
            hi *= 2.0;
            if gap(hi) >= 0.0 {
                return crate::numerics::find_root(gap, lo, hi, tol);
            }
            lo = hi;
        }
    } else {
        for _ in 0..200 {
            lo *= 0.5;
            if gap(lo) <= 0.0 {
                return crate::numerics::find_root(gap, lo, hi, tol);
            }
            hi = lo;
        }
    }
    Err(Error::NonOscillatory {
        amplitude,
        reason: "no turning point matches the cycle energy on the \
                 opposite half-cycle"
            .into(),
    })
}

/// Reference period dispatched on parity: energy integral for odd specs,
/// branch-sum for mixed ones.
pub fn exact_period(spec: &OscillatorSpec, amplitude: f64, tol: &ToleranceProfile) -> Result<f64> {
    match spec.parity() {
        Parity::Odd => period_quadrature(spec, amplitude, tol),
        Parity::Mixed => exact_period_mixed(spec, amplitude, tol),
    }
}

/// `2π / exact_period`.
pub fn exact_frequency(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<f64> {
    Ok(2.0 * PI / exact_period(spec, amplitude, tol)?)
}

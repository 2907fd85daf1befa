//! Adaptive Dormand–Prince 5(4) integration of `u'' = −f(u)` with
//! bisection-refined event detection for period measurement.
//!
//! The embedded 4th-order solution supplies the per-step error estimate;
//! steps are controlled to an internal tolerance two orders tighter than
//! the requested result tolerance so that accumulated drift over a cycle
//! stays well inside it. Events are located by bisecting the event
//! function inside the accepted step that brackets the sign change,
//! re-integrating from the step start, down to 1e-12 in time.

use crate::error::{Error, Result};

type State = [f64; 2];

// Dormand–Prince 5(4) tableau.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// 5th-minus-4th-order weights for the error estimate.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 5.0;
const EVENT_TIME_ABS_TOL: f64 = 1e-12;

/// What to measure from the trajectory started at (u, u') = (A, 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PeriodEvent {
    /// First downward crossing of u = 0; the period is four times that
    /// instant. Valid only when the force is an odd function of u.
    QuarterAtZeroCrossing,
    /// Second turning point (u' = 0) after the start, i.e. the return to
    /// the positive turning point: one full cycle. Valid for any force.
    FullAtSecondTurning,
}

#[derive(Debug)]
pub(crate) struct PeriodDetection {
    /// (t, u, u') at every accepted step, ending with the refined event.
    pub samples: Vec<(f64, f64, f64)>,
    pub period: f64,
    /// |event function| at the refined event time.
    pub event_residual: f64,
}

struct Stepper<'a, F: Fn(f64) -> f64> {
    force: &'a F,
    rel_tol: f64,
    atol_u: f64,
    atol_v: f64,
}

impl<F: Fn(f64) -> f64> Stepper<'_, F> {
    fn rhs(&self, y: State) -> State {
        [y[1], -(self.force)(y[0])]
    }

    /// One 5(4) step of size h. Returns the 5th-order solution and the
    /// normalized error (<= 1 is acceptable).
    fn step(&self, y: State, h: f64) -> (State, f64) {
        let k1 = self.rhs(y);
        let k2 = self.rhs(axpy(y, h, &[(A21, k1)]));
        let k3 = self.rhs(axpy(y, h, &[(A31, k1), (A32, k2)]));
        let k4 = self.rhs(axpy(y, h, &[(A41, k1), (A42, k2), (A43, k3)]));
        let k5 = self.rhs(axpy(y, h, &[(A51, k1), (A52, k2), (A53, k3), (A54, k4)]));
        let k6 = self.rhs(axpy(
            y,
            h,
            &[(A61, k1), (A62, k2), (A63, k3), (A64, k4), (A65, k5)],
        ));
        let y5 = axpy(y, h, &[(B1, k1), (B3, k3), (B4, k4), (B5, k5), (B6, k6)]);
        let k7 = self.rhs(y5);

        let mut err_norm_sq = 0.0;
        for i in 0..2 {
            let err =
                h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let atol = if i == 0 { self.atol_u } else { self.atol_v };
            let scale = atol + self.rel_tol * y[i].abs().max(y5[i].abs());
            err_norm_sq += (err / scale) * (err / scale);
        }
        (y5, (0.5 * err_norm_sq).sqrt())
    }
}

fn axpy(y: State, h: f64, terms: &[(f64, State)]) -> State {
    let mut out = y;
    for &(c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

/// Integrate from (A, 0) until the requested period event, refine the
/// event time by bisection, and return the trajectory and period.
///
/// `omega_guess` sets the time horizon (`t_max = 50 cycles`) and the step
/// ceiling; `rel_tol` is the target accuracy of the detected period.
pub(crate) fn detect_period<F: Fn(f64) -> f64>(
    force: &F,
    amplitude: f64,
    omega_guess: f64,
    rel_tol: f64,
    event: PeriodEvent,
) -> Result<PeriodDetection> {
    let cycle_guess = 2.0 * std::f64::consts::PI / omega_guess;
    let t_max = 50.0 * cycle_guess;
    let h_max = cycle_guess / 20.0;

    // Two orders tighter internally so global drift over the measured
    // fraction of a cycle stays within the requested tolerance.
    let internal = (rel_tol * 1e-2).max(1e-13);
    let stepper = Stepper {
        force,
        rel_tol: internal,
        atol_u: internal * amplitude,
        atol_v: internal * amplitude * omega_guess,
    };

    let event_fn = |y: State| match event {
        PeriodEvent::QuarterAtZeroCrossing => y[0],
        PeriodEvent::FullAtSecondTurning => y[1],
    };
    let crossings_wanted = match event {
        PeriodEvent::QuarterAtZeroCrossing => 1,
        PeriodEvent::FullAtSecondTurning => 2,
    };

    let mut t = 0.0;
    let mut y: State = [amplitude, 0.0];
    let mut h = (cycle_guess / 1000.0).min(h_max);
    let mut samples = vec![(t, y[0], y[1])];
    // Sign of the event function at the previous accepted step; zero until
    // it first becomes nonzero, so the trivial event at t = 0 is skipped.
    let mut prev_sign = 0.0_f64;
    let mut crossings = 0u32;

    while t < t_max {
        h = h.min(h_max);
        let (y_new, err) = stepper.step(y, h);
        if !err.is_finite() {
            h *= 0.5;
            if h < 1e-14 * t.max(1.0) {
                return Err(Error::Domain(format!("ODE step size underflow at t = {t}")));
            }
            continue;
        }
        if err > 1.0 {
            h *= (SAFETY * err.powf(-0.2)).max(MIN_FACTOR);
            continue;
        }

        let t_new = t + h;
        let g_new = event_fn(y_new);
        let sign_new = if g_new == 0.0 { 0.0 } else { g_new.signum() };

        if prev_sign != 0.0 && sign_new != 0.0 && sign_new != prev_sign {
            crossings += 1;
            if crossings == crossings_wanted {
                // Refine to 1e-12 absolute, or finer when the cycle itself
                // is shorter than that resolution can serve.
                let width_tol = EVENT_TIME_ABS_TOL.min(0.01 * rel_tol * t_new);
                let (t_event, y_event, residual) =
                    refine_event(&stepper, &event_fn, t, y, t_new, width_tol);
                samples.push((t_event, y_event[0], y_event[1]));
                let period = match event {
                    PeriodEvent::QuarterAtZeroCrossing => 4.0 * t_event,
                    PeriodEvent::FullAtSecondTurning => {
                        // Sanity: the full-cycle turning point is on the
                        // starting side of the well.
                        if y_event[0] <= 0.0 {
                            return Err(Error::NoOscillationDetected { t_max });
                        }
                        t_event
                    }
                };
                return Ok(PeriodDetection {
                    samples,
                    period,
                    event_residual: residual,
                });
            }
        }
        if sign_new != 0.0 {
            prev_sign = sign_new;
        }

        t = t_new;
        y = y_new;
        samples.push((t, y[0], y[1]));
        h *= (SAFETY * err.max(1e-10).powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR);
    }

    Err(Error::NoOscillationDetected { t_max })
}

/// Bisect the event time inside an accepted step, re-integrating a single
/// uncontrolled step from the step start for each candidate.
fn refine_event<F: Fn(f64) -> f64>(
    stepper: &Stepper<'_, F>,
    event_fn: &impl Fn(State) -> f64,
    t_lo: f64,
    y_lo: State,
    t_hi: f64,
    width_tol: f64,
) -> (f64, State, f64) {
    let state_at = |tau: f64| -> State {
        if tau == t_lo {
            y_lo
        } else {
            stepper.step(y_lo, tau - t_lo).0
        }
    };
    let g_lo = event_fn(y_lo);
    let (mut lo, mut hi) = (t_lo, t_hi);
    let mut sign_lo = g_lo.signum();
    if g_lo == 0.0 {
        // The step start itself was the previous event; nudge inward.
        sign_lo = -event_fn(state_at(hi)).signum();
    }
    for _ in 0..100 {
        if hi - lo <= width_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let g_mid = event_fn(state_at(mid));
        if g_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if g_mid.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t_event = 0.5 * (lo + hi);
    let y_event = state_at(t_event);
    (t_event, y_event, event_fn(y_event).abs())
}

//! Amplitude-frequency formulation with two cosine trial solutions.
//!
//! For `u'' + f(u) = 0`, `u(0) = A`, `u'(0) = 0`, two trials
//! `u₁ = A cos ω₁t` and `u₂ = A cos ω₂t` leave residuals R₁, R₂ when
//! substituted into the equation. Evaluating both at a common collocation
//! value `cos ω₁t = cos ω₂t = k` and combining them as
//! `ω² = (ω₁²R₂ − ω₂²R₁)/(R₂ − R₁)` gives a frequency estimate that still
//! depends on k. The improved formulation closes the system by choosing k
//! so that the first-harmonic projection of the equation defect vanishes
//! over a quarter period (a Galerkin condition), which makes the result
//! coincide with first-order harmonic balance.
//!
//! Fixed-location variants (k = 1 from collocating at t = 0, and
//! k = cos π/3 = 1/2) are provided for comparison, along with half-cycle
//! period averaging for forces whose two half-cycles differ.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::model::OscillatorSpec;
use crate::numerics::{find_root_counted, integrate, ToleranceProfile};

const K_SCAN_LO: f64 = 1e-3;
const K_SCAN_HI: f64 = 1.0 - 1e-9;
const K_SCAN_POINTS: usize = 64;

/// The two trial frequencies. All built-in procedures use (1, 2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialPair {
    omega1: f64,
    omega2: f64,
}

impl TrialPair {
    pub fn new(omega1: f64, omega2: f64) -> Result<Self> {
        if !(omega1 > 0.0) || !(omega2 > 0.0) {
            return Err(Error::Domain(format!(
                "trial frequencies must be positive, got ({omega1}, {omega2})"
            )));
        }
        if omega1 == omega2 {
            return Err(Error::DegenerateTrials);
        }
        Ok(Self { omega1, omega2 })
    }

    pub fn omega1(&self) -> f64 {
        self.omega1
    }

    pub fn omega2(&self) -> f64 {
        self.omega2
    }
}

impl Default for TrialPair {
    fn default() -> Self {
        Self {
            omega1: 1.0,
            omega2: 2.0,
        }
    }
}

/// Angular frequency estimate with method provenance and solver diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyEstimate {
    /// Angular frequency in radians per unit of dimensionless time.
    pub omega: f64,
    /// Solved collocation factor; present only when a Galerkin solve
    /// determined it (absent for fixed-k and harmonic-balance estimates,
    /// whose location is recorded in the method tag instead).
    pub k: Option<f64>,
    /// Method tag, e.g. "iaff", "fixed-k(0.5)", "hb1".
    pub method: String,
    /// Galerkin mismatch at the solution when a solve was performed,
    /// zero otherwise.
    pub galerkin_residual: f64,
    /// Root-finder iterations of the Galerkin solve, zero otherwise.
    pub iterations: u32,
}

/// Period estimate; for mixed-parity systems the two half-cycle branch
/// periods are retained and `period = (plus + minus) / 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodEstimate {
    pub period: f64,
    pub plus_branch_period: Option<f64>,
    pub minus_branch_period: Option<f64>,
    pub method: String,
}

/// Diagnostics of a Galerkin collocation-factor solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GalerkinSolve {
    /// The solved collocation factor in (0, 1).
    pub k: f64,
    /// Galerkin mismatch at `k` (should sit at the quadrature noise level).
    pub residual: f64,
    /// Root-finder iterations.
    pub iterations: u32,
    /// Number of sign changes seen in the bracket scan. More than one means
    /// the mismatch had several roots and the largest was selected.
    pub sign_changes: u32,
}

/// Trial-solution residual at the collocation point `cos ωt = k`:
/// `R = −ω²·A·k + f(A·k)`.
pub fn residual(spec: &OscillatorSpec, amplitude: f64, k: f64, omega: f64) -> f64 {
    -omega * omega * amplitude * k + spec.force(amplitude * k)
}

/// The residual-quotient frequency formula
/// `ω² = (ω₁²R₂ − ω₂²R₁)/(R₂ − R₁)`.
///
/// Algebraically this collapses to `f(A·k)/(A·k)` for any distinct trial
/// pair; the quotient form is kept so the trial structure stays visible.
pub fn omega_sq_of_k(
    spec: &OscillatorSpec,
    amplitude: f64,
    k: f64,
    trials: TrialPair,
) -> Result<f64> {
    if !(amplitude > 0.0) {
        return Err(Error::Domain(format!(
            "amplitude must be > 0, got {amplitude}"
        )));
    }
    let r1 = residual(spec, amplitude, k, trials.omega1);
    let r2 = residual(spec, amplitude, k, trials.omega2);
    let denom = r2 - r1;
    if denom == 0.0 {
        return Err(Error::DegenerateTrials);
    }
    Ok((trials.omega1 * trials.omega1 * r2 - trials.omega2 * trials.omega2 * r1) / denom)
}

/// First-harmonic projection of the force over a quarter cycle:
/// `∫₀^{π/2} f(A cos θ) cos θ dθ`.
pub(crate) fn first_harmonic_projection(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<f64> {
    integrate(
        |theta: f64| spec.force(amplitude * theta.cos()) * theta.cos(),
        0.0,
        FRAC_PI_2,
        tol,
    )
}

/// Galerkin mismatch `G(k) = ω²(k)·A·π/4 − ∫₀^{π/2} f(A cos θ) cos θ dθ`.
///
/// This is the quarter-period first-harmonic projection of the equation
/// defect, rescaled by the (positive) frequency so that its roots are
/// unchanged. `G(k) = 0` determines the collocation factor.
pub fn galerkin_mismatch(
    spec: &OscillatorSpec,
    amplitude: f64,
    k: f64,
    tol: &ToleranceProfile,
) -> Result<f64> {
    let projection = first_harmonic_projection(spec, amplitude, tol)?;
    let omega_sq = omega_sq_of_k(spec, amplitude, k, TrialPair::default())?;
    Ok(omega_sq * amplitude * FRAC_PI_4 - projection)
}

/// Collocation factor solving the Galerkin condition, with diagnostics.
///
/// Scans a 64-point grid on (0, 1) for sign changes of the mismatch and
/// refines each bracket; with several roots the largest is returned (the
/// branch continuous with the ε → 0 limit in the mixed-parity family).
pub fn solve_k_detailed(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<GalerkinSolve> {
    if !(amplitude > 0.0) {
        return Err(Error::Domain(format!(
            "amplitude must be > 0, got {amplitude}"
        )));
    }
    let projection = first_harmonic_projection(spec, amplitude, tol)?;
    let mismatch = |k: f64| {
        let omega_sq = spec.force(amplitude * k) / (amplitude * k);
        omega_sq * amplitude * FRAC_PI_4 - projection
    };

    let step = (K_SCAN_HI - K_SCAN_LO) / (K_SCAN_POINTS - 1) as f64;
    let grid: Vec<f64> = (0..K_SCAN_POINTS)
        .map(|i| K_SCAN_LO + step * i as f64)
        .collect();
    let values: Vec<f64> = grid.iter().map(|&k| mismatch(k)).collect();

    let mut brackets = Vec::new();
    for i in 0..K_SCAN_POINTS - 1 {
        let (g0, g1) = (values[i], values[i + 1]);
        if g0.is_finite() && g1.is_finite() && g0 * g1 <= 0.0 && (g0 != 0.0 || g1 != 0.0) {
            brackets.push(i);
        }
    }
    if brackets.is_empty() {
        return Err(Error::DegenerateGalerkin);
    }

    let sign_changes = brackets.len() as u32;
    let last = *brackets.last().expect("non-empty");
    let (k, iterations) = find_root_counted(mismatch, grid[last], grid[last + 1], tol)?;
    Ok(GalerkinSolve {
        k,
        residual: mismatch(k),
        iterations,
        sign_changes,
    })
}

/// Collocation factor in (0, 1) solving the Galerkin condition.
pub fn solve_k(spec: &OscillatorSpec, amplitude: f64, tol: &ToleranceProfile) -> Result<f64> {
    solve_k_detailed(spec, amplitude, tol).map(|s| s.k)
}

fn non_oscillatory(amplitude: f64, omega_sq: f64) -> Error {
    Error::NonOscillatory {
        amplitude,
        reason: format!("frequency formula gives omega^2 = {omega_sq} <= 0"),
    }
}

/// Frequency with the Galerkin-determined collocation factor.
///
/// The Galerkin closure makes the result equal the first-order
/// harmonic-balance frequency; for a linear force the condition is
/// degenerate (any k works) and `ω = √(f(A)/A)` is returned with no k.
pub fn frequency(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<FrequencyEstimate> {
    match solve_k_detailed(spec, amplitude, tol) {
        Ok(solve) => {
            let omega_sq = omega_sq_of_k(spec, amplitude, solve.k, TrialPair::default())?;
            if !(omega_sq > 0.0) {
                return Err(non_oscillatory(amplitude, omega_sq));
            }
            Ok(FrequencyEstimate {
                omega: omega_sq.sqrt(),
                k: Some(solve.k),
                method: "iaff".into(),
                galerkin_residual: solve.residual,
                iterations: solve.iterations,
            })
        }
        Err(Error::DegenerateGalerkin) => {
            let omega_sq = spec.force(amplitude) / amplitude;
            if !(omega_sq > 0.0) {
                return Err(non_oscillatory(amplitude, omega_sq));
            }
            Ok(FrequencyEstimate {
                omega: omega_sq.sqrt(),
                k: None,
                method: "iaff".into(),
                galerkin_residual: 0.0,
                iterations: 0,
            })
        }
        Err(err) => Err(err),
    }
}

/// Frequency at a fixed collocation factor (no Galerkin solve).
///
/// `k = 1` collocates at t = 0; `k = 1/2` collocates at ωt = π/3.
pub fn frequency_fixed_k(
    spec: &OscillatorSpec,
    amplitude: f64,
    k: f64,
) -> Result<FrequencyEstimate> {
    if !(amplitude > 0.0) {
        return Err(Error::Domain(format!(
            "amplitude must be > 0, got {amplitude}"
        )));
    }
    if !(k > 0.0 && k <= 1.0) {
        return Err(Error::Domain(format!(
            "collocation factor must lie in (0, 1], got {k}"
        )));
    }
    let omega_sq = omega_sq_of_k(spec, amplitude, k, TrialPair::default())?;
    if !(omega_sq > 0.0) {
        return Err(non_oscillatory(amplitude, omega_sq));
    }
    Ok(FrequencyEstimate {
        omega: omega_sq.sqrt(),
        k: None,
        method: format!("fixed-k({k})"),
        galerkin_residual: 0.0,
        iterations: 0,
    })
}

/// Period of a mixed-parity system as the average of the two half-cycle
/// branch periods: `T = (T₁ + T₂)/2` with `Tᵢ = 2π/ωᵢ` from the
/// Galerkin-closed frequency of each odd branch.
///
/// For an odd spec both branches coincide and `T = 2π/ω`.
pub fn period_mixed(
    spec: &OscillatorSpec,
    amplitude: f64,
    tol: &ToleranceProfile,
) -> Result<PeriodEstimate> {
    let (plus, minus) = spec.branches();
    let omega_plus = frequency(&plus, amplitude, tol)?.omega;
    let omega_minus = frequency(&minus, amplitude, tol)?.omega;
    let t1 = 2.0 * PI / omega_plus;
    let t2 = 2.0 * PI / omega_minus;
    Ok(PeriodEstimate {
        period: 0.5 * (t1 + t2),
        plus_branch_period: Some(t1),
        minus_branch_period: Some(t2),
        method: "iaff".into(),
    })
}

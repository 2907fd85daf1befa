//! The fractional-power oscillator `u'' + sgn(u)·|u|^(3/4) = 0`.
//!
//! The Galerkin integral of a pure power has a gamma-function closed form,
//! so the solved collocation factor can be cross-checked analytically:
//! with `C = ∫₀^{π/2} cos^(7/4)θ dθ`, the root is `k = (π/4C)⁴` and the
//! frequency obeys `ω(A) = √(4C/π) · A^(−1/8)`.

use oscfreq::numerics::cos_power_integral;
use oscfreq::{exact, iaff, model, ToleranceProfile};

fn main() -> oscfreq::Result<()> {
    let tol = ToleranceProfile::default();
    let spec = model::preset("power-3-4", &[])?;

    let projection = cos_power_integral(7.0 / 4.0)?;
    let k_closed = (std::f64::consts::PI / (4.0 * projection)).powi(4);
    let k_solved = iaff::solve_k(&spec, 1.0, &tol)?;
    println!("cosine-power integral C(7/4) = {projection:.12}");
    println!("collocation factor: solved {k_solved:.10}, closed form {k_closed:.10}");

    let est = iaff::frequency(&spec, 1.0, &tol)?;
    let omega_exact = exact::exact_frequency(&spec, 1.0, &tol)?;
    println!(
        "\nA = 1: omega = {:.7} vs exact {omega_exact:.7} ({:+.3}%)",
        est.omega,
        100.0 * (est.omega - omega_exact) / omega_exact
    );

    // Softening scaling: doubling the amplitude lowers the frequency by
    // the factor 2^(1/8).
    println!(
        "\n{:>8} {:>12} {:>12} {:>12}",
        "A", "omega_iaff", "omega_exact", "A^(-1/8) fit"
    );
    let omega1 = est.omega;
    for amplitude in [0.25, 1.0, 4.0, 16.0] {
        let w = iaff::frequency(&spec, amplitude, &tol)?.omega;
        let w_exact = exact::exact_frequency(&spec, amplitude, &tol)?;
        let fit = omega1 * amplitude.powf(-0.125);
        println!("{amplitude:>8} {w:>12.7} {w_exact:>12.7} {fit:>12.7}");
    }
    Ok(())
}

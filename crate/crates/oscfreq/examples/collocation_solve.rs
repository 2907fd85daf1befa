//! The Galerkin closure of the two-trial collocation method, step by step,
//! on the cubic oscillator family `u'' + (1−λ)u + (λ/2)u³ = 0`.
//!
//! The residual quotient gives `ω²(k) = 1 − λ + ½λA²k²`, still carrying
//! the collocation factor k. Requiring the first-harmonic projection of
//! the equation defect to vanish over a quarter period pins k = √3/2
//! regardless of λ and A.

use oscfreq::{iaff, taylor_cubic, ToleranceProfile};

fn main() -> oscfreq::Result<()> {
    let tol = ToleranceProfile::default();
    let (lambda, amplitude) = (0.5, 1.0);
    let spec = taylor_cubic(lambda)?;

    println!("Galerkin mismatch G(k) for lambda = {lambda}, A = {amplitude}:");
    for i in 1..=9 {
        let k = 0.1 * i as f64;
        let g = iaff::galerkin_mismatch(&spec, amplitude, k, &tol)?;
        let marker = if g.abs() < 0.02 {
            "  <- near the root"
        } else {
            ""
        };
        println!("  k = {k:.1}: G = {g:+.6}{marker}");
    }

    let solve = iaff::solve_k_detailed(&spec, amplitude, &tol)?;
    println!(
        "\nsolved k = {:.12} (sqrt(3)/2 = {:.12})",
        solve.k,
        3.0_f64.sqrt() / 2.0
    );
    println!(
        "residual at solution = {:.2e}, iterations = {}, sign changes seen = {}",
        solve.residual, solve.iterations, solve.sign_changes
    );

    let est = iaff::frequency(&spec, amplitude, &tol)?;
    let closed_form = (1.0 - lambda + 0.375 * lambda * amplitude * amplitude).sqrt();
    println!("\nomega = {:.7} (closed form {closed_form:.7})", est.omega);

    // Fixed-location variants for contrast: k = 1 collocates at t = 0,
    // k = 1/2 at ωt = π/3. Neither satisfies the Galerkin condition.
    for k in [1.0, 0.5] {
        let fixed = iaff::frequency_fixed_k(&spec, amplitude, k)?;
        println!(
            "fixed {}  omega = {:.7}  ({:+.3}% vs Galerkin)",
            fixed.method,
            fixed.omega,
            100.0 * (fixed.omega - est.omega) / est.omega
        );
    }
    Ok(())
}

//! A mass centered on a stretched elastic wire, from physical parameters
//! to dimensionless frequencies and back.
//!
//! The physical equation `m·x'' + 2k·x − 2k·a·x/√(d² + x²) = 0` becomes
//! `u'' + u − λu/√(1 + u²) = 0` with `u = x/d`, `λ = a/d`, and one unit of
//! dimensionless time equal to `√(m/2k)` seconds.

use oscfreq::model::PhysicalWireParams;
use oscfreq::{exact, iaff, reference, ToleranceProfile};

fn main() -> oscfreq::Result<()> {
    let tol = ToleranceProfile::default();
    let params = PhysicalWireParams {
        mass: 0.5,                // kg
        stiffness: 40.0,          // N/m per wire half
        natural_half_length: 0.3, // m
        half_separation: 0.4,     // m
    };
    let (spec, time_scale) = params.to_dimensionless()?;
    let lambda = params.natural_half_length / params.half_separation;
    println!("dimensionless model: u'' + u - {lambda:.4}·u/sqrt(1+u²) = 0");
    println!("time scale: {time_scale:.6} s per dimensionless unit\n");

    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>14}",
        "A", "iaff", "hb1(closed)", "exact", "f_phys [Hz]"
    );
    for amplitude in [0.05, 0.2, 0.5, 1.0] {
        let omega_iaff = iaff::frequency(&spec, amplitude, &tol)?.omega;
        let omega_closed = reference::belendez_wire_frequency(lambda, amplitude)?;
        let omega_exact = exact::exact_frequency(&spec, amplitude, &tol)?;
        // back to physical units: ω_phys = ω/time_scale, f = ω_phys/2π
        let hertz = omega_exact / time_scale / (2.0 * std::f64::consts::PI);
        println!(
            "{amplitude:>6} {omega_iaff:>12.7} {omega_closed:>12.7} {omega_exact:>12.7} {hertz:>14.4}"
        );
    }

    // The cubic Taylor model is only trustworthy at small amplitude.
    let cubic = oscfreq::taylor_cubic(lambda)?;
    println!("\ncubic approximation vs full wire (exact frequencies):");
    for amplitude in [0.1, 0.5, 1.5] {
        let full = exact::exact_frequency(&spec, amplitude, &tol)?;
        let approx = exact::exact_frequency(&cubic, amplitude, &tol)?;
        println!(
            "  A = {amplitude:<4} full {full:.6}  cubic {approx:.6}  ({:+.3}%)",
            100.0 * (approx - full) / full
        );
    }
    Ok(())
}

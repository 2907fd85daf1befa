//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `cargo test --test acceptance -- --nocapture` to see
//! them). Tolerances are pinned in the assertions.

use std::time::{Duration, Instant};

use oscfreq::model::{preset, taylor_cubic, ForceTerm, OscillatorSpec};
use oscfreq::numerics::{cos_power_integral, integrate, ln_gamma};
use oscfreq::{exact, iaff, reference, ToleranceProfile};

fn tol() -> ToleranceProfile {
    ToleranceProfile::default()
}

fn finish(name: &str, started: Instant, budget: Duration, detail: &str) {
    let elapsed = started.elapsed();
    assert!(
        elapsed < budget,
        "{name}: FAIL — ran {elapsed:?}, budget {budget:?}"
    );
    println!("{name}: PASS — {detail} ({elapsed:?})");
}

/// Published stretched-wire comparison rows at λ = 0.5:
/// (A, omega_hbm, omega_iaff).
const WIRE_TABLE: [(f64, f64, f64); 11] = [
    (0.02, 0.7072, 0.70715),
    (0.04, 0.7073, 0.70731),
    (0.1, 0.7084, 0.70843),
    (0.16, 0.7104, 0.71049),
    (0.2, 0.7123, 0.71239),
    (0.3, 0.71833, 0.71894),
    (0.4, 0.72616, 0.72801),
    (0.5, 0.73531, 0.73950),
    (0.6, 0.74531, 0.75332),
    (0.7, 0.75573, 0.76933),
    (0.8, 0.76632, 0.7874),
];

/// Published mixed-parity comparison rows at ε = 1: (A, exact period).
const MIXED_TABLE_EXACT: [(f64, f64); 7] = [
    (0.1, 6.28559),
    (0.2, 6.28794),
    (0.4, 6.20413),
    (0.5, 6.05759),
    (5.0, 1.36965),
    (10.0, 0.71463),
    (100.0, 0.07391),
];

#[test]
fn criterion_1_cubic_wire_frequency_column() {
    let started = Instant::now();
    let spec = taylor_cubic(0.5).unwrap();
    let mut worst = 0.0_f64;
    for &(a, _, printed_iaff) in &WIRE_TABLE {
        let est = iaff::frequency(&spec, a, &tol()).unwrap();
        let closed_form = (0.5 + 0.1875 * a * a).sqrt();
        assert!(
            (est.omega - closed_form).abs() < 1e-9,
            "criterion 1: FAIL — A={a}: {} vs closed form {closed_form}",
            est.omega
        );
        let delta = (est.omega - printed_iaff).abs();
        worst = worst.max(delta);
        assert!(
            delta <= 5e-5,
            "criterion 1: FAIL — A={a}: {} vs printed {printed_iaff} (|Δ|={delta:.2e})",
            est.omega
        );
    }
    finish(
        "criterion 1",
        started,
        Duration::from_secs(1),
        &format!(
            "11 collocation frequencies within 5e-5 of the reference column (worst {worst:.1e})"
        ),
    );
}

#[test]
fn criterion_2_wire_harmonic_balance_column() {
    let started = Instant::now();
    let mut worst = 0.0_f64;
    for &(a, printed_hbm, _) in &WIRE_TABLE {
        let omega = reference::belendez_wire_frequency(0.5, a).unwrap();
        let delta = (omega - printed_hbm).abs();
        worst = worst.max(delta);
        let bound = if a <= 0.3 { 1e-4 } else { 2e-3 };
        assert!(
            delta <= bound,
            "criterion 2: FAIL — A={a}: {omega} vs printed {printed_hbm} (|Δ|={delta:.2e} > {bound:.0e})"
        );
    }
    finish(
        "criterion 2",
        started,
        Duration::from_secs(1),
        &format!(
            "harmonic-balance wire column within 1e-4 (A<=0.3) / 2e-3 (all); worst {worst:.1e}"
        ),
    );
}

#[test]
fn criterion_3_fractional_power_exact_value() {
    let started = Instant::now();
    let spec = preset("power-3-4", &[]).unwrap();

    let omega_exact = exact::exact_frequency(&spec, 1.0, &tol()).unwrap();
    let rel = ((omega_exact - 1.024_957) / 1.024_957).abs();
    assert!(
        rel <= 5e-4,
        "criterion 3: FAIL — exact frequency {omega_exact} vs reference 1.024957 (rel {rel:.2e})"
    );

    let t_quad = exact::period_quadrature(&spec, 1.0, &tol()).unwrap();
    let t_ode = exact::period_ode(&spec, 1.0, &tol()).unwrap();
    let oracle_gap = ((t_quad - t_ode) / t_quad).abs();
    assert!(
        oracle_gap <= 1e-7,
        "criterion 3: FAIL — oracle disagreement {oracle_gap:.2e}"
    );

    // The self-consistent collocation/harmonic-balance value, not the
    // 1.030927 sometimes quoted for this oscillator (which rests on an
    // internally inconsistent collocation factor near 0.95).
    let omega_iaff = iaff::frequency(&spec, 1.0, &tol()).unwrap().omega;
    let err = ((omega_iaff - omega_exact) / omega_exact).abs();
    assert!(
        err <= 6e-3,
        "criterion 3: FAIL — collocation {omega_iaff} vs exact {omega_exact} (rel {err:.2e} > 0.6%)"
    );
    finish(
        "criterion 3",
        started,
        Duration::from_secs(1),
        &format!(
            "exact {omega_exact:.6} (ref 1.024957), oracles agree to {oracle_gap:.1e}, \
             collocation error {:.3}%",
            100.0 * err
        ),
    );
}

#[test]
fn criterion_4_mixed_parity_exact_column() {
    let started = Instant::now();
    let spec = preset("mixed-parity", &[("epsilon", 1.0)]).unwrap();
    let mut detail = String::new();
    for &(a, printed) in &MIXED_TABLE_EXACT {
        let t = exact::exact_period_mixed(&spec, a, &tol()).unwrap();
        let rel = ((t - printed) / printed).abs();
        let bound = if a >= 100.0 { 1.5e-2 } else { 1e-2 };
        assert!(
            rel <= bound,
            "criterion 4: FAIL — A={a}: exact {t} vs printed {printed} (rel {rel:.2e} > {bound})"
        );
        // The small-amplitude rows additionally satisfy the cross-oracle
        // property (they were once suspected of being misprints for
        // exceeding 2π; the softer negative swing genuinely makes T > 2π).
        if a <= 0.2 {
            let t_ode = exact::period_ode(&spec, a, &tol()).unwrap();
            let gap = ((t - t_ode) / t).abs();
            assert!(
                gap <= 1e-7,
                "criterion 4: FAIL — A={a}: cross-oracle gap {gap:.2e}"
            );
        }
        detail.push_str(&format!("A={a}:{:.2e} ", rel));
    }
    // Limit property: the symmetric small-amplitude system approaches 2π.
    let symmetric = preset("mixed-parity", &[("epsilon", 0.0)]).unwrap();
    let t0 = exact::exact_period_mixed(&symmetric, 1e-3, &tol()).unwrap();
    assert!(
        (t0 - 2.0 * std::f64::consts::PI).abs() <= 1e-5,
        "criterion 4: FAIL — ε=0 small-amplitude limit {t0}"
    );
    finish(
        "criterion 4",
        started,
        Duration::from_secs(5),
        &format!(
            "exact column reproduced, all 7 rows ({})",
            detail.trim_end()
        ),
    );
}

#[test]
fn criterion_5_mixed_parity_approximation_tracks_exact() {
    let started = Instant::now();
    let spec = preset("mixed-parity", &[("epsilon", 1.0)]).unwrap();
    let mut worst = 0.0_f64;
    for a in [0.1, 0.5, 5.0, 10.0, 100.0] {
        let t_iaff = iaff::period_mixed(&spec, a, &tol()).unwrap().period;
        let t_exact = exact::exact_period_mixed(&spec, a, &tol()).unwrap();
        let rel = ((t_iaff - t_exact) / t_exact).abs();
        worst = worst.max(rel);
        assert!(
            rel <= 0.08,
            "criterion 5: FAIL — A={a}: collocation {t_iaff} vs exact {t_exact} (rel {rel:.3})"
        );
        if a <= 0.5 {
            assert!(
                rel <= 0.01,
                "criterion 5: FAIL — A={a}: rel {rel:.4} > 1% at small amplitude"
            );
        }
    }
    finish(
        "criterion 5",
        started,
        Duration::from_secs(5),
        &format!(
            "half-cycle-averaged collocation period within 8% of exact across four \
             orders of magnitude in amplitude (worst {:.2}%)",
            100.0 * worst
        ),
    );
}

#[test]
fn criterion_6_identity_suite() {
    let started = Instant::now();

    // Collocation-with-Galerkin-closure equals first-order harmonic
    // balance on randomized odd specs.
    let mut state = 0x9e37_79b9_7f4a_7c15_u64;
    let mut rand = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let exponents = [0.5, 0.75, 1.0, 4.0 / 3.0, 1.5, 2.5, 3.0, 5.0];
    for trial in 0..50 {
        let mut terms = vec![ForceTerm::odd_power(0.2 + 1.8 * rand(), 1.0)];
        let extra = 1 + (rand() * 2.0) as usize;
        for _ in 0..extra {
            let p = exponents[(rand() * exponents.len() as f64) as usize % exponents.len()];
            terms.push(ForceTerm::odd_power(0.1 + 1.9 * rand(), p));
        }
        let spec = OscillatorSpec::new(terms).unwrap();
        let a = 0.1 + 4.9 * rand();
        let w_iaff = iaff::frequency(&spec, a, &tol()).unwrap().omega;
        let w_hb1 = reference::hb1_frequency(&spec, a, &tol()).unwrap().omega;
        let rel = ((w_iaff - w_hb1) / w_hb1).abs();
        assert!(
            rel <= 1e-10,
            "criterion 6: FAIL — trial {trial}: iaff {w_iaff} vs hb1 {w_hb1} (rel {rel:.2e})"
        );
    }

    // Galerkin root of the cubic family.
    let sqrt3_over_2 = 3.0_f64.sqrt() / 2.0;
    for lambda in [0.1, 0.25, 0.5, 0.75, 1.0] {
        for a in [0.05, 0.5, 2.0, 20.0] {
            let k = iaff::solve_k(&taylor_cubic(lambda).unwrap(), a, &tol()).unwrap();
            assert!(
                (k - sqrt3_over_2).abs() <= 1e-10,
                "criterion 6: FAIL — λ={lambda}, A={a}: k={k}"
            );
        }
    }

    // Pure-power frequency scaling ω(A) = ω(1)·A^((p−1)/2).
    for p in [1.0 / 3.0, 0.75, 3.0] {
        let spec = OscillatorSpec::new(vec![ForceTerm::odd_power(1.0, p)]).unwrap();
        let w1 = iaff::frequency(&spec, 1.0, &tol()).unwrap().omega;
        let t1 = exact::period_quadrature(&spec, 1.0, &tol()).unwrap();
        for a in [0.1, 10.0] {
            let w = iaff::frequency(&spec, a, &tol()).unwrap().omega;
            let predicted = w1 * a.powf((p - 1.0) / 2.0);
            let rel = ((w - predicted) / predicted).abs();
            assert!(
                rel <= 1e-9,
                "criterion 6: FAIL — p={p}, A={a}: scaling off by {rel:.2e}"
            );
            let t = exact::period_quadrature(&spec, a, &tol()).unwrap();
            let predicted_t = t1 * a.powf((1.0 - p) / 2.0);
            let rel_t = ((t - predicted_t) / predicted_t).abs();
            assert!(
                rel_t <= 1e-7,
                "criterion 6: FAIL — p={p}, A={a}: exact scaling off by {rel_t:.2e}"
            );
        }
    }

    finish(
        "criterion 6",
        started,
        Duration::from_secs(10),
        "collocation≡HB1 on 50 random specs (1e-10), cubic-family root √3/2 (1e-10), \
         pure-power scaling (1e-9)",
    );
}

#[test]
fn criterion_7_oracle_suite() {
    let started = Instant::now();
    let profile = tol();

    // Cross-oracle matrix.
    let mixed = preset("mixed-parity", &[("epsilon", 1.0)]).unwrap();
    let (plus, minus) = mixed.branches();
    let mut matrix: Vec<OscillatorSpec> = vec![
        taylor_cubic(0.1).unwrap(),
        taylor_cubic(0.5).unwrap(),
        taylor_cubic(0.9).unwrap(),
        preset("power-3-4", &[]).unwrap(),
        plus,
        minus,
    ];
    let mut checked = 0;
    for spec in matrix.drain(..) {
        for a in [0.1, 0.5, 1.0, 5.0, 10.0] {
            let t_quad = exact::period_quadrature(&spec, a, &profile).unwrap();
            let t_ode = exact::period_ode(&spec, a, &profile).unwrap();
            let rel = ((t_quad - t_ode) / t_quad).abs();
            assert!(
                rel <= 1e-7,
                "criterion 7: FAIL — {:?} A={a}: quad {t_quad} vs ode {t_ode} (rel {rel:.2e})",
                spec.label()
            );
            checked += 1;
        }
    }

    // Energy conservation along sampled trajectories.
    for (spec, a) in [
        (taylor_cubic(0.5).unwrap(), 1.0),
        (preset("power-3-4", &[]).unwrap(), 2.0),
    ] {
        let sol = exact::ode_solution(&spec, a, &profile).unwrap();
        let e0 = spec.potential(a);
        for &(_, u, v) in &sol.samples {
            let drift = ((0.5 * v * v + spec.potential(u) - e0) / e0).abs();
            assert!(
                drift <= 10.0 * profile.ode_rel_tol,
                "criterion 7: FAIL — energy drift {drift:.2e} on {:?}",
                spec.label()
            );
        }
    }

    // Linear oscillator: 2π by every method.
    let linear = OscillatorSpec::new(vec![ForceTerm::odd_power(1.0, 1.0)]).unwrap();
    let two_pi = 2.0 * std::f64::consts::PI;
    for a in [0.3, 7.0] {
        let periods = [
            exact::period_quadrature(&linear, a, &profile).unwrap(),
            exact::period_ode(&linear, a, &profile).unwrap(),
            two_pi / iaff::frequency(&linear, a, &profile).unwrap().omega,
            two_pi
                / reference::hb1_frequency(&linear, a, &profile)
                    .unwrap()
                    .omega,
            two_pi / iaff::frequency_fixed_k(&linear, a, 1.0).unwrap().omega,
            two_pi / iaff::frequency_fixed_k(&linear, a, 0.5).unwrap().omega,
        ];
        for t in periods {
            assert!(
                (t - two_pi).abs() <= 1e-8,
                "criterion 7: FAIL — linear A={a}: period {t}"
            );
        }
    }

    finish(
        "criterion 7",
        started,
        Duration::from_secs(30),
        &format!("{checked} cross-oracle pairs within 1e-7, energy conserved, linear = 2π"),
    );
}

#[test]
fn criterion_8_special_functions() {
    let started = Instant::now();
    let profile = tol();

    for a in [0.25, 0.75, 4.0 / 3.0, 7.0 / 4.0, 2.0, 3.0] {
        let closed = cos_power_integral(a).unwrap();
        let quad = integrate(
            |theta: f64| theta.cos().powf(a),
            0.0,
            std::f64::consts::FRAC_PI_2,
            &profile,
        )
        .unwrap();
        let rel = ((closed - quad) / closed).abs();
        assert!(
            rel <= 1e-9,
            "criterion 8: FAIL — a={a}: gamma route {closed} vs quadrature {quad} (rel {rel:.2e})"
        );
    }

    let mut state = 0x1234_5678_9abc_def1_u64;
    for _ in 0..500 {
        state = state
            .wrapping_mul(2_862_933_555_777_941_757)
            .wrapping_add(3_037_000_493);
        let x = 0.5 + 19.5 * ((state >> 11) as f64 / (1u64 << 53) as f64);
        let residual = (ln_gamma(x + 1.0).unwrap() - ln_gamma(x).unwrap() - x.ln()).abs();
        assert!(
            residual <= 1e-12,
            "criterion 8: FAIL — recurrence residual {residual:.2e} at x={x}"
        );
    }

    finish(
        "criterion 8",
        started,
        Duration::from_secs(5),
        "cosine-power integral: gamma route ≡ quadrature route to 1e-9; \
         log-gamma recurrence to 1e-12",
    );
}

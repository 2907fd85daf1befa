//! Approximate and reference-exact angular frequencies and periods of
//! conservative nonlinear oscillators `u'' + f(u) = 0`, `u(0) = A`,
//! `u'(0) = 0`.
//!
//! The restoring force is a sum of signed power terms and an optional
//! stretched-wire term ([`model`]). Frequencies come from an
//! amplitude-frequency formulation with two cosine trials whose
//! collocation factor is closed by a Galerkin condition ([`iaff`]), from
//! fixed-collocation variants, and from first-order harmonic balance
//! ([`mod@reference`]). Every estimate can be judged against two independent
//! exact oracles: quadrature of the energy integral and adaptive ODE
//! integration with event detection ([`exact`]).
//!
//! Quick start:
//!
//! ```
//! use oscfreq::{exact, iaff, model, ToleranceProfile};
//!
//! let tol = ToleranceProfile::default();
//! // u'' + sgn(u)·|u|^(3/4) = 0
//! let spec = model::preset("power-3-4", &[]).unwrap();
//! let approx = iaff::frequency(&spec, 1.0, &tol).unwrap();
//! let exact = exact::exact_frequency(&spec, 1.0, &tol).unwrap();
//! assert!(((approx.omega - exact) / exact).abs() < 6e-3);
//! ```
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example stretched_wire       # physical system → dimensionless model
//! cargo run --example collocation_solve    # the Galerkin closure, step by step
//! cargo run --example fractional_power     # fractional exponents + gamma cross-check
//! cargo run --example mixed_parity         # half-cycle branches and period averaging
//! cargo run --example exact_oracles        # the two oracles agreeing with each other
//! cargo run --example amplitude_sweep      # CSV sweeps for plotting
//! cargo run --example json_specs           # defining oscillators as JSON documents
//! cargo run --example comparison_tables    # the built-in reference tables
//! ```
//!
//! The same functionality is scriptable through the thin `oscfreq` binary
//! (`freq`, `period`, `sweep`, `table`, `compare`); see the README.

// Domain checks are written `!(x > 0.0)` so that NaN fails them; the
// un-negated `x <= 0.0` would silently accept NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod exact;
pub mod iaff;
pub mod model;
pub mod numerics;
mod ode;
pub mod reference;

pub use error::{Error, Result};
pub use model::{preset, taylor_cubic, ForceTerm, OscillatorSpec, Parity, PhysicalWireParams};
pub use numerics::ToleranceProfile;

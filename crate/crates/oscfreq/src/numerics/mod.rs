//! Shared numerical kernels: adaptive quadrature, bracketed root-finding,
//! and the log-gamma / cosine-power-integral pair used to cross-check
//! Galerkin integrals in closed form.

mod gamma;
mod quad;
mod root;

pub use gamma::{cos_power_integral, ln_gamma};
pub use quad::integrate;
pub use root::find_root;

pub(crate) use root::find_root_counted;

use crate::error::{Error, Result};

/// Tolerances governing quadrature, root-finding, and ODE integration.
///
/// The fields are targets for the *results* of the corresponding
/// operations; each kernel chooses its internal knobs to meet them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceProfile {
    /// Relative tolerance for adaptive quadrature.
    pub quad_rel_tol: f64,
    /// Bracket-width tolerance for root finding, relative to max(1, |root|).
    pub root_tol: f64,
    /// Relative tolerance for ODE period detection.
    pub ode_rel_tol: f64,
    /// Subdivision budget for adaptive quadrature.
    pub max_subdivisions: u32,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        Self {
            quad_rel_tol: 1e-10,
            root_tol: 1e-12,
            ode_rel_tol: 1e-10,
            max_subdivisions: 2000,
        }
    }
}

impl ToleranceProfile {
    /// Build a profile, rejecting non-positive tolerances and a zero budget.
    pub fn new(
        quad_rel_tol: f64,
        root_tol: f64,
        ode_rel_tol: f64,
        max_subdivisions: u32,
    ) -> Result<Self> {
        let profile = Self {
            quad_rel_tol,
            root_tol,
            ode_rel_tol,
            max_subdivisions,
        };
        profile.validate()?;
        Ok(profile)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("quad_rel_tol", self.quad_rel_tol),
            ("root_tol", self.root_tol),
            ("ode_rel_tol", self.ode_rel_tol),
        ] {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::Domain(format!(
                    "{name} must be a positive finite number, got {value}"
                )));
            }
        }
        if self.max_subdivisions < 1 {
            return Err(Error::Domain("max_subdivisions must be at least 1".into()));
        }
        Ok(())
    }

    /// Uniform relative tolerance across all kernels, default budget.
    pub fn with_rel_tol(rel_tol: f64) -> Result<Self> {
        Self::new(rel_tol, rel_tol.min(1e-12), rel_tol, 2000)
    }
}

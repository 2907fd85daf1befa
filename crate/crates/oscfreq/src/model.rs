//! Restoring-force algebra for conservative oscillators `u'' + f(u) = 0`:
//! term-wise evaluation, potentials, parity analysis, branch decomposition,
//! and constructors for the built-in example systems.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One additive component of the restoring force f(u).
///
/// Power exponents are arbitrary positive reals; fractional powers are
/// odd-symmetrized (`sgn(u)·|u|^p`) so that solutions oscillate, and
/// even-symmetrized (`|u|^p`) terms carry the `EvenPower` tag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ForceTerm {
    /// `c · sgn(u) · |u|^p` — an odd function of u.
    OddPower { coeff: f64, exponent: f64 },
    /// `c · |u|^p` — an even function of u.
    EvenPower { coeff: f64, exponent: f64 },
    /// `−λ · u / √(1 + u²)` — the wire-tension term, odd in u.
    StretchedWire { lambda: f64 },
}

impl ForceTerm {
    pub fn odd_power(coeff: f64, exponent: f64) -> Self {
        Self::OddPower { coeff, exponent }
    }

    pub fn even_power(coeff: f64, exponent: f64) -> Self {
        Self::EvenPower { coeff, exponent }
    }

    pub fn stretched_wire(lambda: f64) -> Self {
        Self::StretchedWire { lambda }
    }

    /// Contribution of this term to f(u).
    pub fn force(&self, u: f64) -> f64 {
        match *self {
            Self::OddPower { coeff, exponent } => {
                if u == 0.0 {
                    0.0
                } else {
                    coeff * u.signum() * u.abs().powf(exponent)
                }
            }
            Self::EvenPower { coeff, exponent } => {
                if u == 0.0 {
                    0.0
                } else {
                    coeff * u.abs().powf(exponent)
                }
            }
            Self::StretchedWire { lambda } => -lambda * u / (1.0 + u * u).sqrt(),
        }
    }

    /// Contribution to the potential V(u), normalized so V(0) = 0.
    pub fn potential(&self, u: f64) -> f64 {
        match *self {
            Self::OddPower { coeff, exponent } => {
                coeff * u.abs().powf(exponent + 1.0) / (exponent + 1.0)
            }
            Self::EvenPower { coeff, exponent } => {
                coeff * u.signum() * u.abs().powf(exponent + 1.0) / (exponent + 1.0)
            }
            // ∫ −λ u/√(1+u²) du = −λ(√(1+u²) − 1), written without the
            // small-u cancellation as −λu²/(√(1+u²) + 1)
            Self::StretchedWire { lambda } => -lambda * u * u / ((1.0 + u * u).sqrt() + 1.0),
        }
    }

    /// Whether the term changes sign between the two half-cycle branches.
    ///
    /// True for `EvenPower` terms and for `OddPower` terms whose exponent is
    /// an even integer: the latter are even monomials that were
    /// odd-symmetrized with a sgn factor, and the half-cycle analysis
    /// restores their ± sign per branch.
    fn flips_between_branches(&self) -> bool {
        match *self {
            Self::EvenPower { coeff, .. } => coeff != 0.0,
            Self::OddPower { coeff, exponent } => coeff != 0.0 && is_even_integer(exponent),
            Self::StretchedWire { .. } => false,
        }
    }

    fn negated(&self) -> Self {
        match *self {
            Self::OddPower { coeff, exponent } => Self::OddPower {
                coeff: -coeff,
                exponent,
            },
            Self::EvenPower { coeff, exponent } => Self::EvenPower {
                coeff: -coeff,
                exponent,
            },
            Self::StretchedWire { lambda } => Self::StretchedWire { lambda: -lambda },
        }
    }

    fn validate(&self, index: usize) -> Result<()> {
        match *self {
            Self::OddPower { coeff, exponent } | Self::EvenPower { coeff, exponent } => {
                if !coeff.is_finite() {
                    return Err(invalid(
                        format!("terms[{index}].coeff"),
                        format!("must be finite, got {coeff}"),
                    ));
                }
                if !(exponent > 0.0) || !exponent.is_finite() {
                    return Err(invalid(
                        format!("terms[{index}].exponent"),
                        format!("must be > 0, got {exponent}"),
                    ));
                }
            }
            Self::StretchedWire { lambda } => {
                if !(lambda > 0.0 && lambda <= 1.0) {
                    return Err(invalid(
                        format!("terms[{index}].lambda"),
                        format!("must satisfy 0 < lambda <= 1, got {lambda}"),
                    ));
                }
            }
        }
        Ok(())
    }
}

fn invalid(path: String, message: String) -> Error {
    Error::InvalidSpec { path, message }
}

fn is_even_integer(p: f64) -> bool {
    let r = p.round();
    (p - r).abs() < 1e-9 && (r as i64) % 2 == 0
}

/// Symmetry class of the restoring force over a full cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// f(−u) = −f(u) and both half-cycles are congruent.
    Odd,
    /// The two half-cycles see different effective forces.
    Mixed,
}

/// Ordered collection of force terms defining f(u).
///
/// Terms are stored exactly as given — no merging or canonicalization —
/// so reports list contributions in construction order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscillatorSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    terms: Vec<ForceTerm>,
    /// Set on the outputs of [`Self::branches`]: the spec is a committed
    /// half-cycle system, so sgn-absorbed even monomials in it are final
    /// and it classifies as odd. Never serialized — a branch spec written
    /// to disk reads back as its sgn-form notation.
    #[serde(skip)]
    half_cycle: bool,
}

impl OscillatorSpec {
    pub fn new(terms: Vec<ForceTerm>) -> Result<Self> {
        let spec = Self {
            label: None,
            terms,
            half_cycle: false,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn terms(&self) -> &[ForceTerm] {
        &self.terms
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Enforce all model invariants, reporting the offending field path.
    pub fn validate(&self) -> Result<()> {
        if self.terms.is_empty() {
            return Err(invalid("terms".into(), "terms non-empty".into()));
        }
        for (i, term) in self.terms.iter().enumerate() {
            term.validate(i)?;
        }
        Ok(())
    }

    /// Restoring force f(u) = Σ term contributions.
    pub fn force(&self, u: f64) -> f64 {
        self.terms.iter().map(|t| t.force(u)).sum()
    }

    /// Potential V(u) with V(0) = 0 and dV/du = f.
    pub fn potential(&self, u: f64) -> f64 {
        self.terms.iter().map(|t| t.potential(u)).sum()
    }

    /// Odd when both half-cycles see the same force; mixed otherwise.
    ///
    /// Sgn-absorbed even monomials (`OddPower` with an even integer
    /// exponent) count as mixed: they are the notation for a force whose
    /// two half-cycles differ, and [`Self::branches`] resolves their sign.
    /// Branch outputs themselves always classify as odd.
    pub fn parity(&self) -> Parity {
        if !self.half_cycle && self.terms.iter().any(ForceTerm::flips_between_branches) {
            Parity::Mixed
        } else {
            Parity::Odd
        }
    }

    /// Whether this spec came out of [`Self::branches`] as a committed
    /// half-cycle system.
    pub fn is_half_cycle_branch(&self) -> bool {
        self.half_cycle
    }

    /// Decompose into per-half-cycle odd oscillators `(plus, minus)`.
    ///
    /// The plus branch reproduces f on u > 0; the minus branch reproduces f
    /// on u < 0. Branch-flipping terms become odd-symmetrized powers with
    /// the sign appropriate to the branch; for an odd spec both branches
    /// equal the input.
    ///
    /// The outputs are marked as committed half-cycle systems, so every
    /// operation treats them as odd; decomposing one again returns it
    /// unchanged.
    pub fn branches(&self) -> (OscillatorSpec, OscillatorSpec) {
        if self.parity() == Parity::Odd {
            return (self.clone(), self.clone());
        }
        let mut plus = Vec::with_capacity(self.terms.len());
        let mut minus = Vec::with_capacity(self.terms.len());
        for term in &self.terms {
            let odd_form = match *term {
                ForceTerm::EvenPower { coeff, exponent } => ForceTerm::OddPower { coeff, exponent },
                other => other,
            };
            plus.push(odd_form);
            minus.push(if term.flips_between_branches() {
                odd_form.negated()
            } else {
                odd_form
            });
        }
        let branch = |terms: Vec<ForceTerm>| OscillatorSpec {
            label: self.label.clone(),
            terms,
            half_cycle: true,
        };
        (branch(plus), branch(minus))
    }
}

/// Physical parameters of a mass centered on a stretched elastic wire.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalWireParams {
    /// Particle mass in kg.
    pub mass: f64,
    /// Stiffness of each wire half in N/m.
    pub stiffness: f64,
    /// Natural (unstretched) half-length in m.
    pub natural_half_length: f64,
    /// Half the distance between the anchor points in m.
    pub half_separation: f64,
}

impl PhysicalWireParams {
    pub fn validate(&self) -> Result<()> {
        let Self {
            mass,
            stiffness,
            natural_half_length: a,
            half_separation: d,
        } = *self;
        if !(mass > 0.0) {
            return Err(Error::Domain(format!("mass must be > 0, got {mass}")));
        }
        if !(stiffness > 0.0) {
            return Err(Error::Domain(format!(
                "stiffness must be > 0, got {stiffness}"
            )));
        }
        if !(a > 0.0) {
            return Err(Error::Domain(format!(
                "natural half-length must be > 0, got {a}"
            )));
        }
        if !(d >= a) {
            return Err(Error::Domain(format!(
                "half-separation ({d}) must be >= natural half-length ({a})"
            )));
        }
        Ok(())
    }

    /// Dimensionless displacement `u = x/d` satisfies
    /// `u'' + u − λu/√(1+u²) = 0` with `λ = a/d` in the rescaled time
    /// `τ = t/time_scale`. Returns the dimensionless spec and
    /// `time_scale = √(m / 2k)` in seconds.
    pub fn to_dimensionless(&self) -> Result<(OscillatorSpec, f64)> {
        self.validate()?;
        let lambda = self.natural_half_length / self.half_separation;
        let time_scale = (self.mass / (2.0 * self.stiffness)).sqrt();
        let spec = OscillatorSpec::new(vec![
            ForceTerm::odd_power(1.0, 1.0),
            ForceTerm::stretched_wire(lambda),
        ])?
        .with_label("stretched-wire");
        Ok((spec, time_scale))
    }
}

/// Cubic small-amplitude approximation of the stretched-wire force:
/// `f(u) = (1−λ)u + (λ/2)u³`.
pub fn taylor_cubic(lambda: f64) -> Result<OscillatorSpec> {
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(Error::Domain(format!(
            "lambda must satisfy 0 < lambda <= 1, got {lambda}"
        )));
    }
    Ok(OscillatorSpec::new(vec![
        ForceTerm::odd_power(1.0 - lambda, 1.0),
        ForceTerm::odd_power(lambda / 2.0, 3.0),
    ])?
    .with_label("stretched-wire-cubic"))
}

/// Built-in example systems, keyed by name.
///
/// * `stretched-wire` (`lambda`): `u − λu/√(1+u²)`
/// * `stretched-wire-cubic` (`lambda`): `(1−λ)u + (λ/2)u³`
/// * `power-3-4`: `sgn(u)·|u|^(3/4)`
/// * `mixed-parity` (`epsilon`): `u + ε·sgn(u)·u² + u³`
pub fn preset(name: &str, params: &[(&str, f64)]) -> Result<OscillatorSpec> {
    let lookup = |key: &str| -> Result<f64> {
        params
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::Domain(format!("preset `{name}` requires parameter `{key}`")))
    };
    match name {
        "stretched-wire" => {
            let lambda = lookup("lambda")?;
            if !(lambda > 0.0 && lambda <= 1.0) {
                return Err(Error::Domain(format!(
                    "lambda must satisfy 0 < lambda <= 1, got {lambda}"
                )));
            }
            Ok(OscillatorSpec::new(vec![
                ForceTerm::odd_power(1.0, 1.0),
                ForceTerm::stretched_wire(lambda),
            ])?
            .with_label(name))
        }
        "stretched-wire-cubic" => taylor_cubic(lookup("lambda")?),
        "power-3-4" => {
            Ok(OscillatorSpec::new(vec![ForceTerm::odd_power(1.0, 0.75)])?.with_label(name))
        }
        "mixed-parity" => {
            let epsilon = lookup("epsilon")?;
            Ok(OscillatorSpec::new(vec![
                ForceTerm::odd_power(1.0, 1.0),
                ForceTerm::odd_power(epsilon, 2.0),
                ForceTerm::odd_power(1.0, 3.0),
            ])?
            .with_label(name))
        }
        other => Err(Error::Domain(format!(
            "unknown preset `{other}`; expected one of stretched-wire, \
             stretched-wire-cubic, power-3-4, mixed-parity"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic(lambda: f64) -> OscillatorSpec {
        taylor_cubic(lambda).unwrap()
    }

    fn mixed(epsilon: f64) -> OscillatorSpec {
        preset("mixed-parity", &[("epsilon", epsilon)]).unwrap()
    }

    #[test]
    fn force_examples() {
        // (1-1)·1 + 0.5·1³
        assert_eq!(cubic(1.0).force(1.0), 0.5);
        // odd symmetry of the u·|u| term: -2 - 4 - 8
        assert_eq!(mixed(1.0).force(-2.0), -14.0);
        // equilibrium at the origin
        let wire = preset("stretched-wire", &[("lambda", 0.5)]).unwrap();
        assert_eq!(wire.force(0.0), 0.0);
    }

    #[test]
    fn potential_examples() {
        let pure_cubic = OscillatorSpec::new(vec![ForceTerm::odd_power(1.0, 3.0)]).unwrap();
        let a = 1.7_f64;
        assert!((pure_cubic.potential(a) - a.powi(4) / 4.0).abs() < 1e-15);

        // 2(V(A) - V(x)) must reproduce the energy-integral radicand
        // A² - x² + (2/3)(A³ - x³) + (1/2)(A⁴ - x⁴) for the mixed system's
        // plus branch.
        let (plus, _) = mixed(1.0).branches();
        let (big_a, x) = (2.0_f64, 0.7_f64);
        let radicand = big_a.powi(2) - x.powi(2)
            + (2.0 / 3.0) * (big_a.powi(3) - x.powi(3))
            + 0.5 * (big_a.powi(4) - x.powi(4));
        let two_dv = 2.0 * (plus.potential(big_a) - plus.potential(x));
        assert!((radicand - two_dv).abs() < 1e-12);

        let wire = OscillatorSpec::new(vec![ForceTerm::stretched_wire(0.5)]).unwrap();
        assert_eq!(wire.potential(0.0), 0.0);
    }

    #[test]
    fn potential_derivative_matches_force() {
        let specs = [
            cubic(0.5),
            mixed(1.0),
            preset("power-3-4", &[]).unwrap(),
            preset("stretched-wire", &[("lambda", 0.9)]).unwrap(),
        ];
        for spec in &specs {
            for &u in &[1e-3_f64, 0.02, 0.4, 1.0, 3.0, 10.0, -0.7, -5.0] {
                let h = 1e-6 * u.abs().max(1.0);
                let fd = (spec.potential(u + h) - spec.potential(u - h)) / (2.0 * h);
                let f = spec.force(u);
                let scale = f.abs().max(1e-12);
                assert!(
                    ((fd - f) / scale).abs() < 1e-6,
                    "dV/du mismatch at u={u}: {fd} vs {f}"
                );
            }
        }
    }

    #[test]
    fn parity_classification() {
        assert_eq!(cubic(0.3).parity(), Parity::Odd);
        assert_eq!(mixed(1.0).parity(), Parity::Mixed);
        // zero-coefficient parity-2 term degenerates to odd
        assert_eq!(mixed(0.0).parity(), Parity::Odd);
        let even = OscillatorSpec::new(vec![
            ForceTerm::odd_power(1.0, 1.0),
            ForceTerm::even_power(0.5, 2.0),
        ])
        .unwrap();
        assert_eq!(even.parity(), Parity::Mixed);
    }

    #[test]
    fn branch_decomposition() {
        let (plus, minus) = mixed(1.0).branches();
        // plus: u + u² + u³ on u > 0, minus: u - u² + u³ on u > 0
        assert!((plus.force(2.0) - 14.0).abs() < 1e-15);
        assert!((minus.force(2.0) - 6.0).abs() < 1e-15);
        // both branches are odd functions of u and classify as such
        for &u in &[0.2_f64, 1.0, 3.7] {
            assert_eq!(plus.force(-u), -plus.force(u));
            assert_eq!(minus.force(-u), -minus.force(u));
        }
        assert_eq!(plus.parity(), Parity::Odd);
        assert_eq!(minus.parity(), Parity::Odd);
        assert!(plus.is_half_cycle_branch());
        // decomposing a committed branch is a no-op
        let (pp, pm) = plus.branches();
        assert_eq!(pp, plus);
        assert_eq!(pm, plus);
        // plus matches the input on u > 0; minus is the input with the
        // even-origin coefficient negated
        let original = mixed(1.0);
        let negated = mixed(-1.0);
        for &u in &[0.1, 0.5, 2.0, 7.3] {
            assert!((plus.force(u) - original.force(u)).abs() < 1e-12);
            assert!((minus.force(u) - negated.force(u)).abs() < 1e-12);
        }
    }

    #[test]
    fn branches_of_odd_spec_are_identical() {
        let spec = cubic(0.7);
        let (plus, minus) = spec.branches();
        assert_eq!(plus, spec);
        assert_eq!(minus, spec);
        let (p0, m0) = mixed(0.0).branches();
        assert_eq!(p0, m0);
    }

    #[test]
    fn even_power_terms_decompose() {
        let spec = OscillatorSpec::new(vec![
            ForceTerm::odd_power(1.0, 1.0),
            ForceTerm::even_power(0.25, 2.0),
        ])
        .unwrap();
        let (plus, minus) = spec.branches();
        for &u in &[0.3, 1.0, 4.0] {
            assert!((plus.force(u) - spec.force(u)).abs() < 1e-12);
            assert!((minus.force(-u) - spec.force(-u)).abs() < 1e-12);
        }
    }

    #[test]
    fn taylor_cubic_examples() {
        let spec = cubic(0.5);
        let u = 0.8;
        assert!((spec.force(u) - (0.5 * u + 0.25 * u * u * u)).abs() < 1e-15);
        // boundary lambda = 1: pure cubic
        assert!((cubic(1.0).force(0.9) - 0.5 * 0.9_f64.powi(3)).abs() < 1e-15);
        // lambda -> 0 approaches the linear oscillator
        assert!((cubic(1e-12).force(0.5) - 0.5).abs() < 1e-9);
        assert!(taylor_cubic(0.0).is_err());
        assert!(taylor_cubic(1.5).is_err());
    }

    #[test]
    fn taylor_cubic_error_is_fifth_order() {
        // |f_cubic - f_wire| = (3λ/8)|u|⁵ + O(u⁷): doubling u multiplies
        // the error by ~32.
        let lambda = 0.5;
        let cubic = cubic(lambda);
        let wire = preset("stretched-wire", &[("lambda", lambda)]).unwrap();
        let err = |u: f64| (cubic.force(u) - wire.force(u)).abs();
        let (e1, e2, e4) = (err(0.01), err(0.02), err(0.04));
        assert!((e2 / e1 - 32.0).abs() < 4.0, "ratio {}", e2 / e1);
        assert!((e4 / e2 - 32.0).abs() < 4.0, "ratio {}", e4 / e2);
    }

    #[test]
    fn wire_nondimensionalization() {
        let params = PhysicalWireParams {
            mass: 1.0,
            stiffness: 0.5,
            natural_half_length: 1.0,
            half_separation: 2.0,
        };
        let (spec, time_scale) = params.to_dimensionless().unwrap();
        assert_eq!(time_scale, 1.0);
        match spec.terms()[1] {
            ForceTerm::StretchedWire { lambda } => assert_eq!(lambda, 0.5),
            ref other => panic!("unexpected term {other:?}"),
        }

        // a = d: no linear restoring at the origin, f'(0) = 1 - λ = 0
        let unstretched = PhysicalWireParams {
            mass: 1.0,
            stiffness: 1.0,
            natural_half_length: 2.0,
            half_separation: 2.0,
        };
        let (spec, _) = unstretched.to_dimensionless().unwrap();
        let h = 1e-7;
        assert!((spec.force(h) / h).abs() < 1e-6);

        let bad = PhysicalWireParams {
            half_separation: 0.5,
            ..params
        };
        assert!(bad.to_dimensionless().is_err());
    }

    #[test]
    fn preset_constructors() {
        let p = preset("power-3-4", &[]).unwrap();
        assert_eq!(p.terms(), &[ForceTerm::odd_power(1.0, 0.75)]);
        let m = preset("mixed-parity", &[("epsilon", 1.0)]).unwrap();
        assert_eq!(m.terms().len(), 3);
        let c = preset("stretched-wire-cubic", &[("lambda", 0.5)]).unwrap();
        assert_eq!(
            c.terms(),
            &[
                ForceTerm::odd_power(0.5, 1.0),
                ForceTerm::odd_power(0.25, 3.0)
            ]
        );
        assert!(preset("no-such-preset", &[]).is_err());
        assert!(preset("mixed-parity", &[]).is_err());
    }

    #[test]
    fn validation_paths() {
        let err = OscillatorSpec::new(vec![]).unwrap_err();
        assert!(err.to_string().contains("terms"));
        let err = OscillatorSpec::new(vec![ForceTerm::odd_power(1.0, 0.0)]).unwrap_err();
        assert!(err.to_string().contains("terms[0].exponent"));
        let err = OscillatorSpec::new(vec![
            ForceTerm::odd_power(1.0, 1.0),
            ForceTerm::stretched_wire(1.5),
        ])
        .unwrap_err();
        assert!(err.to_string().contains("terms[1].lambda"));
    }
}

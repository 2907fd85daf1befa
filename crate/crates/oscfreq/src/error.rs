use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A spec document failed validation; `path` locates the offending field.
    #[error("invalid oscillator spec at `{path}`: {message}")]
    InvalidSpec { path: String, message: String },

    /// A spec document could not be parsed at all.
    #[error("malformed spec document: {0}")]
    Malformed(String),

    /// Root bracketing failed: no sign change on the given interval.
    #[error("no sign change on [{lo}, {hi}]; cannot bracket a root")]
    NoBracket { lo: f64, hi: f64 },

    /// Adaptive quadrature ran out of subdivisions. The best estimate and
    /// its error bound are attached so callers can decide whether to accept.
    #[error(
        "quadrature did not converge within {subdivisions} subdivisions \
         (best estimate {estimate:e}, error bound {error_bound:e})"
    )]
    QuadratureDidNotConverge {
        estimate: f64,
        error_bound: f64,
        subdivisions: u32,
    },

    /// The Galerkin mismatch is identically zero (linear oscillator):
    /// any collocation factor is consistent and the frequency does not
    /// depend on k.
    #[error(
        "Galerkin condition is degenerate (mismatch has no sign change on (0,1)); \
         the frequency is independent of k — use any collocation factor"
    )]
    DegenerateGalerkin,

    /// The two trial frequencies coincide, so the residual quotient is 0/0.
    #[error("degenerate trial pair: omega1 and omega2 must differ")]
    DegenerateTrials,

    /// The restoring force does not sustain oscillation at this amplitude.
    #[error("non-oscillatory at amplitude {amplitude}: {reason}")]
    NonOscillatory { amplitude: f64, reason: String },

    /// ODE integration reached t_max without detecting the period event.
    #[error("no oscillation detected within t_max = {t_max}")]
    NoOscillationDetected { t_max: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

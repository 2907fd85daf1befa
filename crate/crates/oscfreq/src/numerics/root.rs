//! Bracketed root finding: Brent's method (inverse quadratic interpolation
//! with a bisection safeguard), guaranteed to converge for any continuous
//! function with a sign change on the bracket.

use crate::error::{Error, Result};
use crate::numerics::ToleranceProfile;

const MAX_ITER: u32 = 200;

/// Root of `g` on [lo, hi]; requires g(lo)·g(hi) <= 0.
///
/// The returned value sits in a bracket of width at most
/// `tol.root_tol · max(1, |root|)`.
pub fn find_root<F: Fn(f64) -> f64>(g: F, lo: f64, hi: f64, tol: &ToleranceProfile) -> Result<f64> {
    find_root_counted(g, lo, hi, tol).map(|(root, _)| root)
}

/// Same as [`find_root`] but also reports the iteration count.
pub(crate) fn find_root_counted<F: Fn(f64) -> f64>(
    g: F,
    lo: f64,
    hi: f64,
    tol: &ToleranceProfile,
) -> Result<(f64, u32)> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = g(a);
    let mut fb = g(b);

    if fa == 0.0 {
        return Ok((a, 0));
    }
    if fb == 0.0 {
        return Ok((b, 0));
    }
    if fa * fb > 0.0 {
        return Err(Error::NoBracket { lo, hi });
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = b - a;

    for iter in 1..=MAX_ITER {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol.root_tol * b.abs().max(1.0);
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok((b, iter));
        }

        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Attempt inverse quadratic interpolation (secant when a == c).
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }

        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = g(b);
    }

    // Brent converges in well under MAX_ITER for any f64 bracket.
    Ok((b, MAX_ITER))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> ToleranceProfile {
        ToleranceProfile::default()
    }

    #[test]
    fn quadratic_root() {
        let r = find_root(|x| x * x - 0.75, 0.0, 1.0, &tol()).unwrap();
        assert!((r - 3.0_f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn linear_root() {
        let r = find_root(|x| x - 0.5, 0.0, 1.0, &tol()).unwrap();
        assert!((r - 0.5).abs() < 1e-12);
    }

    #[test]
    fn cosine_root_is_half_pi() {
        let r = find_root(f64::cos, 1.0, 2.0, &tol()).unwrap();
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn no_sign_change_is_an_error() {
        match find_root(|x| x * x + 1.0, -1.0, 1.0, &tol()) {
            Err(Error::NoBracket { lo, hi }) => {
                assert_eq!((lo, hi), (-1.0, 1.0));
            }
            other => panic!("expected bracketing error, got {other:?}"),
        }
    }

    #[test]
    fn endpoint_root_returns_immediately() {
        let (r, iters) = find_root_counted(|x| x, 0.0, 1.0, &tol()).unwrap();
        assert_eq!(r, 0.0);
        assert_eq!(iters, 0);
    }

    #[test]
    fn bracket_width_scales_with_root_magnitude() {
        // Root near 1e6: the width criterion is relative there.
        let r = find_root(|x| x - 1.0e6, 0.0, 3.0e6, &tol()).unwrap();
        assert!((r - 1.0e6).abs() <= 1e-12 * 1.0e6 * 2.0);
    }
}

//! Globally adaptive quadrature built on a nested Gauss–Kronrod 7(15) pair.
//!
//! Each panel is evaluated with the 15-point Kronrod rule; the embedded
//! 7-point Gauss value supplies the error estimate. The panel with the
//! largest estimated error is bisected until the summed error falls below
//! the requested relative tolerance. All nodes are interior, so integrands
//! with removable endpoint behavior are never evaluated at the endpoints.

use crate::error::{Error, Result};
use crate::numerics::ToleranceProfile;

// 15-point Kronrod abscissae on [-1, 1] (positive half; QUADPACK dqk15).
// The tables keep the full published digits.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_33,
    0.949_107_912_342_758_524_526_189_684_047_85,
    0.864_864_423_359_769_072_789_712_788_640_93,
    0.741_531_185_599_394_439_863_864_773_280_79,
    0.586_087_235_467_691_130_294_144_838_258_73,
    0.405_845_151_377_397_166_906_606_412_076_96,
    0.207_784_955_007_898_467_600_689_403_773_24,
    0.0,
];

// Kronrod weights matching XGK.
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_97,
    0.063_092_092_629_978_553_290_700_663_189_2,
    0.104_790_010_322_250_183_839_876_322_541_52,
    0.140_653_259_715_525_918_745_189_590_510_24,
    0.169_004_726_639_267_902_826_583_426_598_55,
    0.190_350_578_064_785_409_913_256_402_421_01,
    0.204_432_940_075_298_892_414_161_999_234_65,
    0.209_482_141_084_727_828_012_999_174_891_71,
];

// 7-point Gauss weights; the Gauss nodes are XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_08,
    0.279_705_391_489_276_667_901_467_771_423_78,
    0.381_830_050_505_118_944_950_369_775_488_97,
    0.417_959_183_673_469_387_755_102_040_816_33,
];

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

/// One Gauss–Kronrod 7(15) application on [a, b].
/// Returns (kronrod value, error estimate).
fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut result_gauss = WG[3] * f_center;
    let mut result_kronrod = WGK[7] * f_center;
    let mut result_abs = WGK[7] * f_center.abs();

    let mut fv = [0.0_f64; 15];
    fv[7] = f_center;

    for j in 0..7 {
        let abscissa = half * XGK[j];
        let f1 = f(center - abscissa);
        let f2 = f(center + abscissa);
        fv[j] = f1;
        fv[14 - j] = f2;
        let sum = f1 + f2;
        result_kronrod += WGK[j] * sum;
        result_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            result_gauss += WG[j / 2] * sum;
        }
    }

    let mean = 0.5 * result_kronrod;
    let mut result_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        result_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }

    let value = result_kronrod * half;
    let result_abs = result_abs * half.abs();
    let result_asc = result_asc * half.abs();

    // QUADPACK error rescaling: sharpen the raw |K15 - G7| difference and
    // floor it at the roundoff level of the panel.
    let mut err = ((result_kronrod - result_gauss) * half).abs();
    if result_asc != 0.0 && err != 0.0 {
        err = result_asc * 1.0_f64.min((200.0 * err / result_asc).powf(1.5));
    }
    let round_off = 50.0 * f64::EPSILON * result_abs;
    if round_off > f64::MIN_POSITIVE {
        err = err.max(round_off);
    }

    (value, err)
}

/// Adaptive integral of `f` over [a, b] to `tol.quad_rel_tol` relative error.
///
/// Fails with the best estimate attached if the subdivision budget runs out.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: &ToleranceProfile) -> Result<f64> {
    if !(a < b) {
        return Err(Error::Domain(format!(
            "integration bounds must satisfy a < b, got [{a}, {b}]"
        )));
    }

    let (value, error) = kronrod15(&f, a, b);
    let mut panels = vec![Panel { a, b, value, error }];

    let mut subdivisions = 0u32;
    loop {
        let total: f64 = panels.iter().map(|p| p.value).sum();
        let err_sum: f64 = panels.iter().map(|p| p.error).sum();
        // Roundoff floor: once the error sits at the noise level of the
        // panel sums, further subdivision cannot improve the estimate.
        let noise = 50.0 * f64::EPSILON * panels.iter().map(|p| p.value.abs()).sum::<f64>();
        if err_sum <= tol.quad_rel_tol * total.abs() || err_sum <= noise {
            return Ok(total);
        }
        if subdivisions >= tol.max_subdivisions {
            return Err(Error::QuadratureDidNotConverge {
                estimate: total,
                error_bound: err_sum,
                subdivisions,
            });
        }

        let worst = panels
            .iter()
            .enumerate()
            .max_by(|(_, p), (_, q)| p.error.total_cmp(&q.error))
            .map(|(i, _)| i)
            .expect("panel list is never empty");
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (a + b);
        for (lo, hi) in [(a, mid), (mid, b)] {
            let (value, error) = kronrod15(&f, lo, hi);
            panels.push(Panel {
                a: lo,
                b: hi,
                value,
                error,
            });
        }
        subdivisions += 1;
    }
}

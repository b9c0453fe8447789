//! Special functions backing the t and F tail probabilities.
//!
//! Everything here is hand-rolled on purpose: the numerics are the core of
//! this crate, the formulas are short, and owning them keeps the dependency
//! tree flat. Accuracy targets (checked in tests against an independent
//! quadrature oracle): better than 1e-10 absolute for the regularized
//! incomplete beta over the parameter ranges used by the t and F tails.

use super::StatsError;

/// Natural log of the gamma function via the Lanczos approximation (g = 7,
/// 9 coefficients). Valid for positive arguments; accurate to ~1e-13 relative.
pub fn ln_gamma(z: f64) -> f64 {
    // Coefficients for g = 7 from Godfrey's tabulation of the Lanczos series.
    const COEFFS: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_6,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_572e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if z < 0.5 {
        // Reflection formula keeps the series in its accurate half-plane.
        let pi = std::f64::consts::PI;
        return (pi / (pi * z).sin()).ln() - ln_gamma(1.0 - z);
    }
    let z = z - 1.0;
    let mut acc = COEFFS[0];
    for (i, c) in COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + 7.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Regularized incomplete beta function `I_x(a, b)`.
///
/// Evaluated with the Lentz continued fraction, switching to the symmetric
/// form `1 - I_{1-x}(b, a)` when `x` is past the crossover point
/// `(a + 1) / (a + b + 2)` so the fraction always converges quickly.
///
/// The symmetric midpoint is special-cased: `I_{1/2}(a, a) = 1/2` exactly,
/// which keeps identities like the two-sided t tail at `t = 1, df = 1`
/// (`2 * atan(1) / pi = 1/2`) exact instead of merely close.
pub fn reg_inc_beta(x: f64, a: f64, b: f64) -> Result<f64, StatsError> {
    if !(a > 0.0) || !(b > 0.0) {
        return Err(StatsError::Domain(format!(
            "incomplete beta requires positive shape parameters, got a = {a}, b = {b}"
        )));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(StatsError::Domain(format!(
            "incomplete beta requires x in [0, 1], got x = {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    if a == b && x == 0.5 {
        return Ok(0.5);
    }
    // ln of the prefactor x^a (1-x)^b / (a B(a, b)).
    let ln_front = ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b) + a * x.ln() + b * (1.0 - x).ln();
    let value = if x < (a + 1.0) / (a + b + 2.0) {
        (ln_front.exp() / a) * beta_cf(x, a, b)
    } else {
        1.0 - (ln_front.exp() / b) * beta_cf(1.0 - x, b, a)
    };
    // Continued-fraction round-off can land a hair outside [0, 1].
    Ok(value.clamp(0.0, 1.0))
}

/// Continued fraction for the incomplete beta, evaluated with the modified
/// Lentz algorithm. Only called for `x` below the crossover point.
fn beta_cf(x: f64, a: f64, b: f64) -> f64 {
    const MAX_ITER: usize = 300;
    const EPS: f64 = 1e-15;
    const TINY: f64 = 1e-300;

    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        // Even step.
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        // Odd step.
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// Two-sided survival function of Student's t: `P(|T| >= t)` for `T ~ t(df)`.
///
/// Uses the identity `P(|T| >= t) = I_{df / (df + t^2)}(df / 2, 1/2)`.
pub fn student_t_sf2(t: f64, df: u32) -> Result<f64, StatsError> {
    if df == 0 {
        return Err(StatsError::Domain(
            "t distribution requires at least one degree of freedom".into(),
        ));
    }
    if !t.is_finite() {
        return Err(StatsError::Domain(format!(
            "t statistic must be finite, got {t}"
        )));
    }
    let df = f64::from(df);
    let x = df / (df + t * t);
    reg_inc_beta(x, df / 2.0, 0.5)
}

/// Upper tail of the F distribution: `P(F >= f)` for `F ~ F(df1, df2)`.
///
/// Uses `P(F >= f) = I_{df2 / (df2 + df1 f)}(df2 / 2, df1 / 2)`.
pub fn f_sf(f: f64, df1: u32, df2: u32) -> Result<f64, StatsError> {
    if df1 == 0 || df2 == 0 {
        return Err(StatsError::Domain(
            "F distribution requires positive degrees of freedom".into(),
        ));
    }
    if !f.is_finite() || f < 0.0 {
        return Err(StatsError::Domain(format!(
            "F statistic must be finite and non-negative, got {f}"
        )));
    }
    let d1 = f64::from(df1);
    let d2 = f64::from(df2);
    let x = d2 / (d2 + d1 * f);
    reg_inc_beta(x, d2 / 2.0, d1 / 2.0)
}

/// Quantile of the standard normal distribution (Acklam's rational
/// approximation, ~1e-9 relative accuracy — far below the reporting
/// precision used anywhere in this crate).
pub fn normal_quantile(p: f64) -> Result<f64, StatsError> {
    if !(0.0 < p && p < 1.0) {
        return Err(StatsError::Domain(format!(
            "normal quantile requires p in (0, 1), got {p}"
        )));
    }
    const A: [f64; 6] = [
        -3.969_683_028_665_376e1,
        2.209_460_984_245_205e2,
        -2.759_285_104_469_687e2,
        1.383_577_518_672_690e2,
        -3.066_479_806_614_716e1,
        2.506_628_277_459_239,
    ];
    const B: [f64; 5] = [
        -5.447_609_879_822_406e1,
        1.615_858_368_580_409e2,
        -1.556_989_798_598_866e2,
        6.680_131_188_771_972e1,
        -1.328_068_155_288_572e1,
    ];
    const C: [f64; 6] = [
        -7.784_894_002_430_293e-3,
        -3.223_964_580_411_365e-1,
        -2.400_758_277_161_838,
        -2.549_732_539_343_734,
        4.374_664_141_464_968,
        2.938_163_982_698_783,
    ];
    const D: [f64; 4] = [
        7.784_695_709_041_462e-3,
        3.224_671_290_700_398e-1,
        2.445_134_137_142_996,
        3.754_408_661_907_416,
    ];
    const P_LOW: f64 = 0.02425;

    let q;
    let value = if p < P_LOW {
        q = (-2.0 * p.ln()).sqrt();
        (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    } else if p <= 1.0 - P_LOW {
        q = p - 0.5;
        let r = q * q;
        (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q
            / (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0)
    } else {
        q = (-2.0 * (1.0 - p).ln()).sqrt();
        -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5])
            / ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0)
    };
    Ok(value)
}

/// Quantile of Student's t, solved by bisection on the two-sided tail.
/// Monotonicity of `student_t_sf2` in `t` makes this safe and deterministic.
pub fn student_t_quantile(p: f64, df: u32) -> Result<f64, StatsError> {
    if !(0.0 < p && p < 1.0) {
        return Err(StatsError::Domain(format!(
            "t quantile requires p in (0, 1), got {p}"
        )));
    }
    if df == 0 {
        return Err(StatsError::Domain(
            "t distribution requires at least one degree of freedom".into(),
        ));
    }
    if p == 0.5 {
        return Ok(0.0);
    }
    if p < 0.5 {
        return Ok(-student_t_quantile(1.0 - p, df)?);
    }
    // For p > 1/2 we want t >= 0 with P(|T| >= t) = 2 (1 - p).
    let target = 2.0 * (1.0 - p);
    let mut hi = 1.0;
    while student_t_sf2(hi, df)? > target {
        hi *= 2.0;
        if hi > 1e12 {
            break;
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if student_t_sf2(mid, df)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-13 * hi.max(1.0) {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

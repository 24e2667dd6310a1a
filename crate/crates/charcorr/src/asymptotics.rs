//! Limiting (large-`p`) values of the demerit figures, expressed through the
//! window function `Ω`, plus the optimum constants obtained by minimizing the
//! limiting autocorrelation demerit factor over the sequence-design
//! parameters.
//!
//! Conventions: `Λ` is the limit of `length/p`, `R` the limit of `shift/p`,
//! `Δ` the limit of `(shift difference)/p`, and `Σ` the limit of
//! `(shift sum)/p` along a family of sequence pairs.

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::correlation::ExactRatio;
use crate::{Error, Result};

/// `Ω(x, y) = Σ_{n ∈ ℤ} max(0, 1 - |n·x - y|)²`.
///
/// The sum is locally finite: only `n` with `n·x ∈ (y-1, y+1)` contribute.
/// Requires `x ≠ 0`; `Ω` is even in each argument separately.
pub fn omega(x: f64, y: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() || !y.is_finite() {
        return Err(Error::OmegaZeroX);
    }
    let x = x.abs();
    let n_min = ((y - 1.0) / x).ceil() as i64;
    let n_max = ((y + 1.0) / x).floor() as i64;
    let mut total = 0.0;
    for n in n_min..=n_max {
        let t = 1.0 - (n as f64 * x - y).abs();
        if t > 0.0 {
            total += t * t;
        }
    }
    Ok(total)
}

/// Exact rational evaluation of `Ω(x, y)` for rational arguments.
pub fn omega_rational(x: ExactRatio, y: ExactRatio) -> Result<ExactRatio> {
    if x.is_zero() {
        return Err(Error::OmegaZeroX);
    }
    let x = x.abs();
    let one = ExactRatio::from_integer(1);
    let n_min = ((y - one) / x).ceil().to_integer();
    let n_max = ((y + one) / x).floor().to_integer();
    let mut total = ExactRatio::from_integer(0);
    let mut n = n_min;
    while n <= n_max {
        let t = one - (ExactRatio::from_integer(n) * x - y).abs();
        if t > ExactRatio::from_integer(0) {
            total += t * t;
        }
        n += 1;
    }
    Ok(total)
}

/// Inputs of the general crosscorrelation limit: the pair parameters
/// `(S, U, V)` and the geometric limits `(Λ, Δ, Σ)`.
#[derive(Debug, Clone, Copy)]
pub struct LimitInputs {
    pub s: f64,
    pub u: f64,
    pub v: f64,
    pub lambda: f64,
    pub delta: f64,
    pub sigma: f64,
}

/// Limiting crosscorrelation demerit factor:
/// `CDF → S·(2Λ/3) + Ω(1/Λ, 0) + U·Ω(1/Λ, Δ/Λ) + V·Ω(1/Λ, 1 + Σ/Λ)`.
pub fn limit_cdf(inputs: &LimitInputs) -> Result<f64> {
    let LimitInputs { s, u, v, lambda, delta, sigma } = *inputs;
    if !(lambda > 0.0) {
        return Err(Error::NonPositiveLambda(lambda));
    }
    let x = 1.0 / lambda;
    Ok(s * (2.0 * lambda / 3.0)
        + omega(x, 0.0)?
        + u * omega(x, delta / lambda)?
        + v * omega(x, 1.0 + sigma / lambda)?)
}

/// Limiting autocorrelation demerit factor (the `f = g` case, where the
/// shifts coincide so `Δ = 0` and `Σ = 2R`, and `U = 1`):
/// `DF → -1 + S·(2Λ/3) + 2Ω(1/Λ, 0) + V·Ω(1/Λ, 1 + 2R/Λ)`.
pub fn limit_df(s: f64, v: f64, lambda: f64, r: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::NonPositiveLambda(lambda));
    }
    let x = 1.0 / lambda;
    Ok(-1.0
        + s * (2.0 * lambda / 3.0)
        + 2.0 * omega(x, 0.0)?
        + v * omega(x, 1.0 + 2.0 * r / lambda)?)
}

/// Quartic-family autocorrelation limit,
/// `DF → -1 - (3 + cos 2γ)·Λ/3 + 2Ω(1/Λ, 0) + Ω(1/Λ, 1 + 2R/Λ)`,
/// obtained from [`limit_df`] with `S = (-3 - cos 2γ)/2` and `V = 1`.
pub fn limit_df_quartic(lambda: f64, r: f64, cos_two_gamma: f64) -> Result<f64> {
    limit_df((-3.0 - cos_two_gamma) / 2.0, 1.0, lambda, r)
}

/// Legendre-family autocorrelation limit,
/// `DF → -1 - 4Λ/3 + 2Ω(1/Λ, 0) + Ω(1/Λ, 1 + 2R/Λ)`
/// (`S = -2`, `V = 1`).
pub fn limit_df_legendre(lambda: f64, r: f64) -> Result<f64> {
    limit_df(-2.0, 1.0, lambda, r)
}

/// Exact rational form of [`limit_df_legendre`]; at `(Λ, R) = (1, 1/4)` it
/// returns exactly `1/6`.
pub fn limit_df_legendre_rational(lambda: ExactRatio, r: ExactRatio) -> Result<ExactRatio> {
    if lambda <= ExactRatio::from_integer(0) {
        return Err(Error::NonPositiveLambda(0.0));
    }
    let one = ExactRatio::from_integer(1);
    let x = one / lambda;
    let two = ExactRatio::from_integer(2);
    let term_s = -two * Ratio::new(2, 3) * lambda;
    let omega_zero = omega_rational(x, ExactRatio::from_integer(0))?;
    let omega_v = omega_rational(x, one + two * r / lambda)?;
    Ok(-one + term_s + two * omega_zero + omega_v)
}

/// Crosscorrelation limit of the two quartic families,
/// `CDF(f, g) → (-1 + cos 2γ)·Λ/3 + Ω(1/Λ, 0)`
/// (`S = (-1 + cos 2γ)/2`, `U = V = 0`). At `Λ = 1` this is
/// `(2 + cos 2γ)/3`, minimized at `1/3` when `cos 2γ = -1`.
pub fn limit_cdf_fg(lambda: f64, cos_two_gamma: f64) -> Result<f64> {
    limit_cdf(&LimitInputs {
        s: (-1.0 + cos_two_gamma) / 2.0,
        u: 0.0,
        v: 0.0,
        lambda,
        delta: 0.0,
        sigma: 0.0,
    })
}

/// Crosscorrelation limit of a quartic family against the Legendre family,
/// `CDF(f, h) → Ω(1/Λ, 0)` (`S = U = V = 0`).
pub fn limit_cdf_fh(lambda: f64) -> Result<f64> {
    limit_cdf(&LimitInputs { s: 0.0, u: 0.0, v: 0.0, lambda, delta: 0.0, sigma: 0.0 })
}

/// Closed form of `Ω(1/x, 0)` for `x > 0`: with `m = ⌊x⌋`,
/// `Ω(1/x, 0) = 2m + 1 - 2m(m+1)/x + m(m+1)(2m+1)/(3x²)`.
///
/// Used as an independent oracle for the windowed sum.
pub fn closed_form_omega_at_zero(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::OmegaZeroX);
    }
    let m = x.floor();
    Ok(2.0 * m + 1.0 - 2.0 * m * (m + 1.0) / x + m * (m + 1.0) * (2.0 * m + 1.0) / (3.0 * x * x))
}

/// Closed form of `Ω(1/x, 1/(2x))` for `x > 0`: with `m` the integer nearest
/// to `x` (so `x ∈ [m - 1/2, m + 1/2]`),
/// `Ω(1/x, 1/(2x)) = 2m - 2m²/x + m(4m² - 1)/(6x²)`;
/// in particular it vanishes for `0 < x < 1/2`.
pub fn closed_form_omega_at_half(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::OmegaZeroX);
    }
    let m = (x + 0.5).floor();
    Ok(2.0 * m - 2.0 * m * m / x + m * (4.0 * m * m - 1.0) / (6.0 * x * x))
}

/// The three optimum constants of the limiting autocorrelation demerit
/// factor for the residue-class families studied here.
///
/// * `df_min`: the minimum limiting demerit factor — the smallest root of
///   `27x³ - 417x² + 249x - 29`;
/// * `mf_max = 1/df_min`: the corresponding maximum merit factor — the
///   largest root of `29x³ - 249x² + 417x - 27`;
/// * `lambda_app`: the fractional length achieving them — the middle root of
///   `4x³ - 30x + 27`.
#[derive(Debug, Clone, Copy)]
pub struct OptimumConstants {
    pub df_min: f64,
    pub mf_max: f64,
    pub lambda_app: f64,
}

/// Bisection to full double precision; the bracket must straddle a sign
/// change.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(
        flo * f(hi) < 0.0,
        "bisection bracket [{lo}, {hi}] does not straddle a sign change"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Computes the optimum constants by root-finding on their defining cubics.
pub fn optimum_constants() -> OptimumConstants {
    let df_min = bisect(|x| 27.0 * x.powi(3) - 417.0 * x * x + 249.0 * x - 29.0, 0.1, 0.2);
    let mf_max = bisect(|x| 29.0 * x.powi(3) - 249.0 * x * x + 417.0 * x - 27.0, 6.0, 7.0);
    let lambda_app = bisect(|x| 4.0 * x.powi(3) - 30.0 * x + 27.0, 1.0, 1.3);
    OptimumConstants { df_min, mf_max, lambda_app }
}

/// The optimal fractional shift used by the appended parameter choice,
/// `R = (3 - 2Λ)/4`, a member of the optimal set `{(1 - 2Λ)/4 + n/2}` that
/// minimizes `Ω(1/Λ, 1 + 2R/Λ)` at fixed `Λ`.
pub fn appended_shift_fraction(lambda: f64) -> f64 {
    (3.0 - 2.0 * lambda) / 4.0
}

/// Coefficients of the limiting demerit figures at the appended parameter
/// choice `(R, Λ) = ((3 - 2Λ*)/4, Λ*)` with `Λ*` = `lambda_app`:
///
/// * `DF → df_constant - cos_coefficient · cos 2γ` (either quartic family);
/// * `CDF → cdf_constant + cos_coefficient · cos 2γ` (quartic pair);
/// * `PSC → df_constant + cdf_constant`, independent of `γ`.
#[derive(Debug, Clone, Copy)]
pub struct AppendedLimitCoefficients {
    pub df_constant: f64,
    pub cdf_constant: f64,
    pub cos_coefficient: f64,
}

/// Computes the appended-limit coefficients from the `Ω` formulas at the
/// optimum fractional length.
pub fn appended_limit_coefficients() -> Result<AppendedLimitCoefficients> {
    let lambda = optimum_constants().lambda_app;
    let x = 1.0 / lambda;
    let r = appended_shift_fraction(lambda);
    // DF(γ) = -1 - Λ + 2Ω(1/Λ,0) + Ω(1/Λ,1+2R/Λ) - (Λ/3)·cos 2γ.
    let df_constant =
        -1.0 - lambda + 2.0 * omega(x, 0.0)? + omega(x, 1.0 + 2.0 * r / lambda)?;
    // CDF(γ) = -Λ/3 + Ω(1/Λ,0) + (Λ/3)·cos 2γ.
    let cdf_constant = -lambda / 3.0 + omega(x, 0.0)?;
    Ok(AppendedLimitCoefficients { df_constant, cdf_constant, cos_coefficient: lambda / 3.0 })
}

/// Limiting Pursley–Sarwate criterion of the quartic pair at the natural
/// parameters: exactly `7/6`, independent of the prime.
///
/// At `Λ = 1`, `R = 1/4` the limits are `DF = 1/2 - cos(2γ)/3 ≥ 1/6 > 0` and
/// `CDF = 2/3 + cos(2γ)/3`, so `PSC = DF + CDF = 7/6` with no absolute-value
/// correction.
pub fn psc_limit_natural() -> ExactRatio {
    Ratio::new(7, 6)
}

/// Limiting Pursley–Sarwate criterion of the quartic pair at the appended
/// parameters: `df_constant + cdf_constant`, again independent of `γ`.
pub fn psc_limit_appended() -> Result<f64> {
    let c = appended_limit_coefficients()?;
    Ok(c.df_constant + c.cdf_constant)
}

//! Figure datasets: exact demerit figures swept over primes, paired with the
//! recomputed asymptote in every row, as typed rows ready for CSV output.
//!
//! Three sweeps are provided:
//! * the quartic pair `(f, g)` over primes `p ≡ 1 mod 4`,
//! * a quartic family against the Legendre family `(f, h)` over the same
//!   primes,
//! * a fractional-length sweep of `(f, g)` pairs over the 100 smallest primes
//!   of the form `1 + (2c)²`, where the `k`-th pair has length as close as
//!   possible to `k/10` periods.
//!
//! The first two come in a natural-parameter variant (`shift = (p-1)/4`,
//! `length = p`) and an appended variant (`length ≈ Λ*·p` at the optimum
//! fractional length `Λ*`). Asymptote columns are recomputed from the limit
//! formulas for each row, never copied from constants.

use std::sync::Arc;

use rayon::prelude::*;

use crate::asymptotics::{
    appended_shift_fraction, limit_cdf_fg, limit_cdf_fh, limit_df_legendre, limit_df_quartic,
    optimum_constants,
};
use crate::characters::cos_two_gamma;
use crate::correlation::{cdf_exact, df_exact, ratio_to_f64};
use crate::field::{is_prime, PrimeField};
use crate::sequences::{appended_params, legendre_h, natural_params, quartic_f, quartic_g};
use crate::{format_significant, Result};

/// Which `(shift, length)` rule a sweep uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParameterChoice {
    /// `shift = (p-1)/4`, `length = p`: one period starting at the
    /// quarter-point.
    Natural,
    /// `length = round(Λ*·p)`, `shift = round(p·(3-2Λ*)/4)` at the optimum
    /// fractional length `Λ*`, periodically extending the sequence.
    Appended,
}

impl ParameterChoice {
    /// The `(Λ, R)` limits of the rule, used by the asymptote columns.
    pub fn limits(self) -> (f64, f64) {
        match self {
            ParameterChoice::Natural => (1.0, 0.25),
            ParameterChoice::Appended => {
                let lambda = optimum_constants().lambda_app;
                (lambda, appended_shift_fraction(lambda))
            }
        }
    }

    /// Concrete `(shift, length)` for a prime.
    pub fn shift_length(self, p: u64) -> Result<(i64, usize)> {
        match self {
            ParameterChoice::Natural => natural_params(p),
            ParameterChoice::Appended => appended_params(p, optimum_constants().lambda_app),
        }
    }
}

/// Primes `p ≡ 1 mod 4` with `13 ≤ p < p_max`, ascending.
pub fn quartic_primes(p_max: u64) -> Vec<u64> {
    (13..p_max).filter(|&p| p % 4 == 1 && is_prime(p)).collect()
}

/// The `count` smallest primes of the form `1 + (2c)²`, ascending
/// (5, 17, 37, 101, ...); for these `cos 2γ_p = (1 - (2c)²)/p → -1`.
pub fn primes_one_plus_even_square(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c: u64 = 1;
    while out.len() < count {
        let candidate = 1 + (2 * c) * (2 * c);
        if is_prime(candidate) {
            out.push(candidate);
        }
        c += 1;
    }
    out
}

/// Rounds `numerator/denominator` to the nearest integer, halves away from
/// zero (the same convention as `f64::round`), exactly in integers.
fn round_half_away(numerator: i64, denominator: i64) -> i64 {
    debug_assert!(denominator > 0);
    if numerator >= 0 {
        (numerator + denominator / 2) / denominator
    } else {
        -((-numerator + denominator / 2) / denominator)
    }
}

/// One row of a quartic-pair sweep: both autocorrelation demerit factors,
/// their crosscorrelation, and the shared asymptotes (the `f` and `g`
/// families have identical limiting autocorrelation behavior).
#[derive(Debug, Clone, Copy)]
pub struct QuarticPairRow {
    pub p: u64,
    pub cos_two_gamma: f64,
    pub df_f: f64,
    pub df_g: f64,
    pub cdf_fg: f64,
    pub asym_df: f64,
    pub asym_cdf: f64,
}

impl QuarticPairRow {
    pub const HEADER: [&'static str; 7] =
        ["p", "cos2gamma", "df_f", "df_g", "cdf_fg", "asym_df", "asym_cdf"];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            format_significant(self.cos_two_gamma, 9),
            format_significant(self.df_f, 9),
            format_significant(self.df_g, 9),
            format_significant(self.cdf_fg, 9),
            format_significant(self.asym_df, 9),
            format_significant(self.asym_cdf, 9),
        ]
    }

    /// Pursley–Sarwate criterion reassembled from the stored figures.
    pub fn psc(&self) -> f64 {
        (self.df_f * self.df_g).sqrt() + self.cdf_fg
    }
}

/// One row of a quartic-versus-Legendre sweep; the two families have
/// different limiting autocorrelations, so both asymptotes are present.
#[derive(Debug, Clone, Copy)]
pub struct MixedPairRow {
    pub p: u64,
    pub cos_two_gamma: f64,
    pub df_f: f64,
    pub df_h: f64,
    pub cdf_fh: f64,
    pub asym_df_f: f64,
    pub asym_df_h: f64,
    pub asym_cdf: f64,
}

impl MixedPairRow {
    pub const HEADER: [&'static str; 8] = [
        "p",
        "cos2gamma",
        "df_f",
        "df_h",
        "cdf_fh",
        "asym_df_f",
        "asym_df_h",
        "asym_cdf",
    ];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.p.to_string(),
            format_significant(self.cos_two_gamma, 9),
            format_significant(self.df_f, 9),
            format_significant(self.df_h, 9),
            format_significant(self.cdf_fh, 9),
            format_significant(self.asym_df_f, 9),
            format_significant(self.asym_df_h, 9),
            format_significant(self.asym_cdf, 9),
        ]
    }
}

/// One row of the fractional-length sweep: the `k`-th pair uses the `k`-th
/// prime of the form `1 + (2c)²` at fractional length `k/10`.
#[derive(Debug, Clone, Copy)]
pub struct FractionalLengthRow {
    pub k: u32,
    pub p: u64,
    pub fractional_length: f64,
    pub cdf: f64,
    pub asym_curve: f64,
}

impl FractionalLengthRow {
    pub const HEADER: [&'static str; 5] =
        ["k", "p_k", "fractional_length", "cdf", "asym_curve"];

    pub fn record(&self) -> Vec<String> {
        vec![
            self.k.to_string(),
            self.p.to_string(),
            format_significant(self.fractional_length, 9),
            format_significant(self.cdf, 9),
            format_significant(self.asym_curve, 9),
        ]
    }
}

/// Quartic-pair sweep over primes `p ≡ 1 mod 4`, `13 ≤ p < p_max`.
pub fn quartic_pair_rows(p_max: u64, choice: ParameterChoice) -> Result<Vec<QuarticPairRow>> {
    let (lambda, r) = choice.limits();
    quartic_primes(p_max)
        .into_par_iter()
        .map(|p| {
            let field = Arc::new(PrimeField::new(p)?);
            let (shift, length) = choice.shift_length(p)?;
            let f = quartic_f(field.clone(), shift, length)?.unimodularize();
            let g = quartic_g(field, shift, length)?.unimodularize();
            let c = cos_two_gamma(p)?;
            Ok(QuarticPairRow {
                p,
                cos_two_gamma: c,
                df_f: ratio_to_f64(df_exact(&f)?),
                df_g: ratio_to_f64(df_exact(&g)?),
                cdf_fg: ratio_to_f64(cdf_exact(&f, &g)?),
                asym_df: limit_df_quartic(lambda, r, c)?,
                asym_cdf: limit_cdf_fg(lambda, c)?,
            })
        })
        .collect()
}

/// Quartic-versus-Legendre sweep over primes `p ≡ 1 mod 4`, `13 ≤ p < p_max`.
pub fn quartic_legendre_rows(p_max: u64, choice: ParameterChoice) -> Result<Vec<MixedPairRow>> {
    let (lambda, r) = choice.limits();
    quartic_primes(p_max)
        .into_par_iter()
        .map(|p| {
            let field = Arc::new(PrimeField::new(p)?);
            let (shift, length) = choice.shift_length(p)?;
            let f = quartic_f(field.clone(), shift, length)?.unimodularize();
            let h = legendre_h(field, shift, length)?.unimodularize();
            let c = cos_two_gamma(p)?;
            Ok(MixedPairRow {
                p,
                cos_two_gamma: c,
                df_f: ratio_to_f64(df_exact(&f)?),
                df_h: ratio_to_f64(df_exact(&h)?),
                cdf_fh: ratio_to_f64(cdf_exact(&f, &h)?),
                asym_df_f: limit_df_quartic(lambda, r, c)?,
                asym_df_h: limit_df_legendre(lambda, r)?,
                asym_cdf: limit_cdf_fh(lambda)?,
            })
        })
        .collect()
}

/// Fractional-length sweep: for `k = 1..=100`, the pair `(f, g)` over the
/// `k`-th prime `p_k` of the form `1 + (2c)²`, with
/// `length = round(p_k·k/10)` and `shift = round(p_k·(3 - 2·k/10)/4)`
/// (both computed exactly in integers, halves away from zero). The asymptote
/// column is the `cos 2γ → -1` crosscorrelation limit at `Λ = k/10`.
///
/// Lengths reach several million, where the transform correlation kernel
/// takes over; each in-flight pair needs a scratch buffer of roughly
/// `32·(2·length)` bytes.
pub fn fractional_length_rows(count: u32) -> Result<Vec<FractionalLengthRow>> {
    let primes = primes_one_plus_even_square(count as usize);
    (1..=count)
        .into_par_iter()
        .map(|k| {
            let p = primes[(k - 1) as usize];
            let field = Arc::new(PrimeField::new(p)?);
            let length = round_half_away(p as i64 * k as i64, 10).max(1) as usize;
            let shift = round_half_away(p as i64 * (30 - 2 * k as i64), 40);
            let f = quartic_f(field.clone(), shift, length)?.unimodularize();
            let g = quartic_g(field, shift, length)?.unimodularize();
            let lambda = k as f64 / 10.0;
            Ok(FractionalLengthRow {
                k,
                p,
                fractional_length: lambda,
                cdf: ratio_to_f64(cdf_exact(&f, &g)?),
                asym_curve: limit_cdf_fg(lambda, -1.0)?,
            })
        })
        .collect()
}

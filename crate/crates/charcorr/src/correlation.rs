//! Exact aperiodic and periodic correlation, demerit/merit factors, the
//! Pursley–Sarwate criterion, and the finite Fourier transform.
//!
//! Sequences with terms in `{-1, 0, +1}` get exact integer correlation values
//! (`i64`) and exact rational demerit factors (`Ratio<i128>`). The default
//! aperiodic kernel is direct O(ℓ²) summation; lengths above a crossover use a
//! transform-based O(ℓ log ℓ) kernel whose output is rounded back to the
//! integer lattice and rejected if it drifted — the two kernels are verified
//! to agree exactly on every tested input up to the crossover.

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rustfft::FftPlanner;

use crate::sequences::Sequence;
use crate::{Error, Result};

/// Exact rational value of a demerit figure (numerator/denominator of the
/// defining quotient of correlation power sums).
pub type ExactRatio = Ratio<i128>;

/// Largest length handled by the direct kernel before switching to the
/// transform kernel; also the range over which the two are cross-checked.
pub const DIRECT_KERNEL_MAX_LEN: usize = 4096;

/// Aperiodic correlation values `C(s)` for shifts `-(ℓ-1) ..= ℓ-1`.
///
/// `C(s) = Σ_j f_j·g_{j+s}` with out-of-range terms zero, so `C(s) = 0` for
/// `|s| ≥ ℓ` and the stored window covers every possibly-nonzero shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelationProfile {
    length: usize,
    values: Vec<i64>,
}

impl CorrelationProfile {
    /// Length ℓ of the correlated sequences.
    pub fn length(&self) -> usize {
        self.length
    }

    /// Smallest stored shift, `-(ℓ-1)`.
    pub fn min_shift(&self) -> i64 {
        -(self.length as i64 - 1)
    }

    /// `C(s)`, zero outside the stored window.
    pub fn value(&self, s: i64) -> i64 {
        let idx = s + (self.length as i64 - 1);
        if idx < 0 || idx >= self.values.len() as i64 {
            0
        } else {
            self.values[idx as usize]
        }
    }

    /// All stored values, index `i` holding shift `i - (ℓ-1)`.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `Σ_s C(s)²` over all shifts, exactly.
    pub fn sum_squares(&self) -> i128 {
        self.values.iter().map(|&v| (v as i128) * (v as i128)).sum()
    }

    /// `Σ_{s≠0} C(s)²`, exactly.
    pub fn sum_squares_off_zero(&self) -> i128 {
        let zero = self.value(0) as i128;
        self.sum_squares() - zero * zero
    }
}

/// Aperiodic crosscorrelation of two equal-length sequences, dispatching to
/// the direct kernel below the crossover length and the transform kernel
/// above it.
pub fn cross_correlation(f: &Sequence, g: &Sequence) -> Result<CorrelationProfile> {
    if f.len() != g.len() {
        return Err(Error::LengthMismatch { left: f.len(), right: g.len() });
    }
    if f.is_empty() {
        return Err(Error::AllZeroSequence);
    }
    if f.len() <= DIRECT_KERNEL_MAX_LEN {
        Ok(direct_cross_correlation(&f.terms, &g.terms))
    } else {
        fft_cross_correlation(&f.terms, &g.terms)
    }
}

/// Direct O(ℓ²) crosscorrelation kernel over `{-1, 0, +1}` terms.
pub fn direct_cross_correlation(f: &[i8], g: &[i8]) -> CorrelationProfile {
    let l = f.len();
    assert_eq!(l, g.len(), "kernel requires equal lengths");
    assert!(l > 0, "kernel requires nonempty input");
    let mut values = vec![0i64; 2 * l - 1];
    for s in 0..l {
        // C(s) = Σ_{j=0}^{ℓ-1-s} f_j·g_{j+s}
        let mut acc: i64 = 0;
        for j in 0..l - s {
            acc += (f[j] as i64) * (g[j + s] as i64);
        }
        values[l - 1 + s] = acc;
        if s > 0 {
            // C(-s) = Σ_{j=s}^{ℓ-1} f_j·g_{j-s}
            let mut acc: i64 = 0;
            for j in s..l {
                acc += (f[j] as i64) * (g[j - s] as i64);
            }
            values[l - 1 - s] = acc;
        }
    }
    CorrelationProfile { length: l, values }
}

/// Crosscorrelation of complex-valued sequences (general character
/// combinations); same shift window as the integer profile.
pub fn cross_correlation_complex(f: &[Complex64], g: &[Complex64]) -> Vec<Complex64> {
    let l = f.len();
    assert_eq!(l, g.len(), "kernel requires equal lengths");
    let mut values = vec![Complex64::new(0.0, 0.0); 2 * l.max(1) - 1];
    for (idx, value) in values.iter_mut().enumerate() {
        let s = idx as i64 - (l as i64 - 1);
        let (j0, j1) = if s >= 0 { (0, l as i64 - s) } else { (-s, l as i64) };
        let mut acc = Complex64::new(0.0, 0.0);
        for j in j0..j1 {
            acc += f[j as usize] * g[(j + s) as usize].conj();
        }
        *value = acc;
    }
    values
}

/// Smallest 2·3·5-smooth integer ≥ `target` (transform sizes).
fn next_smooth_235(target: usize) -> usize {
    let mut best = usize::MAX;
    let mut p2 = 1usize;
    while p2 / 2 < target {
        let mut p23 = p2;
        while p23 / 3 < target {
            let mut n = p23;
            while n < target {
                n *= 5;
            }
            best = best.min(n);
            p23 = match p23.checked_mul(3) {
                Some(v) => v,
                None => break,
            };
        }
        p2 = match p2.checked_mul(2) {
            Some(v) => v,
            None => break,
        };
    }
    best
}

/// Transform-based crosscorrelation kernel: one forward FFT of the packed
/// pair `f + i·g`, a Hermitian unpack into `conj(F)·G`, and one inverse FFT.
/// Results are rounded to the integer lattice; drift beyond 0.25 is an error.
pub fn fft_cross_correlation(f: &[i8], g: &[i8]) -> Result<CorrelationProfile> {
    let l = f.len();
    if l != g.len() {
        return Err(Error::LengthMismatch { left: l, right: g.len() });
    }
    if l == 0 {
        return Err(Error::AllZeroSequence);
    }
    let n = next_smooth_235(2 * l - 1);
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..l {
        buf[j] = Complex64::new(f[j] as f64, g[j] as f64);
    }
    let mut planner = FftPlanner::new();
    let forward = planner.plan_fft_forward(n);
    let inverse = planner.plan_fft_inverse(n);
    let scratch_len = forward
        .get_inplace_scratch_len()
        .max(inverse.get_inplace_scratch_len());
    let mut scratch = vec![Complex64::new(0.0, 0.0); scratch_len];
    forward.process_with_scratch(&mut buf, &mut scratch);
    // With Z = F + iG and both spectra Hermitian (real inputs):
    //   F_a = (Z_a + conj(Z_{n-a}))/2,  G_a = -(i/2)(Z_a - conj(Z_{n-a})).
    // Replace Z by P = conj(F)·G, whose inverse transform is the cyclic
    // crosscorrelation c_k = Σ_j f_j·g_{(j+k) mod n}.
    for a in 0..=n / 2 {
        let b = (n - a) % n;
        let za = buf[a];
        let zb = buf[b];
        let fa = (za + zb.conj()) * 0.5;
        let ga = (za - zb.conj()) * Complex64::new(0.0, -0.5);
        buf[a] = fa.conj() * ga;
        if a != b {
            let fb = (zb + za.conj()) * 0.5;
            let gb = (zb - za.conj()) * Complex64::new(0.0, -0.5);
            buf[b] = fb.conj() * gb;
        }
    }
    inverse.process_with_scratch(&mut buf, &mut scratch);
    let scale = 1.0 / n as f64;
    let mut values = vec![0i64; 2 * l - 1];
    let mut max_drift = 0.0f64;
    for (idx, value) in values.iter_mut().enumerate() {
        let s = idx as i64 - (l as i64 - 1);
        let raw = buf[s.rem_euclid(n as i64) as usize].re * scale;
        let rounded = raw.round();
        max_drift = max_drift.max((raw - rounded).abs());
        *value = rounded as i64;
    }
    if max_drift > 0.25 {
        return Err(Error::KernelDrift(max_drift));
    }
    Ok(CorrelationProfile { length: l, values })
}

/// Crosscorrelation demerit factor as an exact rational:
/// `Σ_s C_{f,g}(s)² / (C_{f,f}(0)·C_{g,g}(0))`.
pub fn cdf_exact(f: &Sequence, g: &Sequence) -> Result<ExactRatio> {
    let nf = f.nonzero_count() as i128;
    let ng = g.nonzero_count() as i128;
    if nf == 0 || ng == 0 {
        return Err(Error::AllZeroSequence);
    }
    let profile = cross_correlation(f, g)?;
    Ok(Ratio::new(profile.sum_squares(), nf * ng))
}

/// Autocorrelation demerit factor as an exact rational: `CDF(f,f) - 1`.
pub fn df_exact(f: &Sequence) -> Result<ExactRatio> {
    Ok(cdf_exact(f, f)? - Ratio::from_integer(1))
}

/// Demerit figures of a sequence pair.
///
/// `cmf = 1/cdf` (infinite when `cdf = 0`) and
/// `psc = sqrt(df_f·df_g) + cdf ≥ 1` for unimodular binary pairs.
#[derive(Debug, Clone, Copy)]
pub struct MeritReport {
    pub cdf: f64,
    pub cmf: f64,
    pub df_f: f64,
    pub df_g: f64,
    pub psc: f64,
}

/// Computes the full merit report for a pair (exact paths, then one float
/// conversion at the end).
pub fn merit_report(f: &Sequence, g: &Sequence) -> Result<MeritReport> {
    let cdf = ratio_to_f64(cdf_exact(f, g)?);
    let df_f = ratio_to_f64(df_exact(f)?);
    let df_g = ratio_to_f64(df_exact(g)?);
    let cmf = if cdf > 0.0 { 1.0 / cdf } else { f64::INFINITY };
    let psc = (df_f * df_g).sqrt() + cdf;
    Ok(MeritReport { cdf, cmf, df_f, df_g, psc })
}

/// Exact rational to nearest double.
pub fn ratio_to_f64(r: ExactRatio) -> f64 {
    r.to_f64().expect("ratio fits in f64")
}

/// Periodic crosscorrelation `PC(s) = Σ_j u_j·v_{(j+s) mod n}` for all
/// `s` in `0..n`.
pub fn periodic_cross_correlation(u: &[i8], v: &[i8]) -> Result<Vec<i64>> {
    let n = u.len();
    if n != v.len() {
        return Err(Error::LengthMismatch { left: n, right: v.len() });
    }
    let mut out = vec![0i64; n];
    for (s, slot) in out.iter_mut().enumerate() {
        let mut acc: i64 = 0;
        for j in 0..n {
            let k = j + s;
            let k = if k >= n { k - n } else { k };
            acc += (u[j] as i64) * (v[k] as i64);
        }
        *slot = acc;
    }
    Ok(out)
}

/// Mean squared periodic crosscorrelation `(1/(p(p-1)))·Σ_a PC(a)²`, the
/// quantity that the S+1+U+V parameter identity predicts for one period of a
/// character combination pair.
pub fn mean_square_periodic(u: &[i8], v: &[i8]) -> Result<f64> {
    let n = u.len() as i128;
    let pc = periodic_cross_correlation(u, v)?;
    let power: i128 = pc.iter().map(|&x| (x as i128) * (x as i128)).sum();
    Ok(power as f64 / (n * (n - 1)) as f64)
}

/// Finite Fourier transform `û_a = Σ_x u_x·exp(+2πi·a·x/n)` (the sign
/// convention under which periodic correlation pairs with `û·conj(v̂)`).
pub fn dft(u: &[Complex64]) -> Vec<Complex64> {
    let n = u.len();
    let twiddle: Vec<Complex64> = (0..n)
        .map(|t| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t as f64 / n as f64))
        .collect();
    (0..n)
        .map(|a| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (x, &ux) in u.iter().enumerate() {
                acc += ux * twiddle[a * x % n];
            }
            acc
        })
        .collect()
}

/// Inverse of [`dft`]: `u_x = (1/n)·Σ_a û_a·exp(-2πi·a·x/n)`.
pub fn inverse_dft(hat: &[Complex64]) -> Vec<Complex64> {
    let n = hat.len();
    let twiddle: Vec<Complex64> = (0..n)
        .map(|t| Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * t as f64 / n as f64))
        .collect();
    (0..n)
        .map(|x| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (a, &ha) in hat.iter().enumerate() {
                acc += ha * twiddle[a * x % n];
            }
            acc / n as f64
        })
        .collect()
}

/// Integer input convenience for [`dft`].
pub fn dft_int(u: &[i8]) -> Vec<Complex64> {
    let complex: Vec<Complex64> = u.iter().map(|&t| Complex64::new(t as f64, 0.0)).collect();
    dft(&complex)
}

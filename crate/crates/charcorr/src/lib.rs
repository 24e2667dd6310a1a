//! Binary sequences derived from multiplicative characters of prime finite
//! fields, with exact correlation figures of merit and their asymptotic limits.
//!
//! The crate is organized around one pipeline:
//!
//! ```text
//! field      prime fields, primitive roots, discrete-log tables
//! characters multiplicative/additive characters, Gauss sums, p = a² + b²
//! sequences  2m-th residue-class sequences (quartic f/g, Legendre h),
//!            character combinations, shift/length parameterizations
//! correlation aperiodic & periodic correlation (exact integer), DFT,
//!            demerit/merit factors, Pursley–Sarwate criterion
//! pair_params the S/U/V/W parameters of a sequence pair, closed forms,
//!            and identity diagnostics
//! asymptotics the Ω kernel, limiting demerit-factor formulas, and the
//!            optimum constants
//! figures    the five reproducible experiment datasets
//! checks     the runtime verification suites (shared by the CLI and tests)
//! ```
//!
//! All headline numbers follow exact integer/rational paths; floating point is
//! confined to Gauss-sum cross-checks, the asymptotic formulas, and output
//! formatting.

pub mod asymptotics;
pub mod characters;
pub mod checks;
pub mod correlation;
pub mod field;
pub mod figures;
pub mod pair_params;
pub mod sequences;

pub use characters::{AdditiveCharacter, MultiplicativeCharacter, TwoSquares};
pub use correlation::{CorrelationProfile, MeritReport};
pub use field::PrimeField;
pub use pair_params::PairParameters;
pub use sequences::{CharCombination, FamilyKind, ResidueClassSpec, Sequence};

/// Errors produced by sequence construction and correlation evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("prime {p} is not congruent to 1 mod {modulus}")]
    Congruence { p: u64, modulus: u64 },
    #[error("residue {residue} out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },
    #[error("expected {expected} residue classes, got {got}")]
    ClassCount { expected: usize, got: usize },
    #[error("class index {index} out of range 0..{limit}")]
    ClassIndexOutOfRange { index: u32, limit: u32 },
    #[error("sequences have different lengths {left} and {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("sequence has no nonzero term (zero autocorrelation at shift 0)")]
    AllZeroSequence,
    #[error("sequences belong to different fields ({left} vs {right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("Ω(x, y) requires x ≠ 0")]
    OmegaZeroX,
    #[error("parameter Λ must be positive, got {0}")]
    NonPositiveLambda(f64),
    #[error("quadruple Gauss-sum parameter has non-vanishing imaginary part {0:e}")]
    ResidualImaginary(f64),
    #[error("transform kernel drifted from integer lattice by {0:e}")]
    KernelDrift(f64),
    #[error("discrete-log table is corrupt: {0}")]
    CorruptTable(String),
}

/// Convenient result alias for this crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Formats `x` in plain decimal with the given number of significant digits.
///
/// Deterministic (round-to-nearest-even via the standard formatter) and free of
/// exponent notation for the magnitudes that occur in this crate's output.
pub fn format_significant(x: f64, digits: usize) -> String {
    assert!(digits > 0);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // d.ddd…e±ee with `digits` mantissa digits, then re-expanded in plain form.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exponent) = sci.split_once('e').expect("scientific format");
    let exponent: i32 = exponent.parse().expect("exponent");
    let neg = mantissa.starts_with('-');
    let digits_only: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let point = exponent + 1; // digits before the decimal point
    if point <= 0 {
        out.push_str("0.");
        for _ in 0..-point {
            out.push('0');
        }
        out.push_str(&digits_only);
    } else if (point as usize) >= digits_only.len() {
        out.push_str(&digits_only);
        for _ in 0..(point as usize - digits_only.len()) {
            out.push('0');
        }
    } else {
        out.push_str(&digits_only[..point as usize]);
        out.push('.');
        out.push_str(&digits_only[point as usize..]);
    }
    out
}

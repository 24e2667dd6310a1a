//! Residue-class sequences and their character-combination form.
//!
//! A `2m`-th residue class sequence picks `m` of the `2m` cosets of the
//! `2m`-th powers in `F_p^*`: indices landing in a chosen coset give `+1`,
//! other nonzero indices give `-1`, and multiples of `p` give `0` (the
//! zero-keeping, "tilde" form). Unimodularization replaces the zeros with
//! `+1`. The quartic pair (`m = 2`, classes `{0,1}` and `{0,3}`) and the
//! Legendre family (`m = 1`, classes `{0}`) are provided as named wrappers.
//!
//! Every residue-class sequence equals a normalized linear combination of the
//! nontrivial characters in the order-`2m` subgroup of the character group;
//! `combination_coefficients` produces that combination and
//! `evaluate_combination` evaluates it pointwise.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_complex::Complex64;

use crate::characters::MultiplicativeCharacter;
use crate::field::PrimeField;
use crate::{Error, Result};

/// The three named sequence families used throughout the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Quartic family `f`: classes `{0, 1}` of the fourth powers.
    QuarticF,
    /// Quartic family `g`: classes `{0, 3}` of the fourth powers.
    QuarticG,
    /// Legendre family `h`: the squares (classes `{0}` with `m = 1`).
    LegendreH,
}

impl FamilyKind {
    /// The `(m, classes)` pair that defines the family.
    pub fn spec_parts(self) -> (u32, &'static [u32]) {
        match self {
            FamilyKind::QuarticF => (2, &[0, 1]),
            FamilyKind::QuarticG => (2, &[0, 3]),
            FamilyKind::LegendreH => (1, &[0]),
        }
    }

    /// Residue-class spec for this family over `F_p`.
    pub fn spec(self, field: Arc<PrimeField>) -> Result<ResidueClassSpec> {
        let (m, classes) = self.spec_parts();
        ResidueClassSpec::new(field, m, classes.iter().copied())
    }

    /// One-letter name used by the command-line interface.
    pub fn letter(self) -> &'static str {
        match self {
            FamilyKind::QuarticF => "f",
            FamilyKind::QuarticG => "g",
            FamilyKind::LegendreH => "h",
        }
    }
}

/// A choice of `m` of the `2m` cosets `alpha^j·(F_p^*)^{2m}`.
#[derive(Debug, Clone)]
pub struct ResidueClassSpec {
    field: Arc<PrimeField>,
    m: u32,
    classes: BTreeSet<u32>,
}

impl ResidueClassSpec {
    /// Validates `p ≡ 1 mod 2m` and `|classes| = m` with indices in `0..2m`.
    pub fn new(
        field: Arc<PrimeField>,
        m: u32,
        classes: impl IntoIterator<Item = u32>,
    ) -> Result<Self> {
        let two_m = 2 * m as u64;
        if (field.p() - 1) % two_m != 0 {
            return Err(Error::Congruence { p: field.p(), modulus: two_m });
        }
        let classes: BTreeSet<u32> = classes.into_iter().collect();
        if classes.len() != m as usize {
            return Err(Error::ClassCount { expected: m as usize, got: classes.len() });
        }
        if let Some(&bad) = classes.iter().find(|&&j| j >= 2 * m) {
            return Err(Error::ClassIndexOutOfRange { index: bad, limit: 2 * m });
        }
        Ok(ResidueClassSpec { field, m, classes })
    }

    pub fn field(&self) -> &Arc<PrimeField> {
        &self.field
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn classes(&self) -> &BTreeSet<u32> {
        &self.classes
    }

    /// Coset index (`dlog mod 2m`) of a nonzero residue.
    pub fn coset_index(&self, x: u64) -> Option<u32> {
        self.field.dlog(x).map(|t| t % (2 * self.m))
    }

    /// The generating function over one period: `F(0), …, F(p-1)` with
    /// `F(0) = 0`, `F(x) = +1` on chosen cosets, `-1` elsewhere.
    pub fn period_terms(&self) -> Vec<i8> {
        let p = self.field.p() as usize;
        let mut table = vec![0i8; p];
        for x in 1..p {
            let j = self.coset_index(x as u64).expect("nonzero residue");
            table[x] = if self.classes.contains(&j) { 1 } else { -1 };
        }
        table
    }

    /// The sequence `(F(s), F(s+1), …, F(s+l-1))`, zero-keeping form.
    pub fn sequence(&self, shift: i64, length: usize) -> Sequence {
        let table = self.period_terms();
        Sequence::from_period_table(self.field.p(), &table, shift, length, false)
    }
}

/// A shift/length window into a period-`p` generating function, with terms in
/// `{-1, 0, +1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    pub p: u64,
    pub shift: i64,
    pub terms: Vec<i8>,
    /// Whether zero terms have been replaced by `+1`.
    pub unimodularized: bool,
}

impl Sequence {
    fn from_period_table(
        p: u64,
        table: &[i8],
        shift: i64,
        length: usize,
        unimodularized: bool,
    ) -> Self {
        let p_usize = p as usize;
        let mut idx = shift.rem_euclid(p as i64) as usize;
        let mut terms = Vec::with_capacity(length);
        for _ in 0..length {
            terms.push(table[idx]);
            idx += 1;
            if idx == p_usize {
                idx = 0;
            }
        }
        Sequence { p, shift, terms, unimodularized }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Replaces every zero term with `+1` and sets the flag.
    pub fn unimodularize(&self) -> Sequence {
        let terms = self.terms.iter().map(|&t| if t == 0 { 1 } else { t }).collect();
        Sequence { p: self.p, shift: self.shift, terms, unimodularized: true }
    }

    /// Number of zero terms.
    pub fn zero_count(&self) -> usize {
        self.terms.iter().filter(|&&t| t == 0).count()
    }

    /// Number of nonzero terms, which is the shift-0 autocorrelation.
    pub fn nonzero_count(&self) -> usize {
        self.len() - self.zero_count()
    }
}

/// The zero-keeping quartic sequence `f` (classes `{0,1}`); `p ≡ 1 mod 4`.
pub fn quartic_f(field: Arc<PrimeField>, shift: i64, length: usize) -> Result<Sequence> {
    Ok(FamilyKind::QuarticF.spec(field)?.sequence(shift, length))
}

/// The zero-keeping quartic sequence `g` (classes `{0,3}`); `p ≡ 1 mod 4`.
pub fn quartic_g(field: Arc<PrimeField>, shift: i64, length: usize) -> Result<Sequence> {
    Ok(FamilyKind::QuarticG.spec(field)?.sequence(shift, length))
}

/// The zero-keeping Legendre sequence `h` (squares positive); any odd `p`.
pub fn legendre_h(field: Arc<PrimeField>, shift: i64, length: usize) -> Result<Sequence> {
    Ok(FamilyKind::LegendreH.spec(field)?.sequence(shift, length))
}

/// Natural parameters: shift `(p-1)/4`, length `p`; requires `p ≡ 1 mod 4`.
pub fn natural_params(p: u64) -> Result<(i64, usize)> {
    if p % 4 != 1 {
        return Err(Error::Congruence { p, modulus: 4 });
    }
    Ok((((p - 1) / 4) as i64, p as usize))
}

/// Appended parameters for a target length ratio `Λ`: shift
/// `round(p(3-2Λ)/4)` and length `round(pΛ)`, rounding half away from zero.
pub fn appended_params(p: u64, lambda: f64) -> Result<(i64, usize)> {
    if !(lambda > 0.0) {
        return Err(Error::NonPositiveLambda(lambda));
    }
    let shift = (p as f64 * (3.0 - 2.0 * lambda) / 4.0).round() as i64;
    let length = (p as f64 * lambda).round() as usize;
    Ok((shift, length.max(1)))
}

/// A sparse normalized linear combination of multiplicative characters:
/// exponent `k` (of `ω^k`) to complex coefficient, trivial character absent.
#[derive(Debug, Clone)]
pub struct CharCombination {
    field: Arc<PrimeField>,
    coeffs: BTreeMap<u64, Complex64>,
}

impl CharCombination {
    /// Builds a combination from nonzero coefficients, dropping the trivial
    /// character and numerically vanishing entries. (Genuine residue-class
    /// coefficients are roots-of-unity averages, algebraically bounded away
    /// from zero, so anything below the threshold is roundoff of an exact
    /// zero.)
    pub fn new(field: Arc<PrimeField>, coeffs: BTreeMap<u64, Complex64>) -> Self {
        let group = field.p() - 1;
        let coeffs = coeffs
            .into_iter()
            .map(|(k, c)| (k % group, c))
            .filter(|&(k, c)| k != 0 && c.norm() > 1e-9)
            .collect();
        CharCombination { field, coeffs }
    }

    pub fn field(&self) -> &Arc<PrimeField> {
        &self.field
    }

    /// The sparse coefficient map (exponent -> coefficient).
    pub fn coeffs(&self) -> &BTreeMap<u64, Complex64> {
        &self.coeffs
    }

    /// `Σ |coefficient|²`, which is 1 for normalized combinations.
    pub fn norm_sqr(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm_sqr()).sum()
    }

    /// Coefficient of `ω^k` (zero when absent).
    pub fn coeff(&self, k: u64) -> Complex64 {
        let group = self.field.p() - 1;
        self.coeffs.get(&(k % group)).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Coefficient of the conjugate of `ω^k`.
    pub fn coeff_conj(&self, k: u64) -> Complex64 {
        let group = self.field.p() - 1;
        self.coeff((group - k % group) % group)
    }
}

/// The character combination of a residue-class sequence: coefficient
/// `(1/m)·Σ_{A ∈ classes} conj(χ)(A)` for each nontrivial `χ` in the
/// order-`2m` subgroup of the character group, zero elsewhere.
pub fn combination_coefficients(spec: &ResidueClassSpec) -> CharCombination {
    let field = spec.field().clone();
    let p = field.p();
    let m = spec.m() as u64;
    let two_m = 2 * m;
    let step = (p - 1) / two_m; // ω^{j·step} are exactly the order-2m subgroup
    let mut coeffs = BTreeMap::new();
    for j in 1..two_m {
        let chi = MultiplicativeCharacter::new(field.clone(), j * step);
        // conj(χ)(alpha^a) for a chosen class index a: the coset alpha^a·(2m-th
        // powers) has constant character value exp(-2πi·j·a/(2m)).
        let mut c = Complex64::new(0.0, 0.0);
        for &a in spec.classes() {
            c += chi.conj().value_at_log(a as u64);
        }
        coeffs.insert(j * step, c / m as f64);
    }
    CharCombination::new(field, coeffs)
}

/// Evaluates `Σ f_χ·χ(j mod p)` at an integer index `j`.
pub fn evaluate_combination(comb: &CharCombination, j: i64) -> Complex64 {
    let p = comb.field().p();
    let x = j.rem_euclid(p as i64) as u64;
    match comb.field().dlog(x) {
        None => Complex64::new(0.0, 0.0),
        Some(t) => {
            let mut acc = Complex64::new(0.0, 0.0);
            for (&k, &c) in comb.coeffs() {
                let chi = MultiplicativeCharacter::new(comb.field().clone(), k);
                acc += c * chi.value_at_log(t as u64);
            }
            acc
        }
    }
}

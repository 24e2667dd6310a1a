//! Multiplicative and additive characters of `F_p`, Gauss sums, and the
//! two-squares decomposition `p = a² + b²` with its angle `γ_p`.
//!
//! Multiplicative characters are indexed by an exponent `k`: the character
//! `ω^k` sends `alpha^t` to `exp(2πi·k·t/(p-1))`, and every character maps 0 to
//! the complex zero. Gauss sums are evaluated in double precision; quantities
//! that feed headline figures (notably `cos 2γ_p = (a²-b²)/p`) also have an
//! exact integer path, which is the authoritative one.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::field::PrimeField;
use crate::{Error, Result};

/// A multiplicative character `ω^k` of `F_p^*`, extended by `χ(0) = 0`.
#[derive(Debug, Clone)]
pub struct MultiplicativeCharacter {
    field: Arc<PrimeField>,
    k: u64,
    order: u64,
}

impl MultiplicativeCharacter {
    /// The character `ω^k`, with `k` reduced mod `p - 1`.
    pub fn new(field: Arc<PrimeField>, k: u64) -> Self {
        let group = field.p() - 1;
        let k = k % group;
        let order = if k == 0 { 1 } else { group / gcd(group, k) };
        MultiplicativeCharacter { field, k, order }
    }

    /// The trivial character (k = 0).
    pub fn trivial(field: Arc<PrimeField>) -> Self {
        Self::new(field, 0)
    }

    /// The quadratic character `η` (order 2).
    pub fn quadratic(field: Arc<PrimeField>) -> Self {
        let k = (field.p() - 1) / 2;
        Self::new(field, k)
    }

    /// The quartic character `θ` with `θ(alpha) = i`; requires `p ≡ 1 mod 4`.
    pub fn quartic(field: Arc<PrimeField>) -> Result<Self> {
        if field.p() % 4 != 1 {
            return Err(Error::Congruence { p: field.p(), modulus: 4 });
        }
        let k = (field.p() - 1) / 4;
        Ok(Self::new(field, k))
    }

    /// The underlying field.
    pub fn field(&self) -> &Arc<PrimeField> {
        &self.field
    }

    /// The exponent `k` with `χ = ω^k`.
    pub fn exponent(&self) -> u64 {
        self.k
    }

    /// Multiplicative order of the character.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Whether this is the trivial character.
    pub fn is_trivial(&self) -> bool {
        self.k == 0
    }

    /// The conjugate character `ω^{p-1-k}`.
    pub fn conj(&self) -> Self {
        let group = self.field.p() - 1;
        Self::new(self.field.clone(), (group - self.k) % group)
    }

    /// `χ(a)` for a residue `0 ≤ a < p`; zero at `a = 0`.
    pub fn value(&self, a: u64) -> Result<Complex64> {
        let p = self.field.p();
        if a >= p {
            return Err(Error::ResidueOutOfRange { residue: a, modulus: p });
        }
        Ok(self.value_reduced(a))
    }

    /// `χ(a mod p)` without the range check (any integer input).
    pub fn value_reduced(&self, a: u64) -> Complex64 {
        match self.field.dlog(a) {
            None => Complex64::new(0.0, 0.0),
            Some(t) => self.value_at_log(t as u64),
        }
    }

    /// `χ(alpha^t) = exp(2πi·k·t/(p-1))`.
    pub fn value_at_log(&self, t: u64) -> Complex64 {
        let group = self.field.p() - 1;
        let phase = (self.k as u128 * t as u128 % group as u128) as u64;
        Complex64::from_polar(1.0, 2.0 * PI * phase as f64 / group as f64)
    }

    /// `χ(-1)`, which is `+1` or `-1`; equals `(-1)^{k(p-1)/ord}`-style parity.
    pub fn value_at_minus_one(&self) -> f64 {
        // -1 = alpha^{(p-1)/2}, so χ(-1) = exp(πi·k) over the half-group:
        // +1 when k·(p-1)/2 ≡ 0 mod (p-1), i.e. when k is even.
        let group = self.field.p() - 1;
        let half = group / 2;
        if (self.k as u128 * half as u128) % group as u128 == 0 {
            1.0
        } else {
            -1.0
        }
    }
}

/// An additive character `ε_a(x) = exp(2πi·a·x/p)` of `F_p`.
#[derive(Debug, Clone)]
pub struct AdditiveCharacter {
    field: Arc<PrimeField>,
    a: u64,
}

impl AdditiveCharacter {
    /// The character scaled by `a` (reduced mod p); `a = 1` is canonical.
    pub fn new(field: Arc<PrimeField>, a: u64) -> Self {
        let a = a % field.p();
        AdditiveCharacter { field, a }
    }

    /// The scaling element.
    pub fn scale(&self) -> u64 {
        self.a
    }

    /// `ε_a(x) = exp(2πi·a·x/p)` for any integer residue `x`.
    pub fn value(&self, x: u64) -> Complex64 {
        let p = self.field.p();
        let phase = (self.a as u128 * (x % p) as u128 % p as u128) as u64;
        Complex64::from_polar(1.0, 2.0 * PI * phase as f64 / p as f64)
    }
}

/// The Gauss sum `τ(χ) = Σ_{x≠0} ε(x)·χ(x)` by direct summation.
pub fn gauss_sum(chi: &MultiplicativeCharacter) -> Complex64 {
    gauss_sum_scaled(1, chi)
}

/// `τ_a(χ) = Σ_{x≠0} ε_a(x)·χ(x)` by direct summation.
pub fn gauss_sum_scaled(a: u64, chi: &MultiplicativeCharacter) -> Complex64 {
    let field = chi.field();
    let p = field.p();
    let eps = AdditiveCharacter::new(field.clone(), a);
    let mut acc = Complex64::new(0.0, 0.0);
    for x in 1..p {
        acc += eps.value(x) * chi.value_reduced(x);
    }
    acc
}

/// `τ_a(χ)` via the reduction to `τ(χ)`: `p - 1` when `a = 0` and `χ` is
/// trivial, otherwise `conj(χ)(a)·τ(χ)`.
pub fn gauss_sum_general(a: u64, chi: &MultiplicativeCharacter) -> Result<Complex64> {
    let p = chi.field().p();
    if a >= p {
        return Err(Error::ResidueOutOfRange { residue: a, modulus: p });
    }
    if a == 0 && chi.is_trivial() {
        return Ok(Complex64::new((p - 1) as f64, 0.0));
    }
    Ok(chi.conj().value_reduced(a) * gauss_sum(chi))
}

/// The decomposition `p = a² + b²` (`a` odd, `b` even, both positive) of a
/// prime `p ≡ 1 mod 4`, and the angle `γ` with `a = √p·cos γ`, `b = √p·sin γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoSquares {
    pub p: u64,
    pub a: u64,
    pub b: u64,
}

impl TwoSquares {
    /// `γ = atan2(b, a)`, in `(0, π/2)`.
    pub fn gamma(&self) -> f64 {
        (self.b as f64).atan2(self.a as f64)
    }

    /// `cos 2γ = (a² - b²)/p`, evaluated from the exact integers.
    pub fn cos_two_gamma(&self) -> f64 {
        (self.a as i64 * self.a as i64 - self.b as i64 * self.b as i64) as f64 / self.p as f64
    }
}

/// Finds the unique `(a odd, b even)` with `a² + b² = p` by scanning even `b`.
pub fn two_squares(p: u64) -> Result<TwoSquares> {
    if !crate::field::is_prime(p) || p % 4 != 1 {
        return Err(Error::Congruence { p, modulus: 4 });
    }
    let mut b = 2u64;
    while b * b < p {
        let rest = p - b * b;
        let a = (rest as f64).sqrt().round() as u64;
        if a * a == rest {
            debug_assert_eq!(a % 2, 1, "a is odd since p ≡ 1 mod 4 and b is even");
            return Ok(TwoSquares { p, a, b });
        }
        b += 2;
    }
    unreachable!("every prime ≡ 1 mod 4 is a sum of two squares");
}

/// `cos 2γ_p` for `p ≡ 1 mod 4`, via the exact integer path.
pub fn cos_two_gamma(p: u64) -> Result<f64> {
    Ok(two_squares(p)?.cos_two_gamma())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

//! Prime finite fields with a fixed generator and a full discrete-log table.
//!
//! The generator convention is the smallest positive primitive root of `p`,
//! which pins down every character (and hence the f/g labeling of the quartic
//! sequence families) deterministically.

use crate::{Error, Result};

/// A prime field `F_p` with its smallest positive primitive root `alpha` and a
/// table mapping every residue `x` in `1..p` to its discrete log base `alpha`.
///
/// Immutable after construction; cheap to share behind an `Arc`.
#[derive(Debug, Clone)]
pub struct PrimeField {
    p: u64,
    alpha: u64,
    /// `dlog[x]` for `x` in `1..p`; entry 0 is an unused sentinel.
    dlog: Vec<u32>,
}

impl PrimeField {
    /// Builds the field for an odd prime `p`, including its O(p) log table.
    pub fn new(p: u64) -> Result<Self> {
        let alpha = find_primitive_root(p)?;
        let mut dlog = vec![u32::MAX; p as usize];
        let mut x = 1u64;
        for e in 0..(p - 1) {
            dlog[x as usize] = e as u32;
            x = x * alpha % p;
        }
        debug_assert_eq!(x, 1, "alpha must have order p-1");
        Ok(PrimeField { p, alpha, dlog })
    }

    /// The prime modulus.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The smallest positive primitive root of `p`.
    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    /// Discrete log of `x` base `alpha`, in `0..p-1`; `None` when `p | x`.
    pub fn dlog(&self, x: u64) -> Option<u32> {
        let r = (x % self.p) as usize;
        if r == 0 {
            None
        } else {
            Some(self.dlog[r])
        }
    }

    /// `alpha^e mod p`.
    pub fn alpha_pow(&self, e: u64) -> u64 {
        pow_mod(self.alpha, e, self.p)
    }

    /// Checks the two table invariants: the log table is a bijection from
    /// `{1..p-1}` onto `{0..p-2}`, and `alpha^dlog[x] = x` for every `x`.
    pub fn validate(&self) -> Result<()> {
        if self.dlog.len() != self.p as usize {
            return Err(Error::CorruptTable(format!(
                "table has {} entries for p = {}",
                self.dlog.len(),
                self.p
            )));
        }
        let n = (self.p - 1) as usize;
        let mut seen = vec![false; n];
        for x in 1..self.p as usize {
            let e = self.dlog[x];
            if (e as u64) >= self.p - 1 {
                return Err(Error::CorruptTable(format!("dlog[{x}] = {e} out of range")));
            }
            if seen[e as usize] {
                return Err(Error::CorruptTable(format!("exponent {e} appears twice")));
            }
            seen[e as usize] = true;
        }
        // Bijectivity holds; verify alpha^dlog[x] = x by one multiplicative walk.
        let mut power_of = vec![0u64; n];
        let mut x = 1u64;
        for e in 0..n {
            power_of[e] = x;
            x = x * self.alpha % self.p;
        }
        for x in 1..self.p as usize {
            if power_of[self.dlog[x] as usize] != x as u64 {
                return Err(Error::CorruptTable(format!(
                    "alpha^dlog[{x}] = {} != {x}",
                    power_of[self.dlog[x] as usize]
                )));
            }
        }
        Ok(())
    }

    /// Test-only constructor bypassing table construction (negative controls).
    #[cfg(test)]
    pub(crate) fn from_raw_parts(p: u64, alpha: u64, dlog: Vec<u32>) -> Self {
        PrimeField { p, alpha, dlog }
    }
}

/// `base^exp mod modulus` by square-and-multiply.
pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut base = base % modulus;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test by trial division (desk scale: p < 10^7).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut factors = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    factors
}

/// The smallest positive residue of multiplicative order `p - 1` mod `p`.
///
/// A candidate `g` is a generator iff `g^((p-1)/q) != 1` for every distinct
/// prime factor `q` of `p - 1`.
pub fn find_primitive_root(p: u64) -> Result<u64> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let group = p - 1;
    let factors = distinct_prime_factors(group);
    for g in 2..p {
        if factors.iter().all(|&q| pow_mod(g, group / q, p) != 1) {
            return Ok(g);
        }
    }
    unreachable!("every prime has a primitive root");
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_primitive_roots() {
        // 2 generates {1,2,4,3} mod 5; 2 has order 3 mod 7 but 3 has order 6;
        // 2 generates all twelve nonzero residues mod 13.
        assert_eq!(find_primitive_root(5).unwrap(), 2);
        assert_eq!(find_primitive_root(7).unwrap(), 3);
        assert_eq!(find_primitive_root(13).unwrap(), 2);
    }

    #[test]
    fn rejects_non_primes_and_even_input() {
        assert!(find_primitive_root(1).is_err());
        assert!(find_primitive_root(2).is_err());
        assert!(find_primitive_root(9).is_err());
        assert!(find_primitive_root(100).is_err());
        assert!(PrimeField::new(15).is_err());
    }

    #[test]
    fn primitive_root_has_full_order() {
        for p in [5u64, 7, 13, 17, 101, 746497] {
            let g = find_primitive_root(p).unwrap();
            // No proper divisor d of p-1 may satisfy g^d = 1.
            for q in distinct_prime_factors(p - 1) {
                assert_ne!(pow_mod(g, (p - 1) / q, p), 1, "p={p}");
            }
            assert_eq!(pow_mod(g, p - 1, p), 1, "p={p}");
        }
    }

    #[test]
    fn dlog_table_is_consistent() {
        let field = PrimeField::new(13).unwrap();
        assert_eq!(field.alpha(), 2);
        assert_eq!(field.dlog(1), Some(0));
        assert_eq!(field.dlog(2), Some(1));
        assert_eq!(field.dlog(4), Some(2));
        assert_eq!(field.dlog(0), None);
        assert_eq!(field.dlog(26), None); // reduces to 0 mod 13
        for x in 1..13u64 {
            assert_eq!(field.alpha_pow(field.dlog(x).unwrap() as u64), x);
        }
        field.validate().unwrap();
    }

    #[test]
    fn validate_flags_corrupted_table() {
        let good = PrimeField::new(13).unwrap();
        // Swap two entries: still a bijection, but alpha^dlog[x] != x.
        let mut dlog = good.dlog.clone();
        dlog.swap(3, 5);
        let bad = PrimeField::from_raw_parts(13, 2, dlog);
        assert!(bad.validate().is_err());
        // Duplicate entry: bijection check fails.
        let mut dlog = good.dlog.clone();
        dlog[3] = dlog[5];
        let bad = PrimeField::from_raw_parts(13, 2, dlog);
        assert!(bad.validate().is_err());
    }

    #[test]
    fn is_prime_matches_known_values() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(746497));
        assert!(!is_prime(746499));
    }
}

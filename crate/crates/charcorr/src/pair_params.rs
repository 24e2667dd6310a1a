//! The pair parameters `(S, U, V, W_f, W_g)` of a pair of character
//! combinations — the quantities whose limits drive the asymptotic demerit
//! figures.
//!
//! Two independent routes are provided and cross-checked elsewhere: the
//! defining Gauss-sum formulas evaluated on arbitrary combinations, and
//! closed forms for the residue-class families (a combinatorial coset count
//! for `U` and `V`, an explicit table for the standard quartic/Legendre
//! families).

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_complex::Complex64;

use crate::characters::{cos_two_gamma, gauss_sum, MultiplicativeCharacter};
use crate::field::PrimeField;
use crate::sequences::{combination_coefficients, CharCombination, FamilyKind, ResidueClassSpec};
use crate::{Error, Result};

/// The five pair parameters. `s` is provably real (the defining sum is
/// invariant under a conjugating index swap); `u`, `v` are squared
/// magnitudes in `[0, 1]`; the `w`s are coefficient magnitude sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairParameters {
    pub s: f64,
    pub u: f64,
    pub v: f64,
    pub w_f: f64,
    pub w_g: f64,
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Gauss sums `τ(ω^k)` for every exponent appearing in either combination.
fn gauss_table(f: &CharCombination, g: &CharCombination) -> BTreeMap<u64, Complex64> {
    let field = f.field();
    let group = field.p() - 1;
    let mut table = BTreeMap::new();
    for &k in f.coeffs().keys().chain(g.coeffs().keys()) {
        for exponent in [k, (group - k) % group] {
            table
                .entry(exponent)
                .or_insert_with(|| {
                    gauss_sum(&MultiplicativeCharacter::new(field.clone(), exponent))
                });
        }
    }
    table
}

/// Evaluates the defining formulas for `(S, U, V, W_f, W_g)` on a pair of
/// character combinations over the same field.
///
/// `S` is the constrained quadruple Gauss-sum expression
/// `Σ_{φχ=ψω, φ∉{conj χ, ψ, ω}} f_φ g_χ conj(f_ψ g_ω)·τ(φ)τ(χ)conj(τ(ψ)τ(ω))/p²
///  - Σ_φ |f_φ g_φ|² - Σ_φ |f_φ g_conj(φ)|²
///  - Σ_φ f_φ conj(f_conj(φ)) g_conj(φ) conj(g_φ) + |f_η g_η|²`,
/// with `η` the quadratic character; any numerically non-vanishing imaginary
/// residue is reported as an error rather than silently dropped.
pub fn parameters_from_combinations(
    f: &CharCombination,
    g: &CharCombination,
) -> Result<PairParameters> {
    let p = f.field().p();
    if p != g.field().p() {
        return Err(Error::FieldMismatch { left: p, right: g.field().p() });
    }
    let group = p - 1;
    let tau = gauss_table(f, g);
    let p2 = (p as f64) * (p as f64);

    let mut quad = ZERO;
    for (&k_phi, &f_phi) in f.coeffs() {
        for (&k_chi, &g_chi) in g.coeffs() {
            let lhs = (k_phi + k_chi) % group;
            if lhs == 0 {
                continue; // φ = conj(χ)
            }
            for (&k_psi, &f_psi) in f.coeffs() {
                if k_psi == k_phi {
                    continue; // φ = ψ
                }
                for (&k_omega, &g_omega) in g.coeffs() {
                    if k_omega == k_phi || (k_psi + k_omega) % group != lhs {
                        continue; // φ = ω, or φχ ≠ ψω
                    }
                    quad += f_phi * g_chi * (f_psi * g_omega).conj() * tau[&k_phi]
                        * tau[&k_chi]
                        * (tau[&k_psi] * tau[&k_omega]).conj()
                        / p2;
                }
            }
        }
    }

    let mut corrections = ZERO;
    for (&k, &f_k) in f.coeffs() {
        let g_k = g.coeff(k);
        let g_ck = g.coeff_conj(k);
        let f_ck = f.coeff_conj(k);
        corrections += Complex64::new((f_k * g_k).norm_sqr() + (f_k * g_ck).norm_sqr(), 0.0);
        corrections += f_k * f_ck.conj() * g_ck * g_k.conj();
    }
    let eta = group / 2;
    let s_complex =
        quad - corrections + Complex64::new((f.coeff(eta) * g.coeff(eta)).norm_sqr(), 0.0);
    if s_complex.im.abs() > 1e-8 {
        return Err(Error::ResidualImaginary(s_complex.im));
    }

    let mut u_sum = ZERO;
    let mut v_sum = ZERO;
    let mut w_f = 0.0;
    for (&k, &f_k) in f.coeffs() {
        u_sum += f_k * g.coeff(k).conj();
        let chi = MultiplicativeCharacter::new(f.field().clone(), k);
        v_sum += f_k * g.coeff_conj(k) * chi.value_at_minus_one();
        w_f += f_k.norm();
    }
    let w_g = g.coeffs().values().map(|c| c.norm()).sum();

    Ok(PairParameters {
        s: s_complex.re,
        u: u_sum.norm_sqr(),
        v: v_sum.norm_sqr(),
        w_f,
        w_g,
    })
}

/// The four constrained quadruple Gauss-sum expressions, all built from the
/// same summand `T(φ,χ,ψ,ω) = f_φ g_χ conj(f_ψ g_ω)·τ(φ)τ(χ)conj(τ(ψ)τ(ω))/p²`:
///
/// * `full`: constraint `φχ = ψω` — provably equals `S + 1 + U + V`;
/// * `matched`: constraint `φ = ψ` and `χ = ω` — equals `1`;
/// * `swapped`: constraint `φ = ω` and `χ = ψ` — equals `U`;
/// * `conjugate`: constraint `φ = conj(χ)` and `ψ = conj(ω)` — equals `V`.
///
/// These are returned uncollapsed so the identities can be verified against
/// the directly computed parameters.
#[derive(Debug, Clone, Copy)]
pub struct QuadrupleSums {
    pub full: Complex64,
    pub matched: Complex64,
    pub swapped: Complex64,
    pub conjugate: Complex64,
}

/// Evaluates the four constrained quadruple sums of [`QuadrupleSums`]
/// literally (no algebraic shortcuts).
pub fn quadruple_sum_identities(
    f: &CharCombination,
    g: &CharCombination,
) -> Result<QuadrupleSums> {
    let p = f.field().p();
    if p != g.field().p() {
        return Err(Error::FieldMismatch { left: p, right: g.field().p() });
    }
    let group = p - 1;
    let tau = gauss_table(f, g);
    let p2 = (p as f64) * (p as f64);
    let term = |k_phi: u64, k_chi: u64, k_psi: u64, k_omega: u64| -> Complex64 {
        f.coeff(k_phi) * g.coeff(k_chi) * (f.coeff(k_psi) * g.coeff(k_omega)).conj()
            * tau[&k_phi]
            * tau[&k_chi]
            * (tau[&k_psi] * tau[&k_omega]).conj()
            / p2
    };

    let f_keys: Vec<u64> = f.coeffs().keys().copied().collect();
    let g_keys: Vec<u64> = g.coeffs().keys().copied().collect();

    let mut full = ZERO;
    for &k_phi in &f_keys {
        for &k_chi in &g_keys {
            for &k_psi in &f_keys {
                for &k_omega in &g_keys {
                    if (k_phi + k_chi) % group == (k_psi + k_omega) % group {
                        full += term(k_phi, k_chi, k_psi, k_omega);
                    }
                }
            }
        }
    }

    let mut matched = ZERO;
    let mut swapped = ZERO;
    for &k_phi in &f_keys {
        for &k_chi in &g_keys {
            matched += term(k_phi, k_chi, k_phi, k_chi);
            swapped += term(k_phi, k_chi, k_chi, k_phi);
        }
    }

    let mut conjugate = ZERO;
    let conj_of = |k: u64| (group - k % group) % group;
    for &k_phi in &f_keys {
        for &k_psi in &f_keys {
            conjugate += term(k_phi, conj_of(k_phi), k_psi, conj_of(k_psi));
        }
    }

    Ok(QuadrupleSums { full, matched, swapped, conjugate })
}

/// Closed-form `U` and `V` for a pair of residue-class choices with the same
/// `m` over the same field:
/// `U = ((2/m)·|A ∩ B| - 1)²`, and `V` is the same count when
/// `p ≡ 1 mod 4m`, otherwise the count against `-B` (indices shifted by `m`
/// modulo `2m`, since `-1` lands in the coset of `alpha^m`).
pub fn closed_form_uv(left: &ResidueClassSpec, right: &ResidueClassSpec) -> Result<(f64, f64)> {
    let p = left.field().p();
    if p != right.field().p() {
        return Err(Error::FieldMismatch { left: p, right: right.field().p() });
    }
    if left.m() != right.m() {
        return Err(Error::ClassCount {
            expected: left.m() as usize,
            got: right.m() as usize,
        });
    }
    let m = left.m();
    let two_m = 2 * m;
    let a: BTreeSet<u32> = left.classes().iter().copied().collect();
    let b: BTreeSet<u32> = right.classes().iter().copied().collect();
    let count = |set: &BTreeSet<u32>| a.intersection(set).count() as f64;
    let square = |n: f64| {
        let t = 2.0 * n / m as f64 - 1.0;
        t * t
    };
    let u = square(count(&b));
    let v = if p % (4 * m as u64) == 1 {
        u
    } else {
        let minus_b: BTreeSet<u32> = b.iter().map(|&j| (j + m) % two_m).collect();
        square(count(&minus_b))
    };
    Ok((u, v))
}

/// The parameter table for the standard families: for the quartic families
/// `S` involves `cos 2γ_p = Re(τ(θ_p)⁴/p²)` computed here by the exact
/// two-squares decomposition, `U = V = 1` on the diagonal and `0` off it, and
/// `W` is `√2` for a quartic family and `1` for the Legendre family.
pub fn standard_family_parameters(
    field: &Arc<PrimeField>,
    left: FamilyKind,
    right: FamilyKind,
) -> Result<PairParameters> {
    use FamilyKind::*;
    let p = field.p();
    let w = |kind: FamilyKind| if kind == LegendreH { 1.0 } else { 2.0f64.sqrt() };
    let (s, u, v) = match (left, right) {
        (QuarticF, QuarticF) | (QuarticG, QuarticG) => {
            ((-3.0 - cos_two_gamma(p)?) / 2.0, 1.0, 1.0)
        }
        (QuarticF, QuarticG) | (QuarticG, QuarticF) => {
            ((-1.0 + cos_two_gamma(p)?) / 2.0, 0.0, 0.0)
        }
        (LegendreH, LegendreH) => (-2.0, 1.0, 1.0),
        _ => (0.0, 0.0, 0.0),
    };
    Ok(PairParameters { s, u, v, w_f: w(left), w_g: w(right) })
}

/// Defining-formula route for a standard family pair: build both
/// combinations and evaluate [`parameters_from_combinations`].
pub fn family_parameters_direct(
    field: &Arc<PrimeField>,
    left: FamilyKind,
    right: FamilyKind,
) -> Result<PairParameters> {
    let lf = combination_coefficients(&left.spec(field.clone())?);
    let rg = combination_coefficients(&right.spec(field.clone())?);
    parameters_from_combinations(&lf, &rg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilyKind::*;

    fn field(p: u64) -> Arc<PrimeField> {
        Arc::new(PrimeField::new(p).unwrap())
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    #[test]
    fn legendre_autocorrelation_parameters() {
        for p in [7, 13, 29, 101] {
            let params = family_parameters_direct(&field(p), LegendreH, LegendreH).unwrap();
            assert!(close(params.s, -2.0, 1e-9), "p={p}: s={}", params.s);
            assert!(close(params.u, 1.0, 1e-9));
            assert!(close(params.v, 1.0, 1e-9));
            assert!(close(params.w_f, 1.0, 1e-12));
            assert!(close(params.w_g, 1.0, 1e-12));
        }
    }

    #[test]
    fn quartic_pair_parameters_at_p13() {
        let f13 = field(13);
        // cos 2γ = 5/13 at p = 13 = 3² + 2².
        let fg = family_parameters_direct(&f13, QuarticF, QuarticG).unwrap();
        assert!(close(fg.s, -4.0 / 13.0, 1e-9), "s_fg = {}", fg.s);
        assert!(close(fg.u, 0.0, 1e-9));
        assert!(close(fg.v, 0.0, 1e-9));
        assert!(close(fg.w_f, 2.0f64.sqrt(), 1e-12));

        let ff = family_parameters_direct(&f13, QuarticF, QuarticF).unwrap();
        assert!(close(ff.s, -22.0 / 13.0, 1e-9), "s_ff = {}", ff.s);
        assert!(close(ff.u, 1.0, 1e-9));
        assert!(close(ff.v, 1.0, 1e-9));

        let fh = family_parameters_direct(&f13, QuarticF, LegendreH).unwrap();
        assert!(close(fh.s, 0.0, 1e-9), "s_fh = {}", fh.s);
        assert!(close(fh.u, 0.0, 1e-9));
        assert!(close(fh.v, 0.0, 1e-9));
        assert!(close(fh.w_f, 2.0f64.sqrt(), 1e-12));
        assert!(close(fh.w_g, 1.0, 1e-12));
    }

    #[test]
    fn direct_route_matches_table_route() {
        for p in [13, 17, 29, 37, 53] {
            let field = field(p);
            for left in [QuarticF, QuarticG, LegendreH] {
                for right in [QuarticF, QuarticG, LegendreH] {
                    let direct = family_parameters_direct(&field, left, right).unwrap();
                    let table = standard_family_parameters(&field, left, right).unwrap();
                    assert!(close(direct.s, table.s, 1e-9), "p={p} S");
                    assert!(close(direct.u, table.u, 1e-9), "p={p} U");
                    assert!(close(direct.v, table.v, 1e-9), "p={p} V");
                    assert!(close(direct.w_f, table.w_f, 1e-9), "p={p} W_f");
                    assert!(close(direct.w_g, table.w_g, 1e-9), "p={p} W_g");
                }
            }
        }
    }

    #[test]
    fn quadruple_sums_reduce_to_parameters() {
        let f17 = field(17);
        for (left, right) in [(QuarticF, QuarticG), (QuarticF, QuarticF), (QuarticG, LegendreH)]
        {
            let lf = combination_coefficients(&left.spec(f17.clone()).unwrap());
            let rg = combination_coefficients(&right.spec(f17.clone()).unwrap());
            let params = parameters_from_combinations(&lf, &rg).unwrap();
            let sums = quadruple_sum_identities(&lf, &rg).unwrap();
            assert!(close(sums.full.re, params.s + 1.0 + params.u + params.v, 1e-8));
            assert!(sums.full.im.abs() < 1e-8);
            assert!(close(sums.matched.re, 1.0, 1e-8));
            assert!(sums.matched.im.abs() < 1e-8);
            assert!(close(sums.swapped.re, params.u, 1e-8));
            assert!(close(sums.conjugate.re, params.v, 1e-8));
        }
    }

    #[test]
    fn coset_count_closed_form_matches_defining_route() {
        // m = 3 at p = 13 (13 ≡ 1 mod 12, so V falls in the first branch).
        let f13 = field(13);
        let a = ResidueClassSpec::new(f13.clone(), 3, [0, 1, 2]).unwrap();
        let b = ResidueClassSpec::new(f13.clone(), 3, [0, 2, 4]).unwrap();
        let (u, v) = closed_form_uv(&a, &b).unwrap();
        assert!(close(u, 1.0 / 9.0, 1e-12));
        assert!(close(v, 1.0 / 9.0, 1e-12));
        let params = parameters_from_combinations(
            &combination_coefficients(&a),
            &combination_coefficients(&b),
        )
        .unwrap();
        assert!(close(params.u, u, 1e-9));
        assert!(close(params.v, v, 1e-9));

        // m = 3 at p = 7 (7 ≢ 1 mod 12): -B shifts indices by m = 3.
        let f7 = field(7);
        let a = ResidueClassSpec::new(f7.clone(), 3, [0, 1, 2]).unwrap();
        let b = ResidueClassSpec::new(f7.clone(), 3, [0, 1, 3]).unwrap();
        let (u, v) = closed_form_uv(&a, &b).unwrap();
        assert!(close(u, 1.0 / 9.0, 1e-12));
        assert!(close(v, 1.0 / 9.0, 1e-12)); // |A ∩ {3,4,0}| = 1
        let params = parameters_from_combinations(
            &combination_coefficients(&a),
            &combination_coefficients(&b),
        )
        .unwrap();
        assert!(close(params.u, u, 1e-9));
        assert!(close(params.v, v, 1e-9));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let lf = combination_coefficients(&QuarticF.spec(field(13)).unwrap());
        let rg = combination_coefficients(&QuarticG.spec(field(17)).unwrap());
        assert!(matches!(
            parameters_from_combinations(&lf, &rg),
            Err(Error::FieldMismatch { left: 13, right: 17 })
        ));
        let a = ResidueClassSpec::new(field(13), 2, [0, 1]).unwrap();
        let b = ResidueClassSpec::new(field(13), 3, [0, 1, 2]).unwrap();
        assert!(closed_form_uv(&a, &b).is_err());
    }
}

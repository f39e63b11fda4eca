//! Irreducible factorization over Q and over Q(i).
//!
//! Route: squarefree decomposition first, then factorization of each
//! squarefree part — over Q by reduction modulo a good prime, Hensel lifting
//! and recombination; over Q(i) by reduction to Q through the norm. Factor
//! lists are returned in the canonical (degree, coefficient-order) order so
//! downstream output is byte-stable.

mod modp;
mod trager;
mod zassenhaus;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gaussian::GaussianRational;
use crate::poly::{cmp_poly, Polynomial};

type QiPoly = Polynomial<GaussianRational>;

/// Monic irreducible factors over Q with multiplicities.
///
/// All coefficients of the input must be real; the constant in front is
/// dropped (the product of `factor^multiplicity` reconstructs the input up to
/// a nonzero constant).
pub fn factor_over_q(f: &QiPoly) -> Result<Vec<(QiPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.coeffs().iter().any(|c| !c.is_real()) {
        return Err(Error::InvalidParameter(
            "factorization over Q requires real coefficients".into(),
        ));
    }
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition()?.parts {
        for h in factor_squarefree_real(&part)? {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    Ok(out)
}

/// Monic irreducible factors over Q(i) with multiplicities.
pub fn factor_over_qi(f: &QiPoly) -> Result<Vec<(QiPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in f.squarefree_decomposition()?.parts {
        for h in trager::factor_squarefree_qi(&part)? {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| cmp_poly(&a.0, &b.0));
    Ok(out)
}

/// Factors a squarefree monic polynomial with real (rational) coefficients
/// into monic irreducible factors over Q.
pub(crate) fn factor_squarefree_real(part: &QiPoly) -> Result<Vec<QiPoly>> {
    let n = part.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    debug_assert!(part.leading().map_or(false, |c| c.is_one()));
    // clear denominators by the substitution x -> x/D against D = lcm of
    // coefficient denominators: G(x) = D^n * part(x/D) is monic over Z
    let mut d = BigInt::one();
    for c in part.coeffs() {
        d = d.lcm(c.re.denom());
    }
    let g: zassenhaus::ZPoly = part
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let scale = d.pow((n - k) as u32);
            let v = &c.re * BigRational::from_integer(scale);
            debug_assert!(v.denom().is_one());
            v.numer().clone()
        })
        .collect();
    let factors = zassenhaus::factor_squarefree_monic(&g);
    // map back: h(x) = H(D x) / D^{deg H}
    let out = factors
        .into_iter()
        .map(|h| {
            let dh = h.len() - 1;
            Polynomial::from_coeffs(
                h.into_iter()
                    .enumerate()
                    .map(|(k, c)| {
                        let r = BigRational::new(c * d.pow(k as u32), d.pow(dh as u32));
                        GaussianRational::new(r, BigRational::zero())
                    })
                    .collect(),
            )
        })
        .collect();
    Ok(out)
}

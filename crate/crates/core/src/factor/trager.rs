//! Irreducible factorization over Q(i) by reduction to Q through the norm.
//!
//! For a squarefree monic g over Q(i), a shift x -> x + s*i is scanned until
//! the norm N = g * conj(g) is squarefree over Q; then the irreducible
//! factors of g are recovered as gcds with the rational factors of N.

use crate::error::{Error, Result};
use crate::gaussian::GaussianRational;
use crate::poly::Polynomial;

type QiPoly = Polynomial<GaussianRational>;

fn conj_poly(f: &QiPoly) -> QiPoly {
    Polynomial::from_coeffs(f.coeffs().iter().map(|c| c.conj()).collect())
}

fn shift_poly(f: &QiPoly, s: i64) -> QiPoly {
    if s == 0 {
        return f.clone();
    }
    // f(x + s*i)
    let shift = Polynomial::from_coeffs(vec![
        GaussianRational::from_parts(0, 1, s, 1),
        GaussianRational::one(),
    ]);
    f.compose(&shift)
}

/// Factors a squarefree monic polynomial of degree >= 1 into monic
/// irreducible factors over Q(i).
pub(super) fn factor_squarefree_qi(g: &QiPoly) -> Result<Vec<QiPoly>> {
    let deg = g.degree().ok_or(Error::ZeroPolynomial)?;
    if deg == 1 {
        return Ok(vec![g.clone()]);
    }
    for s in 0..256i64 {
        let gs = shift_poly(g, s);
        let norm = gs.mul(&conj_poly(&gs));
        let dn = norm.derivative();
        if norm.gcd(&dn)?.degree().unwrap_or(0) != 0 {
            continue; // norm not squarefree; try the next shift
        }
        let rational_factors = super::factor_squarefree_real(&norm)?;
        let mut out = Vec::new();
        let mut total = 0usize;
        for h in &rational_factors {
            let w = gs.gcd(h)?;
            if w.degree().unwrap_or(0) >= 1 {
                total += w.degree().unwrap();
                out.push(shift_poly(&w, -s));
            }
        }
        if total != deg {
            return Err(Error::Integrity(format!(
                "norm factorization lost degree: {total} of {deg}"
            )));
        }
        return Ok(out);
    }
    Err(Error::Integrity("no squarefree norm shift found".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn qp(coeffs: &[i64]) -> QiPoly {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    #[test]
    fn splits_x2_plus_1_over_qi() {
        let f = qp(&[1, 0, 1]);
        let factors = factor_squarefree_qi(&f).unwrap();
        assert_eq!(factors.len(), 2);
        let xi = Polynomial::from_coeffs(vec![GaussianRational::i().neg(), GaussianRational::one()]);
        let xmi = Polynomial::from_coeffs(vec![GaussianRational::i(), GaussianRational::one()]);
        assert!(factors.contains(&xi));
        assert!(factors.contains(&xmi));
    }

    #[test]
    fn keeps_x2_minus_2_irreducible() {
        let f = qp(&[-2, 0, 1]);
        let factors = factor_squarefree_qi(&f).unwrap();
        assert_eq!(factors, vec![f]);
    }
}

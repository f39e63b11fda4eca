//! Seeded random generators for property sweeps over rational functions.
//!
//! Coefficients are kept small so that fiber computations and portraits stay
//! quick across many samples; every generator is deterministic given the
//! caller's RNG.

use rand::Rng;

use crate::error::Result;
use crate::gaussian::GaussianRational;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

type QiPoly = Polynomial<GaussianRational>;

fn small_coeff<R: Rng>(rng: &mut R, gaussian: bool) -> GaussianRational {
    let re = rng.gen_range(-9i64..=9);
    let im = if gaussian && rng.gen_bool(0.3) {
        rng.gen_range(-4i64..=4)
    } else {
        0
    };
    GaussianRational::from_parts(re, 1, im, 1)
}

/// Random polynomial of exactly the requested degree.
pub fn random_polynomial<R: Rng>(rng: &mut R, degree: usize, gaussian: bool) -> QiPoly {
    let mut coeffs: Vec<GaussianRational> = (0..=degree).map(|_| small_coeff(rng, gaussian)).collect();
    while coeffs[degree].is_zero() {
        coeffs[degree] = small_coeff(rng, gaussian);
    }
    Polynomial::from_coeffs(coeffs)
}

use crate::field::Field;

/// Random nonconstant rational function with degree in `1..=max_degree`.
pub fn random_rational_function<R: Rng>(rng: &mut R, max_degree: u32) -> Result<RationalFunction> {
    loop {
        let dn = rng.gen_range(1..=max_degree) as usize;
        let dd = rng.gen_range(0..=max_degree.min(dn as u32)) as usize;
        let num = random_polynomial(rng, dn, true);
        let den = if dd == 0 {
            Polynomial::constant(GaussianRational::one())
        } else {
            random_polynomial(rng, dd, true)
        };
        if den.is_zero() {
            continue;
        }
        let f = RationalFunction::new(num, den)?;
        if !f.is_constant() {
            return Ok(f);
        }
    }
}

/// Random nonconstant polynomial map of exactly the requested degree.
pub fn random_polynomial_map<R: Rng>(rng: &mut R, degree: u32) -> RationalFunction {
    RationalFunction::from_poly(random_polynomial(rng, degree as usize, false))
}

/// Random Möbius transformation (degree exactly 1).
pub fn random_mobius<R: Rng>(rng: &mut R) -> Result<RationalFunction> {
    loop {
        let a = small_coeff(rng, true);
        let b = small_coeff(rng, true);
        let c = small_coeff(rng, true);
        let d = small_coeff(rng, true);
        // ad - bc != 0 keeps the map invertible
        if a.mul(&d).sub(&b.mul(&c)).is_zero() {
            continue;
        }
        let num = Polynomial::from_coeffs(vec![b, a]);
        let den = Polynomial::from_coeffs(vec![d, c]);
        let f = RationalFunction::new(num, den)?;
        if f.degree() == 1 {
            return Ok(f);
        }
    }
}

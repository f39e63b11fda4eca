//! Simple algebraic extensions Q(i)(α).
//!
//! An extension is described by a monic irreducible minimal polynomial over
//! Q(i); elements are coordinate vectors in the power basis of α. These house
//! algebraic critical values; no nested towers are supported.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gaussian::GaussianRational;
use crate::poly::Polynomial;

/// A simple extension of Q(i), `Q(i)[x]/(minpoly)`.
///
/// Degree 1 degenerates to Q(i) itself.
#[derive(Debug, PartialEq, Eq)]
pub struct ExtField {
    minpoly: Polynomial<GaussianRational>,
}

impl ExtField {
    /// Builds the extension, certifying irreducibility of the minimal
    /// polynomial by factoring it over Q(i).
    pub fn new(minpoly: Polynomial<GaussianRational>) -> Result<Arc<Self>> {
        let minpoly = minpoly.monic()?;
        if minpoly.degree().unwrap_or(0) < 1 {
            return Err(Error::InvalidParameter(
                "minimal polynomial must have degree >= 1".into(),
            ));
        }
        let factors = crate::factor::factor_over_qi(&minpoly)?;
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::ReducibleMinimalPolynomial {
                factor: factors[0].0.to_string(),
            });
        }
        Ok(Arc::new(Self { minpoly }))
    }

    pub fn minpoly(&self) -> &Polynomial<GaussianRational> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree().unwrap()
    }

    pub fn zero(self: &Arc<Self>) -> ExtElement {
        ExtElement {
            field: Arc::clone(self),
            coords: vec![GaussianRational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> ExtElement {
        self.from_base(GaussianRational::one())
    }

    /// The generator α of the extension.
    pub fn generator(self: &Arc<Self>) -> ExtElement {
        if self.degree() == 1 {
            // α = -c0 in the degenerate linear case
            return self.from_base(self.minpoly.coeff(0).unwrap().neg());
        }
        let mut coords = vec![GaussianRational::zero(); self.degree()];
        coords[1] = GaussianRational::one();
        ExtElement { field: Arc::clone(self), coords }
    }

    pub fn from_base(self: &Arc<Self>, c: GaussianRational) -> ExtElement {
        let mut coords = vec![GaussianRational::zero(); self.degree()];
        coords[0] = c;
        ExtElement { field: Arc::clone(self), coords }
    }

    /// Reduces a Q(i)[x] polynomial to an element (evaluation at α).
    pub fn reduce(self: &Arc<Self>, p: &Polynomial<GaussianRational>) -> ExtElement {
        let (_, r) = p.div_rem(&self.minpoly).expect("minpoly nonzero");
        let mut coords: Vec<GaussianRational> = r.coeffs().to_vec();
        coords.resize(self.degree(), GaussianRational::zero());
        ExtElement { field: Arc::clone(self), coords }
    }

    /// Lifts a Q(i) polynomial coefficientwise into the extension.
    pub fn lift_poly(self: &Arc<Self>, p: &Polynomial<GaussianRational>) -> Polynomial<ExtElement> {
        Polynomial::from_coeffs(p.coeffs().iter().map(|c| self.from_base(c.clone())).collect())
    }
}

/// Element of a simple extension, as coordinates in the power basis of α.
#[derive(Clone)]
pub struct ExtElement {
    field: Arc<ExtField>,
    coords: Vec<GaussianRational>,
}

impl ExtElement {
    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn coords(&self) -> &[GaussianRational] {
        &self.coords
    }

    fn as_poly(&self) -> Polynomial<GaussianRational> {
        Polynomial::from_coeffs(self.coords.clone())
    }

    fn same_field(&self, rhs: &Self) -> bool {
        Arc::ptr_eq(&self.field, &rhs.field) || self.field.minpoly == rhs.field.minpoly
    }

    fn check_field(&self, rhs: &Self) -> Result<()> {
        if self.same_field(rhs) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        Ok(Field::add(self, rhs))
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        Ok(Field::sub(self, rhs))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        Ok(Field::mul(self, rhs))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        Field::div(self, rhs)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// Q(i)[x]. A nontrivial gcd with the minimal polynomial exposes a
    /// reducible minimal polynomial and is reported with the factor found.
    pub fn inverse(&self) -> Result<Self> {
        if Field::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = self.as_poly().extended_gcd(self.field.minpoly())?;
        if g.degree().unwrap_or(0) > 0 {
            return Err(Error::ReducibleMinimalPolynomial { factor: g.to_string() });
        }
        // g = 1 (monic constant): s * self == 1 mod minpoly
        Ok(self.field.reduce(&s))
    }
}

impl PartialEq for ExtElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coords == other.coords
    }
}

impl Field for ExtElement {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| Field::is_zero(c))
    }

    fn is_one(&self) -> bool {
        Field::is_one(&self.coords[0]) && self.coords[1..].iter().all(|c| Field::is_zero(c))
    }

    fn add(&self, rhs: &Self) -> Self {
        assert!(self.same_field(rhs), "mismatched extension fields");
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| Field::add(a, b))
            .collect();
        Self { field: Arc::clone(&self.field), coords }
    }

    fn sub(&self, rhs: &Self) -> Self {
        assert!(self.same_field(rhs), "mismatched extension fields");
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| Field::sub(a, b))
            .collect();
        Self { field: Arc::clone(&self.field), coords }
    }

    fn mul(&self, rhs: &Self) -> Self {
        assert!(self.same_field(rhs), "mismatched extension fields");
        let prod = self.as_poly().mul(&rhs.as_poly());
        self.field.reduce(&prod)
    }

    fn neg(&self) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coords: self.coords.iter().map(|c| Field::neg(c)).collect(),
        }
    }

    fn inv(&self) -> Result<Self> {
        self.inverse()
    }

    fn from_u32_like(&self, n: u32) -> Self {
        self.field.from_base(GaussianRational::from_int(n as i64))
    }

    fn canonical_cmp(&self, rhs: &Self) -> std::cmp::Ordering {
        for (a, b) in self.coords.iter().zip(&rhs.coords) {
            let c = a.canonical_cmp(b);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        self.coords.len().cmp(&rhs.coords.len())
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if Field::is_zero(c) {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            match k {
                0 => write!(out, "({})", c)?,
                1 => write!(out, "({})*a", c)?,
                _ => write!(out, "({})*a^{}", c, k)?,
            }
        }
        if first {
            write!(out, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2_field() -> Arc<ExtField> {
        // x^2 - 2
        ExtField::new(Polynomial::from_coeffs(vec![
            GaussianRational::from_int(-2),
            GaussianRational::zero(),
            GaussianRational::one(),
        ]))
        .unwrap()
    }

    #[test]
    fn generator_inverse() {
        // α^2 = 2: inverse of α is α/2
        let k = sqrt2_field();
        let alpha = k.generator();
        let inv = alpha.inverse().unwrap();
        let expected = alpha.mul(&k.from_base(GaussianRational::from_ratio(1, 2)));
        assert_eq!(inv, expected);
        assert!(Field::is_one(&alpha.mul(&inv)));
    }

    #[test]
    fn inverse_of_one() {
        let k = sqrt2_field();
        assert_eq!(k.one().inverse().unwrap(), k.one());
    }

    #[test]
    fn inverse_of_one_plus_alpha() {
        // (1 + α)(α - 1) = α^2 - 1 = 1, so (1 + α)^{-1} = α - 1
        let k = sqrt2_field();
        let a = k.one().add(&k.generator());
        let inv = a.inverse().unwrap();
        let expected = k.generator().sub(&k.one());
        assert_eq!(inv, expected);
    }

    #[test]
    fn zero_inverse_is_error() {
        let k = sqrt2_field();
        assert_eq!(k.zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields_error() {
        let k1 = sqrt2_field();
        let k2 = ExtField::new(Polynomial::from_coeffs(vec![
            GaussianRational::from_int(-3),
            GaussianRational::zero(),
            GaussianRational::one(),
        ]))
        .unwrap();
        assert_eq!(k1.generator().try_add(&k2.generator()), Err(Error::FieldMismatch));
    }

    #[test]
    fn reducible_minpoly_rejected_with_factor() {
        // x^2 - 1 = (x-1)(x+1)
        let err = ExtField::new(Polynomial::from_coeffs(vec![
            GaussianRational::from_int(-1),
            GaussianRational::zero(),
            GaussianRational::one(),
        ]))
        .unwrap_err();
        assert!(matches!(err, Error::ReducibleMinimalPolynomial { .. }));
    }

    #[test]
    fn random_inverse_roundtrip() {
        // ext_inverse(a) * a = 1 for nonzero elements in a test extension
        let k = sqrt2_field();
        for p in -4i64..5 {
            for q in -4i64..5 {
                let e = k
                    .from_base(GaussianRational::from_int(p))
                    .add(&k.generator().mul(&k.from_base(GaussianRational::from_parts(0, 1, q, 1))));
                if Field::is_zero(&e) {
                    continue;
                }
                assert!(Field::is_one(&e.mul(&e.inverse().unwrap())));
            }
        }
    }
}

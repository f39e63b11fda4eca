//! Exact univariate polynomial algebra over an arbitrary coefficient field.
//!
//! Coefficients are stored lowest degree first with no trailing zeros; the
//! zero polynomial is the empty vector. The generic gcd and resultant use
//! monic Euclidean remainder sequences; over Q(i) they are routed through a
//! fraction-free Gaussian-integer kernel (see `Field::poly_gcd_fast`).

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gaussian::GaussianRational;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F: Field> {
    coeffs: Vec<F>,
}

/// Squarefree decomposition: pairwise-coprime squarefree factors with their
/// multiplicities, product reconstructing the input up to a constant.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeDecomposition<F: Field> {
    pub parts: Vec<(Polynomial<F>, u32)>,
}

impl<F: Field> Polynomial<F> {
    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    pub fn identity(one: F) -> Self {
        Self::monomial(one, 1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&F> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let c = match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        if e == 0 {
            let c = self.coeffs.first().expect("0^0 for polynomials is undefined here");
            return Self::constant(c.one_like());
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.unwrap()
    }

    /// Euclidean division: `self = q * rhs + r` with `deg r < deg rhs`.
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self)> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = rhs.degree().unwrap();
        if self.coeffs.len() < rhs.coeffs.len() {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = rhs.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.coeffs[0].zero_like(); self.coeffs.len() - rhs.coeffs.len() + 1];
        for k in (d..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].mul(&lc_inv);
            let shift = k - d;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[shift + j] = rem[shift + j].sub(&q.mul(b));
            }
            quot[shift] = q;
        }
        rem.truncate(d);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(rhs)?;
        if !r.is_zero() {
            return Err(Error::Integrity("inexact polynomial division".into()));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Result<Self> {
        let lc = self.leading().ok_or(Error::ZeroPolynomial)?;
        if lc.is_one() {
            return Ok(self.clone());
        }
        let inv = lc.inv()?;
        Ok(self.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.mul(&c.from_u32_like(k as u32)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `self(g(x))` by Horner's scheme over polynomials.
    pub fn compose(&self, g: &Self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Monic greatest common divisor. Errors if both inputs are zero.
    pub fn gcd(&self, rhs: &Self) -> Result<Self> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return rhs.monic();
        }
        if rhs.is_zero() {
            return self.monic();
        }
        if let Some(g) = F::poly_gcd_fast(&self.coeffs, &rhs.coeffs) {
            return Ok(Self::from_coeffs(g));
        }
        let mut a = self.monic()?;
        let mut b = rhs.monic()?;
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = if r.is_zero() { r } else { r.monic()? };
        }
        Ok(a)
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s*self + t*rhs`, `g` monic.
    pub fn extended_gcd(&self, rhs: &Self) -> Result<(Self, Self, Self)> {
        if self.is_zero() && rhs.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let exemplar = self
            .coeffs
            .first()
            .or_else(|| rhs.coeffs.first())
            .unwrap()
            .clone();
        let one = Self::constant(exemplar.one_like());
        let zero = Self::zero();
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        let lc_inv = r0.leading().ok_or(Error::ZeroPolynomial)?.inv()?;
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
    }

    /// Resultant with the convention
    /// `Res(f, g) = lc(f)^{deg g} * prod g(alpha)` over the roots of `f`
    /// counted with multiplicity; e.g. `Res(x - a, x - b) = a - b`.
    pub fn resultant(&self, rhs: &Self) -> Result<F> {
        if self.is_zero() || rhs.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if let Some(r) = F::poly_resultant_fast(&self.coeffs, &rhs.coeffs) {
            return Ok(r);
        }
        resultant_field(self, rhs)
    }

    /// Yun's squarefree decomposition (characteristic zero).
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition<F>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic()?;
        let mut parts = Vec::new();
        if f.is_constant() {
            return Ok(SquarefreeDecomposition { parts });
        }
        let df = f.derivative();
        let g = f.gcd(&df)?;
        let mut b = f.exact_div(&g)?;
        let mut d = df.exact_div(&g)?.sub(&b.derivative());
        let mut mult = 1u32;
        while !b.is_constant() {
            let p = b.gcd(&d)?;
            if p.degree().unwrap_or(0) > 0 {
                parts.push((p.clone(), mult));
            }
            b = b.exact_div(&p)?;
            d = d.exact_div(&p)?.sub(&b.derivative());
            mult += 1;
        }
        // parts have pairwise-distinct multiplicities; order by multiplicity
        parts.sort_by_key(|&(_, m)| m);
        Ok(SquarefreeDecomposition { parts })
    }

    /// The squarefree part `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Self::constant(self.coeffs[0].one_like()));
        }
        let g = self.gcd(&self.derivative())?;
        self.exact_div(&g)?.monic()
    }
}

impl Polynomial<GaussianRational> {
    /// Root-multiplicity profile as sorted `(multiplicity, count)` pairs,
    /// computed by iterated gcd degree counting in the Gaussian-integer
    /// kernel. Equivalent to reading off the squarefree decomposition, but
    /// avoids polynomial divisions entirely.
    pub fn multiplicity_profile(&self) -> Result<Vec<(u32, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        Ok(crate::gaussint::multiplicity_profile(&self.coeffs))
    }
}

/// Deterministic polynomial comparison: degree first, then coefficients from
/// the constant term up in each field's canonical order.
pub fn cmp_poly<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> std::cmp::Ordering {
    a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| {
        for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
            let c = x.canonical_cmp(y);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    })
}

fn resultant_field<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<F> {
    // Euclidean remainder sequence with the classical transformation rules.
    let one = f.coeffs()[0].one_like();
    let mut acc = one;
    let mut a = f.clone();
    let mut b = g.clone();
    loop {
        let da = a.degree().ok_or(Error::ZeroPolynomial)?;
        let db = b.degree().unwrap_or(0);
        if b.is_zero() {
            // nonzero f, zero g was rejected earlier; common factor case
            return Ok(f.coeffs()[0].zero_like());
        }
        if db == 0 {
            // Res(a, c) = c^{deg a}
            let c = b.coeffs()[0].clone();
            let mut p = a.coeffs()[0].one_like();
            for _ in 0..da {
                p = p.mul(&c);
            }
            return Ok(acc.mul(&p));
        }
        if da < db {
            if (da * db) % 2 == 1 {
                acc = acc.neg();
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let (_, r) = a.div_rem(&b)?;
        if r.is_zero() {
            return Ok(f.coeffs()[0].zero_like());
        }
        let dr = r.degree().unwrap();
        // Res(a, b) = (-1)^{da*db} lc(b)^{da - dr} Res(b, r)
        if (da * db) % 2 == 1 {
            acc = acc.neg();
        }
        let lcb = b.leading().unwrap().clone();
        for _ in 0..(da - dr) {
            acc = acc.mul(&lcb);
        }
        a = b;
        b = r;
    }
}

/// Lagrange interpolation through distinct sample points.
pub fn interpolate<F: Field>(points: &[(F, F)]) -> Result<Polynomial<F>> {
    if points.is_empty() {
        return Ok(Polynomial::zero());
    }
    let one = points[0].0.one_like();
    let mut acc = Polynomial::zero();
    for (k, (xk, yk)) in points.iter().enumerate() {
        if yk.is_zero() {
            continue;
        }
        let mut num = Polynomial::constant(one.clone());
        let mut den = one.clone();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            num = num.mul(&Polynomial::from_coeffs(vec![xj.neg(), one.clone()]));
            den = den.mul(&xk.sub(xj));
        }
        let scale = yk.div(&den)?;
        acc = acc.add(&num.scale(&scale));
    }
    Ok(acc)
}

/// Chebyshev polynomial of the first kind, `T_0 = 1`, `T_1 = x`,
/// `T_{n+1} = 2x T_n - T_{n-1}`.
pub fn chebyshev(n: u32) -> Polynomial<GaussianRational> {
    let one = GaussianRational::one();
    let x = Polynomial::identity(one.clone());
    if n == 0 {
        return Polynomial::constant(one);
    }
    if n == 1 {
        return x;
    }
    let two_x = x.scale(&GaussianRational::from_int(2));
    let mut prev = Polynomial::constant(one);
    let mut cur = x;
    for _ in 2..=n {
        let next = two_x.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(out, "({})", c)?;
            } else if c.is_one() {
                write!(out, "z^{}", k)?;
            } else {
                write!(out, "({})*z^{}", c, k)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(coeffs: &[i64]) -> Polynomial<GaussianRational> {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    #[test]
    fn gcd_basic() {
        // gcd(x^2 - 1, x - 1) = x - 1
        let g = qp(&[-1, 0, 1]).gcd(&qp(&[-1, 1])).unwrap();
        assert_eq!(g, qp(&[-1, 1]));
        // idempotence and monic output: gcd(x^2+1, x^2+1) = x^2+1
        let f = qp(&[1, 0, 1]);
        assert_eq!(f.gcd(&f).unwrap(), f);
    }

    #[test]
    fn gcd_euclid_by_hand() {
        // gcd(2x^2 - 2, 4x^3 - 4x) = x^2 - 1
        let g = qp(&[-2, 0, 2]).gcd(&qp(&[0, -4, 0, 4])).unwrap();
        assert_eq!(g, qp(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_of_two_zeros_is_an_error() {
        let z: Polynomial<GaussianRational> = Polynomial::zero();
        assert!(z.gcd(&z).is_err());
    }

    #[test]
    fn squarefree_cube() {
        // x^3 -> [(x, 3)]
        let d = qp(&[0, 0, 0, 1]).squarefree_decomposition().unwrap();
        assert_eq!(d.parts, vec![(qp(&[0, 1]), 3)]);
    }

    #[test]
    fn squarefree_mixed() {
        // (x-1)^2 (x+2) -> [(x+2, 1), (x-1, 2)]
        let f = qp(&[-1, 1]).pow(2).mul(&qp(&[2, 1]));
        let d = f.squarefree_decomposition().unwrap();
        assert_eq!(d.parts, vec![(qp(&[2, 1]), 1), (qp(&[-1, 1]), 2)]);
    }

    #[test]
    fn squarefree_reexpansion_property() {
        // re-expansion reproduces the input up to the leading constant
        let f = qp(&[1, 2]).pow(3).mul(&qp(&[-3, 0, 1])).mul(&qp(&[5, 1]).pow(2));
        let d = f.squarefree_decomposition().unwrap();
        let mut prod = Polynomial::constant(GaussianRational::one());
        for (p, m) in &d.parts {
            prod = prod.mul(&p.pow(*m));
        }
        assert_eq!(prod.monic().unwrap(), f.monic().unwrap());
    }

    #[test]
    fn resultant_examples() {
        // Res(x^2 - 1, x - 2) = 3
        let r = qp(&[-1, 0, 1]).resultant(&qp(&[-2, 1])).unwrap();
        assert_eq!(r, GaussianRational::from_int(3));
        // convention: Res(x - a, x - b) = a - b
        let r = qp(&[-5, 1]).resultant(&qp(&[-7, 1])).unwrap();
        assert_eq!(r, GaussianRational::from_int(-2));
        // Res(x^2 + 1, x^2 - 2) = 9
        let r = qp(&[1, 0, 1]).resultant(&qp(&[-2, 0, 1])).unwrap();
        assert_eq!(r, GaussianRational::from_int(9));
    }

    #[test]
    fn compose_chebyshev() {
        // (2x^2 - 1) o (4x^3 - 3x) = T_6 = 32x^6 - 48x^4 + 18x^2 - 1
        let t2 = qp(&[-1, 0, 2]);
        let t3 = qp(&[0, -3, 0, 4]);
        let t6 = qp(&[-1, 0, 18, 0, -48, 0, 32]);
        assert_eq!(t2.compose(&t3), t6);
        assert_eq!(t3.compose(&t2), t6);
        assert_eq!(chebyshev(6), t6);
        assert_eq!(chebyshev(2), t2);
        assert_eq!(chebyshev(3), t3);
        assert_eq!(chebyshev(0), qp(&[1]));
    }

    #[test]
    fn compose_identity() {
        let f = qp(&[1, -4, 0, 3]);
        let x = qp(&[0, 1]);
        assert_eq!(f.compose(&x), f);
        assert_eq!(x.compose(&f), f);
    }

    #[test]
    fn extended_gcd_bezout() {
        let f = qp(&[-2, 0, 1]); // x^2 - 2
        let g = qp(&[1, 1]); // x + 1
        let (d, s, t) = f.extended_gcd(&g).unwrap();
        assert_eq!(d, qp(&[1])); // coprime
        assert_eq!(s.mul(&f).add(&t.mul(&g)), qp(&[1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = qp(&[2, -1, 0, 5]);
        let pts: Vec<_> = (0..5)
            .map(|k| {
                let x = GaussianRational::from_int(k);
                (x.clone(), f.eval(&x))
            })
            .collect();
        assert_eq!(interpolate(&pts).unwrap(), f);
    }
}

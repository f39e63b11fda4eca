//! Gaussian rationals: the field Q(i) used as the base coefficient field.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Field;

/// Exact element of Q(i), stored as two reduced big rationals.
///
/// `num_rational` keeps both parts canonical (reduced, positive denominator),
/// so equality is plain componentwise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `p/q` as a real Gaussian rational.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::zero(),
        )
    }

    /// `p/q + (r/s)i`.
    pub fn from_parts(p: i64, q: i64, r: i64, s: i64) -> Self {
        assert!(q != 0 && s != 0, "zero denominator");
        Self::new(
            BigRational::new(BigInt::from(p), BigInt::from(q)),
            BigRational::new(BigInt::from(r), BigInt::from(s)),
        )
    }

    pub fn from_bigs(re_num: BigInt, re_den: BigInt, im_num: BigInt, im_den: BigInt) -> Self {
        Self::new(BigRational::new(re_num, re_den), BigRational::new(im_num, im_den))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// |z|^2 = re^2 + im^2, a nonnegative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Deterministic total order: lexicographic on (re, im), each part
    /// compared by (numerator, denominator). Used for reproducible output
    /// ordering; it is not a numeric order.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        cmp_rational(&self.re, &other.re).then_with(|| cmp_rational(&self.im, &other.im))
    }
}

fn cmp_rational(a: &BigRational, b: &BigRational) -> Ordering {
    a.numer()
        .cmp(b.numer())
        .then_with(|| a.denom().cmp(b.denom()))
}

impl PartialOrd for GaussianRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.canonical_cmp(other))
    }
}

impl Ord for GaussianRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_cmp(other)
    }
}

impl Field for GaussianRational {
    fn zero_like(&self) -> Self {
        Self::zero()
    }

    fn one_like(&self) -> Self {
        Self::one()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    fn neg(&self) -> Self {
        Self::new(-self.re.clone(), -self.im.clone())
    }

    fn inv(&self) -> Result<Self> {
        if Field::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    fn from_u32_like(&self, n: u32) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    fn canonical_cmp(&self, rhs: &Self) -> Ordering {
        GaussianRational::canonical_cmp(self, rhs)
    }

    fn poly_gcd_fast(f: &[Self], g: &[Self]) -> Option<Vec<Self>> {
        Some(crate::gaussint::gcd_qi(f, g))
    }

    fn poly_resultant_fast(f: &[Self], g: &[Self]) -> Option<Self> {
        Some(crate::gaussint::resultant_qi(f, g))
    }
}

/// Renders `3/2`, `-1`, `i`, `2*i`, `1/2 - 3*i`, following the expression
/// grammar so that printed values re-parse.
impl fmt::Display for GaussianRational {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_rat(out: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
            if r.denom().is_one() {
                write!(out, "{}", r.numer())
            } else {
                write!(out, "{}/{}", r.numer(), r.denom())
            }
        }
        fn write_im(out: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
            if r.is_one() {
                write!(out, "i")
            } else if (-r).is_one() {
                write!(out, "-i")
            } else {
                write_rat(out, r)?;
                write!(out, "*i")
            }
        }
        if self.im.is_zero() {
            write_rat(out, &self.re)
        } else if self.re.is_zero() {
            write_im(out, &self.im)
        } else {
            write_rat(out, &self.re)?;
            if self.im.is_negative() {
                write!(out, " - ")?;
                write_im(out, &-self.im.clone())
            } else {
                write!(out, " + ")?;
                write_im(out, &self.im)
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, q_: i64) -> GaussianRational {
        GaussianRational::from_ratio(p, q_)
    }

    #[test]
    fn rational_addition() {
        // 1/2 + 1/3 = 5/6
        assert_eq!(q(1, 2).add(&q(1, 3)), q(5, 6));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(i.mul(&i), GaussianRational::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        // (1+i)^{-1} = (1-i)/2
        let z = GaussianRational::from_parts(1, 1, 1, 1);
        assert_eq!(z.inv().unwrap(), GaussianRational::from_parts(1, 2, -1, 2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(GaussianRational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_order_is_total_and_deterministic() {
        let mut v = vec![q(1, 3), q(1, 2), q(-1, 1), GaussianRational::i()];
        v.sort();
        // ordered by (re numerator, re denominator, im numerator, im denominator)
        assert_eq!(v[0], q(-1, 1));
        assert_eq!(v[1], GaussianRational::i()); // re = 0 sorts before re = 1/2
        assert_eq!(v[2], q(1, 2));
        assert_eq!(v[3], q(1, 3));
    }

    #[test]
    fn display_round_trips_visually() {
        assert_eq!(q(3, 2).to_string(), "3/2");
        assert_eq!(GaussianRational::from_parts(1, 6, 1, 6).to_string(), "1/6 + 1/6*i");
        assert_eq!(GaussianRational::from_parts(0, 1, -1, 3).to_string(), "-1/3*i");
        assert_eq!(GaussianRational::from_parts(1, 1, -1, 1).to_string(), "1 - i");
    }
}

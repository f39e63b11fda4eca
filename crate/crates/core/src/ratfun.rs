//! Rational maps on the projective line over Q(i).
//!
//! Functions are kept in lowest terms with monic denominator. The point at
//! infinity is handled by explicit degree-deficiency bookkeeping: a fiber
//! over a finite value `c` contains `x = infinity` with multiplicity `k`
//! exactly when `deg(num - c*den)` drops `k` below the map degree.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ext::{ExtElement, ExtField};
use crate::field::Field;
use crate::gaussian::GaussianRational;
use crate::poly::Polynomial;

type QiPoly = Polynomial<GaussianRational>;

/// A point of the projective line over Q(i).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProjPoint {
    Finite(GaussianRational),
    Infinity,
}

impl ProjPoint {
    pub fn zero() -> Self {
        ProjPoint::Finite(GaussianRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ProjPoint::Finite(GaussianRational::from_int(n))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(v) => write!(out, "{}", v),
            ProjPoint::Infinity => write!(out, "inf"),
        }
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

/// A rational map in lowest terms; the denominator is monic and nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: QiPoly,
    den: QiPoly,
}

/// Budget guard for iterated composition, measured in estimated coefficient
/// operations (roughly the square of the resulting degree per step).
pub const DEFAULT_ITERATE_BUDGET: u64 = 200_000;

impl RationalFunction {
    /// Lowest terms with monic denominator; rejects 0/0.
    pub fn new(num: QiPoly, den: QiPoly) -> Result<Self> {
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroOverZero);
            }
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self {
                num: Polynomial::zero(),
                den: Polynomial::constant(GaussianRational::one()),
            });
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        } else {
            (num, den)
        };
        let lc_inv = den.leading().unwrap().inv()?;
        Ok(Self {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(p: QiPoly) -> Self {
        Self {
            num: p,
            den: Polynomial::constant(GaussianRational::one()),
        }
    }

    pub fn identity() -> Self {
        Self::from_poly(Polynomial::identity(GaussianRational::one()))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn num(&self) -> &QiPoly {
        &self.num
    }

    pub fn den(&self) -> &QiPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// max(deg num, deg den); constants have degree 0.
    pub fn degree(&self) -> u32 {
        let dn = self.num.degree().map_or(0, |d| d as u32);
        let dd = self.den.degree().map_or(0, |d| d as u32);
        dn.max(dd)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Self::new(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// `self(rhs(x))`, via homogenization of `self` at degree `deg(self)`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        let d = self
            .num
            .degree()
            .map_or(0, |d| d)
            .max(self.den.degree().map_or(0, |d| d));
        let num = eval_homogenized(&self.num, d, &rhs.num, &rhs.den);
        let den = eval_homogenized(&self.den, d, &rhs.num, &rhs.den);
        Self::new(num, den)
    }

    /// k-fold composition with a coefficient-operation budget.
    pub fn iterate(&self, k: u32, budget: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("iterate requires k >= 1".into()));
        }
        let mut acc = self.clone();
        let mut spent = 0u64;
        for _ in 1..k {
            let cost = (acc.degree() as u64 * self.degree() as u64).pow(2);
            spent = spent.saturating_add(cost);
            if spent > budget {
                return Err(Error::BudgetExceeded { spent, budget });
            }
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// `mu1 o self o mu2` for Möbius transformations `mu1`, `mu2`.
    pub fn mobius_conjugate(&self, mu1: &Self, mu2: &Self) -> Result<Self> {
        if mu1.degree() != 1 {
            return Err(Error::NotMobius(mu1.degree()));
        }
        if mu2.degree() != 1 {
            return Err(Error::NotMobius(mu2.degree()));
        }
        mu1.compose(&self.compose(mu2)?)
    }

    /// Evaluation as a map of the projective line.
    pub fn eval_proj(&self, p: &ProjPoint) -> ProjPoint {
        match p {
            ProjPoint::Finite(x) => {
                let n = self.num.eval(x);
                let d = self.den.eval(x);
                if d.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(n.div(&d).expect("nonzero denominator"))
                }
            }
            ProjPoint::Infinity => {
                let dn = self.num.degree().map_or(-1, |d| d as i64);
                let dd = self.den.degree().map_or(-1, |d| d as i64);
                match dn.cmp(&dd) {
                    std::cmp::Ordering::Greater => ProjPoint::Infinity,
                    std::cmp::Ordering::Less => ProjPoint::Finite(GaussianRational::zero()),
                    std::cmp::Ordering::Equal => ProjPoint::Finite(
                        self.num
                            .leading()
                            .unwrap()
                            .div(self.den.leading().unwrap())
                            .expect("monic denominator"),
                    ),
                }
            }
        }
    }

    /// Numerator of the derivative: `num' * den - num * den'`.
    /// Its roots are the finite critical points (poles aside).
    pub fn wronskian(&self) -> QiPoly {
        self.num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()))
    }

    /// Local multiplicities of the fiber over `c`, as sorted
    /// `(multiplicity, count)` pairs with `sum(m * count) = deg`.
    pub fn fiber_multiplicities(&self, c: &ProjPoint) -> Result<Vec<(u32, u32)>> {
        if self.is_constant() {
            return Err(Error::ConstantFunction);
        }
        let deg = self.degree();
        let h = match c {
            ProjPoint::Finite(v) => self.num.sub(&self.den.scale(v)),
            ProjPoint::Infinity => self.den.clone(),
        };
        let mut out = Vec::new();
        let dh = if h.is_zero() {
            0
        } else {
            let d = h.degree().unwrap() as u32;
            out = h.multiplicity_profile()?;
            d
        };
        if dh < deg {
            out.push((deg - dh, 1)); // the point x = infinity
        }
        merge_counts(&mut out);
        debug_assert_eq!(out.iter().map(|&(m, c)| m * c).sum::<u32>(), deg);
        Ok(out)
    }

    /// Fiber multiplicities over an algebraic value in an extension field,
    /// by squarefree decomposition over that extension.
    pub fn fiber_multiplicities_ext(&self, c: &ExtElement) -> Result<Vec<(u32, u32)>> {
        if self.is_constant() {
            return Err(Error::ConstantFunction);
        }
        let deg = self.degree();
        let field: &Arc<ExtField> = c.field();
        let num = field.lift_poly(&self.num);
        let den = field.lift_poly(&self.den);
        let h = num.sub(&den.scale(c));
        let mut out = Vec::new();
        let dh = if h.is_zero() {
            0
        } else {
            let d = h.degree().unwrap() as u32;
            for (part, mult) in h.squarefree_decomposition()?.parts {
                out.push((mult, part.degree().unwrap() as u32));
            }
            d
        };
        if dh < deg {
            out.push((deg - dh, 1));
        }
        merge_counts(&mut out);
        debug_assert_eq!(out.iter().map(|&(m, cnt)| m * cnt).sum::<u32>(), deg);
        Ok(out)
    }
}

/// `sum_k p_k * num^k * den^{d-k}` for a polynomial `p` of formal degree `d`.
fn eval_homogenized(p: &QiPoly, d: usize, num: &QiPoly, den: &QiPoly) -> QiPoly {
    let mut acc = Polynomial::zero();
    // Horner in num with a trailing den power
    for k in (0..=d).rev() {
        acc = acc.mul(num);
        if let Some(c) = p.coeff(k) {
            if !c.is_zero() {
                let mut term = Polynomial::constant(c.clone());
                for _ in 0..(d - k) {
                    term = term.mul(den);
                }
                acc = acc.add(&term);
            }
        }
    }
    acc
}

/// Merges duplicate multiplicities and sorts descending by multiplicity.
fn merge_counts(out: &mut Vec<(u32, u32)>) {
    out.sort_by(|a, b| b.0.cmp(&a.0));
    let mut merged: Vec<(u32, u32)> = Vec::with_capacity(out.len());
    for &(m, c) in out.iter() {
        if let Some(last) = merged.last_mut() {
            if last.0 == m {
                last.1 += c;
                continue;
            }
        }
        merged.push((m, c));
    }
    *out = merged;
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(out, "{}", self.num)
        } else {
            write!(out, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, out)
    }
}

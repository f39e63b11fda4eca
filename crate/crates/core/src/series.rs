//! Series of genus-zero curves with a fixed left-hand function.
//!
//! A rational function A admits rational B of unbounded degree with all
//! curves A(x) - B(y) = 0 irreducible of genus zero exactly when chi of its
//! second associated orbifold is nonnegative; the verdict reports the
//! spherical group or flat signature behind a positive answer. Intertwined
//! pairs A o S = R o A then generate the series A(x) - R^{o l}(y) = 0.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gaussian::GaussianRational;
use crate::genus::{fried_genus_of, GenusReport, Irreducibility};
use crate::orbifold::{classify, orbifolds_of_function, OrbifoldClass};
use crate::poly::{chebyshev, Polynomial};
use crate::ratfun::{RationalFunction, DEFAULT_ITERATE_BUDGET};

type QiPoly = Polynomial<GaussianRational>;

/// Decision for one rational function.
#[derive(Clone, PartialEq, Debug)]
pub struct BasisVerdict {
    pub chi2: BigRational,
    pub is_basis: bool,
    pub class: OrbifoldClass,
    pub rationale: String,
}

/// Decides whether `a` admits series of irreducible genus-zero curves of
/// unbounded degree: true exactly when chi(O2) >= 0.
pub fn is_basis_of_series(a: &RationalFunction) -> Result<BasisVerdict> {
    if a.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let (_, o2) = orbifolds_of_function(a)?;
    let chi2 = o2.euler_char();
    let class = classify(&o2)?;
    let is_basis = chi2 >= BigRational::zero();
    let rationale = match &class {
        OrbifoldClass::Spherical(group) => format!(
            "compositional left factor of a degree-{} Galois covering of the sphere with group {}",
            group.order(),
            group.name()
        ),
        OrbifoldClass::Euclidean(sig) => format!(
            "torus route: signature {:?} admits a Galois covering from a complex torus",
            sig.nus()
        ),
        OrbifoldClass::Hyperbolic => format!(
            "hyperbolic: the genus of an irreducible curve with a degree-m partner exceeds (m - {} + 168)/168",
            84 * a.degree()
        ),
        OrbifoldClass::NoUniversalCover(_) => {
            // never the second associated orbifold of a rational function
            "signature admits no universal covering".to_string()
        }
    };
    Ok(BasisVerdict { chi2, is_basis, class, rationale })
}

/// The six explicit genus-zero families.
#[derive(Clone, PartialEq, Debug)]
pub enum Family {
    /// x^n - y^s R^n(y) = 0 with gcd(s, n) = 1; R may be a Laurent
    /// polynomial (denominator a monomial).
    Lau { n: u32, s: u32, r: RationalFunction },
    /// T_n(x) - T_m(y) = 0 with gcd(n, m) = 1.
    Che { n: u32, m: u32 },
    /// x^2 - (1 - y^2) S^2(y) = 0.
    S { s: QiPoly },
    /// T_{2n}(x) + T_{2m}(y) = 0 with gcd(n, m) = 1.
    Che2 { n: u32, m: u32 },
    /// (3x^4 - 4x^3) - (y^2 - 1)^3 = 0.
    Last,
    /// T_n(x) - (y^m + y^{-m})/2 = 0 with gcd(n, m) = 1.
    J { n: u32, m: u32 },
}

/// A constructed (A, B) pair from one of the families.
#[derive(Clone, PartialEq, Debug)]
pub struct FamilyInstance {
    pub family: Family,
    pub a: RationalFunction,
    pub b: RationalFunction,
}

/// Builds the (A, B) pair of a family, enforcing its gcd constraints.
pub fn make_family(family: Family) -> Result<FamilyInstance> {
    let pair = match &family {
        Family::Lau { n, s, r } => {
            if *n == 0 || *s == 0 {
                return Err(Error::InvalidParameter("Lau needs n, s >= 1".into()));
            }
            if num_integer::gcd(*n, *s) != 1 {
                return Err(Error::InvalidParameter(format!(
                    "Lau requires gcd(s, n) = 1, got gcd({}, {}) = {}",
                    s,
                    n,
                    num_integer::gcd(*n, *s)
                )));
            }
            if !monomial_denominator(r) {
                return Err(Error::InvalidParameter(
                    "Lau requires R to be a polynomial or Laurent polynomial".into(),
                ));
            }
            if r.num().is_zero() {
                return Err(Error::InvalidParameter("Lau requires R != 0".into()));
            }
            let a = RationalFunction::from_poly(Polynomial::monomial(GaussianRational::one(), *n as usize));
            let y_s = RationalFunction::from_poly(Polynomial::monomial(GaussianRational::one(), *s as usize));
            let mut r_n = r.clone();
            for _ in 1..*n {
                r_n = r_n.mul(r)?;
            }
            let b = y_s.mul(&r_n)?;
            if b.is_constant() {
                return Err(Error::InvalidParameter(
                    "Lau produced a constant B; choose different parameters".into(),
                ));
            }
            (a, b)
        }
        Family::Che { n, m } => {
            check_coprime(*n, *m)?;
            (
                RationalFunction::from_poly(chebyshev(*n)),
                RationalFunction::from_poly(chebyshev(*m)),
            )
        }
        Family::S { s } => {
            let a = RationalFunction::from_poly(Polynomial::monomial(GaussianRational::one(), 2));
            // B = (1 - y^2) * S(y)^2
            let one_minus_y2 = Polynomial::from_coeffs(vec![
                GaussianRational::one(),
                GaussianRational::zero(),
                GaussianRational::from_int(-1),
            ]);
            let b = RationalFunction::from_poly(one_minus_y2.mul(&s.mul(s)));
            if b.is_constant() {
                return Err(Error::InvalidParameter("S requires S(y) != 0".into()));
            }
            (a, b)
        }
        Family::Che2 { n, m } => {
            check_coprime(*n, *m)?;
            // curve reads T_2n(x) + T_2m(y) = 0, so B = -T_2m
            (
                RationalFunction::from_poly(chebyshev(2 * n)),
                RationalFunction::from_poly(chebyshev(2 * m).neg()),
            )
        }
        Family::Last => {
            let a = RationalFunction::from_poly(Polynomial::from_coeffs(vec![
                GaussianRational::zero(),
                GaussianRational::zero(),
                GaussianRational::zero(),
                GaussianRational::from_int(-4),
                GaussianRational::from_int(3),
            ]));
            let y2_minus_1 = Polynomial::from_coeffs(vec![
                GaussianRational::from_int(-1),
                GaussianRational::zero(),
                GaussianRational::one(),
            ]);
            (a, RationalFunction::from_poly(y2_minus_1.pow(3)))
        }
        Family::J { n, m } => {
            check_coprime(*n, *m)?;
            // B = (y^m + y^{-m})/2 = (y^{2m} + 1) / (2 y^m)
            let mut num = vec![GaussianRational::zero(); 2 * *m as usize + 1];
            num[0] = GaussianRational::one();
            num[2 * *m as usize] = GaussianRational::one();
            let den = Polynomial::monomial(GaussianRational::from_int(2), *m as usize);
            (
                RationalFunction::from_poly(chebyshev(*n)),
                RationalFunction::new(Polynomial::from_coeffs(num), den)?,
            )
        }
    };
    Ok(FamilyInstance { family, a: pair.0, b: pair.1 })
}

fn check_coprime(n: u32, m: u32) -> Result<()> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidParameter("parameters must be >= 1".into()));
    }
    if num_integer::gcd(n, m) != 1 {
        return Err(Error::InvalidParameter(format!(
            "requires gcd(n, m) = 1, got gcd({}, {}) = {}",
            n,
            m,
            num_integer::gcd(n, m)
        )));
    }
    Ok(())
}

fn monomial_denominator(r: &RationalFunction) -> bool {
    r.den().coeffs().iter().rev().skip(1).all(|c| c.is_zero())
}

/// Runs the genus formula on a family instance. `Proven` instances must come
/// out genus zero; instances with even degree pairs keep the irreducibility
/// caveat in the report.
pub fn certify_family(instance: &FamilyInstance) -> Result<GenusReport> {
    fried_genus_of(&instance.a, &instance.b)
}

/// Exact check of A o S = R o A as normalized rational functions.
pub fn verify_intertwining(
    a: &RationalFunction,
    s: &RationalFunction,
    r: &RationalFunction,
) -> Result<bool> {
    if a.is_constant() || s.is_constant() || r.is_constant() {
        return Err(Error::ConstantFunction);
    }
    Ok(a.compose(s)? == r.compose(a)?)
}

/// Exact commutation check F o sigma = sigma o F for each Möbius generator;
/// returns the failing generator index on failure.
pub fn verify_equivariance(
    f: &RationalFunction,
    generators: &[RationalFunction],
) -> Result<(bool, Option<usize>)> {
    for g in generators {
        if g.degree() != 1 {
            return Err(Error::NotMobius(g.degree()));
        }
    }
    for (ix, g) in generators.iter().enumerate() {
        if f.compose(g)? != g.compose(f)? {
            return Ok((false, Some(ix)));
        }
    }
    Ok((true, None))
}

/// Bivariate numerator of A(x) - B(y): terms of
/// `A_num(x) B_den(y) - B_num(y) A_den(x)` indexed by (x-degree, y-degree).
#[derive(Clone, PartialEq, Debug)]
pub struct BivariateCurve {
    pub terms: BTreeMap<(u32, u32), GaussianRational>,
}

impl BivariateCurve {
    pub fn separated(a: &RationalFunction, b: &RationalFunction) -> Self {
        let mut terms: BTreeMap<(u32, u32), GaussianRational> = BTreeMap::new();
        let mut add = |i: u32, j: u32, v: GaussianRational| {
            if v.is_zero() {
                return;
            }
            let slot = terms.entry((i, j)).or_insert_with(GaussianRational::zero);
            *slot = slot.add(&v);
            if slot.is_zero() {
                terms.remove(&(i, j));
            }
        };
        for (i, ca) in a.num().coeffs().iter().enumerate() {
            for (j, cb) in b.den().coeffs().iter().enumerate() {
                add(i as u32, j as u32, ca.mul(cb));
            }
        }
        for (j, cb) in b.num().coeffs().iter().enumerate() {
            for (i, ca) in a.den().coeffs().iter().enumerate() {
                add(i as u32, j as u32, cb.mul(ca).neg());
            }
        }
        Self { terms }
    }

    /// Substitutes x = xt, y = yt and returns whether the result vanishes
    /// identically.
    pub fn vanishes_on(&self, xt: &RationalFunction, yt: &RationalFunction) -> Result<bool> {
        let mut acc = RationalFunction::constant(GaussianRational::zero());
        for (&(i, j), c) in &self.terms {
            let xi = power(xt, i)?;
            let yj = power(yt, j)?;
            let term = xi.mul(&yj)?.mul(&RationalFunction::constant(c.clone()))?;
            acc = acc.add(&term)?;
        }
        Ok(acc.num().is_zero())
    }
}

fn power(f: &RationalFunction, e: u32) -> Result<RationalFunction> {
    let mut acc = RationalFunction::constant(GaussianRational::one());
    for _ in 0..e {
        acc = acc.mul(f)?;
    }
    Ok(acc)
}

impl fmt::Display for BivariateCurve {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.terms.iter().rev() {
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            write!(out, "({})", c)?;
            if i > 0 {
                write!(out, "*x^{}", i)?;
            }
            if j > 0 {
                write!(out, "*y^{}", j)?;
            }
        }
        Ok(())
    }
}

/// One step of a generated series.
#[derive(Clone, Debug)]
pub struct SeriesStep {
    pub l: u32,
    pub b: RationalFunction,
    pub degrees: (u32, u32),
    pub report: GenusReport,
    pub curve: BivariateCurve,
}

/// Certificate for the series A(x) - R^{o l}(y) = 0, l = 1..k.
#[derive(Clone, Debug)]
pub struct SeriesCertificate {
    pub steps: Vec<SeriesStep>,
}

impl SeriesCertificate {
    pub fn all_genus_zero(&self) -> bool {
        self.steps.iter().all(|s| s.report.genus == 0)
    }

    pub fn all_proven_irreducible(&self) -> bool {
        self.steps
            .iter()
            .all(|s| s.report.irreducibility == Irreducibility::Proven)
    }
}

/// Generates the series for an intertwined pair: for each l <= k the curve
/// A(x) - R^{o l}(y) = 0 with its coprimality proof and genus report.
/// Requires gcd(deg R, deg A) = 1 so every step is irreducible.
pub fn generate_series(
    a: &RationalFunction,
    r: &RationalFunction,
    k: u32,
    max_degree: u32,
) -> Result<SeriesCertificate> {
    if a.is_constant() || r.is_constant() {
        return Err(Error::ConstantFunction);
    }
    if k == 0 {
        return Err(Error::InvalidParameter("series needs k >= 1".into()));
    }
    if num_integer::gcd(a.degree(), r.degree()) != 1 {
        return Err(Error::InvalidParameter(format!(
            "series requires gcd(deg R, deg A) = 1, got ({}, {})",
            r.degree(),
            a.degree()
        )));
    }
    let mut steps = Vec::new();
    let mut b = r.clone();
    for l in 1..=k {
        if l > 1 {
            b = b.compose(r)?;
        }
        if b.degree() > max_degree {
            return Err(Error::DegreeCap { degree: b.degree(), cap: max_degree });
        }
        let report = fried_genus_of(a, &b)?;
        let curve = BivariateCurve::separated(a, &b);
        steps.push(SeriesStep {
            l,
            degrees: (a.degree(), b.degree()),
            report,
            curve,
            b: b.clone(),
        });
    }
    Ok(SeriesCertificate { steps })
}

/// Exact check that A(x(t)) - B(y(t)) vanishes identically.
pub fn parametrization_check(
    a: &RationalFunction,
    b: &RationalFunction,
    x_t: &RationalFunction,
    y_t: &RationalFunction,
) -> Result<bool> {
    if a.is_constant() || b.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let lhs = a.compose(x_t)?;
    let rhs = b.compose(y_t)?;
    Ok(lhs == rhs)
}

/// Iterate with the default budget (re-exported convenience used by the
/// certificate layer).
pub fn iterate_default(r: &RationalFunction, k: u32) -> Result<RationalFunction> {
    r.iterate(k, DEFAULT_ITERATE_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbifold::SphericalGroup;
    use num_bigint::BigInt;

    fn qp(coeffs: &[i64]) -> QiPoly {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(qp(num), qp(den)).unwrap()
    }

    #[test]
    fn quartic_is_a_basis_with_group_s4() {
        let a = rf(&[0, 0, 0, -4, 3], &[1]);
        let v = is_basis_of_series(&a).unwrap();
        assert!(v.is_basis);
        assert_eq!(v.chi2, BigRational::new(BigInt::from(1), BigInt::from(12)));
        assert_eq!(v.class, OrbifoldClass::Spherical(SphericalGroup::OctahedralS4));
    }

    #[test]
    fn monomials_are_bases() {
        let z7 = rf(&[0, 0, 0, 0, 0, 0, 0, 1], &[1]);
        let v = is_basis_of_series(&z7).unwrap();
        assert!(v.is_basis);
        assert_eq!(v.class, OrbifoldClass::Spherical(SphericalGroup::Cyclic(7)));
    }

    #[test]
    fn generic_quintic_is_not_a_basis() {
        let a = rf(&[0, -5, 0, 0, 0, 1], &[1]);
        let v = is_basis_of_series(&a).unwrap();
        assert!(!v.is_basis);
        assert_eq!(v.class, OrbifoldClass::Hyperbolic);
        assert_eq!(v.chi2, BigRational::new(BigInt::from(-4), BigInt::from(5)));
    }

    #[test]
    fn family_construction() {
        // Lau(2, 3, R = 1): (x^2, y^3)
        let lau = make_family(Family::Lau {
            n: 2,
            s: 3,
            r: RationalFunction::constant(GaussianRational::one()),
        })
        .unwrap();
        assert_eq!(lau.a, rf(&[0, 0, 1], &[1]));
        assert_eq!(lau.b, rf(&[0, 0, 0, 1], &[1]));
        // Che(2, 3): (T2, T3)
        let che = make_family(Family::Che { n: 2, m: 3 }).unwrap();
        assert_eq!(che.a, rf(&[-1, 0, 2], &[1]));
        assert_eq!(che.b, rf(&[0, -3, 0, 4], &[1]));
        // J(3, 2): (T3, (y^2 + y^{-2})/2)
        let j = make_family(Family::J { n: 3, m: 2 }).unwrap();
        assert_eq!(j.b, rf(&[1, 0, 0, 0, 1], &[0, 0, 2]));
        // gcd violations rejected
        assert!(make_family(Family::Che { n: 2, m: 4 }).is_err());
        assert!(make_family(Family::Lau {
            n: 2,
            s: 4,
            r: RationalFunction::constant(GaussianRational::one()),
        })
        .is_err());
    }

    #[test]
    fn family_certificates() {
        let che = make_family(Family::Che { n: 2, m: 3 }).unwrap();
        let report = certify_family(&che).unwrap();
        assert_eq!(report.genus, 0);
        assert_eq!(report.irreducibility, Irreducibility::Proven);

        let last = make_family(Family::Last).unwrap();
        let report = certify_family(&last).unwrap();
        assert_eq!(report.genus, 0);
        assert_eq!(report.irreducibility, Irreducibility::Unknown);

        let j = make_family(Family::J { n: 3, m: 2 }).unwrap();
        let report = certify_family(&j).unwrap();
        assert_eq!(report.genus, 0);
    }

    #[test]
    fn intertwining_checks() {
        // monomial commutation: z^n o z^k = z^k o z^n
        let zn = rf(&[0, 0, 0, 1], &[1]);
        let zk = rf(&[0, 0, 1], &[1]);
        assert!(verify_intertwining(&zn, &zk, &zk).unwrap());
        // z^2 with S = R = z + 1 fails
        let z2 = rf(&[0, 0, 1], &[1]);
        let s = rf(&[1, 1], &[1]);
        assert!(!verify_intertwining(&z2, &s, &s).unwrap());
    }

    #[test]
    fn equivariance_checks() {
        // odd function commutes with -z
        let z3 = rf(&[0, 0, 0, 1], &[1]);
        let neg = rf(&[0, -1], &[1]);
        assert_eq!(verify_equivariance(&z3, &[neg]).unwrap(), (true, None));
        // z^2 does not commute with iz
        let z2 = rf(&[0, 0, 1], &[1]);
        let iz = RationalFunction::from_poly(Polynomial::monomial(GaussianRational::i(), 1));
        assert_eq!(verify_equivariance(&z2, &[iz]).unwrap(), (false, Some(0)));
    }

    #[test]
    fn monomial_series() {
        // A = z^4, R = z^3: every step is genus zero, proven irreducible
        let a = rf(&[0, 0, 0, 0, 1], &[1]);
        let r = rf(&[0, 0, 0, 1], &[1]);
        let cert = generate_series(&a, &r, 2, 64).unwrap();
        assert!(cert.all_genus_zero());
        assert!(cert.all_proven_irreducible());
        assert_eq!(cert.steps[1].degrees, (4, 9));
    }

    #[test]
    fn parametrization_examples() {
        // A = x^2, B = y^3, x = t^3, y = t^2
        let a = rf(&[0, 0, 1], &[1]);
        let b = rf(&[0, 0, 0, 1], &[1]);
        let xt = rf(&[0, 0, 0, 1], &[1]);
        let yt = rf(&[0, 0, 1], &[1]);
        assert!(parametrization_check(&a, &b, &xt, &yt).unwrap());
        // perturbed parametrization fails
        let yt_bad = rf(&[1, 0, 1], &[1]);
        assert!(!parametrization_check(&a, &b, &xt, &yt_bad).unwrap());
    }

    #[test]
    fn curve_terms_and_vanishing() {
        // x^2 - y^3 = 0 parametrized by (t^3, t^2)
        let a = rf(&[0, 0, 1], &[1]);
        let b = rf(&[0, 0, 0, 1], &[1]);
        let curve = BivariateCurve::separated(&a, &b);
        assert_eq!(curve.terms.len(), 2);
        assert!(curve
            .vanishes_on(&rf(&[0, 0, 0, 1], &[1]), &rf(&[0, 0, 1], &[1]))
            .unwrap());
    }
}

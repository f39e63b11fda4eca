//! Ramification portraits: per-critical-value multisets of local
//! multiplicities of a rational map.
//!
//! Finite critical values are located as roots of the c-discriminant
//! `D(c) = Res_x(num - c*den, num' - c*den')`, computed by evaluation and
//! interpolation at points where neither leading coefficient degenerates.
//! The squarefree part of `D` is factored over Q(i); degree-one factors give
//! explicit critical values, higher-degree irreducible factors give whole
//! conjugacy classes that are never split into individual roots.
//!
//! Fibers over a conjugacy class with minimal polynomial `q` are read off the
//! Q(i)-polynomial `den^{deg q} * q(num/den)`: its roots are the union of the
//! fibers over all conjugate values, and Galois conjugacy distributes the
//! multiplicity counts evenly across the class.

use crate::error::{Error, Result};
use crate::ext::ExtField;
use crate::field::Field;
use crate::gaussian::GaussianRational;
use crate::poly::{cmp_poly, interpolate, Polynomial};
use crate::ratfun::{ProjPoint, RationalFunction};

type QiPoly = Polynomial<GaussianRational>;

/// Default cap on map degree for portrait computation.
pub const DEFAULT_MAX_DEGREE: u32 = 64;

/// Identifies one critical value (an explicit point of the projective line)
/// or a whole Galois conjugacy class of critical values (the roots of an
/// irreducible polynomial of degree >= 2 over Q(i)).
#[derive(Clone, PartialEq, Eq)]
pub enum ClassDescriptor {
    Point(ProjPoint),
    Conjugacy(QiPoly),
}

impl ClassDescriptor {
    /// Number of individual critical values the descriptor stands for.
    pub fn class_degree(&self) -> u32 {
        match self {
            ClassDescriptor::Point(_) => 1,
            ClassDescriptor::Conjugacy(q) => q.degree().unwrap_or(0) as u32,
        }
    }

    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ClassDescriptor::*;
        match (self, other) {
            (Point(ProjPoint::Finite(a)), Point(ProjPoint::Finite(b))) => a.canonical_cmp(b),
            (Point(ProjPoint::Finite(_)), _) => std::cmp::Ordering::Less,
            (_, Point(ProjPoint::Finite(_))) => std::cmp::Ordering::Greater,
            (Conjugacy(a), Conjugacy(b)) => cmp_poly(a, b),
            (Conjugacy(_), Point(ProjPoint::Infinity)) => std::cmp::Ordering::Less,
            (Point(ProjPoint::Infinity), Conjugacy(_)) => std::cmp::Ordering::Greater,
            (Point(ProjPoint::Infinity), Point(ProjPoint::Infinity)) => std::cmp::Ordering::Equal,
        }
    }
}

impl std::fmt::Display for ClassDescriptor {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassDescriptor::Point(p) => write!(out, "{}", p),
            ClassDescriptor::Conjugacy(q) => write!(out, "roots of {}", q),
        }
    }
}

impl std::fmt::Debug for ClassDescriptor {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, out)
    }
}

/// One critical value class: a descriptor plus the multiset of local
/// multiplicities over a single value of the class, stored as
/// `(multiplicity, count)` pairs sorted by descending multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CriticalValueClass {
    pub descriptor: ClassDescriptor,
    pub multiplicities: Vec<(u32, u32)>,
}

impl CriticalValueClass {
    pub fn class_degree(&self) -> u32 {
        self.descriptor.class_degree()
    }

    pub fn is_critical(&self) -> bool {
        self.multiplicities.iter().any(|&(m, _)| m >= 2)
    }

    /// lcm of the local multiplicities over one value of the class.
    pub fn nu2(&self) -> u32 {
        self.multiplicities
            .iter()
            .fold(1u32, |acc, &(m, _)| num_integer::lcm(acc, m))
    }
}

/// The full branching data of a rational map: one class per critical value,
/// Galois-conjugate values grouped. Unlisted values are unramified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RamificationPortrait {
    pub map_degree: u32,
    pub classes: Vec<CriticalValueClass>,
}

impl RamificationPortrait {
    /// Validates fiber sums, criticality of every class, descriptor
    /// distinctness, and the Riemann–Hurwitz count.
    pub fn validate(&self) -> Result<()> {
        let deg = self.map_degree;
        let mut rh_total: i64 = 0;
        for class in &self.classes {
            let fiber_sum: u32 = class.multiplicities.iter().map(|&(m, c)| m * c).sum();
            if fiber_sum != deg {
                return Err(Error::Integrity(format!(
                    "fiber over {} sums to {} instead of {}",
                    class.descriptor, fiber_sum, deg
                )));
            }
            if !class.is_critical() {
                return Err(Error::Integrity(format!(
                    "class {} carries no multiplicity >= 2",
                    class.descriptor
                )));
            }
            let defect: i64 = class
                .multiplicities
                .iter()
                .map(|&(m, c)| (m as i64 - 1) * c as i64)
                .sum();
            rh_total += class.class_degree() as i64 * defect;
        }
        for pair in self.classes.windows(2) {
            if pair[0].descriptor == pair[1].descriptor {
                return Err(Error::Integrity(format!(
                    "duplicate critical value descriptor {}",
                    pair[0].descriptor
                )));
            }
        }
        if rh_total != 2 * deg as i64 - 2 {
            return Err(Error::Integrity(format!(
                "Riemann-Hurwitz total {} != {}",
                rh_total,
                2 * deg as i64 - 2
            )));
        }
        Ok(())
    }
}

/// The c-discriminant `Res_x(num - c*den, num' - c*den')` as a polynomial in
/// `c`, by interpolation at sample points avoiding leading-coefficient drops.
fn critical_value_discriminant(f: &RationalFunction) -> Result<QiPoly> {
    let num = f.num();
    let den = f.den();
    let dnum = num.derivative();
    let dden = den.derivative();
    // F = num - c*den has x-degree deg(f); G = num' - c*den' has x-degree
    // max(deg num', deg den')
    let n = f.degree() as usize;
    let m = dnum
        .degree()
        .map_or(0, |d| d)
        .max(dden.degree().map_or(0, |d| d));
    if n == 0 {
        return Err(Error::ConstantFunction);
    }
    let bound = n + m + 1; // deg_c of the resultant is at most n + m
    let mut points = Vec::with_capacity(bound);
    let mut k: i64 = 0;
    while points.len() < bound {
        let c = GaussianRational::from_int(k);
        k += 1;
        let fc = num.sub(&den.scale(&c));
        let gc = dnum.sub(&dden.scale(&c));
        // keep only samples with full formal degrees so the specialized
        // resultant agrees with the formal one
        if fc.degree().map_or(true, |d| d != n) {
            continue;
        }
        if gc.is_zero() || gc.degree().unwrap() != m {
            continue;
        }
        let value = fc.resultant(&gc)?;
        points.push((c, value));
    }
    interpolate(&points)
}

/// Exactly the critical value classes of a nonconstant map: values whose
/// fiber carries a local multiplicity >= 2.
pub fn critical_values(f: &RationalFunction) -> Result<Vec<ClassDescriptor>> {
    Ok(ramification_portrait(f)?
        .classes
        .into_iter()
        .map(|c| c.descriptor)
        .collect())
}

/// Computes the ramification portrait with the default degree cap.
pub fn ramification_portrait(f: &RationalFunction) -> Result<RamificationPortrait> {
    ramification_portrait_with(f, DEFAULT_MAX_DEGREE)
}

pub fn ramification_portrait_with(
    f: &RationalFunction,
    max_degree: u32,
) -> Result<RamificationPortrait> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let deg = f.degree();
    if deg > max_degree {
        return Err(Error::DegreeCap { degree: deg, cap: max_degree });
    }

    let mut classes = Vec::new();

    // finite candidates from the c-discriminant
    let disc = critical_value_discriminant(f)?;
    if !disc.is_zero() && !disc.is_constant() {
        let squarefree = disc.squarefree_part()?;
        for (factor, _) in crate::factor::factor_over_qi(&squarefree)? {
            let fdeg = factor.degree().unwrap_or(0);
            if fdeg == 1 {
                let value = factor.coeff(0).unwrap().neg();
                let mults = f.fiber_multiplicities(&ProjPoint::Finite(value.clone()))?;
                if mults.iter().any(|&(m, _)| m >= 2) {
                    classes.push(CriticalValueClass {
                        descriptor: ClassDescriptor::Point(ProjPoint::Finite(value)),
                        multiplicities: mults,
                    });
                }
            } else {
                let mults = class_fiber_multiplicities(f, &factor)?;
                if mults.iter().any(|&(m, _)| m >= 2) {
                    classes.push(CriticalValueClass {
                        descriptor: ClassDescriptor::Conjugacy(factor),
                        multiplicities: mults,
                    });
                }
            }
        }
    }

    // the value A(infinity) can be critical purely through the point at
    // infinity even when the discriminant route already found it; fiber
    // filtering keeps the class list duplicate-free
    let c_inf = f.eval_proj(&ProjPoint::Infinity);
    if let ProjPoint::Finite(v) = &c_inf {
        let desc = ClassDescriptor::Point(ProjPoint::Finite(v.clone()));
        if !classes.iter().any(|c| c.descriptor == desc) {
            let mults = f.fiber_multiplicities(&c_inf)?;
            if mults.iter().any(|&(m, _)| m >= 2) {
                classes.push(CriticalValueClass { descriptor: desc, multiplicities: mults });
            }
        }
    }

    // the fiber over infinity
    let mults = f.fiber_multiplicities(&ProjPoint::Infinity)?;
    if mults.iter().any(|&(m, _)| m >= 2) {
        classes.push(CriticalValueClass {
            descriptor: ClassDescriptor::Point(ProjPoint::Infinity),
            multiplicities: mults,
        });
    }

    classes.sort_by(|a, b| a.descriptor.canonical_cmp(&b.descriptor));
    let portrait = RamificationPortrait { map_degree: deg, classes };
    portrait.validate()?;
    Ok(portrait)
}

/// Fiber multiplicities over one value of the conjugacy class with minimal
/// polynomial `q`, via the aggregate polynomial `den^{deg q} * q(num/den)`
/// whose squarefree structure collects all `deg q` conjugate fibers at once.
fn class_fiber_multiplicities(f: &RationalFunction, q: &QiPoly) -> Result<Vec<(u32, u32)>> {
    let d = q.degree().unwrap() as u32;
    debug_assert!(d >= 2);
    let phi = compose_with_map(q, f);
    let expected = f.degree() * d;
    if phi.degree().map_or(0, |x| x as u32) != expected {
        return Err(Error::Integrity(
            "aggregate class polynomial lost degree".into(),
        ));
    }
    let mut out = Vec::new();
    for (mult, count) in phi.multiplicity_profile()? {
        if count % d != 0 {
            return Err(Error::Integrity(format!(
                "conjugate fibers of {} are not Galois-balanced",
                q
            )));
        }
        out.push((mult, count / d));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    debug_assert_eq!(out.iter().map(|&(m, c)| m * c).sum::<u32>(), f.degree());
    Ok(out)
}

/// Alias used by the orbifold layer.
pub(crate) fn class_fiber(f: &RationalFunction, q: &QiPoly) -> Result<Vec<(u32, u32)>> {
    class_fiber_multiplicities(f, q)
}

/// The fiber over an explicit point, fully factored over Q(i): one entry per
/// irreducible factor of the fiber polynomial (plus the point at infinity
/// when the degree drops), each with its local multiplicity.
pub fn fiber_factors(
    f: &RationalFunction,
    c: &ProjPoint,
) -> Result<Vec<(ClassDescriptor, u32)>> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let deg = f.degree();
    let h = match c {
        ProjPoint::Finite(v) => f.num().sub(&f.den().scale(v)),
        ProjPoint::Infinity => f.den().clone(),
    };
    let mut out: Vec<(ClassDescriptor, u32)> = Vec::new();
    let dh = if h.is_zero() || h.is_constant() {
        0
    } else {
        for (w, mult) in crate::factor::factor_over_qi(&h)? {
            let desc = if w.degree() == Some(1) {
                ClassDescriptor::Point(ProjPoint::Finite(w.coeff(0).unwrap().neg()))
            } else {
                ClassDescriptor::Conjugacy(w)
            };
            out.push((desc, mult));
        }
        h.degree().unwrap() as u32
    };
    if dh < deg {
        out.push((ClassDescriptor::Point(ProjPoint::Infinity), deg - dh));
    }
    debug_assert_eq!(
        out.iter().map(|(d, m)| d.class_degree() * m).sum::<u32>(),
        deg
    );
    Ok(out)
}

/// `den^{deg q} * q(num/den)` as a polynomial over Q(i).
pub(crate) fn compose_with_map(q: &QiPoly, f: &RationalFunction) -> QiPoly {
    let d = q.degree().unwrap_or(0);
    let mut acc: QiPoly = Polynomial::zero();
    for k in (0..=d).rev() {
        acc = acc.mul(f.num());
        if let Some(c) = q.coeff(k) {
            if !c.is_zero() {
                let mut term = Polynomial::constant(c.clone());
                for _ in 0..(d - k) {
                    term = term.mul(f.den());
                }
                acc = acc.add(&term);
            }
        }
    }
    acc
}

/// Dual-route check used by tests: fiber multiplicities over a generic root
/// of `q` computed inside the extension field Q(i)[c]/(q).
pub fn class_fiber_via_extension(f: &RationalFunction, q: &QiPoly) -> Result<Vec<(u32, u32)>> {
    let field = ExtField::new(q.clone())?;
    f.fiber_multiplicities_ext(&field.generator())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(coeffs: &[i64]) -> QiPoly {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(qp(num), qp(den)).unwrap()
    }

    fn class_for<'p>(
        p: &'p RamificationPortrait,
        d: &ClassDescriptor,
    ) -> &'p CriticalValueClass {
        p.classes.iter().find(|c| &c.descriptor == d).unwrap()
    }

    #[test]
    fn quartic_example_portrait() {
        // A = 3z^4 - 4z^3: over 0 -> {3,1}; over -1 -> {2,1,1}; over inf -> {4}
        let a = rf(&[0, 0, 0, -4, 3], &[1]);
        let p = ramification_portrait(&a).unwrap();
        assert_eq!(p.classes.len(), 3);
        assert_eq!(
            class_for(&p, &ClassDescriptor::Point(ProjPoint::zero())).multiplicities,
            vec![(3, 1), (1, 1)]
        );
        assert_eq!(
            class_for(&p, &ClassDescriptor::Point(ProjPoint::from_int(-1))).multiplicities,
            vec![(2, 1), (1, 2)]
        );
        assert_eq!(
            class_for(&p, &ClassDescriptor::Point(ProjPoint::Infinity)).multiplicities,
            vec![(4, 1)]
        );
    }

    #[test]
    fn monomial_portrait() {
        // z^n ramifies over 0 and infinity only
        let z5 = rf(&[0, 0, 0, 0, 0, 1], &[1]);
        let p = ramification_portrait(&z5).unwrap();
        assert_eq!(p.classes.len(), 2);
        for class in &p.classes {
            assert_eq!(class.multiplicities, vec![(5, 1)]);
        }
    }

    #[test]
    fn z_plus_inverse_critical_values() {
        // A = z + 1/z = (z^2 + 1)/z: critical values 2 and -2, simple poles
        let a = rf(&[1, 0, 1], &[0, 1]);
        let values = critical_values(&a).unwrap();
        assert_eq!(
            values,
            vec![
                ClassDescriptor::Point(ProjPoint::from_int(-2)),
                ClassDescriptor::Point(ProjPoint::from_int(2)),
            ]
        );
    }

    #[test]
    fn chebyshev_cubic_portrait() {
        // T_3: over 1 -> {2,1}; over -1 -> {2,1}; over inf -> {3}
        let t3 = rf(&[0, -3, 0, 4], &[1]);
        let p = ramification_portrait(&t3).unwrap();
        assert_eq!(
            class_for(&p, &ClassDescriptor::Point(ProjPoint::from_int(1))).multiplicities,
            vec![(2, 1), (1, 1)]
        );
        assert_eq!(
            class_for(&p, &ClassDescriptor::Point(ProjPoint::from_int(-1))).multiplicities,
            vec![(2, 1), (1, 1)]
        );
        assert_eq!(
            class_for(&p, &ClassDescriptor::Point(ProjPoint::Infinity)).multiplicities,
            vec![(3, 1)]
        );
    }

    #[test]
    fn conjugacy_class_critical_values() {
        // A = z^3 - 3z: critical points ±1, values ∓2... use instead
        // A = z^2 + i z to get Gaussian arithmetic, and a quadratic class:
        // A = z^3 + z: A' = 3z^2 + 1, critical points ±i/sqrt(3),
        // values form a conjugacy class of degree 2
        let a = rf(&[0, 1, 0, 1], &[1]);
        let p = ramification_portrait(&a).unwrap();
        let conj: Vec<_> = p
            .classes
            .iter()
            .filter(|c| matches!(c.descriptor, ClassDescriptor::Conjugacy(_)))
            .collect();
        assert_eq!(conj.len(), 1);
        assert_eq!(conj[0].class_degree(), 2);
        assert_eq!(conj[0].multiplicities, vec![(2, 1), (1, 1)]);
        // dual route: same multiplicities inside the extension field
        if let ClassDescriptor::Conjugacy(q) = &conj[0].descriptor {
            assert_eq!(
                class_fiber_via_extension(&a, q).unwrap(),
                conj[0].multiplicities
            );
        }
    }

    #[test]
    fn mobius_has_no_critical_values() {
        let mu = rf(&[1, 2], &[3, 1]);
        assert!(critical_values(&mu).unwrap().is_empty());
    }

    #[test]
    fn portrait_degree_cap() {
        let a = rf(&[0, 0, 0, -4, 3], &[1]);
        assert!(matches!(
            ramification_portrait_with(&a, 3),
            Err(Error::DegreeCap { degree: 4, cap: 3 })
        ));
    }

    #[test]
    fn pole_ramification_detected() {
        // A = 1/z^2: over infinity -> {2} at z=0... fiber over inf is the
        // double root of den; over 0 the double point at infinity
        let a = rf(&[1], &[0, 0, 1]);
        let p = ramification_portrait(&a).unwrap();
        assert_eq!(p.classes.len(), 2);
        assert_eq!(
            class_for(&p, &ClassDescriptor::Point(ProjPoint::zero())).multiplicities,
            vec![(2, 1)]
        );
        assert_eq!(
            class_for(&p, &ClassDescriptor::Point(ProjPoint::Infinity)).multiplicities,
            vec![(2, 1)]
        );
    }
}

//! Two-dimensional orbifolds with signature support.
//!
//! A signature is a base genus (0 or 1) plus marked points with ramification
//! indices nu >= 2. Points may carry explicit support (a point of the
//! projective line or a conjugacy class over Q(i)) or be abstract counts;
//! the Euler characteristic and the geometry classification need only the
//! counts, while the pointwise map predicates require located support.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gaussian::GaussianRational;
use crate::portrait::{ramification_portrait, ClassDescriptor, RamificationPortrait};
use crate::ratfun::{ProjPoint, RationalFunction};

/// One batch of marked points sharing a ramification index.
///
/// Located support (`Some`) identifies the actual points; a `Point`
/// descriptor carries count 1 and a `Conjugacy` descriptor carries exactly
/// the degree of its minimal polynomial. `None` records count-only batches
/// (points lying over a conjugacy class of values, or hand-built signatures).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbifoldPoint {
    pub support: Option<ClassDescriptor>,
    pub nu: u32,
    pub count: u32,
}

/// An orbifold signature: base genus 0 or 1 plus marked points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbifoldSignature {
    base_genus: u8,
    points: Vec<OrbifoldPoint>,
}

impl OrbifoldSignature {
    /// Normalizes: drops nu <= 1, merges equal (support, nu) batches, sorts
    /// canonically, and validates located-support counts.
    pub fn new(base_genus: u8, points: Vec<OrbifoldPoint>) -> Result<Self> {
        if base_genus > 1 {
            return Err(Error::InvalidParameter("base genus must be 0 or 1".into()));
        }
        let mut kept: Vec<OrbifoldPoint> = Vec::new();
        for p in points {
            if p.nu <= 1 || p.count == 0 {
                continue;
            }
            if let Some(existing) = kept
                .iter_mut()
                .find(|q| q.support == p.support && q.nu == p.nu)
            {
                existing.count += p.count;
            } else {
                kept.push(p);
            }
        }
        for p in &kept {
            if let Some(desc) = &p.support {
                if p.count != desc.class_degree() {
                    return Err(Error::InvalidParameter(format!(
                        "support {} must carry count {}, got {}",
                        desc,
                        desc.class_degree(),
                        p.count
                    )));
                }
            }
        }
        // one nu per located support
        for i in 0..kept.len() {
            for j in (i + 1)..kept.len() {
                if kept[i].support.is_some() && kept[i].support == kept[j].support {
                    return Err(Error::InvalidParameter(format!(
                        "support {} listed with two ramification indices",
                        kept[i].support.as_ref().unwrap()
                    )));
                }
            }
        }
        kept.sort_by(|a, b| {
            a.nu.cmp(&b.nu).then_with(|| match (&a.support, &b.support) {
                (None, None) => std::cmp::Ordering::Equal,
                (None, Some(_)) => std::cmp::Ordering::Less,
                (Some(_), None) => std::cmp::Ordering::Greater,
                (Some(x), Some(y)) => x.canonical_cmp(y),
            })
        });
        Ok(Self { base_genus, points: kept })
    }

    /// Abstract genus-zero signature from a list of ramification indices.
    pub fn from_nus(nus: &[u32]) -> Self {
        let points = nus
            .iter()
            .map(|&nu| OrbifoldPoint { support: None, nu, count: 1 })
            .collect();
        Self::new(0, points).expect("abstract signature is always valid")
    }

    pub fn unramified_sphere() -> Self {
        Self { base_genus: 0, points: Vec::new() }
    }

    pub fn base_genus(&self) -> u8 {
        self.base_genus
    }

    pub fn points(&self) -> &[OrbifoldPoint] {
        &self.points
    }

    /// The multiset of ramification indices, ascending.
    pub fn nus(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for p in &self.points {
            for _ in 0..p.count {
                out.push(p.nu);
            }
        }
        out.sort_unstable();
        out
    }

    /// chi(O) = chi(base) + sum count*(1/nu - 1), exact.
    pub fn euler_char(&self) -> BigRational {
        let mut chi = BigRational::from_integer(BigInt::from(2 - 2 * self.base_genus as i64));
        for p in &self.points {
            let term = BigRational::new(BigInt::from(1), BigInt::from(p.nu))
                - BigRational::from_integer(BigInt::from(1));
            chi += term * BigRational::from_integer(BigInt::from(p.count));
        }
        chi
    }

    /// The ramification index assigned to a located point (1 when unlisted).
    fn nu_at(&self, desc: &ClassDescriptor) -> u32 {
        self.points
            .iter()
            .find(|p| p.support.as_ref() == Some(desc))
            .map_or(1, |p| p.nu)
    }

    fn has_unlocated_points(&self) -> bool {
        self.points.iter().any(|p| p.support.is_none())
    }
}

/// Finite automorphism groups of the sphere attached to chi > 0 signatures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SphericalGroup {
    /// C_n, signature (n, n); n = 1 is the trivial group of the unramified
    /// sphere.
    Cyclic(u32),
    /// D_{2n} of order 2n, signature (2, 2, n).
    Dihedral(u32),
    /// A_4, signature (2, 3, 3).
    TetrahedralA4,
    /// S_4, signature (2, 3, 4).
    OctahedralS4,
    /// A_5, signature (2, 3, 5).
    IcosahedralA5,
}

impl SphericalGroup {
    /// Group order; equals the degree of the associated Galois covering.
    pub fn order(&self) -> u32 {
        match self {
            SphericalGroup::Cyclic(n) => *n,
            SphericalGroup::Dihedral(n) => 2 * n,
            SphericalGroup::TetrahedralA4 => 12,
            SphericalGroup::OctahedralS4 => 24,
            SphericalGroup::IcosahedralA5 => 60,
        }
    }

    pub fn name(&self) -> String {
        match self {
            SphericalGroup::Cyclic(n) => format!("C{}", n),
            SphericalGroup::Dihedral(n) => format!("D{}", 2 * n),
            SphericalGroup::TetrahedralA4 => "A4".into(),
            SphericalGroup::OctahedralS4 => "S4".into(),
            SphericalGroup::IcosahedralA5 => "A5".into(),
        }
    }
}

/// The four flat signatures.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EuclideanSignature {
    S2222,
    S333,
    S244,
    S236,
}

impl EuclideanSignature {
    pub fn nus(&self) -> &'static [u32] {
        match self {
            EuclideanSignature::S2222 => &[2, 2, 2, 2],
            EuclideanSignature::S333 => &[3, 3, 3],
            EuclideanSignature::S244 => &[2, 4, 4],
            EuclideanSignature::S236 => &[2, 3, 6],
        }
    }
}

/// Why a chi > 0 signature admits no universal covering.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NoCoverReason {
    SinglePoint(u32),
    UnequalPair(u32, u32),
}

/// Geometry of a genus-zero signature.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrbifoldClass {
    Spherical(SphericalGroup),
    Euclidean(EuclideanSignature),
    Hyperbolic,
    NoUniversalCover(NoCoverReason),
}

/// Classifies a genus-zero signature by the sign of its Euler characteristic
/// and the standard signature lists; torus signatures are rejected.
pub fn classify(sig: &OrbifoldSignature) -> Result<OrbifoldClass> {
    if sig.base_genus() != 0 {
        return Err(Error::TorusUnsupported);
    }
    let chi = sig.euler_char();
    let nus = sig.nus();
    if chi.is_zero() {
        let cls = match nus.as_slice() {
            [2, 2, 2, 2] => EuclideanSignature::S2222,
            [3, 3, 3] => EuclideanSignature::S333,
            [2, 4, 4] => EuclideanSignature::S244,
            [2, 3, 6] => EuclideanSignature::S236,
            _ => {
                return Err(Error::Integrity(format!(
                    "chi = 0 with unexpected signature {:?}",
                    nus
                )))
            }
        };
        return Ok(OrbifoldClass::Euclidean(cls));
    }
    if chi < BigRational::zero() {
        return Ok(OrbifoldClass::Hyperbolic);
    }
    let cls = match nus.as_slice() {
        [] => OrbifoldClass::Spherical(SphericalGroup::Cyclic(1)),
        [n] => OrbifoldClass::NoUniversalCover(NoCoverReason::SinglePoint(*n)),
        [n, m] if n == m => OrbifoldClass::Spherical(SphericalGroup::Cyclic(*n)),
        [n, m] => OrbifoldClass::NoUniversalCover(NoCoverReason::UnequalPair(*n, *m)),
        [2, 2, n] => OrbifoldClass::Spherical(SphericalGroup::Dihedral(*n)),
        [2, 3, 3] => OrbifoldClass::Spherical(SphericalGroup::TetrahedralA4),
        [2, 3, 4] => OrbifoldClass::Spherical(SphericalGroup::OctahedralS4),
        [2, 3, 5] => OrbifoldClass::Spherical(SphericalGroup::IcosahedralA5),
        _ => {
            return Err(Error::Integrity(format!(
                "chi > 0 with unexpected signature {:?}",
                nus
            )))
        }
    };
    Ok(cls)
}

/// The associated orbifolds of a rational map: nu_2 is the lcm of local
/// degrees over each point, nu_1(z) = nu_2(f(z)) / deg_z f. By construction
/// the map is a covering map from the first onto the second.
pub fn orbifolds_of_function(
    f: &RationalFunction,
) -> Result<(OrbifoldSignature, OrbifoldSignature)> {
    let portrait = ramification_portrait(f)?;
    orbifolds_from_portrait(f, &portrait)
}

pub fn orbifolds_from_portrait(
    f: &RationalFunction,
    portrait: &RamificationPortrait,
) -> Result<(OrbifoldSignature, OrbifoldSignature)> {
    let mut o2_points = Vec::new();
    let mut o1_points = Vec::new();
    for class in &portrait.classes {
        let l = class.nu2();
        o2_points.push(OrbifoldPoint {
            support: Some(class.descriptor.clone()),
            nu: l,
            count: class.class_degree(),
        });
        match &class.descriptor {
            ClassDescriptor::Point(p) => {
                for (desc, m) in crate::portrait::fiber_factors(f, p)? {
                    let nu1 = l / m;
                    if nu1 > 1 {
                        let count = desc.class_degree();
                        o1_points.push(OrbifoldPoint { support: Some(desc), nu: nu1, count });
                    }
                }
            }
            ClassDescriptor::Conjugacy(_) => {
                let d = class.class_degree();
                for &(m, count) in &class.multiplicities {
                    let nu1 = l / m;
                    if nu1 > 1 {
                        o1_points.push(OrbifoldPoint {
                            support: None,
                            nu: nu1,
                            count: count * d,
                        });
                    }
                }
            }
        }
    }
    Ok((
        OrbifoldSignature::new(0, o1_points)?,
        OrbifoldSignature::new(0, o2_points)?,
    ))
}

/// The unique signature making `f` a minimal holomorphic map onto `target`:
/// nu_1(z) = nu_2(f(z)) / gcd(deg_z f, nu_2(f(z))) at every point.
pub fn minimal_pullback(
    f: &RationalFunction,
    target: &OrbifoldSignature,
) -> Result<OrbifoldSignature> {
    if target.base_genus() != 0 {
        return Err(Error::TorusUnsupported);
    }
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let mut points = Vec::new();
    for p in target.points() {
        let nu2 = p.nu;
        match &p.support {
            None => {
                return Err(Error::UnsupportedSupport(
                    "minimal pullback needs located support".into(),
                ))
            }
            Some(ClassDescriptor::Point(c)) => {
                for (desc, m) in crate::portrait::fiber_factors(f, c)? {
                    let nu1 = nu2 / num_integer::gcd(m, nu2);
                    if nu1 > 1 {
                        let count = desc.class_degree();
                        points.push(OrbifoldPoint { support: Some(desc), nu: nu1, count });
                    }
                }
            }
            Some(ClassDescriptor::Conjugacy(q)) => {
                let d = q.degree().unwrap_or(0) as u32;
                for (m, count) in crate::portrait::class_fiber(f, q)? {
                    let nu1 = nu2 / num_integer::gcd(m, nu2);
                    if nu1 > 1 {
                        points.push(OrbifoldPoint { support: None, nu: nu1, count: count * d });
                    }
                }
            }
        }
    }
    OrbifoldSignature::new(0, points)
}

/// Relation checked at every point of every relevant fiber.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MapRelation {
    /// nu_2(f(z)) = nu_1(z) * deg_z f
    Covering,
    /// nu_2(f(z)) divides nu_1(z) * deg_z f
    Holomorphic,
    /// nu_2(f(z)) = nu_1(z) * gcd(deg_z f, nu_2(f(z)))
    MinimalHolomorphic,
}

impl MapRelation {
    fn holds(&self, nu1: u32, nu2: u32, m: u32) -> bool {
        match self {
            MapRelation::Covering => nu2 == nu1 * m,
            MapRelation::Holomorphic => (nu1 as u64 * m as u64) % nu2 as u64 == 0,
            MapRelation::MinimalHolomorphic => nu2 == nu1 * num_integer::gcd(m, nu2),
        }
    }
}

/// A failing point for one of the orbifold map predicates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbifoldWitness {
    /// Source point(s); `None` when only the value class can be named.
    pub at: Option<ClassDescriptor>,
    /// The value it maps to.
    pub over: ClassDescriptor,
    pub nu1: u32,
    pub nu2: u32,
    pub local_degree: u32,
}

/// Outcome of a pointwise orbifold map predicate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapCheck {
    pub holds: bool,
    pub witness: Option<OrbifoldWitness>,
}

impl MapCheck {
    fn ok() -> Self {
        Self { holds: true, witness: None }
    }

    fn fail(witness: OrbifoldWitness) -> Self {
        Self { holds: false, witness: Some(witness) }
    }
}

pub fn is_covering_map(
    f: &RationalFunction,
    source: &OrbifoldSignature,
    target: &OrbifoldSignature,
) -> Result<MapCheck> {
    pointwise_check(f, source, target, MapRelation::Covering)
}

pub fn is_holomorphic_map(
    f: &RationalFunction,
    source: &OrbifoldSignature,
    target: &OrbifoldSignature,
) -> Result<MapCheck> {
    pointwise_check(f, source, target, MapRelation::Holomorphic)
}

pub fn is_minimal_holomorphic_map(
    f: &RationalFunction,
    source: &OrbifoldSignature,
    target: &OrbifoldSignature,
) -> Result<MapCheck> {
    pointwise_check(f, source, target, MapRelation::MinimalHolomorphic)
}

/// Checks the chosen relation at every point: fibers over the target
/// support, the critical fibers of `f`, and every listed source point.
pub fn pointwise_check(
    f: &RationalFunction,
    source: &OrbifoldSignature,
    target: &OrbifoldSignature,
    relation: MapRelation,
) -> Result<MapCheck> {
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    if source.base_genus() != 0 || target.base_genus() != 0 {
        return Err(Error::TorusUnsupported);
    }
    if source.has_unlocated_points() {
        return Err(Error::UnsupportedSupport(
            "source signature has count-only points".into(),
        ));
    }
    for p in target.points() {
        if !matches!(p.support, Some(ClassDescriptor::Point(_))) {
            return Err(Error::UnsupportedSupport(
                "target support must be explicit points of the projective line".into(),
            ));
        }
    }

    let mut matched: Vec<bool> = vec![false; source.points().len()];

    // fibers over each target support point
    for p in target.points() {
        let Some(ClassDescriptor::Point(c)) = &p.support else { unreachable!() };
        for (desc, m) in crate::portrait::fiber_factors(f, c)? {
            let nu1 = source.nu_at(&desc);
            if let Some(ix) = source
                .points()
                .iter()
                .position(|sp| sp.support.as_ref() == Some(&desc))
            {
                matched[ix] = true;
            }
            if !relation.holds(nu1, p.nu, m) {
                return Ok(MapCheck::fail(OrbifoldWitness {
                    at: Some(desc),
                    over: p.support.clone().unwrap(),
                    nu1,
                    nu2: p.nu,
                    local_degree: m,
                }));
            }
        }
    }

    // ramified fibers of f over values outside the target support
    let portrait = ramification_portrait(f)?;
    for class in &portrait.classes {
        let in_target = target
            .points()
            .iter()
            .any(|p| p.support.as_ref() == Some(&class.descriptor));
        if in_target {
            continue;
        }
        // nu_2 = 1 over this value
        for &(m, _) in &class.multiplicities {
            if !relation.holds(1, 1, m) {
                // points of this fiber are unlisted in the source (listed
                // ones are handled below), so nu_1 = 1 here
                return Ok(MapCheck::fail(OrbifoldWitness {
                    at: None,
                    over: class.descriptor.clone(),
                    nu1: 1,
                    nu2: 1,
                    local_degree: m,
                }));
            }
        }
    }

    // listed source points mapping outside the target support
    for (ix, sp) in source.points().iter().enumerate() {
        if matched[ix] {
            continue;
        }
        let desc = sp.support.clone().unwrap();
        let m = local_degree_of(f, &desc)?;
        if !relation.holds(sp.nu, 1, m) {
            let over = image_descriptor(f, &desc)?;
            return Ok(MapCheck::fail(OrbifoldWitness {
                at: Some(desc),
                over,
                nu1: sp.nu,
                nu2: 1,
                local_degree: m,
            }));
        }
    }

    Ok(MapCheck::ok())
}

/// Local degree of `f` at a located point or uniformly across a conjugacy
/// class of points.
fn local_degree_of(f: &RationalFunction, desc: &ClassDescriptor) -> Result<u32> {
    match desc {
        ClassDescriptor::Point(p) => {
            let c = f.eval_proj(p);
            for (d, m) in crate::portrait::fiber_factors(f, &c)? {
                if &d == desc {
                    return Ok(m);
                }
            }
            Err(Error::Integrity("point missing from its own fiber".into()))
        }
        ClassDescriptor::Conjugacy(q) => {
            // all roots of q share the local degree pattern only if q stays
            // within one fiber; take the multiplicity of q in num - c*den
            // where c is the (single) image value class
            let phi = crate::portrait::compose_with_map(q, f);
            // multiplicity of q dividing phi
            let mut m = 0u32;
            let mut cur = phi;
            loop {
                match cur.exact_div(q) {
                    Ok(next) => {
                        m += 1;
                        cur = next;
                    }
                    Err(_) => break,
                }
            }
            if m == 0 {
                return Err(Error::Integrity("class missing from aggregate fiber".into()));
            }
            Ok(m)
        }
    }
}

/// The value class a located source point maps onto.
fn image_descriptor(f: &RationalFunction, desc: &ClassDescriptor) -> Result<ClassDescriptor> {
    match desc {
        ClassDescriptor::Point(p) => Ok(ClassDescriptor::Point(f.eval_proj(p))),
        ClassDescriptor::Conjugacy(q) => {
            // minimal polynomial of f(alpha) for alpha a root of q: the
            // squarefree part of Res_x(q(x), num(x) - c*den(x)) in c
            let num = f.num();
            let den = f.den();
            let d = q.degree().unwrap();
            let mut points = Vec::new();
            let mut k: i64 = 0;
            while points.len() < d + 1 {
                let c = GaussianRational::from_int(k);
                k += 1;
                let h = num.sub(&den.scale(&c));
                if h.is_zero() {
                    continue;
                }
                points.push((c.clone(), q.resultant(&h)?));
            }
            let m = crate::poly::interpolate(&points)?;
            if m.is_zero() || m.is_constant() {
                // every root of q is a pole
                return Ok(ClassDescriptor::Point(ProjPoint::Infinity));
            }
            let sf = m.squarefree_part()?;
            if sf.degree() == Some(1) {
                Ok(ClassDescriptor::Point(ProjPoint::Finite(
                    sf.coeff(0).unwrap().neg(),
                )))
            } else {
                Ok(ClassDescriptor::Conjugacy(sf))
            }
        }
    }
}

/// The Riemann–Hurwitz relation for orbifold coverings:
/// chi(source) = deg * chi(target), exactly.
pub fn check_covering_rh(
    source: &OrbifoldSignature,
    target: &OrbifoldSignature,
    deg: u32,
) -> bool {
    source.euler_char() == target.euler_char() * BigRational::from_integer(BigInt::from(deg))
}

/// All genus-zero signatures with at most `max_points` marked points and
/// indices bounded by `max_nu`, as ascending index lists (the empty
/// signature included).
pub fn enumerate_signatures(max_points: usize, max_nu: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut current = Vec::new();
    fn go(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, max_points: usize, max_nu: u32, min: u32) {
        if current.len() == max_points {
            return;
        }
        for nu in min..=max_nu {
            current.push(nu);
            out.push(current.clone());
            go(out, current, max_points, max_nu, nu);
            current.pop();
        }
    }
    go(&mut out, &mut current, max_points, max_nu, 2);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    fn qp(coeffs: &[i64]) -> Polynomial<GaussianRational> {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(qp(num), qp(den)).unwrap()
    }

    fn ratio(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(OrbifoldSignature::from_nus(&[2, 3, 7]).euler_char(), ratio(-1, 42));
        assert_eq!(OrbifoldSignature::unramified_sphere().euler_char(), ratio(2, 1));
        assert_eq!(OrbifoldSignature::from_nus(&[2, 2, 2, 2]).euler_char(), ratio(0, 1));
        assert_eq!(OrbifoldSignature::from_nus(&[2, 3, 4]).euler_char(), ratio(1, 12));
    }

    #[test]
    fn euler_char_additivity() {
        // appending (nu, count) changes chi by count*(1/nu - 1)
        let base = OrbifoldSignature::from_nus(&[2, 3]);
        let mut points = base.points().to_vec();
        points.push(OrbifoldPoint { support: None, nu: 5, count: 3 });
        let bigger = OrbifoldSignature::new(0, points).unwrap();
        assert_eq!(
            bigger.euler_char(),
            base.euler_char() + (ratio(1, 5) - ratio(1, 1)) * ratio(3, 1)
        );
    }

    #[test]
    fn torus_signature_chi_only() {
        let torus = OrbifoldSignature::new(1, vec![]).unwrap();
        assert_eq!(torus.euler_char(), ratio(0, 1));
        assert!(matches!(classify(&torus), Err(Error::TorusUnsupported)));
    }

    #[test]
    fn classification_table() {
        use OrbifoldClass::*;
        use SphericalGroup::*;
        assert_eq!(classify(&OrbifoldSignature::from_nus(&[2, 3, 4])).unwrap(), Spherical(OctahedralS4));
        assert_eq!(classify(&OrbifoldSignature::from_nus(&[5, 5])).unwrap(), Spherical(Cyclic(5)));
        assert_eq!(classify(&OrbifoldSignature::from_nus(&[2, 2, 7])).unwrap(), Spherical(Dihedral(7)));
        assert_eq!(classify(&OrbifoldSignature::from_nus(&[2, 3, 3])).unwrap(), Spherical(TetrahedralA4));
        assert_eq!(classify(&OrbifoldSignature::from_nus(&[2, 3, 5])).unwrap(), Spherical(IcosahedralA5));
        assert_eq!(
            classify(&OrbifoldSignature::from_nus(&[2, 3, 6])).unwrap(),
            Euclidean(EuclideanSignature::S236)
        );
        assert_eq!(classify(&OrbifoldSignature::from_nus(&[2, 3, 7])).unwrap(), Hyperbolic);
        assert_eq!(
            classify(&OrbifoldSignature::from_nus(&[4])).unwrap(),
            NoUniversalCover(NoCoverReason::SinglePoint(4))
        );
        assert_eq!(
            classify(&OrbifoldSignature::from_nus(&[2, 5])).unwrap(),
            NoUniversalCover(NoCoverReason::UnequalPair(2, 5))
        );
        assert_eq!(classify(&OrbifoldSignature::unramified_sphere()).unwrap(), Spherical(Cyclic(1)));
    }

    #[test]
    fn quartic_associated_orbifolds() {
        // A = 3z^4 - 4z^3: nu_2 = (2, 3, 4), chi(O2) = 1/12, chi(O1) = 1/3
        let a = rf(&[0, 0, 0, -4, 3], &[1]);
        let (o1, o2) = orbifolds_of_function(&a).unwrap();
        assert_eq!(o2.nus(), vec![2, 3, 4]);
        assert_eq!(o2.euler_char(), ratio(1, 12));
        assert_eq!(o1.euler_char(), ratio(1, 3));
        assert_eq!(o1.nus(), vec![2, 2, 3]);
        // the covering relation chi(O1) = deg * chi(O2)
        assert!(check_covering_rh(&o1, &o2, 4));
        // and A is a covering map of its associated orbifolds
        assert!(is_covering_map(&a, &o1, &o2).unwrap().holds);
        assert!(is_holomorphic_map(&a, &o1, &o2).unwrap().holds);
        assert!(is_minimal_holomorphic_map(&a, &o1, &o2).unwrap().holds);
    }

    #[test]
    fn monomial_associated_orbifolds() {
        let z6 = rf(&[0, 0, 0, 0, 0, 0, 1], &[1]);
        let (o1, o2) = orbifolds_of_function(&z6).unwrap();
        assert_eq!(o2.nus(), vec![6, 6]);
        assert!(o1.points().is_empty());
        assert_eq!(o1.euler_char(), ratio(2, 1));
    }

    #[test]
    fn covering_check_witness() {
        // z^2 with O1 = O2 = (2,2,2,2) at {1,-1,i,-i}: fails with a witness
        let z2 = rf(&[0, 0, 1], &[1]);
        let pts: Vec<OrbifoldPoint> = [
            GaussianRational::from_int(1),
            GaussianRational::from_int(-1),
            GaussianRational::i(),
            GaussianRational::i().neg(),
        ]
        .into_iter()
        .map(|v| OrbifoldPoint {
            support: Some(ClassDescriptor::Point(ProjPoint::Finite(v))),
            nu: 2,
            count: 1,
        })
        .collect();
        let sig = OrbifoldSignature::new(0, pts).unwrap();
        let check = is_covering_map(&z2, &sig, &sig).unwrap();
        assert!(!check.holds);
        assert!(check.witness.is_some());
    }

    #[test]
    fn z2_covering_of_two_point_orbifold() {
        // z^2: unramified source onto (2 at 0, 2 at inf) is a covering
        let z2 = rf(&[0, 0, 1], &[1]);
        let target = OrbifoldSignature::new(
            0,
            vec![
                OrbifoldPoint {
                    support: Some(ClassDescriptor::Point(ProjPoint::zero())),
                    nu: 2,
                    count: 1,
                },
                OrbifoldPoint {
                    support: Some(ClassDescriptor::Point(ProjPoint::Infinity)),
                    nu: 2,
                    count: 1,
                },
            ],
        )
        .unwrap();
        let source = OrbifoldSignature::unramified_sphere();
        assert!(is_covering_map(&z2, &source, &target).unwrap().holds);
        // pullback reproduces the unramified source, chi equality holds
        let pb = minimal_pullback(&z2, &target).unwrap();
        assert_eq!(pb, source);
        assert_eq!(pb.euler_char(), target.euler_char() * ratio(2, 1));
    }

    #[test]
    fn pullback_strict_inequality() {
        // f = z^2, O2 = (2 at 1): pullback marks both square roots of 1;
        // chi(pullback) = 1 < 2 * chi(O2) = 3, and the map is not a covering
        let z2 = rf(&[0, 0, 1], &[1]);
        let target = OrbifoldSignature::new(
            0,
            vec![OrbifoldPoint {
                support: Some(ClassDescriptor::Point(ProjPoint::from_int(1))),
                nu: 2,
                count: 1,
            }],
        )
        .unwrap();
        let pb = minimal_pullback(&z2, &target).unwrap();
        assert_eq!(pb.nus(), vec![2, 2]);
        assert_eq!(pb.euler_char(), ratio(1, 1));
        assert!(pb.euler_char() < target.euler_char() * ratio(2, 1));
        assert!(!is_covering_map(&z2, &pb, &target).unwrap().holds);
        // it is a minimal holomorphic map by construction
        assert!(is_minimal_holomorphic_map(&z2, &pb, &target).unwrap().holds);
        assert!(is_holomorphic_map(&z2, &pb, &target).unwrap().holds);
    }

    #[test]
    fn quartic_pullback_recovers_associated_source() {
        let a = rf(&[0, 0, 0, -4, 3], &[1]);
        let (o1, o2) = orbifolds_of_function(&a).unwrap();
        assert_eq!(minimal_pullback(&a, &o2).unwrap(), o1);
    }

    #[test]
    fn corrupted_nu_table_fails_with_witness() {
        let a = rf(&[0, 0, 0, -4, 3], &[1]);
        let (o1, o2) = orbifolds_of_function(&a).unwrap();
        // corrupt: bump every nu_1 by replacing with nu+1
        let corrupted: Vec<OrbifoldPoint> = o1
            .points()
            .iter()
            .map(|p| OrbifoldPoint { support: p.support.clone(), nu: p.nu + 1, count: p.count })
            .collect();
        let bad = OrbifoldSignature::new(0, corrupted).unwrap();
        let check = is_holomorphic_map(&a, &bad, &o2).unwrap();
        assert!(!check.holds && check.witness.is_some());
    }

    #[test]
    fn enumeration_size_sanity() {
        let sigs = enumerate_signatures(2, 3);
        // (), (2), (3), (2,2), (2,3), (3,3)
        assert_eq!(sigs.len(), 6);
    }
}

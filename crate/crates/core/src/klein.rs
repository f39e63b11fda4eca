//! The embedded octahedral worked example: a quartic basis function, the
//! degree-24 Galois covering with group S4 it factors, an equivariant
//! quintic, and the intertwined degree-5 pair generating its series of
//! genus-zero curves. Every embedded literal is validated by the certificate
//! rather than trusted.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::field::Field;
use crate::gaussian::GaussianRational;
use crate::genus::Irreducibility;
use crate::orbifold::{classify, orbifolds_of_function, OrbifoldClass};
use crate::poly::Polynomial;
use crate::portrait::{ramification_portrait, ClassDescriptor, RamificationPortrait};
use crate::ratfun::{ProjPoint, RationalFunction};
use crate::series::{generate_series, parametrization_check, verify_equivariance, verify_intertwining};

type QiPoly = Polynomial<GaussianRational>;

/// One validated identity.
#[derive(Clone, Debug)]
pub struct NamedCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

/// An outcome recorded without a hardcoded expectation.
#[derive(Clone, Debug)]
pub struct NamedObservation {
    pub name: &'static str,
    pub outcome: bool,
}

/// The embedded data set plus the results of all its validation checks.
#[derive(Clone, Debug)]
pub struct KleinS4Certificate {
    pub a: RationalFunction,
    pub galois_cover: RationalFunction,
    pub half_cover: RationalFunction,
    pub equivariant_quintic: RationalFunction,
    pub equivariant_deg11: RationalFunction,
    pub r: RationalFunction,
    pub s: RationalFunction,
    pub generators: Vec<RationalFunction>,
    pub checks: Vec<NamedCheck>,
    pub observations: Vec<NamedObservation>,
}

impl KleinS4Certificate {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect()
    }
}

fn zp(coeffs: &[i64]) -> QiPoly {
    Polynomial::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// A = 3z^4 - 4z^3.
pub fn quartic_basis() -> RationalFunction {
    RationalFunction::from_poly(zp(&[0, 0, 0, -4, 3]))
}

/// The degree-24 octahedral Galois covering
/// f = -(z^8 + 14z^4 + 1)^3 / (108 z^4 (z^4 - 1)^4).
pub fn galois_cover() -> RationalFunction {
    let base = zp(&[1, 0, 0, 0, 14, 0, 0, 0, 1]);
    let num = base.pow(3).neg();
    let den = Polynomial::monomial(GaussianRational::from_int(108), 4)
        .mul(&zp(&[-1, 0, 0, 0, 1]).pow(4));
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// The degree-6 map with f = A o p:
/// p = ((1+i)/6 z^2 - i/3 z + (1-i)/6)(z^4 + 2z^3 + 2z^2 - 2z + 1)
///     / (z (z^2+1)(z+1)(z-1)).
pub fn half_cover() -> RationalFunction {
    let quad = Polynomial::from_coeffs(vec![
        GaussianRational::from_parts(1, 6, -1, 6),
        GaussianRational::from_parts(0, 1, -1, 3),
        GaussianRational::from_parts(1, 6, 1, 6),
    ]);
    let quart = zp(&[1, -2, 2, 2, 1]);
    let num = quad.mul(&quart);
    let den = zp(&[0, -1, 0, 0, 0, 1]); // z^5 - z
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// The octahedrally equivariant quintic F = (-z^5 + 5z) / (5z^4 - 1).
pub fn equivariant_quintic() -> RationalFunction {
    RationalFunction::new(zp(&[0, 5, 0, 0, 0, -1]), zp(&[-1, 0, 0, 0, 5])).unwrap()
}

/// The degree-11 icosahedrally equivariant function
/// (z^11 + 66z^6 - 11z) / (-11z^10 - 66z^5 + 1).
pub fn equivariant_deg11() -> RationalFunction {
    RationalFunction::new(
        zp(&[0, -11, 0, 0, 0, 0, 66, 0, 0, 0, 0, 1]),
        zp(&[1, 0, 0, 0, 0, -66, 0, 0, 0, 0, -11]),
    )
    .unwrap()
}

/// R = z^2 (z^3 - 240z^2 + 19200z - 512000)
///     / (625z^4 + 16000z^3 + 153600z^2 + 655360z + 1048576);
/// the denominator is (5z + 32)^4.
pub fn series_generator_r() -> RationalFunction {
    RationalFunction::new(
        zp(&[0, 0, -512000, 19200, -240, 1]),
        zp(&[1048576, 655360, 153600, 16000, 625]),
    )
    .unwrap()
}

/// S = z^2 (3z^3 - 10z^2 + 20z - 40) / (20z^3 - 15z^4 - 32), the lift of R
/// through A; validated against the covering relation p o F = S o p.
pub fn series_lift_s() -> RationalFunction {
    RationalFunction::new(zp(&[0, 0, -40, 20, -10, 3]), zp(&[-32, 0, 0, 20, -15])).unwrap()
}

/// The fixed generators of the octahedral Möbius group: z -> iz and
/// z -> (z + i)/(z - i).
pub fn octahedral_generators() -> Vec<RationalFunction> {
    let scale = RationalFunction::from_poly(Polynomial::monomial(GaussianRational::i(), 1));
    let rot = RationalFunction::new(
        Polynomial::from_coeffs(vec![GaussianRational::i(), GaussianRational::one()]),
        Polynomial::from_coeffs(vec![GaussianRational::i().neg(), GaussianRational::one()]),
    )
    .unwrap();
    vec![scale, rot]
}

fn portrait_matches(
    portrait: &RamificationPortrait,
    expected: &[(ProjPoint, Vec<(u32, u32)>)],
) -> bool {
    if portrait.classes.len() != expected.len() {
        return false;
    }
    expected.iter().all(|(value, mults)| {
        portrait
            .classes
            .iter()
            .any(|c| c.descriptor == ClassDescriptor::Point(value.clone()) && &c.multiplicities == mults)
    })
}

/// Builds the embedded data and runs every validation check.
pub fn klein_s4_certificate() -> Result<KleinS4Certificate> {
    let a = quartic_basis();
    let f = galois_cover();
    let p = half_cover();
    let quintic = equivariant_quintic();
    let deg11 = equivariant_deg11();
    let r = series_generator_r();
    let s = series_lift_s();
    let generators = octahedral_generators();

    let mut checks = Vec::new();
    let mut check = |name: &'static str, passed: bool, detail: Option<String>| {
        checks.push(NamedCheck { name, passed, detail });
    };

    // branching data of the quartic
    let pa = ramification_portrait(&a)?;
    check(
        "portrait_of_quartic",
        portrait_matches(
            &pa,
            &[
                (ProjPoint::zero(), vec![(3, 1), (1, 1)]),
                (ProjPoint::from_int(-1), vec![(2, 1), (1, 2)]),
                (ProjPoint::Infinity, vec![(4, 1)]),
            ],
        ),
        Some(format!("{:?}", pa.classes)),
    );

    let (o1a, o2a) = orbifolds_of_function(&a)?;
    check(
        "chi_of_associated_orbifolds",
        o2a.euler_char() == ratio(1, 12) && o1a.euler_char() == ratio(1, 3),
        Some(format!("chi(O2) = {}, chi(O1) = {}", o2a.euler_char(), o1a.euler_char())),
    );
    let class = classify(&o2a)?;
    let group_order = match class {
        OrbifoldClass::Spherical(g) => g.order(),
        _ => 0,
    };
    check(
        "octahedral_signature",
        group_order == 24,
        Some(format!("{:?}", class)),
    );

    // the Galois covering factors through A
    check("cover_factors_through_quartic", f == a.compose(&p)?, None);

    // branching of the degree-24 covering: uniform fibers 3^8 / 2^12 / 4^6
    let pf = ramification_portrait(&f)?;
    check(
        "portrait_of_cover",
        portrait_matches(
            &pf,
            &[
                (ProjPoint::zero(), vec![(3, 8)]),
                (ProjPoint::from_int(-1), vec![(2, 12)]),
                (ProjPoint::Infinity, vec![(4, 6)]),
            ],
        ),
        Some(format!("{:?}", pf.classes)),
    );

    // chi(O2 of the cover) = (2 - 2*0) / |S4|
    let (o1f, o2f) = orbifolds_of_function(&f)?;
    check(
        "cover_chi_equals_two_over_group_order",
        o2f.euler_char() == ratio(2, group_order.max(1) as i64)
            && o1f.euler_char() == ratio(2, 1),
        Some(format!("chi(O2 of cover) = {}", o2f.euler_char())),
    );

    // the intertwining engine A o S = R o A
    check("intertwining_a_s_r", verify_intertwining(&a, &s, &r)?, None);

    // both degree-5 maps are the descents of the equivariant quintic
    check(
        "cover_relation_for_r",
        f.compose(&quintic)? == r.compose(&f)?,
        None,
    );
    check(
        "cover_relation_for_s",
        p.compose(&quintic)? == s.compose(&p)?,
        None,
    );

    // equivariance of the quintic under both generators
    let (eq, witness) = verify_equivariance(&quintic, &generators)?;
    check(
        "equivariance_of_quintic",
        eq,
        witness.map(|ix| format!("fails generator {}", ix)),
    );

    // series steps k = 1, 2: coprime degrees (4, 5^k), genus zero
    let series = generate_series(&a, &r, 2, 64)?;
    let degrees_ok = series.steps[0].degrees == (4, 5) && series.steps[1].degrees == (4, 25);
    check(
        "series_k1_k2_genus_zero",
        degrees_ok
            && series.all_genus_zero()
            && series.all_proven_irreducible()
            && series
                .steps
                .iter()
                .all(|st| st.report.irreducibility == Irreducibility::Proven),
        Some(format!(
            "degrees {:?}, genera {:?}",
            series.steps.iter().map(|st| st.degrees).collect::<Vec<_>>(),
            series.steps.iter().map(|st| st.report.genus).collect::<Vec<_>>()
        )),
    );

    // the k = 1 parametrization x = S(t), y = A(t)
    check(
        "parametrization_k1",
        parametrization_check(&a, &r, &s, &a)?,
        None,
    );

    // the degree-11 equivariant function against these particular
    // generators: outcome recorded, not asserted
    let mut observations = Vec::new();
    for (ix, g) in generators.iter().enumerate() {
        let (ok, _) = verify_equivariance(&deg11, std::slice::from_ref(g))?;
        observations.push(NamedObservation {
            name: if ix == 0 {
                "deg11_commutes_with_rotation_iz"
            } else {
                "deg11_commutes_with_involution"
            },
            outcome: ok,
        });
    }

    Ok(KleinS4Certificate {
        a,
        galois_cover: f,
        half_cover: p,
        equivariant_quintic: quintic,
        equivariant_deg11: deg11,
        r,
        s,
        generators,
        checks,
        observations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_degrees() {
        assert_eq!(quartic_basis().degree(), 4);
        assert_eq!(galois_cover().degree(), 24);
        assert_eq!(half_cover().degree(), 6);
        assert_eq!(equivariant_quintic().degree(), 5);
        assert_eq!(equivariant_deg11().degree(), 11);
        assert_eq!(series_generator_r().degree(), 5);
        assert_eq!(series_lift_s().degree(), 5);
    }

    #[test]
    fn r_denominator_is_a_fourth_power() {
        // 625z^4 + ... + 1048576 = (5z + 32)^4
        let den = zp(&[1048576, 655360, 153600, 16000, 625]);
        assert_eq!(zp(&[32, 5]).pow(4), den);
    }

    #[test]
    fn full_certificate_passes() {
        let cert = klein_s4_certificate().unwrap();
        assert!(
            cert.all_passed(),
            "failed checks: {:?}",
            cert.failed_checks()
        );
        assert_eq!(cert.checks.len(), 12);
        assert_eq!(cert.observations.len(), 2);
    }
}

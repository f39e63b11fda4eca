//! Genus of separated-variable curves A(x) - B(y) = 0 from the two
//! ramification portraits, plus the coprime-degree irreducibility criterion
//! and the degree-driven genus lower bound.
//!
//! With c_1..c_r the union of critical values of A and B, and f_{i,j} /
//! g_{i,j} the local degrees over c_i, the genus of an irreducible curve
//! satisfies
//!
//! `2 - 2g = sum_i sum_{j1} sum_{j2} gcd(f_{i,j1}, g_{i,j2}) - (r-2) deg A deg B`.
//!
//! A whole conjugacy class of critical values contributes its class degree
//! worth of identical terms to both `r` and the double sum.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::portrait::{ramification_portrait, RamificationPortrait};
use crate::ratfun::RationalFunction;

/// Outcome of the only irreducibility test the toolkit proves:
/// coprime degrees. `Unknown` is never "reducible".
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Irreducibility {
    Proven,
    Unknown,
}

/// Output of the genus formula.
///
/// `genus` can be negative only when `irreducibility` is `Unknown`; a
/// negative value is evidence that the curve is reducible (the formula
/// presumes irreducibility), reported as a diagnostic rather than an error.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenusReport {
    pub genus: i64,
    /// Number of distinct critical values in the union, conjugates counted
    /// individually.
    pub r: u32,
    pub gcd_sum: u64,
    pub irreducibility: Irreducibility,
    pub degrees: (u32, u32),
}

impl GenusReport {
    pub fn reducibility_evidence(&self) -> bool {
        self.genus < 0
    }
}

/// The genus formula on a pair of portraits. Portraits are validated first
/// so synthetic inputs cannot smuggle inconsistent fibers through.
pub fn fried_genus(pa: &RamificationPortrait, pb: &RamificationPortrait) -> Result<GenusReport> {
    pa.validate()?;
    pb.validate()?;
    let deg_a = pa.map_degree;
    let deg_b = pb.map_degree;

    // union of critical value classes, matched by descriptor
    let mut matched_b: Vec<bool> = vec![false; pb.classes.len()];
    let mut r: u32 = 0;
    let mut gcd_sum: u64 = 0;

    let all_ones_a: Vec<(u32, u32)> = vec![(1, deg_a)];
    let all_ones_b: Vec<(u32, u32)> = vec![(1, deg_b)];

    for class_a in &pa.classes {
        let d = class_a.class_degree();
        let (mults_b, class_deg_b) = match pb
            .classes
            .iter()
            .enumerate()
            .find(|(_, cb)| cb.descriptor == class_a.descriptor)
        {
            Some((j, cb)) => {
                matched_b[j] = true;
                (&cb.multiplicities, cb.class_degree())
            }
            None => (&all_ones_b, d),
        };
        if class_deg_b != d {
            return Err(Error::Integrity(format!(
                "critical value class {} matched with inconsistent degrees {} vs {}",
                class_a.descriptor, d, class_deg_b
            )));
        }
        r += d;
        gcd_sum += d as u64 * pair_gcd_sum(&class_a.multiplicities, mults_b);
    }
    for (j, class_b) in pb.classes.iter().enumerate() {
        if matched_b[j] {
            continue;
        }
        let d = class_b.class_degree();
        r += d;
        gcd_sum += d as u64 * pair_gcd_sum(&all_ones_a, &class_b.multiplicities);
    }

    let two_minus_two_g =
        gcd_sum as i64 - (r as i64 - 2) * deg_a as i64 * deg_b as i64;
    if two_minus_two_g % 2 != 0 {
        return Err(Error::Integrity(format!(
            "parity violation in the genus formula: 2 - 2g = {}",
            two_minus_two_g
        )));
    }
    let genus = (2 - two_minus_two_g) / 2;
    let irreducibility = if num_integer::gcd(deg_a, deg_b) == 1 {
        Irreducibility::Proven
    } else {
        Irreducibility::Unknown
    };
    if genus < 0 && irreducibility == Irreducibility::Proven {
        return Err(Error::Integrity(format!(
            "negative genus {} for coprime degrees ({}, {})",
            genus, deg_a, deg_b
        )));
    }
    Ok(GenusReport {
        genus,
        r,
        gcd_sum,
        irreducibility,
        degrees: (deg_a, deg_b),
    })
}

fn pair_gcd_sum(a: &[(u32, u32)], b: &[(u32, u32)]) -> u64 {
    let mut total = 0u64;
    for &(m1, c1) in a {
        for &(m2, c2) in b {
            total += num_integer::gcd(m1, m2) as u64 * c1 as u64 * c2 as u64;
        }
    }
    total
}

/// Genus of the curve A(x) - B(y) = 0 from the functions themselves.
pub fn fried_genus_of(a: &RationalFunction, b: &RationalFunction) -> Result<GenusReport> {
    let pa = ramification_portrait(a)?;
    let pb = ramification_portrait(b)?;
    fried_genus(&pa, &pb)
}

/// `Proven` exactly when the degrees are coprime.
pub fn coprime_irreducibility(a: &RationalFunction, b: &RationalFunction) -> Result<Irreducibility> {
    if a.is_constant() || b.is_constant() {
        return Err(Error::ConstantFunction);
    }
    Ok(if num_integer::gcd(a.degree(), b.degree()) == 1 {
        Irreducibility::Proven
    } else {
        Irreducibility::Unknown
    })
}

/// The lower bound `(m - 84n + 168) / 168`, exact. Meaningful for the genus
/// of an irreducible A(x) - B(y) = 0 only when chi of the second associated
/// orbifold of A is negative.
pub fn genus_lower_bound(n: u32, m: u32) -> BigRational {
    BigRational::new(
        BigInt::from(m as i64 - 84 * n as i64 + 168),
        BigInt::from(168),
    )
}

/// The smallest integer strictly above the bound, clamped at zero: a valid
/// genus must reach it.
pub fn implied_min_genus(bound: &BigRational) -> i64 {
    let floor = bound.floor().to_integer();
    let next = floor + 1;
    let next: i64 = i64::try_from(&next).unwrap_or(i64::MAX);
    next.max(0)
}

/// Verdict of the hyperbolic lower-bound theorem on a concrete pair.
#[derive(Clone, PartialEq, Debug)]
pub enum BoundVerdict {
    /// Degrees not coprime, or chi of the second associated orbifold of A is
    /// nonnegative.
    NotApplicable { reason: String },
    Pass(BoundDetails),
    Fail(BoundDetails),
}

#[derive(Clone, PartialEq, Debug)]
pub struct BoundDetails {
    pub chi2: BigRational,
    pub genus: i64,
    pub bound: BigRational,
    /// chi <= -1/42 must hold for every hyperbolic signature.
    pub chi_at_most_minus_one_42nd: bool,
}

/// Checks, for a coprime pair with hyperbolic A, that the computed genus
/// exceeds `(deg B - 84 deg A + 168)/168` and that chi(O2A) <= -1/42.
pub fn check_genus_bound(a: &RationalFunction, b: &RationalFunction) -> Result<BoundVerdict> {
    if coprime_irreducibility(a, b)? == Irreducibility::Unknown {
        return Ok(BoundVerdict::NotApplicable {
            reason: format!(
                "degrees ({}, {}) are not coprime",
                a.degree(),
                b.degree()
            ),
        });
    }
    let (_, o2) = crate::orbifold::orbifolds_of_function(a)?;
    let chi2 = o2.euler_char();
    if chi2 >= BigRational::from_integer(BigInt::from(0)) {
        return Ok(BoundVerdict::NotApplicable {
            reason: format!("chi(O2) = {} is nonnegative", chi2),
        });
    }
    let report = fried_genus_of(a, b)?;
    let bound = genus_lower_bound(a.degree(), b.degree());
    let chi_small_enough = chi2 <= BigRational::new(BigInt::from(-1), BigInt::from(42));
    let details = BoundDetails {
        chi2,
        genus: report.genus,
        bound: bound.clone(),
        chi_at_most_minus_one_42nd: chi_small_enough,
    };
    let genus_ok = BigRational::from_integer(BigInt::from(report.genus)) > bound;
    if genus_ok && chi_small_enough {
        Ok(BoundVerdict::Pass(details))
    } else {
        Ok(BoundVerdict::Fail(details))
    }
}

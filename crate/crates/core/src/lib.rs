//! Exact-arithmetic toolkit for rational maps on the projective line:
//! ramification portraits, associated orbifolds and their Euler
//! characteristics, the genus of separated-variable curves A(x) - B(y) = 0,
//! and the decision procedure for functions admitting infinite series of
//! irreducible genus-zero curves.
//!
//! All computation is exact over Q(i) and simple algebraic extensions of it;
//! no floating point is used anywhere.

pub mod error;
pub mod ext;
pub mod factor;
pub mod field;
pub mod gaussian;
mod gaussint;
pub mod poly;

pub use error::{Error, Result};
pub use ext::{ExtElement, ExtField};
pub use field::Field;
pub use gaussian::GaussianRational;
pub use poly::{chebyshev, Polynomial, SquarefreeDecomposition};
pub mod portrait;
pub mod ratfun;

pub use portrait::{
    critical_values, ramification_portrait, ramification_portrait_with, ClassDescriptor,
    CriticalValueClass, RamificationPortrait,
};
pub use ratfun::{ProjPoint, RationalFunction, DEFAULT_ITERATE_BUDGET};
pub mod orbifold;

pub use orbifold::{
    check_covering_rh, classify, enumerate_signatures, is_covering_map, is_holomorphic_map,
    is_minimal_holomorphic_map, minimal_pullback, orbifolds_of_function, EuclideanSignature,
    MapCheck, NoCoverReason, OrbifoldClass, OrbifoldPoint, OrbifoldSignature, OrbifoldWitness,
    SphericalGroup,
};
pub mod genus;
pub mod series;

pub use genus::{
    check_genus_bound, coprime_irreducibility, fried_genus, fried_genus_of, genus_lower_bound,
    implied_min_genus, BoundDetails, BoundVerdict, GenusReport, Irreducibility,
};
pub use series::{
    certify_family, generate_series, is_basis_of_series, make_family, parametrization_check,
    verify_equivariance, verify_intertwining, BasisVerdict, BivariateCurve, Family,
    FamilyInstance, SeriesCertificate, SeriesStep,
};
pub mod klein;

pub use klein::{klein_s4_certificate, KleinS4Certificate, NamedCheck, NamedObservation};
pub mod sampling;

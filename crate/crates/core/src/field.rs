//! Coefficient-field abstraction used by the polynomial layer.
//!
//! Elements carry their own field context (relevant for extension fields),
//! so identities are obtained from an existing element via `zero_like` /
//! `one_like` rather than from free functions.

use std::fmt::{Debug, Display};

use crate::error::Result;

/// An element of a field of characteristic zero.
///
/// All operations are pure; `inv` and `div` are fallible so that division by
/// zero surfaces as an explicit error rather than a panic.
pub trait Field: Clone + PartialEq + Debug + Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// The image of the natural number `n` in this field.
    fn from_u32_like(&self, n: u32) -> Self;

    /// Deterministic total order used for reproducible output; not numeric.
    fn canonical_cmp(&self, rhs: &Self) -> std::cmp::Ordering;

    /// Optional fast path for polynomial gcd over this field.
    ///
    /// Coefficient vectors are given lowest degree first, both nonzero.
    /// Returning `None` falls back to the generic monic Euclidean algorithm.
    fn poly_gcd_fast(_f: &[Self], _g: &[Self]) -> Option<Vec<Self>> {
        None
    }

    /// Optional fast path for the polynomial resultant over this field.
    fn poly_resultant_fast(_f: &[Self], _g: &[Self]) -> Option<Self> {
        None
    }
}

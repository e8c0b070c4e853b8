//! Exact coefficient fields: the prime field `F_p` and the rational function
//! field `F_p(s)`.
//!
//! Polynomial code is written against the [`Field`] trait, which follows the
//! "ring store" style: a small descriptor object (`PrimeField`,
//! `RationalFunctionField`) performs arithmetic on plain element values.

mod prime;
mod rational;
mod unipoly;

use std::fmt::Debug;
use std::hash::Hash;

pub use prime::{is_prime, PrimeField, PrimeFieldElement};
pub use rational::{RationalFunction, RationalFunctionField};
pub use unipoly::{unipoly_gcd, UnivariatePolynomial};

use crate::error::Result;

/// A coefficient field of positive characteristic.
pub trait Field: Clone + PartialEq + Eq + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync + 'static;

    fn characteristic(&self) -> u32;

    /// Name of the transcendental parameter, when the field is `F_p(s)`.
    fn parameter(&self) -> Option<&str>;

    /// The parameter itself as a field element (`s` in `F_p(s)`).
    fn parameter_elem(&self) -> Option<Self::Elem>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a^q` for `q` a power of the characteristic.
    fn frobenius(&self, a: &Self::Elem, q: u64) -> Self::Elem;

    /// Formats `a` for use as a polynomial coefficient. Returns the sign
    /// separately so that the printer can fold it into `+`/`-`, and whether
    /// the magnitude is a sum that needs parentheses before a monomial.
    fn format_coeff(&self, a: &Self::Elem) -> CoeffDisplay;
}

/// Printable pieces of a coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffDisplay {
    pub negative: bool,
    pub magnitude: String,
    /// The magnitude is exactly `1`.
    pub unit: bool,
    /// The magnitude is a sum or a fraction and must be parenthesized when
    /// followed by a monomial.
    pub compound: bool,
}

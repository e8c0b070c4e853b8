//! Exact polynomial ideal computations over `F_p` and `F_p(s)`.
//!
//! The crate provides sparse multivariate polynomials, Buchberger's
//! algorithm, ideal operations built on elimination (intersection, colon,
//! saturation), finite-length quotient counting through staircases, and
//! harnesses that replay an explicit family of ideals in the hypersurface
//! `k[s,x,y]/(xy(x-y)(x+y-sy))`.

pub mod coefficients;
pub mod cohomology;
pub mod error;
pub mod groebner;
pub mod idealops;
pub mod io;
pub mod polyring;
pub mod verify;

pub use coefficients::{
    Field, PrimeField, PrimeFieldElement, RationalFunction, RationalFunctionField,
};
pub use cohomology::{Length, QuotientPair, RjjRow};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, SpolyCertificate};
pub use idealops::{Ideal, Saturation};
pub use polyring::{
    CoefficientKind, Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial, RingExt, RingRef,
    RingSpec,
};
pub use verify::{ConstructionParams, ExampleParams, VerificationReport};

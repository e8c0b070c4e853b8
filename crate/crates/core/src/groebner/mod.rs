//! Division, S-polynomials, Buchberger's algorithm, reduced bases and
//! checking of explicit S-polynomial representations.

mod buchberger;
mod certificate;
mod division;
mod spoly;

pub use buchberger::{
    buchberger, buchberger_with, groebner_basis, is_groebner, reduce_basis, BuchbergerOptions,
    BuchbergerStats, PairStrategy,
};
pub use certificate::{
    check_certificate, check_certificate_up_to_sign, format_certificates, parse_certificates,
    SpolyCertificate,
};
pub use division::{divide, normal_form, DivisionResult};
pub use spoly::s_polynomial;

use crate::coefficients::Field;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingRef};

/// A Gröbner basis together with the ring (and so the order) it was computed
/// under. When cofactors are tracked, `cofactors[i][k]` is the coefficient of
/// input generator `k` in `elements[i]`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    pub(crate) ring: RingRef<F>,
    pub(crate) elements: Vec<Polynomial<F>>,
    pub(crate) reduced: bool,
    pub(crate) cofactors: Option<Vec<Vec<Polynomial<F>>>>,
    pub(crate) ninputs: usize,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn cofactors(&self) -> Option<&[Vec<Polynomial<F>>]> {
        self.cofactors.as_deref()
    }

    /// Number of input generators the cofactors refer to.
    pub fn input_count(&self) -> usize {
        self.ninputs
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| p.leading_monomial().expect("nonzero basis element").clone())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        normal_form(f, &self.elements)
    }

    /// The basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elements
            .iter()
            .any(|p| p.is_constant() && !p.is_zero())
    }
}

impl<F: Field> PartialEq for GroebnerBasis<F> {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && crate::polyring::PolyRing::same(&self.ring, &other.ring)
    }
}

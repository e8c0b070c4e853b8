use crate::coefficients::Field;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial, Term};

/// Quotients and remainder of multivariate division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult<F: Field> {
    pub quotients: Vec<Polynomial<F>>,
    pub remainder: Polynomial<F>,
}

/// Fully reduces `f` by `divisors`, always using the first divisor (in list
/// order) whose leading monomial divides the current leading term. Each
/// reduction step `p -= c * m * divisors[i]` is reported to `on_step`.
pub(crate) fn reduce_with<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    mut on_step: impl FnMut(usize, &F::Elem, &Monomial),
) -> Polynomial<F> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let leads: Vec<(&Monomial, F::Elem)> = divisors
        .iter()
        .map(|g| {
            let t = g.leading_term().expect("nonzero divisor");
            (
                &t.mono,
                field.inv(&t.coeff).expect("nonzero leading coefficient"),
            )
        })
        .collect();
    let mut rem: Vec<Term<F>> = Vec::new();
    let mut work = f.clone();
    let mut start = 0usize;
    while start < work.len() {
        let lt = &work.terms()[start];
        let hit = leads.iter().position(|(m, _)| m.divides(&lt.mono));
        match hit {
            Some(i) => {
                let c = field.mul(&lt.coeff, &leads[i].1);
                let m = lt.mono.quotient_unchecked(leads[i].0);
                on_step(i, &c, &m);
                work = work.tail_sub_mul_term(start, &c, &m, &divisors[i]);
                start = 0;
            }
            None => {
                rem.push(lt.clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted_terms(ring, rem)
}

/// Normal form of `f` modulo `divisors` (remainder only).
pub fn normal_form<F: Field>(f: &Polynomial<F>, divisors: &[Polynomial<F>]) -> Polynomial<F> {
    reduce_with(f, divisors, |_, _, _| {})
}

/// Multivariate division of `f` by an ordered list of nonzero divisors.
pub fn divide<F: Field>(
    f: &Polynomial<F>,
    divisors: &[Polynomial<F>],
) -> Result<DivisionResult<F>> {
    for g in divisors {
        if !PolyRing::same(f.ring(), g.ring()) {
            return Err(Error::IncompatibleRing);
        }
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let ring = f.ring().clone();
    let mut q_terms: Vec<Vec<Term<F>>> = vec![Vec::new(); divisors.len()];
    let remainder = reduce_with(f, divisors, |i, c, m| {
        q_terms[i].push(Term {
            coeff: c.clone(),
            mono: m.clone(),
        });
    });
    let quotients = q_terms
        .into_iter()
        .map(|t| Polynomial::from_sorted_terms(ring.clone(), t))
        .collect();
    Ok(DivisionResult {
        quotients,
        remainder,
    })
}

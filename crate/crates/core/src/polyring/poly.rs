use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, PolyRing, RingRef};
use crate::coefficients::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Term<F: Field> {
    pub coeff: F::Elem,
    pub mono: Monomial,
}

impl<F: Field> PartialEq for Term<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeff == other.coeff && self.mono == other.mono
    }
}

impl<F: Field> Eq for Term<F> {}

/// Sparse polynomial: nonzero terms in strictly decreasing monomial order.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && PolyRing::same(&self.ring, &other.ring)
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Hash for Polynomial<F> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for t in &self.terms {
            t.coeff.hash(state);
            t.mono.hash(state);
        }
    }
}

/// `a + sign * c * m * b` as a merge of two sorted term lists.
fn merge_scaled<F: Field>(
    ring: &PolyRing<F>,
    a: &[Term<F>],
    c: &F::Elem,
    m: &Monomial,
    b: &[Term<F>],
) -> Vec<Term<F>> {
    let field = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut next_b: Option<Term<F>> = None;
    loop {
        if next_b.is_none() && j < b.len() {
            next_b = Some(Term {
                coeff: field.mul(c, &b[j].coeff),
                mono: b[j].mono.mul(m),
            });
            j += 1;
        }
        match (a.get(i), next_b.take()) {
            (None, None) => break,
            (Some(_), None) => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            (None, Some(tb)) => {
                out.push(tb);
            }
            (Some(ta), Some(tb)) => match order.cmp(&ta.mono, &tb.mono) {
                Ordering::Greater => {
                    out.push(ta.clone());
                    i += 1;
                    next_b = Some(tb);
                }
                Ordering::Less => out.push(tb),
                Ordering::Equal => {
                    let s = field.add(&ta.coeff, &tb.coeff);
                    if !field.is_zero(&s) {
                        out.push(Term {
                            coeff: s,
                            mono: tb.mono,
                        });
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: RingRef<F>) -> Self {
        Polynomial {
            ring,
            terms: Vec::new(),
        }
    }

    /// `c * m`; zero when `c` is zero.
    pub fn term(ring: RingRef<F>, c: F::Elem, m: Monomial) -> Self {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![Term { coeff: c, mono: m }]
        };
        Polynomial { ring, terms }
    }

    /// Sorts, combines like terms and drops zeros.
    pub fn from_terms(ring: RingRef<F>, mut terms: Vec<Term<F>>) -> Self {
        let order = ring.order().clone();
        let field = ring.field().clone();
        terms.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.coeff) {
                            out.pop();
                        }
                    }
                    out.push(t);
                }
            }
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.coeff) {
                out.pop();
            }
        }
        Polynomial { ring, terms: out }
    }

    /// Wraps terms already in canonical order.
    pub(crate) fn from_sorted_terms(ring: RingRef<F>, terms: Vec<Term<F>>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && !self.is_zero() && self.field().is_one(&self.terms[0].coeff)
    }

    pub fn leading_term(&self) -> Result<&Term<F>> {
        self.terms.first().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Result<&Monomial> {
        Ok(&self.leading_term()?.mono)
    }

    pub fn leading_coeff(&self) -> Result<&F::Elem> {
        Ok(&self.leading_term()?.coeff)
    }

    /// Constant coefficient (zero if absent).
    pub fn constant_coeff(&self) -> F::Elem {
        match self.terms.last() {
            Some(t) if t.mono.is_one() => t.coeff.clone(),
            _ => self.field().zero(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.exponent(var)).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.mono.exponent(var) > 0)
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if PolyRing::same(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let one = self.field().one();
        let m = Monomial::one(self.ring.nvars());
        Ok(Polynomial {
            terms: merge_scaled(&self.ring, &self.terms, &one, &m, &other.terms),
            ring: self.ring.clone(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let minus_one = self.field().neg(&self.field().one());
        let m = Monomial::one(self.ring.nvars());
        Ok(Polynomial {
            terms: merge_scaled(&self.ring, &self.terms, &minus_one, &m, &other.terms),
            ring: self.ring.clone(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ring.clone()));
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return Ok(other.mul_term(&t.coeff, &t.mono));
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return Ok(self.mul_term(&t.coeff, &t.mono));
        }
        let field = self.field();
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                prods.push(Term {
                    coeff: field.mul(&a.coeff, &b.coeff),
                    mono: a.mono.checked_mul(&b.mono)?,
                });
            }
        }
        Ok(Polynomial::from_terms(self.ring.clone(), prods))
    }

    /// `self - c * m * g`.
    pub fn sub_mul_term(&self, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        let nc = self.field().neg(c);
        Polynomial {
            terms: merge_scaled(&self.ring, &self.terms, &nc, m, &g.terms),
            ring: self.ring.clone(),
        }
    }

    /// `self[start..] - c * m * g`, dropping the first `start` terms.
    pub(crate) fn tail_sub_mul_term(
        &self,
        start: usize,
        c: &F::Elem,
        m: &Monomial,
        g: &Self,
    ) -> Self {
        let nc = self.field().neg(c);
        Polynomial {
            terms: merge_scaled(&self.ring, &self.terms[start..], &nc, m, &g.terms),
            ring: self.ring.clone(),
        }
    }

    /// `self + c * m * g`.
    pub fn add_mul_term(&self, c: &F::Elem, m: &Monomial, g: &Self) -> Self {
        Polynomial {
            terms: merge_scaled(&self.ring, &self.terms, c, m, &g.terms),
            ring: self.ring.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.neg(&t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
            ring: self.ring.clone(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(self.ring.clone());
        }
        if field.is_one(c) {
            return self.clone();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(c, &t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
            ring: self.ring.clone(),
        }
    }

    /// `c * m * self`. Monomial orders are multiplicative, so the term order
    /// is preserved.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let field = self.field();
        if field.is_zero(c) {
            return Polynomial::zero(self.ring.clone());
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: field.mul(c, &t.coeff),
                    mono: t.mono.mul(m),
                })
                .collect(),
            ring: self.ring.clone(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        self.mul_term(&self.field().one(), m)
    }

    /// Divides by the leading coefficient; the zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => self.clone(),
            Some(t) => {
                let inv = self
                    .field()
                    .inv(&t.coeff)
                    .expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::term(
            self.ring.clone(),
            self.field().one(),
            Monomial::one(self.ring.nvars()),
        );
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^q` computed termwise; valid when `q` is a power of the
    /// characteristic (the Frobenius map is additive).
    pub fn frobenius(&self, q: u64) -> Result<Self> {
        let p = self.ring.characteristic() as u64;
        if !is_power_of(q, p) {
            return Err(Error::InvalidBracketPower { q, p: p as u32 });
        }
        let k = u32::try_from(q).map_err(|_| Error::ExponentOverflow)?;
        let field = self.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: field.frobenius(&t.coeff, q),
                mono: t.mono.pow(k)?,
            });
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// Homomorphic evaluation: each bound variable is replaced by the given
    /// polynomial (which must live in the same ring).
    pub fn substitute(&self, bindings: &[(&str, Polynomial<F>)]) -> Result<Self> {
        let n = self.ring.nvars();
        let mut images: Vec<Option<&Polynomial<F>>> = vec![None; n];
        for (name, value) in bindings {
            self.check_ring(value)?;
            images[self.ring.var_index(name)?] = Some(value);
        }
        let mut acc = Polynomial::zero(self.ring.clone());
        for t in &self.terms {
            let mut rest = t.mono.exponents().to_vec();
            let mut value = Polynomial::term(self.ring.clone(), t.coeff.clone(), Monomial::one(n));
            for (i, image) in images.iter().enumerate() {
                if let Some(img) = image {
                    if rest[i] > 0 {
                        value = &value * &img.pow(rest[i]);
                        rest[i] = 0;
                    }
                }
            }
            let m = Monomial::from_exponents(&rest)?;
            acc = &acc + &value.mul_monomial(&m);
        }
        Ok(acc)
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `mapping[i]`. Returns `None` if a dropped variable occurs.
    pub fn transfer(&self, target: &RingRef<F>, mapping: &[Option<usize>]) -> Option<Self> {
        debug_assert_eq!(mapping.len(), self.ring.nvars());
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term {
                coeff: t.coeff.clone(),
                mono: t.mono.remap(n, mapping)?,
            });
        }
        Some(Polynomial::from_terms(target.clone(), terms))
    }

    /// Exact quotient `self / divisor` in the polynomial ring.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_ring(divisor)?;
        let lt = divisor.leading_term()?;
        let lc_inv = self.field().inv(&lt.coeff)?;
        let mut rest = self.clone();
        let mut quot = Vec::new();
        while let Some(t) = rest.terms.first() {
            if !lt.mono.divides(&t.mono) {
                return Err(Error::NotDivisible);
            }
            let c = self.field().mul(&t.coeff, &lc_inv);
            let m = t.mono.quotient_unchecked(&lt.mono);
            rest = rest.sub_mul_term(&c, &m, divisor);
            quot.push(Term { coeff: c, mono: m });
        }
        Ok(Polynomial::from_sorted_terms(self.ring.clone(), quot))
    }
}

pub fn is_power_of(q: u64, p: u64) -> bool {
    if q == 0 || p < 2 {
        return false;
    }
    let mut v = q;
    while v.is_multiple_of(p) {
        v /= p;
    }
    v == 1
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.variables();
        let visit = self.ring.order().priority();
        for (k, t) in self.terms.iter().enumerate() {
            let d = self.field().format_coeff(&t.coeff);
            if k == 0 {
                if d.negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if d.negative { " - " } else { " + " })?;
            }
            let coeff = if d.compound {
                format!("({})", d.magnitude)
            } else {
                d.magnitude
            };
            if t.mono.is_one() {
                f.write_str(&coeff)?;
            } else {
                if !d.unit {
                    write!(f, "{coeff}*")?;
                }
                f.write_str(&t.mono.format(names, visit))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms panic on mixed rings; use `try_*` when that is possible.
impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("polynomials from different rings")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{OrderKind, RingExt};

    fn ring() -> RingRef<crate::coefficients::PrimeField> {
        PolyRing::prime(3, &["s", "x", "y"], OrderKind::Lex).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let (x, y) = (r.var("x").unwrap(), r.var("y").unwrap());
        assert_eq!(&(&x + &y) * &(&x - &y), r.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn freshmans_dream_in_char_3() {
        let r = ring();
        let p = r.parse("x + y").unwrap();
        assert_eq!(p.pow(3), r.parse("x^3 + y^3").unwrap());
        assert_eq!(p.frobenius(3).unwrap(), p.pow(3));
        assert!(p.frobenius(6).is_err());
    }

    #[test]
    fn leading_terms_under_lex() {
        let r = ring();
        let g = r.parse("x*y*(x - y)*(x + y - s*y)").unwrap();
        assert_eq!(g.leading_monomial().unwrap().exponents(), &[1, 2, 2]);
        assert!(g.field().format_coeff(g.leading_coeff().unwrap()).negative);
        assert_eq!(
            r.zero().leading_term().map(|_| ()),
            Err(Error::ZeroPolynomial)
        );
        let x_plus_y = r.parse("x + y").unwrap();
        assert_eq!(
            x_plus_y.leading_monomial().unwrap(),
            r.var("x").unwrap().leading_monomial().unwrap()
        );
    }

    #[test]
    fn mixed_rings_rejected() {
        let a = ring().var("x").unwrap();
        let b = PolyRing::prime(5, &["s", "x", "y"], OrderKind::Lex)
            .unwrap()
            .var("x")
            .unwrap();
        assert_eq!(a.try_add(&b).map(|_| ()), Err(Error::IncompatibleRing));
        assert_eq!(a.try_mul(&b).map(|_| ()), Err(Error::IncompatibleRing));
    }

    #[test]
    fn substitution() {
        let r = ring();
        let p = r.parse("x^2 - y^2").unwrap();
        let v = p.substitute(&[("x", r.one()), ("y", r.zero())]).unwrap();
        assert_eq!(v, r.one());
        // g at s = 1 is x^2*y*(x - y)
        let g = r.parse("x^3*y - s*x^2*y^2 + s*x*y^3 - x*y^3").unwrap();
        let g1 = g.substitute(&[("s", r.one())]).unwrap();
        assert_eq!(g1, r.parse("x^2*y*(x - y)").unwrap());
        let d = r.parse("x - y").unwrap();
        assert!(d
            .substitute(&[("x", r.var("y").unwrap())])
            .unwrap()
            .is_zero());
        assert!(d.substitute(&[("z", r.one())]).is_err());
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let a = r.parse("x^3 - x*y^2").unwrap();
        assert_eq!(
            a.div_exact(&r.parse("x - y").unwrap()).unwrap(),
            r.parse("x^2 + x*y").unwrap()
        );
        assert_eq!(
            a.div_exact(&r.parse("s").unwrap()),
            Err(Error::NotDivisible)
        );
    }

    #[test]
    fn printing() {
        let r = ring();
        let g = r.parse("x*y*(x - y)*(x + y - s*y)").unwrap();
        assert_eq!(g.to_string(), "-s*x^2*y^2 + s*x*y^3 + x^3*y - x*y^3");
        assert_eq!(r.zero().to_string(), "0");
        assert_eq!(r.from_int(2).to_string(), "-1");
    }
}

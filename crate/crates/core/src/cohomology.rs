//! Finite-length quotients: zeroth local cohomology through saturation,
//! vector-space length through staircase counting, finite-q relative
//! multiplicity estimates and associated-prime witnesses.

use std::collections::HashSet;
use std::fmt;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::coefficients::{Field, RationalFunctionField};
use crate::error::{Error, Result};
use crate::idealops::Ideal;
use crate::polyring::{is_power_of, Monomial, OrderKind, PolyRing, Polynomial, RingExt, RingRef};

/// The module `U/J` for ideals `J ⊆ U` of the same ring.
#[derive(Clone, Debug)]
pub struct QuotientPair<F: Field> {
    u: Ideal<F>,
    j: Ideal<F>,
}

impl<F: Field> QuotientPair<F> {
    /// Fails with a precondition error unless every generator of `j` lies in `u`.
    pub fn new(u: Ideal<F>, j: Ideal<F>) -> Result<Self> {
        if !u.contains_ideal(&j)? {
            return Err(Error::Precondition("J is not contained in U".into()));
        }
        Ok(QuotientPair { u, j })
    }

    pub fn numerator(&self) -> &Ideal<F> {
        &self.u
    }

    pub fn denominator(&self) -> &Ideal<F> {
        &self.j
    }
}

/// Length of a quotient as a vector space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("infinite"),
        }
    }
}

/// Leading-term ideals of a pair and the number of standard monomials of
/// `J` lying in `lt(U)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaircaseDiff {
    pub lt_j: Vec<Monomial>,
    pub lt_u: Vec<Monomial>,
    pub count: Length,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|k| k.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Minimal generators of the monomial colon `(gens : u)`.
fn monomial_colon(gens: &[Monomial], u: &Monomial) -> Vec<Monomial> {
    minimalize(
        gens.iter()
            .map(|v| v.quotient(&v.gcd(u)).expect("gcd divides"))
            .collect(),
    )
}

/// Counts monomials of `lt_u` outside `lt_j`. For every minimal generator `u`
/// of `lt_u`, the monomials `u w` outside `lt_j` are those `w` not in
/// `(lt_j : u)`; they form a finite set exactly when that colon contains a
/// pure power of every variable.
pub fn staircase_difference(lt_u: &[Monomial], lt_j: &[Monomial], nvars: usize) -> StaircaseDiff {
    let lt_u = minimalize(lt_u.to_vec());
    let lt_j = minimalize(lt_j.to_vec());
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut finite = true;
    for u in &lt_u {
        let colon = monomial_colon(&lt_j, u);
        if colon.iter().any(|c| c.is_one()) {
            continue;
        }
        let mut bounds = vec![u32::MAX; nvars];
        for c in &colon {
            if let Some(i) = c.pure_power_of() {
                bounds[i] = bounds[i].min(c.degree());
            }
        }
        if bounds.contains(&u32::MAX) {
            finite = false;
            break;
        }
        let mut exps = vec![0u32; nvars];
        enumerate_box(0, &mut exps, &bounds, &colon, &mut |w| {
            seen.insert(u.mul(w));
        });
    }
    let count = if finite {
        Length::Finite(seen.len() as u64)
    } else {
        Length::Infinite
    };
    StaircaseDiff { lt_j, lt_u, count }
}

/// Depth-first walk over exponent vectors below `bounds`, pruning as soon as
/// a partial monomial is divisible by some element of `avoid`.
fn enumerate_box(
    var: usize,
    exps: &mut Vec<u32>,
    bounds: &[u32],
    avoid: &[Monomial],
    visit: &mut dyn FnMut(&Monomial),
) {
    let m = Monomial::from_exponents(exps).expect("bounded exponents");
    if avoid.iter().any(|a| a.divides(&m)) {
        return;
    }
    if var == exps.len() {
        visit(&m);
        return;
    }
    for e in 0..bounds[var] {
        exps[var] = e;
        let m = Monomial::from_exponents(exps).expect("bounded exponents");
        if avoid.iter().any(|a| a.divides(&m)) {
            break;
        }
        enumerate_box(var + 1, exps, bounds, avoid, visit);
    }
    exps[var] = 0;
}

/// Staircase data for `U/J` from the reduced Gröbner bases of both ideals.
pub fn staircase(pair: &QuotientPair<impl Field>) -> StaircaseDiff {
    let lt_u = pair.u.groebner_basis().leading_monomials();
    let lt_j = pair.j.groebner_basis().leading_monomials();
    staircase_difference(&lt_u, &lt_j, pair.u.ring().nvars())
}

/// `dim_k U/J`, or `Infinite`.
pub fn length_quotient<F: Field>(pair: &QuotientPair<F>) -> Length {
    staircase(pair).count
}

fn check_max_ideal<F: Field>(ring: &RingRef<F>, max: &Ideal<F>) -> Result<()> {
    if !PolyRing::same(ring, max.ring()) {
        return Err(Error::IncompatibleRing);
    }
    let mut covered = vec![false; ring.nvars()];
    for g in max.generators() {
        let lm = g.leading_monomial()?;
        match (g.is_monomial() && lm.degree() == 1)
            .then(|| lm.pure_power_of())
            .flatten()
        {
            Some(i) => covered[i] = true,
            None => {
                return Err(Error::Precondition(format!(
                    "maximal ideal generator {g} is not a variable"
                )))
            }
        }
    }
    if covered.contains(&false) {
        return Err(Error::Precondition(
            "maximal ideal must contain every variable".into(),
        ));
    }
    Ok(())
}

/// Numerator `U' = (J : m^∞) ∩ U` of `H⁰_m(U/J) = U'/J`. `max` must be
/// generated by all the variables of the ring.
pub fn h0_submodule<F: Field>(pair: &QuotientPair<F>, max: &Ideal<F>) -> Result<Ideal<F>> {
    check_max_ideal(pair.u.ring(), max)?;
    let sat = pair.j.saturate_ideal(max)?.ideal;
    sat.intersect(&pair.u)
}

/// Length of `H⁰_m(U/J)`.
pub fn h0_length<F: Field>(u: &Ideal<F>, j: &Ideal<F>, max: &Ideal<F>) -> Result<u64> {
    let pair = QuotientPair::new(u.clone(), j.clone())?;
    let sub = h0_submodule(&pair, max)?;
    match length_quotient(&QuotientPair {
        u: sub,
        j: j.clone(),
    }) {
        Length::Finite(n) => Ok(n),
        Length::Infinite => Err(Error::Internal(
            "torsion submodule has infinite length".into(),
        )),
    }
}

/// One row of a relative multiplicity table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RjjRow {
    pub q: u64,
    pub length: u64,
    pub normalized: Ratio<u64>,
}

impl fmt::Display for RjjRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.q, self.length, self.normalized)
    }
}

/// `len H⁰_m(I^[q]/J^[q]) / q^d` for each `q`. When `relation` is given the
/// computation takes place in the quotient by it, represented by adjoining
/// the relation to both bracket powers. Rows come back in the order of `qs`.
pub fn rjj_estimate<F: Field>(
    j: &Ideal<F>,
    i: &Ideal<F>,
    max: &Ideal<F>,
    d: u32,
    qs: &[u64],
    relation: Option<&Polynomial<F>>,
) -> Result<Vec<RjjRow>> {
    let p = i.ring().characteristic() as u64;
    if d == 0 {
        return Err(Error::InvalidParams("d must be at least 1".into()));
    }
    for &q in qs {
        if q < p || !is_power_of(q, p) {
            return Err(Error::InvalidBracketPower { q, p: p as u32 });
        }
    }
    let extra: Vec<Polynomial<F>> = relation.into_iter().cloned().collect();
    qs.par_iter()
        .map(|&q| {
            let iq = i
                .frobenius_power(q)?
                .sum(&Ideal::new(i.ring(), extra.clone())?)?;
            let jq = j
                .frobenius_power(q)?
                .sum(&Ideal::new(j.ring(), extra.clone())?)?;
            let length = h0_length(&iq, &jq, max)?;
            let scale = q
                .checked_pow(d)
                .ok_or_else(|| Error::InvalidParams(format!("q^d overflows for q={q}, d={d}")))?;
            Ok(RjjRow {
                q,
                length,
                normalized: Ratio::new(length, scale),
            })
        })
        .collect()
}

/// The colon `(J : z)` and whether it equals `candidate`.
#[derive(Clone, Debug)]
pub struct AssWitness<F: Field> {
    pub colon: Ideal<F>,
    pub matches: bool,
}

pub fn ass_witness<F: Field>(
    j: &Ideal<F>,
    z: &Polynomial<F>,
    candidate: &Ideal<F>,
) -> Result<AssWitness<F>> {
    let colon = j.colon_element(z)?;
    let matches = colon.ideal_equal(candidate)?;
    Ok(AssWitness { colon, matches })
}

/// `F_p(s)[x, y]` under lex with `x > y`.
pub fn generic_fibre_ring(p: u64) -> Result<RingRef<RationalFunctionField>> {
    PolyRing::rational(p, "s", &["x", "y"], OrderKind::Lex)
}

fn check_odd_power(p: u64, q: u64) -> Result<()> {
    if p == 2 || !crate::coefficients::is_prime(p) {
        return Err(Error::InvalidParams(format!("{p} is not an odd prime")));
    }
    if q < p || !is_power_of(q, p) {
        return Err(Error::InvalidBracketPower { q, p: p as u32 });
    }
    Ok(())
}

/// The ideal `c = (x^{pq}, y^{pq}, xy(x - y))` of `F_p(s)[x, y]`.
pub fn minprime_ideal(p: u64, q: u64) -> Result<Ideal<RationalFunctionField>> {
    check_odd_power(p, q)?;
    let ring = generic_fibre_ring(p)?;
    let n = p * q;
    Ideal::parse(
        &ring,
        &[&format!("x^{n}"), &format!("y^{n}"), "x^2*y - x*y^2"],
    )
}

/// The monomial `x^q y^{(p-1)q}` of `F_p(s)[x, y]`.
pub fn minprime_monomial(p: u64, q: u64) -> Result<Polynomial<RationalFunctionField>> {
    check_odd_power(p, q)?;
    generic_fibre_ring(p)?.parse(&format!("x^{q}*y^{}", (p - 1) * q))
}

/// True when `x^q y^{(p-1)q}` is not in `c`, witnessing that `(x, y)` is an
/// associated prime of `I^[q]/J^[q]`.
pub fn minprime_witness(p: u64, q: u64) -> Result<bool> {
    let c = minprime_ideal(p, q)?;
    Ok(!c.membership(&minprime_monomial(p, q)?)?)
}

/// Non-membership of `x^q y^{(p-1)q}` in `(x^{pq}, y^{pq}, g)` over
/// `F_p(s)[x, y]`, with `g = xy(x - y)(x + y - sy)`.
pub fn minprime_cross_check(p: u64, q: u64) -> Result<bool> {
    check_odd_power(p, q)?;
    let ring = generic_fibre_ring(p)?;
    let n = p * q;
    let full = Ideal::parse(
        &ring,
        &[
            &format!("x^{n}"),
            &format!("y^{n}"),
            "x^3*y - s*x^2*y^2 - x*y^3 + s*x*y^3",
        ],
    )?;
    Ok(!full.membership(&minprime_monomial(p, q)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::PrimeField;

    fn ring() -> RingRef<PrimeField> {
        PolyRing::prime(5, &["s", "x", "y"], OrderKind::Lex).unwrap()
    }

    fn pair(r: &RingRef<PrimeField>, u: &[&str], j: &[&str]) -> QuotientPair<PrimeField> {
        QuotientPair::new(Ideal::parse(r, u).unwrap(), Ideal::parse(r, j).unwrap()).unwrap()
    }

    #[test]
    fn small_staircases() {
        let r = ring();
        assert_eq!(
            length_quotient(&pair(&r, &["x", "y", "s"], &["x^2", "y^2", "s"])),
            Length::Finite(3)
        );
        assert_eq!(
            length_quotient(&pair(&r, &["x", "y"], &["x", "y"])),
            Length::Finite(0)
        );
        assert_eq!(
            length_quotient(&pair(&r, &["1"], &["x", "y"])),
            Length::Infinite
        );
        assert_eq!(
            length_quotient(&pair(&r, &["1"], &["x", "y", "s"])),
            Length::Finite(1)
        );
        assert_eq!(
            length_quotient(&pair(&r, &["1"], &["x^2", "y^3", "s"])),
            Length::Finite(6)
        );
    }

    #[test]
    fn containment_is_checked() {
        let r = ring();
        let err = QuotientPair::new(
            Ideal::parse(&r, &["x"]).unwrap(),
            Ideal::parse(&r, &["y"]).unwrap(),
        );
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn torsion_of_small_modules() {
        let r = ring();
        let m = Ideal::variables(&r, &["s", "x", "y"]).unwrap();
        // (x^2, xy, s) = (x, s) ∩ (x^2, y, s): the torsion is spanned by x
        let j = Ideal::parse(&r, &["x^2", "x*y", "s"]).unwrap();
        let embedded_off_m = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let u = Ideal::unit(&r);
        assert_eq!(h0_length(&u, &j, &m).unwrap(), 1);
        assert_eq!(h0_length(&j, &j, &m).unwrap(), 0);
        assert_eq!(h0_length(&u, &embedded_off_m, &m).unwrap(), 0);
        let bad = Ideal::variables(&r, &["x", "y"]).unwrap();
        assert!(matches!(
            h0_length(&u, &j, &bad),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn ass_witness_small() {
        let r = ring();
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let w = ass_witness(&x, &r.var("y").unwrap(), &x).unwrap();
        assert!(w.matches);
        let w = ass_witness(&x, &r.parse("x*y").unwrap(), &x).unwrap();
        assert!(w.colon.is_unit() && !w.matches);
    }

    #[test]
    fn minprime_sanity() {
        let c = minprime_ideal(3, 3).unwrap();
        let ring = c.ring().clone();
        assert!(c.membership(&ring.parse("x^9").unwrap()).unwrap());
        assert!(c.membership(&ring.parse("x^2*y - x*y^2").unwrap()).unwrap());
        assert!(minprime_witness(3, 3).unwrap());
        assert!(minprime_cross_check(3, 3).unwrap());
        assert!(minprime_witness(2, 2).is_err());
        assert!(minprime_witness(3, 1).is_err());
    }

    #[test]
    fn rjj_trivial_when_equal() {
        let r = ring();
        let i = Ideal::parse(&r, &["x", "y"]).unwrap();
        let m = Ideal::variables(&r, &["s", "x", "y"]).unwrap();
        let rows = rjj_estimate(&i, &i, &m, 2, &[5, 25], None).unwrap();
        assert!(rows
            .iter()
            .all(|row| row.length == 0 && row.normalized == Ratio::from_integer(0)));
        assert!(rjj_estimate(&i, &i, &m, 2, &[10], None).is_err());
    }
}

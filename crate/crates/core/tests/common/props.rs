//! Property bodies shared by the per-module suites and the acceptance run.

use frobgb::coefficients::UnivariatePolynomial;
use frobgb::cohomology::length_quotient;
use frobgb::groebner::{
    buchberger_with, divide, groebner_basis, is_groebner, reduce_basis, s_polynomial,
    BuchbergerOptions, PairStrategy,
};
use frobgb::{
    Field, Ideal, Length, MonomialOrder, OrderKind, Polynomial, PrimeField, QuotientPair,
    RationalFunction, RationalFunctionField, RingExt, RingRef,
};
use proptest::prelude::*;
use proptest::test_runner::{TestCaseError, TestRunner};

use super::{build, build_all, config, quotient_dimension, raw_ideal, raw_terms, ring};

pub type Terms = Vec<(i64, Vec<u32>)>;
pub type Gens = Vec<Terms>;
pub type Outcome = Result<(), TestCaseError>;

/// Runs `test` on `cases` fixed-seed inputs; the error names the minimal
/// failing input.
pub fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Outcome,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    TestRunner::new(config(cases))
        .run(&strategy, test)
        .map_err(|e| e.to_string())
}

pub fn kind() -> impl Strategy<Value = OrderKind> {
    prop::sample::select(vec![OrderKind::Lex, OrderKind::Grevlex])
}

fn sum_of_products(
    q: &[Polynomial<PrimeField>],
    g: &[Polynomial<PrimeField>],
    start: Polynomial<PrimeField>,
) -> Polynomial<PrimeField> {
    q.iter().zip(g).fold(start, |acc, (a, b)| &acc + &(a * b))
}

fn combine(
    r: &RingRef<PrimeField>,
    mults: &[Terms],
    gens: &[Polynomial<PrimeField>],
) -> Polynomial<PrimeField> {
    gens.iter()
        .zip(mults)
        .fold(r.zero(), |acc, (g, m)| &acc + &(&build(r, m) * g))
}

fn restrict(t: Terms, n: usize) -> Terms {
    t.into_iter().map(|(c, e)| (c, e[..n].to_vec())).collect()
}

// fields

pub const RF_P: u64 = 5;

fn axioms<F: Field>(k: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Outcome {
    prop_assert_eq!(k.add(a, b), k.add(b, a));
    prop_assert_eq!(k.mul(a, b), k.mul(b, a));
    prop_assert_eq!(k.add(&k.add(a, b), c), k.add(a, &k.add(b, c)));
    prop_assert_eq!(k.mul(&k.mul(a, b), c), k.mul(a, &k.mul(b, c)));
    prop_assert_eq!(k.mul(a, &k.add(b, c)), k.add(&k.mul(a, b), &k.mul(a, c)));
    prop_assert_eq!(k.add(a, &k.zero()), a.clone());
    prop_assert_eq!(k.mul(a, &k.one()), a.clone());
    prop_assert!(k.is_zero(&k.add(a, &k.neg(a))));
    prop_assert_eq!(k.sub(a, b), k.add(a, &k.neg(b)));
    if !k.is_zero(a) {
        prop_assert!(k.is_one(&k.mul(a, &k.inv(a).unwrap())));
    } else {
        prop_assert!(k.inv(a).is_err());
    }
    Ok(())
}

pub fn prime_field_input() -> impl Strategy<Value = (u64, i64, i64, i64)> {
    (
        prop::sample::select(vec![2u64, 3, 5, 7, 11, 2_147_483_647]),
        any::<i64>(),
        any::<i64>(),
        any::<i64>(),
    )
}

pub fn prime_field_axioms((p, a, b, c): (u64, i64, i64, i64)) -> Outcome {
    let k = PrimeField::new(p).unwrap();
    axioms(&k, &k.from_i64(a), &k.from_i64(b), &k.from_i64(c))
}

pub fn unipoly() -> impl Strategy<Value = UnivariatePolynomial> {
    prop::collection::vec(-4i64..5, 0..5)
        .prop_map(|c| UnivariatePolynomial::from_coeffs(RF_P as u32, &c))
}

pub fn nonzero_unipoly() -> impl Strategy<Value = UnivariatePolynomial> {
    unipoly().prop_filter("nonzero", |u| !u.is_zero())
}

pub fn rational() -> impl Strategy<Value = RationalFunction> {
    (unipoly(), nonzero_unipoly()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

pub fn rational_field_input(
) -> impl Strategy<Value = (RationalFunction, RationalFunction, RationalFunction)> {
    (rational(), rational(), rational())
}

pub fn rational_field_axioms(
    (a, b, c): (RationalFunction, RationalFunction, RationalFunction),
) -> Outcome {
    let k = RationalFunctionField::new(RF_P, "s").unwrap();
    axioms(&k, &a, &b, &c)
}

// division and Buchberger

pub fn division_input() -> impl Strategy<Value = (Terms, Gens, OrderKind)> {
    (raw_terms(3, 5, 5), raw_ideal(3, 3, 3, 3), kind())
}

/// `f = sum q_i g_i + r`, no term of `r` divisible by any `lm(g_i)`, and
/// `lm(f) >= lm(q_i g_i)`.
pub fn division_contract((f, gens, k): (Terms, Gens, OrderKind)) -> Outcome {
    let r = ring(5, 3, k);
    let f = build(&r, &f);
    let g = build_all(&r, &gens);
    prop_assume!(!g.is_empty());
    let d = divide(&f, &g).unwrap();
    prop_assert_eq!(
        sum_of_products(&d.quotients, &g, d.remainder.clone()),
        f.clone()
    );
    for t in d.remainder.terms() {
        prop_assert!(g
            .iter()
            .all(|gi| !gi.leading_monomial().unwrap().divides(&t.mono)));
    }
    if !f.is_zero() {
        let lf = f.leading_monomial().unwrap();
        for (q, gi) in d.quotients.iter().zip(&g) {
            if !q.is_zero() {
                prop_assert!(r
                    .order()
                    .cmp(lf, (q * gi).leading_monomial().unwrap())
                    .is_ge());
            }
        }
    }
    Ok(())
}

pub fn spoly_input() -> impl Strategy<Value = (Terms, Terms, OrderKind)> {
    (raw_terms(3, 4, 4), raw_terms(3, 4, 4), kind())
}

pub fn spoly_cancellation((a, b, k): (Terms, Terms, OrderKind)) -> Outcome {
    let r = ring(5, 3, k);
    let (f, g) = (build(&r, &a), build(&r, &b));
    prop_assume!(!f.is_zero() && !g.is_zero());
    let s = s_polynomial(&f, &g).unwrap();
    if !s.is_zero() {
        let l = f
            .leading_monomial()
            .unwrap()
            .lcm(g.leading_monomial().unwrap());
        prop_assert!(r.order().cmp(s.leading_monomial().unwrap(), &l).is_lt());
    }
    prop_assert_eq!(s_polynomial(&g, &f).unwrap(), s.neg());
    Ok(())
}

pub fn uniqueness_input() -> impl Strategy<Value = (Gens, OrderKind, u64, u64)> {
    (raw_ideal(3, 4, 3, 3), kind(), any::<u64>(), any::<u64>())
}

/// Permuted generators under every pair strategy give one reduced basis.
pub fn reduced_basis_is_unique((gens, k, seed, perm_seed): (Gens, OrderKind, u64, u64)) -> Outcome {
    let r = ring(5, 3, k);
    let g = build_all(&r, &gens);
    prop_assume!(!g.is_empty());
    let reference = groebner_basis(&r, &g).unwrap();
    let mut permuted = g.clone();
    let len = permuted.len();
    permuted.rotate_left((perm_seed as usize) % len);
    if perm_seed % 2 == 1 {
        permuted.reverse();
    }
    for strategy in [
        PairStrategy::Normal,
        PairStrategy::Fifo,
        PairStrategy::Random(seed),
    ] {
        let opts = BuchbergerOptions {
            strategy,
            ..Default::default()
        };
        let (gb, _) = buchberger_with(&r, &permuted, &opts).unwrap();
        prop_assert_eq!(&reduce_basis(&gb), &reference);
    }
    prop_assert!(is_groebner(reference.elements()).unwrap());
    Ok(())
}

// ideals

pub fn membership_input() -> impl Strategy<Value = (Gens, Gens, Option<Terms>)> {
    (
        raw_ideal(3, 3, 3, 3),
        prop::collection::vec(raw_terms(3, 2, 2), 3),
        prop::option::of(raw_terms(3, 3, 2)),
    )
}

/// Membership under lex equals membership under grevlex; combinations of
/// the generators are always members.
pub fn membership_agrees((gens, mults, noise): (Gens, Gens, Option<Terms>)) -> Outcome {
    let lex = ring(5, 3, OrderKind::Lex);
    let grevlex = lex.with_order(MonomialOrder::grevlex(3)).unwrap();
    let i = Ideal::new(&lex, build_all(&lex, &gens)).unwrap();
    prop_assume!(!i.is_zero());
    let mut f = combine(&lex, &mults, i.generators());
    if let Some(n) = &noise {
        f = &f + &build(&lex, n);
    }
    let g = f.transfer(&grevlex, &[Some(0), Some(1), Some(2)]).unwrap();
    let in_lex = i.membership(&f).unwrap();
    prop_assert_eq!(
        in_lex,
        i.with_ring(&grevlex).unwrap().membership(&g).unwrap()
    );
    if noise.is_none() {
        prop_assert!(in_lex);
    }
    Ok(())
}

pub fn small_ideal() -> impl Strategy<Value = (usize, Gens)> {
    prop_oneof![
        raw_ideal(2, 3, 3, 3).prop_map(|g| (2, g)),
        raw_ideal(3, 2, 3, 2).prop_map(|g| (3, g))
    ]
}

pub fn colon_input() -> impl Strategy<Value = ((usize, Gens), Terms)> {
    (small_ideal(), raw_terms(3, 2, 2))
}

/// `u (I:u) ⊆ I`, `I ⊆ (I:u)`, `((I:u):u) = (I:u^2)`, saturation is
/// idempotent.
pub fn colon_laws(((n, gens), u): ((usize, Gens), Terms)) -> Outcome {
    let r = ring(5, n, OrderKind::Lex);
    let i = Ideal::new(&r, build_all(&r, &gens)).unwrap();
    let u = build(&r, &restrict(u, n));
    prop_assume!(!u.is_zero());
    let c = i.colon_element(&u).unwrap();
    for g in c.generators() {
        prop_assert!(i.membership(&(g * &u)).unwrap());
    }
    prop_assert!(c.contains_ideal(&i).unwrap());
    let twice = c.colon_element(&u).unwrap();
    prop_assert!(twice
        .ideal_equal(&i.colon_element(&(&u * &u)).unwrap())
        .unwrap());
    let sat = i.saturate(&u).unwrap();
    let again = sat.ideal.saturate(&u).unwrap();
    prop_assert!(again.ideal.ideal_equal(&sat.ideal).unwrap());
    prop_assert_eq!(again.iterations, 1);
    Ok(())
}

pub fn intersection_input() -> impl Strategy<Value = ((usize, Gens), Gens)> {
    (small_ideal(), raw_ideal(3, 2, 2, 2))
}

/// `I∩J` lies in both, contains `IJ`, and does not depend on the order of
/// the arguments.
pub fn intersection_laws(((n, a), b): ((usize, Gens), Gens)) -> Outcome {
    let r = ring(5, n, OrderKind::Grevlex);
    let i = Ideal::new(&r, build_all(&r, &a)).unwrap();
    let b: Gens = b.into_iter().map(|g| restrict(g, n)).collect();
    let j = Ideal::new(&r, build_all(&r, &b)).unwrap();
    let meet = i.intersect(&j).unwrap();
    prop_assert!(i.contains_ideal(&meet).unwrap());
    prop_assert!(j.contains_ideal(&meet).unwrap());
    prop_assert!(meet.contains_ideal(&i.product(&j).unwrap()).unwrap());
    prop_assert!(j.intersect(&i).unwrap().ideal_equal(&meet).unwrap());
    Ok(())
}

pub fn exps() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..4, 3)
}

pub fn monomial_intersection_input() -> impl Strategy<Value = (Vec<u32>, Vec<u32>, Vec<u32>)> {
    (exps(), exps(), exps())
}

/// `(a) ∩ (b) = (lcm(a, b))` and `(a, b) ∩ (c) = (lcm(a, c), lcm(b, c))` for
/// monomials.
pub fn monomial_intersection_is_lcm((a, b, c): (Vec<u32>, Vec<u32>, Vec<u32>)) -> Outcome {
    let r = ring(5, 3, OrderKind::Lex);
    let mono = |e: &[u32]| r.monomial(e).unwrap();
    let lcm =
        |x: &[u32], y: &[u32]| -> Vec<u32> { x.iter().zip(y).map(|(p, q)| *p.max(q)).collect() };
    let (ma, mb, mc) = (mono(&a), mono(&b), mono(&c));
    let principal = Ideal::principal(&ma)
        .intersect(&Ideal::principal(&mb))
        .unwrap();
    prop_assert!(principal
        .ideal_equal(&Ideal::principal(&mono(&lcm(&a, &b))))
        .unwrap());
    let two = Ideal::new(&r, vec![ma, mb]).unwrap();
    let expected = Ideal::new(&r, vec![mono(&lcm(&a, &c)), mono(&lcm(&b, &c))]).unwrap();
    prop_assert!(two
        .intersect(&Ideal::principal(&mc))
        .unwrap()
        .ideal_equal(&expected)
        .unwrap());
    Ok(())
}

pub fn frobenius_input() -> impl Strategy<Value = (Gens, u64)> {
    (raw_ideal(2, 3, 3, 3), prop::sample::select(vec![3u64, 9]))
}

/// Bracket powers from the generators and from the reduced basis agree.
pub fn frobenius_ignores_generating_set((gens, q): (Gens, u64)) -> Outcome {
    let r = ring(3, 2, OrderKind::Grevlex);
    let i = Ideal::new(&r, build_all(&r, &gens)).unwrap();
    let from_gb = Ideal::new(&r, i.groebner_basis().elements().to_vec()).unwrap();
    prop_assert!(i
        .frobenius_power(q)
        .unwrap()
        .ideal_equal(&from_gb.frobenius_power(q).unwrap())
        .unwrap());
    Ok(())
}

// lengths

pub fn pure_powers(r: &RingRef<PrimeField>, a: &[u32]) -> Vec<Polynomial<PrimeField>> {
    (0..a.len())
        .map(|i| {
            let mut e = vec![0; a.len()];
            e[i] = a[i];
            r.monomial(&e).unwrap()
        })
        .collect()
}

fn nested(nvars: usize) -> impl Strategy<Value = (usize, Vec<u32>, Gens, Gens)> {
    (
        prop::collection::vec(1u32..=4, nvars),
        raw_ideal(nvars, 4, 3, 2),
        raw_ideal(nvars, 4, 3, 2),
    )
        .prop_map(move |(a, j, u)| (nvars, a, j, u))
}

pub fn staircase_input() -> impl Strategy<Value = ((usize, Vec<u32>, Gens, Gens), OrderKind)> {
    (prop_oneof![nested(2), nested(3)], kind())
}

/// For `J = (pure powers) + random` and `U = J + random`, the staircase
/// count equals `dim A/J - dim A/U` from truncated linear algebra.
pub fn staircase_matches_oracle(
    ((n, a, j, u), k): ((usize, Vec<u32>, Gens, Gens), OrderKind),
) -> Outcome {
    let r = ring(5, n, k);
    let mut jg = pure_powers(&r, &a);
    jg.extend(build_all(&r, &j));
    let mut ug = jg.clone();
    ug.extend(build_all(&r, &u));
    let oracle = quotient_dimension(5, n, &a, &jg) - quotient_dimension(5, n, &a, &ug);
    let pair = QuotientPair::new(Ideal::new(&r, ug).unwrap(), Ideal::new(&r, jg).unwrap()).unwrap();
    prop_assert_eq!(length_quotient(&pair), Length::Finite(oracle as u64));
    Ok(())
}

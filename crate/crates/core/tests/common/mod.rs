#![allow(dead_code)]

use frobgb::{Field, Monomial, OrderKind, PolyRing, Polynomial, PrimeField, RingExt, RingRef};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

pub mod props;

/// Fixed-seed configuration so every run sees the same cases.
pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed_f00d),
        failure_persistence: None,
        ..Config::default()
    }
}

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn ring(p: u64, nvars: usize, kind: OrderKind) -> RingRef<PrimeField> {
    PolyRing::prime(p, &VARS[..nvars], kind).unwrap()
}

/// Raw terms `(coefficient, exponents)` with total degree at most `deg`.
pub fn raw_terms(
    nvars: usize,
    deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    let term = (1i64..5, prop::collection::vec(0..=deg, nvars))
        .prop_filter_map("degree bound", move |(c, e)| {
            (e.iter().sum::<u32>() <= deg).then_some((c, e))
        });
    prop::collection::vec(term, 1..=max_terms)
}

pub fn build(ring: &RingRef<PrimeField>, terms: &[(i64, Vec<u32>)]) -> Polynomial<PrimeField> {
    let mut acc = ring.zero();
    for (c, e) in terms {
        acc = &acc + &ring.monomial(e).unwrap().scale(&ring.field().from_i64(*c));
    }
    acc
}

pub fn raw_ideal(
    nvars: usize,
    deg: u32,
    max_terms: usize,
    max_gens: usize,
) -> impl Strategy<Value = Vec<Vec<(i64, Vec<u32>)>>> {
    prop::collection::vec(raw_terms(nvars, deg, max_terms), 1..=max_gens)
}

pub fn build_all(
    ring: &RingRef<PrimeField>,
    gens: &[Vec<(i64, Vec<u32>)>],
) -> Vec<Polynomial<PrimeField>> {
    gens.iter()
        .map(|t| build(ring, t))
        .filter(|p| !p.is_zero())
        .collect()
}

/// `dim_k A/J` for an ideal `J` of `F_p[x_1..x_n]` containing `x_i^{a_i}`
/// for each `i`, by plain linear algebra: every monomial of degree at least
/// `D = sum(a_i - 1) + 1` lies in `J`, so `A/J` is the space of monomials of
/// degree below `D` modulo the truncations of `m * g` for generators `g`
/// and monomials `m` of degree below `D`.
pub fn quotient_dimension(
    p: u64,
    nvars: usize,
    pure_powers: &[u32],
    gens: &[Polynomial<PrimeField>],
) -> usize {
    let d: u32 = pure_powers.iter().map(|a| a - 1).sum::<u32>() + 1;
    let basis = monomials_below(nvars, d);
    let index = |e: &[u32]| basis.iter().position(|b| b.as_slice() == e);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in gens {
        for m in &basis {
            let mut row = vec![0u64; basis.len()];
            let mut nonzero = false;
            for t in g.terms() {
                let e: Vec<u32> = t
                    .mono
                    .exponents()
                    .iter()
                    .zip(m)
                    .map(|(a, b)| a + b)
                    .collect();
                if e.iter().sum::<u32>() >= d {
                    continue;
                }
                let col = index(&e).expect("monomial in basis");
                row[col] = (row[col] + t.coeff.residue() as u64) % p;
                nonzero = true;
            }
            if nonzero {
                rows.push(row);
            }
        }
    }
    basis.len() - rank_mod_p(rows, p)
}

fn monomials_below(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..nvars {
        let mut next = Vec::new();
        for prefix in &out {
            let used: u32 = prefix.iter().sum();
            for e in 0..d - used {
                let mut v: Vec<u32> = prefix.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + p * p - f * pv % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn mono(exps: &[u32]) -> Monomial {
    Monomial::from_exponents(exps).unwrap()
}

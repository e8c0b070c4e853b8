use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::division::{normal_form, reduce_with};
use super::spoly::{s_polynomial, spoly_multipliers};
use super::GroebnerBasis;
use crate::coefficients::Field;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial, RingRef};

/// Order in which critical pairs are processed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairStrategy {
    /// Smallest total degree of the lcm first, ties by the monomial order.
    Normal,
    /// Pairs in creation order.
    Fifo,
    /// Uniformly random pending pair, seeded.
    Random(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    pub strategy: PairStrategy,
    /// Skip pairs whose leading monomials are coprime.
    pub product_criterion: bool,
    /// Gebauer-Möller chain pruning: drop pairs whose lcm is a proper
    /// multiple of another pair's lcm through a common element.
    pub chain_criterion: bool,
    /// Carry cofactors expressing every basis element in the inputs.
    pub track_cofactors: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            strategy: PairStrategy::Normal,
            product_criterion: true,
            chain_criterion: true,
            track_cofactors: false,
        }
    }
}

/// A polynomial with optional cofactors `poly = sum cof[k] * input[k]`.
#[derive(Clone)]
struct Tracked<F: Field> {
    poly: Polynomial<F>,
    cof: Option<Vec<Polynomial<F>>>,
}

impl<F: Field> Tracked<F> {
    fn scale(&mut self, c: &F::Elem) {
        self.poly = self.poly.scale(c);
        if let Some(cof) = &mut self.cof {
            for q in cof.iter_mut() {
                *q = q.scale(c);
            }
        }
    }

    fn make_monic(&mut self) {
        if let Ok(lc) = self.poly.leading_coeff() {
            let inv = self.poly.field().inv(lc).expect("nonzero");
            self.scale(&inv);
        }
    }

    /// Reduces against `basis`; cofactors are updated when tracked.
    fn reduce(&mut self, basis: &[Tracked<F>], polys: &[Polynomial<F>]) {
        match &mut self.cof {
            None => self.poly = normal_form(&self.poly, polys),
            Some(cof) => {
                let poly = reduce_with(&self.poly, polys, |i, c, m| {
                    let other = basis[i].cof.as_ref().expect("tracked basis");
                    for (a, b) in cof.iter_mut().zip(other) {
                        *a = a.sub_mul_term(c, m, b);
                    }
                });
                self.poly = poly;
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    serial: usize,
}

/// Statistics of a Buchberger run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_created: usize,
    pub pairs_reduced: usize,
    pub product_skips: usize,
    pub chain_skips: usize,
    pub zero_reductions: usize,
}

/// Buchberger's algorithm under the ring's monomial order with default
/// options. The result is a (not necessarily reduced) Gröbner basis.
pub fn buchberger<F: Field>(
    ring: &RingRef<F>,
    generators: &[Polynomial<F>],
) -> Result<GroebnerBasis<F>> {
    buchberger_with(ring, generators, &BuchbergerOptions::default()).map(|(gb, _)| gb)
}

pub fn buchberger_with<F: Field>(
    ring: &RingRef<F>,
    generators: &[Polynomial<F>],
    opts: &BuchbergerOptions,
) -> Result<(GroebnerBasis<F>, BuchbergerStats)> {
    for g in generators {
        if !PolyRing::same(ring, g.ring()) {
            return Err(Error::IncompatibleRing);
        }
    }
    let order = ring.order().clone();
    let ninputs = generators.len();
    let mut stats = BuchbergerStats::default();
    let mut st = State {
        basis: Vec::new(),
        polys: Vec::new(),
        lms: Vec::new(),
        pending: Vec::new(),
        serial: 0,
    };
    let mut rng = match opts.strategy {
        PairStrategy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };

    for (k, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let cof = opts.track_cofactors.then(|| {
            (0..ninputs)
                .map(|l| {
                    if l == k {
                        ring_one(ring)
                    } else {
                        Polynomial::zero(ring.clone())
                    }
                })
                .collect()
        });
        let mut t = Tracked {
            poly: g.clone(),
            cof,
        };
        st.reduce(&mut t);
        if !t.poly.is_zero() {
            st.update(t, opts, &mut stats);
        }
    }

    while !st.pending.is_empty() {
        let pending = &st.pending;
        let idx = match opts.strategy {
            PairStrategy::Normal => {
                let mut best = 0;
                for k in 1..pending.len() {
                    let (a, b) = (&pending[k], &pending[best]);
                    let ord = a
                        .lcm
                        .degree()
                        .cmp(&b.lcm.degree())
                        .then_with(|| order.cmp(&a.lcm, &b.lcm))
                        .then_with(|| a.serial.cmp(&b.serial));
                    if ord == Ordering::Less {
                        best = k;
                    }
                }
                best
            }
            PairStrategy::Fifo => {
                let mut best = 0;
                for k in 1..pending.len() {
                    if pending[k].serial < pending[best].serial {
                        best = k;
                    }
                }
                best
            }
            PairStrategy::Random(_) => rng.as_mut().expect("seeded").random_range(0..pending.len()),
        };
        let pair = st.pending.swap_remove(idx);
        let (i, j) = (pair.i, pair.j);
        stats.pairs_reduced += 1;
        let (pi, pj) = (&st.basis[i].poly, &st.basis[j].poly);
        let (mi, mj) = spoly_multipliers(pi, pj)?;
        let one = ring.field().one();
        let spoly = pi.mul_monomial(&mi).sub_mul_term(&one, &mj, pj);
        let cof = match (&st.basis[i].cof, &st.basis[j].cof) {
            (Some(ci), Some(cj)) => Some(
                ci.iter()
                    .zip(cj)
                    .map(|(a, b)| a.mul_monomial(&mi).sub_mul_term(&one, &mj, b))
                    .collect(),
            ),
            _ => None,
        };
        let mut t = Tracked { poly: spoly, cof };
        st.reduce(&mut t);
        if t.poly.is_zero() {
            stats.zero_reductions += 1;
        } else {
            st.update(t, opts, &mut stats);
        }
    }

    let tracked = opts.track_cofactors;
    let (elements, cofactors): (Vec<_>, Vec<_>) =
        st.basis.into_iter().map(|t| (t.poly, t.cof)).unzip();
    let cofactors = tracked.then(|| cofactors.into_iter().map(|c| c.expect("tracked")).collect());
    Ok((
        GroebnerBasis {
            ring: ring.clone(),
            elements,
            reduced: false,
            cofactors,
            ninputs,
        },
        stats,
    ))
}

/// Working state of a Buchberger run with the Gebauer-Möller pair update.
struct State<F: Field> {
    basis: Vec<Tracked<F>>,
    polys: Vec<Polynomial<F>>,
    lms: Vec<Monomial>,
    pending: Vec<Pair>,
    serial: usize,
}

impl<F: Field> State<F> {
    fn reduce(&self, t: &mut Tracked<F>) {
        t.reduce(&self.basis, &self.polys);
    }

    /// Adds a nonzero reduced element and updates the pending pairs.
    fn update(&mut self, mut t: Tracked<F>, opts: &BuchbergerOptions, stats: &mut BuchbergerStats) {
        t.make_monic();
        let lm = t.poly.leading_monomial().expect("nonzero").clone();
        let new = self.basis.len();
        let mut fresh: Vec<Pair> = Vec::with_capacity(self.basis.len());
        for k in 0..self.basis.len() {
            fresh.push(Pair {
                i: k,
                j: new,
                lcm: self.lms[k].lcm(&lm),
                serial: self.serial,
            });
            self.serial += 1;
            stats.pairs_created += 1;
        }
        let coprime = |p: &Pair| self.lms[p.i].is_coprime(&lm);

        if opts.chain_criterion {
            let mut kept: Vec<Pair> = Vec::with_capacity(fresh.len());
            while let Some(p) = fresh.pop() {
                let shadowed = fresh.iter().chain(&kept).any(|o| o.lcm.divides(&p.lcm));
                if coprime(&p) || !shadowed {
                    kept.push(p);
                } else {
                    stats.chain_skips += 1;
                }
            }
            kept.reverse();
            fresh = kept;
        }
        if opts.product_criterion {
            let before = fresh.len();
            fresh.retain(|p| !coprime(p));
            stats.product_skips += before - fresh.len();
        }
        if opts.chain_criterion {
            let lms = &self.lms;
            let before = self.pending.len();
            self.pending.retain(|p| {
                !(lm.divides(&p.lcm) && lms[p.i].lcm(&lm) != p.lcm && lms[p.j].lcm(&lm) != p.lcm)
            });
            stats.chain_skips += before - self.pending.len();
        }
        self.pending.extend(fresh);

        self.polys.push(t.poly.clone());
        self.basis.push(t);
        self.lms.push(lm);
    }
}

fn ring_one<F: Field>(ring: &RingRef<F>) -> Polynomial<F> {
    Polynomial::term(
        ring.clone(),
        ring.field().one(),
        Monomial::one(ring.nvars()),
    )
}

/// The unique reduced Gröbner basis of the ideal spanned by `gb`: minimal,
/// monic, tails fully reduced, sorted by leading monomial descending.
pub fn reduce_basis<F: Field>(gb: &GroebnerBasis<F>) -> GroebnerBasis<F> {
    let order = gb.ring.order().clone();
    let mut items: Vec<Tracked<F>> = gb
        .elements
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(k, p)| Tracked {
            poly: p.clone(),
            cof: gb.cofactors.as_ref().map(|c| c[k].clone()),
        })
        .collect();
    items.sort_by(|a, b| {
        order.cmp(
            a.poly.leading_monomial().expect("nonzero"),
            b.poly.leading_monomial().expect("nonzero"),
        )
    });
    let mut minimal: Vec<Tracked<F>> = Vec::new();
    for t in items {
        let lm = t.poly.leading_monomial().expect("nonzero");
        if minimal
            .iter()
            .any(|k| k.poly.leading_monomial().expect("nonzero").divides(lm))
        {
            continue;
        }
        minimal.push(t);
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Tracked<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, t)| t.clone())
            .collect();
        let polys: Vec<Polynomial<F>> = others.iter().map(|t| t.poly.clone()).collect();
        let mut t = minimal[k].clone();
        t.reduce(&others, &polys);
        t.make_monic();
        reduced.push(t);
    }
    reduced.reverse();
    let (elements, cofactors): (Vec<_>, Vec<_>) =
        reduced.into_iter().map(|t| (t.poly, t.cof)).unzip();
    let cofactors = gb
        .cofactors
        .is_some()
        .then(|| cofactors.into_iter().map(|c| c.expect("tracked")).collect());
    GroebnerBasis {
        ring: gb.ring.clone(),
        elements,
        reduced: true,
        cofactors,
        ninputs: gb.ninputs,
    }
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn groebner_basis<F: Field>(
    ring: &RingRef<F>,
    generators: &[Polynomial<F>],
) -> Result<GroebnerBasis<F>> {
    Ok(reduce_basis(&buchberger(ring, generators)?))
}

/// True iff every S-polynomial of `basis` has zero remainder on division by
/// `basis`.
pub fn is_groebner<F: Field>(basis: &[Polynomial<F>]) -> Result<bool> {
    let elems: Vec<Polynomial<F>> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let s = s_polynomial(&elems[i], &elems[j])?;
            if s.is_zero() {
                continue;
            }
            if !normal_form(&s, &elems).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

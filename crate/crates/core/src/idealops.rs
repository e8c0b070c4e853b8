//! Ideals with a lazily cached reduced Gröbner basis, and the operations
//! built on it: membership, sums and products, bracket powers, elimination,
//! intersection, colon and saturation.

use std::sync::OnceLock;

use crate::coefficients::Field;
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger_with, divide, groebner_basis, reduce_basis, BuchbergerOptions, GroebnerBasis,
};
use crate::polyring::{is_power_of, OrderKind, PolyRing, Polynomial, RingExt, RingRef};

/// An ideal given by generators. The reduced Gröbner basis is computed on
/// first use and cached; concurrent first uses may both compute it, with
/// identical results.
#[derive(Clone, Debug)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    generators: Vec<Polynomial<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

/// Result of a saturation: the stable ideal and the number of colon steps
/// taken to reach it (the last step is the one that showed stability).
#[derive(Clone, Debug)]
pub struct Saturation<F: Field> {
    pub ideal: Ideal<F>,
    pub iterations: usize,
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef<F>, generators: Vec<Polynomial<F>>) -> Result<Self> {
        for g in &generators {
            if !PolyRing::same(ring, g.ring()) {
                return Err(Error::IncompatibleRing);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn parse(ring: &RingRef<F>, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &RingRef<F>) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: vec![ring.one()],
            gb: OnceLock::new(),
        }
    }

    pub fn principal(f: &Polynomial<F>) -> Self {
        Ideal::new(f.ring(), vec![f.clone()]).expect("same ring")
    }

    /// The ideal generated by the given variables.
    pub fn variables(ring: &RingRef<F>, names: &[&str]) -> Result<Self> {
        let gens = names
            .iter()
            .map(|n| ring.var(n))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| {
            groebner_basis(&self.ring, &self.generators).expect("generators share the ideal's ring")
        })
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        if self.generators.iter().any(|g| g.is_constant()) {
            return true;
        }
        self.groebner_basis().is_unit()
    }

    fn check_ring(&self, other: &RingRef<F>) -> Result<()> {
        if PolyRing::same(&self.ring, other) {
            Ok(())
        } else {
            Err(Error::IncompatibleRing)
        }
    }

    /// `f ∈ I`: the remainder against the reduced Gröbner basis vanishes.
    pub fn membership(&self, f: &Polynomial<F>) -> Result<bool> {
        self.check_ring(f.ring())?;
        Ok(self.groebner_basis().normal_form(f).is_zero())
    }

    /// When `f ∈ I`, cofactors `c` with `f = sum c[i] * generators[i]`.
    pub fn membership_certificate(&self, f: &Polynomial<F>) -> Result<Option<Vec<Polynomial<F>>>> {
        self.check_ring(f.ring())?;
        let opts = BuchbergerOptions {
            track_cofactors: true,
            ..Default::default()
        };
        let (gb, _) = buchberger_with(&self.ring, &self.generators, &opts)?;
        let gb = reduce_basis(&gb);
        let d = divide(f, gb.elements())?;
        if !d.remainder.is_zero() {
            return Ok(None);
        }
        let cof = gb.cofactors().expect("tracked");
        let mut out = vec![self.ring.zero(); self.generators.len()];
        for (q, row) in d.quotients.iter().zip(cof) {
            if q.is_zero() {
                continue;
            }
            for (acc, c) in out.iter_mut().zip(row) {
                *acc = &*acc + &(q * c);
            }
        }
        Ok(Some(out))
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check_ring(&other.ring)?;
        for g in &other.generators {
            if !self.membership(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of reduced Gröbner bases.
    pub fn ideal_equal(&self, other: &Ideal<F>) -> Result<bool> {
        self.check_ring(&other.ring)?;
        Ok(self.groebner_basis().elements() == other.groebner_basis().elements())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(&other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(&other.ring)?;
        let mut gens: Vec<Polynomial<F>> = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                let p = a * b;
                if !gens.contains(&p) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^k`, with `I^0 = (1)`.
    pub fn power(&self, k: u32) -> Ideal<F> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// Bracket power `I^[q] = (g^q : g a generator)`.
    pub fn frobenius_power(&self, q: u64) -> Result<Ideal<F>> {
        let p = self.ring.characteristic() as u64;
        if !is_power_of(q, p) {
            return Err(Error::InvalidBracketPower { q, p: p as u32 });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.frobenius(q))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ k[keep]`, returned in the subring on `keep`. Requires lex order
    /// with every eliminated variable ranked above every kept one.
    pub fn eliminate(&self, keep: &[&str]) -> Result<Ideal<F>> {
        if self.ring.order().kind() != OrderKind::Lex {
            return Err(Error::UnsupportedElimination(
                "elimination requires lex order".into(),
            ));
        }
        let mut keep_idx = keep
            .iter()
            .map(|v| self.ring.var_index(v))
            .collect::<Result<Vec<_>>>()?;
        keep_idx.sort_unstable();
        keep_idx.dedup();
        let n = self.ring.nvars();
        let ndrop = n - keep_idx.len();
        let priority = self.ring.order().priority();
        if priority[..ndrop].iter().any(|i| keep_idx.contains(i)) {
            return Err(Error::UnsupportedElimination(
                "eliminated variables must be the highest-priority ones".into(),
            ));
        }
        let sub = self.ring.subring(&keep_idx)?;
        let mut mapping = vec![None; n];
        for (k, &i) in keep_idx.iter().enumerate() {
            mapping[i] = Some(k);
        }
        let gens = self
            .groebner_basis()
            .elements()
            .iter()
            .filter_map(|g| g.transfer(&sub, &mapping))
            .collect();
        Ideal::new(&sub, gens)
    }

    /// `I ∩ J` via `r I + (1 - r) J` in `k[r, vars]` under lex with `r`
    /// largest, keeping the basis elements free of `r`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.generators.iter().any(|g| g.is_constant()) {
            return Ok(other.clone());
        }
        if other.generators.iter().any(|g| g.is_constant()) {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let big = self.ring.with_elimination_variable("r")?;
        let up: Vec<Option<usize>> = (0..n).map(|i| Some(i + 1)).collect();
        let r = big.var_at(0);
        let one_minus_r = &big.one() - &r;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(&r * &g.transfer(&big, &up).expect("embedding"));
        }
        for g in &other.generators {
            gens.push(&one_minus_r * &g.transfer(&big, &up).expect("embedding"));
        }
        let gb = groebner_basis(&big, &gens)?;
        let mut down = vec![None];
        down.extend((0..n).map(Some));
        let kept = gb
            .elements()
            .iter()
            .filter_map(|g| g.transfer(&self.ring, &down))
            .collect();
        Ideal::new(&self.ring, kept)
    }

    /// `(I : u) = {a : a u ∈ I}`, computed as `(I ∩ (u)) / u`.
    pub fn colon_element(&self, u: &Polynomial<F>) -> Result<Ideal<F>> {
        self.check_ring(u.ring())?;
        if u.is_zero() {
            return Err(Error::Precondition("colon by the zero polynomial".into()));
        }
        if u.is_constant() {
            return Ok(self.clone());
        }
        let meet = self.intersect(&Ideal::principal(u))?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for g in &meet.generators {
            let q = g.div_exact(u).map_err(|_| {
                Error::Internal(format!(
                    "intersection generator {g} is not a multiple of {u}"
                ))
            })?;
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `(I : J) = ∩ (I : g)` over the generators `g` of `J`. The zero ideal
    /// `J` gives the unit ideal.
    pub fn colon_ideal(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(&other.ring)?;
        let mut acc: Option<Ideal<F>> = None;
        for g in &other.generators {
            let c = self.colon_element(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `(I : u^∞)` by iterating `I ← (I : u)` until the reduced basis stops
    /// changing.
    pub fn saturate(&self, u: &Polynomial<F>) -> Result<Saturation<F>> {
        let mut cur = self.clone();
        let mut iterations = 0;
        loop {
            let next = cur.colon_element(u)?;
            iterations += 1;
            if next.ideal_equal(&cur)? {
                return Ok(Saturation {
                    ideal: cur,
                    iterations,
                });
            }
            cur = next;
        }
    }

    /// `(I : J^∞)` by iterating `I ← (I : J)`.
    pub fn saturate_ideal(&self, other: &Ideal<F>) -> Result<Saturation<F>> {
        if other.is_zero() {
            return Err(Error::Precondition("saturation by the zero ideal".into()));
        }
        let mut cur = self.clone();
        let mut iterations = 0;
        loop {
            let next = cur.colon_ideal(other)?;
            iterations += 1;
            if next.ideal_equal(&cur)? {
                return Ok(Saturation {
                    ideal: cur,
                    iterations,
                });
            }
            cur = next;
        }
    }

    /// The same ideal in another ring on the same variables (used to compare
    /// orders).
    pub fn with_ring(&self, ring: &RingRef<F>) -> Result<Ideal<F>> {
        if ring.variables() != self.ring.variables() || ring.field() != self.ring.field() {
            return Err(Error::IncompatibleRing);
        }
        let map: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
        let gens = self
            .generators
            .iter()
            .map(|g| g.transfer(ring, &map).expect("same variables"))
            .collect();
        Ideal::new(ring, gens)
    }
}

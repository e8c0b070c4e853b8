//! Harnesses that rebuild the ideals `e`, `h`, `b` and the Gröbner bases
//! `G`, `F` at a parameter point, check each stated property, and run the
//! characteristic-`p` relative multiplicity example.

mod certificates;
mod construction;
mod example;
mod report;

pub use certificates::{
    check_spoly_certificates, curated_f_certificates, curated_f_pairs, g_certificates,
};
pub use construction::verify_construction;
pub use example::{verify_example, verify_example_with, ExampleOptions};
pub use report::{ClaimRecord, VerificationReport};

use crate::coefficients::{is_prime, PrimeField};
use crate::error::{Error, Result};
use crate::idealops::Ideal;
use crate::polyring::{OrderKind, PolyRing, Polynomial, RingExt, RingRef};

/// Parameters of the ideal family: a prime `p` and `m ≥ 4` with `p ∤ m`;
/// `n = 2m + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    pub p: u64,
    pub m: u64,
}

impl ConstructionParams {
    pub fn new(p: u64, m: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        if m < 4 {
            return Err(Error::InvalidParams(format!("m = {m} must be at least 4")));
        }
        if m.is_multiple_of(p) {
            return Err(Error::InvalidParams(format!("p = {p} divides m = {m}")));
        }
        Ok(ConstructionParams { p, m })
    }

    pub fn n(&self) -> u64 {
        2 * self.m + 1
    }
}

/// Parameters of the characteristic-`p` example: an odd prime `p` and `e ≥ 1`, with `q = p^e`,
/// `n = pq` and family parameter `m = (n - 1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExampleParams {
    pub p: u64,
    pub e: u32,
}

impl ExampleParams {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::InvalidParams(format!("{p} is not an odd prime")));
        }
        if e < 1 {
            return Err(Error::InvalidParams("e must be at least 1".into()));
        }
        let n = p
            .checked_pow(e + 1)
            .filter(|&n| n <= u32::MAX as u64)
            .ok_or_else(|| {
                Error::InvalidParams(format!("p^(e+1) is too large for p={p}, e={e}"))
            })?;
        let m = (n - 1) / 2;
        if m % p == 0 {
            return Err(Error::Internal(format!("p = {p} divides (pq - 1)/2 = {m}")));
        }
        Ok(ExampleParams { p, e })
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn n(&self) -> u64 {
        self.p * self.q()
    }

    pub fn construction(&self) -> ConstructionParams {
        ConstructionParams {
            p: self.p,
            m: (self.n() - 1) / 2,
        }
    }
}

/// Every object of the family at one parameter point.
#[derive(Clone, Debug)]
pub struct ConstructionObjects {
    pub params: ConstructionParams,
    /// `A = F_p[s, x, y]`, lex with `s > x > y`.
    pub ring: RingRef<PrimeField>,
    /// `B = F_p[r, s, x, y]`, lex with `r > s > x > y`.
    pub big_ring: RingRef<PrimeField>,
    /// `g = xy(x - y)(x + y - sy)`.
    pub g: Polynomial<PrimeField>,
    pub f: Polynomial<PrimeField>,
    /// `e = (x^n, y^n, g)`.
    pub e: Ideal<PrimeField>,
    /// `h = e + (f)`.
    pub h: Ideal<PrimeField>,
    /// `b = (x, y)^{n+2}`.
    pub b: Ideal<PrimeField>,
    /// `(s, x, y)`.
    pub max: Ideal<PrimeField>,
    pub g_basis: Vec<Polynomial<PrimeField>>,
    pub f_basis: Vec<Polynomial<PrimeField>>,
}

pub(crate) fn parse(ring: &RingRef<PrimeField>, text: &str) -> Polynomial<PrimeField> {
    ring.parse(text)
        .unwrap_or_else(|e| panic!("generated polynomial `{text}` failed to parse: {e}"))
}

/// `sum c * mono` from `(c, mono)` pairs.
pub(crate) fn signed_sum(
    ring: &RingRef<PrimeField>,
    parts: impl IntoIterator<Item = (i64, String)>,
) -> Polynomial<PrimeField> {
    let text: Vec<String> = parts
        .into_iter()
        .map(|(c, m)| format!("({c})*{m}"))
        .collect();
    if text.is_empty() {
        return ring.zero();
    }
    parse(ring, &text.join(" + "))
}

fn sign(j: u64) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn build_construction_objects(params: ConstructionParams) -> Result<ConstructionObjects> {
    let params = ConstructionParams::new(params.p, params.m)?;
    let (m, n) = (params.m, params.n());
    let ring = PolyRing::prime(params.p, &["s", "x", "y"], OrderKind::Lex)?;
    let big_ring = PolyRing::prime(params.p, &["r", "s", "x", "y"], OrderKind::Lex)?;

    let g_text = "x^3*y - s*x^2*y^2 - x*y^3 + s*x*y^3";
    let g = parse(&ring, g_text);
    let f_parts = |prefix: &'static str| {
        (2..n).map(move |j| (sign(j), format!("{prefix}x^{}*y^{j}", n + 1 - j)))
    };
    let f = signed_sum(&ring, f_parts(""));
    let xn = parse(&ring, &format!("x^{n}"));
    let yn = parse(&ring, &format!("y^{n}"));
    let e = Ideal::new(&ring, vec![xn.clone(), yn.clone(), g.clone()])?;
    let h = Ideal::new(&ring, vec![xn.clone(), yn.clone(), g.clone(), f.clone()])?;
    let b = Ideal::new(
        &ring,
        (0..=n + 2)
            .map(|i| parse(&ring, &format!("x^{i}*y^{}", n + 2 - i)))
            .collect(),
    )?;
    let max = Ideal::variables(&ring, &["s", "x", "y"])?;

    let mut g_basis = vec![g.clone(), xn];
    g_basis.extend((3..n).map(|j| parse(&ring, &format!("x^{}*y^{j}", n + 2 - j))));
    g_basis.push(yn);

    let bg = |t: &str| parse(&big_ring, t);
    let mut f_basis = vec![
        bg("r*s - s"),
        bg(&format!("r*x^{n}")),
        bg("r*x^3*y - r*x*y^3 - s*x^2*y^2 + s*x*y^3"),
        signed_sum(
            &big_ring,
            std::iter::once((m as i64, format!("r*x^2*y^{}", n - 1))).chain((1..=n - 3).map(|j| {
                (
                    -sign(j) * j as i64,
                    format!("s*x^{}*y^{}", n - 1 - j, j + 2),
                )
            })),
        ),
        bg(&format!("r*y^{n}")),
        bg(&format!("-s*({g_text})")),
        bg(&format!("s*x^{n}")),
        signed_sum(&big_ring, f_parts("s*")),
    ];
    f_basis.extend((8..=n + 3).map(|i| bg(&format!("s*x^{}*y^{}", n + 6 - i, i - 4))));
    f_basis.push(bg(&format!("s*y^{n}")));

    Ok(ConstructionObjects {
        params,
        ring,
        big_ring,
        g,
        f,
        e,
        h,
        b,
        max,
        g_basis,
        f_basis,
    })
}

impl ConstructionObjects {
    /// `a = r h B + (1 - r) s B`.
    pub fn a_ideal(&self) -> Ideal<PrimeField> {
        let up = [Some(1), Some(2), Some(3)];
        let r = self.big_ring.var("r").expect("r");
        let s = self.big_ring.var("s").expect("s");
        let mut gens: Vec<Polynomial<PrimeField>> = self
            .h
            .generators()
            .iter()
            .map(|u| &r * &u.transfer(&self.big_ring, &up).expect("embedding"))
            .collect();
        gens.push(&(&self.big_ring.one() - &r) * &s);
        Ideal::new(&self.big_ring, gens).expect("same ring")
    }

    /// `h ∩ (s) = (s y^n, s x^3 y^4 (x, y)^{n-5}, s f, s x^n, s g)` in `F_p[s, x, y]`.
    pub fn listed_intersection(&self) -> Ideal<PrimeField> {
        let n = self.params.n();
        let s = self.ring.var("s").expect("s");
        let mut gens = vec![parse(&self.ring, &format!("s*y^{n}"))];
        gens.extend(
            (0..=n - 5).map(|a| parse(&self.ring, &format!("s*x^{}*y^{}", 3 + a, 4 + n - 5 - a))),
        );
        gens.push(&s * &self.f);
        gens.push(parse(&self.ring, &format!("s*x^{n}")));
        gens.push(&s * &self.g);
        Ideal::new(&self.ring, gens).expect("same ring")
    }
}

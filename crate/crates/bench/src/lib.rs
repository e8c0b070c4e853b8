//! Inputs shared by the benchmarks.

use frobgb::verify::{build_construction_objects, ConstructionObjects};
use frobgb::{ConstructionParams, Ideal, OrderKind, PolyRing, Polynomial, PrimeField, RingExt};

pub fn construction(p: u64, m: u64) -> ConstructionObjects {
    build_construction_objects(ConstructionParams::new(p, m).expect("valid parameters"))
        .expect("construction")
}

/// Generators of `e` at `(p, m)`, as listed.
pub fn e_generators(p: u64, m: u64) -> Vec<Polynomial<PrimeField>> {
    construction(p, m).e.generators().to_vec()
}

/// A dense-ish system in three variables whose basis is nontrivial under
/// grevlex: cyclic-3 perturbed by a cubic.
pub fn cyclic3(p: u64) -> Vec<Polynomial<PrimeField>> {
    let r = PolyRing::prime(p, &["a", "b", "c"], OrderKind::Grevlex).expect("ring");
    [
        "a + b + c",
        "a*b + b*c + c*a",
        "a*b*c - 1",
        "a^3 + b^2*c - 2",
    ]
    .iter()
    .map(|t| r.parse(t).expect("parse"))
    .collect()
}

/// `(J, I)` of the relative multiplicity example in characteristic `p`.
pub fn example_pair(p: u64) -> (Ideal<PrimeField>, Ideal<PrimeField>) {
    let o = construction(p, (p * p - 1) / 2);
    let j = Ideal::parse(&o.ring, &[&format!("x^{p}"), &format!("y^{p}")]).expect("J");
    let i = Ideal::variables(&o.ring, &["x", "y"])
        .expect("I")
        .power(p as u32);
    (j, i)
}

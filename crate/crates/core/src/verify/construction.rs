use std::time::Instant;

use super::report::{ClaimRecord, VerificationReport};
use super::{build_construction_objects, ConstructionParams};
use crate::cohomology::{h0_length, h0_submodule, QuotientPair};
use crate::error::Result;
use crate::groebner::{divide, is_groebner};
use crate::idealops::Ideal;
use crate::polyring::RingExt;

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Checks claims `1` through `7` about `e`, `h` and `b`, together with the
/// Gröbner basis `G` of `e`, a second route to the colon of claim `5` and
/// `e ⊊ h`.
pub fn verify_construction(params: ConstructionParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let o = build_construction_objects(params)?;
    let n = params.n();
    let a = &o.ring;
    let mut report = VerificationReport::new(
        "construction",
        vec![
            ("p".into(), params.p.to_string()),
            ("m".into(), params.m.to_string()),
            ("n".into(), n.to_string()),
        ],
    );

    let t = Instant::now();
    let mut missing = Vec::new();
    for g in o.b.generators() {
        if !o.e.membership(g)? {
            missing.push(g.to_string());
        }
    }
    let total = o.b.generators().len();
    report.claims.push(
        ClaimRecord::new(
            "1",
            "b = (x,y)^(n+2) is contained in e",
            format!("{total} of {total} generators in e"),
            format!("{} of {total} generators in e", total - missing.len()),
            missing.is_empty(),
        )
        .witness("gb_e_size", o.e.groebner_basis().len())
        .timed(t),
    );
    if !missing.is_empty() {
        let last = report.claims.len() - 1;
        report.claims[last]
            .witness
            .push(("missing".into(), missing.join(", ")));
    }

    let t = Instant::now();
    let s = a.var("s")?;
    let sf = o.e.membership(&(&s * &o.f))?;
    report
        .claims
        .push(ClaimRecord::new("2", "s*f is in e", "true", yes_no(sf), sf).timed(t));

    let t = Instant::now();
    let xf = o.e.membership(&(&a.var("x")? * &o.f))?;
    let yf = o.e.membership(&(&a.var("y")? * &o.f))?;
    report.claims.push(
        ClaimRecord::new(
            "3",
            "x*f and y*f are in e",
            "true, true",
            format!("{}, {}", yes_no(xf), yes_no(yf)),
            xf && yf,
        )
        .timed(t),
    );

    let t = Instant::now();
    let f_in_e = o.e.membership(&o.f)?;
    let remainder_is_f = divide(&o.f, &o.g_basis)?.remainder == o.f;
    let colon = o.e.colon_element(&o.f)?;
    let colon_is_m = colon.ideal_equal(&o.max)?;
    report.claims.push(
        ClaimRecord::new(
            "4",
            "f is not in e, f is reduced with respect to G, and (e : f) = (s,x,y)",
            "false, true, true",
            format!(
                "{}, {}, {}",
                yes_no(f_in_e),
                yes_no(remainder_is_f),
                yes_no(colon_is_m)
            ),
            !f_in_e && remainder_is_f && colon_is_m,
        )
        .witness(
            "lt_f",
            o.f.leading_monomial()?
                .format(a.variables(), a.order().priority()),
        )
        .witness("colon_gb", gb_string(&colon))
        .timed(t),
    );

    let t = Instant::now();
    let g_is_gb = is_groebner(&o.g_basis)?;
    let g_gen_e = Ideal::new(a, o.g_basis.clone())?.ideal_equal(&o.e)?;
    report.claims.push(
        ClaimRecord::new(
            "G",
            "G is a Groebner basis of e",
            "true, true",
            format!("{}, {}", yes_no(g_is_gb), yes_no(g_gen_e)),
            g_is_gb && g_gen_e,
        )
        .witness("size", o.g_basis.len())
        .timed(t),
    );

    let t = Instant::now();
    let a_ideal = o.a_ideal();
    let f_gens_a = Ideal::new(&o.big_ring, o.f_basis.clone())?.ideal_equal(&a_ideal)?;
    let f_is_gb = is_groebner(&o.f_basis)?;
    let eliminated = a_ideal.eliminate(&["s", "x", "y"])?.with_ring(a)?;
    let elim_matches = eliminated.ideal_equal(&o.listed_intersection())?;
    let h_colon_s = o.h.colon_element(&s)?;
    let s_saturated = h_colon_s.ideal_equal(&o.h)?;
    report.claims.push(
        ClaimRecord::new(
            "5",
            "(F) = a, F is a Groebner basis, a meets k[s,x,y] in the listed ideal, and (h : s) = h",
            "true, true, true, true",
            format!(
                "{}, {}, {}, {}",
                yes_no(f_gens_a),
                yes_no(f_is_gb),
                yes_no(elim_matches),
                yes_no(s_saturated)
            ),
            f_gens_a && f_is_gb && elim_matches && s_saturated,
        )
        .witness("size_F", o.f_basis.len())
        .witness("gb_a_size", a_ideal.groebner_basis().len())
        .timed(t),
    );

    let t = Instant::now();
    let mut divided = Vec::new();
    for g in eliminated.generators() {
        divided.push(g.div_exact(&s)?);
    }
    let f_route = Ideal::new(a, divided)?;
    let agree = f_route.ideal_equal(&h_colon_s)?;
    report.claims.push(
        ClaimRecord::new(
            "5x",
            "(h : s) via colon_element equals the elimination of a divided by s",
            "true",
            yes_no(agree),
            agree,
        )
        .timed(t),
    );

    let t = Instant::now();
    let sat_s = o.e.saturate(&s)?;
    let sat_m = o.e.saturate_ideal(&o.max)?;
    let s_ok = sat_s.ideal.ideal_equal(&o.h)?;
    let m_ok = sat_m.ideal.ideal_equal(&o.h)?;
    report.claims.push(
        ClaimRecord::new(
            "6",
            "(e : s^inf) = h and (e : m^inf) = h",
            "true, true",
            format!("{}, {}", yes_no(s_ok), yes_no(m_ok)),
            s_ok && m_ok,
        )
        .witness("iterations_s", sat_s.iterations)
        .witness("iterations_m", sat_m.iterations)
        .timed(t),
    );

    let t = Instant::now();
    let unit = Ideal::unit(a);
    let pair = QuotientPair::new(unit.clone(), o.e.clone())?;
    let torsion = h0_submodule(&pair, &o.max)?;
    let torsion_is_h = torsion.ideal_equal(&o.h)?;
    let len = h0_length(&unit, &o.e, &o.max)?;
    report.claims.push(
        ClaimRecord::new(
            "7",
            "H0_m(A/e) = h/e has length 1",
            "h, 1",
            format!("{}, {len}", if torsion_is_h { "h" } else { "not h" }),
            torsion_is_h && len == 1,
        )
        .timed(t),
    );

    let t = Instant::now();
    let e_in_h = o.h.contains_ideal(&o.e)?;
    let equal = o.e.ideal_equal(&o.h)?;
    report.claims.push(
        ClaimRecord::new(
            "mono",
            "e is strictly contained in h",
            "true, false",
            format!("{}, {}", yes_no(e_in_h), yes_no(equal)),
            e_in_h && !equal,
        )
        .timed(t),
    );

    report.elapsed = start.elapsed();
    Ok(report)
}

fn gb_string(i: &Ideal<crate::PrimeField>) -> String {
    let gens: Vec<String> = i
        .groebner_basis()
        .elements()
        .iter()
        .map(|g| g.to_string())
        .collect();
    format!("[{}]", gens.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_point_passes() {
        let report = verify_construction(ConstructionParams::new(3, 4).unwrap()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        let ids: Vec<&str> = report.claims.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["1", "2", "3", "4", "G", "5", "5x", "6", "7", "mono"]);
        assert_eq!(report.claim("4").unwrap().witness[1].1, "[s, x, y]");
    }
}

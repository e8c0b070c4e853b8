use std::time::{Duration, Instant};

use num_rational::Ratio;

use super::report::{ClaimRecord, VerificationReport};
use super::{build_construction_objects, verify_construction, ExampleParams};
use crate::cohomology::{
    ass_witness, h0_length, minprime_cross_check, minprime_witness, rjj_estimate, RjjRow,
};
use crate::error::Result;
use crate::idealops::Ideal;

/// Options of [`verify_example_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExampleOptions {
    /// Once this much time has passed, no further `q` of the relative
    /// multiplicity grid is started. The first `q` always runs.
    pub time_budget: Option<Duration>,
}

pub fn verify_example(params: ExampleParams) -> Result<VerificationReport> {
    verify_example_with(params, ExampleOptions::default())
}

/// Checks claims `a` through `g` of the example with `J = (x^p, y^p)` and
/// `I = (x, y)^p` in `F_p[s, x, y]/(g)`.
pub fn verify_example_with(
    params: ExampleParams,
    opts: ExampleOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let params = ExampleParams::new(params.p, params.e)?;
    let (p, q, n) = (params.p, params.q(), params.n());
    let cparams = params.construction();
    let mut report = VerificationReport::new(
        "example",
        vec![
            ("p".into(), p.to_string()),
            ("e".into(), params.e.to_string()),
            ("q".into(), q.to_string()),
            ("n".into(), n.to_string()),
            ("m".into(), cparams.m.to_string()),
        ],
    );

    let t = Instant::now();
    let inner = verify_construction(cparams)?;
    let passed = inner.claims.iter().filter(|c| c.passed).count();
    let mut rec = ClaimRecord::new(
        "a",
        "the ideal family checks pass at n = pq",
        format!("{0}/{0} claims pass", inner.claims.len()),
        format!("{passed}/{} claims pass", inner.claims.len()),
        inner.passed(),
    );
    for c in inner.failures() {
        rec = rec.witness("failed", &c.id);
    }
    report.claims.push(rec.timed(t));

    let o = build_construction_objects(cparams)?;
    let ring = &o.ring;
    let z = &o.f;
    let j_base = Ideal::parse(ring, &[&format!("x^{p}"), &format!("y^{p}")])?;
    let i_base = Ideal::variables(ring, &["x", "y"])?.power(p as u32);
    let g_ideal = Ideal::principal(&o.g);
    let j_q = j_base.frobenius_power(q)?.sum(&g_ideal)?;
    let i_q = i_base.frobenius_power(q)?.sum(&g_ideal)?;

    let t = Instant::now();
    let same_as_e = j_q.ideal_equal(&o.e)?;
    let z_in_j = j_q.membership(z)?;
    report.claims.push(
        ClaimRecord::new(
            "b",
            "z is not in J^[q]",
            "false",
            z_in_j.to_string(),
            !z_in_j && same_as_e,
        )
        .witness("J^[q]+(g) = e", same_as_e)
        .timed(t),
    );

    let t = Instant::now();
    let z_in_i = i_q.membership(z)?;
    report.claims.push(
        ClaimRecord::new("c", "z is in I^[q]", "true", z_in_i.to_string(), z_in_i)
            .witness("gb_I_size", i_q.groebner_basis().len())
            .timed(t),
    );

    let t = Instant::now();
    let w = ass_witness(&j_q, z, &o.max)?;
    let coherent = w.colon.ideal_equal(&o.e.colon_element(&o.f)?)?;
    report.claims.push(
        ClaimRecord::new(
            "d",
            "(J^[q] : z) = (s,x,y)",
            "true",
            w.matches.to_string(),
            w.matches && coherent,
        )
        .witness("agrees_with_(e:f)", coherent)
        .timed(t),
    );

    let t = Instant::now();
    let witness = minprime_witness(p, q)?;
    let cross = minprime_cross_check(p, q)?;
    report.claims.push(
        ClaimRecord::new(
            "e",
            "x^q y^((p-1)q) is not in (x^pq, y^pq, xy(x-y)) over F_p(s)[x,y]",
            "true",
            witness.to_string(),
            witness && cross,
        )
        .witness("also_outside_(x^pq,y^pq,g)", cross)
        .timed(t),
    );

    let t = Instant::now();
    let len = h0_length(&i_q, &j_q, &o.max)?;
    report.claims.push(
        ClaimRecord::new(
            "f",
            "length of H0_m(I^[q]/J^[q]) is 1",
            "1",
            len.to_string(),
            len == 1,
        )
        .timed(t),
    );

    let t = Instant::now();
    let mut rows: Vec<RjjRow> = Vec::new();
    let mut truncated = false;
    for k in 1..=params.e {
        let qk = p.pow(k);
        if k > 1 && opts.time_budget.is_some_and(|b| start.elapsed() >= b) {
            truncated = true;
            break;
        }
        rows.extend(rjj_estimate(
            &j_base,
            &i_base,
            &o.max,
            2,
            &[qk],
            Some(&o.g),
        )?);
    }
    let expected: Vec<String> = (1..=params.e)
        .map(|k| p.pow(k))
        .map(|qk| format!("({qk}, 1, {})", Ratio::new(1, qk * qk)))
        .collect();
    let computed: Vec<String> = rows.iter().map(|r| r.to_string()).collect();
    let rows_ok = rows
        .iter()
        .all(|r| r.length == 1 && r.normalized == Ratio::new(1, r.q * r.q));
    report.claims.push(
        ClaimRecord::new(
            "g",
            "relative multiplicity table with d = 2",
            expected.join(" "),
            computed.join(" "),
            rows_ok && !rows.is_empty(),
        )
        .witness("grid_truncated", truncated)
        .timed(t),
    );

    report.elapsed = start.elapsed();
    Ok(report)
}

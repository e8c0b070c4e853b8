use std::time::Instant;

use super::report::{ClaimRecord, VerificationReport};
use super::{build_construction_objects, parse, ConstructionParams};
use crate::coefficients::PrimeField;
use crate::error::{Error, Result};
use crate::groebner::{check_certificate_up_to_sign, is_groebner, s_polynomial, SpolyCertificate};
use crate::polyring::{Polynomial, RingRef};

/// Pairs of `F` with closed-form representations: `(0,1)`, `(0,2)`, `(0,4)`,
/// `(0,5)`, `(0,6)`, `(0,i)` for `8 ≤ i ≤ n+4`, `(2,4)` and `(6,7)`.
pub fn curated_f_pairs(n: u64) -> Vec<(usize, usize)> {
    let n = n as usize;
    let mut pairs = vec![(0, 1), (0, 2), (0, 4), (0, 5), (0, 6)];
    pairs.extend((8..=n + 4).map(|i| (0, i)));
    pairs.extend([(2, 4), (6, 7)]);
    pairs
}

/// Closed-form representations of the curated S-polynomials of `F`, as
/// printed (`S_01 = -F_6`, `S_02 = x y^3 F_0 + F_5`, ...).
pub fn curated_f_certificates(
    ring: &RingRef<PrimeField>,
    n: u64,
    pairs: &[(usize, usize)],
) -> Result<Vec<SpolyCertificate<PrimeField>>> {
    let last = n as usize + 4;
    let p = |t: &str| parse(ring, t);
    pairs
        .iter()
        .map(|&pair| {
            let coefficients = match pair {
                (0, 1) | (0, 6) => vec![(6, p("-1"))],
                (0, 2) => vec![(0, p("x*y^3")), (5, p("1"))],
                (0, 4) => vec![(last, p("-1"))],
                (0, 5) => vec![(0, p("s*x*y^3 + x^3*y - x*y^3")), (5, p("-1"))],
                (0, i) if (8..=last).contains(&i) => vec![(i, p("-1"))],
                (2, 4) => vec![(4, p("-x*y^2")), (last, p("-x^2*y + x*y^2"))],
                (6, 7) => vec![(7, p("y")), (last, p("-x^2"))],
                (j, k) => return Err(Error::UnknownPair(j, k)),
            };
            Ok(SpolyCertificate::new(pair, coefficients))
        })
        .collect()
}

/// Representations of `S(u, g)` for each monomial `u` of `G`, as printed.
/// Pairs are `(index of u, 0)`.
pub fn g_certificates(ring: &RingRef<PrimeField>, n: u64) -> Vec<SpolyCertificate<PrimeField>> {
    let n = n as usize;
    let p = |t: &str| parse(ring, t);
    // G = [g, x^n, x^{n-1} y^3, ..., x^3 y^{n-1}, y^n]: index k ≥ 2 (k ≤ n-2)
    // holds x^{n+1-k} y^{k+1}, and y^n sits at n-1.
    let at = |i: usize| n + 1 - i;
    let mut certs = vec![
        SpolyCertificate::new(
            (n - 1, 0),
            vec![(n - 1, p("-s*x*y + x*y")), (n - 2, p("-1"))],
        ),
        SpolyCertificate::new(
            (n - 2, 0),
            vec![(n - 1, p("-s*x^2 + x^2")), (n - 3, p("-1"))],
        ),
    ];
    for i in 4..=n - 2 {
        certs.push(SpolyCertificate::new(
            (at(i), 0),
            vec![(at(i - 1), p("-s + 1")), (at(i + 1), p("-1"))],
        ));
    }
    certs.push(SpolyCertificate::new(
        (2, 0),
        vec![(3, p("-s + 1")), (1, p("-y^2"))],
    ));
    certs.push(SpolyCertificate::new(
        (1, 0),
        vec![(2, p("-s + 1")), (1, p("-x*y"))],
    ));
    certs
}

/// Checks a family of certificates up to a single global sign.
fn sign_claim(
    id: &str,
    description: &str,
    basis: &[Polynomial<PrimeField>],
    certs: &[SpolyCertificate<PrimeField>],
    expected_sign: i8,
) -> Result<ClaimRecord> {
    let mut signs = Vec::with_capacity(certs.len());
    let mut failed = Vec::new();
    for c in certs {
        match check_certificate_up_to_sign(basis, c)? {
            Some(s) => signs.push(s),
            None => failed.push(format!("S{},{}", c.pair.0, c.pair.1)),
        }
    }
    let global = signs.first().copied();
    let consistent = signs.iter().all(|&s| Some(s) == global);
    let passed = failed.is_empty() && consistent;
    let computed = if !failed.is_empty() {
        format!("no valid representation for {}", failed.join(" "))
    } else if !consistent {
        "mixed signs".to_string()
    } else {
        format!(
            "{} of {} verified with global sign {:+}",
            signs.len(),
            certs.len(),
            global.unwrap_or(expected_sign)
        )
    };
    let rec = ClaimRecord::new(
        id,
        description,
        format!("all {} verified with a common sign", certs.len()),
        computed,
        passed,
    )
    .witness(
        "pairs",
        certs
            .iter()
            .map(|c| format!("{},{}", c.pair.0, c.pair.1))
            .collect::<Vec<_>>()
            .join(" "),
    )
    .witness(
        "sign",
        global
            .map(|s| format!("{s:+}"))
            .unwrap_or_else(|| "none".into()),
    );
    Ok(rec)
}

/// Checks the curated S-polynomial representations of `F` (all curated
/// pairs when `subset` is `None`), the printed representations for `G`, and
/// the Gröbner property of both lists.
pub fn check_spoly_certificates(
    params: ConstructionParams,
    subset: Option<&[(usize, usize)]>,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let o = build_construction_objects(params)?;
    let n = params.n();
    let curated = curated_f_pairs(n);
    let pairs: Vec<(usize, usize)> = match subset {
        None => curated.clone(),
        Some(s) => {
            for &(j, k) in s {
                if !curated.contains(&(j, k)) {
                    return Err(Error::UnknownPair(j, k));
                }
            }
            s.to_vec()
        }
    };
    let mut report = VerificationReport::new(
        "certificates",
        vec![
            ("p".into(), params.p.to_string()),
            ("m".into(), params.m.to_string()),
            ("n".into(), n.to_string()),
        ],
    );
    let t = Instant::now();
    let certs = curated_f_certificates(&o.big_ring, n, &pairs)?;
    let rec = sign_claim(
        "F-certs",
        "curated S-polynomial representations over F",
        &o.f_basis,
        &certs,
        1,
    )?;
    report.claims.push(rec.timed(t));

    let t = Instant::now();
    let gb = is_groebner(&o.f_basis)?;
    report.claims.push(
        ClaimRecord::new("F-gb", "F is a Groebner basis", "true", gb.to_string(), gb)
            .witness("size", o.f_basis.len())
            .timed(t),
    );

    let t = Instant::now();
    let gcerts = g_certificates(&o.ring, n);
    let rec = sign_claim(
        "G-certs",
        "representations of S(u, g) over G",
        &o.g_basis,
        &gcerts,
        -1,
    )?;
    report.claims.push(rec.timed(t));

    let t = Instant::now();
    let mut nonzero = Vec::new();
    for i in 1..o.g_basis.len() {
        let s = s_polynomial(&o.g_basis[i], &o.g_basis[0])?;
        if !crate::groebner::normal_form(&s, &o.g_basis).is_zero() {
            nonzero.push(i.to_string());
        }
    }
    let ok = nonzero.is_empty();
    let computed = if ok {
        "all reduce to 0".to_string()
    } else {
        format!("nonzero remainder at {}", nonzero.join(" "))
    };
    report.claims.push(
        ClaimRecord::new(
            "G-spolys",
            "every S(u, g) with u a monomial of G reduces to 0 over G",
            "all reduce to 0",
            computed,
            ok,
        )
        .witness("pairs", o.g_basis.len() - 1)
        .timed(t),
    );

    report.elapsed = start.elapsed();
    Ok(report)
}

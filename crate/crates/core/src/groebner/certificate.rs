use std::fmt::Write;

use super::spoly::s_polynomial;
use crate::coefficients::Field;
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, RingExt, RingRef};

/// A representation `S(g_j, g_k) = sum_i a_i g_i`, stored sparsely as
/// `(i, a_i)` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpolyCertificate<F: Field> {
    pub pair: (usize, usize),
    pub coefficients: Vec<(usize, Polynomial<F>)>,
}

impl<F: Field> SpolyCertificate<F> {
    pub fn new(pair: (usize, usize), coefficients: Vec<(usize, Polynomial<F>)>) -> Self {
        SpolyCertificate { pair, coefficients }
    }

    pub fn negated(&self) -> Self {
        SpolyCertificate {
            pair: self.pair,
            coefficients: self
                .coefficients
                .iter()
                .map(|(i, a)| (*i, a.neg()))
                .collect(),
        }
    }
}

/// True iff `S(g_j, g_k) = sum a_i g_i` exactly and every nonzero product
/// satisfies `lm(S) >= lm(a_i g_i)`.
pub fn check_certificate<F: Field>(
    basis: &[Polynomial<F>],
    cert: &SpolyCertificate<F>,
) -> Result<bool> {
    let len = basis.len();
    let (j, k) = cert.pair;
    for index in [j, k]
        .into_iter()
        .chain(cert.coefficients.iter().map(|(i, _)| *i))
    {
        if index >= len {
            return Err(Error::IndexOutOfRange { index, len });
        }
    }
    let s = s_polynomial(&basis[j], &basis[k])?;
    let ring = basis[j].ring();
    let order = ring.order();
    let mut sum = ring.zero();
    for (i, a) in &cert.coefficients {
        if a.is_zero() {
            continue;
        }
        let prod = a.try_mul(&basis[*i])?;
        let bound_ok = match (s.leading_monomial(), prod.leading_monomial()) {
            (Ok(ls), Ok(lp)) => order.cmp(ls, lp).is_ge(),
            _ => false,
        };
        if !bound_ok {
            return Ok(false);
        }
        sum = &sum + &prod;
    }
    Ok(sum == s)
}

/// Checks `cert` and its negation; returns the sign (`1` or `-1`) under which
/// the representation holds.
pub fn check_certificate_up_to_sign<F: Field>(
    basis: &[Polynomial<F>],
    cert: &SpolyCertificate<F>,
) -> Result<Option<i8>> {
    if check_certificate(basis, cert)? {
        return Ok(Some(1));
    }
    if check_certificate(basis, &cert.negated())? {
        return Ok(Some(-1));
    }
    Ok(None)
}

/// One line per certificate: `S j k : i1 <poly> ; i2 <poly> ; ...`.
pub fn format_certificates<F: Field>(certs: &[SpolyCertificate<F>]) -> String {
    let mut out = String::new();
    for c in certs {
        let _ = write!(out, "S {} {} :", c.pair.0, c.pair.1);
        let parts: Vec<String> = c
            .coefficients
            .iter()
            .map(|(i, a)| format!(" {i} {a}"))
            .collect();
        out.push_str(&parts.join(" ;"));
        out.push('\n');
    }
    out
}

/// Parses the line format of [`format_certificates`]. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_certificates<F: Field>(
    text: &str,
    ring: &RingRef<F>,
) -> Result<Vec<SpolyCertificate<F>>> {
    let mut out = Vec::new();
    let mut offset = 0usize;
    for line in text.split_inclusive('\n') {
        let base = offset;
        offset += line.len();
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let perr = |msg: &str| Error::Parse {
            pos: base,
            msg: msg.to_string(),
        };
        let (head, body) = trimmed.split_once(':').ok_or_else(|| perr("missing `:`"))?;
        let head: Vec<&str> = head.split_whitespace().collect();
        if head.len() != 3 || head[0] != "S" {
            return Err(perr("expected `S j k`"));
        }
        let j: usize = head[1].parse().map_err(|_| perr("bad pair index"))?;
        let k: usize = head[2].parse().map_err(|_| perr("bad pair index"))?;
        let mut coefficients = Vec::new();
        for entry in body.split(';') {
            let entry = entry.trim();
            if entry.is_empty() {
                continue;
            }
            let (idx, poly) = entry
                .split_once(char::is_whitespace)
                .ok_or_else(|| perr("expected `index polynomial`"))?;
            let i: usize = idx.parse().map_err(|_| perr("bad basis index"))?;
            let a = ring.parse(poly.trim()).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: base + pos,
                    msg,
                },
                other => other,
            })?;
            coefficients.push((i, a));
        }
        out.push(SpolyCertificate {
            pair: (j, k),
            coefficients,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{OrderKind, PolyRing};

    #[test]
    fn monomial_pair_with_empty_certificate() {
        let r = PolyRing::prime(3, &["x", "y"], OrderKind::Lex).unwrap();
        let basis = vec![r.parse("x^2").unwrap(), r.parse("x*y").unwrap()];
        let cert = SpolyCertificate::new((0, 1), vec![]);
        assert!(check_certificate(&basis, &cert).unwrap());
    }

    #[test]
    fn index_out_of_range() {
        let r = PolyRing::prime(3, &["x", "y"], OrderKind::Lex).unwrap();
        let basis = vec![r.parse("x").unwrap()];
        let cert = SpolyCertificate::new((0, 3), vec![]);
        assert_eq!(
            check_certificate(&basis, &cert),
            Err(Error::IndexOutOfRange { index: 3, len: 1 })
        );
    }

    #[test]
    fn text_round_trip() {
        let r = PolyRing::prime(3, &["r", "s", "x", "y"], OrderKind::Lex).unwrap();
        let certs = vec![
            SpolyCertificate::new((0, 1), vec![(6, r.from_int(-1))]),
            SpolyCertificate::new((0, 2), vec![(0, r.parse("x*y^3").unwrap()), (5, r.one())]),
            SpolyCertificate::new((3, 4), vec![]),
        ];
        let text = format_certificates(&certs);
        assert_eq!(text.lines().next().unwrap(), "S 0 1 : 6 -1");
        assert_eq!(parse_certificates(&text, &r).unwrap(), certs);
    }

    #[test]
    fn malformed_lines() {
        let r = PolyRing::prime(3, &["x"], OrderKind::Lex).unwrap();
        assert!(parse_certificates("S 0 1 6 -1\n", &r).is_err());
        assert!(parse_certificates("T 0 1 : 6 -1\n", &r).is_err());
        assert!(parse_certificates("S 0 1 : q -1\n", &r).is_err());
        assert!(parse_certificates("# comment\n\n", &r).unwrap().is_empty());
    }
}

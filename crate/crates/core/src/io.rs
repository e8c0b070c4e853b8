//! Line-oriented text formats for rings and ideals.
//!
//! A ring file holds `key = value` lines:
//!
//! ```text
//! # A = F_3[s, x, y]
//! characteristic = 3
//! parameters =
//! variables = s, x, y
//! order = lex
//! ```
//!
//! `parameters` names at most one transcendental (giving `F_p(t)`
//! coefficients) and may be empty or absent. `priority` optionally lists the
//! variables from highest to lowest rank. An ideal file holds an optional
//! `ring = <path>` header followed by one polynomial per line. In both
//! formats `#` starts a comment.

use std::fmt::Write;

use crate::coefficients::{Field, PrimeField, RationalFunctionField};
use crate::error::{Error, Result};
use crate::polyring::{
    CoefficientKind, MonomialOrder, OrderKind, PolyRing, Polynomial, RingExt, RingRef, RingSpec,
};

/// Content lines of a `#`-commented file with their byte offsets.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split_inclusive('\n').filter_map(move |raw| {
        let start = offset;
        offset += raw.len();
        let body = raw.split('#').next().unwrap_or("");
        let lead = body.len() - body.trim_start().len();
        let trimmed = body.trim();
        (!trimmed.is_empty()).then_some((start + lead, trimmed))
    })
}

fn list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

pub fn parse_ring_file(text: &str) -> Result<RingSpec> {
    let mut characteristic = None;
    let mut parameters = Vec::new();
    let mut variables = None;
    let mut order = None;
    let mut priority = None;
    for (pos, line) in content_lines(text) {
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
            pos,
            msg: "expected `key = value`".into(),
        })?;
        let value = value.trim();
        match key.trim() {
            "characteristic" => {
                let p: u32 = value.parse().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("bad characteristic `{value}`"),
                })?;
                characteristic = Some(p);
            }
            "parameters" => parameters = list(value),
            "variables" => variables = Some(list(value)),
            "order" => {
                order = Some(match value {
                    "lex" => OrderKind::Lex,
                    "grevlex" => OrderKind::Grevlex,
                    other => {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("unknown order `{other}`"),
                        })
                    }
                })
            }
            "priority" => priority = Some(list(value)),
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unknown key `{other}`"),
                })
            }
        }
    }
    let characteristic =
        characteristic.ok_or_else(|| Error::InvalidRing("missing `characteristic`".into()))?;
    let variables = variables.ok_or_else(|| Error::InvalidRing("missing `variables`".into()))?;
    let kind = order.ok_or_else(|| Error::InvalidRing("missing `order`".into()))?;
    let coefficients = match parameters.as_slice() {
        [] => CoefficientKind::PrimeField,
        [t] => CoefficientKind::RationalFunctions(t.clone()),
        _ => {
            return Err(Error::InvalidRing(
                "at most one parameter is supported".into(),
            ))
        }
    };
    let order = match priority {
        None => MonomialOrder::new(kind, variables.len()),
        Some(names) => {
            let idx = names
                .iter()
                .map(|n| {
                    variables
                        .iter()
                        .position(|v| v == n)
                        .ok_or_else(|| Error::UnknownVariable(n.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            MonomialOrder::with_priority(kind, idx)?
        }
    };
    RingSpec::new(characteristic, coefficients, variables, order)
}

pub fn format_ring_file(spec: &RingSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "characteristic = {}", spec.characteristic);
    let _ = writeln!(out, "parameters = {}", spec.parameter().unwrap_or(""));
    let _ = writeln!(out, "variables = {}", spec.variables.join(", "));
    let kind = match spec.order.kind() {
        OrderKind::Lex => "lex",
        OrderKind::Grevlex => "grevlex",
    };
    let _ = writeln!(out, "order = {kind}");
    let priority = spec.order.priority();
    if priority.iter().enumerate().any(|(i, &v)| i != v) {
        let names: Vec<&str> = priority
            .iter()
            .map(|&i| spec.variables[i].as_str())
            .collect();
        let _ = writeln!(out, "priority = {}", names.join(", "));
    }
    out
}

/// A ring over either kind of coefficient field.
#[derive(Clone, Debug)]
pub enum AnyRing {
    Prime(RingRef<PrimeField>),
    Rational(RingRef<RationalFunctionField>),
}

impl AnyRing {
    pub fn from_spec(spec: RingSpec) -> Result<Self> {
        let p = spec.characteristic as u64;
        Ok(match spec.coefficients.clone() {
            CoefficientKind::PrimeField => {
                AnyRing::Prime(PolyRing::from_spec(PrimeField::new(p)?, spec)?)
            }
            CoefficientKind::RationalFunctions(t) => AnyRing::Rational(PolyRing::from_spec(
                RationalFunctionField::new(p, &t)?,
                spec,
            )?),
        })
    }

    pub fn spec(&self) -> &RingSpec {
        match self {
            AnyRing::Prime(r) => r.spec(),
            AnyRing::Rational(r) => r.spec(),
        }
    }
}

/// An ideal file before its polynomials are parsed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    /// The `ring = <path>` header, if present.
    pub ring: Option<String>,
    /// Polynomial lines with their byte offsets in the file.
    pub lines: Vec<(usize, String)>,
}

impl IdealFile {
    pub fn parse(text: &str) -> IdealFile {
        let mut ring = None;
        let mut lines = Vec::new();
        for (i, (pos, line)) in content_lines(text).enumerate() {
            if i == 0 {
                if let Some((k, v)) = line.split_once('=') {
                    if k.trim() == "ring" {
                        ring = Some(v.trim().to_string());
                        continue;
                    }
                }
            }
            lines.push((pos, line.to_string()));
        }
        IdealFile { ring, lines }
    }

    /// Parses every line in `ring`; error positions are file offsets.
    pub fn polynomials<F: Field>(&self, ring: &RingRef<F>) -> Result<Vec<Polynomial<F>>> {
        self.lines
            .iter()
            .map(|(base, text)| {
                ring.parse(text).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse {
                        pos: base + pos,
                        msg,
                    },
                    other => other,
                })
            })
            .collect()
    }
}

pub fn format_ideal_file<F: Field>(
    ring_path: Option<&str>,
    generators: &[Polynomial<F>],
) -> String {
    let mut out = String::new();
    if let Some(path) = ring_path {
        let _ = writeln!(out, "ring = {path}");
    }
    for g in generators {
        let _ = writeln!(out, "{g}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const RING: &str = "# A\ncharacteristic = 3\nparameters =\nvariables = s, x, y\norder = lex\n";

    #[test]
    fn ring_file_round_trip() {
        let spec = parse_ring_file(RING).unwrap();
        assert_eq!(spec.variables, ["s", "x", "y"]);
        assert_eq!(spec.coefficients, CoefficientKind::PrimeField);
        let again = parse_ring_file(&format_ring_file(&spec)).unwrap();
        assert_eq!(again, spec);

        let text = "characteristic = 5\nparameters = t\nvariables = x, y, z\norder = grevlex\npriority = z, x, y\n";
        let spec = parse_ring_file(text).unwrap();
        assert_eq!(spec.order.priority(), &[2, 0, 1]);
        assert_eq!(format_ring_file(&spec), text);
        assert!(matches!(
            AnyRing::from_spec(spec).unwrap(),
            AnyRing::Rational(_)
        ));
    }

    #[test]
    fn ring_file_errors() {
        assert!(matches!(
            parse_ring_file("characteristic 3\n"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_ring_file("characteristic = 3\n  colour = red\n"),
            Err(Error::Parse { pos: 21, .. })
        ));
        assert!(matches!(
            parse_ring_file("characteristic = 4\nvariables = x\norder = lex"),
            Err(Error::InvalidRing(_))
        ));
        assert!(matches!(
            parse_ring_file("characteristic = 3\norder = lex"),
            Err(Error::InvalidRing(_))
        ));
        assert!(matches!(
            parse_ring_file("characteristic = 3\nparameters = a, b\nvariables = x\norder = lex"),
            Err(Error::InvalidRing(_))
        ));
        assert!(matches!(
            parse_ring_file("characteristic = 3\nvariables = x\norder = lex\npriority = y"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn ideal_file() {
        let text = "ring = ring.txt\n# generators\nx^9\n\ny^9   # second\nx^3*y - s*x^2*y^2 - x*y^3 + s*x*y^3\n";
        let file = IdealFile::parse(text);
        assert_eq!(file.ring.as_deref(), Some("ring.txt"));
        assert_eq!(file.lines.len(), 3);
        let AnyRing::Prime(ring) = AnyRing::from_spec(parse_ring_file(RING).unwrap()).unwrap()
        else {
            panic!("prime ring expected")
        };
        let gens = file.polynomials(&ring).unwrap();
        assert_eq!(gens[1].to_string(), "y^9");
        let round = IdealFile::parse(&format_ideal_file(Some("ring.txt"), &gens));
        assert_eq!(round.polynomials(&ring).unwrap(), gens);

        let bad = IdealFile::parse("x\nx + * y\n");
        match bad.polynomials(&ring) {
            Err(Error::Parse { pos, .. }) => assert!((2..10).contains(&pos)),
            other => panic!("{other:?}"),
        }
        assert!(IdealFile::parse("# empty\n").lines.is_empty());
    }
}

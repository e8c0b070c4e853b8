//! Recursive-descent parser for the polynomial grammar:
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*' | '/' | <juxtaposition>) factor)*
//! factor := '-' factor | atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Integers are reduced modulo the characteristic. The coefficient parameter
//! of an `F_p(s)` ring may appear wherever a variable can; division is only
//! allowed by nonzero constants of the ring (elements of the coefficient
//! field).

use super::{is_identifier, Monomial, Polynomial, RingExt, RingRef};
use crate::coefficients::Field;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((i, Tok::Plus)),
            '-' => out.push((i, Tok::Minus)),
            '*' => out.push((i, Tok::Star)),
            '/' => out.push((i, Tok::Slash)),
            '^' => out.push((i, Tok::Caret)),
            '(' => out.push((i, Tok::LParen)),
            ')' => out.push((i, Tok::RParen)),
            _ if c.is_ascii_digit() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].to_string())));
                continue;
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() {
                    let d = bytes[i] as char;
                    if d.is_ascii_alphanumeric() || d == '_' || d == '\'' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                let name = &text[start..i];
                debug_assert!(is_identifier(name));
                out.push((start, Tok::Ident(name.to_string())));
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character `{c}`"),
                });
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a RingRef<F>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    let d = self.factor()?;
                    if !d.is_constant() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division by a non-constant polynomial".into(),
                        });
                    }
                    let c = d.constant_coeff();
                    let inv = self.ring.field().inv(&c).map_err(|_| Error::Parse {
                        pos: at,
                        msg: "division by zero".into(),
                    })?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let exp = match self.peek() {
                Some(Tok::Num(s)) => match s.parse::<u32>() {
                    Ok(e) => e,
                    Err(_) => return self.error("exponent out of range"),
                },
                _ => return self.error("expected an exponent"),
            };
            self.pos += 1;
            if base.is_monomial() {
                let t = base.leading_term()?;
                let c = field_pow(self.ring.field(), &t.coeff, exp);
                return Ok(Polynomial::term(self.ring.clone(), c, t.mono.pow(exp)?));
            }
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        let Some((at, tok)) = self.toks.get(self.pos).cloned() else {
            return self.error("unexpected end of input");
        };
        match tok {
            Tok::Num(digits) => {
                self.pos += 1;
                let p = self.ring.characteristic() as u64;
                let mut v = 0u64;
                for d in digits.bytes() {
                    v = (v * 10 + (d - b'0') as u64) % p;
                }
                Ok(self.ring.from_int(v as i64))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                if let Ok(i) = self.ring.var_index(&name) {
                    return Ok(self.ring.var_at(i));
                }
                if self.ring.field().parameter() == Some(name.as_str()) {
                    let s = self
                        .ring
                        .field()
                        .parameter_elem()
                        .expect("parameter element");
                    return Ok(Polynomial::term(
                        self.ring.clone(),
                        s,
                        Monomial::one(self.ring.nvars()),
                    ));
                }
                Err(Error::UnknownVariable(name))
            }
            Tok::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(Error::Parse {
                pos: at,
                msg: "expected a number, variable or `(`".into(),
            }),
        }
    }
}

fn field_pow<F: Field>(field: &F, a: &F::Elem, mut e: u32) -> F::Elem {
    let mut base = a.clone();
    let mut acc = field.one();
    while e > 0 {
        if e & 1 == 1 {
            acc = field.mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = field.mul(&base, &base);
        }
    }
    acc
}

pub(super) fn parse_poly<F: Field>(text: &str, ring: &RingRef<F>) -> Result<Polynomial<F>> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.error("unexpected trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::polyring::{OrderKind, PolyRing, RingExt};

    #[test]
    fn parses_g_in_expanded_and_factored_form() {
        let r = PolyRing::prime(3, &["s", "x", "y"], OrderKind::Lex).unwrap();
        let expanded = r.parse("x^3*y - s*x^2*y^2 + s*x*y^3 - x*y^3").unwrap();
        let factored = r.parse("x y (x - y)(x + y - s y)").unwrap();
        assert_eq!(expanded, factored);
        assert_eq!(expanded.len(), 4);
    }

    #[test]
    fn zero_terms_vanish() {
        let r = PolyRing::prime(3, &["s", "x", "y"], OrderKind::Lex).unwrap();
        assert_eq!(r.parse("x + 0*y").unwrap(), r.var("x").unwrap());
        assert_eq!(r.parse("x + 3*y").unwrap(), r.var("x").unwrap());
    }

    #[test]
    fn errors() {
        let r = PolyRing::prime(3, &["s", "x", "y"], OrderKind::Lex).unwrap();
        assert_eq!(r.parse("x + z"), Err(Error::UnknownVariable("z".into())));
        assert!(matches!(
            r.parse("x + * y"),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(r.parse("(x + y"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x / y"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x / 3"), Err(Error::Parse { .. })));
        assert!(matches!(r.parse("x $ y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(r.parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn large_integers_reduce() {
        let r = PolyRing::prime(7, &["x"], OrderKind::Lex).unwrap();
        assert_eq!(
            r.parse("123456789012345678901234567890").unwrap(),
            r.from_int((123456789012345678901234567890u128 % 7) as i64)
        );
    }

    #[test]
    fn parameter_lifts_into_coefficients() {
        let r = PolyRing::rational(3, "s", &["x", "y"], OrderKind::Lex).unwrap();
        let g = r.parse("x*y*(x - y)*(x + y - s*y)").unwrap();
        // x^3*y - s*x^2*y^2 + (s - 1)*x*y^3 once s is a coefficient
        assert_eq!(g.len(), 3);
        assert_eq!(g.to_string(), "x^3*y - s*x^2*y^2 + (s - 1)*x*y^3");
        let h = r.parse("x/(s + 1) + s/s*y").unwrap();
        assert_eq!(h.to_string(), "(1/(s + 1))*x + y");
        assert_eq!(r.parse(&h.to_string()).unwrap(), h);
        assert!(matches!(r.parse("x/(s - s)"), Err(Error::Parse { .. })));
    }
}

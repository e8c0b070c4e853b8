use std::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OrderKind {
    Lex,
    Grevlex,
}

/// A monomial order together with a variable priority: `priority[0]` is the
/// index of the largest variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<usize>,
    identity: bool,
}

impl MonomialOrder {
    /// Order with variables ranked in their listed order.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            priority: (0..nvars).collect(),
            identity: true,
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &i in &priority {
            if i >= priority.len() || seen[i] {
                return Err(Error::InvalidRing(format!(
                    "variable priority {priority:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        let identity = priority.iter().enumerate().all(|(k, &i)| k == i);
        Ok(MonomialOrder {
            kind,
            priority,
            identity,
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => {
                if self.identity {
                    ea.cmp(eb)
                } else {
                    for &i in &self.priority {
                        match ea[i].cmp(&eb[i]) {
                            Ordering::Equal => {}
                            o => return o,
                        }
                    }
                    Ordering::Equal
                }
            }
            OrderKind::Grevlex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    for &i in self.priority.iter().rev() {
                        match ea[i].cmp(&eb[i]) {
                            Ordering::Equal => {}
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
        }
    }
}

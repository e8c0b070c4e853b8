use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Exponents = SmallVec<[u32; 6]>;

/// Exponent vector aligned with the ring's variable list. The total degree is
/// cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn variable(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = exp;
        m.degree = exp;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        let mut degree = 0u32;
        for &e in exps {
            degree = degree.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial {
            exps: SmallVec::from_slice(exps),
            degree,
        })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        let degree = self
            .degree
            .checked_add(other.degree)
            .ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    /// Product; panics on exponent overflow.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let mut exps = Exponents::with_capacity(self.exps.len());
        for a in &self.exps {
            exps.push(a.checked_mul(k).ok_or(Error::ExponentOverflow)?);
        }
        let degree = self.degree.checked_mul(k).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// True iff `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `self / divisor`; fails if `divisor` does not divide `self`.
    pub fn quotient(&self, divisor: &Monomial) -> Result<Monomial> {
        if !divisor.divides(self) {
            return Err(Error::NotDivisible);
        }
        Ok(self.quotient_unchecked(divisor))
    }

    #[inline]
    pub(crate) fn quotient_unchecked(&self, divisor: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&divisor.exps)
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            exps,
            degree: self.degree - divisor.degree,
        }
    }

    /// Index of the single variable if this is `x_i^e` with `e >= 1`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub(crate) fn remap(&self, nvars: usize, mapping: &[Option<usize>]) -> Option<Monomial> {
        let mut exps = Exponents::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            match mapping[i] {
                Some(j) => exps[j] = e,
                None if e != 0 => return None,
                None => {}
            }
        }
        Some(Monomial {
            exps,
            degree: self.degree,
        })
    }

    /// Renders with the given names, visiting variables in `visit` order.
    pub fn format(&self, names: &[String], visit: &[usize]) -> String {
        let mut parts = Vec::new();
        for &i in visit {
            match self.exps[i] {
                0 => {}
                1 => parts.push(names[i].clone()),
                e => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{CoeffDisplay, Field};
use crate::error::{Error, Result};

/// Largest supported modulus (exclusive). Products of two residues fit in a
/// `u64` without overflow.
pub const MAX_MODULUS: u64 = 1 << 31;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `F_p`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeFieldElement {
    residue: u32,
    modulus: u32,
}

impl PrimeFieldElement {
    /// Reduces `v` modulo `modulus`. The modulus is assumed to be a validated
    /// prime (see [`PrimeField::new`]).
    pub fn new(v: i64, modulus: u32) -> Self {
        let r = v.rem_euclid(modulus as i64) as u32;
        PrimeFieldElement {
            residue: r,
            modulus,
        }
    }

    #[inline]
    pub(crate) fn from_residue(residue: u32, modulus: u32) -> Self {
        debug_assert!(residue < modulus);
        PrimeFieldElement { residue, modulus }
    }

    pub fn residue(self) -> u32 {
        self.residue
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    fn check(self, other: Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::IncompatibleField(format!(
                "F_{} and F_{}",
                self.modulus, other.modulus
            )))
        }
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    fn add_unchecked(self, other: Self) -> Self {
        let s = self.residue as u64 + other.residue as u64;
        let p = self.modulus as u64;
        Self::from_residue(if s >= p { s - p } else { s } as u32, self.modulus)
    }

    #[inline]
    fn sub_unchecked(self, other: Self) -> Self {
        let r = if self.residue >= other.residue {
            self.residue - other.residue
        } else {
            self.residue + (self.modulus - other.residue)
        };
        Self::from_residue(r, self.modulus)
    }

    #[inline]
    fn mul_unchecked(self, other: Self) -> Self {
        let r = (self.residue as u64 * other.residue as u64) % self.modulus as u64;
        Self::from_residue(r as u32, self.modulus)
    }

    pub fn inv(self) -> Result<Self> {
        if self.residue == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut a, mut b) = (self.residue as i64, self.modulus as i64);
        let (mut x0, mut x1) = (1i64, 0i64);
        while b != 0 {
            let t = a / b;
            (a, b) = (b, a - t * b);
            (x0, x1) = (x1, x0 - t * x1);
        }
        debug_assert_eq!(a, 1);
        Ok(Self::new(x0, self.modulus))
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::from_residue(1 % self.modulus, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(base);
            }
            base = base.mul_unchecked(base);
            e >>= 1;
        }
        acc
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(self) -> i64 {
        if self.residue as u64 * 2 > self.modulus as u64 {
            self.residue as i64 - self.modulus as i64
        } else {
            self.residue as i64
        }
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.signed())
    }
}

// The operator impls panic on mixed moduli; use the `checked_*` methods when
// the operands are not known to share a field.
impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("mixed moduli")
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("mixed moduli")
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("mixed moduli")
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        if self.residue == 0 {
            self
        } else {
            Self::from_residue(self.modulus - self.residue, self.modulus)
        }
    }
}

/// The prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidRing(format!("modulus {p} is not below 2^31")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn elem(&self, v: i64) -> PrimeFieldElement {
        PrimeFieldElement::new(v, self.p)
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElement;

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn parameter(&self) -> Option<&str> {
        None
    }

    fn parameter_elem(&self) -> Option<PrimeFieldElement> {
        None
    }

    fn zero(&self) -> PrimeFieldElement {
        PrimeFieldElement::from_residue(0, self.p)
    }

    fn one(&self) -> PrimeFieldElement {
        PrimeFieldElement::from_residue(1, self.p)
    }

    fn from_i64(&self, v: i64) -> PrimeFieldElement {
        self.elem(v)
    }

    #[inline]
    fn is_zero(&self, a: &PrimeFieldElement) -> bool {
        a.residue == 0
    }

    #[inline]
    fn is_one(&self, a: &PrimeFieldElement) -> bool {
        a.residue == 1
    }

    #[inline]
    fn add(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        debug_assert_eq!(a.modulus, b.modulus);
        a.add_unchecked(*b)
    }

    #[inline]
    fn sub(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        debug_assert_eq!(a.modulus, b.modulus);
        a.sub_unchecked(*b)
    }

    #[inline]
    fn mul(&self, a: &PrimeFieldElement, b: &PrimeFieldElement) -> PrimeFieldElement {
        debug_assert_eq!(a.modulus, b.modulus);
        a.mul_unchecked(*b)
    }

    #[inline]
    fn neg(&self, a: &PrimeFieldElement) -> PrimeFieldElement {
        -*a
    }

    fn inv(&self, a: &PrimeFieldElement) -> Result<PrimeFieldElement> {
        a.inv()
    }

    fn frobenius(&self, a: &PrimeFieldElement, _q: u64) -> PrimeFieldElement {
        // c^p = c in F_p.
        *a
    }

    fn format_coeff(&self, a: &PrimeFieldElement) -> CoeffDisplay {
        let v = a.signed();
        CoeffDisplay {
            negative: v < 0,
            magnitude: v.unsigned_abs().to_string(),
            unit: v.unsigned_abs() == 1,
            compound: false,
        }
    }
}

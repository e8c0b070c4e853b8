use std::sync::Arc;

use super::{unipoly_gcd, CoeffDisplay, Field, PrimeFieldElement, UnivariatePolynomial};
use crate::error::{Error, Result};

/// An element of `F_p(s)`, stored as a reduced fraction with monic
/// denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: UnivariatePolynomial,
    den: UnivariatePolynomial,
}

impl RationalFunction {
    /// Builds `num/den` in canonical form.
    pub fn new(num: UnivariatePolynomial, den: UnivariatePolynomial) -> Result<Self> {
        if num.modulus() != den.modulus() {
            return Err(Error::IncompatibleField(format!(
                "F_{}(s) and F_{}(s)",
                num.modulus(),
                den.modulus()
            )));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(num: UnivariatePolynomial) -> Self {
        let den = UnivariatePolynomial::one(num.modulus());
        RationalFunction { num, den }
    }

    pub fn constant(c: PrimeFieldElement) -> Self {
        Self::from_poly(UnivariatePolynomial::constant(c))
    }

    fn normalize(num: UnivariatePolynomial, den: UnivariatePolynomial) -> Self {
        let p = num.modulus();
        if num.is_zero() {
            return RationalFunction {
                num,
                den: UnivariatePolynomial::one(p),
            };
        }
        let g = unipoly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coefficient().expect("nonzero denominator");
        if lc.residue() != 1 {
            let inv = lc.inv().expect("nonzero leading coefficient");
            num = num.scale(inv);
            den = den.scale(inv);
        }
        RationalFunction { num, den }
    }

    pub fn numerator(&self) -> &UnivariatePolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &UnivariatePolynomial {
        &self.den
    }

    pub fn modulus(&self) -> u32 {
        self.num.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus() == other.modulus() {
            Ok(())
        } else {
            Err(Error::IncompatibleField(format!(
                "F_{}(s) and F_{}(s)",
                self.modulus(),
                other.modulus()
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.den == other.den {
            return Ok(Self::normalize(self.num.add(&other.num), self.den.clone()));
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Ok(Self::normalize(num, self.den.mul(&other.den)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::from_poly(UnivariatePolynomial::zero(self.modulus())));
        }
        // Cross-cancel before multiplying to keep degrees small.
        let g1 = unipoly_gcd(&self.num, &other.den);
        let g2 = unipoly_gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        Ok(Self::normalize(n1.mul(&n2), d1.mul(&d2)))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }
}

/// The rational function field `F_p(s)` in one named parameter.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunctionField {
    p: u32,
    param: Arc<str>,
}

impl RationalFunctionField {
    pub fn new(p: u64, param: &str) -> Result<Self> {
        let base = super::PrimeField::new(p)?;
        Ok(RationalFunctionField {
            p: base.modulus(),
            param: Arc::from(param),
        })
    }

    /// Builds `num/den` from integer coefficient lists (lowest degree first).
    pub fn fraction(&self, num: &[i64], den: &[i64]) -> Result<RationalFunction> {
        RationalFunction::new(
            UnivariatePolynomial::from_coeffs(self.p, num),
            UnivariatePolynomial::from_coeffs(self.p, den),
        )
    }

    pub fn poly(&self, coeffs: &[i64]) -> RationalFunction {
        RationalFunction::from_poly(UnivariatePolynomial::from_coeffs(self.p, coeffs))
    }
}

impl Field for RationalFunctionField {
    type Elem = RationalFunction;

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn parameter(&self) -> Option<&str> {
        Some(&self.param)
    }

    fn parameter_elem(&self) -> Option<RationalFunction> {
        Some(RationalFunction::from_poly(UnivariatePolynomial::variable(
            self.p,
        )))
    }

    fn zero(&self) -> RationalFunction {
        RationalFunction::from_poly(UnivariatePolynomial::zero(self.p))
    }

    fn one(&self) -> RationalFunction {
        RationalFunction::from_poly(UnivariatePolynomial::one(self.p))
    }

    fn from_i64(&self, v: i64) -> RationalFunction {
        self.poly(&[v])
    }

    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &RationalFunction) -> bool {
        a.num.is_one() && a.den.is_one()
    }

    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.checked_add(b).expect("mixed moduli")
    }

    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.checked_sub(b).expect("mixed moduli")
    }

    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.checked_mul(b).expect("mixed moduli")
    }

    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        a.neg()
    }

    fn inv(&self, a: &RationalFunction) -> Result<RationalFunction> {
        a.inv()
    }

    fn frobenius(&self, a: &RationalFunction, q: u64) -> RationalFunction {
        // a(s)^q = a(s^q) over F_p; coprimality and monicity are preserved.
        let k = q as usize;
        RationalFunction {
            num: a.num.inflate(k),
            den: a.den.inflate(k),
        }
    }

    fn format_coeff(&self, a: &RationalFunction) -> CoeffDisplay {
        let var = &*self.param;
        if a.den.is_one() {
            if a.num.term_count() == 1 {
                let deg = a.num.degree().expect("nonzero");
                let c = a.num.coefficient(deg).signed();
                let mag = c.unsigned_abs();
                let magnitude = match (deg, mag) {
                    (0, _) => mag.to_string(),
                    (1, 1) => var.to_string(),
                    (_, 1) => format!("{var}^{deg}"),
                    (1, _) => format!("{mag}*{var}"),
                    _ => format!("{mag}*{var}^{deg}"),
                };
                return CoeffDisplay {
                    negative: c < 0,
                    unit: deg == 0 && mag == 1,
                    magnitude,
                    compound: false,
                };
            }
            return CoeffDisplay {
                negative: false,
                magnitude: a.num.format(var),
                unit: false,
                compound: true,
            };
        }
        let wrap = |u: &UnivariatePolynomial| {
            if u.term_count() > 1 {
                format!("({})", u.format(var))
            } else {
                u.format(var)
            }
        };
        CoeffDisplay {
            negative: false,
            magnitude: format!("{}/{}", wrap(&a.num), wrap(&a.den)),
            unit: false,
            compound: true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let k = RationalFunctionField::new(3, "s").unwrap();
        let a = k.fraction(&[0, 1], &[1, 1]).unwrap();
        let b = k.fraction(&[1, 1], &[0, 1]).unwrap();
        assert_eq!(k.mul(&a, &b), k.one());
    }

    #[test]
    fn normalizes_common_factor() {
        // (s^2 + 2s)/(s^2 + s) = (s + 2)/(s + 1) in F_3(s)
        let k = RationalFunctionField::new(3, "s").unwrap();
        let a = k.fraction(&[0, 2, 1], &[0, 1, 1]).unwrap();
        assert_eq!(
            a.numerator(),
            &UnivariatePolynomial::from_coeffs(3, &[2, 1])
        );
        assert_eq!(
            a.denominator(),
            &UnivariatePolynomial::from_coeffs(3, &[1, 1])
        );
    }

    #[test]
    fn denominator_is_monic() {
        let k = RationalFunctionField::new(5, "s").unwrap();
        let a = k.fraction(&[1], &[0, 2]).unwrap();
        assert!(a.denominator().leading_coefficient().unwrap().residue() == 1);
        assert_eq!(a.numerator(), &UnivariatePolynomial::from_coeffs(5, &[3]));
    }

    #[test]
    fn zero_is_canonical() {
        let k = RationalFunctionField::new(5, "s").unwrap();
        let z = k.fraction(&[], &[1, 1]).unwrap();
        assert_eq!(z, k.zero());
        assert!(k.fraction(&[1], &[]).is_err());
        assert_eq!(k.inv(&k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = RationalFunctionField::new(3, "s").unwrap().one();
        let b = RationalFunctionField::new(5, "s").unwrap().one();
        assert!(matches!(
            a.checked_add(&b),
            Err(Error::IncompatibleField(_))
        ));
    }

    #[test]
    fn frobenius_matches_repeated_multiplication() {
        let k = RationalFunctionField::new(3, "s").unwrap();
        let a = k.fraction(&[1, 2], &[2, 0, 1]).unwrap();
        let cube = k.mul(&k.mul(&a, &a), &a);
        assert_eq!(k.frobenius(&a, 3), cube);
    }

    #[test]
    fn formatting() {
        let k = RationalFunctionField::new(3, "s").unwrap();
        let d = k.format_coeff(&k.poly(&[0, -1]));
        assert!(d.negative && d.magnitude == "s" && !d.compound);
        let d = k.format_coeff(&k.fraction(&[0, 1], &[1, 1]).unwrap());
        assert_eq!(d.magnitude, "s/(s + 1)");
    }
}

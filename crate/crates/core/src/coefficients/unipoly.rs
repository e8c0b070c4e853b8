use super::PrimeFieldElement;
use crate::error::{Error, Result};

/// Dense univariate polynomial over `F_p`, coefficients indexed by degree.
///
/// The zero polynomial is the empty coefficient list; otherwise the leading
/// coefficient is nonzero. The variable name is owned by the enclosing field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UnivariatePolynomial {
    modulus: u32,
    coeffs: Vec<u32>,
}

#[inline]
fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

#[inline]
fn addmod(a: u32, b: u32, p: u32) -> u32 {
    let s = a as u64 + b as u64;
    (if s >= p as u64 { s - p as u64 } else { s }) as u32
}

#[inline]
fn submod(a: u32, b: u32, p: u32) -> u32 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

fn invmod(a: u32, p: u32) -> u32 {
    PrimeFieldElement::from_residue(a, p)
        .inv()
        .expect("inverse of a nonzero residue")
        .residue()
}

impl UnivariatePolynomial {
    pub fn zero(modulus: u32) -> Self {
        UnivariatePolynomial {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: PrimeFieldElement) -> Self {
        Self::from_residues(c.modulus(), vec![c.residue()])
    }

    pub fn one(modulus: u32) -> Self {
        Self::from_residues(modulus, vec![1 % modulus])
    }

    /// `x` itself.
    pub fn variable(modulus: u32) -> Self {
        Self::from_residues(modulus, vec![0, 1])
    }

    /// Builds a polynomial from signed integer coefficients (lowest degree
    /// first), reducing each modulo `modulus`.
    pub fn from_coeffs(modulus: u32, coeffs: &[i64]) -> Self {
        let c = coeffs
            .iter()
            .map(|&v| v.rem_euclid(modulus as i64) as u32)
            .collect();
        Self::from_residues(modulus, c)
    }

    fn from_residues(modulus: u32, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UnivariatePolynomial { modulus, coeffs }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> PrimeFieldElement {
        PrimeFieldElement::from_residue(self.coeffs.get(i).copied().unwrap_or(0), self.modulus)
    }

    pub fn leading_coefficient(&self) -> Option<PrimeFieldElement> {
        self.coeffs
            .last()
            .map(|&c| PrimeFieldElement::from_residue(c, self.modulus))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::IncompatibleField(format!(
                "F_{}[s] and F_{}[s]",
                self.modulus, other.modulus
            )))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert!(self.check(other).is_ok());
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                addmod(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                    p,
                )
            })
            .collect();
        Self::from_residues(p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert!(self.check(other).is_ok());
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                submod(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                    p,
                )
            })
            .collect();
        Self::from_residues(p, c)
    }

    pub fn neg(&self) -> Self {
        let p = self.modulus;
        let c = self.coeffs.iter().map(|&a| submod(0, a, p)).collect();
        Self::from_residues(p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.check(other).is_ok());
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.modulus);
        }
        let p = self.modulus;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = addmod(c[i + j], mulmod(a, b, p), p);
            }
        }
        Self::from_residues(p, c)
    }

    pub fn scale(&self, k: PrimeFieldElement) -> Self {
        let p = self.modulus;
        let c = self
            .coeffs
            .iter()
            .map(|&a| mulmod(a, k.residue(), p))
            .collect();
        Self::from_residues(p, c)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&1) => self.clone(),
            Some(&lc) => {
                let inv = invmod(lc, self.modulus);
                self.scale(PrimeFieldElement::from_residue(inv, self.modulus))
            }
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let dlen = divisor.coeffs.len();
        if dlen == 0 {
            return Err(Error::DivisionByZero);
        }
        let p = self.modulus;
        if self.coeffs.len() < dlen {
            return Ok((Self::zero(p), self.clone()));
        }
        let lc_inv = invmod(divisor.coeffs[dlen - 1], p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let c = mulmod(rem[k + dlen - 1], lc_inv, p);
            quot[k] = c;
            if c != 0 {
                for (j, &d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = submod(rem[k + j], mulmod(c, d, p), p);
                }
            }
        }
        rem.truncate(dlen - 1);
        Ok((Self::from_residues(p, quot), Self::from_residues(p, rem)))
    }

    /// Exact quotient; fails with `NotDivisible` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    }

    /// Substitutes `s -> s^k`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.coeffs.len() <= 1 || k == 1 {
            return self.clone();
        }
        let mut c = vec![0u32; (self.coeffs.len() - 1) * k + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i * k] = a;
        }
        Self::from_residues(self.modulus, c)
    }

    /// Renders with the given variable name, highest degree first, using
    /// symmetric representatives.
    pub fn format(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let v = PrimeFieldElement::from_residue(c, self.modulus).signed();
            let mag = v.unsigned_abs();
            if out.is_empty() {
                if v < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if v < 0 { " - " } else { " + " });
            }
            match (i, mag) {
                (0, _) => out.push_str(&mag.to_string()),
                (_, 1) => {}
                _ => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

/// Monic greatest common divisor; `gcd(0, 0) = 0`.
pub fn unipoly_gcd(a: &UnivariatePolynomial, b: &UnivariatePolynomial) -> UnivariatePolynomial {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = x
            .div_rem(&y)
            .expect("nonzero divisor over a common modulus");
        x = y;
        y = r;
    }
    x.monic()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(p: u32, c: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::from_coeffs(p, c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(s^2 - 1, s - 1) = s - 1 over F_5
        assert_eq!(
            unipoly_gcd(&up(5, &[-1, 0, 1]), &up(5, &[-1, 1])),
            up(5, &[-1, 1])
        );
        // gcd(0, 2s) = s over F_5
        assert_eq!(unipoly_gcd(&up(5, &[]), &up(5, &[0, 2])), up(5, &[0, 1]));
        // gcd(s^3, s^2) = s^2 over F_3
        assert_eq!(
            unipoly_gcd(&up(3, &[0, 0, 0, 1]), &up(3, &[0, 0, 1])),
            up(3, &[0, 0, 1])
        );
        assert!(unipoly_gcd(&up(3, &[]), &up(3, &[])).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = up(7, &[3, 1, 4, 1, 5]);
        let b = up(7, &[2, 6, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn division_by_zero_polynomial() {
        assert_eq!(up(5, &[1]).div_rem(&up(5, &[])), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_moduli_rejected() {
        assert!(matches!(
            up(5, &[1]).div_rem(&up(7, &[1])),
            Err(Error::IncompatibleField(_))
        ));
    }

    #[test]
    fn format_uses_signed_coefficients() {
        assert_eq!(up(3, &[2, 1]).format("s"), "s - 1");
        assert_eq!(up(5, &[0, 0, 2]).format("s"), "2*s^2");
    }
}

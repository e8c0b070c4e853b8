use crate::coefficients::Field;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial};

/// The multipliers `(lcm / lm f, lcm / lm g)` used by [`s_polynomial`].
pub(crate) fn spoly_multipliers<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
) -> Result<(Monomial, Monomial)> {
    let (a, b) = (f.leading_monomial()?, g.leading_monomial()?);
    let l = a.lcm(b);
    Ok((l.quotient_unchecked(a), l.quotient_unchecked(b)))
}

/// `S(f, g) = (L / lt f) f - (L / lt g) g` with `L = lcm(lm f, lm g)`,
/// computed after scaling both inputs to leading coefficient one.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    if !PolyRing::same(f.ring(), g.ring()) {
        return Err(Error::IncompatibleRing);
    }
    let (mf, mg) = spoly_multipliers(f, g)?;
    let field = f.field();
    let cf = field.inv(f.leading_coeff()?)?;
    let cg = field.inv(g.leading_coeff()?)?;
    Ok(f.mul_term(&cf, &mf).sub_mul_term(&cg, &mg, g))
}

//! Sparse multivariate polynomials over a [`Field`], monomial orders, and the
//! text grammar used by files and the command line.

mod monomial;
mod order;
mod parse;
mod poly;

use std::collections::HashMap;
use std::sync::Arc;

pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{is_power_of, Polynomial, Term};

use crate::coefficients::{Field, PrimeField, RationalFunctionField};
use crate::error::{Error, Result};

/// How the coefficient field is built from the characteristic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CoefficientKind {
    PrimeField,
    /// `F_p(param)`.
    RationalFunctions(String),
}

/// Field-independent description of a polynomial ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingSpec {
    pub characteristic: u32,
    pub coefficients: CoefficientKind,
    pub variables: Vec<String>,
    pub order: MonomialOrder,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl RingSpec {
    pub fn new(
        characteristic: u32,
        coefficients: CoefficientKind,
        variables: Vec<String>,
        order: MonomialOrder,
    ) -> Result<Self> {
        if !crate::coefficients::is_prime(characteristic as u64) {
            return Err(Error::InvalidRing(format!("{characteristic} is not prime")));
        }
        if order.nvars() != variables.len() {
            return Err(Error::InvalidRing(format!(
                "order ranks {} variables but the ring has {}",
                order.nvars(),
                variables.len()
            )));
        }
        let mut seen = HashMap::new();
        for v in &variables {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!(
                    "`{v}` is not a valid variable name"
                )));
            }
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let CoefficientKind::RationalFunctions(param) = &coefficients {
            if !is_identifier(param) {
                return Err(Error::InvalidRing(format!(
                    "`{param}` is not a valid parameter name"
                )));
            }
            if seen.contains_key(param.as_str()) {
                return Err(Error::InvalidRing(format!(
                    "parameter `{param}` is also a ring variable"
                )));
            }
        }
        Ok(RingSpec {
            characteristic,
            coefficients,
            variables,
            order,
        })
    }

    pub fn parameter(&self) -> Option<&str> {
        match &self.coefficients {
            CoefficientKind::PrimeField => None,
            CoefficientKind::RationalFunctions(p) => Some(p),
        }
    }
}

/// A polynomial ring: a [`RingSpec`] together with its coefficient field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyRing<F: Field> {
    spec: RingSpec,
    field: F,
}

pub type RingRef<F> = Arc<PolyRing<F>>;

impl PolyRing<PrimeField> {
    /// `F_p[vars]` ordered by `kind` with variables ranked as listed.
    pub fn prime(p: u64, vars: &[&str], kind: OrderKind) -> Result<RingRef<PrimeField>> {
        PolyRing::new(
            PrimeField::new(p)?,
            vars,
            MonomialOrder::new(kind, vars.len()),
        )
    }
}

impl PolyRing<RationalFunctionField> {
    /// `F_p(param)[vars]` ordered by `kind` with variables ranked as listed.
    pub fn rational(
        p: u64,
        param: &str,
        vars: &[&str],
        kind: OrderKind,
    ) -> Result<RingRef<RationalFunctionField>> {
        PolyRing::new(
            RationalFunctionField::new(p, param)?,
            vars,
            MonomialOrder::new(kind, vars.len()),
        )
    }
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: &[&str], order: MonomialOrder) -> Result<RingRef<F>> {
        let coefficients = match field.parameter() {
            None => CoefficientKind::PrimeField,
            Some(p) => CoefficientKind::RationalFunctions(p.to_string()),
        };
        let spec = RingSpec::new(
            field.characteristic(),
            coefficients,
            vars.iter().map(|s| s.to_string()).collect(),
            order,
        )?;
        Ok(Arc::new(PolyRing { spec, field }))
    }

    pub fn from_spec(field: F, spec: RingSpec) -> Result<RingRef<F>> {
        if spec.characteristic != field.characteristic() || spec.parameter() != field.parameter() {
            return Err(Error::InvalidRing(
                "ring spec does not match the coefficient field".into(),
            ));
        }
        let vars: Vec<&str> = spec.variables.iter().map(|s| s.as_str()).collect();
        PolyRing::new(field, &vars, spec.order.clone())
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.spec.order
    }

    pub fn variables(&self) -> &[String] {
        &self.spec.variables
    }

    pub fn nvars(&self) -> usize {
        self.spec.variables.len()
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.characteristic
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.spec
            .variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn same(a: &RingRef<F>, b: &RingRef<F>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }

    /// A name not used by any variable or the coefficient parameter:
    /// `base`, `base'`, `base''`, ...
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.spec.variables.contains(&name) || self.spec.parameter() == Some(name.as_str()) {
            name.push('\'');
        }
        name
    }

    /// This ring with one fresh variable adjoined at highest priority and the
    /// order switched to lex (remaining variables keep their relative
    /// priority). Returns the new ring; the new variable has index 0 and old
    /// variable `i` moves to `i + 1`.
    pub fn with_elimination_variable(&self, base: &str) -> Result<RingRef<F>> {
        let name = self.fresh_name(base);
        let mut vars: Vec<&str> = vec![name.as_str()];
        vars.extend(self.spec.variables.iter().map(|s| s.as_str()));
        let mut priority = vec![0];
        priority.extend(self.spec.order.priority().iter().map(|i| i + 1));
        PolyRing::new(
            self.field.clone(),
            &vars,
            MonomialOrder::with_priority(OrderKind::Lex, priority)?,
        )
    }

    /// The ring on the variables at `keep` (indices into this ring), keeping
    /// the order kind and relative priority.
    pub fn subring(&self, keep: &[usize]) -> Result<RingRef<F>> {
        let vars: Vec<&str> = keep
            .iter()
            .map(|&i| self.spec.variables[i].as_str())
            .collect();
        let priority: Vec<usize> = self
            .spec
            .order
            .priority()
            .iter()
            .filter_map(|i| keep.iter().position(|k| k == i))
            .collect();
        PolyRing::new(
            self.field.clone(),
            &vars,
            MonomialOrder::with_priority(self.spec.order.kind(), priority)?,
        )
    }

    /// The same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef<F>> {
        let vars: Vec<&str> = self.spec.variables.iter().map(|s| s.as_str()).collect();
        PolyRing::new(self.field.clone(), &vars, order)
    }
}

/// Constructors that need the shared handle.
pub trait RingExt<F: Field> {
    fn zero(&self) -> Polynomial<F>;
    fn one(&self) -> Polynomial<F>;
    fn constant(&self, c: F::Elem) -> Polynomial<F>;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, v: i64) -> Polynomial<F>;
    fn var(&self, name: &str) -> Result<Polynomial<F>>;
    fn var_at(&self, index: usize) -> Polynomial<F>;
    fn monomial(&self, exps: &[u32]) -> Result<Polynomial<F>>;
    fn parse(&self, text: &str) -> Result<Polynomial<F>>;
}

impl<F: Field> RingExt<F> for RingRef<F> {
    fn zero(&self) -> Polynomial<F> {
        Polynomial::zero(self.clone())
    }

    fn one(&self) -> Polynomial<F> {
        self.constant(self.field.one())
    }

    fn constant(&self, c: F::Elem) -> Polynomial<F> {
        Polynomial::term(self.clone(), c, Monomial::one(self.nvars()))
    }

    fn from_int(&self, v: i64) -> Polynomial<F> {
        self.constant(self.field.from_i64(v))
    }

    fn var(&self, name: &str) -> Result<Polynomial<F>> {
        Ok(self.var_at(self.var_index(name)?))
    }

    fn var_at(&self, index: usize) -> Polynomial<F> {
        Polynomial::term(
            self.clone(),
            self.field.one(),
            Monomial::variable(self.nvars(), index, 1),
        )
    }

    fn monomial(&self, exps: &[u32]) -> Result<Polynomial<F>> {
        if exps.len() != self.nvars() {
            return Err(Error::InvalidRing(format!(
                "monomial has {} exponents, ring has {} variables",
                exps.len(),
                self.nvars()
            )));
        }
        Ok(Polynomial::term(
            self.clone(),
            self.field.one(),
            Monomial::from_exponents(exps)?,
        ))
    }

    fn parse(&self, text: &str) -> Result<Polynomial<F>> {
        parse::parse_poly(text, self)
    }
}

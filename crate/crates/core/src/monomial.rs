//! Monomials and monomial primes over a fixed polynomial context.
//!
//! A [`Monomial`] is an exponent vector; it carries no coefficient and no
//! reference to a field. The context only fixes the number of variables and
//! their names, so all computations here are characteristic-free.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The ambient ring `K[x1, ..., xn]`, reduced to its variable names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyContext {
    names: Vec<String>,
}

impl PolyContext {
    /// Context with default names `x1..xn`.
    pub fn new(n: usize) -> Result<Arc<Self>> {
        Self::with_names((1..=n).map(|i| format!("x{i}")).collect())
    }

    pub fn with_names(names: Vec<String>) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::InvalidContext(
                "at least one variable is required".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidContext(format!(
                    "invalid variable name `{name}`"
                )));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidContext(format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        Ok(Arc::new(PolyContext { names }))
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    /// True when the names are exactly `x1..xn`.
    pub fn has_default_names(&self) -> bool {
        self.names
            .iter()
            .enumerate()
            .all(|(i, name)| *name == format!("x{}", i + 1))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_context(a: &Arc<PolyContext>, b: &Arc<PolyContext>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::ContextMismatch)
    }
}

/// A monomial `x^a`, stored as its exponent vector `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The pure power `x_i^e` in `n` variables.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    fn check(&self, other: &Monomial) -> Result<()> {
        if self.n() == other.n() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        self.exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial::new)
    }

    /// `self / gcd(self, other)`: the part of `self` not covered by `other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check(other)?;
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        ))
    }

    /// Exact quotient; `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.check(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(self.quotient_by_gcd(other)?))
    }

    /// Clamp every exponent to at most one.
    pub fn support_monomial(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|&e| e.min(1)).collect())
    }

    /// Render with the variable names of `ctx`, e.g. `x1^2*x3`; the unit is `1`.
    pub fn render(&self, ctx: &PolyContext) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ctx.name(i).to_string()
                } else {
                    format!("{}^{}", ctx.name(i), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Componentwise max and min of two monomials.
pub fn lcm_gcd(m1: &Monomial, m2: &Monomial) -> Result<(Monomial, Monomial)> {
    Ok((m1.lcm(m2)?, m1.gcd(m2)?))
}

/// A prime generated by a nonempty set of variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = vars.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidContext(
                "a monomial prime needs at least one variable".into(),
            ));
        }
        Ok(MonomialPrime {
            vars: set.into_iter().collect(),
        })
    }

    pub fn variables(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        self.vars.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.vars.iter().all(|v| other.contains_var(*v))
    }

    pub fn render(&self, ctx: &PolyContext) -> String {
        let names: Vec<&str> = self.vars.iter().map(|&i| ctx.name(i)).collect();
        format!("({})", names.join(", "))
    }
}

//! Monomial ideals held by their minimal generating set.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{same_context, Monomial, PolyContext};

/// A monomial ideal, stored as its unique minimal generating set `G(I)`.
///
/// Generators are kept in descending lexicographic order of their exponent
/// vectors, so two equal ideals always have identical representations. The
/// zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: Arc<PolyContext>,
    gens: Vec<Monomial>,
}

/// The divisibility-minimal subset of `gens`, deduplicated and canonically sorted.
pub fn minimalize(ctx: &Arc<PolyContext>, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    if gens.iter().any(|g| g.n() != ctx.n()) {
        return Err(Error::ContextMismatch);
    }
    Ok(MonomialIdeal {
        ctx: ctx.clone(),
        gens: minimal_set(gens),
    })
}

pub(crate) fn minimal_set(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `gens`; non-minimal generators are discarded.
    pub fn new(ctx: &Arc<PolyContext>, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(ctx, gens)
    }

    /// Build from exponent rows; convenient for fixtures.
    pub fn from_exponents(ctx: &Arc<PolyContext>, rows: &[&[u32]]) -> Result<Self> {
        minimalize(
            ctx,
            rows.iter().map(|r| Monomial::new(r.to_vec())).collect(),
        )
    }

    pub fn zero(ctx: &Arc<PolyContext>) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ctx: &Arc<PolyContext>) -> Self {
        MonomialIdeal {
            ctx: ctx.clone(),
            gens: vec![Monomial::one(ctx.n())],
        }
    }

    pub fn context(&self) -> &Arc<PolyContext> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Fail unless the ideal is proper and nonzero.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::TrivialIdeal("zero"))
        } else if self.is_unit() {
            Err(Error::TrivialIdeal("unit"))
        } else {
            Ok(())
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.exponents().iter().all(|&e| e <= 1))
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    fn check_ctx(&self, other: &MonomialIdeal) -> Result<()> {
        same_context(&self.ctx, &other.ctx)
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.n() == self.n() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Membership: some minimal generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ctx(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ctx(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        minimalize(&self.ctx, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ctx(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        minimalize(&self.ctx, gens)
    }

    /// `I^k` for `k >= 1`, by repeated multiplication.
    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::InvalidPower(k));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Minimalized pairwise lcms of the generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ctx(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm_unchecked(b));
            }
        }
        minimalize(&self.ctx, gens)
    }

    /// Intersection of a nonempty family of ideals.
    pub fn intersect_all<'a, I>(ideals: I) -> Result<Option<MonomialIdeal>>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut acc: Option<MonomialIdeal> = None;
        for ideal in ideals {
            acc = Some(match acc {
                None => ideal.clone(),
                Some(a) => a.intersect(ideal)?,
            });
        }
        Ok(acc)
    }

    /// `(I : m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.quotient_by_gcd(m))
            .collect::<Result<Vec<_>>>()?;
        minimalize(&self.ctx, gens)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            ctx: self.ctx.clone(),
            gens: minimal_set(self.gens.iter().map(Monomial::support_monomial).collect()),
        }
    }

    /// The same ideal over a different (equal-sized) context.
    pub fn with_context(&self, ctx: &Arc<PolyContext>) -> Result<MonomialIdeal> {
        if ctx.n() != self.n() {
            return Err(Error::ContextMismatch);
        }
        Ok(MonomialIdeal {
            ctx: ctx.clone(),
            gens: self.gens.clone(),
        })
    }

    /// Human-readable form mirroring the usual notation, e.g. `(x1^2, x2)`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.ctx)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
pub(crate) fn is_minimal(gens: &[Monomial]) -> bool {
    gens.iter().enumerate().all(|(i, a)| {
        gens.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.divides_unchecked(b))
    })
}

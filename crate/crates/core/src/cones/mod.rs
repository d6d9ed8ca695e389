//! Exact rational polyhedral cones attached to monomial ideals.
//!
//! The Rees cone of `I` lives in `Z^{n+1}` and is spanned by the unit
//! vectors `e_1..e_n` and the lifted exponent vectors `(v_i, 1)` of the
//! minimal generators. The Simis cone intersects the Rees cones of the
//! primary components. All arithmetic is over the integers.

mod dd;
mod hilbert;
mod linalg;

use std::collections::BTreeSet;

use crate::decomposition::{has_embedded_primes, primary_decomposition};
use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::Limits;

use linalg::{dot, primitive, rank, to_i64, widen};

type Matrix = Vec<Vec<i64>>;

/// A pointed rational cone in V- and/or H-representation.
///
/// Inequalities are normals `h` with the cone equal to `{y : <h, y> >= 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    rays: Option<Vec<Vec<i64>>>,
    inequalities: Option<Vec<Vec<i64>>>,
}

fn normalize_rows(dim: usize, rows: Vec<Vec<i64>>, what: &str) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::with_capacity(rows.len());
    for r in rows {
        if r.len() != dim {
            return Err(Error::DimensionMismatch(dim, r.len()));
        }
        if r.iter().all(|&x| x == 0) {
            return Err(Error::InvalidCone(format!("zero vector among {what}")));
        }
        out.push(to_i64(&primitive(&widen(&r)))?);
    }
    Ok(out)
}

impl RationalCone {
    /// Cone spanned by `rays` (made primitive; redundant rays allowed).
    pub fn from_rays(dim: usize, rays: Vec<Vec<i64>>) -> Result<Self> {
        let rays = normalize_rows(dim, rays, "rays")?;
        if rays.is_empty() {
            return Err(Error::InvalidCone("no rays".into()));
        }
        Ok(RationalCone {
            dim,
            rays: Some(rays),
            inequalities: None,
        })
    }

    /// Cone `{y : <h, y> >= 0 for all h}`.
    pub fn from_inequalities(dim: usize, inequalities: Vec<Vec<i64>>) -> Result<Self> {
        let inequalities = normalize_rows(dim, inequalities, "inequalities")?;
        Ok(RationalCone {
            dim,
            rays: None,
            inequalities: Some(inequalities),
        })
    }

    /// Both representations; every ray must satisfy every inequality.
    pub fn from_both(dim: usize, rays: Vec<Vec<i64>>, inequalities: Vec<Vec<i64>>) -> Result<Self> {
        let rays = normalize_rows(dim, rays, "rays")?;
        let inequalities = normalize_rows(dim, inequalities, "inequalities")?;
        if rays
            .iter()
            .any(|r| inequalities.iter().any(|h| dot(h, r) < 0))
        {
            return Err(Error::InvalidCone(
                "a ray violates one of the inequalities".into(),
            ));
        }
        Ok(RationalCone {
            dim,
            rays: Some(rays),
            inequalities: Some(inequalities),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> Option<&[Vec<i64>]> {
        self.rays.as_deref()
    }

    pub fn inequalities(&self) -> Option<&[Vec<i64>]> {
        self.inequalities.as_deref()
    }

    /// Membership test; needs the H-representation.
    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, v.len()));
        }
        let ineqs = match &self.inequalities {
            Some(h) => h.clone(),
            None => dual_description(self)?.inequalities.unwrap_or_default(),
        };
        Ok(ineqs.iter().all(|h| dot(h, v) >= 0))
    }

    /// Extreme rays and facet normals.
    fn complete(&self) -> Result<(Matrix, Matrix)> {
        let full = if self.rays.is_some() && self.inequalities.is_some() {
            self.clone()
        } else {
            dual_description(self)?
        };
        Ok((full.rays.unwrap(), full.inequalities.unwrap()))
    }
}

/// Populate both representations: extreme rays and facet normals, primitive
/// and sorted. The cone must be pointed and full-dimensional.
pub fn dual_description(cone: &RationalCone) -> Result<RationalCone> {
    let dim = cone.dim;
    let rays = match (&cone.rays, &cone.inequalities) {
        (Some(r), _) => r.clone(),
        (None, Some(h)) => dd::extreme_rays(h, dim)?,
        (None, None) => return Err(Error::InvalidCone("no representation".into())),
    };
    if rank(&rays) < dim {
        return Err(Error::NotFullDimensional);
    }
    let facets = dd::extreme_rays(&rays, dim)?;
    let extreme = dd::extreme_rays(&facets, dim)?;
    Ok(RationalCone {
        dim,
        rays: Some(extreme),
        inequalities: Some(facets),
    })
}

/// Lifted generators `(v_i, 1)` and unit vectors `e_1..e_n` of `I`.
fn rees_generators(ideal: &MonomialIdeal) -> Vec<Vec<i64>> {
    let n = ideal.n();
    let mut rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n + 1];
            e[i] = 1;
            e
        })
        .collect();
    for g in ideal.generators() {
        let mut v: Vec<i64> = g.exponents().iter().map(|&e| i64::from(e)).collect();
        v.push(1);
        rows.push(v);
    }
    rows
}

/// The Rees cone `R+(I)` in V-representation.
pub fn rees_cone(ideal: &MonomialIdeal) -> Result<RationalCone> {
    ideal.require_proper_nonzero()?;
    RationalCone::from_rays(ideal.n() + 1, rees_generators(ideal))
}

/// Keep inequalities whose tight rays span a hyperplane, then dedup and sort.
fn prune_inequalities(rays: &[Vec<i64>], ineqs: Vec<Vec<i64>>, dim: usize) -> Vec<Vec<i64>> {
    let set: BTreeSet<Vec<i64>> = ineqs.into_iter().collect();
    set.into_iter()
        .filter(|h| {
            let tight: Vec<Vec<i64>> = rays.iter().filter(|r| dot(h, r) == 0).cloned().collect();
            tight.len() + 1 >= dim && rank(&tight) + 1 == dim
        })
        .collect()
}

/// The Simis cone: intersection of the Rees cones of the primary components.
pub fn simis_cone(ideal: &MonomialIdeal) -> Result<RationalCone> {
    ideal.require_proper_nonzero()?;
    if has_embedded_primes(ideal)? {
        return Err(Error::EmbeddedPrimes);
    }
    let dim = ideal.n() + 1;
    let mut ineqs = Vec::new();
    for comp in primary_decomposition(ideal)?.iter() {
        let c = dual_description(&rees_cone(&comp.ideal)?)?;
        ineqs.extend(c.inequalities.unwrap());
    }
    let rays = dd::extreme_rays(&ineqs, dim)?;
    let facets = prune_inequalities(&rays, ineqs, dim);
    Ok(RationalCone {
        dim,
        rays: Some(rays),
        inequalities: Some(facets),
    })
}

/// The unique minimal Hilbert basis of a pointed cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    elements: Vec<Vec<i64>>,
}

impl HilbertBasis {
    /// Elements sorted by last coordinate, then lexicographically.
    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.elements.iter().any(|e| e == v)
    }
}

pub fn hilbert_basis(cone: &RationalCone) -> Result<HilbertBasis> {
    hilbert_basis_with(cone, &Limits::default())
}

pub fn hilbert_basis_with(cone: &RationalCone, limits: &Limits) -> Result<HilbertBasis> {
    let (rays, facets) = cone.complete()?;
    let mut elements = hilbert::hilbert_basis(&rays, &facets, limits.max_lattice_points)?;
    elements.sort_by(|a, b| a.last().cmp(&b.last()).then_with(|| a.cmp(b)));
    Ok(HilbertBasis { elements })
}

/// Normality of `R[It]`: the Rees cone's Hilbert basis lies in `N A_I`.
pub fn is_normal(ideal: &MonomialIdeal) -> Result<bool> {
    is_normal_with(ideal, &Limits::default())
}

pub fn is_normal_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<bool> {
    let basis = hilbert_basis_with(&rees_cone(ideal)?, limits)?;
    let mut powers: Vec<MonomialIdeal> = vec![ideal.clone()];
    for h in basis.elements() {
        let (exps, level) = h.split_at(h.len() - 1);
        let level = level[0];
        if level == 0 {
            // level-0 points are nonnegative combinations of the unit vectors
            continue;
        }
        let level = usize::try_from(level).map_err(|_| Error::ArithmeticOverflow)?;
        while powers.len() < level {
            let next = powers.last().unwrap().product(ideal)?;
            powers.push(next);
        }
        let m = Monomial::new(
            exps.iter()
                .map(|&e| u32::try_from(e).map_err(|_| Error::ArithmeticOverflow))
                .collect::<Result<_>>()?,
        );
        if !powers[level - 1].contains(&m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I-bar`: monomials `x^a` with `(a, 1)` in the Rees cone.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    integral_closure_with(ideal, &Limits::default())
}

pub fn integral_closure_with(ideal: &MonomialIdeal, limits: &Limits) -> Result<MonomialIdeal> {
    let cone = dual_description(&rees_cone(ideal)?)?;
    let facets = cone.inequalities.unwrap();
    // minimal generators of the closure never exceed the generators' exponent box
    let bounds = ideal.max_exponents();
    let count = bounds
        .iter()
        .fold(1u128, |acc, &b| acc.saturating_mul(u128::from(b) + 1));
    if count > limits.max_lattice_points {
        return Err(Error::LatticePointCapExceeded {
            count,
            cap: limits.max_lattice_points,
        });
    }
    let n = ideal.n();
    let mut found = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        let mut point: Vec<i64> = a.iter().map(|&e| i64::from(e)).collect();
        point.push(1);
        if facets.iter().all(|h| dot(h, &point) >= 0) {
            found.push(Monomial::new(a.clone()));
        }
        let mut k = 0;
        loop {
            if k == n {
                return minimalize(ideal.context(), found);
            }
            a[k] += 1;
            if a[k] <= bounds[k] {
                break;
            }
            a[k] = 0;
            k += 1;
        }
    }
}

/// A generator `x^a t^b` of the symbolic Rees algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SymbolicReesGenerator {
    pub monomial: Monomial,
    pub degree: u32,
}

fn require_normal_components(ideal: &MonomialIdeal, limits: &Limits) -> Result<()> {
    if has_embedded_primes(ideal)? {
        return Err(Error::EmbeddedPrimes);
    }
    for comp in primary_decomposition(ideal)?.iter() {
        if !is_normal_with(&comp.ideal, limits)? {
            return Err(Error::NonNormalComponent(comp.ideal.render()));
        }
    }
    Ok(())
}

/// Generators of the symbolic Rees algebra, read off the Hilbert basis of
/// the Simis cone. Every primary component must be normal.
pub fn symbolic_rees_generators(ideal: &MonomialIdeal) -> Result<Vec<SymbolicReesGenerator>> {
    symbolic_rees_generators_with(ideal, &Limits::default())
}

pub fn symbolic_rees_generators_with(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<Vec<SymbolicReesGenerator>> {
    ideal.require_proper_nonzero()?;
    require_normal_components(ideal, limits)?;
    let basis = hilbert_basis_with(&simis_cone(ideal)?, limits)?;
    basis
        .elements()
        .iter()
        .map(|h| {
            let conv = |x: i64| u32::try_from(x).map_err(|_| Error::ArithmeticOverflow);
            let (exps, level) = h.split_at(h.len() - 1);
            Ok(SymbolicReesGenerator {
                monomial: Monomial::new(exps.iter().map(|&e| conv(e)).collect::<Result<_>>()?),
                degree: conv(level[0])?,
            })
        })
        .collect()
}

/// Mutual containment, checked on rays against the other cone's facets.
pub fn cones_equal(a: &RationalCone, b: &RationalCone) -> Result<bool> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch(a.dim, b.dim));
    }
    let (ra, ha) = a.complete()?;
    let (rb, hb) = b.complete()?;
    let inside = |rays: &[Vec<i64>], ineqs: &[Vec<i64>]| {
        rays.iter().all(|r| ineqs.iter().all(|h| dot(h, r) >= 0))
    };
    Ok(inside(&ra, &hb) && inside(&rb, &ha))
}

/// Normality of the symbolic Rees algebra: every primary component is normal.
pub fn check_symbolic_rees_normal(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_proper_nonzero()?;
    if has_embedded_primes(ideal)? {
        return Err(Error::EmbeddedPrimes);
    }
    for comp in primary_decomposition(ideal)?.iter() {
        if !is_normal(&comp.ideal)? {
            return Ok(false);
        }
    }
    Ok(true)
}

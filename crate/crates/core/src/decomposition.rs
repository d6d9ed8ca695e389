//! Irreducible and primary decompositions of monomial ideals, associated
//! primes, localization at monomial primes, and the two duals built from
//! irreducible components.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{minimal_set, minimalize, MonomialIdeal};
use crate::monomial::{Monomial, MonomialPrime, PolyContext};

/// An irreducible monomial ideal `(x_{i1}^{a1}, ..., x_{ir}^{ar})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleIdeal {
    ctx: Arc<PolyContext>,
    // exponent of each variable, 0 when the variable does not occur
    exps: Vec<u32>,
}

impl IrreducibleIdeal {
    pub fn new(ctx: &Arc<PolyContext>, exponents: &BTreeMap<usize, u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidContext(
                "an irreducible ideal needs at least one generator".into(),
            ));
        }
        let mut exps = vec![0; ctx.n()];
        for (&i, &e) in exponents {
            if i >= ctx.n() {
                return Err(Error::VariableOutOfRange(i));
            }
            if e == 0 {
                return Err(Error::InvalidContext(
                    "irreducible exponents must be positive".into(),
                ));
            }
            exps[i] = e;
        }
        Ok(IrreducibleIdeal {
            ctx: ctx.clone(),
            exps,
        })
    }

    fn from_dense(ctx: &Arc<PolyContext>, exps: Vec<u32>) -> Self {
        debug_assert!(exps.iter().any(|&e| e > 0));
        IrreducibleIdeal {
            ctx: ctx.clone(),
            exps,
        }
    }

    pub fn context(&self) -> &Arc<PolyContext> {
        &self.ctx
    }

    /// Map from variable index to the exponent of its pure power.
    pub fn exponents(&self) -> BTreeMap<usize, u32> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
            .collect()
    }

    pub fn dense_exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i),
        )
        .expect("irreducible ideals have nonempty support")
    }

    /// The pure-power generators.
    pub fn generators(&self) -> Vec<Monomial> {
        self.exponents()
            .into_iter()
            .map(|(i, e)| Monomial::pure_power(self.ctx.n(), i, e))
            .collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ctx, self.generators()).expect("same context")
    }

    /// Product of the generators, `x^a` with `a` the exponent vector.
    pub fn generator_product(&self) -> Monomial {
        Monomial::new(self.exps.clone())
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset(&self, other: &IrreducibleIdeal) -> bool {
        irreducible_subset(&self.exps, &other.exps)
    }

    pub fn render(&self) -> String {
        self.to_ideal().render()
    }

    fn sort_key(&self) -> (MonomialPrime, Vec<u32>) {
        (self.radical(), self.exps.clone())
    }
}

impl fmt::Display for IrreducibleIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn irreducible_subset(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || (y > 0 && y <= x))
}

/// A primary monomial ideal together with its radical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimaryIdeal {
    pub ideal: MonomialIdeal,
    pub radical: MonomialPrime,
}

/// An irredundant list of components whose intersection is the source ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<T> {
    components: Vec<T>,
}

impl<T> Decomposition<T> {
    pub fn components(&self) -> &[T] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.components.iter()
    }

    pub fn into_components(self) -> Vec<T> {
        self.components
    }
}

impl Decomposition<IrreducibleIdeal> {
    /// Canonicalize an arbitrary family of irreducible ideals: drop
    /// duplicates and components containing another one, then sort.
    pub fn from_components(mut components: Vec<IrreducibleIdeal>) -> Self {
        let dense: Vec<Vec<u32>> = components.iter().map(|c| c.exps.clone()).collect();
        let kept = prune_redundant(dense);
        components.retain(|c| kept.contains(&c.exps));
        components.sort_by_key(IrreducibleIdeal::sort_key);
        components.dedup();
        Decomposition { components }
    }

    /// Canonical order only; redundant components are kept.
    pub(crate) fn from_sorted_components(mut components: Vec<IrreducibleIdeal>) -> Self {
        components.sort_by_key(IrreducibleIdeal::sort_key);
        components.dedup();
        Decomposition { components }
    }

    /// Intersection of the components.
    pub fn intersection(&self) -> Result<Option<MonomialIdeal>> {
        let ideals: Vec<MonomialIdeal> = self.components.iter().map(|c| c.to_ideal()).collect();
        MonomialIdeal::intersect_all(&ideals)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.render()).collect();
        parts.join(" ∩ ")
    }
}

impl Decomposition<PrimaryIdeal> {
    pub fn intersection(&self) -> Result<Option<MonomialIdeal>> {
        MonomialIdeal::intersect_all(self.components.iter().map(|c| &c.ideal))
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| c.ideal.render()).collect();
        parts.join(" ∩ ")
    }
}

fn prune_redundant(mut comps: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = comps
        .iter()
        .enumerate()
        .map(|(i, c)| {
            !comps
                .iter()
                .enumerate()
                .any(|(j, d)| i != j && irreducible_subset(d, c))
        })
        .collect();
    comps
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

/// Splitting state: canonical generator lists mapped to their components.
type Memo = HashMap<Vec<Monomial>, Vec<Vec<u32>>>;

fn split_decompose(gens: Vec<Monomial>, memo: &mut Memo) -> Vec<Vec<u32>> {
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    // generator of largest support; ties go to the first in canonical order
    let (pos, widest) = gens
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.support_size().cmp(&b.support_size()).then(j.cmp(i)))
        .expect("nonempty generator list");
    let result = if widest.support_size() <= 1 {
        let mut exps = vec![0; widest.n()];
        for g in &gens {
            let (i, e) = g.as_pure_power().expect("pure power");
            exps[i] = e;
        }
        vec![exps]
    } else {
        let n = widest.n();
        let first = widest.support()[0];
        let u = Monomial::pure_power(n, first, widest.exponent(first));
        let v = widest.quotient_by_gcd(&u).expect("same length");
        let rest: Vec<Monomial> = gens
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pos)
            .map(|(_, g)| g.clone())
            .collect();
        let mut left = rest.clone();
        left.push(u);
        let mut right = rest;
        right.push(v);
        let mut comps = split_decompose(minimal_set(left), memo);
        comps.extend(split_decompose(minimal_set(right), memo));
        prune_redundant(comps)
    };
    memo.insert(gens, result.clone());
    result
}

/// The unique irredundant irreducible decomposition of `I`.
///
/// Computed by coprime splitting: a generator `u*v` with coprime nontrivial
/// `u, v` gives `(I', uv) = (I', u) ∩ (I', v)`. Leaves are ideals of pure
/// powers; redundant leaves are those containing another leaf.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition<IrreducibleIdeal>> {
    ideal.require_proper_nonzero()?;
    let mut memo = Memo::new();
    let dense = split_decompose(ideal.generators().to_vec(), &mut memo);
    let ctx = ideal.context();
    Ok(Decomposition::from_components(
        dense
            .into_iter()
            .map(|e| IrreducibleIdeal::from_dense(ctx, e))
            .collect(),
    ))
}

/// The minimal irreducible monomial ideals containing `I`; these are exactly
/// the irreducible components.
pub fn minimal_irreducibles(ideal: &MonomialIdeal) -> Result<Decomposition<IrreducibleIdeal>> {
    irreducible_decomposition(ideal)
}

/// The radical prime when `I` is primary, judged by its generator shape: a
/// pure power of every variable that occurs in some generator.
pub fn is_primary(ideal: &MonomialIdeal) -> Option<MonomialPrime> {
    if ideal.require_proper_nonzero().is_err() {
        return None;
    }
    let n = ideal.n();
    let mut occurs = vec![false; n];
    let mut pure = vec![false; n];
    for g in ideal.generators() {
        for i in g.support() {
            occurs[i] = true;
        }
        if let Some((i, _)) = g.as_pure_power() {
            pure[i] = true;
        }
    }
    if occurs.iter().zip(&pure).any(|(&o, &p)| o && !p) {
        return None;
    }
    MonomialPrime::new((0..n).filter(|&i| occurs[i])).ok()
}

/// Minimal primary decomposition: irreducible components grouped by radical.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition<PrimaryIdeal>> {
    let irr = irreducible_decomposition(ideal)?;
    let mut groups: BTreeMap<MonomialPrime, MonomialIdeal> = BTreeMap::new();
    for comp in irr.iter() {
        let part = comp.to_ideal();
        let entry = groups.entry(comp.radical());
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(part);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let merged = o.get().intersect(&part)?;
                o.insert(merged);
            }
        }
    }
    Ok(Decomposition {
        components: groups
            .into_iter()
            .map(|(radical, ideal)| PrimaryIdeal { ideal, radical })
            .collect(),
    })
}

/// Radicals of the irreducible components, deduplicated and sorted.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    let irr = irreducible_decomposition(ideal)?;
    let set: BTreeSet<MonomialPrime> = irr.iter().map(IrreducibleIdeal::radical).collect();
    Ok(set.into_iter().collect())
}

fn inclusion_minimal(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}

fn inclusion_maximal(primes: &[MonomialPrime]) -> Vec<MonomialPrime> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && p.is_subset(q)))
        .cloned()
        .collect()
}

pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(inclusion_minimal(&associated_primes(ideal)?))
}

/// Associated primes maximal under inclusion.
pub fn max_associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(inclusion_maximal(&associated_primes(ideal)?))
}

pub fn has_embedded_primes(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    Ok(inclusion_minimal(&ass).len() != ass.len())
}

/// Contraction of `I R_p` back to `R`: every variable outside `p` becomes 1.
pub fn localize(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<MonomialIdeal> {
    let n = ideal.n();
    if let Some(&bad) = prime.variables().iter().find(|&&i| i >= n) {
        return Err(Error::VariableOutOfRange(bad));
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            Monomial::new(
                g.exponents()
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| if prime.contains_var(i) { e } else { 0 })
                    .collect(),
            )
        })
        .collect();
    minimalize(ideal.context(), gens)
}

/// All associated primes have the same height.
pub fn is_unmixed(ideal: &MonomialIdeal) -> Result<bool> {
    let ass = associated_primes(ideal)?;
    Ok(ass.windows(2).all(|w| w[0].height() == w[1].height()))
}

/// `I^∨`: one generator per irreducible component, the product of its
/// pure powers.
pub fn alexander_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let irr = irreducible_decomposition(ideal)?;
    minimalize(
        ideal.context(),
        irr.iter()
            .map(IrreducibleIdeal::generator_product)
            .collect(),
    )
}

/// `I*`: intersection over `x^a ∈ G(I)` of `({x_i^{a_i} : a_i >= 1})`.
pub fn star_dual(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    ideal.require_proper_nonzero()?;
    let ctx = ideal.context();
    let n = ideal.n();
    let mut acc: Option<MonomialIdeal> = None;
    for g in ideal.generators() {
        let part = minimalize(
            ctx,
            g.support()
                .into_iter()
                .map(|i| Monomial::pure_power(n, i, g.exponent(i)))
                .collect(),
        )?;
        acc = Some(match acc {
            None => part,
            Some(a) => a.intersect(&part)?,
        });
    }
    Ok(acc.expect("proper nonzero ideal has generators"))
}

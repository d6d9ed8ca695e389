//! Symbolic powers of monomial ideals.
//!
//! `I^(k)` intersects the contractions of `I^k` at the minimal primes;
//! `I^<k>` does the same over the maximal associated primes. When `I` has
//! no embedded primes, `I^(k)` is also the intersection of the `k`-th
//! powers of its primary components, which avoids forming `I^k`.

use crate::cones::{cones_equal, is_normal, rees_cone, simis_cone};
use crate::decomposition::{
    associated_primes, localize, max_associated_primes, minimal_primes, primary_decomposition,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::MonomialPrime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Intersect localizations of `I^k`.
    Localization,
    /// Intersect `k`-th powers of the primary components at minimal primes.
    PrimaryPowers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `I^(k)`, over the minimal primes.
    MinPrimes,
    /// `I^<k>`, over all associated primes.
    AllAssPrimes,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPowerResult {
    pub ideal: MonomialIdeal,
    pub k: u32,
    pub route: Route,
    pub variant: Variant,
}

fn check_input(ideal: &MonomialIdeal, k: u32) -> Result<()> {
    ideal.require_proper_nonzero()?;
    if k == 0 {
        return Err(Error::InvalidPower(k));
    }
    Ok(())
}

fn intersect_localizations(
    power: &MonomialIdeal,
    primes: &[MonomialPrime],
) -> Result<MonomialIdeal> {
    let local = primes
        .iter()
        .map(|p| localize(power, p))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::intersect_all(&local)?.expect("a proper ideal has associated primes"))
}

/// `I^(k)` through localization of `I^k` at each minimal prime.
pub fn symbolic_power_by_localization(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    check_input(ideal, k)?;
    let primes = minimal_primes(ideal)?;
    intersect_localizations(&ideal.power(k)?, &primes)
}

/// `I^(k)` as the intersection of the `k`-th powers of the primary
/// components at minimal primes.
pub fn symbolic_power_by_primary_powers(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    check_input(ideal, k)?;
    let mins = minimal_primes(ideal)?;
    let powers = primary_decomposition(ideal)?
        .into_components()
        .into_iter()
        .filter(|c| mins.contains(&c.radical))
        .map(|c| c.ideal.power(k))
        .collect::<Result<Vec<_>>>()?;
    Ok(MonomialIdeal::intersect_all(&powers)?.expect("at least one minimal prime"))
}

/// Full symbolic power computation with an explicit variant and the route
/// that produced it.
pub fn symbolic_power(
    ideal: &MonomialIdeal,
    k: u32,
    variant: Variant,
) -> Result<SymbolicPowerResult> {
    check_input(ideal, k)?;
    let ass = associated_primes(ideal)?;
    let mins = minimal_primes(ideal)?;
    let embedded = ass.len() != mins.len();
    let (result, route) = match variant {
        Variant::MinPrimes if !embedded => (
            symbolic_power_by_primary_powers(ideal, k)?,
            Route::PrimaryPowers,
        ),
        Variant::MinPrimes => (
            intersect_localizations(&ideal.power(k)?, &mins)?,
            Route::Localization,
        ),
        Variant::AllAssPrimes => {
            let maximal = max_associated_primes(ideal)?;
            (
                intersect_localizations(&ideal.power(k)?, &maximal)?,
                Route::Localization,
            )
        }
    };
    Ok(SymbolicPowerResult {
        ideal: result,
        k,
        route,
        variant,
    })
}

/// `I^(k)` by the default route.
pub fn symbolic_power_min(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    Ok(symbolic_power(ideal, k, Variant::MinPrimes)?.ideal)
}

/// `I^<k>`.
pub fn symbolic_power_ass(ideal: &MonomialIdeal, k: u32) -> Result<MonomialIdeal> {
    Ok(symbolic_power(ideal, k, Variant::AllAssPrimes)?.ideal)
}

/// One row of a normally-torsion-free probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtfStep {
    pub k: u32,
    pub ordinary: MonomialIdeal,
    pub symbolic: MonomialIdeal,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NtfReport {
    pub steps: Vec<NtfStep>,
}

impl NtfReport {
    /// First `k` where `I^k != I^(k)`.
    pub fn first_failure(&self) -> Option<u32> {
        self.steps.iter().find(|s| !s.equal).map(|s| s.k)
    }

    pub fn all_equal(&self) -> bool {
        self.first_failure().is_none()
    }
}

/// Compare `I^k` with `I^(k)` for `k = 1..=kmax`.
pub fn ntf_probe(ideal: &MonomialIdeal, kmax: u32) -> Result<NtfReport> {
    check_input(ideal, kmax)?;
    let mut steps = Vec::new();
    let mut ordinary = ideal.clone();
    for k in 1..=kmax {
        if k > 1 {
            ordinary = ordinary.product(ideal)?;
        }
        let symbolic = symbolic_power_min(ideal, k)?;
        let equal = ordinary == symbolic;
        steps.push(NtfStep {
            k,
            ordinary: ordinary.clone(),
            symbolic,
            equal,
        });
    }
    Ok(NtfReport { steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowersCertificate {
    /// Simis cone equals Rees cone and `R[It]` is normal: `I^k = I^(k)` for all `k`.
    EqualByConeCriterion,
    Unequal,
    /// Embedded primes, or a primary component that is not normal.
    Inapplicable,
}

/// Decide `I^k = I^(k)` for every `k` through the cone criterion.
pub fn symbolic_vs_ordinary_certificate(ideal: &MonomialIdeal) -> Result<PowersCertificate> {
    ideal.require_proper_nonzero()?;
    let ass = associated_primes(ideal)?;
    if minimal_primes(ideal)?.len() != ass.len() {
        return Ok(PowersCertificate::Inapplicable);
    }
    for comp in primary_decomposition(ideal)?.iter() {
        if !is_normal(&comp.ideal)? {
            return Ok(PowersCertificate::Inapplicable);
        }
    }
    let same = cones_equal(&simis_cone(ideal)?, &rees_cone(ideal)?)?;
    if same && is_normal(ideal)? {
        Ok(PowersCertificate::EqualByConeCriterion)
    } else {
        Ok(PowersCertificate::Unequal)
    }
}

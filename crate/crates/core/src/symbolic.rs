//! Minimal primes, minimal primary components, and symbolic powers of
//! monomial ideals.
//!
//! The canonical symbolic-power path saturates the ordinary power at each
//! minimal prime, which avoids choosing a primary decomposition. The
//! component-wise path is kept for user-supplied decompositions and for
//! cross-checks.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::polyhedra;

/// The monomial prime ideal (x_i : i in vars).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimeSupport {
    vars: BTreeSet<usize>,
}

impl PrimeSupport {
    pub fn new(vars: BTreeSet<usize>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidDecomposition(
                "prime support must be nonempty".into(),
            ));
        }
        Ok(PrimeSupport { vars })
    }

    pub fn from_slice(vars: &[usize]) -> Result<Self> {
        Self::new(vars.iter().copied().collect())
    }

    pub fn vars(&self) -> &BTreeSet<usize> {
        &self.vars
    }

    pub fn contains(&self, var: usize) -> bool {
        self.vars.contains(&var)
    }

    /// Complement within an ambient set of r variables.
    pub fn complement(&self, num_vars: usize) -> Vec<usize> {
        (0..num_vars).filter(|v| !self.vars.contains(v)).collect()
    }

    /// The prime itself as a monomial ideal of the ambient ring.
    pub fn to_ideal(&self, num_vars: usize) -> Result<MonomialIdeal> {
        let gens = self
            .vars
            .iter()
            .map(|&i| ExponentVector::unit(num_vars, i))
            .collect();
        MonomialIdeal::new(num_vars, gens)
    }
}

/// All minimal primes of a proper monomial ideal: the minimal hitting
/// sets of the generator supports.
pub fn minimal_primes(ideal: &MonomialIdeal, caps: &Caps) -> Result<Vec<PrimeSupport>> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let supports = ideal.generator_supports();
    // a support can never be empty for a proper nonzero ideal
    debug_assert!(supports.iter().all(|s| !s.is_empty()));
    let mut found: Vec<BTreeSet<usize>> = Vec::new();
    let mut chosen: BTreeSet<usize> = BTreeSet::new();
    branch_hitting_sets(&supports, &mut chosen, &mut found, caps)?;
    // drop non-minimal candidates the branching may have produced
    found.sort_by_key(|s| s.len());
    let mut minimal: Vec<BTreeSet<usize>> = Vec::new();
    for cand in found {
        if !minimal.iter().any(|m| m.is_subset(&cand)) {
            minimal.push(cand);
        }
    }
    minimal.sort();
    minimal.into_iter().map(PrimeSupport::new).collect()
}

fn branch_hitting_sets(
    supports: &[Vec<usize>],
    chosen: &mut BTreeSet<usize>,
    found: &mut Vec<BTreeSet<usize>>,
    caps: &Caps,
) -> Result<()> {
    let uncovered = supports
        .iter()
        .find(|s| !s.iter().any(|v| chosen.contains(v)));
    let Some(edge) = uncovered else {
        if found.len() as u64 >= caps.min_primes {
            return Err(Error::CapExceeded {
                cap: "min-primes",
                needed: found.len() as u64 + 1,
                limit: caps.min_primes,
            });
        }
        found.push(chosen.clone());
        return Ok(());
    };
    for &v in edge {
        chosen.insert(v);
        branch_hitting_sets(supports, chosen, found, caps)?;
        chosen.remove(&v);
    }
    Ok(())
}

/// A primary decomposition restricted to minimal primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryDecomposition {
    components: Vec<(PrimeSupport, MonomialIdeal)>,
}

impl PrimaryDecomposition {
    /// Validate the structural invariants and build the value.
    pub fn new(components: Vec<(PrimeSupport, MonomialIdeal)>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidDecomposition("no components given".into()));
        }
        for (prime, q) in &components {
            for g in q.gens() {
                if g.support().iter().any(|v| !prime.contains(*v)) {
                    return Err(Error::InvalidDecomposition(format!(
                        "component generator support escapes its prime {:?}",
                        prime.vars()
                    )));
                }
            }
            for &v in prime.vars() {
                let has_pure_power = q
                    .gens()
                    .iter()
                    .any(|g| g.exponent(v) > 0 && g.support().len() == 1);
                if !has_pure_power {
                    return Err(Error::InvalidDecomposition(format!(
                        "variable {v} has no pure power in its component, so the component is not primary"
                    )));
                }
            }
        }
        for i in 0..components.len() {
            for j in 0..components.len() {
                if i != j && components[i].0.vars().is_subset(components[j].0.vars()) {
                    return Err(Error::InvalidDecomposition(
                        "primes are not pairwise incomparable".into(),
                    ));
                }
            }
        }
        Ok(PrimaryDecomposition { components })
    }

    pub fn components(&self) -> &[(PrimeSupport, MonomialIdeal)] {
        &self.components
    }

    pub fn component_ideals(&self) -> Vec<MonomialIdeal> {
        self.components.iter().map(|(_, q)| q.clone()).collect()
    }

    pub fn intersection(&self) -> Result<MonomialIdeal> {
        crate::monomial::intersect_all(&self.component_ideals())
    }
}

/// The minimal primary components of I: for each minimal prime p, the
/// saturation of I by the variables outside p.
pub fn minimal_components(
    ideal: &MonomialIdeal,
    caps: &Caps,
) -> Result<Vec<(PrimeSupport, MonomialIdeal)>> {
    let primes = minimal_primes(ideal, caps)?;
    let r = ideal.num_vars();
    Ok(primes
        .into_iter()
        .map(|p| {
            let q = ideal.saturate_vars(&p.complement(r));
            (p, q)
        })
        .collect())
}

/// I^(n) by saturating I^n at every minimal prime.
pub fn symbolic_power(ideal: &MonomialIdeal, n: u32, caps: &Caps) -> Result<MonomialIdeal> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    debug_assert!(n >= 1);
    let primes = minimal_primes(ideal, caps)?;
    let power = ideal.power(n)?;
    let r = ideal.num_vars();
    let mut acc: Option<MonomialIdeal> = None;
    for p in &primes {
        let localized = power.saturate_vars(&p.complement(r));
        acc = Some(match acc {
            None => localized,
            Some(current) => current.intersect(&localized)?,
        });
    }
    acc.ok_or(Error::UnitIdeal)
}

/// I^(n) from a validated decomposition: the intersection of the n-th
/// powers of the components.
pub fn symbolic_power_from_components(
    decomposition: &PrimaryDecomposition,
    n: u32,
) -> Result<MonomialIdeal> {
    let mut acc: Option<MonomialIdeal> = None;
    for (_, q) in decomposition.components() {
        let qn = q.power(n)?;
        acc = Some(match acc {
            None => qn,
            Some(current) => current.intersect(&qn)?,
        });
    }
    acc.ok_or(Error::UnitIdeal)
}

/// Facet-complement structure of the symbolic powers of a squarefree
/// ideal: x^alpha lies in I_Delta^(n) iff every facet complement sums to
/// at least n, and minimality is read off the tight complements.
///
/// `facets` are the facets of the complex whose Stanley-Reisner ideal is
/// the squarefree input; the component primes are P_F = (x_i : i not in F).
pub fn is_min_gen_squarefree_symbolic(
    facets: &[BTreeSet<usize>],
    num_vars: usize,
    alpha: &ExponentVector,
    n: u64,
) -> Result<bool> {
    let complement_sum = |facet: &BTreeSet<usize>| -> u64 {
        (0..num_vars)
            .filter(|v| !facet.contains(v))
            .map(|v| alpha.exponent(v) as u64)
            .sum()
    };
    if facets.iter().any(|f| complement_sum(f) < n) {
        return Err(Error::NotInIdeal);
    }
    for i in 0..num_vars {
        if alpha.exponent(i) == 0 {
            continue;
        }
        let witnessed = facets
            .iter()
            .any(|f| !f.contains(&i) && complement_sum(f) == n);
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Constants and degree data verifying the generating-degree bounds of a
/// symbolic power against the polyhedral invariant.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub r: u64,
    /// number of minimal primary components
    pub s: u64,
    pub d_ideal: u64,
    /// rho = r^2 d(I)^(r-1)
    pub rho: BigInt,
    pub delta: BigRational,
    pub n: u32,
    pub d_symbolic: u64,
    pub d_jn: u64,
    pub squarefree: bool,
}

impl BoundReport {
    /// delta(I) n - r rho (1 + s (r-1) d(I)) <= d(I^(n))
    pub fn holds_lower(&self) -> bool {
        let slack = BigInt::from(self.r)
            * &self.rho
            * (BigInt::from(1) + BigInt::from(self.s * (self.r - 1) * self.d_ideal));
        let lower =
            &self.delta * BigRational::from(BigInt::from(self.n)) - BigRational::from(slack);
        BigRational::from(BigInt::from(self.d_symbolic)) >= lower
    }

    /// d(I^(n)) <= delta(I) n + r + r (r-1) d(I)
    pub fn holds_upper(&self) -> bool {
        let slack = BigInt::from(self.r) + BigInt::from(self.r * (self.r - 1) * self.d_ideal);
        let upper =
            &self.delta * BigRational::from(BigInt::from(self.n)) + BigRational::from(slack);
        BigRational::from(BigInt::from(self.d_symbolic)) <= upper
    }

    /// d(J_n) < delta(I) n + r
    pub fn holds_jn(&self) -> bool {
        let bound = &self.delta * BigRational::from(BigInt::from(self.n))
            + BigRational::from(BigInt::from(self.r));
        BigRational::from(BigInt::from(self.d_jn)) < bound
    }

    /// Squarefree case only: d(I^(n)) <= delta(I) n
    pub fn holds_squarefree(&self) -> bool {
        if !self.squarefree {
            return true;
        }
        let bound = &self.delta * BigRational::from(BigInt::from(self.n));
        BigRational::from(BigInt::from(self.d_symbolic)) <= bound
    }

    /// t_i(I^(n)) <= delta(I) n + 2r + r (r^2 d^(r-1) + (r-1) d), given the
    /// maximal t_i over all homological indices.
    pub fn holds_t_bound(&self, max_t: u64) -> bool {
        let slack = BigInt::from(2 * self.r)
            + BigInt::from(self.r) * (&self.rho + BigInt::from((self.r - 1) * self.d_ideal));
        let bound =
            &self.delta * BigRational::from(BigInt::from(self.n)) + BigRational::from(slack);
        BigRational::from(BigInt::from(max_t)) <= bound
    }

    pub fn holds_all(&self) -> bool {
        self.holds_lower() && self.holds_upper() && self.holds_jn() && self.holds_squarefree()
    }
}

/// Compute d(I^(n)) together with every constant the degree bounds need.
pub fn bound_report(ideal: &MonomialIdeal, n: u32, caps: &Caps) -> Result<BoundReport> {
    let components = minimal_components(ideal, caps)?;
    let comp_ideals: Vec<MonomialIdeal> = components.iter().map(|(_, q)| q.clone()).collect();
    let r = ideal.num_vars() as u64;
    let d_ideal = ideal.max_gen_degree();
    let rho = BigInt::from(r * r) * BigInt::from(d_ideal).pow(r.saturating_sub(1) as u32);
    let delta = polyhedra::delta_from_components(&comp_ideals, caps)?;
    let symbolic = symbolic_power(ideal, n, caps)?;
    let jn = polyhedra::jn(&comp_ideals, n, caps)?;
    Ok(BoundReport {
        r,
        s: comp_ideals.len() as u64,
        d_ideal,
        rho,
        delta,
        n,
        d_symbolic: symbolic.max_gen_degree(),
        d_jn: jn.max_gen_degree(),
        squarefree: ideal.is_squarefree(),
    })
}

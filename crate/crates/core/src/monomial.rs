//! Exact arithmetic on monomials and monomial ideals.
//!
//! A monomial ideal is stored by its antichain of minimal monomial
//! generators in a fixed total order, so equal ideals have identical
//! representations and derive-based equality and hashing are sound.

use crate::caps::Caps;
use crate::error::{Error, Result};

/// Exponent tuple of a monomial in `r` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    /// The constant monomial 1.
    pub fn one(num_vars: usize) -> Self {
        ExponentVector(vec![0; num_vars])
    }

    /// Unit vector e_i.
    pub fn unit(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Total degree |alpha|.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// Support as a bitmask; requires `len() <= 64`.
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.0.len() <= 64);
        let mut m = 0u64;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// Componentwise <=, i.e. this monomial divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Product of monomials; errors on exponent overflow.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b).ok_or(Error::ExponentOverflow)?);
        }
        Ok(ExponentVector(out))
    }

    /// n-fold power of the monomial.
    pub fn checked_pow(&self, n: u32) -> Result<Self> {
        let mut out = Vec::with_capacity(self.0.len());
        for &a in &self.0 {
            out.push(a.checked_mul(n).ok_or(Error::ExponentOverflow)?);
        }
        Ok(ExponentVector(out))
    }

    /// Quotient, or None when `other` does not divide this monomial.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(ExponentVector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    /// Componentwise max.
    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Copy with the exponent of variable `i` lowered by one; None if zero.
    pub fn lower(&self, i: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut out = self.0.clone();
        out[i] -= 1;
        Some(ExponentVector(out))
    }

    /// Copy with the exponents of the given variables set to zero.
    pub fn zero_out(&self, vars: &[usize]) -> Self {
        let mut out = self.0.clone();
        for &i in vars {
            out[i] = 0;
        }
        ExponentVector(out)
    }

    /// Render as `x^2*y*z` using the supplied variable names.
    pub fn render(&self, names: &[String]) -> String {
        debug_assert_eq!(names.len(), self.0.len());
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// A monomial ideal, held as its canonical minimal generating antichain.
///
/// Generators are sorted lexicographically on exponent tuples. The zero
/// ideal is rejected at construction; the unit ideal is the single zero
/// exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    num_vars: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Canonicalise a generating set: divisibility antichain, lex order.
    pub fn new(num_vars: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &gens {
            if g.len() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    got: g.len(),
                });
            }
        }
        Ok(MonomialIdeal {
            num_vars,
            gens: minimize_gens(gens),
        })
    }

    /// Convenience constructor from raw exponent rows.
    pub fn from_exponents(num_vars: usize, rows: &[&[u32]]) -> Result<Self> {
        Self::new(
            num_vars,
            rows.iter().map(|r| ExponentVector(r.to_vec())).collect(),
        )
    }

    /// The unit ideal (1).
    pub fn unit(num_vars: usize) -> Self {
        MonomialIdeal {
            num_vars,
            gens: vec![ExponentVector::one(num_vars)],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// True when every minimal generator is squarefree.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &ExponentVector) -> bool {
        debug_assert_eq!(m.len(), self.num_vars);
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Intersection via pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.lcm(b));
            }
        }
        Self::new(self.num_vars, out)
    }

    /// Product via pairwise products.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.checked_mul(b)?);
            }
        }
        Self::new(self.num_vars, out)
    }

    /// n-th power by iterated multiplication; `power(I, 0)` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<Self> {
        let mut acc = Self::unit(self.num_vars);
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Saturation by the product of the variables in `vars`: exponents on
    /// `vars` are set to zero in every generator, then minimised.
    pub fn saturate_vars(&self, vars: &[usize]) -> Self {
        let gens = self.gens.iter().map(|g| g.zero_out(vars)).collect();
        MonomialIdeal {
            num_vars: self.num_vars,
            gens: minimize_gens(gens),
        }
    }

    /// d(I): maximal degree of a minimal generator; 0 for the unit ideal.
    pub fn max_gen_degree(&self) -> u64 {
        self.gens.iter().map(|g| g.degree()).max().unwrap_or(0)
    }

    /// Minimal degree of a minimal generator.
    pub fn min_gen_degree(&self) -> u64 {
        self.gens.iter().map(|g| g.degree()).min().unwrap_or(0)
    }

    /// Componentwise join of the generators; bounds every box enumeration.
    pub fn generator_join(&self) -> ExponentVector {
        let mut join = vec![0u32; self.num_vars];
        for g in &self.gens {
            for (j, e) in join.iter_mut().zip(g.exponents()) {
                *j = (*j).max(*e);
            }
        }
        ExponentVector(join)
    }

    /// The subideal generated by the minimal generators of degree <= d.
    /// Returns None when no generator qualifies.
    pub fn generators_up_to_degree(&self, d: u64) -> Option<Self> {
        let gens: Vec<ExponentVector> = self
            .gens
            .iter()
            .filter(|g| g.degree() <= d)
            .cloned()
            .collect();
        if gens.is_empty() {
            return None;
        }
        // subset of an antichain is an antichain and stays sorted
        Some(MonomialIdeal {
            num_vars: self.num_vars,
            gens,
        })
    }

    /// I_<d>: the ideal generated by all degree-d monomials of I.
    pub fn component_ideal(&self, d: u64, caps: &Caps) -> Result<Self> {
        let min_degree = self.min_gen_degree();
        if d < min_degree {
            return Err(Error::DegreeBelowMinimum {
                degree: d,
                min_degree,
            });
        }
        let mut out: Vec<ExponentVector> = Vec::new();
        let mut count: u64 = 0;
        for g in &self.gens {
            let deg = g.degree();
            if deg > d {
                continue;
            }
            let slack = (d - deg) as u32;
            let mut current = g.exponents().to_vec();
            pad_to_degree(&mut current, 0, slack, &mut out, &mut count, caps)?;
        }
        out.sort();
        out.dedup();
        // all generators share degree d, so they already form an antichain
        Ok(MonomialIdeal {
            num_vars: self.num_vars,
            gens: out,
        })
    }

    /// True iff `m` is one of the minimal generators, decided by the
    /// one-step-down membership test rather than by generator lookup.
    pub fn is_minimal_generator(&self, m: &ExponentVector) -> Result<bool> {
        if !self.contains(m) {
            return Err(Error::NotInIdeal);
        }
        for i in 0..self.num_vars {
            if let Some(lowered) = m.lower(i) {
                if self.contains(&lowered) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Supports of the generators, deduplicated.
    pub fn generator_supports(&self) -> Vec<Vec<usize>> {
        let mut supports: Vec<Vec<usize>> = self.gens.iter().map(|g| g.support()).collect();
        supports.sort();
        supports.dedup();
        supports
    }

    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(names)).collect();
        format!("({})", parts.join(", "))
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: other.num_vars,
            });
        }
        Ok(())
    }
}

/// Intersect a nonempty sequence of ideals, minimising after each fold.
pub fn intersect_all(ideals: &[MonomialIdeal]) -> Result<MonomialIdeal> {
    let (first, rest) = ideals.split_first().ok_or(Error::ZeroIdeal)?;
    let mut acc = first.clone();
    for ideal in rest {
        acc = acc.intersect(ideal)?;
    }
    Ok(acc)
}

fn pad_to_degree(
    current: &mut Vec<u32>,
    var: usize,
    slack: u32,
    out: &mut Vec<ExponentVector>,
    count: &mut u64,
    caps: &Caps,
) -> Result<()> {
    if slack == 0 {
        *count += 1;
        if *count > caps.component_monomials {
            return Err(Error::CapExceeded {
                cap: "component-monomials",
                needed: *count,
                limit: caps.component_monomials,
            });
        }
        out.push(ExponentVector(current.clone()));
        return Ok(());
    }
    if var == current.len() {
        return Ok(());
    }
    if var + 1 == current.len() {
        current[var] += slack;
        pad_to_degree(current, var + 1, 0, out, count, caps)?;
        current[var] -= slack;
        return Ok(());
    }
    for extra in 0..=slack {
        current[var] += extra;
        pad_to_degree(current, var + 1, slack - extra, out, count, caps)?;
        current[var] -= extra;
    }
    Ok(())
}

/// Divisibility antichain of the input, lex-sorted.
fn minimize_gens(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    // scanning by increasing degree means kept generators can never be
    // divisible by a later one
    gens.sort_by_key(|g| (g.degree(), g.clone()));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::new();
    let mut kept_masks: Vec<u64> = Vec::new();
    let use_masks = gens.first().map_or(false, |g| g.len() <= 64);
    for g in gens {
        let mask = if use_masks { g.support_mask() } else { 0 };
        let redundant = kept
            .iter()
            .enumerate()
            .any(|(i, k)| (!use_masks || kept_masks[i] & mask == kept_masks[i]) && k.divides(&g));
        if !redundant {
            kept.push(g);
            if use_masks {
                kept_masks.push(mask);
            }
        }
    }
    kept.sort();
    kept
}

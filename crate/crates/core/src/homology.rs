//! Multigraded Betti numbers via upper Koszul simplicial complexes, and
//! everything derived from them: regularity, projective dimension, depth,
//! componentwise linearity, Betti splittings, and the variable-splitting
//! prover for the Koszul property.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::{is_prime, rank_mod_p, rank_over_q};
use crate::monomial::{ExponentVector, MonomialIdeal};
use crate::polyhedra::advance;

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// Prime field GF(p).
    Gf(u64),
}

impl FieldSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            FieldSpec::Rationals => Ok(()),
            FieldSpec::Gf(p) => {
                if *p >= (1 << 31) || !is_prime(*p) {
                    Err(Error::InvalidPrime(*p))
                } else {
                    Ok(())
                }
            }
        }
    }

    fn rank(&self, rows: &[Vec<i64>]) -> usize {
        match self {
            FieldSpec::Rationals => rank_over_q(rows),
            FieldSpec::Gf(p) => rank_mod_p(rows, *p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Gf(p) => write!(f, "zp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("zp:") {
            let p: u64 = p.parse().map_err(|_| Error::InvalidPrime(0))?;
            let spec = FieldSpec::Gf(p);
            spec.validate()?;
            return Ok(spec);
        }
        Err(Error::InvalidPrime(0))
    }
}

/// A simplicial complex given by its facets, as bitmasks over a vertex
/// set of at most 64 elements. The void complex (no faces at all) and the
/// irrelevant complex {[]} are distinct values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    /// antichain of face masks; empty means the void complex
    facets: Vec<u64>,
}

impl SimplicialComplex {
    pub fn void(n_vertices: usize) -> Self {
        SimplicialComplex {
            n_vertices,
            facets: Vec::new(),
        }
    }

    pub fn irrelevant(n_vertices: usize) -> Self {
        SimplicialComplex {
            n_vertices,
            facets: vec![0],
        }
    }

    pub fn from_facets(n_vertices: usize, facets: Vec<u64>) -> Self {
        assert!(n_vertices <= 64);
        SimplicialComplex {
            n_vertices,
            facets: antichain_masks(facets),
        }
    }

    /// Facets as sorted vertex lists.
    pub fn facet_sets(&self) -> Vec<Vec<usize>> {
        self.facets
            .iter()
            .map(|&m| (0..self.n_vertices).filter(|&v| m >> v & 1 == 1).collect())
            .collect()
    }

    pub fn facet_masks(&self) -> &[u64] {
        &self.facets
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [0]
    }

    pub fn contains_face(&self, mask: u64) -> bool {
        self.facets.iter().any(|&f| mask & !f == 0)
    }

    /// A vertex lying in every facet, if any.
    pub fn cone_apex(&self) -> Option<usize> {
        if self.facets.is_empty() {
            return None;
        }
        let common = self.facets.iter().fold(!0u64, |acc, &f| acc & f);
        (0..self.n_vertices).find(|&v| common >> v & 1 == 1)
    }

    /// All faces grouped by dimension; index d holds the faces of
    /// dimension d-1, so index 0 is the empty face.
    fn faces_by_level(&self) -> Vec<Vec<u64>> {
        if self.facets.is_empty() {
            return Vec::new();
        }
        let mut seen = std::collections::HashSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let top = self
            .facets
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap();
        let mut levels: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
        for mask in seen {
            levels[mask.count_ones() as usize].push(mask);
        }
        for level in levels.iter_mut() {
            level.sort_unstable();
        }
        levels
    }
}

fn antichain_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| std::cmp::Reverse(m.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&k| m & !k == 0) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

/// K^alpha(I): the upper Koszul complex of I at multidegree alpha, on the
/// support vertex set of alpha (vertex t is the t-th smallest support
/// variable). Void when x^alpha is not in I.
pub fn upper_koszul(ideal: &MonomialIdeal, alpha: &ExponentVector) -> SimplicialComplex {
    let support = alpha.support();
    let k = support.len();
    match koszul_facets(ideal, alpha, &support) {
        None => SimplicialComplex::void(k),
        Some(facets) => SimplicialComplex::from_facets(k, facets),
    }
}

/// Facets of K^alpha as masks over support positions, or None when
/// x^alpha is not in I.
///
/// A squarefree tau <= alpha has x^(alpha-tau) in I iff some generator g
/// dividing x^alpha avoids tau on its tight positions {j : g_j = alpha_j}.
/// Hence the facets are the complements of the minimal tight masks.
fn koszul_facets(
    ideal: &MonomialIdeal,
    alpha: &ExponentVector,
    support: &[usize],
) -> Option<Vec<u64>> {
    debug_assert!(support.len() <= 64);
    let full: u64 = if support.len() == 64 {
        !0
    } else {
        (1u64 << support.len()) - 1
    };
    let mut tight_masks: Vec<u64> = Vec::new();
    'gens: for g in ideal.gens() {
        let ge = g.exponents();
        let ae = alpha.exponents();
        for j in 0..ae.len() {
            if ge[j] > ae[j] {
                continue 'gens;
            }
        }
        let mut mask = 0u64;
        for (pos, &j) in support.iter().enumerate() {
            if ge[j] == ae[j] {
                mask |= 1 << pos;
            }
        }
        tight_masks.push(mask);
    }
    if tight_masks.is_empty() {
        return None;
    }
    // minimal tight masks; their complements are the facets
    tight_masks.sort_unstable_by_key(|m| m.count_ones());
    let mut minimal: Vec<u64> = Vec::new();
    for m in tight_masks {
        if !minimal.iter().any(|&k| k & !m == 0) {
            minimal.push(m);
        }
    }
    Some(minimal.into_iter().map(|m| full & !m).collect())
}

/// Ranks of reduced simplicial homology; index i holds the rank of the
/// homology in dimension i-1, so index 0 reports on the empty face.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: FieldSpec) -> Result<Vec<u64>> {
    field.validate()?;
    Ok(homology_ranks(complex, &field))
}

fn homology_ranks(complex: &SimplicialComplex, field: &FieldSpec) -> Vec<u64> {
    let levels = complex.faces_by_level();
    if levels.is_empty() {
        return Vec::new();
    }
    // boundary_ranks[l] = rank of C_l -> C_(l-1), levels as in faces_by_level
    let mut boundary_ranks = vec![0usize; levels.len() + 1];
    for l in 1..levels.len() {
        boundary_ranks[l] = field.rank(&boundary_matrix(&levels[l - 1], &levels[l]));
    }
    (0..levels.len())
        .map(|l| (levels[l].len() - boundary_ranks[l] - boundary_ranks[l + 1]) as u64)
        .collect()
}

fn boundary_matrix(targets: &[u64], sources: &[u64]) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; sources.len()]; targets.len()];
    for (col, &s) in sources.iter().enumerate() {
        let mut sign = 1i64;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros();
            let face = s & !(1u64 << v);
            let row = targets
                .binary_search(&face)
                .expect("face of a complex member is a member");
            rows[row][col] = sign;
            sign = -sign;
            bits &= bits - 1;
        }
    }
    rows
}

/// Multigraded Betti numbers of an ideal over a chosen field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    num_vars: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, Vec<u32>), u64>,
}

impl BettiTable {
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn entries(&self) -> &BTreeMap<(usize, Vec<u32>), u64> {
        &self.entries
    }

    /// beta_i: total Betti number at homological index i.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((idx, _), _)| *idx == i)
            .map(|(_, rank)| rank)
            .sum()
    }

    /// t_i: maximal total degree at homological index i, None when F_i = 0.
    pub fn t(&self, i: usize) -> Option<u64> {
        self.entries
            .iter()
            .filter(|((idx, _), _)| *idx == i)
            .map(|((_, alpha), _)| alpha.iter().map(|&e| e as u64).sum())
            .max()
    }

    /// Projective dimension of the ideal.
    pub fn pd(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity: max over i of t_i - i.
    pub fn reg(&self) -> u64 {
        self.entries
            .iter()
            .map(|((i, alpha), _)| alpha.iter().map(|&e| e as u64).sum::<u64>() - *i as u64)
            .max()
            .unwrap_or(0)
    }

    /// depth(R/I) via Auslander-Buchsbaum: r - pd(I) - 1.
    pub fn depth_quotient(&self) -> u64 {
        self.num_vars as u64 - self.pd() as u64 - 1
    }

    /// The maximal t_i over all homological indices.
    pub fn max_t(&self) -> u64 {
        self.entries
            .keys()
            .map(|(_, alpha)| alpha.iter().map(|&e| e as u64).sum())
            .max()
            .unwrap_or(0)
    }
}

/// Compute the multigraded Betti table of a proper monomial ideal by
/// scanning the box [0, join of generators]: each multidegree alpha with
/// x^alpha in I whose upper Koszul complex is not a cone contributes
/// beta_(i,alpha) = rank Htilde_(i-1)(K^alpha).
pub fn betti_table(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<BettiTable> {
    betti_table_impl(ideal, field, caps, true)
}

pub(crate) fn betti_table_impl(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    caps: &Caps,
    prune_cones: bool,
) -> Result<BettiTable> {
    field.validate()?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let join = ideal.generator_join();
    let bounds = join.exponents();
    let mut box_size: u64 = 1;
    for &b in bounds {
        box_size = box_size.saturating_mul(b as u64 + 1);
    }
    if box_size > caps.betti_box {
        return Err(Error::CapExceeded {
            cap: "betti-box",
            needed: box_size,
            limit: caps.betti_box,
        });
    }

    let chunk: u64 = 4096;
    let n_chunks = box_size.div_ceil(chunk);
    let partials: Vec<Vec<((usize, Vec<u32>), u64)>> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * chunk;
            let hi = (lo + chunk).min(box_size);
            let mut alpha = decode_degree(lo, bounds);
            let mut out = Vec::new();
            for idx in lo..hi {
                if idx > lo {
                    advance(&mut alpha, bounds);
                }
                scan_degree(ideal, &alpha, &field, prune_cones, &mut out);
            }
            out
        })
        .collect();

    let mut entries = BTreeMap::new();
    for partial in partials {
        for (key, rank) in partial {
            entries.insert(key, rank);
        }
    }
    let table = BettiTable {
        num_vars: ideal.num_vars(),
        field,
        entries,
    };
    assert_eq!(
        table.t(0),
        Some(ideal.max_gen_degree()),
        "t_0 must equal the maximal generator degree"
    );
    Ok(table)
}

fn decode_degree(mut idx: u64, bounds: &[u32]) -> Vec<u32> {
    let mut alpha = vec![0u32; bounds.len()];
    for j in (0..bounds.len()).rev() {
        let base = bounds[j] as u64 + 1;
        alpha[j] = (idx % base) as u32;
        idx /= base;
    }
    alpha
}

fn scan_degree(
    ideal: &MonomialIdeal,
    alpha_raw: &[u32],
    field: &FieldSpec,
    prune_cones: bool,
    out: &mut Vec<((usize, Vec<u32>), u64)>,
) {
    let alpha = ExponentVector::new(alpha_raw.to_vec());
    let support = alpha.support();
    let Some(facets) = koszul_facets(ideal, &alpha, &support) else {
        return;
    };
    let complex = SimplicialComplex::from_facets(support.len(), facets);
    if prune_cones && complex.cone_apex().is_some() {
        return;
    }
    let ranks = homology_ranks(&complex, field);
    for (i, &rank) in ranks.iter().enumerate() {
        if rank > 0 {
            out.push(((i, alpha_raw.to_vec()), rank));
        }
    }
}

/// reg(I) over the given field.
pub fn reg(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<u64> {
    Ok(betti_table(ideal, field, caps)?.reg())
}

/// pd(I) over the given field.
pub fn pd(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<usize> {
    Ok(betti_table(ideal, field, caps)?.pd())
}

/// t_i(I) over the given field; None when F_i = 0.
pub fn t_i(ideal: &MonomialIdeal, i: usize, field: FieldSpec, caps: &Caps) -> Result<Option<u64>> {
    Ok(betti_table(ideal, field, caps)?.t(i))
}

/// depth(R/I) over the given field.
pub fn depth_quotient(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<u64> {
    Ok(betti_table(ideal, field, caps)?.depth_quotient())
}

/// Whether an ideal generated in a single degree d has a d-linear
/// resolution, i.e. reg(I) = d.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<bool> {
    let d = ideal.max_gen_degree();
    if ideal.min_gen_degree() != d {
        return Err(Error::MixedGeneratorDegrees);
    }
    Ok(reg(ideal, field, caps)? == d)
}

/// Whether every degree component I_<d> has a d-linear resolution for d
/// from the minimal to the maximal generator degree.
///
/// The component I_<d> is checked through the subideal I(<=d) spanned by
/// the generators of degree at most d: K^alpha(I_<d>) is the
/// (|alpha|-d-1)-skeleton of K^alpha(I(<=d)), so the two complexes share
/// homology strictly below the top dimension, and the top dimension sits
/// exactly on the linear strand. Hence I_<d> is d-linear iff
/// reg(I(<=d)) <= d, which keeps every check inside the box of I itself.
pub fn is_componentwise_linear(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    caps: &Caps,
) -> Result<bool> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut degrees: Vec<u64> = ideal.gens().iter().map(|g| g.degree()).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        let sub = ideal
            .generators_up_to_degree(d)
            .expect("d is a generator degree");
        if betti_table(&sub, field, caps)?.reg() > d {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether P = I + J is a Betti splitting over the given field:
/// beta_i(P) = beta_i(I) + beta_i(J) + beta_(i-1)(I cap J) for all i.
pub fn is_betti_splitting(
    p: &MonomialIdeal,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    field: FieldSpec,
    caps: &Caps,
) -> Result<bool> {
    let mut sum_gens = i.gens().to_vec();
    sum_gens.extend(j.gens().iter().cloned());
    let sum = MonomialIdeal::new(p.num_vars(), sum_gens)?;
    if &sum != p {
        return Err(Error::InvalidDecomposition(
            "P is not the sum of I and J".into(),
        ));
    }
    let table_p = betti_table(p, field, caps)?;
    let table_i = betti_table(i, field, caps)?;
    let table_j = betti_table(j, field, caps)?;
    let table_ij = betti_table(&i.intersect(j)?, field, caps)?;
    let top = table_p
        .pd()
        .max(table_i.pd())
        .max(table_j.pd())
        .max(table_ij.pd() + 1);
    for idx in 0..=top {
        let lhs = table_p.total(idx);
        let rhs = table_i.total(idx)
            + table_j.total(idx)
            + if idx == 0 { 0 } else { table_ij.total(idx - 1) };
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of the variable-splitting search. `Unknown` carries no
/// information: failure of the search proves nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitVerdict {
    Proved(SplitCertificate),
    Unknown,
}

/// Reduction tree witnessing the Koszul property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitCertificate {
    /// The unit ideal (a free module).
    Free,
    Principal,
    /// Generated in one degree with a linear resolution.
    LinearResolution {
        degree: u64,
    },
    /// I = x I' + T with T inside m I'; Koszulness descends to T.
    Split {
        var: usize,
        factor: Box<SplitCertificate>,
        remainder: Option<Box<SplitCertificate>>,
    },
}

impl SplitCertificate {
    /// Human-readable rendering of the reduction tree.
    pub fn render(&self, names: &[String], indent: usize) -> String {
        let pad = "  ".repeat(indent);
        match self {
            SplitCertificate::Free => format!("{pad}unit ideal (free)"),
            SplitCertificate::Principal => format!("{pad}principal ideal"),
            SplitCertificate::LinearResolution { degree } => {
                format!("{pad}{degree}-linear resolution")
            }
            SplitCertificate::Split {
                var,
                factor,
                remainder,
            } => {
                let mut s = format!("{pad}split at {}:\n", names[*var]);
                s.push_str(&format!("{pad}  factor:\n"));
                s.push_str(&factor.render(names, indent + 2));
                if let Some(t) = remainder {
                    s.push('\n');
                    s.push_str(&format!("{pad}  remainder:\n"));
                    s.push_str(&t.render(names, indent + 2));
                }
                s
            }
        }
    }
}

/// Search for a proof that I is Koszul by repeatedly writing I = x I' + T
/// with I' Koszul and T inside m I', descending into T. Base cases are
/// principal ideals and equigenerated ideals with linear resolutions.
pub fn koszul_split_prover(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    caps: &Caps,
) -> Result<SplitVerdict> {
    let depth_cap = ideal.num_vars() + 1;
    Ok(match prove_koszul(ideal, field, caps, depth_cap)? {
        Some(cert) => SplitVerdict::Proved(cert),
        None => SplitVerdict::Unknown,
    })
}

fn prove_koszul(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    caps: &Caps,
    depth: usize,
) -> Result<Option<SplitCertificate>> {
    if ideal.is_unit() {
        return Ok(Some(SplitCertificate::Free));
    }
    if ideal.is_principal() {
        return Ok(Some(SplitCertificate::Principal));
    }
    let d = ideal.max_gen_degree();
    if ideal.min_gen_degree() == d && reg(ideal, field, caps)? == d {
        return Ok(Some(SplitCertificate::LinearResolution { degree: d }));
    }
    if depth == 0 {
        return Ok(None);
    }
    let r = ideal.num_vars();
    for var in 0..r {
        let mut factor_gens = Vec::new();
        let mut remainder_gens = Vec::new();
        for g in ideal.gens() {
            match g.lower(var) {
                Some(divided) => factor_gens.push(divided),
                None => remainder_gens.push(g.clone()),
            }
        }
        if factor_gens.is_empty() {
            continue;
        }
        let factor = MonomialIdeal::new(r, factor_gens)?;
        if remainder_gens.is_empty() {
            // I = x I', so I is a shift of I'
            if let Some(cert) = prove_koszul(&factor, field, caps, depth - 1)? {
                return Ok(Some(SplitCertificate::Split {
                    var,
                    factor: Box::new(cert),
                    remainder: None,
                }));
            }
            continue;
        }
        // T must sit inside m I': every generator of T strictly divisible
        // by a generator of I'
        let inside = remainder_gens.iter().all(|t| {
            factor
                .gens()
                .iter()
                .any(|g| g.divides(t) && g.degree() < t.degree())
        });
        if !inside {
            continue;
        }
        let remainder = MonomialIdeal::new(r, remainder_gens)?;
        if let Some(factor_cert) = prove_koszul(&factor, field, caps, depth - 1)? {
            if let Some(remainder_cert) = prove_koszul(&remainder, field, caps, depth - 1)? {
                return Ok(Some(SplitCertificate::Split {
                    var,
                    factor: Box::new(factor_cert),
                    remainder: Some(Box::new(remainder_cert)),
                }));
            }
        }
    }
    Ok(None)
}

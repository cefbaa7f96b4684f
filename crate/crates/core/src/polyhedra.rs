//! Exact rational polyhedral kernel.
//!
//! Newton polyhedra are produced by a double-description conversion from
//! the vertex/ray representation; vertex enumeration of halfspace systems
//! walks independent constraint subsets with a fraction-free incremental
//! echelon. No floating point anywhere.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::ElimInt;
use crate::monomial::{ExponentVector, MonomialIdeal};

/// Point of R^r with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalVector(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalVector(
            coords
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// |v| = v_1 + ... + v_r.
    pub fn coordinate_sum(&self) -> BigRational {
        self.0.iter().sum()
    }

    pub fn scaled(&self, n: u32) -> Self {
        let factor = BigRational::from(BigInt::from(n));
        RationalVector(self.0.iter().map(|c| c * &factor).collect())
    }
}

/// Halfspace `<a, x> >= b` with primitive integer data.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    normal: Vec<i64>,
    offset: i64,
}

impl HalfSpace {
    pub fn new(normal: Vec<i64>, offset: i64) -> Result<Self> {
        if normal.iter().all(|&a| a == 0) {
            return Err(Error::NumericRange("halfspace normal must be nonzero"));
        }
        let mut hs = HalfSpace { normal, offset };
        hs.normalize();
        Ok(hs)
    }

    fn normalize(&mut self) {
        let mut g = self.offset.unsigned_abs();
        for &a in &self.normal {
            g = g.gcd(&a.unsigned_abs());
        }
        if g > 1 {
            for a in self.normal.iter_mut() {
                *a /= g as i64;
            }
            self.offset /= g as i64;
        }
    }

    pub fn normal(&self) -> &[i64] {
        &self.normal
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// Sum of the normal entries (all our facet normals are nonnegative).
    pub fn normal_sum(&self) -> i64 {
        self.normal.iter().sum()
    }

    pub fn satisfied_by(&self, v: &RationalVector) -> bool {
        let mut acc = BigRational::zero();
        for (a, x) in self.normal.iter().zip(v.coords()) {
            acc += BigRational::from(BigInt::from(*a)) * x;
        }
        acc >= BigRational::from(BigInt::from(self.offset))
    }

    fn satisfied_by_lattice(&self, point: &[u32]) -> bool {
        let mut acc: i128 = 0;
        for (a, &x) in self.normal.iter().zip(point) {
            acc += *a as i128 * x as i128;
        }
        acc >= self.offset as i128
    }
}

/// Halfspace system in the nonnegative orthant; the orthant constraints
/// `x_i >= 0` are always part of the list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HPolyhedron {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
}

impl HPolyhedron {
    /// Build from a halfspace list; orthant constraints are added and the
    /// list is sorted and deduplicated.
    pub fn new(dim: usize, mut halfspaces: Vec<HalfSpace>) -> Self {
        for i in 0..dim {
            let mut normal = vec![0i64; dim];
            normal[i] = 1;
            halfspaces.push(HalfSpace { normal, offset: 0 });
        }
        halfspaces.sort();
        halfspaces.dedup();
        HPolyhedron { dim, halfspaces }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    /// Non-orthant halfspaces, i.e. genuine facet data.
    pub fn facet_halfspaces(&self) -> impl Iterator<Item = &HalfSpace> {
        self.halfspaces.iter().filter(|h| !is_orthant_row(h))
    }

    /// Membership test for an exact rational point.
    pub fn member(&self, v: &RationalVector) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(self.halfspaces.iter().all(|h| h.satisfied_by(v)))
    }

    fn member_lattice(&self, point: &[u32]) -> bool {
        self.halfspaces
            .iter()
            .all(|h| h.satisfied_by_lattice(point))
    }

    /// Scale by n: every offset b becomes n*b.
    pub fn scale(&self, n: u32) -> Self {
        let halfspaces = self
            .halfspaces
            .iter()
            .map(|h| {
                let mut scaled = HalfSpace {
                    normal: h.normal.clone(),
                    offset: h.offset * n as i64,
                };
                scaled.normalize();
                scaled
            })
            .collect();
        HPolyhedron::new(self.dim, halfspaces)
    }

    /// Exact vertex set. Uses the double-description fast path; the
    /// r-subset enumeration of [`Self::vertices_by_enumeration`] is the
    /// reference implementation the fast path is tested against.
    pub fn vertices(&self, caps: &Caps) -> Result<VertexSet> {
        self.check_vertex_caps(caps)?;
        let vertices = self.vertices_dd()?;
        // every vertex must satisfy all halfspaces and be tight on r
        // linearly independent constraints
        for v in &vertices.vertices {
            assert!(
                self.halfspaces.iter().all(|h| h.satisfied_by(v)),
                "vertex violates a halfspace"
            );
            assert_eq!(
                self.tight_rank(v),
                self.dim,
                "vertex is not tight on {} independent constraints",
                self.dim
            );
        }
        Ok(vertices)
    }

    /// Exact vertex set by enumeration of independent r-subsets of the
    /// constraints, solving each subsystem exactly and filtering by
    /// feasibility.
    pub fn vertices_by_enumeration(&self, caps: &Caps) -> Result<VertexSet> {
        self.check_vertex_caps(caps)?;
        let mut search = VertexSearch::<i128>::new(self);
        match search.run() {
            Some(found) => Ok(VertexSet::from_set(found)),
            None => {
                // i128 overflow: repeat in arbitrary precision
                let mut search = VertexSearch::<BigInt>::new(self);
                let found = search.run().expect("BigInt elimination cannot overflow");
                Ok(VertexSet::from_set(found))
            }
        }
    }

    fn check_vertex_caps(&self, caps: &Caps) -> Result<()> {
        if self.dim > caps.vertex_dim {
            return Err(Error::VertexDimension {
                dim: self.dim,
                limit: caps.vertex_dim,
            });
        }
        if self.halfspaces.len() > caps.vertex_constraints {
            return Err(Error::CapExceeded {
                cap: "vertex-constraints",
                needed: self.halfspaces.len() as u64,
                limit: caps.vertex_constraints as u64,
            });
        }
        Ok(())
    }

    /// Rank of the constraints tight at v.
    fn tight_rank(&self, v: &RationalVector) -> usize {
        let tight: Vec<Vec<i64>> = self
            .halfspaces
            .iter()
            .filter(|h| {
                let mut acc = BigRational::zero();
                for (a, x) in h.normal.iter().zip(v.coords()) {
                    acc += BigRational::from(BigInt::from(*a)) * x;
                }
                acc == BigRational::from(BigInt::from(h.offset))
            })
            .map(|h| h.normal.clone())
            .collect();
        crate::linalg::rank_over_q(&tight)
    }

    /// Vertices via double description of the homogenisation cone
    /// {(x, t) : <a, x> - b t >= 0, t >= 0, x >= 0}: extreme rays with
    /// t > 0 are the vertices x/t.
    fn vertices_dd(&self) -> Result<VertexSet> {
        let n = self.dim + 1;
        let mut basis_rows: Vec<usize> = Vec::new();
        let mut constraints: Vec<Vec<BigInt>> = Vec::new();
        for (idx, h) in self.halfspaces.iter().enumerate() {
            let mut row: Vec<BigInt> = h.normal.iter().map(|&a| BigInt::from(a)).collect();
            row.push(BigInt::from(-h.offset));
            constraints.push(row);
            if is_orthant_row(h) {
                basis_rows.push(idx);
            }
        }
        let mut t_row = vec![BigInt::zero(); n];
        t_row[self.dim] = BigInt::from(1);
        constraints.push(t_row);
        basis_rows.push(constraints.len() - 1);
        debug_assert_eq!(basis_rows.len(), n, "orthant rows are always present");
        let rays = cone_extreme_rays(n, &constraints, &basis_rows);
        let mut found = BTreeSet::new();
        for ray in rays {
            let t = &ray[self.dim];
            if t.is_zero() {
                continue; // recession direction
            }
            debug_assert!(t.is_positive());
            let coords: Vec<BigRational> = ray[..self.dim]
                .iter()
                .map(|c| BigRational::new(c.clone(), t.clone()))
                .collect();
            found.insert(coords);
        }
        Ok(VertexSet::from_set(found))
    }
}

fn is_orthant_row(h: &HalfSpace) -> bool {
    h.offset == 0 && h.normal.iter().filter(|&&a| a != 0).count() == 1 && h.normal_sum() == 1
}

/// Vertices of a polyhedron, canonically ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    vertices: Vec<RationalVector>,
}

impl VertexSet {
    fn from_set(set: BTreeSet<Vec<BigRational>>) -> Self {
        VertexSet {
            vertices: set.into_iter().map(RationalVector).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &RationalVector> {
        self.vertices.iter()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &RationalVector) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    /// max |v| over the vertex set.
    pub fn max_coordinate_sum(&self) -> Option<BigRational> {
        self.vertices.iter().map(|v| v.coordinate_sum()).max()
    }
}

/// Depth-first walk over increasing constraint indices keeping a
/// fraction-free echelon of the chosen rows; every full-rank leaf yields
/// the unique solution of its subsystem, kept when it satisfies all
/// constraints. Returns None on arithmetic overflow of `T`.
struct VertexSearch<'a, T: ElimInt> {
    poly: &'a HPolyhedron,
    // echelon rows are augmented with the transformed right-hand side
    rows: Vec<Vec<T>>,
    pivot_cols: Vec<usize>,
    pivots: Vec<T>,
    found: BTreeSet<Vec<BigRational>>,
    overflow: bool,
}

impl<'a, T: ElimInt> VertexSearch<'a, T> {
    fn new(poly: &'a HPolyhedron) -> Self {
        VertexSearch {
            poly,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
            pivots: Vec::new(),
            found: BTreeSet::new(),
            overflow: false,
        }
    }

    fn run(&mut self) -> Option<BTreeSet<Vec<BigRational>>> {
        self.descend(0);
        if self.overflow {
            return None;
        }
        Some(std::mem::take(&mut self.found))
    }

    fn augmented_row(&self, idx: usize) -> Vec<T> {
        let h = &self.poly.halfspaces[idx];
        h.normal
            .iter()
            .map(|&a| T::from_i64(a))
            .chain(std::iter::once(T::from_i64(h.offset)))
            .collect()
    }

    /// Bareiss reduction of an incoming augmented row by the echelon.
    /// Returns None when the row is dependent (normal part vanishes).
    fn reduce(&mut self, mut row: Vec<T>) -> Option<(Vec<T>, usize)> {
        let dim = self.poly.dim;
        for k in 0..self.rows.len() {
            let coef = row[self.pivot_cols[k]].clone();
            let prev = if k == 0 {
                T::one_val()
            } else {
                self.pivots[k - 1].clone()
            };
            for j in 0..row.len() {
                let a = match self.pivots[k].checked_mul_val(&row[j]) {
                    Some(v) => v,
                    None => {
                        self.overflow = true;
                        return None;
                    }
                };
                let t = if coef.is_zero_val() {
                    a
                } else {
                    match self.rows[k][j]
                        .checked_mul_val(&coef)
                        .and_then(|b| a.checked_sub_val(&b))
                    {
                        Some(v) => v,
                        None => {
                            self.overflow = true;
                            return None;
                        }
                    }
                };
                row[j] = t.exact_div(&prev);
            }
            row[self.pivot_cols[k]] = T::zero_val();
        }
        let pivot_col = (0..dim).find(|&j| !row[j].is_zero_val())?;
        Some((row, pivot_col))
    }

    fn descend(&mut self, start: usize) {
        if self.overflow {
            return;
        }
        let dim = self.poly.dim;
        if self.rows.len() == dim {
            self.record_leaf();
            return;
        }
        let remaining_needed = dim - self.rows.len();
        let total = self.poly.halfspaces.len();
        for idx in start..total {
            if total - idx < remaining_needed {
                break;
            }
            let row = self.augmented_row(idx);
            if let Some((reduced, pivot_col)) = self.reduce(row) {
                self.rows.push(reduced);
                self.pivot_cols.push(pivot_col);
                let pivot = self.rows.last().unwrap()[pivot_col].clone();
                self.pivots.push(pivot);
                self.descend(idx + 1);
                self.rows.pop();
                self.pivot_cols.pop();
                self.pivots.pop();
            }
            if self.overflow {
                return;
            }
        }
    }

    fn record_leaf(&mut self) {
        let dim = self.poly.dim;
        // back-substitute the triangular echelon; pivot columns are a
        // permutation of 0..dim at a full-rank leaf
        let mut solution: Vec<Option<BigRational>> = vec![None; dim];
        for k in (0..dim).rev() {
            let row = &self.rows[k];
            let mut rhs = BigRational::from(row[dim].to_bigint());
            for j in 0..dim {
                if j == self.pivot_cols[k] {
                    continue;
                }
                if !row[j].is_zero_val() {
                    let xj = solution[j]
                        .as_ref()
                        .expect("later pivot columns are already solved");
                    rhs -= BigRational::from(row[j].to_bigint()) * xj;
                }
            }
            solution[self.pivot_cols[k]] =
                Some(rhs / BigRational::from(row[self.pivot_cols[k]].to_bigint()));
        }
        let point = RationalVector(solution.into_iter().map(|x| x.unwrap()).collect());
        if self.poly.halfspaces.iter().all(|h| h.satisfied_by(&point)) {
            self.found.insert(point.0);
        }
    }
}

/// NP(I): convex hull of the generator exponents plus the nonnegative
/// orthant, as a primitive facet system.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<HPolyhedron> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let dim = ideal.num_vars();
    let points: Vec<Vec<i64>> = ideal
        .gens()
        .iter()
        .map(|g| g.exponents().iter().map(|&e| e as i64).collect())
        .collect();
    let rays = dual_cone_rays(dim, &points);
    let mut halfspaces = Vec::new();
    for ray in rays {
        let normal: Vec<BigInt> = ray[..dim].to_vec();
        let offset = -ray[dim].clone();
        if normal.iter().all(|a| a.is_zero()) {
            continue; // the trivial inequality 0 >= -c
        }
        let normal: Result<Vec<i64>> = normal
            .iter()
            .map(|a| i64::try_from(a).map_err(|_| Error::NumericRange("facet normal exceeds i64")))
            .collect();
        let offset =
            i64::try_from(&offset).map_err(|_| Error::NumericRange("facet offset exceeds i64"))?;
        halfspaces.push(HalfSpace::new(normal?, offset)?);
    }
    Ok(HPolyhedron::new(dim, halfspaces))
}

/// Extreme rays of the cone of valid inequalities
/// `{(a, c) : <a, p> + c >= 0 for all points p, a_j >= 0}`. Rays
/// correspond to the facets of conv(points) + R_+^dim (plus one trivial
/// ray).
fn dual_cone_rays(dim: usize, points: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let n = dim + 1;
    debug_assert!(!points.is_empty());
    // constraint rows of the cone: orthant rows (e_j, 0), then (p_i, 1)
    let mut constraints: Vec<Vec<BigInt>> = Vec::with_capacity(dim + points.len());
    for j in 0..dim {
        let mut row = vec![BigInt::zero(); n];
        row[j] = BigInt::from(1);
        constraints.push(row);
    }
    for p in points {
        let mut row: Vec<BigInt> = p.iter().map(|&v| BigInt::from(v)).collect();
        row.push(BigInt::from(1));
        constraints.push(row);
    }
    let basis_rows: Vec<usize> = (0..=dim).collect();
    cone_extreme_rays(n, &constraints, &basis_rows)
}

/// Double description method for a pointed cone `{y : <c, y> >= 0}` over
/// the given constraint rows. `basis_rows` must index n linearly
/// independent constraints; the walk starts from the simplicial cone they
/// cut out and inserts the remaining constraints one at a time,
/// maintaining the extreme rays and their tight sets.
fn cone_extreme_rays(
    n: usize,
    constraints: &[Vec<BigInt>],
    basis_rows: &[usize],
) -> Vec<Vec<BigInt>> {
    debug_assert_eq!(basis_rows.len(), n);
    let basis: Vec<Vec<BigRational>> = basis_rows
        .iter()
        .map(|&i| {
            constraints[i]
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect()
        })
        .collect();
    let mut rays: Vec<Ray> = (0..n)
        .map(|k| {
            let column = solve_rational_unit(&basis, k);
            Ray::new(primitive_ray(column), constraints, basis_rows)
        })
        .collect();

    let in_basis: BTreeSet<usize> = basis_rows.iter().copied().collect();
    for step in 0..constraints.len() {
        if in_basis.contains(&step) {
            continue;
        }
        let h = &constraints[step];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(&r.coords, h)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            for (ray, value) in rays.iter_mut().zip(&values) {
                if value.is_zero() {
                    ray.zeroset.set(step);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (ray, value) in rays.iter().zip(&values) {
            if !value.is_negative() {
                let mut kept = ray.clone();
                if value.is_zero() {
                    kept.zeroset.set(step);
                }
                next.push(kept);
            }
        }
        for (i, vi) in values.iter().enumerate() {
            if !vi.is_positive() {
                continue;
            }
            for (j, vj) in values.iter().enumerate() {
                if !vj.is_negative() {
                    continue;
                }
                if !adjacent(&rays, i, j, n) {
                    continue;
                }
                // positive combination vanishing on h
                let mut coords = Vec::with_capacity(n);
                for k in 0..n {
                    coords.push(vi * &rays[j].coords[k] - vj * &rays[i].coords[k]);
                }
                let mut zeroset = rays[i].zeroset.intersection(&rays[j].zeroset);
                zeroset.set(step);
                next.push(Ray::from_parts(coords, zeroset));
            }
        }
        rays = next;
    }

    rays.into_iter().map(|r| r.coords).collect()
}

/// Solve B c = e_k by rational elimination; B must be invertible.
fn solve_rational_unit(basis: &[Vec<BigRational>], k: usize) -> Vec<BigRational> {
    let n = basis.len();
    let mut mat: Vec<Vec<BigRational>> = basis
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.push(if i == k {
                BigRational::from(BigInt::from(1))
            } else {
                BigRational::zero()
            });
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&i| !mat[i][col].is_zero())
            .expect("basis rows are linearly independent");
        mat.swap(col, pivot);
        let pivot_val = mat[col][col].clone();
        for j in col..=n {
            mat[col][j] = &mat[col][j] / &pivot_val;
        }
        for i in 0..n {
            if i != col && !mat[i][col].is_zero() {
                let factor = mat[i][col].clone();
                for j in col..=n {
                    let sub = &factor * &mat[col][j];
                    mat[i][j] = &mat[i][j] - sub;
                }
            }
        }
    }
    (0..n).map(|i| mat[i][n].clone()).collect()
}

/// Scale a rational vector to a primitive integer vector, preserving
/// direction.
fn primitive_ray(column: Vec<BigRational>) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::from(1);
    for c in &column {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    column
        .into_iter()
        .map(|c| (c * BigRational::from(denom_lcm.clone())).to_integer())
        .collect()
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone)]
struct Ray {
    coords: Vec<BigInt>,
    zeroset: BitSet,
}

impl Ray {
    fn new(coords: Vec<BigInt>, constraints: &[Vec<BigInt>], processed: &[usize]) -> Self {
        let mut zeroset = BitSet::new(constraints.len());
        for &idx in processed {
            if dot(&coords, &constraints[idx]).is_zero() {
                zeroset.set(idx);
            }
        }
        Ray::from_parts(coords, zeroset)
    }

    fn from_parts(mut coords: Vec<BigInt>, zeroset: BitSet) -> Self {
        let mut g = BigInt::zero();
        for c in &coords {
            g = g.gcd(c);
        }
        if g > BigInt::from(1) {
            for c in coords.iter_mut() {
                *c = &*c / &g;
            }
        }
        Ray { coords, zeroset }
    }
}

/// Two rays are adjacent iff no third ray is tight on every constraint
/// both of them are tight on.
fn adjacent(rays: &[Ray], i: usize, j: usize, n: usize) -> bool {
    let common = rays[i].zeroset.intersection(&rays[j].zeroset);
    if common.count() + 2 < n {
        return false;
    }
    for (k, ray) in rays.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        if common.subset_of(&ray.zeroset) {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(_capacity: usize) -> Self {
        BitSet { words: Vec::new() }
    }

    fn set(&mut self, idx: usize) {
        let word = idx / 64;
        if self.words.len() <= word {
            self.words.resize(word + 1, 0);
        }
        self.words[word] |= 1 << (idx % 64);
    }

    fn intersection(&self, other: &Self) -> Self {
        let len = self.words.len().min(other.words.len());
        BitSet {
            words: (0..len).map(|i| self.words[i] & other.words[i]).collect(),
        }
    }

    fn subset_of(&self, other: &Self) -> bool {
        for (i, w) in self.words.iter().enumerate() {
            let o = other.words.get(i).copied().unwrap_or(0);
            if w & !o != 0 {
                return false;
            }
        }
        true
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// SP(I) for the given minimal primary components: the concatenation of
/// their Newton polyhedra facet systems.
pub fn sp_polyhedron(components: &[MonomialIdeal]) -> Result<HPolyhedron> {
    let (first, rest) = components.split_first().ok_or(Error::ZeroIdeal)?;
    let dim = first.num_vars();
    let mut halfspaces = Vec::new();
    for q in std::iter::once(first).chain(rest) {
        if q.num_vars() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: q.num_vars(),
            });
        }
        halfspaces.extend(newton_polyhedron(q)?.halfspaces.into_iter());
    }
    Ok(HPolyhedron::new(dim, halfspaces))
}

/// delta(I) = max |v| over the vertices of SP(I), for the given minimal
/// primary components.
pub fn delta_from_components(components: &[MonomialIdeal], caps: &Caps) -> Result<BigRational> {
    let sp = sp_polyhedron(components)?;
    let vertices = sp.vertices(caps)?;
    vertices
        .max_coordinate_sum()
        .ok_or(Error::NumericRange("polyhedron has no vertices"))
}

/// Integral closure of a monomial ideal: minimal generators are the
/// minimal lattice points of NP(I).
pub fn integral_closure(ideal: &MonomialIdeal, caps: &Caps) -> Result<MonomialIdeal> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let np = newton_polyhedron(ideal)?;
    let join = ideal.generator_join();
    let mut box_size: u64 = 1;
    for &j in join.exponents() {
        box_size = box_size.saturating_mul(j as u64 + 1);
    }
    if box_size > caps.betti_box {
        return Err(Error::CapExceeded {
            cap: "betti-box",
            needed: box_size,
            limit: caps.betti_box,
        });
    }
    let mut members = Vec::new();
    let mut point = vec![0u32; ideal.num_vars()];
    loop {
        if np.member_lattice(&point) {
            members.push(ExponentVector::new(point.clone()));
        }
        if !advance(&mut point, join.exponents()) {
            break;
        }
    }
    MonomialIdeal::new(ideal.num_vars(), members)
}

/// Odometer step through the box [0, bound]; false when exhausted.
pub(crate) fn advance(point: &mut [u32], bound: &[u32]) -> bool {
    for i in (0..point.len()).rev() {
        if point[i] < bound[i] {
            point[i] += 1;
            for p in point.iter_mut().skip(i + 1) {
                *p = 0;
            }
            return true;
        }
    }
    false
}

/// J_n: the intersection of the integral closures of the n-th powers of
/// the minimal primary components.
pub fn jn(components: &[MonomialIdeal], n: u32, caps: &Caps) -> Result<MonomialIdeal> {
    let (first, rest) = components.split_first().ok_or(Error::ZeroIdeal)?;
    let mut acc = integral_closure(&first.power(n)?, caps)?;
    for q in rest {
        acc = acc.intersect(&integral_closure(&q.power(n)?, caps)?)?;
    }
    Ok(acc)
}

/// Check `|a| <= r^2 d(I)^(r-1)` for every facet normal of SP(I).
pub fn facet_bound_check(ideal: &MonomialIdeal, components: &[MonomialIdeal]) -> Result<bool> {
    let sp = sp_polyhedron(components)?;
    let r = ideal.num_vars() as u64;
    let d = ideal.max_gen_degree();
    let bound = BigInt::from(r * r) * BigInt::from(d).pow(r.saturating_sub(1) as u32);
    Ok(sp
        .halfspaces()
        .iter()
        .all(|h| BigInt::from(h.normal_sum()) <= bound))
}

//! Exact linear algebra: fraction-free Gaussian elimination for ranks and
//! square solves over the rationals, and dense elimination over GF(p).
//!
//! Integer elimination runs in i128 first and retries in arbitrary
//! precision on overflow, so results are exact in all cases.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) trait ElimInt: Clone + PartialEq + Sized {
    fn zero_val() -> Self;
    fn one_val() -> Self;
    fn is_zero_val(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn checked_mul_val(&self, o: &Self) -> Option<Self>;
    fn checked_sub_val(&self, o: &Self) -> Option<Self>;
    fn exact_div(&self, o: &Self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl ElimInt for i128 {
    fn zero_val() -> Self {
        0
    }
    fn one_val() -> Self {
        1
    }
    fn is_zero_val(&self) -> bool {
        *self == 0
    }
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn checked_mul_val(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn checked_sub_val(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn exact_div(&self, o: &Self) -> Self {
        debug_assert!(*o != 0 && self % o == 0);
        self / o
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ElimInt for BigInt {
    fn zero_val() -> Self {
        BigInt::zero()
    }
    fn one_val() -> Self {
        BigInt::one()
    }
    fn is_zero_val(&self) -> bool {
        self.is_zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn checked_mul_val(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub_val(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn exact_div(&self, o: &Self) -> Self {
        debug_assert!(!o.is_zero() && (self % o).is_zero());
        self / o
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Bareiss condensation; returns None on i128 overflow so the caller can
/// retry in BigInt. Entries stay determinants of minors, divisions exact.
fn rank_bareiss<T: ElimInt>(mut mat: Vec<Vec<T>>) -> Option<usize> {
    let nrows = mat.len();
    if nrows == 0 {
        return Some(0);
    }
    let ncols = mat[0].len();
    let mut rank = 0usize;
    let mut prev = T::one_val();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let pivot = (rank..nrows).find(|&i| !mat[i][col].is_zero_val());
        let Some(pivot) = pivot else { continue };
        mat.swap(rank, pivot);
        let pivot_row = mat[rank].clone();
        let pivot_val = pivot_row[col].clone();
        for row in mat.iter_mut().skip(rank + 1) {
            if row[col].is_zero_val() {
                for entry in row.iter_mut().skip(col + 1) {
                    let scaled = pivot_val.checked_mul_val(entry)?;
                    *entry = scaled.exact_div(&prev);
                }
            } else {
                let factor = row[col].clone();
                for (entry, pe) in row.iter_mut().zip(pivot_row.iter()).skip(col + 1) {
                    let a = pivot_val.checked_mul_val(entry)?;
                    let b = factor.checked_mul_val(pe)?;
                    *entry = a.checked_sub_val(&b)?.exact_div(&prev);
                }
                row[col] = T::zero_val();
            }
        }
        prev = pivot_val;
        rank += 1;
    }
    Some(rank)
}

/// Exact rank over the rationals of an integer matrix.
pub fn rank_over_q(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    if let Some(rank) = rank_bareiss(small) {
        return rank;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    rank_bareiss(big).expect("BigInt elimination cannot overflow")
}

/// Rank over GF(p). `p` must be an odd prime below 2^31.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    debug_assert!(p < (1 << 31));
    let mut mat: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let nrows = mat.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = mat[0].len();
    let mut rank = 0usize;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&i| mat[i][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mod_inverse(mat[rank][col], p);
        let pivot_row: Vec<u64> = mat[rank][col..].iter().map(|&v| v * inv % p).collect();
        mat[rank][col..].copy_from_slice(&pivot_row);
        for i in rank + 1..nrows {
            let factor = mat[i][col];
            if factor == 0 {
                continue;
            }
            for j in col..ncols {
                let sub = factor * pivot_row[j - col] % p;
                mat[i][j] = (mat[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn solve_generic<T: ElimInt>(a: &[Vec<i64>], b: &[i64]) -> Option<Option<Vec<BigRational>>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    // augmented fraction-free triangularisation, then rational back-substitution
    let mut mat: Vec<Vec<T>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .map(|&v| T::from_i64(v))
                .chain(std::iter::once(T::from_i64(rhs)))
                .collect()
        })
        .collect();
    let mut prev = T::one_val();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !mat[i][col].is_zero_val());
        let Some(pivot) = pivot else {
            return Some(None); // singular: no unique solution
        };
        mat.swap(col, pivot);
        let pivot_row = mat[col].clone();
        let pivot_val = pivot_row[col].clone();
        for row in mat.iter_mut().skip(col + 1) {
            let factor = row[col].clone();
            for (entry, pe) in row.iter_mut().zip(pivot_row.iter()).skip(col + 1) {
                let a = pivot_val.checked_mul_val(entry)?;
                let term = if factor.is_zero_val() {
                    a
                } else {
                    a.checked_sub_val(&factor.checked_mul_val(pe)?)?
                };
                *entry = term.exact_div(&prev);
            }
            row[col] = T::zero_val();
        }
        prev = pivot_val;
    }
    let mut solution = vec![BigRational::zero(); n];
    for row in (0..n).rev() {
        let mut rhs = BigRational::from(mat[row][n].to_bigint());
        for col in row + 1..n {
            rhs -= BigRational::from(mat[row][col].to_bigint()) * &solution[col];
        }
        solution[row] = rhs / BigRational::from(mat[row][row].to_bigint());
    }
    Some(Some(solution))
}

/// Exact solution of a square integer system; None when singular.
pub fn solve_square(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
    if let Some(result) = solve_generic::<i128>(a, b) {
        return result;
    }
    solve_generic::<BigInt>(a, b).expect("BigInt elimination cannot overflow")
}

//! Brute-force multigraded Betti numbers from the Taylor complex: the
//! chain complex on all generator subsets, with the subset S sitting in
//! multidegree lcm(S). Restricting the reduced-to-k differential to a
//! fixed multidegree keeps exactly the subsets with that lcm, and the
//! strand homology gives the Betti numbers.
//!
//! This is an oracle: it shares nothing with the upper-Koszul path it
//! checks, down to its own rational elimination.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use sympow_core::monomial::{ExponentVector, MonomialIdeal};

/// All multigraded Betti numbers of the ideal over the rationals,
/// keyed by (homological index, multidegree).
pub fn taylor_betti(ideal: &MonomialIdeal) -> BTreeMap<(usize, Vec<u32>), u64> {
    let gens = ideal.gens();
    let m = gens.len();
    assert!(m <= 16, "Taylor oracle is for small generator counts");

    // group subsets by their lcm
    let mut strands: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    for subset in 1u32..(1 << m) {
        let lcm = subset_lcm(gens, subset);
        strands.entry(lcm).or_default().push(subset);
    }

    let mut betti = BTreeMap::new();
    for (degree, subsets) in strands {
        // level k holds the subsets of cardinality k+1 (homological index k)
        let top = subsets
            .iter()
            .map(|s| s.count_ones() as usize)
            .max()
            .expect("strand is nonempty");
        let mut levels: Vec<Vec<u32>> = vec![Vec::new(); top];
        for &s in &subsets {
            levels[s.count_ones() as usize - 1].push(s);
        }
        for level in levels.iter_mut() {
            level.sort_unstable();
        }
        let mut ranks = vec![0usize; top + 1];
        for k in 1..top {
            ranks[k] = strand_rank(gens, &levels[k - 1], &levels[k], &degree);
        }
        for k in 0..top {
            let homology = levels[k].len() - ranks[k] - ranks[k + 1];
            if homology > 0 {
                betti.insert((k, degree.clone()), homology as u64);
            }
        }
    }
    betti
}

fn subset_lcm(gens: &[ExponentVector], subset: u32) -> Vec<u32> {
    let r = gens[0].len();
    let mut lcm = vec![0u32; r];
    for (idx, g) in gens.iter().enumerate() {
        if subset >> idx & 1 == 1 {
            for (l, &e) in lcm.iter_mut().zip(g.exponents()) {
                *l = (*l).max(e);
            }
        }
    }
    lcm
}

/// Rank of the strand differential from `sources` (cardinality k+1) to
/// `targets` (cardinality k): the boundary map keeps only the faces with
/// the same lcm.
fn strand_rank(gens: &[ExponentVector], targets: &[u32], sources: &[u32], degree: &[u32]) -> usize {
    let mut matrix: Vec<Vec<BigRational>> =
        vec![vec![BigRational::zero(); sources.len()]; targets.len()];
    for (col, &s) in sources.iter().enumerate() {
        let mut sign = 1i64;
        let mut bits = s;
        while bits != 0 {
            let member = bits.trailing_zeros();
            let face = s & !(1u32 << member);
            if subset_lcm(gens, face) == degree {
                let row = targets.binary_search(&face).expect("face in strand");
                matrix[row][col] = BigRational::from(num_bigint::BigInt::from(sign));
            }
            sign = -sign;
            bits &= bits - 1;
        }
    }
    rational_rank(matrix)
}

/// Plain Gaussian elimination over the rationals.
fn rational_rank(mut matrix: Vec<Vec<BigRational>>) -> usize {
    let nrows = matrix.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = matrix[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&i| !matrix[i][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, pivot);
        let pivot_value = matrix[rank][col].clone();
        for i in rank + 1..nrows {
            if matrix[i][col].is_zero() {
                continue;
            }
            let factor = &matrix[i][col] / &pivot_value;
            for j in col..ncols {
                let sub = &factor * &matrix[rank][j];
                matrix[i][j] = &matrix[i][j] - sub;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

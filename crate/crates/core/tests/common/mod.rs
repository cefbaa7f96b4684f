//! Shared helpers for the integration suites: a deterministic generator
//! for random ideals and graphs, an isomorphism-deduplicated walk over
//! small graphs, and the Taylor-complex Betti oracle.

pub mod taylor;

use sympow_core::graphs::Graph;
use sympow_core::monomial::{ExponentVector, MonomialIdeal};

/// Splitmix64: tiny deterministic generator so the randomized suites are
/// reproducible across platforms without an RNG dependency.
pub struct Rng(pub u64);

impl Rng {
    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Random proper monomial ideal with the given shape bounds.
pub fn random_ideal(
    rng: &mut Rng,
    max_vars: usize,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    loop {
        let r = 2 + rng.below(max_vars as u64 - 1) as usize;
        let g = 1 + rng.below(max_gens as u64) as usize;
        let gens: Vec<ExponentVector> = (0..g)
            .map(|_| {
                ExponentVector::new(
                    (0..r)
                        .map(|_| rng.below(max_exp as u64 + 1) as u32)
                        .collect(),
                )
            })
            .collect();
        if gens.iter().all(|g| !g.is_one()) && gens.iter().any(|g| g.degree() > 0) {
            return MonomialIdeal::new(r, gens).expect("nonzero generating set");
        }
    }
}

/// Random graph with no isolated vertices.
pub fn random_graph(rng: &mut Rng, min_vertices: usize, max_vertices: usize) -> Graph {
    loop {
        let n = min_vertices as u64 + rng.below((max_vertices - min_vertices + 1) as u64);
        let n = n as usize;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.below(2) == 1 {
                    edges.push((i, j));
                }
            }
        }
        if edges.is_empty() {
            continue;
        }
        let graph = Graph::from_indices(n, &edges).expect("simple by construction");
        if graph.isolated_vertex().is_none() {
            return graph;
        }
    }
}

const SIX: usize = 6;
const SLOTS: usize = SIX * (SIX - 1) / 2;

fn edge_slots() -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for i in 0..SIX {
        for j in i + 1..SIX {
            slots.push((i, j));
        }
    }
    slots
}

fn permutations() -> Vec<Vec<usize>> {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..SIX).collect();
    heap_permute(&mut current, SIX, &mut perms);
    perms
}

fn heap_permute(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..k {
        heap_permute(current, k - 1, out);
        if k % 2 == 0 {
            current.swap(i, k - 1);
        } else {
            current.swap(0, k - 1);
        }
    }
}

/// Every graph with at most six vertices and at least one edge, one
/// representative per isomorphism class, realised on six vertices with
/// the unused ones isolated.
pub fn six_vertex_graphs_up_to_iso() -> Vec<Graph> {
    let slots = edge_slots();
    let slot_index = |i: usize, j: usize| -> usize {
        slots
            .iter()
            .position(|&(a, b)| (a, b) == (i.min(j), i.max(j)))
            .expect("valid slot")
    };
    // per permutation, where each edge slot lands
    let perm_tables: Vec<Vec<usize>> = permutations()
        .iter()
        .map(|perm| {
            slots
                .iter()
                .map(|&(i, j)| slot_index(perm[i], perm[j]))
                .collect()
        })
        .collect();
    let mut representatives = Vec::new();
    for mask in 1u32..(1 << SLOTS) {
        let canonical = perm_tables
            .iter()
            .map(|table| {
                let mut image = 0u32;
                for (slot, &target) in table.iter().enumerate() {
                    if mask >> slot & 1 == 1 {
                        image |= 1 << target;
                    }
                }
                image
            })
            .min()
            .expect("permutation set is nonempty");
        if canonical != mask {
            continue;
        }
        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|&(slot, _)| mask >> slot & 1 == 1)
            .map(|(_, &edge)| edge)
            .collect();
        representatives.push(Graph::from_indices(SIX, &edges).expect("simple"));
    }
    representatives
}

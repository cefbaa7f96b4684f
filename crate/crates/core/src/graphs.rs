//! Graph combinatorics feeding cover ideals: coronas, independence
//! structure, the combinatorial delta formula, the even/odd symbolic
//! power identities, and the odd-degree profile.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::monomial::{intersect_all, ExponentVector, MonomialIdeal};
use crate::polyhedra::RationalVector;

/// Simple undirected graph with ordered, unique vertex labels. The label
/// order fixes the variable order of the cover ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    /// edges as index pairs (i, j) with i < j
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edge_labels: &[(String, String)]) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{label}`")));
            }
        }
        let mut edges = BTreeSet::new();
        for (a, b) in edge_labels {
            let &i = index
                .get(a)
                .ok_or_else(|| Error::InvalidGraph(format!("undeclared vertex `{a}`")))?;
            let &j = index
                .get(b)
                .ok_or_else(|| Error::InvalidGraph(format!("undeclared vertex `{b}`")))?;
            if i == j {
                return Err(Error::InvalidGraph(format!("loop at `{a}`")));
            }
            let edge = (i.min(j), i.max(j));
            if !edges.insert(edge) {
                return Err(Error::InvalidGraph(format!("duplicate edge `{a}-{b}`")));
            }
        }
        Ok(Graph { labels, edges })
    }

    /// Build from vertex count and index pairs, labelling vertices v1..vn.
    pub fn from_indices(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edge_labels: Vec<(String, String)> = edges
            .iter()
            .map(|&(i, j)| (labels[i].clone(), labels[j].clone()))
            .collect();
        Graph::new(labels, &edge_labels)
    }

    /// Complete graph on m vertices.
    pub fn complete(m: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                edges.push((i, j));
            }
        }
        Graph::from_indices(m, &edges).expect("complete graph is simple")
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        let adj = self.adjacency();
        (0..self.labels.len()).find(|&v| adj[v].is_empty())
    }

    /// N(S): neighbours of S outside S.
    pub fn neighbours(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        let adj = self.adjacency();
        let mut out = BTreeSet::new();
        for &v in set {
            for &w in &adj[v] {
                if !set.contains(&w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// Leaves: vertices of degree one, with their unique neighbour.
    pub fn leaves(&self) -> Vec<(usize, usize)> {
        let adj = self.adjacency();
        (0..self.labels.len())
            .filter(|&v| adj[v].len() == 1)
            .map(|v| (v, adj[v][0]))
            .collect()
    }
}

/// J(G): the intersection of the edge primes (x_i, x_j); equivalently the
/// ideal of minimal vertex covers.
pub fn cover_ideal(graph: &Graph) -> Result<MonomialIdeal> {
    if graph.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    edgewise_intersection(graph, 1)
}

fn edgewise_intersection(graph: &Graph, n: u32) -> Result<MonomialIdeal> {
    let r = graph.n_vertices();
    let primes: Vec<MonomialIdeal> = graph
        .edges()
        .map(|(i, j)| {
            MonomialIdeal::new(
                r,
                vec![ExponentVector::unit(r, i), ExponentVector::unit(r, j)],
            )
            .and_then(|p| p.power(n))
        })
        .collect::<Result<_>>()?;
    intersect_all(&primes)
}

/// cg(G, s): attach s pendant edges to every vertex. Leaf labels are
/// deterministic: `<base>_p<index>`. Errors when a base label already
/// uses a leaf name.
pub fn corona(graph: &Graph, s: u32) -> Result<Graph> {
    debug_assert!(s >= 1);
    let mut labels = graph.labels.clone();
    let mut edge_labels: Vec<(String, String)> = graph
        .edges()
        .map(|(i, j)| (graph.labels[i].clone(), graph.labels[j].clone()))
        .collect();
    for base in &graph.labels {
        for k in 1..=s {
            let leaf = format!("{base}_p{k}");
            labels.push(leaf.clone());
            edge_labels.push((base.clone(), leaf));
        }
    }
    Graph::new(labels, &edge_labels)
}

/// delta(J(G)) by the combinatorial formula: r/2 plus half the maximum of
/// |N(S)| - |S| over independent sets S (including the empty set) such
/// that the graph induced on the complement of N[S] has no bipartite
/// component.
pub fn delta_formula(graph: &Graph, caps: &Caps) -> Result<BigRational> {
    if let Some(v) = graph.isolated_vertex() {
        return Err(Error::IsolatedVertex(graph.labels[v].clone()));
    }
    let adj = graph.adjacency();
    let n = graph.n_vertices();
    let mut best: Option<i64> = None;
    let mut visited: u64 = 0;
    let mut set = BTreeSet::new();
    enumerate_independent_sets(&adj, 0, &mut set, &mut visited, caps, &mut |s| {
        let closed: BTreeSet<usize> = s
            .iter()
            .copied()
            .chain(s.iter().flat_map(|&v| adj[v].iter().copied()))
            .collect();
        let rest: Vec<usize> = (0..n).filter(|v| !closed.contains(v)).collect();
        if has_bipartite_component(&adj, &rest) {
            return;
        }
        let n_s = closed.len() - s.len();
        let value = n_s as i64 - s.len() as i64;
        best = Some(best.map_or(value, |b| b.max(value)));
    })?;
    // a maximal independent set always qualifies: its closed
    // neighbourhood covers the graph, leaving the empty induced subgraph
    let best = best.expect("a maximal independent set qualifies");
    Ok(
        (BigRational::from(BigInt::from(n as i64)) + BigRational::from(BigInt::from(best)))
            / BigRational::from(BigInt::from(2)),
    )
}

/// Enumerate all independent sets exactly once, counting against the cap.
fn enumerate_independent_sets(
    adj: &[Vec<usize>],
    start: usize,
    set: &mut BTreeSet<usize>,
    visited: &mut u64,
    caps: &Caps,
    visit: &mut impl FnMut(&BTreeSet<usize>),
) -> Result<()> {
    *visited += 1;
    if *visited > caps.independent_sets {
        return Err(Error::CapExceeded {
            cap: "independent-sets",
            needed: *visited,
            limit: caps.independent_sets,
        });
    }
    visit(set);
    for v in start..adj.len() {
        if adj[v].iter().any(|w| set.contains(w)) {
            continue;
        }
        set.insert(v);
        enumerate_independent_sets(adj, v + 1, set, visited, caps, visit)?;
        set.remove(&v);
    }
    Ok(())
}

/// Whether some connected component of the induced subgraph on `verts`
/// is bipartite. The empty vertex set has no component, hence none
/// bipartite; an isolated vertex is a bipartite component.
fn has_bipartite_component(adj: &[Vec<usize>], verts: &[usize]) -> bool {
    let in_set: BTreeSet<usize> = verts.iter().copied().collect();
    let mut colour: BTreeMap<usize, bool> = BTreeMap::new();
    for &root in verts {
        if colour.contains_key(&root) {
            continue;
        }
        // BFS two-colouring of the component of root
        let mut bipartite = true;
        let mut queue = std::collections::VecDeque::new();
        colour.insert(root, false);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let cv = colour[&v];
            for &w in &adj[v] {
                if !in_set.contains(&w) {
                    continue;
                }
                match colour.get(&w) {
                    None => {
                        colour.insert(w, !cv);
                        queue.push_back(w);
                    }
                    Some(&cw) => {
                        if cw == cv {
                            bipartite = false;
                        }
                    }
                }
            }
        }
        if bipartite {
            return true;
        }
    }
    false
}

/// J(G)^(n) through the even/odd identities: J^(2s) = (J^(2))^s and
/// J^(2s+1) = J (J^(2))^s, with J^(2) computed by edgewise intersection.
pub fn symbolic_power_cover(graph: &Graph, n: u32) -> Result<MonomialIdeal> {
    if graph.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    debug_assert!(n >= 1);
    if n == 1 {
        return cover_ideal(graph);
    }
    let j2 = edgewise_intersection(graph, 2)?;
    if n % 2 == 0 {
        j2.power(n / 2)
    } else {
        cover_ideal(graph)?.multiply(&j2.power(n / 2)?)
    }
}

/// J(G)^(n) by direct edgewise intersection of the n-th edge prime powers.
pub fn symbolic_power_cover_direct(graph: &Graph, n: u32) -> Result<MonomialIdeal> {
    if graph.edges.is_empty() {
        return Err(Error::EdgelessGraph);
    }
    edgewise_intersection(graph, n)
}

/// Inputs of the odd-degree formula for d(J^(n)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicProfile {
    pub delta: BigRational,
    /// d(J)
    pub d1: u64,
    /// maximal degree of a cover-ideal generator extending a top-degree
    /// generator of J^(2) into a minimal generator of J^(3)
    pub e: u64,
    pub r: usize,
}

impl SymbolicProfile {
    fn validate(&self) -> Result<()> {
        let twice = BigRational::from(BigInt::from(2u32)) * &self.delta;
        if BigRational::from(BigInt::from(self.d1)) > twice {
            return Err(Error::InvalidDecomposition(
                "profile violates d(J) <= 2 delta(J)".into(),
            ));
        }
        if self.e > self.d1 {
            return Err(Error::InvalidDecomposition(
                "profile violates e <= d(J)".into(),
            ));
        }
        Ok(())
    }
}

/// Compute the odd-degree profile of a cover ideal. The fast path applies
/// when delta(J) = d(J) or delta(J) = r/2, where e = d(J) without search;
/// otherwise all pairs (m1, m2) with m1 in G(J^(2)) of degree 2 delta and
/// m2 in G(J) are tried against G(J^(3)).
pub fn compute_e(graph: &Graph, caps: &Caps) -> Result<SymbolicProfile> {
    let delta = delta_formula(graph, caps)?;
    let cover = cover_ideal(graph)?;
    let d1 = cover.max_gen_degree();
    let r = graph.n_vertices();
    let half_r = BigRational::new(BigInt::from(r as i64), BigInt::from(2));
    if delta == BigRational::from(BigInt::from(d1)) || delta == half_r {
        let profile = SymbolicProfile {
            delta,
            d1,
            e: d1,
            r,
        };
        profile.validate()?;
        return Ok(profile);
    }

    let two_delta_rat = BigRational::from(BigInt::from(2u32)) * &delta;
    assert!(
        two_delta_rat.denom().is_one(),
        "2 delta is integral for cover ideals"
    );
    let two_delta: u64 = u64::try_from(two_delta_rat.numer())
        .map_err(|_| Error::NumericRange("2 delta exceeds u64"))?;

    let j2 = edgewise_intersection(graph, 2)?;
    let j3 = cover.multiply(&j2)?;
    let top: Vec<&ExponentVector> = j2
        .gens()
        .iter()
        .filter(|g| g.degree() == two_delta)
        .collect();
    let pair_count = top.len() as u64 * cover.gens().len() as u64;
    if pair_count > caps.pair_checks {
        return Err(Error::CapExceeded {
            cap: "pair-checks",
            needed: pair_count,
            limit: caps.pair_checks,
        });
    }
    let mut e: Option<u64> = None;
    for m1 in &top {
        for m2 in cover.gens() {
            let product = m1.checked_mul(m2)?;
            if j3.is_minimal_generator(&product)? {
                e = Some(e.map_or(m2.degree(), |cur| cur.max(m2.degree())));
            }
        }
    }
    let e = e.ok_or(Error::NoQualifyingPair)?;
    let profile = SymbolicProfile { delta, d1, e, r };
    profile.validate()?;
    Ok(profile)
}

/// Predicted d(J^(n)): 2s delta for n = 2s, and 2s delta + e for
/// n = 2s+1 provided s >= d(J) - e.
pub fn d_symbolic_formula(profile: &SymbolicProfile, n: u64) -> Result<u64> {
    debug_assert!(n >= 1);
    let delta_int = |mult: u64| -> Result<u64> {
        let value = &profile.delta * BigRational::from(BigInt::from(mult));
        if !value.denom().is_one() {
            return Err(Error::NumericRange("delta multiple is not integral"));
        }
        u64::try_from(value.numer()).map_err(|_| Error::NumericRange("degree exceeds u64"))
    };
    if n % 2 == 0 {
        delta_int(n)
    } else {
        let s = (n - 1) / 2;
        let threshold = profile.d1 as i64 - profile.e as i64;
        if (s as i64) < threshold {
            return Err(Error::FormulaNotGuaranteed { n, threshold });
        }
        Ok(delta_int(2 * s)? + profile.e)
    }
}

/// Structural check for a vertex of SP(J(G)): coordinates in {0, 1/2, 1},
/// the zero set independent, the one set exactly its neighbourhood, no
/// bipartite component among the half coordinates, and no leaf assigned
/// 1/2 or 1 whose support vertex is assigned 1.
pub fn vertex_structure_validator(graph: &Graph, v: &RationalVector) -> Result<bool> {
    if v.len() != graph.n_vertices() {
        return Err(Error::DimensionMismatch {
            expected: graph.n_vertices(),
            got: v.len(),
        });
    }
    let zero = BigRational::zero();
    let one = BigRational::one();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let mut s0 = BTreeSet::new();
    let mut s1 = BTreeSet::new();
    let mut s_half = Vec::new();
    for (i, c) in v.coords().iter().enumerate() {
        if *c == zero {
            s0.insert(i);
        } else if *c == one {
            s1.insert(i);
        } else if *c == half {
            s_half.push(i);
        } else {
            return Ok(false);
        }
    }
    let adj = graph.adjacency();
    // S_0 independent
    for &a in &s0 {
        if adj[a].iter().any(|b| s0.contains(b)) {
            return Ok(false);
        }
    }
    // S_1 = N(S_0)
    if graph.neighbours(&s0) != s1 {
        return Ok(false);
    }
    // induced graph on the half set has no bipartite component
    if has_bipartite_component(&adj, &s_half) {
        return Ok(false);
    }
    // leaf condition: a leaf outside S_0 forbids value 1 on its neighbour
    for (leaf, neighbour) in graph.leaves() {
        if !s0.contains(&leaf) && s1.contains(&neighbour) {
            return Ok(false);
        }
    }
    Ok(true)
}

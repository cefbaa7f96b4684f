//! Enumeration caps. Every potentially explosive search takes a [`Caps`]
//! and fails with [`crate::Error::CapExceeded`] instead of running away.

/// Limits for the enumeration-heavy operations.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Candidate multidegrees scanned by a Betti-table computation.
    pub betti_box: u64,
    /// Ambient dimension for polyhedral vertex enumeration.
    pub vertex_dim: usize,
    /// Halfspace count for polyhedral vertex enumeration.
    pub vertex_constraints: usize,
    /// Minimal primes produced by hitting-set enumeration.
    pub min_primes: u64,
    /// Independent sets visited by the graph delta formula.
    pub independent_sets: u64,
    /// Generator pairs examined by the odd-degree profile search.
    pub pair_checks: u64,
    /// Monomials materialised by a single degree component.
    pub component_monomials: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            betti_box: 1_000_000,
            vertex_dim: 12,
            vertex_constraints: 40,
            min_primes: 100_000,
            independent_sets: 2_000_000,
            pair_checks: 10_000_000,
            component_monomials: 1_000_000,
        }
    }
}

impl Caps {
    /// Set a cap by its CLI name. Returns false for an unknown name.
    pub fn set(&mut self, name: &str, value: u64) -> bool {
        match name {
            "betti-box" => self.betti_box = value,
            "vertex-dim" => self.vertex_dim = value as usize,
            "vertex-constraints" => self.vertex_constraints = value as usize,
            "min-primes" => self.min_primes = value,
            "independent-sets" => self.independent_sets = value,
            "pair-checks" => self.pair_checks = value,
            "component-monomials" => self.component_monomials = value,
            _ => return false,
        }
        true
    }
}

//! Exact computation with monomial ideals: symbolic powers, Newton
//! polyhedra and the polyhedral invariant delta, multigraded Betti
//! numbers via upper Koszul complexes, and cover-ideal combinatorics.
//!
//! All arithmetic is exact (machine integers with overflow fallback to
//! arbitrary precision, and exact rationals); there is no floating point.

pub mod caps;
pub mod error;
pub mod graphs;
pub mod homology;
pub mod linalg;
pub mod monomial;
pub mod polyhedra;
pub mod symbolic;

pub use caps::Caps;
pub use error::{Error, Result};
pub use graphs::{Graph, SymbolicProfile};
pub use homology::{BettiTable, FieldSpec, SimplicialComplex, SplitCertificate, SplitVerdict};
pub use monomial::{ExponentVector, MonomialIdeal};
pub use polyhedra::{HPolyhedron, HalfSpace, RationalVector, VertexSet};
pub use symbolic::{BoundReport, PrimaryDecomposition, PrimeSupport};

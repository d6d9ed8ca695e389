//! Monomial ideals and the combinatorics around them: irreducible and
//! primary decompositions, symbolic powers, Alexander-type duals, Rees and
//! Simis cones with their Hilbert bases, and edge ideals of vertex-weighted
//! oriented graphs.

pub mod cones;
pub mod decomposition;
pub mod digraphs;
pub mod error;
pub mod format;
pub mod ideal;
pub mod monomial;
pub mod symbolic;

pub use error::{Error, Result};
pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::{lcm_gcd, Monomial, MonomialPrime, PolyContext};

/// Resource caps for the exponential parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest digraph for which vertex covers are enumerated.
    pub max_vertices: usize,
    /// Largest number of lattice points enumerated by a cone computation.
    pub max_lattice_points: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 20,
            max_lattice_points: 1_000_000,
        }
    }
}

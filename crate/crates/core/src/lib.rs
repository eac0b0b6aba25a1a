//! Strong vertex covers, irreducible decompositions and symbolic powers of
//! edge ideals of weighted oriented graphs.
//!
//! The edge ideal of a weighted oriented graph `D` is the monomial ideal
//! generated by `x_i * x_j^{w_j}` over its directed edges `(x_i, x_j)`. This
//! crate computes, exactly and field-independently:
//!
//! * the L1/L2/L3 partition of any vertex cover and whether it is *strong*
//!   ([`covers`]);
//! * the irredundant irreducible decomposition and the associated primes of
//!   `I(D)` ([`symbolic::decomposition`]);
//! * the localized components `I_{⊆C}` at maximal strong covers, both from a
//!   closed generator formula and by brute force;
//! * symbolic powers `I^(s)`, along two independent routes, and whether they
//!   coincide with the ordinary powers `I^s` ([`symbolic::compare_powers`]);
//! * closed-form equality criteria for paths, two paths meeting at a sink and
//!   rooted trees, each paired with a computational check ([`classify`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! anything touching a clock live in the companion `wogsym` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod classify;
pub mod covers;
pub mod digraph;
pub mod ideals;
pub mod symbolic;
pub mod vertex_set;

pub use covers::CoverPartition;
pub use digraph::{GraphError, WeightedOrientedGraph};
pub use ideals::{Monomial, MonomialIdeal};
pub use symbolic::PowerComparison;
pub use vertex_set::VertexSet;

/// Work bounds for the exponential parts of the library.
///
/// Cover enumeration is exponential in the number of vertices and ideal powers
/// grow combinatorially in `s`; every enumerating operation checks these
/// bounds up front or while it runs and fails with [`GuardExceeded`] instead
/// of running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest graph whose covers may be enumerated.
    pub max_vertices: usize,
    /// Largest exponent `s` accepted by power computations.
    pub max_power: u32,
    /// Largest number of candidate generators any single ideal operation may
    /// produce before minimalization.
    pub max_generators: usize,
}

impl Limits {
    /// The bounds used by the command-line front end.
    pub const DESK: Limits = Limits { max_vertices: 22, max_power: 5, max_generators: 2_000_000 };

    /// No bounds at all (still capped at 64 vertices by [`VertexSet`]).
    pub const UNBOUNDED: Limits =
        Limits { max_vertices: vertex_set::MAX_VERTICES, max_power: u32::MAX, max_generators: usize::MAX };

    pub(crate) fn check_vertices(&self, n: usize) -> Result<(), GuardExceeded> {
        if n > self.max_vertices {
            return Err(GuardExceeded { what: "vertex", limit: self.max_vertices, actual: n });
        }
        Ok(())
    }

    pub(crate) fn check_power(&self, s: u32) -> Result<(), GuardExceeded> {
        if s > self.max_power {
            return Err(GuardExceeded {
                what: "power",
                limit: self.max_power as usize,
                actual: s as usize,
            });
        }
        Ok(())
    }

    pub(crate) fn check_generators(&self, count: usize) -> Result<(), GuardExceeded> {
        if count > self.max_generators {
            return Err(GuardExceeded { what: "generator", limit: self.max_generators, actual: count });
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_vertices: 30, max_power: 16, max_generators: 2_000_000 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("{what} limit exceeded: {actual} > {limit}")]
pub struct GuardExceeded {
    pub what: &'static str,
    pub limit: usize,
    pub actual: usize,
}

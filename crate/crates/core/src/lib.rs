//! Lattice path matroid polytopes and their toric f- and g-polynomials.
//!
//! The crate is organised as a pipeline:
//!
//! * [`lpm`] parses bounding lattice paths and enumerates the bases of the
//!   lattice path matroid they define.
//! * [`polytope`] realises the matroid polytope over exact rationals,
//!   enumerates facets and builds the face lattice.
//! * [`toric`] evaluates Stanley's toric f/g recursion on any bounded graded
//!   poset and checks the Eulerian property.
//! * [`hook`] holds the closed forms for hook shapes together with the
//!   coefficient machinery and binomial identities behind them.
//! * [`verify`] wires everything together into sweeps and reports.

pub mod error;
pub mod hook;
pub mod lpm;
pub mod poly;
pub mod polytope;
pub mod toric;
pub mod verify;

pub use error::{Error, Result};
pub use hook::binomial;
pub use lpm::{
    check_exchange_axiom, count_bases, enumerate_bases, Basis, HookShape, LatticePath,
    LatticePathMatroid, PathPair, Step,
};
pub use poly::{IntPolynomial, LaurentPolynomial};
pub use polytope::{Caps, FVector, FaceLattice, Facet, Hyperplane, Point};
pub use toric::{GradedPoset, ToricPair};

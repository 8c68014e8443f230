//! Exact and reduced-space machinery for general assignment problems (GAP)
//! and the travelling salesman problem on complete directed graphs.
//!
//! The crate is organised bottom-up:
//!
//! - [`instance`]: cost matrices, generators, normalizations, relabeling
//! - [`enumeration`]: rank/unrank of complete cycles and edge-coincidence counts
//! - [`sortedm`]: per-row sorted costs, greedy cycles, frontiers
//! - [`reduction`]: ε-neighbourhood alternatives, space size and degrees, tubes
//! - [`solver`]: brute-force oracle, reduced-space generator, verify/solve loop
//! - [`ipgap`]: assignment IP model, cycle/point maps, LP export
//! - [`viz`]: PGM/PPM renders and landscape CSV
//! - [`sum`]: correctly rounded summation used for every cycle cost

pub mod cycle;
pub mod enumeration;
pub mod error;
pub mod instance;
pub mod ipgap;
pub mod numfmt;
pub mod reduction;
pub mod solver;
pub mod sortedm;
pub mod sum;
pub mod viz;

pub use cycle::Cycle;
pub use error::{Error, Result};
pub use instance::{CostMatrix, Kind, Permutation, PointSet};

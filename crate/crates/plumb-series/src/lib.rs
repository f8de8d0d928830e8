//! Multivariable series invariants of negative-definite plumbing trees.
//!
//! The crate models a resolution graph (a tree of rational curves with
//! Euler numbers and optional arrows), its negative-definite intersection
//! lattice, and the series-valued invariants attached to them:
//!
//! * the multivariable series counting effective dual-lattice cycles by
//!   coefficient products of the graph's factored rational function, plus
//!   its equivariant, reduced and relative versions;
//! * greedy computation sequences (saturation, restricted closures, the
//!   fundamental cycle) and the rational / minimally elliptic / elliptic
//!   classification built on them;
//! * a counting series computed from saturations alone, a lattice-point
//!   transform of it, monodromy zeta functions, and the counting
//!   polynomial of a degree-`d` superisolated hypersurface;
//! * a registry of cross-checks (`verify`) tying the independent routes to
//!   the same quantities together.
//!
//! The companion binary exposes all of it as subcommands emitting JSON.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod cli;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod lattice;
pub mod laufer;
pub mod linalg;
pub mod oracle;
pub mod rat;
pub mod series;

pub use error::{Error, Result};

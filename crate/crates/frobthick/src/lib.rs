//! Exact arithmetic over F_p for the Frobenius action on thickenings of
//! projective hypersurfaces and complete intersections.
//!
//! Given forms f_1, ..., f_c cutting out X in P^n, the crate decides
//! whether the map induced by Frobenius from the top cohomology of X (any
//! Serre twist) into the cohomology of its t-th thickening is injective,
//! finds the least such t, and machine-checks the uniform bounds that
//! govern it. Everything is computed in graded pieces of local cohomology
//! through bounded Čech numerators, so every answer is exact.
//!
//! The `examples/` directory is the front door — one runnable program per
//! capability:
//!
//! - `analyze_hypersurface` — one injectivity verdict end to end, with the
//!   kernel witness when the map misses
//!   (`cargo run --release --example analyze_hypersurface`)
//! - `minimal_thickening` — threshold search and the closed forms it
//!   reproduces across primes
//! - `twisted_quartic` — nonzero Serre twists and vanishing codomains
//! - `complete_intersection` — codimension two: bracket thickenings, the
//!   t0 bound, and transport to ordinary powers
//! - `fpt_estimates` — Frobenius membership orders nu and F-pure threshold
//!   lower bounds
//! - `smoothness_check` — the Jacobian certificate and the regular-sequence
//!   probe
//! - `colon_lemma` — the colon-ideal identity behind the membership tests,
//!   recomputed from first principles
//! - `verification_suite` — every named check in one run
//!
//! The same capabilities are scriptable through the thin `frobthick`
//! binary (subcommands `analyze`, `minimal-t`, `sweep`, `fpt`, `smooth`,
//! `verify`) with human, JSON, or CSV output.
//!
//! Module map, in dependency order: [`linalg`] (dense F_p matrices, rank,
//! kernels), [`poly`] (sparse homogeneous polynomials with truncated
//! multiplication), [`parse`] (the polynomial grammar), [`monomial`]
//! (monomial ideals: brackets, colons, graded complements), [`graded`]
//! (arbitrary homogeneous ideals: membership, Hilbert functions, Jacobian
//! smoothness), [`cech`] (graded pieces of top local cohomology and class
//! arithmetic), [`thickening`] (the Frobenius maps themselves), [`verify`]
//! (named checks), [`report`] (stable JSON/CSV shapes), [`cli`] (the
//! binary's argument surface).

pub mod cech;
pub mod cli;
pub mod error;
pub mod graded;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod report;
pub mod thickening;
pub mod verify;

pub use error::{Error, Result};

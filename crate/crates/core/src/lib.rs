//! Exact-arithmetic toolkit for labeled directed multigraphs that encode
//! torus actions on compact almost complex manifolds.
//!
//! A graph's vertices stand for fixed points and its edge labels are weights
//! in `Z^k`. On top of that data the crate provides:
//!
//! * integer-lattice utilities (Hermite/Smith forms, congruences, unimodular
//!   maps) in [`lattice`],
//! * sparse multivariate rational-function arithmetic specialized to sums of
//!   fractions with products of linear forms as denominators in [`symbolic`],
//! * the graph data model, validity checking, isotropy subgraphs, blow-ups
//!   and isomorphism-up-to-basis in [`graph`],
//! * constructors for the standard graph families in [`constructions`],
//! * Chern numbers by localization and the chi_y genus in [`invariants`],
//! * the bounded classification searches in [`classify`].
//!
//! All arithmetic is exact (arbitrary-precision rationals); nothing here is
//! floating point.

pub mod classify;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod lattice;
pub mod symbolic;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

//! Exact spectral computations for the 1-Laplacian on finite undirected graphs.
//!
//! The 1-Laplacian eigenvalue problem asks for pairs `(mu, x)` with `x != 0`
//! such that there is an antisymmetric edge selection `z` with
//! `z_ij in Sgn(x_i - x_j)` and `sum_{j~i} z_ij in mu * d_i * Sgn(x_i)` at
//! every vertex. Everything in this crate works in exact rational arithmetic:
//! an answer is either a certificate (a witness `z` that can be re-checked by
//! substitution) or a definite refusal, never a float that happens to be
//! small.
//!
//! The main entry points are:
//!
//! * [`graph`] — graph construction, generators for the named graphs used
//!   throughout, subset metrics and connected-subset enumeration;
//! * [`feasibility`] — the exact decision procedure for box-constrained
//!   edge-sum systems that everything else reduces to;
//! * [`eigen`] — vertex functions, the energy `I`, sign patterns and
//!   eigenpair verification;
//! * [`spectrum`] — complete spectra of small graphs, closed forms for
//!   paths/cycles/complete graphs, and the small-order census;
//! * [`nodal`] — strong/weak nodal-domain counting and the maximum
//!   nodal-domain number `nu(mu, G)`;
//! * [`cheeger`] — Cheeger constants, k-way constants, optimal Cheeger cuts
//!   and minimax sandwich bounds;
//! * [`multiplicity`] — algebraic multiplicity and the level-set
//!   decomposition of eigenvectors into binary ones;
//! * [`compose`] — the module/eigencomponent algebra (extension, joining,
//!   pasting, plugging).

pub mod cheeger;
pub mod compose;
pub mod eigen;
mod error;
pub mod feasibility;
pub mod graph;
pub mod multiplicity;
pub mod nodal;
pub mod rational;
mod simplex;
pub mod spectrum;

pub use error::Error;
pub use rational::Ratio;

/// Shorthand for results with the crate error type.
pub type Result<T> = std::result::Result<T, Error>;

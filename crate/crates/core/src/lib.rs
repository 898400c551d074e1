//! Exact computation of positive supports of Grover-walk powers.
//!
//! - [`exact`]: rationals and the quadratic field `Q(sqrt(k - 1))`.
//! - [`graph`]: simple graphs as symmetric arc pairs, parsers and fixtures.
//! - [`matrix`] / [`walkops`]: the Grover evolution `U`, positive supports,
//!   the flip `J` and generalized Ihara zeta polynomials.
//! - [`lineqw`]: the discriminant quantum walk on the integer line.
//! - [`structure`]: coefficient extraction and brute-force verification of
//!   the structure formula for `S(U^n)` on high-girth regular graphs.
//! - [`spectral`]: the 2x2 polynomial lift of adjacency eigenvalues.

pub mod exact;
pub mod graph;
pub mod lineqw;
pub mod matrix;
pub mod spectral;
pub mod structure;
pub mod walkops;

//! Exact computations around the F2-valued 2-mixed volume of lattice polytopes.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: integer points, supports, convex hulls, Minkowski sums,
//!   support faces, Smith normal form, lattice volumes and normal fans.
//! - [`f2`]: linear algebra over the two-element field and the 2-determinant
//!   `det2` of `n + 1` vectors in `F2^n` (closed formula and definitional oracle).
//! - [`subdivision`]: regular mixed subdivisions induced by rational liftings,
//!   the combinatorial stand-in for intersecting tropical hypersurfaces.
//! - [`mvol`]: lattice mixed volume, the 2-intersection number, the 2-mixed
//!   volume and the prickly / 2-developed predicates.
//! - [`vieta`]: the multivariate Vieta sign and its binomial and univariate oracles.
//! - [`resultant`]: sparse resultant combinatorics, Khovanskii polytopes and the
//!   sign of the ratio of two leading coefficients, with a Sylvester oracle.
//! - [`cli`]: the JSON command line front end used by the `signres` binary.
//!
//! No floating point is used anywhere.

pub mod cli;
pub mod error;
pub mod f2;
pub mod lattice;
pub mod lp;
pub mod mvol;
pub mod resultant;
pub mod subdivision;
pub mod vieta;

mod sign;

pub use error::{Error, Result};
pub use sign::Sign;

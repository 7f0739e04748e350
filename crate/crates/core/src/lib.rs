//! Precubical sets and their branching and merging homology.
//!
//! - [`pcs`]: precubical sets, standard cubes, morphisms, cube attachment
//! - [`subdivision`]: the cubical subdivision `Sub_p`
//! - [`branch`]: branching and merging complexes at vertices
//! - [`homology`]: integral homology via Smith normal form
//! - [`dipath`]: exact piecewise-linear natural directed paths
//! - [`cli`]: the PCS text format and the `pcs` command
//!
//! Everything is exact: big integers for homology, big rationals for paths
//! and subdivision coordinates.

pub mod branch;
pub mod cli;
pub mod corpus;
pub mod dipath;
pub mod error;
pub mod homology;
pub mod pcs;
pub mod subdivision;

pub use error::PcsError;

/// Exact rationals used for path values and subdivision coordinates.
pub type Rational = num_rational::BigRational;

/// Natural paths over big rationals.
pub type NaturalPath = dipath::PlNaturalPath<Rational>;

/// Integer matrices used for boundary maps.
pub type IntMatrix = homology::Matrix<num_bigint::BigInt>;

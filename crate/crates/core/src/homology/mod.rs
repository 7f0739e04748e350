//! Integral homology and branching/merging homology of precubical sets.
//!
//! Branching homology in degree
//! - 0 is free on the final states (initial states for merging),
//! - 1 is `ker(aug)/im(∂)`: per start vertex, the free group on path
//!   components modulo those with coefficient sum zero removed, i.e.
//!   `Σ_α max(0, #π₀(B_α) − 1)`,
//! - `n + 1 ≥ 2` is `⊕_α H_n(B_α)`.

mod chain;
mod graded;
mod matrix;
mod snf;

pub use chain::{chain_complex, homology_of, ChainComplex};
pub use graded::{graded_iso, AbelianGroup, GradedAbelianGroup};
pub use matrix::{IntegerScalar, Matrix};
pub use snf::{smith_normal_form, Snf};

use thiserror::Error;

use crate::branch::{assemble_all, branching_complex, pi0_components, Side};
use crate::error::PcsError;
use crate::pcs::{CubeId, PrecubicalSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("boundary of boundary is nonzero in degree {degree}")]
    NotAComplex { degree: usize },
    #[error(transparent)]
    Pcs(#[from] PcsError),
}

/// Homology of the branching (or merging) complex at one vertex.
pub fn vertex_homology(k: &PrecubicalSet, vertex: CubeId, side: Side) -> Result<GradedAbelianGroup, HomologyError> {
    let b = branching_complex(k, vertex, side)?;
    Ok(homology_of(&chain_complex(&b.complex)?))
}

/// The graded branching homology `H_*^-` (or merging homology `H_*^+`).
pub fn branching_homology(k: &PrecubicalSet, side: Side) -> Result<GradedAbelianGroup, HomologyError> {
    let states = match side {
        Side::Branching => k.final_states(),
        Side::Merging => k.initial_states(),
    };
    let mut degree_one = 0;
    for v in k.vertices() {
        degree_one += pi0_components(k, v, side)?.len().saturating_sub(1);
    }
    let mut total = GradedAbelianGroup::free(&[states.len(), degree_one]);
    for b in assemble_all(k, side).values() {
        let h = homology_of(&chain_complex(&b.complex)?);
        // only degrees ≥ 1 of the branching space contribute, shifted up by one
        let upper = GradedAbelianGroup::new(
            h.groups()
                .iter()
                .enumerate()
                .map(|(d, g)| if d == 0 { AbelianGroup::default() } else { g.clone() })
                .collect(),
        );
        total = total.sum(&upper.shift(1));
    }
    Ok(total)
}

/// Merging homology, the branching homology of the reversed set.
pub fn merging_homology(k: &PrecubicalSet) -> Result<GradedAbelianGroup, HomologyError> {
    branching_homology(k, Side::Merging)
}

use num_bigint::BigInt;
use num_traits::One;

use super::graded::{AbelianGroup, GradedAbelianGroup};
use super::matrix::Matrix;
use super::snf::smith_normal_form;
use super::HomologyError;
use crate::branch::SemiSimplicialSet;

/// Free chain complex with one basis per degree and boundary matrices
/// `∂_k : C_k → C_{k-1}` of shape `|C_{k-1}| × |C_k|` (`∂_0` is `0 × |C_0|`).
#[derive(Debug, Clone)]
pub struct ChainComplex {
    pub bases: Vec<Vec<String>>,
    pub boundaries: Vec<Matrix<BigInt>>,
}

/// Simplicial chains with `∂σ = Σ_i (−1)^i d_i σ`.
pub fn chain_complex(set: &SemiSimplicialSet) -> Result<ChainComplex, HomologyError> {
    let degrees = set.dim().map_or(0, |d| d + 1);
    let bases: Vec<Vec<String>> = (0..degrees).map(|k| set.names(k).to_vec()).collect();
    let mut boundaries = Vec::with_capacity(degrees);
    for k in 0..degrees {
        if k == 0 {
            boundaries.push(Matrix::zeros(0, set.count(0)));
            continue;
        }
        let mut m = Matrix::zeros(set.count(k - 1), set.count(k));
        for s in 0..set.count(k) {
            for i in 0..=k {
                let sign = if i % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                let f = set.face(k, s, i);
                m[(f, s)] = &m[(f, s)] + sign;
            }
        }
        boundaries.push(m);
    }
    let complex = ChainComplex { bases, boundaries };
    if let Some(degree) = complex.square_defect() {
        return Err(HomologyError::NotAComplex { degree });
    }
    Ok(complex)
}

impl ChainComplex {
    pub fn degrees(&self) -> usize {
        self.bases.len()
    }

    /// First `k` with `∂_{k-1} ∘ ∂_k ≠ 0`.
    pub fn square_defect(&self) -> Option<usize> {
        (2..self.boundaries.len()).find(|&k| !self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero())
    }
}

/// `H_k = ker ∂_k / im ∂_{k+1}`: free rank from the ranks of both boundary
/// maps, torsion from the invariant factors of `∂_{k+1}` above 1.
pub fn homology_of(c: &ChainComplex) -> GradedAbelianGroup {
    let n = c.degrees();
    let forms: Vec<_> = c.boundaries.iter().map(smith_normal_form).collect();
    let ranks: Vec<usize> = forms.iter().map(|s| s.rank()).collect();
    let groups = (0..n)
        .map(|k| {
            let incoming = if k + 1 < n { ranks[k + 1] } else { 0 };
            let torsion = if k + 1 < n {
                forms[k + 1].invariant_factors().into_iter().filter(|t| !t.is_one()).collect()
            } else {
                Vec::new()
            };
            AbelianGroup { rank: c.bases[k].len() - ranks[k] - incoming, torsion }
        })
        .collect();
    GradedAbelianGroup::new(groups)
}

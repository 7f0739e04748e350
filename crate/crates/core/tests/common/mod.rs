#![allow(dead_code)]

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use precubical::branch::{branching_complex, SemiSimplicialSet, Side};
use precubical::pcs::PrecubicalSet;
use precubical::IntMatrix;

/// Rank over the rationals by plain Gaussian elimination.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
    let cols = m.cols();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone() / a[rank][c].clone();
                let pivot = a[rank].clone();
                for (x, p) in a[r].iter_mut().zip(pivot).skip(c) {
                    *x -= p * f.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Simplicial boundary matrices built entry by entry, `∂σ = Σ (−1)^i d_i σ`.
pub fn boundary_matrices(s: &SemiSimplicialSet) -> Vec<IntMatrix> {
    let top = s.dim().map_or(0, |d| d + 1);
    (1..top)
        .map(|k| {
            let mut rows = vec![vec![BigInt::zero(); s.count(k)]; s.count(k - 1)];
            for j in 0..s.count(k) {
                for i in 0..=k {
                    let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    rows[s.face(k, j, i)][j] += sign;
                }
            }
            IntMatrix::from_rows(rows)
        })
        .collect()
}

/// Rational Betti numbers `dim C_k − rank ∂_k − rank ∂_{k+1}`.
pub fn rational_betti(s: &SemiSimplicialSet) -> Vec<usize> {
    let top = s.dim().map_or(0, |d| d + 1);
    let ranks: Vec<usize> = boundary_matrices(s).iter().map(rational_rank).collect();
    (0..top)
        .map(|k| {
            let out = if k == 0 { 0 } else { ranks[k - 1] };
            let inc = ranks.get(k).copied().unwrap_or(0);
            s.count(k) - out - inc
        })
        .collect()
}

/// Path components of a semi-simplicial set by breadth-first search over
/// vertex-edge incidences.
pub fn bfs_components(s: &SemiSimplicialSet) -> usize {
    let n = s.count(0);
    let mut adj = vec![Vec::new(); n];
    for e in 0..s.count(1) {
        let (a, b) = (s.face(1, e, 0), s.face(1, e, 1));
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut count = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        count += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !std::mem::replace(&mut seen[w], true) {
                    queue.push_back(w);
                }
            }
        }
    }
    count
}

/// Degrees 0 and 1 of branching homology evaluated from the definition:
/// the augmentation sends every path component of the branching space to
/// its start vertex; `H_1 = ker(aug)` (boundaries of paths are already
/// quotiented out by passing to components) and `H_0 = coker(aug)`.
pub fn low_degree_oracle(k: &PrecubicalSet, side: Side) -> (usize, usize) {
    let vertices: Vec<_> = k.vertices().collect();
    let mut columns = Vec::new();
    for (row, &v) in vertices.iter().enumerate() {
        let b = branching_complex(k, v, side).unwrap();
        for _ in 0..bfs_components(&b.complex) {
            columns.push(row);
        }
    }
    let mut rows = vec![vec![BigInt::zero(); columns.len()]; vertices.len()];
    for (c, &r) in columns.iter().enumerate() {
        rows[r][c] = BigInt::one();
    }
    let aug = IntMatrix::from_rows(rows);
    let r = if columns.is_empty() { 0 } else { rational_rank(&aug) };
    (vertices.len() - r, columns.len() - r)
}

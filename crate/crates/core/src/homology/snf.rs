//! Smith normal form over the integers.

use super::matrix::{IntegerScalar, Matrix};

/// `u · m · v = d` with `u`, `v` unimodular and `d` diagonal, its nonzero
/// entries positive and each dividing the next.
#[derive(Debug, Clone)]
pub struct Snf<T> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntegerScalar> Snf<T> {
    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }

    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.d.diagonal().into_iter().take_while(|x| !x.is_zero()).collect()
    }
}

fn min_abs_nonzero<T: IntegerScalar>(entries: impl Iterator<Item = ((usize, usize), T)>) -> Option<(usize, usize)> {
    entries.filter(|(_, x)| !x.is_zero()).min_by(|a, b| a.1.abs().cmp(&b.1.abs())).map(|(pos, _)| pos)
}

/// Pivots on an entry of least absolute value to limit coefficient growth.
pub fn smith_normal_form<T: IntegerScalar>(m: &Matrix<T>) -> Snf<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);

    for t in 0..rows.min(cols) {
        let block = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = min_abs_nonzero(block.map(|pos| (pos, a[pos].clone()))) else {
            break;
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let pivot = a[(t, t)].clone();
            for i in t + 1..rows {
                if !a[(i, t)].is_zero() {
                    let q = -a[(i, t)].div_floor(&pivot);
                    a.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                }
            }
            for j in t + 1..cols {
                if !a[(t, j)].is_zero() {
                    let q = -a[(t, j)].div_floor(&pivot);
                    a.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                }
            }

            // remainders left in the pivot row or column become the new pivot
            let cross = (t + 1..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
            if let Some((i, j)) = min_abs_nonzero(cross.map(|pos| (pos, a[pos].clone()))) {
                a.swap_rows(t, i);
                u.swap_rows(t, i);
                a.swap_cols(t, j);
                v.swap_cols(t, j);
                continue;
            }

            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&pos| !a[pos].is_multiple_of(&pivot));
            match bad {
                Some((i, _)) => {
                    a.add_row_multiple(t, i, &T::one());
                    u.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { d: a, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn check<T: IntegerScalar>(m: &Matrix<T>) -> Snf<T> {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.determinant().abs(), T::one());
        assert_eq!(s.v.determinant().abs(), T::one());
        let f = s.invariant_factors();
        assert!(f.iter().all(|x| x.is_positive()));
        assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        assert!(s.d.diagonal()[f.len()..].iter().all(|x| x.is_zero()));
        s
    }

    #[test]
    fn small_examples() {
        let s = check(&Matrix::from_rows(vec![vec![2i64, 4], vec![6, 8]]));
        assert_eq!(s.d.diagonal(), vec![2, 4]);

        let z = check(&Matrix::<i64>::zeros(3, 2));
        assert!(z.d.is_zero());
        assert_eq!(z.u, Matrix::identity(3));
        assert_eq!(z.v, Matrix::identity(2));

        let id = check(&Matrix::<i64>::identity(4));
        assert_eq!(id.d, Matrix::identity(4));
    }

    #[test]
    fn divisibility_needs_mixing() {
        // diag(2, 3) is diagonal but not in normal form
        let s = check(&Matrix::from_rows(vec![vec![2i64, 0], vec![0, 3]]));
        assert_eq!(s.d.diagonal(), vec![1, 6]);
        let s = check(&Matrix::from_rows(vec![
            vec![BigInt::from(4), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(6)],
        ]));
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn rectangular_and_torsion() {
        // boundary of the real projective plane style relation: [2 2; 0 0]
        let s = check(&Matrix::from_rows(vec![vec![2i64, 2, 0], vec![0, 0, 0]]));
        assert_eq!(s.invariant_factors(), vec![2]);
        let s = check(&Matrix::from_rows(vec![vec![1i64, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]));
        assert_eq!(s.rank(), 2);
    }
}

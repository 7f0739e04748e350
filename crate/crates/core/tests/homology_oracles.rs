mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use precubical::branch::{assemble_all, pi0_components, Side};
use precubical::homology::{
    branching_homology, chain_complex, homology_of, smith_normal_form, AbelianGroup, GradedAbelianGroup,
};
use precubical::{corpus, IntMatrix};
use proptest::prelude::*;

use common::{bfs_components, boundary_matrices, low_degree_oracle, rational_betti, rational_rank};

fn matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=30, 1usize..=30).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r).prop_map(|rows| {
            IntMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn smith_form_is_a_certified_diagonalisation(m in matrix()) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
        prop_assert!(snf.d.is_diagonal());
        prop_assert_eq!(snf.u.determinant().abs(), BigInt::from(1));
        prop_assert_eq!(snf.v.determinant().abs(), BigInt::from(1));
        let f = snf.invariant_factors();
        prop_assert!(f.iter().all(|x| x.is_positive()));
        prop_assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        prop_assert!(snf.d.diagonal()[f.len()..].iter().all(Zero::is_zero));
        prop_assert_eq!(snf.rank(), rational_rank(&m));
    }

    #[test]
    fn sparse_matrices_agree_with_elimination(
        rows in proptest::collection::vec(proptest::collection::vec(prop_oneof![4 => Just(0i64), 1 => -3i64..=3], 12), 1..12)
    ) {
        let m = IntMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect());
        prop_assert_eq!(smith_normal_form(&m).rank(), rational_rank(&m));
    }
}

#[test]
fn corpus_complexes_agree_with_oracles() {
    for (name, k) in corpus::corpus() {
        let top = k.dim().unwrap_or(0);
        for side in [Side::Branching, Side::Merging] {
            for (v, b) in assemble_all(&k, side) {
                let c = chain_complex(&b.complex).unwrap();
                assert_eq!(c.square_defect(), None, "{name}");
                // independent entrywise construction
                let direct = boundary_matrices(&b.complex);
                assert_eq!(c.boundaries.get(1..).unwrap_or(&[]), &direct[..], "{name} at {}", b.base);
                let h = homology_of(&c);
                let betti: Vec<usize> = (0..rational_betti(&b.complex).len()).map(|d| h.degree(d).rank).collect();
                assert_eq!(betti, rational_betti(&b.complex), "{name} at {}", b.base);
                let comps = pi0_components(&k, v, side).unwrap().len();
                assert_eq!(h.degree(0).rank, comps, "{name} at {}", b.base);
                assert_eq!(bfs_components(&b.complex), comps, "{name} at {}", b.base);
                assert!(h.degrees() <= top, "{name}: homology above the cube dimension");
            }
            let total = branching_homology(&k, side).unwrap();
            let (h0, h1) = low_degree_oracle(&k, side);
            assert_eq!(total.degree(0), AbelianGroup::free(h0), "{name} {side}");
            assert_eq!(total.degree(1), AbelianGroup::free(h1), "{name} {side}");
            assert!(total.degrees() <= top + 1, "{name}");
        }
    }
}

#[test]
fn small_examples() {
    let h = |k: &precubical::pcs::PrecubicalSet| branching_homology(k, Side::Branching).unwrap();
    assert_eq!(h(&corpus::hollow_square()), GradedAbelianGroup::free(&[1, 1]));
    assert_eq!(h(&corpus::hollow_cube()), GradedAbelianGroup::free(&[1, 0, 1]));
    assert_eq!(h(&corpus::two_squares()), GradedAbelianGroup::free(&[1]));
}

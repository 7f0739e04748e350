use precubical::branch::{assemble_all, branching_complex, Side};
use precubical::cli::{emit_pcs, parse_pcs};
use precubical::corpus::{random_attaching_map, random_complex};
use precubical::homology::{branching_homology, graded_iso, vertex_homology};
use precubical::pcs::{attach_cube, boundary_cube, standard_cube, PcsBuilder, PcsMorphism, Sign};
use precubical::subdivision::{sub_compose_iso, subdivide};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_sets_are_valid_and_round_trip(seed in any::<u64>()) {
        let k = random_complex(seed);
        prop_assert!(k.validate().is_empty());
        prop_assert_eq!(k.time_reverse().time_reverse(), k.clone());
        prop_assert!(k.time_reverse().validate().is_empty());
        let text = emit_pcs(&k);
        let back = parse_pcs(&text).unwrap();
        prop_assert_eq!(&back, &k);
        prop_assert_eq!(emit_pcs(&back), text);
        prop_assert_eq!(k.closure(k.ids()), k.clone());
        prop_assert_eq!(k.final_states(), k.time_reverse().initial_states());
    }

    #[test]
    fn truncation_and_closure(seed in any::<u64>(), p in 0usize..3) {
        let k = random_complex(seed);
        let t = k.truncate(p);
        prop_assert!(t.validate().is_empty());
        prop_assert!(t.dim().unwrap_or(0) <= p);
        prop_assert_eq!(t.len(), (0..=p).map(|d| k.count(d)).sum::<usize>());
        let top = k.ids().last().unwrap();
        let c = k.closure([top]);
        prop_assert!(c.validate().is_empty());
        prop_assert_eq!(c.count(k.dim_of(top)), 1);
    }

    #[test]
    fn subdivision_is_valid_and_vertexwise_invariant(seed in any::<u64>(), p in 1usize..=3) {
        let k = random_complex(seed);
        let sub = subdivide(&k, p).unwrap();
        prop_assert!(sub.complex().validate().is_empty());
        for side in [Side::Branching, Side::Merging] {
            prop_assert!(graded_iso(&branching_homology(&k, side).unwrap(), &branching_homology(sub.complex(), side).unwrap()));
            for v in k.vertices() {
                let w = sub.complex().get(k.name(v)).unwrap();
                prop_assert_eq!(vertex_homology(&k, v, side).unwrap(), vertex_homology(sub.complex(), w, side).unwrap());
            }
        }
        // new vertices are neither initial nor final
        prop_assert_eq!(sub.complex().final_states().len(), k.final_states().len());
        prop_assert_eq!(sub.complex().initial_states().len(), k.initial_states().len());
    }

    #[test]
    fn subdivision_commutes_with_reversal(seed in any::<u64>(), p in 1usize..=3) {
        let k = random_complex(seed);
        let a = subdivide(&k.time_reverse(), p).unwrap().into_complex();
        let b = subdivide(&k, p).unwrap().into_complex().time_reverse();
        prop_assert_eq!(a.counts(), b.counts());
        for side in [Side::Branching, Side::Merging] {
            prop_assert_eq!(branching_homology(&a, side).unwrap(), branching_homology(&b, side).unwrap());
        }
    }

    #[test]
    fn composition_of_subdivisions(seed in any::<u64>()) {
        let k = random_complex(seed);
        let iso = sub_compose_iso(&k, 2, 2).unwrap();
        prop_assert!(iso.morphism.is_isomorphism(iso.source.complex(), iso.target.complex()));
    }

    #[test]
    fn attaching_changes_one_corner(seed in any::<u64>(), n in 0usize..=3) {
        let k = random_complex(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(g) = random_attaching_map(&k, n, &mut rng) {
            let (l, top) = attach_cube(&k, n, &g).unwrap();
            prop_assert!(l.validate().is_empty());
            prop_assert_eq!(l.len(), k.len() + 1);
            let start = l.initial_vertex(top);
            for v in k.vertices() {
                let before = branching_complex(&k, v, Side::Branching).unwrap().complex;
                let after = branching_complex(&l, l.get(k.name(v)).unwrap(), Side::Branching).unwrap().complex;
                let gained = after.total() - before.total();
                prop_assert_eq!(gained, usize::from(n > 0 && l.name(start) == k.name(v)));
            }
        }
    }
}

#[test]
fn builder_order_does_not_matter() {
    let k = boundary_cube(3);
    let mut b = PcsBuilder::new();
    for c in k.cubes().iter().rev() {
        b.add_cube(&c.name, c.dim).unwrap();
    }
    for c in k.ids().rev() {
        for i in (1..=k.dim_of(c)).rev() {
            for s in Sign::BOTH {
                b.set_face(k.name(c), i, s, k.name(k.face(c, i, s))).unwrap();
            }
        }
    }
    let l = b.build().unwrap();
    assert_eq!(l, k);
    assert_eq!(assemble_all(&l, Side::Branching), assemble_all(&k, Side::Branching));
}

#[test]
fn filling_boundaries_gives_cubes() {
    for n in 1..=4 {
        let hollow = boundary_cube(n);
        let (full, _) = attach_cube(&hollow, n, &PcsMorphism::identity(&hollow)).unwrap();
        let star = "*".repeat(n);
        assert_eq!(
            full.renamed(|c| if c.starts_with('n') { star.clone() } else { c.to_string() }).unwrap(),
            standard_cube(n)
        );
    }
}

//! Small named precubical sets and a seeded generator of random ones.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cli::parse_pcs;
use crate::pcs::{
    attach_cube, boundary_cube, boundary_map_from_facets, standard_cube, CubeId, PcsBuilder, PcsMorphism,
    PrecubicalSet, Sign,
};

/// Coordinate of a grid cell along one axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Span {
    /// The point `a`.
    At(usize),
    /// The unit interval `[a, a + 1]`.
    Step(usize),
}

fn grid_name(cell: &[Span]) -> String {
    let parts: Vec<String> = cell
        .iter()
        .map(|s| match *s {
            Span::At(a) => a.to_string(),
            Span::Step(a) => format!("{a}-{}", a + 1),
        })
        .collect();
    format!("g{}", parts.join("_"))
}

fn grid_face(cell: &[Span], i: usize, sign: Sign) -> Vec<Span> {
    let axis = cell.iter().enumerate().filter(|(_, s)| matches!(s, Span::Step(_))).nth(i - 1).expect("face index").0;
    let mut out = cell.to_vec();
    if let Span::Step(a) = cell[axis] {
        out[axis] = Span::At(a + sign.bit());
    }
    out
}

fn grid_dim(cell: &[Span]) -> usize {
    cell.iter().filter(|s| matches!(s, Span::Step(_))).count()
}

/// Union of the given grid cells and all their faces. Cells `g<a>_<b>…`
/// are named by their spans, `a-b` for an interval.
pub fn grid_complex(cells: &[Vec<Span>]) -> PrecubicalSet {
    let mut all = BTreeSet::new();
    let mut stack: Vec<Vec<Span>> = cells.to_vec();
    while let Some(c) = stack.pop() {
        if all.insert(c.clone()) {
            for i in 1..=grid_dim(&c) {
                for s in Sign::BOTH {
                    stack.push(grid_face(&c, i, s));
                }
            }
        }
    }
    let mut b = PcsBuilder::new();
    for c in &all {
        b.add_cube(&grid_name(c), grid_dim(c)).expect("grid names are distinct");
    }
    for c in &all {
        for i in 1..=grid_dim(c) {
            for s in Sign::BOTH {
                b.set_face(&grid_name(c), i, s, &grid_name(&grid_face(c, i, s))).expect("faces are present");
            }
        }
    }
    b.build().expect("grid cells satisfy the precubical identities")
}

/// `∂□[2]` with vertices `a b c d` and edges `ab ac bd cd`.
pub fn hollow_square() -> PrecubicalSet {
    parse_pcs(include_str!("../data/hollow-square.pcs")).expect("bundled file is valid")
}

/// `∂□[3]` with cube names prefixed by `h`.
pub fn hollow_cube() -> PrecubicalSet {
    parse_pcs(include_str!("../data/hollow-cube.pcs")).expect("bundled file is valid")
}

/// Two squares glued along an edge.
pub fn two_squares() -> PrecubicalSet {
    use Span::Step;
    grid_complex(&[vec![Step(0), Step(0)], vec![Step(1), Step(0)]])
}

/// Three squares forming an L.
pub fn l_shape() -> PrecubicalSet {
    use Span::Step;
    grid_complex(&[vec![Step(0), Step(0)], vec![Step(1), Step(0)], vec![Step(0), Step(1)]])
}

/// Facet images `F_i^α` (indexed `2(i-1) + α`) of some map `∂□[n] → K`,
/// found by randomized backtracking. `None` if there is none or the search
/// budget runs out.
pub fn random_facets<R: Rng>(k: &PrecubicalSet, n: usize, rng: &mut R) -> Option<Vec<CubeId>> {
    if n == 0 {
        return Some(Vec::new());
    }
    let candidates: Vec<CubeId> = k.grade(n - 1).collect();
    if candidates.is_empty() {
        return None;
    }
    let orders: Vec<Vec<CubeId>> = (0..2 * n)
        .map(|_| {
            let mut c = candidates.clone();
            c.shuffle(rng);
            c
        })
        .collect();
    let mut chosen = Vec::with_capacity(2 * n);
    let mut budget = 20_000usize;
    search(k, &orders, &mut chosen, &mut budget).then_some(chosen)
}

fn compatible(k: &PrecubicalSet, chosen: &[CubeId], slot: usize, f: CubeId) -> bool {
    let (j, beta) = (slot / 2 + 1, Sign::from_bit(slot % 2));
    // ∂_i^α F_j^β = ∂_{j-1}^β F_i^α for i < j
    (0..slot).filter(|s| s / 2 + 1 < j).all(|s| {
        let (i, alpha) = (s / 2 + 1, Sign::from_bit(s % 2));
        k.face(f, i, alpha) == k.face(chosen[s], j - 1, beta)
    })
}

fn search(k: &PrecubicalSet, orders: &[Vec<CubeId>], chosen: &mut Vec<CubeId>, budget: &mut usize) -> bool {
    let slot = chosen.len();
    if slot == orders.len() {
        return true;
    }
    for &f in &orders[slot] {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        if compatible(k, chosen, slot, f) {
            chosen.push(f);
            if search(k, orders, chosen, budget) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// A random map `∂□[n] → K`, if one is found.
pub fn random_attaching_map<R: Rng>(k: &PrecubicalSet, n: usize, rng: &mut R) -> Option<PcsMorphism> {
    let facets = random_facets(k, n, rng)?;
    if n == 0 {
        return PcsMorphism::new(&boundary_cube(0), k, Vec::new()).ok();
    }
    boundary_map_from_facets(k, n, &facets).ok()
}

/// Deterministic random valid set of dimension at most 3 with at most 40
/// cubes: a union of grid cells with a few extra cubes attached.
pub fn random_complex(seed: u64) -> PrecubicalSet {
    use Span::{At, Step};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let axes = rng.gen_range(1..=3);
    let size = if axes == 1 { 3 } else { 2 };
    let mut cells = Vec::new();
    let mut k = PrecubicalSet::empty();
    for _ in 0..rng.gen_range(1..=4) {
        let cell: Vec<Span> = (0..axes)
            .map(|_| if rng.gen_bool(0.6) { Step(rng.gen_range(0..size)) } else { At(rng.gen_range(0..=size)) })
            .collect();
        cells.push(cell);
        let next = grid_complex(&cells);
        if next.len() > 30 {
            cells.pop();
        } else {
            k = next;
        }
    }
    for _ in 0..rng.gen_range(0..=3) {
        let n = rng.gen_range(0..=axes.min(2) + 1);
        if let Some(g) = random_attaching_map(&k, n, &mut rng) {
            let (next, _) = attach_cube(&k, n, &g).expect("attaching along a valid map");
            if next.len() <= 40 {
                k = next;
            }
        }
    }
    k
}

/// The fixed examples: standard cubes and their boundaries up to dimension
/// 3, the hollow square and cube, two squares sharing an edge, the L.
pub fn named() -> Vec<(String, PrecubicalSet)> {
    let mut out = Vec::new();
    for n in 0..=3 {
        out.push((format!("std-cube-{n}"), standard_cube(n)));
    }
    for n in 1..=3 {
        out.push((format!("boundary-{n}"), boundary_cube(n)));
    }
    out.push(("hollow-square".into(), hollow_square()));
    out.push(("hollow-cube".into(), hollow_cube()));
    out.push(("two-squares".into(), two_squares()));
    out.push(("l-shape".into(), l_shape()));
    out
}

/// `random_complex(0)`, …, `random_complex(count - 1)`.
pub fn random(count: usize) -> Vec<(String, PrecubicalSet)> {
    (0..count as u64).map(|s| (format!("random-{s}"), random_complex(s))).collect()
}

/// [`named`] followed by 20 random sets.
pub fn corpus() -> Vec<(String, PrecubicalSet)> {
    let mut out = named();
    out.extend(random(20));
    out
}

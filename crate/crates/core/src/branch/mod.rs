//! Branching and merging complexes.
//!
//! At a vertex `α`, the branching complex has one `k`-simplex `σ_c` for every
//! `(k+1)`-cube `c` with initial vertex `α`, and `d_i σ_c = σ_{∂_{i+1}^0 c}`.
//! The merging complex is the branching complex of the time-reversed set.

mod semi_simplicial;
mod union_find;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use semi_simplicial::{SemiSimplicialSet, SimplicialError};
pub use union_find::UnionFind;

use crate::error::Result;
use crate::pcs::{standard_cube, CubeId, PrecubicalSet, Sign, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Paths leaving a vertex (lower faces).
    Branching,
    /// Paths entering a vertex (upper faces).
    Merging,
}

impl Side {
    pub fn sign(self) -> Sign {
        match self {
            Side::Branching => Sign::Minus,
            Side::Merging => Sign::Plus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Branching => "branching",
            Side::Merging => "merging",
        }
    }

    /// The set on which this side is computed as a branching complex.
    fn oriented(self, k: &PrecubicalSet) -> std::borrow::Cow<'_, PrecubicalSet> {
        match self {
            Side::Branching => std::borrow::Cow::Borrowed(k),
            Side::Merging => std::borrow::Cow::Owned(k.time_reverse()),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingComplex {
    pub base: String,
    pub side: Side,
    pub complex: SemiSimplicialSet,
}

impl BranchingComplex {
    pub fn is_empty(&self) -> bool {
        self.complex.is_empty()
    }

    pub fn export(&self) -> String {
        format!("# {} complex at {}\n{}", self.side, self.base, self.complex.export())
    }
}

fn build(k: &PrecubicalSet, vertex: CubeId, side: Side) -> Result<BranchingComplex> {
    let cubes = k.extremal_cubes(vertex, Sign::Minus)?;
    let top = cubes.last().map_or(0, |&c| k.dim_of(c));
    let mut names = vec![Vec::new(); top];
    let mut slot = std::collections::HashMap::new();
    for &c in &cubes {
        let deg = k.dim_of(c) - 1;
        slot.insert(c, names[deg].len());
        names[deg].push(k.name(c).to_string());
    }
    let mut faces = vec![Vec::new(); top];
    for &c in &cubes {
        let deg = k.dim_of(c) - 1;
        let fs = if deg == 0 { Vec::new() } else { (0..=deg).map(|i| slot[&k.face(c, i + 1, Sign::Minus)]).collect() };
        faces[deg].push(fs);
    }
    let complex =
        SemiSimplicialSet::new(names, faces).expect("precubical identities imply the semi-simplicial identities");
    Ok(BranchingComplex { base: k.name(vertex).to_string(), side, complex })
}

/// Branching (or merging) complex of `K` at `vertex`.
pub fn branching_complex(k: &PrecubicalSet, vertex: CubeId, side: Side) -> Result<BranchingComplex> {
    build(&side.oriented(k), vertex, side)
}

/// Connected classes of `𝒞⁻_α(K)` (or `𝒞⁺_α(K)`) under `c ~ ∂_i^0 c`,
/// computed by union-find directly on the cubes.
pub fn pi0_components(k: &PrecubicalSet, vertex: CubeId, side: Side) -> Result<Vec<Vec<CubeId>>> {
    let oriented = side.oriented(k);
    let k = oriented.as_ref();
    let cubes = k.extremal_cubes(vertex, Sign::Minus)?;
    let position: std::collections::HashMap<CubeId, usize> = cubes.iter().enumerate().map(|(j, &c)| (c, j)).collect();
    let mut uf = UnionFind::new(cubes.len());
    for (j, &c) in cubes.iter().enumerate() {
        if k.dim_of(c) >= 2 {
            for i in 1..=k.dim_of(c) {
                uf.union(j, position[&k.face(c, i, Sign::Minus)]);
            }
        }
    }
    Ok(uf.classes().into_iter().map(|cls| cls.into_iter().map(|j| cubes[j]).collect()).collect())
}

/// The complexes at every vertex, keyed by vertex id.
pub fn assemble_all(k: &PrecubicalSet, side: Side) -> BTreeMap<CubeId, BranchingComplex> {
    let oriented = side.oriented(k);
    k.vertices().map(|v| (v, build(&oriented, v, side).expect("vertices are vertices"))).collect()
}

/// Vertices of `□[n]` with a nonempty branching complex: all but `1_n`.
pub fn nonempty_index(n: usize) -> Vec<Word> {
    let cube = standard_cube(n);
    assemble_all(&cube, Side::Branching)
        .into_iter()
        .filter(|(_, b)| !b.is_empty())
        .map(|(v, _)| if n == 0 { Word(vec![]) } else { cube.name(v).parse().expect("cube names are words") })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pcs::boundary_cube;

    #[test]
    fn square_corner_is_an_interval() {
        let sq = standard_cube(2);
        let b = branching_complex(&sq, sq.get("00").unwrap(), Side::Branching).unwrap();
        assert_eq!(b.complex.names(0), ["*0", "0*"]);
        assert_eq!(b.complex.names(1), ["**"]);
        assert_eq!(b.complex.name(0, b.complex.face(1, 0, 0)), "0*");
        assert_eq!(b.complex.name(0, b.complex.face(1, 0, 1)), "*0");
        assert!(branching_complex(&sq, sq.get("11").unwrap(), Side::Branching).unwrap().is_empty());
        assert!(branching_complex(&sq, sq.get("**").unwrap(), Side::Branching).is_err());
    }

    #[test]
    fn hollow_cube_corner_is_a_cycle() {
        let k = boundary_cube(3);
        let b = branching_complex(&k, k.get("000").unwrap(), Side::Branching).unwrap();
        assert_eq!((b.complex.count(0), b.complex.count(1), b.complex.count(2)), (3, 3, 0));
    }

    #[test]
    fn components() {
        let hollow = boundary_cube(2);
        let comps = pi0_components(&hollow, hollow.get("00").unwrap(), Side::Branching).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 1));

        let sq = standard_cube(2);
        let comps = pi0_components(&sq, sq.get("00").unwrap(), Side::Branching).unwrap();
        assert_eq!(comps.iter().map(Vec::len).collect::<Vec<_>>(), vec![3]);
        assert!(pi0_components(&sq, sq.get("11").unwrap(), Side::Branching).unwrap().is_empty());
        let merging = pi0_components(&sq, sq.get("11").unwrap(), Side::Merging).unwrap();
        assert_eq!(merging.len(), 1);
    }

    #[test]
    fn assembly_covers_every_cube_once() {
        let sq = standard_cube(2);
        let all = assemble_all(&sq, Side::Branching);
        let nonempty: Vec<&str> = all.iter().filter(|(_, b)| !b.is_empty()).map(|(_, b)| b.base.as_str()).collect();
        assert_eq!(nonempty, ["00", "01", "10"]);
        let total: usize = all.values().map(|b| b.complex.total()).sum();
        assert_eq!(total, sq.len() - sq.count(0));
        assert!(assemble_all(&standard_cube(0), Side::Branching).values().all(BranchingComplex::is_empty));
    }

    #[test]
    fn index_sets() {
        assert!(nonempty_index(0).is_empty());
        let two: Vec<String> = nonempty_index(2).iter().map(Word::to_string).collect();
        assert_eq!(two, ["00", "01", "10"]);
        for n in 1..=4 {
            assert_eq!(nonempty_index(n).len(), (1 << n) - 1);
        }
    }

    #[test]
    fn merging_is_branching_of_the_reverse() {
        let k = boundary_cube(3);
        for v in k.vertices() {
            let m = branching_complex(&k, v, Side::Merging).unwrap();
            let b = branching_complex(&k.time_reverse(), v, Side::Branching).unwrap();
            assert_eq!(m.complex, b.complex);
        }
    }
}

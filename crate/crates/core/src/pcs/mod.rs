//! Finite precubical sets.
//!
//! A precubical set is stored as a graded family of named cubes, ordered by
//! `(dimension, name)`, together with the `2n` face maps of every `n`-cube.
//! Face `∂_i^α` is addressed with a 1-based axis `i` and a [`Sign`] for `α`.
//!
//! [`PrecubicalSet`] values are immutable and always total (every face is
//! assigned). Partial or untrusted data goes through [`PcsBuilder`], whose
//! [`PcsBuilder::validate`] lists every defect instead of failing on the first.

mod builder;
mod morphism;
mod standard;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

pub use builder::PcsBuilder;
pub use morphism::{attach_cube, attach_cube_named, boundary_map_from_facets, PcsMorphism};
pub use standard::{boundary_cube, standard_cube, Letter, Word, EMPTY_WORD};

use crate::error::{PcsError, Result};

/// The two values of `α ∈ {0, 1}`; `Minus` is `0`, written `-` in files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    pub fn bit(self) -> usize {
        match self {
            Sign::Minus => 0,
            Sign::Plus => 1,
        }
    }

    pub fn from_bit(bit: usize) -> Sign {
        if bit == 0 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Index of a cube inside one particular [`PrecubicalSet`].
///
/// Ids follow the global `(dimension, name)` order, so they are not stable
/// across different sets; names are.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CubeId(pub(crate) usize);

impl CubeId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cube {
    pub name: String,
    pub dim: usize,
}

/// Characters allowed in cube names. Besides the plain identifier set this
/// admits the characters used by generated names (`**`, `e|0-1,1`, `()`).
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|ch| ch.is_ascii_alphanumeric() || matches!(ch, '_' | '.' | '-' | '*' | '|' | ',' | '(' | ')'))
}

/// One defect found by validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingFace {
        cube: String,
        index: usize,
        sign: Sign,
    },
    DimensionMismatch {
        cube: String,
        index: usize,
        sign: Sign,
        target: String,
        expected: usize,
        found: usize,
    },
    /// `∂_i^α ∂_j^β c ≠ ∂_{j-1}^β ∂_i^α c` for `i < j`.
    Identity {
        cube: String,
        i: usize,
        j: usize,
        alpha: Sign,
        beta: Sign,
        left: String,
        right: String,
    },
}

impl Violation {
    pub fn cube(&self) -> &str {
        match self {
            Violation::MissingFace { cube, .. }
            | Violation::DimensionMismatch { cube, .. }
            | Violation::Identity { cube, .. } => cube,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingFace { cube, index, sign } => {
                write!(f, "missing face {index} {sign} of {cube}")
            }
            Violation::DimensionMismatch { cube, index, sign, target, expected, found } => {
                write!(f, "face {index} {sign} of {cube} is {target} of dimension {found}, expected {expected}")
            }
            Violation::Identity { cube, i, j, alpha, beta, left, right } => {
                let (a, b) = (alpha.bit(), beta.bit());
                write!(
                    f,
                    "precubical identity fails at ({cube},{i},{j},{a},{b}): \
                     d{i}^{a} d{j}^{b} {cube} = {left} but d{}^{b} d{i}^{a} {cube} = {right}",
                    j - 1
                )
            }
        }
    }
}

/// Shared validation over any (possibly partial) face table.
pub(crate) fn collect_violations<N, D, F>(count: usize, name: N, dim: D, face: F) -> Vec<Violation>
where
    N: Fn(usize) -> String,
    D: Fn(usize) -> usize,
    F: Fn(usize, usize, Sign) -> Option<usize>,
{
    let mut out = Vec::new();
    // faces that exist with the right dimension
    let good = |c: usize, i: usize, s: Sign| -> Option<usize> {
        let n = dim(c);
        if i == 0 || i > n {
            return None;
        }
        face(c, i, s).filter(|&t| dim(t) + 1 == n)
    };

    for c in 0..count {
        let n = dim(c);
        for i in 1..=n {
            for s in Sign::BOTH {
                match face(c, i, s) {
                    None => out.push(Violation::MissingFace { cube: name(c), index: i, sign: s }),
                    Some(t) if dim(t) + 1 != n => out.push(Violation::DimensionMismatch {
                        cube: name(c),
                        index: i,
                        sign: s,
                        target: name(t),
                        expected: n - 1,
                        found: dim(t),
                    }),
                    Some(_) => {}
                }
            }
        }
    }

    for c in 0..count {
        let n = dim(c);
        for j in 2..=n {
            for i in 1..j {
                for alpha in Sign::BOTH {
                    for beta in Sign::BOTH {
                        let left = good(c, j, beta).and_then(|d| good(d, i, alpha));
                        let right = good(c, i, alpha).and_then(|d| good(d, j - 1, beta));
                        if let (Some(l), Some(r)) = (left, right) {
                            if l != r {
                                out.push(Violation::Identity {
                                    cube: name(c),
                                    i,
                                    j,
                                    alpha,
                                    beta,
                                    left: name(l),
                                    right: name(r),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Raw cube record used by the internal constructors: faces index into the
/// same raw list, ordered `(1,-), (1,+), (2,-), …`.
#[derive(Debug, Clone)]
pub(crate) struct RawCube {
    pub name: String,
    pub dim: usize,
    pub faces: Vec<usize>,
}

/// A finite precubical set with total face maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecubicalSet {
    cubes: Vec<Cube>,
    faces: Vec<Vec<CubeId>>,
    index: HashMap<String, CubeId>,
    // grade k occupies ids grades[k]..grades[k + 1]
    grades: Vec<usize>,
}

impl Default for PrecubicalSet {
    fn default() -> Self {
        PrecubicalSet::empty()
    }
}

impl PrecubicalSet {
    pub fn empty() -> Self {
        PrecubicalSet { cubes: Vec::new(), faces: Vec::new(), index: HashMap::new(), grades: vec![0] }
    }

    /// Sorts raw cubes into `(dim, name)` order and remaps their faces.
    /// Names and face arity are checked; precubical identities are not.
    pub(crate) fn from_raw(raw: Vec<RawCube>) -> Result<Self> {
        let mut order: Vec<usize> = (0..raw.len()).collect();
        order.sort_by(|&a, &b| (raw[a].dim, &raw[a].name).cmp(&(raw[b].dim, &raw[b].name)));
        let mut position = vec![0; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }

        let mut index = HashMap::with_capacity(raw.len());
        let mut cubes = Vec::with_capacity(raw.len());
        let mut faces = Vec::with_capacity(raw.len());
        for (new, &old) in order.iter().enumerate() {
            let r = &raw[old];
            if !is_valid_name(&r.name) {
                return Err(PcsError::InvalidName(r.name.clone()));
            }
            if index.insert(r.name.clone(), CubeId(new)).is_some() {
                return Err(PcsError::DuplicateName(r.name.clone()));
            }
            if r.faces.len() != 2 * r.dim {
                return Err(PcsError::Invalid(vec![Violation::MissingFace {
                    cube: r.name.clone(),
                    index: r.faces.len() / 2 + 1,
                    sign: Sign::from_bit(r.faces.len() % 2),
                }]));
            }
            for (k, &t) in r.faces.iter().enumerate() {
                if raw[t].dim + 1 != r.dim {
                    return Err(PcsError::Invalid(vec![Violation::DimensionMismatch {
                        cube: r.name.clone(),
                        index: k / 2 + 1,
                        sign: Sign::from_bit(k % 2),
                        target: raw[t].name.clone(),
                        expected: r.dim - 1,
                        found: raw[t].dim,
                    }]));
                }
            }
            cubes.push(Cube { name: r.name.clone(), dim: r.dim });
            faces.push(r.faces.iter().map(|&t| CubeId(position[t])).collect());
        }

        let top = cubes.last().map_or(0, |c: &Cube| c.dim + 1);
        let mut grades = vec![0; top + 1];
        for k in 0..top {
            grades[k + 1] = grades[k] + cubes.iter().filter(|c| c.dim == k).count();
        }
        Ok(PrecubicalSet { cubes, faces, index, grades })
    }

    pub(crate) fn to_raw(&self) -> Vec<RawCube> {
        self.cubes
            .iter()
            .zip(&self.faces)
            .map(|(c, fs)| RawCube { name: c.name.clone(), dim: c.dim, faces: fs.iter().map(|f| f.0).collect() })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// Maximal cube dimension, `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        self.cubes.last().map(|c| c.dim)
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = CubeId> + ExactSizeIterator {
        (0..self.cubes.len()).map(CubeId)
    }

    pub fn cubes(&self) -> &[Cube] {
        &self.cubes
    }

    pub fn cube(&self, id: CubeId) -> &Cube {
        &self.cubes[id.0]
    }

    pub fn name(&self, id: CubeId) -> &str {
        &self.cubes[id.0].name
    }

    pub fn dim_of(&self, id: CubeId) -> usize {
        self.cubes[id.0].dim
    }

    pub fn lookup(&self, name: &str) -> Option<CubeId> {
        self.index.get(name).copied()
    }

    pub fn get(&self, name: &str) -> Result<CubeId> {
        self.lookup(name).ok_or_else(|| PcsError::UnknownCube(name.to_string()))
    }

    /// `∂_i^α c` with a 1-based axis. Panics if `i` is out of `1..=dim(c)`.
    pub fn face(&self, id: CubeId, i: usize, sign: Sign) -> CubeId {
        let n = self.dim_of(id);
        assert!(i >= 1 && i <= n, "face index {i} out of range for dimension {n}");
        self.faces[id.0][2 * (i - 1) + sign.bit()]
    }

    /// All faces of `id` in `(1,-), (1,+), (2,-), …` order.
    pub fn faces(&self, id: CubeId) -> &[CubeId] {
        &self.faces[id.0]
    }

    /// Cubes of dimension exactly `k`.
    pub fn grade(&self, k: usize) -> impl DoubleEndedIterator<Item = CubeId> + ExactSizeIterator {
        let range = if k + 1 < self.grades.len() { self.grades[k]..self.grades[k + 1] } else { 0..0 };
        range.map(CubeId)
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = CubeId> + ExactSizeIterator {
        self.grade(0)
    }

    /// Number of cubes per grade, `[|K_0|, |K_1|, …]`.
    pub fn counts(&self) -> Vec<usize> {
        self.grades.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn count(&self, k: usize) -> usize {
        self.grade(k).len()
    }

    /// Re-checks completeness, dimensions and every precubical identity.
    pub fn validate(&self) -> Vec<Violation> {
        collect_violations(
            self.cubes.len(),
            |c| self.cubes[c].name.clone(),
            |c| self.cubes[c].dim,
            |c, i, s| self.faces[c].get(2 * (i - 1) + s.bit()).map(|f| f.0),
        )
    }

    /// The precubical subset of cubes of dimension at most `p`.
    pub fn truncate(&self, p: usize) -> PrecubicalSet {
        let keep = self.grades.get(p + 1).copied().unwrap_or(self.cubes.len());
        let cubes = self.cubes[..keep].to_vec();
        let faces = self.faces[..keep].to_vec();
        let index = cubes.iter().enumerate().map(|(k, c)| (c.name.clone(), CubeId(k))).collect();
        let grades = self.grades[..self.grades.len().min(p + 2)].to_vec();
        PrecubicalSet { cubes, faces, index, grades }
    }

    /// `c⁻ = ∂_1^0 … ∂_n^0 c` (or `c⁺` with `Sign::Plus`); a vertex is its own
    /// extremal vertex.
    pub fn extremal_vertex(&self, id: CubeId, side: Sign) -> CubeId {
        let mut cur = id;
        for i in (1..=self.dim_of(id)).rev() {
            cur = self.face(cur, i, side);
        }
        cur
    }

    pub fn initial_vertex(&self, id: CubeId) -> CubeId {
        self.extremal_vertex(id, Sign::Minus)
    }

    pub fn final_vertex(&self, id: CubeId) -> CubeId {
        self.extremal_vertex(id, Sign::Plus)
    }

    /// `𝒞⁻_α(K) = {c : dim c ≥ 1, c⁻ = α}` for `Sign::Minus`, the dual set
    /// for `Sign::Plus`. Sorted in id order.
    pub fn extremal_cubes(&self, vertex: CubeId, side: Sign) -> Result<Vec<CubeId>> {
        if self.dim_of(vertex) != 0 {
            return Err(PcsError::NotAVertex(self.name(vertex).to_string()));
        }
        Ok(self.ids().skip(self.count(0)).filter(|&c| self.extremal_vertex(c, side) == vertex).collect())
    }

    /// Same cubes with `∂_i^α` and `∂_i^{1-α}` exchanged.
    pub fn time_reverse(&self) -> PrecubicalSet {
        let faces = self.faces.iter().map(|fs| fs.chunks(2).flat_map(|pair| [pair[1], pair[0]]).collect()).collect();
        PrecubicalSet { faces, ..self.clone() }
    }

    /// Vertices with no cube of positive dimension starting at them.
    pub fn final_states(&self) -> Vec<CubeId> {
        self.states_without(Sign::Minus)
    }

    /// Vertices with no cube of positive dimension ending at them.
    pub fn initial_states(&self) -> Vec<CubeId> {
        self.states_without(Sign::Plus)
    }

    fn states_without(&self, side: Sign) -> Vec<CubeId> {
        let used: BTreeSet<CubeId> = self.ids().skip(self.count(0)).map(|c| self.extremal_vertex(c, side)).collect();
        self.vertices().filter(|v| !used.contains(v)).collect()
    }

    /// Disjoint union; fails if a name occurs in both operands.
    pub fn disjoint_union(&self, other: &PrecubicalSet) -> Result<PrecubicalSet> {
        let offset = self.len();
        let mut raw = self.to_raw();
        raw.extend(other.to_raw().into_iter().map(|mut r| {
            r.faces.iter_mut().for_each(|f| *f += offset);
            r
        }));
        PrecubicalSet::from_raw(raw)
    }

    /// Copy with every name passed through `rename`.
    pub fn renamed(&self, rename: impl Fn(&str) -> String) -> Result<PrecubicalSet> {
        let raw = self
            .to_raw()
            .into_iter()
            .map(|mut r| {
                r.name = rename(&r.name);
                r
            })
            .collect();
        PrecubicalSet::from_raw(raw)
    }

    /// Smallest sub-precubical set containing `generators`.
    pub fn closure(&self, generators: impl IntoIterator<Item = CubeId>) -> PrecubicalSet {
        let mut keep = vec![false; self.len()];
        let mut stack: Vec<CubeId> = generators.into_iter().collect();
        while let Some(c) = stack.pop() {
            if !std::mem::replace(&mut keep[c.0], true) {
                stack.extend(self.faces(c).iter().copied());
            }
        }
        let mut position = vec![usize::MAX; self.len()];
        let kept: Vec<usize> = (0..self.len()).filter(|&c| keep[c]).collect();
        for (new, &old) in kept.iter().enumerate() {
            position[old] = new;
        }
        let raw = kept
            .iter()
            .map(|&old| RawCube {
                name: self.cubes[old].name.clone(),
                dim: self.cubes[old].dim,
                faces: self.faces[old].iter().map(|f| position[f.0]).collect(),
            })
            .collect();
        PrecubicalSet::from_raw(raw).expect("a closed subset of a valid set is valid")
    }
}

/// Free-function form of [`PrecubicalSet::validate`].
pub fn validate(k: &PrecubicalSet) -> Vec<Violation> {
    k.validate()
}

pub fn truncate(k: &PrecubicalSet, p: usize) -> PrecubicalSet {
    k.truncate(p)
}

pub fn time_reverse(k: &PrecubicalSet) -> PrecubicalSet {
    k.time_reverse()
}

pub fn extremal_vertex(k: &PrecubicalSet, c: CubeId, side: Sign) -> CubeId {
    k.extremal_vertex(c, side)
}

pub fn extremal_cubes(k: &PrecubicalSet, vertex: CubeId, side: Sign) -> Result<Vec<CubeId>> {
    k.extremal_cubes(vertex, side)
}

pub fn final_states(k: &PrecubicalSet) -> Vec<CubeId> {
    k.final_states()
}

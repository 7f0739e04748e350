//! Uniform cubical subdivision `Sub_p`.
//!
//! A cube of `Sub_p(K)` is a pair `(c, s)` of a cube `c` of `K` and a cell
//! `s` of the `p`-fold grid on `c`. Pairs whose cell touches the boundary of
//! `c` (an entry `Point(0)` or `Point(p)`) are identified with a pair based on
//! the corresponding face of `c`; every cube is stored in the unique normal
//! form without such entries.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{PcsError, Result};
use crate::pcs::{CubeId, PcsMorphism, PrecubicalSet, RawCube, Sign};
use crate::Rational;

/// One coordinate of a grid cell: the segment `[a, a+1]` or the point `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubEntry {
    Interval(usize),
    Point(usize),
}

/// A cell of the `p`-fold grid on `[0, p]^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubCube {
    pub p: usize,
    pub entries: Vec<SubEntry>,
}

impl SubCube {
    pub fn new(p: usize, entries: Vec<SubEntry>) -> Result<Self> {
        let ok = entries.iter().all(|e| match *e {
            SubEntry::Interval(a) => a < p,
            SubEntry::Point(a) => a <= p,
        });
        if p == 0 || !ok {
            return Err(PcsError::InvalidParameter(format!("cell {entries:?} out of range for p = {p}")));
        }
        Ok(SubCube { p, entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.iter().filter(|e| matches!(e, SubEntry::Interval(_))).count()
    }

    /// Replaces the `i`-th interval `[a, a+1]` by `a` (minus) or `a+1` (plus).
    pub fn face(&self, i: usize, sign: Sign) -> SubCube {
        let mut entries = self.entries.clone();
        let slot = entries
            .iter_mut()
            .filter(|e| matches!(e, SubEntry::Interval(_)))
            .nth(i - 1)
            .expect("face index within dimension");
        if let SubEntry::Interval(a) = *slot {
            *slot = SubEntry::Point(a + sign.bit());
        }
        SubCube { p: self.p, entries }
    }

    fn is_extreme(&self, e: SubEntry) -> Option<Sign> {
        match e {
            SubEntry::Point(0) => Some(Sign::Minus),
            SubEntry::Point(a) if a == self.p => Some(Sign::Plus),
            _ => None,
        }
    }

    /// Positions holding `Point(0)` or `Point(p)`.
    pub fn extreme_positions(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&k| self.is_extreme(self.entries[k]).is_some()).collect()
    }

    pub fn is_normal(&self) -> bool {
        self.extreme_positions().is_empty()
    }

    /// Mirror image under time reversal: `[a,a+1] ↦ [p-1-a, p-a]`, `a ↦ p-a`.
    pub fn reflect(&self) -> SubCube {
        let entries = self
            .entries
            .iter()
            .map(|e| match *e {
                SubEntry::Interval(a) => SubEntry::Interval(self.p - 1 - a),
                SubEntry::Point(a) => SubEntry::Point(self.p - a),
            })
            .collect();
        SubCube { p: self.p, entries }
    }

    /// Every cell of the grid on `[0, p]^n`.
    pub fn all(p: usize, n: usize) -> Vec<SubCube> {
        let choices: Vec<SubEntry> = (0..p).map(SubEntry::Interval).chain((0..=p).map(SubEntry::Point)).collect();
        Self::product(p, n, &choices)
    }

    /// Cells without `Point(0)` or `Point(p)` entries.
    pub fn normal_cells(p: usize, n: usize) -> Vec<SubCube> {
        let choices: Vec<SubEntry> = (0..p).map(SubEntry::Interval).chain((1..p).map(SubEntry::Point)).collect();
        Self::product(p, n, &choices)
    }

    fn product(p: usize, n: usize, choices: &[SubEntry]) -> Vec<SubCube> {
        let mut cells = vec![Vec::new()];
        for _ in 0..n {
            cells = cells
                .into_iter()
                .flat_map(|c: Vec<SubEntry>| {
                    choices.iter().map(move |&e| {
                        let mut next = c.clone();
                        next.push(e);
                        next
                    })
                })
                .collect();
        }
        cells.into_iter().map(|entries| SubCube { p, entries }).collect()
    }
}

impl fmt::Display for SubCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str(crate::pcs::EMPTY_WORD);
        }
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            match e {
                SubEntry::Interval(a) => write!(f, "{}-{}", a, a + 1)?,
                SubEntry::Point(a) => write!(f, "{a}")?,
            }
        }
        Ok(())
    }
}

/// A cube of `Sub_p(K)` in normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubPair {
    pub base: CubeId,
    pub cell: SubCube,
}

impl SubPair {
    /// `base|e1,e2,…`, or just the base name when the cell is empty.
    pub fn name(&self, k: &PrecubicalSet) -> String {
        if self.cell.entries.is_empty() {
            k.name(self.base).to_string()
        } else {
            format!("{}|{}", k.name(self.base), self.cell)
        }
    }
}

/// One identification step at `position`, which must hold an extreme point.
pub(crate) fn reduce_at(k: &PrecubicalSet, base: CubeId, cell: &SubCube, position: usize) -> (CubeId, SubCube) {
    let sign = cell.is_extreme(cell.entries[position]).expect("extreme entry");
    let mut entries = cell.entries.clone();
    entries.remove(position);
    (k.face(base, position + 1, sign), SubCube { p: cell.p, entries })
}

/// Moves `(c, s)` down to the face of `c` carrying the cell until no entry is
/// `Point(0)` or `Point(p)`.
pub fn normalize_pair(k: &PrecubicalSet, base: CubeId, cell: &SubCube) -> SubPair {
    debug_assert_eq!(k.dim_of(base), cell.entries.len());
    let (mut base, mut cell) = (base, cell.clone());
    while let Some(&pos) = cell.extreme_positions().first() {
        (base, cell) = reduce_at(k, base, &cell, pos);
    }
    SubPair { base, cell }
}

/// `Sub_p(□[n])` with cubes named by their cells.
pub fn sub_standard(p: usize, n: usize) -> Result<PrecubicalSet> {
    if p == 0 {
        return Err(PcsError::InvalidParameter("subdivision order must be at least 1".into()));
    }
    let cells = SubCube::all(p, n);
    let position: HashMap<&SubCube, usize> = cells.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let raw = cells
        .iter()
        .map(|c| RawCube {
            name: c.to_string(),
            dim: c.dim(),
            faces: (1..=c.dim()).flat_map(|i| Sign::BOTH.map(|s| position[&c.face(i, s)])).collect(),
        })
        .collect();
    PrecubicalSet::from_raw(raw)
}

/// `Sub_p(K)` together with the pair describing each of its cubes.
#[derive(Debug, Clone)]
pub struct Subdivision {
    p: usize,
    complex: PrecubicalSet,
    pairs: Vec<SubPair>,
    ids: HashMap<SubPair, CubeId>,
}

impl Subdivision {
    pub fn order(&self) -> usize {
        self.p
    }

    pub fn complex(&self) -> &PrecubicalSet {
        &self.complex
    }

    pub fn into_complex(self) -> PrecubicalSet {
        self.complex
    }

    /// The pair of a cube of `Sub_p(K)`; its base refers to `K`.
    pub fn pair(&self, id: CubeId) -> &SubPair {
        &self.pairs[id.index()]
    }

    /// The cube of `Sub_p(K)` for a pair already in normal form.
    pub fn id_of(&self, pair: &SubPair) -> Option<CubeId> {
        self.ids.get(pair).copied()
    }
}

/// Builds `Sub_p(K)`: cubes are the normal-form pairs, faces are computed on
/// the cell and normalized.
pub fn subdivide(k: &PrecubicalSet, p: usize) -> Result<Subdivision> {
    if p == 0 {
        return Err(PcsError::InvalidParameter("subdivision order must be at least 1".into()));
    }
    let pairs: Vec<SubPair> = k
        .ids()
        .flat_map(|c| SubCube::normal_cells(p, k.dim_of(c)).into_iter().map(move |cell| SubPair { base: c, cell }))
        .collect();
    let position: HashMap<&SubPair, usize> = pairs.iter().enumerate().map(|(j, q)| (q, j)).collect();
    let raw: Vec<RawCube> = pairs
        .iter()
        .map(|q| {
            let dim = q.cell.dim();
            let faces = (1..=dim)
                .flat_map(|i| Sign::BOTH.map(|s| (i, s)))
                .map(|(i, s)| position[&normalize_pair(k, q.base, &q.cell.face(i, s))])
                .collect();
            RawCube { name: q.name(k), dim, faces }
        })
        .collect();
    let complex = PrecubicalSet::from_raw(raw)?;

    let mut ordered = vec![None; pairs.len()];
    for q in &pairs {
        ordered[complex.get(&q.name(k))?.index()] = Some(q.clone());
    }
    let pairs: Vec<SubPair> = ordered.into_iter().map(|q| q.expect("every cube has a pair")).collect();
    let ids = pairs.iter().enumerate().map(|(j, q)| (q.clone(), CubeId(j))).collect();
    Ok(Subdivision { p, complex, pairs, ids })
}

/// The canonical isomorphism `Sub_p(Sub_q(K)) → Sub_{pq}(K)` with both ends.
#[derive(Debug, Clone)]
pub struct ComposeIso {
    pub source: Subdivision,
    pub target: Subdivision,
    pub morphism: PcsMorphism,
}

/// Refines every inner cell by the outer grid: a point `b` of the `q`-grid
/// becomes `b·p`, and the outer entry `x` inside `[b, b+1]` becomes `b·p + x`.
pub fn sub_compose_iso(k: &PrecubicalSet, p: usize, q: usize) -> Result<ComposeIso> {
    let inner = subdivide(k, q)?;
    let outer = subdivide(inner.complex(), p)?;
    let target = subdivide(k, p * q)?;

    let map = outer
        .complex()
        .ids()
        .map(|id| {
            let SubPair { base, cell: outer_cell } = outer.pair(id);
            let SubPair { base: c, cell: inner_cell } = inner.pair(*base);
            let mut refined = outer_cell.entries.iter();
            let entries = inner_cell
                .entries
                .iter()
                .map(|e| match *e {
                    SubEntry::Point(b) => SubEntry::Point(b * p),
                    SubEntry::Interval(b) => match *refined.next().expect("one outer entry per interval") {
                        SubEntry::Interval(a) => SubEntry::Interval(b * p + a),
                        SubEntry::Point(a) => SubEntry::Point(b * p + a),
                    },
                })
                .collect();
            let pair = normalize_pair(k, *c, &SubCube { p: p * q, entries });
            target.id_of(&pair).ok_or_else(|| PcsError::Morphism(format!("no cube {} in Sub_{}", pair.name(k), p * q)))
        })
        .collect::<Result<Vec<_>>>()?;
    let morphism = PcsMorphism::new(outer.complex(), target.complex(), map)?;
    Ok(ComposeIso { source: outer, target, morphism })
}

/// Base cube of a vertex of `Sub_p(K)` and its position in that cube,
/// rescaled into `[0, 1]^dim`. Original vertices give `(v, [])`.
pub fn vertex_coordinates(sub: &Subdivision, v: CubeId) -> Result<(CubeId, Vec<Rational>)> {
    if sub.complex().dim_of(v) != 0 {
        return Err(PcsError::NotAVertex(sub.complex().name(v).to_string()));
    }
    let pair = sub.pair(v);
    let p = BigInt::from(sub.order());
    let coords = pair
        .cell
        .entries
        .iter()
        .map(|e| match *e {
            SubEntry::Point(a) => Rational::new(BigInt::from(a), p.clone()),
            SubEntry::Interval(_) => unreachable!("vertices have no interval entries"),
        })
        .collect();
    Ok((pair.base, coords))
}

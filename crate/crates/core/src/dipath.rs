//! Piecewise-linear natural directed paths inside a single cube.
//!
//! A path is given by breakpoints `0 = t_0 < … < t_m` and values
//! `x_0, …, x_m` in `[0,1]^n` joined linearly. It is natural when the
//! coordinates of every `x_k` sum to `t_k`, so that `γ_1(t) + … + γ_n(t) = t`
//! throughout. Short paths start at `0_n` and have length `ε ∈ (0, 1)`.
//!
//! Everything is generic over an exact ordered field ([`ExactScalar`]); the
//! crate root fixes [`crate::NaturalPath`] to big rationals.

use std::collections::BTreeSet;
use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::pcs::{Sign, Word};

/// Exact ordered field scalars (e.g. `BigRational`, `Ratio<i64>`).
pub trait ExactScalar: Clone + Ord + Signed + FromPrimitive + Debug + Display {}

impl<T> ExactScalar for T where T: Clone + Ord + Signed + FromPrimitive + Debug + Display {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("carrier {0:?} has dimension 0")]
    PointCarrier(String),
    #[error("natural length {0} is not in (0, 1)")]
    Length(String),
    #[error("{times} breakpoints but {values} values")]
    Shape { times: usize, values: usize },
    #[error("breakpoint {index}: {reason}")]
    Breakpoint { index: usize, reason: String },
    #[error("breakpoint {index}: value has {found} coordinates, carrier has {expected}")]
    Arity { index: usize, expected: usize, found: usize },
    #[error("path does not start at the initial corner (coordinate {coordinate})")]
    Start { coordinate: usize },
    #[error("breakpoint {index}: coordinate {coordinate} decreases")]
    Monotone { index: usize, coordinate: usize },
    #[error("breakpoint {index}: coordinates sum to {sum}, expected {time}")]
    Naturality { index: usize, sum: String, time: String },
    #[error("breakpoint {index}: coordinate {coordinate} leaves [0, 1]")]
    Range { index: usize, coordinate: usize },
    #[error("paths live in different carriers ({0} vs {1})")]
    CarrierMismatch(String, String),
    #[error("paths have different lengths ({0} vs {1})")]
    LengthMismatch(String, String),
    #[error("time {time} is outside (0, {length}]")]
    OutOfRange { time: String, length: String },
    #[error("axis {axis} is not a coface position for dimension {dim}")]
    Axis { axis: usize, dim: usize },
    #[error("embedding along an upper face moves the start away from the initial corner")]
    UpperFace,
    #[error("convex parameter {0} is not in [0, 1]")]
    ConvexParameter(String),
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

pub type PathResult<T> = Result<T, PathError>;

/// The cube a path runs in, by name and dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Carrier {
    pub name: String,
    pub dim: usize,
}

impl Carrier {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        Carrier { name: name.into(), dim }
    }

    /// The top cube `**…*` of `□[n]`.
    pub fn standard(n: usize) -> Self {
        Carrier::new(Word::top(n).to_string(), n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlNaturalPath<S> {
    carrier: Carrier,
    length: S,
    times: Vec<S>,
    values: Vec<Vec<S>>,
}

fn int<S: ExactScalar>(k: usize) -> S {
    S::from_usize(k).expect("small integers are representable")
}

/// Checked constructor for a short natural path (`0 < ε < 1`).
pub fn make_path<S: ExactScalar>(
    carrier: Carrier,
    eps: S,
    times: Vec<S>,
    values: Vec<Vec<S>>,
) -> PathResult<PlNaturalPath<S>> {
    if eps <= S::zero() || eps >= S::one() {
        return Err(PathError::Length(eps.to_string()));
    }
    PlNaturalPath::checked(carrier, eps, times, values)
}

impl<S: ExactScalar> PlNaturalPath<S> {
    /// Checks every invariant except the upper bound on the length.
    fn checked(carrier: Carrier, length: S, times: Vec<S>, values: Vec<Vec<S>>) -> PathResult<Self> {
        let n = carrier.dim;
        if n == 0 {
            return Err(PathError::PointCarrier(carrier.name));
        }
        if times.len() != values.len() || times.len() < 2 {
            return Err(PathError::Shape { times: times.len(), values: values.len() });
        }
        if length <= S::zero() {
            return Err(PathError::Length(length.to_string()));
        }
        if !times[0].is_zero() {
            return Err(PathError::Breakpoint { index: 0, reason: "first breakpoint must be 0".into() });
        }
        let last = times.len() - 1;
        if times[last] != length {
            return Err(PathError::Breakpoint { index: last, reason: "last breakpoint must equal the length".into() });
        }
        for (k, x) in values.iter().enumerate() {
            if x.len() != n {
                return Err(PathError::Arity { index: k, expected: n, found: x.len() });
            }
        }
        if let Some(coordinate) = values[0].iter().position(|v| !v.is_zero()) {
            return Err(PathError::Start { coordinate: coordinate + 1 });
        }
        for k in 0..times.len() {
            if k > 0 {
                if times[k] <= times[k - 1] {
                    return Err(PathError::Breakpoint { index: k, reason: "breakpoints must increase".into() });
                }
                if let Some(c) = (0..n).find(|&c| values[k][c] < values[k - 1][c]) {
                    return Err(PathError::Monotone { index: k, coordinate: c + 1 });
                }
            }
            if let Some(c) = (0..n).find(|&c| values[k][c] < S::zero() || values[k][c] > S::one()) {
                return Err(PathError::Range { index: k, coordinate: c + 1 });
            }
            let sum = values[k].iter().fold(S::zero(), |acc, v| acc + v.clone());
            if sum != times[k] {
                return Err(PathError::Naturality { index: k, sum: sum.to_string(), time: times[k].to_string() });
            }
        }
        Ok(PlNaturalPath { carrier, length, times, values })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    /// Natural length (the final breakpoint).
    pub fn length(&self) -> &S {
        &self.length
    }

    pub fn breakpoints(&self) -> &[S] {
        &self.times
    }

    pub fn values(&self) -> &[Vec<S>] {
        &self.values
    }

    /// `γ(t)` for `0 ≤ t ≤ length`, by linear interpolation.
    pub fn value_at(&self, t: &S) -> PathResult<Vec<S>> {
        if *t < S::zero() || *t > self.length {
            return Err(self.out_of_range(t));
        }
        let k = self.times.partition_point(|s| s < t);
        if self.times[k] == *t {
            return Ok(self.values[k].clone());
        }
        let (t0, t1) = (&self.times[k - 1], &self.times[k]);
        let u = (t.clone() - t0.clone()) / (t1.clone() - t0.clone());
        Ok(lerp(&u, &self.values[k - 1], &self.values[k]))
    }

    fn out_of_range(&self, t: &S) -> PathError {
        PathError::OutOfRange { time: t.to_string(), length: self.length.to_string() }
    }

    /// Truncation to `[0, eps2]`, inserting an interpolated breakpoint.
    pub fn restrict(&self, eps2: &S) -> PathResult<Self> {
        if *eps2 <= S::zero() || *eps2 > self.length {
            return Err(self.out_of_range(eps2));
        }
        let keep = self.times.partition_point(|s| s < eps2);
        let mut times = self.times[..keep].to_vec();
        let mut values = self.values[..keep].to_vec();
        times.push(eps2.clone());
        values.push(self.value_at(eps2)?);
        Ok(PlNaturalPath { carrier: self.carrier.clone(), length: eps2.clone(), times, values })
    }

    /// Continues with a straight segment to `1_n`, reached at time `n`.
    pub fn extend_full(&self) -> Self {
        let n = self.dim();
        let mut times = self.times.clone();
        let mut values = self.values.clone();
        times.push(int(n));
        values.push(vec![S::one(); n]);
        PlNaturalPath::checked(self.carrier.clone(), int(n), times, values)
            .expect("a path inside [0,1]^n extends monotonically to 1_n")
    }

    /// Axes `i` (1-based) with `γ_i ≡ 0`.
    pub fn zero_set(&self) -> BTreeSet<usize> {
        (0..self.dim()).filter(|&c| self.values.iter().all(|x| x[c].is_zero())).map(|c| c + 1).collect()
    }

    /// The same path seen in a cube of dimension `n + 1` through the coface
    /// `δ_i^0`; `carrier` names that cube. `δ_i^1` is rejected because the
    /// result would no longer start at the initial corner.
    pub fn embed_face(&self, axis: usize, sign: Sign, carrier: impl Into<String>) -> PathResult<Self> {
        let n = self.dim();
        if axis == 0 || axis > n + 1 {
            return Err(PathError::Axis { axis, dim: n + 1 });
        }
        if sign == Sign::Plus {
            return Err(PathError::UpperFace);
        }
        let values = self
            .values
            .iter()
            .map(|x| {
                let mut y = x.clone();
                y.insert(axis - 1, S::zero());
                y
            })
            .collect();
        Ok(PlNaturalPath {
            carrier: Carrier::new(carrier, n + 1),
            length: self.length.clone(),
            times: self.times.clone(),
            values,
        })
    }

    /// Equality as functions (breakpoint lists may differ).
    pub fn same_function(&self, other: &Self) -> bool {
        self.carrier == other.carrier
            && self.length == other.length
            && merged_times(self, other).iter().all(|t| self.value_at(t).ok() == other.value_at(t).ok())
    }

    /// Drops breakpoints where the path does not bend.
    pub fn simplified(&self) -> Self {
        let mut times = vec![self.times[0].clone()];
        let mut values = vec![self.values[0].clone()];
        for k in 1..self.times.len() {
            if k + 1 < self.times.len() {
                let prev = (times.last().unwrap(), values.last().unwrap());
                let u = (self.times[k].clone() - prev.0.clone()) / (self.times[k + 1].clone() - prev.0.clone());
                if lerp(&u, prev.1, &self.values[k + 1]) == self.values[k] {
                    continue;
                }
            }
            times.push(self.times[k].clone());
            values.push(self.values[k].clone());
        }
        PlNaturalPath { carrier: self.carrier.clone(), length: self.length.clone(), times, values }
    }
}

fn lerp<S: ExactScalar>(u: &S, a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.clone() + u.clone() * (y.clone() - x.clone())).collect()
}

fn merged_times<S: ExactScalar>(a: &PlNaturalPath<S>, b: &PlNaturalPath<S>) -> Vec<S> {
    let upper = a.length.clone().min(b.length.clone());
    let mut ts: Vec<S> = a.times.iter().chain(&b.times).filter(|t| **t <= upper).cloned().collect();
    ts.sort();
    ts.dedup();
    ts
}

fn same_frame<S: ExactScalar>(a: &PlNaturalPath<S>, b: &PlNaturalPath<S>) -> PathResult<()> {
    if a.carrier != b.carrier {
        return Err(PathError::CarrierMismatch(a.carrier.name.clone(), b.carrier.name.clone()));
    }
    if a.length != b.length {
        return Err(PathError::LengthMismatch(a.length.to_string(), b.length.to_string()));
    }
    Ok(())
}

/// `sup_t max_i |γ_i(t) − γ'_i(t)|`. The difference is affine between merged
/// breakpoints, so the supremum is attained at one of them.
pub fn sup_distance<S: ExactScalar>(a: &PlNaturalPath<S>, b: &PlNaturalPath<S>) -> PathResult<S> {
    same_frame(a, b)?;
    let mut best = S::zero();
    for t in merged_times(a, b) {
        let (x, y) = (a.value_at(&t)?, b.value_at(&t)?);
        for (p, q) in x.into_iter().zip(y) {
            best = best.max((p - q).abs());
        }
    }
    Ok(best)
}

/// `(1 − u)·γ + u·γ'` on the merged breakpoints.
pub fn convex_comb<S: ExactScalar>(u: &S, a: &PlNaturalPath<S>, b: &PlNaturalPath<S>) -> PathResult<PlNaturalPath<S>> {
    same_frame(a, b)?;
    if *u < S::zero() || *u > S::one() {
        return Err(PathError::ConvexParameter(u.to_string()));
    }
    let times = merged_times(a, b);
    let values = times.iter().map(|t| Ok(lerp(u, &a.value_at(t)?, &b.value_at(t)?))).collect::<PathResult<Vec<_>>>()?;
    PlNaturalPath::checked(a.carrier.clone(), a.length.clone(), times, values)
}

/// Whether the two paths agree on `[0, eps2]`.
pub fn germ_equal<S: ExactScalar>(a: &PlNaturalPath<S>, b: &PlNaturalPath<S>, eps2: &S) -> PathResult<bool> {
    if a.carrier != b.carrier {
        return Err(PathError::CarrierMismatch(a.carrier.name.clone(), b.carrier.name.clone()));
    }
    let horizon = a.length.clone().min(b.length.clone());
    if *eps2 <= S::zero() || *eps2 >= horizon {
        return Err(PathError::OutOfRange { time: eps2.to_string(), length: horizon.to_string() });
    }
    Ok(a.restrict(eps2)?.same_function(&b.restrict(eps2)?))
}

/// The straight path `t ↦ (t/n, …, t/n)` of length `eps` in `□[n]`.
pub fn diagonal<S: ExactScalar>(n: usize, eps: S) -> PathResult<PlNaturalPath<S>> {
    let end = vec![eps.clone() / int(n.max(1)); n];
    make_path(Carrier::standard(n), eps.clone(), vec![S::zero(), eps], vec![vec![S::zero(); n], end])
}

/// The path along the first axis of `□[1]`: `t ↦ (t)`.
pub fn edge_path<S: ExactScalar>(eps: S) -> PathResult<PlNaturalPath<S>> {
    diagonal(1, eps)
}

/// In `□[2]`: up the second axis to `(0, h)`, then straight to
/// `((ε−h)/2, (ε+h)/2)` at time `ε`. As `h → 0` these converge to the
/// diagonal while each one starts along the boundary face `γ_1 = 0`.
pub fn gamma_h<S: ExactScalar>(h: S, eps: S) -> PathResult<PlNaturalPath<S>> {
    let two: S = int(2);
    let zero = S::zero();
    let one = S::one();
    let lo = (eps.clone() - h.clone()) / two.clone();
    let hi = (eps.clone() + h.clone()) / two;
    let inside = |v: &S| *v > zero && *v < one;
    if !(h > zero && h < eps && eps < one && inside(&lo) && inside(&hi)) {
        return Err(PathError::Parameters(format!("need 0 < h < ε < 1, got h = {h}, ε = {eps}")));
    }
    make_path(
        Carrier::standard(2),
        eps.clone(),
        vec![S::zero(), h.clone(), eps],
        vec![vec![S::zero(), S::zero()], vec![S::zero(), h], vec![lo, hi]],
    )
}

/// Random short natural path in `□[n]` with `m` interior breakpoints,
/// deterministic in `seed`.
pub fn sample<S: ExactScalar>(n: usize, eps: S, m: usize, seed: u64) -> PathResult<PlNaturalPath<S>> {
    let axes: Vec<usize> = (1..=n).collect();
    sample_supported(n, eps, m, seed, &axes)
}

/// Like [`sample`], but only the listed axes (1-based) ever move.
pub fn sample_supported<S: ExactScalar>(
    n: usize,
    eps: S,
    m: usize,
    seed: u64,
    support: &[usize],
) -> PathResult<PlNaturalPath<S>> {
    if support.is_empty() || support.iter().any(|&a| a == 0 || a > n) {
        return Err(PathError::Parameters(format!("support {support:?} is not a nonempty set of axes of □[{n}]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = 16 * (m + 1);
    let mut ticks = BTreeSet::new();
    while ticks.len() < m {
        ticks.insert(rng.gen_range(1..grid));
    }
    let mut times = vec![S::zero()];
    times.extend(ticks.into_iter().map(|k| eps.clone() * int(k) / int(grid)));
    times.push(eps.clone());

    let mut values = vec![vec![S::zero(); n]];
    for k in 1..times.len() {
        let step = times[k].clone() - times[k - 1].clone();
        let weights: Vec<usize> = loop {
            let w: Vec<usize> = support.iter().map(|_| rng.gen_range(0..=8)).collect();
            if w.iter().any(|&x| x > 0) {
                break w;
            }
        };
        let total: usize = weights.iter().sum();
        let mut next = values[k - 1].clone();
        for (&axis, &w) in support.iter().zip(&weights) {
            next[axis - 1] = next[axis - 1].clone() + step.clone() * int(w) / int(total);
        }
        values.push(next);
    }
    make_path(Carrier::standard(n), eps, times, values)
}

/// One row of the convergence table for the family `γ_{1/m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoGermsRow<S> {
    pub m: usize,
    pub h: S,
    /// `sup_distance(γ_h, γ_0)`.
    pub distance: S,
    /// `γ_h` agrees with the boundary edge path on `[0, h]`.
    pub boundary_germ: bool,
    /// `γ_0` restricted to `[0, h]` touches no face `γ_i = 0`.
    pub limit_off_boundary: bool,
}

/// `γ_{1/m}` against the diagonal `γ_0` for every admissible `m ≤ steps`
/// (from `m = 3`, skipping `m` with `1/m ≥ min(ε, 2 − ε)`).
pub fn no_germs_table<S: ExactScalar>(eps: S, steps: usize) -> PathResult<Vec<NoGermsRow<S>>> {
    let limit = diagonal(2, eps.clone())?;
    let boundary = edge_path(eps.clone())?.embed_face(1, Sign::Minus, Carrier::standard(2).name)?;
    let bound = eps.clone().min(int::<S>(2) - eps.clone());
    let mut rows = Vec::new();
    for m in 3..=steps {
        let h = S::one() / int(m);
        if h >= bound {
            continue;
        }
        let g = gamma_h(h.clone(), eps.clone())?;
        rows.push(NoGermsRow {
            m,
            distance: sup_distance(&g, &limit)?,
            boundary_germ: germ_equal(&g, &boundary, &h)?,
            limit_off_boundary: limit.restrict(&h)?.zero_set().is_empty(),
            h,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{NaturalPath, Rational};
    use num_rational::Ratio;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn construction_checks() {
        let sq = Carrier::standard(2);
        let ok = make_path(
            sq.clone(),
            q(1, 2),
            vec![q(0, 1), q(1, 2)],
            vec![vec![q(0, 1), q(0, 1)], vec![q(1, 4), q(1, 4)]],
        );
        assert!(ok.is_ok());
        let unnatural = make_path(
            sq.clone(),
            q(1, 2),
            vec![q(0, 1), q(1, 2)],
            vec![vec![q(0, 1), q(0, 1)], vec![q(1, 2), q(1, 4)]],
        );
        assert!(matches!(unnatural, Err(PathError::Naturality { index: 1, .. })));
        let long = make_path(
            sq.clone(),
            q(1, 1),
            vec![q(0, 1), q(1, 1)],
            vec![vec![q(0, 1), q(0, 1)], vec![q(1, 2), q(1, 2)]],
        );
        assert!(matches!(long, Err(PathError::Length(_))));
        let backwards = make_path(
            sq.clone(),
            q(1, 2),
            vec![q(0, 1), q(1, 4), q(1, 2)],
            vec![vec![q(0, 1), q(0, 1)], vec![q(1, 4), q(0, 1)], vec![q(0, 1), q(1, 2)]],
        );
        assert!(matches!(backwards, Err(PathError::Monotone { index: 2, coordinate: 1 })));
        let off = make_path(sq, q(1, 2), vec![q(0, 1), q(1, 2)], vec![vec![q(1, 8), q(0, 1)], vec![q(1, 4), q(1, 4)]]);
        assert!(matches!(off, Err(PathError::Start { coordinate: 1 })));
    }

    #[test]
    fn restriction_and_extension() {
        let d: NaturalPath = diagonal(2, q(1, 2)).unwrap();
        assert_eq!(d.restrict(&q(1, 2)).unwrap(), d);
        assert!(d.restrict(&q(1, 4)).unwrap().same_function(&diagonal(2, q(1, 4)).unwrap()));
        assert!(d.restrict(&q(3, 4)).is_err());

        let full = d.extend_full();
        assert_eq!(full.length(), &q(2, 1));
        assert_eq!(full.value_at(&q(2, 1)).unwrap(), vec![q(1, 1), q(1, 1)]);
        assert_eq!(full.restrict(&q(1, 2)).unwrap(), d);
    }

    #[test]
    fn boundary_path_leaves_the_face_after_extension() {
        let g: NaturalPath = edge_path(q(1, 2)).unwrap().embed_face(1, Sign::Minus, "**").unwrap();
        assert_eq!(g.zero_set(), BTreeSet::from([1]));
        let full = g.extend_full();
        assert!(full.value_at(&q(3, 4)).unwrap()[0] > q(0, 1));
        assert!(full.zero_set().is_empty());
    }

    #[test]
    fn figure_one_path() {
        let g: NaturalPath = gamma_h(q(1, 3), q(1, 2)).unwrap();
        assert_eq!(g.values(), &[vec![q(0, 1), q(0, 1)], vec![q(0, 1), q(1, 3)], vec![q(1, 12), q(5, 12)]]);
        let sums: Vec<Rational> = g.values().iter().map(|x| x.iter().sum()).collect();
        assert_eq!(sums, vec![q(0, 1), q(1, 3), q(1, 2)]);

        assert_eq!(g.restrict(&q(1, 3)).unwrap().zero_set(), BTreeSet::from([1]));
        assert!(g.zero_set().is_empty());
        assert!(g.restrict(&q(1, 3)).unwrap().same_function(
            &make_path(
                Carrier::standard(2),
                q(1, 3),
                vec![q(0, 1), q(1, 3)],
                vec![vec![q(0, 1), q(0, 1)], vec![q(0, 1), q(1, 3)]]
            )
            .unwrap()
        ));

        let limit = diagonal(2, q(1, 2)).unwrap();
        assert_eq!(sup_distance(&g, &limit).unwrap(), q(1, 6));
        for m in 3..10 {
            let g = gamma_h(q(1, m), q(1, 2)).unwrap();
            assert_eq!(sup_distance(&g, &limit).unwrap(), q(1, 2 * m));
        }
        assert!(gamma_h(q(1, 2), q(1, 2)).is_err());
    }

    #[test]
    fn convergence_table() {
        let rows = no_germs_table(q(1, 2), 12).unwrap();
        assert_eq!(rows.iter().map(|r| r.m).collect::<Vec<_>>(), (3..=12).collect::<Vec<_>>());
        for r in &rows {
            assert_eq!(r.distance, q(1, 2 * r.m as i64));
            assert!(r.boundary_germ && r.limit_off_boundary);
        }
        // 1/3 is not below ε = 1/4
        assert_eq!(no_germs_table(q(1, 4), 6).unwrap().first().map(|r| r.m), Some(5));
    }

    #[test]
    fn germs() {
        let eps = q(1, 2);
        let g: NaturalPath = gamma_h(q(1, 4), eps.clone()).unwrap();
        let boundary = edge_path(eps.clone()).unwrap().embed_face(1, Sign::Minus, "**").unwrap();
        assert!(germ_equal(&g, &boundary, &q(1, 4)).unwrap());
        assert!(!germ_equal(&g, &boundary, &q(1, 3)).unwrap());
        let limit = diagonal(2, eps.clone()).unwrap();
        for e in [q(1, 100), q(1, 8), q(1, 4), q(49, 100)] {
            assert!(!germ_equal(&g, &limit, &e).unwrap());
            assert!(germ_equal(&g, &g, &e).unwrap());
        }
        assert!(germ_equal(&g, &limit, &eps).is_err());
        assert!(germ_equal(&g, &edge_path(eps).unwrap(), &q(1, 8)).is_err());
    }

    #[test]
    fn embedding() {
        let e: NaturalPath = edge_path(q(1, 2)).unwrap();
        let up = e.embed_face(1, Sign::Minus, "**").unwrap();
        assert_eq!(up.value_at(&q(1, 3)).unwrap(), vec![q(0, 1), q(1, 3)]);
        assert!(matches!(e.embed_face(1, Sign::Plus, "**"), Err(PathError::UpperFace)));
        assert!(matches!(e.embed_face(3, Sign::Minus, "**"), Err(PathError::Axis { .. })));
        let r = up.restrict(&q(1, 5)).unwrap();
        assert_eq!(r, e.restrict(&q(1, 5)).unwrap().embed_face(1, Sign::Minus, "**").unwrap());
    }

    #[test]
    fn sampler_is_deterministic_and_valid() {
        let a: NaturalPath = sample(3, q(1, 2), 5, 7).unwrap();
        assert_eq!(a, sample(3, q(1, 2), 5, 7).unwrap());
        assert_eq!(a.breakpoints().len(), 7);
        let only_first: NaturalPath = sample_supported(3, q(1, 2), 4, 11, &[1]).unwrap();
        assert_eq!(only_first.zero_set(), BTreeSet::from([2, 3]));
    }

    #[test]
    fn convex_combination_endpoints() {
        let a: NaturalPath = sample(2, q(1, 2), 3, 1).unwrap();
        let b: NaturalPath = sample(2, q(1, 2), 4, 2).unwrap();
        assert!(convex_comb(&q(0, 1), &a, &b).unwrap().same_function(&a));
        assert!(convex_comb(&q(1, 1), &a, &b).unwrap().same_function(&b));
        let mid = convex_comb(&q(1, 3), &a, &b).unwrap();
        assert_eq!(sup_distance(&mid, &a).unwrap(), q(1, 3) * sup_distance(&a, &b).unwrap());
        assert!(convex_comb(&q(2, 1), &a, &b).is_err());
    }

    #[test]
    fn simplification_keeps_the_function() {
        let d: NaturalPath = diagonal(2, q(1, 2)).unwrap();
        let refined = convex_comb(&q(1, 2), &d, &d.restrict(&q(1, 2)).unwrap()).unwrap();
        let with_extra = d.extend_full().restrict(&q(1, 2)).unwrap();
        assert_eq!(with_extra.simplified(), d);
        assert!(refined.simplified().same_function(&d));
    }

    #[test]
    fn works_over_machine_rationals() {
        let g = gamma_h(Ratio::new(1i64, 5), Ratio::new(1, 2)).unwrap();
        let limit = diagonal(2, Ratio::new(1i64, 2)).unwrap();
        assert_eq!(sup_distance(&g, &limit).unwrap(), Ratio::new(1, 10));
    }
}

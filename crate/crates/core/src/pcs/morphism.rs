//! Morphisms of precubical sets and cube attachment along a boundary map.

use super::standard::{boundary_cube, Word};
use super::{CubeId, PrecubicalSet, RawCube, Sign};
use crate::error::{PcsError, Result};

/// A dimension-preserving cube assignment commuting with all face maps.
///
/// The morphism does not own its endpoints; `map[c]` is the image of source
/// cube `c`. Construction checks it against a concrete source and target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcsMorphism {
    map: Vec<CubeId>,
}

impl PcsMorphism {
    pub fn new(source: &PrecubicalSet, target: &PrecubicalSet, map: Vec<CubeId>) -> Result<Self> {
        let m = PcsMorphism { map };
        m.check(source, target)?;
        Ok(m)
    }

    /// Builds the morphism from `(source name, target name)` pairs covering
    /// every source cube.
    pub fn from_names<'a>(
        source: &PrecubicalSet,
        target: &PrecubicalSet,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        let mut map = vec![None; source.len()];
        for (s, t) in pairs {
            map[source.get(s)?.0] = Some(target.get(t)?);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(k, m)| m.ok_or_else(|| PcsError::Morphism(format!("no image for {}", source.name(CubeId(k))))))
            .collect::<Result<Vec<_>>>()?;
        PcsMorphism::new(source, target, map)
    }

    pub fn identity(k: &PrecubicalSet) -> Self {
        PcsMorphism { map: k.ids().collect() }
    }

    pub fn apply(&self, c: CubeId) -> CubeId {
        self.map[c.0]
    }

    pub fn images(&self) -> &[CubeId] {
        &self.map
    }

    /// Verifies dimensions and `f(∂_i^α c) = ∂_i^α f(c)` for every cube.
    pub fn check(&self, source: &PrecubicalSet, target: &PrecubicalSet) -> Result<()> {
        if self.map.len() != source.len() {
            return Err(PcsError::Morphism(format!(
                "map covers {} cubes, source has {}",
                self.map.len(),
                source.len()
            )));
        }
        for c in source.ids() {
            let img = self.apply(c);
            if img.0 >= target.len() {
                return Err(PcsError::Morphism(format!("image of {} out of range", source.name(c))));
            }
            if source.dim_of(c) != target.dim_of(img) {
                return Err(PcsError::Morphism(format!(
                    "{} has dimension {} but its image {} has dimension {}",
                    source.name(c),
                    source.dim_of(c),
                    target.name(img),
                    target.dim_of(img)
                )));
            }
            for i in 1..=source.dim_of(c) {
                for s in Sign::BOTH {
                    let lhs = self.apply(source.face(c, i, s));
                    let rhs = target.face(img, i, s);
                    if lhs != rhs {
                        return Err(PcsError::Morphism(format!(
                            "f(d{i}{s} {}) = {} but d{i}{s} f({}) = {}",
                            source.name(c),
                            target.name(lhs),
                            source.name(c),
                            target.name(rhs)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_bijective(&self, target: &PrecubicalSet) -> bool {
        if self.map.len() != target.len() {
            return false;
        }
        let mut seen = vec![false; target.len()];
        self.map.iter().all(|c| !std::mem::replace(&mut seen[c.0], true))
    }

    /// A valid morphism that is bijective on cubes is an isomorphism.
    pub fn is_isomorphism(&self, source: &PrecubicalSet, target: &PrecubicalSet) -> bool {
        self.check(source, target).is_ok() && self.is_bijective(target)
    }
}

/// Extends facet images to a full map `∂□[n] → K`.
///
/// `facets[2(i-1) + α]` is the image of the facet `∂_i^α` of `□[n]`. Lower
/// faces are pushed through the face maps of `K`; the result is checked.
pub fn boundary_map_from_facets(k: &PrecubicalSet, n: usize, facets: &[CubeId]) -> Result<PcsMorphism> {
    if facets.len() != 2 * n {
        return Err(PcsError::Morphism(format!("expected {} facet images, got {}", 2 * n, facets.len())));
    }
    let source = boundary_cube(n);
    let map = source
        .ids()
        .map(|c| {
            let w: Word = source.name(c).parse().expect("boundary cube names are words");
            // the first fixed letter selects a facet, the rest is a face of it
            let p = w.0.iter().position(|&l| l != super::Letter::Star).expect("proper face");
            let sign = if w.0[p] == super::Letter::Zero { Sign::Minus } else { Sign::Plus };
            let mut rest = w.0.clone();
            rest.remove(p);
            let mut img = facets[2 * p + sign.bit()];
            for (i, s) in Word(rest).face_path() {
                if i > k.dim_of(img) {
                    return Err(PcsError::Morphism("facet images have the wrong dimension".into()));
                }
                img = k.face(img, i, s);
            }
            Ok(img)
        })
        .collect::<Result<Vec<_>>>()?;
    PcsMorphism::new(&source, k, map)
}

/// Attaches a fresh `n`-cube along `g : ∂□[n] → K` under an automatic name
/// (`n{n}_{k}` for the least unused `k`).
pub fn attach_cube(k: &PrecubicalSet, n: usize, g: &PcsMorphism) -> Result<(PrecubicalSet, CubeId)> {
    let name =
        (0..).map(|j| format!("n{n}_{j}")).find(|cand| k.lookup(cand).is_none()).expect("unbounded supply of names");
    attach_cube_named(k, n, g, &name)
}

/// Pushout of `∂□[n] → □[n]` along `g`: `K` plus one `n`-cube whose face
/// `∂_i^α` is `g(∂_i^α **…*)`. For `n = 0` this is `K ⊔ □[0]`.
pub fn attach_cube_named(k: &PrecubicalSet, n: usize, g: &PcsMorphism, name: &str) -> Result<(PrecubicalSet, CubeId)> {
    let source = boundary_cube(n);
    g.check(&source, k)?;
    let faces = (1..=n)
        .flat_map(|i| Sign::BOTH.map(move |s| (i, s)))
        .map(|(i, s)| {
            let facet = source.get(&Word::top(n).face(i, s).to_string()).expect("facet exists");
            g.apply(facet).0
        })
        .collect();
    let mut raw = k.to_raw();
    raw.push(RawCube { name: name.to_string(), dim: n, faces });
    let l = PrecubicalSet::from_raw(raw)?;
    let id = l.get(name)?;
    Ok((l, id))
}

use std::collections::{BTreeMap, HashMap};

use super::{collect_violations, is_valid_name, Cube, PrecubicalSet, RawCube, Sign, Violation};
use crate::error::{PcsError, Result};

/// Accumulates cube and face declarations that may be incomplete or
/// inconsistent; [`PcsBuilder::build`] only succeeds on valid data.
#[derive(Debug, Clone, Default)]
pub struct PcsBuilder {
    cubes: Vec<Cube>,
    index: HashMap<String, usize>,
    faces: BTreeMap<(usize, usize, Sign), usize>,
}

impl PcsBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_cube(&mut self, name: &str, dim: usize) -> Result<()> {
        if !is_valid_name(name) {
            return Err(PcsError::InvalidName(name.to_string()));
        }
        if self.index.contains_key(name) {
            return Err(PcsError::DuplicateName(name.to_string()));
        }
        self.index.insert(name.to_string(), self.cubes.len());
        self.cubes.push(Cube { name: name.to_string(), dim });
        Ok(())
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn dim_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).map(|&k| self.cubes[k].dim)
    }

    /// Declares `∂_i^α cube = target`. Dimension agreement is left to
    /// [`PcsBuilder::validate`] so that every mismatch can be reported.
    pub fn set_face(&mut self, cube: &str, i: usize, sign: Sign, target: &str) -> Result<()> {
        let c = self.position(cube)?;
        let t = self.position(target)?;
        let dim = self.cubes[c].dim;
        if i == 0 || i > dim {
            return Err(PcsError::FaceIndexOutOfRange { cube: cube.to_string(), index: i, dim });
        }
        if self.faces.insert((c, i, sign), t).is_some() {
            return Err(PcsError::DuplicateFace { cube: cube.to_string(), index: i, sign });
        }
        Ok(())
    }

    fn position(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| PcsError::UnknownCube(name.to_string()))
    }

    /// Every missing face, dimension mismatch and violated identity.
    pub fn validate(&self) -> Vec<Violation> {
        collect_violations(
            self.cubes.len(),
            |c| self.cubes[c].name.clone(),
            |c| self.cubes[c].dim,
            |c, i, s| self.faces.get(&(c, i, s)).copied(),
        )
    }

    pub fn build(&self) -> Result<PrecubicalSet> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(PcsError::Invalid(violations));
        }
        let raw = self
            .cubes
            .iter()
            .enumerate()
            .map(|(c, cube)| RawCube {
                name: cube.name.clone(),
                dim: cube.dim,
                faces: (1..=cube.dim).flat_map(|i| Sign::BOTH.map(|s| self.faces[&(c, i, s)])).collect(),
            })
            .collect();
        PrecubicalSet::from_raw(raw)
    }
}

impl From<&PrecubicalSet> for PcsBuilder {
    fn from(k: &PrecubicalSet) -> Self {
        let mut b = PcsBuilder::new();
        for c in k.ids() {
            b.add_cube(k.name(c), k.dim_of(c)).expect("names of a built set are valid");
        }
        for c in k.ids() {
            for (slot, &f) in k.faces(c).iter().enumerate() {
                b.faces.insert((c.0, slot / 2 + 1, Sign::from_bit(slot % 2)), f.0);
            }
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_identity_defect() {
        // a square whose ∂_1^0 ∂_2^0 disagrees with ∂_1^0 ∂_1^0
        let mut b = PcsBuilder::new();
        for v in ["a", "b", "c", "d", "z"] {
            b.add_cube(v, 0).unwrap();
        }
        for (e, s, t) in [("x0", "a", "b"), ("x1", "c", "d"), ("y0", "a", "c"), ("y1", "b", "d")] {
            b.add_cube(e, 1).unwrap();
            b.set_face(e, 1, Sign::Minus, s).unwrap();
            b.set_face(e, 1, Sign::Plus, t).unwrap();
        }
        // rig ∂_1^0 y0 to z instead of a
        b.add_cube("y0z", 1).unwrap();
        b.set_face("y0z", 1, Sign::Minus, "z").unwrap();
        b.set_face("y0z", 1, Sign::Plus, "c").unwrap();
        b.add_cube("s", 2).unwrap();
        b.set_face("s", 1, Sign::Minus, "y0z").unwrap();
        b.set_face("s", 1, Sign::Plus, "y1").unwrap();
        b.set_face("s", 2, Sign::Minus, "x0").unwrap();
        b.set_face("s", 2, Sign::Plus, "x1").unwrap();

        let report = b.validate();
        assert_eq!(report.len(), 1, "{report:?}");
        match &report[0] {
            Violation::Identity { cube, i, j, alpha, beta, .. } => {
                assert_eq!((cube.as_str(), *i, *j, *alpha, *beta), ("s", 1, 2, Sign::Minus, Sign::Minus));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(b.build(), Err(PcsError::Invalid(_))));
    }

    #[test]
    fn seeded_missing_face() {
        let mut b = PcsBuilder::new();
        b.add_cube("a", 0).unwrap();
        b.add_cube("b", 0).unwrap();
        b.add_cube("e", 1).unwrap();
        b.set_face("e", 1, Sign::Minus, "a").unwrap();
        assert_eq!(b.validate(), vec![Violation::MissingFace { cube: "e".into(), index: 1, sign: Sign::Plus }]);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let mut b = PcsBuilder::new();
        b.add_cube("a", 0).unwrap();
        b.add_cube("e", 1).unwrap();
        b.add_cube("f", 1).unwrap();
        b.set_face("e", 1, Sign::Minus, "a").unwrap();
        b.set_face("e", 1, Sign::Plus, "f").unwrap();
        b.set_face("f", 1, Sign::Minus, "a").unwrap();
        b.set_face("f", 1, Sign::Plus, "a").unwrap();
        let report = b.validate();
        assert_eq!(report.len(), 1);
        assert!(matches!(report[0], Violation::DimensionMismatch { found: 1, expected: 0, .. }));
    }

    #[test]
    fn declaration_errors() {
        let mut b = PcsBuilder::new();
        b.add_cube("s", 2).unwrap();
        b.add_cube("x", 1).unwrap();
        assert_eq!(b.add_cube("s", 0), Err(PcsError::DuplicateName("s".into())));
        assert!(matches!(b.add_cube("bad name", 0), Err(PcsError::InvalidName(_))));
        assert!(matches!(
            b.set_face("s", 3, Sign::Minus, "x"),
            Err(PcsError::FaceIndexOutOfRange { index: 3, dim: 2, .. })
        ));
        b.set_face("s", 1, Sign::Minus, "x").unwrap();
        assert!(matches!(b.set_face("s", 1, Sign::Minus, "x"), Err(PcsError::DuplicateFace { .. })));
        assert!(matches!(b.set_face("s", 1, Sign::Plus, "nope"), Err(PcsError::UnknownCube(_))));
    }

    #[test]
    fn round_trip_through_builder() {
        let k = super::super::standard_cube(3);
        assert_eq!(PcsBuilder::from(&k).build().unwrap(), k);
    }
}

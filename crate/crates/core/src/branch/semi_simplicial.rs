use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimplicialError {
    #[error("simplex {name:?} of degree {degree} has {found} faces, expected {expected}")]
    FaceCount { name: String, degree: usize, expected: usize, found: usize },
    #[error("face {face} of {name:?} points past degree {degree}")]
    FaceIndex { name: String, face: usize, degree: usize },
    #[error("d{i} d{j} != d{} d{i} on {name:?}", .j - 1)]
    Identity { name: String, i: usize, j: usize },
    #[error("face table does not match the simplex list in degree {0}")]
    Shape(usize),
    #[error("duplicate simplex name {0:?}")]
    DuplicateName(String),
}

/// Graded simplices with face maps `d_i : S_k → S_{k-1}`, `0 ≤ i ≤ k`,
/// satisfying `d_i d_j = d_{j-1} d_i` for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SemiSimplicialSet {
    names: Vec<Vec<String>>,
    // faces[k][s][i] = index of d_i s in degree k - 1
    faces: Vec<Vec<Vec<usize>>>,
}

impl SemiSimplicialSet {
    pub fn new(names: Vec<Vec<String>>, faces: Vec<Vec<Vec<usize>>>) -> Result<Self, SimplicialError> {
        if let Some(k) =
            (0..names.len().max(faces.len())).find(|&k| names.get(k).map(Vec::len) != faces.get(k).map(Vec::len))
        {
            return Err(SimplicialError::Shape(k));
        }
        let set = SemiSimplicialSet { names, faces };
        let mut seen = std::collections::HashSet::new();
        for name in set.names.iter().flatten() {
            if !seen.insert(name) {
                return Err(SimplicialError::DuplicateName(name.clone()));
            }
        }
        for k in 0..set.names.len() {
            for (s, fs) in set.faces[k].iter().enumerate() {
                let expected = if k == 0 { 0 } else { k + 1 };
                if fs.len() != expected {
                    return Err(SimplicialError::FaceCount {
                        name: set.names[k][s].clone(),
                        degree: k,
                        expected,
                        found: fs.len(),
                    });
                }
                if let Some(face) = fs.iter().position(|&f| f >= set.names[k - 1].len()) {
                    return Err(SimplicialError::FaceIndex { name: set.names[k][s].clone(), face, degree: k });
                }
            }
        }
        if let Some(e) = set.identity_violations().into_iter().next() {
            return Err(e);
        }
        Ok(set)
    }

    /// Exhaustive check of `d_i d_j = d_{j-1} d_i`.
    pub fn identity_violations(&self) -> Vec<SimplicialError> {
        let mut out = Vec::new();
        for k in 2..self.names.len() {
            for s in 0..self.names[k].len() {
                for j in 1..=k {
                    for i in 0..j {
                        if self.face(k - 1, self.face(k, s, j), i) != self.face(k - 1, self.face(k, s, i), j - 1) {
                            out.push(SimplicialError::Identity { name: self.names[k][s].clone(), i, j });
                        }
                    }
                }
            }
        }
        out
    }

    /// Highest nonempty degree; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.names.iter().rposition(|g| !g.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.dim().is_none()
    }

    pub fn degrees(&self) -> usize {
        self.names.len()
    }

    pub fn count(&self, k: usize) -> usize {
        self.names.get(k).map_or(0, Vec::len)
    }

    pub fn total(&self) -> usize {
        self.names.iter().map(Vec::len).sum()
    }

    pub fn names(&self, k: usize) -> &[String] {
        self.names.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn name(&self, k: usize, s: usize) -> &str {
        &self.names[k][s]
    }

    /// `d_i` of simplex `s` in degree `k`.
    pub fn face(&self, k: usize, s: usize, i: usize) -> usize {
        self.faces[k][s][i]
    }

    pub fn find(&self, name: &str) -> Option<(usize, usize)> {
        self.names.iter().enumerate().find_map(|(k, g)| g.iter().position(|n| n == name).map(|s| (k, s)))
    }

    /// Whether renaming by `rename` is a degree- and face-preserving
    /// bijection onto `other`.
    pub fn is_isomorphism(&self, other: &SemiSimplicialSet, rename: impl Fn(&str) -> String) -> bool {
        let top = self.names.len().max(other.names.len());
        if (0..top).any(|k| self.count(k) != other.count(k)) {
            return false;
        }
        let positions: Vec<HashMap<&str, usize>> =
            (0..top).map(|k| other.names(k).iter().enumerate().map(|(s, n)| (n.as_str(), s)).collect()).collect();
        let mut image = vec![Vec::new(); top];
        for k in 0..self.names.len() {
            let mut used = vec![false; other.count(k)];
            for s in 0..self.count(k) {
                let Some(&t) = positions[k].get(rename(self.name(k, s)).as_str()) else {
                    return false;
                };
                if std::mem::replace(&mut used[t], true) {
                    return false;
                }
                image[k].push(t);
            }
        }
        (1..self.names.len()).all(|k| {
            (0..self.count(k))
                .all(|s| (0..=k).all(|i| image[k - 1][self.face(k, s, i)] == other.face(k, image[k][s], i)))
        })
    }

    /// Text listing: `simplex <name> <dim>` lines, then `face <name> <i> <target>`.
    pub fn export(&self) -> String {
        let mut out = String::new();
        for (k, g) in self.names.iter().enumerate() {
            for n in g {
                writeln!(out, "simplex {n} {k}").unwrap();
            }
        }
        for k in 1..self.names.len() {
            for (s, n) in self.names[k].iter().enumerate() {
                for i in 0..=k {
                    writeln!(out, "face {n} {i} {}", self.names[k - 1][self.face(k, s, i)]).unwrap();
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    fn triangle_boundary() -> SemiSimplicialSet {
        SemiSimplicialSet::new(
            vec![s(&["a", "b", "c"]), s(&["ab", "bc", "ac"])],
            vec![vec![vec![]; 3], vec![vec![1, 0], vec![2, 1], vec![2, 0]]],
        )
        .unwrap()
    }

    #[test]
    fn basic_queries() {
        let t = triangle_boundary();
        assert_eq!(t.dim(), Some(1));
        assert_eq!(t.total(), 6);
        assert_eq!(t.find("bc"), Some((1, 1)));
        assert!(t.is_isomorphism(&t, |n| n.to_string()));
        assert!(SemiSimplicialSet::default().is_empty());
        assert!(t.export().contains("face ab 0 b\n"));
    }

    #[test]
    fn rejects_bad_identities() {
        // a 2-simplex whose edges do not agree on vertices
        let err = SemiSimplicialSet::new(
            vec![s(&["a", "b", "c"]), s(&["x", "y", "z"]), s(&["t"])],
            vec![vec![vec![]; 3], vec![vec![1, 0], vec![2, 1], vec![2, 0]], vec![vec![0, 1, 2]]],
        );
        assert!(matches!(err, Err(SimplicialError::Identity { .. })));
    }

    #[test]
    fn relabeling_must_preserve_faces() {
        let t = triangle_boundary();
        let swapped = |n: &str| match n {
            "a" => "b".to_string(),
            "b" => "a".to_string(),
            other => other.to_string(),
        };
        assert!(!t.is_isomorphism(&t, swapped));
    }
}

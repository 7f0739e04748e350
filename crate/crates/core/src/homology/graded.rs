use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/t_1 ⊕ … ⊕ ℤ/t_k` with
/// `t_1 | t_2 | … | t_k` and every `t_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, with the torsion brought back into invariant-factor form.
    pub fn sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut factors: Vec<BigInt> = self.torsion.iter().chain(&other.torsion).cloned().collect();
        // repeatedly replace (a, b) by (gcd, lcm) until the chain divides
        let n = factors.len();
        for i in 0..n {
            for j in i + 1..n {
                let g = num_integer::gcd(factors[i].clone(), factors[j].clone());
                let l = &factors[i] / &g * &factors[j];
                factors[i] = g;
                factors[j] = l;
            }
        }
        factors.retain(|t| !t.is_one());
        AbelianGroup { rank: self.rank + other.rank, torsion: factors }
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Groups indexed by degree `0, 1, 2, …`; trailing trivial groups are
/// dropped so that equality is isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedAbelianGroup {
    groups: Vec<AbelianGroup>,
}

impl GradedAbelianGroup {
    pub fn new(mut groups: Vec<AbelianGroup>) -> Self {
        while groups.last().is_some_and(AbelianGroup::is_trivial) {
            groups.pop();
        }
        GradedAbelianGroup { groups }
    }

    /// Free groups of the given ranks.
    pub fn free(ranks: &[usize]) -> Self {
        Self::new(ranks.iter().map(|&r| AbelianGroup::free(r)).collect())
    }

    pub fn degree(&self, d: usize) -> AbelianGroup {
        self.groups.get(d).cloned().unwrap_or_default()
    }

    /// One past the highest nontrivial degree.
    pub fn degrees(&self) -> usize {
        self.groups.len()
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn groups(&self) -> &[AbelianGroup] {
        &self.groups
    }

    pub fn sum(&self, other: &GradedAbelianGroup) -> GradedAbelianGroup {
        let n = self.degrees().max(other.degrees());
        Self::new((0..n).map(|d| self.degree(d).sum(&other.degree(d))).collect())
    }

    /// Moves degree `d` to degree `d + by`.
    pub fn shift(&self, by: usize) -> GradedAbelianGroup {
        if self.is_zero() {
            return self.clone();
        }
        let mut groups = vec![AbelianGroup::default(); by];
        groups.extend(self.groups.iter().cloned());
        Self::new(groups)
    }
}

/// Degree-wise equality of ranks and torsion coefficients.
pub fn graded_iso(a: &GradedAbelianGroup, b: &GradedAbelianGroup) -> bool {
    let n = a.degrees().max(b.degrees());
    (0..n).all(|d| a.degree(d) == b.degree(d))
}

impl fmt::Display for GradedAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(ToString::to_string).collect();
        if parts.is_empty() {
            return f.write_str("(0)");
        }
        write!(f, "({})", parts.join(", "))
    }
}

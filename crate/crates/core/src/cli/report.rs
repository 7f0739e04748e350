use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::branch::Side;
use crate::homology::{AbelianGroup, GradedAbelianGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub degree: usize,
    pub rank: usize,
    #[serde(with = "big_list")]
    pub torsion: Vec<BigInt>,
}

/// Machine-readable branching or merging homology.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub side: Side,
    pub groups: Vec<GroupEntry>,
}

impl HomologyReport {
    pub fn new(side: Side, h: &GradedAbelianGroup) -> Self {
        let groups = h
            .groups()
            .iter()
            .enumerate()
            .map(|(degree, g)| GroupEntry { degree, rank: g.rank, torsion: g.torsion.clone() })
            .collect();
        HomologyReport { side, groups }
    }

    pub fn graded(&self) -> GradedAbelianGroup {
        let top = self.groups.iter().map(|g| g.degree + 1).max().unwrap_or(0);
        let mut groups = vec![AbelianGroup::default(); top];
        for g in &self.groups {
            groups[g.degree] = AbelianGroup { rank: g.rank, torsion: g.torsion.clone() };
        }
        GradedAbelianGroup::new(groups)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let h = self.graded();
        let mut out = format!("{} homology: {h}\n", self.side);
        for (d, g) in h.groups().iter().enumerate() {
            writeln!(out, "  H_{d} = {g}").unwrap();
        }
        out
    }
}

// torsion coefficients as JSON numbers, or strings when they exceed u64
mod big_list {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use serde_json::Value;

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let values: Vec<Value> =
            v.iter().map(|t| t.to_u64().map_or_else(|| Value::String(t.to_string()), Value::from)).collect();
        values.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Value>::deserialize(d)?
            .into_iter()
            .map(|v| {
                let text = match &v {
                    Value::Number(n) => n.to_string(),
                    Value::String(s) => s.clone(),
                    _ => return Err(D::Error::custom("torsion entries must be integers")),
                };
                text.parse().map_err(D::Error::custom)
            })
            .collect()
    }
}

//! The JSON ring-spec format: structure constants with every scalar written
//! as a string.
//!
//! ```json
//! {
//!   "base": "ZZ",
//!   "rank": 2,
//!   "names": ["1", "e2"],
//!   "table": [
//!     [["1", "0"], ["0", "1"]],
//!     [["0", "1"], ["0", "1"]]
//!   ]
//! }
//! ```
//!
//! `base` is `"ZZ"`, `"QQ"` or `{"GF": p}`.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ring::RankRing;
use crate::scalar::Base;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseSpec {
    Named(String),
    Field {
        #[serde(rename = "GF")]
        gf: u64,
    },
}

impl BaseSpec {
    pub fn from_base(base: Base) -> Self {
        match base {
            Base::Integers => BaseSpec::Named("ZZ".into()),
            Base::Rationals => BaseSpec::Named("QQ".into()),
            Base::PrimeField(p) => BaseSpec::Field { gf: p },
        }
    }

    pub fn to_base(&self) -> Result<Base> {
        match self {
            BaseSpec::Named(s) if s == "ZZ" => Ok(Base::Integers),
            BaseSpec::Named(s) if s == "QQ" => Ok(Base::Rationals),
            BaseSpec::Named(s) => Err(Error::Parse(format!(
                "unknown base {s:?}; expected \"ZZ\", \"QQ\" or {{\"GF\": p}}"
            ))),
            BaseSpec::Field { gf } => Base::prime_field(*gf),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpecFile {
    pub base: BaseSpec,
    pub rank: usize,
    pub names: Vec<String>,
    pub table: Vec<Vec<Vec<String>>>,
}

impl RingSpecFile {
    pub fn from_ring(ring: &RankRing) -> Self {
        RingSpecFile {
            base: BaseSpec::from_base(ring.base()),
            rank: ring.rank(),
            names: ring.names().to_vec(),
            table: ring
                .table()
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| v.iter().map(|s| s.to_string()).collect())
                        .collect()
                })
                .collect(),
        }
    }

    /// Parses JSON text; syntax errors carry the line and column.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            let line = text
                .lines()
                .nth(e.line().saturating_sub(1))
                .unwrap_or("")
                .trim();
            Error::Parse(format!(
                "line {}, column {}: {e}\n  | {line}",
                e.line(),
                e.column()
            ))
        })
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.rank;
        let bad = |what: String| Err(Error::Parse(format!("rank is {n} but {what}")));
        if self.names.len() != n {
            return bad(format!("{} names are given", self.names.len()));
        }
        if self.table.len() != n {
            return bad(format!("the table has {} rows", self.table.len()));
        }
        for (i, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("table row {i} has {} entries", row.len()));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != n {
                    return bad(format!("table[{i}][{j}] has {} coefficients", v.len()));
                }
            }
        }
        Ok(())
    }

    /// Shape and scalar parsing (`Error::Parse`, `Error::BadScalar`),
    /// then ring axioms (`Error::InvalidRing`).
    pub fn to_ring(&self) -> Result<RankRing> {
        self.check_shape()?;
        let base = self.base.to_base()?;
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .map(|s| base.parse_scalar(s))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        RankRing::validate(base, self.names.clone(), table)
    }

    /// Canonical text: one table row per line, trailing newline.
    pub fn emit(&self) -> String {
        let mut out = String::from("{\n");
        out += &format!("  \"base\": {},\n", json(&self.base));
        out += &format!("  \"rank\": {},\n", self.rank);
        out += &format!("  \"names\": {},\n", json(&self.names));
        out += "  \"table\": [\n";
        for (i, row) in self.table.iter().enumerate() {
            let sep = if i + 1 < self.table.len() { "," } else { "" };
            out += &format!("    {}{sep}\n", json(row));
        }
        out += "  ]\n}\n";
        out
    }
}

/// Compact JSON with a space after each comma and colon.
fn json<T: Serialize>(v: &T) -> String {
    render(&serde_json::to_value(v).expect("serializable"))
}

fn render(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::Array(items) => format!(
            "[{}]",
            items.iter().map(render).collect::<Vec<_>>().join(", ")
        ),
        serde_json::Value::Object(map) => format!(
            "{{{}}}",
            map.iter()
                .map(|(k, x)| format!("{}: {}", serde_json::Value::String(k.clone()), render(x)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        other => other.to_string(),
    }
}

/// Hex SHA-256 of the given bytes.
pub fn spec_hash(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn emits_documented_layout() {
        let text = RingSpecFile::from_ring(&gallery::make_split(Base::Integers, 2)).emit();
        assert_eq!(
            text,
            "{\n  \"base\": \"ZZ\",\n  \"rank\": 2,\n  \"names\": [\"1\", \"e2\"],\n  \"table\": [\n    \
             [[\"1\", \"0\"], [\"0\", \"1\"]],\n    [[\"0\", \"1\"], [\"0\", \"1\"]]\n  ]\n}\n"
        );
    }

    #[test]
    fn field_base_round_trips() {
        let r = gallery::make_finite_field(3, 2).unwrap();
        let text = RingSpecFile::from_ring(&r).emit();
        assert!(text.contains("{\"GF\": 3}"));
        let back = RingSpecFile::parse(&text).unwrap().to_ring().unwrap();
        assert_eq!(back.table(), r.table());
    }

    #[test]
    fn hash_is_sha256() {
        assert_eq!(
            spec_hash(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}

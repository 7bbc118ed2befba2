//! Generator spec documents (JSON).
//!
//! ```json
//! {"type": "f2linear", "n": 16, "w": 16,
//!  "A": {"kind": "xorshift", "shifts": [{"dir": "left", "amount": 1}]},
//!  "B": {"kind": "leading"}, "name": "demo", "seed": "1"}
//! ```
//!
//! Matrix rows and seeds are hex with coordinate 0 in the least significant
//! bit. LCG parameters are decimal strings so `m = 2^64` parses exactly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::genlin::{F2GeneratorSpec, GenlinError, OutputMap, Transition, XorShift};
use crate::gf2::{BitMatrix, BitVector, Gf2Error};
use crate::lcg::{LcgError, LcgSpec};

#[derive(Debug, Error)]
pub enum SpecFileError {
    #[error("cannot parse spec document: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("bad decimal integer {field} = {value:?}")]
    Decimal { field: &'static str, value: String },
    #[error("counter width n = {0} must be in 1..=32")]
    CounterWidth(usize),
    #[error(transparent)]
    Genlin(#[from] GenlinError),
    #[error(transparent)]
    Lcg(#[from] LcgError),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GeneratorSpecFile {
    F2linear(F2LinearDoc),
    Lcg(LcgDoc),
    Counter(CounterDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct F2LinearDoc {
    pub n: usize,
    pub w: usize,
    #[serde(rename = "A")]
    pub a: TransitionDoc,
    #[serde(rename = "B")]
    pub b: OutputDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum TransitionDoc {
    Dense { rows: Vec<String> },
    Xorshift { shifts: Vec<XorShift> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum OutputDoc {
    Leading,
    Dense { rows: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LcgDoc {
    pub a: String,
    pub b: String,
    pub m: String,
    pub z0: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterDoc {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// A parsed, validated generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    F2 { spec: F2GeneratorSpec, seed: BitVector },
    Lcg { spec: LcgSpec, name: Option<String> },
    Counter { n: usize, name: Option<String> },
}

pub const COUNTER_MAX_N: usize = 32;

impl GeneratorSpecFile {
    pub fn parse(text: &str) -> Result<Self, SpecFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec documents always serialize")
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            GeneratorSpecFile::F2linear(_) => "f2linear",
            GeneratorSpecFile::Lcg(_) => "lcg",
            GeneratorSpecFile::Counter(_) => "counter",
        }
    }

    pub fn build(&self) -> Result<Generator, SpecFileError> {
        match self {
            GeneratorSpecFile::F2linear(doc) => {
                let transition = match &doc.a {
                    TransitionDoc::Dense { rows } => Transition::Dense(BitMatrix::from_hex_rows(doc.n, rows)?),
                    TransitionDoc::Xorshift { shifts } => Transition::XorShifts(shifts.clone()),
                };
                let output = match &doc.b {
                    OutputDoc::Leading => OutputMap::Leading,
                    OutputDoc::Dense { rows } => OutputMap::Dense(BitMatrix::from_hex_rows(doc.n, rows)?),
                };
                let spec = F2GeneratorSpec::new(doc.n, doc.w, transition, output, doc.name.clone().unwrap_or_default())?;
                let seed = match &doc.seed {
                    Some(h) => BitVector::from_hex(doc.n, h)?,
                    None => spec.default_seed(),
                };
                if seed.is_zero() {
                    return Err(GenlinError::InvalidSpec("seed must be nonzero".into()).into());
                }
                Ok(Generator::F2 { spec, seed })
            }
            GeneratorSpecFile::Lcg(doc) => {
                let spec = LcgSpec::new(
                    decimal("a", &doc.a)?,
                    decimal("b", &doc.b)?,
                    decimal("m", &doc.m)?,
                    decimal("z0", &doc.z0)?,
                )?;
                Ok(Generator::Lcg { spec, name: doc.name.clone() })
            }
            GeneratorSpecFile::Counter(doc) => {
                if doc.n == 0 || doc.n > COUNTER_MAX_N {
                    return Err(SpecFileError::CounterWidth(doc.n));
                }
                Ok(Generator::Counter { n: doc.n, name: doc.name.clone() })
            }
        }
    }
}

fn decimal(field: &'static str, value: &str) -> Result<u128, SpecFileError> {
    if value.is_empty() || !value.bytes().all(|b| b.is_ascii_digit()) {
        return Err(SpecFileError::Decimal { field, value: value.to_string() });
    }
    value
        .parse()
        .map_err(|_| SpecFileError::Decimal { field, value: value.to_string() })
}

impl Generator {
    /// The document that builds this generator.
    pub fn to_doc(&self) -> GeneratorSpecFile {
        match self {
            Generator::F2 { spec, seed } => {
                let a = match spec.transition() {
                    Transition::Dense(m) => TransitionDoc::Dense { rows: m.to_hex_rows() },
                    Transition::XorShifts(s) => TransitionDoc::Xorshift { shifts: s.clone() },
                };
                let b = match spec.output() {
                    OutputMap::Leading => OutputDoc::Leading,
                    OutputMap::Dense(m) => OutputDoc::Dense { rows: m.to_hex_rows() },
                };
                GeneratorSpecFile::F2linear(F2LinearDoc {
                    n: spec.n(),
                    w: spec.w(),
                    a,
                    b,
                    name: (!spec.name().is_empty()).then(|| spec.name().to_string()),
                    seed: Some(seed.to_hex()),
                })
            }
            Generator::Lcg { spec, name } => GeneratorSpecFile::Lcg(LcgDoc {
                a: spec.a.to_string(),
                b: spec.b.to_string(),
                m: spec.m.to_string(),
                z0: spec.z0.to_string(),
                name: name.clone(),
            }),
            Generator::Counter { n, name } => GeneratorSpecFile::Counter(CounterDoc { n: *n, name: name.clone() }),
        }
    }

    /// Replaces the seed (F₂ state as hex, LCG `z0` as hex).
    pub fn with_seed_hex(self, hex_seed: &str) -> Result<Generator, SpecFileError> {
        match self {
            Generator::F2 { spec, .. } => {
                let seed = BitVector::from_hex(spec.n(), hex_seed)?;
                if seed.is_zero() {
                    return Err(GenlinError::InvalidSpec("seed must be nonzero".into()).into());
                }
                Ok(Generator::F2 { spec, seed })
            }
            Generator::Lcg { spec, name } => {
                let z0 = u128::from_str_radix(hex_seed.trim_start_matches("0x"), 16)
                    .map_err(|_| SpecFileError::Decimal { field: "seed", value: hex_seed.to_string() })?;
                let spec = LcgSpec::new(spec.a, spec.b, spec.m, z0)?;
                Ok(Generator::Lcg { spec, name })
            }
            c @ Generator::Counter { .. } => Ok(c),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genlin::presets;

    #[test]
    fn f2_document_round_trip() {
        for spec in [presets::xorshift16(), presets::companion2(), presets::identity(5, 3)] {
            let g = Generator::F2 { seed: spec.default_seed(), spec };
            let doc = g.to_doc();
            let parsed = GeneratorSpecFile::parse(&doc.to_json()).unwrap();
            assert_eq!(parsed, doc);
            assert_eq!(parsed.build().unwrap(), g);
        }
    }

    #[test]
    fn lcg_modulus_two_to_the_64() {
        let text = r#"{"type":"lcg","a":"6364136223846793005","b":"1442695040888963407","m":"18446744073709551616","z0":"1"}"#;
        let doc = GeneratorSpecFile::parse(text).unwrap();
        let Generator::Lcg { spec, .. } = doc.build().unwrap() else { panic!() };
        assert_eq!(spec.m, 1u128 << 64);
        assert_eq!(GeneratorSpecFile::parse(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn strict_parsing() {
        let bad = [
            r#"{"type":"counter","n":4,"extra":1}"#,
            r#"{"type":"nope","n":4}"#,
            r#"{"type":"lcg","a":"-1","b":"0","m":"8","z0":"1"}"#,
            r#"{"type":"lcg","a":"1","b":"0","m":"8"}"#,
            r#"{"type":"f2linear","n":2,"w":2,"A":{"kind":"dense","rows":["2","3"],"x":1},"B":{"kind":"leading"}}"#,
            r#"{"type":"f2linear","n":2,"w":2,"A":{"kind":"dense","rows":["2","7"]},"B":{"kind":"leading"}}"#,
            r#"{"type":"f2linear","n":2,"w":2,"A":{"kind":"dense","rows":["2","3"]},"B":{"kind":"leading"},"seed":"0"}"#,
            "not json",
        ];
        for text in bad {
            let r = GeneratorSpecFile::parse(text).and_then(|d| d.build());
            assert!(r.is_err(), "{text}");
        }
    }
}

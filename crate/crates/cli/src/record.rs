//! Corpus records: one JSON object per line, integers as decimal strings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use torsion_core::{ClassificationReport, CurveMnd, Int, Point, TorsionGroup};

/// Class written for a curve the classifier could not decide consistently.
pub const INCONSISTENT: &str = "inconsistent";

/// An integer serialized as a decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecInt(pub Int);

impl From<Int> for DecInt {
    fn from(v: Int) -> Self {
        DecInt(v)
    }
}

impl fmt::Display for DecInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for DecInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for DecInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        // BigInt accepts a leading '+', which would not round-trip
        if s.starts_with('+') {
            return Err(serde::de::Error::custom(format!(
                "not a decimal integer: {s:?}"
            )));
        }
        Int::from_str(&s)
            .map(DecInt)
            .map_err(|_| serde::de::Error::custom(format!("not a decimal integer: {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessRecord {
    pub case: String,
    pub params: Vec<DecInt>,
}

/// Field order is the serialized key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusRecord {
    pub m: DecInt,
    pub n: DecInt,
    #[serde(rename = "D")]
    pub d: DecInt,
    pub class: String,
    pub witness: Option<WitnessRecord>,
    pub generator_x: Option<DecInt>,
    pub generator_y: Option<DecInt>,
    pub oracle_order: Option<DecInt>,
    pub agree: bool,
}

impl CorpusRecord {
    pub fn from_report(r: &ClassificationReport) -> Self {
        let (x, y) = r.generator_ints();
        CorpusRecord {
            m: r.curve.m().clone().into(),
            n: r.curve.n().clone().into(),
            d: r.curve.d().clone().into(),
            class: r.cls.tag.to_string(),
            witness: r.cls.witness.as_ref().map(|w| WitnessRecord {
                case: w.case().to_string(),
                params: w.params().into_iter().map(|p| DecInt(p.clone())).collect(),
            }),
            generator_x: Some(x.into()),
            generator_y: Some(y.into()),
            oracle_order: r.oracle_group.as_ref().map(|g| Int::from(g.order()).into()),
            // without the oracle the generator's order was still checked
            agree: r.agree.unwrap_or(true),
        }
    }

    /// Record for a curve whose classification raised an error.
    pub fn failed(curve: &CurveMnd, group: Option<&TorsionGroup>) -> Self {
        CorpusRecord {
            m: curve.m().clone().into(),
            n: curve.n().clone().into(),
            d: curve.d().clone().into(),
            class: INCONSISTENT.to_string(),
            witness: None,
            generator_x: None,
            generator_y: None,
            oracle_order: group.map(|g| Int::from(g.order()).into()),
            agree: false,
        }
    }

    pub fn to_line(&self) -> String {
        let mut s = serde_json::to_string(self).expect("records always serialize");
        s.push('\n');
        s
    }

    pub fn parse(line: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(line)
    }

    /// One-line human rendering used by `--format text`.
    pub fn to_text(&self) -> String {
        let mut s = format!("({}, {}, {}) {}", self.m, self.n, self.d, self.class);
        if let (Some(x), Some(y)) = (&self.generator_x, &self.generator_y) {
            s.push_str(&format!(
                " generator {}",
                Point::from_ints(x.0.clone(), y.0.clone())
            ));
        }
        if let Some(w) = &self.witness {
            let params: Vec<String> = w.params.iter().map(|p| p.to_string()).collect();
            s.push_str(&format!(" case {} [{}]", w.case, params.join(", ")));
        }
        if let Some(k) = &self.oracle_order {
            s.push_str(&format!(" oracle order {k}"));
        }
        s.push_str(if self.agree { " agree" } else { " DISAGREE" });
        s
    }
}

//! JSON input/output schema and text rendering for the CLI.
//!
//! Integers are emitted as JSON numbers while they fit in the 53-bit
//! safe range, and as exact decimal strings beyond it; both forms are
//! accepted on input.

use crate::center::{CenterReport, PrimeAnalysis};
use crate::error::{Error, Result};
use crate::frobdata::{FrobeniusDatum, PrimeStatus};
use crate::numberfield::NumberField;
use crate::pointcount::CurveSpec;
use crate::polyq::IntPoly;
use num::{BigInt, One};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Arbitrary-precision integer with interoperable JSON encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

const SAFE_LIMIT: i64 = 1 << 53;

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use num::ToPrimitive;
        match self.0.to_i64() {
            Some(v) if v.abs() < SAFE_LIMIT => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = JsonInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
                Ok(JsonInt(BigInt::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
                BigInt::from_str(v)
                    .map(JsonInt)
                    .map_err(|_| E::custom(format!("not a decimal integer: {:?}", v)))
            }
        }
        d.deserialize_any(V)
    }
}

fn poly_to_json(p: &IntPoly) -> Vec<JsonInt> {
    match p.degree() {
        None => vec![],
        Some(d) => (0..=d).map(|i| JsonInt(p.coeff(i))).collect(),
    }
}

fn poly_from_json(v: &[JsonInt]) -> IntPoly {
    IntPoly::new(v.iter().map(|c| c.0.clone()).collect())
}

fn field_to_json(f: &NumberField) -> Vec<JsonInt> {
    poly_to_json(f.defining_poly())
}

// ---------------------------------------------------------------- input

#[derive(Serialize, Deserialize, Debug, Default)]
pub struct InputFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub primes: Vec<PrimeEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub curves: Vec<CurveEntry>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct PrimeEntry {
    pub q: u64,
    pub cpoly: Vec<JsonInt>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct CurveEntry {
    pub kind: String,
    pub coeffs: Vec<JsonInt>,
    pub primes: Vec<u64>,
}

impl InputFile {
    pub fn parse(text: &str) -> Result<InputFile> {
        serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("input file: {}", e)))
    }

    /// All Frobenius data: explicit prime entries first, then data derived
    /// by point counting on the listed curves, in file order.
    pub fn collect_data(&self, enum_cap: u64) -> Result<Vec<FrobeniusDatum>> {
        let mut data: Vec<FrobeniusDatum> = Vec::new();
        for e in &self.primes {
            let c = poly_from_json(&e.cpoly);
            if !c.constant().is_one() {
                return Err(Error::InvalidInput(format!(
                    "cpoly at q = {} must have constant term 1",
                    e.q
                )));
            }
            data.push(FrobeniusDatum::new(e.q, c));
        }
        for e in &self.curves {
            let spec = e.to_curve()?;
            for &p in &e.primes {
                data.push(crate::pointcount::frobenius_datum_from_curve(&spec, p, enum_cap)?);
            }
        }
        Ok(data)
    }
}

impl CurveEntry {
    pub fn to_curve(&self) -> Result<CurveSpec> {
        match self.kind.as_str() {
            "elliptic" => {
                if self.coeffs.len() != 5 {
                    return Err(Error::InvalidInput(
                        "elliptic curves need exactly 5 coefficients [a1,a2,a3,a4,a6]".into(),
                    ));
                }
                let a: [BigInt; 5] = [
                    self.coeffs[0].0.clone(),
                    self.coeffs[1].0.clone(),
                    self.coeffs[2].0.clone(),
                    self.coeffs[3].0.clone(),
                    self.coeffs[4].0.clone(),
                ];
                Ok(CurveSpec::Elliptic { a, label: None })
            }
            "hyperelliptic" => Ok(CurveSpec::Hyperelliptic {
                f: poly_from_json(&self.coeffs),
                label: None,
            }),
            other => Err(Error::InvalidInput(format!("unknown curve kind {:?}", other))),
        }
    }
}

// --------------------------------------------------------------- output

#[derive(Serialize, Debug)]
pub struct CenterJson {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_used: Option<u64>,
    #[serde(rename = "d_C", skip_serializing_if = "Option::is_none")]
    pub d_c: Option<usize>,
    pub fields: Vec<Vec<JsonInt>>,
    pub filter: Vec<VerdictJson>,
    pub diagnostics: Vec<AnalysisJson>,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct VerdictJson {
    pub q: u64,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_p: Option<Vec<JsonInt>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_p: Option<u32>,
}

#[derive(Serialize, Debug)]
pub struct AnalysisJson {
    pub q: u64,
    pub d_p: usize,
    pub r_p: usize,
    pub dropped: bool,
    pub fields: Vec<Vec<JsonInt>>,
}

fn verdict_json(q: u64, s: &PrimeStatus) -> VerdictJson {
    VerdictJson {
        q,
        verdict: s.verdict.to_string(),
        g_p: s.g_p.as_ref().map(poly_to_json),
        m_p: s.m_p,
    }
}

fn analysis_json(a: &PrimeAnalysis) -> AnalysisJson {
    AnalysisJson {
        q: a.q_of_prime,
        d_p: a.d_p,
        r_p: a.r_p,
        dropped: a.dropped,
        fields: a.normic_fields.iter().map(field_to_json).collect(),
    }
}

pub fn center_to_json(r: &CenterReport) -> CenterJson {
    CenterJson {
        found: r.found,
        q_used: r.q_used,
        d_c: r.d_c,
        fields: r.candidate_fields.iter().map(field_to_json).collect(),
        filter: r.filter_results.iter().map(|(q, s)| verdict_json(*q, s)).collect(),
        diagnostics: r.diagnostics.iter().map(analysis_json).collect(),
        warnings: r.warnings.clone(),
    }
}

#[derive(Serialize, Debug)]
pub struct FilterJson {
    pub verdicts: Vec<VerdictJson>,
}

pub fn filter_to_json(results: &[(u64, PrimeStatus)]) -> FilterJson {
    FilterJson {
        verdicts: results.iter().map(|(q, s)| verdict_json(*q, s)).collect(),
    }
}

/// charpoly output reuses the input schema so it can be fed back to the
/// center/filter commands unchanged.
pub fn charpoly_to_json(data: &[FrobeniusDatum]) -> InputFile {
    InputFile {
        m: None,
        primes: data
            .iter()
            .map(|d| PrimeEntry { q: d.q, cpoly: poly_to_json(&d.cpoly) })
            .collect(),
        curves: vec![],
    }
}

#[derive(Serialize, Debug)]
pub struct GuessMJson {
    pub m: u32,
}

// ----------------------------------------------------------------- text

fn poly_text(p: &IntPoly) -> String {
    format!("{}", p)
}

pub fn center_to_text(r: &CenterReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("found: {}\n", r.found));
    if let Some(q) = r.q_used {
        out.push_str(&format!("q_used: {}\n", q));
    }
    if let Some(d) = r.d_c {
        out.push_str(&format!("d_C: {}\n", d));
    }
    if !r.candidate_fields.is_empty() {
        out.push_str("candidate fields:\n");
        for f in &r.candidate_fields {
            if f.is_rationals() {
                out.push_str("  Q\n");
            } else {
                out.push_str(&format!("  Q[x]/({})\n", poly_text(f.defining_poly())));
            }
        }
    }
    out.push_str("filter:\n");
    for (q, s) in &r.filter_results {
        out.push_str(&format!("  q = {}: {}\n", q, s.verdict));
    }
    if !r.diagnostics.is_empty() {
        out.push_str("per-prime analysis:\n");
        for a in &r.diagnostics {
            out.push_str(&format!(
                "  q = {}: d_p = {}, r_p = {}{}\n",
                a.q_of_prime,
                a.d_p,
                a.r_p,
                if a.dropped { " (dropped: no normic factor)" } else { "" }
            ));
        }
    }
    for w in &r.warnings {
        out.push_str(&format!("warning: {}\n", w));
    }
    out
}

pub fn filter_to_text(results: &[(u64, PrimeStatus)]) -> String {
    let mut out = String::new();
    for (q, s) in results {
        out.push_str(&format!("q = {}: {}", q, s.verdict));
        if let (Some(g), Some(m)) = (&s.g_p, s.m_p) {
            out.push_str(&format!("  g_p = {}  m = {}", poly_text(g), m));
        }
        out.push('\n');
    }
    out
}

pub fn charpoly_to_text(data: &[FrobeniusDatum]) -> String {
    let mut out = String::new();
    for d in data {
        out.push_str(&format!("q = {}: c = {}\n", d.q, poly_text(&d.cpoly)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn jsonint_round_trip() {
        let small = JsonInt(BigInt::from(42));
        let neg = JsonInt(BigInt::from(-7));
        let big = JsonInt(BigInt::from_str("90071992547409912345").unwrap());
        for v in [&small, &neg, &big] {
            let s = serde_json::to_string(v).unwrap();
            let back: JsonInt = serde_json::from_str(&s).unwrap();
            assert_eq!(&back, v);
        }
        assert_eq!(serde_json::to_string(&small).unwrap(), "42");
        assert!(serde_json::to_string(&big).unwrap().starts_with('"'));
        // string form of a small integer is accepted too
        let parsed: JsonInt = serde_json::from_str("\"42\"").unwrap();
        assert_eq!(parsed, small);
    }

    #[test]
    fn input_file_schema() {
        let text = r#"{
            "m": 4,
            "primes": [{"q": 19, "cpoly": [1, -2, 19]}],
            "curves": [{"kind": "elliptic", "coeffs": [0, -1, 1, -10, -20], "primes": [3, 7]}]
        }"#;
        let f = InputFile::parse(text).unwrap();
        assert_eq!(f.m, Some(4));
        let data = f.collect_data(crate::pointcount::DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(data.len(), 3);
        assert_eq!(data[0].q, 19);
        assert_eq!(data[1].cpoly, IntPoly::from_i64(&[1, 1, 3]));
        assert_eq!(data[2].cpoly, IntPoly::from_i64(&[1, 2, 7]));
    }

    #[test]
    fn bad_input_rejected() {
        assert!(InputFile::parse("{").is_err());
        let f = InputFile::parse(r#"{"primes": [{"q": 3, "cpoly": [2, 1, 3]}]}"#).unwrap();
        assert!(f.collect_data(1000).is_err()); // constant term != 1
        let f = InputFile::parse(
            r#"{"curves": [{"kind": "nodal", "coeffs": [1], "primes": [3]}]}"#,
        )
        .unwrap();
        assert!(f.collect_data(1000).is_err());
    }

    #[test]
    fn charpoly_round_trips_into_input() {
        let data = vec![FrobeniusDatum::new(3, IntPoly::from_i64(&[1, 1, 3]))];
        let out = charpoly_to_json(&data);
        let text = serde_json::to_string(&out).unwrap();
        let back = InputFile::parse(&text).unwrap();
        let data2 = back.collect_data(1000).unwrap();
        assert_eq!(data, data2);
        // stability under re-serialization
        let text2 = serde_json::to_string(&charpoly_to_json(&data2)).unwrap();
        assert_eq!(text, text2);
    }

    #[test]
    fn q_field_renders_as_x() {
        let r = CenterReport {
            found: true,
            q_used: Some(19),
            d_c: Some(1),
            candidate_fields: vec![NumberField::rationals()],
            filter_results: vec![],
            diagnostics: vec![],
            warnings: vec![],
        };
        let j = center_to_json(&r);
        assert_eq!(j.fields, vec![vec![JsonInt(BigInt::from(0)), JsonInt(BigInt::one())]]);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"fields\":[[0,1]]"));
        assert!(s.contains("\"d_C\":1"));
    }

    use crate::center::CenterReport;
}

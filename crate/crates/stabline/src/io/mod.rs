//! Reading instances, producing reports, rendering figures, and the
//! independent verification oracles.
//!
//! Instances and results travel as JSON documents whose rationals are
//! strings (`"n"` or `"n/d"` in lowest terms, positive denominator), so
//! every value survives the trip bit-exactly. Reports are deterministic:
//! identical input bytes produce identical output bytes.

mod oracle;
mod svg;

pub use oracle::{
    grid_estimate, halfplane_region_vertices, oracle_check, GridComparison, GridEstimate,
    OracleCheck, OracleError, OracleMismatch, OracleOptions, OracleReport,
};
pub use svg::{render_svg, RenderMode};

use crate::dual_space::Line;
use crate::exact_geometry::{format_rational, parse_rational, Rational};
use crate::line_selection::{feasibility_polygon, DualPolygon};
use crate::transversal::{
    classify, extremal_max_line, extremal_min_line, violating_triple, FamilyError, SegmentFamily,
    TransversalClass,
};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Serde adapter: rationals as canonical strings.
mod rational_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for optional rationals.
mod opt_rational_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        value: &Option<Rational>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        match value {
            Some(v) => serializer.serialize_some(&format_rational(v)),
            None => serializer.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<Rational>, D::Error> {
        let text = Option::<String>::deserialize(deserializer)?;
        text.map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// One segment of an instance file: abscissa `x`, ordinates `[a, b]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentRecord {
    #[serde(with = "rational_string")]
    pub x: Rational,
    #[serde(with = "rational_string")]
    pub a: Rational,
    #[serde(with = "rational_string")]
    pub b: Rational,
}

/// A parsed instance: an optional name and the raw segment list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDocument {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub name: Option<String>,
    pub segments: Vec<SegmentRecord>,
}

impl InstanceDocument {
    pub fn new(name: Option<String>, segments: Vec<(Rational, Rational, Rational)>) -> Self {
        InstanceDocument {
            name,
            segments: segments
                .into_iter()
                .map(|(x, a, b)| SegmentRecord { x, a, b })
                .collect(),
        }
    }

    /// The validated family described by this document.
    pub fn family(&self) -> Result<SegmentFamily, FamilyError> {
        SegmentFamily::new(
            self.segments
                .iter()
                .map(|s| (s.x.clone(), s.a.clone(), s.b.clone()))
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }
}

/// Errors from [`parse_instance`].
#[derive(Debug)]
pub enum InstanceError {
    /// Not valid JSON, a missing field, or a malformed rational.
    Json(serde_json::Error),
    /// The segment list does not form a valid family.
    Family(FamilyError),
}

impl fmt::Display for InstanceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceError::Json(e) => write!(f, "invalid instance document: {e}"),
            InstanceError::Family(e) => write!(f, "invalid segment family: {e}"),
        }
    }
}

impl std::error::Error for InstanceError {}

/// Parses and validates an instance document from UTF-8 JSON text.
///
/// The segment list must already form a valid family; validation errors
/// carry 1-based positions in the input order.
pub fn parse_instance(text: &[u8]) -> Result<InstanceDocument, InstanceError> {
    let doc: InstanceDocument = serde_json::from_slice(text).map_err(InstanceError::Json)?;
    doc.family().map_err(InstanceError::Family)?;
    Ok(doc)
}

/// A line as it appears in result documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineRecord {
    #[serde(with = "rational_string")]
    pub k: Rational,
    #[serde(with = "rational_string")]
    pub l: Rational,
}

impl From<&Line> for LineRecord {
    fn from(line: &Line) -> Self {
        LineRecord {
            k: line.k.clone(),
            l: line.l.clone(),
        }
    }
}

impl LineRecord {
    pub fn to_line(&self) -> Line {
        Line::new(self.k.clone(), self.l.clone())
    }
}

/// Transversal classification in result documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    None,
    Unique,
    Infinite,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::None => write!(f, "none"),
            Classification::Unique => write!(f, "unique"),
            Classification::Infinite => write!(f, "infinite"),
        }
    }
}

/// The machine-readable result of a run. Optional fields are present
/// exactly when defined by the classification and requested by the
/// report options; field order is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub classification: Classification,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<LineRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<LineRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s1: Option<LineRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s2: Option<LineRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub s3: Option<LineRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polygon: Option<Vec<LineRecord>>,
    #[serde(
        with = "opt_rational_string",
        skip_serializing_if = "Option::is_none",
        default
    )]
    pub area: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<[usize; 3]>,
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }
}

/// Which selectors a report should include.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectorChoice {
    None,
    S1,
    S2,
    S3,
    All,
}

impl SelectorChoice {
    fn wants_s1(self) -> bool {
        matches!(self, SelectorChoice::S1 | SelectorChoice::All)
    }
    fn wants_s2(self) -> bool {
        matches!(self, SelectorChoice::S2 | SelectorChoice::All)
    }
    fn wants_s3(self) -> bool {
        matches!(self, SelectorChoice::S3 | SelectorChoice::All)
    }
}

/// Which parts of the result a report should carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub extremals: bool,
    pub selectors: SelectorChoice,
    pub polygon: bool,
}

impl ReportOptions {
    /// Everything the classification defines.
    pub fn full() -> Self {
        ReportOptions {
            extremals: true,
            selectors: SelectorChoice::All,
            polygon: true,
        }
    }

    /// Existence and classification only.
    pub fn check() -> Self {
        ReportOptions {
            extremals: true,
            selectors: SelectorChoice::None,
            polygon: false,
        }
    }

    pub fn selection(selectors: SelectorChoice) -> Self {
        ReportOptions {
            extremals: false,
            selectors,
            polygon: false,
        }
    }

    /// Polygon and area only.
    pub fn dual() -> Self {
        ReportOptions {
            extremals: false,
            selectors: SelectorChoice::None,
            polygon: true,
        }
    }
}

/// Runs classification and the requested computations over an instance.
///
/// The output is deterministic: the same document and options always
/// produce the same result, byte-identical once serialized.
pub fn run_report(
    doc: &InstanceDocument,
    options: &ReportOptions,
) -> Result<ResultDocument, FamilyError> {
    let family = doc.family()?;
    let mut result = ResultDocument {
        classification: Classification::None,
        r: None,
        p: None,
        s1: None,
        s2: None,
        s3: None,
        polygon: None,
        area: None,
        certificate: None,
    };
    match classify(&family) {
        TransversalClass::NoTransversal => {
            result.certificate = violating_triple(&family).map(|(i, j, k)| [i, j, k]);
            return Ok(result);
        }
        TransversalClass::Unique(line) => {
            result.classification = Classification::Unique;
            if options.extremals {
                result.r = Some(LineRecord::from(&line));
                result.p = Some(LineRecord::from(&line));
            }
        }
        TransversalClass::Infinite {
            max_slope,
            min_slope,
        } => {
            result.classification = Classification::Infinite;
            if options.extremals {
                result.r = Some(LineRecord::from(&max_slope));
                result.p = Some(LineRecord::from(&min_slope));
            }
        }
    }
    let needs_polygon =
        options.polygon || options.selectors.wants_s2() || options.selectors.wants_s3();
    let polygon: Option<DualPolygon> = needs_polygon.then(|| feasibility_polygon(&family));
    if options.selectors.wants_s1() {
        let s1 = Line::dual_midpoint(&extremal_max_line(&family), &extremal_min_line(&family));
        result.s1 = Some(LineRecord::from(&s1));
    }
    if let Some(polygon) = &polygon {
        if options.selectors.wants_s2() {
            let s2 = polygon.discrete_centroid().expect("transversals exist");
            result.s2 = Some(LineRecord::from(&s2));
        }
        if options.selectors.wants_s3() {
            let s3 = polygon.continuous_centroid().expect("transversals exist");
            result.s3 = Some(LineRecord::from(&s3));
        }
        if options.polygon {
            result.polygon = Some(polygon.vertices().iter().map(LineRecord::from).collect());
            result.area = Some(polygon.area());
        }
    }
    Ok(result)
}

fn push_line_field(out: &mut String, label: &str, value: &Option<LineRecord>) {
    if let Some(rec) = value {
        out.push_str(&format!("{label}: {}\n", rec.to_line()));
    }
}

/// Renders a report as deterministic plain text, one field per line.
pub fn format_report_text(result: &ResultDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("classification: {}\n", result.classification));
    push_line_field(&mut out, "r", &result.r);
    push_line_field(&mut out, "p", &result.p);
    push_line_field(&mut out, "s1", &result.s1);
    push_line_field(&mut out, "s2", &result.s2);
    push_line_field(&mut out, "s3", &result.s3);
    if let Some(polygon) = &result.polygon {
        out.push_str(&format!("polygon: {} vertices\n", polygon.len()));
        for rec in polygon {
            out.push_str(&format!("  vertex: ({}, {})\n", rec.k, rec.l));
        }
    }
    if let Some(area) = &result.area {
        out.push_str(&format!("area: {}\n", format_rational(area)));
    }
    if let Some([i, j, k]) = result.certificate {
        out.push_str(&format!(
            "certificate: triple ({i}, {j}, {k}) violates the sign condition\n"
        ));
    }
    out
}

//! JSON documents exchanged by the CLI.
//!
//! Matrices are arrays of row arrays of JSON integers of any size. Every
//! emitted object has its keys sorted, so output is byte-stable.
//!
//! `MatrixDocument`:
//!
//! ```json
//! {"convention": "columns-are-images-alpha-beta-gamma",
//!  "matrix": [[1, 0, 1], [0, 1, 0], [0, 0, -1]],
//!  "zeta_variant": "zeta"}
//! ```
//!
//! `CertificateDocument` adds `input`, `output`, `left_factors`,
//! `right_factors` and an `order` string spelling out the product identity.

use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::hopf::{GluingMatrix, ReductionCertificate, ZetaVariant, CONVENTION};
use crate::linalg::IntMatrix;

pub const CERTIFICATE_ORDER: &str = "output = left_factors[0] * left_factors[1] * ... * input * right_factors[0] * right_factors[1] * ...";

fn doc_err(msg: impl Into<String>) -> Error {
    Error::Document(msg.into())
}

pub fn int_value(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

pub fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(int_value).collect()))
            .collect(),
    )
}

pub fn parse_int(v: &Value, what: &str) -> Result<BigInt> {
    let Value::Number(n) = v else {
        return Err(doc_err(format!("{what}: expected an integer, got {v}")));
    };
    let text = n.to_string();
    BigInt::from_str(&text).map_err(|_| doc_err(format!("{what}: {text} is not an integer")))
}

pub fn parse_matrix(v: &Value, what: &str) -> Result<IntMatrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| doc_err(format!("{what}: expected an array of rows")))?;
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.as_array()
                .ok_or_else(|| doc_err(format!("{what}: row {i} is not an array")))?
                .iter()
                .map(|x| parse_int(x, what))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_big_rows(rows).map_err(|e| doc_err(format!("{what}: {e}")))
}

fn parse_matrix_list(v: &Value, what: &str) -> Result<Vec<IntMatrix>> {
    v.as_array()
        .ok_or_else(|| doc_err(format!("{what}: expected an array of matrices")))?
        .iter()
        .enumerate()
        .map(|(i, m)| parse_matrix(m, &format!("{what}[{i}]")))
        .collect()
}

fn parse_gluing(v: &Value, what: &str) -> Result<GluingMatrix> {
    let m = parse_matrix(v, what)?;
    GluingMatrix::new(m).map_err(|e| doc_err(format!("{what}: {e}")))
}

fn object(text: &str) -> Result<Map<String, Value>> {
    match serde_json::from_str::<Value>(text) {
        Ok(Value::Object(map)) => Ok(map),
        Ok(_) => Err(doc_err("expected a JSON object")),
        Err(e) => Err(doc_err(format!("malformed JSON: {e}"))),
    }
}

fn check_convention(map: &Map<String, Value>) -> Result<()> {
    match map.get("convention") {
        None => Ok(()),
        Some(Value::String(s)) if s == CONVENTION => Ok(()),
        Some(other) => Err(doc_err(format!(
            "unsupported convention {other}; only {CONVENTION:?} is understood"
        ))),
    }
}

fn parse_variant(map: &Map<String, Value>) -> Result<Option<ZetaVariant>> {
    match map.get("zeta_variant") {
        None => Ok(None),
        Some(Value::String(s)) => s.parse().map(Some).map_err(doc_err),
        Some(other) => Err(doc_err(format!(
            "zeta_variant must be a string, got {other}"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: GluingMatrix,
    pub zeta_variant: Option<ZetaVariant>,
}

impl MatrixDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let map = object(text)?;
        check_convention(&map)?;
        let matrix = map
            .get("matrix")
            .ok_or_else(|| doc_err("missing key \"matrix\""))?;
        Ok(Self {
            matrix: parse_gluing(matrix, "matrix")?,
            zeta_variant: parse_variant(&map)?,
        })
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "convention": CONVENTION,
            "matrix": matrix_value(self.matrix.matrix()),
        });
        if let Some(z) = self.zeta_variant {
            v["zeta_variant"] = json!(z.name());
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateDocument {
    pub certificate: ReductionCertificate,
    pub zeta_variant: ZetaVariant,
    /// Whether `input` is the caller's matrix with its meridian flipped.
    pub orientation_normalized: bool,
}

impl CertificateDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let map = object(text)?;
        check_convention(&map)?;
        let get = |key: &str| {
            map.get(key)
                .ok_or_else(|| doc_err(format!("missing key {key:?}")))
        };
        let certificate = ReductionCertificate {
            input: parse_gluing(get("input")?, "input")?,
            left_factors: parse_matrix_list(get("left_factors")?, "left_factors")?,
            right_factors: parse_matrix_list(get("right_factors")?, "right_factors")?,
            output: parse_matrix(get("output")?, "output")?,
        };
        let orientation_normalized = match map.get("orientation_normalized") {
            None => false,
            Some(Value::Bool(b)) => *b,
            Some(other) => {
                return Err(doc_err(format!(
                    "orientation_normalized must be a boolean, got {other}"
                )))
            }
        };
        Ok(Self {
            certificate,
            zeta_variant: parse_variant(&map)?.unwrap_or(ZetaVariant::Raw),
            orientation_normalized,
        })
    }

    pub fn to_value(&self) -> Value {
        let c = &self.certificate;
        json!({
            "convention": CONVENTION,
            "input": matrix_value(c.input.matrix()),
            "left_factors": c.left_factors.iter().map(matrix_value).collect::<Vec<_>>(),
            "order": CERTIFICATE_ORDER,
            "orientation_normalized": self.orientation_normalized,
            "output": matrix_value(&c.output),
            "right_factors": c.right_factors.iter().map(matrix_value).collect::<Vec<_>>(),
            "zeta_variant": self.zeta_variant.name(),
        })
    }
}

/// Indented JSON with sorted keys and a trailing newline. Arrays holding
/// only scalars stay on one line, so matrix rows read as rows.
pub fn render(v: &Value) -> String {
    let mut s = String::new();
    write_value(&mut s, v, 0);
    s.push('\n');
    s
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.push_str(&"  ".repeat(d));
    match v {
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{reduce_to_normal_form, zeta_matrix};

    #[test]
    fn matrix_document_parses() {
        let doc = MatrixDocument::parse(r#"{"matrix": [[1,0,1],[0,1,0],[0,0,-1]]}"#).unwrap();
        assert_eq!(doc.matrix, zeta_matrix());
        assert_eq!(doc.zeta_variant, None);
    }

    #[test]
    fn matrix_document_rejections() {
        for bad in [
            r#"{"matrix": [[2,0,0],[0,1,0],[0,0,1]]}"#,
            r#"{"matrix": [[1,0],[0,1]]}"#,
            r#"{"matrix": [[1,0,0],[0,1,0],[0,0,1.5]]}"#,
            r#"{"matrix": [[1,0,0],[0,1],[0,0,1]]}"#,
            r#"{"matrix": [[1,0,0],[0,1,0],[0,0,1]], "convention": "rows"}"#,
            r#"{"matrix": [[1,0,0],[0,1,0],[0,0,1]], "zeta_variant": "nope"}"#,
            r#"{"matrx": []}"#,
            r#"[1, 2]"#,
            r#"{"matrix": [[1,0,0],"#,
        ] {
            assert!(MatrixDocument::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn huge_entries_survive() {
        let text = r#"{"matrix": [[1,123456789012345678901234567890,0],[0,1,0],[0,0,1]]}"#;
        let doc = MatrixDocument::parse(text).unwrap();
        let again = MatrixDocument::parse(&render(&doc.to_value())).unwrap();
        assert_eq!(doc.matrix, again.matrix);
        assert!(render(&doc.to_value()).contains("123456789012345678901234567890"));
    }

    #[test]
    fn rendering_is_valid_sorted_json() {
        let v = json!({"b": [[1, -2], [3, 4]], "a": {"z": [], "y": "q\"s"}, "c": true});
        let text = render(&v);
        assert!(text.starts_with("{\n  \"a\""));
        assert!(text.contains("[1, -2]"));
        assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), v);
    }

    #[test]
    fn certificate_round_trip() {
        let m = GluingMatrix::from_rows([[1, 0, 3], [0, 1, 2], [1, 1, 6]]);
        let (_, certificate) = reduce_to_normal_form(&m).unwrap();
        let doc = CertificateDocument {
            certificate,
            zeta_variant: ZetaVariant::Raw,
            orientation_normalized: true,
        };
        let text = render(&doc.to_value());
        assert_eq!(CertificateDocument::parse(&text).unwrap(), doc);
    }
}

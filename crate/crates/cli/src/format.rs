//! JSON file formats.
//!
//! Matrix entries are strings in the ring's text encoding (`"3"`, `"-2/5"`,
//! `"1+2*s2"`); plain JSON integers are accepted on input.
//!
//! - matrix: `{"ring": "int", "n": 2, "rows": [["1", "1"], ["1", "0"]]}`
//! - cone: a matrix under `"cone_A"`, or a bare matrix
//! - structure data: `{"ring": ..., "n": ..., "H": rows, "D": rows, "Q": rows}`
//!
//! Unknown top-level keys are ignored, so reports that embed these fields
//! can be read back as inputs.

use std::path::Path;
use std::str::FromStr;

use lomat_core::ring::RingKind;
use lomat_core::structure::StructureData;
use lomat_core::{Error, GcdDomain, Mat, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Int(i64),
}

pub type Rows = Vec<Vec<Entry>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatFile {
    pub ring: String,
    pub n: usize,
    pub rows: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureFile {
    pub ring: String,
    pub n: usize,
    #[serde(rename = "H")]
    pub h: Rows,
    #[serde(rename = "D")]
    pub d: Rows,
    #[serde(rename = "Q")]
    pub q: Rows,
}

#[derive(Deserialize)]
struct ConeDoc {
    #[serde(rename = "cone_A")]
    cone_a: Option<MatFile>,
    ring: Option<String>,
    n: Option<usize>,
    rows: Option<Rows>,
}

pub fn rows_of<T: Scalar>(m: &Mat<T>) -> Rows {
    m.rows().map(|r| r.iter().map(|v| Entry::Text(v.to_string())).collect()).collect()
}

impl MatFile {
    pub fn from_mat<T: Scalar>(ring: RingKind, m: &Mat<T>) -> Self {
        MatFile { ring: ring.code().into(), n: m.n(), rows: rows_of(m) }
    }
}

impl StructureFile {
    pub fn from_data<R: GcdDomain>(s: &StructureData<R>) -> Self {
        StructureFile {
            ring: R::KIND.code().into(),
            n: s.n(),
            h: rows_of(s.h()),
            d: rows_of(s.d()),
            q: rows_of(s.q()),
        }
    }
}

pub fn parse_ring(code: &str, field: &str) -> Result<RingKind, String> {
    code.parse().map_err(|e: Error| format!("field `{field}`: {e}"))
}

/// Converts `rows` into an `n × n` matrix; errors name the offending field
/// and 1-based position.
pub fn parse_rows<T: Scalar + FromStr<Err = Error>>(rows: &Rows, n: usize, field: &str) -> Result<Mat<T>, String> {
    if n == 0 {
        return Err(format!("field `n`: dimension must be at least 1"));
    }
    if rows.len() != n {
        return Err(format!("field `{field}`: expected {n} rows, found {}", rows.len()));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(format!("field `{field}[{}]`: expected {n} entries, found {}", i + 1, row.len()));
        }
        let mut parsed = Vec::with_capacity(n);
        for (j, e) in row.iter().enumerate() {
            let text = match e {
                Entry::Text(s) => s.clone(),
                Entry::Int(v) => v.to_string(),
            };
            let v = text
                .parse()
                .map_err(|err: Error| format!("field `{field}[{}][{}]`: {err}", i + 1, j + 1))?;
            parsed.push(v);
        }
        out.push(parsed);
    }
    Mat::from_rows(out).map_err(|e| format!("field `{field}`: {e}"))
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input { path: path.into(), message: format!("cannot read: {e}") })
}

fn input_error(path: &Path, message: impl Into<String>) -> CliError {
    CliError::Input { path: path.into(), message: message.into() }
}

/// A cone file before its entries are interpreted in a ring.
pub fn read_cone(path: &Path) -> Result<MatFile, CliError> {
    let doc: ConeDoc = serde_json::from_str(&read_text(path)?).map_err(|e| input_error(path, e.to_string()))?;
    match doc {
        ConeDoc { cone_a: Some(m), .. } => Ok(m),
        ConeDoc { ring: Some(ring), n: Some(n), rows: Some(rows), .. } => Ok(MatFile { ring, n, rows }),
        _ => Err(input_error(path, "missing field `cone_A` (or bare `ring`, `n`, `rows`)")),
    }
}

pub fn read_structure(path: &Path) -> Result<StructureFile, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| input_error(path, e.to_string()))
}

/// The three structure matrices interpreted over the fraction field.
pub type FieldTriple<R> = (Mat<lomat_core::Frac<R>>, Mat<lomat_core::Frac<R>>, Mat<lomat_core::Frac<R>>);

pub fn structure_matrices<R: GcdDomain>(file: &StructureFile) -> Result<FieldTriple<R>, String> {
    let h = parse_rows(&file.h, file.n, "H")?;
    let d = parse_rows(&file.d, file.n, "D")?;
    let q = parse_rows(&file.q, file.n, "Q")?;
    Ok((h, d, q))
}

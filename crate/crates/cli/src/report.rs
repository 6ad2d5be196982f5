//! JSON report shapes and the aligned text form used by `--pretty`.

use circulant_core::{DenseMatrix, ExtField, Field, Poly, PrimeField};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::spec_file::Family;

/// How field elements appear on the wire: residues for GF(p), coordinate
/// arrays for extensions.
pub trait WireField: Field {
    fn wire(&self, x: Self::Elem) -> Value;
}

impl WireField for PrimeField {
    fn wire(&self, x: u64) -> Value {
        Value::from(x)
    }
}

impl WireField for ExtField {
    fn wire(&self, x: Self::Elem) -> Value {
        Value::from(self.coefficients(x))
    }
}

pub fn wire_poly<F: WireField>(field: &F, g: &Poly<F::Elem>) -> Vec<Value> {
    g.coeffs().iter().map(|&c| field.wire(c)).collect()
}

pub fn wire_matrix<F: WireField>(field: &F, m: &DenseMatrix<F::Elem>) -> Vec<Vec<Value>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|&x| field.wire(x)).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timings {
    pub formula_ms: f64,
    pub oracle_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankJson {
    pub family: Family,
    pub formula_rank: usize,
    pub oracle_rank: Option<usize>,
    pub e: Option<usize>,
    #[serde(rename = "ePrime")]
    pub e_prime: Option<usize>,
    #[serde(rename = "eBar")]
    pub e_bar: Option<usize>,
    pub d: usize,
    pub ell: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    pub agrees: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct GenmatJson {
    pub family: Family,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<Vec<u64>>,
    pub n: usize,
    pub n_prime: Option<usize>,
    pub g: Vec<Value>,
    pub g_prime: Option<Vec<Value>>,
    pub r: usize,
    pub generator: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldJson {
    pub p: u64,
    /// Monic modulus of the spectral field, low degree first.
    pub modulus: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelVectorJson {
    pub tag: String,
    pub entries: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct KernelJson {
    pub d: usize,
    pub e: usize,
    pub e_prime: usize,
    pub e_bar: usize,
    pub nullity: Option<usize>,
    pub field: FieldJson,
    pub vectors: Vec<KernelVectorJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckJson {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyJson {
    pub family: Family,
    pub checks: Vec<CheckJson>,
    pub ok: bool,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(cell).collect();
            format!("({})", inner.join(","))
        }
        other => other.to_string(),
    }
}

/// Right-aligned columns, one row per line.
pub fn aligned(rows: &[Vec<Value>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(cell).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// `key  value` lines aligned on the key column, one per top-level field.
pub fn key_values(json: &Value) -> String {
    let Value::Object(map) = json else {
        return format!("{json}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in map {
        let shown = match v {
            Value::Null => "-".to_string(),
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k:<width$}  {shown}\n"));
    }
    out
}

//! JSON input schemas and machine-readable report shapes.
//!
//! Matrices arrive as `{"n": int, "b": [[int]]}` or `{"n": int, "a": [[int]]}`
//! (bare `[[int]]` is also accepted where the flag already fixes the kind),
//! orientations as `{"edges": [[from, to]]}`. Vertex indices are 1-based in
//! all input and output and converted at this boundary. Reports contain only
//! structs and vectors, so serialization is byte-deterministic.

use serde::{Deserialize, Serialize};

use crate::cartan::{CartanMatrix, ExchangeMatrix};
use crate::coxeter::CoxeterOrbit;
use crate::error::Error;
use crate::quiver::ValuedQuiver;
use crate::seed::Enumeration;

#[derive(Deserialize)]
struct MatrixObject {
    n: usize,
    #[serde(default)]
    b: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    a: Option<Vec<Vec<i64>>>,
}

fn rows_from_json(text: &str, field: &str) -> Result<Vec<Vec<i64>>, Error> {
    if let Ok(obj) = serde_json::from_str::<MatrixObject>(text) {
        let rows = match field {
            "b" => obj.b,
            _ => obj.a,
        }
        .ok_or_else(|| Error::Input(format!("matrix object is missing the \"{field}\" field")))?;
        if rows.len() != obj.n {
            return Err(Error::Input(format!(
                "matrix object claims n={} but has {} rows",
                obj.n,
                rows.len()
            )));
        }
        return Ok(rows);
    }
    serde_json::from_str::<Vec<Vec<i64>>>(text)
        .map_err(|e| Error::Input(format!("malformed matrix JSON: {e}")))
}

/// Parses an exchange matrix from `{"n", "b"}` or a bare row-major array.
pub fn exchange_from_json(text: &str) -> Result<ExchangeMatrix, Error> {
    ExchangeMatrix::new(rows_from_json(text, "b")?)
}

/// Parses a Cartan matrix from `{"n", "a"}` or a bare row-major array.
pub fn cartan_from_json(text: &str) -> Result<CartanMatrix, Error> {
    CartanMatrix::new(rows_from_json(text, "a")?)
}

#[derive(Deserialize)]
struct OrientationObject {
    edges: Vec<(usize, usize)>,
}

/// Parses an orientation `{"edges": [[from, to]]}` with 1-based vertices.
pub fn orientation_from_json(cartan: &CartanMatrix, text: &str) -> Result<ValuedQuiver, Error> {
    let obj: OrientationObject = serde_json::from_str(text)
        .map_err(|e| Error::Input(format!("malformed orientation JSON: {e}")))?;
    let mut arrows = Vec::new();
    for (s, t) in obj.edges {
        if s == 0 || t == 0 {
            return Err(Error::Input(
                "orientation vertices are 1-based; got index 0".to_string(),
            ));
        }
        arrows.push((s - 1, t - 1));
    }
    ValuedQuiver::new(cartan.clone(), arrows)
}

/// Enumeration report: `{"variables", "clusters", "complete"}` with clusters
/// as index lists into the sorted variable array.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EnumerationReport {
    pub variables: Vec<String>,
    pub clusters: Vec<Vec<usize>>,
    pub complete: bool,
}

impl From<&Enumeration> for EnumerationReport {
    fn from(e: &Enumeration) -> Self {
        EnumerationReport {
            variables: e.variable_strings().to_vec(),
            clusters: e.clusters().to_vec(),
            complete: e.complete(),
        }
    }
}

/// One orbit value `T^m(u_k)`, with `k` 1-based.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct OrbitEntry {
    pub m: i64,
    pub k: usize,
    pub value: String,
}

/// Orbit report: `{"order", "entries"}`; `order` is null when no finite
/// order was established within the search budget.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub order: Option<u64>,
    pub entries: Vec<OrbitEntry>,
}

impl OrbitReport {
    pub fn new(orbit: &CoxeterOrbit, order: Option<u64>) -> Self {
        OrbitReport {
            order,
            entries: orbit
                .entries()
                .map(|(&(m, k), v)| OrbitEntry {
                    m,
                    k: k + 1,
                    value: v.canonical_string(),
                })
                .collect(),
        }
    }
}

//! Serialization with a fixed float format: 17 significant digits in
//! scientific notation, fields in declaration order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex;
use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde::Deserialize;
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzySurface;
use crate::matcore::CMatrix;
use crate::scalar::Real;

/// `x` with 17 significant digits, e.g. `1.0000000000000000e0`.
pub fn fmt17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// A float that serializes as a raw JSON number with 17 significant digits
/// (non-finite values become `null`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sig17(pub f64);

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(fmt17(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl Sig17 {
    pub fn of<T: Real>(x: T) -> Self {
        Sig17(x.to_f64_lossy())
    }
}

/// `{"dim": n, "entries": [[re, im], ...]}`, row-major.
pub struct MatrixJson<'a, T>(pub &'a CMatrix<T>);

impl<T: Real> Serialize for MatrixJson<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<[Sig17; 2]> = self
            .0
            .entries()
            .iter()
            .map(|z| [Sig17::of(z.re), Sig17::of(z.im)])
            .collect();
        let mut st = s.serialize_struct("Matrix", 2)?;
        st.serialize_field("dim", &self.0.dim())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct MatrixIn {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

pub fn matrix_to_json<T: Real>(m: &CMatrix<T>) -> Result<String> {
    Ok(serde_json::to_string(&MatrixJson(m))?)
}

pub fn matrix_from_json<T: Real>(text: &str) -> Result<CMatrix<T>> {
    let m: MatrixIn = serde_json::from_str(text)?;
    let data = m
        .entries
        .iter()
        .map(|[re, im]| Complex::new(T::lit(*re), T::lit(*im)))
        .collect();
    CMatrix::from_row_major(m.dim, data)
}

/// `{"label", "N", "hbar", "coords", "normals", "gamma_hat"}`
pub struct SurfaceJson<'a, T>(pub &'a FuzzySurface<T>);

impl<T: Real> Serialize for SurfaceJson<'_, T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let surf = self.0;
        let coords: Vec<MatrixJson<T>> = surf.coords().iter().map(MatrixJson).collect();
        let normals: Vec<Vec<MatrixJson<T>>> = surf
            .normals()
            .unwrap_or(&[])
            .iter()
            .map(|frame| frame.iter().map(MatrixJson).collect())
            .collect();
        let mut st = s.serialize_struct("FuzzySurface", 6)?;
        st.serialize_field("label", surf.label())?;
        st.serialize_field("N", &surf.n_mat())?;
        st.serialize_field("hbar", &Sig17::of(surf.hbar()))?;
        st.serialize_field("coords", &coords)?;
        st.serialize_field("normals", &normals)?;
        st.serialize_field("gamma_hat", &MatrixJson(surf.gamma_hat()))?;
        st.end()
    }
}

/// Invariants computed for one configuration.
#[derive(Clone, Debug, serde::Serialize)]
pub struct GeometryReport {
    pub surface: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub hbar: Sig17,
    pub chi_hat: Option<Sig17>,
    pub kappa: Option<Sig17>,
    pub lambda_min_nonzero: Option<Sig17>,
    pub bound_satisfied: Option<bool>,
    pub defects: BTreeMap<String, Sig17>,
    pub formulation: Option<String>,
}

impl GeometryReport {
    pub fn new(surface: impl Into<String>, n: usize, hbar: f64) -> Self {
        Self {
            surface: surface.into(),
            n,
            hbar: Sig17(hbar),
            chi_hat: None,
            kappa: None,
            lambda_min_nonzero: None,
            bound_satisfied: None,
            defects: BTreeMap::new(),
            formulation: None,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// One row of an N-sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub hbar: f64,
    pub chi_hat: Option<f64>,
    pub chi_err: Option<f64>,
    pub kappa: Option<f64>,
    pub lambda_min: Option<f64>,
    pub runtime_ms: Option<f64>,
}

pub const SWEEP_HEADER: &str = "N,hbar,chi_hat,chi_err,kappa,lambda_min,runtime_ms";

fn opt17(x: Option<f64>) -> String {
    x.map(fmt17).unwrap_or_default()
}

/// Comma-separated, header row, LF line endings. Absent values are empty cells.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    out.push_str(SWEEP_HEADER);
    out.push('\n');
    for r in rows {
        let runtime = r.runtime_ms.map(|t| format!("{t:.3}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            fmt17(r.hbar),
            opt17(r.chi_hat),
            opt17(r.chi_err),
            opt17(r.kappa),
            opt17(r.lambda_min),
            runtime
        );
    }
    out
}

/// Generic table with a header and float cells at 17 digits.
pub fn table_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        out.push_str(&r.join(","));
        out.push('\n');
    }
    out
}

pub fn write_text(path: &std::path::Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(Error::from)
}

//! Raw field dumps: little-endian f64 values in row-major order plus a JSON
//! sidecar describing the shape.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::grid::GridField;
use crate::error::{Error, Result};
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldSidecar {
    pub name: String,
    pub shape: Vec<usize>,
    pub dtype: String,
    pub order: String,
}

fn with_ext(stem: &Path, ext: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(ext);
    PathBuf::from(s)
}

/// Write `<stem>.bin` and `<stem>.json`; returns both paths.
pub fn write_field_dump<T: Real>(
    stem: &Path,
    name: &str,
    field: &GridField<T>,
) -> Result<(PathBuf, PathBuf)> {
    let bin = with_ext(stem, ".bin");
    let json = with_ext(stem, ".json");
    let mut bytes = Vec::with_capacity(8 * field.values.len());
    for v in &field.values {
        bytes.extend_from_slice(&v.to_f64_lossy().to_le_bytes());
    }
    fs::write(&bin, bytes)?;
    let side = FieldSidecar {
        name: name.into(),
        shape: field.shape.clone(),
        dtype: "f64le".into(),
        order: "row-major".into(),
    };
    fs::write(&json, serde_json::to_string_pretty(&side)? + "\n")?;
    Ok((bin, json))
}

pub fn read_field_dump(stem: &Path) -> Result<(FieldSidecar, GridField<f64>)> {
    let side: FieldSidecar = serde_json::from_str(&fs::read_to_string(with_ext(stem, ".json"))?)?;
    let bytes = fs::read(with_ext(stem, ".bin"))?;
    if bytes.len() % 8 != 0 {
        return Err(Error::InvalidShape(
            "field dump length is not a multiple of 8".into(),
        ));
    }
    let values = bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8 bytes")))
        .collect();
    let field = GridField::new(side.shape.clone(), values)?;
    Ok((side, field))
}

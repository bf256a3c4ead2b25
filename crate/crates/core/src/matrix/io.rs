//! JSON matrix file format:
//!
//! ```json
//! { "rows": 2, "cols": 2, "data": [[[0.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]] }
//! ```
//!
//! `data` holds one array per row; every entry is an `[re, im]` pair.

use serde::{Deserialize, Serialize};

use super::{Matrix, C64};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<[f64; 2]>>,
}

impl From<&Matrix> for MatrixFile {
    fn from(m: &Matrix) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            data: (0..m.rows()).map(|i| m.row(i).iter().map(|z| [z.re, z.im]).collect()).collect(),
        }
    }
}

impl TryFrom<MatrixFile> for Matrix {
    type Error = Error;

    fn try_from(f: MatrixFile) -> Result<Matrix> {
        if f.data.len() != f.rows {
            return Err(Error::Parse(format!("expected {} rows, found {}", f.rows, f.data.len())));
        }
        if let Some((i, row)) = f.data.iter().enumerate().find(|(_, r)| r.len() != f.cols) {
            return Err(Error::Parse(format!("row {i} has {} entries, expected {}", row.len(), f.cols)));
        }
        let entries = f.data.iter().flatten().map(|&[re, im]| C64::new(re, im)).collect();
        Matrix::new(f.rows, f.cols, entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Matrix {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&MatrixFile::from(self)).expect("matrix serialisation")
    }

    pub fn from_json(text: &str) -> Result<Matrix> {
        let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Matrix::try_from(file)
    }
}

//! The on-disk problem format: a JSON object with the constraint rows,
//! right-hand side, optional objectives, and the nonnegativity flag.

use std::fs;
use std::path::Path;

use serde::Deserialize;

use fanlp::{Halfspace, HalfspaceSystem, LinearForm};

/// A problem file describing `A x <= b` (optionally with `x >= 0`) and a
/// list of objective coefficient pairs. Unknown fields are rejected so a
/// typo surfaces as a parse error instead of silently changing the problem.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(rename = "A")]
    pub a: Vec<[f64; 2]>,
    pub b: Vec<f64>,
    #[serde(default)]
    pub objectives: Vec<[f64; 2]>,
    #[serde(default = "default_true")]
    pub nonneg: bool,
}

fn default_true() -> bool {
    true
}

#[derive(Debug)]
pub enum ProblemError {
    Io(std::io::Error),
    Json(serde_json::Error),
    Shape(String),
}

impl std::fmt::Display for ProblemError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProblemError::Io(e) => write!(f, "cannot read problem file: {e}"),
            ProblemError::Json(e) => write!(f, "invalid JSON: {e}"),
            ProblemError::Shape(m) => write!(f, "invalid problem: {m}"),
        }
    }
}

impl ProblemFile {
    pub fn load(path: &Path) -> Result<Self, ProblemError> {
        let text = fs::read_to_string(path).map_err(ProblemError::Io)?;
        let file: ProblemFile = serde_json::from_str(&text).map_err(ProblemError::Json)?;
        if file.a.len() != file.b.len() {
            return Err(ProblemError::Shape(format!(
                "A has {} rows but b has {} entries",
                file.a.len(),
                file.b.len()
            )));
        }
        Ok(file)
    }

    pub fn system(&self) -> Result<HalfspaceSystem, fanlp::Error> {
        let rows = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(row, &b)| Halfspace::new(row[0], row[1], b))
            .collect();
        HalfspaceSystem::new(rows, self.nonneg)
    }

    /// The `k`-th (0-based) objective as a linear form. Zero coefficients
    /// are accepted in the file and only rejected here, when the objective
    /// is actually used.
    pub fn form(&self, k: usize) -> Result<LinearForm, fanlp::Error> {
        let c = self.objectives.get(k).ok_or(fanlp::Error::IndexOutOfRange {
            index: k + 1,
            len: self.objectives.len(),
        })?;
        LinearForm::new(c[0], c[1])
    }

    pub fn forms(&self) -> Result<Vec<LinearForm>, fanlp::Error> {
        (0..self.objectives.len()).map(|k| self.form(k)).collect()
    }
}

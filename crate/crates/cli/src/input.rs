use std::path::Path;

use hopfeq::catalog::builtin;
use hopfeq::exactlin::{FieldSpec, Matrix, Scalar};
use hopfeq::json::{parse_document, parse_matrix, resolve_field, Document};
use hopfeq::{Error, Result};
use serde_json::Value;

/// A file on disk or `builtin:NAME`.
pub enum Input {
    File(Value),
    Builtin(String),
}

pub fn read_json(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(Path::new(path)).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

impl Input {
    pub fn load(arg: &str) -> Result<Input> {
        match arg.strip_prefix("builtin:") {
            Some(name) => Ok(Input::Builtin(name.to_string())),
            None => read_json(arg).map(Input::File),
        }
    }

    pub fn document<S: Scalar>(&self) -> Result<Document<S>> {
        match self {
            Input::File(v) => parse_document(v),
            Input::Builtin(name) => builtin(name),
        }
    }
}

/// The common field of all inputs, honouring an override.
pub fn field_of(inputs: &[&Input], requested: Option<FieldSpec>) -> Result<FieldSpec> {
    let mut field = requested;
    for i in inputs {
        if let Input::File(v) = i {
            let f = resolve_field(v, field)?;
            field = Some(f);
        }
    }
    Ok(field.unwrap_or(FieldSpec::Q))
}

pub fn iso<S: Scalar>(arg: &str, n: usize) -> Result<Matrix<S>> {
    if arg == "identity" || arg == "id" {
        return Ok(Matrix::identity(n));
    }
    parse_matrix(&read_json(arg)?)
}

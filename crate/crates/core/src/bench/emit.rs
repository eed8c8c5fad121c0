use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Number, Value};

use crate::error::{FaddeevaError, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Text(String),
}

impl Cell {
    /// CSV text; reals carry 17 significant digits.
    pub fn to_csv(&self) -> String {
        match self {
            Self::Int(v) => v.to_string(),
            Self::Real(v) => format!("{v:.16e}"),
            Self::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Self::Int(v) => Value::from(*v),
            Self::Real(v) => Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Self::Text(s) => Value::from(s.as_str()),
        }
    }
}

/// A record with a fixed column layout.
pub trait Tabular {
    fn header() -> &'static [&'static str];
    fn cells(&self) -> Vec<Cell>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// `json` for a `.json` extension, CSV otherwise.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => Self::Json,
            _ => Self::Csv,
        }
    }
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> FaddeevaError + '_ {
    move |source| FaddeevaError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Writes `records` to `path`. The output depends only on the records.
pub fn emit<R: Tabular>(records: &[R], format: Format, path: &Path) -> Result<()> {
    match format {
        Format::Csv => {
            let csv_err = |source| FaddeevaError::Csv {
                path: path.to_path_buf(),
                source,
            };
            let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
            w.write_record(R::header()).map_err(csv_err)?;
            for r in records {
                w.write_record(r.cells().iter().map(Cell::to_csv))
                    .map_err(csv_err)?;
            }
            w.flush().map_err(io_err(path))?;
        }
        Format::Json => {
            let rows: Vec<Value> = records
                .iter()
                .map(|r| {
                    let map: Map<String, Value> = R::header()
                        .iter()
                        .zip(r.cells())
                        .map(|(k, c)| (k.to_string(), c.to_json()))
                        .collect();
                    Value::Object(map)
                })
                .collect();
            let mut w = BufWriter::new(File::create(path).map_err(io_err(path))?);
            serde_json::to_writer_pretty(&mut w, &rows).map_err(|source| FaddeevaError::Json {
                path: path.to_path_buf(),
                source,
            })?;
            w.write_all(b"\n").map_err(io_err(path))?;
            w.flush().map_err(io_err(path))?;
        }
    }
    Ok(())
}

//! Curve serialization (CSV, SVG) and the command-line driver that
//! regenerates every dataset.

mod csv_io;
mod run;
mod svg;

use std::path::PathBuf;

use thiserror::Error;

pub use csv_io::{read_csv, write_csv, CSV_HEADER};
pub use run::{cli_main, run, Mode, RunOptions, RunReport};
pub use svg::{grey_level, write_svg};

use crate::scenarios::{ScenarioError, TuningTables};

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: line {line}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Csv,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Svg => "svg",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmitConfig {
    pub out_dir: PathBuf,
    pub formats: Vec<Format>,
    /// Half-widths of the drawn window `[-u, u] × [-v, v]`.
    pub viewport: (f64, f64),
    /// Pixels per unit in SVG output.
    pub svg_scale: f64,
    /// Decimal digits of CSV coordinates.
    pub precision: usize,
}

impl EmitConfig {
    pub fn new(out_dir: impl Into<PathBuf>, tables: &TuningTables) -> Self {
        EmitConfig {
            out_dir: out_dir.into(),
            formats: vec![Format::Csv, Format::Svg],
            viewport: (tables.ulim, tables.vlim),
            svg_scale: 40.0,
            precision: 9,
        }
    }
}

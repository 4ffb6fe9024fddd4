//! Report emission. Standard output carries only the report; progress and
//! notes go to standard error.

use std::io::{self, Write};

use serde::Serialize;

use crate::Format;

/// A report with a CSV rendering and a JSON rendering.
pub struct Report<T: Serialize> {
    pub header: &'static str,
    pub rows: Vec<String>,
    pub json: T,
}

impl<T: Serialize> Report<T> {
    pub fn emit(&self, format: Format) -> io::Result<()> {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        match format {
            Format::Csv => {
                writeln!(out, "{}", self.header)?;
                for row in &self.rows {
                    writeln!(out, "{row}")?;
                }
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.json).map_err(io::Error::other)?;
                writeln!(out)?;
            }
        }
        out.flush()
    }
}

pub fn note(msg: impl AsRef<str>) {
    eprintln!("{}", msg.as_ref());
}

use std::fs;
use std::io::Write;

use serde::Serialize;

use crate::{CommonArgs, Failure, Format};

/// Writes a rendered document to `--out` or stdout.
pub fn emit(common: &CommonArgs, body: &str) -> Result<(), Failure> {
    match &common.out {
        Some(p) => fs::write(p, body)?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

pub fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

/// Renders the document in the requested format.
pub fn render<T: Serialize>(
    common: &CommonArgs,
    text: impl FnOnce() -> String,
    value: &T,
    table: impl FnOnce() -> (Vec<&'static str>, Vec<Vec<String>>),
) -> String {
    match common.format {
        Format::Text => text(),
        Format::Json => json(value),
        Format::Csv => {
            let (h, rows) = table();
            csv(&h, &rows)
        }
    }
}

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

/// A flat record with a fixed column order.
pub trait CsvRow: Serialize {
    const HEADER: &'static [&'static str];
}

/// Everything a subcommand produces, rendered lazily per format.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub csv: String,
    /// False when a verification claim failed (exit code 1).
    pub verified: bool,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Csv => self.csv.clone(),
            Format::Json => {
                let doc = json!({
                    "meta": {
                        "tool": env!("CARGO_PKG_NAME"),
                        "version": env!("CARGO_PKG_VERSION"),
                    },
                    "result": self.json,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
        }
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> io::Result<()> {
        let rendered = self.render(format);
        match out {
            Some(path) => fs::write(path, rendered),
            None => io::stdout().lock().write_all(rendered.as_bytes()),
        }
    }
}

pub fn csv_table<R: CsvRow>(rows: &[R]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    writer.write_record(R::HEADER).expect("in-memory write");
    for row in rows {
        writer.serialize(row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
}

/// A left-aligned plain-text table.
pub fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let line = |out: &mut String, cells: &mut dyn Iterator<Item = &str>| {
        let parts: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}", w = *w))
            .collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(&mut out, &mut header.iter().copied());
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    let _ = writeln!(out, "{}", rule.join("  "));
    for row in rows {
        line(&mut out, &mut row.iter().map(String::as_str));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        a: u32,
        b: i64,
    }

    impl CsvRow for Row {
        const HEADER: &'static [&'static str] = &["a", "b"];
    }

    #[test]
    fn csv_header_survives_empty_tables() {
        assert_eq!(csv_table::<Row>(&[]), "a,b\n");
        assert_eq!(csv_table(&[Row { a: 1, b: -2 }]), "a,b\n1,-2\n");
    }

    #[test]
    fn text_tables_align() {
        let t = text_table(&["m", "h1"], &[vec!["10".into(), "3".into()]]);
        assert_eq!(t, " m  h1\n--  --\n10   3\n");
    }
}

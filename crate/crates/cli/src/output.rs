use std::io::Write;

use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};

/// Column-oriented rows of preformatted strings.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .cloned()
                        .zip(row.iter().map(|v| Value::String(v.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

pub fn config_json(cfg: &RunConfig) -> Value {
    json!({
        "digits": cfg.digits,
        "order": cfg.order,
        "max_n": cfg.max_n,
        "format": cfg.format.name(),
        "significant_digits": cfg.sig_digits(),
    })
}

fn write_csv(out: &mut dyn Write, table: &Table) -> std::io::Result<()> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row)?;
    }
    w.flush()
}

fn write_text(out: &mut dyn Write, table: &Table) -> std::io::Result<()> {
    let widths: Vec<usize> = (0..table.columns.len())
        .map(|c| {
            table.rows.iter().map(|r| r[c].len()).chain([table.columns[c].len()]).max().unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        cells
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    writeln!(out, "{}", line(&table.columns))?;
    for row in &table.rows {
        writeln!(out, "{}", line(row))?;
    }
    Ok(())
}

/// Writes a row table; JSON output nests it under `rows`.
pub fn emit_rows(out: &mut dyn Write, cfg: &RunConfig, table: &Table) -> std::io::Result<()> {
    match cfg.format {
        Format::Csv => write_csv(out, table),
        Format::Text => write_text(out, table),
        Format::Json => {
            let doc = json!({ "config": config_json(cfg), "rows": table.json_rows() });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"))
        }
    }
}

/// Writes a report: a key/value table (CSV, text) or an object under
/// `report` (JSON). `extra` carries JSON-only structure.
pub fn emit_report(
    out: &mut dyn Write,
    cfg: &RunConfig,
    table: &Table,
    report: Value,
) -> std::io::Result<()> {
    match cfg.format {
        Format::Csv => write_csv(out, table),
        Format::Text => write_text(out, table),
        Format::Json => {
            let doc = json!({ "config": config_json(cfg), "report": report });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serialisable"))
        }
    }
}

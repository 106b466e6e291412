use std::collections::BTreeMap;
use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Text(&'static str),
}

impl Cell {
    fn render(&self) -> String {
        match *self {
            Self::Int(i) => i.to_string(),
            // 17 significant digits round-trip every f64
            Self::Real(x) => format!("{x:.16e}"),
            Self::Text(s) => s.to_string(),
        }
    }

    fn to_json(self) -> Value {
        match self {
            Self::Int(i) => json!(i),
            Self::Real(x) if x.is_finite() => json!(x),
            Self::Real(x) => json!(x.to_string()),
            Self::Text(s) => json!(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Axis vectors for grid outputs, keyed by column name.
    pub axes: BTreeMap<&'static str, Vec<f64>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new(), axes: BTreeMap::new() }
    }
}

/// Comment header, column names, then one record per row.
pub fn write_csv(out: &mut dyn Write, config: &impl Serialize, table: &Table) -> Result<()> {
    writeln!(out, "# cho {}", cho::VERSION)?;
    if let Value::Object(map) = serde_json::to_value(config)? {
        for (key, value) in map {
            let shown = match value {
                Value::String(s) => s,
                Value::Null => "none".to_string(),
                other => other.to_string(),
            };
            writeln!(out, "# {key}: {shown}")?;
        }
    }
    writeln!(out, "# columns: {}", table.columns.join(","))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&table.columns)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::render))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json(out: &mut dyn Write, config: &impl Serialize, table: &Table) -> Result<()> {
    let data: Vec<Value> = table.rows.iter().map(|r| Value::Array(r.iter().map(|c| c.to_json()).collect())).collect();
    let mut doc = json!({
        "version": cho::VERSION,
        "config": config,
        "columns": table.columns,
        "data": data,
    });
    if !table.axes.is_empty() {
        doc["axes"] = json!(table.axes);
    }
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)?;
    Ok(())
}

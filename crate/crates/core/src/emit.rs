//! Text output: row tables, CSV, JSON and DOT.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::dessin::{Dessin, DessinInvariants, DessinRecord};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected table, json, csv or dot".into(),
            }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Table => "table",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
        })
    }
}

pub const TABLE_HEADER: [&str; 6] = ["Dessin", "Pair", "Type", "Genus", "Graph", "Symmetric"];

/// One named dessin with its computed invariants.
#[derive(Debug, Clone)]
pub struct ClassEntry {
    pub id: String,
    pub dessin: Dessin,
    pub invariants: DessinInvariants,
}

impl ClassEntry {
    pub fn new(id: impl Into<String>, dessin: Dessin) -> Self {
        let invariants = dessin.invariants();
        Self {
            id: id.into(),
            dessin,
            invariants,
        }
    }

    /// Cells in [`TABLE_HEADER`] order.
    pub fn cells(&self) -> [String; 6] {
        let inv = &self.invariants;
        let (l, m, n) = inv.type_triple;
        [
            self.id.clone(),
            self.dessin.pair_label(),
            format!("({l},{m},{n})"),
            inv.genus.to_string(),
            inv.graph.clone(),
            yes_no(inv.symmetric).into(),
        ]
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Yes"
    } else {
        "No"
    }
}

/// `cells` joined by ` | `, with a rule under the header.
pub fn pipe_table<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> String {
    let mut out = header.join(" | ");
    out.push('\n');
    out.push_str(
        &header
            .iter()
            .map(|h| "-".repeat(h.chars().count()))
            .collect::<Vec<_>>()
            .join("-+-"),
    );
    out.push('\n');
    for row in rows {
        let cells: Vec<&str> = row.iter().map(AsRef::as_ref).collect();
        out.push_str(&cells.join(" | "));
        out.push('\n');
    }
    out
}

pub fn csv_table<S: AsRef<str>>(header: &[&str], rows: &[Vec<S>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.into());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row.iter().map(AsRef::as_ref)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[derive(Serialize)]
struct EntryJson<'a> {
    id: &'a str,
    pair: String,
    dessin: DessinRecord,
    invariants: &'a DessinInvariants,
}

fn entry_json(entry: &ClassEntry) -> serde_json::Value {
    serde_json::to_value(EntryJson {
        id: &entry.id,
        pair: entry.dessin.pair_label(),
        dessin: entry.dessin.to_record(),
        invariants: &entry.invariants,
    })
    .expect("entries serialize")
}

/// A list of classes. DOT is rejected because it describes one dessin.
pub fn emit_entries(entries: &[ClassEntry], format: Format) -> Result<String> {
    let rows: Vec<Vec<String>> = entries.iter().map(|e| e.cells().to_vec()).collect();
    match format {
        Format::Table => Ok(pipe_table(&TABLE_HEADER, &rows)),
        Format::Csv => csv_table(&TABLE_HEADER, &rows),
        Format::Json => {
            let list: Vec<_> = entries.iter().map(entry_json).collect();
            Ok(serde_json::to_string_pretty(&list)? + "\n")
        }
        Format::Dot => Err(Error::Unsupported(
            "dot output describes a single dessin".into(),
        )),
    }
}

/// A single dessin: `key: value` lines, a one-row CSV, JSON with record and
/// invariants, or the DOT graph.
pub fn emit_dessin(dessin: &Dessin, format: Format) -> Result<String> {
    match format {
        Format::Dot => Ok(dessin.underlying_graph().to_dot()),
        Format::Json => {
            let value = json!({
                "dessin": dessin.to_record(),
                "invariants": dessin.invariants(),
            });
            Ok(serde_json::to_string_pretty(&value)? + "\n")
        }
        Format::Csv => {
            let entry = ClassEntry::new("D", dessin.clone());
            csv_table(&TABLE_HEADER, &[entry.cells().to_vec()])
        }
        Format::Table => Ok(invariant_lines(dessin, &dessin.invariants())),
    }
}

pub fn invariant_lines(dessin: &Dessin, inv: &DessinInvariants) -> String {
    let (l, m, n) = inv.type_triple;
    let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    let lines = [
        ("group", dessin.group().to_string()),
        ("pair", dessin.pair_label()),
        ("order", inv.order.to_string()),
        ("type", format!("({l},{m},{n})")),
        ("euler characteristic", inv.euler_characteristic.to_string()),
        ("genus", inv.genus.to_string()),
        ("black vertices", inv.black_vertices.to_string()),
        ("white vertices", inv.white_vertices.to_string()),
        ("faces", inv.faces.to_string()),
        ("graph", inv.graph.clone()),
        ("core order", inv.core_order.to_string()),
        (
            "core exponent",
            opt(inv.core_exponent.map(|e| e.to_string())),
        ),
        ("symmetric", yes_no(inv.symmetric).into()),
        ("reflexible", yes_no(inv.reflexible).into()),
        ("totally symmetric", yes_no(inv.totally_symmetric).into()),
        (
            "nilpotency class",
            opt(inv.nilpotency_class.map(|c| c.to_string())),
        ),
    ];
    lines.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}

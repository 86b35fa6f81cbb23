//! Catalog files, format `sfa-1`.
//!
//! Two encodings carry the same records: JSON, and a tab-separated table with
//! a `#` header line. [`read_catalog`] accepts either.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sfa_core::enumerate::{sort_entries, Catalog, CatalogEntry, EnumerationQuery};
use sfa_core::{CodeKind, DiagramCode, Polarity, SurfaceClass};

pub const FORMAT_VERSION: &str = "sfa-1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("format version {found:?}, expected {FORMAT_VERSION:?}")]
    FormatVersionMismatch { found: String },
    #[error("record {record}: {reason}")]
    MalformedRecord { record: usize, reason: String },
    #[error("malformed catalog header: {0}")]
    MalformedHeader(String),
}

impl CatalogError {
    pub fn name(&self) -> &'static str {
        match self {
            CatalogError::FormatVersionMismatch { .. } => "FormatVersionMismatch",
            CatalogError::MalformedRecord { .. } => "MalformedRecord",
            CatalogError::MalformedHeader(_) => "MalformedHeader",
        }
    }
}

#[derive(Serialize, Deserialize)]
struct FileQuery {
    kind: String,
    orientable: bool,
    genus: u32,
}

#[derive(Serialize, Deserialize)]
struct Record {
    kind: String,
    orientable: bool,
    genus: u32,
    code: String,
    chord_count: usize,
    polarity: Option<String>,
    self_reverse: bool,
    reverse_partner: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct File {
    format: String,
    query: FileQuery,
    records: Vec<Record>,
}

fn polarity_name(p: Polarity) -> &'static str {
    match p {
        Polarity::Source => "source",
        Polarity::Sink => "sink",
    }
}

fn to_record(e: &CatalogEntry) -> Record {
    Record {
        kind: e.kind().as_str().to_string(),
        orientable: e.surface.is_orientable(),
        genus: e.surface.genus(),
        code: e.code.to_string(),
        chord_count: e.chord_count,
        polarity: e.polarity.map(|p| polarity_name(p).to_string()),
        self_reverse: e.self_reverse,
        reverse_partner: e.reverse_partner.as_ref().map(|c| c.to_string()),
    }
}

fn from_record(index: usize, r: Record) -> Result<CatalogEntry, CatalogError> {
    let bad = |reason: String| CatalogError::MalformedRecord { record: index, reason };
    let kind = CodeKind::from_name(&r.kind).ok_or_else(|| bad(format!("unknown kind {:?}", r.kind)))?;
    let surface = SurfaceClass::new(r.orientable, r.genus).map_err(|e| bad(e.to_string()))?;
    let code = DiagramCode::parse(kind, &r.code).map_err(|e| bad(format!("code {:?}: {}", r.code, e)))?;
    let polarity = match r.polarity.as_deref() {
        None => None,
        Some("source") => Some(Polarity::Source),
        Some("sink") => Some(Polarity::Sink),
        Some(other) => return Err(bad(format!("unknown polarity {other:?}"))),
    };
    let reverse_partner = r
        .reverse_partner
        .map(|p| DiagramCode::parse(kind, &p).map_err(|e| bad(format!("partner {p:?}: {e}"))))
        .transpose()?;
    if code.chord_count() != r.chord_count {
        return Err(bad(format!("chord count {} does not match code", r.chord_count)));
    }
    Ok(CatalogEntry {
        code,
        surface,
        chord_count: r.chord_count,
        polarity,
        self_reverse: r.self_reverse,
        reverse_partner,
    })
}

fn query_of(q: &FileQuery) -> Result<EnumerationQuery, CatalogError> {
    let kind = CodeKind::from_name(&q.kind)
        .ok_or_else(|| CatalogError::MalformedHeader(format!("unknown kind {:?}", q.kind)))?;
    EnumerationQuery::new(kind, q.orientable, q.genus).map_err(|e| CatalogError::MalformedHeader(e.to_string()))
}

fn file_query(q: &EnumerationQuery) -> FileQuery {
    FileQuery {
        kind: q.kind.as_str().to_string(),
        orientable: q.surface.is_orientable(),
        genus: q.surface.genus(),
    }
}

pub fn write_catalog(catalog: &Catalog, format: Format) -> Vec<u8> {
    let mut entries = catalog.entries.clone();
    sort_entries(&mut entries);
    match format {
        Format::Json => {
            let file = File {
                format: FORMAT_VERSION.to_string(),
                query: file_query(&catalog.query),
                records: entries.iter().map(to_record).collect(),
            };
            let mut out = serde_json::to_vec_pretty(&file).expect("catalog serializes");
            out.push(b'\n');
            out
        }
        Format::Table => {
            let q = &catalog.query;
            let mut s = String::new();
            let _ = writeln!(
                s,
                "# {} {} {} {}",
                FORMAT_VERSION,
                q.kind.as_str(),
                if q.surface.is_orientable() {
                    "orientable"
                } else {
                    "nonorientable"
                },
                q.surface.genus()
            );
            s.push_str("code\tkind\tsurface\tchords\tpolarity\tself_reverse\treverse_partner\n");
            for r in entries.iter().map(to_record) {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}{}\t{}\t{}\t{}\t{}",
                    r.code,
                    r.kind,
                    if r.orientable { "O" } else { "N" },
                    r.genus,
                    r.chord_count,
                    r.polarity.as_deref().unwrap_or("-"),
                    if r.self_reverse { "yes" } else { "no" },
                    r.reverse_partner.as_deref().unwrap_or("-"),
                );
            }
            s.into_bytes()
        }
    }
}

pub fn read_catalog(bytes: &[u8]) -> Result<Catalog, CatalogError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CatalogError::MalformedHeader(e.to_string()))?;
    if text.trim_start().starts_with('{') {
        read_json(text)
    } else {
        read_table(text)
    }
}

fn read_json(text: &str) -> Result<Catalog, CatalogError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CatalogError::MalformedHeader(e.to_string()))?;
    match value.get("format").and_then(|f| f.as_str()) {
        Some(FORMAT_VERSION) => {}
        Some(other) => {
            return Err(CatalogError::FormatVersionMismatch {
                found: other.to_string(),
            })
        }
        None => return Err(CatalogError::MalformedHeader("missing format".into())),
    }
    let query: FileQuery = value
        .get("query")
        .cloned()
        .ok_or_else(|| CatalogError::MalformedHeader("missing query".into()))
        .and_then(|q| serde_json::from_value(q).map_err(|e| CatalogError::MalformedHeader(e.to_string())))?;
    let records = value
        .get("records")
        .and_then(|r| r.as_array())
        .ok_or_else(|| CatalogError::MalformedHeader("missing records".into()))?;
    let mut entries = Vec::with_capacity(records.len());
    for (i, r) in records.iter().enumerate() {
        let r: Record = serde_json::from_value(r.clone()).map_err(|e| CatalogError::MalformedRecord {
            record: i,
            reason: e.to_string(),
        })?;
        entries.push(from_record(i, r)?);
    }
    finish(query_of(&query)?, entries)
}

fn read_table(text: &str) -> Result<Catalog, CatalogError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CatalogError::MalformedHeader("empty file".into()))?;
    let fields: Vec<&str> = header.trim_start_matches('#').split_whitespace().collect();
    if !header.starts_with('#') || fields.len() != 4 {
        return Err(CatalogError::MalformedHeader(header.to_string()));
    }
    if fields[0] != FORMAT_VERSION {
        return Err(CatalogError::FormatVersionMismatch {
            found: fields[0].to_string(),
        });
    }
    let orientable = match fields[2] {
        "orientable" => true,
        "nonorientable" => false,
        other => return Err(CatalogError::MalformedHeader(format!("unknown surface {other:?}"))),
    };
    let genus = fields[3]
        .parse()
        .map_err(|_| CatalogError::MalformedHeader(header.to_string()))?;
    let query = query_of(&FileQuery {
        kind: fields[1].to_string(),
        orientable,
        genus,
    })?;
    lines.next();
    let mut entries = Vec::new();
    for (i, line) in lines.filter(|l| !l.trim().is_empty()).enumerate() {
        let bad = |reason: &str| CatalogError::MalformedRecord {
            record: i,
            reason: reason.to_string(),
        };
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 7 {
            return Err(bad("expected 7 columns"));
        }
        let (o, g) = cols[2].split_at(cols[2].len().min(1));
        let optional = |s: &str| (s != "-").then(|| s.to_string());
        let record = Record {
            code: cols[0].to_string(),
            kind: cols[1].to_string(),
            orientable: match o {
                "O" => true,
                "N" => false,
                _ => return Err(bad("surface column")),
            },
            genus: g.parse().map_err(|_| bad("surface column"))?,
            chord_count: cols[3].parse().map_err(|_| bad("chord count"))?,
            polarity: optional(cols[4]),
            self_reverse: match cols[5] {
                "yes" => true,
                "no" => false,
                _ => return Err(bad("self_reverse column")),
            },
            reverse_partner: optional(cols[6]),
        };
        entries.push(from_record(i, record)?);
    }
    finish(query, entries)
}

fn finish(query: EnumerationQuery, mut entries: Vec<CatalogEntry>) -> Result<Catalog, CatalogError> {
    for (i, e) in entries.iter().enumerate() {
        if e.kind() != query.kind || e.surface != query.surface {
            return Err(CatalogError::MalformedRecord {
                record: i,
                reason: "record does not match the catalog query".into(),
            });
        }
    }
    sort_entries(&mut entries);
    Ok(Catalog { query, entries })
}

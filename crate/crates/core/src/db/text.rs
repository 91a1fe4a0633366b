//! Pipe-delimited table format.
//!
//! ```text
//! # id|rank|status_kind|value_or_dash|provenance
//! 2.36|2|exact_all|1/5|exact; toric projectivized bundle formula
//! 2.6|2|unknown|-|no bound beyond lct <= 1
//! @note 2.36 P(O + O(2)) over P2
//! @fan 2.36
//! 1,0,0
//! ...
//! ```
//!
//! Table lines come first, then `@note` lines, then one `@fan` block per
//! toric family in the fan text format. `#` lines and blank lines outside fan
//! blocks are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{Database, DbError, FamilyId, FamilyRecord, LctStatus, StatusKind};
use crate::parse_rational;
use crate::toric::FanFile;

const HEADER: &str = "# id|rank|status_kind|value_or_dash|provenance";

pub fn export(db: &Database) -> String {
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    for r in db.records() {
        let value = r.status.value().map_or_else(|| "-".to_string(), ToString::to_string);
        writeln!(out, "{}|{}|{}|{}|{}", r.id, r.picard_rank, r.status.kind(), value, r.provenance).unwrap();
    }
    for r in db.records() {
        if let Some(note) = &r.notes {
            writeln!(out, "@note {} {}", r.id, note).unwrap();
        }
    }
    for r in db.records() {
        if let Some(fan) = &r.fan {
            writeln!(out, "@fan {}", r.id).unwrap();
            out.push_str(&FanFile::new(fan.clone()).to_text());
        }
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> DbError {
    DbError::ParseError { line, message: message.into() }
}

fn parse_id(line: usize, text: &str) -> Result<FamilyId, DbError> {
    text.parse().map_err(|_| parse_error(line, format!("invalid family id `{text}`")))
}

fn parse_record(line: usize, text: &str) -> Result<FamilyRecord, DbError> {
    let fields: Vec<&str> = text.split('|').collect();
    let [id, rank, kind, value, provenance] = fields[..] else {
        return Err(parse_error(line, format!("expected 5 `|`-separated fields, found {}", fields.len())));
    };
    let id = parse_id(line, id)?;
    let rank: u8 = rank
        .parse()
        .map_err(|_| parse_error(line, format!("invalid rank `{rank}`")))?;
    if rank != id.rank() {
        return Err(parse_error(line, format!("rank {rank} does not match id {id}")));
    }
    let kind: StatusKind = kind.parse().map_err(|m: String| parse_error(line, m))?;
    let value = match value {
        "-" => None,
        v => Some(parse_rational(v).ok_or_else(|| parse_error(line, format!("invalid value `{v}`")))?),
    };
    let status = LctStatus::from_parts(kind, value).map_err(|m| parse_error(line, m))?;
    Ok(FamilyRecord {
        id,
        picard_rank: rank,
        status,
        provenance: provenance.to_string(),
        fan: None,
        notes: None,
    })
}

pub fn import(text: &str) -> Result<Database, DbError> {
    let mut records: BTreeMap<FamilyId, FamilyRecord> = BTreeMap::new();
    // (header line, id, body lines)
    let mut fan_blocks: Vec<(usize, FamilyId, String)> = Vec::new();
    let mut notes: Vec<(usize, FamilyId, String)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if let Some(rest) = raw.strip_prefix("@fan ") {
            fan_blocks.push((line, parse_id(line, rest.trim())?, String::new()));
            continue;
        }
        if let Some(rest) = raw.strip_prefix("@note ") {
            let (id, note) = rest.split_once(' ').unwrap_or((rest, ""));
            notes.push((line, parse_id(line, id)?, note.to_string()));
            continue;
        }
        if raw.starts_with('@') {
            return Err(parse_error(line, format!("unknown directive `{raw}`")));
        }
        if let Some((_, _, body)) = fan_blocks.last_mut() {
            body.push_str(raw);
            body.push('\n');
            continue;
        }
        if raw.trim().is_empty() || raw.starts_with('#') {
            continue;
        }
        if !notes.is_empty() {
            return Err(parse_error(line, "table lines must precede @note lines"));
        }
        let record = parse_record(line, raw)?;
        if records.insert(record.id, record).is_some() {
            return Err(parse_error(line, "duplicate family id"));
        }
    }

    for (line, id, note) in notes {
        let rec = records
            .get_mut(&id)
            .ok_or_else(|| parse_error(line, format!("note for {id}, which has no table line")))?;
        if rec.notes.replace(note).is_some() {
            return Err(parse_error(line, format!("second note for {id}")));
        }
    }
    for (line, id, body) in fan_blocks {
        let fan = FanFile::parse(&body).map_err(|e| parse_error(line + e.line, e.message))?;
        if !fan.group.is_empty() {
            return Err(parse_error(line, format!("fan block for {id} carries group elements")));
        }
        let rec = records
            .get_mut(&id)
            .ok_or_else(|| parse_error(line, format!("fan for {id}, which has no table line")))?;
        if rec.fan.replace(fan.rays).is_some() {
            return Err(parse_error(line, format!("second fan for {id}")));
        }
    }
    Database::new(records.into_values().collect())
}

//! Global log canonical thresholds of the 105 deformation families of smooth
//! Fano threefolds.
//!
//! Each family is labelled `r.n` (Picard rank `r`, index `n` in the
//! Mori–Mukai ordering). Toric families carry their fan so the stored value
//! can be recomputed with [`cross_check_toric`].

mod builtin;
mod text;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::toric::{toric_lct, RaySet, ToricError, ToricLctReport};
use crate::Rational;

pub use text::{export, import};

/// Number of families per Picard rank `1..=5`.
pub const FAMILIES_PER_RANK: [u8; 5] = [17, 36, 31, 13, 8];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DbError {
    #[error("invalid family id `{0}`")]
    InvalidId(String),
    #[error("family {0} is not in the database")]
    MissingRecord(FamilyId),
    #[error("duplicate record for family {0}")]
    DuplicateRecord(FamilyId),
    #[error("line {line}: {message}")]
    ParseError { line: usize, message: String },
}

impl DbError {
    pub fn name(&self) -> &'static str {
        match self {
            DbError::InvalidId(_) => "InvalidId",
            DbError::MissingRecord(_) => "MissingRecord",
            DbError::DuplicateRecord(_) => "DuplicateRecord",
            DbError::ParseError { .. } => "ParseError",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId {
    rank: u8,
    index: u8,
}

impl FamilyId {
    pub fn new(rank: u8, index: u8) -> Result<Self, DbError> {
        let valid = (1..=5).contains(&rank) && index >= 1 && index <= FAMILIES_PER_RANK[rank as usize - 1];
        if !valid {
            return Err(DbError::InvalidId(format!("{rank}.{index}")));
        }
        Ok(FamilyId { rank, index })
    }

    pub fn rank(self) -> u8 {
        self.rank
    }

    pub fn index(self) -> u8 {
        self.index
    }

    /// All 105 ids in order.
    pub fn all() -> impl Iterator<Item = FamilyId> {
        (1u8..=5).flat_map(|rank| (1..=FAMILIES_PER_RANK[rank as usize - 1]).map(move |index| FamilyId { rank, index }))
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.rank, self.index)
    }
}

impl FromStr for FamilyId {
    type Err = DbError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let invalid = || DbError::InvalidId(s.to_string());
        let (r, n) = s.trim().split_once('.').ok_or_else(invalid)?;
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(r) || !digits(n) {
            return Err(invalid());
        }
        let rank = r.parse().map_err(|_| invalid())?;
        let index = n.parse().map_err(|_| invalid())?;
        FamilyId::new(rank, index).map_err(|_| invalid())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LctStatus {
    /// Exact for every member of the family.
    ExactAll(Rational),
    /// Exact for a general member.
    ExactGeneral(Rational),
    /// Only `lct ≤ value` is known.
    UpperBound(Rational),
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatusKind {
    ExactAll,
    ExactGeneral,
    UpperBound,
    Unknown,
}

impl StatusKind {
    pub const ALL: [StatusKind; 4] = [
        StatusKind::ExactAll,
        StatusKind::ExactGeneral,
        StatusKind::UpperBound,
        StatusKind::Unknown,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StatusKind::ExactAll => "exact_all",
            StatusKind::ExactGeneral => "exact_general",
            StatusKind::UpperBound => "upper_bound",
            StatusKind::Unknown => "unknown",
        }
    }
}

impl FromStr for StatusKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatusKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown status kind `{s}`"))
    }
}

impl fmt::Display for StatusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl LctStatus {
    pub fn kind(&self) -> StatusKind {
        match self {
            LctStatus::ExactAll(_) => StatusKind::ExactAll,
            LctStatus::ExactGeneral(_) => StatusKind::ExactGeneral,
            LctStatus::UpperBound(_) => StatusKind::UpperBound,
            LctStatus::Unknown => StatusKind::Unknown,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LctStatus::ExactAll(v) | LctStatus::ExactGeneral(v) | LctStatus::UpperBound(v) => Some(v),
            LctStatus::Unknown => None,
        }
    }

    /// Builds a status, checking that a value is present exactly when the
    /// kind needs one and that it lies in `(0, 1]`.
    pub fn from_parts(kind: StatusKind, value: Option<Rational>) -> Result<Self, String> {
        if let Some(v) = &value {
            if *v <= Rational::zero() || *v > Rational::one() {
                return Err(format!("value {v} outside (0, 1]"));
            }
        }
        match (kind, value) {
            (StatusKind::Unknown, None) => Ok(LctStatus::Unknown),
            (StatusKind::Unknown, Some(_)) => Err("unknown status carries no value".into()),
            (_, None) => Err(format!("status {kind} needs a value")),
            (StatusKind::ExactAll, Some(v)) => Ok(LctStatus::ExactAll(v)),
            (StatusKind::ExactGeneral, Some(v)) => Ok(LctStatus::ExactGeneral(v)),
            (StatusKind::UpperBound, Some(v)) => Ok(LctStatus::UpperBound(v)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRecord {
    pub id: FamilyId,
    pub picard_rank: u8,
    pub status: LctStatus,
    pub provenance: String,
    pub fan: Option<RaySet>,
    pub notes: Option<String>,
}

/// Immutable collection of records, sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Database {
    records: Vec<FamilyRecord>,
}

impl Database {
    pub fn new(mut records: Vec<FamilyRecord>) -> Result<Self, DbError> {
        records.sort_by_key(|r| r.id);
        if let Some(pair) = records.windows(2).find(|p| p[0].id == p[1].id) {
            return Err(DbError::DuplicateRecord(pair[0].id));
        }
        Ok(Database { records })
    }

    pub fn records(&self) -> &[FamilyRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Copy of the database with every fan removed.
    pub fn without_fans(&self) -> Self {
        Database {
            records: self
                .records
                .iter()
                .map(|r| FamilyRecord { fan: None, ..r.clone() })
                .collect(),
        }
    }

    /// Replaces (or attaches) the fan of one family.
    pub fn with_fan(&self, id: FamilyId, fan: Option<RaySet>) -> Result<Self, DbError> {
        let mut records = self.records.clone();
        let rec = records
            .iter_mut()
            .find(|r| r.id == id)
            .ok_or(DbError::MissingRecord(id))?;
        rec.fan = fan;
        Ok(Database { records })
    }

    /// Counts in the order exact_all, exact_general, upper_bound, unknown.
    pub fn status_counts(&self) -> [usize; 4] {
        let mut counts = [0; 4];
        for r in &self.records {
            counts[StatusKind::ALL.iter().position(|&k| k == r.status.kind()).unwrap()] += 1;
        }
        counts
    }

    /// Record counts for Picard ranks 1 through 5.
    pub fn rank_partition(&self) -> [usize; 5] {
        let mut counts = [0; 5];
        for r in &self.records {
            counts[r.id.rank() as usize - 1] += 1;
        }
        counts
    }
}

pub fn load_builtin() -> Database {
    Database::new(builtin::records()).expect("builtin ids are unique")
}

pub fn lookup<'a>(db: &'a Database, id: &str) -> Result<&'a FamilyRecord, DbError> {
    let id: FamilyId = id.parse()?;
    db.records
        .binary_search_by_key(&id, |r| r.id)
        .map(|i| &db.records[i])
        .map_err(|_| DbError::MissingRecord(id))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Query {
    pub rank: Option<u8>,
    pub status_kind: Option<StatusKind>,
    pub value: Option<Rational>,
}

/// Records matching every field that is set, in id order.
pub fn query<'a>(db: &'a Database, filter: &Query) -> Vec<&'a FamilyRecord> {
    db.records
        .iter()
        .filter(|r| filter.rank.map_or(true, |k| r.picard_rank == k))
        .filter(|r| filter.status_kind.map_or(true, |k| r.status.kind() == k))
        .filter(|r| filter.value.as_ref().map_or(true, |v| r.status.value() == Some(v)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckEntry {
    pub id: FamilyId,
    pub expected: Option<Rational>,
    pub computed: Result<ToricLctReport, ToricError>,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub entries: Vec<CrossCheckEntry>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CrossCheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

/// Recomputes every stored fan with the toric engine and compares it with
/// the stored exact value. A fan attached to a family whose status is not
/// `ExactAll` always fails.
pub fn cross_check_toric(db: &Database) -> CrossCheckReport {
    let entries = db
        .records
        .iter()
        .filter_map(|r| {
            let fan = r.fan.as_ref()?;
            let expected = match &r.status {
                LctStatus::ExactAll(v) => Some(v.clone()),
                _ => None,
            };
            let computed = toric_lct(fan, None);
            let passed = matches!((&computed, &expected), (Ok(rep), Some(v)) if rep.lct == *v);
            Some(CrossCheckEntry { id: r.id, expected, computed, passed })
        })
        .collect();
    CrossCheckReport { entries }
}

//! The prime knot table and base prime factor lists.
//!
//! Table files are UTF-8 with one tab-separated record per line:
//! `name, crossing_number, table_index, symmetry, pd_code`. Lines starting with
//! `#` and blank lines are skipped.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use thiserror::Error;

use crate::gamma::{SymmetrySubgroup, SymmetryType};
use crate::pdcode::{PdCode, PdError};

const BUNDLED_PRIMES: &str = include_str!("../../../data/primes9.tsv");

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Row { line: usize, message: String },
    #[error("line {line}: {source}")]
    Diagram {
        line: usize,
        #[source]
        source: PdError,
    },
    #[error("line {line}: duplicate knot name `{name}`")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: duplicate table position {crossing_number}_{table_index}")]
    DuplicatePosition {
        line: usize,
        crossing_number: u32,
        table_index: u32,
    },
    #[error("unknown knot `{0}`")]
    UnknownKnot(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorListError {
    #[error("a factor list needs at least two factors, got {0}")]
    TooFewFactors(usize),
    #[error("multiplicity of `{0}` must be positive")]
    ZeroMultiplicity(String),
    #[error("factors must be strictly increasing in base order: `{0}` follows `{1}`")]
    NotIncreasing(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeKnotRecord {
    pub name: String,
    pub crossing_number: u32,
    pub table_index: u32,
    pub symmetry: SymmetryType,
    pub diagram: PdCode,
}

impl PrimeKnotRecord {
    /// Position in the base-type order.
    pub fn base_key(&self) -> (u32, u32) {
        (self.crossing_number, self.table_index)
    }

    pub fn subgroup(&self) -> SymmetrySubgroup {
        self.symmetry.subgroup()
    }
}

/// An immutable, name-indexed prime knot table.
#[derive(Clone, Debug, Default)]
pub struct PrimeTable {
    records: Vec<Arc<PrimeKnotRecord>>,
    by_name: HashMap<String, usize>,
}

impl PrimeTable {
    /// Reads and validates a table file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, TableError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::parse(&text)
    }

    /// The prime knots through 9 crossings that ship with this crate.
    pub fn bundled() -> Self {
        Self::parse(BUNDLED_PRIMES).expect("bundled prime table is valid")
    }

    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            if raw.starts_with('#') || raw.trim().is_empty() {
                continue;
            }
            rows.push((line, parse_row(line, raw)?));
        }
        Self::from_records_at(rows)
    }

    /// Builds a table from in-memory records, applying the same uniqueness checks
    /// as [`PrimeTable::parse`]. Reported line numbers are 1-based positions in
    /// `records`.
    pub fn from_records(records: Vec<PrimeKnotRecord>) -> Result<Self, TableError> {
        Self::from_records_at(records.into_iter().enumerate().map(|(i, r)| (i + 1, r)).collect())
    }

    fn from_records_at(mut rows: Vec<(usize, PrimeKnotRecord)>) -> Result<Self, TableError> {
        let mut positions = HashMap::new();
        let mut names = HashMap::new();
        for (line, rec) in &rows {
            if names.insert(rec.name.clone(), *line).is_some() {
                return Err(TableError::DuplicateName {
                    line: *line,
                    name: rec.name.clone(),
                });
            }
            if positions.insert(rec.base_key(), *line).is_some() {
                return Err(TableError::DuplicatePosition {
                    line: *line,
                    crossing_number: rec.crossing_number,
                    table_index: rec.table_index,
                });
            }
        }
        rows.sort_by_key(|(_, r)| r.base_key());
        let records: Vec<_> = rows.into_iter().map(|(_, r)| Arc::new(r)).collect();
        let by_name = records
            .iter()
            .enumerate()
            .map(|(i, r)| (r.name.clone(), i))
            .collect();
        Ok(Self { records, by_name })
    }

    /// Records in base-type order.
    pub fn records(&self) -> &[Arc<PrimeKnotRecord>] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Arc<PrimeKnotRecord>> {
        self.by_name.get(name).map(|&i| &self.records[i])
    }

    pub fn lookup(&self, name: &str) -> Result<&Arc<PrimeKnotRecord>, TableError> {
        self.get(name)
            .ok_or_else(|| TableError::UnknownKnot(name.to_owned()))
    }
}

fn parse_row(line: usize, raw: &str) -> Result<PrimeKnotRecord, TableError> {
    let row_err = |message: String| TableError::Row { line, message };
    let fields: Vec<&str> = raw.split('\t').collect();
    let [name, crossings, index, symmetry, code] = fields[..] else {
        return Err(row_err(format!("expected 5 tab-separated fields, found {}", fields.len())));
    };
    if name.is_empty() {
        return Err(row_err("empty knot name".into()));
    }
    let positive = |field: &str, what: &str| -> Result<u32, TableError> {
        match field.parse::<u32>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(row_err(format!("{what} must be a positive integer, got `{field}`"))),
        }
    };
    let crossing_number = positive(crossings, "crossing number")?;
    let table_index = positive(index, "table index")?;
    let symmetry = symmetry
        .parse::<SymmetryType>()
        .map_err(|e| row_err(e.to_string()))?;
    let diagram: PdCode = code
        .parse()
        .map_err(|source| TableError::Diagram { line, source })?;
    if diagram.crossing_count() != crossing_number as usize {
        return Err(row_err(format!(
            "diagram has {} crossings but the crossing number is {crossing_number}",
            diagram.crossing_count()
        )));
    }
    Ok(PrimeKnotRecord {
        name: name.to_owned(),
        crossing_number,
        table_index,
        symmetry,
        diagram,
    })
}

#[derive(Clone, Debug)]
pub struct FactorEntry {
    pub record: Arc<PrimeKnotRecord>,
    pub multiplicity: usize,
}

/// A base prime factor list: distinct base types with multiplicities, in base
/// order, with at least two factors in total.
#[derive(Clone, Debug)]
pub struct FactorList {
    entries: Vec<FactorEntry>,
}

impl FactorList {
    pub fn new(entries: Vec<FactorEntry>) -> Result<Self, FactorListError> {
        for e in &entries {
            if e.multiplicity == 0 {
                return Err(FactorListError::ZeroMultiplicity(e.record.name.clone()));
            }
        }
        for pair in entries.windows(2) {
            if pair[0].record.base_key() >= pair[1].record.base_key() {
                return Err(FactorListError::NotIncreasing(
                    pair[1].record.name.clone(),
                    pair[0].record.name.clone(),
                ));
            }
        }
        let n: usize = entries.iter().map(|e| e.multiplicity).sum();
        if n < 2 {
            return Err(FactorListError::TooFewFactors(n));
        }
        Ok(Self { entries })
    }

    /// Convenience constructor from `(record, multiplicity)` pairs.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, FactorListError>
    where
        I: IntoIterator<Item = (Arc<PrimeKnotRecord>, usize)>,
    {
        Self::new(
            pairs
                .into_iter()
                .map(|(record, multiplicity)| FactorEntry {
                    record,
                    multiplicity,
                })
                .collect(),
        )
    }

    /// Groups a list of prime factors (repeats allowed, any order) into a factor list.
    pub fn from_factors<I>(factors: I) -> Result<Self, FactorListError>
    where
        I: IntoIterator<Item = Arc<PrimeKnotRecord>>,
    {
        let mut all: Vec<_> = factors.into_iter().collect();
        all.sort_by_key(|r| r.base_key());
        let mut entries: Vec<FactorEntry> = Vec::new();
        for record in all {
            match entries.last_mut() {
                Some(last) if last.record.base_key() == record.base_key() => last.multiplicity += 1,
                _ => entries.push(FactorEntry {
                    record,
                    multiplicity: 1,
                }),
            }
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[FactorEntry] {
        &self.entries
    }

    /// Block sizes `n_i`.
    pub fn multiplicities(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|e| e.multiplicity)
    }

    /// Total number of prime factors `N`.
    pub fn factor_count(&self) -> usize {
        self.multiplicities().sum()
    }

    /// Sum of factor crossing numbers, counted with multiplicity.
    pub fn total_crossings(&self) -> u32 {
        self.entries
            .iter()
            .map(|e| e.record.crossing_number * e.multiplicity as u32)
            .sum()
    }

    fn sort_key(&self) -> impl Iterator<Item = ((u32, u32), usize)> + '_ {
        self.entries
            .iter()
            .map(|e| (e.record.base_key(), e.multiplicity))
    }
}

impl PartialEq for FactorList {
    fn eq(&self, other: &Self) -> bool {
        self.sort_key().eq(other.sort_key())
    }
}

impl Eq for FactorList {}

impl PartialOrd for FactorList {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by total crossings, then lexicographically by entries.
impl Ord for FactorList {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_crossings()
            .cmp(&other.total_crossings())
            .then_with(|| self.sort_key().cmp(other.sort_key()))
    }
}

impl fmt::Display for FactorList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}^{}", e.record.name, e.multiplicity)?;
        }
        Ok(())
    }
}

/// Every factor list of at least two factors from `table` whose crossing numbers
/// sum to at most `max_crossings`, in [`FactorList`] order.
pub fn enumerate_factor_lists(table: &PrimeTable, max_crossings: u32) -> Vec<FactorList> {
    fn extend(
        records: &[Arc<PrimeKnotRecord>],
        start: usize,
        budget: u32,
        current: &mut Vec<FactorEntry>,
        out: &mut Vec<FactorList>,
    ) {
        for (i, record) in records.iter().enumerate().skip(start) {
            let c = record.crossing_number;
            if c > budget {
                // records are sorted by crossing number
                break;
            }
            for multiplicity in 1..=(budget / c) as usize {
                current.push(FactorEntry {
                    record: record.clone(),
                    multiplicity,
                });
                if let Ok(list) = FactorList::new(current.clone()) {
                    out.push(list);
                }
                extend(records, i + 1, budget - c * multiplicity as u32, current, out);
                current.pop();
            }
        }
    }

    let mut out = Vec::new();
    extend(table.records(), 0, max_crossings, &mut Vec::new(), &mut out);
    out.sort();
    out
}

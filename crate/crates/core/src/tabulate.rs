//! Composite knot tables: one row per composite, flavor-decorated names,
//! symmetry censuses and CSV/JSON output.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use serde::Serialize;
use thiserror::Error;

use crate::gamma::SymmetryType;
use crate::orbit::{classify, FlavorVector};
use crate::pdcode::{connected_sum_list, PdCode, PdError};
use crate::prime_table::{enumerate_factor_lists, FactorList, PrimeTable};

#[derive(Debug, Error)]
pub enum OutputError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Diagram(#[from] PdError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub composite_name: String,
    pub crossing_number: u32,
    pub factors: FactorList,
    pub representative: FlavorVector,
    pub symmetry: SymmetryType,
    pub orbit_size: u64,
}

impl TableRow {
    /// Base diagrams of every slot with the slot's flavor applied, in order.
    pub fn flavored_diagrams(&self) -> Vec<PdCode> {
        self.factors
            .entries()
            .iter()
            .zip(self.representative.blocks())
            .flat_map(|(entry, block)| {
                block
                    .iter()
                    .map(move |g| entry.record.diagram.apply_gamma(*g))
            })
            .collect()
    }

    /// A diagram of this composite: the connected sum of the flavored factor
    /// diagrams in slot order.
    pub fn composite_pdcode(&self) -> Result<PdCode, PdError> {
        connected_sum_list(&self.flavored_diagrams())
    }
}

/// `"3_1 # 3_1m"`: slot names in factor order, each suffixed by its flavor.
pub fn composite_name(factors: &FactorList, representative: &FlavorVector) -> String {
    factors
        .entries()
        .iter()
        .zip(representative.blocks())
        .flat_map(|(entry, block)| {
            block
                .iter()
                .map(move |g| format!("{}{}", entry.record.name, g.suffix()))
        })
        .collect::<Vec<_>>()
        .join(" # ")
}

/// All composites of at least two prime factors from `table` whose factor
/// crossing numbers sum to at most `max_crossings`.
pub fn tabulate(table: &PrimeTable, max_crossings: u32) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = enumerate_factor_lists(table, max_crossings)
        .into_iter()
        .flat_map(|factors| classify(&factors))
        .map(|class| TableRow {
            composite_name: composite_name(&class.factors, &class.representative),
            crossing_number: class.factors.total_crossings(),
            symmetry: class
                .symmetry
                .expect("classify fills the symmetry group")
                .symmetry_type(),
            orbit_size: class.orbit_size,
            factors: class.factors,
            representative: class.representative,
        })
        .collect();
    rows.sort_by(|a, b| {
        (a.crossing_number, &a.factors, &a.representative).cmp(&(
            b.crossing_number,
            &b.factors,
            &b.representative,
        ))
    });
    rows
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub by_type: BTreeMap<SymmetryType, usize>,
    pub by_crossing_and_type: BTreeMap<(u32, SymmetryType), usize>,
    pub total: usize,
}

impl Census {
    pub fn count(&self, kind: SymmetryType) -> usize {
        self.by_type.get(&kind).copied().unwrap_or(0)
    }

    pub fn count_at(&self, crossings: u32, kind: SymmetryType) -> usize {
        self.by_crossing_and_type
            .get(&(crossings, kind))
            .copied()
            .unwrap_or(0)
    }

    /// Counts for one crossing number in [`SymmetryType::ALL`] order.
    pub fn row(&self, crossings: u32) -> [usize; 5] {
        SymmetryType::ALL.map(|k| self.count_at(crossings, k))
    }

    pub fn crossing_numbers(&self) -> Vec<u32> {
        let mut cs: Vec<u32> = self.by_crossing_and_type.keys().map(|(c, _)| *c).collect();
        cs.dedup();
        cs
    }
}

pub fn census(rows: &[TableRow]) -> Census {
    let mut by_type: BTreeMap<SymmetryType, usize> =
        SymmetryType::ALL.into_iter().map(|k| (k, 0)).collect();
    let mut by_crossing_and_type = BTreeMap::new();
    for row in rows {
        *by_type.entry(row.symmetry).or_default() += 1;
        *by_crossing_and_type
            .entry((row.crossing_number, row.symmetry))
            .or_default() += 1;
    }
    Census {
        by_type,
        by_crossing_and_type,
        total: rows.len(),
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header: Vec<&str> = SymmetryType::ALL.iter().map(|k| k.token()).collect();
        writeln!(f, "symmetry\tcount")?;
        for kind in SymmetryType::ALL {
            writeln!(f, "{kind}\t{}", self.count(kind))?;
        }
        writeln!(f, "total\t{}", self.total)?;
        writeln!(f)?;
        writeln!(f, "crossings\t{}", header.join("\t"))?;
        for c in self.crossing_numbers() {
            let counts: Vec<String> = self.row(c).iter().map(usize::to_string).collect();
            writeln!(f, "{c}\t{}", counts.join("\t"))?;
        }
        Ok(())
    }
}

pub const CSV_HEADER: [&str; 7] = [
    "name",
    "crossings",
    "factors",
    "flavors",
    "symmetry",
    "orbit_size",
    "pdcode",
];

#[derive(Serialize)]
struct RowRecord {
    name: String,
    crossings: u32,
    factors: String,
    flavors: String,
    symmetry: SymmetryType,
    orbit_size: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pdcode: Option<String>,
}

fn records(rows: &[TableRow], include_pdcodes: bool) -> Result<Vec<RowRecord>, PdError> {
    rows.iter()
        .map(|row| {
            let pdcode = if include_pdcodes {
                Some(row.composite_pdcode()?.to_string())
            } else {
                None
            };
            Ok(RowRecord {
                name: row.composite_name.clone(),
                crossings: row.crossing_number,
                factors: row.factors.to_string(),
                flavors: row.representative.to_string(),
                symmetry: row.symmetry,
                orbit_size: row.orbit_size,
                pdcode,
            })
        })
        .collect()
}

/// Writes rows as CSV. The `pdcode` column is present only when requested.
pub fn write_csv<W: Write>(
    rows: &[TableRow],
    include_pdcodes: bool,
    out: W,
) -> Result<(), OutputError> {
    let mut writer = csv::Writer::from_writer(out);
    let width = if include_pdcodes { 7 } else { 6 };
    writer.write_record(&CSV_HEADER[..width])?;
    for r in records(rows, include_pdcodes)? {
        let mut fields = vec![
            r.name,
            r.crossings.to_string(),
            r.factors,
            r.flavors,
            r.symmetry.to_string(),
            r.orbit_size.to_string(),
        ];
        fields.extend(r.pdcode);
        writer.write_record(&fields)?;
    }
    writer.flush()?;
    Ok(())
}

/// Writes rows as a pretty-printed JSON array of objects.
pub fn write_json<W: Write>(
    rows: &[TableRow],
    include_pdcodes: bool,
    mut out: W,
) -> Result<(), OutputError> {
    serde_json::to_writer_pretty(&mut out, &records(rows, include_pdcodes)?)?;
    writeln!(out)?;
    Ok(())
}

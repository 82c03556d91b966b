//! OEIS b-file ingestion and term-by-term comparison.
//!
//! A b-file lists one term per line as `<index> <value>`. Lines starting with
//! `#` and blank lines are ignored. Indices must be consecutive.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OeisError {
    #[error("line {0}: expected \"<index> <value>\"")]
    MalformedLine(usize),
    #[error("line {0}: index does not follow the previous one")]
    NonContiguousIndex(usize),
    #[error("table does not cover indices {start}..={end}")]
    RangeNotCovered { start: i64, end: i64 },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SequenceTable {
    pub entries: BTreeMap<i64, BigInt>,
    pub source_name: String,
}

impl SequenceTable {
    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.entries.get(&index)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first_index(&self) -> Option<i64> {
        self.entries.keys().next().copied()
    }

    /// Serialize back to b-file lines (comments are not preserved).
    pub fn to_bfile(&self) -> String {
        self.entries
            .iter()
            .map(|(i, v)| format!("{i} {v}\n"))
            .collect()
    }
}

pub fn parse_bfile(text: &str) -> Result<SequenceTable, OeisError> {
    parse_bfile_named(text, "")
}

pub fn parse_bfile_named(text: &str, source_name: &str) -> Result<SequenceTable, OeisError> {
    let mut table = SequenceTable {
        entries: BTreeMap::new(),
        source_name: source_name.to_string(),
    };
    let mut previous: Option<i64> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_number = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(OeisError::MalformedLine(line_number));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| OeisError::MalformedLine(line_number))?;
        let value: BigInt = value
            .parse()
            .map_err(|_| OeisError::MalformedLine(line_number))?;
        if previous.is_some_and(|p| p + 1 != index) {
            return Err(OeisError::NonContiguousIndex(line_number));
        }
        previous = Some(index);
        table.entries.insert(index, value);
    }
    Ok(table)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub expected: BigInt,
    pub got: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    /// Terms that agreed before the first mismatch.
    pub matches: usize,
    /// Number of computed terms submitted.
    pub compared: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl ComparisonReport {
    pub fn is_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for ComparisonReport {
    /// The one-line machine-readable summary.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "MATCH {}/{}", self.matches, self.compared),
            Some(m) => write!(
                f,
                "MISMATCH at n={} expected={} got={}",
                m.index, m.expected, m.got
            ),
        }
    }
}

/// Compare `computed[i]` with `table[start_index + i]`, stopping at the first
/// disagreement.
pub fn compare_sequence(
    computed: &[BigInt],
    table: &SequenceTable,
    start_index: i64,
) -> Result<ComparisonReport, OeisError> {
    let mut report = ComparisonReport {
        matches: 0,
        compared: computed.len(),
        first_mismatch: None,
    };
    if computed.is_empty() {
        return Ok(report);
    }
    let end = start_index + computed.len() as i64 - 1;
    if (start_index..=end).any(|i| table.get(i).is_none()) {
        return Err(OeisError::RangeNotCovered {
            start: start_index,
            end,
        });
    }
    for (offset, got) in computed.iter().enumerate() {
        let index = start_index + offset as i64;
        let expected = &table.entries[&index];
        if expected != got {
            report.first_mismatch = Some(Mismatch {
                index,
                expected: expected.clone(),
                got: got.clone(),
            });
            break;
        }
        report.matches += 1;
    }
    Ok(report)
}

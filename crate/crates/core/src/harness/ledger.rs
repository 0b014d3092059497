use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{Budgets, HarnessError, VerificationRow};

/// One stored verification, keyed by canonical ring key and budgets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub key: String,
    pub budgets: Budgets,
    pub row: VerificationRow,
}

impl LedgerEntry {
    fn budget_weight(&self) -> u128 {
        let b = self.budgets;
        u128::from(b.genus) + u128::from(b.crosscap) + u128::from(b.subdivision)
    }
}

/// Result of reading a ledger: the good entries in file order plus one
/// `CorruptLedger` error per malformed line.
#[derive(Debug, Default)]
pub struct LedgerScan {
    pub entries: Vec<LedgerEntry>,
    pub errors: Vec<HarnessError>,
}

/// Append-only JSONL file of verification rows.
#[derive(Clone, Debug)]
pub struct Ledger {
    path: PathBuf,
}

impl Ledger {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        Ledger { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn append(&self, entry: &LedgerEntry) -> Result<(), HarnessError> {
        let mut line = serde_json::to_string(entry)?;
        line.push('\n');
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        f.write_all(line.as_bytes())?;
        Ok(())
    }

    /// Reads every entry. A missing file is an empty ledger.
    pub fn scan(&self) -> Result<LedgerScan, HarnessError> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(LedgerScan::default()),
            Err(e) => return Err(e.into()),
        };
        let mut scan = LedgerScan::default();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<LedgerEntry>(&line) {
                Ok(e) => scan.entries.push(e),
                Err(e) => scan.errors.push(HarnessError::CorruptLedger {
                    line: i + 1,
                    message: e.to_string(),
                }),
            }
        }
        Ok(scan)
    }

    /// The entry for `key` with the largest total budget; later lines win
    /// ties. Corrupt lines are returned alongside.
    pub fn lookup(&self, key: &str) -> Result<(Option<LedgerEntry>, Vec<HarnessError>), HarnessError> {
        let scan = self.scan()?;
        let mut best: Option<LedgerEntry> = None;
        for e in scan.entries.into_iter().filter(|e| e.key == key) {
            if best.as_ref().is_none_or(|b| e.budget_weight() >= b.budget_weight()) {
                best = Some(e);
            }
        }
        Ok((best, scan.errors))
    }

    /// The latest entry stored with exactly these budgets.
    pub fn lookup_exact(&self, key: &str, budgets: &Budgets) -> Result<Option<LedgerEntry>, HarnessError> {
        Ok(self
            .scan()?
            .entries
            .into_iter().rfind(|e| e.key == key && e.budgets == *budgets))
    }
}

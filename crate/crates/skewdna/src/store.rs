//! Append-only JSON-lines store of analysed codes.

use std::fs::{File, OpenOptions, TryLockError};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::thread;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::formats::{ParamsJson, ReportJson, SpecJson};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftEntry {
    pub nmatrix: String,
    pub row_mode: String,
    pub params: ParamsJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub spec_hash: String,
    pub spec: SpecJson,
    pub params: ParamsJson,
    pub construction1: Vec<LiftEntry>,
    pub reversibility: ReportJson,
    pub dna_params: Option<ParamsJson>,
    pub timestamp: u64,
    pub toolchain: String,
}

pub fn now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs())
}

pub fn toolchain() -> String {
    format!("skewdna {}", env!("CARGO_PKG_VERSION"))
}

#[derive(Clone, Debug, Default)]
pub struct Filter {
    pub length: Option<usize>,
    pub k1: Option<usize>,
    pub k2: Option<usize>,
    pub min_d: Option<u32>,
    pub max_d: Option<u32>,
    pub r_code: Option<bool>,
    pub dna: Option<bool>,
}

impl Filter {
    pub fn accepts(&self, r: &CodeRecord) -> bool {
        let p = &r.params;
        let d = p.d_lee;
        self.length.is_none_or(|v| p.length == v)
            && self.k1.is_none_or(|v| p.k1 == v)
            && self.k2.is_none_or(|v| p.k2 == v)
            && self.min_d.is_none_or(|v| d.is_some_and(|d| d >= v))
            && self.max_d.is_none_or(|v| d.is_some_and(|d| d <= v))
            && self
                .r_code
                .is_none_or(|v| r.reversibility.exact_r_code == v)
            && self.dna.is_none_or(|v| r.dna_params.is_some() == v)
    }
}

/// Result of reading the store: the records plus one warning per line that
/// failed to parse.
#[derive(Debug, Default)]
pub struct Scan {
    pub records: Vec<CodeRecord>,
    pub warnings: Vec<String>,
}

pub struct Store {
    path: PathBuf,
}

const LOCK_ATTEMPTS: u32 = 50;

fn lock_with_backoff(file: &File) -> io::Result<()> {
    let mut wait = Duration::from_millis(2);
    for _ in 0..LOCK_ATTEMPTS {
        match file.try_lock() {
            Ok(()) => return Ok(()),
            Err(TryLockError::WouldBlock) => {
                thread::sleep(wait);
                wait = (wait * 2).min(Duration::from_millis(200));
            }
            Err(TryLockError::Error(e)) => return Err(e),
        }
    }
    Err(io::Error::new(
        io::ErrorKind::WouldBlock,
        "store is locked by another process",
    ))
}

impl Store {
    pub fn new(path: impl AsRef<Path>) -> Store {
        Store {
            path: path.as_ref().to_path_buf(),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Appends `record` unless a record with the same spec hash exists.
    /// Returns whether it was written.
    pub fn append(&self, record: &CodeRecord) -> io::Result<bool> {
        let mut file = OpenOptions::new()
            .create(true)
            .read(true)
            .append(true)
            .open(&self.path)?;
        lock_with_backoff(&file)?;
        let existing = read_lines(&file)?;
        if existing
            .records
            .iter()
            .any(|r| r.spec_hash == record.spec_hash)
        {
            return Ok(false);
        }
        let mut line = serde_json::to_string(record).map_err(io::Error::other)?;
        line.push('\n');
        file.write_all(line.as_bytes())?;
        file.flush()?;
        Ok(true)
    }

    /// Every readable record; a missing file is an empty store.
    pub fn scan(&self) -> io::Result<Scan> {
        match File::open(&self.path) {
            Ok(f) => read_lines(&f),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Scan::default()),
            Err(e) => Err(e),
        }
    }

    pub fn query(&self, filter: &Filter) -> io::Result<Scan> {
        let mut s = self.scan()?;
        s.records.retain(|r| filter.accepts(r));
        Ok(s)
    }
}

fn read_lines(file: &File) -> io::Result<Scan> {
    let mut out = Scan::default();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<CodeRecord>(&line) {
            Ok(r) => out.records.push(r),
            Err(e) => out
                .warnings
                .push(format!("line {}: skipped corrupt record ({e})", i + 1)),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn record(hash: &str, d: u32) -> CodeRecord {
        CodeRecord {
            spec_hash: hash.into(),
            spec: SpecJson {
                n: 4,
                gamma: "1".into(),
                alpha: "2".into(),
                g: "x + 1".into(),
                variant: "a-ab".into(),
                row_mode: "rank".into(),
            },
            params: ParamsJson {
                length: 8,
                k1: 3,
                k2: 0,
                d_lee: Some(d),
                d_lee_exact: true,
            },
            construction1: vec![],
            reversibility: ReportJson {
                m: 1,
                m_prime: None,
                g1_self_reciprocal: "pass".into(),
                g2_shifted_reciprocal: "vacuous".into(),
                membership_poly: "d(w)*g2".into(),
                membership: "vacuous".into(),
                sufficient_pass: true,
                exact_r_code: true,
                exact_rc_code: false,
            },
            dna_params: None,
            timestamp: 0,
            toolchain: toolchain(),
        }
    }

    fn temp(name: &str) -> PathBuf {
        let p = std::env::temp_dir().join(format!("skewdna-store-{}-{name}", std::process::id()));
        let _ = fs::remove_file(&p);
        p
    }

    #[test]
    fn append_dedupes_and_round_trips() {
        let p = temp("dedupe");
        let s = Store::new(&p);
        assert!(s.scan().unwrap().records.is_empty());
        let r = record("abc", 4);
        assert!(s.append(&r).unwrap());
        assert!(!s.append(&r).unwrap());
        assert!(s.append(&record("def", 8)).unwrap());
        let text = fs::read_to_string(&p).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(first, serde_json::to_string(&r).unwrap());
        let scan = s.scan().unwrap();
        assert_eq!(scan.records.len(), 2);
        assert_eq!(scan.records[0], r);
        let f = Filter {
            min_d: Some(8),
            ..Filter::default()
        };
        assert_eq!(s.query(&f).unwrap().records.len(), 1);
        fs::remove_file(&p).unwrap();
    }

    #[test]
    fn corrupt_lines_are_skipped() {
        let p = temp("corrupt");
        let s = Store::new(&p);
        s.append(&record("abc", 4)).unwrap();
        let mut f = OpenOptions::new().append(true).open(&p).unwrap();
        f.write_all(b"{not json\n").unwrap();
        s.append(&record("def", 6)).unwrap();
        let scan = s.scan().unwrap();
        assert_eq!(scan.records.len(), 2);
        assert_eq!(scan.warnings.len(), 1);
        fs::remove_file(&p).unwrap();
    }
}

//! Batch scanning over a prime range with a resumable, append-only cache.
//!
//! The cache holds one JSON `ResultRecord` per line. Primes that already have
//! a record with the current schema version are skipped. Workers compute
//! records in parallel; this thread is the only writer, and it appends each
//! chunk in ascending `p` so the file contents do not depend on `--jobs`.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use fibform_core::modarith::is_prime;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::output::Tabular;
use crate::record::{ResultRecord, SCHEMA_VERSION};

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub p_min: u64,
    pub p_max: u64,
    pub jobs: usize,
    pub cache: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub p_min: u64,
    pub p_max: u64,
    pub primes_in_range: usize,
    pub processed: usize,
    pub skipped: usize,
    pub failures: usize,
    pub failed_primes: Vec<u64>,
    pub cache: String,
}

impl Tabular for ScanSummary {
    fn headers() -> Vec<&'static str> {
        vec![
            "p_min",
            "p_max",
            "primes",
            "processed",
            "skipped",
            "failures",
            "cache",
        ]
    }

    fn row(&self) -> Vec<String> {
        vec![
            self.p_min.to_string(),
            self.p_max.to_string(),
            self.primes_in_range.to_string(),
            self.processed.to_string(),
            self.skipped.to_string(),
            self.failures.to_string(),
            self.cache.clone(),
        ]
    }
}

/// Current-schema records keyed by `p`. Unparsable lines and records of
/// other schema versions are left alone and not counted.
pub fn read_cache(path: &Path) -> Result<BTreeMap<u64, ResultRecord>, CliError> {
    let mut out = BTreeMap::new();
    let file = match fs::File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(CliError::io(path, e)),
    };
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| CliError::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        match serde_json::from_str::<ResultRecord>(&line) {
            Ok(r) if r.schema_version == SCHEMA_VERSION => {
                out.insert(r.p, r);
            }
            Ok(_) => {}
            Err(e) => eprintln!(
                "warning: skipping malformed cache line in {}: {e}",
                path.display()
            ),
        }
    }
    Ok(out)
}

fn open_for_append(path: &Path) -> Result<fs::File, CliError> {
    let needs_newline = match fs::read(path) {
        Ok(bytes) => bytes.last().is_some_and(|&b| b != b'\n'),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => false,
        Err(e) => return Err(CliError::io(path, e)),
    };
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| CliError::io(path, e))?;
    if needs_newline {
        file.write_all(b"\n").map_err(|e| CliError::io(path, e))?;
    }
    Ok(file)
}

pub fn scan(opts: &ScanOptions) -> Result<ScanSummary, CliError> {
    if opts.p_min < 3 || opts.p_min > opts.p_max {
        return Err(CliError::Usage(format!(
            "bad range {}..{}: need 3 <= p_min <= p_max",
            opts.p_min, opts.p_max
        )));
    }
    if opts.jobs == 0 {
        return Err(CliError::Usage("--jobs must be at least 1".into()));
    }
    let primes: Vec<u64> = (opts.p_min..=opts.p_max).filter(|&p| is_prime(p)).collect();
    let mut known = read_cache(&opts.cache)?;
    let todo: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|p| !known.contains_key(p))
        .collect();

    if !todo.is_empty() {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", opts.jobs)))?;
        let mut file = open_for_append(&opts.cache)?;
        for chunk in todo.chunks(opts.jobs * 4) {
            let records: Vec<Result<ResultRecord, CliError>> =
                pool.install(|| chunk.par_iter().map(|&p| ResultRecord::build(p)).collect());
            for record in records {
                let record = record?;
                let mut line = serde_json::to_string(&record)?;
                line.push('\n');
                file.write_all(line.as_bytes())
                    .map_err(|e| CliError::io(&opts.cache, e))?;
                known.insert(record.p, record);
            }
            file.flush().map_err(|e| CliError::io(&opts.cache, e))?;
        }
    }

    let failed_primes: Vec<u64> = primes
        .iter()
        .copied()
        .filter(|p| known.get(p).is_none_or(|r| !(r.identity_ok && r.recheck())))
        .collect();
    Ok(ScanSummary {
        p_min: opts.p_min,
        p_max: opts.p_max,
        primes_in_range: primes.len(),
        processed: todo.len(),
        skipped: primes.len() - todo.len(),
        failures: failed_primes.len(),
        failed_primes,
        cache: opts.cache.display().to_string(),
    })
}

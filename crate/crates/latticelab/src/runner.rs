//! Parallel evaluation of registry records with per-record timeouts.

use std::collections::HashMap;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use latticelab_core::registry::{evaluate, find_record, registry_catalog, IdentityRecord, Overrides};

use crate::config::Config;
use crate::report::{RecordReport, VerificationReport, SCHEMA};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown record id `{0}`")]
pub struct UnknownRecord(pub String);

/// Resolves `all` or a list of ids, in the order given.
pub fn select(ids: &[String]) -> Result<Vec<IdentityRecord>, UnknownRecord> {
    if ids.is_empty() || ids.iter().any(|i| i == "all") {
        return Ok(registry_catalog());
    }
    ids.iter().map(|id| find_record(id).ok_or_else(|| UnknownRecord(id.clone()))).collect()
}

/// Evaluates `records` with at most `config.parallelism` running at once.
///
/// A record still running after `config.timeout_secs` is reported as
/// TIMEOUT; its worker thread is abandoned (evaluations cannot be
/// interrupted) and its late result discarded.
pub fn run(records: &[IdentityRecord], config: &Config, n_terms: Option<usize>, tolerance: Option<u32>) -> VerificationReport {
    let overrides = Overrides {
        precision: Some(config.precision),
        n_terms,
        tolerance,
        guard: Some(config.guard_digits),
    };
    let timeout = Duration::from_secs(config.timeout_secs);
    let (tx, rx) = mpsc::channel();
    let mut results: Vec<Option<RecordReport>> = vec![None; records.len()];
    let mut running: HashMap<usize, Instant> = HashMap::new();
    let mut next = 0;
    let mut done = 0;
    while done < records.len() {
        while running.len() < config.parallelism.max(1) && next < records.len() {
            let record = records[next].clone();
            let tx = tx.clone();
            let idx = next;
            thread::spawn(move || {
                let start = Instant::now();
                let eval = evaluate(&record, &overrides);
                let report = RecordReport::new(&record, &eval, start.elapsed().as_secs_f64());
                let _ = tx.send((idx, report));
            });
            running.insert(idx, Instant::now());
            next += 1;
        }
        let wait = running.values().map(|s| timeout.saturating_sub(s.elapsed())).min().unwrap_or(timeout);
        match rx.recv_timeout(wait.max(Duration::from_millis(1))) {
            Ok((idx, report)) => {
                if running.remove(&idx).is_some() {
                    results[idx] = Some(report);
                    done += 1;
                }
            }
            Err(mpsc::RecvTimeoutError::Timeout) => {}
            Err(mpsc::RecvTimeoutError::Disconnected) => unreachable!("the runner holds a sender"),
        }
        let expired: Vec<usize> = running.iter().filter(|(_, s)| s.elapsed() >= timeout).map(|(i, _)| *i).collect();
        for idx in expired {
            running.remove(&idx);
            results[idx] = Some(RecordReport::timeout(&records[idx], config.precision, config.timeout_secs));
            done += 1;
        }
    }
    VerificationReport {
        schema: SCHEMA.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        precision: config.precision,
        guard_digits: config.guard_digits,
        n_terms,
        seed: 0,
        records: results.into_iter().map(|r| r.expect("every record resolved")).collect(),
    }
}

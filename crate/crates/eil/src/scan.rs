//! Parallel, order-preserving scans over graph6 input with optional
//! checkpoint and resume.
//!
//! Input is processed in batches of `workers * chunk_size` lines. Each batch
//! is split into chunks that run on a rayon pool; results are reassembled in
//! input order before being written. With checkpointing on, the sidecar
//! `<input>.ckpt` records the completed line count, the output byte count and
//! the SHA-256 of the output so far. A resume re-hashes the existing output,
//! refuses to continue on mismatch, truncates any partial tail and picks up
//! at the next input line.

use std::fmt;
use std::fs::{self, File, OpenOptions};
use std::io::{self, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use eil_core::graph6::parse_graph6;
use eil_core::search::{check_record, compute_record, InvariantRecord, RecordOptions, TheoremReport};
use eil_core::Graph;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::format::{hex_digest, records_csv, records_jsonl, Format};
use crate::g6file::open_lines;

pub const DEFAULT_CHUNK_SIZE: usize = 4096;

#[derive(Clone, Copy, Debug)]
pub struct ScanOptions {
    pub workers: usize,
    pub chunk_size: usize,
    pub record: RecordOptions,
    pub format: Format,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: default_workers(),
            chunk_size: DEFAULT_CHUNK_SIZE,
            record: RecordOptions::default(),
            format: Format::Csv,
        }
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug)]
pub enum ScanError {
    Io(io::Error),
    /// A record broke a bound that every graph satisfies.
    Violation(String),
    Checkpoint(String),
}

impl fmt::Display for ScanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScanError::Io(e) => write!(f, "{e}"),
            ScanError::Violation(m) => write!(f, "invariant violation: {m}"),
            ScanError::Checkpoint(m) => write!(f, "checkpoint: {m}"),
        }
    }
}

impl std::error::Error for ScanError {}

impl From<io::Error> for ScanError {
    fn from(e: io::Error) -> Self {
        ScanError::Io(e)
    }
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().expect("thread pool")
}

/// Record for one input line; decoding failures become failed records.
pub fn record_for_line(line: &str, opts: &RecordOptions) -> InvariantRecord {
    match parse_graph6(line) {
        Ok(g) => {
            let mut r = compute_record(&g, opts);
            r.graph6 = line.to_string();
            r
        }
        Err(e) => InvariantRecord::failed(line.to_string(), e.to_string()),
    }
}

/// Records for `lines`, computed in parallel, in input order.
pub fn scan_lines(lines: &[String], opts: &ScanOptions) -> Vec<InvariantRecord> {
    let chunk = opts.chunk_size.max(1);
    pool(opts.workers).install(|| {
        lines
            .par_chunks(chunk)
            .map(|c| c.iter().map(|l| record_for_line(l, &opts.record)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}

/// Records for in-memory graphs, in input order.
pub fn scan_graphs(graphs: &[Graph], opts: &ScanOptions) -> Vec<InvariantRecord> {
    let chunk = opts.chunk_size.max(1);
    pool(opts.workers).install(|| {
        graphs
            .par_chunks(chunk)
            .map(|c| c.iter().map(|g| compute_record(g, &opts.record)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}

/// [`TheoremReport`] over `graphs`, merged across chunks.
pub fn verify_graphs(graphs: &[Graph], opts: &ScanOptions) -> TheoremReport {
    let chunk = opts.chunk_size.max(1);
    let reports: Vec<TheoremReport> = pool(opts.workers).install(|| {
        graphs
            .par_chunks(chunk)
            .map(|c| {
                let mut report = TheoremReport::default();
                for g in c {
                    report.observe(g, &compute_record(g, &opts.record));
                }
                report
            })
            .collect()
    });
    let mut total = TheoremReport::default();
    for r in reports {
        total.merge(r);
    }
    total
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    /// Lines processed in this run.
    pub processed: u64,
    /// Lines skipped because a checkpoint covered them.
    pub resumed_from: u64,
    pub failed: u64,
    pub v_gt_deg: Vec<String>,
}

pub fn checkpoint_path(input: &Path) -> PathBuf {
    let mut s = input.as_os_str().to_owned();
    s.push(".ckpt");
    PathBuf::from(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Checkpoint {
    lines: u64,
    bytes: u64,
    sha256: String,
}

impl Checkpoint {
    fn parse(text: &str) -> Option<Self> {
        let mut lines = None;
        let mut bytes = None;
        let mut sha256 = None;
        for l in text.lines() {
            match l.split_once(' ')? {
                ("lines", v) => lines = v.parse().ok(),
                ("bytes", v) => bytes = v.parse().ok(),
                ("sha256", v) => sha256 = Some(v.to_string()),
                _ => return None,
            }
        }
        Some(Checkpoint { lines: lines?, bytes: bytes?, sha256: sha256? })
    }

    fn render(&self) -> String {
        format!("lines {}\nbytes {}\nsha256 {}\n", self.lines, self.bytes, self.sha256)
    }

    fn store(&self, path: &Path) -> io::Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        fs::write(&tmp, self.render())?;
        fs::rename(&tmp, path)
    }
}

/// Where a scan writes.
pub enum ScanOutput<'a> {
    Stream(&'a mut dyn Write),
    /// A file; with `checkpoint` set the run can be resumed.
    File {
        path: &'a Path,
        checkpoint: bool,
    },
}

/// Scans every graph line of `input`, writing CSV or JSON-lines records.
/// Stops at the first record that breaks a universal bound.
pub fn run_scan(input: &Path, output: ScanOutput<'_>, opts: &ScanOptions) -> Result<ScanSummary, ScanError> {
    let mut summary = ScanSummary::default();
    let mut hasher = Sha256::new();
    let mut bytes_written = 0u64;
    let mut file_holder: Option<File> = None;
    let mut ckpt_path = None;
    let writer: &mut dyn Write = match output {
        ScanOutput::Stream(w) => w,
        ScanOutput::File { path, checkpoint } => {
            let cp = checkpoint_path(input);
            let existing = if checkpoint && cp.exists() {
                let text = fs::read_to_string(&cp)?;
                Some(
                    Checkpoint::parse(&text)
                        .ok_or_else(|| ScanError::Checkpoint(format!("unreadable {}", cp.display())))?,
                )
            } else {
                None
            };
            let mut file =
                OpenOptions::new().read(true).write(true).create(true).truncate(existing.is_none()).open(path)?;
            if let Some(c) = existing {
                let len = file.metadata()?.len();
                if len < c.bytes {
                    return Err(ScanError::Checkpoint(format!(
                        "{} has {len} bytes but the checkpoint covers {}",
                        path.display(),
                        c.bytes
                    )));
                }
                let mut prefix = Vec::with_capacity(c.bytes as usize);
                (&mut file).take(c.bytes).read_to_end(&mut prefix)?;
                hasher.update(&prefix);
                let digest = hex_digest(hasher.clone().finalize().as_slice());
                if digest != c.sha256 {
                    return Err(ScanError::Checkpoint(format!("output digest {digest} does not match {}", c.sha256)));
                }
                file.set_len(c.bytes)?;
                file.seek(SeekFrom::End(0))?;
                bytes_written = c.bytes;
                summary.resumed_from = c.lines;
            }
            if checkpoint {
                ckpt_path = Some(cp);
            }
            file_holder.insert(file)
        }
    };

    let batch_len = opts.chunk_size.max(1) * opts.workers.max(1);
    let mut lines = open_lines(input)?.skip(summary.resumed_from as usize);
    let mut first = summary.resumed_from == 0 && bytes_written == 0;
    let mut done = summary.resumed_from;
    loop {
        let batch: Vec<String> = lines.by_ref().take(batch_len).collect::<io::Result<_>>()?;
        if batch.is_empty() && !first {
            break;
        }
        let records = scan_lines(&batch, opts);
        for r in &records {
            check_record(r).map_err(ScanError::Violation)?;
            if r.is_failed() {
                summary.failed += 1;
            } else if r.v > r.deg_h {
                summary.v_gt_deg.push(r.graph6.clone());
            }
        }
        let out = match opts.format {
            Format::Json => records_jsonl(&records),
            Format::Csv | Format::Text => records_csv(&records, first),
        };
        first = false;
        writer.write_all(&out)?;
        writer.flush()?;
        hasher.update(&out);
        bytes_written += out.len() as u64;
        done += batch.len() as u64;
        summary.processed += batch.len() as u64;
        if let Some(cp) = &ckpt_path {
            let digest = hex_digest(hasher.clone().finalize().as_slice());
            Checkpoint { lines: done, bytes: bytes_written, sha256: digest }.store(cp)?;
        }
        if batch.len() < batch_len {
            break;
        }
    }
    Ok(summary)
}

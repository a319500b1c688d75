use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{FrameResult, TrialReport};
use crate::complexity::OpCounters;
use crate::error::Result;

pub const CSV_HEADER: [&str; 12] = [
    "snr_db",
    "sweep_value",
    "frames",
    "frame_errors",
    "bler",
    "bler_lo",
    "bler_hi",
    "gamma_hat",
    "undetected_ratio",
    "mean_flops",
    "mean_bops",
    "mean_ms",
];

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub snr_db: f64,
    pub sweep_value: Option<f64>,
    pub frames: u64,
    pub frame_errors: u64,
    pub bler: f64,
    pub bler_lo: f64,
    pub bler_hi: f64,
    pub gamma_hat: f64,
    pub undetected_ratio: f64,
    pub mean_flops: f64,
    pub mean_bops: f64,
    pub mean_ms: f64,
}

impl TrialReport {
    pub fn csv_rows(&self) -> Vec<CsvRow> {
        self.cells
            .iter()
            .map(|c| {
                let (lo, hi) = c.bler_interval();
                CsvRow {
                    snr_db: c.snr_db,
                    sweep_value: c.sweep_value,
                    frames: c.frames,
                    frame_errors: c.frame_errors,
                    bler: c.bler(),
                    bler_lo: lo,
                    bler_hi: hi,
                    gamma_hat: c.gamma_hat(),
                    undetected_ratio: c.undetected_ratio(),
                    mean_flops: c.mean_flops(),
                    mean_bops: c.mean_bops(),
                    mean_ms: c.mean_ms(),
                }
            })
            .collect()
    }
}

/// Writes the report as CSV: a header row, then one row per cell in
/// campaign order. An empty report gives the header alone.
pub fn write_report<W: Write>(report: &TrialReport, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in report.csv_rows() {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn export_report(report: &TrialReport, path: impl AsRef<Path>) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_report(report, std::io::BufWriter::new(file))
}

/// JSON-lines trace entry for one frame.
#[derive(Debug, Clone, Serialize)]
pub struct FrameRecord {
    pub snr_db: f64,
    pub sweep_value: Option<f64>,
    pub frame_id: u64,
    pub path: &'static str,
    pub bp_iters: usize,
    pub whd: f64,
    pub counters: OpCounters,
    pub correct: bool,
}

pub(super) fn write_trace(w: &mut dyn Write, snr_db: f64, sweep_value: Option<f64>, f: &FrameResult) -> Result<()> {
    let rec = FrameRecord {
        snr_db,
        sweep_value,
        frame_id: f.frame_id,
        path: f.path,
        bp_iters: f.bp_iters,
        whd: f.whd,
        counters: f.counters,
        correct: f.correct(),
    };
    serde_json::to_writer(&mut *w, &rec)?;
    w.write_all(b"\n")?;
    Ok(())
}

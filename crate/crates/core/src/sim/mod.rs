//! Seeded Monte-Carlo campaigns over an SNR grid.
//!
//! Frame `t` of every cell uses message and noise streams derived from
//! `(seed, t)` only, so cells share random numbers and results do not depend
//! on the worker count. Frames are decoded in fixed-size batches; an
//! error-count target is checked in frame order after each batch.

mod report;
mod stats;

use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use report::{export_report, write_report, CsvRow, FrameRecord, CSV_HEADER};
pub use stats::{bi_awgn_capacity_dispersion, na_reference, q_function, wilson_interval};

use crate::bp::{alpha_from_girth, BpConfig, BpDecoder, MbpConfig};
use crate::channel::{channel_llr_clipped, modulate, payload_rng, transmit, ChannelParams};
use crate::codes;
use crate::complexity::{osd_complexity_estimate, BpIterationCost, OpCounters};
use crate::error::{Error, Result};
use crate::gf2::CodeSpec;
use crate::mbposd::{default_beta, stopping_criterion, stopping_whd, validate_lambda, BpOsdDecoder, DecodePath};
use crate::mbposd::{MbpOsdConfig, MbpOsdDecoder};
use crate::osd::OsdDecoder;

/// Frames decoded between early-stop checks.
pub const BATCH_FRAMES: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    Bp,
    Osd(usize),
    BpOsd(usize),
    MbpOsd(usize),
}

impl DecoderKind {
    /// Builds a selector from a family name (`bp`, `osd`, `bp-osd`,
    /// `mbp-osd`) and an OSD order.
    pub fn from_name(name: &str, order: usize) -> Result<Self> {
        Ok(match name.to_ascii_lowercase().as_str() {
            "bp" => DecoderKind::Bp,
            "osd" => DecoderKind::Osd(order),
            "bp-osd" | "bposd" => DecoderKind::BpOsd(order),
            "mbp-osd" | "mbposd" => DecoderKind::MbpOsd(order),
            other => return Err(Error::config(format!("unknown decoder '{other}'"))),
        })
    }

    pub fn order(self) -> Option<usize> {
        match self {
            DecoderKind::Bp => None,
            DecoderKind::Osd(m) | DecoderKind::BpOsd(m) | DecoderKind::MbpOsd(m) => Some(m),
        }
    }
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecoderKind::Bp => f.write_str("bp"),
            DecoderKind::Osd(m) => write!(f, "osd-{m}"),
            DecoderKind::BpOsd(m) => write!(f, "bp-osd-{m}"),
            DecoderKind::MbpOsd(m) => write!(f, "mbp-osd-{m}"),
        }
    }
}

/// Parses `bp`, `osd-2`, `bp-osd-3`, `mbp-osd-1`.
impl FromStr for DecoderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("bp") {
            return Ok(DecoderKind::Bp);
        }
        let (name, order) = s
            .rsplit_once('-')
            .ok_or_else(|| Error::config(format!("decoder '{s}' needs an order, e.g. {s}-2")))?;
        let order = order.parse().map_err(|_| Error::config(format!("bad order in decoder '{s}'")))?;
        DecoderKind::from_name(name, order)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopRule {
    Frames(u64),
    /// Stop a cell once `target` frame errors are seen, or at `max_frames`.
    TargetErrors { target: u64, max_frames: u64 },
}

impl StopRule {
    fn max_frames(self) -> u64 {
        match self {
            StopRule::Frames(n) => n,
            StopRule::TargetErrors { max_frames, .. } => max_frames,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub enum SweepAxis {
    #[default]
    None,
    Beta(Vec<f64>),
    Lambda(Vec<f64>),
}

impl SweepAxis {
    fn values(&self) -> Vec<Option<f64>> {
        match self {
            SweepAxis::None => vec![None],
            SweepAxis::Beta(v) | SweepAxis::Lambda(v) => v.iter().copied().map(Some).collect(),
        }
    }
}

/// Default β grid for sweeps: 0.40, 0.45, …, 1.00.
pub fn default_beta_grid() -> Vec<f64> {
    (0..=12).map(|i| (40 + 5 * i) as f64 / 100.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    /// Bundled code name or alist path.
    pub code: String,
    pub decoder: DecoderKind,
    pub snr_db: Vec<f64>,
    pub stop: StopRule,
    pub seed: u64,
    pub bp: BpConfig,
    /// α override; `None` takes the girth rule.
    pub alpha: Option<usize>,
    /// β override; `None` takes the per-order default.
    pub beta: Option<f64>,
    /// λ for the stopping test and for the undetected-error tally.
    pub lambda: f64,
    pub sweep: SweepAxis,
    /// Thread count; 0 uses every available core.
    pub workers: usize,
    /// Measure wall-clock time per frame. Off keeps output bit-reproducible.
    pub record_timing: bool,
}

impl CampaignConfig {
    /// 1000 frames per point, seed 1, T_max = 30, λ from the code's default
    /// (∞ for codes loaded from files).
    pub fn new(code: impl Into<String>, decoder: DecoderKind, snr_db: Vec<f64>) -> Self {
        let code = code.into();
        let lambda = codes::default_lambda(&code).unwrap_or(f64::INFINITY);
        CampaignConfig {
            code,
            decoder,
            snr_db,
            stop: StopRule::Frames(1000),
            seed: 1,
            bp: BpConfig::default(),
            alpha: None,
            beta: None,
            lambda,
            sweep: SweepAxis::None,
            workers: 0,
            record_timing: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.snr_db.is_empty() {
            return Err(Error::config("SNR grid is empty"));
        }
        if let Some(s) = self.snr_db.iter().find(|s| s.is_nan()) {
            return Err(Error::config(format!("invalid SNR {s}")));
        }
        match self.stop {
            StopRule::Frames(0) | StopRule::TargetErrors { max_frames: 0, .. } => {
                return Err(Error::config("frame count must be at least 1"))
            }
            StopRule::TargetErrors { target: 0, .. } => return Err(Error::config("target error count must be at least 1")),
            _ => {}
        }
        self.bp.validate()?;
        validate_lambda(self.lambda)?;
        if let Some(0) = self.alpha {
            return Err(Error::config("alpha must be at least 1"));
        }
        match &self.sweep {
            SweepAxis::None => {}
            SweepAxis::Beta(v) | SweepAxis::Lambda(v) if v.is_empty() => {
                return Err(Error::config("sweep list is empty"));
            }
            SweepAxis::Beta(_) if !matches!(self.decoder, DecoderKind::MbpOsd(_)) => {
                return Err(Error::config("a beta sweep needs the mbp-osd decoder"));
            }
            SweepAxis::Beta(v) => {
                for &b in v {
                    MbpConfig { alpha: 1, beta: b }.validate()?;
                }
            }
            SweepAxis::Lambda(v) => {
                for &l in v {
                    validate_lambda(l)?;
                }
            }
        }
        if let Some(b) = self.beta {
            MbpConfig { alpha: 1, beta: b }.validate()?;
        }
        Ok(())
    }

    /// mBP-OSD settings for one cell.
    pub fn mbposd_config(&self, code: &CodeSpec, order: usize, sweep: Option<f64>) -> MbpOsdConfig {
        let mut beta = self.beta.unwrap_or_else(|| default_beta(order));
        let mut lambda = self.lambda;
        match (&self.sweep, sweep) {
            (SweepAxis::Beta(_), Some(b)) => beta = b,
            (SweepAxis::Lambda(_), Some(l)) => lambda = l,
            _ => {}
        }
        MbpOsdConfig {
            bp: self.bp,
            mbp: MbpConfig { alpha: self.alpha.unwrap_or_else(|| alpha_from_girth(code.girth())), beta },
            order,
            lambda,
        }
    }

    fn cell_lambda(&self, sweep: Option<f64>) -> f64 {
        match (&self.sweep, sweep) {
            (SweepAxis::Lambda(_), Some(l)) => l,
            _ => self.lambda,
        }
    }
}

/// Aggregates for one (SNR, sweep value) cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialCell {
    pub snr_db: f64,
    pub sweep_value: Option<f64>,
    pub frames: u64,
    pub frame_errors: u64,
    pub bit_errors: u64,
    /// Frames on which the OSD stage ran.
    pub osd_frames: u64,
    /// Erroneous frames whose output passes the stopping test.
    pub undetected: u64,
    pub counters: OpCounters,
    /// Summed per-frame decode time; NaN when timing is off.
    pub total_ms: f64,
}

impl TrialCell {
    fn empty(snr_db: f64, sweep_value: Option<f64>, timed: bool) -> Self {
        TrialCell {
            snr_db,
            sweep_value,
            frames: 0,
            frame_errors: 0,
            bit_errors: 0,
            osd_frames: 0,
            undetected: 0,
            counters: OpCounters::default(),
            total_ms: if timed { 0.0 } else { f64::NAN },
        }
    }

    fn push(&mut self, f: &FrameResult) {
        self.frames += 1;
        self.frame_errors += u64::from(f.bit_errors > 0);
        self.bit_errors += f.bit_errors as u64;
        self.osd_frames += u64::from(f.counters.osd_invocations > 0);
        self.undetected += u64::from(f.undetected);
        self.counters += f.counters;
        self.total_ms += f.ms;
    }

    pub fn bler(&self) -> f64 {
        ratio(self.frame_errors, self.frames)
    }

    pub fn ber(&self, n: usize) -> f64 {
        self.bit_errors as f64 / (self.frames as f64 * n as f64)
    }

    /// Wilson 95% interval on the BLER.
    pub fn bler_interval(&self) -> (f64, f64) {
        wilson_interval(self.frame_errors, self.frames, 1.959963984540054)
    }

    /// Fraction of frames that ran OSD.
    pub fn gamma_hat(&self) -> f64 {
        ratio(self.osd_frames, self.frames)
    }

    /// Undetected errors over total errors; NaN without errors.
    pub fn undetected_ratio(&self) -> f64 {
        if self.frame_errors == 0 {
            f64::NAN
        } else {
            ratio(self.undetected, self.frame_errors)
        }
    }

    pub fn mean_flops(&self) -> f64 {
        ratio(self.counters.flops(), self.frames)
    }

    pub fn mean_bops(&self) -> f64 {
        ratio(self.counters.bops(), self.frames)
    }

    pub fn mean_cost(&self) -> f64 {
        ratio(self.counters.total(), self.frames)
    }

    pub fn mean_ms(&self) -> f64 {
        self.total_ms / self.frames as f64
    }

    /// Checks Σ cost ≤ frames·T_max·C_BP + osd_frames·(α·C_BP + C_OSD) in
    /// integer arithmetic, i.e. mean cost ≤ the bound at γ = `gamma_hat`.
    pub fn cost_within_bound(&self, t_max: usize, alpha: usize, c_bp: u64, c_osd: u64) -> bool {
        let total = u128::from(self.counters.total());
        let bound = u128::from(self.frames) * t_max as u128 * u128::from(c_bp)
            + u128::from(self.osd_frames) * (alpha as u128 * u128::from(c_bp) + u128::from(c_osd));
        total <= bound
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        f64::NAN
    } else {
        a as f64 / b as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub code: String,
    pub n: usize,
    pub k: usize,
    pub decoder: String,
    pub seed: u64,
    pub cells: Vec<TrialCell>,
}

/// Per-frame decode result.
#[derive(Debug, Clone)]
pub struct FrameResult {
    pub frame_id: u64,
    pub path: &'static str,
    pub bp_iters: usize,
    pub whd: f64,
    pub counters: OpCounters,
    pub bit_errors: usize,
    pub undetected: bool,
    pub ms: f64,
}

impl FrameResult {
    pub fn correct(&self) -> bool {
        self.bit_errors == 0
    }
}

/// Codeword and channel LLR for frame `trial` of a cell.
pub fn generate_frame(code: &CodeSpec, params: &ChannelParams, l_max: f64, trial: u64) -> (Vec<u8>, Vec<f64>) {
    let mut rng = payload_rng(params.seed(), trial);
    let msg: Vec<u8> = (0..code.k()).map(|_| rng.random::<bool>() as u8).collect();
    let cw = code.encode(&msg).expect("message length matches K");
    let rx = transmit(&modulate(&cw), params, trial);
    let llr = channel_llr_clipped(&rx, params, l_max).into_inner();
    (cw, llr)
}

/// One decoder context per worker.
enum FrameDecoder<'c> {
    Bp(BpDecoder<'c>),
    Osd(OsdDecoder<'c>),
    BpOsd(BpOsdDecoder<'c>),
    MbpOsd(MbpOsdDecoder<'c>),
}

struct Decoded {
    estimate: Vec<u8>,
    path: &'static str,
    bp_iters: usize,
    whd: f64,
    counters: OpCounters,
}

fn path_name(p: DecodePath) -> &'static str {
    match p {
        DecodePath::EarlyTerminated => "early-terminated",
        DecodePath::OsdSelected => "osd-selected",
    }
}

impl<'c> FrameDecoder<'c> {
    fn new(code: &'c CodeSpec, cfg: &CampaignConfig, sweep: Option<f64>) -> Result<Self> {
        Ok(match cfg.decoder {
            DecoderKind::Bp => FrameDecoder::Bp(BpDecoder::new(code, cfg.bp)?),
            DecoderKind::Osd(m) => FrameDecoder::Osd(OsdDecoder::new(code, m)),
            DecoderKind::BpOsd(m) => FrameDecoder::BpOsd(BpOsdDecoder::new(code, m, cfg.bp)?),
            DecoderKind::MbpOsd(m) => FrameDecoder::MbpOsd(MbpOsdDecoder::new(code, cfg.mbposd_config(code, m, sweep))?),
        })
    }

    fn decode(&mut self, llr: &[f64]) -> Result<Decoded> {
        let mut counters = OpCounters::default();
        Ok(match self {
            FrameDecoder::Bp(d) => {
                let out = d.decode(llr, &mut counters)?;
                Decoded {
                    whd: stopping_whd(&out.estimate, llr)?,
                    path: if out.converged { "early-terminated" } else { "bp-exhausted" },
                    bp_iters: out.iters_used,
                    estimate: out.estimate,
                    counters,
                }
            }
            FrameDecoder::Osd(d) => {
                let out = d.decode(llr, &mut counters)?;
                Decoded { estimate: out.estimate, path: "osd-selected", bp_iters: 0, whd: out.whd, counters }
            }
            FrameDecoder::BpOsd(d) => {
                let o = d.decode(llr)?;
                Decoded { estimate: o.estimate, path: path_name(o.path), bp_iters: o.bp_iters, whd: o.whd, counters: o.counters }
            }
            FrameDecoder::MbpOsd(d) => {
                let o = d.decode(llr)?;
                Decoded { estimate: o.estimate, path: path_name(o.path), bp_iters: o.bp_iters, whd: o.whd, counters: o.counters }
            }
        })
    }
}

/// Loads the code named in `cfg` and runs the campaign.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<TrialReport> {
    let code = codes::load(&cfg.code)?;
    run_campaign_on(&code, cfg, None)
}

/// Runs the campaign on an already loaded code. When `trace` is given, one
/// JSON line per frame is written in (cell, frame) order.
pub fn run_campaign_on(code: &CodeSpec, cfg: &CampaignConfig, mut trace: Option<&mut dyn Write>) -> Result<TrialReport> {
    cfg.validate()?;
    // Surface decoder config errors before spawning work.
    for sweep in cfg.sweep.values() {
        FrameDecoder::new(code, cfg, sweep)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::config(format!("cannot build worker pool: {e}")))?;
    let mut cells = Vec::new();
    for &snr in &cfg.snr_db {
        let params = ChannelParams::new(snr, cfg.seed)?;
        for sweep in cfg.sweep.values() {
            let tr = trace.as_mut().map(|w| &mut **w as &mut dyn Write);
            let cell = run_cell(&pool, code, cfg, &params, sweep, tr)?;
            cells.push(cell);
        }
    }
    Ok(TrialReport {
        code: cfg.code.clone(),
        n: code.n(),
        k: code.k(),
        decoder: cfg.decoder.to_string(),
        seed: cfg.seed,
        cells,
    })
}

fn run_cell(
    pool: &rayon::ThreadPool,
    code: &CodeSpec,
    cfg: &CampaignConfig,
    params: &ChannelParams,
    sweep: Option<f64>,
    mut trace: Option<&mut dyn Write>,
) -> Result<TrialCell> {
    let lambda = cfg.cell_lambda(sweep);
    let max_frames = cfg.stop.max_frames();
    let mut cell = TrialCell::empty(params.snr_db(), sweep, cfg.record_timing);
    let mut start = 0u64;
    'batches: while start < max_frames {
        let end = (start + BATCH_FRAMES).min(max_frames);
        let results: Vec<FrameResult> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map_init(
                    || FrameDecoder::new(code, cfg, sweep).expect("validated above"),
                    |dec, t| decode_frame(code, dec, params, cfg, lambda, t),
                )
                .collect::<Result<_>>()
        })?;
        for f in &results {
            cell.push(f);
            if let Some(w) = trace.as_deref_mut() {
                report::write_trace(w, params.snr_db(), sweep, f)?;
            }
            if let StopRule::TargetErrors { target, .. } = cfg.stop {
                if cell.frame_errors >= target {
                    break 'batches;
                }
            }
        }
        start = end;
    }
    Ok(cell)
}

fn decode_frame(
    code: &CodeSpec,
    dec: &mut FrameDecoder<'_>,
    params: &ChannelParams,
    cfg: &CampaignConfig,
    lambda: f64,
    t: u64,
) -> Result<FrameResult> {
    let (cw, llr) = generate_frame(code, params, cfg.bp.l_max, t);
    let clock = cfg.record_timing.then(Instant::now);
    let d = dec.decode(&llr)?;
    let ms = clock.map_or(0.0, |c| c.elapsed().as_secs_f64() * 1e3);
    let bit_errors = d.estimate.iter().zip(&cw).filter(|(a, b)| a != b).count();
    let undetected = bit_errors > 0 && stopping_criterion(&d.estimate, &llr, code, lambda)?;
    Ok(FrameResult {
        frame_id: t,
        path: d.path,
        bp_iters: d.bp_iters,
        whd: d.whd,
        counters: d.counters,
        bit_errors,
        undetected,
        ms,
    })
}

/// Plain BP at one SNR: erroneous frames and, among them, those whose output
/// passes the stopping test with threshold `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UndetectedCount {
    pub frames: u64,
    pub errors: u64,
    pub undetected: u64,
}

impl UndetectedCount {
    pub fn ratio(&self) -> Result<f64> {
        if self.errors == 0 {
            return Err(Error::InsufficientErrors { frames: self.frames });
        }
        Ok(self.undetected as f64 / self.errors as f64)
    }
}

pub fn count_undetected(code: &CodeSpec, snr_db: f64, lambda: f64, frames: u64, seed: u64) -> Result<UndetectedCount> {
    let mut cfg = CampaignConfig::new("", DecoderKind::Bp, vec![snr_db]);
    cfg.stop = StopRule::Frames(frames);
    cfg.seed = seed;
    cfg.lambda = lambda;
    let cell = &run_campaign_on(code, &cfg, None)?.cells[0];
    Ok(UndetectedCount { frames: cell.frames, errors: cell.frame_errors, undetected: cell.undetected })
}

/// Ratio of BP decoding errors that pass the stopping test to all BP
/// decoding errors. Fails with `InsufficientErrors` when no errors occur.
pub fn measure_undetected_ratio(code: &CodeSpec, snr_db: f64, lambda: f64, frames: u64, seed: u64) -> Result<f64> {
    count_undetected(code, snr_db, lambda, frames, seed)?.ratio()
}

/// Per-iteration BP cost C_BP and per-invocation OSD cost C_OSD for the
/// decoder in `cfg`, as totals of the model counts.
pub fn model_costs(code: &CodeSpec, order: usize) -> (u64, u64) {
    let c_bp = BpIterationCost::for_code(code.n(), code.k()).total();
    let c_osd = osd_complexity_estimate(code.n(), code.k(), order.min(code.k())).total();
    (c_bp, c_osd)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decoder_names() {
        assert_eq!("bp".parse::<DecoderKind>().unwrap(), DecoderKind::Bp);
        assert_eq!("mbp-osd-3".parse::<DecoderKind>().unwrap(), DecoderKind::MbpOsd(3));
        assert_eq!("bp-osd-2".parse::<DecoderKind>().unwrap(), DecoderKind::BpOsd(2));
        assert_eq!("osd-0".parse::<DecoderKind>().unwrap(), DecoderKind::Osd(0));
        assert!("osd".parse::<DecoderKind>().is_err());
        assert!("foo-1".parse::<DecoderKind>().is_err());
        for d in [DecoderKind::Bp, DecoderKind::Osd(1), DecoderKind::BpOsd(2), DecoderKind::MbpOsd(3)] {
            assert_eq!(d.to_string().parse::<DecoderKind>().unwrap(), d);
        }
    }

    #[test]
    fn zero_frames_rejected() {
        let mut cfg = CampaignConfig::new("hamming7_4", DecoderKind::Bp, vec![1.0]);
        cfg.stop = StopRule::Frames(0);
        assert!(matches!(run_campaign(&cfg), Err(Error::Config(_))));
        cfg.stop = StopRule::Frames(1);
        cfg.snr_db.clear();
        assert!(matches!(run_campaign(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn beta_sweep_needs_mbposd() {
        let mut cfg = CampaignConfig::new("hamming7_4", DecoderKind::BpOsd(1), vec![1.0]);
        cfg.sweep = SweepAxis::Beta(vec![0.5]);
        assert!(cfg.validate().is_err());
        cfg.decoder = DecoderKind::MbpOsd(1);
        assert!(cfg.validate().is_ok());
        cfg.sweep = SweepAxis::Beta(vec![1.5]);
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn noiseless_bp_campaign() {
        let mut cfg = CampaignConfig::new("ccsds128_64", DecoderKind::Bp, vec![f64::INFINITY]);
        cfg.stop = StopRule::Frames(100);
        let rep = run_campaign(&cfg).unwrap();
        let c = &rep.cells[0];
        assert_eq!((c.frames, c.frame_errors, c.osd_frames), (100, 0, 0));
        assert_eq!(c.bler(), 0.0);
        assert_eq!(c.gamma_hat(), 0.0);
        assert!(c.undetected_ratio().is_nan());
    }

    #[test]
    fn target_errors_stop_exactly() {
        let mut cfg = CampaignConfig::new("hamming7_4", DecoderKind::Bp, vec![0.0]);
        cfg.stop = StopRule::TargetErrors { target: 17, max_frames: 100_000 };
        let c = &run_campaign(&cfg).unwrap().cells[0];
        assert_eq!(c.frame_errors, 17);
        assert!(c.frames < 100_000);
    }

    #[test]
    fn sweep_cells_in_order() {
        let mut cfg = CampaignConfig::new("hamming7_4", DecoderKind::MbpOsd(1), vec![1.0, 2.0]);
        cfg.stop = StopRule::Frames(10);
        cfg.sweep = SweepAxis::Lambda(vec![0.5, 2.0, f64::INFINITY]);
        let rep = run_campaign(&cfg).unwrap();
        let keys: Vec<(f64, Option<f64>)> = rep.cells.iter().map(|c| (c.snr_db, c.sweep_value)).collect();
        assert_eq!(keys.len(), 6);
        assert_eq!(keys[0], (1.0, Some(0.5)));
        assert_eq!(keys[5], (2.0, Some(f64::INFINITY)));
    }

    #[test]
    fn insufficient_errors() {
        let code = codes::load("hamming7_4").unwrap();
        assert!(matches!(
            measure_undetected_ratio(&code, 300.0, f64::INFINITY, 50, 1),
            Err(Error::InsufficientErrors { frames: 50 })
        ));
    }

    #[test]
    fn default_beta_grid_values() {
        let g = default_beta_grid();
        assert_eq!(g.len(), 13);
        assert_eq!(g[0], 0.4);
        assert_eq!(g[5], 0.65);
        assert_eq!(g[12], 1.0);
    }
}

//! The full decoder: BP first, a WHD-gated stopping test, and on failure an
//! offset-weighted refinement of the channel LLR followed by order-m OSD.

use serde::Serialize;

use crate::bp::{alpha_from_girth, BpConfig, BpDecoder, MbpConfig};
use crate::complexity::OpCounters;
use crate::error::{check_len, Error, Result};
use crate::gf2::CodeSpec;
use crate::osd::OsdDecoder;

pub use crate::complexity::complexity_bound;

/// β defaults by OSD order, from β sweeps on the (128,64) CCSDS code.
pub fn default_beta(order: usize) -> f64 {
    match order {
        0 | 1 => 0.65,
        2 => 0.6,
        _ => 0.5,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MbpOsdConfig {
    pub bp: BpConfig,
    pub mbp: MbpConfig,
    pub order: usize,
    /// λ; `f64::INFINITY` reduces the stopping test to the syndrome check.
    pub lambda: f64,
}

impl MbpOsdConfig {
    /// α from the code's girth, β from the order, λ = ∞, T_max = 30.
    pub fn for_code(code: &CodeSpec, order: usize) -> Self {
        MbpOsdConfig {
            bp: BpConfig::default(),
            mbp: MbpConfig { alpha: alpha_from_girth(code.girth()), beta: default_beta(order) },
            order,
            lambda: f64::INFINITY,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.bp.validate()?;
        self.mbp.validate()?;
        validate_lambda(self.lambda)
    }
}

pub(crate) fn validate_lambda(lambda: f64) -> Result<()> {
    if !(lambda > 0.0) {
        return Err(Error::config(format!("lambda must be positive, got {lambda}")));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecodePath {
    /// BP output accepted by the stopping test.
    EarlyTerminated,
    /// Result chosen by the OSD stage.
    OsdSelected,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecodeOutcome {
    pub estimate: Vec<u8>,
    pub path: DecodePath,
    /// D_x on the early path, the OSD winner's distance otherwise.
    pub whd: f64,
    pub counters: OpCounters,
    pub converged_bp: bool,
    pub bp_iters: usize,
}

/// D_x: Σ |ℓ_i| over positions where `x` disagrees with the channel hard
/// decision (ℓ_i ≥ 0 → 0).
pub fn stopping_whd(x: &[u8], channel_llr: &[f64]) -> Result<f64> {
    check_len(channel_llr.len(), x.len())?;
    Ok(x.iter()
        .zip(channel_llr)
        .filter(|(&b, &l)| b != (l < 0.0) as u8)
        .map(|(_, l)| l.abs())
        .sum())
}

/// `x` is a codeword and D_x ≤ λ.
pub fn stopping_criterion(x: &[u8], channel_llr: &[f64], code: &CodeSpec, lambda: f64) -> Result<bool> {
    check_len(code.n(), x.len())?;
    if !code.is_codeword(x) {
        return Ok(false);
    }
    if lambda == f64::INFINITY {
        return Ok(true);
    }
    Ok(stopping_whd(x, channel_llr)? <= lambda)
}

/// Reusable decoder context. Holds per-decode scratch; one per worker.
#[derive(Debug, Clone)]
pub struct MbpOsdDecoder<'c> {
    code: &'c CodeSpec,
    cfg: MbpOsdConfig,
    bp: BpDecoder<'c>,
    osd: OsdDecoder<'c>,
}

impl<'c> MbpOsdDecoder<'c> {
    pub fn new(code: &'c CodeSpec, cfg: MbpOsdConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(MbpOsdDecoder { code, cfg, bp: BpDecoder::new(code, cfg.bp)?, osd: OsdDecoder::new(code, cfg.order) })
    }

    pub fn code(&self) -> &'c CodeSpec {
        self.code
    }

    pub fn config(&self) -> &MbpOsdConfig {
        &self.cfg
    }

    pub fn decode(&mut self, channel_llr: &[f64]) -> Result<DecodeOutcome> {
        let mut counters = OpCounters::default();
        let bp = self.bp.decode(channel_llr, &mut counters)?;
        if bp.converged {
            let dx = stopping_whd(&bp.estimate, channel_llr)?;
            if dx <= self.cfg.lambda {
                return Ok(DecodeOutcome {
                    estimate: bp.estimate,
                    path: DecodePath::EarlyTerminated,
                    whd: dx,
                    counters,
                    converged_bp: true,
                    bp_iters: bp.iters_used,
                });
            }
        }
        let refined = self.bp.refine(channel_llr, &self.cfg.mbp, &mut counters)?;
        let osd = self.osd.decode(&refined, &mut counters)?;
        Ok(DecodeOutcome {
            estimate: osd.estimate,
            path: DecodePath::OsdSelected,
            whd: osd.whd,
            counters,
            converged_bp: bp.converged,
            bp_iters: bp.iters_used,
        })
    }

    /// The LLR the OSD stage would see for this input.
    pub fn refined_llr(&mut self, channel_llr: &[f64]) -> Result<Vec<f64>> {
        Ok(self.bp.refine(channel_llr, &self.cfg.mbp, &mut OpCounters::default())?.into_inner())
    }
}

/// Plain concatenation: BP, and on a nonzero syndrome, OSD on BP's final
/// posterior.
#[derive(Debug, Clone)]
pub struct BpOsdDecoder<'c> {
    bp: BpDecoder<'c>,
    osd: OsdDecoder<'c>,
}

impl<'c> BpOsdDecoder<'c> {
    pub fn new(code: &'c CodeSpec, order: usize, bp_cfg: BpConfig) -> Result<Self> {
        Ok(BpOsdDecoder { bp: BpDecoder::new(code, bp_cfg)?, osd: OsdDecoder::new(code, order) })
    }

    pub fn decode(&mut self, channel_llr: &[f64]) -> Result<DecodeOutcome> {
        let mut counters = OpCounters::default();
        let bp = self.bp.decode(channel_llr, &mut counters)?;
        if bp.converged {
            let dx = stopping_whd(&bp.estimate, channel_llr)?;
            return Ok(DecodeOutcome {
                estimate: bp.estimate,
                path: DecodePath::EarlyTerminated,
                whd: dx,
                counters,
                converged_bp: true,
                bp_iters: bp.iters_used,
            });
        }
        let osd = self.osd.decode(&bp.posterior, &mut counters)?;
        Ok(DecodeOutcome {
            estimate: osd.estimate,
            path: DecodePath::OsdSelected,
            whd: osd.whd,
            counters,
            converged_bp: false,
            bp_iters: bp.iters_used,
        })
    }
}

pub fn mbposd_decode(code: &CodeSpec, channel_llr: &[f64], cfg: &MbpOsdConfig) -> Result<DecodeOutcome> {
    MbpOsdDecoder::new(code, *cfg)?.decode(channel_llr)
}

pub fn bp_osd_baseline_decode(
    code: &CodeSpec,
    channel_llr: &[f64],
    order: usize,
    bp_cfg: &BpConfig,
) -> Result<DecodeOutcome> {
    BpOsdDecoder::new(code, order, *bp_cfg)?.decode(channel_llr)
}

//! Flooding-schedule sum-product decoding and the offset-weighted variant
//! used to refine LLRs ahead of OSD.

use crate::channel::{LlrVector, DEFAULT_L_MAX};
use crate::complexity::{BpIterationCost, OpCounters};
use crate::error::{check_len, Error, Result};
use crate::gf2::{CodeSpec, Girth};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BpConfig {
    /// T_max.
    pub max_iters: usize,
    /// Bound applied to every message and posterior.
    pub l_max: f64,
    /// The tanh product is clamped to `±(1 − tanh_eps)` before `atanh`.
    pub tanh_eps: f64,
}

impl Default for BpConfig {
    fn default() -> Self {
        BpConfig { max_iters: 30, l_max: DEFAULT_L_MAX, tanh_eps: 1e-12 }
    }
}

impl BpConfig {
    pub fn with_max_iters(max_iters: usize) -> Self {
        BpConfig { max_iters, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_iters == 0 {
            return Err(Error::config("max_iters must be at least 1"));
        }
        if !(self.l_max > 0.0) {
            return Err(Error::config("l_max must be positive"));
        }
        if !(self.tanh_eps > 0.0 && self.tanh_eps < 1.0) {
            return Err(Error::config("tanh_eps must lie in (0, 1)"));
        }
        Ok(())
    }
}

/// Iteration count α and extrinsic weight β of the refinement stage.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MbpConfig {
    pub alpha: usize,
    pub beta: f64,
}

impl MbpConfig {
    pub fn validate(&self) -> Result<()> {
        if self.alpha == 0 {
            return Err(Error::config("alpha must be at least 1"));
        }
        if !(self.beta > 0.0 && self.beta <= 1.0) {
            return Err(Error::config(format!("beta must lie in (0, 1], got {}", self.beta)));
        }
        Ok(())
    }
}

/// α = ⌊g/4 + 1⌋. A cycle-free graph gets α = 2.
pub fn alpha_from_girth(girth: Girth) -> usize {
    match girth {
        Girth::Finite(g) => g / 4 + 1,
        Girth::Acyclic => 2,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BpOutput {
    pub estimate: Vec<u8>,
    pub posterior: LlrVector,
    /// The estimate has zero syndrome.
    pub converged: bool,
    pub iters_used: usize,
}

/// Check-to-variable messages for one check node:
/// `E_i = 2·atanh(∏_{i'≠i} tanh(M_i'/2))`, clamped and clipped.
pub fn check_node_update(incoming: &[f64], cfg: &BpConfig) -> Vec<f64> {
    let mut out = vec![0.0; incoming.len()];
    let mut scratch = vec![0.0; incoming.len()];
    check_update_into(incoming, &mut out, &mut scratch, cfg);
    out
}

#[inline]
fn check_update_into(incoming: &[f64], out: &mut [f64], scratch: &mut [f64], cfg: &BpConfig) {
    let d = incoming.len();
    // scratch holds tanh values; out first holds suffix products.
    for (t, &m) in scratch.iter_mut().zip(incoming) {
        *t = (0.5 * m).tanh();
    }
    let mut acc = 1.0;
    for e in (0..d).rev() {
        out[e] = acc;
        acc *= scratch[e];
    }
    let bound = 1.0 - cfg.tanh_eps;
    let mut prefix = 1.0;
    for e in 0..d {
        let p = (prefix * out[e]).clamp(-bound, bound);
        prefix *= scratch[e];
        out[e] = (2.0 * libm::atanh(p)).clamp(-cfg.l_max, cfg.l_max);
    }
}

/// Variable-to-check messages and posterior for one variable node:
/// `M_j = ℓ + β·Σ_{j'≠j} E_j'` and `L = ℓ + β·Σ_j E_j`, clipped to `±l_max`.
pub fn variable_node_update(llr: f64, extrinsics: &[f64], beta: f64, l_max: f64) -> (Vec<f64>, f64) {
    let total: f64 = extrinsics.iter().sum();
    let msgs = extrinsics.iter().map(|&e| (llr + beta * (total - e)).clamp(-l_max, l_max)).collect();
    (msgs, (llr + beta * total).clamp(-l_max, l_max))
}

/// Reusable BP state for one code. One instance per worker.
#[derive(Debug, Clone)]
pub struct BpDecoder<'c> {
    code: &'c CodeSpec,
    cfg: BpConfig,
    cost: BpIterationCost,
    v2c: Vec<f64>,
    c2v: Vec<f64>,
    posterior: Vec<f64>,
    hard: Vec<u8>,
    scratch: Vec<f64>,
}

impl<'c> BpDecoder<'c> {
    pub fn new(code: &'c CodeSpec, cfg: BpConfig) -> Result<Self> {
        cfg.validate()?;
        let edges = code.graph().num_edges();
        let max_deg = (0..code.graph().num_checks())
            .map(|j| code.graph().check_range(j).len())
            .max()
            .unwrap_or(0);
        Ok(BpDecoder {
            code,
            cfg,
            cost: BpIterationCost::for_code(code.n(), code.k()),
            v2c: vec![0.0; edges],
            c2v: vec![0.0; edges],
            posterior: vec![0.0; code.n()],
            hard: vec![0; code.n()],
            scratch: vec![0.0; max_deg],
        })
    }

    pub fn config(&self) -> &BpConfig {
        &self.cfg
    }

    /// Standard BP: iterate until the hard decision is a codeword or
    /// `max_iters` is reached.
    pub fn decode(&mut self, llr: &[f64], counters: &mut OpCounters) -> Result<BpOutput> {
        check_len(self.code.n(), llr.len())?;
        self.reset();
        let mut converged = false;
        let mut iters = 0;
        while iters < self.cfg.max_iters {
            self.iterate(llr, 1.0);
            counters.add_bp_iteration(&self.cost, false);
            iters += 1;
            if self.syndrome_is_zero() {
                converged = true;
                break;
            }
        }
        Ok(BpOutput {
            estimate: self.hard.clone(),
            posterior: self.posterior.clone().into(),
            converged,
            iters_used: iters,
        })
    }

    /// Runs exactly `iters` flooding iterations with extrinsic weight `beta`,
    /// starting from zero check messages, and returns the posterior.
    pub fn run_fixed(
        &mut self,
        llr: &[f64],
        iters: usize,
        beta: f64,
        modified: bool,
        counters: &mut OpCounters,
    ) -> Result<LlrVector> {
        check_len(self.code.n(), llr.len())?;
        self.reset();
        for _ in 0..iters {
            self.iterate(llr, beta);
            counters.add_bp_iteration(&self.cost, modified);
        }
        Ok(self.posterior.clone().into())
    }

    /// Offset-weighted refinement: α iterations from the channel LLR.
    pub fn refine(&mut self, llr: &[f64], mbp: &MbpConfig, counters: &mut OpCounters) -> Result<LlrVector> {
        mbp.validate()?;
        self.run_fixed(llr, mbp.alpha, mbp.beta, true, counters)
    }

    fn reset(&mut self) {
        self.c2v.fill(0.0);
    }

    fn iterate(&mut self, llr: &[f64], beta: f64) {
        let g = self.code.graph();
        let l_max = self.cfg.l_max;
        for (i, &l) in llr.iter().enumerate() {
            let edges = g.var_edges(i);
            let total: f64 = edges.iter().map(|&e| self.c2v[e]).sum();
            for &e in edges {
                self.v2c[e] = (l + beta * (total - self.c2v[e])).clamp(-l_max, l_max);
            }
        }
        for j in 0..g.num_checks() {
            let r = g.check_range(j);
            let d = r.len();
            check_update_into(&self.v2c[r.clone()], &mut self.c2v[r], &mut self.scratch[..d], &self.cfg);
        }
        for (i, &l) in llr.iter().enumerate() {
            let total: f64 = g.var_edges(i).iter().map(|&e| self.c2v[e]).sum();
            let post = (l + beta * total).clamp(-l_max, l_max);
            self.posterior[i] = post;
            self.hard[i] = (post < 0.0) as u8;
        }
    }

    fn syndrome_is_zero(&self) -> bool {
        let g = self.code.graph();
        (0..g.num_checks()).all(|j| g.check_neighbors(j).iter().fold(0u8, |acc, &i| acc ^ self.hard[i]) == 0)
    }
}

/// One-shot BP decode. Counter increments are discarded.
pub fn bp_decode(code: &CodeSpec, llr: &[f64], cfg: &BpConfig) -> Result<BpOutput> {
    BpDecoder::new(code, *cfg)?.decode(llr, &mut OpCounters::default())
}

/// One-shot refinement: exactly `mbp.alpha` offset-weighted iterations on
/// the channel LLR, no early exit.
pub fn mbp_refine(code: &CodeSpec, llr: &[f64], mbp: &MbpConfig, bp_cfg: &BpConfig) -> Result<LlrVector> {
    BpDecoder::new(code, *bp_cfg)?.refine(llr, mbp, &mut OpCounters::default())
}

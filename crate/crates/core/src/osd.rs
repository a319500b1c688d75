//! Order-m ordered statistics decoding.
//!
//! The input LLR is sorted by reliability, the generator is brought into
//! systematic form over the most reliable independent positions, and every
//! test error pattern of weight ≤ m is re-encoded. The candidate closest to
//! the hard decision in weighted Hamming distance wins.

use crate::complexity::{osd_complexity_estimate, OpCounters};
use crate::error::{check_len, Error, Result};
use crate::gf2::{gaussian_eliminate, hard_decision, pack, BitMatrix, CodeSpec};

pub use crate::complexity::{osd_complexity_estimate as complexity_estimate, OsdCost};

/// A test error pattern: the set of flipped MRP positions (0-based, sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tep {
    support: Vec<usize>,
}

impl Tep {
    pub fn new(mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        Tep { support }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn weight(&self) -> usize {
        self.support.len()
    }

    /// The pattern as a 0/1 vector of length `k`.
    pub fn to_bits(&self, k: usize) -> Vec<u8> {
        let mut e = vec![0u8; k];
        for &p in &self.support {
            e[p] = 1;
        }
        e
    }
}

/// All weight-`q` patterns over `k` positions in lexicographic order of
/// support. Empty when `q > k`.
pub fn enumerate_teps(k: usize, q: usize) -> impl Iterator<Item = Tep> {
    let mut idx: Option<Vec<usize>> = if q <= k { Some((0..q).collect()) } else { None };
    std::iter::from_fn(move || {
        let cur = idx.take()?;
        let out = Tep { support: cur.clone() };
        // Advance to the next combination, if any.
        let mut next = cur;
        let mut i = q;
        while i > 0 {
            i -= 1;
            if next[i] < k - q + i {
                next[i] += 1;
                for j in i + 1..q {
                    next[j] = next[j - 1] + 1;
                }
                idx = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Weighted Hamming distance: Σ |ℓ_i| over positions where the words differ.
pub fn whd(candidate: &[u8], y: &[u8], sorted_llr: &[f64]) -> Result<f64> {
    check_len(y.len(), candidate.len())?;
    check_len(y.len(), sorted_llr.len())?;
    Ok(candidate
        .iter()
        .zip(y)
        .zip(sorted_llr)
        .filter(|((c, y), _)| c != y)
        .map(|(_, l)| l.abs())
        .sum())
}

/// Reliability-sorted view of one OSD input.
#[derive(Debug, Clone)]
pub struct OsdWorkspace {
    /// ℓ'' in sorted coordinates.
    pub sorted_llr: Vec<f64>,
    /// `perm[j]` is the original position placed at sorted position `j`.
    pub perm: Vec<usize>,
    /// `inverse[perm[j]] == j`.
    pub inverse: Vec<usize>,
    /// G'' = [I_K | P].
    pub gsys: BitMatrix,
    /// Hard decision of ℓ''.
    pub y: Vec<u8>,
}

impl OsdWorkspace {
    /// Sorts by |ℓ| descending (ties by ascending index) and systematizes
    /// `gen` over the reordered columns.
    pub fn from_generator(gen: &BitMatrix, llr: &[f64]) -> Result<Self> {
        check_len(gen.cols(), llr.len())?;
        if llr.iter().any(|l| !l.is_finite()) {
            return Err(Error::config("LLR input must be finite"));
        }
        let mut order: Vec<usize> = (0..llr.len()).collect();
        order.sort_by(|&a, &b| llr[b].abs().total_cmp(&llr[a].abs()));
        let (gsys, pi2) = gaussian_eliminate(gen, &order)?;
        let perm: Vec<usize> = pi2.iter().map(|&p| order[p]).collect();
        let mut inverse = vec![0; perm.len()];
        for (j, &p) in perm.iter().enumerate() {
            inverse[p] = j;
        }
        let sorted_llr: Vec<f64> = perm.iter().map(|&p| llr[p]).collect();
        let y = hard_decision(&sorted_llr);
        Ok(OsdWorkspace { sorted_llr, perm, inverse, gsys, y })
    }

    pub fn k(&self) -> usize {
        self.gsys.rows()
    }

    /// y_B, the hard decision on the most reliable basis.
    pub fn y_b(&self) -> &[u8] {
        &self.y[..self.k()]
    }

    /// Sorted-domain word back to original coordinates.
    pub fn restore<T: Copy + Default>(&self, sorted: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); sorted.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            out[p] = sorted[j];
        }
        out
    }

    /// Original-coordinate word into sorted coordinates.
    pub fn apply<T: Copy>(&self, original: &[T]) -> Vec<T> {
        self.perm.iter().map(|&p| original[p]).collect()
    }

    /// `(y_B ⊕ e) · G''` computed directly.
    pub fn encode_tep(&self, tep: &Tep) -> Vec<u8> {
        let mut msg = self.y_b().to_vec();
        for &p in tep.support() {
            msg[p] ^= 1;
        }
        self.gsys.left_mul(&msg)
    }
}

pub fn prepare_workspace(code: &CodeSpec, llr: &[f64]) -> Result<OsdWorkspace> {
    OsdWorkspace::from_generator(code.gen(), llr)
}

/// One reprocessing candidate, in sorted coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub codeword: Vec<u8>,
    pub whd: f64,
    pub tep_weight: usize,
    pub support: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OsdOutput {
    /// Winning codeword in original coordinates.
    pub estimate: Vec<u8>,
    pub whd: f64,
    /// Weight of the winning test pattern.
    pub best_phase: usize,
    pub best_support: Vec<usize>,
}

/// Reusable OSD engine for a fixed code and order.
#[derive(Debug, Clone)]
pub struct OsdDecoder<'c> {
    code: &'c CodeSpec,
    order: usize,
    cost: OsdCost,
    // Parity part of each G'' row, `pw` words per row.
    prows: Vec<u64>,
    pw: usize,
    // Per-byte lookup of Σ|ℓ''| over set bits of the parity mismatch.
    table: Vec<f64>,
    mrp_w: Vec<f64>,
    // One mismatch buffer per DFS depth.
    stack: Vec<u64>,
    best_whd: f64,
    best_support: Vec<usize>,
    path: Vec<usize>,
}

impl<'c> OsdDecoder<'c> {
    pub fn new(code: &'c CodeSpec, order: usize) -> Self {
        let order = order.min(code.k());
        let m = code.n() - code.k();
        let pw = m.div_ceil(64).max(1);
        OsdDecoder {
            code,
            order,
            cost: osd_complexity_estimate(code.n(), code.k(), order),
            prows: vec![0; code.k() * pw],
            pw,
            table: vec![0.0; m.div_ceil(8) * 256],
            mrp_w: vec![0.0; code.k()],
            stack: vec![0; (order + 1) * pw],
            best_whd: f64::INFINITY,
            best_support: Vec::with_capacity(order),
            path: Vec::with_capacity(order),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn decode(&mut self, llr: &[f64], counters: &mut OpCounters) -> Result<OsdOutput> {
        let ws = prepare_workspace(self.code, llr)?;
        let out = self.reprocess(&ws);
        counters.add_osd(&self.cost);
        Ok(out)
    }

    /// Decodes and also returns every candidate in enumeration order, each
    /// re-encoded through G'' and scored with [`whd`] independently of the
    /// fast path.
    pub fn decode_with_candidates(&mut self, llr: &[f64]) -> Result<(OsdOutput, Vec<Candidate>, OsdWorkspace)> {
        let ws = prepare_workspace(self.code, llr)?;
        let out = self.reprocess(&ws);
        let mut cands = Vec::new();
        for q in 0..=self.order {
            for tep in enumerate_teps(ws.k(), q) {
                let cw = ws.encode_tep(&tep);
                let d = whd(&cw, &ws.y, &ws.sorted_llr)?;
                cands.push(Candidate { codeword: cw, whd: d, tep_weight: q, support: tep.support });
            }
        }
        Ok((out, cands, ws))
    }

    fn reprocess(&mut self, ws: &OsdWorkspace) -> OsdOutput {
        let (n, k) = (self.code.n(), self.code.k());
        let m = n - k;
        let pw = self.pw;

        for r in 0..k {
            let dst = &mut self.prows[r * pw..(r + 1) * pw];
            dst.fill(0);
            for c in 0..m {
                if ws.gsys.get(r, k + c) {
                    dst[c / 64] |= 1 << (c % 64);
                }
            }
        }
        for (w, l) in self.mrp_w.iter_mut().zip(&ws.sorted_llr[..k]) {
            *w = l.abs();
        }
        let par_w = &ws.sorted_llr[k..];
        for b in 0..m.div_ceil(8) {
            let t = &mut self.table[b * 256..(b + 1) * 256];
            t[0] = 0.0;
            for v in 1..256usize {
                let low = v.trailing_zeros() as usize;
                let w = par_w.get(8 * b + low).map_or(0.0, |l| l.abs());
                t[v] = t[v & (v - 1)] + w;
            }
        }

        // Phase-0 parity mismatch d0 = (y_B · P) ⊕ y_P.
        let y_p = pack(&ws.y[k..]);
        let d0 = &mut self.stack[..pw];
        d0.fill(0);
        d0[..y_p.len()].copy_from_slice(&y_p);
        for r in (0..k).filter(|&r| ws.y[r] == 1) {
            for (d, p) in d0.iter_mut().zip(&self.prows[r * pw..(r + 1) * pw]) {
                *d ^= p;
            }
        }

        self.best_whd = f64::INFINITY;
        self.best_support.clear();
        self.path.clear();
        for q in 0..=self.order {
            self.dfs(0, 0, q, 0.0);
        }

        // Rebuild the winner: MRP bits y_B ⊕ e, parity bits via the rows of P.
        let mut sorted = ws.y.clone();
        let mut parity: Vec<u64> = self.stack[..pw].to_vec();
        for &r in &self.best_support {
            sorted[r] ^= 1;
            for (d, p) in parity.iter_mut().zip(&self.prows[r * pw..(r + 1) * pw]) {
                *d ^= p;
            }
        }
        for c in 0..m {
            if (parity[c / 64] >> (c % 64)) & 1 == 1 {
                sorted[k + c] ^= 1;
            }
        }
        OsdOutput {
            estimate: ws.restore(&sorted),
            whd: self.best_whd,
            best_phase: self.best_support.len(),
            best_support: self.best_support.clone(),
        }
    }

    #[inline]
    fn parity_whd(&self, d: &[u64]) -> f64 {
        let mut s = 0.0;
        let nbytes = self.table.len() / 256;
        for b in 0..nbytes {
            let byte = ((d[b / 8] >> (8 * (b % 8))) & 0xff) as usize;
            s += self.table[b * 256 + byte];
        }
        s
    }

    /// Visits all supports of size `remaining` more positions above `start`,
    /// in lexicographic order. `level` indexes the mismatch buffer holding
    /// the partial XOR.
    fn dfs(&mut self, level: usize, start: usize, remaining: usize, mrp: f64) {
        let pw = self.pw;
        if remaining == 0 {
            let d = mrp + self.parity_whd(&self.stack[level * pw..(level + 1) * pw]);
            if d < self.best_whd {
                self.best_whd = d;
                self.best_support.clear();
                self.best_support.extend_from_slice(&self.path);
            }
            return;
        }
        let k = self.mrp_w.len();
        for r in start..=(k - remaining) {
            let (lo, hi) = self.stack.split_at_mut((level + 1) * pw);
            let src = &lo[level * pw..];
            let dst = &mut hi[..pw];
            for ((d, s), p) in dst.iter_mut().zip(src).zip(&self.prows[r * pw..(r + 1) * pw]) {
                *d = s ^ p;
            }
            self.path.push(r);
            self.dfs(level + 1, r + 1, remaining - 1, mrp + self.mrp_w[r]);
            self.path.pop();
        }
    }
}

/// One-shot order-m OSD.
pub fn osd_decode(code: &CodeSpec, llr: &[f64], order: usize) -> Result<OsdOutput> {
    OsdDecoder::new(code, order).decode(llr, &mut OpCounters::default())
}

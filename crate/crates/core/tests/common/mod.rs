//! Test oracles shared by the integration suites.
#![allow(dead_code)]

use mbposd_core::gf2::{gaussian_eliminate, BitMatrix};
use mbposd_core::osd::{whd, OsdWorkspace};
use mbposd_core::{bp_decode, BpConfig, CodeSpec};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every codeword of a small code, byte-packed, for exhaustive ML search.
pub struct Codebook {
    pub n: usize,
    bytes: usize,
    words: Vec<u8>,
}

impl Codebook {
    /// Gray-code walk over all 2^K messages.
    pub fn new(code: &CodeSpec) -> Self {
        let (n, k) = (code.n(), code.k());
        assert!(k <= 24, "codebook too large");
        let bytes = n.div_ceil(8);
        let rows: Vec<Vec<u8>> = (0..k).map(|r| pack_bytes(&code.gen().row_bits(r))).collect();
        let mut words = vec![0u8; bytes << k];
        let mut cur = vec![0u8; bytes];
        for step in 1usize..(1 << k) {
            let flip = step.trailing_zeros() as usize;
            for (c, r) in cur.iter_mut().zip(&rows[flip]) {
                *c ^= r;
            }
            words[step * bytes..(step + 1) * bytes].copy_from_slice(&cur);
        }
        Codebook { n, bytes, words }
    }

    pub fn len(&self) -> usize {
        self.words.len() / self.bytes
    }

    pub fn word(&self, idx: usize) -> Vec<u8> {
        let w = &self.words[idx * self.bytes..(idx + 1) * self.bytes];
        (0..self.n).map(|i| (w[i / 8] >> (i % 8)) & 1).collect()
    }

    /// Minimum weighted Hamming distance to the hard decision of `llr`
    /// (equivalently, maximum correlation). Returns (codeword, distance).
    /// Ties keep the first codeword in walk order.
    pub fn ml_decode(&self, llr: &[f64]) -> (Vec<u8>, f64) {
        assert_eq!(llr.len(), self.n);
        let hard: Vec<u8> = llr.iter().map(|&l| (l < 0.0) as u8).collect();
        let y = pack_bytes(&hard);
        // table[b][v] = Σ|ℓ| over the set bits of v in byte b.
        let mut table = vec![[0.0f64; 256]; self.bytes];
        for (b, t) in table.iter_mut().enumerate() {
            for v in 1..256usize {
                let low = v.trailing_zeros() as usize;
                let pos = 8 * b + low;
                let w = if pos < self.n { llr[pos].abs() } else { 0.0 };
                t[v] = t[v & (v - 1)] + w;
            }
        }
        let mut best = (f64::INFINITY, 0usize);
        for (idx, w) in self.words.chunks_exact(self.bytes).enumerate() {
            let d: f64 = w.iter().zip(&y).zip(&table).map(|((a, b), t)| t[(a ^ b) as usize]).sum();
            if d < best.0 {
                best = (d, idx);
            }
        }
        (self.word(best.1), best.0)
    }
}

fn pack_bytes(bits: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; bits.len().div_ceil(8)];
    for (i, &b) in bits.iter().enumerate() {
        out[i / 8] |= (b & 1) << (i % 8);
    }
    out
}

/// Direct transcription of flooding sum-product with offset weight `beta`,
/// run for exactly `iters` iterations from zero check messages. Products and
/// sums over "all neighbours but one" are recomputed per edge.
pub fn reference_bp_posterior(pcm: &BitMatrix, llr: &[f64], iters: usize, beta: f64, l_max: f64, eps: f64) -> Vec<f64> {
    let (m, n) = (pcm.rows(), pcm.cols());
    let mut e = vec![vec![0.0f64; n]; m];
    let mut post = llr.to_vec();
    for _ in 0..iters {
        let mut msg = vec![vec![0.0f64; n]; m];
        for i in 0..n {
            for j in (0..m).filter(|&j| pcm.get(j, i)) {
                let mut s = 0.0;
                for j2 in (0..m).filter(|&j2| j2 != j && pcm.get(j2, i)) {
                    s += e[j2][i];
                }
                msg[j][i] = (llr[i] + beta * s).clamp(-l_max, l_max);
            }
        }
        for j in 0..m {
            for i in (0..n).filter(|&i| pcm.get(j, i)) {
                let mut p = 1.0;
                for i2 in (0..n).filter(|&i2| i2 != i && pcm.get(j, i2)) {
                    p *= (msg[j][i2] / 2.0).tanh();
                }
                let p = p.clamp(-(1.0 - eps), 1.0 - eps);
                e[j][i] = (2.0 * p.atanh()).clamp(-l_max, l_max);
            }
        }
        for i in 0..n {
            let s: f64 = (0..m).filter(|&j| pcm.get(j, i)).map(|j| e[j][i]).sum();
            post[i] = (llr[i] + beta * s).clamp(-l_max, l_max);
        }
    }
    post
}

/// Random K×N matrix of full row rank (rejection sampling).
pub fn random_full_rank(rng: &mut impl Rng, k: usize, n: usize) -> BitMatrix {
    loop {
        let mut m = BitMatrix::zeros(k, n);
        for r in 0..k {
            for c in 0..n {
                if rng.random::<bool>() {
                    m.set(r, c, true);
                }
            }
        }
        if m.rank() == k {
            return m;
        }
    }
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn gaussian_llr(rng: &mut impl Rng, n: usize, mean: f64, sd: f64) -> Vec<f64> {
    use rand_distr::{Distribution, Normal};
    let d = Normal::new(mean, sd).unwrap();
    (0..n).map(|_| d.sample(rng)).collect()
}

/// Systematic form, row space and π2 structure after elimination.
pub fn check_ge_invariants(mat: &BitMatrix, order: &[usize]) -> Result<(), String> {
    let (k, n) = (mat.rows(), mat.cols());
    let (g, pi2) = gaussian_eliminate(mat, order).map_err(|e| e.to_string())?;
    for r in 0..k {
        for c in 0..k {
            if g.get(r, c) != (r == c) {
                return Err(format!("left block not identity at ({r},{c})"));
            }
        }
    }
    let mut sorted = pi2.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err("pi2 is not a permutation".into());
    }
    // Both segments keep their relative order.
    if !pi2[..k].windows(2).all(|w| w[0] < w[1]) || !pi2[k..].windows(2).all(|w| w[0] < w[1]) {
        return Err(format!("pi2 segments not monotone: {pi2:?}"));
    }
    let composite: Vec<usize> = pi2.iter().map(|&p| order[p]).collect();
    if !g.same_row_space(&mat.permute_columns(&composite)) {
        return Err("row space changed".into());
    }
    Ok(())
}

/// `restore(apply(x)) == x` and `apply` follows the stored permutation.
pub fn check_permutation_round_trip(ws: &OsdWorkspace, x: &[u8]) -> Result<(), String> {
    let fwd = ws.apply(x);
    for (j, &p) in ws.perm.iter().enumerate() {
        if fwd[j] != x[p] {
            return Err(format!("apply mismatch at {j}"));
        }
    }
    if ws.restore(&fwd) != x {
        return Err("restore(apply(x)) != x".into());
    }
    let back = ws.restore(x);
    if ws.apply(&back) != x {
        return Err("apply(restore(x)) != x".into());
    }
    Ok(())
}

/// Flipping the LLR signs on the support of a codeword `c` maps the BP
/// estimate to `estimate ⊕ c` with identical iteration count.
pub fn check_bp_codeword_symmetry(code: &CodeSpec, llr: &[f64], c: &[u8], cfg: &BpConfig) -> Result<(), String> {
    let base = bp_decode(code, llr, cfg).map_err(|e| e.to_string())?;
    let flipped: Vec<f64> = llr.iter().zip(c).map(|(&l, &b)| if b == 1 { -l } else { l }).collect();
    let out = bp_decode(code, &flipped, cfg).map_err(|e| e.to_string())?;
    if base.posterior.contains(&0.0) {
        return Ok(()); // the L = 0 → bit 0 rule is not sign-symmetric
    }
    let expect: Vec<u8> = base.estimate.iter().zip(c).map(|(a, b)| a ^ b).collect();
    if out.estimate != expect || out.iters_used != base.iters_used || out.converged != base.converged {
        return Err("symmetry broken".into());
    }
    for ((a, b), &bit) in base.posterior.iter().zip(out.posterior.iter()).zip(c) {
        let s = if bit == 1 { -1.0 } else { 1.0 };
        if *b != s * a {
            return Err(format!("posterior {b} != {}", s * a));
        }
    }
    Ok(())
}

/// WHD of a candidate in sorted coordinates, recomputed from scratch.
pub fn sorted_whd(ws: &OsdWorkspace, cw_sorted: &[u8]) -> f64 {
    whd(cw_sorted, &ws.y, &ws.sorted_llr).unwrap()
}

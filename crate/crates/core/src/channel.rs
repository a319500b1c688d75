//! BPSK over AWGN with per-frame reproducible noise.
//!
//! SNR is `2 / N0` with unit-energy symbols, so for rate-1/2 codes it
//! coincides with Eb/N0.

use std::ops::Deref;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Default LLR magnitude bound applied to channel and decoder messages.
pub const DEFAULT_L_MAX: f64 = 30.0;

/// SNRs above this are treated as this value (N0 ≈ 2e-30).
pub const MAX_SNR_DB: f64 = 300.0;

const PAYLOAD_SALT: u64 = 0x5851_f42d_4c95_7f2d;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelParams {
    snr_db: f64,
    n0: f64,
    seed: u64,
}

impl ChannelParams {
    pub fn new(snr_db: f64, seed: u64) -> Result<Self> {
        if snr_db.is_nan() || snr_db == f64::NEG_INFINITY {
            return Err(Error::config(format!("invalid SNR {snr_db} dB")));
        }
        let snr_db = snr_db.min(MAX_SNR_DB);
        let n0 = 2.0 / 10f64.powf(snr_db / 10.0);
        Ok(ChannelParams { snr_db, n0, seed })
    }

    pub fn snr_db(&self) -> f64 {
        self.snr_db
    }

    pub fn snr_linear(&self) -> f64 {
        10f64.powf(self.snr_db / 10.0)
    }

    pub fn n0(&self) -> f64 {
        self.n0
    }

    pub fn noise_std(&self) -> f64 {
        (self.n0 / 2.0).sqrt()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Channel or posterior log-likelihood ratios. Positive favours bit 0.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LlrVector(Vec<f64>);

impl LlrVector {
    pub fn new(values: Vec<f64>) -> Self {
        LlrVector(values)
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
}

impl Deref for LlrVector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for LlrVector {
    fn from(v: Vec<f64>) -> Self {
        LlrVector(v)
    }
}

/// `s = 1 − 2c`.
pub fn modulate(codeword: &[u8]) -> Vec<f64> {
    codeword.iter().map(|&c| 1.0 - 2.0 * f64::from(c & 1)).collect()
}

/// Inverse of [`modulate`] for ±1 symbols.
pub fn demodulate(symbols: &[f64]) -> Vec<u8> {
    symbols.iter().map(|&s| (s < 0.0) as u8).collect()
}

/// Noise generator for frame `trial_index`; a pure function of the pair.
pub fn noise_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index);
    rng
}

/// Message-bit generator for frame `trial_index`, independent of the noise.
pub fn payload_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ PAYLOAD_SALT);
    rng.set_stream(trial_index);
    rng
}

/// `r = s + w`, `w ~ N(0, N0/2)` drawn from the frame's own stream.
pub fn transmit(symbols: &[f64], params: &ChannelParams, trial_index: u64) -> Vec<f64> {
    let mut rng = noise_rng(params.seed, trial_index);
    let std = params.noise_std();
    symbols
        .iter()
        .map(|&s| {
            let z: f64 = rng.sample(StandardNormal);
            s + std * z
        })
        .collect()
}

/// `ℓ_i = 4 r_i / N0`, clipped to `±DEFAULT_L_MAX`.
pub fn channel_llr(received: &[f64], params: &ChannelParams) -> LlrVector {
    channel_llr_clipped(received, params, DEFAULT_L_MAX)
}

pub fn channel_llr_clipped(received: &[f64], params: &ChannelParams, l_max: f64) -> LlrVector {
    let scale = 4.0 / params.n0;
    received.iter().map(|&r| (scale * r).clamp(-l_max, l_max)).collect::<Vec<_>>().into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::hard_decision;

    #[test]
    fn modulation() {
        assert_eq!(modulate(&[0, 0, 0]), vec![1.0, 1.0, 1.0]);
        assert_eq!(modulate(&[1, 0, 1]), vec![-1.0, 1.0, -1.0]);
        let s = vec![1.0, -1.0, -1.0, 1.0];
        assert_eq!(modulate(&demodulate(&s)), s);
    }

    #[test]
    fn params_relation() {
        for db in [-3.0, 0.0, 1.5, 7.0] {
            let p = ChannelParams::new(db, 0).unwrap();
            assert!((p.n0() * p.snr_linear() - 2.0).abs() < 1e-12);
        }
        assert!(ChannelParams::new(f64::NAN, 0).is_err());
        let inf = ChannelParams::new(f64::INFINITY, 0).unwrap();
        assert_eq!(inf.snr_db(), MAX_SNR_DB);
    }

    #[test]
    fn noiseless_limit() {
        let p = ChannelParams::new(f64::INFINITY, 3).unwrap();
        let s = modulate(&[0, 1, 1, 0, 1]);
        let r = transmit(&s, &p, 17);
        for (a, b) in r.iter().zip(&s) {
            assert!((a - b).abs() < 1e-10);
        }
        assert_eq!(hard_decision(&channel_llr(&r, &p)), vec![0, 1, 1, 0, 1]);
    }

    #[test]
    fn deterministic_per_trial() {
        let p = ChannelParams::new(1.0, 99).unwrap();
        let s = modulate(&[0; 64]);
        assert_eq!(transmit(&s, &p, 5), transmit(&s, &p, 5));
        assert_ne!(transmit(&s, &p, 5), transmit(&s, &p, 6));
    }

    #[test]
    fn llr_values() {
        let p = ChannelParams::new(0.0, 0).unwrap();
        assert!((p.n0() - 2.0).abs() < 1e-15);
        let l = channel_llr(&[0.5, -1.0, 0.0, 1e6], &p);
        assert_eq!(&l[..], &[1.0, -2.0, 0.0, DEFAULT_L_MAX]);
        let neg = channel_llr(&[-0.5, 1.0, -0.0, -1e6], &p);
        for (a, b) in l.iter().zip(neg.iter()) {
            assert_eq!(*a, -*b);
        }
    }
}

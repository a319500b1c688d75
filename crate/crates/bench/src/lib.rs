//! Fixtures shared by the benchmarks.

use mbposd_core::channel::ChannelParams;
use mbposd_core::sim::generate_frame;
use mbposd_core::{codes, CodeSpec};

pub fn code(name: &str) -> CodeSpec {
    codes::load(name).expect("bundled code")
}

/// `count` noisy frames of `code` at `snr_db`, seed 1.
pub fn frames(code: &CodeSpec, snr_db: f64, count: u64) -> Vec<Vec<f64>> {
    let params = ChannelParams::new(snr_db, 1).expect("valid SNR");
    (0..count).map(|t| generate_frame(code, &params, 30.0, t).1).collect()
}

//! Decoders for short binary LDPC codes: sum-product BP, order-m ordered
//! statistics decoding, and their combination with an offset-weighted BP
//! refinement stage and a WHD-gated early exit (mBP-OSD). A seeded
//! Monte-Carlo harness estimates BLER, OSD invocation rates and model
//! complexity.
//!
//! ```
//! use mbposd_core::{codes, channel, MbpOsdConfig, MbpOsdDecoder};
//!
//! let code = codes::load("hamming7_4").unwrap();
//! let params = channel::ChannelParams::new(3.0, 7).unwrap();
//! let cw = code.encode(&[1, 0, 1, 1]).unwrap();
//! let rx = channel::transmit(&channel::modulate(&cw), &params, 0);
//! let llr = channel::channel_llr(&rx, &params);
//!
//! let mut dec = MbpOsdDecoder::new(&code, MbpOsdConfig::for_code(&code, 2)).unwrap();
//! let out = dec.decode(&llr).unwrap();
//! assert!(code.is_codeword(&out.estimate));
//! ```

pub mod bp;
pub mod channel;
pub mod codes;
pub mod complexity;
mod error;
pub mod gf2;
pub mod mbposd;
pub mod osd;
pub mod sim;

pub use bp::{alpha_from_girth, bp_decode, mbp_refine, BpConfig, BpDecoder, BpOutput, MbpConfig};
pub use channel::{ChannelParams, LlrVector};
pub use complexity::{complexity_bound, osd_complexity_estimate, OpCounters};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, CodeSpec, Girth, TannerGraph};
pub use mbposd::{
    bp_osd_baseline_decode, mbposd_decode, BpOsdDecoder, DecodeOutcome, DecodePath, MbpOsdConfig,
    MbpOsdDecoder,
};
pub use osd::{osd_decode, OsdDecoder, OsdOutput, OsdWorkspace};

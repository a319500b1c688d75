//! Bundled codes, addressable by name, plus file loading.

use std::path::Path;

use crate::error::{Error, Result};
use crate::gf2::{load_alist, CodeSpec};

/// A code shipped with the crate.
#[derive(Debug, Clone, Copy)]
pub struct BundledCode {
    pub name: &'static str,
    pub description: &'static str,
    /// Default WHD threshold λ for the stopping test.
    pub default_lambda: f64,
    pub alist: &'static str,
}

pub const BUNDLED: &[BundledCode] = &[
    BundledCode {
        name: "hamming7_4",
        description: "(7,4) Hamming code",
        default_lambda: 1.0,
        alist: include_str!("../codes/hamming7_4.alist"),
    },
    BundledCode {
        name: "ldpc32_16",
        description: "(32,16) (3,6)-regular PEG code, girth 6",
        default_lambda: 1.0,
        alist: include_str!("../codes/ldpc32_16.alist"),
    },
    BundledCode {
        name: "ldpc96_48",
        description: "(96,48) (3,6)-regular PEG code, girth 6",
        default_lambda: 1.0,
        alist: include_str!("../codes/ldpc96_48.alist"),
    },
    BundledCode {
        name: "ccsds128_64",
        description: "(128,64) CCSDS telecommand LDPC code",
        default_lambda: 10.0,
        alist: include_str!("../codes/ccsds128_64.alist"),
    },
];

pub fn bundled(name: &str) -> Option<&'static BundledCode> {
    BUNDLED.iter().find(|c| c.name == name)
}

/// Loads a bundled code by name, or else an alist file by path.
pub fn load(name_or_path: &str) -> Result<CodeSpec> {
    if let Some(c) = bundled(name_or_path) {
        return load_alist(c.alist);
    }
    let path = Path::new(name_or_path);
    if !path.is_file() {
        return Err(Error::UnknownCode(name_or_path.to_string()));
    }
    load_alist(&std::fs::read_to_string(path)?)
}

/// λ default for a bundled code; `None` for codes loaded from files.
pub fn default_lambda(name: &str) -> Option<f64> {
    bundled(name).map(|c| c.default_lambda)
}

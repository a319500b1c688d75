//! Reading a single frame of LLRs from disk.

use std::path::Path;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum LlrFormat {
    /// Decimal numbers separated by whitespace or commas; `#` starts a comment.
    Text,
    /// Hex dump of little-endian f64 values; whitespace ignored.
    Hex,
    /// Raw little-endian f64 values.
    F64le,
}

pub fn read(path: &Path, format: LlrFormat) -> Result<Vec<f64>, String> {
    let bytes = std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let values = match format {
        LlrFormat::Text => parse_text(&String::from_utf8(bytes).map_err(|_| "LLR text file is not UTF-8".to_string())?)?,
        LlrFormat::Hex => {
            let text = String::from_utf8(bytes).map_err(|_| "hex LLR file is not UTF-8".to_string())?;
            from_le_bytes(&parse_hex(&text)?)?
        }
        LlrFormat::F64le => from_le_bytes(&bytes)?,
    };
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(format!("LLR {i} is not finite ({})", values[i]));
    }
    Ok(values)
}

fn parse_text(text: &str) -> Result<Vec<f64>, String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ','))
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<f64>().map_err(|_| format!("bad LLR value '{t}'")))
        .collect()
}

fn parse_hex(text: &str) -> Result<Vec<u8>, String> {
    let digits: Vec<u8> = text.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
    if digits.len() % 2 != 0 {
        return Err("hex input has an odd number of digits".into());
    }
    digits
        .chunks_exact(2)
        .map(|p| {
            let s = std::str::from_utf8(p).map_err(|_| "invalid hex".to_string())?;
            u8::from_str_radix(s, 16).map_err(|_| format!("invalid hex byte '{s}'"))
        })
        .collect()
}

fn from_le_bytes(bytes: &[u8]) -> Result<Vec<f64>, String> {
    if bytes.len() % 8 != 0 {
        return Err(format!("{} bytes is not a whole number of f64 values", bytes.len()));
    }
    Ok(bytes.chunks_exact(8).map(|c| f64::from_le_bytes(c.try_into().unwrap())).collect())
}

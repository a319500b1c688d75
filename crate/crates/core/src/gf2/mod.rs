//! Binary linear codes: GF(2) matrices, alist ingestion, systematic
//! reduction and Tanner-graph analysis.

mod alist;
mod code;
mod elim;
mod girth;
mod matrix;

pub use alist::{load_alist, parse_alist_matrix, to_alist};
pub use code::{
    derive_generator, hard_decision, min_distance_bruteforce, syndrome, CodeSpec, Girth,
    TannerGraph, MAX_ENUMERATION_K,
};
pub use elim::gaussian_eliminate;
pub use girth::compute_girth;
pub use matrix::{pack, unpack, BitMatrix};

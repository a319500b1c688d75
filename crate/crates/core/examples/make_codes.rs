//! Regenerates the alist files under `crates/core/codes/`.
//!
//!     cargo run -p mbposd-core --example make_codes -- crates/core/codes
//!
//! * `ccsds128_64`: CCSDS TC (128,64), 4×8 array of 16×16 circulants.
//! * `ldpc32_16`, `ldpc96_48`: (3,6)-regular codes from progressive edge growth
//!   with a seeded tie-break. The first seed giving a full-rank H of girth
//!   at least 6 is kept.

use std::collections::VecDeque;
use std::path::{Path, PathBuf};

use mbposd_core::gf2::{to_alist, BitMatrix, CodeSpec};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy)]
enum Block {
    Zero,
    Shift(usize),
    IdentityPlus(usize),
}

fn ccsds128() -> BitMatrix {
    use Block::*;
    const M: usize = 16;
    let table = [
        [IdentityPlus(7), Shift(2), Shift(14), Shift(6), Zero, Shift(0), Shift(13), Shift(0)],
        [Shift(6), IdentityPlus(15), Shift(0), Shift(1), Shift(0), Zero, Shift(0), Shift(7)],
        [Shift(4), Shift(1), IdentityPlus(15), Shift(14), Shift(11), Shift(0), Zero, Shift(3)],
        [Shift(0), Shift(1), Shift(9), IdentityPlus(13), Shift(14), Shift(1), Shift(0), Zero],
    ];
    let mut h = BitMatrix::zeros(4 * M, 8 * M);
    let mut flip = |r: usize, c: usize| {
        let v = h.get(r, c);
        h.set(r, c, !v);
    };
    for (bi, row) in table.iter().enumerate() {
        for (bj, blk) in row.iter().enumerate() {
            let shifts: &[usize] = match *blk {
                Zero => &[],
                Shift(s) => &[s][..],
                IdentityPlus(s) => &[0, s][..],
            };
            for &s in shifts {
                for i in 0..M {
                    flip(bi * M + i, bj * M + (i + s) % M);
                }
            }
        }
    }
    h
}

/// Progressive edge growth for a (dv, dc)-regular graph.
fn peg(n: usize, m: usize, dv: usize, dc: usize, seed: u64) -> BitMatrix {
    assert_eq!(n * dv, m * dc);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut var_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut check_adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for v in 0..n {
        for _ in 0..dv {
            let candidates = peg_candidates(v, &var_adj, &check_adj, dc);
            let min_deg = candidates.iter().map(|&c| check_adj[c].len()).min().expect("no free check");
            let lowest: Vec<usize> = candidates.into_iter().filter(|&c| check_adj[c].len() == min_deg).collect();
            let c = *lowest.choose(&mut rng).unwrap();
            var_adj[v].push(c);
            check_adj[c].push(v);
        }
    }
    let mut h = BitMatrix::zeros(m, n);
    for (c, adj) in check_adj.iter().enumerate() {
        for &v in adj {
            h.set(c, v, true);
        }
    }
    h
}

/// Checks with spare degree that are unreachable from `v`, or else the ones
/// reached last by BFS.
fn peg_candidates(v: usize, var_adj: &[Vec<usize>], check_adj: &[Vec<usize>], dc: usize) -> Vec<usize> {
    let m = check_adj.len();
    let open = |c: usize| check_adj[c].len() < dc && !var_adj[v].contains(&c);
    if var_adj[v].is_empty() {
        return (0..m).filter(|&c| open(c)).collect();
    }
    let mut depth = vec![usize::MAX; m];
    let mut queue = VecDeque::new();
    for &c in &var_adj[v] {
        depth[c] = 0;
        queue.push_back(c);
    }
    let mut seen_var = vec![false; var_adj.len()];
    seen_var[v] = true;
    while let Some(c) = queue.pop_front() {
        for &u in &check_adj[c] {
            if seen_var[u] {
                continue;
            }
            seen_var[u] = true;
            for &c2 in &var_adj[u] {
                if depth[c2] == usize::MAX {
                    depth[c2] = depth[c] + 1;
                    queue.push_back(c2);
                }
            }
        }
    }
    let unreached: Vec<usize> = (0..m).filter(|&c| depth[c] == usize::MAX && open(c)).collect();
    if !unreached.is_empty() {
        return unreached;
    }
    let far = (0..m).filter(|&c| open(c)).map(|c| depth[c]).max().expect("no free check");
    (0..m).filter(|&c| open(c) && depth[c] == far).collect()
}

fn hamming74() -> BitMatrix {
    BitMatrix::from_rows(&[[1, 0, 1, 0, 1, 0, 1], [0, 1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 1, 1]])
}

fn emit(dir: &Path, name: &str, h: &BitMatrix) {
    let code = CodeSpec::from_pcm(h.clone()).expect("invalid code");
    println!("{name}: N={} K={} girth={}", code.n(), code.k(), code.girth());
    std::fs::write(dir.join(format!("{name}.alist")), to_alist(h)).expect("write failed");
}

fn regular_full_rank(n: usize, m: usize) -> (u64, BitMatrix) {
    (0u64..)
        .map(|seed| (seed, peg(n, m, 3, 6, seed)))
        .find(|(_, h)| h.rank() == m && CodeSpec::from_pcm(h.clone()).unwrap().girth().value() >= Some(6))
        .unwrap()
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "crates/core/codes".into()));
    std::fs::create_dir_all(&dir).expect("cannot create output dir");
    emit(&dir, "hamming7_4", &hamming74());
    emit(&dir, "ccsds128_64", &ccsds128());
    for (n, m, name) in [(32, 16, "ldpc32_16"), (96, 48, "ldpc96_48")] {
        let (seed, h) = regular_full_rank(n, m);
        println!("{name}: PEG seed {seed}");
        emit(&dir, name, &h);
    }
}

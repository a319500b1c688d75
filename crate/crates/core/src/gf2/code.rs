use std::fmt;

use super::girth::compute_girth;
use super::matrix::BitMatrix;
use crate::error::{check_len, Error, Result};

/// Largest K for which [`min_distance_bruteforce`] will enumerate the codebook.
pub const MAX_ENUMERATION_K: usize = 24;

/// Bipartite Tanner graph of a parity-check matrix.
///
/// Edges are numbered check-major: the edges of check `j` occupy
/// `check_range(j)` and appear in ascending variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    var_adj: Vec<Vec<usize>>,
    check_adj: Vec<Vec<usize>>,
    check_offsets: Vec<usize>,
    edge_var: Vec<usize>,
    var_edges: Vec<Vec<usize>>,
}

impl TannerGraph {
    pub fn from_pcm(pcm: &BitMatrix) -> Self {
        let (m, n) = (pcm.rows(), pcm.cols());
        let mut var_adj = vec![Vec::new(); n];
        let mut check_adj = vec![Vec::new(); m];
        let mut check_offsets = Vec::with_capacity(m + 1);
        let mut edge_var = Vec::new();
        let mut var_edges = vec![Vec::new(); n];
        for (j, adj) in check_adj.iter_mut().enumerate() {
            check_offsets.push(edge_var.len());
            for i in (0..n).filter(|&i| pcm.get(j, i)) {
                adj.push(i);
                var_adj[i].push(j);
                var_edges[i].push(edge_var.len());
                edge_var.push(i);
            }
        }
        check_offsets.push(edge_var.len());
        TannerGraph { var_adj, check_adj, check_offsets, edge_var, var_edges }
    }

    pub fn num_vars(&self) -> usize {
        self.var_adj.len()
    }

    pub fn num_checks(&self) -> usize {
        self.check_adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edge_var.len()
    }

    /// Checks adjacent to variable `i`, ascending.
    pub fn var_neighbors(&self, i: usize) -> &[usize] {
        &self.var_adj[i]
    }

    /// Variables adjacent to check `j`, ascending.
    pub fn check_neighbors(&self, j: usize) -> &[usize] {
        &self.check_adj[j]
    }

    pub fn check_range(&self, j: usize) -> std::ops::Range<usize> {
        self.check_offsets[j]..self.check_offsets[j + 1]
    }

    /// Edge ids incident to variable `i`, in the order of `var_neighbors(i)`.
    pub fn var_edges(&self, i: usize) -> &[usize] {
        &self.var_edges[i]
    }

    pub fn edge_var(&self, e: usize) -> usize {
        self.edge_var[e]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn value(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// An (N, K) binary linear code with full-rank parity-check matrix.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    n: usize,
    k: usize,
    gen: BitMatrix,
    pcm: BitMatrix,
    graph: TannerGraph,
    girth: Girth,
    min_distance: Option<usize>,
}

impl CodeSpec {
    /// Validates `pcm`, derives a generator and analyses the Tanner graph.
    ///
    /// Rejects rank-deficient matrices and checks of degree below two.
    pub fn from_pcm(pcm: BitMatrix) -> Result<Self> {
        for row in 0..pcm.rows() {
            let degree = pcm.row_weight(row);
            if degree < 2 {
                return Err(Error::LowDegreeCheck { row, degree });
            }
        }
        let gen = derive_generator(&pcm)?;
        let n = pcm.cols();
        let k = gen.rows();
        debug_assert_eq!(gen.rank(), k);
        assert!(gen.mul_transpose(&pcm).is_zero(), "derived generator is not orthogonal to H");
        let graph = TannerGraph::from_pcm(&pcm);
        let girth = compute_girth(&graph);
        Ok(CodeSpec { n, k, gen, pcm, graph, girth, min_distance: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rate(&self) -> f64 {
        self.k as f64 / self.n as f64
    }

    pub fn gen(&self) -> &BitMatrix {
        &self.gen
    }

    pub fn pcm(&self) -> &BitMatrix {
        &self.pcm
    }

    pub fn graph(&self) -> &TannerGraph {
        &self.graph
    }

    pub fn girth(&self) -> Girth {
        self.girth
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.min_distance
    }

    /// Computes d_H by enumeration and caches it on the code.
    pub fn with_min_distance(mut self) -> Result<Self> {
        self.min_distance = Some(min_distance_bruteforce(&self)?);
        Ok(self)
    }

    /// Encodes K message bits with the generator matrix.
    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        check_len(self.k, message.len())?;
        Ok(self.gen.left_mul(message))
    }

    pub fn syndrome(&self, word: &[u8]) -> Result<Vec<u8>> {
        syndrome(&self.pcm, word)
    }

    pub fn is_codeword(&self, word: &[u8]) -> bool {
        word.len() == self.n && self.pcm.right_mul(word).iter().all(|&b| b == 0)
    }
}

/// Builds a K×N generator with `gen · pcmᵀ = 0`.
///
/// The basis comes from the RREF of `pcm`: one row per free (non-pivot)
/// column in ascending order, with a single 1 among the free columns.
pub fn derive_generator(pcm: &BitMatrix) -> Result<BitMatrix> {
    let n = pcm.cols();
    let mut reduced = pcm.clone();
    let pivots = reduced.rref();
    if pivots.len() < pcm.rows() {
        return Err(Error::RankDeficient { rank: pivots.len(), expected: pcm.rows() });
    }
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut gen = BitMatrix::zeros(free.len(), n);
    for (g, &f) in free.iter().enumerate() {
        gen.set(g, f, true);
        for (r, &p) in pivots.iter().enumerate() {
            if reduced.get(r, f) {
                gen.set(g, p, true);
            }
        }
    }
    Ok(gen)
}

/// `word · pcmᵀ` over GF(2).
pub fn syndrome(pcm: &BitMatrix, word: &[u8]) -> Result<Vec<u8>> {
    check_len(pcm.cols(), word.len())?;
    Ok(pcm.right_mul(word))
}

/// Minimum Hamming weight over all nonzero codewords, by Gray-code walk
/// through the 2^K − 1 messages.
pub fn min_distance_bruteforce(code: &CodeSpec) -> Result<usize> {
    let k = code.k();
    if k > MAX_ENUMERATION_K {
        return Err(Error::EnumerationLimit { k, limit: MAX_ENUMERATION_K });
    }
    let rows: Vec<Vec<u64>> = (0..k).map(|r| code.gen().row_words(r).to_vec()).collect();
    let mut word = vec![0u64; code.gen().stride()];
    let mut best = usize::MAX;
    for step in 1u64..(1u64 << k) {
        let flip = step.trailing_zeros() as usize;
        for (w, x) in word.iter_mut().zip(&rows[flip]) {
            *w ^= x;
        }
        let wt: usize = word.iter().map(|w| w.count_ones() as usize).sum();
        best = best.min(wt);
    }
    Ok(best)
}

/// Hard decision used throughout: LLR ≥ 0 maps to bit 0.
#[inline]
pub fn hard_decision(llr: &[f64]) -> Vec<u8> {
    llr.iter().map(|&l| (l < 0.0) as u8).collect()
}

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Dense GF(2) matrix with bit-packed rows.
///
/// Bit `c` of row `r` lives in word `c / 64` at bit position `c % 64`.
/// Padding bits past `cols` are always zero, so word-level XOR and popcount
/// never see stray ones.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from 0/1 rows. All rows must have the same length.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged row {r}");
            for (c, &b) in row.iter().enumerate() {
                if b & 1 == 1 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of `u64` words per packed row.
    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "({r}, {c}) out of bounds");
        (self.data[r * self.stride + c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        assert!(r < self.rows && c < self.cols, "({r}, {c}) out of bounds");
        let w = &mut self.data[r * self.stride + c / WORD_BITS];
        let mask = 1u64 << (c % WORD_BITS);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    /// Row `r` unpacked into 0/1 bytes.
    pub fn row_bits(&self, r: usize) -> Vec<u8> {
        (0..self.cols).map(|c| self.get(r, c) as u8).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|r| self.row_bits(r)).collect()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row_words(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// `row[dst] ^= row[src]`.
    pub fn xor_row(&mut self, src: usize, dst: usize) {
        assert_ne!(src, dst);
        let s = self.stride;
        if src < dst {
            let (head, tail) = self.data.split_at_mut(dst * s);
            for (d, x) in tail[..s].iter_mut().zip(&head[src * s..(src + 1) * s]) {
                *d ^= x;
            }
        } else {
            let (head, tail) = self.data.split_at_mut(src * s);
            for (d, x) in head[dst * s..(dst + 1) * s].iter_mut().zip(&tail[..s]) {
                *d ^= x;
            }
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// New matrix whose column `j` is column `order[j]` of `self`.
    pub fn permute_columns(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.cols);
        let mut out = Self::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            let src = self.row_words(r);
            let dst = &mut out.data[r * out.stride..(r + 1) * out.stride];
            for (j, &c) in order.iter().enumerate() {
                if (src[c / WORD_BITS] >> (c % WORD_BITS)) & 1 == 1 {
                    dst[j / WORD_BITS] |= 1 << (j % WORD_BITS);
                }
            }
        }
        out
    }

    /// Reduces `self` in place to reduced row echelon form, scanning columns
    /// left to right. Returns the pivot column of each leading row; the
    /// length of the result is the rank.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            if self.eliminate_column(row, col) {
                pivots.push(col);
                row += 1;
            }
        }
        pivots
    }

    /// Looks for a pivot for `col` among rows `row..`, moves it to `row`, and
    /// clears `col` from every other row. Returns false when `col` has no
    /// pivot in the remaining rows.
    pub(crate) fn eliminate_column(&mut self, row: usize, col: usize) -> bool {
        let Some(p) = (row..self.rows).find(|&r| self.get(r, col)) else {
            return false;
        };
        self.swap_rows(row, p);
        let word = col / WORD_BITS;
        let mask = 1u64 << (col % WORD_BITS);
        for r in 0..self.rows {
            if r != row && self.data[r * self.stride + word] & mask != 0 {
                self.xor_row(row, r);
            }
        }
        true
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Row-vector product `v · self`, with `v` given as 0/1 bytes.
    pub fn left_mul(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.rows);
        let mut acc = vec![0u64; self.stride];
        for (r, &b) in v.iter().enumerate() {
            if b & 1 == 1 {
                for (a, w) in acc.iter_mut().zip(self.row_words(r)) {
                    *a ^= w;
                }
            }
        }
        unpack(&acc, self.cols)
    }

    /// Column-vector product `self · vᵀ`, with `v` given as 0/1 bytes.
    pub fn right_mul(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.cols);
        let packed = pack(v);
        (0..self.rows)
            .map(|r| {
                let ones: u32 =
                    self.row_words(r).iter().zip(&packed).map(|(a, b)| (a & b).count_ones()).sum();
                (ones & 1) as u8
            })
            .collect()
    }

    /// `self · otherᵀ` over GF(2).
    pub fn mul_transpose(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = Self::zeros(self.rows, other.rows);
        for r in 0..self.rows {
            for s in 0..other.rows {
                let ones: u32 = self
                    .row_words(r)
                    .iter()
                    .zip(other.row_words(s))
                    .map(|(a, b)| (a & b).count_ones())
                    .sum();
                if ones & 1 == 1 {
                    out.set(r, s, true);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// True when both matrices span the same row space.
    pub fn same_row_space(&self, other: &BitMatrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        let ra = a.rref().len();
        let rb = b.rref().len();
        ra == rb && (0..ra).all(|r| a.row_words(r) == b.row_words(r))
    }
}

/// Packs 0/1 bytes into little-endian words.
pub fn pack(bits: &[u8]) -> Vec<u64> {
    let mut out = vec![0u64; words_for(bits.len())];
    for (i, &b) in bits.iter().enumerate() {
        if b & 1 == 1 {
            out[i / WORD_BITS] |= 1 << (i % WORD_BITS);
        }
    }
    out
}

pub fn unpack(words: &[u64], len: usize) -> Vec<u8> {
    (0..len).map(|i| ((words[i / WORD_BITS] >> (i % WORD_BITS)) & 1) as u8).collect()
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "." })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

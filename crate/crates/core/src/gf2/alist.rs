//! Reader and writer for the alist sparse-matrix format.
//!
//! ```text
//! N M
//! max_col_degree max_row_degree
//! <N column degrees>
//! <M row degrees>
//! <N lines: 1-based check indices of each column, zero padded>
//! <M lines: 1-based variable indices of each row, zero padded>
//! ```

use std::fmt::Write as _;

use super::code::CodeSpec;
use super::matrix::BitMatrix;
use crate::error::{Error, Result};

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty()),
        );
        Lines { inner: it.peekable(), last: 0 }
    }

    fn next_line(&mut self, what: &str) -> Result<(usize, Vec<usize>)> {
        let Some((no, line)) = self.inner.next() else {
            return Err(Error::Alist { line: self.last + 1, msg: format!("unexpected end of input, expected {what}") });
        };
        self.last = no;
        let nums = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Alist { line: no, msg: format!("invalid integer '{t}' in {what}") })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((no, nums))
    }

    /// Reads `count` integers that may be spread over several lines.
    fn take(&mut self, count: usize, what: &str) -> Result<(usize, Vec<usize>)> {
        let mut out = Vec::with_capacity(count);
        let mut first = 0;
        while out.len() < count {
            let (no, nums) = self.next_line(what)?;
            if first == 0 {
                first = no;
            }
            out.extend(nums);
        }
        if out.len() > count {
            return Err(Error::Alist { line: self.last, msg: format!("too many entries in {what}") });
        }
        Ok((first, out))
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Alist { line, msg: msg.into() }
}

/// Reads the adjacency lists of one section. Zeros are padding.
fn read_lists(
    lines: &mut Lines<'_>,
    degrees: &[usize],
    bound: usize,
    what: &str,
) -> Result<Vec<(usize, Vec<usize>)>> {
    let mut out = Vec::with_capacity(degrees.len());
    for (idx, &deg) in degrees.iter().enumerate() {
        let (no, nums) = lines.next_line(what)?;
        let mut list = Vec::with_capacity(deg);
        for v in nums.into_iter().filter(|&v| v != 0) {
            if v > bound {
                return Err(err(no, format!("index out of range: {v} > {bound} in {what} {}", idx + 1)));
            }
            if list.contains(&(v - 1)) {
                return Err(err(no, format!("duplicate index {v} in {what} {}", idx + 1)));
            }
            list.push(v - 1);
        }
        if list.len() != deg {
            return Err(err(
                no,
                format!("degree mismatch in {what} {}: declared {deg}, listed {}", idx + 1, list.len()),
            ));
        }
        out.push((no, list));
    }
    Ok(out)
}

/// Parses alist text into a parity-check matrix, checking that the column
/// and row sections describe the same matrix. Returns the matrix and the
/// source line of each row list.
pub fn parse_alist_matrix(text: &str) -> Result<(BitMatrix, Vec<usize>)> {
    let mut lines = Lines::new(text);
    let (no, header) = lines.next_line("header")?;
    let [n, m] = header[..] else {
        return Err(err(no, "malformed header: expected 'N M'"));
    };
    if n == 0 || m == 0 {
        return Err(err(no, "malformed header: N and M must be positive"));
    }
    let (no, maxdeg) = lines.next_line("maximum degrees")?;
    let [max_col, max_row] = maxdeg[..] else {
        return Err(err(no, "malformed maximum degree line"));
    };
    let (cno, col_deg) = lines.take(n, "column degrees")?;
    let (rno, row_deg) = lines.take(m, "row degrees")?;
    if let Some(d) = col_deg.iter().find(|&&d| d > max_col) {
        return Err(err(cno, format!("column degree {d} exceeds declared maximum {max_col}")));
    }
    if let Some(d) = row_deg.iter().find(|&&d| d > max_row) {
        return Err(err(rno, format!("row degree {d} exceeds declared maximum {max_row}")));
    }

    let cols = read_lists(&mut lines, &col_deg, m, "column")?;
    let rows = read_lists(&mut lines, &row_deg, n, "row")?;

    let mut pcm = BitMatrix::zeros(m, n);
    for (c, (_, list)) in cols.iter().enumerate() {
        for &r in list {
            pcm.set(r, c, true);
        }
    }
    for (r, (no, list)) in rows.iter().enumerate() {
        for &c in list {
            if !pcm.get(r, c) {
                return Err(err(*no, format!("row {} lists column {} but that column does not list the row", r + 1, c + 1)));
            }
        }
        if list.len() != pcm.row_weight(r) {
            return Err(err(*no, format!("row {} disagrees with the column lists", r + 1)));
        }
    }
    Ok((pcm, rows.into_iter().map(|(no, _)| no).collect()))
}

/// Parses an alist and builds the full [`CodeSpec`].
pub fn load_alist(text: &str) -> Result<CodeSpec> {
    let (pcm, row_lines) = parse_alist_matrix(text)?;
    // Name the first row that adds nothing to the span.
    let mut acc = BitMatrix::zeros(0, pcm.cols());
    for r in 0..pcm.rows() {
        let mut next = BitMatrix::zeros(r + 1, pcm.cols());
        for i in 0..r {
            next.row_words_mut(i).copy_from_slice(acc.row_words(i));
        }
        next.row_words_mut(r).copy_from_slice(pcm.row_words(r));
        if next.rank() <= r {
            return Err(err(
                row_lines[r],
                format!("pcm not full rank: row {} is a combination of earlier rows", r + 1),
            ));
        }
        acc = next;
    }
    CodeSpec::from_pcm(pcm).map_err(|e| match e {
        Error::LowDegreeCheck { row, degree } => {
            err(row_lines[row], format!("check {} has degree {degree}; at least 2 required", row + 1))
        }
        other => other,
    })
}

/// Serializes a parity-check matrix as zero-padded alist text.
pub fn to_alist(pcm: &BitMatrix) -> String {
    let (m, n) = (pcm.rows(), pcm.cols());
    let cols: Vec<Vec<usize>> = (0..n).map(|c| (0..m).filter(|&r| pcm.get(r, c)).collect()).collect();
    let rows: Vec<Vec<usize>> = (0..m).map(|r| (0..n).filter(|&c| pcm.get(r, c)).collect()).collect();
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = rows.iter().map(Vec::len).max().unwrap_or(0);
    let join = |v: &mut dyn Iterator<Item = usize>| v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");

    let mut s = String::new();
    let _ = writeln!(s, "{n} {m}");
    let _ = writeln!(s, "{max_col} {max_row}");
    let _ = writeln!(s, "{}", join(&mut cols.iter().map(Vec::len)));
    let _ = writeln!(s, "{}", join(&mut rows.iter().map(Vec::len)));
    for (list, width) in cols.iter().map(|l| (l, max_col)).chain(rows.iter().map(|l| (l, max_row))) {
        let padded = list.iter().map(|&x| x + 1).chain(std::iter::repeat(0)).take(width);
        let _ = writeln!(s, "{}", join(&mut padded.into_iter()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    const FULL_RANK_4: &str = "4 3\n2 3\n2 2 2 1\n3 2 2\n1 3\n1 2\n2 3\n1 0\n1 2 4\n2 3 0\n1 3 0\n";

    #[test]
    fn loads_small_matrix() {
        let code = load_alist(FULL_RANK_4).unwrap();
        assert_eq!((code.n(), code.k()), (4, 1));
        assert_eq!(
            code.pcm().to_rows(),
            vec![vec![1, 1, 0, 1], vec![0, 1, 1, 0], vec![1, 0, 1, 0]]
        );
    }

    #[test]
    fn rank_deficient_matrix_is_rejected_with_row() {
        // H = [[1,1,0,1],[0,1,1,0],[1,0,1,1]]: row 3 = row 1 + row 2.
        let text = "4 3\n2 3\n2 2 2 2\n3 2 3\n1 3\n1 2\n2 3\n1 3\n1 2 4\n2 3 0\n1 3 4\n";
        let e = load_alist(text).unwrap_err();
        assert!(matches!(e, Error::Alist { line: 11, .. }), "{e}");
        assert!(e.to_string().contains("row 3"));
    }

    #[test]
    fn index_out_of_range() {
        let text = "4 3\n2 3\n2 2 2 1\n3 2 2\n1 3\n1 2\n2 4\n1 0\n1 2 4\n2 3 0\n1 3 0\n";
        let e = load_alist(text).unwrap_err();
        assert!(matches!(e, Error::Alist { line: 7, .. }));
        assert!(e.to_string().contains("index out of range"));
    }

    #[test]
    fn degree_mismatch() {
        let text = "4 3\n2 3\n2 2 2 2\n3 2 2\n1 3\n1 2\n2 3\n1 0\n1 2 4\n2 3 0\n1 3 0\n";
        let e = load_alist(text).unwrap_err();
        assert!(e.to_string().contains("degree mismatch"), "{e}");
    }

    #[test]
    fn malformed_header() {
        assert!(matches!(load_alist("4\n"), Err(Error::Alist { line: 1, .. })));
        assert!(matches!(load_alist("a b\n"), Err(Error::Alist { line: 1, .. })));
        assert!(matches!(load_alist(""), Err(Error::Alist { .. })));
    }

    #[test]
    fn inconsistent_sections() {
        let text = "4 3\n2 3\n2 2 2 1\n3 2 2\n1 3\n1 2\n2 3\n1 0\n1 2 3\n2 3 0\n1 3 0\n";
        let e = load_alist(text).unwrap_err();
        assert!(matches!(e, Error::Alist { line: 9, .. }), "{e}");
    }

    #[test]
    fn unpadded_lists_accepted() {
        let text = "4 3\n2 3\n2 2 2 1\n3 2 2\n1 3\n1 2\n2 3\n1\n1 2 4\n2 3\n1 3\n";
        assert_eq!(load_alist(text).unwrap().k(), 1);
    }

    #[test]
    fn writer_round_trips() {
        let code = load_alist(FULL_RANK_4).unwrap();
        let again = load_alist(&to_alist(code.pcm())).unwrap();
        assert_eq!(again.pcm(), code.pcm());
    }
}

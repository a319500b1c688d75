use super::matrix::BitMatrix;
use crate::error::{check_len, Error, Result};

/// Brings a full-rank K×N matrix into systematic form `[I_K | P]`.
///
/// `order` lists the source column for each position (the reliability
/// ordering). Columns are scanned in that order and the first K independent
/// ones become the basis. The returned permutation `pi2` is a gather list
/// over positions of the reordered matrix: basis columns first, then every
/// remaining column, each group keeping its relative order. Column `j` of the
/// result is therefore column `order[pi2[j]]` of `mat` after row reduction.
pub fn gaussian_eliminate(mat: &BitMatrix, order: &[usize]) -> Result<(BitMatrix, Vec<usize>)> {
    check_len(mat.cols(), order.len())?;
    let mut work = mat.permute_columns(order);
    let pi2 = systematize_in_place(&mut work)?;
    Ok((work.permute_columns(&pi2), pi2))
}

/// Row-reduces `work` in place (pivot columns become unit vectors) and
/// returns the basis-first column ordering.
fn systematize_in_place(work: &mut BitMatrix) -> Result<Vec<usize>> {
    let (k, n) = (work.rows(), work.cols());
    let mut basis = Vec::with_capacity(k);
    let mut rest = Vec::with_capacity(n.saturating_sub(k));
    for col in 0..n {
        if basis.len() < k && work.eliminate_column(basis.len(), col) {
            basis.push(col);
        } else {
            rest.push(col);
        }
    }
    if basis.len() < k {
        return Err(Error::RankDeficient { rank: basis.len(), expected: k });
    }
    basis.extend(rest);
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn systematic_input_is_fixed_point() {
        let m = BitMatrix::from_rows(&[[1, 0, 1, 1], [0, 1, 0, 1]]);
        let (g, pi2) = gaussian_eliminate(&m, &[0, 1, 2, 3]).unwrap();
        assert_eq!(pi2, vec![0, 1, 2, 3]);
        assert_eq!(g, m);
    }

    #[test]
    fn dependent_column_moves_past_boundary() {
        let m = BitMatrix::from_rows(&[[1, 1, 0], [1, 1, 1]]);
        let (g, pi2) = gaussian_eliminate(&m, &[0, 1, 2]).unwrap();
        assert_eq!(pi2, vec![0, 2, 1]);
        // Row space of the column-swapped input is {000, 101, 111, 010}.
        assert_eq!(g.to_rows(), vec![vec![1, 0, 1], vec![0, 1, 0]]);
        assert!(g.same_row_space(&m.permute_columns(&pi2)));
    }

    #[test]
    fn rank_deficient_input() {
        let m = BitMatrix::from_rows(&[[1, 1, 0], [1, 1, 0]]);
        assert!(matches!(
            gaussian_eliminate(&m, &[0, 1, 2]),
            Err(Error::RankDeficient { rank: 1, expected: 2 })
        ));
    }

    #[test]
    fn respects_input_order() {
        let m = BitMatrix::from_rows(&[[1, 0, 1, 1], [0, 1, 0, 1]]);
        let order = [3, 2, 1, 0];
        let (g, pi2) = gaussian_eliminate(&m, &order).unwrap();
        let composite: Vec<usize> = pi2.iter().map(|&p| order[p]).collect();
        assert_eq!(composite, vec![3, 2, 1, 0]);
        assert!(g.same_row_space(&m.permute_columns(&composite)));
        assert_eq!(g.row_bits(0)[..2], [1, 0]);
        assert_eq!(g.row_bits(1)[..2], [0, 1]);
    }
}

use serde::Serialize;

use crate::linalg::ExactMatrix;

/// Ranks of all lower-left submatrices of a square matrix.
///
/// `rank(i, j)` is the rank of rows i..=n and columns 1..=j (1-based), with
/// the boundary values rank(n+1, ·) = rank(·, 0) = 0. These numbers do not
/// change under conjugation by invertible upper-triangular matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RankSignature {
    n: usize,
    /// `table[i - 1][j]` holds rank(i, j) for i in 1..=n+1, j in 0..=n.
    table: Vec<Vec<usize>>,
    /// Cells with δ(i, j) ≠ 0 and their value, row-major.
    units: Vec<(usize, usize, i64)>,
}

impl RankSignature {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.table[i - 1][j]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// δ(i, j) = r(i, j) − r(i+1, j) − r(i, j−1) + r(i+1, j−1).
    pub fn delta(&self, i: usize, j: usize) -> i64 {
        let r = |a: usize, b: usize| self.table[a - 1][b] as i64;
        r(i, j) - r(i + 1, j) - r(i, j - 1) + r(i + 1, j - 1)
    }

    /// Nonzero δ cells as (row, column, value).
    pub fn units(&self) -> &[(usize, usize, i64)] {
        &self.units
    }

    /// Positions of the δ cells, assuming they are all 1.
    pub fn unit_positions(&self) -> Vec<(usize, usize)> {
        self.units.iter().map(|&(i, j, _)| (i, j)).collect()
    }

    /// True when δ is a partial permutation: values in {0, 1} and at most one
    /// unit per row and per column.
    pub fn is_partial_permutation(&self) -> bool {
        let mut rows = vec![false; self.n + 1];
        let mut cols = vec![false; self.n + 1];
        for &(i, j, v) in &self.units {
            if v != 1 || rows[i] || cols[j] {
                return false;
            }
            rows[i] = true;
            cols[j] = true;
        }
        true
    }
}

/// Computes the rank table, using one elimination per starting row.
pub fn rank_signature(x: &ExactMatrix) -> RankSignature {
    assert!(
        x.is_square(),
        "rank signatures are defined for square matrices"
    );
    let n = x.rows();
    let mut table = Vec::with_capacity(n + 1);
    for i in 1..=n {
        table.push(x.submatrix(i - 1..n, 0..n).prefix_column_ranks());
    }
    table.push(vec![0; n + 1]);
    let mut sig = RankSignature {
        n,
        table,
        units: Vec::new(),
    };
    for i in 1..=n {
        for j in 1..=n {
            let d = sig.delta(i, j);
            if d != 0 {
                sig.units.push((i, j, d));
            }
        }
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix() {
        let sig = rank_signature(&ExactMatrix::zeros(4, 4));
        assert!(sig.units().is_empty());
        assert!(sig.table().iter().flatten().all(|&r| r == 0));
    }

    #[test]
    fn units_of_a_representative() {
        let mut x = ExactMatrix::zeros(4, 4);
        x.add_at(2, 1, 1);
        x.add_at(4, 3, -1);
        let sig = rank_signature(&x);
        assert_eq!(sig.unit_positions(), vec![(2, 1), (4, 3)]);
        assert!(sig.is_partial_permutation());
        assert_eq!(sig.rank(1, 4), 2);
        assert_eq!(sig.rank(3, 4), 1);
        assert_eq!(sig.rank(2, 2), 1);
    }

    #[test]
    fn brute_force_ranks_agree() {
        let x = ExactMatrix::from_integers(&[[1, 2, 0], [0, 1, 1], [3, 0, 2]]);
        let sig = rank_signature(&x);
        for i in 1..=3 {
            for j in 0..=3 {
                assert_eq!(sig.rank(i, j), x.submatrix(i - 1..3, 0..j).rank());
            }
        }
    }
}

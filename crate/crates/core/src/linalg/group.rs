use std::fmt;

use num_traits::Zero;

use super::matrix::{rat, sparse_system_rank, ExactMatrix};
use crate::error::{domain, Result};

/// Which bilinear form the patterns of a group respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    Symplectic,
    Orthogonal,
}

impl PatternKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PatternKind::Symplectic => "symplectic",
            PatternKind::Orthogonal => "orthogonal",
        }
    }
}

/// A classical group of rank `l` together with its matrix size `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// Sp_n with n = 2l.
    Symplectic(usize),
    /// O_n with n = 2l.
    OrthogonalEven(usize),
    /// O_n with n = 2l + 1.
    OrthogonalOdd(usize),
}

impl GroupKind {
    /// The group of the given kind acting on an `n`-dimensional space.
    pub fn from_size(kind: PatternKind, n: usize) -> Result<Self> {
        match kind {
            PatternKind::Symplectic if n % 2 == 1 => Err(domain(format!(
                "symplectic groups need even n, got n = {n}"
            ))),
            PatternKind::Symplectic => Ok(GroupKind::Symplectic(n / 2)),
            PatternKind::Orthogonal if n.is_multiple_of(2) => Ok(GroupKind::OrthogonalEven(n / 2)),
            PatternKind::Orthogonal => Ok(GroupKind::OrthogonalOdd(n / 2)),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            GroupKind::Symplectic(l)
            | GroupKind::OrthogonalEven(l)
            | GroupKind::OrthogonalOdd(l) => l,
        }
    }

    pub fn n(self) -> usize {
        match self {
            GroupKind::Symplectic(l) | GroupKind::OrthogonalEven(l) => 2 * l,
            GroupKind::OrthogonalOdd(l) => 2 * l + 1,
        }
    }

    pub fn pattern_kind(self) -> PatternKind {
        match self {
            GroupKind::Symplectic(_) => PatternKind::Symplectic,
            _ => PatternKind::Orthogonal,
        }
    }

    pub fn is_symplectic(self) -> bool {
        matches!(self, GroupKind::Symplectic(_))
    }

    /// The index map k ↦ k* = n − k + 1 (1-based).
    pub fn star(self, k: usize) -> usize {
        self.n() + 1 - k
    }

    /// Short name such as `sp_4` or `o_5`.
    pub fn name(self) -> String {
        match self {
            GroupKind::Symplectic(_) => format!("sp_{}", self.n()),
            _ => format!("o_{}", self.n()),
        }
    }

    /// The Gram matrix F of the invariant form.
    pub fn form_matrix(self) -> ExactMatrix {
        let n = self.n();
        let l = self.rank();
        match self {
            GroupKind::Symplectic(_) => ExactMatrix::from_fn(n, n, |r, c| {
                if r + c + 1 != n {
                    rat(0)
                } else if r < l {
                    rat(1)
                } else {
                    rat(-1)
                }
            }),
            _ => anti_identity(n),
        }
    }

    /// Sign of the nonzero entry of row `p` (1-based) of the form matrix.
    fn form_sign(self, p: usize) -> i64 {
        if self.is_symplectic() && p > self.rank() {
            -1
        } else {
            1
        }
    }

    /// True iff ᵀa·F + F·a = 0.
    pub fn lie_member(self, a: &ExactMatrix) -> Result<bool> {
        let n = self.n();
        if a.rows() != n || a.cols() != n {
            return Err(domain(format!(
                "{}x{} matrix cannot lie in {}",
                a.rows(),
                a.cols(),
                self.name()
            )));
        }
        let f = self.form_matrix();
        Ok((&(&a.transpose() * &f) + &(&f * a)).is_zero())
    }

    /// Errors unless `x` is a 2-nilpotent element of the Lie algebra.
    pub fn require_two_nilpotent_member(self, x: &ExactMatrix) -> Result<()> {
        if !self.lie_member(x)? {
            return Err(domain(format!("matrix not in {}: ᵀaF+Fa ≠ 0", self.name())));
        }
        if !is_two_nilpotent(x) {
            return Err(domain(format!(
                "matrix in {} is not 2-nilpotent: a² ≠ 0",
                self.name()
            )));
        }
        Ok(())
    }

    /// A basis of the Lie algebra built from matrix-unit pairs
    /// {E_{r,c}, E_{c*,r*}}, the orbits of the anti-transpose on positions.
    /// Each element is returned with its 1-based anchor position.
    pub fn unit_basis(self) -> Vec<((usize, usize), ExactMatrix)> {
        let n = self.n();
        let mut out = Vec::new();
        for r in 1..=n {
            for c in 1..=n {
                let mirror = (self.star(c), self.star(r));
                if mirror < (r, c) {
                    continue;
                }
                let mut e = ExactMatrix::elementary(n, r, c);
                if mirror == (r, c) {
                    if !self.is_symplectic() {
                        continue;
                    }
                } else {
                    let coeff = if self.is_symplectic() {
                        self.form_sign(self.star(r)) * self.form_sign(c)
                    } else {
                        -1
                    };
                    e.add_at(mirror.0, mirror.1, coeff);
                }
                out.push(((r, c), e));
            }
        }
        out
    }

    /// Dimension of the Lie algebra, solved from ᵀaF + Fa = 0.
    pub fn lie_algebra_dim(self) -> usize {
        let n = self.n();
        let rows = lie_equations(self);
        n * n - sparse_system_rank(&rows, n * n)
    }

    /// Dimension of the upper-triangular elements of the Lie algebra, solved
    /// from the linear system rather than a closed formula.
    pub fn borel_subalgebra_dim(self) -> usize {
        let n = self.n();
        let mut rows = lie_equations(self);
        for r in 0..n {
            for c in 0..r {
                rows.push(vec![(r * n + c, 1)]);
            }
        }
        n * n - sparse_system_rank(&rows, n * n)
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The entries of ᵀaF + Fa as linear forms in the n² unknowns a_{rc}
/// (unknown index r·n + c, 0-based).
pub(crate) fn lie_equations(g: GroupKind) -> Vec<Vec<(usize, i64)>> {
    let n = g.n();
    // F has exactly one nonzero per row: F[p][p*] = sign(p).
    let partner = |p: usize| n - 1 - p;
    let sign = |p: usize| g.form_sign(p + 1);
    let mut rows = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            // (ᵀa F)_{pq} = a_{q*, p}·F[q*][q];  (F a)_{pq} = F[p][p*]·a_{p*, q}
            let qs = partner(q);
            let ps = partner(p);
            let mut row = vec![(qs * n + p, sign(qs)), (ps * n + q, sign(p))];
            if row[0].0 == row[1].0 {
                row = vec![(row[0].0, row[0].1 + row[1].1)];
            }
            rows.push(row);
        }
    }
    rows
}

fn anti_identity(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |r, c| if r + c + 1 == n { rat(1) } else { rat(0) })
}

/// The l×l anti-diagonal matrix J_l.
pub fn jay(l: usize) -> Result<ExactMatrix> {
    if l == 0 {
        return Err(domain("J_l needs l ≥ 1"));
    }
    Ok(anti_identity(l))
}

/// The anti-transpose J·ᵀA·J: transpose across the anti-diagonal.
pub fn t_transpose(a: &ExactMatrix) -> Result<ExactMatrix> {
    if !a.is_square() {
        return Err(domain(format!(
            "anti-transpose needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    Ok(ExactMatrix::from_fn(n, n, |r, c| {
        a.get(n - 1 - c, n - 1 - r).clone()
    }))
}

pub fn is_two_nilpotent(a: &ExactMatrix) -> bool {
    a.is_square() && (a * a).entries().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jay_examples() {
        assert_eq!(jay(1).unwrap(), ExactMatrix::from_integers(&[[1]]));
        assert_eq!(
            jay(2).unwrap(),
            ExactMatrix::from_integers(&[[0, 1], [1, 0]])
        );
        let j3 = jay(3).unwrap();
        assert_eq!(&j3 * &j3, ExactMatrix::identity(3));
        assert!(jay(0).is_err());
    }

    #[test]
    fn anti_transpose_matches_conjugated_transpose() {
        let a = ExactMatrix::from_integers(&[[1, 2], [3, 4]]);
        assert_eq!(
            t_transpose(&a).unwrap(),
            ExactMatrix::from_integers(&[[4, 2], [3, 1]])
        );
        let j = jay(3).unwrap();
        let b = ExactMatrix::from_integers(&[[1, 2, 3], [4, 5, 6], [7, 8, 9]]);
        assert_eq!(t_transpose(&b).unwrap(), &(&j * &b.transpose()) * &j);
        assert_eq!(
            t_transpose(&ExactMatrix::identity(4)).unwrap(),
            ExactMatrix::identity(4)
        );
        assert!(t_transpose(&ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn form_matrices() {
        assert_eq!(
            GroupKind::Symplectic(2).form_matrix(),
            ExactMatrix::from_integers(&[[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])
        );
        assert_eq!(GroupKind::OrthogonalEven(2).form_matrix(), jay(4).unwrap());
        assert_eq!(GroupKind::OrthogonalOdd(1).form_matrix(), jay(3).unwrap());
    }

    #[test]
    fn form_symmetry_and_rank() {
        for l in 1..=5 {
            for g in [
                GroupKind::Symplectic(l),
                GroupKind::OrthogonalEven(l),
                GroupKind::OrthogonalOdd(l),
            ] {
                let f = g.form_matrix();
                assert_eq!(f.rank(), g.n());
                if g.is_symplectic() {
                    assert_eq!(f.transpose(), -&f);
                } else {
                    assert_eq!(f.transpose(), f);
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let sp4 = GroupKind::Symplectic(2);
        let e = |i, j| ExactMatrix::elementary(4, i, j);
        assert!(sp4.lie_member(&ExactMatrix::zeros(4, 4)).unwrap());
        assert!(sp4.lie_member(&(&e(2, 1) - &e(4, 3))).unwrap());
        assert!(!sp4.lie_member(&(&e(2, 1) + &e(4, 3))).unwrap());
        assert!(sp4.lie_member(&ExactMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn two_nilpotency() {
        let e = |i, j| ExactMatrix::elementary(4, i, j);
        assert!(is_two_nilpotent(&ExactMatrix::zeros(4, 4)));
        assert!(is_two_nilpotent(&(&e(1, 3) - &e(2, 4))));
        let jordan = ExactMatrix::from_integers(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]]);
        assert!(!is_two_nilpotent(&jordan));
    }

    #[test]
    fn symplectic_block_conditions_agree_with_membership() {
        // a = [[A, B], [C, D]] lies in sp_n iff B = 𝔗B, C = 𝔗C and D = −𝔗A.
        let g = GroupKind::Symplectic(2);
        for (_, e) in g.unit_basis() {
            let blk = |r0, c0| e.submatrix(r0..r0 + 2, c0..c0 + 2);
            let (a, b, c, d) = (blk(0, 0), blk(0, 2), blk(2, 0), blk(2, 2));
            assert_eq!(t_transpose(&b).unwrap(), b);
            assert_eq!(t_transpose(&c).unwrap(), c);
            assert_eq!(d, -&t_transpose(&a).unwrap());
        }
    }

    #[test]
    fn unit_basis_spans_the_algebra() {
        for l in 1..=4 {
            for g in [
                GroupKind::Symplectic(l),
                GroupKind::OrthogonalEven(l),
                GroupKind::OrthogonalOdd(l),
            ] {
                let basis = g.unit_basis();
                assert_eq!(basis.len(), g.lie_algebra_dim(), "{g}");
                for (_, e) in &basis {
                    assert!(g.lie_member(e).unwrap(), "{g}: {e}");
                }
            }
        }
    }

    #[test]
    fn borel_examples() {
        assert_eq!(GroupKind::Symplectic(2).borel_subalgebra_dim(), 6);
        assert_eq!(GroupKind::OrthogonalEven(2).borel_subalgebra_dim(), 4);
        assert_eq!(GroupKind::OrthogonalOdd(2).borel_subalgebra_dim(), 6);
    }
}

use num_traits::Zero;

use super::group::{lie_equations, GroupKind};
use super::matrix::{rat, rational_system_rank, ExactMatrix, Rational};
use crate::error::{domain, Result};

/// A totally isotropic flag V_1 ⊂ … ⊂ V_k, given by a basis whose first
/// `dims[i]` vectors span V_{i+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropicFlag {
    group: GroupKind,
    dims: Vec<usize>,
    basis: Vec<Vec<Rational>>,
}

impl IsotropicFlag {
    /// The standard flag V_i = ⟨e_1, …, e_{d_i}⟩.
    pub fn standard(group: GroupKind, dims: &[usize]) -> Result<Self> {
        let top = dims.last().copied().unwrap_or(0);
        let basis = (1..=top).map(|k| unit_vector(group.n(), k)).collect();
        Self::new(group, dims, basis)
    }

    /// The complete standard flag, whose stabilizer is the Borel subgroup.
    pub fn complete(group: GroupKind) -> Self {
        let dims: Vec<usize> = (1..=group.rank()).collect();
        Self::standard(group, &dims).expect("complete flag is isotropic")
    }

    /// A flag spanned by coordinate vectors, e.g. `[1, 3]` for ⟨e_1, e_3⟩
    /// (1-based).
    pub fn from_coordinates(group: GroupKind, coords: &[usize], dims: &[usize]) -> Result<Self> {
        if let Some(&bad) = coords.iter().find(|&&k| k == 0 || k > group.n()) {
            return Err(domain(format!(
                "e_{bad} is not a basis vector of K^{}",
                group.n()
            )));
        }
        let basis = coords.iter().map(|&k| unit_vector(group.n(), k)).collect();
        Self::new(group, dims, basis)
    }

    pub fn new(group: GroupKind, dims: &[usize], basis: Vec<Vec<Rational>>) -> Result<Self> {
        let n = group.n();
        if dims.windows(2).any(|w| w[0] >= w[1]) || dims.first() == Some(&0) {
            return Err(domain(format!(
                "flag dimensions must increase strictly: {dims:?}"
            )));
        }
        let top = dims.last().copied().unwrap_or(0);
        if basis.len() != top || basis.iter().any(|v| v.len() != n) {
            return Err(domain(format!(
                "flag needs {top} basis vectors of length {n}"
            )));
        }
        let span = ExactMatrix::from_fn(n, top, |r, c| basis[c][r].clone());
        if span.rank() != top {
            return Err(domain("flag basis vectors are linearly dependent"));
        }
        let form = group.form_matrix();
        let gram = &(&span.transpose() * &form) * &span;
        if !gram.is_zero() {
            return Err(domain(format!(
                "flag is not totally isotropic in {}",
                group.name()
            )));
        }
        Ok(Self {
            group,
            dims: dims.to_vec(),
            basis,
        })
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// n × d_k matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> ExactMatrix {
        let k = self.basis.len();
        ExactMatrix::from_fn(self.group.n(), k, |r, c| self.basis[c][r].clone())
    }

    /// Linear equations (over the n² entries of a) expressing that a maps
    /// every V_i into itself.
    fn stabilizer_equations(&self) -> Vec<Vec<Rational>> {
        let n = self.group.n();
        let mut rows = Vec::new();
        for &d in &self.dims {
            let span = ExactMatrix::from_fn(n, d, |r, c| self.basis[c][r].clone());
            // functionals vanishing on V_i
            let annihilator = span.transpose().nullspace();
            for ell in &annihilator {
                for w in &self.basis[..d] {
                    let mut row = vec![Rational::zero(); n * n];
                    for r in 0..n {
                        if ell[r].is_zero() {
                            continue;
                        }
                        for c in 0..n {
                            if !w[c].is_zero() {
                                row[r * n + c] += &ell[r] * &w[c];
                            }
                        }
                    }
                    rows.push(row);
                }
            }
        }
        rows
    }

    fn parabolic_equations(&self) -> Vec<Vec<Rational>> {
        let n = self.group.n();
        let mut rows: Vec<Vec<Rational>> = lie_equations(self.group)
            .into_iter()
            .map(|sparse| {
                let mut row = vec![Rational::zero(); n * n];
                for (i, c) in sparse {
                    row[i] += rat(c);
                }
                row
            })
            .collect();
        rows.extend(self.stabilizer_equations());
        rows
    }

    /// Dimension of the parabolic subalgebra {a ∈ g : a V_i ⊆ V_i}.
    pub fn parabolic_dim(&self) -> usize {
        let n = self.group.n();
        n * n - rational_system_rank(&self.parabolic_equations(), n * n)
    }

    /// Dimension of the centralizer of `x` inside the parabolic subalgebra.
    pub fn centralizer_dim(&self, x: &ExactMatrix) -> Result<usize> {
        self.group.require_two_nilpotent_member(x)?;
        let n = self.group.n();
        let mut rows = self.parabolic_equations();
        // (a x − x a)_{pq} = Σ_r a_{pr} x_{rq} − x_{pr} a_{rq}
        for p in 0..n {
            for q in 0..n {
                let mut row = vec![Rational::zero(); n * n];
                for r in 0..n {
                    let xrq = x.get(r, q);
                    if !xrq.is_zero() {
                        row[p * n + r] += xrq;
                    }
                    let xpr = x.get(p, r);
                    if !xpr.is_zero() {
                        row[r * n + q] -= xpr;
                    }
                }
                rows.push(row);
            }
        }
        Ok(n * n - rational_system_rank(&rows, n * n))
    }

    /// Dimension of the orbit of `x` under the parabolic subgroup.
    pub fn orbit_dim(&self, x: &ExactMatrix) -> Result<usize> {
        Ok(self.parabolic_dim() - self.centralizer_dim(x)?)
    }
}

fn unit_vector(n: usize, k: usize) -> Vec<Rational> {
    (1..=n)
        .map(|i| if i == k { rat(1) } else { rat(0) })
        .collect()
}

/// Centralizer dimension of `x` in the Borel subalgebra.
pub fn centralizer_dim_in_borel(x: &ExactMatrix, g: GroupKind) -> Result<usize> {
    IsotropicFlag::complete(g).centralizer_dim(x)
}

/// Rank of a ↦ [a, x] on the given spanning set; used to cross-check
/// centralizer computations.
pub fn commutator_rank(x: &ExactMatrix, spanning: &[ExactMatrix]) -> usize {
    let n = x.rows();
    let images = ExactMatrix::from_fn(spanning.len(), n * n, |k, idx| {
        let c = spanning[k].commutator(x);
        c.get(idx / n, idx % n).clone()
    });
    images.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_flag_stabilizer_is_borel() {
        for l in 1..=4 {
            for g in [
                GroupKind::Symplectic(l),
                GroupKind::OrthogonalEven(l),
                GroupKind::OrthogonalOdd(l),
            ] {
                assert_eq!(
                    IsotropicFlag::complete(g).parabolic_dim(),
                    g.borel_subalgebra_dim(),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn empty_flag_gives_the_whole_algebra() {
        let g = GroupKind::Symplectic(2);
        let flag = IsotropicFlag::standard(g, &[]).unwrap();
        assert_eq!(flag.parabolic_dim(), 10);
    }

    #[test]
    fn non_standard_type_d_flag() {
        let g = GroupKind::OrthogonalEven(2);
        let flag = IsotropicFlag::from_coordinates(g, &[1, 3], &[2]).unwrap();
        assert_eq!(flag.parabolic_dim(), 5);
    }

    #[test]
    fn rejects_non_isotropic_flags() {
        let g = GroupKind::Symplectic(2);
        assert!(IsotropicFlag::from_coordinates(g, &[1, 4], &[2]).is_err());
        assert!(IsotropicFlag::standard(g, &[2, 1]).is_err());
        assert!(IsotropicFlag::standard(g, &[3]).is_err());
    }

    #[test]
    fn zero_commutes_with_everything() {
        let g = GroupKind::Symplectic(2);
        let zero = ExactMatrix::zeros(4, 4);
        assert_eq!(centralizer_dim_in_borel(&zero, g).unwrap(), 6);
        assert_eq!(IsotropicFlag::complete(g).orbit_dim(&zero).unwrap(), 0);
    }

    #[test]
    fn highest_root_vector_orbit() {
        // The commutator map on an independent basis of b(sp_4) gives the
        // orbit dimension directly.
        let g = GroupKind::Symplectic(2);
        let x = ExactMatrix::elementary(4, 1, 4);
        let borel_basis: Vec<ExactMatrix> = g
            .unit_basis()
            .into_iter()
            .filter(|((r, c), _)| r <= c)
            .map(|(_, e)| e)
            .collect();
        assert_eq!(borel_basis.len(), 6);
        let via_commutator = commutator_rank(&x, &borel_basis);
        assert_eq!(via_commutator, 1);
        assert_eq!(
            IsotropicFlag::complete(g).orbit_dim(&x).unwrap(),
            via_commutator
        );
    }

    #[test]
    fn centralizer_rejects_non_members() {
        let g = GroupKind::Symplectic(2);
        let x = &ExactMatrix::elementary(4, 2, 1) + &ExactMatrix::elementary(4, 4, 3);
        assert!(centralizer_dim_in_borel(&x, g).is_err());
    }
}

use num_traits::Zero;

use crate::error::{domain, Result};
use crate::linalg::{rat, rational_system_rank, ExactMatrix, GroupKind, IsotropicFlag, Rational};
use crate::patterns::SpaceSpec;

/// An explicit symmetric representation of A(k) built from an isotropic
/// flag, with an optional 2-nilpotent map on the middle vertex.
///
/// Vertex spaces are V_1 ⊂ … ⊂ V_k, the ambient space V at ω, and their
/// duals. The arrows into ω are the inclusions, the starred arrows are the
/// negated adjoints, and the form pairs each V_i with V_{i*}.
#[derive(Clone, Debug)]
pub struct SymmetricRepresentation {
    group: GroupKind,
    /// Dimensions at 1, …, k, ω, k*, …, 1*.
    dims: Vec<usize>,
    /// (from, to, matrix) with vertex positions as in `dims`.
    arrows: Vec<(usize, usize, ExactMatrix)>,
}

impl SymmetricRepresentation {
    pub fn from_flag(flag: &IsotropicFlag, alpha: Option<&ExactMatrix>) -> Result<Self> {
        let g = flag.group();
        let n = g.n();
        let k = flag.dims().len();
        let ds = flag.dims();
        let omega = k;
        let star_pos = |i: usize| 2 * k - i; // position of vertex (i+1)* for 0-based i
        let mut dims: Vec<usize> = ds.to_vec();
        dims.push(n);
        dims.extend(ds.iter().rev());
        let iota = flag.basis_matrix();
        let f = g.form_matrix();
        let mut arrows = Vec::new();
        for i in 0..k {
            let (src, dst) = (i, i + 1);
            let a = if i + 1 < k {
                ExactMatrix::from_fn(
                    ds[i + 1],
                    ds[i],
                    |r, c| if r == c { rat(1) } else { rat(0) },
                )
            } else {
                iota.submatrix(0..n, 0..ds[i])
            };
            let a_star = -&a.transpose();
            let a_star = if i + 1 < k { a_star } else { &a_star * &f };
            arrows.push((src, dst, a));
            arrows.push((
                if dst == omega { omega } else { star_pos(dst) },
                star_pos(i),
                a_star,
            ));
        }
        if let Some(x) = alpha {
            g.require_two_nilpotent_member(x)?;
            arrows.push((omega, omega, x.clone()));
        }
        Ok(Self {
            group: g,
            dims,
            arrows,
        })
    }

    /// The representation of a standard flag, optionally with `alpha`.
    pub fn from_spec(spec: &SpaceSpec, alpha: Option<&ExactMatrix>) -> Result<Self> {
        Self::from_flag(&spec.flag(), alpha)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    fn offsets(&self) -> Vec<usize> {
        self.dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect()
    }

    /// The form on the total space: identity blocks pairing V_i with V_{i*}
    /// (with ε = −1 below the diagonal for symplectic groups) and F at ω.
    pub fn form(&self) -> ExactMatrix {
        let t = self.total();
        let off = self.offsets();
        let last = self.dims.len() - 1;
        let omega = last / 2;
        let eps = if self.group.is_symplectic() { -1 } else { 1 };
        let f = self.group.form_matrix();
        let mut phi = ExactMatrix::zeros(t, t);
        for p in 0..=last {
            let q = last - p;
            for r in 0..self.dims[p] {
                if p == omega {
                    for c in 0..self.dims[p] {
                        phi.set(off[p] + r, off[p] + c, f.get(r, c).clone());
                    }
                } else {
                    let v = if p < omega { 1 } else { eps };
                    phi.set(off[p] + r, off[q] + r, rat(v));
                }
            }
        }
        phi
    }

    /// The arrows assembled into one endomorphism X of the total space.
    pub fn total_map(&self) -> ExactMatrix {
        let t = self.total();
        let off = self.offsets();
        let mut x = ExactMatrix::zeros(t, t);
        for (from, to, m) in &self.arrows {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    x.set(off[*to] + r, off[*from] + c, m.get(r, c).clone());
                }
            }
        }
        x
    }

    /// True iff ᵀXΦ + ΦX = 0, i.e. the maps are compatible with the form.
    pub fn is_symmetric(&self) -> bool {
        let x = self.total_map();
        let phi = self.form();
        (&(&x.transpose() * &phi) + &(&phi * &x)).is_zero()
    }

    /// Dimension of the symmetric endomorphisms: families (A_p) commuting
    /// with every arrow and satisfying ᵀAΦ + ΦA = 0.
    pub fn symmetric_endo_dim(&self) -> usize {
        let off_unknown: Vec<usize> = self
            .dims
            .iter()
            .scan(0, |acc, &d| {
                let o = *acc;
                *acc += d * d;
                Some(o)
            })
            .collect();
        let unknowns: usize = self.dims.iter().map(|d| d * d).sum();
        let var = |p: usize, r: usize, c: usize| off_unknown[p] + r * self.dims[p] + c;
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        // A_q M − M A_p = 0 for each arrow M: p → q
        for (p, q, m) in &self.arrows {
            let (p, q) = (*p, *q);
            for r in 0..self.dims[q] {
                for c in 0..self.dims[p] {
                    let mut row = vec![Rational::zero(); unknowns];
                    for s in 0..self.dims[q] {
                        let v = m.get(s, c);
                        if !v.is_zero() {
                            row[var(q, r, s)] += v;
                        }
                    }
                    for s in 0..self.dims[p] {
                        let v = m.get(r, s);
                        if !v.is_zero() {
                            row[var(p, s, c)] -= v;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        // ᵀA_p G + G A_{p*} = 0 for the block G of Φ pairing p with p*
        let phi = self.form();
        let off = self.offsets();
        let last = self.dims.len() - 1;
        for p in 0..=last {
            let q = last - p;
            let d = self.dims[p];
            let g = phi.submatrix(off[p]..off[p] + d, off[q]..off[q] + d);
            for r in 0..d {
                for c in 0..d {
                    let mut row = vec![Rational::zero(); unknowns];
                    for s in 0..d {
                        let v = g.get(s, c);
                        if !v.is_zero() {
                            row[var(p, s, r)] += v;
                        }
                        let v = g.get(r, s);
                        if !v.is_zero() {
                            row[var(q, s, c)] += v;
                        }
                    }
                    rows.push(row);
                }
            }
        }
        unknowns - rational_system_rank(&rows, unknowns)
    }
}

/// Symmetric endomorphism dimension of the flag representation of `spec`
/// with the loop acting by `alpha` (or zero).
pub fn symmetric_endo_dim(spec: &SpaceSpec, alpha: Option<&ExactMatrix>) -> Result<usize> {
    if let Some(x) = alpha {
        if x.rows() != spec.group().n() {
            return Err(domain("loop map has the wrong size"));
        }
    }
    Ok(SymmetricRepresentation::from_spec(spec, alpha)?.symmetric_endo_dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::pattern_to_matrix;
    use crate::patterns::enumerate;

    #[test]
    fn flag_representations_are_symmetric() {
        for g in [
            GroupKind::Symplectic(3),
            GroupKind::OrthogonalEven(3),
            GroupKind::OrthogonalOdd(2),
        ] {
            let rep = SymmetricRepresentation::from_spec(&SpaceSpec::borel(g), None).unwrap();
            assert!(rep.is_symmetric(), "{g}");
        }
    }

    #[test]
    fn stabilizer_examples() {
        let cases = [
            (GroupKind::Symplectic(2), 6),
            (GroupKind::OrthogonalEven(2), 4),
            (GroupKind::OrthogonalOdd(2), 6),
        ];
        for (g, want) in cases {
            assert_eq!(
                symmetric_endo_dim(&SpaceSpec::borel(g), None).unwrap(),
                want,
                "{g}"
            );
        }
        let g = GroupKind::OrthogonalEven(2);
        let flag = IsotropicFlag::from_coordinates(g, &[1, 3], &[2]).unwrap();
        let rep = SymmetricRepresentation::from_flag(&flag, None).unwrap();
        assert!(rep.is_symmetric());
        assert_eq!(rep.symmetric_endo_dim(), 5);
    }

    #[test]
    fn loop_gives_the_centralizer() {
        let g = GroupKind::Symplectic(2);
        let spec = SpaceSpec::borel(g);
        for p in enumerate(g.pattern_kind(), &[1, 1]) {
            let x = pattern_to_matrix(&p, g).unwrap();
            let rep = SymmetricRepresentation::from_spec(&spec, Some(&x)).unwrap();
            assert!(rep.is_symmetric());
            assert_eq!(
                rep.symmetric_endo_dim(),
                spec.flag().centralizer_dim(&x).unwrap(),
                "{p}"
            );
        }
    }
}

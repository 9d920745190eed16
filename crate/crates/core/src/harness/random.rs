use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::linalg::{rat, ExactMatrix, GroupKind, Rational};
use crate::patterns::SpaceSpec;

/// Seed of the ChaCha8 generator behind every randomized check.
///
/// Sub-seeds are derived with splitmix64, so two checks never share a
/// stream and the same seed always replays the same trajectory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    pub fn derive(self, index: u64) -> Seed {
        let mut z = self.0 ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        Seed(z ^ (z >> 31))
    }
}

/// An element of the parabolic subgroup together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub matrix: ExactMatrix,
    pub inverse: ExactMatrix,
}

impl GroupElement {
    /// u = T · exp(N) · exp(L) for a torus diag(t_1, …, t_l, [1], t_l⁻¹, …, t_1⁻¹),
    /// a strictly upper triangular N in g and a strictly lower triangular L
    /// in the Levi part of the parabolic.
    pub fn from_parts(
        spec: &SpaceSpec,
        torus: &[i64],
        upper: &ExactMatrix,
        lower: &ExactMatrix,
    ) -> Result<Self> {
        let g = spec.group();
        let n = g.n();
        if torus.len() != g.rank() || torus.contains(&0) {
            return Err(domain(format!("torus needs {} nonzero entries", g.rank())));
        }
        if !upper.is_strictly_upper_triangular() || !g.lie_member(upper)? {
            return Err(domain(format!(
                "N must be strictly upper triangular in {}",
                g.name()
            )));
        }
        if !lower.transpose().is_strictly_upper_triangular() || !g.lie_member(lower)? {
            return Err(domain(format!(
                "L must be strictly lower triangular in {}",
                g.name()
            )));
        }
        let blocks = diagonal_blocks(spec);
        if lower
            .support()
            .iter()
            .any(|&(r, c)| blocks[r - 1] != blocks[c - 1])
        {
            return Err(domain("L leaves the Levi part of the parabolic"));
        }
        let mut t = ExactMatrix::identity(n);
        let mut t_inv = ExactMatrix::identity(n);
        for (k, &ti) in torus.iter().enumerate() {
            let star = g.star(k + 1) - 1;
            t.set(k, k, rat(ti));
            t.set(star, star, Rational::new(1.into(), ti.into()));
            t_inv.set(k, k, Rational::new(1.into(), ti.into()));
            t_inv.set(star, star, rat(ti));
        }
        let matrix = &(&t * &exp_nilpotent(upper)) * &exp_nilpotent(lower);
        let inverse = &(&exp_nilpotent(&-lower) * &exp_nilpotent(&-upper)) * &t_inv;
        let form = g.form_matrix();
        if &(&matrix.transpose() * &form) * &matrix != form {
            return Err(Error::Internal(format!(
                "ᵀuFu ≠ F for a generated element of {}",
                g.name()
            )));
        }
        if &matrix * &inverse != ExactMatrix::identity(n) {
            return Err(Error::Internal("generated inverse is wrong".into()));
        }
        Ok(Self { matrix, inverse })
    }

    /// Conjugate u·x·u⁻¹.
    pub fn conjugate(&self, x: &ExactMatrix) -> ExactMatrix {
        &(&self.matrix * x) * &self.inverse
    }
}

/// Index of the diagonal block of the flag's stabilizer containing each
/// coordinate (0-based): V_1, V_2/V_1, …, V_k^⊥/V_k, …, mirrored.
fn diagonal_blocks(spec: &SpaceSpec) -> Vec<usize> {
    let g = spec.group();
    let n = g.n();
    let k = spec.k();
    (1..=n)
        .map(|p| {
            let q = p.min(g.star(p));
            let s = spec.dims().iter().position(|&d| q <= d).unwrap_or(k);
            if s == k || p == q {
                s
            } else {
                2 * k - s
            }
        })
        .collect()
}

/// exp(N) = Σ N^m / m!, a finite sum for nilpotent N.
pub fn exp_nilpotent(x: &ExactMatrix) -> ExactMatrix {
    let n = x.rows();
    let mut out = ExactMatrix::identity(n);
    let mut term = ExactMatrix::identity(n);
    for m in 1..=n {
        term = (&term * x).scale(&Rational::new(1.into(), (m as i64).into()));
        if term.is_zero() {
            return out;
        }
        out = &out + &term;
    }
    assert!(
        term.is_zero(),
        "exp_nilpotent called on a matrix that is not nilpotent"
    );
    out
}

fn random_combination(basis: &[&ExactMatrix], n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(n, n);
    for e in basis {
        let c: i64 = rng.gen_range(-2..=2);
        if c != 0 {
            out = &out + &e.scale(&rat(c));
        }
    }
    out
}

/// A seeded element of the parabolic subgroup stabilizing the flag of
/// `spec` (the Borel subgroup for the complete flag), with its inverse.
pub fn random_group_element_pair(spec: &SpaceSpec, seed: Seed) -> GroupElement {
    let g = spec.group();
    let n = g.n();
    let mut rng = seed.rng();
    let torus: Vec<i64> = (0..g.rank())
        .map(|_| *[-3i64, -2, -1, 1, 2, 3].choose(&mut rng).expect("nonempty"))
        .collect();
    let basis = g.unit_basis();
    let blocks = diagonal_blocks(spec);
    let upper: Vec<&ExactMatrix> = basis
        .iter()
        .filter(|((r, c), _)| r < c)
        .map(|(_, e)| e)
        .collect();
    let lower: Vec<&ExactMatrix> = basis
        .iter()
        .filter(|((r, c), _)| r > c && blocks[r - 1] == blocks[c - 1])
        .map(|(_, e)| e)
        .collect();
    let nu = random_combination(&upper, n, &mut rng);
    let nl = random_combination(&lower, n, &mut rng);
    GroupElement::from_parts(spec, &torus, &nu, &nl)
        .expect("generated parts satisfy the preconditions")
}

/// A seeded invertible upper-block-triangular u with ᵀu·F·u = F.
pub fn random_group_element(g: GroupKind, spec: &SpaceSpec, seed: Seed) -> ExactMatrix {
    assert_eq!(spec.group(), g, "spec belongs to a different group");
    random_group_element_pair(spec, seed).matrix
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::rank_signature;

    fn groups() -> Vec<GroupKind> {
        let mut out = Vec::new();
        for l in 1..=3 {
            out.extend([
                GroupKind::Symplectic(l),
                GroupKind::OrthogonalEven(l),
                GroupKind::OrthogonalOdd(l),
            ]);
        }
        out
    }

    #[test]
    fn trivial_parts_give_the_identity() {
        let g = GroupKind::Symplectic(2);
        let spec = SpaceSpec::borel(g);
        let z = ExactMatrix::zeros(4, 4);
        let u = GroupElement::from_parts(&spec, &[1, 1], &z, &z).unwrap();
        assert_eq!(u.matrix, ExactMatrix::identity(4));
    }

    #[test]
    fn outputs_preserve_the_form_and_the_flag() {
        for g in groups() {
            let form = g.form_matrix();
            let spec = SpaceSpec::borel(g);
            for s in 0..10 {
                let u = random_group_element(g, &spec, Seed(s));
                assert_eq!(&(&u.transpose() * &form) * &u, form);
                assert!(u.is_upper_triangular());
            }
            let spec = SpaceSpec::new(g, vec![g.rank()]).unwrap();
            let k = g.rank();
            let n = g.n();
            let mut saw_levi = false;
            for s in 0..10 {
                let u = random_group_element(g, &spec, Seed(s));
                assert_eq!(&(&u.transpose() * &form) * &u, form);
                // V = ⟨e_1..e_l⟩ is preserved
                assert!(u.submatrix(k..n, 0..k).is_zero());
                saw_levi |= !u.is_upper_triangular();
            }
            assert!(saw_levi || k == 1, "{g}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let g = GroupKind::OrthogonalOdd(2);
        let spec = SpaceSpec::borel(g);
        assert_eq!(
            random_group_element(g, &spec, Seed(7)),
            random_group_element(g, &spec, Seed(7))
        );
        assert_ne!(
            random_group_element(g, &spec, Seed(7)),
            random_group_element(g, &spec, Seed(8))
        );
    }

    #[test]
    fn conjugation_keeps_the_rank_signature() {
        let g = GroupKind::Symplectic(2);
        let spec = SpaceSpec::borel(g);
        let mut x = ExactMatrix::zeros(4, 4);
        x.add_at(2, 1, 1);
        x.add_at(4, 3, -1);
        let sig = rank_signature(&x);
        for s in 0..50 {
            let u = random_group_element_pair(&spec, Seed(1000).derive(s));
            assert_eq!(rank_signature(&u.conjugate(&x)), sig);
        }
    }

    #[test]
    fn rejects_bad_parts() {
        let g = GroupKind::Symplectic(2);
        let spec = SpaceSpec::borel(g);
        let z = ExactMatrix::zeros(4, 4);
        assert!(GroupElement::from_parts(&spec, &[1, 0], &z, &z).is_err());
        let lower = ExactMatrix::elementary(4, 2, 1);
        assert!(GroupElement::from_parts(&spec, &[1, 1], &z, &lower).is_err());
    }
}

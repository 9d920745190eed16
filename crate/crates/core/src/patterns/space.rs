use super::arc::Arc;
use super::pattern::LinkPattern;
use crate::error::{domain, Result};
use crate::linalg::{GroupKind, IsotropicFlag};

/// A group together with the dimensions d_1 < … < d_k of a standard
/// isotropic flag ⟨e_1, …, e_{d_i}⟩.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceSpec {
    group: GroupKind,
    dims: Vec<usize>,
}

impl SpaceSpec {
    pub fn new(group: GroupKind, dims: Vec<usize>) -> Result<Self> {
        if dims.first() == Some(&0) || dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(domain(format!(
                "flag dimensions must increase strictly from 1: {dims:?}"
            )));
        }
        if let Some(&top) = dims.last() {
            if top > group.rank() {
                return Err(domain(format!(
                    "isotropic flag in {} has dimension at most {}, got {top}",
                    group.name(),
                    group.rank()
                )));
            }
        }
        Ok(Self { group, dims })
    }

    /// The complete flag, whose stabilizer is the Borel subgroup.
    pub fn borel(group: GroupKind) -> Self {
        Self {
            group,
            dims: (1..=group.rank()).collect(),
        }
    }

    /// The flag whose successive quotients have the given sizes.
    pub fn from_blocks(group: GroupKind, blocks: &[usize]) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(domain(format!("block sizes must be positive: {blocks:?}")));
        }
        let dims = blocks
            .iter()
            .scan(0, |acc, &b| {
                *acc += b;
                Some(*acc)
            })
            .collect();
        Self::new(group, dims)
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn k(&self) -> usize {
        self.dims.len()
    }

    /// b = (d_1, d_2 − d_1, …, d_k − d_{k−1}).
    pub fn block_vector(&self) -> Vec<usize> {
        let mut prev = 0;
        self.dims
            .iter()
            .map(|&d| {
                let b = d - prev;
                prev = d;
                b
            })
            .collect()
    }

    /// (d_1, …, d_k, n, d_k, …, d_1).
    pub fn dimension_vector(&self) -> Vec<usize> {
        let mut v = self.dims.clone();
        v.push(self.group.n());
        v.extend(self.dims.iter().rev());
        v
    }

    pub fn is_borel(&self) -> bool {
        self.dims.len() == self.group.rank()
            && self.dims.iter().enumerate().all(|(i, &d)| d == i + 1)
    }

    /// True when the flag reaches a maximal isotropic subspace (d_k = l),
    /// which is where link patterns parametrize the orbits.
    pub fn is_maximal(&self) -> bool {
        self.dims.last().copied().unwrap_or(0) == self.group.rank()
    }

    pub fn require_maximal(&self) -> Result<()> {
        if self.is_maximal() {
            Ok(())
        } else {
            Err(domain(format!(
                "link patterns need a flag ending in dimension {} (the rank of {}), got {:?}",
                self.group.rank(),
                self.group.name(),
                self.dims
            )))
        }
    }

    /// The 1-based block containing the basis index `v ≤ d_k`.
    pub fn block_of(&self, v: usize) -> usize {
        self.dims.partition_point(|&d| d < v) + 1
    }

    /// The physical indices (d_{s−1}, d_s] of block `s`.
    pub fn block_range(&self, s: usize) -> std::ops::RangeInclusive<usize> {
        let start = if s == 1 { 1 } else { self.dims[s - 2] + 1 };
        start..=self.dims[s - 1]
    }

    pub fn flag(&self) -> IsotropicFlag {
        IsotropicFlag::standard(self.group, &self.dims).expect("standard flags are isotropic")
    }

    /// An empty pattern sized for this flag.
    pub fn empty_pattern(&self) -> LinkPattern {
        LinkPattern::empty(self.group.pattern_kind(), self.block_vector()).expect("positive blocks")
    }
}

/// Collapses a Borel-level pattern onto the blocks of `spec`.
///
/// Arrows between different blocks keep their shape. Inside one block an
/// undotted arrow becomes an undotted loop, and a dotted arrow becomes
/// dotted loops oriented like the arrow (upper for leftward arrows): two
/// of them in the symplectic case, one in the orthogonal case, which keeps
/// the capacity used unchanged.
pub fn glue(p: &LinkPattern, spec: &SpaceSpec) -> Result<LinkPattern> {
    let g = spec.group;
    spec.require_maximal()?;
    if p.kind() != g.pattern_kind() || !p.is_borel() || p.k() != g.rank() {
        return Err(domain(format!(
            "glue needs a {} pattern on {} vertices of capacity one",
            g.pattern_kind().as_str(),
            g.rank()
        )));
    }
    p.check()?;
    let mut arcs = Vec::with_capacity(p.arcs().len());
    for a in p.arcs() {
        let (s, t) = (spec.block_of(a.source()), spec.block_of(a.target()));
        if a.is_loop() || s != t {
            arcs.push(a.relabel(|v| spec.block_of(v)));
        } else if !a.dotted() {
            arcs.push(Arc::unoriented_loop(s));
        } else {
            let looped = if a.is_leftward() {
                Arc::upper_loop(s)
            } else {
                Arc::lower_loop(s)
            };
            arcs.push(looped);
            if g.is_symplectic() {
                arcs.push(looped);
            }
        }
    }
    LinkPattern::new(p.kind(), spec.block_vector(), arcs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PatternKind;
    use crate::patterns::enumerate;
    use std::collections::BTreeSet;

    #[test]
    fn vectors() {
        let spec = SpaceSpec::from_blocks(GroupKind::Symplectic(6), &[4, 2]).unwrap();
        assert_eq!(spec.dims(), &[4, 6]);
        assert_eq!(spec.block_vector(), vec![4, 2]);
        assert_eq!(spec.dimension_vector(), vec![4, 6, 12, 6, 4]);
        let b = SpaceSpec::borel(GroupKind::OrthogonalOdd(2));
        assert_eq!(b.block_vector(), vec![1, 1]);
        assert_eq!(b.dimension_vector(), vec![1, 2, 5, 2, 1]);
        assert!(b.is_borel());
        assert!(SpaceSpec::new(GroupKind::Symplectic(2), vec![3]).is_err());
        assert!(SpaceSpec::new(GroupKind::Symplectic(2), vec![2, 1]).is_err());
    }

    #[test]
    fn blocks_of_indices() {
        let spec = SpaceSpec::from_blocks(GroupKind::Symplectic(5), &[2, 3]).unwrap();
        let blocks: Vec<usize> = (1..=5).map(|v| spec.block_of(v)).collect();
        assert_eq!(blocks, [1, 1, 2, 2, 2]);
        assert_eq!(spec.block_range(2), 3..=5);
    }

    #[test]
    fn gluing_two_upper_loops() {
        let g = GroupKind::Symplectic(2);
        let p = LinkPattern::borel(
            PatternKind::Symplectic,
            2,
            vec![Arc::upper_loop(1), Arc::upper_loop(2)],
        )
        .unwrap();
        let spec = SpaceSpec::new(g, vec![2]).unwrap();
        let q = glue(&p, &spec).unwrap();
        assert_eq!(q.to_string(), "{1^, 1^}");
        assert!(q.validate());
    }

    #[test]
    fn identity_flag_is_identity() {
        let g = GroupKind::OrthogonalEven(3);
        let spec = SpaceSpec::borel(g);
        for p in enumerate(PatternKind::Orthogonal, &[1, 1, 1]) {
            assert_eq!(glue(&p, &spec).unwrap(), p);
        }
    }

    #[test]
    fn glue_is_onto_for_small_flags() {
        for g in [GroupKind::Symplectic(3), GroupKind::OrthogonalEven(3)] {
            let borel = enumerate(g.pattern_kind(), &[1, 1, 1]);
            for blocks in [vec![3], vec![1, 2], vec![2, 1]] {
                let spec = SpaceSpec::from_blocks(g, &blocks).unwrap();
                let image: BTreeSet<LinkPattern> =
                    borel.iter().map(|p| glue(p, &spec).unwrap()).collect();
                let target: BTreeSet<LinkPattern> =
                    enumerate(g.pattern_kind(), &blocks).into_iter().collect();
                assert_eq!(image, target, "{g} blocks {blocks:?}");
            }
        }
    }

    #[test]
    fn glue_needs_a_maximal_flag() {
        let g = GroupKind::Symplectic(2);
        let p = LinkPattern::borel(PatternKind::Symplectic, 2, vec![]).unwrap();
        assert!(glue(&p, &SpaceSpec::new(g, vec![1]).unwrap()).is_err());
    }
}

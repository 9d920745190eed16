use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::summand::{Family, Summand};
use crate::error::{domain, Result};
use crate::linalg::PatternKind;
use crate::patterns::{LinkPattern, LoopVariant, SpaceSpec};

/// An indecomposable symmetric representation: either a self-dual module
/// carrying the form itself, or a module paired with its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetricSummand {
    Single(Summand),
    /// `s ⊕ ∇s`, stored with the smaller of `s` and `∇s`.
    Pair(Summand),
}

impl SymmetricSummand {
    pub fn single(s: Summand) -> Self {
        SymmetricSummand::Single(s)
    }

    pub fn pair(s: Summand) -> Self {
        SymmetricSummand::Pair(s.min(s.dual()))
    }

    pub fn parts(&self) -> Vec<Summand> {
        match *self {
            SymmetricSummand::Single(s) => vec![s],
            SymmetricSummand::Pair(s) => vec![s, s.dual()],
        }
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        let parts = self.parts();
        let mut v = vec![0; parts[0].dimension_vector().len()];
        for p in parts {
            for (a, b) in v.iter_mut().zip(p.dimension_vector()) {
                *a += b;
            }
        }
        v
    }
}

impl fmt::Display for SymmetricSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetricSummand::Single(s) => write!(f, "{s}"),
            SymmetricSummand::Pair(s) => write!(f, "{s}⊕{}", s.dual()),
        }
    }
}

fn each_pair(l: usize, mut f: impl FnMut(usize, usize)) {
    for i in 1..=l + 1 {
        for j in 1..=l + 1 {
            f(i, j);
        }
    }
}

/// The indecomposable symmetric representations of A(l), in sorted order.
///
/// Symplectic: Z±_{ii}, M_{ij}⊕M*_{ij}, D±_{ij}⊕C±_{ij} for (i,j) ≠ (ω,ω),
/// D+_{ω,ω}, and Z±_{ij}⊕Z±_{ji} for i ≠ j. Orthogonal: M_{ij}⊕M*_{ij}
/// except (ω,ω), D±_{ij}⊕C±_{ij}, Z±_{ij}⊕Z±_{ji}, and M_{ω,ω}.
pub fn symmetric_catalog(kind: PatternKind, l: usize) -> Vec<SymmetricSummand> {
    let w = l + 1;
    let sp = kind == PatternKind::Symplectic;
    let mut out = Vec::new();
    each_pair(l, |i, j| {
        let make = |f| Summand::new(f, i, j, l).ok().filter(|s| s.family == f);
        if let Some(m) = make(Family::M) {
            if (i, j) != (w, w) || sp {
                out.push(SymmetricSummand::pair(m));
            } else {
                out.push(SymmetricSummand::single(m));
            }
        }
        for f in [Family::Dplus, Family::Dminus] {
            if let Some(d) = make(f) {
                if (i, j) == (w, w) && sp {
                    out.push(SymmetricSummand::single(d));
                } else {
                    out.push(SymmetricSummand::pair(d));
                }
            }
        }
        for f in [Family::Zplus, Family::Zminus] {
            if let Some(z) = make(f) {
                match (i == j, sp) {
                    (true, true) => out.push(SymmetricSummand::single(z)),
                    (true, false) => out.push(SymmetricSummand::pair(z)),
                    (false, _) if i < j => out.push(SymmetricSummand::pair(z)),
                    _ => {}
                }
            }
        }
    });
    out.sort();
    out.dedup();
    out
}

/// Every indecomposable A(l)-module up to isomorphism, sorted.
pub fn indecomposables(l: usize) -> Vec<Summand> {
    let mut out = Vec::new();
    each_pair(l, |i, j| {
        for f in Family::ALL {
            if let Ok(s) = Summand::new(f, i, j, l) {
                out.push(s);
            }
        }
    });
    out.sort();
    out.dedup();
    out
}

/// A Krull–Remak–Schmidt decomposition into symmetric indecomposables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SummandMultiset {
    l: usize,
    parts: BTreeMap<SymmetricSummand, usize>,
}

impl SummandMultiset {
    pub fn new(l: usize) -> Self {
        Self {
            l,
            parts: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, s: SymmetricSummand, multiplicity: usize) {
        if multiplicity > 0 {
            *self.parts.entry(s).or_insert(0) += multiplicity;
        }
    }

    pub fn rank(&self) -> usize {
        self.l
    }

    pub fn multiplicity(&self, s: &SymmetricSummand) -> usize {
        self.parts.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SymmetricSummand, usize)> {
        self.parts.iter().map(|(s, &m)| (s, m))
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        let mut v = vec![0; 2 * self.l + 1];
        for (s, m) in self.iter() {
            for (a, b) in v.iter_mut().zip(s.dimension_vector()) {
                *a += m * b;
            }
        }
        v
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Entry {
            summand: String,
            parts: Vec<Summand>,
            multiplicity: usize,
        }
        #[derive(Serialize)]
        struct Doc {
            rank: usize,
            dimension_vector: Vec<usize>,
            summands: Vec<Entry>,
        }
        let doc = Doc {
            rank: self.l,
            dimension_vector: self.dimension_vector(),
            summands: self
                .iter()
                .map(|(s, m)| Entry {
                    summand: s.to_string(),
                    parts: s.parts(),
                    multiplicity: m,
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("summand serialization is infallible")
    }
}

impl fmt::Display for SummandMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (k, (s, m)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" ⊕ ")?;
            }
            let paren = matches!(s, SymmetricSummand::Pair(_));
            match (m, paren) {
                (1, false) => write!(f, "{s}")?,
                (1, true) => write!(f, "({s})")?,
                (m, _) => write!(f, "{m}·({s})")?,
            }
        }
        Ok(())
    }
}

/// The decomposition of the symmetric representation attached to the
/// orbit of `p` under the parabolic subgroup of `spec`.
///
/// Each arc contributes its indecomposable; every vertex s with unused
/// capacity c receives c copies of M_{s,ω}⊕M*_{s,ω}. The part of V not
/// reached by the flag, of dimension n − 2·d_k, is filled with copies of
/// M_{ω,ω} (paired in the symplectic case).
pub fn pattern_to_summands(p: &LinkPattern, spec: &SpaceSpec) -> Result<SummandMultiset> {
    let g = spec.group();
    if p.kind() != g.pattern_kind() || p.block_vector() != spec.block_vector().as_slice() {
        return Err(domain(format!(
            "{} pattern with blocks {:?} does not match {} with blocks {:?}",
            p.kind().as_str(),
            p.block_vector(),
            g.name(),
            spec.block_vector()
        )));
    }
    p.check()?;
    let k = spec.k();
    let w = k + 1;
    let sp = g.is_symplectic();
    let s = |f, i, j| Summand::new(f, i, j, k).expect("pattern indices are in range");
    let mut out = SummandMultiset::new(k);
    for a in p.arcs() {
        let (lo, hi) = (a.min_vertex(), a.max_vertex());
        let part = match (a.loop_variant(), a.dotted(), a.is_leftward()) {
            (LoopVariant::None, false, true) => SymmetricSummand::pair(s(Family::Dplus, lo, hi)),
            (LoopVariant::None, false, false) => SymmetricSummand::pair(s(Family::Dminus, lo, hi)),
            (LoopVariant::None, true, true) => SymmetricSummand::pair(s(Family::Zplus, lo, hi)),
            (LoopVariant::None, true, false) => SymmetricSummand::pair(s(Family::Zminus, lo, hi)),
            (LoopVariant::Unoriented, ..) => SymmetricSummand::pair(s(Family::Dplus, lo, lo)),
            (variant, ..) => {
                let f = if variant == LoopVariant::Upper {
                    Family::Zplus
                } else {
                    Family::Zminus
                };
                if sp {
                    SymmetricSummand::single(s(f, lo, lo))
                } else {
                    SymmetricSummand::pair(s(f, lo, lo))
                }
            }
        };
        out.add(part, 1);
    }
    let residual = p.residual().expect("checked above");
    for (idx, free) in residual.into_iter().enumerate() {
        out.add(SymmetricSummand::pair(s(Family::M, idx + 1, w)), free);
    }
    let rest = g.n() - 2 * spec.dims().last().copied().unwrap_or(0);
    let omega = s(Family::M, w, w);
    if sp {
        out.add(SymmetricSummand::pair(omega), rest / 2);
    } else {
        out.add(SymmetricSummand::single(omega), rest);
    }
    Ok(out)
}

/// The decomposition of the flag itself, with the loop acting as zero.
pub fn flag_to_representation(spec: &SpaceSpec) -> SummandMultiset {
    pattern_to_summands(&spec.empty_pattern(), spec).expect("the empty pattern is valid")
}

use crate::error::{domain, Error, Result};
use crate::linalg::{ExactMatrix, GroupKind, PatternKind};
use crate::patterns::{Arc, LinkPattern, LoopVariant, SpaceSpec};

fn require_borel_pattern(p: &LinkPattern, g: GroupKind) -> Result<()> {
    if p.kind() != g.pattern_kind() {
        return Err(domain(format!(
            "a {} pattern has no representative in {}",
            p.kind().as_str(),
            g.name()
        )));
    }
    if !p.is_borel() {
        return Err(domain(
            "pattern has blocks larger than one; use parabolic_representative",
        ));
    }
    if p.k() != g.rank() {
        return Err(domain(format!(
            "pattern on {} vertices does not fit {} (rank {})",
            p.k(),
            g.name(),
            g.rank()
        )));
    }
    if p.kind() == PatternKind::Orthogonal && p.arcs().iter().any(Arc::is_loop) {
        return Err(domain("orthogonal Borel patterns cannot contain loops"));
    }
    p.check()
}

/// The representative of the Borel orbit indexed by `p`: a sum of ±1
/// matrix units, one mirrored pair (or a single unit for a loop) per arc.
pub fn pattern_to_matrix(p: &LinkPattern, g: GroupKind) -> Result<ExactMatrix> {
    require_borel_pattern(p, g)?;
    let n = g.n();
    let star = |k| g.star(k);
    let eps = if g.is_symplectic() { 1 } else { -1 };
    let mut x = ExactMatrix::zeros(n, n);
    for a in p.arcs() {
        let (i, j) = (a.min_vertex(), a.max_vertex());
        match (a.loop_variant(), a.dotted(), a.is_leftward()) {
            (LoopVariant::Upper, ..) => x.add_at(i, star(i), 1),
            (LoopVariant::Lower, ..) => x.add_at(star(i), i, 1),
            (LoopVariant::Unoriented, ..) => unreachable!("rejected by the capacity check"),
            (LoopVariant::None, false, true) => {
                x.add_at(i, j, 1);
                x.add_at(star(j), star(i), -1);
            }
            (LoopVariant::None, false, false) => {
                x.add_at(j, i, 1);
                x.add_at(star(i), star(j), -1);
            }
            (LoopVariant::None, true, true) => {
                x.add_at(i, star(j), 1);
                x.add_at(j, star(i), eps);
            }
            (LoopVariant::None, true, false) => {
                x.add_at(star(j), i, 1);
                x.add_at(star(i), j, eps);
            }
        }
    }
    Ok(x)
}

/// A Borel-level pattern that glues back to `p`.
///
/// Arcs are processed in canonical order and each takes the smallest unused
/// indices of its blocks, source before target. An undotted loop becomes
/// a leftward arrow between two indices of its block; an orthogonal dotted
/// loop becomes a dotted arrow, leftward for upper loops.
pub fn refine(p: &LinkPattern, spec: &SpaceSpec) -> Result<LinkPattern> {
    let g = spec.group();
    spec.require_maximal()?;
    if p.kind() != g.pattern_kind() || p.block_vector() != spec.block_vector().as_slice() {
        return Err(domain(format!(
            "pattern with blocks {:?} does not match the flag blocks {:?}",
            p.block_vector(),
            spec.block_vector()
        )));
    }
    p.check()?;
    let mut next: Vec<usize> = (1..=spec.k())
        .map(|s| *spec.block_range(s).start())
        .collect();
    let mut take = |s: usize| -> Result<usize> {
        let v = next[s - 1];
        if !spec.block_range(s).contains(&v) {
            return Err(Error::Internal(format!(
                "block {s} ran out of indices while refining"
            )));
        }
        next[s - 1] += 1;
        Ok(v)
    };
    let mut arcs = Vec::with_capacity(p.arcs().len());
    for a in p.arcs() {
        match a.loop_variant() {
            LoopVariant::None => {
                let s = take(a.source())?;
                let t = take(a.target())?;
                arcs.push(Arc::new(s, t, a.dotted(), LoopVariant::None)?);
            }
            LoopVariant::Unoriented => {
                let lo = take(a.source())?;
                let hi = take(a.source())?;
                arcs.push(Arc::arrow(hi, lo));
            }
            variant if g.is_symplectic() => {
                let v = take(a.source())?;
                arcs.push(Arc::new(v, v, true, variant)?);
            }
            variant => {
                let lo = take(a.source())?;
                let hi = take(a.source())?;
                arcs.push(if variant == LoopVariant::Upper {
                    Arc::dotted_arrow(hi, lo)
                } else {
                    Arc::dotted_arrow(lo, hi)
                });
            }
        }
    }
    LinkPattern::borel(p.kind(), g.rank(), arcs)
}

/// Representative of the parabolic orbit indexed by `p`, taken from its
/// canonical Borel refinement.
pub fn parabolic_representative(p: &LinkPattern, spec: &SpaceSpec) -> Result<ExactMatrix> {
    pattern_to_matrix(&refine(p, spec)?, spec.group())
}

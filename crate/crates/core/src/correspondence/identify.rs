use std::collections::BTreeSet;

use super::signature::{rank_signature, RankSignature};
use crate::error::{malformed, Result};
use crate::linalg::{ExactMatrix, GroupKind};
use crate::patterns::{glue, Arc, LinkPattern, SpaceSpec};

/// The Borel-level pattern indexing the orbit of `x`.
///
/// The δ cells of the rank signature are the support of the orbit
/// representative. They come in mirror pairs {(r, c), (c*, r*)}; each pair
/// (or self-mirrored cell) is read back as one arc.
pub fn identify(x: &ExactMatrix, g: GroupKind) -> Result<LinkPattern> {
    g.require_two_nilpotent_member(x)?;
    decode(&rank_signature(x), g)
}

/// Decodes a rank signature into a pattern; fails with a malformed-input
/// error when the δ cells do not have the shape of a representative.
pub fn decode(sig: &RankSignature, g: GroupKind) -> Result<LinkPattern> {
    let n = g.n();
    let l = g.rank();
    if sig.n() != n {
        return Err(malformed(format!(
            "signature of size {} does not fit {}",
            sig.n(),
            g.name()
        )));
    }
    if !sig.is_partial_permutation() {
        return Err(malformed("rank signature is not a partial permutation"));
    }
    let cells: BTreeSet<(usize, usize)> = sig.unit_positions().into_iter().collect();
    let star = |k| g.star(k);
    let side = |k: usize| -> Result<bool> {
        if k <= l {
            Ok(true)
        } else if k > n - l {
            Ok(false)
        } else {
            Err(malformed(format!("δ cell touches the middle index {k}")))
        }
    };
    let mut arcs = Vec::new();
    let mut seen = BTreeSet::new();
    for &(r, c) in &cells {
        if seen.contains(&(r, c)) {
            continue;
        }
        let mirror = (star(c), star(r));
        if !cells.contains(&mirror) {
            return Err(malformed(format!(
                "δ cell ({r},{c}) has no mirror partner ({},{})",
                mirror.0, mirror.1
            )));
        }
        seen.insert((r, c));
        seen.insert(mirror);
        let arc = match (side(r)?, side(c)?) {
            (true, true) if r == c => return Err(malformed(format!("diagonal δ cell ({r},{r})"))),
            (true, true) => Arc::arrow(c, r),
            (false, false) => Arc::arrow(star(r), star(c)),
            (true, false) if mirror == (r, c) => Arc::upper_loop(r),
            (true, false) => {
                let (a, b) = (r, star(c));
                Arc::dotted_arrow(a.max(b), a.min(b))
            }
            (false, true) if mirror == (r, c) => Arc::lower_loop(c),
            (false, true) => {
                let (a, b) = (c, star(r));
                Arc::dotted_arrow(a.min(b), a.max(b))
            }
        };
        arcs.push(arc);
    }
    let p = LinkPattern::borel(g.pattern_kind(), l, arcs)?;
    if !p.validate() {
        return Err(malformed(format!(
            "δ cells decode to the invalid pattern {p}"
        )));
    }
    Ok(p)
}

/// The pattern of the parabolic orbit of `x`, for a flag ending in a
/// maximal isotropic subspace.
pub fn identify_parabolic(x: &ExactMatrix, spec: &SpaceSpec) -> Result<LinkPattern> {
    spec.require_maximal()?;
    glue(&identify(x, spec.group())?, spec)
}

use crate::error::{Error, Result};
use crate::linalg::PatternKind;
use crate::patterns::{Arc, LinkPattern, LoopVariant};

/// Largest raw search space the brute-force oracles accept.
pub const SEARCH_LIMIT: u128 = 10_000_000;

/// Every arc on k vertices, found by asking the constructor about all
/// (source, target, dotted, loop) combinations.
fn raw_shapes(k: usize) -> Vec<Arc> {
    let variants = [
        LoopVariant::None,
        LoopVariant::Upper,
        LoopVariant::Lower,
        LoopVariant::Unoriented,
    ];
    let mut out = Vec::new();
    for s in 1..=k {
        for t in 1..=k {
            for dotted in [false, true] {
                for v in variants {
                    if let Ok(a) = Arc::new(s, t, dotted, v) {
                        out.push(a);
                    }
                }
            }
        }
    }
    out
}

/// Calls `visit` on every arc multiset in which each arc occurs at most
/// min(b_source, b_target) times, without any further pruning.
fn for_each_raw_multiset(b: &[usize], mut visit: impl FnMut(Vec<Arc>)) -> Result<()> {
    let shapes = raw_shapes(b.len());
    let bounds: Vec<usize> = shapes
        .iter()
        .map(|a| b[a.source() - 1].min(b[a.target() - 1]))
        .collect();
    let size = bounds
        .iter()
        .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128 + 1));
    match size {
        Some(size) if size <= SEARCH_LIMIT => {}
        other => {
            return Err(Error::SearchSpace {
                size: other.unwrap_or(u128::MAX),
                limit: SEARCH_LIMIT,
            })
        }
    }
    // mixed-radix counter over the multiplicities
    let mut mult = vec![0usize; shapes.len()];
    loop {
        let arcs = shapes
            .iter()
            .zip(&mult)
            .flat_map(|(a, &m)| std::iter::repeat_n(*a, m))
            .collect();
        visit(arcs);
        let mut pos = 0;
        loop {
            if pos == mult.len() {
                return Ok(());
            }
            if mult[pos] < bounds[pos] {
                mult[pos] += 1;
                break;
            }
            mult[pos] = 0;
            pos += 1;
        }
    }
}

/// Number of valid patterns for block vector `b`, by exhaustive search.
pub fn brute_force_count(kind: PatternKind, k: usize, b: &[usize]) -> Result<u64> {
    if b.len() != k {
        return Err(crate::error::domain(format!(
            "block vector {b:?} does not have {k} entries"
        )));
    }
    let mut count = 0;
    let mut failure = None;
    for_each_raw_multiset(b, |arcs| match LinkPattern::new(kind, b.to_vec(), arcs) {
        Ok(p) if p.validate() => count += 1,
        Ok(_) => {}
        Err(e) => failure = Some(e),
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// The defining conditions of (oriented) link patterns on l single
/// vertices, checked literally:
/// (B) every vertex is touched by at most one arrow;
/// (SpOr) no undotted arrow from a vertex to itself;
/// (Or) for orthogonal patterns, no dotted arrow from a vertex to itself.
pub fn satisfies_named_conditions(kind: PatternKind, l: usize, arcs: &[Arc]) -> bool {
    let mut touched = vec![0; l + 1];
    for a in arcs {
        touched[a.source()] += 1;
        if a.target() != a.source() {
            touched[a.target()] += 1;
        }
    }
    let b = touched.iter().all(|&t| t <= 1);
    let sp_or = !arcs.iter().any(|a| a.is_loop() && !a.dotted());
    let or = kind == PatternKind::Symplectic || !arcs.iter().any(|a| a.is_loop() && a.dotted());
    b && sp_or && or
}

/// Compares `validate` with the named conditions on every raw arc
/// multiset with b = (1, …, 1); returns the number of multisets checked
/// and the first disagreement, if any.
pub fn cross_check_named_conditions(kind: PatternKind, l: usize) -> Result<(u64, Option<String>)> {
    let b = vec![1; l];
    let mut checked = 0;
    let mut mismatch = None;
    for_each_raw_multiset(&b, |arcs| {
        checked += 1;
        if mismatch.is_some() {
            return;
        }
        let named = satisfies_named_conditions(kind, l, &arcs);
        let valid = LinkPattern::borel(kind, l, arcs.clone())
            .map(|p| p.validate())
            .unwrap_or(false);
        if named != valid {
            let text: Vec<String> = arcs.iter().map(ToString::to_string).collect();
            mismatch = Some(format!(
                "{{{}}}: validate={valid}, named conditions={named}",
                text.join(", ")
            ));
        }
    })?;
    Ok((checked, mismatch))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::count_enumerated;

    #[test]
    fn small_counts() {
        assert_eq!(
            brute_force_count(PatternKind::Symplectic, 2, &[1, 1]).unwrap(),
            13
        );
        assert_eq!(
            brute_force_count(PatternKind::Orthogonal, 2, &[1, 1]).unwrap(),
            5
        );
        for kind in [PatternKind::Symplectic, PatternKind::Orthogonal] {
            for b in [
                vec![2],
                vec![3],
                vec![2, 1],
                vec![1, 2],
                vec![2, 2],
                vec![1, 1, 1],
            ] {
                assert_eq!(
                    brute_force_count(kind, b.len(), &b).unwrap(),
                    count_enumerated(kind, &b) as u64,
                    "{kind:?} {b:?}"
                );
            }
        }
    }

    #[test]
    fn refuses_large_spaces() {
        let err = brute_force_count(PatternKind::Symplectic, 5, &[2; 5]).unwrap_err();
        assert!(matches!(err, Error::SearchSpace { .. }));
    }

    #[test]
    fn named_conditions_agree_with_consumption() {
        for kind in [PatternKind::Symplectic, PatternKind::Orthogonal] {
            for l in 0..=2 {
                let (n, bad) = cross_check_named_conditions(kind, l).unwrap();
                assert!(n >= 1);
                assert_eq!(bad, None);
            }
        }
    }
}

use super::arc::Arc;
use super::pattern::LinkPattern;
use crate::linalg::PatternKind;

/// Every arc shape available on `k` vertices, in canonical order.
pub fn arc_shapes(k: usize) -> Vec<Arc> {
    let mut out = Vec::new();
    for a in 1..=k {
        out.push(Arc::unoriented_loop(a));
        out.push(Arc::upper_loop(a));
        out.push(Arc::lower_loop(a));
        for b in a + 1..=k {
            out.push(Arc::arrow(a, b));
            out.push(Arc::dotted_arrow(a, b));
            out.push(Arc::arrow(b, a));
            out.push(Arc::dotted_arrow(b, a));
        }
    }
    out.sort();
    out
}

/// Capacity an arc shape takes from each of its endpoints, as
/// (vertex, amount) pairs.
fn cost(kind: PatternKind, a: &Arc) -> [(usize, usize); 2] {
    if !a.is_loop() {
        return [(a.source(), 1), (a.target(), 1)];
    }
    let w = if a.dotted() {
        LinkPattern::dotted_loop_weight(kind)
    } else {
        2
    };
    [(a.source(), w), (a.source(), 0)]
}

/// All valid patterns of the given kind and block vector, sorted in
/// canonical order (lexicographic on the sorted arc encodings).
///
/// The search walks the arc shapes in order and picks a multiplicity for
/// each, bounded by the residual capacity of its endpoints, so no invalid
/// candidate is ever built.
pub fn enumerate(kind: PatternKind, b: &[usize]) -> Vec<LinkPattern> {
    let shapes: Vec<(Arc, [(usize, usize); 2])> = arc_shapes(b.len())
        .into_iter()
        .map(|a| (a, cost(kind, &a)))
        .filter(|(_, c)| c.iter().all(|&(v, amount)| amount <= b[v - 1]))
        .collect();
    let mut out = Vec::new();
    let mut residual = b.to_vec();
    let mut current = Vec::new();
    walk(kind, b, &shapes, 0, &mut residual, &mut current, &mut out);
    out.sort();
    out
}

fn walk(
    kind: PatternKind,
    b: &[usize],
    shapes: &[(Arc, [(usize, usize); 2])],
    idx: usize,
    residual: &mut [usize],
    current: &mut Vec<Arc>,
    out: &mut Vec<LinkPattern>,
) {
    let Some(&(arc, cost)) = shapes.get(idx) else {
        out.push(LinkPattern::from_sorted_unchecked(
            kind,
            b.to_vec(),
            current.clone(),
        ));
        return;
    };
    walk(kind, b, shapes, idx + 1, residual, current, out);
    let mut taken = 0;
    loop {
        let fits = if cost[0].0 == cost[1].0 {
            residual[cost[0].0 - 1] >= cost[0].1 + cost[1].1
        } else {
            cost.iter().all(|&(v, amount)| residual[v - 1] >= amount)
        };
        if !fits {
            break;
        }
        for &(v, amount) in &cost {
            residual[v - 1] -= amount;
        }
        current.push(arc);
        taken += 1;
        walk(kind, b, shapes, idx + 1, residual, current, out);
    }
    for _ in 0..taken {
        current.pop();
        for &(v, amount) in &cost {
            residual[v - 1] += amount;
        }
    }
}

/// Number of valid patterns, by enumeration.
pub fn count_enumerated(kind: PatternKind, b: &[usize]) -> usize {
    enumerate(kind, b).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::count_borel;

    #[test]
    fn small_borel_counts() {
        assert_eq!(enumerate(PatternKind::Symplectic, &[1, 1]).len(), 13);
        assert_eq!(enumerate(PatternKind::Orthogonal, &[1, 1]).len(), 5);
        for l in 0..=4 {
            for kind in [PatternKind::Symplectic, PatternKind::Orthogonal] {
                let n = enumerate(kind, &vec![1; l]).len();
                assert_eq!(count_borel(kind, l), n.into(), "{kind:?} l={l}");
            }
        }
    }

    #[test]
    fn output_is_sorted_unique_and_valid() {
        let all = enumerate(PatternKind::Symplectic, &[2, 1]);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(LinkPattern::validate));
        assert!(all[0].arcs().is_empty());
    }

    #[test]
    fn single_vertex_of_capacity_two() {
        // {}, {o}, {^}, {v}, {^^}, {^v}, {vv}
        assert_eq!(enumerate(PatternKind::Symplectic, &[2]).len(), 7);
        // {}, {o}, {^}, {v}
        assert_eq!(enumerate(PatternKind::Orthogonal, &[2]).len(), 4);
    }
}

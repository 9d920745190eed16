use std::fmt;

use num_bigint::BigUint;

use super::arc::{Arc, LoopVariant};
use crate::error::{domain, malformed, Result};
use crate::linalg::PatternKind;

/// A link pattern on `k = b.len()` vertices with capacities `b`.
///
/// Arcs are kept sorted in canonical order, so structural equality is
/// equality of patterns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkPattern {
    kind: PatternKind,
    b: Vec<usize>,
    arcs: Vec<Arc>,
}

impl LinkPattern {
    /// Builds a pattern, checking that every arc endpoint lies in 1..=k and
    /// every capacity is positive. Validity is a separate question.
    pub fn new(kind: PatternKind, b: Vec<usize>, mut arcs: Vec<Arc>) -> Result<Self> {
        if let Some(pos) = b.iter().position(|&c| c == 0) {
            return Err(domain(format!("block {} has capacity 0", pos + 1)));
        }
        let k = b.len();
        for a in &arcs {
            if a.min_vertex() == 0 || a.max_vertex() > k {
                return Err(domain(format!("arc {a} leaves the vertex range 1..={k}")));
            }
        }
        arcs.sort();
        Ok(Self { kind, b, arcs })
    }

    /// A pattern on `l` vertices of capacity one.
    pub fn borel(kind: PatternKind, l: usize, arcs: Vec<Arc>) -> Result<Self> {
        Self::new(kind, vec![1; l], arcs)
    }

    pub fn empty(kind: PatternKind, b: Vec<usize>) -> Result<Self> {
        Self::new(kind, b, Vec::new())
    }

    /// Parses the compact arc list, e.g. `"2->1, 1^"`; `""` or `"{}"` is the
    /// empty pattern.
    pub fn parse_arcs(kind: PatternKind, b: Vec<usize>, text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
        let arcs = inner
            .split([',', ' '])
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Arc>>>()?;
        Self::new(kind, b, arcs)
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn k(&self) -> usize {
        self.b.len()
    }

    pub fn block_vector(&self) -> &[usize] {
        &self.b
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_borel(&self) -> bool {
        self.b.iter().all(|&c| c == 1)
    }

    /// Capacity a dotted loop uses at its vertex.
    pub fn dotted_loop_weight(kind: PatternKind) -> usize {
        match kind {
            PatternKind::Symplectic => 1,
            PatternKind::Orthogonal => 2,
        }
    }

    /// Capacity used at each vertex (index 0 is vertex 1): one per arrow
    /// endpoint, two per undotted loop, and the dotted-loop weight per dotted
    /// loop.
    pub fn consumption(&self) -> Vec<usize> {
        let mut c = vec![0; self.k()];
        let w = Self::dotted_loop_weight(self.kind);
        for a in &self.arcs {
            match a.loop_variant() {
                LoopVariant::None => {
                    c[a.source() - 1] += 1;
                    c[a.target() - 1] += 1;
                }
                LoopVariant::Unoriented => c[a.source() - 1] += 2,
                LoopVariant::Upper | LoopVariant::Lower => c[a.source() - 1] += w,
            }
        }
        c
    }

    /// Unused capacity b_i − c_i, or `None` if some vertex is overfull.
    pub fn residual(&self) -> Option<Vec<usize>> {
        self.b
            .iter()
            .zip(self.consumption())
            .map(|(&b, c)| b.checked_sub(c))
            .collect()
    }

    pub fn validate(&self) -> bool {
        self.residual().is_some()
    }

    /// Like [`validate`](Self::validate) but names the first overfull vertex.
    pub fn check(&self) -> Result<()> {
        for (i, (&b, c)) in self.b.iter().zip(self.consumption()).enumerate() {
            if c > b {
                return Err(domain(format!(
                    "vertex {} uses capacity {c} but only {b} is available",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// True iff every arrow points leftward and every dotted loop is upper;
    /// these are the patterns whose representatives lie in the nilradical.
    pub fn is_nilradical(&self) -> bool {
        self.arcs.iter().all(|a| match a.loop_variant() {
            LoopVariant::None => a.is_leftward(),
            LoopVariant::Upper | LoopVariant::Unoriented => true,
            LoopVariant::Lower => false,
        })
    }

    /// Forgets arrow directions and loop orientations.
    pub fn strip_orientation(&self) -> UnorientedPattern {
        let mut arcs: Vec<UnorientedArc> = self
            .arcs
            .iter()
            .map(|a| UnorientedArc {
                low: a.min_vertex(),
                high: a.max_vertex(),
                dotted: a.dotted(),
            })
            .collect();
        arcs.sort();
        UnorientedPattern {
            kind: self.kind,
            b: self.b.clone(),
            arcs,
        }
    }

    pub(crate) fn from_sorted_unchecked(kind: PatternKind, b: Vec<usize>, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] <= w[1]));
        Self { kind, b, arcs }
    }
}

/// `{2->1, 1^}` style listing of the arcs.
impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, a) in self.arcs.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// An arc with its orientation forgotten; `low == high` for loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorientedArc {
    pub low: usize,
    pub high: usize,
    pub dotted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnorientedPattern {
    pub kind: PatternKind,
    pub b: Vec<usize>,
    pub arcs: Vec<UnorientedArc>,
}

/// Number of Borel-level patterns on `l` vertices, from the counting
/// recurrences s_l = 3 s_{l−1} + 4(l−1) s_{l−2} and
/// o_l = o_{l−1} + 4(l−1) o_{l−2}.
pub fn count_borel(kind: PatternKind, l: usize) -> BigUint {
    let (first, step) = match kind {
        PatternKind::Symplectic => (3u32, 3u32),
        PatternKind::Orthogonal => (1, 1),
    };
    let mut prev = BigUint::from(1u32);
    let mut cur = BigUint::from(first);
    if l == 0 {
        return prev;
    }
    for m in 2..=l {
        let next = &cur * step + &prev * BigUint::from(4 * (m - 1));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

impl PatternKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "symplectic" | "sp" => Ok(PatternKind::Symplectic),
            "orthogonal" | "o" => Ok(PatternKind::Orthogonal),
            other => Err(malformed(format!("unknown pattern kind {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SP: PatternKind = PatternKind::Symplectic;
    const O: PatternKind = PatternKind::Orthogonal;

    #[test]
    fn borel_loop_rules() {
        let p = LinkPattern::borel(SP, 2, vec![Arc::upper_loop(1)]).unwrap();
        assert!(p.validate());
        let p = LinkPattern::borel(O, 2, vec![Arc::upper_loop(1)]).unwrap();
        assert!(!p.validate());
        let p = LinkPattern::borel(SP, 2, vec![Arc::unoriented_loop(1)]).unwrap();
        assert!(!p.validate());
        let p = LinkPattern::borel(SP, 3, vec![Arc::arrow(1, 2), Arc::dotted_arrow(2, 3)]).unwrap();
        assert!(!p.validate());
        assert!(p.check().unwrap_err().to_string().contains("vertex 2"));
    }

    #[test]
    fn enhanced_example_consumption() {
        let p = LinkPattern::new(
            SP,
            vec![4, 2],
            vec![
                Arc::upper_loop(1),
                Arc::unoriented_loop(1),
                Arc::dotted_arrow(1, 2),
            ],
        )
        .unwrap();
        assert_eq!(p.consumption(), vec![4, 1]);
        assert!(p.validate());
        assert_eq!(p.residual().unwrap(), vec![0, 1]);
    }

    #[test]
    fn out_of_range_is_a_domain_error() {
        assert!(LinkPattern::borel(SP, 2, vec![Arc::arrow(1, 3)]).is_err());
        assert!(LinkPattern::new(SP, vec![1, 0], vec![]).is_err());
    }

    #[test]
    fn recurrences() {
        let sp: Vec<u64> = (0..=6)
            .map(|l| count_borel(SP, l).try_into().unwrap())
            .collect();
        assert_eq!(sp, [1, 3, 13, 63, 345, 2043, 13029]);
        let o: Vec<u64> = (0..=7)
            .map(|l| count_borel(O, l).try_into().unwrap())
            .collect();
        assert_eq!(o, [1, 1, 5, 13, 73, 281, 1741, 8485]);
    }

    #[test]
    fn parse_and_display() {
        let p = LinkPattern::parse_arcs(SP, vec![1, 1, 1], "{1^, 3->2}").unwrap();
        assert_eq!(p.to_string(), "{1^, 3->2}");
        assert!(p.is_nilradical());
        let q = LinkPattern::parse_arcs(SP, vec![1, 1], "").unwrap();
        assert_eq!(q.to_string(), "{}");
        assert!(q.is_nilradical());
    }
}

use std::cmp::Ordering;
use std::fmt;

use crate::error::{malformed, Result};

/// How an arc whose source equals its target is drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoopVariant {
    /// Not a loop.
    None,
    /// Dotted loop attached above the vertex (matrix unit E_{i,i*}).
    Upper,
    /// Dotted loop attached below the vertex (matrix unit E_{i*,i}).
    Lower,
    /// Undotted loop; it only occurs once vertices carry capacity ≥ 2.
    Unoriented,
}

impl LoopVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            LoopVariant::None => "none",
            LoopVariant::Upper => "upper",
            LoopVariant::Lower => "lower",
            LoopVariant::Unoriented => "unoriented",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(LoopVariant::None),
            "upper" => Ok(LoopVariant::Upper),
            "lower" => Ok(LoopVariant::Lower),
            "unoriented" => Ok(LoopVariant::Unoriented),
            other => Err(malformed(format!("unknown loop variant {other:?}"))),
        }
    }
}

/// One arc of a link pattern. Vertices are 1-based.
///
/// The fields are private so the loop invariants always hold: a loop
/// variant is set exactly for loops, dotted loops are upper or lower, and
/// undotted loops are unoriented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    source: usize,
    target: usize,
    dotted: bool,
    loop_variant: LoopVariant,
}

impl Arc {
    pub fn new(
        source: usize,
        target: usize,
        dotted: bool,
        loop_variant: LoopVariant,
    ) -> Result<Self> {
        let ok = match loop_variant {
            LoopVariant::None => source != target,
            LoopVariant::Upper | LoopVariant::Lower => source == target && dotted,
            LoopVariant::Unoriented => source == target && !dotted,
        };
        if !ok {
            return Err(malformed(format!(
                "inconsistent arc {source}->{target} (dotted: {dotted}, loop: {})",
                loop_variant.as_str()
            )));
        }
        Ok(Self {
            source,
            target,
            dotted,
            loop_variant,
        })
    }

    /// An undotted arrow between distinct vertices.
    pub fn arrow(source: usize, target: usize) -> Self {
        assert_ne!(source, target, "use a loop constructor for source = target");
        Self::new(source, target, false, LoopVariant::None).unwrap()
    }

    /// A dotted arrow between distinct vertices.
    pub fn dotted_arrow(source: usize, target: usize) -> Self {
        assert_ne!(source, target, "use a loop constructor for source = target");
        Self::new(source, target, true, LoopVariant::None).unwrap()
    }

    pub fn upper_loop(v: usize) -> Self {
        Self::new(v, v, true, LoopVariant::Upper).unwrap()
    }

    pub fn lower_loop(v: usize) -> Self {
        Self::new(v, v, true, LoopVariant::Lower).unwrap()
    }

    pub fn unoriented_loop(v: usize) -> Self {
        Self::new(v, v, false, LoopVariant::Unoriented).unwrap()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn dotted(&self) -> bool {
        self.dotted
    }

    pub fn loop_variant(&self) -> LoopVariant {
        self.loop_variant
    }

    pub fn is_loop(&self) -> bool {
        self.loop_variant != LoopVariant::None
    }

    pub fn min_vertex(&self) -> usize {
        self.source.min(self.target)
    }

    pub fn max_vertex(&self) -> usize {
        self.source.max(self.target)
    }

    /// True for arrows pointing from a larger to a smaller vertex.
    pub fn is_leftward(&self) -> bool {
        self.source > self.target
    }

    /// Canonical encoding (min, max, direction, dotted, loop variant); the
    /// direction bit is 1 for leftward arrows.
    pub fn key(&self) -> (usize, usize, u8, u8, LoopVariant) {
        (
            self.min_vertex(),
            self.max_vertex(),
            u8::from(self.is_leftward()),
            u8::from(self.dotted),
            self.loop_variant,
        )
    }

    /// The same arc with vertices renamed by `f`. Only valid when `f` keeps
    /// distinct endpoints distinct.
    pub(crate) fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        Self {
            source: f(self.source),
            target: f(self.target),
            ..*self
        }
    }
}

impl Ord for Arc {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Arc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compact notation: `2->1` arrow, `2=>1` dotted arrow, `1^` upper dotted
/// loop, `1v` lower dotted loop, `1o` undotted loop.
impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.loop_variant {
            LoopVariant::None if self.dotted => write!(f, "{}=>{}", self.source, self.target),
            LoopVariant::None => write!(f, "{}->{}", self.source, self.target),
            LoopVariant::Upper => write!(f, "{}^", self.source),
            LoopVariant::Lower => write!(f, "{}v", self.source),
            LoopVariant::Unoriented => write!(f, "{}o", self.source),
        }
    }
}

impl std::str::FromStr for Arc {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let vertex = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| malformed(format!("bad vertex {t:?} in arc {s:?}")))
        };
        for (sep, dotted) in [("=>", true), ("->", false)] {
            if let Some((a, b)) = s.split_once(sep) {
                let (a, b) = (vertex(a)?, vertex(b)?);
                return Arc::new(a, b, dotted, LoopVariant::None);
            }
        }
        let split = s.len().saturating_sub(1);
        let (head, tail) = s.split_at(split);
        let v = vertex(head)?;
        match tail {
            "^" => Ok(Arc::upper_loop(v)),
            "v" => Ok(Arc::lower_loop(v)),
            "o" => Ok(Arc::unoriented_loop(v)),
            _ => Err(malformed(format!("cannot parse arc {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_invariants_are_enforced() {
        assert!(Arc::new(1, 1, false, LoopVariant::None).is_err());
        assert!(Arc::new(1, 2, false, LoopVariant::Upper).is_err());
        assert!(Arc::new(1, 1, false, LoopVariant::Upper).is_err());
        assert!(Arc::new(1, 1, true, LoopVariant::Unoriented).is_err());
        assert!(Arc::new(2, 2, true, LoopVariant::Lower).is_ok());
    }

    #[test]
    fn canonical_order() {
        let mut arcs = [
            Arc::upper_loop(1),
            Arc::dotted_arrow(2, 1),
            Arc::arrow(1, 2),
            Arc::unoriented_loop(1),
            Arc::lower_loop(1),
        ];
        arcs.sort();
        let text: Vec<String> = arcs.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["1o", "1^", "1v", "1->2", "2=>1"]);
    }

    #[test]
    fn text_round_trip() {
        for a in [
            Arc::arrow(3, 1),
            Arc::dotted_arrow(1, 2),
            Arc::upper_loop(4),
            Arc::lower_loop(2),
            Arc::unoriented_loop(1),
        ] {
            assert_eq!(a.to_string().parse::<Arc>().unwrap(), a);
        }
        assert!("1-2".parse::<Arc>().is_err());
        assert!("x^".parse::<Arc>().is_err());
    }
}

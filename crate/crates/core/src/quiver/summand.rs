use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// The eight families of indecomposable A(l)-modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    M,
    Mstar,
    Dplus,
    Dminus,
    Cplus,
    Cminus,
    Zplus,
    Zminus,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::M,
        Family::Mstar,
        Family::Dplus,
        Family::Dminus,
        Family::Cplus,
        Family::Cminus,
        Family::Zplus,
        Family::Zminus,
    ];

    fn label(self) -> &'static str {
        match self {
            Family::M => "M",
            Family::Mstar => "M*",
            Family::Dplus => "D+",
            Family::Dminus => "D-",
            Family::Cplus => "C+",
            Family::Cminus => "C-",
            Family::Zplus => "Z+",
            Family::Zminus => "Z-",
        }
    }
}

/// A vertex of the quiver Q_l: 1, …, l, ω, l*, …, 1*.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Plain(usize),
    Omega,
    Star(usize),
}

impl Vertex {
    /// Position in the ordering 1, …, l, ω, l*, …, 1* (0-based).
    pub fn position(self, l: usize) -> usize {
        match self {
            Vertex::Plain(p) => p - 1,
            Vertex::Omega => l,
            Vertex::Star(p) => 2 * l + 1 - p,
        }
    }

    /// The vertex p (p ≤ l) or ω (p = l + 1).
    fn plain(p: usize, l: usize) -> Self {
        if p == l + 1 {
            Vertex::Omega
        } else {
            Vertex::Plain(p)
        }
    }

    fn star(p: usize, l: usize) -> Self {
        if p == l + 1 {
            Vertex::Omega
        } else {
            Vertex::Star(p)
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Plain(p) => write!(f, "{p}"),
            Vertex::Omega => f.write_str("ω"),
            Vertex::Star(p) => write!(f, "{p}*"),
        }
    }
}

/// An indecomposable A(l)-module, named by family and two indices in
/// 1..=l+1 (where l + 1 stands for ω).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub family: Family,
    pub i: usize,
    pub j: usize,
    pub l: usize,
}

impl Summand {
    /// Validates the indices and normalizes the coincidences
    /// C+_{ω,ω} ≅ D+_{ω,ω}, M*_{ω,ω} ≅ M_{ω,ω} and Z+_{i,ω} = D+_{i,ω}.
    pub fn new(family: Family, i: usize, j: usize, l: usize) -> Result<Self> {
        let w = l + 1;
        let ok = match family {
            Family::M | Family::Mstar | Family::Dplus | Family::Cplus => 1 <= i && i <= j && j <= w,
            Family::Dminus | Family::Cminus => 1 <= i && i < j && j <= w,
            Family::Zplus => (1..=l).contains(&i) && (1..=w).contains(&j),
            Family::Zminus => (1..=l).contains(&i) && (1..=l).contains(&j),
        };
        if !ok {
            return Err(domain(format!(
                "{} is not an indecomposable of A({l})",
                Self { family, i, j, l }
            )));
        }
        let family = match family {
            Family::Cplus if i == w => Family::Dplus,
            Family::Mstar if i == w => Family::M,
            Family::Zplus if j == w => Family::Dplus,
            f => f,
        };
        Ok(Self { family, i, j, l })
    }

    pub fn omega(&self) -> usize {
        self.l + 1
    }

    /// Dimensions at the vertices 1, …, l, ω, l*, …, 1*.
    pub fn dimension_vector(&self) -> Vec<usize> {
        let mut v = vec![0; 2 * self.l + 1];
        for node in self.coefficient_quiver().nodes {
            v[node.position(self.l)] += 1;
        }
        v
    }

    pub fn total_dimension(&self) -> usize {
        self.dimension_vector().iter().sum()
    }

    /// The image under the duality ∇.
    pub fn dual(&self) -> Self {
        let (family, i, j) = match self.family {
            Family::M => (Family::Mstar, self.i, self.j),
            Family::Mstar => (Family::M, self.i, self.j),
            Family::Dplus => (Family::Cplus, self.i, self.j),
            Family::Cplus => (Family::Dplus, self.i, self.j),
            Family::Dminus => (Family::Cminus, self.i, self.j),
            Family::Cminus => (Family::Dminus, self.i, self.j),
            Family::Zplus => (Family::Zplus, self.j, self.i),
            Family::Zminus => (Family::Zminus, self.j, self.i),
        };
        Self::new(family, i, j, self.l).expect("duals of indecomposables are indecomposable")
    }

    pub fn is_self_dual(&self) -> bool {
        self.dual() == *self
    }

    /// The coefficient quiver: a string of basis vectors, each sitting at a
    /// vertex, joined by arrows of Q_l.
    pub fn coefficient_quiver(&self) -> CoefficientQuiver {
        let (l, i, j) = (self.l, self.i, self.j);
        let w = l + 1;
        let up =
            |from: usize, to: usize| (from..=to).map(|p| Vertex::plain(p, l)).collect::<Vec<_>>();
        let down_star = |from: usize, to: usize| {
            (to..=from)
                .rev()
                .map(|p| Vertex::star(p, l))
                .collect::<Vec<_>>()
        };
        let mut q = CoefficientQuiver::default();
        match self.family {
            Family::M => {
                q.chain(&up(i, j));
            }
            Family::Mstar => {
                q.chain(&down_star(j, i));
            }
            Family::Dplus | Family::Dminus => {
                // i → … → ω (top) and j → … → ω (bottom), joined by α
                let top = q.chain(&up(i, w));
                let bottom = q.chain(&up(j, w));
                let (a, b) = if self.family == Family::Dplus {
                    (bottom, top)
                } else {
                    (top, bottom)
                };
                q.edges.push((a.1, b.1, "α".into()));
            }
            Family::Cplus | Family::Cminus => {
                let top = q.chain(&down_star(w, i));
                let bottom = q.chain(&down_star(w, j));
                let (a, b) = if self.family == Family::Cplus {
                    (top, bottom)
                } else {
                    (bottom, top)
                };
                q.edges.push((a.0, b.0, "α".into()));
            }
            Family::Zplus | Family::Zminus => {
                let top = q.chain(&up(i, w));
                let bottom = q.chain(&down_star(w, j));
                let (a, b) = if self.family == Family::Zplus {
                    (bottom.0, top.1)
                } else {
                    (top.1, bottom.0)
                };
                q.edges.push((a, b, "α".into()));
            }
        }
        q
    }
}

fn index_label(k: usize, l: usize) -> String {
    if k == l + 1 {
        "ω".to_string()
    } else {
        k.to_string()
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{{{},{}}}",
            self.family.label(),
            index_label(self.i, self.l),
            index_label(self.j, self.l)
        )
    }
}

/// Basis vectors at vertices and the arrows between them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoefficientQuiver {
    pub nodes: Vec<Vertex>,
    /// (from node, to node, arrow name)
    pub edges: Vec<(usize, usize, String)>,
}

impl CoefficientQuiver {
    /// Appends a path through `vertices`; returns its first and last node.
    fn chain(&mut self, vertices: &[Vertex]) -> (usize, usize) {
        let start = self.nodes.len();
        for (k, &v) in vertices.iter().enumerate() {
            self.nodes.push(v);
            if k > 0 {
                let name = match (vertices[k - 1], v) {
                    (Vertex::Plain(p), _) => format!("a{p}"),
                    (_, Vertex::Star(p)) => format!("a{p}*"),
                    _ => unreachable!("chains never leave a starred vertex towards ω"),
                };
                self.edges.push((start + k - 1, start + k, name));
            }
        }
        (start, self.nodes.len() - 1)
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("digraph \"{name}\" {{\n  rankdir=LR;\n");
        for (k, v) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{k} [label=\"{v}\"];\n"));
        }
        for (a, b, label) in &self.edges {
            out.push_str(&format!("  n{a} -> n{b} [label=\"{label}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(f: Family, i: usize, j: usize, l: usize) -> Summand {
        Summand::new(f, i, j, l).unwrap()
    }

    #[test]
    fn dimension_vectors() {
        assert_eq!(s(Family::M, 2, 3, 2).dimension_vector(), [0, 1, 1, 0, 0]);
        assert_eq!(
            s(Family::Zplus, 1, 1, 2).dimension_vector(),
            [1, 1, 2, 1, 1]
        );
        let d = s(Family::Dplus, 1, 1, 2).dimension_vector();
        let c = s(Family::Cplus, 1, 1, 2).dimension_vector();
        let sum: Vec<usize> = d.iter().zip(&c).map(|(a, b)| a + b).collect();
        assert_eq!(sum, [2, 2, 4, 2, 2]);
        assert_eq!(
            s(Family::Dplus, 1, 3, 3).dimension_vector(),
            [1, 1, 2, 2, 0, 0, 0]
        );
        assert_eq!(
            s(Family::Cminus, 2, 3, 3).dimension_vector(),
            [0, 0, 0, 2, 2, 1, 0]
        );
        assert_eq!(
            s(Family::Mstar, 1, 2, 3).dimension_vector(),
            [0, 0, 0, 0, 0, 1, 1]
        );
    }

    #[test]
    fn dimension_vectors_match_the_closed_form() {
        // 1 on i..j−1, 2 on j..l and at ω for D; Z: 1 on i..l, 2 at ω, 1 on j*..l*
        let l = 4;
        for i in 1..=l + 1 {
            for j in i..=l + 1 {
                let mut want = vec![0; 2 * l + 1];
                for p in i..j {
                    want[p - 1] += 1;
                }
                for p in j..=l {
                    want[p - 1] += 2;
                }
                want[l] += 2;
                let got = s(Family::Dplus, i, j, l).dimension_vector();
                assert_eq!(got, want, "D+_{i},{j}");
                let mirrored: Vec<usize> = want.iter().rev().copied().collect();
                assert_eq!(s(Family::Cplus, i, j, l).dimension_vector(), mirrored);
            }
        }
        for i in 1..=l {
            for j in 1..=l {
                let mut want = vec![0; 2 * l + 1];
                for p in i..=l {
                    want[p - 1] += 1;
                }
                want[l] += 2;
                for p in j..=l {
                    want[2 * l + 1 - p] += 1;
                }
                assert_eq!(s(Family::Zminus, i, j, l).dimension_vector(), want);
            }
        }
    }

    #[test]
    fn duality() {
        assert_eq!(s(Family::M, 1, 2, 2).dual(), s(Family::Mstar, 1, 2, 2));
        assert_eq!(
            s(Family::Zminus, 1, 2, 2).dual(),
            s(Family::Zminus, 2, 1, 2)
        );
        assert!(s(Family::Dplus, 3, 3, 2).is_self_dual());
        assert!(s(Family::M, 3, 3, 2).is_self_dual());
        assert_eq!(s(Family::Cplus, 3, 3, 2), s(Family::Dplus, 3, 3, 2));
    }

    #[test]
    fn index_guards() {
        assert!(Summand::new(Family::Dminus, 1, 1, 2).is_err());
        assert!(Summand::new(Family::Cminus, 1, 1, 2).is_err());
        assert!(Summand::new(Family::M, 2, 1, 2).is_err());
        assert!(Summand::new(Family::Zminus, 1, 3, 2).is_err());
        assert_eq!(
            Summand::new(Family::Zplus, 1, 3, 2).unwrap(),
            s(Family::Dplus, 1, 3, 2)
        );
    }

    #[test]
    fn display_uses_omega() {
        assert_eq!(s(Family::Mstar, 1, 3, 2).to_string(), "M*_{1,ω}");
        assert_eq!(s(Family::Zminus, 1, 2, 2).to_string(), "Z-_{1,2}");
    }

    #[test]
    fn coefficient_quiver_dot() {
        let dot = s(Family::Zplus, 1, 1, 1)
            .coefficient_quiver()
            .to_dot("Z+_{1,1}");
        assert!(dot.contains("n2 -> n1 [label=\"α\"]"), "{dot}");
        assert_eq!(dot.matches("->").count(), 3);
    }
}

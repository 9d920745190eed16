use std::fmt;

use serde::Serialize;

use super::summand::{Family, Summand};

/// An almost split sequence 0 → left → ⊕ middle → right → 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArSequence {
    /// Family label, e.g. `"3d"`, in the order the sequences are listed.
    pub tag: &'static str,
    pub left: Summand,
    pub middle: Vec<Summand>,
    pub right: Summand,
}

impl ArSequence {
    /// dim(left) + dim(right) = Σ dim(middle), vertex by vertex.
    pub fn is_exact(&self) -> bool {
        let outer: Vec<usize> = self
            .left
            .dimension_vector()
            .iter()
            .zip(self.right.dimension_vector())
            .map(|(a, b)| a + b)
            .collect();
        let mut inner = vec![0; outer.len()];
        for m in &self.middle {
            for (a, b) in inner.iter_mut().zip(m.dimension_vector()) {
                *a += b;
            }
        }
        outer == inner
    }
}

impl fmt::Display for ArSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let middle: Vec<String> = self.middle.iter().map(ToString::to_string).collect();
        write!(
            f,
            "0 → {} → {} → {} → 0",
            self.left,
            middle.join(" ⊕ "),
            self.right
        )
    }
}

/// A listed sequence that could not be instantiated because one of its
/// terms is not a module of the catalog at this rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkippedSequence {
    pub tag: &'static str,
    pub terms: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArReport {
    pub l: usize,
    pub sequences: Vec<ArSequence>,
    pub skipped: Vec<SkippedSequence>,
}

type Label = (Family, usize, usize);

struct Builder {
    l: usize,
    report: ArReport,
}

impl Builder {
    fn add(&mut self, tag: &'static str, left: Label, middle: &[Label], right: Label) {
        let l = self.l;
        let name = |(f, i, j): Label| {
            let fam = format!("{}", Summand { family: f, i, j, l });
            fam
        };
        let all: Vec<Label> = std::iter::once(left)
            .chain(middle.iter().copied())
            .chain([right])
            .collect();
        let mut resolved = Vec::with_capacity(all.len());
        for &lab in &all {
            match Summand::new(lab.0, lab.1, lab.2, l) {
                Ok(s) => resolved.push(s),
                Err(_) => {
                    let terms: Vec<String> = all.iter().map(|&x| name(x)).collect();
                    self.report.skipped.push(SkippedSequence {
                        tag,
                        terms: terms.join(", "),
                        reason: format!("{} is not an indecomposable of A({l})", name(lab)),
                    });
                    return;
                }
            }
        }
        let seq = ArSequence {
            tag,
            left: resolved[0],
            middle: resolved[1..resolved.len() - 1].to_vec(),
            right: resolved[resolved.len() - 1],
        };
        let duplicate = self
            .report
            .sequences
            .iter()
            .any(|s| s.left == seq.left && s.right == seq.right && s.middle == seq.middle);
        if !duplicate {
            self.report.sequences.push(seq);
        }
    }
}

/// The listed Auslander–Reiten sequences of A(l), instantiated for rank
/// `l` with their index guards.
///
/// Ranges are chosen so that the starting module is always a named module
/// (i ≤ j, or i < j for D− and C−). A sequence some other term of which
/// falls outside the catalog, such as P_ω = C−_{1,1}, is reported in
/// `skipped` instead of being repaired.
pub fn ar_sequences(l: usize) -> ArReport {
    use Family::*;
    assert!(l >= 1, "A(l) needs l ≥ 1");
    let w = l + 1;
    let mut b = Builder {
        l,
        report: ArReport {
            l,
            sequences: Vec::new(),
            skipped: Vec::new(),
        },
    };
    let pairs = |lo: usize, strict: bool| {
        (lo..=w).flat_map(move |i| ((if strict { i + 1 } else { i })..=w).map(move |j| (i, j)))
    };

    // starting with M_{ij}
    b.add("1a", (M, 1, w), &[(Zplus, 1, 1)], (Mstar, 1, w));
    for i in 2..=w {
        b.add(
            "1b",
            (M, i, w),
            &[(M, i - 1, w), (Zplus, i, 1)],
            (Zplus, i - 1, 1),
        );
    }
    for (i, j) in pairs(2, false).filter(|&(_, j)| j <= l) {
        b.add(
            "1c",
            (M, i, j),
            &[(M, i, j - 1), (M, i - 1, j)],
            (M, i - 1, j - 1),
        );
    }
    for i in 2..=l {
        b.add("1d", (M, i, i), &[(M, i - 1, i)], (M, i - 1, i - 1));
    }

    // starting with M*_{ij}
    for j in 1..l {
        b.add(
            "2a",
            (Mstar, 1, j),
            &[(Mstar, 2, j), (Mstar, 1, j + 1)],
            (Mstar, 2, j + 1),
        );
    }
    b.add(
        "2b",
        (Mstar, 1, l),
        &[(Mstar, 2, l), (Cminus, 1, 1)],
        (Cminus, 1, l),
    );
    // for l = 1 this would start at M*_{1,ω} like 2h
    if l >= 2 {
        b.add(
            "2c",
            (Mstar, 1, w),
            &[(Mstar, 2, w), (Cplus, 1, 1)],
            (Cminus, 1, 2),
        );
    }
    for i in 1..l {
        b.add(
            "2d",
            (Mstar, i, i),
            &[(Mstar, i, i + 1)],
            (Mstar, i + 1, i + 1),
        );
    }
    b.add("2e", (Mstar, l, l), &[(Cminus, 1, l)], (Cminus, 1, w));
    b.add("2f", (M, w, w), &[(M, l, w), (Cplus, 1, w)], (Zplus, l, 1));
    for i in 2..l {
        b.add(
            "2g",
            (Mstar, i, w),
            &[(Mstar, i + 1, w), (Cplus, 1, i)],
            (Cplus, 1, i + 1),
        );
    }
    b.add(
        "2h",
        (Mstar, l, w),
        &[(M, w, w), (Cplus, 1, l)],
        (Cplus, 1, w),
    );
    for (i, j) in pairs(2, false).filter(|&(_, j)| j < l) {
        b.add(
            "2i",
            (Mstar, i, j),
            &[(Mstar, i + 1, j), (Mstar, i, j + 1)],
            (Mstar, i + 1, j + 1),
        );
    }

    // starting with D+_{ij}
    b.add("3a", (Dplus, 1, w), &[(Dplus, 1, l), (M, w, w)], (M, l, w));
    for i in 2..=l {
        b.add(
            "3b",
            (Dplus, i, w),
            &[(Dplus, i - 1, w), (Dplus, i, l)],
            (Dplus, i - 1, l),
        );
    }
    for j in 2..=l {
        b.add(
            "3c",
            (Dplus, 1, j),
            &[(Dplus, 1, j - 1), (M, j, w)],
            (M, j - 1, w),
        );
    }
    for (i, j) in pairs(2, false).filter(|&(_, j)| j <= l) {
        b.add(
            "3d",
            (Dplus, i, j),
            &[(Dplus, i - 1, j), (Dplus, i, j - 1)],
            (Dplus, i - 1, j - 1),
        );
    }

    // starting with D−_{ij}
    b.add("4a", (Dminus, 1, w), &[(Dminus, 1, l)], (M, l, l));
    for i in 2..=l {
        b.add(
            "4b",
            (Dminus, i, w),
            &[(Dminus, i - 1, w), (Dplus, i, l)],
            (Dminus, i - 1, l),
        );
    }
    for i in 2..=w {
        b.add(
            "4c",
            (Dplus, i, i),
            &[(Dminus, i - 1, i), (Dplus, i - 1, i)],
            (Dplus, i - 1, i - 1),
        );
    }
    for j in 2..=l {
        b.add(
            "4d",
            (Dminus, 1, j),
            &[(Dminus, 1, j - 1), (M, j, l)],
            (M, j - 1, l),
        );
    }
    for (i, j) in pairs(2, true).filter(|&(_, j)| j <= l) {
        b.add(
            "4e",
            (Dminus, i, j),
            &[(Dminus, i - 1, j), (Dminus, i, j - 1)],
            (Dminus, i - 1, j - 1),
        );
    }

    // starting with C+_{ij}
    for i in 1..l {
        b.add(
            "5a",
            (Cplus, i, w),
            &[(Cplus, i + 1, w), (Zplus, l, i)],
            (Zplus, l, i + 1),
        );
    }
    b.add(
        "5b",
        (Cplus, l, w),
        &[(Cplus, w, w), (Zplus, l, l)],
        (Dplus, l, w),
    );
    for (i, j) in pairs(2, false).filter(|&(_, j)| j <= l) {
        b.add(
            "5c",
            (Cplus, i, j),
            &[(Cplus, i + 1, j), (Cplus, i, j + 1)],
            (Cplus, i + 1, j + 1),
        );
    }

    // starting with C−_{ij}
    b.add(
        "6a",
        (Cminus, 1, w),
        &[(Zminus, l, 1), (Cminus, 2, w)],
        (Zminus, l, 2),
    );
    for i in 1..=l {
        b.add(
            "6b",
            (Cminus, i, w),
            &[(Zminus, l, i), (Cminus, i + 1, w)],
            (Zminus, l, i + 1),
        );
    }
    b.add(
        "6c",
        (Cminus, 1, 1),
        &[(Cminus, 1, 2), (Cplus, 1, 2)],
        (Cplus, 2, 2),
    );
    for (i, j) in pairs(2, true) {
        b.add(
            "6d",
            (Cminus, i, j),
            &[(Cminus, i + 1, j), (Cminus, i, j + 1)],
            (Cminus, i + 1, j + 1),
        );
    }

    // starting with Z+_{ij}
    for j in 1..=l {
        b.add(
            "7a",
            (Zplus, 1, j),
            &[(Zplus, 1, j + 1), (Mstar, j, w)],
            (Mstar, j + 1, w),
        );
    }
    for i in 2..=l {
        for j in 1..=l {
            b.add(
                "7b",
                (Zplus, i, j),
                &[(Zplus, i, j + 1), (Zplus, i - 1, j)],
                (Zplus, i - 1, j + 1),
            );
        }
    }

    // starting with Z−_{ij}
    for i in 2..=l {
        b.add(
            "8a",
            (Zminus, i, 1),
            &[(Zminus, i - 1, 1), (Zminus, i, 2)],
            (Zminus, i - 1, 2),
        );
    }
    for i in 2..=l {
        for j in 2..=l {
            b.add(
                "8b",
                (Zminus, i, j),
                &[(Zminus, i - 1, j), (Zminus, i, j + 1)],
                (Zminus, i - 1, j + 1),
            );
        }
    }
    b.report
}

impl ArReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sequences {
            out.push_str(&format!("{}: {s}\n", s.tag));
        }
        for s in &self.skipped {
            out.push_str(&format!(
                "# skipped {}: {} ({})\n",
                s.tag, s.terms, s.reason
            ));
        }
        out
    }

    /// The translation quiver: irreducible maps left → middle → right as
    /// solid edges, the translation right ⇢ left dashed.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph \"AR(A({}))\" {{\n", self.l);
        let mut edges = std::collections::BTreeSet::new();
        for s in &self.sequences {
            for m in &s.middle {
                edges.insert(format!("  \"{}\" -> \"{m}\";", s.left));
                edges.insert(format!("  \"{m}\" -> \"{}\";", s.right));
            }
            edges.insert(format!(
                "  \"{}\" -> \"{}\" [style=dashed, label=\"τ\"];",
                s.right, s.left
            ));
        }
        for e in edges {
            out.push_str(&e);
            out.push('\n');
        }
        out.push_str("}\n");
        out
    }
}

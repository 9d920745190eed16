use std::fmt::Write;

use crate::linalg::{format_rational, ExactMatrix};
use crate::patterns::{LinkPattern, LoopVariant};

/// An `\xymatrix` drawing of a pattern: rightward arrows bend above the
/// vertices, leftward ones below, dots mark dotted arcs.
pub fn pattern_tex(p: &LinkPattern) -> String {
    let mut cells: Vec<String> = (1..=p.k())
        .map(|v| format!("\\textrm{{\\tiny{{{v}}}}}"))
        .collect();
    for a in p.arcs() {
        let dot = if a.dotted() { "|{\\bullet}" } else { "" };
        let s = a.source();
        let decoration = match a.loop_variant() {
            LoopVariant::Upper => format!("\\ar@(ur,ul){dot}"),
            LoopVariant::Lower => format!("\\ar@(ul,ur){dot}"),
            LoopVariant::Unoriented => "\\ar@(ur,ul)@{-}".to_string(),
            LoopVariant::None if a.is_leftward() => {
                format!("\\ar@/_1pc/[{}]{dot}", "l".repeat(s - a.target()))
            }
            LoopVariant::None => format!("\\ar@/^1pc/[{}]{dot}", "r".repeat(a.target() - s)),
        };
        cells[s - 1].push_str(&decoration);
    }
    format!("\\xymatrix{{{}}}", cells.join("&\n"))
}

pub fn matrix_tex(x: &ExactMatrix) -> String {
    let mut out = format!("$\\left(\\begin{{array}}{{{}}}\n", "c".repeat(x.cols()));
    for r in 0..x.rows() {
        let row: Vec<String> = x.row(r).iter().map(format_rational).collect();
        out.push_str(&row.join("&"));
        out.push_str(if r + 1 < x.rows() { "\\\\\n" } else { "" });
    }
    out.push_str("\\end{array}\\right)$");
    out
}

/// A table with patterns in one row and their matrices underneath, five
/// entries per row.
pub fn tex_table(entries: &[(LinkPattern, ExactMatrix)]) -> String {
    let mut out = String::from("\\tiny\n");
    let width = entries.len().clamp(1, 5);
    let _ = writeln!(out, "\\begin{{tabular}}{{|{}}}", "c|".repeat(width));
    out.push_str("\\hline\n");
    for chunk in entries.chunks(5) {
        let pad = |cells: Vec<String>| {
            let mut cells = cells;
            cells.resize(width, String::new());
            cells.join("\n&")
        };
        out.push_str(&pad(chunk.iter().map(|(p, _)| pattern_tex(p)).collect()));
        out.push_str("\\\\\\hline\n");
        out.push_str(&pad(chunk.iter().map(|(_, x)| matrix_tex(x)).collect()));
        out.push_str("\\\\\\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PatternKind;
    use crate::patterns::Arc;

    #[test]
    fn arrow_drawings() {
        let p =
            LinkPattern::borel(PatternKind::Symplectic, 2, vec![Arc::dotted_arrow(2, 1)]).unwrap();
        assert_eq!(
            pattern_tex(&p),
            "\\xymatrix{\\textrm{\\tiny{1}}&\n\\textrm{\\tiny{2}}\\ar@/_1pc/[l]|{\\bullet}}"
        );
        let p = LinkPattern::borel(
            PatternKind::Symplectic,
            3,
            vec![Arc::arrow(1, 3), Arc::lower_loop(2)],
        )
        .unwrap();
        assert!(pattern_tex(&p).contains("\\ar@/^1pc/[rr]"));
        assert!(pattern_tex(&p).contains("\\ar@(ul,ur)|{\\bullet}"));
    }

    #[test]
    fn matrix_layout() {
        let x = ExactMatrix::from_integers(&[[0, 1], [-1, 0]]);
        assert_eq!(
            matrix_tex(&x),
            "$\\left(\\begin{array}{cc}\n0&1\\\\\n-1&0\\end{array}\\right)$"
        );
    }

    #[test]
    fn table_rows_hold_five() {
        let p = LinkPattern::borel(PatternKind::Orthogonal, 1, vec![]).unwrap();
        let x = ExactMatrix::zeros(2, 2);
        let t = tex_table(&vec![(p, x); 7]);
        assert_eq!(t.matches("\\hline").count(), 5);
        assert!(t.starts_with("\\tiny\n\\begin{tabular}{|c|c|c|c|c|}"));
    }
}

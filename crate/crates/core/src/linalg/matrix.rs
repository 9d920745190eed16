use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, malformed, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Dense matrix of exact rationals, stored row-major.
///
/// Row/column accessors are 0-based. Constructors that mirror the usual
/// algebraic notation (`elementary`) take 1-based indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { rat(1) } else { rat(0) })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(malformed("ragged matrix rows"));
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer rows. Panics on ragged input; meant for
    /// literals in code and tests.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.as_ref().iter().map(|&v| rat(v)).collect())
            .collect();
        Self::from_rows(data).expect("rectangular integer literal")
    }

    /// The matrix unit E_{i,j} of size n (1-based indices).
    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        assert!(
            (1..=n).contains(&i) && (1..=n).contains(&j),
            "E_{{{i},{j}}} outside {n}x{n}"
        );
        let mut m = Self::zeros(n, n);
        m.set(i - 1, j - 1, rat(1));
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    /// Adds `v` to the entry at 1-based position (i, j).
    pub fn add_at(&mut self, i: usize, j: usize, v: i64) {
        let idx = (i - 1) * self.cols + (j - 1);
        self.entries[idx] += rat(v);
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &Rational> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| {
            self.get(rows.start + r, cols.start + c).clone()
        })
    }

    /// True iff every entry on or below the diagonal vanishes.
    pub fn is_strictly_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols.min(r + 1)).all(|c| self.get(r, c).is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols.min(r)).all(|c| self.get(r, c).is_zero()))
    }

    /// Nonzero positions as 1-based (row, col) pairs in row-major order.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).is_zero() {
                    out.push((r + 1, c + 1));
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        *self.prefix_column_ranks().last().unwrap_or(&0)
    }

    /// `out[j]` is the rank of the first `j` columns, for `j = 0..=cols`.
    ///
    /// Pivots are chosen column by column, so a single elimination
    /// yields every column-prefix rank.
    pub fn prefix_column_ranks(&self) -> Vec<usize> {
        let mut m = self.integer_rows();
        bareiss_prefix_ranks(&mut m, self.cols)
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
                row.iter().map(|e| e.numer() * (&l / e.denom())).collect()
            })
            .collect()
    }

    /// Basis of the right kernel {v : self * v = 0}, from the reduced row
    /// echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m: Vec<Vec<Rational>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(p) = (row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].recip();
            for v in m[row].iter_mut() {
                *v *= &inv;
            }
            let pivot_row = m[row].clone();
            for (r, target) in m.iter_mut().enumerate() {
                if r != row && !target[col].is_zero() {
                    let f = target[col].clone();
                    for (t, p) in target[col..].iter_mut().zip(&pivot_row[col..]) {
                        *t -= &f * p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m[r][f].clone();
                }
                v
            })
            .collect()
    }
}

/// Fraction-free Gaussian elimination in place. Returns the rank of every
/// column prefix.
pub(crate) fn bareiss_prefix_ranks(m: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut ranks = Vec::with_capacity(cols + 1);
    ranks.push(0);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank < rows {
            if let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) {
                m.swap(rank, p);
                let (top, rest) = m.split_at_mut(rank + 1);
                let pivot_row = &top[rank];
                let pivot = &pivot_row[col];
                for row in rest.iter_mut() {
                    let factor = std::mem::take(&mut row[col]);
                    if factor.is_zero() {
                        for v in row[col + 1..].iter_mut() {
                            if !v.is_zero() {
                                *v = &*v * pivot / &prev;
                            }
                        }
                        continue;
                    }
                    for c in col + 1..cols {
                        let v = &row[c] * pivot - &factor * &pivot_row[c];
                        debug_assert!((&v % &prev).is_zero());
                        row[c] = v / &prev;
                    }
                }
                prev = pivot.clone();
                rank += 1;
            }
        }
        ranks.push(rank);
    }
    ranks
}

/// Rank of a linear system given as sparse rows: each row is a list of
/// (unknown index, coefficient) pairs.
pub(crate) fn sparse_system_rank(rows: &[Vec<(usize, i64)>], unknowns: usize) -> usize {
    let mut dense: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|&(_, c)| c != 0))
        .map(|r| {
            let mut v = vec![BigInt::zero(); unknowns];
            for &(i, c) in r {
                v[i] += c;
            }
            v
        })
        .collect();
    dense.retain(|r| r.iter().any(|v| !v.is_zero()));
    *bareiss_prefix_ranks(&mut dense, unknowns)
        .last()
        .unwrap_or(&0)
}

/// Stacks rational linear equations into an integer system and returns
/// its rank.
pub(crate) fn rational_system_rank(rows: &[Vec<Rational>], unknowns: usize) -> usize {
    let m = ExactMatrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c].clone());
    m.rank()
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: Self) -> ExactMatrix {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: Self) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: Self) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || malformed(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(malformed(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(format_rational).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

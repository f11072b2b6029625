//! Exact arithmetic over the rationals.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator, so structural equality is numeric equality.
//! [`QMatrix`] is a dense row-major matrix of rationals with the elimination
//! routines the rest of the crate is built on. Pivoting is always "first
//! nonzero entry, scanning rows top to bottom", which makes every basis this
//! module returns reproducible.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// A coordinate vector over the rationals.
pub type QVector = Vec<Rational>;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn zero_vector(len: usize) -> QVector {
    vec![Rational::zero(); len]
}

pub fn unit_vector(len: usize, at: usize) -> QVector {
    let mut v = zero_vector(len);
    v[at] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// `acc += scale * v`, skipping the work when `scale` is zero.
pub fn axpy(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    if scale.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a += scale * b;
        }
    }
}

pub fn scaled(v: &[Rational], scale: &Rational) -> QVector {
    v.iter().map(|x| x * scale).collect()
}

pub fn negated(v: &[Rational]) -> QVector {
    v.iter().map(|x| -x).collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: QMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from row vectors. An empty slice gives a 0x0 matrix.
    pub fn from_rows(rows: &[QVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected length {cols}, found {}",
                bad.len()
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[QVector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, expected {rows}",
                    c.len()
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<QVector> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Self::from_rows(&rows).expect("ragged integer matrix literal")
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

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> QVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<QVector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> QVector {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Row vector times matrix: `v · M`.
    pub fn vec_mul(&self, v: &[Rational]) -> QVector {
        assert_eq!(v.len(), self.rows, "vector length must match row count");
        let mut out = zero_vector(self.cols);
        for (i, x) in v.iter().enumerate() {
            axpy(&mut out, x, self.row(i));
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Stacks `self` above `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack: {} vs {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack: {} vs {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(out)
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), self.cols);
        for (k, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out[(k, j)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out[(i, k)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let mut rows: Vec<QVector> = self.row_vectors();
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(found) = (next..self.rows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(found, next);
            let inv = rows[next][col].recip();
            if !inv.is_one() {
                for x in rows[next][col..].iter_mut() {
                    *x *= &inv;
                }
            }
            let pivot_row = std::mem::take(&mut rows[next]);
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    if !p.is_zero() {
                        *x -= &factor * p;
                    }
                }
            }
            rows[next] = pivot_row;
            pivots.push(col);
            next += 1;
        }
        let reduced = Self {
            rows: self.rows,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        };
        Rref { reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut rows = self.row_vectors();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(found) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
                return Ok(Rational::zero());
            };
            if found != col {
                rows.swap(found, col);
                det = -det;
            }
            let pivot = rows[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = &rows[r][col] / &pivot;
                for j in col..n {
                    let delta = &factor * &rows[col][j];
                    rows[r][j] -= delta;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let augmented = self.hstack(&Self::identity(n))?;
        let rref = augmented.rref();
        let rank = rref.pivots.iter().take_while(|&&p| p < n).count();
        if rank < n {
            return Err(Error::SingularMatrix { rank, order: n });
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(rref.reduced.select_columns(&cols))
    }

    /// Basis of `{x : Mx = 0}`: one vector per free column of the RREF, with
    /// a 1 in that column.
    pub fn nullspace(&self) -> Vec<QVector> {
        let Rref { reduced, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = unit_vector(self.cols, free);
                for (r, &p) in pivots.iter().enumerate() {
                    x[p] = -reduced[(r, free)].clone();
                }
                x
            })
            .collect()
    }

    /// Basis of `{y : yM = 0}`.
    pub fn left_nullspace(&self) -> Vec<QVector> {
        self.transpose().nullspace()
    }

    /// Solves `Mx = b`, returning one solution (free variables set to zero).
    pub fn solve(&self, b: &[Rational]) -> Option<QVector> {
        assert_eq!(b.len(), self.rows, "right-hand side length must match row count");
        let column = Self::from_columns(self.rows, &[b.to_vec()]).expect("length checked");
        let Rref { reduced, pivots } = self.hstack(&column).expect("rows match").rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Congruence decomposition of a symmetric matrix: returns `(p1, q)` with
    /// `p1` of shape `l x n` and rank `l`, `q` symmetric invertible `l x l`,
    /// and `p1ᵗ · q · p1 = self`.
    ///
    /// Invertible input is returned unchanged as `(I, S)`. Otherwise
    /// Lagrange's reduction finds an invertible `T` with
    /// `Tᵗ S T = diag(q_1, …, q_l, 0, …)`, and `p1` is the first `l` rows of
    /// `T⁻¹`.
    pub fn decompose_symmetric(&self) -> Result<(Self, Self)> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = self.rows;
        if self.rank() == n {
            return Ok((Self::identity(n), self.clone()));
        }

        let mut s = self.clone();
        let mut t = Self::identity(n);
        let mut diagonal = Vec::new();
        for k in 0..n {
            let pivot = match (k..n).find(|&i| !s[(i, i)].is_zero()) {
                Some(p) => Some(p),
                None => {
                    // Every remaining diagonal entry is zero: fold a column
                    // with a nonzero off-diagonal partner into column k.
                    let pair = (k..n)
                        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| !s[(i, j)].is_zero());
                    pair.map(|(i, j)| {
                        s.add_congruent(i, j, &Rational::one());
                        t.add_column(i, j, &Rational::one());
                        i
                    })
                }
            };
            let Some(p) = pivot else { break };
            s.swap_congruent(k, p);
            t.swap_columns(k, p);
            let pivot_value = s[(k, k)].clone();
            for j in k + 1..n {
                if s[(k, j)].is_zero() {
                    continue;
                }
                let factor = -(&s[(k, j)] / &pivot_value);
                s.add_congruent(j, k, &factor);
                t.add_column(j, k, &factor);
            }
            diagonal.push(pivot_value);
        }

        let l = diagonal.len();
        let inv = t.inverse()?;
        let rows: Vec<usize> = (0..l).collect();
        Ok((inv.select_rows(&rows), Self::diagonal(&diagonal)))
    }

    /// `col[dst] += factor * col[src]` and `row[dst] += factor * row[src]`.
    fn add_congruent(&mut self, dst: usize, src: usize, factor: &Rational) {
        self.add_column(dst, src, factor);
        for j in 0..self.cols {
            let delta = factor * &self[(src, j)];
            self[(dst, j)] += delta;
        }
    }

    fn swap_congruent(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.swap_columns(a, b);
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn add_column(&mut self, dst: usize, src: usize, factor: &Rational) {
        for i in 0..self.rows {
            let delta = factor * &self[(i, src)];
            self[(i, dst)] += delta;
        }
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Rows as vectors of `"p/q"` strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<QVector>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&parsed)
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QMatrix{self}")
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", format_rational(x))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Rank of a set of vectors of equal length.
pub fn span_rank(vectors: &[QVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    QMatrix::from_rows(vectors).map_or(0, |m| m.rank())
}

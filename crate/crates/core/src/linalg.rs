//! Dense exact matrices over the rationals and fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
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

    pub fn scale(&self, c: &Q) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Q, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
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
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self, other] = self*other - other*self`
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Entries listed column by column, the layout used when a matrix is
    /// treated as a vector of length `rows * cols`.
    pub fn flatten(&self) -> Vec<Q> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<Vec<Q>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn kernel(&self) -> Vec<Vec<Q>> {
        let mut is_pivot = vec![None; self.cols];
        for (r, &p) in self.pivots.iter().enumerate() {
            is_pivot[p] = Some(r);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (r, &p) in self.pivots.iter().enumerate() {
                v[p] = -self.rows[r][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

fn lcm_denominators(row: &[Q]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn integer_row(row: &[Q]) -> Vec<BigInt> {
    let l = lcm_denominators(row);
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Fraction-free forward elimination. Returns the echelon rows (integers)
/// and their pivot columns.
fn bareiss_forward(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let (top, rest) = a.split_at_mut(r + 1);
        let piv_row = &top[r];
        let piv = piv_row[c].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut v = &piv * &row[j];
                if !lead.is_zero() && !piv_row[j].is_zero() {
                    v -= &lead * &piv_row[j];
                }
                if !v.is_zero() {
                    v /= &prev;
                }
                row[j] = v;
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Back substitution over the rationals, turning an echelon form into the
/// reduced one.
fn reduce_back(rows: Vec<Vec<BigInt>>, pivots: &[usize], cols: usize) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = rows
        .into_iter()
        .zip(pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.into_iter().map(|x| Q::new(x, lead.clone())).collect()
        })
        .collect();
    for r in (0..out.len()).rev() {
        let p = pivots[r];
        let (upper, lower) = out.split_at_mut(r);
        let pivot_row = &lower[0];
        for row in upper.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for j in p..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        }
    }
    out
}

/// Reduced row echelon form of the given rows, each of length `cols`.
///
/// Tall inputs are processed in blocks so that the working matrix never has
/// many more rows than columns.
pub fn rref_rows<I>(cols: usize, rows: I) -> Echelon
where
    I: IntoIterator<Item = Vec<Q>>,
{
    let block = cols.max(8);
    let mut current = Echelon { rows: Vec::new(), pivots: Vec::new(), cols };
    let mut pending: Vec<Vec<Q>> = Vec::new();
    let flush = |current: &mut Echelon, pending: &mut Vec<Vec<Q>>| {
        if pending.is_empty() {
            return;
        }
        let mut ints: Vec<Vec<BigInt>> = current.rows.iter().map(|r| integer_row(r)).collect();
        ints.extend(pending.drain(..).map(|r| integer_row(&r)));
        let (ech, piv) = bareiss_forward(ints, cols);
        let rows = reduce_back(ech, &piv, cols);
        *current = Echelon { rows, pivots: piv, cols };
    };
    for row in rows {
        assert_eq!(row.len(), cols, "row length mismatch");
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        pending.push(row);
        if pending.len() >= block {
            flush(&mut current, &mut pending);
        }
    }
    flush(&mut current, &mut pending);
    current
}

pub fn rref(m: &Matrix) -> Echelon {
    rref_rows(m.cols, m.to_rows())
}

pub fn rank(m: &Matrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let ints: Vec<Vec<BigInt>> = m.to_rows().iter().map(|r| integer_row(r)).collect();
    bareiss_forward(ints, m.cols).1.len()
}

pub fn rank_of_rows(cols: usize, rows: Vec<Vec<Q>>) -> usize {
    rref_rows(cols, rows).rank()
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Q>> {
    rref(m).kernel()
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &Matrix) -> Q {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Q::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in m.to_rows() {
        let l = lcm_denominators(&row);
        a.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
        scale *= l;
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let v = &a[c][c] * &a[i][j] - &a[i][c] * &a[c][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[c][c].clone();
    }
    Q::new(sign * &a[n - 1][n - 1], scale)
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    if n == 0 {
        return Some(Matrix::zeros(0, 0));
    }
    let aug: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let e = rref_rows(2 * n, aug);
    if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(Matrix::from_rows(e.rows.iter().map(|r| r[n..].to_vec()).collect()))
}

/// Solves `m x = b`, returning the rank of `m` and one particular solution.
pub fn solve(m: &Matrix, b: &[Q]) -> Result<(usize, Vec<Q>)> {
    assert_eq!(m.rows, b.len());
    let cols = m.cols;
    let aug: Vec<Vec<Q>> = (0..m.rows)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let e = rref_rows(cols + 1, aug);
    if e.pivots.last() == Some(&cols) {
        return Err(Error::Inconsistent);
    }
    let mut x = vec![Q::zero(); cols];
    for (r, &p) in e.pivots.iter().enumerate() {
        x[p] = e.rows[r][cols].clone();
    }
    Ok((e.rank(), x))
}

/// Expresses `target` in terms of the given spanning vectors, if possible.
pub fn express_in_span(span: &[Vec<Q>], target: &[Q]) -> Option<Vec<Q>> {
    if span.is_empty() {
        return target.iter().all(Zero::is_zero).then(Vec::new);
    }
    let len = target.len();
    let mut m = Matrix::zeros(len, span.len());
    for (j, v) in span.iter().enumerate() {
        for i in 0..len {
            m[(i, j)] = v[i].clone();
        }
    }
    solve(&m, target).ok().map(|(_, x)| x)
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    let mut acc = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Prints a rational as `p/q`, or `p` when integral.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Q::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn abs_q(x: &Q) -> Q {
    x.abs()
}

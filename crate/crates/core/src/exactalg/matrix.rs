use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntegerMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntegerMatrix { rows, cols, data })
    }

    /// Builds a matrix from its rows. `cols` is needed to type an empty
    /// row list.
    pub fn from_rows(cols: usize, rows: &[Vec<i64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend_from_slice(r);
        }
        Ok(IntegerMatrix { rows: rows.len(), cols, data })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Result<Self> {
        Ok(Self::from_rows(rows, columns)?.transpose())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntegerMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.cols {
            return Err(Error::RankMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Square-matrix power. Panics when the matrix is not square.
    pub fn pow(&self, k: u32) -> Self {
        assert_eq!(self.rows, self.cols, "pow needs a square matrix");
        let mut acc = Self::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a = self.to_big_rows();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(p, rank);
            for i in rank + 1..self.rows {
                if a[i][col].is_zero() {
                    continue;
                }
                // fraction-free: row_i <- piv*row_i - a_ic*row_p, then strip content
                let piv = a[rank][col].clone();
                let f = a[i][col].clone();
                let (head, tail) = a.split_at_mut(i);
                let prow = &head[rank];
                let row = &mut tail[0];
                for j in col..self.cols {
                    row[j] = &piv * &row[j] - &f * &prow[j];
                }
                strip_content(row);
            }
            rank += 1;
        }
        rank
    }

    fn to_big_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }
}

fn strip_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::from(1) {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = (0..self.rows).map(|i| self.row(i)).collect();
        write!(f, "IntegerMatrix{rows:?}")
    }
}

/// Basis of the integer kernel lattice `{v in Z^cols : m v = 0}`.
///
/// The basis generates the full (saturated) kernel lattice and is returned in
/// row Hermite normal form: leading entries positive, entries above each
/// leading entry reduced into `[0, lead)`. Each basis vector is primitive.
pub fn integer_kernel(m: &IntegerMatrix) -> Vec<Vec<i64>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.to_big_rows();
    let mut u: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| (0..cols).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();

    // Unimodular column reduction m * U = H with H in column echelon form.
    let mut pivot = 0;
    for r in 0..rows {
        if pivot == cols {
            break;
        }
        loop {
            let best = (pivot..cols)
                .filter(|&j| !a[r][j].is_zero())
                .min_by(|&x, &y| a[r][x].abs().cmp(&a[r][y].abs()));
            let Some(best) = best else { break };
            swap_cols(&mut a, best, pivot);
            swap_cols(&mut u, best, pivot);
            let mut done = true;
            for j in pivot + 1..cols {
                if a[r][j].is_zero() {
                    continue;
                }
                let q = a[r][j].div_floor(&a[r][pivot]);
                sub_col(&mut a, j, pivot, &q);
                sub_col(&mut u, j, pivot, &q);
                if !a[r][j].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }

    let basis: Vec<Vec<BigInt>> = (pivot..cols)
        .map(|j| u.iter().map(|row| row[j].clone()).collect())
        .collect();
    row_hermite_form(basis)
        .into_iter()
        .map(|v| {
            v.iter()
                .map(|x| x.to_i64().expect("kernel basis entry exceeds i64"))
                .collect()
        })
        .collect()
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// col_dst -= q * col_src
fn sub_col(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let t = q * &row[src];
        row[dst] -= t;
    }
}

/// Row Hermite normal form of a list of linearly independent integer rows.
fn row_hermite_form(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        if r == n {
            break;
        }
        loop {
            let best = (r..n)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&x, &y| rows[x][col].abs().cmp(&rows[y][col].abs()));
            let Some(best) = best else { break };
            rows.swap(best, r);
            let mut done = true;
            for i in r + 1..n {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                sub_row(&mut rows, i, r, &q);
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                if rows[r][col].is_negative() {
                    for x in rows[r].iter_mut() {
                        *x = -&*x;
                    }
                }
                for i in 0..r {
                    let q = rows[i][col].div_floor(&rows[r][col]);
                    sub_row(&mut rows, i, r, &q);
                }
                r += 1;
                break;
            }
        }
    }
    rows.truncate(r);
    rows
}

fn sub_row(m: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let s = m[src].clone();
    for (x, y) in m[dst].iter_mut().zip(&s) {
        *x -= q * y;
    }
}

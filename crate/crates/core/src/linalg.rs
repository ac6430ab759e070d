//! Dense rational matrices and the handful of exact elimination routines the
//! geometry code needs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{inner, primitive, Covector, DenseVector, Rational};

/// Row-major square or rectangular rational matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    /// `M v`.
    pub fn apply(&self, v: &DenseVector) -> DenseVector {
        assert_eq!(self.cols, v.dim());
        DenseVector((0..self.rows).map(|i| inner(self.row(i), v.entries())).collect())
    }

    /// Row vector times matrix, `f M`.
    pub fn apply_left(&self, f: &Covector) -> Covector {
        assert_eq!(self.rows, f.dim());
        Covector(
            (0..self.cols)
                .map(|j| (0..self.rows).map(|i| &f.0[i] * self.get(i, j)).sum())
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        *x == Rational::one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form of a list of row vectors. Returns the nonzero
/// rows and their pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows).1.len()
}

/// Canonical basis of the row span: the RREF rows, each scaled to a
/// primitive integer vector.
pub fn span_basis(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    rref(rows).0.iter().map(|r| primitive(r)).collect()
}

/// Basis of `{x : row · x = 0 for every row}` in dimension `dim`, primitive
/// integer vectors.
pub fn nullspace(rows: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = rows.iter().filter(|r| r.len() == dim).cloned().collect();
    let (red, pivots) = if rows.is_empty() { (vec![], vec![]) } else { rref(&rows) };
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); dim];
            x[f] = Rational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                x[p] = -&row[f];
            }
            primitive(&x)
        })
        .collect()
}

/// Solves `Σ_i c_i basis_i = target` exactly, if a solution exists.
pub fn solve_combination(basis: &[Vec<Rational>], target: &[Rational]) -> Option<Vec<Rational>> {
    let n = basis.len();
    let dim = target.len();
    // Augmented system: columns are basis vectors, last column the target.
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            let mut r: Vec<Rational> = basis.iter().map(|b| b[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&rows);
    if pivots.contains(&n) {
        return None;
    }
    let mut c = vec![Rational::zero(); n];
    for (row, &p) in red.iter().zip(&pivots) {
        c[p] = row[n].clone();
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::int(x)).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![ints(&[1, 2, 3]), ints(&[2, 4, 6]), ints(&[0, 1, 1])];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert!(inner(r, &ns[0]).is_zero());
        }
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn solve_combination_finds_coefficients() {
        let basis = vec![ints(&[1, 0, 1]), ints(&[0, 1, 1])];
        assert_eq!(solve_combination(&basis, &ints(&[2, 3, 5])), Some(ints(&[2, 3])));
        assert_eq!(solve_combination(&basis, &ints(&[1, 1, 0])), None);
    }

    #[test]
    fn matrix_products() {
        let a = Matrix::from_int_rows(&[&[-1, 2], &[0, 1]]);
        assert!(a.mul(&a).is_identity());
        let v = DenseVector::from_ints(&[1, 1]);
        assert_eq!(a.apply(&v), DenseVector::from_ints(&[1, 1]));
        let f = Covector::from_ints(&[1, 0]);
        assert_eq!(a.apply_left(&f), Covector::from_ints(&[-1, 2]));
    }
}

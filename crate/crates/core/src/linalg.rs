//! Exact dense linear algebra over a coefficient field.
//!
//! Gaussian elimination to reduced row-echelon form is the only primitive;
//! the echelon form is the canonical-form backbone of the whole crate
//! (equality of subspaces is representation equality).

use crate::ring::Field;

/// A dense matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Mat<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn zero_sized(rows: usize, cols: usize, zero: E) -> Self {
        Mat { rows, cols, data: vec![zero; rows * cols] }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut E {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Reduce `m` in place to reduced row-echelon form; returns the pivot
/// columns in increasing order.
pub fn rref<F: Field>(f: &F, m: &mut Mat<F::Elem>) -> Vec<usize> {
    let mut pivots = vec![];
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(m.at(r, col))) else {
            continue;
        };
        m.swap_rows(row, pr);
        let inv = f.inv(m.at(row, col));
        for c in col..m.cols {
            *m.at_mut(row, c) = f.mul(&inv, m.at(row, c));
        }
        for r in 0..m.rows {
            if r == row || f.is_zero(m.at(r, col)) {
                continue;
            }
            let factor = m.at(r, col).clone();
            for c in col..m.cols {
                let v = f.sub(m.at(r, c), &f.mul(&factor, m.at(row, c)));
                *m.at_mut(r, c) = v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Basis of the null space `{x : m x = 0}` (column-vector kernel), one
/// vector per free column, in increasing free-column order.
pub fn kernel<F: Field>(f: &F, m: &Mat<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut w = m.clone();
    let pivots = rref(f, &mut w);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = vec![];
    for free in 0..w.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); w.cols];
        v[free] = f.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(w.at(r, free));
        }
        basis.push(v);
    }
    basis
}

/// Solve `m x = b`; `None` when inconsistent.
pub fn solve<F: Field>(f: &F, m: &Mat<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Mat::zero_sized(m.rows, m.cols + 1, f.zero());
    for r in 0..m.rows {
        for c in 0..m.cols {
            *aug.at_mut(r, c) = m.at(r, c).clone();
        }
        *aug.at_mut(r, m.cols) = b[r].clone();
    }
    let pivots = rref(f, &mut aug);
    if pivots.contains(&m.cols) {
        return None;
    }
    let mut x = vec![f.zero(); m.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(r, m.cols).clone();
    }
    Some(x)
}

/// Inverse of a square matrix; `None` if singular.
pub fn invert<F: Field>(f: &F, m: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let mut aug = Mat::zero_sized(n, 2 * n, f.zero());
    for r in 0..n {
        for c in 0..n {
            *aug.at_mut(r, c) = m.at(r, c).clone();
        }
        *aug.at_mut(r, n + r) = f.one();
    }
    let pivots = rref(f, &mut aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    let mut out = Mat::zero_sized(n, n, f.zero());
    for r in 0..n {
        for c in 0..n {
            *out.at_mut(r, c) = aug.at(r, n + c).clone();
        }
    }
    Some(out)
}

pub fn mat_mul<F: Field>(f: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut out = Mat::zero_sized(a.rows, b.cols, f.zero());
    for i in 0..a.rows {
        for k in 0..a.cols {
            if f.is_zero(a.at(i, k)) {
                continue;
            }
            for j in 0..b.cols {
                let v = f.add(out.at(i, j), &f.mul(a.at(i, k), b.at(k, j)));
                *out.at_mut(i, j) = v;
            }
        }
    }
    out
}

/// `m v` for a column vector `v`.
pub fn mat_vec<F: Field>(f: &F, m: &Mat<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(m.cols, v.len());
    (0..m.rows)
        .map(|r| {
            let mut acc = f.zero();
            for c in 0..m.cols {
                acc = f.add(&acc, &f.mul(m.at(r, c), &v[c]));
            }
            acc
        })
        .collect()
}

pub fn trace<F: Field>(f: &F, m: &Mat<F::Elem>) -> F::Elem {
    assert_eq!(m.rows, m.cols);
    let mut acc = f.zero();
    for i in 0..m.rows {
        acc = f.add(&acc, m.at(i, i));
    }
    acc
}

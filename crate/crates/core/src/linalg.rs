//! Small dense matrices over a finite field, row-major `Vec<Vec<_>>`.

use crate::field::{Field, FieldElement};

pub type Matrix = Vec<Vec<FieldElement>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c];
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(pivot_row) {
                    *x = *x - k * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<FieldElement>]) -> usize {
    let mut m = m.to_vec();
    rref(&mut m).len()
}

/// A basis of {x : m x = 0}.
pub fn nullspace(field: &'static Field, m: &[Vec<FieldElement>], cols: usize) -> Matrix {
    let mut m = m.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[r][free];
        }
        basis.push(v);
    }
    basis
}

pub fn determinant(field: &'static Field, m: &[Vec<FieldElement>]) -> FieldElement {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = det * a[c][c];
        let inv = a[c][c].inverse().expect("pivot is nonzero");
        for i in c + 1..n {
            let k = a[i][c] * inv;
            let pivot_row = a[c].clone();
            for (x, y) in a[i][c..].iter_mut().zip(&pivot_row[c..]) {
                *x = *x - k * *y;
            }
        }
    }
    det
}

pub fn inverse(field: &'static Field, m: &[Vec<FieldElement>]) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &[Vec<FieldElement>], b: &[Vec<FieldElement>]) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (1..inner).fold(row[0] * b[0][j], |acc, k| acc + row[k] * b[k][j])).collect())
        .collect()
}

pub fn mat_vec(a: &[Vec<FieldElement>], x: &[FieldElement]) -> Vec<FieldElement> {
    a.iter().map(|row| (1..x.len()).fold(row[0] * x[0], |acc, k| acc + row[k] * x[k])).collect()
}

pub fn transpose(a: &[Vec<FieldElement>]) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn from_ints(field: &'static Field, rows: &[&[i64]]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect()
}

//! Dense exact linear algebra over any [`Field`].

use crate::error::Result;
use crate::scalars::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Matrix<E>]) -> Option<Self> {
        let cols = blocks.first()?.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Some(Self { rows, cols, data })
    }
}

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Matrix<F::Elem> {
    Matrix::filled(rows, cols, f.zero())
}

pub fn identity<F: Field>(f: &F, n: usize) -> Matrix<F::Elem> {
    Matrix::from_fn(n, n, |r, c| if r == c { f.one() } else { f.zero() })
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    let mut out = zeros(f, a.rows, b.cols);
    for r in 0..a.rows {
        for k in 0..a.cols {
            let x = a.get(r, k);
            if f.is_zero(x) {
                continue;
            }
            for c in 0..b.cols {
                let y = b.get(k, c);
                if f.is_zero(y) {
                    continue;
                }
                let v = f.add(out.get(r, c), &f.mul(x, y));
                out.set(r, c, v);
            }
        }
    }
    out
}

pub fn mat_add<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    assert_eq!((a.rows, a.cols), (b.rows, b.cols));
    Matrix::from_fn(a.rows, a.cols, |r, c| f.add(a.get(r, c), b.get(r, c)))
}

pub fn mat_scale<F: Field>(f: &F, s: &F::Elem, a: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    Matrix::from_fn(a.rows, a.cols, |r, c| f.mul(s, a.get(r, c)))
}

pub fn mat_vec<F: Field>(f: &F, a: &Matrix<F::Elem>, v: &[F::Elem]) -> Vec<F::Elem> {
    assert_eq!(a.cols, v.len());
    (0..a.rows)
        .map(|r| {
            let mut acc = f.zero();
            for (c, x) in v.iter().enumerate() {
                if !f.is_zero(x) {
                    let y = a.get(r, c);
                    if !f.is_zero(y) {
                        acc = f.add(&acc, &f.mul(y, x));
                    }
                }
            }
            acc
        })
        .collect()
}

pub fn is_zero_matrix<F: Field>(f: &F, a: &Matrix<F::Elem>) -> bool {
    a.data.iter().all(|x| f.is_zero(x))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(f: &F, a: &mut Matrix<F::Elem>) -> Result<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !f.is_zero(a.get(r, col))) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = f.inv(a.get(row, col))?;
        for c in col..a.cols {
            let v = f.mul(a.get(row, c), &inv);
            a.set(row, c, v);
        }
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if f.is_zero(&factor) {
                continue;
            }
            for c in col..a.cols {
                let y = a.get(row, c);
                if f.is_zero(y) {
                    continue;
                }
                let v = f.sub(a.get(r, c), &f.mul(&factor, y));
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        row += 1;
    }
    Ok(pivots)
}

pub fn rank<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Result<usize> {
    let mut m = a.clone();
    Ok(rref(f, &mut m)?.len())
}

/// Basis of the right null space `{x : a x = 0}`.
pub fn kernel<F: Field>(f: &F, a: &Matrix<F::Elem>) -> Result<Vec<Vec<F::Elem>>> {
    let mut m = a.clone();
    let pivots = rref(f, &mut m)?;
    let free: Vec<usize> = (0..a.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![f.zero(); a.cols];
        v[fc] = f.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(m.get(r, fc));
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Solves `a x = b` for one solution, if any.
pub fn solve<F: Field>(f: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Result<Option<Vec<F::Elem>>> {
    assert_eq!(a.rows, b.len());
    let aug = Matrix::from_fn(a.rows, a.cols + 1, |r, c| if c < a.cols { a.get(r, c).clone() } else { b[r].clone() });
    let mut m = aug;
    let pivots = rref(f, &mut m)?;
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![f.zero(); a.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m.get(r, a.cols).clone();
    }
    Ok(Some(x))
}

/// Matrix whose columns are the given vectors.
pub fn from_columns<F: Field>(f: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Matrix<F::Elem> {
    if cols.is_empty() {
        return zeros(f, rows, 0);
    }
    Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{RationalFunctions, Scalar};

    #[test]
    fn kernel_of_rank_one() {
        let f = RationalFunctions;
        let q = Scalar::q_pow(1);
        let a = Matrix::from_fn(2, 3, |r, c| {
            let base = [Scalar::one(), q.clone(), Scalar::qint(2)][c].clone();
            if r == 0 {
                base
            } else {
                &base * &q
            }
        });
        let k = kernel(&f, &a).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(mat_vec(&f, &a, v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(rank(&f, &a).unwrap(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = RationalFunctions;
        let a = Matrix::from_fn(2, 2, |r, c| Scalar::from_int((r * 2 + c + 1) as i64));
        let x = solve(&f, &a, &[Scalar::from_int(5), Scalar::from_int(11)]).unwrap().unwrap();
        assert_eq!(x, vec![Scalar::from_int(1), Scalar::from_int(2)]);
        let s = Matrix::from_fn(2, 1, |_, _| Scalar::one());
        assert!(solve(&f, &s, &[Scalar::one(), Scalar::zero()]).unwrap().is_none());
    }
}

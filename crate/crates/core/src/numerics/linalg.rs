use std::fmt;

use num_traits::{One, Zero};

use super::{QuadExt, Rational};
use crate::error::{Error, Result};

/// Unique solution of `A x = b` for an `m × n` system, or `None` when the
/// system is inconsistent or underdetermined.
pub fn solve_exact(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| r.iter().cloned().chain([v.clone()]).collect())
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let p = (pivot_row..m).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, p);
        let inv = Rational::one() / &rows[pivot_row][col];
        for v in rows[pivot_row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=n {
                    let delta = &f * &rows[pivot_row][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| rows[r][n].clone()).collect())
}

/// Determinant of a square rational matrix.
pub fn det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let mut d = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        d *= &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[col][col];
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    d
}

/// 2×2 matrix over a single quadratic field, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    pub m: [[QuadExt; 2]; 2],
}

impl Mat2 {
    pub fn new(a: QuadExt, b: QuadExt, c: QuadExt, d: QuadExt) -> Self {
        Mat2 {
            m: [[a, b], [c, d]],
        }
    }

    pub fn from_rationals(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(
            QuadExt::from_int(a),
            QuadExt::from_int(b),
            QuadExt::from_int(c),
            QuadExt::from_int(d),
        )
    }

    /// Matrix with the given columns.
    pub fn from_columns(c0: (QuadExt, QuadExt), c1: (QuadExt, QuadExt)) -> Self {
        Self::new(c0.0, c1.0, c0.1, c1.1)
    }

    pub fn identity() -> Self {
        Self::from_ints(1, 0, 0, 1)
    }

    pub fn column(&self, j: usize) -> (QuadExt, QuadExt) {
        (self.m[0][j].clone(), self.m[1][j].clone())
    }

    pub fn det(&self) -> Result<QuadExt> {
        self.m[0][0]
            .try_mul(&self.m[1][1])?
            .try_sub(&self.m[0][1].try_mul(&self.m[1][0])?)
    }

    pub fn trace(&self) -> Result<QuadExt> {
        self.m[0][0].try_add(&self.m[1][1])
    }

    pub fn mul(&self, o: &Mat2) -> Result<Mat2> {
        let e = |i: usize, j: usize| -> Result<QuadExt> {
            self.m[i][0]
                .try_mul(&o.m[0][j])?
                .try_add(&self.m[i][1].try_mul(&o.m[1][j])?)
        };
        Ok(Mat2::new(e(0, 0)?, e(0, 1)?, e(1, 0)?, e(1, 1)?))
    }

    pub fn apply(&self, v: &(QuadExt, QuadExt)) -> Result<(QuadExt, QuadExt)> {
        let x = self.m[0][0]
            .try_mul(&v.0)?
            .try_add(&self.m[0][1].try_mul(&v.1)?)?;
        let y = self.m[1][0]
            .try_mul(&v.0)?
            .try_add(&self.m[1][1].try_mul(&v.1)?)?;
        Ok((x, y))
    }

    pub fn apply_ints(&self, a: i64, b: i64) -> Result<(QuadExt, QuadExt)> {
        self.apply(&(QuadExt::from_int(a), QuadExt::from_int(b)))
    }

    pub fn inv(&self) -> Result<Mat2> {
        let d = self.det()?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let di = d.recip()?;
        Ok(Mat2::new(
            self.m[1][1].try_mul(&di)?,
            (-&self.m[0][1]).try_mul(&di)?,
            (-&self.m[1][0]).try_mul(&di)?,
            self.m[0][0].try_mul(&di)?,
        ))
    }

    pub fn neg(&self) -> Mat2 {
        Mat2::new(
            -&self.m[0][0],
            -&self.m[0][1],
            -&self.m[1][0],
            -&self.m[1][1],
        )
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(
            self.m[0][0].clone(),
            self.m[1][0].clone(),
            self.m[0][1].clone(),
            self.m[1][1].clone(),
        )
    }

    pub fn pow(&self, e: u32) -> Result<Mat2> {
        let mut acc = Mat2::identity();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({}, {}), ({}, {}))",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rat};

    #[test]
    fn solves_overdetermined_consistent_system() {
        let a = vec![
            vec![int(1), int(1)],
            vec![int(1), int(-1)],
            vec![int(2), int(0)],
        ];
        let b = vec![int(3), int(1), int(4)];
        assert_eq!(solve_exact(&a, &b), Some(vec![int(2), int(1)]));
        let bad = vec![int(3), int(1), int(5)];
        assert_eq!(solve_exact(&a, &bad), None);
    }

    #[test]
    fn determinant() {
        let a = vec![vec![int(2), int(3)], vec![int(1), rat(1, 2)]];
        assert_eq!(det(&a), int(-2));
    }

    #[test]
    fn mat2_inverse() {
        let m = Mat2::from_ints(0, -1, 1, 1);
        let i = m.inv().unwrap();
        assert_eq!(i, Mat2::from_ints(1, 1, -1, 0));
        assert_eq!(m.pow(6).unwrap(), Mat2::identity());
    }
}

//! Exact dense linear algebra: determinants, rank and linear solves.
//!
//! Over the rationals rows are first scaled to integers and eliminated with
//! Bareiss's fraction-free scheme; over finite fields plain Gaussian
//! elimination is exact already.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, Scalar};

type Matrix = Vec<Vec<Scalar>>;

fn integer_rows(m: &[Vec<Scalar>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let mut l = BigInt::one();
            for c in row {
                l = l.lcm(c.as_rational().unwrap().denom());
            }
            scale *= &l;
            row.iter()
                .map(|c| {
                    let q = c.as_rational().unwrap();
                    q.numer() * (&l / q.denom())
                })
                .collect()
        })
        .collect();
    (rows, scale)
}

/// Bareiss elimination in place; returns the determinant.
fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant of a square matrix.
pub fn det(m: &[Vec<Scalar>], field: &Field) -> Scalar {
    let n = m.len();
    if n == 0 {
        return field.one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    if field.is_rational() {
        let (rows, scale) = integer_rows(m);
        let d = bareiss_det(rows);
        return Scalar::Rational(BigRational::new(d, scale));
    }
    let mut a: Matrix = m.to_vec();
    let mut acc = field.one();
    for k in 0..n {
        let piv = match (k..n).find(|&r| !a[r][k].is_zero()) {
            Some(r) => r,
            None => return field.zero(),
        };
        if piv != k {
            a.swap(k, piv);
            acc = -&acc;
        }
        acc = &acc * &a[k][k];
        let inv = a[k][k].inv().unwrap();
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] * &inv;
            for j in k..n {
                let v = &a[i][j] - &(&f * &a[k][j]);
                a[i][j] = v;
            }
        }
    }
    acc
}

/// Row echelon form by Gaussian elimination; returns the pivot columns.
fn echelon(a: &mut Matrix) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let piv = match (r..rows).find(|&i| !a[i][c].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(r, piv);
        let inv = a[r][c].inv().unwrap();
        for j in c..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in c..cols {
                let v = &a[i][j] - &(&f * &a[r][j]);
                a[i][j] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    let mut a = m.to_vec();
    echelon(&mut a).len()
}

/// Solve `A X = B` for square nonsingular `A`; `None` when `A` is singular.
pub fn solve(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Option<Matrix> {
    let n = a.len();
    let k = b.first().map_or(0, |r| r.len());
    let mut aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb.iter()).cloned().collect())
        .collect();
    let pivots = echelon(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..n + k].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(f: &Field, rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect()
    }

    #[test]
    fn det_small() {
        let q = Field::rationals();
        assert_eq!(det(&mat(&q, &[&[2, 1], &[1, 3]]), &q), q.from_i64(5));
        assert_eq!(det(&mat(&q, &[&[0, 1], &[1, 0]]), &q), q.from_i64(-1));
        let m = mat(&q, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(det(&m, &q), q.from_i64(-3));
        let half = q.parse("1/2").unwrap();
        let r = vec![vec![half.clone(), q.one()], vec![q.one(), half]];
        assert_eq!(det(&r, &q), q.parse("-3/4").unwrap());
        let f7 = Field::prime(7).unwrap();
        assert_eq!(det(&mat(&f7, &[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]), &f7), f7.from_i64(-3));
    }

    #[test]
    fn solve_and_rank() {
        let q = Field::rationals();
        let a = mat(&q, &[&[2, 1], &[1, 3]]);
        let b = mat(&q, &[&[3], &[5]]);
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[0][0], q.parse("4/5").unwrap());
        assert_eq!(x[1][0], q.parse("7/5").unwrap());
        assert!(solve(&mat(&q, &[&[1, 2], &[2, 4]]), &b).is_none());
        assert_eq!(rank(&mat(&q, &[&[1, 2], &[2, 4], &[0, 1]])), 2);
    }
}

//! Construction of resultant matrices from a coherent mixed subdivision.
//!
//! Rows are the lattice points of `δ + Q`, `Q = Σ Conv(E_i)`. Each shifted
//! point lies in a unique cell `F_1 + ... + F_{n+1}` of the subdivision induced
//! by a lifting; the cell is found by an exact linear program on the lifted
//! Minkowski sum. A row whose cell has a vertex summand `F_i = {a}` holds the
//! coefficients of `x^{p-a} f_i`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{matrix, Field, Scalar};
use crate::error::{Error, Result};
use crate::geometry::lattice::dot;
use crate::geometry::{convex_hull, lp, minkowski_sum, Point, SupportTuple};
use crate::system::CoeffAssignment;

/// Random part of each lifting value.
const LIFT_RANGE: i64 = 1 << 12;
/// Ratio between consecutive lifting scales.
const SCALE_STEP: u32 = 24;
/// Denominator exponent of the shift δ.
const SHIFT_BITS: u32 = 20;

/// A square resultant matrix with a symbolic entry map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantMatrix {
    pub(crate) ebar: SupportTuple,
    pub(crate) seed: u64,
    pub(crate) rows: Vec<Point>,
    /// `(i, index of a in E_i)` per row.
    pub(crate) content: Vec<(usize, usize)>,
    /// Whether the row's cell is mixed (one vertex summand, all others edges).
    pub(crate) mixed: Vec<bool>,
    /// Per row: `(column, i, index of b in E_i)`.
    pub(crate) entries: Vec<Vec<(usize, usize, usize)>>,
}

impl ResultantMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn supports(&self) -> &SupportTuple {
        &self.ebar
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn row_points(&self) -> &[Point] {
        &self.rows
    }

    pub fn row_content(&self) -> &[(usize, usize)] {
        &self.content
    }

    pub fn entry_map(&self) -> &[Vec<(usize, usize, usize)>] {
        &self.entries
    }

    /// Rows (and columns) of the extraneous minor `M'`: rows in non-mixed cells.
    pub fn extraneous_rows(&self) -> Vec<usize> {
        (0..self.size()).filter(|&r| !self.mixed[r]).collect()
    }

    /// Number of rows carrying coefficients of `f_i`.
    pub fn rows_for(&self, i: usize) -> usize {
        self.content.iter().filter(|c| c.0 == i).count()
    }

    /// Dense specialization at the given coefficients.
    pub fn specialize(&self, c: &CoeffAssignment, field: &Field) -> Vec<Vec<Scalar>> {
        let s = self.size();
        let mut m = vec![vec![field.zero(); s]; s];
        for (r, row) in self.entries.iter().enumerate() {
            for &(col, i, b) in row {
                m[r][col] = c.get(i, b).clone();
            }
        }
        m
    }

    /// Principal submatrix on the given indices.
    pub(crate) fn principal(m: &[Vec<Scalar>], idx: &[usize]) -> Vec<Vec<Scalar>> {
        idx.iter().map(|&r| idx.iter().map(|&c| m[r][c].clone()).collect()).collect()
    }

    /// `(det M, det M')` at the given coefficients.
    pub fn dets(&self, c: &CoeffAssignment, field: &Field) -> (Scalar, Scalar) {
        let m = self.specialize(c, field);
        let minor = Self::principal(&m, &self.extraneous_rows());
        (matrix::det(&m, field), matrix::det(&minor, field))
    }
}

/// Lifting values `ω_i(a)` for the given seed: a random part scaled by a
/// factor that grows with `i`, so `f_1` gets the finest lifting and
/// `f_{n+1}` the coarsest. Also returns the shift `δ`.
pub(crate) fn lifting(ebar: &SupportTuple, seed: u64) -> (Vec<Vec<BigInt>>, Vec<BigRational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lifts = ebar
        .supports()
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let scale = BigInt::one() << (SCALE_STEP * i as u32);
            (0..s.len()).map(|_| &scale * BigInt::from(rng.gen_range(0..LIFT_RANGE))).collect()
        })
        .collect();
    let den = BigInt::one() << SHIFT_BITS;
    let delta = (0..ebar.dim())
        .map(|_| {
            let num: i64 = rng.gen_range(1..1 << (SHIFT_BITS - 4));
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            BigRational::new(BigInt::from(sign * num), den.clone())
        })
        .collect();
    (lifts, delta)
}

/// Build the matrix for `Ē = (E_1, ..., E_n, E_{n+1})`.
pub fn build_matrix(ebar: &SupportTuple, seed: u64) -> Result<ResultantMatrix> {
    let n = ebar.dim();
    if ebar.len() != n + 1 {
        return Err(Error::ArityError { expected: n + 1, got: ebar.len(), dim: n });
    }
    if ebar.supp().len() != n + 1 {
        return Err(Error::BadSupport("empty support in resultant matrix".into()));
    }
    let (lifts, delta) = lifting(ebar, seed);

    let mut q = convex_hull(ebar.get(0));
    for s in &ebar.supports()[1..] {
        q = minkowski_sum(&q, &convex_hull(s));
    }
    if q.affine_dim() < n {
        return Err(Error::BadSupport("Minkowski sum is not full-dimensional".into()));
    }
    let rows = shifted_lattice_points(&q, &delta);
    let index: HashMap<&Point, usize> = rows.iter().enumerate().map(|(i, p)| (p, i)).collect();

    // LP data: columns are (i, a) pairs
    let cols: Vec<(usize, usize)> = ebar
        .supports()
        .iter()
        .enumerate()
        .flat_map(|(i, s)| (0..s.len()).map(move |a| (i, a)))
        .collect();
    let r = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut a_mat: Vec<Vec<BigRational>> = Vec::with_capacity(2 * n + 1);
    for coord in 0..n {
        a_mat.push(cols.iter().map(|&(i, a)| r(ebar.get(i).points()[a][coord])).collect());
    }
    for grp in 0..=n {
        a_mat.push(cols.iter().map(|&(i, _)| r((i == grp) as i64)).collect());
    }
    let cost: Vec<BigRational> = cols
        .iter()
        .map(|&(i, a)| BigRational::from_integer(lifts[i][a].clone()))
        .collect();

    let mut content = Vec::with_capacity(rows.len());
    let mut mixed = Vec::with_capacity(rows.len());
    for p in &rows {
        let mut b: Vec<BigRational> = p.iter().zip(&delta).map(|(&x, d)| r(x) - d).collect();
        b.extend((0..=n).map(|_| BigRational::one()));
        let sol = lp::minimize(&a_mat, &b, &cost).ok_or(Error::LiftingDegenerate)?;
        if !sol.unique || !sol.nondegenerate {
            return Err(Error::LiftingDegenerate);
        }
        let mut cell: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        for (k, &(i, a)) in cols.iter().enumerate() {
            if !sol.x[k].is_zero() {
                cell[i].push(a);
            }
        }
        let vertices: Vec<usize> = (0..=n).filter(|&i| cell[i].len() == 1).collect();
        let is_mixed = vertices.len() == 1 && cell.iter().all(|f| f.len() <= 2);
        // f_{n+1} is chosen only when no other summand is a vertex
        // the vertex summand with the finest lifting; f_{n+1} only when it
        // is the sole vertex, which makes every f_{n+1} row mixed
        let i = *vertices.first().ok_or(Error::LiftingDegenerate)?;
        content.push((i, cell[i][0]));
        mixed.push(is_mixed);
    }

    let mut entries = Vec::with_capacity(rows.len());
    for (p, &(i, a)) in rows.iter().zip(&content) {
        let pa = &ebar.get(i).points()[a];
        let mut row = Vec::with_capacity(ebar.get(i).len());
        for (bi, bp) in ebar.get(i).points().iter().enumerate() {
            let target: Point = p.iter().zip(pa).zip(bp).map(|((x, y), z)| x - y + z).collect();
            let col = *index.get(&target).ok_or(Error::LiftingDegenerate)?;
            row.push((col, i, bi));
        }
        entries.push(row);
    }
    Ok(ResultantMatrix { ebar: ebar.clone(), seed, rows, content, mixed, entries })
}

/// Lattice points `p` with `p - δ` in `q` (δ generic, so no boundary cases).
fn shifted_lattice_points(q: &crate::geometry::Polytope, delta: &[BigRational]) -> Vec<Point> {
    let n = q.dim();
    let lo: Vec<i64> = (0..n).map(|j| q.vertices().iter().map(|v| v[j]).min().unwrap() - 1).collect();
    let hi: Vec<i64> = (0..n).map(|j| q.vertices().iter().map(|v| v[j]).max().unwrap() + 1).collect();
    // facet test: w.p - offset > w.δ
    let thresholds: Vec<BigRational> = q
        .facets()
        .iter()
        .map(|f| {
            f.normal
                .iter()
                .zip(delta)
                .map(|(&w, d)| d * BigRational::from_integer(BigInt::from(w)))
                .sum()
        })
        .collect();
    let mut out = Vec::new();
    let mut p = lo.clone();
    loop {
        let inside = q.facets().iter().zip(&thresholds).all(|(f, t)| {
            BigRational::from_integer(BigInt::from(dot(&f.normal, &p) - f.offset)) > *t
        });
        if inside {
            out.push(p.clone());
        }
        let mut j = 0;
        loop {
            if j == n {
                return out;
            }
            p[j] += 1;
            if p[j] > hi[j] {
                p[j] = lo[j];
                j += 1;
            } else {
                break;
            }
        }
    }
}

/// Build with the first seed (starting at `seed`) whose lifting is generic.
pub fn build_matrix_retrying(ebar: &SupportTuple, seed: u64, attempts: u64) -> Result<ResultantMatrix> {
    let mut last = Error::LiftingDegenerate;
    for s in seed..seed + attempts {
        match build_matrix(ebar, s) {
            Ok(m) => return Ok(m),
            Err(Error::LiftingDegenerate) => last = Error::LiftingDegenerate,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Support;

    fn assign(f: &Field, m: &ResultantMatrix, vals: Vec<Vec<i64>>) -> CoeffAssignment {
        let coeffs = vals.into_iter().map(|r| r.into_iter().map(|v| f.from_i64(v)).collect()).collect();
        CoeffAssignment::new(m.supports(), coeffs).unwrap()
    }

    #[test]
    fn univariate_linear_is_sylvester() {
        let seg = Support::new(1, vec![vec![0], vec![1]]).unwrap();
        let ebar = SupportTuple::new(1, vec![seg.clone(), seg]).unwrap();
        let m = build_matrix(&ebar, 0).unwrap();
        assert_eq!(m.size(), 2);
        let q = Field::rationals();
        let c = assign(&q, &m, vec![vec![1, -2], vec![2, -4]]);
        assert!(m.dets(&c, &q).0.is_zero());
        let c = assign(&q, &m, vec![vec![3, 5], vec![7, 11]]);
        let d = m.dets(&c, &q).0;
        assert!(d == q.from_i64(3 * 11 - 5 * 7) || d == q.from_i64(5 * 7 - 3 * 11));
    }

    #[test]
    fn three_lines() {
        let d = Support::simplex(2, 1);
        let ebar = SupportTuple::new(2, vec![d.clone(), d.clone(), d]).unwrap();
        let m = build_matrix_retrying(&ebar, 0, 8).unwrap();
        let q = Field::rationals();
        // points sorted: (0,0), (0,1), (1,0)
        let vals = vec![vec![1, 2, 3], vec![4, 5, 7], vec![2, 9, 1]];
        let c = assign(&q, &m, vals.clone());
        let (dm, dmp) = m.dets(&c, &q);
        let direct = matrix::det(
            &vals.iter().map(|r| r.iter().map(|&v| q.from_i64(v)).collect()).collect::<Vec<_>>(),
            &q,
        );
        let ratio = dm.div(&dmp);
        assert!(ratio == direct || ratio == -&direct);
    }
}

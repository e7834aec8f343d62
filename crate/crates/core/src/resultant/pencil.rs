//! Fast repeated evaluation of `det M` along the coefficients of `f_{n+1}`.
//!
//! With the `f_{n+1}` rows last, `det M = det M11 * det(Σ_a u_a N_a)` where
//! `N_a = M22^(a) - M21^(a) M11^{-1} M12`. Once the `N_a` are known every
//! evaluation is a determinant of size `#u-rows`.

use super::matrix::ResultantMatrix;
use crate::arith::{matrix, Field, Scalar};
use crate::system::CoeffAssignment;

#[derive(Debug, Clone)]
enum Kind {
    Schur { det11: Scalar, blocks: Vec<Vec<Vec<Scalar>>> },
    /// `M11` is singular: evaluate the full determinant each time.
    Full { base: Vec<Vec<Scalar>>, u_rows: Vec<usize> },
}

/// `u ↦ det M(u)` for fixed coefficients of `f_1, ..., f_n`.
#[derive(Debug, Clone)]
pub struct Pencil {
    field: Field,
    kind: Kind,
    /// `det M'`, independent of `u`.
    extraneous: Scalar,
    entries: Vec<Vec<(usize, usize, usize)>>,
    n: usize,
}

impl Pencil {
    /// `coeffs` must cover `f_1..f_n`; any row for `f_{n+1}` is ignored.
    pub fn new(m: &ResultantMatrix, coeffs: &[Vec<Scalar>], field: &Field) -> Pencil {
        let n = m.supports().dim();
        let a_len = m.supports().get(n).len();
        let mut full: Vec<Vec<Scalar>> = coeffs[..n].to_vec();
        full.push(vec![field.zero(); a_len]);
        let c = CoeffAssignment { coeffs: full };
        let base = m.specialize(&c, field);
        let extraneous = matrix::det(&ResultantMatrix::principal(&base, &m.extraneous_rows()), field);
        let u_rows: Vec<usize> = (0..m.size()).filter(|&r| m.content[r].0 == n).collect();
        let others: Vec<usize> = (0..m.size()).filter(|&r| m.content[r].0 != n).collect();
        let m11 = ResultantMatrix::principal(&base, &others);
        let det11 = matrix::det(&m11, field);
        let kind = if det11.is_zero() {
            Kind::Full { base, u_rows }
        } else {
            let m12: Vec<Vec<Scalar>> =
                others.iter().map(|&r| u_rows.iter().map(|&c| base[r][c].clone()).collect()).collect();
            let x = matrix::solve(&m11, &m12).expect("nonsingular block");
            let pos_other: std::collections::HashMap<usize, usize> =
                others.iter().enumerate().map(|(k, &c)| (c, k)).collect();
            let pos_u: std::collections::HashMap<usize, usize> =
                u_rows.iter().enumerate().map(|(k, &c)| (c, k)).collect();
            let k = u_rows.len();
            let mut blocks = vec![vec![vec![field.zero(); k]; k]; a_len];
            for (ri, &r) in u_rows.iter().enumerate() {
                for &(col, _, b) in &m.entries[r] {
                    if let Some(&cj) = pos_u.get(&col) {
                        blocks[b][ri][cj] = &blocks[b][ri][cj] + &field.one();
                    }
                    if let Some(&ck) = pos_other.get(&col) {
                        for cj in 0..k {
                            blocks[b][ri][cj] = &blocks[b][ri][cj] - &x[ck][cj];
                        }
                    }
                }
            }
            Kind::Schur { det11, blocks }
        };
        Pencil { field: field.clone(), kind, extraneous, entries: m.entries.clone(), n }
    }

    /// Whether evaluations use the small Schur-complement determinant.
    pub fn is_fast(&self) -> bool {
        matches!(self.kind, Kind::Schur { .. })
    }

    /// `det M'` at these coefficients.
    pub fn extraneous(&self) -> &Scalar {
        &self.extraneous
    }

    /// `det M` with `f_{n+1} = Σ u_a x^a`.
    pub fn det(&self, u: &[Scalar]) -> Scalar {
        match &self.kind {
            Kind::Schur { det11, blocks } => {
                if blocks.first().is_none_or(|b| b.is_empty()) {
                    return det11.clone();
                }
                let k = blocks[0].len();
                let mut s = vec![vec![self.field.zero(); k]; k];
                for (ua, blk) in u.iter().zip(blocks) {
                    if ua.is_zero() {
                        continue;
                    }
                    for i in 0..k {
                        for j in 0..k {
                            if !blk[i][j].is_zero() {
                                s[i][j] = &s[i][j] + &(ua * &blk[i][j]);
                            }
                        }
                    }
                }
                det11 * &matrix::det(&s, &self.field)
            }
            Kind::Full { base, u_rows } => {
                let mut m = base.clone();
                for &r in u_rows {
                    for &(col, i, b) in &self.entries[r] {
                        debug_assert_eq!(i, self.n);
                        m[r][col] = u[b].clone();
                    }
                }
                matrix::det(&m, &self.field)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Support, SupportTuple};
    use crate::resultant::build_matrix_retrying;

    #[test]
    fn pencil_matches_full_determinant() {
        let q = Field::rationals();
        let e1 = Support::simplex(2, 2);
        let e2 = Support::new(2, vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 2]]).unwrap();
        let a = Support::simplex(2, 1);
        let ebar = SupportTuple::new(2, vec![e1, e2, a]).unwrap();
        let m = build_matrix_retrying(&ebar, 0, 8).unwrap();
        let coeffs: Vec<Vec<Scalar>> = (0..2)
            .map(|i| (0..ebar.get(i).len()).map(|k| q.from_i64((3 * k + 2 * i + 1) as i64 % 7 - 3)).collect())
            .collect();
        let p = Pencil::new(&m, &coeffs, &q);
        for t in 0..3 {
            let u: Vec<Scalar> = (0..3).map(|k| q.from_i64(t * 5 + k * k - 2)).collect();
            let mut all = coeffs.clone();
            all.push(u.clone());
            let c = CoeffAssignment::new(&ebar, all).unwrap();
            assert_eq!(p.det(&u), m.dets(&c, &q).0);
        }
    }
}

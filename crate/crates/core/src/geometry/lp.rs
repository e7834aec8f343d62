//! A small exact simplex solver (two-phase, Bland's rule) over the rationals.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An optimal vertex of `min c.x  s.t.  A x = b, x >= 0`.
#[derive(Debug, Clone)]
pub struct LpSolution {
    pub x: Vec<BigRational>,
    pub objective: BigRational,
    /// Every nonbasic column has strictly positive reduced cost.
    pub unique: bool,
    /// Every basic variable is strictly positive.
    pub nondegenerate: bool,
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &BigRational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        self.basis[r] = c;
    }

    fn reduced_costs(&self, cost: &[BigRational]) -> Vec<BigRational> {
        (0..self.ncols)
            .map(|j| {
                let mut r = cost[j].clone();
                for (i, &bi) in self.basis.iter().enumerate() {
                    if !cost[bi].is_zero() && !self.rows[i][j].is_zero() {
                        r -= &cost[bi] * &self.rows[i][j];
                    }
                }
                r
            })
            .collect()
    }

    /// Runs to optimality; returns false when unbounded.
    fn optimize(&mut self, cost: &[BigRational], allowed: &[bool]) -> bool {
        loop {
            let rc = self.reduced_costs(cost);
            let Some(enter) = (0..self.ncols).find(|&j| allowed[j] && rc[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(BigRational, usize, usize)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if a.is_positive() {
                    let ratio = self.rhs(i) / a;
                    let better = match &best {
                        None => true,
                        Some((r, _, b)) => ratio < *r || (ratio == *r && self.basis[i] < *b),
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            match best {
                None => return false,
                Some((_, r, _)) => self.pivot(r, enter),
            }
        }
    }
}

/// Minimize `c.x` subject to `A x = b`, `x >= 0`. Returns `None` when the
/// problem is infeasible or unbounded.
pub fn minimize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> Option<LpSolution> {
    let m = a.len();
    let n = c.len();
    let ncols = n + m;
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let neg = b[i].is_negative();
        let mut row: Vec<BigRational> = a[i].iter().map(|v| if neg { -v } else { v.clone() }).collect();
        for k in 0..m {
            row.push(if k == i { BigRational::one() } else { BigRational::zero() });
        }
        row.push(if neg { -&b[i] } else { b[i].clone() });
        rows.push(row);
    }
    let mut t = Tableau { rows, basis: (n..n + m).collect(), ncols };
    let phase1: Vec<BigRational> = (0..ncols)
        .map(|j| if j >= n { BigRational::one() } else { BigRational::zero() })
        .collect();
    let all = vec![true; ncols];
    t.optimize(&phase1, &all);
    let infeas: BigRational = (0..m).filter(|&i| t.basis[i] >= n).map(|i| t.rhs(i).clone()).sum();
    if infeas.is_positive() {
        return None;
    }
    // drive remaining artificials out of the basis, dropping redundant rows
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let mut cost: Vec<BigRational> = c.to_vec();
    cost.extend((0..m).map(|_| BigRational::zero()));
    let allowed: Vec<bool> = (0..ncols).map(|j| j < n).collect();
    if !t.optimize(&cost, &allowed) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &bi) in t.basis.iter().enumerate() {
        x[bi] = t.rhs(i).clone();
    }
    let rc = t.reduced_costs(&cost);
    let unique = (0..n).all(|j| t.basis.contains(&j) || rc[j].is_positive());
    let nondegenerate = t.basis.iter().enumerate().all(|(i, _)| t.rhs(i).is_positive());
    let objective = x.iter().zip(c).map(|(xi, ci)| xi * ci).sum();
    Some(LpSolution { x, objective, unique, nondegenerate })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn small_program() {
        // min x + 2y  s.t. x + y = 3, x - y + s = 1
        let a = vec![vec![r(1), r(1), r(0)], vec![r(1), r(-1), r(1)]];
        let sol = minimize(&a, &[r(3), r(1)], &[r(1), r(2), r(0)]).unwrap();
        assert_eq!(sol.x, vec![r(2), r(1), r(0)]);
        assert_eq!(sol.objective, r(4));
        assert!(sol.unique);
    }

    #[test]
    fn infeasible_program() {
        let a = vec![vec![r(1), r(1)]];
        assert!(minimize(&a, &[r(-1)], &[r(0), r(0)]).is_none());
    }

    #[test]
    fn tie_is_not_unique() {
        let a = vec![vec![r(1), r(1)]];
        let sol = minimize(&a, &[r(1)], &[r(1), r(1)]).unwrap();
        assert!(!sol.unique);
    }
}

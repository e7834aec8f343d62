//! Small exact integer linear algebra on lattice vectors.

use num_integer::Integer;

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Divide out the content; the zero vector is returned unchanged.
pub(crate) fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

fn normalize_row(r: &mut [i128]) {
    let g = r.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in r.iter_mut() {
            *x /= g;
        }
    }
}

/// Reduced integer echelon form: pivot columns hold zeros outside their pivot row.
fn reduce(rows: &[Vec<i64>], ncols: usize) -> (Vec<Vec<i128>>, Vec<usize>) {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in 0..ncols {
                row[j] = row[j] * piv[c] - f * piv[j];
            }
            normalize_row(row);
        }
        normalize_row(&mut a[r]);
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub(crate) fn rank(vectors: &[Vec<i64>]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => reduce(vectors, v.len()).1.len(),
    }
}

/// Integer basis of `{x : r . x = 0 for every row r}`, primitive vectors.
pub(crate) fn nullspace(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let (a, pivots) = reduce(rows, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let l = a
        .iter()
        .zip(&pivots)
        .fold(1i128, |l, (row, &c)| l.lcm(&row[c].abs()));
    free.iter()
        .map(|&f| {
            let mut x = vec![0i128; n];
            x[f] = l;
            for (row, &c) in a.iter().zip(&pivots) {
                x[c] = -row[f] * (l / row[c]);
            }
            normalize_row(&mut x);
            x.into_iter().map(|v| v as i64).collect()
        })
        .collect()
}

/// Unimodular `V` (with inverse) such that `w^T V = e_1^T` for primitive `w`.
/// Columns 2..n of `V` are then a lattice basis of `w`'s orthogonal complement.
pub(crate) fn unimodular_completion(w: &[i64]) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let n = w.len();
    let mut r: Vec<i64> = w.to_vec();
    let mut v: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
    let mut vinv = v.clone();
    loop {
        let nz: Vec<usize> = (0..n).filter(|&j| r[j] != 0).collect();
        if nz.len() <= 1 {
            break;
        }
        // smallest nonzero entry reduces the others
        let j = *nz.iter().min_by_key(|&&j| r[j].abs()).unwrap();
        for &k in &nz {
            if k == j {
                continue;
            }
            let q = Integer::div_floor(&r[k], &r[j]);
            // column k -= q * column j
            r[k] -= q * r[j];
            for row in v.iter_mut() {
                row[k] -= q * row[j];
            }
            // inverse: row j += q * row k
            let rk = vinv[k].clone();
            for (x, y) in vinv[j].iter_mut().zip(rk) {
                *x += q * y;
            }
        }
    }
    let j = (0..n).find(|&j| r[j] != 0).expect("nonzero direction");
    if j != 0 {
        r.swap(0, j);
        for row in v.iter_mut() {
            row.swap(0, j);
        }
        vinv.swap(0, j);
    }
    if r[0] < 0 {
        for row in v.iter_mut() {
            row[0] = -row[0];
        }
        for x in vinv[0].iter_mut() {
            *x = -*x;
        }
    }
    (v, vinv)
}

/// Solve the square integer system `A w = b` exactly; returns `(numerators, det)`
/// with `w = numerators / det`, or `None` when `A` is singular.
pub(crate) fn cramer(a: &[Vec<i128>], b: &[i128]) -> Option<(Vec<i128>, i128)> {
    let n = a.len();
    let d = det_i128(a);
    if d == 0 {
        return None;
    }
    let nums = (0..n)
        .map(|k| {
            let m: Vec<Vec<i128>> = a
                .iter()
                .zip(b)
                .map(|(row, &bi)| {
                    let mut r = row.clone();
                    r[k] = bi;
                    r
                })
                .collect();
            det_i128(&m)
        })
        .collect();
    Some((nums, d))
}

/// Bareiss determinant in i128.
pub(crate) fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_and_rank() {
        let rows = vec![vec![1, 1, 0], vec![0, 2, 2]];
        assert_eq!(rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for r in &rows {
            assert_eq!(dot(r, &ns[0]), 0);
        }
        assert_eq!(primitive(&ns[0]).iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![1, 1, 1]);
    }

    #[test]
    fn completion_is_unimodular() {
        for w in [vec![3, 5], vec![2, 3, 7], vec![0, 0, -1], vec![6, 10, 15]] {
            let (v, vinv) = unimodular_completion(&w);
            let n = w.len();
            for i in 0..n {
                for j in 0..n {
                    let s: i64 = (0..n).map(|k| v[i][k] * vinv[k][j]).sum();
                    assert_eq!(s, (i == j) as i64);
                }
                let col: Vec<i64> = (0..n).map(|k| v[k][i]).collect();
                assert_eq!(dot(&w, &col), (i == 0) as i64);
            }
        }
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det_i128(&[vec![2, 1], vec![1, 3]]), 5);
        let (x, d) = cramer(&[vec![2, 1], vec![1, 3]], &[3, 5]).unwrap();
        assert_eq!((x[0] * 5 / d, x[1] * 5 / d), (4, 7));
    }
}

//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's geometry or resultant code.

#![allow(dead_code)]

use toricsolve::arith::{interpolate, matrix};
use toricsolve::{Field, Scalar, SparseSystem, Support, SupportTuple, UniPoly};

fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det_i128(&minor)
            })
            .sum(),
    }
}

fn diff(a: &[i64], b: &[i64]) -> Vec<i128> {
    a.iter().zip(b).map(|(x, y)| (*x - *y) as i128).collect()
}

/// `n!·Vol(conv(pts))` for full-dimensional hulls in dimension 1, 2 or 3;
/// 0 for lower-dimensional ones. Facets are found by brute force and fanned
/// into simplices from a hull point.
pub fn normalized_volume(pts: &[Vec<i64>], n: usize) -> i128 {
    let mut pts = pts.to_vec();
    pts.sort();
    pts.dedup();
    match n {
        1 => {
            let xs: Vec<i64> = pts.iter().map(|p| p[0]).collect();
            (xs.iter().max().unwrap() - xs.iter().min().unwrap()) as i128
        }
        2 => {
            let h = hull_2d(&pts);
            if h.len() < 3 {
                return 0;
            }
            (0..h.len())
                .map(|i| {
                    let (a, b) = (&h[i], &h[(i + 1) % h.len()]);
                    a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128
                })
                .sum::<i128>()
                .abs()
        }
        3 => volume_3d(&pts),
        _ => panic!("oracle handles n <= 3"),
    }
}

/// Counter-clockwise hull (monotone chain), collinear points dropped.
fn hull_2d(pts: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if pts.len() < 3 {
        return pts.to_vec();
    }
    let cross = |o: &[i64], a: &[i64], b: &[i64]| (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    let mut lower: Vec<Vec<i64>> = Vec::new();
    for p in pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec<i64>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn volume_3d(pts: &[Vec<i64>]) -> i128 {
    let m = pts.len();
    let apex = &pts[0];
    let mut seen: Vec<Vec<usize>> = Vec::new();
    let mut total = 0i128;
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                let (u, v) = (diff(&pts[j], &pts[i]), diff(&pts[k], &pts[i]));
                let nrm = [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]];
                if nrm == [0, 0, 0] {
                    continue;
                }
                let side = |p: &Vec<i64>| -> i128 { diff(p, &pts[i]).iter().zip(&nrm).map(|(a, b)| a * b).sum() };
                let signs: Vec<i128> = pts.iter().map(side).collect();
                if !(signs.iter().all(|&s| s >= 0) || signs.iter().all(|&s| s <= 0)) {
                    continue;
                }
                let on: Vec<usize> = (0..m).filter(|&q| signs[q] == 0).collect();
                if seen.contains(&on) {
                    continue;
                }
                seen.push(on.clone());
                // project the facet to the two coordinates the normal does not dominate
                let drop = (0..3).max_by_key(|&c| nrm[c].abs()).unwrap();
                let keep: Vec<usize> = (0..3).filter(|&c| c != drop).collect();
                let mut proj: Vec<(Vec<i64>, usize)> = on.iter().map(|&q| (keep.iter().map(|&c| pts[q][c]).collect(), q)).collect();
                proj.sort();
                let poly2 = hull_2d(&proj.iter().map(|(p, _)| p.clone()).collect::<Vec<_>>());
                let idx: Vec<usize> =
                    poly2.iter().map(|p| proj.iter().find(|(q, _)| q == p).unwrap().1).collect();
                for t in 1..idx.len().saturating_sub(1) {
                    let rows = vec![
                        diff(&pts[idx[0]], apex),
                        diff(&pts[idx[t]], apex),
                        diff(&pts[idx[t + 1]], apex),
                    ];
                    total += det_i128(&rows).abs();
                }
            }
        }
    }
    total
}

fn minkowski(sets: &[&Support]) -> Vec<Vec<i64>> {
    let mut acc: Vec<Vec<i64>> = vec![vec![0; sets[0].dim()]];
    for s in sets {
        let mut next = Vec::new();
        for a in &acc {
            for b in s.points() {
                next.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        next.sort();
        next.dedup();
        acc = next;
    }
    acc
}

/// Mixed volume by polarization: `Σ_J (-1)^{n-|J|} Vol(Σ_{j∈J} P_j)` with
/// Euclidean volumes, so `n` copies of `P` give `n!·Vol(P)`.
pub fn mixed_volume_polarization(e: &SupportTuple) -> i128 {
    let n = e.dim();
    let mut total = 0i128;
    for mask in 1u32..(1 << n) {
        let sets: Vec<&Support> = (0..n).filter(|j| mask >> j & 1 == 1).map(|j| e.get(j)).collect();
        let sign = if (n - sets.len()) % 2 == 0 { 1 } else { -1 };
        total += sign * normalized_volume(&minkowski(&sets), n);
    }
    let fact: i128 = (1..=n as i128).product();
    assert_eq!(total % fact, 0);
    total / fact
}

/// Coefficients in `y` of `f_i(x0, y)` for a bivariate system, padded to
/// the formal `y`-degree.
fn y_coeffs(f: &SparseSystem, i: usize, x0: &Scalar, deg: usize) -> Vec<Scalar> {
    let field = f.field();
    let mut c = vec![field.zero(); deg + 1];
    for (a, coef) in f.terms(i) {
        let t = coef * &x0.pow(a[0] as u64);
        c[a[1] as usize] = &c[a[1] as usize] + &t;
    }
    c
}

/// Sylvester determinant of two coefficient vectors (formal degrees).
pub fn sylvester(f: &[Scalar], g: &[Scalar], field: &Field) -> Scalar {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    if size == 0 {
        return field.one();
    }
    let mut mat = vec![vec![field.zero(); size]; size];
    for r in 0..n {
        for (j, c) in f.iter().enumerate() {
            mat[r][r + j] = c.clone();
        }
    }
    for r in 0..m {
        for (j, c) in g.iter().enumerate() {
            mat[n + r][r + j] = c.clone();
        }
    }
    matrix::det(&mat, field)
}

/// `Res_y(f_1, f_2)` as a polynomial in `x`, for a bivariate system with
/// nonnegative exponents, by interpolation in `x`.
pub fn resultant_in_y(f: &SparseSystem) -> UniPoly {
    let field = f.field().clone();
    let dy = |i: usize| f.supports().get(i).points().iter().map(|p| p[1]).max().unwrap() as usize;
    let dx = |i: usize| f.supports().get(i).points().iter().map(|p| p[0]).max().unwrap() as usize;
    let bound = dy(1) * dx(0) + dy(0) * dx(1);
    let pts: Vec<(Scalar, Scalar)> = (0..=bound)
        .map(|j| {
            let x0 = field.node(j + 1).unwrap();
            let r = sylvester(&y_coeffs(f, 0, &x0, dy(0)), &y_coeffs(f, 1, &x0, dy(1)), &field);
            (x0, r)
        })
        .collect();
    interpolate(&pts, bound).unwrap()
}

/// Torus roots (with multiplicity) of a generic bivariate system, read off
/// `Res_y`: its degree minus the power of `x` dividing it.
pub fn torus_count_2d(f: &SparseSystem) -> usize {
    let r = resultant_in_y(f);
    r.deg() - r.trailing_zeros()
}

/// Torus roots of a generic system of three multilinear polynomials
/// (supports in the unit cube). Writing `f_i = a_i + z b_i`, eliminating `z`
/// gives `g_j = a_j b_1 - a_1 b_j`; their common roots are the true roots plus
/// the points where `a_1 = b_1 = 0`, which are divided out.
pub fn torus_count_cube(f: &SparseSystem) -> usize {
    let field = f.field().clone();
    let split = |i: usize| -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
        let mut a = vec![vec![field.zero(); 2]; 2];
        let mut b = vec![vec![field.zero(); 2]; 2];
        for (p, c) in f.terms(i) {
            let slot = if p[2] == 0 { &mut a } else { &mut b };
            slot[p[0] as usize][p[1] as usize] = c.clone();
        }
        (a, b)
    };
    let parts: Vec<_> = (0..3).map(split).collect();
    // bilinear (x, y) polynomials as dense [x-degree][y-degree] tables
    let mul = |p: &Vec<Vec<Scalar>>, q: &Vec<Vec<Scalar>>| -> Vec<Vec<Scalar>> {
        let mut r = vec![vec![field.zero(); p[0].len() + q[0].len() - 1]; p.len() + q.len() - 1];
        for (i, row) in p.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                for (k, row2) in q.iter().enumerate() {
                    for (l, y) in row2.iter().enumerate() {
                        r[i + k][j + l] = &r[i + k][j + l] + &(x * y);
                    }
                }
            }
        }
        r
    };
    let sub = |p: &Vec<Vec<Scalar>>, q: &Vec<Vec<Scalar>>| -> Vec<Vec<Scalar>> {
        p.iter().zip(q).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
    };
    let (a1, b1) = &parts[0];
    let g: Vec<Vec<Vec<Scalar>>> = (1..3).map(|j| sub(&mul(&parts[j].0, b1), &mul(a1, &parts[j].1))).collect();
    let res_at = |p: &Vec<Vec<Scalar>>, q: &Vec<Vec<Scalar>>, x0: &Scalar| -> Scalar {
        let ycoef = |t: &Vec<Vec<Scalar>>| -> Vec<Scalar> {
            (0..t[0].len())
                .map(|j| t.iter().enumerate().fold(field.zero(), |acc, (i, row)| &acc + &(&row[j] * &x0.pow(i as u64))))
                .collect()
        };
        sylvester(&ycoef(p), &ycoef(q), &field)
    };
    let interp = |p: &Vec<Vec<Scalar>>, q: &Vec<Vec<Scalar>>, bound: usize| -> UniPoly {
        let pts: Vec<(Scalar, Scalar)> =
            (0..=bound).map(|j| field.node(j + 1).unwrap()).map(|x0| (x0.clone(), res_at(p, q, &x0))).collect();
        interpolate(&pts, bound).unwrap()
    };
    let full = interp(&g[0], &g[1], 8);
    let spurious = interp(a1, b1, 2);
    let q = full.div_exact(&spurious).expect("spurious factor divides");
    q.deg() - q.trailing_zeros()
}

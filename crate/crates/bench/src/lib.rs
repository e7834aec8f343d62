//! Fixed inputs shared by the benchmarks.

use toricsolve::{Field, Point, SparseSystem};

fn system(polys: &[&[([i64; 2], i64)]]) -> SparseSystem {
    let q = Field::rationals();
    let terms = polys
        .iter()
        .map(|p| p.iter().map(|(e, c)| (e.to_vec() as Point, q.from_i64(*c))).collect())
        .collect();
    SparseSystem::from_terms(&q, 2, terms).expect("valid fixture")
}

/// Two polynomials with mixed volume 4 and four rational torus roots.
pub fn plane() -> SparseSystem {
    system(&[
        &[([0, 0], 1), ([1, 0], 2), ([2, 1], -2), ([1, 1], -5), ([2, 0], 1), ([3, 1], 3)],
        &[([0, 0], 2), ([1, 0], 6), ([2, 1], -6), ([1, 1], -11), ([2, 0], 4), ([3, 1], 5)],
    ])
}

/// Two conics meeting in two torus points.
pub fn conics() -> SparseSystem {
    system(&[
        &[([0, 0], 1), ([0, 1], 2), ([2, 0], -1), ([0, 2], 1)],
        &[([0, 0], 1), ([1, 0], 2), ([2, 0], 1), ([0, 2], -4)],
    ])
}

/// Dense bilinear-times-`k` rectangles, mixed volume `2 k`.
pub fn rectangles(k: i64) -> SparseSystem {
    let rect = |shift: i64| -> Vec<([i64; 2], i64)> {
        let mut v = Vec::new();
        for a in 0..=1 {
            for b in 0..=k {
                v.push(([a, b], 1 + (a * 7 + b * 3 + shift) % 11));
            }
        }
        v
    };
    let (f, g) = (rect(0), rect(5));
    system(&[&f, &g])
}

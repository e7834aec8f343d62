//! Mixed volumes from the mixed cells of a random regular subdivision.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lattice::{cramer, dot, primitive, rank, sub, unimodular_completion};
use super::{Point, Support, SupportTuple};
use crate::error::{Error, Result};

const LIFT_RANGE: i64 = 1 << 20;
const MAX_SEEDS: u64 = 64;

/// Normalized mixed volume `M(E_1, ..., E_n)`, with `M(P, ..., P) = n! Vol(P)`.
pub fn mixed_volume(e: &SupportTuple) -> Result<u64> {
    for seed in 0..MAX_SEEDS {
        match mixed_volume_with_seed(e, seed) {
            Err(Error::LiftingDegenerate) => continue,
            r => return r,
        }
    }
    Err(Error::LiftingDegenerate)
}

/// Mixed volume using the lifting drawn from `seed`; fails with
/// [`Error::LiftingDegenerate`] when that lifting is not generic.
pub fn mixed_volume_with_seed(e: &SupportTuple, seed: u64) -> Result<u64> {
    let n = e.dim();
    if e.len() != n {
        return Err(Error::ArityError { expected: n, got: e.len(), dim: n });
    }
    if n == 0 {
        return Ok(1);
    }
    if e.supports().iter().any(|s| s.is_empty()) {
        return Ok(0);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lifts: Vec<Vec<i64>> = e
        .supports()
        .iter()
        .map(|s| (0..s.len()).map(|_| rng.gen_range(0..LIFT_RANGE)).collect())
        .collect();
    let mut search = CellSearch { e, lifts: &lifts, chosen: Vec::with_capacity(n), total: 0 };
    search.descend()?;
    Ok(search.total)
}

struct CellSearch<'a> {
    e: &'a SupportTuple,
    lifts: &'a [Vec<i64>],
    chosen: Vec<(usize, usize)>,
    total: u64,
}

impl CellSearch<'_> {
    fn diffs(&self) -> Vec<Vec<i64>> {
        self.chosen
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                let s = self.e.get(i).points();
                sub(&s[a], &s[b])
            })
            .collect()
    }

    fn descend(&mut self) -> Result<()> {
        let i = self.chosen.len();
        if i == self.e.dim() {
            return self.check_cell();
        }
        let m = self.e.get(i).len();
        for a in 0..m {
            for b in a + 1..m {
                self.chosen.push((a, b));
                if rank(&self.diffs()) == i + 1 {
                    self.descend()?;
                }
                self.chosen.pop();
            }
        }
        Ok(())
    }

    fn check_cell(&mut self) -> Result<()> {
        let rows: Vec<Vec<i128>> = self
            .diffs()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as i128).collect())
            .collect();
        let rhs: Vec<i128> = self
            .chosen
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| (self.lifts[i][b] - self.lifts[i][a]) as i128)
            .collect();
        let Some((w, d)) = cramer(&rows, &rhs) else {
            return Ok(());
        };
        let sgn = d.signum();
        for (i, &(a, _)) in self.chosen.iter().enumerate() {
            let pts = self.e.get(i).points();
            let phi = |c: usize| -> i128 {
                let dotw: i128 = pts[c].iter().zip(&w).map(|(&x, y)| x as i128 * y).sum();
                dotw + d * self.lifts[i][c] as i128
            };
            let base = phi(a);
            for c in 0..pts.len() {
                if c == a || c == self.chosen[i].1 {
                    continue;
                }
                let diff = (phi(c) - base) * sgn;
                if diff == 0 {
                    return Err(Error::LiftingDegenerate);
                }
                if diff < 0 {
                    return Ok(());
                }
            }
        }
        self.total += d.unsigned_abs() as u64;
        Ok(())
    }
}

/// `R(Ē)`: the sum of the `n+1` leave-one-out mixed volumes.
pub fn r_parameter(ebar: &SupportTuple) -> Result<u64> {
    let n = ebar.dim();
    if ebar.len() != n + 1 {
        return Err(Error::ArityError { expected: n + 1, got: ebar.len(), dim: n });
    }
    (0..=n).map(|i| mixed_volume(&ebar.without(i))).sum()
}

/// `(n-1)`-dimensional mixed volume of `n-1` supports lying in translates of
/// the hyperplane orthogonal to `w`, measured in the induced lattice.
pub fn face_mixed_volume(faces: &[Support], w: &[i64]) -> Result<u64> {
    let n = w.len();
    if w.iter().all(|&x| x == 0) {
        return Err(Error::ZeroDirection);
    }
    if faces.len() + 1 != n {
        return Err(Error::ArityError { expected: n - 1, got: faces.len(), dim: n });
    }
    let w = primitive(w);
    for f in faces {
        if f.is_empty() {
            return Ok(0);
        }
        let v0 = dot(&w, &f.points()[0]);
        if f.points().iter().any(|p| dot(&w, p) != v0) {
            return Err(Error::NotAFace);
        }
    }
    if n == 1 {
        return Ok(1);
    }
    let (_, vinv) = unimodular_completion(&w);
    let project = |p: &Point| -> Point {
        (1..n).map(|r| dot(&vinv[r], p)).collect()
    };
    let projected = faces
        .iter()
        .map(|f| Support::new(n - 1, f.points().iter().map(project).collect()))
        .collect::<Result<Vec<_>>>()?;
    mixed_volume(&SupportTuple::new(n - 1, projected)?)
}

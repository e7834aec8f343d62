//! Lattice point sets, their hulls, faces and mixed volumes.

mod essential;
mod hull;
pub(crate) mod lattice;
pub mod lp;
mod mixed;

pub use essential::{essential_subsets, mixed_volume_positive, repair_support};
pub use hull::{convex_hull, minkowski_sum, Face, Facet, Polytope};
pub use mixed::{face_mixed_volume, mixed_volume, mixed_volume_with_seed, r_parameter};

use crate::error::{Error, Result};

/// An integer vector.
pub type Point = Vec<i64>;

/// A finite set of lattice points, kept sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Support {
    points: Vec<Point>,
    dim: usize,
}

impl Support {
    /// Builds a support; duplicates are rejected, order is normalized.
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::BadSupport("empty support".into()));
        }
        Self::new_allow_empty(dim, points)
    }

    /// Like [`Support::new`] but permits the empty set (used for `D ∩ E^w`).
    pub fn new_allow_empty(dim: usize, mut points: Vec<Point>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::BadSupport(format!("point {:?} is not in dimension {}", p, dim)));
        }
        points.sort();
        let before = points.len();
        points.dedup();
        if points.len() != before {
            return Err(Error::BadSupport("repeated point".into()));
        }
        Ok(Support { points, dim })
    }

    /// `Δ ∩ Z^n` scaled by `d`: all nonnegative points with coordinate sum ≤ d.
    pub fn simplex(dim: usize, d: i64) -> Self {
        let mut pts = Vec::new();
        let mut cur = vec![0i64; dim];
        fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Point>) {
            if i == cur.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..=left {
                cur[i] = v;
                rec(i + 1, left - v, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, d, &mut cur, &mut pts);
        Support::new(dim, pts).unwrap()
    }

    /// All lattice points of the box `[0, a_1] x ... x [0, a_n]`.
    pub fn lattice_box(sides: &[i64]) -> Self {
        let mut pts: Vec<Point> = vec![vec![]];
        for &s in sides {
            pts = pts
                .into_iter()
                .flat_map(|p| {
                    (0..=s).map(move |v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                })
                .collect();
        }
        Support::new(sides.len(), pts).unwrap()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).is_ok()
    }

    pub fn index_of(&self, p: &[i64]) -> Option<usize> {
        self.points.binary_search_by(|q| q.as_slice().cmp(p)).ok()
    }

    pub fn is_subset_of(&self, other: &Support) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }

    /// Copy with one more point (no-op if already present).
    pub fn with_point(&self, p: &[i64]) -> Support {
        let mut pts = self.points.clone();
        if !self.contains(p) {
            pts.push(p.to_vec());
            pts.sort();
        }
        Support { points: pts, dim: self.dim }
    }

    /// Copy without `p`; may become empty.
    pub fn without_point(&self, p: &[i64]) -> Support {
        Support {
            points: self.points.iter().filter(|q| q.as_slice() != p).cloned().collect(),
            dim: self.dim,
        }
    }

    /// Points in both supports.
    pub fn intersection(&self, other: &Support) -> Support {
        Support {
            points: self.points.iter().filter(|p| other.contains(p)).cloned().collect(),
            dim: self.dim,
        }
    }

    /// Pointwise sums (the Minkowski sum of the point sets).
    pub fn sum(&self, other: &Support) -> Support {
        let mut pts: Vec<Point> = self
            .points
            .iter()
            .flat_map(|a| other.points.iter().map(move |b| lattice::add(a, b)))
            .collect();
        pts.sort();
        pts.dedup();
        Support { points: pts, dim: self.dim }
    }

    pub fn translate(&self, v: &[i64]) -> Support {
        let mut pts: Vec<Point> = self.points.iter().map(|p| lattice::add(p, v)).collect();
        pts.sort();
        Support { points: pts, dim: self.dim }
    }

    /// Differences from the first point; spans the direction space.
    pub(crate) fn differences(&self) -> Vec<Vec<i64>> {
        match self.points.split_first() {
            None => Vec::new(),
            Some((p0, rest)) => rest.iter().map(|p| lattice::sub(p, p0)).collect(),
        }
    }

    /// Lexicographically smallest point.
    pub fn lex_min(&self) -> &Point {
        &self.points[0]
    }
}

/// An ordered tuple of supports in a common ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SupportTuple {
    supports: Vec<Support>,
    dim: usize,
}

impl SupportTuple {
    pub fn new(dim: usize, supports: Vec<Support>) -> Result<Self> {
        if supports.iter().any(|s| s.dim != dim) {
            return Err(Error::BadSupport("supports live in different dimensions".into()));
        }
        Ok(SupportTuple { supports, dim })
    }

    /// Convenience constructor from raw point lists.
    pub fn from_points(dim: usize, sets: Vec<Vec<Point>>) -> Result<Self> {
        let supports = sets.into_iter().map(|p| Support::new(dim, p)).collect::<Result<_>>()?;
        Self::new(dim, supports)
    }

    pub fn supports(&self) -> &[Support] {
        &self.supports
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }

    pub fn get(&self, i: usize) -> &Support {
        &self.supports[i]
    }

    /// Append a support (e.g. `A` to form `Ē`).
    pub fn with(&self, s: Support) -> Result<Self> {
        let mut v = self.supports.clone();
        v.push(s);
        Self::new(self.dim, v)
    }

    /// Drop the `i`-th support.
    pub fn without(&self, i: usize) -> Self {
        let mut v = self.supports.clone();
        v.remove(i);
        SupportTuple { supports: v, dim: self.dim }
    }

    pub fn replace(&self, i: usize, s: Support) -> Self {
        let mut v = self.supports.clone();
        v[i] = s;
        SupportTuple { supports: v, dim: self.dim }
    }

    /// Indices of nonempty entries.
    pub fn supp(&self) -> Vec<usize> {
        (0..self.supports.len()).filter(|&i| !self.supports[i].is_empty()).collect()
    }

    /// Total number of points.
    pub fn total_points(&self) -> usize {
        self.supports.iter().map(|s| s.len()).sum()
    }

    /// `E^w`, componentwise.
    pub fn face(&self, w: &[i64]) -> Result<Self> {
        let supports = self.supports.iter().map(|s| face(s, w)).collect::<Result<_>>()?;
        Ok(SupportTuple { supports, dim: self.dim })
    }

    /// Componentwise intersection `D ∩ E`.
    pub fn intersection(&self, other: &SupportTuple) -> Self {
        SupportTuple {
            supports: self
                .supports
                .iter()
                .zip(&other.supports)
                .map(|(a, b)| a.intersection(b))
                .collect(),
            dim: self.dim,
        }
    }
}

/// `B^w`: the points minimizing `x . w`.
pub fn face(s: &Support, w: &[i64]) -> Result<Support> {
    if w.iter().all(|&x| x == 0) {
        return Err(Error::ZeroDirection);
    }
    if w.len() != s.dim {
        return Err(Error::BadSupport("direction has the wrong dimension".into()));
    }
    let Some(m) = s.points.iter().map(|p| lattice::dot(p, w)).min() else {
        return Ok(s.clone());
    };
    Ok(Support {
        points: s.points.iter().filter(|p| lattice::dot(p, w) == m).cloned().collect(),
        dim: s.dim,
    })
}

/// Dimension of the affine span.
pub fn dim_of(s: &Support) -> usize {
    lattice::rank(&s.differences())
}

/// Dimension of `Σ_{j∈J} C_j` (empty entries contribute nothing).
pub(crate) fn dim_of_sum(supports: &[&Support]) -> usize {
    let diffs: Vec<Vec<i64>> = supports.iter().flat_map(|s| s.differences()).collect();
    lattice::rank(&diffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_and_dimensions() {
        let tri = Support::simplex(2, 1);
        assert_eq!(face(&tri, &[1, 1]).unwrap().points(), &[vec![0, 0]]);
        let sq = Support::lattice_box(&[1, 1]);
        assert_eq!(face(&sq, &[0, -1]).unwrap().points(), &[vec![0, 1], vec![1, 1]]);
        assert!(matches!(face(&sq, &[0, 0]), Err(Error::ZeroDirection)));
        assert_eq!(dim_of(&Support::new(2, vec![vec![3, 4]]).unwrap()), 0);
        assert_eq!(dim_of(&Support::new(2, vec![vec![0, 0], vec![2, 2]]).unwrap()), 1);
        let plane = Support::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(dim_of(&plane), 2);
    }

    #[test]
    fn simplex_points() {
        assert_eq!(Support::simplex(2, 2).len(), 6);
        assert_eq!(Support::simplex(3, 1).len(), 4);
        assert!(Support::new(2, vec![vec![0, 0], vec![0, 0]]).is_err());
    }
}

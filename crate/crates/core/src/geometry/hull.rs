//! Convex hulls of lattice point sets by facet enumeration.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::lattice::{dot, nullspace, rank, sub};
use super::{dim_of, Point, Support};

/// A facet `{x : normal . x = offset}` with `normal . x >= offset` on the polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Primitive inner normal, chosen inside the linear span of the polytope.
    pub normal: Vec<i64>,
    pub offset: i64,
    /// Indices into [`Polytope::vertices`].
    pub vertices: Vec<usize>,
}

/// A proper face with an inner normal selecting exactly it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub normal: Vec<i64>,
}

/// A lattice polytope given by vertices and facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    affine_dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    /// Lattice basis of the orthogonal complement of the direction space.
    equations: Vec<Vec<i64>>,
}

fn subsets(m: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Convex hull of a support.
pub fn convex_hull(s: &Support) -> Polytope {
    let n = s.dim();
    let pts = s.points();
    let d = dim_of(s);
    let equations = nullspace(&s.differences(), n);
    if d == 0 {
        return Polytope {
            dim: n,
            affine_dim: 0,
            vertices: pts.to_vec(),
            facets: Vec::new(),
            equations,
        };
    }
    // normal -> offset
    let mut found: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    subsets(pts.len(), d, |idx| {
        let p0 = &pts[idx[0]];
        let mut rows: Vec<Vec<i64>> = idx[1..].iter().map(|&i| sub(&pts[i], p0)).collect();
        rows.extend(equations.iter().cloned());
        let ns = nullspace(&rows, n);
        if ns.len() != 1 {
            return;
        }
        let w = &ns[0];
        let v0 = dot(w, p0);
        let (mut lo, mut hi) = (v0, v0);
        for p in pts {
            let v = dot(w, p);
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if v0 == lo {
            found.insert(w.clone(), lo);
        }
        if v0 == hi {
            found.insert(w.iter().map(|x| -x).collect(), -hi);
        }
    });
    // vertices: incident facet normals span the direction space
    let vertices: Vec<Point> = pts
        .iter()
        .filter(|p| {
            let inc: Vec<Vec<i64>> = found
                .iter()
                .filter(|(w, &o)| dot(w, p) == o)
                .map(|(w, _)| w.clone())
                .collect();
            rank(&inc) == d
        })
        .cloned()
        .collect();
    let facets = found
        .into_iter()
        .map(|(normal, offset)| {
            let vs = (0..vertices.len())
                .filter(|&i| dot(&normal, &vertices[i]) == offset)
                .collect();
            Facet { normal, offset, vertices: vs }
        })
        .collect();
    Polytope { dim: n, affine_dim: d, vertices, facets, equations }
}

/// Hull of all pairwise vertex sums.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Polytope {
    let mut pts: Vec<Point> = p
        .vertices
        .iter()
        .flat_map(|a| q.vertices.iter().map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect()))
        .collect();
    pts.sort();
    pts.dedup();
    convex_hull(&Support::new(p.dim, pts).expect("nonempty sum"))
}

impl Polytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull.
    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Integer normals of the hyperplanes containing the polytope.
    pub fn equations(&self) -> &[Vec<i64>] {
        &self.equations
    }

    pub fn vertex_support(&self) -> Support {
        Support::new(self.dim, self.vertices.clone()).expect("polytope has vertices")
    }

    /// Whether `x` (integer) lies in the polytope.
    pub fn contains(&self, x: &[i64]) -> bool {
        let v0 = &self.vertices[0];
        self.equations.iter().all(|e| dot(e, x) == dot(e, v0))
            && self.facets.iter().all(|f| dot(&f.normal, x) >= f.offset)
    }

    /// All proper nonempty faces, each with a normal selecting exactly that face.
    /// When the polytope is not full-dimensional the polytope itself is
    /// included, selected by a normal to its affine hull.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        for f in &self.facets {
            if seen.insert(f.vertices.clone()) {
                queue.push_back(f.vertices.clone());
            }
        }
        while let Some(g) = queue.pop_front() {
            for f in &self.facets {
                let h: Vec<usize> = g.iter().filter(|i| f.vertices.contains(i)).cloned().collect();
                if !h.is_empty() && seen.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        let mut out: Vec<Face> = seen
            .into_iter()
            .map(|g| {
                let mut w = vec![0i64; self.dim];
                for f in self.facets.iter().filter(|f| g.iter().all(|i| f.vertices.contains(i))) {
                    for (a, b) in w.iter_mut().zip(&f.normal) {
                        *a += b;
                    }
                }
                Face { vertices: g, normal: w }
            })
            .collect();
        if self.affine_dim < self.dim {
            out.push(Face {
                vertices: (0..self.vertices.len()).collect(),
                normal: self.equations[0].clone(),
            });
        }
        out
    }
}

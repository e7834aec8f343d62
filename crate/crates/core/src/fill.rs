//! Fills of support tuples: recognising them, shrinking to an irreducible
//! fill, and writing down systems whose root count is exactly `M(E)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull, essential_subsets, face_mixed_volume, minkowski_sum, mixed_volume, Point, Polytope, Support,
    SupportTuple,
};
use crate::system::SparseSystem;

/// The face check at one inner normal of `P = Σ Conv(E_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillWitness {
    pub normal: Vec<i64>,
    /// An essential subset of `E^w` inside `Supp(D ∩ E^w)`, or `None` if
    /// there is none (the check fails at this normal).
    pub essential: Option<Vec<usize>>,
}

/// Result of [`is_fill`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillCertificate {
    pub verdict: bool,
    pub witnesses: Vec<FillWitness>,
    /// Independent verdict from `M(D) = M(E)`.
    pub by_mixed_volume: bool,
}

impl FillCertificate {
    /// The first normal at which the face check failed.
    pub fn failing_normal(&self) -> Option<&[i64]> {
        self.witnesses.iter().find(|w| w.essential.is_none()).map(|w| w.normal.as_slice())
    }
}

/// `Σ Conv(E_i)`.
pub(crate) fn sum_polytope(e: &SupportTuple) -> Polytope {
    let mut p = convex_hull(e.get(0));
    for s in &e.supports()[1..] {
        p = minkowski_sum(&p, &convex_hull(s));
    }
    p
}

fn check_subtuple(d: &SupportTuple, e: &SupportTuple) -> Result<()> {
    if d.len() != e.len() || d.dim() != e.dim() {
        return Err(Error::ArityError { expected: e.len(), got: d.len(), dim: e.dim() });
    }
    for i in 0..d.len() {
        if !d.get(i).is_subset_of(e.get(i)) {
            return Err(Error::NotASubTuple(i));
        }
    }
    Ok(())
}

fn positive_mixed_volume(e: &SupportTuple) -> Result<u64> {
    if e.len() != e.dim() {
        return Err(Error::ArityError { expected: e.dim(), got: e.len(), dim: e.dim() });
    }
    if e.supp().len() < e.len() {
        return Ok(0);
    }
    mixed_volume(e)
}

/// Decide whether `D` fills `E`, checking one inner normal per face of
/// `Σ Conv(E_i)` and, independently, comparing mixed volumes.
pub fn is_fill(d: &SupportTuple, e: &SupportTuple) -> Result<FillCertificate> {
    check_subtuple(d, e)?;
    let me = positive_mixed_volume(e)?;
    if me == 0 {
        return Err(Error::ZeroMixedVolume);
    }
    let mut witnesses = Vec::new();
    for f in sum_polytope(e).faces() {
        let ew = e.face(&f.normal)?;
        let supp = d.intersection(&ew).supp();
        let essential = essential_subsets(&ew).into_iter().find(|j| j.iter().all(|i| supp.contains(i)));
        witnesses.push(FillWitness { normal: f.normal, essential });
    }
    let verdict = witnesses.iter().all(|w| w.essential.is_some());
    let by_mixed_volume = positive_mixed_volume(d)? == me;
    Ok(FillCertificate { verdict, witnesses, by_mixed_volume })
}

/// Points `(i, v)` of `D` that cannot be removed without lowering `M(D)`:
/// those with a facet normal `w` of `Σ Conv(D_j)` such that `D_i^w = {v}`
/// and the remaining faces have positive mixed volume.
fn essential_points(d: &SupportTuple) -> Result<Vec<(usize, Point)>> {
    let mut out: Vec<(usize, Point)> = Vec::new();
    for facet in sum_polytope(d).facets() {
        let w = &facet.normal;
        let dw = d.face(w)?;
        for i in 0..d.len() {
            if dw.get(i).len() != 1 {
                continue;
            }
            let v = dw.get(i).points()[0].clone();
            if out.iter().any(|(j, p)| *j == i && *p == v) {
                continue;
            }
            let rest: Vec<Support> = (0..d.len()).filter(|&j| j != i).map(|j| dw.get(j).clone()).collect();
            if face_mixed_volume(&rest, w)? > 0 {
                out.push((i, v));
            }
        }
    }
    Ok(out)
}

/// Whether removing any single point of `D` lowers `M(D)`.
pub fn is_irreducible(d: &SupportTuple) -> Result<bool> {
    if positive_mixed_volume(d)? == 0 {
        return Err(Error::ZeroMixedVolume);
    }
    let kept = essential_points(d)?;
    Ok(kept.len() == d.total_points())
}

/// Shrink `E` to an irreducible fill by deleting, one at a time, the
/// lexicographically first point that is not pinned by a facet.
pub fn construct_irreducible_fill(e: &SupportTuple) -> Result<SupportTuple> {
    let me = positive_mixed_volume(e)?;
    if me == 0 {
        return Err(Error::ZeroMixedVolume);
    }
    let mut d = e.clone();
    loop {
        let kept = essential_points(&d)?;
        let candidate = (0..d.len())
            .flat_map(|i| d.get(i).points().iter().map(move |p| (i, p.clone())))
            .find(|(i, p)| !kept.iter().any(|(j, q)| j == i && q == p));
        let Some((i, v)) = candidate else {
            return Ok(d);
        };
        let next = d.replace(i, d.get(i).without_point(&v));
        if positive_mixed_volume(&next)? != me {
            return Err(Error::Internal(format!(
                "deleting {:?} from support {} lowered the mixed volume",
                v, i
            )));
        }
        d = next;
    }
}

/// Where the nonzero coefficients of a generic system come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoeffSource {
    /// Every coefficient is 1.
    #[default]
    Ones,
    /// 1, 2, 3, ... in term order, skipping values that vanish in the field.
    Sequential,
    /// Uniform nonzero integers in `[-99, 99]` from a seeded generator.
    Seeded(u64),
}

/// A system with support exactly `D` and every coefficient nonzero.
pub fn generic_system(d: &SupportTuple, field: &Field, source: CoeffSource) -> Result<SparseSystem> {
    let mut rng = match source {
        CoeffSource::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        _ => None,
    };
    let mut counter = 0i64;
    let mut next = || -> Scalar {
        loop {
            let v = match (&source, rng.as_mut()) {
                (CoeffSource::Ones, _) => 1,
                (CoeffSource::Seeded(_), Some(r)) => r.gen_range(-99..=99),
                _ => {
                    counter += 1;
                    counter
                }
            };
            let c = field.from_i64(v);
            if !c.is_zero() {
                return c;
            }
        }
    };
    let coeffs = d.supports().iter().map(|s| (0..s.len()).map(|_| next()).collect()).collect();
    SparseSystem::new(field, d.clone(), coeffs)
}

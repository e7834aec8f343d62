//! Evaluation oracles for twisted Chow forms and toric perturbations.
//!
//! Both are functions of the coefficients `u_a` (`a ∈ A`) of a generic
//! `f_{n+1} = Σ u_a x^a`. Nothing is expanded symbolically: values come from
//! resultant matrices specialized at the coefficients of `F` (or of
//! `F - sF*` at several `s`), and univariate slices come from interpolation.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{gcd, interpolate, Field, Scalar, UniPoly};
use crate::error::{Error, Result};
use crate::fill::{generic_system, CoeffSource};
use crate::geometry::{mixed_volume, Support, SupportTuple};
use crate::resultant::{MatrixCache, Pencil, ResultantMatrix};
use crate::system::SparseSystem;

/// Distinct matrix seeds tried before giving up on a nonzero extraneous factor.
const SEED_ATTEMPTS: u64 = 4;
/// Stride between matrix seeds, so retries get unrelated liftings.
const SEED_STRIDE: u64 = 1009;
/// Random probes used to find the lowest `s`-exponent of `H(u; s)`.
const K_PROBES: usize = 3;

/// A homogeneous polynomial in `u` that can be evaluated pointwise.
pub trait UOracle: Sync {
    fn field(&self) -> &Field;
    /// The support `A` indexing `u` (sorted point order).
    fn support(&self) -> &Support;
    /// Degree in `u`, which is `M(E)`.
    fn degree(&self) -> usize;
    fn eval(&self, u: &[Scalar]) -> Result<Scalar>;
}

/// Anything that yields univariate restrictions `t ↦ P(base + t·dir)`.
pub trait SliceOracle {
    fn field(&self) -> &Field;
    fn support(&self) -> &Support;
    fn degree(&self) -> usize;
    fn slice(&self, base: &[Scalar], dir: &[Scalar]) -> Result<UniPoly>;
}

/// Restriction of `o` to the line `base + t·dir`, by interpolation through
/// `degree + 1` values of `t`.
pub fn slice<O: UOracle + ?Sized>(o: &O, base: &[Scalar], dir: &[Scalar]) -> Result<UniPoly> {
    let f = o.field();
    let d = o.degree();
    let ts = (0..=d)
        .map(|i| f.node(i).ok_or_else(|| too_small(f, d + 1)))
        .collect::<Result<Vec<_>>>()?;
    let pts = parallel_map(&ts, |t| {
        let u: Vec<Scalar> = base.iter().zip(dir).map(|(b, v)| b + &(t * v)).collect();
        o.eval(&u).map(|y| (t.clone(), y))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    interpolate(&pts, d)
}

macro_rules! slice_via_eval {
    ($t:ty) => {
        impl SliceOracle for $t {
            fn field(&self) -> &Field {
                UOracle::field(self)
            }
            fn support(&self) -> &Support {
                UOracle::support(self)
            }
            fn degree(&self) -> usize {
                UOracle::degree(self)
            }
            fn slice(&self, base: &[Scalar], dir: &[Scalar]) -> Result<UniPoly> {
                slice(self, base, dir)
            }
        }
    };
}

fn too_small(f: &Field, need: usize) -> Error {
    Error::InvalidField(format!("{} has fewer than {} elements; use an extension", describe(f), need))
}

fn describe(f: &Field) -> String {
    if f.is_rational() {
        "Q".into()
    } else {
        format!("GF({}^{})", f.characteristic(), f.extension_degree())
    }
}

/// Map `f` over `items` on scoped worker threads, preserving order.
pub(crate) fn parallel_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1).min(items.len());
    if workers <= 1 {
        return items.iter().map(f).collect();
    }
    let chunk = items.len().div_ceil(workers);
    std::thread::scope(|sc| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| sc.spawn(|| c.iter().map(&f).collect::<Vec<R>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

/// Coefficients of `F - s·F*` aligned with `E` (`F*` may use a sub-support).
fn perturbed_coeffs(f: &SparseSystem, fstar: &[Vec<Scalar>], s: &Scalar) -> Vec<Vec<Scalar>> {
    f.coeffs().iter().zip(fstar).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - &(s * y)).collect()).collect()
}

fn check_support_a(e: &SupportTuple, a: &Support) -> Result<()> {
    if a.dim() != e.dim() || a.is_empty() {
        return Err(Error::BadSupport("A must be a nonempty support in the ambient dimension".into()));
    }
    Ok(())
}

/// The pencils of `det M(F - sF*, u)` at enough values of `s`, and the
/// interpolated `u`-free denominator `det M'(F - sF*)`.
#[derive(Debug, Clone)]
struct SPencils {
    nodes: Vec<(Scalar, Pencil)>,
    den: UniPoly,
}

impl SPencils {
    fn build(m: &ResultantMatrix, f: &SparseSystem, fstar: &[Vec<Scalar>]) -> Result<Option<SPencils>> {
        let field = f.field();
        let n = f.n();
        let bound = m.size() - m.rows_for(n);
        let need = bound + 1;
        let mut nodes: Vec<(Scalar, Pencil)> = Vec::with_capacity(need);
        let mut next = 0usize;
        // prefer values of s where the non-u block is invertible; after a
        // generous search accept whatever comes next
        let mut budget = 2 * need + 8;
        while nodes.len() < need {
            let want = need - nodes.len();
            let batch: Vec<Scalar> = (next..next + want)
                .map(|i| field.node(i).ok_or_else(|| too_small(field, need)))
                .collect::<Result<_>>()?;
            next += want;
            let built = parallel_map(&batch, |s| Pencil::new(m, &perturbed_coeffs(f, fstar, s), field));
            for (s, p) in batch.into_iter().zip(built) {
                if p.is_fast() || budget == 0 {
                    nodes.push((s, p));
                } else {
                    budget -= 1;
                }
            }
        }
        let pts: Vec<(Scalar, Scalar)> = nodes.iter().map(|(s, p)| (s.clone(), p.extraneous().clone())).collect();
        let den = interpolate(&pts, bound)?;
        if den.is_zero() {
            return Ok(None);
        }
        Ok(Some(SPencils { nodes, den }))
    }

    /// `H(u; s) = det M(F - sF*, u) / det M'(F - sF*)` as a polynomial in `s`.
    fn h(&self, u: &[Scalar]) -> Result<UniPoly> {
        let pts: Vec<(Scalar, Scalar)> = self.nodes.iter().map(|(s, p)| (s.clone(), p.det(u))).collect();
        let num = interpolate(&pts, self.nodes.len() - 1)?;
        num.div_exact(&self.den)
            .map_err(|_| Error::Internal("extraneous factor does not divide the matrix determinant".into()))
    }
}

/// The toric generalized characteristic polynomial `H(u; s)` of `(F, F*)`
/// with its lowest `s`-exponent `k`; `pert_eval` reads off `Pert_A(u)`.
#[derive(Debug, Clone)]
pub struct PertContext {
    field: Field,
    a: Support,
    mixed_volume: usize,
    matrix: Arc<ResultantMatrix>,
    pencils: SPencils,
    k: usize,
}

impl PertContext {
    /// The lowest power of `s` in `H(u; s)`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of `s` values interpolated per evaluation.
    pub fn s_degree_bound(&self) -> usize {
        self.pencils.nodes.len() - 1
    }

    pub fn matrix(&self) -> &ResultantMatrix {
        &self.matrix
    }

    /// `H(u; s)` as a polynomial in `s`.
    pub fn h_poly(&self, u: &[Scalar]) -> Result<UniPoly> {
        self.pencils.h(u)
    }
}

impl UOracle for PertContext {
    fn field(&self) -> &Field {
        &self.field
    }
    fn support(&self) -> &Support {
        &self.a
    }
    fn degree(&self) -> usize {
        self.mixed_volume
    }
    fn eval(&self, u: &[Scalar]) -> Result<Scalar> {
        check_u(&self.a, u)?;
        Ok(self.pencils.h(u)?.coeff(self.k))
    }
}

slice_via_eval!(PertContext);

fn check_u(a: &Support, u: &[Scalar]) -> Result<()> {
    if u.len() != a.len() {
        return Err(Error::MissingCoefficient { poly: a.dim(), term: u.len().min(a.len()) });
    }
    Ok(())
}

fn probe_u(field: &Field, a: &Support, seed: u64, j: usize) -> Vec<Scalar> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(31).wrapping_add(j as u64));
    (0..a.len()).map(|_| field.from_i64(rng.gen_range(1..=97))).collect()
}

fn matrix_seeds(seed: u64) -> impl Iterator<Item = u64> {
    (0..SEED_ATTEMPTS).map(move |t| seed.wrapping_add(t * SEED_STRIDE))
}

fn fstar_coeffs(f: &SparseSystem, fstar: &SparseSystem) -> Result<Vec<Vec<Scalar>>> {
    if fstar.n() != f.n() {
        return Err(Error::ArityError { expected: f.n(), got: fstar.n(), dim: f.n() });
    }
    let fs = if fstar.field() == f.field() { fstar.clone() } else { fstar.map_field(f.field())? };
    Ok(fs.restrict_to(f.supports())?.coeffs().to_vec())
}

/// Set up `Pert_{A,F*}`; `k` is the smallest `s`-exponent of `H(u; s)`
/// over a few seeded probe points `u`.
pub fn pert_prepare(
    f: &SparseSystem,
    fstar: &SparseSystem,
    a: &Support,
    cache: &MatrixCache,
    seed: u64,
) -> Result<PertContext> {
    let e = f.supports();
    check_support_a(e, a)?;
    let star = fstar_coeffs(f, fstar)?;
    let mv = mixed_volume(e)? as usize;
    if mv == 0 {
        return Err(Error::ZeroMixedVolume);
    }
    let ebar = e.with(a.clone())?;
    for s in matrix_seeds(seed) {
        let matrix = cache.get(&ebar, s)?;
        let Some(pencils) = SPencils::build(&matrix, f, &star)? else {
            continue;
        };
        let mut k: Option<usize> = None;
        for j in 0..K_PROBES {
            let h = pencils.h(&probe_u(f.field(), a, seed, j))?;
            if !h.is_zero() {
                let t = h.trailing_zeros();
                k = Some(k.map_or(t, |k0| k0.min(t)));
            }
        }
        let Some(k) = k else {
            return Err(Error::PerturbationFailed);
        };
        return Ok(PertContext { field: f.field().clone(), a: a.clone(), mixed_volume: mv, matrix, pencils, k });
    }
    Err(Error::ExtraneousVanished)
}

/// `Pert_A(u)`.
pub fn pert_eval(ctx: &PertContext, u: &[Scalar]) -> Result<Scalar> {
    ctx.eval(u)
}

#[derive(Debug, Clone)]
enum ChowKind {
    Direct(Pencil),
    /// `det M'` vanished at `F` for every seed: evaluate `H(u; 0)` of a
    /// perturbation instead.
    Perturbed(SPencils),
}

/// The twisted Chow form `Chow_A(u) = Res_{(E,A)}(F, Σ u_a x^a)`, up to a
/// nonzero constant fixed at construction.
#[derive(Debug, Clone)]
pub struct ChowOracle {
    field: Field,
    a: Support,
    mixed_volume: usize,
    matrix: Arc<ResultantMatrix>,
    kind: ChowKind,
}

impl ChowOracle {
    pub fn new(f: &SparseSystem, a: &Support, cache: &MatrixCache, seed: u64) -> Result<ChowOracle> {
        let e = f.supports();
        check_support_a(e, a)?;
        let mv = mixed_volume(e)? as usize;
        let ebar = e.with(a.clone())?;
        let mut first = None;
        for s in matrix_seeds(seed) {
            let matrix = cache.get(&ebar, s)?;
            let p = Pencil::new(&matrix, f.coeffs(), f.field());
            if !p.extraneous().is_zero() {
                let kind = ChowKind::Direct(p);
                return Ok(ChowOracle { field: f.field().clone(), a: a.clone(), mixed_volume: mv, matrix, kind });
            }
            first.get_or_insert(matrix);
        }
        let matrix = first.expect("at least one seed tried");
        let fstar = generic_system(e, f.field(), CoeffSource::Seeded(seed))?;
        let pencils = SPencils::build(&matrix, f, fstar.coeffs())?.ok_or(Error::ExtraneousVanished)?;
        let kind = ChowKind::Perturbed(pencils);
        Ok(ChowOracle { field: f.field().clone(), a: a.clone(), mixed_volume: mv, matrix, kind })
    }

    /// Whether the value came from a perturbation limit rather than `F` itself.
    pub fn is_perturbed(&self) -> bool {
        matches!(self.kind, ChowKind::Perturbed(_))
    }

    pub fn matrix(&self) -> &ResultantMatrix {
        &self.matrix
    }
}

impl UOracle for ChowOracle {
    fn field(&self) -> &Field {
        &self.field
    }
    fn support(&self) -> &Support {
        &self.a
    }
    fn degree(&self) -> usize {
        self.mixed_volume
    }
    fn eval(&self, u: &[Scalar]) -> Result<Scalar> {
        check_u(&self.a, u)?;
        match &self.kind {
            ChowKind::Direct(p) => Ok(p.det(u).div(p.extraneous())),
            ChowKind::Perturbed(sp) => Ok(sp.h(u)?.coeff(0)),
        }
    }
}

slice_via_eval!(ChowOracle);

/// `Chow_A(u)` at one point.
pub fn chow_eval(f: &SparseSystem, a: &Support, u: &[Scalar], cache: &MatrixCache, seed: u64) -> Result<Scalar> {
    ChowOracle::new(f, a, cache, seed)?.eval(u)
}

/// Whether `Chow_A` vanishes identically: it is a product of nonzero linear
/// forms, so it vanishes identically iff it vanishes at `1 + (#A-1)·M(E)`
/// points of the moment curve `(1, ε, ε², ...)`.
pub fn chow_is_zero(oracle: &ChowOracle) -> Result<bool> {
    let f = UOracle::field(oracle);
    let na = oracle.a.len();
    let count = 1 + (na - 1) * oracle.mixed_volume;
    for j in 0..count {
        let eps = f.node(j + 1).ok_or_else(|| too_small(f, count + 1))?;
        let mut u = Vec::with_capacity(na);
        let mut pw = f.one();
        for _ in 0..na {
            u.push(pw.clone());
            pw = &pw * &eps;
        }
        if !oracle.eval(&u)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `F**`: `F*` with the lexicographically last term of its last polynomial
/// multiplied by a constant other than 0 and 1. A common torus root of `F*`
/// and `F**` would make that monomial vanish, so they share none.
pub fn second_perturbation(fstar: &SparseSystem) -> Result<SparseSystem> {
    let field = fstar.field();
    let bump = [field.from_i64(2), field.element(2)]
        .into_iter()
        .find(|c| !c.is_zero() && !c.is_one())
        .ok_or_else(|| too_small(field, 3))?;
    let mut coeffs = fstar.coeffs().to_vec();
    let last = coeffs.last_mut().expect("n >= 1");
    let j = last.len() - 1;
    last[j] = &last[j] * &bump;
    SparseSystem::new(field, fstar.supports().clone(), coeffs)
}

/// Both perturbations of one system; slices are the gcd of the two
/// perturbation slices, the univariate shadow of the double perturbation.
#[derive(Debug, Clone)]
pub struct DoublePert {
    pub first: PertContext,
    pub second: PertContext,
}

impl SliceOracle for DoublePert {
    fn field(&self) -> &Field {
        UOracle::field(&self.first)
    }
    fn support(&self) -> &Support {
        UOracle::support(&self.first)
    }
    fn degree(&self) -> usize {
        UOracle::degree(&self.first)
    }
    fn slice(&self, base: &[Scalar], dir: &[Scalar]) -> Result<UniPoly> {
        double_pert_univariate(&self.first, &self.second, base, dir)
    }
}

/// `gcd` of the slices of `Pert_{A,F*}` and `Pert_{A,F**}` along `base + t·dir`.
pub fn double_pert_univariate(
    ctx1: &PertContext,
    ctx2: &PertContext,
    base: &[Scalar],
    dir: &[Scalar],
) -> Result<UniPoly> {
    let h1 = slice(ctx1, base, dir)?;
    let h2 = slice(ctx2, base, dir)?;
    if h1.is_zero() || h2.is_zero() {
        return Err(Error::DegenerateSlice);
    }
    Ok(gcd(&h1, &h2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    fn r(a: i64, b: i64) -> Scalar {
        Scalar::Rational(num_rational::BigRational::new(a.into(), b.into()))
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&x| q().from_i64(x)).collect()
    }

    /// The two conics `1+2y-x²+y²`, `1+2x+x²-4y²`.
    fn conics() -> SparseSystem {
        SparseSystem::from_int_terms(
            &q(),
            2,
            &[
                &[(&[0, 0], 1), (&[0, 1], 2), (&[2, 0], -1), (&[0, 2], 1)],
                &[(&[0, 0], 1), (&[1, 0], 2), (&[2, 0], 1), (&[0, 2], -4)],
            ],
        )
        .unwrap()
    }

    /// `Chow` of the conics up to a constant: with `u` ordered as the sorted
    /// simplex `[(0,0), (0,1), (1,0)] = (u0, u2, u1)`.
    fn conic_chow(u: &[Scalar]) -> Scalar {
        let (u0, u2, u1) = (&u[0], &u[1], &u[2]);
        let l1 = u0 + &(&(u1 * &r(1, 3)) - &(u2 * &r(2, 3)));
        let l2 = u0 + &(&(u1 * &r(3, 1)) + &(u2 * &r(2, 1)));
        let l3 = u0 - u1;
        &(&l1 * &l2) * &(&l3 * &l3)
    }

    #[test]
    fn conic_chow_form_up_to_constant() {
        let cache = MatrixCache::new(None);
        let f = conics();
        let a = Support::simplex(2, 1);
        let o = ChowOracle::new(&f, &a, &cache, 0).unwrap();
        let mut ratio: Option<Scalar> = None;
        for u in [ints(&[1, 0, 0]), ints(&[2, 5, -3]), ints(&[7, 1, 4]), ints(&[-1, 3, 11])] {
            let got = o.eval(&u).unwrap();
            let want = conic_chow(&u);
            let rr = got.div(&want);
            assert!(!rr.is_zero());
            assert_eq!(*ratio.get_or_insert(rr.clone()), rr);
        }
        assert!(!chow_is_zero(&o).unwrap());
    }

    #[test]
    fn pert_agrees_with_chow_when_chow_is_nonzero() {
        let cache = MatrixCache::new(None);
        let f = conics();
        let a = Support::simplex(2, 1);
        let fstar = generic_system(f.supports(), &q(), CoeffSource::Seeded(1)).unwrap();
        let ctx = pert_prepare(&f, &fstar, &a, &cache, 0).unwrap();
        assert_eq!(ctx.k(), 0);
        let mut ratio: Option<Scalar> = None;
        for u in [ints(&[2, 5, -3]), ints(&[7, 1, 4]), ints(&[-1, 3, 11]), ints(&[1, 2, 3]), ints(&[3, -2, 5])] {
            let rr = pert_eval(&ctx, &u).unwrap().div(&conic_chow(&u));
            assert_eq!(*ratio.get_or_insert(rr.clone()), rr);
        }
        // homogeneous of degree M(E) = 4
        let u = ints(&[2, 5, -3]);
        let u2: Vec<Scalar> = u.iter().map(|x| x * &q().from_i64(3)).collect();
        assert_eq!(pert_eval(&ctx, &u2).unwrap(), &pert_eval(&ctx, &u).unwrap() * &q().from_i64(81));
    }

    #[test]
    fn double_pert_of_self_is_the_slice() {
        let cache = MatrixCache::new(None);
        let f = conics();
        let a = Support::simplex(2, 1);
        let fstar = generic_system(f.supports(), &q(), CoeffSource::Seeded(1)).unwrap();
        let ctx = pert_prepare(&f, &fstar, &a, &cache, 0).unwrap();
        let base = ints(&[0, 1, 2]);
        let dir = ints(&[1, 0, 0]);
        let s = slice(&ctx, &base, &dir).unwrap();
        assert_eq!(s.deg(), 4);
        assert_eq!(double_pert_univariate(&ctx, &ctx, &base, &dir).unwrap(), s.monic());
    }

    #[test]
    fn bumped_perturbation() {
        let f = SparseSystem::from_int_terms(
            &q(),
            2,
            &[&[(&[0, 0], 1), (&[3, 1], 1)], &[(&[1, 1], 1), (&[2, 0], 1)]],
        )
        .unwrap();
        let g = second_perturbation(&f).unwrap();
        assert_eq!(g.coeffs()[1], ints(&[1, 2]));
        let f2 = f.map_field(&Field::prime(2).unwrap()).unwrap();
        assert!(second_perturbation(&f2).is_err());
        let f4 = f.map_field(&Field::extension(2, 2).unwrap()).unwrap();
        assert!(second_perturbation(&f4).is_ok());
    }
}

//! Univariate encodings of zero sets.
//!
//! For `A = Δ ∩ ℤⁿ` the twisted Chow form (or toric perturbation) factors
//! into linear forms `u_0 + Σ ζ_i u_i`, one per point `ζ`. Fixing
//! `u_1, ..., u_n` and slicing along `u_0 = t` gives `h(t)` with roots
//! `θ = -Σ ζ_i u_i`. Two more slices per coordinate, a first subresultant and
//! an inversion modulo `h` turn each root `θ` back into the coordinates
//! `ζ_i = h_i(θ)`.

use crate::arith::{first_subresultant, gcd, interpolate, quotient_invert, rational_roots, squarefree_part};
use crate::arith::{Field, Scalar, UniPoly};
use crate::chowpert::{
    chow_is_zero, parallel_map, pert_prepare, second_perturbation, ChowOracle, DoublePert, PertContext,
    SliceOracle,
};
use crate::error::{Error, Result};
use crate::fill::{construct_irreducible_fill, generic_system, CoeffSource};
use crate::geometry::{mixed_volume, Support};
use crate::resultant::MatrixCache;
use crate::system::SparseSystem;

mod modular;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Chow,
    #[default]
    Pert,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Chow => "chow",
            Mode::Pert => "pert",
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct SolveOptions {
    pub mode: Mode,
    /// Perturbation system for pert mode; built from an irreducible fill when absent.
    pub fstar: Option<SparseSystem>,
    /// Add the origin to every support first, so affine roots are found too.
    pub affine: bool,
    pub seed: u64,
    /// Use these `(u_1, ..., u_n)` instead of the ε schedule.
    pub force_u: Option<Vec<Scalar>>,
}

/// A point `γ(θ) = (h_1(θ), ..., h_n(θ))` for a root `θ` of `h` in the working field.
#[derive(Debug, Clone, PartialEq)]
pub struct RecoveredPoint {
    pub theta: Scalar,
    pub multiplicity: usize,
    pub coords: Vec<Scalar>,
    /// Which coordinates are zero, i.e. which coordinate hyperplanes the point lies on.
    pub vanishing: Vec<bool>,
    /// Whether the input system vanishes exactly at `coords`.
    pub is_root: bool,
}

impl RecoveredPoint {
    pub fn in_torus(&self) -> bool {
        !self.vanishing.iter().any(|&v| v)
    }
}

#[derive(Debug, Clone)]
pub struct SolveOutput {
    pub h: UniPoly,
    pub h_i: Vec<UniPoly>,
    /// Part of `h` (with multiplicity) whose roots make some `h_i` vanish.
    pub g: UniPoly,
    pub squarefree_h: UniPoly,
    pub torus_count_with_mult: usize,
    pub torus_count_distinct: usize,
    pub points: Vec<RecoveredPoint>,
    /// `None` when `u` was forced.
    pub epsilon_used: Option<Scalar>,
    pub u_used: Vec<Scalar>,
    pub field: Field,
    pub mode: Mode,
    /// Lowest `s`-exponent of the perturbation (pert mode).
    pub k: Option<usize>,
    pub matrix_size: usize,
    pub mixed_volume: usize,
}

impl SolveOutput {
    /// Squarefree product of `t - θ` over roots `θ` whose point lies in the torus.
    pub fn torus_part(&self) -> UniPoly {
        let z = nontorus_roots(&self.squarefree_h, &self.h_i);
        self.squarefree_h.div_exact(&z).expect("gcd divides").monic()
    }
}

/// Deterministic choices `u_i = ε^i` with `ε = 1, 2, 3, ...` (field elements in
/// enumeration order over finite fields).
#[derive(Debug, Clone)]
pub struct EpsilonSchedule {
    field: Field,
    n: usize,
    max_trials: usize,
}

impl EpsilonSchedule {
    pub fn new(field: &Field, n: usize, mixed_volume: usize) -> Self {
        let m = mixed_volume;
        let pairs = m * m.saturating_sub(1) / 2;
        // The slack term covers factors at infinity, whose slices vanish on
        // one extra hyperplane per slice.
        let max_trials = 1 + n * (2 * n + 1) * pairs + n * (2 * n + 1) * m;
        EpsilonSchedule { field: field.clone(), n, max_trials }
    }

    pub fn max_trials(&self) -> usize {
        self.max_trials
    }

    pub fn epsilon(&self, trial: usize) -> Option<Scalar> {
        (trial < self.max_trials).then(|| self.field.node(trial + 1)).flatten()
    }

    /// `(ε, ε², ..., εⁿ)`.
    pub fn u_values(&self, trial: usize) -> Option<Vec<Scalar>> {
        let eps = self.epsilon(trial)?;
        Some((1..=self.n as u64).map(|i| eps.pow(i)).collect())
    }
}

/// Smallest extension degree `k` (a multiple of `base`, even in
/// characteristic 2) with `p^k ≥ max((n+1)²M², need)`.
pub fn extension_degree(p: u64, base: u32, n: usize, mixed_volume: usize, need: usize) -> u32 {
    let target = ((n as u128 + 1) * mixed_volume as u128).pow(2).max(need as u128).max(2);
    let step = if p == 2 && base % 2 == 1 { 2 * base } else { base };
    let mut k = step;
    while (p as u128).saturating_pow(k) < target {
        k += step;
    }
    k
}

/// The field the computation runs over: the input field, or an extension of
/// a finite field large enough for the ε schedule and all interpolations.
pub fn working_field(base: &Field, n: usize, mixed_volume: usize, need: usize) -> Result<Field> {
    if base.is_rational() {
        return Ok(base.clone());
    }
    let k = extension_degree(base.characteristic(), base.extension_degree(), n, mixed_volume, need);
    if k == base.extension_degree() {
        Ok(base.clone())
    } else {
        Field::extension(base.characteristic(), k)
    }
}

/// `α = 1`, or a root of `α² + α + 1` in characteristic 2.
fn alpha(field: &Field) -> Result<Scalar> {
    if field.characteristic() != 2 {
        return Ok(field.one());
    }
    let one = field.one();
    let size = field.size().unwrap_or(0) as u64;
    (2..size)
        .map(|i| field.element(i))
        .find(|a| (&(a * a) + a) == one)
        .ok_or_else(|| Error::InvalidField("characteristic 2 needs GF(4) inside the working field".into()))
}

/// Positions of the origin and of `e_1, ..., e_n` in the sorted simplex support.
struct Delta {
    a: Support,
    origin: usize,
    axes: Vec<usize>,
}

impl Delta {
    fn new(n: usize) -> Delta {
        let a = Support::simplex(n, 1);
        let origin = a.index_of(&vec![0; n]).expect("origin in simplex");
        let axes = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                a.index_of(&e).expect("unit vector in simplex")
            })
            .collect();
        Delta { a, origin, axes }
    }

    fn u_vector(&self, field: &Field, us: &[Scalar]) -> Vec<Scalar> {
        let mut u = vec![field.zero(); self.a.len()];
        for (i, &ax) in self.axes.iter().enumerate() {
            u[ax] = us[i].clone();
        }
        u
    }

    /// `t ↦ P(t, us)`.
    fn slice(&self, o: &dyn SliceOracle, us: &[Scalar]) -> Result<UniPoly> {
        let field = o.field();
        let base = self.u_vector(field, us);
        let mut dir = vec![field.zero(); self.a.len()];
        dir[self.origin] = field.one();
        o.slice(&base, &dir)
    }
}

/// `(h, h_1, ..., h_n)` for one choice of `u`; `h_i` are reduced modulo the
/// squarefree part of `h`.
#[derive(Debug, Clone)]
struct Encoding {
    h: UniPoly,
    sf: UniPoly,
    h_i: Vec<UniPoly>,
}

fn theta(field: &Field) -> UniPoly {
    UniPoly::monomial(field.one(), 1, field)
}

/// `q(p(θ)) mod m`.
fn compose_mod(q: &UniPoly, p: &UniPoly, m: &UniPoly) -> UniPoly {
    let field = q.field();
    let mut acc = UniPoly::zero(field);
    for c in q.coeffs().iter().rev() {
        acc = acc.mul(p).add(&UniPoly::constant(c.clone(), field)).rem(m);
    }
    acc
}

fn only_root(p: &UniPoly) -> Scalar {
    -&p.coeff(0).div(&p.coeff(1))
}

/// `R_0(θ), R_1(θ)` of `q_minus(t + τ)` and `q_star((α+1)θ - α(t + τ))`,
/// interpolated in `θ`.
///
/// The determinants see the polynomials through their reversals, so a
/// common root at `t = 0` would make both vanish; `τ` must not be a root of
/// `q_minus`.
fn subresultants_in_theta(
    q_minus: &UniPoly,
    q_star: &UniPoly,
    alpha: &Scalar,
    tau: &Scalar,
) -> Result<(UniPoly, UniPoly)> {
    let field = q_minus.field().clone();
    let bound = (q_minus.deg() - 1) * q_star.deg();
    let nodes = (0..=bound)
        .map(|j| field.node(j).ok_or_else(|| Error::InvalidField(format!("need {} interpolation nodes", bound + 1))))
        .collect::<Result<Vec<_>>>()?;
    let a1 = alpha + &field.one();
    let f = q_minus.compose_linear(&field.one(), tau);
    let shift = alpha * tau;
    let vals = parallel_map(&nodes, |th| {
        let g = q_star.compose_linear(&-alpha, &(&(&a1 * th) - &shift));
        first_subresultant(&f, &g)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let r0: Vec<_> = nodes.iter().zip(&vals).map(|(x, v)| (x.clone(), v.0.clone())).collect();
    let r1: Vec<_> = nodes.iter().zip(&vals).map(|(x, v)| (x.clone(), v.1.clone())).collect();
    Ok((interpolate(&r0, bound)?, interpolate(&r1, bound)?))
}

/// `h_i` with `h_i(θ) = ζ_i` from the squarefree slices `q_minus`, `q_star`
/// whose roots are `θ + cζ_i` and `θ - cαζ_i`. `None` when the common root
/// of the two shifted slices is not unique for some root of `sf`.
fn coordinate_map(qm: &UniPoly, qa: &UniPoly, sf: &UniPoly, alpha: &Scalar, c: &Scalar) -> Result<Option<UniPoly>> {
    let field = sf.field().clone();
    let tau = (0..)
        .map_while(|j| field.node(j))
        .find(|x| !qm.eval(x).is_zero())
        .ok_or_else(|| Error::InvalidField("no non-root of q^- in the field".into()))?;
    let (r0, r1) = subresultants_in_theta(qm, qa, alpha, &tau)?;
    let inv = match quotient_invert(&r0.rem(sf), sf) {
        Ok(inv) => inv,
        Err(Error::NotInvertible { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let tau_minus = UniPoly::constant(tau, &field).sub(&theta(&field));
    Ok(Some(tau_minus.sub(&r1.mul(&inv)).scale(&c.inv().expect("c != 0")).rem(sf)))
}

/// Steps 1-5 for fixed `(u_1, ..., u_n)`, with the auxiliary slices taken at
/// `u_i - c` and `u_i + cα`. `Ok(None)` means this choice is not generic.
fn encode(o: &dyn SliceOracle, delta: &Delta, us: &[Scalar], alpha: &Scalar, c: &Scalar) -> Result<Option<Encoding>> {
    let field = o.field().clone();
    let n = us.len();
    let h = match delta.slice(o, us) {
        Ok(h) if !h.is_zero() => h,
        Ok(_) | Err(Error::DegenerateSlice) => return Ok(None),
        Err(e) => return Err(e),
    };
    if h.deg() > o.degree() {
        return Err(Error::Internal(format!("slice degree {} exceeds the mixed volume", h.deg())));
    }
    let sf = squarefree_part(&h)?;
    let th = theta(&field);
    if n == 1 {
        // γ(θ) = -θ / u_1
        let h1 = th.scale(&-&us[0].inv().ok_or(Error::ZeroDirection)?).rem(&sf);
        return Ok(Some(Encoding { h, sf, h_i: vec![h1] }));
    }
    let nroots = sf.deg();
    let shifted = |i: usize, d: &Scalar| -> Result<Option<UniPoly>> {
        let mut v = us.to_vec();
        v[i] = &v[i] + d;
        match delta.slice(o, &v) {
            Ok(p) if !p.is_zero() => {
                let s = squarefree_part(&p)?;
                Ok((s.deg() == nroots).then_some(s))
            }
            Ok(_) | Err(Error::DegenerateSlice) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let mut h_i = Vec::with_capacity(n);
    let mut qs = Vec::with_capacity(n);
    for i in 0..n {
        let Some(qm) = shifted(i, &-c)? else { return Ok(None) };
        let Some(qa) = shifted(i, &(alpha * c))? else { return Ok(None) };
        // the common root of the two shifted slices is θ + cζ_i
        let hi = match nroots {
            0 => UniPoly::zero(&field),
            1 => UniPoly::constant((&only_root(&qm) - &only_root(&sf)).div(c), &field),
            _ => {
                let hi = if field.is_rational() {
                    modular::coordinate_map_q(&qm, &qa, &sf, alpha, c)?
                } else {
                    coordinate_map(&qm, &qa, &sf, alpha, c)?
                };
                match hi {
                    Some(hi) => hi,
                    None => return Ok(None),
                }
            }
        };
        h_i.push(hi);
        qs.push((qm, qa));
    }
    if nroots > 0 && !consistent(&sf, &h_i, &qs, us, &(alpha * c), c) {
        return Ok(None);
    }
    Ok(Some(Encoding { h, sf, h_i }))
}

/// Exact checks that every root θ of `sf` is `-Σ u_i h_i(θ)` and that the
/// shifted slices vanish at `θ + c h_i(θ)` and `θ - cα h_i(θ)`.
fn consistent(sf: &UniPoly, h_i: &[UniPoly], qs: &[(UniPoly, UniPoly)], us: &[Scalar], ca: &Scalar, c: &Scalar) -> bool {
    let th = theta(sf.field());
    let mut lin = th.clone();
    for (hi, u) in h_i.iter().zip(us) {
        lin = lin.add(&hi.scale(u));
    }
    if !lin.rem(sf).is_zero() {
        return false;
    }
    h_i.iter().zip(qs).all(|(hi, (qm, qa))| check_coordinate(sf, hi, qm, qa, ca, c))
}

/// `q_minus(θ + c h_i) ≡ 0` and `q_star(θ - cα h_i) ≡ 0` modulo `sf`.
fn check_coordinate(sf: &UniPoly, hi: &UniPoly, qm: &UniPoly, qa: &UniPoly, ca: &Scalar, c: &Scalar) -> bool {
    let th = theta(sf.field());
    compose_mod(qm, &th.add(&hi.scale(c)), sf).is_zero() && compose_mod(qa, &th.sub(&hi.scale(ca)), sf).is_zero()
}

/// Squarefree product of `t - θ` over roots of `sf` where some `h_i` vanishes.
fn nontorus_roots(sf: &UniPoly, h_i: &[UniPoly]) -> UniPoly {
    let field = sf.field();
    let mut prod = UniPoly::one(field);
    for hi in h_i {
        prod = prod.mul(hi).rem(sf);
    }
    if prod.is_zero() {
        return sf.monic();
    }
    gcd(sf, &prod)
}

/// The factor of `h` built from the roots of `z`, with their full multiplicity.
fn saturate(h: &UniPoly, z: &UniPoly) -> Result<UniPoly> {
    let mut g = UniPoly::one(h.field());
    let mut rest = h.clone();
    loop {
        let d = gcd(&rest, z);
        if d.deg() == 0 {
            return Ok(g);
        }
        rest = rest.div_exact(&d)?;
        g = g.mul(&d);
    }
}

/// Run the ε schedule (or the forced `u`) until `encode` succeeds.
fn encode_with_schedule(
    o: &dyn SliceOracle,
    n: usize,
    force_u: Option<&[Scalar]>,
) -> Result<(Encoding, Vec<Scalar>, Option<Scalar>)> {
    let field = o.field().clone();
    let delta = Delta::new(n);
    let alpha = alpha(&field)?;
    if let Some(us) = force_u {
        if us.len() != n {
            return Err(Error::ArityError { expected: n, got: us.len(), dim: n });
        }
        // u is fixed, so vary the shift size instead; each coordinate and
        // pair of points rules out at most two values of c
        let m = o.degree();
        let tries = 1 + 2 * n * m * m.saturating_sub(1) / 2 + 2 * n * m;
        for j in 1..=tries {
            let c = field.node(j).ok_or(Error::GenericityExhausted(j))?;
            if let Some(enc) = encode(o, &delta, us, &alpha, &c)? {
                return Ok((enc, us.to_vec(), None));
            }
        }
        return Err(Error::GenericityExhausted(tries));
    }
    if n == 1 {
        let us = vec![-field.one()];
        return match encode(o, &delta, &us, &alpha, &field.one())? {
            Some(enc) => Ok((enc, us, None)),
            None => Err(Error::DegenerateSlice),
        };
    }
    let sched = EpsilonSchedule::new(&field, n, o.degree());
    for trial in 0..sched.max_trials() {
        let Some(us) = sched.u_values(trial) else { break };
        if let Some(enc) = encode(o, &delta, &us, &alpha, &field.one())? {
            return Ok((enc, us, sched.epsilon(trial)));
        }
    }
    Err(Error::GenericityExhausted(sched.max_trials()))
}

/// Lift `F` (and an optional `F*`) into the working field and report `M(E)`
/// and the resultant matrix size.
struct Prepared {
    f: SparseSystem,
    mv: usize,
    matrix_size: usize,
}

fn prepare(f: &SparseSystem, cache: &MatrixCache, seed: u64) -> Result<Prepared> {
    let n = f.n();
    let mv = mixed_volume(f.supports())? as usize;
    if mv == 0 {
        return Err(Error::ZeroMixedVolume);
    }
    let ebar = f.supports().with(Support::simplex(n, 1))?;
    let matrix_size = cache.get(&ebar, seed)?.size();
    let sched = EpsilonSchedule::new(f.field(), n, mv);
    let need = (matrix_size + 2).max(mv * mv + 2).max(sched.max_trials() + 2);
    let field = working_field(f.field(), n, mv, need)?;
    let f = if &field == f.field() { f.clone() } else { f.map_field(&field)? };
    Ok(Prepared { f, mv, matrix_size })
}

/// `F*` from an irreducible fill of `E`: unit coefficients first, seeded
/// random ones if those give a degenerate perturbation.
fn fill_perturbation(f: &SparseSystem, cache: &MatrixCache, seed: u64) -> Result<(PertContext, SparseSystem)> {
    let a = Support::simplex(f.n(), 1);
    let d = construct_irreducible_fill(f.supports())?;
    let ones = generic_system(&d, f.field(), CoeffSource::Ones)?;
    match pert_prepare(f, &ones, &a, cache, seed) {
        Err(Error::PerturbationFailed) | Err(Error::ExtraneousVanished) => {
            let rnd = generic_system(&d, f.field(), CoeffSource::Seeded(seed))?;
            Ok((pert_prepare(f, &rnd, &a, cache, seed)?, rnd))
        }
        r => Ok((r?, ones)),
    }
}

/// The perturbation system `solve` uses in pert mode when none is given: a
/// generic system on an irreducible fill of the supports.
pub fn default_perturbation(f: &SparseSystem, cache: &MatrixCache, seed: u64) -> Result<SparseSystem> {
    Ok(fill_perturbation(f, cache, seed)?.1)
}

fn pert_context(f: &SparseSystem, fstar: Option<&SparseSystem>, cache: &MatrixCache, seed: u64) -> Result<PertContext> {
    match fstar {
        Some(fs) => {
            let fs = if fs.field() == f.field() { fs.clone() } else { fs.map_field(f.field())? };
            pert_prepare(f, &fs, &Support::simplex(f.n(), 1), cache, seed)
        }
        None => fill_perturbation(f, cache, seed).map(|(ctx, _)| ctx),
    }
}

/// Find `h, h_1, ..., h_n` and the points they describe.
pub fn solve(f: &SparseSystem, opts: &SolveOptions, cache: &MatrixCache) -> Result<SolveOutput> {
    let original = if opts.affine { f.with_origin() } else { f.clone() };
    let p = prepare(&original, cache, opts.seed)?;
    let f = &p.f;
    let n = f.n();
    let force_u = opts
        .force_u
        .as_ref()
        .map(|us| us.iter().map(|u| crate::system::lift_scalar(u, f.field())).collect::<Result<Vec<_>>>())
        .transpose()?;
    let (enc, us, eps, k) = match opts.mode {
        Mode::Chow => {
            let o = ChowOracle::new(f, &Support::simplex(n, 1), cache, opts.seed)?;
            if chow_is_zero(&o)? {
                return Err(Error::NotZeroDimensional);
            }
            let (enc, us, eps) = encode_with_schedule(&o, n, force_u.as_deref())?;
            (enc, us, eps, None)
        }
        Mode::Pert => {
            let ctx = pert_context(f, opts.fstar.as_ref(), cache, opts.seed)?;
            let (enc, us, eps) = encode_with_schedule(&ctx, n, force_u.as_deref())?;
            (enc, us, eps, Some(ctx.k()))
        }
    };
    finish(f, enc, us, eps, opts.mode, k, &p)
}

fn finish(
    f: &SparseSystem,
    enc: Encoding,
    us: Vec<Scalar>,
    eps: Option<Scalar>,
    mode: Mode,
    k: Option<usize>,
    p: &Prepared,
) -> Result<SolveOutput> {
    let z = nontorus_roots(&enc.sf, &enc.h_i);
    let g = saturate(&enc.h, &z)?;
    let points = rational_roots(&enc.h)
        .into_iter()
        .map(|(theta, multiplicity)| {
            let coords: Vec<Scalar> = enc.h_i.iter().map(|hi| hi.eval(&theta)).collect();
            let vanishing = coords.iter().map(|c| c.is_zero()).collect();
            let is_root = f.is_root(&coords);
            RecoveredPoint { theta, multiplicity, coords, vanishing, is_root }
        })
        .collect();
    Ok(SolveOutput {
        torus_count_with_mult: enc.h.deg() - g.deg(),
        torus_count_distinct: enc.sf.deg() - z.deg(),
        h: enc.h,
        h_i: enc.h_i,
        g,
        squarefree_h: enc.sf,
        points,
        epsilon_used: eps,
        u_used: us,
        field: f.field().clone(),
        mode,
        k,
        matrix_size: p.matrix_size,
        mixed_volume: p.mv,
    })
}

/// [`solve`] on the system with the origin added to every support.
pub fn solve_affine(f: &SparseSystem, opts: &SolveOptions, cache: &MatrixCache) -> Result<SolveOutput> {
    solve(f, &SolveOptions { affine: true, ..opts.clone() }, cache)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsolatedCounts {
    /// `deg h** - deg g**`: at most this many isolated roots in the torus.
    pub isolated_upper: usize,
    /// `M(E) - deg h**`: the excess components absorb at least this much multiplicity.
    pub excess_mult_lower: usize,
    /// Torus roots counted by a single perturbation.
    pub torus_exact: usize,
}

/// Compare two perturbations: points they share are candidates for isolated
/// roots, the rest lies on positive-dimensional components.
pub fn count_isolated(f: &SparseSystem, seed: u64, cache: &MatrixCache) -> Result<IsolatedCounts> {
    let p = prepare(f, cache, seed)?;
    let f = &p.f;
    let n = f.n();
    let (first, fstar) = fill_perturbation(f, cache, seed)?;
    let (single, _, _) = encode_with_schedule(&first, n, None)?;
    let g = saturate(&single.h, &nontorus_roots(&single.sf, &single.h_i))?;
    let torus_exact = single.h.deg() - g.deg();
    let second = pert_prepare(f, &second_perturbation(&fstar)?, &Support::simplex(n, 1), cache, seed)?;
    let dp = DoublePert { first, second };
    let (double, _, _) = encode_with_schedule(&dp, n, None)?;
    let g2 = saturate(&double.h, &nontorus_roots(&double.sf, &double.h_i))?;
    Ok(IsolatedCounts {
        isolated_upper: double.h.deg() - g2.deg(),
        excess_mult_lower: p.mv - double.h.deg(),
        torus_exact,
    })
}

/// Squarefree polynomial whose roots are the `θ` of torus roots; its
/// splitting field is generated by the coordinates of all torus roots.
pub fn splitting_poly(f: &SparseSystem, seed: u64, cache: &MatrixCache) -> Result<UniPoly> {
    let opts = SolveOptions { mode: Mode::Chow, seed, ..Default::default() };
    Ok(solve(f, &opts, cache)?.torus_part())
}

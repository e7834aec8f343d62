//! One function per subcommand, each producing a JSON result document.

use serde_json::{json, Value};
use toricsolve::chowpert::{chow_is_zero, pert_eval, pert_prepare, ChowOracle, UOracle};
use toricsolve::fill::{construct_irreducible_fill, is_fill, is_irreducible};
use toricsolve::geometry::{essential_subsets, mixed_volume, repair_support};
use toricsolve::resultant::cache_key;
use toricsolve::solver::{
    count_isolated, default_perturbation, solve, splitting_poly, SolveOptions, SolveOutput,
};
use toricsolve::{Error, Field, Scalar, SupportTuple, UniPoly};

use crate::job::Job;
use crate::{Failure, Settings};

fn scalars<'a>(xs: impl IntoIterator<Item = &'a Scalar>) -> Value {
    Value::Array(xs.into_iter().map(|x| Value::String(x.to_string())).collect())
}

/// Coefficients in ascending degree.
fn poly(p: &UniPoly) -> Value {
    scalars(p.coeffs())
}

fn field(f: &Field) -> Value {
    json!({ "char": f.characteristic(), "ext": if f.is_rational() { 1 } else { f.extension_degree() } })
}

fn tuple(t: &SupportTuple) -> Value {
    json!(t.supports().iter().map(|s| s.points().to_vec()).collect::<Vec<_>>())
}

/// Library errors split into degeneracies (a structured result) and input problems.
fn classify(e: Error, job: &Job) -> Failure {
    match e {
        Error::ZeroMixedVolume => zero_mixed_volume(job),
        Error::NotZeroDimensional
        | Error::GenericityExhausted(_)
        | Error::PerturbationFailed
        | Error::LiftingDegenerate
        | Error::DegenerateSlice
        | Error::ExtraneousVanished => Failure::Degenerate(json!({ "status": "degenerate", "reason": e.to_string() })),
        other => Failure::Input(other.to_string()),
    }
}

fn zero_mixed_volume(job: &Job) -> Failure {
    let repair = match repair_support(&job.supports) {
        Ok(pts) => json!(pts),
        Err(_) => Value::Null,
    };
    Failure::Degenerate(json!({
        "status": "degenerate",
        "reason": "mixed volume is zero",
        "mixed_volume": 0,
        "essential_subsets": essential_subsets(&job.supports),
        "repair": repair,
    }))
}

pub fn mv(job: &Job, _: &Settings) -> Result<Value, Failure> {
    let m = mixed_volume(&job.supports).map_err(|e| classify(e, job))?;
    if m == 0 {
        return Err(zero_mixed_volume(job));
    }
    Ok(json!({ "mixed_volume": m }))
}

pub fn essential(job: &Job, _: &Settings) -> Result<Value, Failure> {
    Ok(json!({ "essential_subsets": essential_subsets(&job.supports) }))
}

pub fn fill(job: &Job, _: &Settings) -> Result<Value, Failure> {
    let (d, constructed) = match &job.fill {
        Some(d) => (d.clone(), false),
        None => (construct_irreducible_fill(&job.supports).map_err(|e| classify(e, job))?, true),
    };
    let cert = is_fill(&d, &job.supports).map_err(|e| classify(e, job))?;
    let irreducible = is_irreducible(&d).map_err(|e| classify(e, job))?;
    Ok(json!({
        "fill": tuple(&d),
        "constructed": constructed,
        "is_fill": cert.verdict,
        "is_fill_by_mixed_volume": cert.by_mixed_volume,
        "failing_normal": cert.failing_normal(),
        "is_irreducible": irreducible,
        "mixed_volume": mixed_volume(&d).map_err(|e| classify(e, job))?,
    }))
}

pub fn genmatrix(job: &Job, s: &Settings) -> Result<Value, Failure> {
    let ebar = job.supports.with(job.a.clone()).map_err(|e| classify(e, job))?;
    let m = s.cache.get(&ebar, s.seed).map_err(|e| classify(e, job))?;
    let rows: Vec<usize> = (0..=job.n).map(|i| m.rows_for(i)).collect();
    Ok(json!({
        "matrix_size": m.size(),
        "rows_per_polynomial": rows,
        "extraneous_size": m.extraneous_rows().len(),
        "lifting_seed": m.seed(),
        "cache_key": cache_key(&ebar, s.seed),
    }))
}

pub fn chow_test(job: &Job, s: &Settings) -> Result<Value, Failure> {
    let f = job.system()?;
    let o = ChowOracle::new(f, &job.a, &s.cache, s.seed).map_err(|e| classify(e, job))?;
    let zero = chow_is_zero(&o).map_err(|e| classify(e, job))?;
    let mut out = json!({ "identically_zero": zero, "degree": o.degree() });
    if let Some(u) = &job.u {
        out["value"] = Value::String(o.eval(u).map_err(|e| classify(e, job))?.to_string());
    }
    Ok(out)
}

pub fn pert_eval_cmd(job: &Job, s: &Settings) -> Result<Value, Failure> {
    let f = job.system()?;
    let u = job.u.as_ref().ok_or_else(|| Failure::Input("pert-eval needs \"u\" in the job".into()))?;
    let fstar = match &job.fstar {
        Some(g) => g.clone(),
        None => default_perturbation(f, &s.cache, s.seed).map_err(|e| classify(e, job))?,
    };
    let ctx = pert_prepare(f, &fstar, &job.a, &s.cache, s.seed).map_err(|e| classify(e, job))?;
    let v = pert_eval(&ctx, u).map_err(|e| classify(e, job))?;
    Ok(json!({ "value": v.to_string(), "k": ctx.k() }))
}

fn options(job: &Job, s: &Settings) -> SolveOptions {
    SolveOptions {
        mode: s.mode,
        fstar: job.fstar.clone(),
        affine: s.affine,
        seed: s.seed,
        force_u: s.force_u.clone().or_else(|| job.force_u.clone()),
    }
}

fn counts(o: &SolveOutput) -> Value {
    json!({
        "torus_with_multiplicity": o.torus_count_with_mult,
        "torus_distinct": o.torus_count_distinct,
        "mixed_volume": o.mixed_volume,
    })
}

pub fn solve_cmd(job: &Job, s: &Settings) -> Result<Value, Failure> {
    let o = solve(job.system()?, &options(job, s), &s.cache).map_err(|e| classify(e, job))?;
    let points: Vec<Value> = o
        .points
        .iter()
        .map(|p| {
            json!({
                "theta": p.theta.to_string(),
                "multiplicity": p.multiplicity,
                "coords": scalars(&p.coords),
                "vanishing": p.vanishing,
                "is_root": p.is_root,
            })
        })
        .collect();
    Ok(json!({
        "h": poly(&o.h),
        "h_i": o.h_i.iter().map(poly).collect::<Vec<_>>(),
        "g": poly(&o.g),
        "squarefree_h": poly(&o.squarefree_h),
        "counts": counts(&o),
        "points": points,
        "provenance": provenance(&o, s),
    }))
}

fn provenance(o: &SolveOutput, s: &Settings) -> Value {
    json!({
        "epsilon": o.epsilon_used.as_ref().map(|e| e.to_string()),
        "u": scalars(&o.u_used),
        "mode": o.mode.to_string(),
        "k": o.k,
        "matrix_size": o.matrix_size,
        "field": field(&o.field),
        "seed": s.seed,
    })
}

pub fn count(job: &Job, s: &Settings) -> Result<Value, Failure> {
    let o = solve(job.system()?, &options(job, s), &s.cache).map_err(|e| classify(e, job))?;
    Ok(json!({ "counts": counts(&o), "provenance": provenance(&o, s) }))
}

pub fn count_isolated_cmd(job: &Job, s: &Settings) -> Result<Value, Failure> {
    let c = count_isolated(job.system()?, s.seed, &s.cache).map_err(|e| classify(e, job))?;
    Ok(json!({
        "isolated_upper": c.isolated_upper,
        "excess_mult_lower": c.excess_mult_lower,
        "torus_exact": c.torus_exact,
    }))
}

pub fn splitting(job: &Job, s: &Settings) -> Result<Value, Failure> {
    let p = splitting_poly(job.system()?, s.seed, &s.cache).map_err(|e| classify(e, job))?;
    Ok(json!({ "splitting_poly": poly(&p), "degree": p.deg() }))
}

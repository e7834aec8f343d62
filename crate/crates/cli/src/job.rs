//! The JSON job document and its validation.

use std::path::Path;

use serde::Deserialize;
use toricsolve::{Field, Point, Scalar, SparseSystem, Support, SupportTuple};

use crate::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDoc {
    pub n: usize,
    #[serde(default)]
    pub field: FieldSpec,
    pub system: Vec<PolyDoc>,
    /// `"simplex"` or an explicit point list; defaults to the simplex.
    #[serde(rename = "A", default)]
    pub a: Option<SupportDoc>,
    /// Perturbation system for pert mode.
    #[serde(default)]
    pub fstar: Option<Vec<PolyDoc>>,
    /// Candidate fill to verify (`fill` command).
    #[serde(default)]
    pub fill: Option<Vec<Vec<Point>>>,
    /// Evaluation point for `chow-test` and `pert-eval`, indexed like `A`.
    #[serde(default)]
    pub u: Option<Vec<String>>,
    /// `(u_1, ..., u_n)` for a reproduction run; `--force-u` overrides it.
    #[serde(default)]
    pub force_u: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(rename = "char")]
    pub characteristic: u64,
    #[serde(default = "one")]
    pub ext: u32,
}

fn one() -> u32 {
    1
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { characteristic: 0, ext: 1 }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyDoc {
    pub support: Vec<Point>,
    #[serde(default)]
    pub coeffs: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum SupportDoc {
    Keyword(String),
    Points(Vec<Point>),
}

/// A validated job.
pub struct Job {
    pub n: usize,
    pub field: Field,
    pub supports: SupportTuple,
    /// Present when every polynomial lists its coefficients.
    pub system: Option<SparseSystem>,
    pub a: Support,
    pub fstar: Option<SparseSystem>,
    pub fill: Option<SupportTuple>,
    pub u: Option<Vec<Scalar>>,
    pub force_u: Option<Vec<Scalar>>,
}

impl Job {
    pub fn system(&self) -> Result<&SparseSystem, Failure> {
        self.system.as_ref().ok_or_else(|| Failure::Input("this command needs coefficients for every polynomial".into()))
    }
}

pub fn load(path: &Path) -> Result<Job, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let doc: JobDoc =
        serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    validate(doc)
}

pub fn parse_scalars(field: &Field, items: &[String], what: &str) -> Result<Vec<Scalar>, Failure> {
    items
        .iter()
        .enumerate()
        .map(|(k, s)| field.parse(s).map_err(|_| Failure::Input(format!("{what}[{k}]: cannot parse {s:?}"))))
        .collect()
}

fn points(n: usize, pts: &[Point], what: &str) -> Result<Support, Failure> {
    if pts.is_empty() {
        return Err(Failure::Input(format!("{what}: empty support")));
    }
    for (j, p) in pts.iter().enumerate() {
        if p.len() != n {
            return Err(Failure::Input(format!("{what}[{j}]: expected {n} coordinates, got {}", p.len())));
        }
        if pts[..j].contains(p) {
            return Err(Failure::Input(format!("{what}[{j}]: repeated exponent {p:?}")));
        }
    }
    Support::new(n, pts.to_vec()).map_err(|e| Failure::Input(format!("{what}: {e}")))
}

fn polys(n: usize, field: &Field, ps: &[PolyDoc], name: &str) -> Result<(SupportTuple, Option<SparseSystem>), Failure> {
    if ps.len() != n {
        return Err(Failure::Input(format!("{name}: expected {n} polynomials, got {}", ps.len())));
    }
    let mut sups = Vec::with_capacity(n);
    let mut terms = Vec::with_capacity(n);
    for (i, p) in ps.iter().enumerate() {
        sups.push(points(n, &p.support, &format!("{name}[{i}].support"))?);
        if let Some(cs) = &p.coeffs {
            if cs.len() != p.support.len() {
                return Err(Failure::Input(format!(
                    "{name}[{i}].coeffs: {} coefficients for {} support points",
                    cs.len(),
                    p.support.len()
                )));
            }
            let cs = parse_scalars(field, cs, &format!("{name}[{i}].coeffs"))?;
            terms.push(p.support.iter().cloned().zip(cs).collect::<Vec<_>>());
        }
    }
    let tuple = SupportTuple::new(n, sups).map_err(|e| Failure::Input(format!("{name}: {e}")))?;
    let system = if terms.len() == n {
        // keep the declared supports even where a coefficient is zero
        let s = SparseSystem::from_terms(field, n, terms)
            .and_then(|s| s.restrict_to(&tuple))
            .map_err(|e| Failure::Input(format!("{name}: {e}")))?;
        Some(s)
    } else if terms.is_empty() {
        None
    } else {
        return Err(Failure::Input(format!("{name}: either all polynomials or none must list coefficients")));
    };
    Ok((tuple, system))
}

fn validate(doc: JobDoc) -> Result<Job, Failure> {
    let n = doc.n;
    if n == 0 {
        return Err(Failure::Input("n must be positive".into()));
    }
    let spec = &doc.field;
    let field = match (spec.characteristic, spec.ext) {
        (0, 1) => Ok(Field::rationals()),
        (0, _) => Err(Failure::Input("field: characteristic 0 takes no extension".into())),
        (p, 1) => Field::prime(p).map_err(|e| Failure::Input(format!("field: {e}"))),
        (p, k) => Field::extension(p, k).map_err(|e| Failure::Input(format!("field: {e}"))),
    }?;
    let (supports, system) = polys(n, &field, &doc.system, "system")?;
    let a = match &doc.a {
        None => Support::simplex(n, 1),
        Some(SupportDoc::Keyword(k)) if k == "simplex" => Support::simplex(n, 1),
        Some(SupportDoc::Keyword(k)) => return Err(Failure::Input(format!("A: unknown keyword {k:?}"))),
        Some(SupportDoc::Points(p)) => points(n, p, "A")?,
    };
    let fstar = match &doc.fstar {
        None => None,
        Some(ps) => match polys(n, &field, ps, "fstar")? {
            (_, Some(s)) => Some(s),
            (_, None) => return Err(Failure::Input("fstar: coefficients are required".into())),
        },
    };
    let fill = match &doc.fill {
        None => None,
        Some(sets) => {
            if sets.len() != n {
                return Err(Failure::Input(format!("fill: expected {n} supports, got {}", sets.len())));
            }
            let sups = sets
                .iter()
                .enumerate()
                .map(|(i, s)| points(n, s, &format!("fill[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Some(SupportTuple::new(n, sups).map_err(|e| Failure::Input(format!("fill: {e}")))?)
        }
    };
    let u = match &doc.u {
        None => None,
        Some(items) => {
            if items.len() != a.len() {
                return Err(Failure::Input(format!("u: expected {} values (one per point of A), got {}", a.len(), items.len())));
            }
            Some(parse_scalars(&field, items, "u")?)
        }
    };
    let force_u = match &doc.force_u {
        None => None,
        Some(items) => Some(force_u(&field, n, items)?),
    };
    Ok(Job { n, field, supports, system, a, fstar, fill, u, force_u })
}

pub fn force_u(field: &Field, n: usize, items: &[String]) -> Result<Vec<Scalar>, Failure> {
    if items.len() != n {
        return Err(Failure::Input(format!("force-u: expected {n} values, got {}", items.len())));
    }
    parse_scalars(field, items, "force-u")
}

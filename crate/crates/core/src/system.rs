//! Sparse polynomial systems and coefficient assignments.

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::geometry::{Point, Support, SupportTuple};

/// Coefficients `c_{i,a}` for every `a ∈ E_i`, aligned with each support's
/// (sorted) point order. Absent terms are explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffAssignment {
    pub coeffs: Vec<Vec<Scalar>>,
}

impl CoeffAssignment {
    pub fn new(supports: &SupportTuple, coeffs: Vec<Vec<Scalar>>) -> Result<Self> {
        if coeffs.len() != supports.len() {
            return Err(Error::ArityError { expected: supports.len(), got: coeffs.len(), dim: supports.dim() });
        }
        for (i, (c, s)) in coeffs.iter().zip(supports.supports()).enumerate() {
            if c.len() != s.len() {
                return Err(Error::MissingCoefficient { poly: i, term: c.len().min(s.len()) });
            }
        }
        Ok(CoeffAssignment { coeffs })
    }

    pub fn get(&self, i: usize, a: usize) -> &Scalar {
        &self.coeffs[i][a]
    }
}

/// `F = (f_1, ..., f_n)` with `f_i = Σ_{a∈E_i} c_{i,a} x^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSystem {
    field: Field,
    supports: SupportTuple,
    coeffs: Vec<Vec<Scalar>>,
}

impl SparseSystem {
    /// Build from `(exponent, coefficient)` terms per polynomial; terms are
    /// reordered to match the sorted support.
    pub fn from_terms(field: &Field, n: usize, polys: Vec<Vec<(Point, Scalar)>>) -> Result<Self> {
        if polys.len() != n {
            return Err(Error::ArityError { expected: n, got: polys.len(), dim: n });
        }
        let mut supports = Vec::with_capacity(n);
        let mut coeffs = Vec::with_capacity(n);
        for (i, mut terms) in polys.into_iter().enumerate() {
            if let Some(k) = terms.iter().position(|(p, _)| p.len() != n) {
                return Err(Error::MissingCoefficient { poly: i, term: k });
            }
            terms.sort_by(|a, b| a.0.cmp(&b.0));
            for k in 1..terms.len() {
                if terms[k].0 == terms[k - 1].0 {
                    return Err(Error::BadSupport(format!("polynomial {} repeats exponent {:?}", i, terms[k].0)));
                }
            }
            supports.push(Support::new(n, terms.iter().map(|t| t.0.clone()).collect())?);
            coeffs.push(terms.into_iter().map(|t| t.1).collect());
        }
        Ok(SparseSystem { field: field.clone(), supports: SupportTuple::new(n, supports)?, coeffs })
    }

    /// Integer coefficients, convenient in tests and examples.
    pub fn from_int_terms(field: &Field, n: usize, polys: &[&[(&[i64], i64)]]) -> Result<Self> {
        let polys = polys
            .iter()
            .map(|p| p.iter().map(|(e, c)| (e.to_vec(), field.from_i64(*c))).collect())
            .collect();
        Self::from_terms(field, n, polys)
    }

    /// Build from supports and aligned coefficients.
    pub fn new(field: &Field, supports: SupportTuple, coeffs: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = supports.dim();
        if supports.len() != n {
            return Err(Error::ArityError { expected: n, got: supports.len(), dim: n });
        }
        CoeffAssignment::new(&supports, coeffs.clone())?;
        Ok(SparseSystem { field: field.clone(), supports, coeffs })
    }

    pub fn n(&self) -> usize {
        self.supports.dim()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn supports(&self) -> &SupportTuple {
        &self.supports
    }

    pub fn coeffs(&self) -> &[Vec<Scalar>] {
        &self.coeffs
    }

    pub fn terms(&self, i: usize) -> impl Iterator<Item = (&Point, &Scalar)> {
        self.supports.get(i).points().iter().zip(&self.coeffs[i])
    }

    /// Evaluate `f_i` at a point; negative exponents need nonzero coordinates.
    pub fn eval(&self, i: usize, x: &[Scalar]) -> Option<Scalar> {
        let mut acc = self.field.zero();
        for (a, c) in self.terms(i) {
            let mut m = c.clone();
            for (xi, &e) in x.iter().zip(a) {
                if e >= 0 {
                    m = &m * &xi.pow(e as u64);
                } else {
                    m = &m * &xi.inv()?.pow((-e) as u64);
                }
            }
            acc = &acc + &m;
        }
        Some(acc)
    }

    /// Whether every polynomial vanishes at `x`.
    pub fn is_root(&self, x: &[Scalar]) -> bool {
        (0..self.n()).all(|i| self.eval(i, x).is_some_and(|v| v.is_zero()))
    }

    /// Same polynomials with each support enlarged to contain the origin.
    pub fn with_origin(&self) -> SparseSystem {
        let n = self.n();
        let o = vec![0i64; n];
        let polys = (0..n)
            .map(|i| {
                let mut t: Vec<(Point, Scalar)> = self.terms(i).map(|(a, c)| (a.clone(), c.clone())).collect();
                if !self.supports.get(i).contains(&o) {
                    t.push((o.clone(), self.field.zero()));
                }
                t
            })
            .collect();
        Self::from_terms(&self.field, n, polys).expect("augmenting keeps the system valid")
    }

    /// `self - s * other` on a common support (union of both).
    pub fn minus_scaled(&self, other: &SparseSystem, s: &Scalar) -> Result<SparseSystem> {
        let n = self.n();
        let mut polys = Vec::with_capacity(n);
        for i in 0..n {
            let mut terms: Vec<(Point, Scalar)> = self.terms(i).map(|(a, c)| (a.clone(), c.clone())).collect();
            for (a, c) in other.terms(i) {
                let sc = s * c;
                match terms.iter_mut().find(|t| &t.0 == a) {
                    Some(t) => t.1 = &t.1 - &sc,
                    None => terms.push((a.clone(), -&sc)),
                }
            }
            polys.push(terms);
        }
        Self::from_terms(&self.field, n, polys)
    }

    /// Re-express the coefficients over a larger support tuple (zeros added).
    pub fn restrict_to(&self, supports: &SupportTuple) -> Result<SparseSystem> {
        let mut coeffs = Vec::with_capacity(self.n());
        for i in 0..self.n() {
            let s = supports.get(i);
            let mut row = vec![self.field.zero(); s.len()];
            for (a, c) in self.terms(i) {
                match s.index_of(a) {
                    Some(k) => row[k] = c.clone(),
                    None if c.is_zero() => {}
                    None => return Err(Error::NotASubTuple(i)),
                }
            }
            coeffs.push(row);
        }
        SparseSystem::new(&self.field, supports.clone(), coeffs)
    }

    /// The same system with coefficients mapped into another field.
    pub fn map_field(&self, field: &Field) -> Result<SparseSystem> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(|c| lift_scalar(c, field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SparseSystem::new(field, self.supports.clone(), coeffs)
    }
}

/// Map a scalar into `field` (rationals, or prime-field elements into an extension).
pub(crate) fn lift_scalar(c: &Scalar, field: &Field) -> Result<Scalar> {
    match c {
        Scalar::Rational(q) => field.from_rational(q),
        Scalar::Finite(g) => {
            if g.field().characteristic() != field.characteristic() {
                return Err(Error::NotRepresentable(c.to_string()));
            }
            let cs = g.coefficients();
            if cs[1..].iter().any(|&x| x != 0) && g.field() != field {
                return Err(Error::NotRepresentable(c.to_string()));
            }
            if g.field() == field {
                return Ok(c.clone());
            }
            Ok(field.from_i64(cs[0] as i64))
        }
    }
}

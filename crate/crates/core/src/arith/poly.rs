//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Scalar};
use super::matrix;
use crate::error::{Error, Result};

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*t", c)?,
                _ => write!(f, "({})*t^{}", c, i)?,
            }
        }
        Ok(())
    }
}

impl UniPoly {
    pub fn new(field: &Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar, field: &Field) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field.one(), field)
    }

    /// `c * t^d`.
    pub fn monomial(c: Scalar, d: usize, field: &Field) -> Self {
        let mut v = vec![field.zero(); d];
        v.push(c);
        Self::new(field, v)
    }

    /// `a*t + b`.
    pub fn linear(a: Scalar, b: Scalar, field: &Field) -> Self {
        Self::new(field, vec![b, a])
    }

    pub fn from_i64s(field: &Field, cs: &[i64]) -> Self {
        Self::new(field, cs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().unwrap();
        self.scale(&inv)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.deg();
        let inv = d.leading().inv().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() < d.coeffs.len() {
            return (Self::zero(&self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = &r[k + j] - &(&c * dj);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(&self.field, q), Self::new(&self.field, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; errors when the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (q, r) = self.div_rem(d);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!("{} by {}", self, d)));
        }
        Ok(q)
    }

    pub fn derivative(&self) -> Self {
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| &self.field.from_i64(i as i64) * c)
            .collect();
        Self::new(&self.field, cs)
    }

    /// Composition `self(a*t + b)`.
    pub fn compose_linear(&self, a: &Scalar, b: &Scalar) -> Self {
        let lin = Self::linear(a.clone(), b.clone(), &self.field);
        let mut acc = Self::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(c.clone(), &self.field));
        }
        acc
    }

    /// Composition `self(g(t))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone(), &self.field));
        }
        acc
    }

    /// Multiplicity of `x` as a root (0 when `self(x) != 0`).
    pub fn root_multiplicity(&self, x: &Scalar) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Self::linear(self.field.one(), -x, &self.field);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return m;
            }
            m += 1;
            p = q;
        }
    }

    /// Largest power of `t` dividing the polynomial.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }
}

/// Newton interpolation through `points`, which must number `bound + 1`.
pub fn interpolate(points: &[(Scalar, Scalar)], bound: usize) -> Result<UniPoly> {
    if points.len() != bound + 1 {
        return Err(Error::NodeCount { expected: bound + 1, got: points.len() });
    }
    let field = field_of(&points[0].0);
    let xs: Vec<&Scalar> = points.iter().map(|p| &p.0).collect();
    let mut dd: Vec<Scalar> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..points.len() {
        for i in (level..points.len()).rev() {
            let den = xs[i] - xs[i - level];
            let inv = den.inv().ok_or(Error::DuplicateNode(i))?;
            dd[i] = &(&dd[i] - &dd[i - 1]) * &inv;
        }
    }
    let mut acc = UniPoly::zero(&field);
    for i in (0..points.len()).rev() {
        let lin = UniPoly::linear(field.one(), -xs[i], &field);
        acc = acc.mul(&lin).add(&UniPoly::constant(dd[i].clone(), &field));
    }
    Ok(acc)
}

/// Recover the field handle carried by a scalar (rationals get a fresh handle).
pub(crate) fn field_of(s: &Scalar) -> Field {
    match s {
        Scalar::Rational(_) => Field::rationals(),
        Scalar::Finite(g) => g.field().clone(),
    }
}

/// Monic gcd; `gcd(0, 0)` is zero.
pub fn gcd(f: &UniPoly, g: &UniPoly) -> UniPoly {
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Monic product of the distinct irreducible factors of `f`.
pub fn squarefree_part(f: &UniPoly) -> Result<UniPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(UniPoly::one(f.field()));
    }
    let d = f.derivative();
    if d.is_zero() {
        // f(t) = g(t^p): take the p-th root coefficientwise
        return squarefree_part(&pth_root(f));
    }
    let c = gcd(f, &d);
    let w = f.div_exact(&c)?.monic();
    if c.deg() == 0 {
        return Ok(w);
    }
    let rest = squarefree_part(&c)?;
    let common = gcd(&w, &rest);
    Ok(w.mul(&rest).div_exact(&common)?.monic())
}

/// For `f = g(t^p)` over GF(p^k), return `h` with `h^p = f`.
fn pth_root(f: &UniPoly) -> UniPoly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let k = field.extension_degree();
    // Frobenius has order k, so the inverse Frobenius is x -> x^(p^(k-1)).
    let e = (p as u64).pow(k - 1);
    let cs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| c.pow(e))
        .collect();
    UniPoly::new(field, cs)
}

/// `(R0, R1)`: determinants of the first-subresultant matrix with the
/// second-to-last, respectively last, column removed. When `f` and `g` share
/// exactly one root `r`, that root is `-R1/R0`.
pub fn first_subresultant(f: &UniPoly, g: &UniPoly) -> Result<(Scalar, Scalar)> {
    let (d1, d2) = (f.deg(), g.deg());
    if f.is_zero() || g.is_zero() || d1 < 2 || d2 < 2 {
        return Err(Error::DegenerateSubresultant(d1, d2));
    }
    let field = f.field().clone();
    let rows = d1 + d2 - 2;
    let cols = d1 + d2 - 1;
    let mut m = vec![vec![field.zero(); cols]; rows];
    for r in 0..d1 - 1 {
        for j in 0..=d2 {
            m[r][r + j] = g.coeff(j);
        }
    }
    for r in 0..d2 - 1 {
        for j in 0..=d1 {
            m[d1 - 1 + r][r + j] = f.coeff(j);
        }
    }
    let drop = |col: usize| -> Vec<Vec<Scalar>> {
        m.iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != col)
                    .map(|(_, c)| c.clone())
                    .collect()
            })
            .collect()
    };
    let r1 = matrix::det(&drop(cols - 1), &field);
    let r0 = matrix::det(&drop(cols - 2), &field);
    Ok((r0, r1))
}

/// Remainder of `f` modulo `h`.
pub fn quotient_reduce(f: &UniPoly, h: &UniPoly) -> Result<UniPoly> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.rem(h))
}

/// Inverse of `f` in `K[t]/(h)`.
pub fn quotient_invert(f: &UniPoly, h: &UniPoly) -> Result<UniPoly> {
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = h.field().clone();
    // extended Euclid tracking the cofactor of f
    let (mut r0, mut r1) = (h.clone(), f.rem(h));
    let (mut s0, mut s1) = (UniPoly::zero(&field), UniPoly::one(&field));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.deg() != 0 || r0.is_zero() {
        return Err(Error::not_invertible(r0.monic()));
    }
    let inv = r0.leading().inv().unwrap();
    Ok(s0.scale(&inv).rem(h))
}

/// Roots of `f` lying in its base field, with multiplicities.
///
/// Over the rationals roots are returned in increasing order; over finite
/// fields in element-enumeration order.
pub fn rational_roots(f: &UniPoly) -> Vec<(Scalar, usize)> {
    if f.is_zero() || f.deg() == 0 {
        return Vec::new();
    }
    let sf = match squarefree_part(f) {
        Ok(s) => s,
        Err(_) => return Vec::new(),
    };
    let distinct = if f.field().is_rational() {
        rational_roots_q(&sf)
    } else {
        finite_roots(&sf)
    };
    distinct
        .into_iter()
        .map(|r| {
            let m = f.root_multiplicity(&r);
            (r, m)
        })
        .collect()
}

fn finite_roots(sf: &UniPoly) -> Vec<Scalar> {
    let field = sf.field();
    let q = match field.size() {
        Some(q) => q,
        None => return Vec::new(),
    };
    // the split part gcd(f, t^q - t) tells how many roots to expect
    let t = UniPoly::monomial(field.one(), 1, field);
    let tq = powmod(&t, q, sf);
    let split = gcd(sf, &tq.sub(&t).rem(sf));
    let want = if split.is_zero() { sf.deg() } else { split.deg() };
    let mut out = Vec::new();
    if want == 0 {
        return out;
    }
    for i in 0..q {
        let x = field.element(i as u64);
        if split.eval(&x).is_zero() {
            out.push(x);
            if out.len() == want {
                break;
            }
        }
    }
    out
}

fn powmod(base: &UniPoly, mut e: u128, m: &UniPoly) -> UniPoly {
    let mut acc = UniPoly::one(m.field()).rem(m);
    let mut b = base.rem(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).rem(m);
        }
        b = b.mul(&b).rem(m);
        e >>= 1;
    }
    acc
}

/// Distinct rational roots of a square-free rational polynomial.
fn rational_roots_q(sf: &UniPoly) -> Vec<Scalar> {
    let mut out = Vec::new();
    let z = sf.trailing_zeros();
    let mut cs: Vec<BigRational> = sf
        .coeffs()
        .iter()
        .skip(z)
        .map(|c| c.as_rational().unwrap().clone())
        .collect();
    if z > 0 {
        out.push(BigRational::zero());
    }
    if cs.len() >= 2 {
        // primitive integer form
        let mut lcm = BigInt::one();
        for c in &cs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = cs
            .iter_mut()
            .map(|c| (c.clone() * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        for c in ints.iter_mut() {
            *c /= &g;
        }
        let d = ints.len() - 1;
        let lc = ints[d].clone();
        // monic g(y) = lc^(d-1) f(y/lc): coefficient of y^i is a_i * lc^(d-1-i)
        let mut mon = vec![BigInt::one(); d + 1];
        let mut pw = BigInt::one();
        for i in (0..d).rev() {
            mon[i] = &ints[i] * &pw;
            pw *= &lc;
        }
        for y in integer_roots_monic(&mon) {
            out.push(BigRational::new(y, lc.clone()));
        }
    }
    out.sort();
    out.into_iter().map(Scalar::Rational).collect()
}

fn eval_int(cs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in cs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Integer roots of a square-free monic integer polynomial, via Sturm bisection.
fn integer_roots_monic(cs: &[BigInt]) -> Vec<BigInt> {
    let q = Field::rationals();
    let to_poly = |v: &[BigInt]| {
        UniPoly::new(
            &q,
            v.iter().map(|c| Scalar::Rational(BigRational::from_integer(c.clone()))).collect(),
        )
    };
    let f = to_poly(cs);
    let mut seq = vec![f.clone(), f.derivative()];
    while !seq.last().unwrap().is_zero() {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&q.from_i64(-1)));
    }
    let changes = |x: &BigInt| -> usize {
        let xs = Scalar::Rational(BigRational::from_integer(x.clone()));
        let mut last = 0i8;
        let mut n = 0;
        for p in &seq {
            let v = p.eval(&xs);
            let s = match v.as_rational().unwrap() {
                r if r.is_positive() => 1,
                r if r.is_negative() => -1,
                _ => 0,
            };
            if s != 0 {
                if last != 0 && s != last {
                    n += 1;
                }
                last = s;
            }
        }
        n
    };
    let bound = cs[..cs.len() - 1]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        + BigInt::one();
    let mut out = Vec::new();
    // intervals (a, b] with integer endpoints
    let mut stack = vec![(-bound.clone(), bound.clone(), changes(&-bound.clone()), changes(&bound))];
    while let Some((a, b, va, vb)) = stack.pop() {
        if va <= vb {
            continue;
        }
        if &b - &a == BigInt::one() {
            if eval_int(cs, &b).is_zero() {
                out.push(b);
            }
            continue;
        }
        let m: BigInt = (&a + &b).div_floor(&BigInt::from(2));
        let vm = changes(&m);
        stack.push((a, m.clone(), va, vm));
        stack.push((m, b, vm, vb));
    }
    out
}

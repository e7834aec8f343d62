//! Exact scalar fields: the rationals, prime fields and their extensions.
//!
//! A [`Field`] is a cheap handle onto an immutable [`FieldDesc`]. Finite-field
//! scalars carry their handle, so arithmetic on [`Scalar`] needs no context.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Description of a field: the rationals (characteristic 0) or GF(p^k).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldDesc {
    pub characteristic: u64,
    pub extension_degree: u32,
    /// Monic defining polynomial over GF(p), lowest degree first, length k+1.
    /// Empty for the rationals and for prime fields.
    pub modulus: Vec<u64>,
}

/// Shared handle onto a [`FieldDesc`].
#[derive(Clone)]
pub struct Field(Arc<FieldDesc>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.0.characteristic, self.0.extension_degree) {
            (0, _) => write!(f, "Q"),
            (p, 1) => write!(f, "GF({})", p),
            (p, k) => write!(f, "GF({}^{})", p, k),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldDesc {
            characteristic: 0,
            extension_degree: 1,
            modulus: Vec::new(),
        }))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{} is not prime", p)));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("prime {} too large", p)));
        }
        Ok(Field(Arc::new(FieldDesc {
            characteristic: p,
            extension_degree: 1,
            modulus: Vec::new(),
        })))
    }

    /// GF(p^k) with the first irreducible monic modulus in increment order.
    pub fn extension(p: u64, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be positive".into()));
        }
        if k == 1 {
            return Self::prime(p);
        }
        Self::prime(p)?;
        let k = k as usize;
        // counter over the k low coefficients; modulus is monic
        let mut low = vec![0u64; k];
        loop {
            let mut m = low.clone();
            m.push(1);
            if m[0] != 0 && is_irreducible_mod_p(&m, p) {
                return Ok(Field(Arc::new(FieldDesc {
                    characteristic: p,
                    extension_degree: k as u32,
                    modulus: m,
                })));
            }
            let mut i = 0;
            loop {
                if i == k {
                    return Err(Error::InvalidField(format!(
                        "no irreducible polynomial of degree {} over GF({})",
                        k, p
                    )));
                }
                low[i] += 1;
                if low[i] == p {
                    low[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    /// Build from a descriptor, validating the modulus when one is given.
    pub fn from_desc(desc: FieldDesc) -> Result<Self> {
        match desc.characteristic {
            0 => Ok(Self::rationals()),
            p => {
                if desc.extension_degree <= 1 {
                    return Self::prime(p);
                }
                if desc.modulus.is_empty() {
                    return Self::extension(p, desc.extension_degree);
                }
                Self::prime(p)?;
                let m = &desc.modulus;
                if m.len() != desc.extension_degree as usize + 1
                    || *m.last().unwrap() != 1
                    || m.iter().any(|&c| c >= p)
                    || !is_irreducible_mod_p(m, p)
                {
                    return Err(Error::InvalidField("modulus is not a monic irreducible".into()));
                }
                Ok(Field(Arc::new(desc)))
            }
        }
    }

    pub fn desc(&self) -> &FieldDesc {
        &self.0
    }

    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.extension_degree
    }

    pub fn is_rational(&self) -> bool {
        self.0.characteristic == 0
    }

    /// Number of elements, if finite and representable.
    pub fn size(&self) -> Option<u128> {
        if self.is_rational() {
            return None;
        }
        (self.0.characteristic as u128).checked_pow(self.0.extension_degree)
    }

    pub fn zero(&self) -> Scalar {
        if self.is_rational() {
            Scalar::Rational(BigRational::zero())
        } else {
            Scalar::Finite(Gf {
                field: self.clone(),
                c: vec![0; self.0.extension_degree as usize],
            })
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        if self.is_rational() {
            Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
        } else {
            let p = self.0.characteristic as i128;
            let r = ((v as i128 % p) + p) % p;
            let mut c = vec![0; self.0.extension_degree as usize];
            c[0] = r as u64;
            Scalar::Finite(Gf { field: self.clone(), c })
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        if self.is_rational() {
            Scalar::Rational(BigRational::from_integer(v.clone()))
        } else {
            let p = BigInt::from(self.0.characteristic);
            let mut r = v % &p;
            if r.is_negative() {
                r += &p;
            }
            let mut c = vec![0; self.0.extension_degree as usize];
            c[0] = r.to_u64().unwrap();
            Scalar::Finite(Gf { field: self.clone(), c })
        }
    }

    /// Map a rational number into the field; fails if the denominator vanishes mod p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        if self.is_rational() {
            return Ok(Scalar::Rational(q.clone()));
        }
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        match den.inv() {
            Some(d) => Ok(&num * &d),
            None => Err(Error::NotRepresentable(q.to_string())),
        }
    }

    /// The `i`-th element in a fixed enumeration: base-p digits of `i` as the
    /// coefficient vector (finite fields), or the integer `i` (rationals).
    pub fn element(&self, i: u64) -> Scalar {
        if self.is_rational() {
            return self.from_i64(i as i64);
        }
        let p = self.0.characteristic;
        let k = self.0.extension_degree as usize;
        let mut c = vec![0; k];
        let mut rest = i;
        for slot in c.iter_mut() {
            *slot = rest % p;
            rest /= p;
        }
        Scalar::Finite(Gf { field: self.clone(), c })
    }

    /// Distinct nodes `node(0) = 0, node(1), ...`; `None` once the field runs out.
    pub fn node(&self, i: usize) -> Option<Scalar> {
        match self.size() {
            Some(q) if (i as u128) >= q => None,
            _ => Some(self.element(i as u64)),
        }
    }

    /// Parse a decimal rational (`"-5"`, `"1/7"`) or a coefficient tuple
    /// `"(c0,c1,...)"` for extension fields.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        if t.starts_with('(') && t.ends_with(')') {
            if self.is_rational() {
                return Err(Error::NotRepresentable(s.to_string()));
            }
            let parts: Vec<&str> = t[1..t.len() - 1].split(',').collect();
            let k = self.0.extension_degree as usize;
            if parts.len() != k {
                return Err(Error::NotRepresentable(s.to_string()));
            }
            let p = self.0.characteristic as i128;
            let mut c = Vec::with_capacity(k);
            for part in parts {
                let v: i128 = part
                    .trim()
                    .parse()
                    .map_err(|_| Error::NotRepresentable(s.to_string()))?;
                c.push((((v % p) + p) % p) as u64);
            }
            return Ok(Scalar::Finite(Gf { field: self.clone(), c }));
        }
        let q = parse_rational(t).ok_or_else(|| Error::NotRepresentable(s.to_string()))?;
        self.from_rational(&q)
    }
}

pub(crate) fn parse_rational(t: &str) -> Option<BigRational> {
    let t = t.trim().replace('\u{2212}', "-");
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim().to_string(), d.trim().to_string()),
        None => (t.to_string(), "1".to_string()),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Element of GF(p^k): coefficient vector modulo the field's modulus.
#[derive(Clone)]
pub struct Gf {
    field: Field,
    c: Vec<u64>,
}

impl Gf {
    pub fn coefficients(&self) -> &[u64] {
        &self.c
    }
    pub fn field(&self) -> &Field {
        &self.field
    }
}

/// An exact field element.
#[derive(Clone)]
pub enum Scalar {
    Rational(BigRational),
    Finite(Gf),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Finite(a), Scalar::Finite(b)) => a.c == b.c,
            _ => false,
        }
    }
}
impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Finite(g) => {
                if g.c.len() == 1 {
                    write!(f, "{}", g.c[0])
                } else {
                    let parts: Vec<String> = g.c.iter().map(|c| c.to_string()).collect();
                    write!(f, "({})", parts.join(","))
                }
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Multiply two residues modulo a monic modulus over GF(p).
fn gf_mul(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = a.len();
    if modulus.is_empty() {
        return vec![mulmod(a[0], b[0], p)];
    }
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mulmod(x, y, p)) % p;
        }
    }
    for d in (k..prod.len()).rev() {
        let lead = prod[d];
        if lead == 0 {
            continue;
        }
        for (j, &m) in modulus.iter().enumerate().take(k) {
            let idx = d - k + j;
            prod[idx] = (prod[idx] + p - mulmod(lead, m, p)) % p;
        }
        prod[d] = 0;
    }
    prod.truncate(k);
    prod
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Finite(g) => g.c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Finite(g) => g.c[0] == 1 && g.c[1..].iter().all(|&x| x == 0),
        }
    }

    pub fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::zero()),
            Scalar::Finite(g) => g.field.zero(),
        }
    }

    pub fn one_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::one()),
            Scalar::Finite(g) => g.field.one(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Finite(_) => None,
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Finite(g) => {
                let q = g.field.size().expect("field size fits u128");
                Some(self.pow((q - 2) as u64))
            }
        }
    }

    /// `self / other`; panics on division by zero.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv().expect("division by zero scalar")
    }

    fn binop(&self, other: &Scalar, sign: i8) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => {
                Scalar::Rational(if sign > 0 { a + b } else { a - b })
            }
            (Scalar::Finite(a), Scalar::Finite(b)) => {
                let p = a.field.characteristic();
                let c = a
                    .c
                    .iter()
                    .zip(&b.c)
                    .map(|(&x, &y)| if sign > 0 { (x + y) % p } else { (x + p - y) % p })
                    .collect();
                Scalar::Finite(Gf { field: a.field.clone(), c })
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, 1)
    }
}
impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.binop(rhs, -1)
    }
}
impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Finite(a), Scalar::Finite(b)) => {
                let f = a.field.desc();
                Scalar::Finite(Gf {
                    field: a.field.clone(),
                    c: gf_mul(&a.c, &b.c, &f.modulus, f.characteristic),
                })
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }
}
impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        &self.zero_like() - self
    }
}
impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}
impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}
impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}
impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// --- polynomials over GF(p) used only for modulus selection ---

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
}

fn fp_inv(a: u64, p: u64) -> u64 {
    let mut r = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = fp_inv(m[dm], p);
    while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = mulmod(r[dr], lead_inv, p);
        for (j, &mj) in m.iter().enumerate() {
            let idx = dr - dm + j;
            r[idx] = (r[idx] + p - mulmod(c, mj, p)) % p;
        }
        trim(&mut r);
        if r.len() - 1 < dm || (r.len() == 1 && r[0] == 0) {
            break;
        }
    }
    r
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !(y.len() == 1 && y[0] == 0) {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mulmod(x, y, p)) % p;
        }
    }
    fp_rem(&prod, m, p)
}

/// Ben-Or irreducibility test: gcd(x^(p^i) - x, f) = 1 for all i <= deg/2.
pub(crate) fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let mut xp = vec![0, 1]; // x
    for _ in 1..=d / 2 {
        // xp <- xp^p mod f
        let mut acc = vec![1u64];
        let mut base = xp.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_mulmod(&acc, &base, f, p);
            }
            base = fp_mulmod(&base, &base, f, p);
            e >>= 1;
        }
        xp = acc;
        let mut diff = xp.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        trim(&mut diff);
        let g = fp_gcd(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!(a.inv().unwrap(), f.from_i64(5));
        assert_eq!(-&a, f.from_i64(4));
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(Field::prime(9).is_err());
        assert!(Field::extension(6, 2).is_err());
    }

    #[test]
    fn gf4_contains_root_of_x2_x_1() {
        let f = Field::extension(2, 2).unwrap();
        assert_eq!(f.desc().modulus, vec![1, 1, 1]);
        let roots: Vec<Scalar> = (0..4)
            .map(|i| f.element(i))
            .filter(|a| (&(a * a) + a).is_one())
            .collect();
        assert_eq!(roots.len(), 2);
    }

    #[test]
    fn extension_multiplicative_group_order() {
        let f = Field::extension(3, 3).unwrap();
        let q = f.size().unwrap() as u64;
        for i in 1..q {
            let a = f.element(i);
            assert!(a.pow(q - 1).is_one());
            assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rational_denominator_mod_p() {
        let f = Field::prime(5).unwrap();
        let half = f.parse("1/2").unwrap();
        assert_eq!(&half * &f.from_i64(2), f.one());
        assert!(f.parse("1/5").is_err());
        let q = Field::rationals();
        assert_eq!(q.parse("-10/4").unwrap().to_string(), "-5/2");
    }
}

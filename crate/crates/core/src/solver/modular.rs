//! Steps 4-5 over ℚ by reduction modulo word-size primes.
//!
//! Rational subresultants and inverses modulo `h` suffer from coefficient
//! growth. The same computation over GF(p) is cheap, so `h_i` is computed
//! modulo many primes, combined by CRT and lifted by rational
//! reconstruction. A candidate is accepted only after the exact checks over ℚ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{check_coordinate, coordinate_map};
use crate::arith::{gcd, Field, Scalar, UniPoly};
use crate::error::Result;

/// Consecutive primes with a non-invertible `R_0` before `u` is declared
/// non-generic.
const MAX_MISSES: usize = 6;
/// Hard cap on primes per coordinate (about 19000 bits of modulus).
const MAX_PRIMES: usize = 600;

fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 30..1u64 << 31).rev().filter(|&p| crate::arith::is_prime(p))
}

fn reduce_scalar(c: &Scalar, fp: &Field) -> Option<Scalar> {
    fp.from_rational(c.as_rational()?).ok()
}

/// `f mod p`, provided no denominator or leading coefficient vanishes.
fn reduce(f: &UniPoly, fp: &Field) -> Option<UniPoly> {
    let cs = f.coeffs().iter().map(|c| reduce_scalar(c, fp)).collect::<Option<Vec<_>>>()?;
    let r = UniPoly::new(fp, cs);
    (r.degree() == f.degree()).then_some(r)
}

fn residue(c: &Scalar) -> u64 {
    match c {
        Scalar::Finite(g) => g.coefficients()[0],
        Scalar::Rational(_) => unreachable!("residues live in a prime field"),
    }
}

/// Smallest `n/d` with `n ≡ a d (mod m)` and `|n|, d ≤ sqrt(m/2)`.
fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

/// Residues of each coefficient modulo the product of the primes seen so far.
struct Crt {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl Crt {
    fn new(len: usize) -> Self {
        Crt { modulus: BigInt::one(), values: vec![BigInt::zero(); len] }
    }

    fn add(&mut self, p: u64, residues: &[u64]) {
        let pb = BigInt::from(p);
        // m^{-1} mod p
        let inv = (&self.modulus % &pb).modpow(&BigInt::from(p - 2), &pb);
        for (x, &r) in self.values.iter_mut().zip(residues) {
            let diff = (BigInt::from(r) - (&*x % &pb)).mod_floor(&pb);
            let k = (diff * &inv) % &pb;
            *x += &self.modulus * k;
        }
        self.modulus *= pb;
    }

    fn reconstruct(&self) -> Option<Vec<BigRational>> {
        self.values.iter().map(|x| rational_reconstruct(x, &self.modulus)).collect()
    }
}

/// `h_i` over ℚ from the squarefree slices, or `None` when `u` is not generic.
pub(super) fn coordinate_map_q(
    qm: &UniPoly,
    qa: &UniPoly,
    sf: &UniPoly,
    alpha: &Scalar,
    c: &Scalar,
) -> Result<Option<UniPoly>> {
    let q = sf.field().clone();
    let n = sf.deg();
    let mut crt = Crt::new(n);
    let mut last: Option<Vec<BigRational>> = None;
    let mut misses = 0;
    for p in primes().take(MAX_PRIMES) {
        let fp = Field::prime(p)?;
        let (Some(qm_p), Some(qa_p), Some(sf_p), Some(a_p), Some(c_p)) =
            (reduce(qm, &fp), reduce(qa, &fp), reduce(sf, &fp), reduce_scalar(alpha, &fp), reduce_scalar(c, &fp))
        else {
            continue;
        };
        if c_p.is_zero() || gcd(&sf_p, &sf_p.derivative()).deg() > 0 || gcd(&qm_p, &qm_p.derivative()).deg() > 0 {
            continue;
        }
        let Some(h_p) = coordinate_map(&qm_p, &qa_p, &sf_p, &a_p, &c_p)? else {
            misses += 1;
            if misses >= MAX_MISSES {
                return Ok(None);
            }
            continue;
        };
        misses = 0;
        let res: Vec<u64> = (0..n).map(|k| residue(&h_p.coeff(k))).collect();
        crt.add(p, &res);
        let Some(cand) = crt.reconstruct() else { continue };
        if last.as_ref() == Some(&cand) {
            let h = UniPoly::new(&q, cand.iter().cloned().map(Scalar::Rational).collect());
            if check_coordinate(sf, &h, qm, qa, &(alpha * c), c) {
                return Ok(Some(h));
            }
        }
        last = Some(cand);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reconstruction_round_trip() {
        let want = BigRational::new(BigInt::from(-1234), BigInt::from(5678));
        let mut crt = Crt::new(1);
        for p in [1_000_000_007u64, 998_244_353] {
            let f = Field::prime(p).unwrap();
            crt.add(p, &[residue(&f.from_rational(&want).unwrap())]);
        }
        assert_eq!(crt.reconstruct().unwrap(), vec![want]);
    }

    #[test]
    fn reconstruction_rejects_too_few_digits() {
        let want = BigRational::new(BigInt::from(123_456_789_012i64), BigInt::from(7));
        let mut crt = Crt::new(1);
        let p = 1_000_000_007u64;
        crt.add(p, &[residue(&Field::prime(p).unwrap().from_rational(&want).unwrap())]);
        assert_ne!(crt.reconstruct(), Some(vec![want]));
    }
}

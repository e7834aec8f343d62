//! Resultant matrices, Division-Method evaluation and a persistent matrix cache.

mod cache;
mod matrix;
mod pencil;

pub use cache::{cache_key, cache_load, cache_store, MatrixCache};
pub use matrix::{build_matrix, build_matrix_retrying, ResultantMatrix};
pub use pencil::Pencil;

use crate::arith::{Field, Scalar};
use crate::error::{Error, Result};
use crate::system::CoeffAssignment;

/// `det M / det M'` at the given coefficients: the resultant up to a
/// constant fixed by the matrix build.
pub fn eval_resultant(m: &ResultantMatrix, c: &CoeffAssignment, field: &Field) -> Result<Scalar> {
    let (num, den) = m.dets(c, field);
    if den.is_zero() {
        return Err(Error::ExtraneousVanished);
    }
    Ok(num.div(&den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{interpolate, UniPoly};
    use crate::geometry::{mixed_volume, Support, SupportTuple};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sup(n: usize, pts: &[&[i64]]) -> Support {
        Support::new(n, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn random_coeffs(e: &SupportTuple, f: &Field, rng: &mut ChaCha8Rng) -> Vec<Vec<Scalar>> {
        e.supports()
            .iter()
            .map(|s| (0..s.len()).map(|_| f.from_i64(rng.gen_range(-20..=20))).collect())
            .collect()
    }

    /// `det M / det M'` is a polynomial of multidegree `(MV(E_{-i}))_i`.
    fn check_quotient(e: &SupportTuple) {
        for seed in [0u64, 100, 200] {
            check_quotient_seed(e, seed);
        }
    }

    fn check_quotient_seed(e: &SupportTuple, seed: u64) {
        let q = Field::prime(1_000_003).unwrap();
        let m = build_matrix_retrying(e, seed, 16).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mvs: Vec<u64> = (0..e.len()).map(|i| mixed_volume(&e.without(i)).unwrap()).collect();
        for i in 0..e.len() {
            assert!(m.rows_for(i) as u64 >= mvs[i]);
        }
        // homogeneity per group
        let base = random_coeffs(e, &q, &mut rng);
        let r1 = eval_resultant(&m, &CoeffAssignment::new(e, base.clone()).unwrap(), &q).unwrap();
        assert!(!r1.is_zero());
        for i in 0..e.len() {
            let mut c = base.clone();
            c[i] = c[i].iter().map(|x| x * &q.from_i64(2)).collect();
            let r2 = eval_resultant(&m, &CoeffAssignment::new(e, c).unwrap(), &q).unwrap();
            assert_eq!(r2, &r1 * &q.from_i64(2).pow(mvs[i]), "group {i}");
        }
        // exact division along a line
        let dir = random_coeffs(e, &q, &mut rng);
        let s = m.size();
        let (mut nums, mut dens) = (Vec::new(), Vec::new());
        for t in 0..=s as i64 {
            let tt = q.from_i64(t);
            let c: Vec<Vec<Scalar>> = base
                .iter()
                .zip(&dir)
                .map(|(b, d)| b.iter().zip(d).map(|(x, y)| x + &(&tt * y)).collect())
                .collect();
            let (a, b) = m.dets(&CoeffAssignment::new(e, c).unwrap(), &q);
            nums.push((tt.clone(), a));
            dens.push((tt, b));
        }
        let num: UniPoly = interpolate(&nums, s).unwrap();
        let den: UniPoly = interpolate(&dens, s).unwrap();
        let quo = num.div_exact(&den).unwrap();
        assert_eq!(quo.deg() as u64, mvs.iter().sum::<u64>());
    }

    #[test]
    fn sylvester_degrees() {
        check_quotient(&SupportTuple::new(1, vec![Support::simplex(1, 2), Support::simplex(1, 3)]).unwrap());
    }

    #[test]
    fn conics_and_line() {
        let c = Support::simplex(2, 2);
        check_quotient(&SupportTuple::new(2, vec![c.clone(), c, Support::simplex(2, 1)]).unwrap());
    }

    #[test]
    fn sparse_plane_system_with_linear_form() {
        let e = sup(2, &[&[0, 0], &[1, 0], &[2, 1], &[1, 1], &[2, 0], &[3, 1]]);
        check_quotient(&SupportTuple::new(2, vec![e.clone(), e, Support::simplex(2, 1)]).unwrap());
    }

    #[test]
    fn unmixed_squares() {
        let b = Support::lattice_box(&[1, 1]);
        check_quotient(&SupportTuple::new(2, vec![b.clone(), b.clone(), b]).unwrap());
    }

    #[test]
    fn cube_fill_with_linear_form() {
        let e1 = sup(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let e2 = sup(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let e3 = sup(3, &[&[0, 0, 0], &[1, 1, 1]]);
        check_quotient(&SupportTuple::new(3, vec![e1, e2, e3, Support::simplex(3, 1)]).unwrap());
    }

    #[test]
    fn non_simplex_last_support() {
        let e = sup(3, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0], &[1, 1, 1]]);
        let d = Support::simplex(3, 1);
        check_quotient(&SupportTuple::new(3, vec![d.clone(), d, e.clone(), e]).unwrap());
    }
}

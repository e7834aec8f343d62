//! Essential subsets, the combinatorial positivity test for mixed volumes,
//! and repair of tuples whose mixed volume vanishes.

use super::{dim_of_sum, Point, Support, SupportTuple};
use crate::error::{Error, Result};

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&j| mask >> j & 1 == 1).collect()
}

fn dim_of_mask(c: &SupportTuple, mask: u32) -> usize {
    let sel: Vec<&Support> = members(mask, c.len()).into_iter().map(|j| c.get(j)).collect();
    dim_of_sum(&sel)
}

/// All essential subsets `J` (as sorted 0-based index lists), in increasing
/// bitmask order. Empty entries are permitted and never belong to `J`.
pub fn essential_subsets(c: &SupportTuple) -> Vec<Vec<usize>> {
    let n = c.len();
    assert!(n < 32, "too many supports for subset enumeration");
    let supp: u32 = c.supp().iter().fold(0, |m, &j| m | 1 << j);
    let dims: Vec<usize> = (0..1u32 << n).map(|m| if m & !supp == 0 { dim_of_mask(c, m) } else { 0 }).collect();
    let mut out = Vec::new();
    for mask in 1..1u32 << n {
        if mask & !supp != 0 {
            continue;
        }
        let k = mask.count_ones() as usize;
        if dims[mask as usize] + 1 != k {
            continue;
        }
        // every proper nonempty submask must be deficiency-free
        let mut ok = true;
        let mut sub = (mask - 1) & mask;
        while sub > 0 {
            if dims[sub as usize] < sub.count_ones() as usize {
                ok = false;
                break;
            }
            sub = (sub - 1) & mask;
        }
        if ok {
            out.push(members(mask, n));
        }
    }
    out
}

/// `M(E) > 0`, decided combinatorially (no essential subset exists).
pub fn mixed_volume_positive(e: &SupportTuple) -> bool {
    e.len() == e.dim() && e.supp().len() == e.len() && essential_subsets(e).is_empty()
}

/// `Σ_J max(0, #J - dim Σ_J E_j)` over nonempty `J` contained in `prefix`.
fn deficiency(e: &SupportTuple, prefix: usize) -> usize {
    (1..1u32 << prefix)
        .map(|m| (m.count_ones() as usize).saturating_sub(dim_of_mask(e, m)))
        .sum()
}

/// Points `p_i` (or `None` where nothing is needed) such that adding `p_i` to
/// `E_i` makes the mixed volume positive. Candidates are `a_i + v` for the
/// lexicographically smallest `a_i ∈ E_i`, with `v` running over the unit
/// vectors and then moment vectors `(1, t, t^2, ...)`.
pub fn repair_support(e: &SupportTuple) -> Result<Vec<Option<Point>>> {
    let n = e.dim();
    if e.len() != n {
        return Err(Error::ArityError { expected: n, got: e.len(), dim: n });
    }
    if e.supp().len() != n {
        return Err(Error::BadSupport("every support must be nonempty".into()));
    }
    if mixed_volume_positive(e) {
        return Err(Error::NothingToRepair);
    }
    let mut cur = e.clone();
    let mut added = vec![None; n];
    for i in 0..n {
        let before_total = deficiency(&cur, n);
        if before_total == 0 {
            break;
        }
        let base = cur.get(i).lex_min().clone();
        let mut best: Option<(usize, Point)> = None;
        let units = (0..n).map(|k| (0..n).map(|j| (j == k) as i64).collect::<Vec<i64>>());
        let moments = (1..=(n * cur.total_points() + n + 2) as i64)
            .map(|t| (0..n as u32).map(|j| t.pow(j)).collect::<Vec<i64>>());
        for v in units.chain(moments) {
            let p: Point = base.iter().zip(&v).map(|(a, b)| a + b).collect();
            if cur.get(i).contains(&p) {
                continue;
            }
            let trial = cur.replace(i, cur.get(i).with_point(&p));
            if deficiency(&trial, i + 1) != 0 {
                continue;
            }
            let gain = before_total - deficiency(&trial, n);
            if best.as_ref().is_none_or(|(g, _)| gain > *g) {
                best = Some((gain, p));
            }
            // unit vectors are tried first; a moment vector is only a fallback
            if v.iter().filter(|&&x| x != 0).count() > 1 && best.is_some() {
                break;
            }
        }
        match best {
            Some((gain, p)) if gain > 0 || deficiency(&cur, i + 1) != 0 => {
                cur = cur.replace(i, cur.get(i).with_point(&p));
                added[i] = Some(p);
            }
            _ => {}
        }
    }
    debug_assert!(mixed_volume_positive(&cur));
    Ok(added)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::mixed_volume;

    fn tuple(sets: Vec<Vec<Point>>) -> SupportTuple {
        SupportTuple::from_points(2, sets).unwrap()
    }

    #[test]
    fn figure_panels() {
        let two_points = tuple(vec![vec![vec![0, 0]], vec![vec![1, 0]]]);
        assert_eq!(essential_subsets(&two_points), vec![vec![0], vec![1]]);
        let point_segment = tuple(vec![vec![vec![0, 0]], vec![vec![1, 0], vec![2, 1]]]);
        assert_eq!(essential_subsets(&point_segment), vec![vec![0]]);
        let parallel = tuple(vec![vec![vec![0, 0], vec![1, 1]], vec![vec![2, 0], vec![3, 1]]]);
        assert_eq!(essential_subsets(&parallel), vec![vec![0, 1]]);
        let crossing = tuple(vec![vec![vec![0, 1], vec![1, 0]], vec![vec![2, 0], vec![2, 1]]]);
        assert!(essential_subsets(&crossing).is_empty());
        assert!(mixed_volume_positive(&crossing));
        assert!(!mixed_volume_positive(&parallel));
    }

    #[test]
    fn repair_examples() {
        let parallel = tuple(vec![vec![vec![0, 0], vec![1, 0]], vec![vec![0, 1], vec![1, 1]]]);
        assert_eq!(repair_support(&parallel).unwrap(), vec![Some(vec![0, 1]), None]);
        let points = tuple(vec![vec![vec![0, 0]], vec![vec![0, 0]]]);
        let add = repair_support(&points).unwrap();
        assert_eq!(add, vec![Some(vec![1, 0]), Some(vec![0, 1])]);
        let fixed = SupportTuple::new(
            2,
            vec![points.get(0).with_point(&[1, 0]), points.get(1).with_point(&[0, 1])],
        )
        .unwrap();
        assert_eq!(mixed_volume(&fixed).unwrap(), 1);
        let simplex = SupportTuple::new(2, vec![Support::simplex(2, 1), Support::simplex(2, 1)]).unwrap();
        assert!(matches!(repair_support(&simplex), Err(Error::NothingToRepair)));
    }
}

//! Cover separation by dynamic programming over the capacity range.
//!
//! A violated cover inequality exists exactly when some cover C has
//! sum of (1 - x_i) over C strictly below 1. The DP computes, for every
//! saturated weight level up to b+1, the cheapest such sum; level b+1
//! stands for "any weight above b". Pseudo-polynomial in the capacity,
//! exact in the point.

use crate::cuts::{build_cut, Certificate};
use crate::error::{Error, Result};
use crate::families::minimize_cover;
use crate::model::{KnapsackRow, Point};
use crate::oracles::Scaled;
use crate::separators::{SeparationResult, SeparationStats};
use crate::Int;
use num::{ToPrimitive, Zero};

/// Largest capacity the DP will allocate value states for.
const DP_STATE_LIMIT: u64 = 1 << 22;
/// Largest item-by-level bit table the reconstruction will allocate.
const DP_BIT_LIMIT: u64 = 1 << 28;

/// Decides whether any cover inequality is violated at `x`, and returns one
/// built from a cheapest cover found by the DP, shrunk to a minimal cover by
/// dropping removable columns with the smallest point value first.
///
/// Items enter the DP in index order and improvements are kept only when
/// strictly cheaper, so the outcome is deterministic. Zero-weight columns
/// never help a cover and are skipped.
///
/// Reconstruction walks a changed-this-pass bit per (item, level) rather
/// than parent pointers: a parent entry can be overwritten by a later
/// improvement of its level, and a chain through stale entries may reuse
/// an item. The bit table pins each level's value to the pass that set it,
/// which a backward walk can replay exactly.
pub fn separate_ci_dp(row: &KnapsackRow, x: &Point) -> Result<SeparationResult> {
    if x.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: x.n() });
    }
    let n = row.n();
    let mut stats = SeparationStats::default();
    let total: Int = (0..n).map(|i| row.weight(i)).sum();
    if total <= *row.capacity() {
        return Ok(SeparationResult::no(stats));
    }
    let cap = row
        .capacity()
        .to_u64()
        .filter(|b| b + 1 <= DP_STATE_LIMIT)
        .ok_or_else(|| {
            Error::TooLarge(format!(
                "cover DP allocates capacity+2 states and supports capacity <= {}",
                DP_STATE_LIMIT - 1
            ))
        })? as usize
        + 1;
    let levels = cap + 1;

    // (column, step) for the columns that can enter a cover.
    let items: Vec<(usize, usize)> = (0..n)
        .filter(|&i| !row.weight(i).is_zero())
        .map(|i| (i, row.weight(i).to_u64().map(|w| w as usize).unwrap_or(cap).min(cap)))
        .collect();
    if (items.len() as u64) * (levels as u64) > DP_BIT_LIMIT {
        return Err(Error::TooLarge(format!(
            "cover DP reconstruction table needs {} bits and supports at most {}",
            items.len() * levels,
            DP_BIT_LIMIT
        )));
    }

    let scaled = Scaled::new(x);
    // dist[w] = cheapest sum of (1 - x_i), scaled by the common denominator,
    // over sets of exact weight w; w = cap collects everything at or above
    // b+1. changed[pos * levels + w] marks that item pos improved level w;
    // cap_from[pos] is the read level of that item's last improvement of the
    // saturated bucket, the one its final value came from.
    let mut dist: Vec<Option<Int>> = vec![None; levels];
    dist[0] = Some(Int::zero());
    let mut changed = vec![0u64; (items.len() * levels).div_ceil(64)];
    let mut cap_from = vec![u32::MAX; items.len()];
    for (pos, &(i, step)) in items.iter().enumerate() {
        let cost = &scaled.den - &scaled.num[i];
        for w in (0..cap).rev() {
            let Some(d) = dist[w].clone() else { continue };
            let w2 = (w + step).min(cap);
            let cand = d + &cost;
            let better = match &dist[w2] {
                None => true,
                Some(cur) => cand < *cur,
            };
            if better {
                stats.candidates += 1;
                dist[w2] = Some(cand);
                let bit = pos * levels + w2;
                changed[bit / 64] |= 1u64 << (bit % 64);
                if w2 == cap {
                    cap_from[pos] = w as u32;
                }
            }
        }
    }

    let Some(best) = dist[cap].clone() else {
        return Ok(SeparationResult::no(stats));
    };
    if best >= scaled.den {
        return Ok(SeparationResult::no(stats));
    }

    // Backward replay: at (pos, w), a set bit means the value of level w
    // was written by item pos reading the pre-pass level w - step (or
    // cap_from for the saturated bucket); a clear bit means the value
    // predates this pass. Either way the walk keeps tracking one value.
    let mut cover = Vec::new();
    let mut w = cap;
    for (pos, &(i, step)) in items.iter().enumerate().rev() {
        let bit = pos * levels + w;
        if changed[bit / 64] >> (bit % 64) & 1 == 1 {
            cover.push(i);
            w = if w == cap { cap_from[pos] as usize } else { w - step };
        }
    }
    debug_assert_eq!(w, 0, "cover chain must end at the empty set");
    cover.sort_unstable();
    let cover = minimize_cover(row, &cover, x)?;
    let cut = build_cut(row, &Certificate::Cover { cover })?;
    Ok(SeparationResult::yes(cut, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::violation;
    use crate::model::Point;
    use crate::rat;

    fn point(coords: Vec<crate::Rat>) -> Point {
        Point::new(coords)
    }

    #[test]
    fn finds_cheapest_cover_and_minimizes() {
        let row = KnapsackRow::from_u64(&[2, 3, 4], 6);
        let x = point(vec![rat(0, 1), rat(9, 10), rat(4, 5)]);
        let res = separate_ci_dp(&row, &x).unwrap();
        let cut = res.cut.expect("violated cover");
        assert_eq!(cut.certificate, Certificate::Cover { cover: vec![1, 2] });
        assert_eq!(violation(&cut, &x).unwrap(), rat(7, 10));
    }

    #[test]
    fn no_cover_when_everything_fits() {
        let row = KnapsackRow::from_u64(&[2, 3, 4], 20);
        let x = point(vec![rat(1, 1), rat(1, 1), rat(1, 1)]);
        let res = separate_ci_dp(&row, &x).unwrap();
        assert!(!res.decision);
    }

    #[test]
    fn binary_feasible_point_yields_no_cut() {
        let row = KnapsackRow::from_u64(&[2, 3, 4], 6);
        let x = point(vec![rat(1, 1), rat(0, 1), rat(1, 1)]);
        let res = separate_ci_dp(&row, &x).unwrap();
        assert!(!res.decision, "feasible 0-1 points violate no valid cut");
    }

    #[test]
    fn cover_through_forced_heavy_column() {
        // Every cover must include the last column; the DP must still find
        // the violation caused by its fractional value.
        let row = KnapsackRow::from_u64(&[2, 4, 5, 6, 7, 20], 30);
        let x = point(vec![
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(3, 10),
        ]);
        let res = separate_ci_dp(&row, &x).unwrap();
        let cut = res.cut.expect("violated cover");
        assert_eq!(cut.certificate, Certificate::Cover { cover: vec![3, 4, 5] });
        assert_eq!(violation(&cut, &x).unwrap(), rat(3, 10));
    }

    #[test]
    fn zero_point_never_separates() {
        let row = KnapsackRow::from_u64(&[5, 6, 7], 10);
        let x = Point::zeros(3);
        assert!(!separate_ci_dp(&row, &x).unwrap().decision);
    }

    #[test]
    fn oversized_capacity_is_rejected() {
        // Capacity past the state limit with a real cover question: the
        // total weight exceeds the capacity, so the triviality exit does
        // not apply and the guard must fire.
        let row = KnapsackRow::from_u64(&[1 << 22, 1 << 22], (1 << 22) + 1);
        let x = Point::zeros(2);
        assert!(matches!(separate_ci_dp(&row, &x), Err(Error::TooLarge(_))));
    }
}

//! Weight inequality separation: sparse enumeration and a packing greedy.
//!
//! The sparse routine rests on a rounding argument: if some weight
//! inequality is violated at x, then one is violated whose pack is
//! recovered as P = {i not in S : x(S) + x_i >= 1} for a small fractional
//! subset S. Enumerating those subsets and scoring each recovered pack is
//! therefore a complete decision procedure; subsets are cut off once their
//! point mass reaches 1.

use crate::cuts::{build_cut, violation, Certificate, Cut};
use crate::error::{Error, Result};
use crate::model::{KnapsackRow, Point};
use crate::oracles::Scaled;
use crate::separators::{SeparationResult, SeparationStats, SparseBudget};
use crate::Int;
use num::{Signed, Zero};

/// Violation numerator of the weight cut of `pack` at the scaled point:
/// the pack's own weighted value, plus the priced heavy outsiders, minus
/// the pack weight, all times the common denominator's inverse.
fn pack_violation_num(
    row: &KnapsackRow,
    scaled: &Scaled,
    order: &[usize],
    suffix_ax: &[Int],
    suffix_x: &[Int],
    pack: &[usize],
) -> Int {
    let weight: Int = pack.iter().map(|&i| row.weight(i)).sum();
    let r = row.capacity() - &weight;
    let pos = order.partition_point(|&i| *row.weight(i) <= r);
    let mut num = &suffix_ax[pos] - &r * &suffix_x[pos];
    for &i in pack {
        if *row.weight(i) > r {
            num -= (row.weight(i) - &r) * &scaled.num[i];
        }
    }
    for &i in pack {
        num += row.weight(i) * &scaled.num[i];
    }
    num - weight * &scaled.den
}

/// Decides whether any weight inequality is violated at `x`.
///
/// Enumeration order: fractional subsets S by size ascending, within a size
/// lexicographically by ascending index, skipping any subset whose point
/// mass reaches 1. Each subset recovers one candidate pack; the first
/// violated one is returned. The budget bounds the largest admissible
/// subset size, computed from the lightest fractional values.
pub fn separate_wi_sparse(
    row: &KnapsackRow,
    x: &Point,
    budget: &SparseBudget,
) -> Result<SeparationResult> {
    if x.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: x.n() });
    }
    let n = row.n();
    let scaled = Scaled::new(x);
    let fractional = x.fractional_support();

    // Largest possible |S| with x(S) < 1: take fractional values ascending.
    let mut masses: Vec<&Int> = fractional.iter().map(|&i| &scaled.num[i]).collect();
    masses.sort();
    let mut acc = Int::zero();
    let mut max_size = 0;
    for m in &masses {
        acc += *m;
        if acc < scaled.den {
            max_size += 1;
        } else {
            break;
        }
    }
    if max_size > budget.alpha_mass {
        return Err(Error::BudgetExceeded(format!(
            "subsets of up to {} fractional coordinates stay under unit mass, cap is {}",
            max_size, budget.alpha_mass
        )));
    }

    let order = {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| row.weight(i).cmp(row.weight(j)).then(i.cmp(&j)));
        idx
    };
    let mut suffix_ax = vec![Int::zero(); n + 1];
    let mut suffix_x = vec![Int::zero(); n + 1];
    for d in (0..n).rev() {
        let i = order[d];
        suffix_ax[d] = &suffix_ax[d + 1] + row.weight(i) * &scaled.num[i];
        suffix_x[d] = &suffix_x[d + 1] + &scaled.num[i];
    }

    let mut stats = SeparationStats::default();
    let mut subset = Vec::new();
    for size in 0..=max_size {
        if let Some(cut) = subsets_of_size(
            row, &scaled, &order, &suffix_ax, &suffix_x, &fractional, &mut subset,
            &Int::zero(), 0, size, &mut stats,
        )? {
            debug_assert!(violation(&cut, x).unwrap().is_positive());
            return Ok(SeparationResult::yes(cut, stats));
        }
    }
    Ok(SeparationResult::no(stats))
}

/// Walks subsets of exactly `remaining` more fractional columns, in
/// lexicographic order, pruning once the mass reaches 1. Scores the pack
/// recovered from each completed subset.
#[allow(clippy::too_many_arguments)]
fn subsets_of_size(
    row: &KnapsackRow,
    scaled: &Scaled,
    order: &[usize],
    suffix_ax: &[Int],
    suffix_x: &[Int],
    fractional: &[usize],
    subset: &mut Vec<usize>,
    mass: &Int,
    from: usize,
    remaining: usize,
    stats: &mut SeparationStats,
) -> Result<Option<Cut>> {
    if remaining == 0 {
        stats.candidates += 1;
        // Recovered pack: every column outside S that a rounding by x(S)
        // would push to 1.
        let threshold = &scaled.den - mass;
        let pack: Vec<usize> = (0..row.n())
            .filter(|&i| !subset.contains(&i) && scaled.num[i] >= threshold)
            .collect();
        let weight: Int = pack.iter().map(|&i| row.weight(i)).sum();
        if weight > *row.capacity() {
            return Ok(None);
        }
        let viol = pack_violation_num(row, scaled, order, suffix_ax, suffix_x, &pack);
        if viol.is_positive() {
            let cut = build_cut(row, &Certificate::Weight { pack })?;
            return Ok(Some(cut));
        }
        return Ok(None);
    }
    for pos in from..fractional.len() {
        if fractional.len() - pos < remaining {
            break;
        }
        let i = fractional[pos];
        let m2 = mass + &scaled.num[i];
        if m2 >= scaled.den {
            continue;
        }
        subset.push(i);
        let found = subsets_of_size(
            row, scaled, order, suffix_ax, suffix_x, fractional, subset, &m2,
            pos + 1, remaining - 1, stats,
        )?;
        subset.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Greedy weight separation: packs columns by descending point value (index
/// ascending on ties), skipping any column that no longer fits, then scores
/// the single resulting pack. Cheap, sound, and incomplete by design.
pub fn separate_wi_greedy(row: &KnapsackRow, x: &Point) -> Result<SeparationResult> {
    if x.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: x.n() });
    }
    let n = row.n();
    let scaled = Scaled::new(x);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| scaled.num[j].cmp(&scaled.num[i]).then(i.cmp(&j)));

    let mut pack = Vec::new();
    let mut load = Int::zero();
    for &i in &order {
        let next = &load + row.weight(i);
        if next <= *row.capacity() {
            pack.push(i);
            load = next;
        }
    }
    pack.sort_unstable();

    let stats = SeparationStats { candidates: 1, greedy_calls: 1 };
    let suffix_order = {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| row.weight(i).cmp(row.weight(j)).then(i.cmp(&j)));
        idx
    };
    let mut suffix_ax = vec![Int::zero(); n + 1];
    let mut suffix_x = vec![Int::zero(); n + 1];
    for d in (0..n).rev() {
        let i = suffix_order[d];
        suffix_ax[d] = &suffix_ax[d + 1] + row.weight(i) * &scaled.num[i];
        suffix_x[d] = &suffix_x[d + 1] + &scaled.num[i];
    }
    let viol = pack_violation_num(row, &scaled, &suffix_order, &suffix_ax, &suffix_x, &pack);
    if viol.is_positive() {
        let cut = build_cut(row, &Certificate::Weight { pack })?;
        Ok(SeparationResult::yes(cut, stats))
    } else {
        Ok(SeparationResult::no(stats))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Point;
    use crate::rat;

    fn uniform(row: &KnapsackRow) -> Point {
        let total: Int = (0..row.n()).map(|i| row.weight(i)).sum();
        let v = crate::Rat::new(row.capacity().clone(), total);
        Point::new(vec![v; row.n()])
    }

    #[test]
    fn greedy_packs_by_value_and_skips_misfits() {
        let row = KnapsackRow::from_u64(&[3, 4, 18, 2, 2, 2], 10);
        let x = uniform(&row);
        let res = separate_wi_greedy(&row, &x).unwrap();
        let cut = res.cut.expect("violated weight inequality");
        assert_eq!(cut.certificate, Certificate::Weight { pack: vec![0, 1, 3] });
        assert_eq!(violation(&cut, &x).unwrap(), rat(1, 31));
    }

    #[test]
    fn sparse_finds_the_empty_subset_candidate() {
        let row = KnapsackRow::from_u64(&[4, 4, 17, 2, 2, 2], 10);
        let x = uniform(&row);
        let res = separate_wi_sparse(&row, &x, &SparseBudget::default()).unwrap();
        let cut = res.cut.expect("violated weight inequality");
        assert_eq!(cut.certificate, Certificate::Weight { pack: vec![] });
        assert_eq!(violation(&cut, &x).unwrap(), rat(70, 31));
    }

    #[test]
    fn binary_points_never_separate() {
        let row = KnapsackRow::from_u64(&[3, 4, 18, 2, 2, 2], 10);
        let x = Point::new(vec![
            rat(1, 1),
            rat(1, 1),
            rat(0, 1),
            rat(1, 1),
            rat(0, 1),
            rat(0, 1),
        ]);
        assert!(!separate_wi_sparse(&row, &x, &SparseBudget::default())
            .unwrap()
            .decision);
        assert!(!separate_wi_greedy(&row, &x).unwrap().decision);
    }
}

//! Extended cover separation over the fractional support.
//!
//! Candidate covers are grouped by their maximum weight. Fix a column t that
//! realizes that maximum; every column at least as heavy as t is then
//! counted by the cut whether it sits in the cover or in the extension, so
//! moving one into the cover only raises the right-hand side. Relative to
//! the running balance, a lighter column with x_i = 1 is free, a lighter
//! fractional column costs 1 - x_i, and every other addition (an equal-weight
//! column or a lighter column with x_i = 0) costs a full unit. The separator
//! enumerates the fractional subset and fills the remaining weight with
//! full-unit columns, heaviest first, which minimizes their count.

use crate::cuts::{build_cut, Certificate};
use crate::error::{Error, Result};
use crate::model::{KnapsackRow, Point};
use crate::oracles::Scaled;
use crate::separators::{SeparationResult, SeparationStats, SparseBudget};
use crate::Int;
use num::{Integer, One, Signed, ToPrimitive, Zero};

/// Decides whether any extended cover inequality is violated at `x`.
///
/// Enumeration order: candidate maximum-weight columns t ascending by
/// (weight, index), one per distinct weight, then fractional subsets of the
/// lighter columns by binary counter over ascending indices. The first
/// violated candidate is returned. Exponential only in the fractional
/// support, which is capped by `budget.alpha_count`.
pub fn separate_eci_sparse(
    row: &KnapsackRow,
    x: &Point,
    budget: &SparseBudget,
) -> Result<SeparationResult> {
    if x.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: x.n() });
    }
    let n = row.n();
    let fractional = x.fractional_support();
    if fractional.len() > budget.alpha_count {
        return Err(Error::BudgetExceeded(format!(
            "{} fractional coordinates exceed the cap of {}",
            fractional.len(),
            budget.alpha_count
        )));
    }
    let scaled = Scaled::new(x);
    let mut stats = SeparationStats::default();

    // Columns ordered by weight ascending (index ascending on ties), with
    // prefix sums of every point numerator and of the weights of the x = 1
    // columns.
    let mut by_weight: Vec<usize> = (0..n).collect();
    by_weight.sort_by(|&i, &j| row.weight(i).cmp(row.weight(j)).then(i.cmp(&j)));
    let is_one: Vec<bool> = (0..n).map(|i| scaled.num[i] == scaled.den).collect();
    let is_zero: Vec<bool> = (0..n).map(|i| scaled.num[i].is_zero()).collect();

    let mut ones_w = Vec::with_capacity(n + 1);
    let mut all_x = Vec::with_capacity(n + 1);
    ones_w.push(Int::zero());
    all_x.push(Int::zero());
    for &i in &by_weight {
        let w: Int = ones_w.last().unwrap().clone();
        let s: Int = all_x.last().unwrap().clone();
        ones_w.push(if is_one[i] { w + row.weight(i) } else { w });
        all_x.push(s + &scaled.num[i]);
    }
    // Zero-value columns by weight ascending, with prefix weight sums, so a
    // "heaviest zeros first" fill is a suffix of this list.
    let zeros: Vec<usize> = by_weight.iter().copied().filter(|&i| is_zero[i]).collect();
    let mut zeros_w = Vec::with_capacity(zeros.len() + 1);
    zeros_w.push(Int::zero());
    for &i in &zeros {
        let w: Int = zeros_w.last().unwrap().clone();
        zeros_w.push(w + row.weight(i));
    }

    let need_cover = row.capacity() + Int::one();
    for pos_t in 0..n {
        let t = by_weight[pos_t];
        // One candidate per distinct weight value: the extended cover cut is
        // determined by the cover alone, so duplicates add nothing.
        if pos_t > 0 && row.weight(by_weight[pos_t - 1]) == row.weight(t) {
            continue;
        }
        let a_t = row.weight(t);
        // Boundary between strictly lighter columns and the rest.
        let lighter_end = by_weight.partition_point(|&i| row.weight(i) < a_t);
        // Every column with weight >= a_t contributes its point value once,
        // from the cover or from the extension.
        let heavy_x = all_x.last().unwrap() - &all_x[lighter_end];
        let equal_end = by_weight.partition_point(|&i| row.weight(i) <= a_t);
        // Equal-weight columns available as heavy full-unit fill.
        let extras = equal_end - lighter_end - 1;
        let base_w = a_t + &ones_w[lighter_end];
        let lighter_fracs: Vec<usize> = fractional
            .iter()
            .copied()
            .filter(|&i| row.weight(i) < a_t)
            .collect();
        // Zero-value columns lighter than t form a prefix of `zeros`.
        let zero_end = zeros.partition_point(|&i| row.weight(i) < a_t);

        for mask in 0u64..(1 << lighter_fracs.len()) {
            stats.candidates += 1;
            let mut frac_w = Int::zero();
            // Cost of the chosen fractional columns: sum of (1 - x_i).
            let mut frac_cost = Int::zero();
            for (bit, &i) in lighter_fracs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    frac_w += row.weight(i);
                    frac_cost += &scaled.den - &scaled.num[i];
                }
            }
            // Fill the remaining weight with full-unit columns, heaviest
            // first: the equal-weight class, then zero-value columns in
            // descending weight.
            let missing = &need_cover - &base_w - &frac_w;
            let (use_extras, use_zeros) = if missing.is_positive() {
                stats.greedy_calls += 1;
                let extras_cap = Int::from(extras as i64) * a_t;
                if missing <= extras_cap {
                    let e = missing.div_ceil(a_t).to_usize().unwrap();
                    (e, 0)
                } else {
                    let after = &missing - &extras_cap;
                    let total_zero = &zeros_w[zero_end];
                    if *total_zero < after {
                        continue;
                    }
                    // Smallest suffix of zeros[..zero_end] heavy enough.
                    let limit = total_zero - &after;
                    let j = zeros_w[..=zero_end].partition_point(|p| *p <= limit) - 1;
                    (extras, zero_end - j)
                }
            } else {
                (0, 0)
            };
            let penalty = Int::from((use_extras + use_zeros) as i64) * &scaled.den;
            let viol = &heavy_x - &frac_cost - penalty;
            if !viol.is_positive() {
                continue;
            }
            // Assemble the cover: t, the fill from its weight class, lighter
            // x = 1 columns, the chosen fractional columns, the zero fill.
            let mut cover: Vec<usize> = vec![t];
            cover.extend(
                by_weight[lighter_end..equal_end]
                    .iter()
                    .copied()
                    .filter(|&i| i != t)
                    .take(use_extras),
            );
            cover.extend(
                by_weight[..lighter_end]
                    .iter()
                    .copied()
                    .filter(|&i| is_one[i]),
            );
            for (bit, &i) in lighter_fracs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    cover.push(i);
                }
            }
            cover.extend(zeros[zero_end - use_zeros..zero_end].iter().copied());
            cover.sort_unstable();
            let t_canon = *cover
                .iter()
                .find(|&&i| row.weight(i) == a_t)
                .expect("t is in the cover");
            let cut = build_cut(row, &Certificate::ExtendedCover { cover, t: t_canon })?;
            return Ok(SeparationResult::yes(cut, stats));
        }
    }
    Ok(SeparationResult::no(stats))
}

//! Configuration separation: cover recast first, then a two-shape search
//! over the fractional support.
//!
//! A violated minimal cover of size three or more recasts directly: drop
//! its heaviest column t and the rest is a configuration with k = |N|.
//! Otherwise every violated configuration inequality normalizes (drop
//! members with x = 0, which only raises the violation) to one of two
//! shapes over the weight order: a bottom block S_lo of k columns, a top
//! block S_hi of k - 1 columns that with t still fits, and a middle block T
//! strictly between them, where either the blocks are exactly the k
//! smallest and k - 1 largest members (disjoint shape) or the middle leaks
//! into both extremes (overlap shape, block sizes s and s - 1 with
//! k = |S| - |S_hi|). Both shapes are found by enumerating (t, S_lo, S_hi)
//! plus the fractional part of T; the x = 1 part of T is completed greedily
//! in the disjoint shape and by a bounded removal search in the overlap
//! shape.
//!
//! When no violated cover inequality exists, the block sizes are provably
//! bounded by twice the fractional support size, which keeps the search
//! polynomial. A violated cover that stays at size two voids those bounds,
//! so the search is then repeated with the caps lifted; that fallback is
//! exhaustive over the shapes and restores completeness at exponential
//! worst-case cost.

use crate::cuts::{build_cut, Certificate, Cut};
use crate::error::{Error, Result};
use crate::model::{KnapsackRow, Point};
use crate::oracles::Scaled;
use crate::separators::ci::separate_ci_dp;
use crate::separators::{SeparationResult, SeparationStats, SparseBudget};
use crate::Int;
use num::{Signed, Zero};

/// Decides whether any configuration inequality is violated at `x`.
///
/// Enumeration order: the cover recast, then the disjoint shape (k
/// ascending, t ascending, bottom block lexicographic, top block
/// lexicographic, fractional middle by binary counter), then the overlap
/// shape (same nesting, removal subsets depth-first), then both shapes
/// again without size caps if a violated two-column cover voided the
/// bounds. The first violated candidate is returned.
pub fn separate_config_sparse(
    row: &KnapsackRow,
    x: &Point,
    budget: &SparseBudget,
) -> Result<SeparationResult> {
    if x.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: x.n() });
    }
    let fractional = x.fractional_support();
    if fractional.len() > budget.alpha_count {
        return Err(Error::BudgetExceeded(format!(
            "{} fractional coordinates exceed the cap of {}",
            fractional.len(),
            budget.alpha_count
        )));
    }
    if fractional.len() > 62 {
        return Err(Error::TooLarge(
            "fractional support too wide for subset masks".into(),
        ));
    }
    let mut stats = SeparationStats::default();

    // A violated minimal cover with at least three columns is already a
    // violated configuration once its heaviest column plays t.
    let ci = separate_ci_dp(row, x)?;
    stats.absorb(&ci.stats);
    let mut cover_voids_bounds = false;
    if let Some(cut) = ci.cut {
        let Certificate::Cover { cover } = &cut.certificate else {
            unreachable!("cover separation returns cover certificates")
        };
        if cover.len() >= 3 {
            let max_w = cover.iter().map(|&i| row.weight(i)).max().unwrap();
            let t = *cover.iter().find(|&&i| row.weight(i) == max_w).unwrap();
            let set_n: Vec<usize> = cover.iter().copied().filter(|&i| i != t).collect();
            let k = set_n.len();
            let cut = build_cut(
                row,
                &Certificate::Config { set_n: set_n.clone(), t, k, subset: set_n },
            )?;
            return Ok(SeparationResult::yes(cut, stats));
        }
        cover_voids_bounds = true;
    }

    let scaled = Scaled::new(x);
    let ctx = Ctx::new(row, &scaled);
    let alpha = fractional.len();

    let capped = Caps {
        block: 2 * alpha,
        removal: (2 * alpha).saturating_sub(1),
    };
    if let Some(cut) = search_shapes(&ctx, &capped, &mut stats)? {
        return Ok(SeparationResult::yes(cut, stats));
    }
    if cover_voids_bounds {
        let full = Caps { block: ctx.len(), removal: ctx.len() };
        if let Some(cut) = search_shapes(&ctx, &full, &mut stats)? {
            return Ok(SeparationResult::yes(cut, stats));
        }
    }
    Ok(SeparationResult::no(stats))
}

struct Caps {
    /// Largest admissible bottom-block size.
    block: usize,
    /// Largest admissible removed set in the overlap shape.
    removal: usize,
}

/// Shared geometry: columns in weight order restricted to positive point
/// values (a normalized witness never uses the rest), with the prefix data
/// the two shape searches query.
struct Ctx<'a> {
    row: &'a KnapsackRow,
    b: &'a Int,
    /// Original column indices with x > 0, sorted by (weight, index).
    positive: Vec<usize>,
    /// Weight, point numerator, and unit-deficit cost per position.
    w: Vec<Int>,
    num: Vec<Int>,
    cost: Vec<Int>,
    /// prefix_w[p] = total weight of positions [0, p).
    prefix_w: Vec<Int>,
    /// Positions with x = 1, ascending.
    ones_at: Vec<usize>,
    /// Positions with fractional x, ascending.
    frac_at: Vec<usize>,
}

impl<'a> Ctx<'a> {
    fn new(row: &'a KnapsackRow, scaled: &'a Scaled) -> Ctx<'a> {
        let n = row.n();
        let mut positive: Vec<usize> =
            (0..n).filter(|&i| scaled.num[i].is_positive()).collect();
        positive.sort_by(|&i, &j| row.weight(i).cmp(row.weight(j)).then(i.cmp(&j)));
        let w: Vec<Int> = positive.iter().map(|&i| row.weight(i).clone()).collect();
        let num: Vec<Int> = positive.iter().map(|&i| scaled.num[i].clone()).collect();
        let cost: Vec<Int> = num.iter().map(|v| &scaled.den - v).collect();
        let mut prefix_w = Vec::with_capacity(w.len() + 1);
        prefix_w.push(Int::zero());
        for v in &w {
            let last: Int = prefix_w.last().unwrap().clone();
            prefix_w.push(last + v);
        }
        let ones_at: Vec<usize> =
            (0..positive.len()).filter(|&p| num[p] == scaled.den).collect();
        let frac_at: Vec<usize> =
            (0..positive.len()).filter(|&p| num[p] != scaled.den).collect();
        Ctx {
            row,
            b: row.capacity(),
            positive,
            w,
            num,
            cost,
            prefix_w,
            ones_at,
            frac_at,
        }
    }

    fn len(&self) -> usize {
        self.positive.len()
    }

    /// Position of column `t` among the positive columns, if any.
    fn position_of(&self, t: usize) -> Option<usize> {
        self.positive.iter().position(|&i| i == t)
    }

    /// Smallest possible total of `count` positions taken from [from, len).
    fn lightest_tail(&self, from: usize, count: usize) -> Option<Int> {
        if self.len() - from < count {
            return None;
        }
        Some(&self.prefix_w[from + count] - &self.prefix_w[from])
    }

    /// Largest possible total of `count` positions taken from [from, len).
    fn heaviest_tail(&self, from: usize, count: usize) -> Option<Int> {
        if self.len() - from < count {
            return None;
        }
        let top = self.len();
        Some(&self.prefix_w[top] - &self.prefix_w[top - count])
    }

    /// The x = 1 positions strictly inside (lo, hi), excluding `skip`,
    /// ascending. Position order is weight order, so this is also the
    /// lightest-first fill order.
    fn ones_window(&self, lo: usize, hi: usize, skip: usize) -> Vec<usize> {
        let from = self.ones_at.partition_point(|&p| p <= lo);
        let to = self.ones_at.partition_point(|&p| p < hi);
        self.ones_at[from..to].iter().copied().filter(|&p| p != skip).collect()
    }

    /// The fractional positions strictly inside (lo, hi), excluding `skip`.
    fn frac_window(&self, lo: usize, hi: usize, skip: usize) -> Vec<usize> {
        let from = self.frac_at.partition_point(|&p| p <= lo);
        let to = self.frac_at.partition_point(|&p| p < hi);
        self.frac_at[from..to].iter().copied().filter(|&p| p != skip).collect()
    }

    /// Original indices of a candidate set given by positions, sorted.
    fn to_columns<I: IntoIterator<Item = usize>>(&self, positions: I) -> Vec<usize> {
        let mut cols: Vec<usize> =
            positions.into_iter().map(|p| self.positive[p]).collect();
        cols.sort_unstable();
        cols
    }
}

fn search_shapes(ctx: &Ctx, caps: &Caps, stats: &mut SeparationStats) -> Result<Option<Cut>> {
    if let Some(cut) = disjoint_shape(ctx, caps, stats)? {
        return Ok(Some(cut));
    }
    overlap_shape(ctx, caps, stats)
}

/// Chooses `count` positions from `[from, len)`, skipping `skip`, in
/// lexicographic order. The running weight stays within `cap`; branches
/// whose lightest completion overflows `cap`, or whose heaviest completion
/// cannot exceed `need` when one is given, are pruned. Calls `done` on
/// every complete block; a `Some` return aborts the walk.
#[allow(clippy::too_many_arguments)]
fn blocks(
    ctx: &Ctx,
    from: usize,
    skip: usize,
    count: usize,
    cap: &Int,
    need: Option<&Int>,
    chosen: &mut Vec<usize>,
    weight: &Int,
    cost: &Int,
    done: &mut dyn FnMut(&Ctx, &[usize], &Int, &Int) -> Result<Option<Cut>>,
) -> Result<Option<Cut>> {
    if count == 0 {
        return done(ctx, chosen, weight, cost);
    }
    for p in from..ctx.len() {
        if p == skip {
            continue;
        }
        let left = ctx.len() - p - usize::from(skip > p);
        if left < count {
            break;
        }
        let w2 = weight + &ctx.w[p];
        if w2 > *cap {
            // Position order is weight order: later starts cost more.
            break;
        }
        match ctx.lightest_tail(p + 1, count - 1) {
            Some(ref tail) if &w2 + tail <= *cap => {}
            _ => {
                if count > 1 {
                    break;
                }
                continue;
            }
        }
        if let Some(target) = need {
            // The heaviest completion is an overestimate (it may count
            // `skip`), so this prune never drops a real candidate.
            match ctx.heaviest_tail(p + 1, count - 1) {
                Some(ref tail) if &w2 + tail > *target => {}
                _ => continue,
            }
        }
        let c2 = cost + &ctx.cost[p];
        chosen.push(p);
        let out = blocks(ctx, p + 1, skip, count - 1, cap, need, chosen, &w2, &c2, done)?;
        chosen.pop();
        if out.is_some() {
            return Ok(out);
        }
    }
    Ok(None)
}

/// The disjoint shape: S = S_lo + T + S_hi with |S_lo| = k, |S_hi| = k - 1,
/// every S_lo position below every S_hi position, and T strictly between.
/// Conditions: a(S_lo) + a_t > b, a(S_hi) + a_t <= b, a(S) <= b. For fixed
/// blocks and fractional middle, each x = 1 middle column adds x_t to the
/// violation, so the greedy fill takes as many as the weight budget allows,
/// lightest first.
fn disjoint_shape(ctx: &Ctx, caps: &Caps, stats: &mut SeparationStats) -> Result<Option<Cut>> {
    let b = ctx.b;
    for k in 2..=caps.block {
        if 2 * k - 1 > ctx.len() {
            break;
        }
        for t in 0..ctx.row.n() {
            // A column with x_t = 0 cannot carry a violation.
            let Some(pos_t) = ctx.position_of(t) else { continue };
            let a_t = &ctx.w[pos_t];
            let gap = b - a_t;
            let mut chosen_lo = Vec::new();
            let out = blocks(
                ctx,
                0,
                pos_t,
                k,
                b,
                Some(&gap),
                &mut chosen_lo,
                &Int::zero(),
                &Int::zero(),
                &mut |ctx, lo_block, w_lo, c_lo| {
                    if *w_lo <= gap {
                        return Ok(None);
                    }
                    let p = *lo_block.last().unwrap();
                    let cap_hi = if gap < b - w_lo { gap.clone() } else { b - w_lo };
                    if cap_hi.is_negative() {
                        return Ok(None);
                    }
                    let lo_block = lo_block.to_vec();
                    let mut chosen_hi = Vec::new();
                    blocks(
                        ctx,
                        p + 1,
                        pos_t,
                        k - 1,
                        &cap_hi,
                        None,
                        &mut chosen_hi,
                        &Int::zero(),
                        &Int::zero(),
                        &mut |ctx, hi_block, w_hi, c_hi| {
                            let q = *hi_block.first().unwrap();
                            middle_fill(
                                ctx, stats, t, pos_t, k, &lo_block, hi_block, p, q,
                                w_lo, w_hi, c_lo, c_hi,
                            )
                        },
                    )
                },
            )?;
            if out.is_some() {
                return Ok(out);
            }
        }
    }
    Ok(None)
}

/// Completes a disjoint-shape candidate: enumerates the fractional middle,
/// greedily fills with x = 1 middle columns, and tests the violation
/// (|T1| + |T_f| + k) x_t - cost(S_lo) - cost(S_hi) - cost(T_f) > 0.
#[allow(clippy::too_many_arguments)]
fn middle_fill(
    ctx: &Ctx,
    stats: &mut SeparationStats,
    t: usize,
    pos_t: usize,
    k: usize,
    lo_block: &[usize],
    hi_block: &[usize],
    p: usize,
    q: usize,
    w_lo: &Int,
    w_hi: &Int,
    c_lo: &Int,
    c_hi: &Int,
) -> Result<Option<Cut>> {
    let num_t = &ctx.num[pos_t];
    let fracs = ctx.frac_window(p, q, pos_t);
    let ones = ctx.ones_window(p, q, pos_t);
    // Running weight of the lightest-first fill.
    let mut ones_run = Vec::with_capacity(ones.len() + 1);
    ones_run.push(Int::zero());
    for &o in &ones {
        let last: Int = ones_run.last().unwrap().clone();
        ones_run.push(last + &ctx.w[o]);
    }
    for mask in 0u64..(1 << fracs.len()) {
        stats.candidates += 1;
        let mut w_tf = Int::zero();
        let mut c_tf = Int::zero();
        let mut tf_count = 0usize;
        for (bit, &f) in fracs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                w_tf += &ctx.w[f];
                c_tf += &ctx.cost[f];
                tf_count += 1;
            }
        }
        let fill_budget = ctx.b - w_lo - w_hi - &w_tf;
        if fill_budget.is_negative() {
            continue;
        }
        stats.greedy_calls += 1;
        let m = ones_run.partition_point(|r| *r <= fill_budget) - 1;
        let viol = Int::from((m + tf_count + k) as i64) * num_t - c_lo - c_hi - &c_tf;
        if !viol.is_positive() {
            continue;
        }
        let members = lo_block
            .iter()
            .chain(hi_block.iter())
            .chain(ones[..m].iter())
            .copied()
            .chain(
                fracs
                    .iter()
                    .enumerate()
                    .filter(|&(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &f)| f),
            );
        let set_n = ctx.to_columns(members);
        let cut = build_cut(
            ctx.row,
            &Certificate::Config { set_n: set_n.clone(), t, k, subset: set_n },
        )?;
        return Ok(Some(cut));
    }
    Ok(None)
}

/// The overlap shape: blocks of sizes s and s - 1, the middle T carries the
/// rest, and k = |S| - |S_hi| so the violation is s x_t - cost(S), which
/// does not depend on which x = 1 middle columns stay. The weight
/// conditions a(S) <= b, a_t + a(S \ S_lo) <= b < a_t + a(S \ S_hi) reduce
/// to landing the removed weight inside a window. At s = 1 the top block is
/// empty (k = |S|, the plain x_t + x(S) <= |S| cuts) and the middle runs to
/// the end of the support.
fn overlap_shape(ctx: &Ctx, caps: &Caps, stats: &mut SeparationStats) -> Result<Option<Cut>> {
    let b = ctx.b;
    for s in 1..=caps.block {
        if 2 * s - 1 > ctx.len() {
            break;
        }
        for t in 0..ctx.row.n() {
            let Some(pos_t) = ctx.position_of(t) else { continue };
            let a_t = &ctx.w[pos_t];
            let mut chosen_lo = Vec::new();
            let out = blocks(
                ctx,
                0,
                pos_t,
                s,
                b,
                None,
                &mut chosen_lo,
                &Int::zero(),
                &Int::zero(),
                &mut |ctx, lo_block, w_lo, c_lo| {
                    let p = *lo_block.last().unwrap();
                    let lo_block = lo_block.to_vec();
                    if s == 1 {
                        return overlap_complete(
                            ctx, stats, caps, t, pos_t, s, &lo_block, &[],
                            p, ctx.len(), w_lo, &Int::zero(), c_lo, &Int::zero(), a_t,
                        );
                    }
                    let cap_hi = b - w_lo;
                    let mut chosen_hi = Vec::new();
                    blocks(
                        ctx,
                        p + 1,
                        pos_t,
                        s - 1,
                        &cap_hi,
                        None,
                        &mut chosen_hi,
                        &Int::zero(),
                        &Int::zero(),
                        &mut |ctx, hi_block, w_hi, c_hi| {
                            let q = *hi_block.first().unwrap();
                            overlap_complete(
                                ctx, stats, caps, t, pos_t, s, &lo_block, hi_block,
                                p, q, w_lo, w_hi, c_lo, c_hi, a_t,
                            )
                        },
                    )
                },
            )?;
            if out.is_some() {
                return Ok(out);
            }
        }
    }
    Ok(None)
}

/// Completes an overlap-shape candidate for every fractional middle choice:
/// checks the removal-independent violation once, then searches for a
/// removed set of x = 1 middle columns whose weight lands in the window the
/// three weight conditions carve out.
#[allow(clippy::too_many_arguments)]
fn overlap_complete(
    ctx: &Ctx,
    stats: &mut SeparationStats,
    caps: &Caps,
    t: usize,
    pos_t: usize,
    s: usize,
    lo_block: &[usize],
    hi_block: &[usize],
    p: usize,
    q: usize,
    w_lo: &Int,
    w_hi: &Int,
    c_lo: &Int,
    c_hi: &Int,
    a_t: &Int,
) -> Result<Option<Cut>> {
    let b = ctx.b;
    let num_t = &ctx.num[pos_t];
    let fracs = ctx.frac_window(p, q, pos_t);
    let middle_ones = ctx.ones_window(p, q, pos_t);
    let w_middle: Int = middle_ones.iter().map(|&o| &ctx.w[o]).sum();
    // Removing a weightless column changes no condition, so removal
    // candidates carry weight.
    let removable: Vec<usize> = middle_ones
        .iter()
        .copied()
        .filter(|&o| ctx.w[o].is_positive())
        .collect();
    let mut removable_cum = Vec::with_capacity(removable.len() + 1);
    removable_cum.push(Int::zero());
    for &o in &removable {
        let last: Int = removable_cum.last().unwrap().clone();
        removable_cum.push(last + &ctx.w[o]);
    }
    for mask in 0u64..(1 << fracs.len()) {
        stats.candidates += 1;
        let mut w_tf = Int::zero();
        let mut c_tf = Int::zero();
        for (bit, &f) in fracs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                w_tf += &ctx.w[f];
                c_tf += &ctx.cost[f];
            }
        }
        let viol = Int::from(s as i64) * num_t - c_lo - c_hi - &c_tf;
        if !viol.is_positive() {
            continue;
        }
        //   a(S) <= b                 =>  removed >= total - b
        //   a_t + a(S \ S_lo) <= b    =>  removed >= total - w_lo + a_t - b
        //   a_t + a(S \ S_hi) > b     =>  removed <  total - w_hi + a_t - b
        let total = w_lo + w_hi + &w_tf + &w_middle;
        let mut lower = &total - b;
        let with_t = &total - w_lo + a_t - b;
        if with_t > lower {
            lower = with_t;
        }
        if lower.is_negative() {
            lower = Int::zero();
        }
        let upper = &total - w_hi + a_t - b;
        if upper <= lower {
            continue;
        }
        // k = |S| - (s - 1) >= 2 needs a kept column beyond the blocks.
        // Only s = 1 with no kept fractional column can collapse to the
        // bottom singleton: forbid removing every middle column. A
        // zero-weight middle column survives any removal, so the bound
        // tightens only when all middle columns are removable.
        let mut removal_cap = caps.removal;
        if s == 1 && mask == 0 {
            if middle_ones.is_empty() {
                continue;
            }
            if removable.len() == middle_ones.len() {
                removal_cap = removal_cap.min(removable.len() - 1);
            }
        }
        let found = removal_search(
            &removable,
            &removable_cum,
            ctx,
            0,
            &Int::zero(),
            0,
            removal_cap,
            &lower,
            &upper,
            &mut Vec::new(),
        );
        let Some(removed) = found else { continue };
        let members = lo_block
            .iter()
            .chain(hi_block.iter())
            .copied()
            .chain(
                fracs
                    .iter()
                    .enumerate()
                    .filter(|&(bit, _)| mask >> bit & 1 == 1)
                    .map(|(_, &f)| f),
            )
            .chain(middle_ones.iter().copied().filter(|o| !removed.contains(o)));
        let set_n = ctx.to_columns(members);
        let k = set_n.len() - (s - 1);
        let cut = build_cut(
            ctx.row,
            &Certificate::Config { set_n: set_n.clone(), t, k, subset: set_n },
        )?;
        return Ok(Some(cut));
    }
    Ok(None)
}

/// Depth-first walk over removal subsets in lexicographic order, capped in
/// size, looking for a total weight in [lower, upper). Prunes branches that
/// already reach `upper` and branches whose heaviest completion cannot
/// reach `lower`.
#[allow(clippy::too_many_arguments)]
fn removal_search(
    removable: &[usize],
    cum: &[Int],
    ctx: &Ctx,
    from: usize,
    weight: &Int,
    used: usize,
    cap: usize,
    lower: &Int,
    upper: &Int,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if *weight >= *lower && *weight < *upper {
        return Some(chosen.clone());
    }
    if used == cap {
        return None;
    }
    for idx in from..removable.len() {
        let w2 = weight + &ctx.w[removable[idx]];
        if w2 >= *upper {
            // Position order is weight order: later picks weigh more.
            break;
        }
        let room = (cap - used - 1).min(removable.len() - idx - 1);
        let best = &w2 + (&cum[removable.len()] - &cum[removable.len() - room]);
        if best < *lower {
            continue;
        }
        chosen.push(removable[idx]);
        let out = removal_search(
            removable, cum, ctx, idx + 1, &w2, used + 1, cap, lower, upper, chosen,
        );
        chosen.pop();
        if out.is_some() {
            return out;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::violation;
    use crate::model::Point;
    use crate::rat;

    #[test]
    fn recasts_a_violated_three_column_cover() {
        let row = KnapsackRow::from_u64(&[2, 4, 7, 10, 10, 20], 30);
        let x = Point::new(vec![
            rat(0, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(0, 1),
            rat(9, 20),
        ]);
        let res = separate_config_sparse(&row, &x, &SparseBudget::default()).unwrap();
        let cut = res.cut.expect("violated configuration");
        assert_eq!(
            cut.certificate,
            Certificate::Config { set_n: vec![2, 3], t: 5, k: 2, subset: vec![2, 3] }
        );
        assert_eq!(violation(&cut, &x).unwrap(), rat(9, 20));
    }

    #[test]
    fn finds_the_coefficient_one_shape_with_an_empty_top_block() {
        // Every violated configuration here has t-coefficient
        // |N| - k + 1 = 1: the overlap shape with a singleton bottom
        // block and no top block. The violated-cover recast cannot reach
        // any of them because the minimal cover {1, 2} has two columns.
        // The walk lands on (N = {1, 3}, t = 0): bottom block {3}, kept
        // fractional column 1, column 2 removed from the middle.
        let row = KnapsackRow::from_u64(&[3, 7, 4, 2, 5], 10);
        let x = Point::new(vec![rat(1, 1), rat(1, 7), rat(1, 1), rat(1, 1), rat(0, 1)]);
        let res = separate_config_sparse(&row, &x, &SparseBudget::default()).unwrap();
        let cut = res.cut.expect("violated configuration");
        assert_eq!(
            cut.certificate,
            Certificate::Config { set_n: vec![1, 3], t: 0, k: 2, subset: vec![1, 3] }
        );
        assert_eq!(violation(&cut, &x).unwrap(), rat(1, 7));
    }

    #[test]
    fn two_column_cover_alone_is_not_a_configuration() {
        // The only violated cover has two columns, and no configuration
        // inequality exists at all for this row shape.
        let row = KnapsackRow::from_u64(&[10, 10, 3], 15);
        let x = Point::new(vec![rat(1, 1), rat(9, 10), rat(9, 10)]);
        let res = separate_config_sparse(&row, &x, &SparseBudget::default()).unwrap();
        assert!(!res.decision);
    }

    #[test]
    fn integral_feasible_points_never_separate() {
        let row = KnapsackRow::from_u64(&[2, 4, 7, 10, 10, 20], 30);
        let x = Point::new(vec![
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(0, 1),
            rat(0, 1),
        ]);
        let res = separate_config_sparse(&row, &x, &SparseBudget::default()).unwrap();
        assert!(!res.decision);
    }
}

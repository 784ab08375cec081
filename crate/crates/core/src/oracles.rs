//! Exhaustive ground truth at desk scale: cut validity by enumeration,
//! per-family maximum-violation separation, and tight-point rank.
//!
//! These routines exist to check the polynomial separators, so they are
//! written for transparency over speed. They still avoid rational
//! normalization in inner loops by scaling the point to integers over one
//! common denominator; every comparison is then an integer comparison.

use crate::cuts::{build_cut, violation, Certificate, Cut, Family};
use crate::error::{Error, Result};
use crate::families::{prefix_sums, weight_sorted};
use crate::model::{KnapsackRow, Instance, Point};
use crate::separators::{SeparationResult, SeparationStats};
use crate::{Int, Rat};
use num::{Integer, One, Signed, Zero};

/// Hard cap for `validate_cut_bruteforce`, overridable through the
/// `KCUTS_MAX_BRUTE` environment variable.
pub fn max_brute_n() -> usize {
    std::env::var("KCUTS_MAX_BRUTE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(22)
}

/// Enumeration cap for cover, extended cover, and weight separation.
pub const BRUTE_SUBSET_CAP: usize = 16;
/// Enumeration cap for the two configuration families.
pub const BRUTE_CONFIG_CAP: usize = 12;
/// Enumeration cap for tight-point rank computation.
pub const FACET_CAP: usize = 20;

/// A point scaled to integers: x_i = num[i] / den with den >= 1.
pub(crate) struct Scaled {
    pub den: Int,
    pub num: Vec<Int>,
}

impl Scaled {
    pub(crate) fn new(x: &Point) -> Scaled {
        let mut den = Int::one();
        for v in x.coords() {
            den = den.lcm(v.denom());
        }
        let num = x
            .coords()
            .iter()
            .map(|v| v.numer() * (&den / v.denom()))
            .collect();
        Scaled { den, num }
    }
}

fn too_large(n: usize, cap: usize, what: &str) -> Error {
    Error::TooLarge(format!("{what} handles up to {cap} columns, got {n}"))
}

/// Integer form of a cut: coeffs and rhs multiplied by the lcm of their
/// denominators. Cuts built by `build_cut` are already integral.
fn integral_cut(cut: &Cut) -> (Vec<Int>, Int) {
    let mut scale = Int::one();
    for c in &cut.coeffs {
        scale = scale.lcm(c.denom());
    }
    scale = scale.lcm(cut.rhs.denom());
    let coeffs = cut
        .coeffs
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    let rhs = cut.rhs.numer() * (&scale / cut.rhs.denom());
    (coeffs, rhs)
}

/// Searches all feasible 0-1 points of `row` for one that violates the cut.
/// Returns None when the cut is valid. Depth-first in index order, so the
/// reported counterexample is deterministic.
pub fn validate_cut_bruteforce(row: &KnapsackRow, cut: &Cut) -> Result<Option<Point>> {
    validate_against(std::slice::from_ref(row), cut)
}

/// Same search, but the point must be feasible for every row of the instance.
pub fn validate_cut_bruteforce_instance(inst: &Instance, cut: &Cut) -> Result<Option<Point>> {
    validate_against(inst.rows(), cut)
}

fn validate_against(rows: &[KnapsackRow], cut: &Cut) -> Result<Option<Point>> {
    let n = rows[0].n();
    let cap = max_brute_n();
    if n > cap {
        return Err(too_large(n, cap, "cut validation"));
    }
    if cut.coeffs.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: cut.coeffs.len() });
    }
    let (coeffs, rhs) = integral_cut(cut);
    let mut loads = vec![Int::zero(); rows.len()];
    let mut lhs = Int::zero();
    let mut chosen = vec![false; n];
    let found = violate_dfs(rows, &coeffs, &rhs, 0, &mut loads, &mut lhs, &mut chosen);
    if found {
        let coords = chosen
            .iter()
            .map(|&c| if c { Rat::one() } else { Rat::zero() })
            .collect();
        Ok(Some(Point::new(coords)))
    } else {
        Ok(None)
    }
}

fn violate_dfs(
    rows: &[KnapsackRow],
    coeffs: &[Int],
    rhs: &Int,
    depth: usize,
    loads: &mut [Int],
    lhs: &mut Int,
    chosen: &mut [bool],
) -> bool {
    // The prefix extended by zeros is itself a feasible point.
    if &*lhs > rhs {
        return true;
    }
    if depth == chosen.len() {
        return false;
    }
    // Include branch, only when every row still fits.
    let fits = rows
        .iter()
        .zip(loads.iter())
        .all(|(row, load)| load + row.weight(depth) <= *row.capacity());
    if fits {
        for (row, load) in rows.iter().zip(loads.iter_mut()) {
            *load += row.weight(depth);
        }
        *lhs += &coeffs[depth];
        chosen[depth] = true;
        if violate_dfs(rows, coeffs, rhs, depth + 1, loads, lhs, chosen) {
            return true;
        }
        chosen[depth] = false;
        *lhs -= &coeffs[depth];
        for (row, load) in rows.iter().zip(loads.iter_mut()) {
            *load -= row.weight(depth);
        }
    }
    violate_dfs(rows, coeffs, rhs, depth + 1, loads, lhs, chosen)
}

/// Tracks the best (violation, certificate) pair seen so far. Ties on the
/// exact violation fall to the lexicographically smaller certificate.
struct Best {
    viol_num: Int,
    certificate: Certificate,
}

fn consider(best: &mut Option<Best>, viol_num: Int, make_cert: impl FnOnce() -> Certificate) {
    if !viol_num.is_positive() {
        return;
    }
    match best {
        None => {
            *best = Some(Best { viol_num, certificate: make_cert() })
        }
        Some(b) => {
            if viol_num > b.viol_num {
                *b = Best { viol_num, certificate: make_cert() };
            } else if viol_num == b.viol_num {
                let cert = make_cert();
                if cert < b.certificate {
                    b.certificate = cert;
                }
            }
        }
    }
}

/// Exhaustive maximum-violation separation for one family. Certificate space:
/// all covers (cover and extended cover), all configurations with every
/// admissible subset, all generalized configurations at their smallest k, and
/// all packs of positive-weight columns.
pub fn separate_bruteforce(row: &KnapsackRow, x: &Point, family: Family) -> Result<SeparationResult> {
    if x.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: x.n() });
    }
    let cap = match family {
        Family::Cover | Family::ExtendedCover | Family::Weight => BRUTE_SUBSET_CAP,
        Family::Config | Family::GenConfig => BRUTE_CONFIG_CAP,
    };
    if row.n() > cap {
        return Err(too_large(row.n(), cap, "brute-force separation"));
    }
    let scaled = Scaled::new(x);
    let mut best = None;
    let mut stats = SeparationStats::default();
    match family {
        Family::Cover => cover_bruteforce(row, &scaled, false, &mut best, &mut stats),
        Family::ExtendedCover => cover_bruteforce(row, &scaled, true, &mut best, &mut stats),
        Family::Config => config_bruteforce(row, &scaled, &mut best, &mut stats),
        Family::GenConfig => genconfig_bruteforce(row, &scaled, &mut best, &mut stats),
        Family::Weight => weight_bruteforce(row, &scaled, &mut best, &mut stats),
    }
    match best {
        None => Ok(SeparationResult::no(stats)),
        Some(b) => {
            let cut = build_cut(row, &b.certificate)?;
            debug_assert!(violation(&cut, x).unwrap().is_positive());
            Ok(SeparationResult::yes(cut, stats))
        }
    }
}

/// Walks every cover by depth-first inclusion in index order. For extended
/// covers the extension set is derived from the cover's maximum weight.
fn cover_bruteforce(
    row: &KnapsackRow,
    scaled: &Scaled,
    extended: bool,
    best: &mut Option<Best>,
    stats: &mut SeparationStats,
) {
    let n = row.n();
    // suffix[d] = total weight of columns d.., for pruning branches that can
    // no longer reach a cover.
    let mut suffix = vec![Int::zero(); n + 1];
    for d in (0..n).rev() {
        suffix[d] = &suffix[d + 1] + row.weight(d);
    }
    // Columns sorted by weight descending, with x sums, to evaluate the
    // extension {j : a_j >= max weight of the cover} in one suffix lookup.
    let heavy_order = {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| row.weight(j).cmp(row.weight(i)).then(i.cmp(&j)));
        idx
    };
    let mut heavy_prefix_x = Vec::with_capacity(n + 1);
    heavy_prefix_x.push(Int::zero());
    for &i in &heavy_order {
        let last: Int = heavy_prefix_x.last().unwrap().clone();
        heavy_prefix_x.push(last + &scaled.num[i]);
    }

    struct Ctx<'a> {
        row: &'a KnapsackRow,
        scaled: &'a Scaled,
        extended: bool,
        suffix: Vec<Int>,
        heavy_order: Vec<usize>,
        heavy_prefix_x: Vec<Int>,
    }
    let ctx = Ctx { row, scaled, extended, suffix, heavy_order, heavy_prefix_x };

    fn walk(
        ctx: &Ctx,
        depth: usize,
        stack: &mut Vec<usize>,
        weight: &Int,
        xsum: &Int,
        best: &mut Option<Best>,
        stats: &mut SeparationStats,
    ) {
        if weight > ctx.row.capacity() {
            stats.candidates += 1;
            let den = &ctx.scaled.den;
            let slack = Int::from(stack.len() as i64 - 1) * den;
            if ctx.extended {
                let max_w = stack.iter().map(|&i| ctx.row.weight(i)).max().unwrap();
                // Count of all columns with weight >= max_w, as a prefix of
                // the weight-descending order.
                let cnt = ctx
                    .heavy_order
                    .partition_point(|&i| ctx.row.weight(i) >= max_w);
                let mut lhs = ctx.heavy_prefix_x[cnt].clone();
                // The cover's own heavy members were already counted once.
                for &i in stack.iter() {
                    if ctx.row.weight(i) < max_w {
                        lhs += &ctx.scaled.num[i];
                    }
                }
                let t = *stack
                    .iter()
                    .find(|&&i| ctx.row.weight(i) == max_w)
                    .unwrap();
                consider(best, lhs - slack, || Certificate::ExtendedCover {
                    cover: stack.clone(),
                    t,
                });
            } else {
                consider(best, xsum - slack, || Certificate::Cover { cover: stack.clone() });
            }
        }
        if depth == ctx.row.n() {
            return;
        }
        // No completion of this prefix can cover: prune.
        if weight + &ctx.suffix[depth] <= *ctx.row.capacity() {
            return;
        }
        let w2 = weight + ctx.row.weight(depth);
        let x2 = xsum + &ctx.scaled.num[depth];
        stack.push(depth);
        walk(ctx, depth + 1, stack, &w2, &x2, best, stats);
        stack.pop();
        walk(ctx, depth + 1, stack, weight, xsum, best, stats);
    }

    let mut stack = Vec::new();
    walk(&ctx, 0, &mut stack, &Int::zero(), &Int::zero(), best, stats);
}

/// For every pair (N, t) the violation of a configuration cut is maximized at
/// the smallest admissible k, and for that k at the subset holding the
/// largest point values; only that one candidate needs scoring.
fn config_bruteforce(row: &KnapsackRow, scaled: &Scaled, best: &mut Option<Best>, stats: &mut SeparationStats) {
    let n = row.n();
    let b = row.capacity();
    for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let order = weight_sorted(row, &members);
        let prefix_w = prefix_sums(row, &order);
        let total_w = prefix_w.last().unwrap().clone();
        if total_w > *b {
            continue;
        }
        // Members sorted by point value descending (index ascending on ties),
        // with running numerator sums.
        let mut by_x = members.clone();
        by_x.sort_by(|&i, &j| scaled.num[j].cmp(&scaled.num[i]).then(i.cmp(&j)));
        let mut prefix_x = Vec::with_capacity(by_x.len() + 1);
        prefix_x.push(Int::zero());
        for &i in &by_x {
            let last: Int = prefix_x.last().unwrap().clone();
            prefix_x.push(last + &scaled.num[i]);
        }
        let size = members.len();
        for t in 0..n {
            if mask >> t & 1 == 1 {
                continue;
            }
            let a_t = row.weight(t);
            if a_t + &total_w <= *b {
                continue;
            }
            // Smallest k with a_t + a(N_[k]) > b.
            let gap = b - a_t;
            let k3 = prefix_w.partition_point(|p| *p <= gap);
            let k = k3.max(2);
            if k > size {
                continue;
            }
            // a_t + a(N^[k-1]) <= b must hold; it only gets harder as k grows.
            if a_t + (&total_w - &prefix_w[size - (k - 1)]) > *b {
                continue;
            }
            stats.candidates += 1;
            // Extend the subset beyond k while each added element keeps the
            // violation from dropping: x_i > 1 - x_t.
            let threshold = &scaled.den - &scaled.num[t];
            let plateau = by_x.partition_point(|&i| scaled.num[i] > threshold);
            let s = plateau.max(k);
            let viol = &scaled.num[t] * Int::from((s - k + 1) as i64) + &prefix_x[s]
                - Int::from(s as i64) * &scaled.den;
            consider(best, viol, || {
                let mut subset: Vec<usize> = by_x[..s].to_vec();
                subset.sort_unstable();
                Certificate::Config { set_n: members.clone(), t, k, subset }
            });
        }
    }
}

/// For every pair (N, t) the generalized configuration cut weakens as k
/// grows, so only the smallest admissible k is scored.
fn genconfig_bruteforce(row: &KnapsackRow, scaled: &Scaled, best: &mut Option<Best>, stats: &mut SeparationStats) {
    let n = row.n();
    let b = row.capacity();
    for mask in 1u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let order = weight_sorted(row, &members);
        let prefix_w = prefix_sums(row, &order);
        let total_w = prefix_w.last().unwrap();
        let xsum: Int = members.iter().map(|&i| &scaled.num[i]).sum();
        let np = (1..=order.len())
            .take_while(|&m| prefix_w[m] <= *b)
            .count();
        for t in 0..n {
            if mask >> t & 1 == 1 {
                continue;
            }
            let a_t = row.weight(t);
            if a_t + total_w <= *b {
                continue;
            }
            let gap = b - a_t;
            let k = prefix_w.partition_point(|p| *p <= gap).max(1);
            stats.candidates += 1;
            let viol = &scaled.num[t] * Int::from((np + 1 - k) as i64) + &xsum
                - Int::from(np as i64) * &scaled.den;
            consider(best, viol, || Certificate::GenConfig {
                set_n: members.clone(),
                t,
                k,
                n_prime: np,
            });
        }
    }
}

/// Walks every pack of positive-weight columns depth-first in index order.
/// Zero-weight columns never change a weight cut's coefficients, rhs, or
/// violation, so packs are canonicalized to positive-weight support.
fn weight_bruteforce(row: &KnapsackRow, scaled: &Scaled, best: &mut Option<Best>, stats: &mut SeparationStats) {
    let n = row.n();
    let positive: Vec<usize> = (0..n).filter(|&i| row.weight(i).is_positive()).collect();
    // Columns sorted by weight ascending with suffix sums of a_j * num_j and
    // num_j, to price the heavy outsiders of a pack in one threshold lookup.
    let order = weight_sorted(row, &(0..n).collect::<Vec<_>>());
    let mut suffix_ax = vec![Int::zero(); n + 1];
    let mut suffix_x = vec![Int::zero(); n + 1];
    for d in (0..n).rev() {
        let i = order[d];
        suffix_ax[d] = &suffix_ax[d + 1] + row.weight(i) * &scaled.num[i];
        suffix_x[d] = &suffix_x[d + 1] + &scaled.num[i];
    }

    struct Ctx<'a> {
        row: &'a KnapsackRow,
        scaled: &'a Scaled,
        positive: Vec<usize>,
        order: Vec<usize>,
        suffix_ax: Vec<Int>,
        suffix_x: Vec<Int>,
    }
    let ctx = Ctx { row, scaled, positive, order, suffix_ax: suffix_ax, suffix_x };

    // Violation of the weight cut of the pack on the stack, times den.
    fn score(ctx: &Ctx, stack: &[usize], weight: &Int, ax_sum: &Int) -> Int {
        let r = ctx.row.capacity() - weight;
        // All columns with a_j > r, priced (a_j - r) * x_j.
        let pos = ctx.order.partition_point(|&i| *ctx.row.weight(i) <= r);
        let mut heavy = &ctx.suffix_ax[pos] - &r * &ctx.suffix_x[pos];
        // Remove the pack's own heavy members from that total.
        for &i in stack {
            if *ctx.row.weight(i) > r {
                heavy -= (ctx.row.weight(i) - &r) * &ctx.scaled.num[i];
            }
        }
        ax_sum + heavy - weight * &ctx.scaled.den
    }

    fn walk(
        ctx: &Ctx,
        pos: usize,
        stack: &mut Vec<usize>,
        weight: &Int,
        ax_sum: &Int,
        best: &mut Option<Best>,
        stats: &mut SeparationStats,
    ) {
        stats.candidates += 1;
        let viol = score(ctx, stack, weight, ax_sum);
        consider(best, viol, || Certificate::Weight { pack: stack.clone() });
        for idx in pos..ctx.positive.len() {
            let i = ctx.positive[idx];
            let w2 = weight + ctx.row.weight(i);
            if w2 > *ctx.row.capacity() {
                continue;
            }
            let ax2 = ax_sum + ctx.row.weight(i) * &ctx.scaled.num[i];
            stack.push(i);
            walk(ctx, idx + 1, stack, &w2, &ax2, best, stats);
            stack.pop();
        }
    }

    let mut stack = Vec::new();
    walk(&ctx, 0, &mut stack, &Int::zero(), &Int::zero(), best, stats);
}

/// Affine dimension of the feasible 0-1 points tight at the cut: -1 when no
/// point is tight, n-1 exactly when the cut is facet-defining. Requires a
/// full-dimensional polytope (every weight within the capacity) and rejects
/// cuts tight at every feasible point.
pub fn facet_rank(row: &KnapsackRow, cut: &Cut) -> Result<i64> {
    let n = row.n();
    if n > FACET_CAP {
        return Err(too_large(n, FACET_CAP, "tight-point rank"));
    }
    if cut.coeffs.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: cut.coeffs.len() });
    }
    for i in 0..n {
        if row.weight(i) > row.capacity() {
            return Err(Error::NotFullDimensional { index: i });
        }
    }
    let (coeffs, rhs) = integral_cut(cut);
    if coeffs.iter().all(|c| c.is_zero()) && rhs.is_zero() {
        return Err(Error::ImproperCut);
    }

    // Collect tight feasible points as 0/1 vectors and rank their differences
    // with fraction-free elimination; entries stay integral throughout.
    let mut base: Option<Vec<i64>> = None;
    let mut basis: Vec<Vec<Int>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    let mut chosen = vec![0i64; n];
    tight_dfs(
        row,
        &coeffs,
        &rhs,
        0,
        &Int::zero(),
        &Int::zero(),
        &mut chosen,
        &mut base,
        &mut basis,
        &mut pivots,
    );

    match base {
        None => Ok(-1),
        Some(_) => {
            let rank = basis.len() as i64;
            if rank == n as i64 {
                return Err(Error::ImproperCut);
            }
            Ok(rank)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn tight_dfs(
    row: &KnapsackRow,
    coeffs: &[Int],
    rhs: &Int,
    depth: usize,
    weight: &Int,
    lhs: &Int,
    chosen: &mut [i64],
    base: &mut Option<Vec<i64>>,
    basis: &mut Vec<Vec<Int>>,
    pivots: &mut Vec<usize>,
) {
    let n = chosen.len();
    if depth == n {
        if lhs == rhs {
            match base {
                None => *base = Some(chosen.to_vec()),
                Some(b) => {
                    if basis.len() < n {
                        let diff: Vec<Int> = (0..n)
                            .map(|i| Int::from(chosen[i] - b[i]))
                            .collect();
                        reduce_and_insert(diff, basis, pivots);
                    }
                }
            }
        }
        return;
    }
    if weight + row.weight(depth) <= *row.capacity() {
        chosen[depth] = 1;
        let w2 = weight + row.weight(depth);
        let l2 = lhs + &coeffs[depth];
        tight_dfs(row, coeffs, rhs, depth + 1, &w2, &l2, chosen, base, basis, pivots);
        chosen[depth] = 0;
    }
    tight_dfs(row, coeffs, rhs, depth + 1, weight, lhs, chosen, base, basis, pivots);
}

/// Fraction-free row reduction: eliminates known pivots from `v`, divides by
/// the content, and installs the result as a new basis row if nonzero.
fn reduce_and_insert(mut v: Vec<Int>, basis: &mut Vec<Vec<Int>>, pivots: &mut Vec<usize>) {
    for (b, &p) in basis.iter().zip(pivots.iter()) {
        if v[p].is_zero() {
            continue;
        }
        let vb = v[p].clone();
        let bb = b[p].clone();
        for j in 0..v.len() {
            v[j] = &v[j] * &bb - &b[j] * &vb;
        }
    }
    let content = v.iter().fold(Int::zero(), |g, e| g.gcd(e));
    if content.is_zero() {
        return;
    }
    for e in v.iter_mut() {
        *e = &*e / &content;
    }
    let pivot = v.iter().position(|e| !e.is_zero()).unwrap();
    basis.push(v);
    pivots.push(pivot);
}

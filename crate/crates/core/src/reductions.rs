//! Instance transformers that carry separation questions between families,
//! plus the subset-sum constructions behind the weight-inequality ones.
//!
//! The cover-to-richer-family transformers append one or two "sum columns"
//! whose weight in every row equals that row's total weight, raise each
//! capacity accordingly, and extend the point with ones. Any cover of the
//! new row system must use every sum column, which pins the richer
//! certificate down to a cover of the original system and makes the two
//! separation answers agree.
//!
//! The subset-sum transformers build a knapsack row (or a full row system
//! with a uniquely tight extreme point) whose uniform LP point admits a
//! violated weight inequality exactly when the subset-sum instance is
//! solvable.

use crate::error::{Error, Result};
use crate::model::{validate_instance, Instance, KnapsackRow, Point};
use crate::{Int, Rat};
use num::{One, Signed, Zero};

/// Hard cap for the exhaustive subset sweeps in this module.
const SUBSET_SWEEP_CAP: usize = 24;

/// A subset-sum question: is there S with alpha(S) = w?
///
/// Weights are at least 1 and the target exceeds every single weight; the
/// transformers below are built for exactly that regime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SspInstance {
    alpha: Vec<Int>,
    w: Int,
}

impl SspInstance {
    pub fn new(alpha: Vec<Int>, w: Int) -> Result<Self> {
        if alpha.is_empty() {
            return Err(Error::InvalidSsp("no weights".into()));
        }
        for (i, a) in alpha.iter().enumerate() {
            if *a < Int::one() {
                return Err(Error::InvalidSsp(format!("weight {i} is below 1")));
            }
        }
        let max = alpha.iter().max().unwrap();
        if w <= *max {
            return Err(Error::InvalidSsp(format!(
                "target {w} does not exceed the largest weight {max}"
            )));
        }
        Ok(SspInstance { alpha, w })
    }

    /// Convenience constructor for literal data; panics on invalid input.
    pub fn from_u64(alpha: &[u64], w: u64) -> Self {
        SspInstance::new(alpha.iter().map(|&a| Int::from(a)).collect(), Int::from(w))
            .expect("literal subset-sum data must be valid")
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[Int] {
        &self.alpha
    }

    pub fn w(&self) -> &Int {
        &self.w
    }
}

/// A transformed instance, the matching point, and human-readable notes on
/// the constants the transformer chose.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub instance: Instance,
    pub point: Point,
    pub notes: Vec<String>,
}

/// Appends one sum column: extended-cover separation on the image agrees
/// with cover separation on the input.
pub fn reduce_ci_to_eci(inst: &Instance, x: &Point) -> Result<ReductionOutput> {
    sum_column_reduction(inst, x, 1, "extended cover")
}

/// Appends two sum columns: configuration separation on the image agrees
/// with cover separation on the input.
pub fn reduce_ci_to_config(inst: &Instance, x: &Point) -> Result<ReductionOutput> {
    sum_column_reduction(inst, x, 2, "configuration")
}

/// Appends two sum columns: generalized-configuration separation on the
/// image agrees with cover separation on the input.
pub fn reduce_ci_to_genconfig(inst: &Instance, x: &Point) -> Result<ReductionOutput> {
    sum_column_reduction(inst, x, 2, "generalized configuration")
}

fn sum_column_reduction(
    inst: &Instance,
    x: &Point,
    copies: usize,
    target: &str,
) -> Result<ReductionOutput> {
    validate_instance(inst, Some(x))?;
    let row_sums: Vec<Int> = inst.rows().iter().map(|r| r.weights().iter().sum()).collect();
    let rows: Vec<KnapsackRow> = inst
        .rows()
        .iter()
        .zip(&row_sums)
        .map(|(row, sum)| {
            let mut weights = row.weights().to_vec();
            weights.extend(std::iter::repeat(sum.clone()).take(copies));
            let capacity = row.capacity() + sum * Int::from(copies as i64);
            KnapsackRow::new(weights, capacity)
        })
        .collect::<Result<_>>()?;

    // Any objective weight beyond every dual pricing of a sum column keeps
    // the extended point optimal whenever the input point was. Each optimal
    // dual multiplier is at most the full objective sum (capacities are at
    // least 1), so objective-sum times total matrix weight is such a bound.
    let c_sum: Int = inst.objective().iter().sum();
    let weight_total: Int = row_sums.iter().sum();
    let mut m = Int::one() + c_sum * weight_total;
    if !m.is_positive() {
        m = Int::one();
    }
    let mut objective = inst.objective().to_vec();
    objective.extend(std::iter::repeat(m.clone()).take(copies));

    let mut coords = x.coords().to_vec();
    coords.extend(std::iter::repeat(Rat::one()).take(copies));

    let name = inst.name().map(|s| format!("{s}+sum"));
    let instance = Instance::new(rows, objective, name)?;
    let point = Point::new(coords);
    validate_instance(&instance, Some(&point))?;
    let notes = vec![
        format!(
            "appended {copies} sum column(s); each weighs a full row and raises that row's capacity by itself"
        ),
        format!(
            "sum-column objective weight {m} = 1 + (objective sum) * (total matrix weight), beyond any optimal dual pricing"
        ),
        format!("a violated cover on the input matches a violated {target} certificate on the image, and back"),
    ];
    Ok(ReductionOutput { instance, point, notes })
}

/// Builds the single-row weight-inequality image of a subset-sum question:
/// column i carries alpha_i + 2, one heavy column absorbs the slack, n + 1
/// columns carry weight 2, and the uniform point makes the row tight. A
/// violated weight inequality exists at that point exactly when some S has
/// alpha(S) = w.
pub fn reduce_ssp_to_wi(ssp: &SspInstance) -> Result<ReductionOutput> {
    let n = ssp.n();
    let n_int = Int::from(n as i64);
    let alpha_total: Int = ssp.alpha().iter().sum();
    let two = Int::from(2);

    let mut weights: Vec<Int> = ssp.alpha().iter().map(|a| a + &two).collect();
    let n_plus_1 = &n_int + Int::one();
    let heavy: Int = ssp.w() * &n_plus_1 + &two * &n_plus_1 * &n_plus_1
        - Int::from(3) * &n_int
        - &alpha_total;
    weights.push(heavy.clone());
    weights.extend(std::iter::repeat(two.clone()).take(n + 1));

    let b = ssp.w() + &two * &n_int + Int::from(3);
    let total: Int = weights.iter().sum();
    debug_assert_eq!(total, &n_plus_1 * &b + Int::one());

    let row = KnapsackRow::new(weights.clone(), b.clone())?;
    let value = Rat::new(b.clone(), total.clone());
    let point = Point::uniform(2 * n + 2, value.clone());
    let instance = Instance::new(vec![row], weights, None)?;
    validate_instance(&instance, Some(&point))?;
    let notes = vec![
        format!("2n+2 = {} columns, capacity {b}, total weight {total}", 2 * n + 2),
        format!("uniform point {value} makes the row tight; the point is optimal because the objective equals the weights"),
        format!("heavy column weight {heavy} keeps it out of every qualifying pack"),
    ];
    Ok(ReductionOutput { instance, point, notes })
}

/// Builds the multi-row variant whose point is an extreme point of the LP:
/// the tight knapsack row on the y-block, a cycle of pair rows on the
/// z-block, and one coupling row per y column. All rows are scaled by the
/// y-block total weight so the data stays integral; the point is not
/// scaled. Weight-inequality separation over the whole system agrees with
/// separation on the knapsack row alone.
pub fn reduce_ssp_to_wi_extreme(ssp: &SspInstance) -> Result<ReductionOutput> {
    let single = reduce_ssp_to_wi(ssp)?;
    let y_row = single.instance.row(0);
    let big_n = y_row.n();
    let vars = 2 * big_n;
    let scale: Int = y_row.weights().iter().sum();
    let b = y_row.capacity().clone();
    let two_scale = Int::from(2) * &scale;

    let mut rows = Vec::with_capacity(1 + 2 * big_n);
    let mut knap = vec![Int::zero(); vars];
    for (j, w) in y_row.weights().iter().enumerate() {
        knap[j] = w * &scale;
    }
    rows.push(KnapsackRow::new(knap, &scale * &b)?);
    for i in 0..big_n {
        let mut pair = vec![Int::zero(); vars];
        pair[big_n + i] = scale.clone();
        pair[big_n + (i + 1) % big_n] = scale.clone();
        rows.push(KnapsackRow::new(pair, scale.clone())?);
    }
    for i in 0..big_n {
        let mut coupling = vec![Int::zero(); vars];
        coupling[i] = scale.clone();
        for z in 0..3 {
            coupling[big_n + z] = two_scale.clone();
        }
        rows.push(KnapsackRow::new(coupling, Int::from(3) * &scale + &b)?);
    }

    let mut objective = y_row.weights().to_vec();
    objective.extend(std::iter::repeat(Int::one()).take(big_n));

    let eps = Rat::new(b.clone(), scale.clone());
    let half = Rat::new(Int::one(), Int::from(2));
    let mut coords = vec![eps.clone(); big_n];
    coords.extend(std::iter::repeat(half).take(big_n));

    let instance = Instance::new(rows, objective, None)?;
    let point = Point::new(coords);
    validate_instance(&instance, Some(&point))?;
    let notes = vec![
        format!("{vars} variables: a y block of {big_n} and a z block of {big_n}; every row scaled by {scale}"),
        format!("point (eps, ..., eps, 1/2, ..., 1/2) with eps = {eps} is the unique solution of 2N tight independent rows, hence an extreme point"),
        "only the scaled knapsack row can carry a violated weight inequality; the pair and coupling rows never do".into(),
    ];
    Ok(ReductionOutput { instance, point, notes })
}

/// Decides the pack characterization of the uniform tight point
/// b / a([n]): some pack P with r(P) > 0 must cover [n] together with
/// C(P), forcing |C(P)| to equal floor(a([n]) / b). Exhaustive over
/// complements, so the row is capped at 24 columns. Errors when b divides
/// the total weight; when the total is below b the uniform point leaves
/// the box and nothing separates.
///
/// The characterization equals weight-inequality separability at that
/// point exactly when every column fits the row alone (max a_i <= b). A
/// column heavier than b makes the empty pack's inequality a_i x_i - b x_i
/// <= 0 violated at any positive point, while no pack need satisfy the
/// three conditions; this routine then still answers for the
/// characterization, not for separability. The subset-sum image rows built
/// above carry exactly one such column by design.
pub fn uniform_wi_separable(row: &KnapsackRow) -> Result<bool> {
    let n = row.n();
    if n > SUBSET_SWEEP_CAP {
        return Err(Error::TooLarge(format!(
            "{n} columns exceed the exhaustive sweep cap of {SUBSET_SWEEP_CAP}"
        )));
    }
    let total: Int = row.weights().iter().sum();
    let b = row.capacity();
    if (&total % b).is_zero() {
        return Err(Error::DivisibleTotal);
    }
    let q_int = &total / b;
    if q_int.is_zero() {
        return Ok(false);
    }
    let Ok(q) = usize::try_from(u64::try_from(&q_int).unwrap_or(u64::MAX)) else {
        return Ok(false);
    };
    if q > n {
        return Ok(false);
    }
    // The complement of a qualifying pack has exactly q members, all heavier
    // than the residual capacity r = b - a(P) = b - total + a(complement).
    let threshold = &total - b;
    let candidates: Vec<usize> =
        (0..n).filter(|&i| row.weight(i).is_positive()).collect();
    let mut suffix = vec![Int::zero(); candidates.len() + 1];
    for (pos, &i) in candidates.iter().enumerate().rev() {
        suffix[pos] = &suffix[pos + 1] + row.weight(i);
    }
    let mut chosen = Vec::new();
    complement_dfs(row, &candidates, &suffix, 0, q, &Int::zero(), &threshold, &mut chosen)
}

#[allow(clippy::too_many_arguments)]
fn complement_dfs(
    row: &KnapsackRow,
    candidates: &[usize],
    suffix: &[Int],
    from: usize,
    need: usize,
    weight: &Int,
    threshold: &Int,
    chosen: &mut Vec<usize>,
) -> Result<bool> {
    if need == 0 {
        // r = b - a(P) = a(complement) - (total - b); the pack must leave
        // room and every complement member must overshoot that room.
        let r = weight - threshold;
        if !r.is_positive() {
            return Ok(false);
        }
        return Ok(chosen.iter().all(|&i| *row.weight(i) > r));
    }
    for pos in from..candidates.len() {
        if candidates.len() - pos < need {
            break;
        }
        let w2 = weight + row.weight(candidates[pos]);
        // Even the heaviest completion cannot make r positive.
        if &w2 + &suffix[pos + 1] <= *threshold {
            continue;
        }
        chosen.push(candidates[pos]);
        let hit = complement_dfs(
            row,
            candidates,
            suffix,
            pos + 1,
            need - 1,
            &w2,
            threshold,
            chosen,
        )?;
        chosen.pop();
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exhaustive subset-sum decision: the lexicographically smallest S with
/// alpha(S) = w, or None. Capped at 24 weights.
pub fn ssp_bruteforce(ssp: &SspInstance) -> Result<Option<Vec<usize>>> {
    let n = ssp.n();
    if n > SUBSET_SWEEP_CAP {
        return Err(Error::TooLarge(format!(
            "{n} weights exceed the exhaustive sweep cap of {SUBSET_SWEEP_CAP}"
        )));
    }
    let mut suffix = vec![Int::zero(); n + 1];
    for i in (0..n).rev() {
        suffix[i] = &suffix[i + 1] + &ssp.alpha()[i];
    }
    let mut chosen = Vec::new();
    Ok(ssp_dfs(ssp, &suffix, 0, &Int::zero(), &mut chosen))
}

fn ssp_dfs(
    ssp: &SspInstance,
    suffix: &[Int],
    from: usize,
    sum: &Int,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if sum == ssp.w() {
        return Some(chosen.clone());
    }
    if from == ssp.n() || sum > ssp.w() || sum + &suffix[from] < *ssp.w() {
        return None;
    }
    chosen.push(from);
    let with = ssp_dfs(ssp, suffix, from + 1, &(sum + &ssp.alpha()[from]), chosen);
    chosen.pop();
    if with.is_some() {
        return with;
    }
    ssp_dfs(ssp, suffix, from + 1, sum, chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn ssp_instance_rejects_bad_data() {
        assert!(SspInstance::new(vec![], Int::from(3)).is_err());
        assert!(SspInstance::new(vec![Int::zero()], Int::from(3)).is_err());
        assert!(SspInstance::new(vec![Int::from(4)], Int::from(4)).is_err());
        assert!(SspInstance::new(vec![Int::from(2)], Int::from(3)).is_ok());
    }

    #[test]
    fn sum_column_shapes_come_out_right() {
        let inst = Instance::single(KnapsackRow::from_u64(&[3, 4, 5], 8));
        let x = Point::new(vec![rat(1, 1), rat(1, 2), rat(1, 2)]);
        let out = reduce_ci_to_eci(&inst, &x).unwrap();
        assert_eq!(out.instance.n(), 4);
        assert_eq!(*out.instance.row(0).weight(3), Int::from(12));
        assert_eq!(*out.instance.row(0).capacity(), Int::from(20));
        assert_eq!(*out.point.coord(3), rat(1, 1));

        let out2 = reduce_ci_to_config(&inst, &x).unwrap();
        assert_eq!(out2.instance.n(), 5);
        assert_eq!(*out2.instance.row(0).capacity(), Int::from(32));
        assert_eq!(out2.instance.objective()[3], out2.instance.objective()[4]);
    }

    #[test]
    fn ssp_row_matches_the_worked_numbers() {
        // alpha = (1, 2), w = 3: columns (3, 4, 18, 2, 2, 2), capacity 10.
        let ssp = SspInstance::from_u64(&[1, 2], 3);
        let out = reduce_ssp_to_wi(&ssp).unwrap();
        let row = out.instance.row(0);
        let expect: Vec<Int> = [3u64, 4, 18, 2, 2, 2].iter().map(|&v| Int::from(v)).collect();
        assert_eq!(row.weights(), &expect[..]);
        assert_eq!(*row.capacity(), Int::from(10));
        assert_eq!(*out.point.coord(0), rat(10, 31));
    }

    #[test]
    fn extreme_variant_is_feasible_and_scaled() {
        let ssp = SspInstance::from_u64(&[1, 2], 3);
        let out = reduce_ssp_to_wi_extreme(&ssp).unwrap();
        assert_eq!(out.instance.n(), 12);
        assert_eq!(out.instance.m(), 13);
        // Knapsack row: weights scaled by the total 31, capacity 31 * 10.
        assert_eq!(*out.instance.row(0).weight(0), Int::from(93));
        assert_eq!(*out.instance.row(0).capacity(), Int::from(310));
        // Coupling row capacity: 3 * 31 + 10.
        assert_eq!(*out.instance.row(7).capacity(), Int::from(103));
        assert_eq!(*out.point.coord(0), rat(10, 31));
        assert_eq!(*out.point.coord(6), rat(1, 2));
    }

    #[test]
    fn uniform_separability_matches_hand_cases() {
        // alpha = (1, 2), w = 3 image: separable (S = {0, 1} hits 3).
        let yes = reduce_ssp_to_wi(&SspInstance::from_u64(&[1, 2], 3)).unwrap();
        assert!(uniform_wi_separable(yes.instance.row(0)).unwrap());
        // alpha = (2, 2), w = 3 image: no subset sums to 3.
        let no = reduce_ssp_to_wi(&SspInstance::from_u64(&[2, 2], 3)).unwrap();
        assert!(!uniform_wi_separable(no.instance.row(0)).unwrap());
        // Divisible total is rejected.
        let row = KnapsackRow::from_u64(&[2, 2, 2], 3);
        assert_eq!(uniform_wi_separable(&row), Err(Error::DivisibleTotal));
    }

    #[test]
    fn overweight_column_departs_from_plain_separability() {
        // Column 6 outweighs the capacity, so the empty pack's inequality
        // x_6 <= 0 is violated at the uniform point; the pack
        // characterization still answers no, because no complement of
        // size 3 can push the residual above zero.
        let row = KnapsackRow::from_u64(&[3, 4, 1, 6, 8, 1, 10], 9);
        assert!(!uniform_wi_separable(&row).unwrap());
    }

    #[test]
    fn subset_sum_sweep_finds_the_smallest_witness() {
        let ssp = SspInstance::from_u64(&[2, 1, 3, 2], 4);
        // Both {0, 3} and {1, 2} sum to 4; {0, 3} comes first.
        assert_eq!(ssp_bruteforce(&ssp).unwrap(), Some(vec![0, 3]));
        let miss = SspInstance::from_u64(&[2, 4], 5);
        assert_eq!(ssp_bruteforce(&miss).unwrap(), None);
    }
}

//! Seeded random instances and the greedy LP point that makes them
//! interesting to separate.
//!
//! The generator aims points at the knapsack boundary: a random prefix of
//! ones while everything still fits, then up to three fractional
//! coordinates that each tighten some row exactly. Points on the boundary
//! are where the cut families earn their keep; a zero fractional budget
//! yields a binary feasible point, which no valid cut may touch.

use crate::error::{Error, Result};
use crate::model::{Instance, KnapsackRow, Point};
use crate::{Int, Rat};
use num::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Builds a seeded random instance with `m` rows over `n` columns, weights
/// in 1..=weight_max, capacities between a quarter and three quarters of
/// each row's total, and a feasible point with at most three fractional
/// coordinates.
pub fn gen_random(n: usize, m: usize, weight_max: u64, seed: u64) -> Result<(Instance, Point)> {
    if n == 0 || m == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    if weight_max == 0 {
        return Err(Error::NonPositiveWeight { index: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=weight_max)).collect();
        let sum: u64 = weights.iter().sum();
        let lo = (sum / 4).max(1);
        let hi = (3 * sum / 4).max(lo);
        let capacity = rng.gen_range(lo..=hi);
        rows.push(KnapsackRow::from_u64(&weights, capacity));
    }
    let objective: Vec<Int> = (0..n).map(|_| Int::from(rng.gen_range(1..=weight_max))).collect();
    let instance = Instance::new(rows, objective, None)?;

    // Walk the columns in random order, setting ones while they fit. When a
    // column no longer fits, spend a fractional slot on the largest value
    // that keeps every row feasible, which leaves some row tight.
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut slack: Vec<Int> = instance.rows().iter().map(|r| r.capacity().clone()).collect();
    let mut coords = vec![Rat::zero(); n];
    let mut fractional_left = rng.gen_range(0..=3u32);
    for &j in &order {
        let fits = instance
            .rows()
            .iter()
            .zip(&slack)
            .all(|(row, s)| row.weight(j) <= s);
        if fits {
            coords[j] = Rat::one();
            for (row, s) in instance.rows().iter().zip(slack.iter_mut()) {
                *s -= row.weight(j);
            }
            continue;
        }
        if fractional_left == 0 {
            continue;
        }
        let headroom = instance
            .rows()
            .iter()
            .zip(&slack)
            .filter(|(row, _)| row.weight(j).is_positive())
            .map(|(row, s)| Rat::new(s.clone(), row.weight(j).clone()))
            .min();
        if let Some(t) = headroom {
            if t.is_positive() {
                for (row, s) in instance.rows().iter().zip(slack.iter_mut()) {
                    let used = &t * Rat::from_integer(row.weight(j).clone());
                    // The tight row ends with zero slack; keep slack integral
                    // by flooring, which only makes later fits stricter.
                    *s = (Rat::from_integer(s.clone()) - used).floor().to_integer();
                }
                coords[j] = t;
                fractional_left -= 1;
            }
        }
    }

    let point = Point::new(coords);
    Ok((instance, point))
}

/// The greedy fractional knapsack point for one row: columns sorted by
/// objective-to-weight ratio (ties: larger objective, then smaller index),
/// filled to 1 while the capacity lasts, with a single fractional column at
/// the break. Zero-weight columns have infinite ratio and always enter.
pub fn gen_lp_greedy_point(row: &KnapsackRow, objective: &[Int]) -> Result<Point> {
    if objective.len() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: objective.len() });
    }
    let mut order: Vec<usize> = (0..row.n()).collect();
    order.sort_by(|&i, &j| {
        let cross_i = &objective[i] * row.weight(j);
        let cross_j = &objective[j] * row.weight(i);
        cross_j
            .cmp(&cross_i)
            .then_with(|| objective[j].cmp(&objective[i]))
            .then_with(|| i.cmp(&j))
    });

    let mut remaining = row.capacity().clone();
    let mut coords = vec![Rat::zero(); row.n()];
    for &j in &order {
        if remaining.is_zero() {
            break;
        }
        let w = row.weight(j);
        if w <= &remaining {
            coords[j] = Rat::one();
            remaining -= w;
        } else {
            coords[j] = Rat::new(remaining.clone(), w.clone());
            remaining = Int::zero();
        }
    }
    Ok(Point::new(coords))
}

//! Generalized configuration separation over the fractional support.
//!
//! Candidates take N as all x = 1 columns plus a subset of the fractional
//! support, with the pivot t outside N. For a fixed pair the cut only weakens
//! as k grows, so k is pinned to the smallest admissible value, and the pack
//! number n' follows from N alone. Everything else is a prefix scan of N in
//! weight order.

use crate::cuts::{build_cut, Certificate};
use crate::error::{Error, Result};
use crate::model::{KnapsackRow, Point};
use crate::oracles::Scaled;
use crate::separators::{SeparationResult, SeparationStats, SparseBudget};
use crate::Int;
use itertools::Itertools;
use num::{Signed, Zero};

/// Decides whether any generalized configuration inequality is violated.
///
/// Enumeration order: fractional subset size ascending, then t ascending,
/// then subsets of that size in lexicographic order. The first violated
/// candidate is returned. Exponential only in the fractional support, which
/// is capped by `budget.alpha_count`.
pub fn separate_genconfig_sparse(
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

    let ones: Vec<usize> = (0..n).filter(|&i| scaled.num[i] == scaled.den).collect();
    // The x = 1 columns in weight order, for prefix scans of N.
    let mut ones_by_w = ones.clone();
    ones_by_w.sort_by(|&i, &j| row.weight(i).cmp(row.weight(j)).then(i.cmp(&j)));
    let ones_weight: Int = ones.iter().map(|&i| row.weight(i)).sum();
    let b = row.capacity();

    for size in 0..=fractional.len() {
        for t in 0..n {
            let a_t = row.weight(t);
            let pool: Vec<usize> = fractional.iter().copied().filter(|&i| i != t).collect();
            if size > pool.len() {
                continue;
            }
            for chosen in pool.iter().copied().combinations(size) {
                let in_ones = ones.binary_search(&t).is_ok();
                let members = ones.len() - usize::from(in_ones) + chosen.len();
                if members == 0 {
                    continue;
                }
                let total = &ones_weight - if in_ones { a_t.clone() } else { Int::zero() }
                    + chosen.iter().map(|&i| row.weight(i)).sum::<Int>();
                if a_t + &total <= *b {
                    continue;
                }
                stats.candidates += 1;
                // Merge the two weight-ordered views of N and scan prefixes:
                // k is the first prefix that, with a_t, overshoots b, and n'
                // counts the prefixes that still fit on their own.
                let mut nf_by_w = chosen.clone();
                nf_by_w.sort_by(|&i, &j| row.weight(i).cmp(row.weight(j)).then(i.cmp(&j)));
                let gap = b - a_t;
                let mut run = Int::zero();
                let mut count = 0usize;
                let mut k = 0usize;
                let mut np = 0usize;
                let mut oi = 0;
                let mut fi = 0;
                loop {
                    let next = match (ones_by_w.get(oi), nf_by_w.get(fi)) {
                        (Some(&o), _) if o == t => {
                            oi += 1;
                            continue;
                        }
                        (Some(&o), Some(&f)) => {
                            let pick_o = (row.weight(o), o) <= (row.weight(f), f);
                            if pick_o {
                                oi += 1;
                                o
                            } else {
                                fi += 1;
                                f
                            }
                        }
                        (Some(&o), None) => {
                            oi += 1;
                            o
                        }
                        (None, Some(&f)) => {
                            fi += 1;
                            f
                        }
                        (None, None) => break,
                    };
                    run += row.weight(next);
                    count += 1;
                    if k == 0 && run > gap {
                        k = count;
                    }
                    if run <= *b {
                        np = count;
                    } else {
                        break;
                    }
                }
                debug_assert!(k >= 1, "a_t + a(N) > b guarantees an admissible k");
                let x_n = Int::from((ones.len() - usize::from(in_ones)) as i64) * &scaled.den
                    + chosen.iter().map(|&i| &scaled.num[i]).sum::<Int>();
                let viol = Int::from((np + 1 - k) as i64) * &scaled.num[t] + x_n
                    - Int::from(np as i64) * &scaled.den;
                if !viol.is_positive() {
                    continue;
                }
                let mut set_n: Vec<usize> =
                    ones.iter().copied().filter(|&i| i != t).chain(chosen).collect();
                set_n.sort_unstable();
                let cut = build_cut(
                    row,
                    &Certificate::GenConfig { set_n, t, k, n_prime: np },
                )?;
                return Ok(SeparationResult::yes(cut, stats));
            }
        }
    }
    Ok(SeparationResult::no(stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::violation;
    use crate::model::Point;
    use crate::rat;

    #[test]
    fn pivot_with_ones_forms_a_candidate() {
        // One column too heavy to join the four chosen ones; its fractional
        // value is priced by the generalized configuration cut.
        let row = KnapsackRow::from_u64(&[2, 4, 5, 6, 7, 20], 30);
        let x = Point::new(vec![
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(3, 10),
        ]);
        let res = separate_genconfig_sparse(&row, &x, &SparseBudget::default()).unwrap();
        let cut = res.cut.expect("violated generalized configuration");
        assert!(violation(&cut, &x).unwrap().is_positive());
        assert_eq!(
            cut.certificate,
            Certificate::GenConfig { set_n: vec![0, 1, 2, 3, 4], t: 5, k: 3, n_prime: 5 }
        );
    }

    #[test]
    fn integral_points_yield_no_candidate() {
        let row = KnapsackRow::from_u64(&[2, 4, 5, 6, 7, 20], 30);
        let x = Point::new(vec![
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(0, 1),
        ]);
        assert!(!separate_genconfig_sparse(&row, &x, &SparseBudget::default())
            .unwrap()
            .decision);
    }
}

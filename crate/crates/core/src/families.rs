//! Membership predicates for covers, packs, and configurations.
//!
//! Every routine orders indices by the fixed total order (weight ascending,
//! index ascending). S_[k] means the k smallest elements of S under that
//! order, S^[k] the k largest, both empty for k = 0.

use crate::error::{Error, Result};
use crate::model::{canonical_set, KnapsackRow, Point};
use crate::Int;
use num::Zero;

/// Indices of `set` sorted by (weight ascending, index ascending).
pub(crate) fn weight_sorted(row: &KnapsackRow, set: &[usize]) -> Vec<usize> {
    let mut order = set.to_vec();
    order.sort_by(|&i, &j| row.weight(i).cmp(row.weight(j)).then(i.cmp(&j)));
    order
}

/// Running weight sums of a sorted slice: prefix[k] = a of the first k items.
pub(crate) fn prefix_sums(row: &KnapsackRow, sorted: &[usize]) -> Vec<Int> {
    let mut prefix = Vec::with_capacity(sorted.len() + 1);
    prefix.push(Int::zero());
    for &i in sorted {
        let last = prefix.last().unwrap().clone();
        prefix.push(last + row.weight(i));
    }
    prefix
}

/// Returns (S_[k], S^[k]), each reported in ascending index order.
pub fn k_extremes(row: &KnapsackRow, set: &[usize], k: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let set = canonical_set(set, row.n())?;
    if k > set.len() {
        return Err(Error::KOutOfRange { k, lo: 0, hi: set.len() });
    }
    let order = weight_sorted(row, &set);
    let mut smallest: Vec<usize> = order[..k].to_vec();
    let mut largest: Vec<usize> = order[order.len() - k..].to_vec();
    smallest.sort_unstable();
    largest.sort_unstable();
    Ok((smallest, largest))
}

/// Residual capacity r(P) = b - a(P) and the heavy complement
/// C(P) = {i not in P : a_i > r(P)} of a pack.
pub fn pack_geometry(row: &KnapsackRow, pack: &[usize]) -> Result<(Int, Vec<usize>)> {
    let pack = canonical_set(pack, row.n())?;
    let total = row.weight_sum(&pack);
    if total > *row.capacity() {
        return Err(Error::NotAPack);
    }
    let r = row.capacity() - &total;
    let mut heavy = Vec::new();
    let mut inside = vec![false; row.n()];
    for &i in &pack {
        inside[i] = true;
    }
    for i in 0..row.n() {
        if !inside[i] && *row.weight(i) > r {
            heavy.push(i);
        }
    }
    Ok((r, heavy))
}

/// The three mutually consistent set classes of one subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubsetClass {
    pub is_cover: bool,
    pub is_minimal_cover: bool,
    pub is_pack: bool,
}

/// Classifies `set` as cover / minimal cover / pack by exact weight sums.
pub fn classify_subset(row: &KnapsackRow, set: &[usize]) -> Result<SubsetClass> {
    let set = canonical_set(set, row.n())?;
    let total = row.weight_sum(&set);
    let is_cover = total > *row.capacity();
    // Minimal: dropping any single element stops covering; it suffices to
    // drop one of minimum weight.
    let is_minimal_cover = is_cover
        && set
            .iter()
            .map(|&i| row.weight(i))
            .min()
            .map(|w| &total - w <= *row.capacity())
            .unwrap_or(false);
    Ok(SubsetClass {
        is_cover,
        is_minimal_cover,
        is_pack: !is_cover,
    })
}

/// Shrinks a cover to a minimal cover, preserving any violation of its
/// inequality at `x`. Repeatedly drops the still-removable element with the
/// smallest x value, ties broken by the smaller index.
pub fn minimize_cover(row: &KnapsackRow, cover: &[usize], x: &Point) -> Result<Vec<usize>> {
    let mut c = canonical_set(cover, row.n())?;
    if x.n() != row.n() {
        return Err(Error::DimensionMismatch { expected: row.n(), got: x.n() });
    }
    let mut total = row.weight_sum(&c);
    if total <= *row.capacity() {
        return Err(Error::NotACover);
    }
    loop {
        let mut chosen: Option<usize> = None;
        for (pos, &j) in c.iter().enumerate() {
            if &total - row.weight(j) > *row.capacity() {
                let better = match chosen {
                    None => true,
                    Some(best_pos) => x.coord(j) < x.coord(c[best_pos]),
                };
                if better {
                    chosen = Some(pos);
                }
            }
        }
        match chosen {
            Some(pos) => {
                total -= row.weight(c[pos]);
                c.remove(pos);
            }
            None => return Ok(c),
        }
    }
}

fn config_shape(row: &KnapsackRow, set_n: &[usize], t: usize, k: usize, k_lo: usize) -> Result<Vec<usize>> {
    let set_n = canonical_set(set_n, row.n())?;
    if t >= row.n() {
        return Err(Error::IndexOutOfRange { index: t, len: row.n() });
    }
    if set_n.binary_search(&t).is_ok() {
        return Err(Error::BadConfigShape(format!("t = {t} lies inside N")));
    }
    if set_n.is_empty() {
        return Err(Error::BadConfigShape("N is empty".into()));
    }
    if k < k_lo || k > set_n.len() {
        return Err(Error::BadConfigShape(format!(
            "k = {k} outside {k_lo}..={}",
            set_n.len()
        )));
    }
    Ok(set_n)
}

/// True when (N, t, k) is a (1,k)-configuration: N is a pack and every
/// k-subset of N together with t is a minimal cover. Checked through the
/// sorted-order characterization: a(N) <= b, a_t + a(N^[k-1]) <= b, and
/// a_t + a(N_[k]) > b, with 2 <= k <= |N| and t outside N.
pub fn is_config(row: &KnapsackRow, set_n: &[usize], t: usize, k: usize) -> Result<bool> {
    let set_n = config_shape(row, set_n, t, k, 2)?;
    let order = weight_sorted(row, &set_n);
    let prefix = prefix_sums(row, &order);
    let total = prefix.last().unwrap();
    let b = row.capacity();
    if total > b {
        return Ok(false);
    }
    // a(N^[k-1]) is the whole sum minus the |N|-(k-1) smallest.
    let top = total - &prefix[order.len() - (k - 1)];
    if row.weight(t) + top > *b {
        return Ok(false);
    }
    Ok(row.weight(t) + &prefix[k] > *b)
}

/// True when every k-subset of N together with t is a cover:
/// a_t + a(N_[k]) > b, with 1 <= k <= |N| and t outside N.
pub fn is_generalized_config(row: &KnapsackRow, set_n: &[usize], t: usize, k: usize) -> Result<bool> {
    let set_n = config_shape(row, set_n, t, k, 1)?;
    let order = weight_sorted(row, &set_n);
    let prefix = prefix_sums(row, &order);
    Ok(row.weight(t) + &prefix[k] > *row.capacity())
}

/// Largest cardinality of a pack inside N: the longest weight-ascending
/// prefix of N whose sum stays within the capacity.
pub fn n_prime(row: &KnapsackRow, set_n: &[usize]) -> Result<usize> {
    let set_n = canonical_set(set_n, row.n())?;
    let order = weight_sorted(row, &set_n);
    let prefix = prefix_sums(row, &order);
    Ok((1..=order.len())
        .take_while(|&k| prefix[k] <= *row.capacity())
        .count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn row_a() -> KnapsackRow {
        KnapsackRow::from_u64(&[2, 4, 5, 6, 7, 20], 30)
    }

    fn row_b() -> KnapsackRow {
        KnapsackRow::from_u64(&[2, 4, 7, 10, 10, 20], 30)
    }

    #[test]
    fn k_extremes_returns_both_ends_of_the_weight_order() {
        let (lo, hi) = k_extremes(&row_a(), &[0, 1, 2, 3, 4], 3).unwrap();
        assert_eq!(lo, vec![0, 1, 2]);
        assert_eq!(hi, vec![2, 3, 4]);
    }

    #[test]
    fn k_extremes_with_k_zero_is_empty() {
        let (lo, hi) = k_extremes(&row_a(), &[0, 3, 5], 0).unwrap();
        assert!(lo.is_empty());
        assert!(hi.is_empty());
    }

    #[test]
    fn k_extremes_breaks_weight_ties_by_index() {
        let row = KnapsackRow::from_u64(&[3, 3, 3], 5);
        let (lo, hi) = k_extremes(&row, &[0, 1, 2], 2).unwrap();
        assert_eq!(lo, vec![0, 1]);
        assert_eq!(hi, vec![1, 2]);
    }

    #[test]
    fn k_extremes_rejects_oversized_k() {
        assert_eq!(
            k_extremes(&row_a(), &[0, 1], 3),
            Err(Error::KOutOfRange { k: 3, lo: 0, hi: 2 })
        );
    }

    #[test]
    fn pack_geometry_reports_residual_and_heavy_outsiders() {
        let (r, heavy) = pack_geometry(&row_a(), &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(r, int(6));
        assert_eq!(heavy, vec![5]);
    }

    #[test]
    fn pack_geometry_of_empty_pack_flags_overweight_items() {
        let row = KnapsackRow::from_u64(&[3, 4, 18, 2, 2, 2], 10);
        let (r, heavy) = pack_geometry(&row, &[]).unwrap();
        assert_eq!(r, int(10));
        assert_eq!(heavy, vec![2]);
    }

    #[test]
    fn pack_geometry_on_reduction_row() {
        let row = KnapsackRow::from_u64(&[3, 4, 18, 2, 2, 2], 10);
        let (r, heavy) = pack_geometry(&row, &[0, 1, 3]).unwrap();
        assert_eq!(r, int(1));
        assert_eq!(heavy, vec![2, 4, 5]);
    }

    #[test]
    fn pack_geometry_rejects_covers() {
        assert_eq!(pack_geometry(&row_a(), &[0, 1, 2, 3, 4, 5]), Err(Error::NotAPack));
    }

    #[test]
    fn classify_subset_finds_minimal_cover() {
        let class = classify_subset(&row_a(), &[3, 4, 5]).unwrap();
        assert!(class.is_cover && class.is_minimal_cover && !class.is_pack);
    }

    #[test]
    fn classify_subset_empty_set_is_a_pack() {
        let class = classify_subset(&row_a(), &[]).unwrap();
        assert!(!class.is_cover && !class.is_minimal_cover && class.is_pack);
    }

    #[test]
    fn classify_subset_full_set_is_a_nonminimal_cover() {
        let class = classify_subset(&row_a(), &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(class.is_cover && !class.is_minimal_cover && !class.is_pack);
    }

    #[test]
    fn minimize_cover_drops_low_x_elements_first() {
        let x = Point::new(vec![
            rat(0, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(0, 1),
            rat(9, 20),
        ]);
        let c = minimize_cover(&row_b(), &[1, 2, 3, 5], &x).unwrap();
        assert_eq!(c, vec![2, 3, 5]);
    }

    #[test]
    fn minimize_cover_keeps_already_minimal_covers() {
        let x = Point::zeros(6);
        let c = minimize_cover(&row_a(), &[3, 4, 5], &x).unwrap();
        assert_eq!(c, vec![3, 4, 5]);
    }

    #[test]
    fn minimize_cover_rejects_packs() {
        let x = Point::zeros(6);
        assert_eq!(minimize_cover(&row_a(), &[0, 1], &x), Err(Error::NotACover));
    }

    #[test]
    fn config_check_fails_when_a_k_subset_plus_t_is_no_minimal_cover() {
        assert_eq!(is_config(&row_a(), &[0, 1, 2, 3, 4], 5, 3), Ok(false));
    }

    #[test]
    fn config_check_fails_when_n_is_not_a_pack() {
        assert_eq!(is_config(&row_b(), &[1, 2, 3, 4], 5, 2), Ok(false));
    }

    #[test]
    fn config_check_accepts_a_true_configuration() {
        assert_eq!(is_config(&row_b(), &[1, 2, 3], 5, 2), Ok(true));
    }

    #[test]
    fn config_check_rejects_t_inside_n() {
        assert!(matches!(
            is_config(&row_b(), &[1, 2, 3], 2, 2),
            Err(Error::BadConfigShape(_))
        ));
    }

    #[test]
    fn config_check_rejects_k_one() {
        assert!(matches!(
            is_config(&row_b(), &[1, 2, 3], 5, 1),
            Err(Error::BadConfigShape(_))
        ));
    }

    #[test]
    fn generalized_config_holds_on_the_first_example_row() {
        assert_eq!(is_generalized_config(&row_a(), &[0, 1, 2, 3, 4], 5, 3), Ok(true));
    }

    #[test]
    fn generalized_config_holds_without_n_being_a_pack() {
        assert_eq!(is_generalized_config(&row_b(), &[1, 2, 3, 4], 5, 2), Ok(true));
    }

    #[test]
    fn generalized_config_fails_when_t_plus_n_fits() {
        let row = KnapsackRow::from_u64(&[2, 3, 4], 20);
        assert_eq!(is_generalized_config(&row, &[0, 1], 2, 2), Ok(false));
    }

    #[test]
    fn n_prime_counts_longest_light_prefix() {
        assert_eq!(n_prime(&row_b(), &[1, 2, 3, 4]), Ok(3));
    }

    #[test]
    fn n_prime_of_a_pack_is_its_size() {
        assert_eq!(n_prime(&row_a(), &[0, 1, 2, 3, 4]), Ok(5));
    }

    #[test]
    fn n_prime_of_empty_set_is_zero() {
        assert_eq!(n_prime(&row_a(), &[]), Ok(0));
    }
}

//! Decision agreement between the fast separators and the exhaustive
//! oracles on seeded random rows, plus brute-force validity of every cut
//! either side returns. Any disagreement prints the instance as JSON so
//! the case can be replayed directly.

use kcuts::cuts::violation;
use kcuts::gen::gen_random;
use kcuts::io::instance_to_json;
use kcuts::model::{Instance, Point};
use kcuts::oracles::{separate_bruteforce, validate_cut_bruteforce};
use kcuts::reductions::uniform_wi_separable;
use kcuts::separators::{separate_row, Method, SparseBudget};
use kcuts::{Family, KnapsackRow, Rat};
use num::{One, Signed, Zero};

fn replay(inst: &Instance, x: &Point) -> String {
    instance_to_json(inst, Some(x)).to_string()
}

fn check_yes_cut(row: &KnapsackRow, x: &Point, family: Family, cut: &kcuts::Cut, who: &str, ctx: &str) {
    let v = violation(cut, x).unwrap();
    assert!(
        v.is_positive(),
        "{who} returned a non-violated {family} cut (violation {v}) on {ctx}"
    );
    let witness = validate_cut_bruteforce(row, cut).unwrap();
    assert!(
        witness.is_none(),
        "{who} returned an invalid {family} cut, violated at {witness:?}, on {ctx}"
    );
}

fn hammer(n: usize, weight_max: u64, seeds: std::ops::Range<u64>) {
    let budget = SparseBudget::default();
    let families = [
        (Family::Cover, Method::Dp),
        (Family::ExtendedCover, Method::Sparse),
        (Family::Config, Method::Sparse),
        (Family::GenConfig, Method::Sparse),
        (Family::Weight, Method::Sparse),
    ];
    for seed in seeds {
        let (inst, x) = gen_random(n, 1, weight_max, seed).unwrap();
        let row = inst.row(0);
        let ctx = replay(&inst, &x);
        for (family, method) in families {
            let fast = separate_row(row, &x, family, method, &budget)
                .unwrap_or_else(|e| panic!("{family}/{method} errored on {ctx}: {e}"));
            let brute = separate_bruteforce(row, &x, family).unwrap();
            assert_eq!(
                fast.decision, brute.decision,
                "{family} {method} vs oracle disagree on {ctx}"
            );
            if let Some(cut) = &fast.cut {
                check_yes_cut(row, &x, family, cut, "separator", &ctx);
            }
            if let Some(cut) = &brute.cut {
                check_yes_cut(row, &x, family, cut, "oracle", &ctx);
            }
        }
        // The greedy weight heuristic must never claim a cut the sparse
        // routine (and hence the oracle) would not find.
        let greedy = separate_row(row, &x, Family::Weight, Method::Heuristic, &budget).unwrap();
        if greedy.decision {
            let sparse = separate_row(row, &x, Family::Weight, Method::Sparse, &budget).unwrap();
            assert!(sparse.decision, "greedy found a weight cut but sparse did not on {ctx}");
            check_yes_cut(row, &x, Family::Weight, greedy.cut.as_ref().unwrap(), "greedy", &ctx);
        }
    }
}

#[test]
fn separators_match_oracles_small_dense() {
    hammer(5, 8, 0..150);
}

#[test]
fn separators_match_oracles_mid_range() {
    hammer(8, 14, 0..150);
}

#[test]
fn separators_match_oracles_wider_rows() {
    hammer(10, 25, 0..150);
}

#[test]
fn uniform_point_pack_test_matches_brute_force() {
    // The closed-form pack characterization of the uniform tight point
    // must agree with exhaustive weight-inequality separation there, as
    // long as every column fits the row alone; a single overweight column
    // separates via the empty pack outside the characterization.
    let mut checked = 0;
    for seed in 0..400u64 {
        let (inst, _) = gen_random(7, 1, 12, seed).unwrap();
        let row = inst.row(0);
        let total: kcuts::Int = row.weights().iter().sum();
        if (&total % row.capacity()).is_zero() || total < *row.capacity() {
            continue;
        }
        if row.weights().iter().max().unwrap() > row.capacity() {
            continue;
        }
        let x = Point::uniform(row.n(), Rat::new(row.capacity().clone(), total.clone()));
        let brute = separate_bruteforce(row, &x, Family::Weight).unwrap();
        let closed = uniform_wi_separable(row).unwrap();
        assert_eq!(
            closed,
            brute.decision,
            "pack characterization vs oracle on {}",
            replay(&inst, &x)
        );
        checked += 1;
    }
    assert!(checked > 100, "only {checked} usable uniform-point rows");
}

#[test]
fn equal_weight_columns_exercise_tie_handling() {
    // Repeated weights stress the extension and pivot tie rules.
    for seed in 0..120u64 {
        let (inst, x) = gen_random(8, 1, 4, seed).unwrap();
        let row = inst.row(0);
        let ctx = replay(&inst, &x);
        for family in [Family::ExtendedCover, Family::Config, Family::GenConfig, Family::Weight] {
            let fast = separate_row(row, &x, family, Method::Sparse, &SparseBudget::default()).unwrap();
            let brute = separate_bruteforce(row, &x, family).unwrap();
            assert_eq!(fast.decision, brute.decision, "{family} disagree on {ctx}");
        }
    }
}

#[test]
fn tight_uniform_points_exercise_the_config_escalation() {
    // At the tight uniform point every coordinate is fractional and many
    // covers are violated at once, including two-column minimal covers:
    // the regime where the capped shape search must escalate to stay
    // complete.
    for seed in 0..120u64 {
        let (inst, _) = gen_random(6, 1, 9, seed).unwrap();
        let row = inst.row(0);
        let total: kcuts::Int = row.weights().iter().sum();
        if total <= *row.capacity() {
            continue;
        }
        let x = Point::uniform(row.n(), Rat::new(row.capacity().clone(), total.clone()));
        let ctx = replay(&inst, &x);
        for family in [Family::Config, Family::GenConfig] {
            let fast = separate_row(row, &x, family, Method::Sparse, &SparseBudget::default()).unwrap();
            let brute = separate_bruteforce(row, &x, family).unwrap();
            assert_eq!(fast.decision, brute.decision, "{family} disagree on {ctx}");
            if let Some(cut) = &fast.cut {
                check_yes_cut(row, &x, family, cut, "separator", &ctx);
            }
        }
    }
}

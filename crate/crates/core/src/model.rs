//! Rows, instances, and candidate points, with exact validation.

use crate::error::{Error, Result};
use crate::{Int, Rat};
use num::{One, Signed, Zero};

/// One knapsack constraint `a^T x <= b` over 0/1 variables.
///
/// Weights are nonnegative; a weight of zero marks a column the row does not
/// touch, which is how multi-row instances carry row-local support. The
/// capacity is at least 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnapsackRow {
    weights: Vec<Int>,
    capacity: Int,
}

impl KnapsackRow {
    pub fn new(weights: Vec<Int>, capacity: Int) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        for (i, w) in weights.iter().enumerate() {
            if w.is_negative() {
                return Err(Error::NonPositiveWeight { index: i });
            }
        }
        if capacity < Int::one() {
            return Err(Error::NonPositiveCapacity);
        }
        Ok(KnapsackRow { weights, capacity })
    }

    /// Convenience constructor for literal data; panics on invalid input.
    pub fn from_u64(weights: &[u64], capacity: u64) -> Self {
        KnapsackRow::new(
            weights.iter().map(|&w| Int::from(w)).collect(),
            Int::from(capacity),
        )
        .expect("literal row data must be valid")
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Int] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &Int {
        &self.weights[i]
    }

    pub fn capacity(&self) -> &Int {
        &self.capacity
    }

    /// a(S), the total weight of the indices in `set`.
    pub fn weight_sum(&self, set: &[usize]) -> Int {
        set.iter().map(|&i| &self.weights[i]).sum()
    }

    /// a^T x as an exact rational.
    pub fn value_at(&self, x: &Point) -> Rat {
        self.weights
            .iter()
            .zip(x.coords())
            .map(|(a, xi)| Rat::from_integer(a.clone()) * xi)
            .sum()
    }
}

/// A stack of knapsack rows sharing one variable space, plus an objective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    name: Option<String>,
    rows: Vec<KnapsackRow>,
    objective: Vec<Int>,
}

impl Instance {
    pub fn new(rows: Vec<KnapsackRow>, objective: Vec<Int>, name: Option<String>) -> Result<Self> {
        let first = rows.first().ok_or(Error::DimensionMismatch { expected: 1, got: 0 })?;
        let n = first.n();
        for row in &rows {
            if row.n() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.n() });
            }
        }
        if objective.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: objective.len() });
        }
        Ok(Instance { name, rows, objective })
    }

    /// Single-row instance with a unit objective, for tests and small tools.
    pub fn single(row: KnapsackRow) -> Self {
        let n = row.n();
        Instance {
            name: None,
            rows: vec![row],
            objective: vec![Int::one(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.rows[0].n()
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[KnapsackRow] {
        &self.rows
    }

    pub fn row(&self, r: usize) -> &KnapsackRow {
        &self.rows[r]
    }

    pub fn objective(&self) -> &[Int] {
        &self.objective
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
}

/// A candidate point in [0,1]^n, typically a relaxation solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    coords: Vec<Rat>,
}

impl Point {
    pub fn new(coords: Vec<Rat>) -> Self {
        Point { coords }
    }

    /// The origin in dimension `n`.
    pub fn zeros(n: usize) -> Self {
        Point { coords: vec![Rat::zero(); n] }
    }

    /// The point with every coordinate equal to `v`.
    pub fn uniform(n: usize, v: Rat) -> Self {
        Point { coords: vec![v; n] }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    /// Indices with x_i = 1.
    pub fn binary_support(&self) -> Vec<usize> {
        self.support_by(|v| v.is_one())
    }

    /// Indices with 0 < x_i < 1.
    pub fn fractional_support(&self) -> Vec<usize> {
        self.support_by(|v| v.is_positive() && !v.is_one())
    }

    /// Indices with x_i > 0.
    pub fn positive_support(&self) -> Vec<usize> {
        self.support_by(|v| v.is_positive())
    }

    fn support_by(&self, keep: impl Fn(&Rat) -> bool) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, v)| keep(v))
            .map(|(i, _)| i)
            .collect()
    }

    /// x(S), the coordinate sum over `set`.
    pub fn sum_over(&self, set: &[usize]) -> Rat {
        set.iter().map(|&i| &self.coords[i]).sum()
    }

    /// True when every coordinate is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.coords.iter().all(|v| v.is_zero() || v.is_one())
    }

    /// Checks 0 <= x_i <= 1 for every coordinate.
    pub fn check_bounds(&self) -> Result<()> {
        let one = Rat::one();
        for (i, v) in self.coords.iter().enumerate() {
            if v.is_negative() || *v > one {
                return Err(Error::PointOutOfBounds { index: i });
            }
        }
        Ok(())
    }
}

/// Confirms instance shape and, when a point is given, exact feasibility:
/// bounds 0 <= x <= 1 and a^T x <= b for every row.
pub fn validate_instance(inst: &Instance, x: Option<&Point>) -> Result<()> {
    let n = inst.n();
    if let Some(point) = x {
        if point.n() != n {
            return Err(Error::DimensionMismatch { expected: n, got: point.n() });
        }
        point.check_bounds()?;
        for (r, row) in inst.rows().iter().enumerate() {
            if row.value_at(point) > Rat::from_integer(row.capacity().clone()) {
                return Err(Error::InfeasiblePoint { row: r });
            }
        }
    }
    Ok(())
}

/// Sorts a set of column indices, rejecting duplicates and out-of-range
/// entries. Every public operation taking an index set accepts any order and
/// canonicalizes through this helper.
pub fn canonical_set(set: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut out = set.to_vec();
    out.sort_unstable();
    for pair in out.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::DuplicateIndex { index: pair[0] });
        }
    }
    if let Some(&last) = out.last() {
        if last >= n {
            return Err(Error::IndexOutOfRange { index: last, len: n });
        }
    }
    Ok(out)
}

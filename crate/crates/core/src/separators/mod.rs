//! Separation routines, from pseudo-polynomial to exhaustive.
//!
//! Every routine answers the same question: given a row and a point, is
//! there a violated inequality of the requested family, and if so, which
//! one. The sparse routines enumerate subsets of the fractional support
//! only, so their cost is exponential in the support size alone; callers
//! bound that size through [`SparseBudget`] and get `BudgetExceeded` back
//! instead of a long stall.
//!
//! Deterministic by construction: each routine documents its enumeration
//! order and returns the first violated cut in that order, while the
//! brute-force oracles return a maximum-violation cut. Decisions (yes or
//! no) agree between the two; the chosen cut may differ.

mod ci;
mod config;
mod eci;
mod genconfig;
mod wi;

pub use ci::separate_ci_dp;
pub use config::separate_config_sparse;
pub use eci::separate_eci_sparse;
pub use genconfig::separate_genconfig_sparse;
pub use wi::{separate_wi_greedy, separate_wi_sparse};

use crate::cuts::{violation, Cut, Family};
use crate::error::{Error, Result};
use crate::model::{validate_instance, Instance, Point};
use crate::oracles::separate_bruteforce;
use std::fmt;
use std::str::FromStr;

/// Work counters reported by every separation routine. `candidates` counts
/// scored family members (covers, pairs, packs; for the cover DP, relaxation
/// steps). `greedy_calls` counts completion subroutine invocations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeparationStats {
    pub candidates: u64,
    pub greedy_calls: u64,
}

impl SeparationStats {
    pub fn absorb(&mut self, other: &SeparationStats) {
        self.candidates += other.candidates;
        self.greedy_calls += other.greedy_calls;
    }
}

/// Outcome of a separation call: `decision` is true exactly when `cut` is
/// present, and the cut is then violated at the queried point.
#[derive(Debug, Clone)]
pub struct SeparationResult {
    pub decision: bool,
    pub cut: Option<Cut>,
    pub stats: SeparationStats,
}

impl SeparationResult {
    pub fn no(stats: SeparationStats) -> SeparationResult {
        SeparationResult { decision: false, cut: None, stats }
    }

    pub fn yes(cut: Cut, stats: SeparationStats) -> SeparationResult {
        SeparationResult { decision: true, cut: Some(cut), stats }
    }
}

/// Caps on the fractional support a sparse routine will enumerate over.
/// `alpha_count` bounds the number of fractional coordinates; `alpha_mass`
/// bounds the size of the candidate sets in the weight separator, where the
/// support is filtered by mass rather than counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SparseBudget {
    pub alpha_count: usize,
    pub alpha_mass: usize,
}

impl Default for SparseBudget {
    fn default() -> SparseBudget {
        SparseBudget { alpha_count: 10, alpha_mass: 10 }
    }
}

/// Which separation algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Pseudo-polynomial dynamic program (cover family only).
    Dp,
    /// Sparse-support enumeration with polynomial completion.
    Sparse,
    /// Exhaustive maximum-violation oracle.
    Bruteforce,
    /// Greedy packing heuristic (weight family only).
    Heuristic,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Dp => "dp",
            Method::Sparse => "sparse",
            Method::Bruteforce => "bruteforce",
            Method::Heuristic => "heuristic",
        };
        f.write_str(s)
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "dp" => Ok(Method::Dp),
            "sparse" => Ok(Method::Sparse),
            "bruteforce" => Ok(Method::Bruteforce),
            "heuristic" => Ok(Method::Heuristic),
            other => Err(Error::ParseError(format!("unknown method '{other}'"))),
        }
    }
}

/// Row scanning policy for multi-row instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Stop at the first row that yields a violated cut.
    First,
    /// Scan every row and keep the largest violation; ties go to the lower
    /// row index, then the lexicographically smaller certificate.
    Best,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::First => "first",
            Mode::Best => "best",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "first" => Ok(Mode::First),
            "best" => Ok(Mode::Best),
            other => Err(Error::ParseError(format!("unknown mode '{other}'"))),
        }
    }
}

/// Dispatches one row to the routine for (family, method). Combinations
/// without an implementation come back as `UnknownFamilyMethod`.
pub fn separate_row(
    row: &crate::model::KnapsackRow,
    x: &Point,
    family: Family,
    method: Method,
    budget: &SparseBudget,
) -> Result<SeparationResult> {
    match (family, method) {
        (_, Method::Bruteforce) => separate_bruteforce(row, x, family),
        (Family::Cover, Method::Dp) => separate_ci_dp(row, x),
        (Family::ExtendedCover, Method::Sparse) => separate_eci_sparse(row, x, budget),
        (Family::Config, Method::Sparse) => separate_config_sparse(row, x, budget),
        (Family::GenConfig, Method::Sparse) => separate_genconfig_sparse(row, x, budget),
        (Family::Weight, Method::Sparse) => separate_wi_sparse(row, x, budget),
        (Family::Weight, Method::Heuristic) => separate_wi_greedy(row, x),
        (family, method) => Err(Error::UnknownFamilyMethod(format!(
            "no {method} separator for family {family}"
        ))),
    }
}

/// Runs separation over the rows of an instance. The point must be feasible
/// for every row. In `First` mode rows are scanned in order and the first
/// violated cut is returned with its row index; `Best` mode scans all rows.
pub fn separate_instance(
    inst: &Instance,
    x: &Point,
    family: Family,
    method: Method,
    mode: Mode,
    budget: &SparseBudget,
) -> Result<SeparationResult> {
    validate_instance(inst, Some(x))?;
    let mut stats = SeparationStats::default();
    let mut best: Option<(crate::Rat, Cut)> = None;
    for (r, row) in inst.rows().iter().enumerate() {
        let res = separate_row(row, x, family, method, budget)?;
        stats.absorb(&res.stats);
        if let Some(cut) = res.cut {
            let cut = cut.with_row(r);
            match mode {
                Mode::First => return Ok(SeparationResult::yes(cut, stats)),
                Mode::Best => {
                    let v = violation(&cut, x)?;
                    let better = match &best {
                        None => true,
                        // Earlier rows win ties by scan order; within a row
                        // the routine already made its deterministic choice.
                        Some((bv, _)) => v > *bv,
                    };
                    if better {
                        best = Some((v, cut));
                    }
                }
            }
        }
    }
    match best {
        Some((_, cut)) => Ok(SeparationResult::yes(cut, stats)),
        None => Ok(SeparationResult::no(stats)),
    }
}

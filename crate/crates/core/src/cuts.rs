//! Cut families, certificates, and the one place cuts are materialized.
//!
//! A certificate is the combinatorial witness of a cut. `build_cut` is the
//! single constructor: it re-checks the witness predicate and expands the
//! family template into exact coefficients, so a `Cut` value always carries a
//! reproducible derivation.

use crate::error::{Error, Result};
use crate::families::{classify_subset, is_config, is_generalized_config, n_prime, pack_geometry};
use crate::model::{canonical_set, KnapsackRow, Point};
use crate::{Int, Rat};
use num::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// The five inequality families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Cover,
    ExtendedCover,
    Config,
    GenConfig,
    Weight,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Cover,
        Family::ExtendedCover,
        Family::Config,
        Family::GenConfig,
        Family::Weight,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::Cover => "ci",
            Family::ExtendedCover => "eci",
            Family::Config => "config",
            Family::GenConfig => "genconfig",
            Family::Weight => "wi",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ci" => Ok(Family::Cover),
            "eci" => Ok(Family::ExtendedCover),
            "config" => Ok(Family::Config),
            "genconfig" => Ok(Family::GenConfig),
            "wi" => Ok(Family::Weight),
            other => Err(Error::ParseError(format!("unknown family: {other}"))),
        }
    }
}

/// Combinatorial witness for one cut. Index sets are kept sorted ascending,
/// and the derived `Ord` is the lexicographic certificate order used for
/// deterministic tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Certificate {
    /// A cover C; cut x(C) <= |C| - 1.
    Cover { cover: Vec<usize> },
    /// A cover C with its maximum-weight element t; the cut extends C by
    /// every outside index at least as heavy as t.
    ExtendedCover { cover: Vec<usize>, t: usize },
    /// A (1,k)-configuration (N, t, k) and a subset S of N with |S| >= k;
    /// cut (|S|-k+1) x_t + x(S) <= |S|.
    Config {
        set_n: Vec<usize>,
        t: usize,
        k: usize,
        subset: Vec<usize>,
    },
    /// A generalized (1,k)-configuration (N, t, k) with the stored maximum
    /// pack cardinality n' of N; cut (n'-k+1) x_t + x(N) <= n'.
    GenConfig {
        set_n: Vec<usize>,
        t: usize,
        k: usize,
        n_prime: usize,
    },
    /// A pack P; cut sum_{i in P} a_i x_i + sum_{j outside} max(a_j - r(P), 0) x_j <= a(P).
    Weight { pack: Vec<usize> },
}

impl Certificate {
    pub fn family(&self) -> Family {
        match self {
            Certificate::Cover { .. } => Family::Cover,
            Certificate::ExtendedCover { .. } => Family::ExtendedCover,
            Certificate::Config { .. } => Family::Config,
            Certificate::GenConfig { .. } => Family::GenConfig,
            Certificate::Weight { .. } => Family::Weight,
        }
    }
}

/// One inequality coeffs^T x <= rhs over the variables of a row, together
/// with the certificate it was built from. All coefficients are >= 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub family: Family,
    pub row_index: usize,
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
    pub certificate: Certificate,
}

impl Cut {
    /// Re-targets the cut at another row index of an instance.
    pub fn with_row(mut self, row_index: usize) -> Self {
        self.row_index = row_index;
        self
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

/// Expands a certificate into its family's inequality over `row`.
/// The witness predicate is re-checked; `row_index` starts at 0.
pub fn build_cut(row: &KnapsackRow, certificate: &Certificate) -> Result<Cut> {
    let n = row.n();
    let mut coeffs = vec![Rat::zero(); n];
    let rhs;
    let canonical;

    match certificate {
        Certificate::Cover { cover } => {
            let cover = canonical_set(cover, n)?;
            if !classify_subset(row, &cover)?.is_cover {
                return Err(invalid("index set is not a cover"));
            }
            for &i in &cover {
                coeffs[i] = Rat::one();
            }
            rhs = Rat::from_integer(Int::from(cover.len() - 1));
            canonical = Certificate::Cover { cover };
        }
        Certificate::ExtendedCover { cover, t } => {
            let cover = canonical_set(cover, n)?;
            if !classify_subset(row, &cover)?.is_cover {
                return Err(invalid("index set is not a cover"));
            }
            if cover.binary_search(t).is_err() {
                return Err(invalid("t lies outside the cover"));
            }
            let max_weight = cover.iter().map(|&i| row.weight(i)).max().unwrap();
            if row.weight(*t) != max_weight {
                return Err(invalid("t is not a maximum-weight element of the cover"));
            }
            for &i in &cover {
                coeffs[i] = Rat::one();
            }
            for j in 0..n {
                if coeffs[j].is_zero() && row.weight(j) >= max_weight {
                    coeffs[j] = Rat::one();
                }
            }
            rhs = Rat::from_integer(Int::from(cover.len() - 1));
            canonical = Certificate::ExtendedCover { cover, t: *t };
        }
        Certificate::Config { set_n, t, k, subset } => {
            match is_config(row, set_n, *t, *k) {
                Ok(true) => {}
                Ok(false) => return Err(invalid("(N, t, k) is not a (1,k)-configuration")),
                Err(Error::BadConfigShape(msg)) => return Err(invalid(msg)),
                Err(e) => return Err(e),
            }
            let set_n = canonical_set(set_n, n)?;
            let subset = canonical_set(subset, n)?;
            if !subset.iter().all(|i| set_n.binary_search(i).is_ok()) {
                return Err(invalid("S is not a subset of N"));
            }
            if subset.len() < *k {
                return Err(invalid("S has fewer than k elements"));
            }
            let multiplier = Int::from(subset.len() - *k + 1);
            coeffs[*t] = Rat::from_integer(multiplier);
            for &i in &subset {
                coeffs[i] = Rat::one();
            }
            rhs = Rat::from_integer(Int::from(subset.len()));
            canonical = Certificate::Config { set_n, t: *t, k: *k, subset };
        }
        Certificate::GenConfig { set_n, t, k, n_prime: np } => {
            match is_generalized_config(row, set_n, *t, *k) {
                Ok(true) => {}
                Ok(false) => return Err(invalid("(N, t, k) is not a generalized (1,k)-configuration")),
                Err(Error::BadConfigShape(msg)) => return Err(invalid(msg)),
                Err(e) => return Err(e),
            }
            let set_n = canonical_set(set_n, n)?;
            let actual = n_prime(row, &set_n)?;
            if actual != *np {
                return Err(invalid(format!(
                    "stored n' = {np} but the maximum pack cardinality in N is {actual}"
                )));
            }
            if *k > actual + 1 {
                return Err(invalid(format!(
                    "k = {k} exceeds n' + 1 = {}; the t coefficient would be negative",
                    actual + 1
                )));
            }
            coeffs[*t] = Rat::from_integer(Int::from(actual + 1 - *k));
            for &i in &set_n {
                coeffs[i] = Rat::one();
            }
            rhs = Rat::from_integer(Int::from(actual));
            canonical = Certificate::GenConfig { set_n, t: *t, k: *k, n_prime: *np };
        }
        Certificate::Weight { pack } => {
            let pack = canonical_set(pack, n)?;
            let (r, heavy) = pack_geometry(row, &pack)?;
            for &i in &pack {
                coeffs[i] = Rat::from_integer(row.weight(i).clone());
            }
            for &j in &heavy {
                coeffs[j] = Rat::from_integer(row.weight(j) - &r);
            }
            rhs = Rat::from_integer(row.weight_sum(&pack));
            canonical = Certificate::Weight { pack };
        }
    }

    Ok(Cut {
        family: canonical.family(),
        row_index: 0,
        coeffs,
        rhs,
        certificate: canonical,
    })
}

/// coeffs^T x - rhs; positive means the cut separates x.
pub fn violation(cut: &Cut, x: &Point) -> Result<Rat> {
    if x.n() != cut.coeffs.len() {
        return Err(Error::DimensionMismatch { expected: cut.coeffs.len(), got: x.n() });
    }
    let lhs: Rat = cut
        .coeffs
        .iter()
        .zip(x.coords())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, xi)| c * xi)
        .sum();
    Ok(lhs - &cut.rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn row_a() -> KnapsackRow {
        KnapsackRow::from_u64(&[2, 4, 5, 6, 7, 20], 30)
    }

    fn row_b() -> KnapsackRow {
        KnapsackRow::from_u64(&[2, 4, 7, 10, 10, 20], 30)
    }

    fn coeffs_u64(cut: &Cut) -> Vec<Rat> {
        cut.coeffs.clone()
    }

    #[test]
    fn genconfig_cut_on_first_example_row() {
        let cert = Certificate::GenConfig { set_n: vec![0, 1, 2, 3, 4], t: 5, k: 3, n_prime: 5 };
        let cut = build_cut(&row_a(), &cert).unwrap();
        assert_eq!(
            coeffs_u64(&cut),
            vec![rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(3, 1)]
        );
        assert_eq!(cut.rhs, rat(5, 1));
    }

    #[test]
    fn genconfig_cut_on_second_example_row() {
        let cert = Certificate::GenConfig { set_n: vec![1, 2, 3, 4], t: 5, k: 2, n_prime: 3 };
        let cut = build_cut(&row_b(), &cert).unwrap();
        assert_eq!(
            coeffs_u64(&cut),
            vec![rat(0, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(2, 1)]
        );
        assert_eq!(cut.rhs, rat(3, 1));
    }

    #[test]
    fn genconfig_rejects_wrong_stored_pack_cardinality() {
        let cert = Certificate::GenConfig { set_n: vec![1, 2, 3, 4], t: 5, k: 2, n_prime: 4 };
        assert!(matches!(build_cut(&row_b(), &cert), Err(Error::InvalidCertificate(_))));
    }

    #[test]
    fn genconfig_rejects_k_that_would_go_negative() {
        let row = KnapsackRow::from_u64(&[5, 5, 5, 5], 9);
        let cert = Certificate::GenConfig { set_n: vec![0, 1, 2], t: 3, k: 3, n_prime: 1 };
        assert!(matches!(build_cut(&row, &cert), Err(Error::InvalidCertificate(_))));
    }

    #[test]
    fn genconfig_allows_a_zero_t_coefficient() {
        let row = KnapsackRow::from_u64(&[5, 5, 5], 9);
        let cert = Certificate::GenConfig { set_n: vec![0, 1], t: 2, k: 2, n_prime: 1 };
        let cut = build_cut(&row, &cert).unwrap();
        assert_eq!(coeffs_u64(&cut), vec![rat(1, 1), rat(1, 1), rat(0, 1)]);
        assert_eq!(cut.rhs, rat(1, 1));
    }

    #[test]
    fn weight_cut_caps_outside_coefficients_at_zero() {
        let cert = Certificate::Weight { pack: vec![0, 1, 2, 3, 4] };
        let cut = build_cut(&row_a(), &cert).unwrap();
        assert_eq!(
            coeffs_u64(&cut),
            vec![rat(2, 1), rat(4, 1), rat(5, 1), rat(6, 1), rat(7, 1), rat(14, 1)]
        );
        assert_eq!(cut.rhs, rat(24, 1));
    }

    #[test]
    fn extended_cover_cut_adds_heavier_outsiders() {
        let row = KnapsackRow::from_u64(&[5, 5, 5, 8], 14);
        let cert = Certificate::ExtendedCover { cover: vec![0, 1, 2], t: 0 };
        let cut = build_cut(&row, &cert).unwrap();
        assert_eq!(coeffs_u64(&cut), vec![rat(1, 1); 4]);
        assert_eq!(cut.rhs, rat(2, 1));
    }

    #[test]
    fn extended_cover_rejects_a_light_t() {
        let row = KnapsackRow::from_u64(&[5, 5, 5, 8], 14);
        let cert = Certificate::ExtendedCover { cover: vec![0, 1, 3], t: 0 };
        assert!(matches!(build_cut(&row, &cert), Err(Error::InvalidCertificate(_))));
    }

    #[test]
    fn config_cut_weights_t_by_subset_slack() {
        let cert = Certificate::Config { set_n: vec![1, 2, 3], t: 5, k: 2, subset: vec![1, 2, 3] };
        let cut = build_cut(&row_b(), &cert).unwrap();
        assert_eq!(
            coeffs_u64(&cut),
            vec![rat(0, 1), rat(1, 1), rat(1, 1), rat(1, 1), rat(0, 1), rat(2, 1)]
        );
        assert_eq!(cut.rhs, rat(3, 1));
    }

    #[test]
    fn cover_cut_rejects_packs() {
        let cert = Certificate::Cover { cover: vec![0, 1] };
        assert!(matches!(build_cut(&row_a(), &cert), Err(Error::InvalidCertificate(_))));
    }

    #[test]
    fn violation_of_first_example_cut() {
        let cert = Certificate::GenConfig { set_n: vec![0, 1, 2, 3, 4], t: 5, k: 3, n_prime: 5 };
        let cut = build_cut(&row_a(), &cert).unwrap();
        let x = Point::new(vec![
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(3, 10),
        ]);
        assert_eq!(violation(&cut, &x).unwrap(), rat(9, 10));
    }

    #[test]
    fn violation_at_origin_is_minus_rhs() {
        let cert = Certificate::Cover { cover: vec![3, 4, 5] };
        let cut = build_cut(&row_a(), &cert).unwrap();
        assert_eq!(violation(&cut, &Point::zeros(6)).unwrap(), rat(-2, 1));
    }

    #[test]
    fn violation_of_weight_cut_at_fractional_point() {
        let cert = Certificate::Weight { pack: vec![0, 1, 2, 3, 4] };
        let cut = build_cut(&row_a(), &cert).unwrap();
        let x = Point::new(vec![
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 1),
            rat(1, 5),
        ]);
        assert_eq!(violation(&cut, &x).unwrap(), rat(14, 5));
    }
}

//! Strict JSON encodings for instances, subset-sum inputs, and cuts.
//!
//! Instances: `{"name"?, "A": [[int]], "d": [int], "c": [int], "x"?: [rat]}`
//! with `A` the m-by-n weight matrix, `d` the capacities, `c` the
//! objective, and `x` an optional point to separate. Subset-sum inputs:
//! `{"alpha": [int], "w": int}`. Cuts: `{"family", "row", "certificate",
//! "coeffs", "rhs", "violation"?}` where the certificate carries the
//! witness index sets for its family.
//!
//! Rationals appear as plain JSON integers when integral, otherwise as a
//! reduced `"p/q"` string. All integers are arbitrary precision; numbers
//! with a fractional part or an exponent are rejected. Unknown keys are
//! rejected everywhere: a misspelled optional key should fail loudly, not
//! be ignored.

use crate::cuts::{build_cut, Certificate, Cut, Family};
use crate::error::{Error, Result};
use crate::model::{validate_instance, Instance, KnapsackRow, Point};
use crate::reductions::SspInstance;
use crate::{Int, Rat};
use num::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Number, Value};
use std::str::FromStr;

fn schema(msg: impl Into<String>) -> Error {
    Error::SchemaViolation(msg.into())
}

fn parse_root(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::ParseError(e.to_string()))
}

fn as_object<'a>(value: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    value.as_object().ok_or_else(|| schema(format!("{what} must be a JSON object")))
}

fn as_array<'a>(value: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    value.as_array().ok_or_else(|| schema(format!("{what} must be a JSON array")))
}

fn check_keys(map: &Map<String, Value>, allowed: &[&str], what: &str) -> Result<()> {
    for key in map.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema(format!("unknown key \"{key}\" in {what}")));
        }
    }
    Ok(())
}

fn required<'a>(map: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    map.get(key).ok_or_else(|| schema(format!("{what} is missing \"{key}\"")))
}

fn parse_int(value: &Value, what: &str) -> Result<Int> {
    let Value::Number(n) = value else {
        return Err(schema(format!("{what} must be an integer")));
    };
    Int::from_str(&n.to_string())
        .map_err(|_| schema(format!("{what} must be an integer, got {n}")))
}

fn parse_index(value: &Value, what: &str) -> Result<usize> {
    let v = parse_int(value, what)?;
    v.to_usize().ok_or_else(|| schema(format!("{what} must be a non-negative index")))
}

fn parse_index_array(value: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(value, what)?
        .iter()
        .map(|v| parse_index(v, what))
        .collect()
}

fn parse_rat(value: &Value, what: &str) -> Result<Rat> {
    match value {
        Value::Number(_) => Ok(Rat::from_integer(parse_int(value, what)?)),
        Value::String(s) => {
            let (p, q) = s
                .split_once('/')
                .ok_or_else(|| schema(format!("{what} string must look like \"p/q\"")))?;
            let p = Int::from_str(p.trim())
                .map_err(|_| schema(format!("{what} has a bad numerator")))?;
            let q = Int::from_str(q.trim())
                .map_err(|_| schema(format!("{what} has a bad denominator")))?;
            if q.is_zero() {
                return Err(schema(format!("{what} has denominator zero")));
            }
            Ok(Rat::new(p, q))
        }
        _ => Err(schema(format!("{what} must be an integer or a \"p/q\" string"))),
    }
}

fn int_value(v: &Int) -> Value {
    let n: Number =
        serde_json::from_str(&v.to_string()).expect("an integer literal is a valid JSON number");
    Value::Number(n)
}

fn rat_value(v: &Rat) -> Value {
    if v.denom().is_one() {
        int_value(v.numer())
    } else {
        Value::String(format!("{}/{}", v.numer(), v.denom()))
    }
}

fn usize_value(v: usize) -> Value {
    Value::Number(Number::from(v as u64))
}

fn index_array(set: &[usize]) -> Value {
    Value::Array(set.iter().map(|&i| usize_value(i)).collect())
}

/// Parses an instance file; when it carries a point, the point is checked
/// for bounds and per-row feasibility.
pub fn parse_instance(text: &str) -> Result<(Instance, Option<Point>)> {
    let root = parse_root(text)?;
    let map = as_object(&root, "instance")?;
    check_keys(map, &["name", "A", "d", "c", "x"], "instance")?;

    let name = match map.get("name") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(schema("\"name\" must be a string")),
    };
    let matrix = as_array(required(map, "A", "instance")?, "\"A\"")?;
    let capacities = as_array(required(map, "d", "instance")?, "\"d\"")?;
    if matrix.len() != capacities.len() {
        return Err(schema(format!(
            "\"A\" has {} rows but \"d\" has {} capacities",
            matrix.len(),
            capacities.len()
        )));
    }
    let rows: Vec<KnapsackRow> = matrix
        .iter()
        .zip(capacities)
        .enumerate()
        .map(|(r, (row, cap))| {
            let weights = as_array(row, &format!("row {r} of \"A\""))?
                .iter()
                .map(|v| parse_int(v, &format!("a weight in row {r}")))
                .collect::<Result<Vec<Int>>>()?;
            KnapsackRow::new(weights, parse_int(cap, &format!("capacity {r}"))?)
        })
        .collect::<Result<_>>()?;
    let objective = as_array(required(map, "c", "instance")?, "\"c\"")?
        .iter()
        .map(|v| parse_int(v, "an objective entry"))
        .collect::<Result<Vec<Int>>>()?;
    let instance = Instance::new(rows, objective, name)?;

    let point = match map.get("x") {
        None => None,
        Some(v) => {
            let coords = as_array(v, "\"x\"")?
                .iter()
                .map(|v| parse_rat(v, "a coordinate of \"x\""))
                .collect::<Result<Vec<Rat>>>()?;
            Some(Point::new(coords))
        }
    };
    validate_instance(&instance, point.as_ref())?;
    Ok((instance, point))
}

pub fn instance_to_json(instance: &Instance, point: Option<&Point>) -> Value {
    let mut map = Map::new();
    if let Some(name) = instance.name() {
        map.insert("name".into(), Value::String(name.to_string()));
    }
    map.insert(
        "A".into(),
        Value::Array(
            instance
                .rows()
                .iter()
                .map(|row| Value::Array(row.weights().iter().map(int_value).collect()))
                .collect(),
        ),
    );
    map.insert(
        "d".into(),
        Value::Array(instance.rows().iter().map(|row| int_value(row.capacity())).collect()),
    );
    map.insert(
        "c".into(),
        Value::Array(instance.objective().iter().map(int_value).collect()),
    );
    if let Some(x) = point {
        map.insert("x".into(), Value::Array(x.coords().iter().map(rat_value).collect()));
    }
    Value::Object(map)
}

/// Parses a bare JSON array of coordinates, each an integer or a "p/q"
/// string, and checks the box bounds. Row feasibility is the caller's
/// concern: a bare point names no instance.
pub fn parse_point(text: &str, n: usize) -> Result<Point> {
    let root = parse_root(text)?;
    let coords = as_array(&root, "point")?
        .iter()
        .map(|v| parse_rat(v, "a coordinate"))
        .collect::<Result<Vec<Rat>>>()?;
    if coords.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: coords.len() });
    }
    let point = Point::new(coords);
    point.check_bounds()?;
    Ok(point)
}

/// Parses a subset-sum input `{"alpha": [int], "w": int}`.
pub fn parse_ssp(text: &str) -> Result<SspInstance> {
    let root = parse_root(text)?;
    let map = as_object(&root, "subset-sum input")?;
    check_keys(map, &["alpha", "w"], "subset-sum input")?;
    let alpha = as_array(required(map, "alpha", "subset-sum input")?, "\"alpha\"")?
        .iter()
        .map(|v| parse_int(v, "a weight in \"alpha\""))
        .collect::<Result<Vec<Int>>>()?;
    let w = parse_int(required(map, "w", "subset-sum input")?, "\"w\"")?;
    SspInstance::new(alpha, w)
}

fn certificate_to_json(certificate: &Certificate) -> Value {
    let mut map = Map::new();
    match certificate {
        Certificate::Cover { cover } => {
            map.insert("cover".into(), index_array(cover));
        }
        Certificate::ExtendedCover { cover, t } => {
            map.insert("cover".into(), index_array(cover));
            map.insert("t".into(), usize_value(*t));
        }
        Certificate::Config { set_n, t, k, subset } => {
            map.insert("set".into(), index_array(set_n));
            map.insert("t".into(), usize_value(*t));
            map.insert("k".into(), usize_value(*k));
            map.insert("subset".into(), index_array(subset));
        }
        Certificate::GenConfig { set_n, t, k, n_prime } => {
            map.insert("set".into(), index_array(set_n));
            map.insert("t".into(), usize_value(*t));
            map.insert("k".into(), usize_value(*k));
            map.insert("n_prime".into(), usize_value(*n_prime));
        }
        Certificate::Weight { pack } => {
            map.insert("pack".into(), index_array(pack));
        }
    }
    Value::Object(map)
}

fn parse_certificate(value: &Value, family: Family) -> Result<Certificate> {
    let map = as_object(value, "certificate")?;
    let what = "certificate";
    match family {
        Family::Cover => {
            check_keys(map, &["cover"], what)?;
            Ok(Certificate::Cover { cover: parse_index_array(required(map, "cover", what)?, "\"cover\"")? })
        }
        Family::ExtendedCover => {
            check_keys(map, &["cover", "t"], what)?;
            Ok(Certificate::ExtendedCover {
                cover: parse_index_array(required(map, "cover", what)?, "\"cover\"")?,
                t: parse_index(required(map, "t", what)?, "\"t\"")?,
            })
        }
        Family::Config => {
            check_keys(map, &["set", "t", "k", "subset"], what)?;
            Ok(Certificate::Config {
                set_n: parse_index_array(required(map, "set", what)?, "\"set\"")?,
                t: parse_index(required(map, "t", what)?, "\"t\"")?,
                k: parse_index(required(map, "k", what)?, "\"k\"")?,
                subset: parse_index_array(required(map, "subset", what)?, "\"subset\"")?,
            })
        }
        Family::GenConfig => {
            check_keys(map, &["set", "t", "k", "n_prime"], what)?;
            Ok(Certificate::GenConfig {
                set_n: parse_index_array(required(map, "set", what)?, "\"set\"")?,
                t: parse_index(required(map, "t", what)?, "\"t\"")?,
                k: parse_index(required(map, "k", what)?, "\"k\"")?,
                n_prime: parse_index(required(map, "n_prime", what)?, "\"n_prime\"")?,
            })
        }
        Family::Weight => {
            check_keys(map, &["pack"], what)?;
            Ok(Certificate::Weight { pack: parse_index_array(required(map, "pack", what)?, "\"pack\"")? })
        }
    }
}

pub fn cut_to_json(cut: &Cut, violation: Option<&Rat>) -> Value {
    let mut map = Map::new();
    map.insert("family".into(), Value::String(cut.family.to_string()));
    map.insert("row".into(), usize_value(cut.row_index));
    map.insert("certificate".into(), certificate_to_json(&cut.certificate));
    map.insert("coeffs".into(), Value::Array(cut.coeffs.iter().map(rat_value).collect()));
    map.insert("rhs".into(), rat_value(&cut.rhs));
    if let Some(v) = violation {
        map.insert("violation".into(), rat_value(v));
    }
    Value::Object(map)
}

/// Parses a cut against its instance: the certificate is re-expanded and
/// the stored coefficients and right-hand side must match the expansion.
/// A stored violation value is allowed but not checked here, since the cut
/// file does not carry the point.
pub fn parse_cut(text: &str, instance: &Instance) -> Result<Cut> {
    let root = parse_root(text)?;
    let map = as_object(&root, "cut")?;
    check_keys(map, &["family", "row", "certificate", "coeffs", "rhs", "violation"], "cut")?;

    let Value::String(tag) = required(map, "family", "cut")? else {
        return Err(schema("\"family\" must be a string"));
    };
    let family = Family::from_str(tag)?;
    let row_index = parse_index(required(map, "row", "cut")?, "\"row\"")?;
    if row_index >= instance.m() {
        return Err(Error::IndexOutOfRange { index: row_index, len: instance.m() });
    }
    let certificate = parse_certificate(required(map, "certificate", "cut")?, family)?;
    let rebuilt = build_cut(instance.row(row_index), &certificate)?.with_row(row_index);

    let coeffs = as_array(required(map, "coeffs", "cut")?, "\"coeffs\"")?
        .iter()
        .map(|v| parse_rat(v, "a coefficient"))
        .collect::<Result<Vec<Rat>>>()?;
    if coeffs != rebuilt.coeffs {
        return Err(schema("stored coefficients do not match the certificate"));
    }
    let rhs = parse_rat(required(map, "rhs", "cut")?, "\"rhs\"")?;
    if rhs != rebuilt.rhs {
        return Err(schema("stored right-hand side does not match the certificate"));
    }
    if let Some(v) = map.get("violation") {
        let v = parse_rat(v, "\"violation\"")?;
        if !v.is_positive() {
            return Err(schema("a stored violation must be positive"));
        }
    }
    Ok(rebuilt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn instance_roundtrip_keeps_everything() {
        let text = r#"{"name":"toy","A":[[2,4,7],[1,1,1]],"d":[8,2],"c":[5,3,9],"x":[1,"1/2",0]}"#;
        let (inst, point) = parse_instance(text).unwrap();
        assert_eq!(inst.name(), Some("toy"));
        assert_eq!(inst.m(), 2);
        let x = point.unwrap();
        assert_eq!(*x.coord(1), rat(1, 2));
        let back = instance_to_json(&inst, Some(&x)).to_string();
        let (inst2, point2) = parse_instance(&back).unwrap();
        assert_eq!(inst2.row(0).weights(), inst.row(0).weights());
        assert_eq!(point2.unwrap().coords(), x.coords());
    }

    #[test]
    fn bare_points_parse_with_length_and_bounds_checks() {
        let x = parse_point(r#"[1,"1/2",0]"#, 3).unwrap();
        assert_eq!(*x.coord(1), rat(1, 2));
        assert!(matches!(
            parse_point(r#"[1,"1/2"]"#, 3),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
        assert!(matches!(
            parse_point(r#"[1,"3/2",0]"#, 3),
            Err(Error::PointOutOfBounds { index: 1 })
        ));
    }

    #[test]
    fn unknown_keys_and_loose_numbers_are_rejected() {
        let extra = r#"{"A":[[2]],"d":[3],"c":[1],"weights":[2]}"#;
        assert!(matches!(parse_instance(extra), Err(Error::SchemaViolation(_))));
        let float = r#"{"A":[[2.5]],"d":[3],"c":[1]}"#;
        assert!(matches!(parse_instance(float), Err(Error::SchemaViolation(_))));
        let infeasible = r#"{"A":[[2,3]],"d":[4],"c":[1,1],"x":[1,1]}"#;
        assert!(matches!(parse_instance(infeasible), Err(Error::InfeasiblePoint { .. })));
    }

    #[test]
    fn cut_roundtrip_rebuilds_from_the_certificate() {
        let (inst, _) = parse_instance(r#"{"A":[[3,4,5]],"d":[8],"c":[1,1,1]}"#).unwrap();
        let cut = build_cut(inst.row(0), &Certificate::Cover { cover: vec![0, 1, 2] }).unwrap();
        let text = cut_to_json(&cut, Some(&rat(1, 4))).to_string();
        let parsed = parse_cut(&text, &inst).unwrap();
        assert_eq!(parsed, cut);
    }

    #[test]
    fn tampered_cut_payloads_fail_the_cross_check() {
        let (inst, _) = parse_instance(r#"{"A":[[3,4,5]],"d":[8],"c":[1,1,1]}"#).unwrap();
        let good = r#"{"family":"ci","row":0,"certificate":{"cover":[0,1,2]},"coeffs":[1,1,1],"rhs":2}"#;
        assert!(parse_cut(good, &inst).is_ok());
        let wrong_rhs = good.replace("\"rhs\":2", "\"rhs\":1");
        assert!(matches!(parse_cut(&wrong_rhs, &inst), Err(Error::SchemaViolation(_))));
        let not_a_cover = good.replace("[0,1,2]", "[0,1]").replace("[1,1,1]", "[1,1,0]");
        assert!(matches!(parse_cut(&not_a_cover, &inst), Err(Error::InvalidCertificate(_))));
    }

    #[test]
    fn ssp_inputs_parse_strictly() {
        let ssp = parse_ssp(r#"{"alpha":[1,2],"w":3}"#).unwrap();
        assert_eq!(ssp.n(), 2);
        assert!(matches!(parse_ssp(r#"{"alpha":[1,2],"w":3,"k":1}"#), Err(Error::SchemaViolation(_))));
        assert!(matches!(parse_ssp(r#"{"alpha":[0],"w":3}"#), Err(Error::InvalidSsp(_))));
    }
}

//! Canonical JSON interchange: sorted keys, rationals as `"p/q"` strings and a
//! `"schema": "1"` field on every top-level document.

use serde_json::{json, Map, Value};

use crate::algebra::{format_q, parse_q, LabeledVector, RationalMatrix, SparseVec, Q};
use crate::combinatorics::{Partition, SkewShape, Tableau};
use crate::error::{Result, SchurError};
use crate::points::FlagPoint;
use crate::schur::{AmbientElement, Key, SkewAmbientElement};

pub const SCHEMA: &str = "1";

fn schema_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(SchurError::Schema(msg.into()))
}

/// Parses text, reporting syntax errors with their line and column.
pub fn parse(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| SchurError::Schema(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column())))
}

/// Adds the schema tag and renders with sorted keys.
pub fn document(mut v: Value) -> String {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(SCHEMA));
    }
    // serde_json's default map is ordered by key
    serde_json::to_string_pretty(&v).expect("serializable")
}

fn check_schema(v: &Value) -> Result<()> {
    match v.get("schema") {
        None => Ok(()),
        Some(Value::String(s)) if s == SCHEMA => Ok(()),
        Some(other) => schema_err(format!("unsupported schema version {other}")),
    }
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value> {
    v.get(name).ok_or_else(|| SchurError::Schema(format!("missing field \"{name}\"")))
}

pub fn rational_to_json(x: &Q) -> Value {
    Value::String(format_q(x))
}

pub fn rational_from_json(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Q::from_integer(i.into())),
            None => schema_err(format!("{n} is not an integer; write rationals as \"p/q\"")),
        },
        _ => schema_err(format!("expected a rational, got {v}")),
    }
}

fn usize_from_json(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| SchurError::Schema(format!("expected a non-negative integer, got {v}")))
}

fn usize_list(v: &Value) -> Result<Vec<usize>> {
    match v {
        Value::Array(a) => a.iter().map(usize_from_json).collect(),
        _ => schema_err(format!("expected an array of integers, got {v}")),
    }
}

pub fn partition_to_json(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn partition_from_json(v: &Value) -> Result<Partition> {
    Partition::new(usize_list(v)?)
}

pub fn skew_shape_to_json(s: &SkewShape) -> Value {
    json!({ "outer": partition_to_json(&s.outer), "inner": partition_to_json(&s.inner) })
}

pub fn skew_shape_from_json(v: &Value) -> Result<SkewShape> {
    SkewShape::new(partition_from_json(field(v, "outer")?)?, partition_from_json(field(v, "inner")?)?)
        .map_err(|e| SchurError::Schema(e.to_string()))
}

/// Rows list only the cells of the skew shape.
pub fn tableau_to_json(t: &Tableau) -> Value {
    json!({ "shape": skew_shape_to_json(&t.shape), "rows": t.rows })
}

pub fn tableau_from_json(v: &Value) -> Result<Tableau> {
    let shape = skew_shape_from_json(field(v, "shape")?)?;
    let rows = match field(v, "rows")? {
        Value::Array(a) => a.iter().map(usize_list).collect::<Result<Vec<_>>>()?,
        other => return schema_err(format!("expected rows, got {other}")),
    };
    Tableau::new(shape, rows)
}

fn terms_to_json(terms: &SparseVec<Key>) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(k, x)| json!({ "key": k, "coeff": rational_to_json(x) }))
            .collect(),
    )
}

fn terms_from_json(v: &Value) -> Result<SparseVec<Key>> {
    let Value::Array(a) = v else {
        return schema_err("\"terms\" must be an array");
    };
    let mut out = SparseVec::new();
    for t in a {
        let key: Key = match field(t, "key")? {
            Value::Array(cols) => cols
                .iter()
                .map(|c| usize_list(c).map(|c| c.into_iter().map(|i| i as u8).collect()))
                .collect::<Result<_>>()?,
            other => return schema_err(format!("expected a key, got {other}")),
        };
        let c = rational_from_json(field(t, "coeff")?)?;
        if out.insert(key.clone(), c).is_some() {
            return schema_err(format!("duplicate key {key:?}"));
        }
    }
    Ok(out)
}

/// `{"type": "ambient", "lambda", "n", "dual", "terms": [{"key", "coeff"}]}`.
pub fn ambient_to_json(a: &AmbientElement) -> Value {
    json!({
        "type": "ambient",
        "lambda": partition_to_json(&a.lambda),
        "n": a.n,
        "dual": a.dual,
        "terms": terms_to_json(&a.terms),
    })
}

pub fn ambient_from_json(v: &Value) -> Result<AmbientElement> {
    check_schema(v)?;
    let lambda = partition_from_json(field(v, "lambda")?)?;
    let n = usize_from_json(field(v, "n")?)?;
    let dual = match v.get("dual") {
        None => false,
        Some(d) => d.as_bool().ok_or_else(|| SchurError::Schema("\"dual\" must be a boolean".into()))?,
    };
    AmbientElement::new(lambda, n, dual, terms_from_json(field(v, "terms")?)?)
}

pub fn skew_ambient_to_json(a: &SkewAmbientElement) -> Value {
    json!({
        "type": "skew_ambient",
        "shape": skew_shape_to_json(&a.shape),
        "n": a.n,
        "dual": a.dual,
        "terms": terms_to_json(&a.terms),
    })
}

/// `{"type": "flag_point", "n", "lambda", "subspaces": [[row, …], …]}`,
/// smallest subspace first.
pub fn flag_point_to_json(f: &FlagPoint) -> Value {
    let subspaces: Vec<Vec<Vec<Value>>> =
        f.subspaces.iter().map(|w| w.iter().map(|r| r.iter().map(rational_to_json).collect()).collect()).collect();
    json!({ "type": "flag_point", "n": f.n, "lambda": partition_to_json(&f.lambda), "subspaces": subspaces })
}

pub fn flag_point_from_json(v: &Value) -> Result<FlagPoint> {
    check_schema(v)?;
    let n = usize_from_json(field(v, "n")?)?;
    let lambda = partition_from_json(field(v, "lambda")?)?;
    let Value::Array(ws) = field(v, "subspaces")? else {
        return schema_err("\"subspaces\" must be an array");
    };
    let mut subspaces = vec![];
    for w in ws {
        let Value::Array(rows) = w else {
            return schema_err("a subspace must be an array of rows");
        };
        let mut m = vec![];
        for r in rows {
            let Value::Array(xs) = r else {
                return schema_err("a generator must be an array of rationals");
            };
            m.push(xs.iter().map(rational_from_json).collect::<Result<Vec<_>>>()?);
        }
        subspaces.push(m);
    }
    FlagPoint::new(n, lambda, subspaces)
}

/// Either an array of points or `{"points": [...]}`.
pub fn flag_points_from_json(v: &Value) -> Result<Vec<FlagPoint>> {
    match v {
        Value::Array(a) => a.iter().map(flag_point_from_json).collect(),
        Value::Object(_) => {
            check_schema(v)?;
            match field(v, "points")? {
                Value::Array(a) => a.iter().map(flag_point_from_json).collect(),
                _ => schema_err("\"points\" must be an array"),
            }
        }
        _ => schema_err("expected a list of flag points"),
    }
}

pub fn labeled_vector_to_json(v: &LabeledVector<Tableau>) -> Value {
    Value::Array(
        v.labeled_entries()
            .into_iter()
            .map(|(t, x)| json!({ "tableau": tableau_to_json(&t), "coeff": rational_to_json(&x) }))
            .collect(),
    )
}

/// Dense rows with the labels of both sides.
pub fn matrix_to_json<R, C>(m: &RationalMatrix<R, C>, row: impl Fn(&R) -> Value, col: impl Fn(&C) -> Value) -> Value
where
    R: Clone,
    C: Clone,
{
    let mut out = Map::new();
    out.insert("rows".into(), json!(m.nrows()));
    out.insert("cols".into(), json!(m.ncols()));
    out.insert("row_labels".into(), Value::Array(m.row_labels.iter().map(row).collect()));
    out.insert("column_labels".into(), Value::Array(m.column_labels.iter().map(col).collect()));
    out.insert(
        "entries".into(),
        Value::Array(m.dense().iter().map(|r| Value::Array(r.iter().map(rational_to_json).collect())).collect()),
    );
    Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qr};
    use crate::points::random_flag_point;

    #[test]
    fn ambient_round_trip() {
        let p = Partition::new(vec![2, 1]).unwrap();
        let a = AmbientElement::monomial(&p, 3, true, &[&[2, 1], &[3]], qr(-3, 4)).unwrap();
        let text = document(ambient_to_json(&a));
        let back = ambient_from_json(&parse(&text).unwrap()).unwrap();
        assert_eq!(a, back);
        assert!(text.contains("\"3/4\""));
        assert!(text.find("\"dual\"").unwrap() < text.find("\"lambda\"").unwrap());
    }

    #[test]
    fn flag_round_trip() {
        let f = random_flag_point(&Partition::new(vec![3, 2, 1]).unwrap(), 4, 7).unwrap();
        let back = flag_point_from_json(&parse(&document(flag_point_to_json(&f))).unwrap()).unwrap();
        assert_eq!(f, back);
    }

    #[test]
    fn tableau_round_trip() {
        let t = Tableau::from_rows(vec![vec![1, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(tableau_from_json(&tableau_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn errors() {
        let e = parse("{\n  \"n\": 3,\n  oops\n}").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        let v = parse(r#"{"schema": "2", "lambda": [1], "n": 2, "terms": []}"#).unwrap();
        assert!(ambient_from_json(&v).is_err());
        let v = parse(r#"{"lambda": [1], "n": 2, "terms": [{"key": [[3]], "coeff": 1}]}"#).unwrap();
        assert!(matches!(ambient_from_json(&v), Err(SchurError::Schema(_))));
        let v = parse(r#"{"lambda": [1], "n": 2, "terms": [{"key": [[2]], "coeff": 5}]}"#).unwrap();
        assert_eq!(ambient_from_json(&v).unwrap().terms.values().next().unwrap(), &q(5));
    }
}

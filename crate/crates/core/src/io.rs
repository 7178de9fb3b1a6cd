//! JSON documents for representations, colorings, decompositions and
//! scenes. Vertex-keyed maps use the decimal vertex id as key; rationals are
//! `"p/q"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::construct::Decomposition;
use crate::cube::{CubeScene, SquareContactRep};
use crate::disk::DiskRep;
use crate::error::{Error, Result};
use crate::interval::{IntervalRep, ThresholdColoring};
use crate::rational::{format_q, parse_q, Q};

/// Any document the tools read or write.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Interval(IntervalRep),
    Unsat,
    Disk(DiskRep),
    Coloring(ThresholdColoring),
    Decomposition(Decomposition),
    Squares(SquareContactRep),
    Cubes(CubeScene),
}

fn field(name: &str, msg: impl Into<String>) -> Error {
    Error::Field { field: name.to_string(), msg: msg.into() }
}

fn keyed<T>(values: impl IntoIterator<Item = T>, f: impl Fn(T) -> Value) -> Value {
    let map: serde_json::Map<String, Value> = values.into_iter().enumerate().map(|(v, x)| (v.to_string(), f(x))).collect();
    Value::Object(map)
}

fn q_value(x: &Q) -> Value {
    Value::String(format_q(x))
}

impl Document {
    pub fn to_value(&self) -> Value {
        match self {
            Document::Interval(rep) => json!({
                "diameter": q_value(&rep.diameter),
                "coords": keyed(&rep.coords, q_value),
            }),
            Document::Unsat => json!({ "result": "unsat" }),
            Document::Disk(rep) => json!({
                "diameter": rep.diameter,
                "points": keyed(&rep.points, |p| json!([p.0, p.1])),
            }),
            Document::Coloring(c) => json!({
                "range": c.range,
                "threshold": c.threshold,
                "colors": keyed(&c.colors, |&x| json!(x)),
            }),
            Document::Decomposition(d) => serde_json::to_value(d).expect("plain lists"),
            Document::Squares(sq) => json!({
                "side": q_value(&sq.side),
                "centers": keyed(&sq.centers, |(x, y)| json!([format_q(x), format_q(y)])),
            }),
            Document::Cubes(scene) => json!({
                "side": q_value(&scene.side),
                "corners": keyed(&scene.corners, |(x, y, z)| json!([format_q(x), format_q(y), format_q(z)])),
            }),
        }
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Document> {
        let value: Value = serde_json::from_str(text)?;
        let obj = value.as_object().ok_or_else(|| field("<root>", "expected an object"))?;
        let has = |k: &str| obj.contains_key(k);
        if has("result") {
            return match obj["result"].as_str() {
                Some("unsat") => Ok(Document::Unsat),
                _ => Err(field("result", "expected \"unsat\"")),
            };
        }
        if has("coords") {
            let diameter = q_field(obj.get("diameter"), "diameter")?;
            let coords = vertex_map(&obj["coords"], "coords", |v, f| q_field(Some(v), f))?;
            return Ok(Document::Interval(IntervalRep::new(coords, diameter)));
        }
        if has("points") {
            let diameter = int_field(obj.get("diameter"), "diameter")?;
            let points = vertex_map(&obj["points"], "points", |v, f| {
                let [x, y] = fixed_array::<2>(v, f)?;
                Ok((int_field(Some(x), f)?, int_field(Some(y), f)?))
            })?;
            return Ok(Document::Disk(DiskRep { points, diameter }));
        }
        if has("colors") {
            return Ok(Document::Coloring(ThresholdColoring {
                colors: vertex_map(&obj["colors"], "colors", |v, f| int_field(Some(v), f))?,
                range: int_field(obj.get("range"), "range")?,
                threshold: int_field(obj.get("threshold"), "threshold")?,
            }));
        }
        if has("iset") || has("fset") {
            return Ok(Document::Decomposition(Decomposition::deserialize(&value)?));
        }
        if has("centers") {
            let side = q_field(obj.get("side"), "side")?;
            let centers = vertex_map(&obj["centers"], "centers", |v, f| {
                let [x, y] = fixed_array::<2>(v, f)?;
                Ok((q_field(Some(x), f)?, q_field(Some(y), f)?))
            })?;
            return Ok(Document::Squares(SquareContactRep { centers, side }));
        }
        if has("corners") {
            let side = q_field(obj.get("side"), "side")?;
            let corners = vertex_map(&obj["corners"], "corners", |v, f| {
                let [x, y, z] = fixed_array::<3>(v, f)?;
                Ok((q_field(Some(x), f)?, q_field(Some(y), f)?, q_field(Some(z), f)?))
            })?;
            return Ok(Document::Cubes(CubeScene { corners, side }));
        }
        Err(field("<root>", "unrecognized document"))
    }
}

fn q_field(v: Option<&Value>, name: &str) -> Result<Q> {
    match v {
        Some(Value::String(s)) => parse_q(s).map_err(|_| field(name, format!("bad rational {s:?}"))),
        Some(Value::Number(n)) => n.as_i64().map(Q::from_integer).ok_or_else(|| field(name, "expected an integer or \"p/q\"")),
        Some(_) => Err(field(name, "expected a rational string")),
        None => Err(field(name, "missing")),
    }
}

fn int_field(v: Option<&Value>, name: &str) -> Result<i64> {
    v.ok_or_else(|| field(name, "missing"))?.as_i64().ok_or_else(|| field(name, "expected an integer"))
}

fn fixed_array<'a, const K: usize>(v: &'a Value, name: &str) -> Result<[&'a Value; K]> {
    let items = v.as_array().ok_or_else(|| field(name, format!("expected an array of {K}")))?;
    let refs: Vec<&Value> = items.iter().collect();
    refs.try_into().map_err(|_| field(name, format!("expected an array of {K}")))
}

/// Reads `{"0": .., "1": .., ...}`; the keys must be exactly `0..n`.
fn vertex_map<T>(v: &Value, name: &str, read: impl Fn(&Value, &str) -> Result<T>) -> Result<Vec<T>> {
    let obj = v.as_object().ok_or_else(|| field(name, "expected an object keyed by vertex id"))?;
    let mut by_id = BTreeMap::new();
    for (key, item) in obj {
        let id: usize = key.parse().map_err(|_| field(name, format!("bad vertex id {key:?}")))?;
        let label = format!("{name}.{key}");
        by_id.insert(id, read(item, &label)?);
    }
    let n = by_id.len();
    if let Some((&last, _)) = by_id.last_key_value() {
        if last + 1 != n {
            let missing = (0..n).find(|v| !by_id.contains_key(v)).unwrap_or(n);
            return Err(field(name, format!("vertex {missing} missing")));
        }
    }
    Ok(by_id.into_values().collect())
}

#[derive(Serialize)]
struct Verdict<'a> {
    name: &'a str,
    vertices: usize,
    edges: usize,
    verdict: &'a str,
}

/// One line of the gallery verdict table as JSON.
pub fn verdict_line(name: &str, vertices: usize, edges: usize, verdict: &str) -> String {
    serde_json::to_string(&Verdict { name, vertices, edges, verdict }).expect("plain struct")
}

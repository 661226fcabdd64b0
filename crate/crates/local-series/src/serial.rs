//! JSON wire formats: series as `{"place":"inf"|{"v":...},"val":j,"prec":P,
//! "coeffs":[...]}`, Newton polygons as vertex lists.

use crate::newton::NewtonPolygon;
use crate::series::{PlaceKind, ValSeries};
use serde_json::{json, Value};

pub fn series_to_json(s: &ValSeries) -> Value {
    let place = match s.completion().kind() {
        PlaceKind::Infinity => json!("inf"),
        PlaceKind::Finite(v) => json!({ "v": algebra_core::serial::poly_to_json(v) }),
    };
    let coeffs: Vec<Value> = s
        .coeffs()
        .iter()
        .map(|c| Value::Array(c.rep().iter().map(|&x| json!(x)).collect()))
        .collect();
    json!({
        "place": place,
        "val": s.val_floor(),
        "prec": s.rel_prec(),
        "coeffs": coeffs,
    })
}

pub fn polygon_to_json(np: &NewtonPolygon) -> Value {
    json!({
        "vertices": np.vertices.iter().map(|&(i, v)| json!([i, v])).collect::<Vec<_>>(),
        "segments": np
            .segments
            .iter()
            .map(|s| {
                json!({
                    "slope": format!("{}", s.slope),
                    "length": s.length,
                })
            })
            .collect::<Vec<_>>(),
    })
}

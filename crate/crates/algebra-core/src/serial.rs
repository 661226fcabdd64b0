//! JSON wire format for polynomials.
//!
//! `{"p":5,"m":1,"var":"T","coeffs":[[c0],[c1],...]}` — coefficients are
//! little-endian in the indeterminate, each given as the residue vector of
//! the field element over F_p.

use crate::error::{AlgebraError, Result};
use crate::field::Fq;
use crate::poly::{FqPoly, Var};
use serde_json::{json, Value};

pub fn poly_to_json(a: &FqPoly) -> Value {
    let coeffs: Vec<Value> = a
        .coeffs()
        .iter()
        .map(|c| Value::Array(c.rep().iter().map(|&x| json!(x)).collect()))
        .collect();
    json!({
        "p": a.field().p(),
        "m": a.field().m(),
        "var": a.var().to_string(),
        "coeffs": coeffs,
    })
}

pub fn poly_from_json(v: &Value) -> Result<FqPoly> {
    let p = v["p"].as_u64().ok_or_else(|| AlgebraError::Parse("missing p".into()))?;
    let m = v["m"].as_u64().unwrap_or(1) as usize;
    let var = v["var"]
        .as_str()
        .and_then(|s| s.chars().next())
        .map(Var)
        .unwrap_or(Var::T);
    let field = if m == 1 {
        Fq::prime(p)?
    } else {
        match v.get("modulus") {
            Some(Value::Array(mods)) => {
                let coeffs: Vec<u64> = mods.iter().filter_map(|c| c.as_u64()).collect();
                Fq::extension(p, &coeffs)?
            }
            _ => Fq::extension_auto(p, m)?,
        }
    };
    let arr = v["coeffs"]
        .as_array()
        .ok_or_else(|| AlgebraError::Parse("missing coeffs".into()))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for c in arr {
        let rep: Vec<u64> = match c {
            Value::Array(xs) => xs.iter().filter_map(|x| x.as_u64()).collect(),
            Value::Number(n) => vec![n.as_u64().unwrap_or(0)],
            _ => return Err(AlgebraError::Parse("bad coefficient".into())),
        };
        coeffs.push(field.elem(&rep));
    }
    Ok(FqPoly::new(&field, var, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_exact_format() {
        let f5 = Fq::prime(5).unwrap();
        let a = FqPoly::from_ints(&f5, Var::T, &[2, 0, 1]);
        let v = poly_to_json(&a);
        assert_eq!(v["p"], 5);
        assert_eq!(v["m"], 1);
        assert_eq!(v["var"], "T");
        assert_eq!(v["coeffs"], json!([[2], [0], [1]]));
        assert_eq!(poly_from_json(&v).unwrap(), a);
    }
}

//! JSON encodings shared by the command-line front end. Integers become JSON
//! numbers when they fit in i64 and decimal strings otherwise; rationals are
//! always strings "a/b" (or "a").

use num_bigint::BigInt;
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::error::{input, Result};
use crate::intlat::{IntMatrix, IntegerLattice};
use crate::scalar::IntScalar;
use crate::torsion::{TorsionCoset, TorsionPoint, TorusSubgroup};

pub fn int_to_json<T: IntScalar>(x: &T) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

pub fn int_from_json<T: IntScalar>(v: &Value) -> Result<T> {
    let big: BigInt = match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| input!("expected an integer, got {n}"))?,
        Value::String(s) => s.trim().parse().map_err(|_| input!("expected an integer, got '{s}'"))?,
        _ => return Err(input!("expected an integer, got {v}")),
    };
    big_to_scalar(&big)
}

fn big_to_scalar<T: IntScalar>(b: &BigInt) -> Result<T> {
    let s = b.to_string();
    T::from_str_radix(&s, 10).map_err(|_| input!("integer {s} does not fit the scalar type"))
}

pub fn ratio_to_json<T: IntScalar>(r: &Ratio<T>) -> Value {
    json!(ratio_text(r))
}

pub fn ratio_text<T: IntScalar>(r: &Ratio<T>) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses "a", "a/b" or an integer JSON number.
pub fn ratio_from_json<T: IntScalar>(v: &Value) -> Result<Ratio<T>> {
    match v {
        Value::String(s) => parse_ratio(s),
        Value::Number(_) => Ok(Ratio::from_integer(int_from_json(v)?)),
        _ => Err(input!("expected a rational, got {v}")),
    }
}

pub fn parse_ratio<T: IntScalar>(s: &str) -> Result<Ratio<T>> {
    let s = s.trim();
    let parse = |t: &str| -> Result<T> {
        let b: BigInt = t.trim().parse().map_err(|_| input!("malformed rational '{s}'"))?;
        big_to_scalar(&b)
    };
    match s.split_once('/') {
        Some((a, b)) => {
            let den = parse(b)?;
            if den.is_zero() {
                return Err(input!("zero denominator in '{s}'"));
            }
            Ok(Ratio::new(parse(a)?, den))
        }
        None => Ok(Ratio::from_integer(parse(s)?)),
    }
}

pub fn vec_to_json<T: IntScalar>(v: &[T]) -> Value {
    Value::Array(v.iter().map(int_to_json).collect())
}

pub fn vec_from_json<T: IntScalar>(v: &Value) -> Result<Vec<T>> {
    v.as_array().ok_or_else(|| input!("expected an array, got {v}"))?.iter().map(int_from_json).collect()
}

/// Row-major array of rows.
pub fn matrix_to_json<T: IntScalar>(m: &IntMatrix<T>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vec_to_json(r)).collect())
}

pub fn matrix_from_json<T: IntScalar>(v: &Value) -> Result<IntMatrix<T>> {
    let rows: Vec<Vec<T>> = v
        .as_array()
        .ok_or_else(|| input!("expected a matrix as an array of rows"))?
        .iter()
        .map(vec_from_json)
        .collect::<Result<_>>()?;
    IntMatrix::from_rows(rows)
}

/// The canonical basis vectors.
pub fn lattice_to_json<T: IntScalar>(l: &IntegerLattice<T>) -> Value {
    Value::Array(l.basis().iter().map(|b| vec_to_json(b)).collect())
}

pub fn lattice_from_json<T: IntScalar>(n: usize, v: &Value) -> Result<IntegerLattice<T>> {
    let gens: Vec<Vec<T>> = v
        .as_array()
        .ok_or_else(|| input!("expected a lattice as an array of generators"))?
        .iter()
        .map(vec_from_json)
        .collect::<Result<_>>()?;
    IntegerLattice::from_generators(n, &gens)
}

/// Exponent vector as ["a/b", …].
pub fn point_to_json<T: IntScalar>(x: &TorsionPoint<T>) -> Value {
    Value::Array(x.coords().iter().map(ratio_to_json).collect())
}

pub fn point_from_json<T: IntScalar>(v: &Value, p: u64) -> Result<TorsionPoint<T>> {
    let coords: Vec<Ratio<T>> = v
        .as_array()
        .ok_or_else(|| input!("expected a torsion point as an array of rationals"))?
        .iter()
        .map(ratio_from_json)
        .collect::<Result<_>>()?;
    TorsionPoint::new(&coords, p)
}

/// {"rep", "lattice", "dim", "order", "characteristic"}; the lattice is the
/// relation lattice Λ of the group H_Λ.
pub fn coset_to_json<T: IntScalar>(c: &TorsionCoset<T>) -> Value {
    json!({
        "rep": point_to_json(c.rep()),
        "lattice": lattice_to_json(c.group().lattice()),
        "dim": c.dim(),
        "order": int_to_json(&c.order()),
        "characteristic": c.characteristic(),
    })
}

/// Reads {"rep": [...], "lattice": [[...], ...]}; the characteristic comes
/// from the object when present, else from `p`.
pub fn coset_from_json<T: IntScalar>(v: &Value, p: u64) -> Result<TorsionCoset<T>> {
    let p = match v.get("characteristic") {
        Some(c) => c.as_u64().ok_or_else(|| input!("characteristic must be a nonnegative integer"))?,
        None => p,
    };
    let rep: TorsionPoint<T> = point_from_json(v.get("rep").ok_or_else(|| input!("coset needs a 'rep'"))?, p)?;
    let n = rep.ambient_dim();
    let lattice = match v.get("lattice") {
        Some(l) => lattice_from_json(n, l)?,
        None => IntegerLattice::zero(n),
    };
    TorsionCoset::new(rep, TorusSubgroup::new(lattice, p)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_become_strings() {
        let big: BigInt = BigInt::from(1u8) << 80;
        assert!(int_to_json(&big).is_string());
        assert_eq!(int_from_json::<BigInt>(&int_to_json(&big)).unwrap(), big);
        assert_eq!(int_to_json(&BigInt::from(-7)), json!(-7));
        assert!(int_from_json::<i64>(&int_to_json(&big)).is_err());
    }

    #[test]
    fn coset_round_trip() {
        let v = json!({"rep": ["1/5", "0"], "lattice": [[1, 1]]});
        let c: TorsionCoset = coset_from_json(&v, 0).unwrap();
        let back: TorsionCoset = coset_from_json(&coset_to_json(&c), 7).unwrap();
        assert_eq!(c, back);
        assert_eq!(coset_to_json(&c)["dim"], json!(1));
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_ratio::<i64>(" 6/4 ").unwrap(), Ratio::new(3, 2));
        assert_eq!(ratio_text(&Ratio::new(4i64, 2)), "2");
        assert!(parse_ratio::<i64>("1/0").is_err());
        assert!(parse_ratio::<i64>("x").is_err());
    }
}

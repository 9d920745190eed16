use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::matrix::{format_rational, parse_rational, ExactMatrix, Rational};
use crate::error::{malformed, Result};

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Value>>,
}

fn entry_to_json(q: &Rational) -> Value {
    if q.is_integer() {
        if let Ok(v) = i64::try_from(q.numer()) {
            return Value::from(v);
        }
    }
    Value::String(format_rational(q))
}

fn entry_from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(malformed(format!(
            "matrix entry must be an integer or a \"p/q\" string, got {other}"
        ))),
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows(),
            cols: self.cols(),
            entries: (0..self.rows())
                .map(|r| self.row(r).iter().map(entry_to_json).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(D::Error::custom(format!(
                "declared {}x{} but entries have a different shape",
                raw.rows, raw.cols
            )));
        }
        let rows = raw
            .entries
            .iter()
            .map(|r| r.iter().map(entry_from_json).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        if raw.rows == 0 {
            return Ok(ExactMatrix::zeros(0, raw.cols));
        }
        ExactMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

impl ExactMatrix {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::ratio;
    use proptest::prelude::*;

    #[test]
    fn integers_are_bare_numbers() {
        let m = ExactMatrix::from_integers(&[[0, 1], [-1, 0]]);
        assert_eq!(
            m.to_json(),
            r#"{"rows":2,"cols":2,"entries":[[0,1],[-1,0]]}"#
        );
    }

    #[test]
    fn fractions_are_strings() {
        let mut m = ExactMatrix::zeros(1, 2);
        m.set(0, 1, ratio(-3, 4));
        assert_eq!(m.to_json(), r#"{"rows":1,"cols":2,"entries":[[0,"-3/4"]]}"#);
    }

    #[test]
    fn rejects_floats_and_bad_shapes() {
        assert!(ExactMatrix::from_json(r#"{"rows":1,"cols":1,"entries":[[0.5]]}"#).is_err());
        assert!(ExactMatrix::from_json(r#"{"rows":2,"cols":1,"entries":[[1]]}"#).is_err());
        let m = ExactMatrix::from_json(r#"{"rows":1,"cols":2,"entries":[["2/4", 3]]}"#).unwrap();
        assert_eq!(m.get(0, 0), &ratio(1, 2));
    }

    proptest! {
        #[test]
        fn json_round_trip(vals in proptest::collection::vec((-50i64..50, 1i64..9), 9)) {
            let m = ExactMatrix::from_fn(3, 3, |r, c| {
                let (p, q) = vals[r * 3 + c];
                ratio(p, q)
            });
            let text = m.to_json();
            let back = ExactMatrix::from_json(&text).unwrap();
            prop_assert_eq!(&back, &m);
            prop_assert_eq!(back.to_json(), text);
        }
    }
}

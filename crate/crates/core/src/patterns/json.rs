use serde::{Deserialize, Serialize};

use super::arc::{Arc, LoopVariant};
use super::pattern::LinkPattern;
use crate::error::{malformed, Result};
use crate::linalg::PatternKind;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct PatternJson {
    kind: String,
    k: usize,
    b: Vec<usize>,
    arcs: Vec<ArcJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArcJson {
    from: usize,
    to: usize,
    dotted: bool,
    #[serde(rename = "loop", default, skip_serializing_if = "Option::is_none")]
    loop_variant: Option<String>,
}

impl From<&LinkPattern> for PatternJson {
    fn from(p: &LinkPattern) -> Self {
        PatternJson {
            kind: p.kind().as_str().to_string(),
            k: p.k(),
            b: p.block_vector().to_vec(),
            arcs: p
                .arcs()
                .iter()
                .map(|a| ArcJson {
                    from: a.source(),
                    to: a.target(),
                    dotted: a.dotted(),
                    loop_variant: a.is_loop().then(|| a.loop_variant().as_str().to_string()),
                })
                .collect(),
        }
    }
}

impl TryFrom<PatternJson> for LinkPattern {
    type Error = crate::Error;

    fn try_from(raw: PatternJson) -> Result<Self> {
        let kind = PatternKind::parse(&raw.kind)?;
        if raw.k != raw.b.len() {
            return Err(malformed(format!(
                "k = {} but b has {} entries",
                raw.k,
                raw.b.len()
            )));
        }
        let arcs = raw
            .arcs
            .into_iter()
            .map(|a| {
                let variant = match a.loop_variant.as_deref() {
                    Some(s) => LoopVariant::parse(s)?,
                    None if a.from == a.to => {
                        return Err(malformed(format!(
                            "arc {}->{} needs a \"loop\" field",
                            a.from, a.to
                        )))
                    }
                    None => LoopVariant::None,
                };
                Arc::new(a.from, a.to, a.dotted, variant)
            })
            .collect::<Result<Vec<_>>>()?;
        LinkPattern::new(kind, raw.b, arcs)
    }
}

impl Serialize for LinkPattern {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PatternJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinkPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PatternJson::deserialize(d)?;
        LinkPattern::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl LinkPattern {
    /// Canonical JSON; arcs appear in canonical order, so the text is
    /// byte-stable for a given pattern.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("pattern serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PatternJson = serde_json::from_str(text)?;
        LinkPattern::try_from(raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::enumerate;

    #[test]
    fn exact_format() {
        let p = LinkPattern::borel(
            PatternKind::Symplectic,
            2,
            vec![Arc::upper_loop(1), Arc::dotted_arrow(1, 2)],
        )
        .unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"kind":"symplectic","k":2,"b":[1,1],"arcs":[{"from":1,"to":1,"dotted":true,"loop":"upper"},{"from":1,"to":2,"dotted":true}]}"#
        );
    }

    #[test]
    fn input_order_does_not_matter() {
        let a = r#"{"kind":"orthogonal","k":3,"b":[1,1,1],"arcs":[{"from":3,"to":2,"dotted":false},{"from":1,"to":2,"dotted":true}]}"#;
        let b = r#"{"kind":"orthogonal","k":3,"b":[1,1,1],"arcs":[{"from":1,"to":2,"dotted":true},{"from":3,"to":2,"dotted":false}]}"#;
        let pa = LinkPattern::from_json(a).unwrap();
        assert_eq!(pa, LinkPattern::from_json(b).unwrap());
        assert_eq!(pa.to_json(), b);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            r#"{"kind":"unitary","k":1,"b":[1],"arcs":[]}"#,
            r#"{"kind":"symplectic","k":2,"b":[1],"arcs":[]}"#,
            r#"{"kind":"symplectic","k":1,"b":[1],"arcs":[{"from":1,"to":1,"dotted":true}]}"#,
            r#"{"kind":"symplectic","k":1,"b":[1],"arcs":[{"from":1,"to":1,"dotted":false,"loop":"upper"}]}"#,
            r#"{"kind":"symplectic","k":1,"b":[1],"arcs":[{"from":1,"to":2,"dotted":false}]}"#,
        ] {
            assert!(LinkPattern::from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn round_trip_all_small_patterns() {
        for kind in [PatternKind::Symplectic, PatternKind::Orthogonal] {
            for p in enumerate(kind, &[2, 1]) {
                let text = p.to_json();
                let back = LinkPattern::from_json(&text).unwrap();
                assert_eq!(back, p);
                assert_eq!(back.to_json(), text);
            }
        }
    }
}

//! Deterministic listings over a loaded document.

use finchu::chu::enumerate_hom;
use finchu::finsetoid::SetoidFn;
use serde::Serialize;
use serde_json::json;

use crate::document::Registry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    /// Extensional maps between two named setoids.
    Hom,
    /// Ideals of a named information system.
    Ideals,
    /// Chu transforms between two named Chu spaces.
    Transforms,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum EnumerateError {
    #[error("no {kind} named `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("--{0} is required for this kind")]
    Missing(&'static str),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Listing {
    pub kind: String,
    pub count: usize,
    pub items: Vec<serde_json::Value>,
}

impl Listing {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.count, self.kind);
        for item in &self.items {
            out.push_str(&item.to_string());
            out.push('\n');
        }
        out
    }
}

fn get<'a, T>(
    map: &'a std::collections::BTreeMap<String, T>,
    kind: &'static str,
    name: Option<&str>,
    flag: &'static str,
) -> Result<&'a T, EnumerateError> {
    let name = name.ok_or(EnumerateError::Missing(flag))?;
    map.get(name).ok_or_else(|| EnumerateError::Unknown {
        kind,
        name: name.to_string(),
    })
}

fn table(f: &SetoidFn) -> serde_json::Value {
    json!(f.table())
}

pub fn enumerate(reg: &Registry, kind: Kind, from: Option<&str>, to: Option<&str>) -> Result<Listing, EnumerateError> {
    let (label, items): (&str, Vec<_>) = match kind {
        Kind::Hom => {
            let a = get(&reg.setoids, "setoid", from, "from")?;
            let b = get(&reg.setoids, "setoid", to, "to")?;
            ("maps", SetoidFn::all(a, b).iter().map(table).collect())
        }
        Kind::Ideals => {
            let x = get(&reg.info_systems, "information system", from, "from")?;
            let ideals = x
                .ideals()
                .into_iter()
                .map(|j| json!((0..64).filter(|t| j >> t & 1 == 1).collect::<Vec<u32>>()));
            ("ideals", ideals.collect())
        }
        Kind::Transforms => {
            let a = get(&reg.chu_spaces, "chu space", from, "from")?;
            let b = get(&reg.chu_spaces, "chu space", to, "to")?;
            let ts = enumerate_hom(&a.space, &b.space);
            (
                "transforms",
                ts.iter()
                    .map(|t| json!({ "fwd": t.fwd().table(), "bwd": t.bwd().table() }))
                    .collect(),
            )
        }
    };
    Ok(Listing {
        kind: label.to_string(),
        count: items.len(),
        items,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::load_str;

    #[test]
    fn vacuous_transforms_from_an_empty_left_carrier() {
        let doc = r#"{
            "setoids": { "e": { "size": 0 }, "two": { "size": 2 }, "three": { "size": 3 } },
            "chu_spaces": {
                "a": { "gamma": "two", "left": "e", "right": "two", "pairing": [] },
                "b": { "gamma": "two", "left": "two", "right": "three", "pairing": [[0, 1, 0], [1, 1, 0]] }
            }
        }"#;
        let reg = load_str(doc).unwrap();
        let l = enumerate(&reg, Kind::Transforms, Some("a"), Some("b")).unwrap();
        // every bwd : 3 → 2 pairs with the empty fwd
        assert_eq!(l.count, 8);
        let l = enumerate(&reg, Kind::Transforms, Some("b"), Some("a"));
        assert_eq!(l.unwrap().count, 0);
    }

    #[test]
    fn unknown_names_are_reported() {
        let reg = load_str("{}").unwrap();
        assert_eq!(
            enumerate(&reg, Kind::Ideals, Some("x"), None),
            Err(EnumerateError::Unknown {
                kind: "information system",
                name: "x".into()
            })
        );
        assert_eq!(
            enumerate(&reg, Kind::Hom, None, None),
            Err(EnumerateError::Missing("from"))
        );
    }
}

//! JSON structure documents.
//!
//! A document declares named structures by explicit tables. Loading checks
//! references, shapes and extensionality, and reports the first problem with
//! the table coordinates that caused it. Properties that the suites verify
//! (topology axioms, apartness axioms, adjointness of claimed transforms and
//! so on) are kept as declared and checked later, so a wrong table shows up
//! as a failing check rather than a load error.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use finchu::chu::ChuSpace;
use finchu::finsetoid::{Apartness, Setoid, SetoidFn, SubsetEmbedding};
use finchu::genchu::{CustomEndofunctor, Endofunctor};
use finchu::info::{InfoSystem, MAX_TOKENS};
use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{at}: unknown {kind} `{name}`")]
    UnknownReference {
        at: String,
        kind: &'static str,
        name: String,
    },
    #[error("{at}: {message}")]
    Invalid { at: String, message: String },
}

fn invalid(at: impl Into<String>, message: impl Into<String>) -> LoadError {
    LoadError::Invalid {
        at: at.into(),
        message: message.into(),
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    #[serde(default)]
    setoids: BTreeMap<String, RawSetoid>,
    #[serde(default)]
    apartness: BTreeMap<String, RawApartness>,
    #[serde(default)]
    maps: BTreeMap<String, RawMap>,
    #[serde(default)]
    topologies: BTreeMap<String, RawTopology>,
    #[serde(default)]
    chu_spaces: BTreeMap<String, RawChuSpace>,
    #[serde(default)]
    info_systems: BTreeMap<String, RawInfoSystem>,
    #[serde(default)]
    endofunctors: BTreeMap<String, RawEndofunctor>,
    #[serde(default)]
    predicates: BTreeMap<String, RawPredicate>,
    #[serde(default)]
    complemented: BTreeMap<String, RawComplemented>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSetoid {
    size: usize,
    eq: Option<Vec<Vec<u8>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawApartness {
    setoid: String,
    #[serde(default)]
    denial: bool,
    #[serde(default)]
    pairs: Vec<[usize; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    dom: String,
    cod: String,
    table: Vec<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTopology {
    points: String,
    opens: Vec<Vec<usize>>,
    #[serde(default)]
    continuous: Vec<RawContinuity>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawContinuity {
    to: String,
    map: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChuSpace {
    gamma: String,
    left: String,
    right: String,
    pairing: Vec<Vec<usize>>,
    #[serde(default)]
    transforms: Vec<RawTransform>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTransform {
    to: String,
    fwd: String,
    bwd: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInfoSystem {
    tokens: usize,
    con: Vec<Vec<usize>>,
    entails: Vec<(Vec<usize>, usize)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEndofunctor {
    kind: String,
    value: Option<String>,
    #[serde(default)]
    objects: Vec<[String; 2]>,
    #[serde(default)]
    arrows: Vec<[String; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPredicate {
    ambient: String,
    members: Vec<usize>,
    #[serde(default)]
    arrows: Vec<RawPredArrow>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPredArrow {
    to: String,
    base: String,
    fwd: String,
    bwd: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawComplemented {
    apartness: String,
    one: Vec<usize>,
    zero: Vec<usize>,
    #[serde(default)]
    arrows: Vec<RawPredArrow>,
}

/// A topology as declared: the axioms are not yet checked.
#[derive(Clone, Debug)]
pub struct TopologyDecl {
    pub points: Setoid,
    pub opens: Vec<u64>,
    pub continuous: Vec<ContinuityClaim>,
}

/// `map` is claimed continuous from the enclosing topology to `to`.
#[derive(Clone, Debug)]
pub struct ContinuityClaim {
    pub to: String,
    pub map: String,
}

#[derive(Clone, Debug)]
pub struct ChuDecl {
    pub space: ChuSpace,
    pub transforms: Vec<TransformClaim>,
}

/// `(fwd, bwd)` is claimed to be a Chu transform to `to`.
#[derive(Clone, Debug)]
pub struct TransformClaim {
    pub to: String,
    pub fwd: String,
    pub bwd: String,
}

#[derive(Clone, Debug)]
pub struct PredicateDecl {
    pub subset: SubsetEmbedding,
    pub arrows: Vec<ArrowClaim>,
}

/// A claimed arrow over `base`, with the map on the subsets and, for
/// complemented subsets, the backward map on the zero parts.
#[derive(Clone, Debug)]
pub struct ArrowClaim {
    pub to: String,
    pub base: String,
    pub fwd: String,
    pub bwd: Option<String>,
}

/// A complemented subset as declared: disjointness is not yet checked.
#[derive(Clone, Debug)]
pub struct ComplementedDecl {
    pub apartness: String,
    pub one: SubsetEmbedding,
    pub zero: SubsetEmbedding,
    pub arrows: Vec<ArrowClaim>,
}

/// Every structure of a loaded document, by name.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    pub setoids: BTreeMap<String, Setoid>,
    pub apartness: BTreeMap<String, Apartness>,
    pub maps: BTreeMap<String, SetoidFn>,
    pub topologies: BTreeMap<String, TopologyDecl>,
    pub chu_spaces: BTreeMap<String, ChuDecl>,
    pub info_systems: BTreeMap<String, InfoSystem>,
    pub endofunctors: BTreeMap<String, Endofunctor>,
    pub predicates: BTreeMap<String, PredicateDecl>,
    pub complemented: BTreeMap<String, ComplementedDecl>,
}

impl Registry {
    pub fn is_empty(&self) -> bool {
        self.setoids.is_empty()
            && self.apartness.is_empty()
            && self.maps.is_empty()
            && self.topologies.is_empty()
            && self.chu_spaces.is_empty()
            && self.info_systems.is_empty()
            && self.endofunctors.is_empty()
            && self.predicates.is_empty()
            && self.complemented.is_empty()
    }
}

pub fn load(path: &Path) -> Result<Registry, LoadError> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_str(&text)
}

pub fn load_str(text: &str) -> Result<Registry, LoadError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(raw)
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, at: &str, kind: &'static str, name: &str) -> Result<&'a T, LoadError> {
    map.get(name).ok_or_else(|| LoadError::UnknownReference {
        at: at.to_string(),
        kind,
        name: name.to_string(),
    })
}

fn mask_of(points: &[usize], size: usize, at: &str) -> Result<u64, LoadError> {
    let mut mask = 0u64;
    for (k, &p) in points.iter().enumerate() {
        if p >= size {
            return Err(invalid(
                format!("{at}[{k}]"),
                format!("{p} is out of range for a carrier of size {size}"),
            ));
        }
        mask |= 1 << p;
    }
    Ok(mask)
}

fn build_setoid(name: &str, raw: &RawSetoid) -> Result<Setoid, LoadError> {
    let n = raw.size;
    if n > 16 {
        return Err(invalid(
            format!("setoids.{name}.size"),
            "carriers are limited to 16 elements",
        ));
    }
    let Some(eq) = &raw.eq else {
        return Ok(Setoid::discrete(n));
    };
    let at = |x: usize, y: usize| format!("setoids.{name}.eq[{x}][{y}]");
    if eq.len() != n {
        return Err(invalid(
            format!("setoids.{name}.eq"),
            format!("expected {n} rows, found {}", eq.len()),
        ));
    }
    for (x, row) in eq.iter().enumerate() {
        if row.len() != n {
            return Err(invalid(
                format!("setoids.{name}.eq[{x}]"),
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        if let Some(y) = row.iter().position(|&v| v > 1) {
            return Err(invalid(at(x, y), "entries must be 0 or 1"));
        }
    }
    let rel = |x: usize, y: usize| eq[x][y] == 1;
    for x in 0..n {
        if !rel(x, x) {
            return Err(invalid(at(x, x), format!("{x} is not equal to itself")));
        }
        for y in 0..n {
            if rel(x, y) && !rel(y, x) {
                return Err(invalid(at(y, x), format!("{x} = {y} but not {y} = {x}")));
            }
            for z in 0..n {
                if rel(x, y) && rel(y, z) && !rel(x, z) {
                    return Err(invalid(at(x, z), format!("{x} = {y} and {y} = {z} but not {x} = {z}")));
                }
            }
        }
    }
    Setoid::from_relation(n, rel).map_err(|e| invalid(format!("setoids.{name}.eq"), e.to_string()))
}

fn build_map(name: &str, raw: &RawMap, setoids: &BTreeMap<String, Setoid>) -> Result<SetoidFn, LoadError> {
    let dom = lookup(setoids, &format!("maps.{name}.dom"), "setoid", &raw.dom)?;
    let cod = lookup(setoids, &format!("maps.{name}.cod"), "setoid", &raw.cod)?;
    let at = |x: usize| format!("maps.{name}.table[{x}]");
    if raw.table.len() != dom.size() {
        return Err(invalid(
            format!("maps.{name}.table"),
            format!("expected {} entries, found {}", dom.size(), raw.table.len()),
        ));
    }
    for (x, &v) in raw.table.iter().enumerate() {
        if v >= cod.size() {
            return Err(invalid(at(x), format!("{v} is out of range for `{}`", raw.cod)));
        }
    }
    for x in 0..dom.size() {
        for y in x + 1..dom.size() {
            if dom.eq(x, y) && !cod.eq(raw.table[x], raw.table[y]) {
                return Err(invalid(
                    at(y),
                    format!(
                        "{x} = {y} but their images {} and {} differ",
                        raw.table[x], raw.table[y]
                    ),
                ));
            }
        }
    }
    SetoidFn::new(dom.clone(), cod.clone(), raw.table.clone())
        .map_err(|e| invalid(format!("maps.{name}"), e.to_string()))
}

fn build_chu(name: &str, raw: &RawChuSpace, setoids: &BTreeMap<String, Setoid>) -> Result<ChuSpace, LoadError> {
    let pre = format!("chu_spaces.{name}");
    let gamma = lookup(setoids, &format!("{pre}.gamma"), "setoid", &raw.gamma)?;
    let left = lookup(setoids, &format!("{pre}.left"), "setoid", &raw.left)?;
    let right = lookup(setoids, &format!("{pre}.right"), "setoid", &raw.right)?;
    let m = &raw.pairing;
    if m.len() != left.size() {
        return Err(invalid(
            format!("{pre}.pairing"),
            format!("expected {} rows, found {}", left.size(), m.len()),
        ));
    }
    for (x, row) in m.iter().enumerate() {
        if row.len() != right.size() {
            return Err(invalid(
                format!("{pre}.pairing[{x}]"),
                format!("expected {} entries, found {}", right.size(), row.len()),
            ));
        }
        if let Some(y) = row.iter().position(|&v| v >= gamma.size()) {
            return Err(invalid(
                format!("{pre}.pairing[{x}][{y}]"),
                format!("{} is out of range for `{}`", row[y], raw.gamma),
            ));
        }
    }
    for x in 0..left.size() {
        for x2 in 0..left.size() {
            for y in 0..right.size() {
                for y2 in 0..right.size() {
                    if left.eq(x, x2) && right.eq(y, y2) && !gamma.eq(m[x][y], m[x2][y2]) {
                        return Err(invalid(
                            format!("{pre}.pairing[{x2}][{y2}]"),
                            format!(
                                "({x}, {y}) = ({x2}, {y2}) but the values {} and {} differ",
                                m[x][y], m[x2][y2]
                            ),
                        ));
                    }
                }
            }
        }
    }
    ChuSpace::from_fn(left, right, gamma, |x, y| m[x][y]).map_err(|e| invalid(pre, e.to_string()))
}

fn build_info(name: &str, raw: &RawInfoSystem) -> Result<InfoSystem, LoadError> {
    let pre = format!("info_systems.{name}");
    if raw.tokens > MAX_TOKENS {
        return Err(invalid(
            format!("{pre}.tokens"),
            format!("at most {MAX_TOKENS} tokens are supported"),
        ));
    }
    let con = raw
        .con
        .iter()
        .enumerate()
        .map(|(k, set)| mask_of(set, raw.tokens, &format!("{pre}.con[{k}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut entails = Vec::new();
    for (k, (set, token)) in raw.entails.iter().enumerate() {
        let mask = mask_of(set, raw.tokens, &format!("{pre}.entails[{k}][0]"))?;
        if *token >= raw.tokens {
            return Err(invalid(
                format!("{pre}.entails[{k}][1]"),
                format!("{token} is not a token"),
            ));
        }
        entails.push((mask, *token));
    }
    InfoSystem::new(raw.tokens, &con, &entails).map_err(|e| invalid(pre, e.to_string()))
}

fn build_endofunctor(
    name: &str,
    raw: &RawEndofunctor,
    setoids: &BTreeMap<String, Setoid>,
    maps: &BTreeMap<String, SetoidFn>,
) -> Result<Endofunctor, LoadError> {
    let pre = format!("endofunctors.{name}");
    match raw.kind.as_str() {
        "identity" => Ok(Endofunctor::Identity),
        "square" => Ok(Endofunctor::Square),
        "constant" => {
            let value = raw
                .value
                .as_deref()
                .ok_or_else(|| invalid(format!("{pre}.value"), "a constant endofunctor needs a value"))?;
            Ok(Endofunctor::Constant(
                lookup(setoids, &format!("{pre}.value"), "setoid", value)?.clone(),
            ))
        }
        "custom" => {
            let objects = raw
                .objects
                .iter()
                .enumerate()
                .map(|(k, [s, t])| {
                    let at = format!("{pre}.objects[{k}]");
                    Ok((
                        lookup(setoids, &at, "setoid", s)?.clone(),
                        lookup(setoids, &at, "setoid", t)?.clone(),
                    ))
                })
                .collect::<Result<Vec<_>, LoadError>>()?;
            let arrows = raw
                .arrows
                .iter()
                .enumerate()
                .map(|(k, [f, g])| {
                    let at = format!("{pre}.arrows[{k}]");
                    Ok((
                        lookup(maps, &at, "map", f)?.clone(),
                        lookup(maps, &at, "map", g)?.clone(),
                    ))
                })
                .collect::<Result<Vec<_>, LoadError>>()?;
            Ok(Endofunctor::Custom(Arc::new(CustomEndofunctor {
                name: name.to_string(),
                objects,
                arrows,
            })))
        }
        other => Err(invalid(
            format!("{pre}.kind"),
            format!("unknown kind `{other}`; expected identity, square, constant or custom"),
        )),
    }
}

fn subset(ambient: &Setoid, members: &[usize], at: &str) -> Result<SubsetEmbedding, LoadError> {
    let mask = mask_of(members, ambient.size(), at)?;
    SubsetEmbedding::canonical(ambient, mask).map_err(|e| invalid(at, e.to_string()))
}

fn arrow_claims(
    raw: &[RawPredArrow],
    pre: &str,
    maps: &BTreeMap<String, SetoidFn>,
    targets: &dyn Fn(&str) -> bool,
) -> Result<Vec<ArrowClaim>, LoadError> {
    raw.iter()
        .enumerate()
        .map(|(k, a)| {
            let at = format!("{pre}.arrows[{k}]");
            if !targets(&a.to) {
                return Err(LoadError::UnknownReference {
                    at: format!("{at}.to"),
                    kind: "target",
                    name: a.to.clone(),
                });
            }
            lookup(maps, &format!("{at}.base"), "map", &a.base)?;
            lookup(maps, &format!("{at}.fwd"), "map", &a.fwd)?;
            if let Some(bwd) = &a.bwd {
                lookup(maps, &format!("{at}.bwd"), "map", bwd)?;
            }
            Ok(ArrowClaim {
                to: a.to.clone(),
                base: a.base.clone(),
                fwd: a.fwd.clone(),
                bwd: a.bwd.clone(),
            })
        })
        .collect()
}

fn build(raw: RawDocument) -> Result<Registry, LoadError> {
    let mut reg = Registry::default();
    for (name, s) in &raw.setoids {
        reg.setoids.insert(name.clone(), build_setoid(name, s)?);
    }
    for (name, a) in &raw.apartness {
        let pre = format!("apartness.{name}");
        let base = lookup(&reg.setoids, &format!("{pre}.setoid"), "setoid", &a.setoid)?;
        let ap = if a.denial {
            if !a.pairs.is_empty() {
                return Err(invalid(
                    format!("{pre}.pairs"),
                    "give either `denial` or `pairs`, not both",
                ));
            }
            Apartness::denial(base)
        } else {
            for (k, [x, y]) in a.pairs.iter().enumerate() {
                if *x >= base.size() || *y >= base.size() {
                    return Err(invalid(
                        format!("{pre}.pairs[{k}]"),
                        format!("({x}, {y}) is out of range"),
                    ));
                }
            }
            let pairs: Vec<(usize, usize)> = a.pairs.iter().map(|[x, y]| (*x, *y)).collect();
            Apartness::from_pairs(base, &pairs)
        };
        reg.apartness.insert(name.clone(), ap);
    }
    for (name, m) in &raw.maps {
        reg.maps.insert(name.clone(), build_map(name, m, &reg.setoids)?);
    }
    for (name, t) in &raw.topologies {
        let pre = format!("topologies.{name}");
        let points = lookup(&reg.setoids, &format!("{pre}.points"), "setoid", &t.points)?.clone();
        let opens = t
            .opens
            .iter()
            .enumerate()
            .map(|(k, o)| mask_of(o, points.size(), &format!("{pre}.opens[{k}]")))
            .collect::<Result<Vec<_>, _>>()?;
        reg.topologies.insert(
            name.clone(),
            TopologyDecl {
                points,
                opens,
                continuous: Vec::new(),
            },
        );
    }
    for (name, t) in &raw.topologies {
        let mut claims = Vec::new();
        for (k, c) in t.continuous.iter().enumerate() {
            let at = format!("topologies.{name}.continuous[{k}]");
            let to = lookup(&reg.topologies, &format!("{at}.to"), "topology", &c.to)?;
            let map = lookup(&reg.maps, &format!("{at}.map"), "map", &c.map)?;
            if map.dom() != &reg.topologies[name].points || map.cod() != &to.points {
                return Err(invalid(
                    format!("{at}.map"),
                    "map does not run between the point setoids",
                ));
            }
            claims.push(ContinuityClaim {
                to: c.to.clone(),
                map: c.map.clone(),
            });
        }
        reg.topologies.get_mut(name).expect("inserted above").continuous = claims;
    }
    for (name, c) in &raw.chu_spaces {
        let space = build_chu(name, c, &reg.setoids)?;
        reg.chu_spaces.insert(
            name.clone(),
            ChuDecl {
                space,
                transforms: Vec::new(),
            },
        );
    }
    for (name, c) in &raw.chu_spaces {
        let mut claims = Vec::new();
        for (k, t) in c.transforms.iter().enumerate() {
            let at = format!("chu_spaces.{name}.transforms[{k}]");
            let dst = &lookup(&reg.chu_spaces, &format!("{at}.to"), "Chu space", &t.to)?.space;
            let src = &reg.chu_spaces[name].space;
            let fwd = lookup(&reg.maps, &format!("{at}.fwd"), "map", &t.fwd)?;
            let bwd = lookup(&reg.maps, &format!("{at}.bwd"), "map", &t.bwd)?;
            if fwd.dom() != src.left() || fwd.cod() != dst.left() {
                return Err(invalid(format!("{at}.fwd"), "must run between the left carriers"));
            }
            if bwd.dom() != dst.right() || bwd.cod() != src.right() {
                return Err(invalid(
                    format!("{at}.bwd"),
                    "must run between the right carriers, reversed",
                ));
            }
            if src.gamma() != dst.gamma() {
                return Err(invalid(format!("{at}.to"), "spaces pair into different objects"));
            }
            claims.push(TransformClaim {
                to: t.to.clone(),
                fwd: t.fwd.clone(),
                bwd: t.bwd.clone(),
            });
        }
        reg.chu_spaces.get_mut(name).expect("inserted above").transforms = claims;
    }
    for (name, i) in &raw.info_systems {
        reg.info_systems.insert(name.clone(), build_info(name, i)?);
    }
    for (name, e) in &raw.endofunctors {
        let f = build_endofunctor(name, e, &reg.setoids, &reg.maps)?;
        reg.endofunctors.insert(name.clone(), f);
    }
    for (name, p) in &raw.predicates {
        let pre = format!("predicates.{name}");
        let ambient = lookup(&reg.setoids, &format!("{pre}.ambient"), "setoid", &p.ambient)?;
        let sub = subset(ambient, &p.members, &format!("{pre}.members"))?;
        let arrows = arrow_claims(&p.arrows, &pre, &reg.maps, &|t| raw.predicates.contains_key(t))?;
        reg.predicates
            .insert(name.clone(), PredicateDecl { subset: sub, arrows });
    }
    for (name, c) in &raw.complemented {
        let pre = format!("complemented.{name}");
        let ap = lookup(&reg.apartness, &format!("{pre}.apartness"), "apartness", &c.apartness)?;
        let one = subset(ap.base(), &c.one, &format!("{pre}.one"))?;
        let zero = subset(ap.base(), &c.zero, &format!("{pre}.zero"))?;
        let arrows = arrow_claims(&c.arrows, &pre, &reg.maps, &|t| raw.complemented.contains_key(t))?;
        if let Some((k, _)) = c.arrows.iter().enumerate().find(|(_, a)| a.bwd.is_none()) {
            return Err(invalid(
                format!("{pre}.arrows[{k}].bwd"),
                "arrows between complemented subsets need `bwd`",
            ));
        }
        reg.complemented.insert(
            name.clone(),
            ComplementedDecl {
                apartness: c.apartness.clone(),
                one,
                zero,
                arrows,
            },
        );
    }
    Ok(reg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_document_gives_empty_registry() {
        assert!(load_str("{}").unwrap().is_empty());
    }

    #[test]
    fn asymmetric_eq_names_the_pair() {
        let err = load_str(r#"{"setoids": {"s": {"size": 2, "eq": [[1, 1], [0, 1]]}}}"#).unwrap_err();
        assert_eq!(err.to_string(), "setoids.s.eq[1][0]: 0 = 1 but not 1 = 0");
    }

    #[test]
    fn non_extensional_map_is_rejected() {
        let doc = r#"{
            "setoids": {"i": {"size": 2, "eq": [[1, 1], [1, 1]]}, "two": {"size": 2}},
            "maps": {"f": {"dom": "i", "cod": "two", "table": [0, 1]}}
        }"#;
        let err = load_str(doc).unwrap_err();
        assert_eq!(
            err.to_string(),
            "maps.f.table[1]: 0 = 1 but their images 0 and 1 differ"
        );
    }

    #[test]
    fn unknown_reference_is_positioned() {
        let err = load_str(r#"{"maps": {"f": {"dom": "x", "cod": "x", "table": []}}}"#).unwrap_err();
        assert!(matches!(err, LoadError::UnknownReference { ref at, .. } if at == "maps.f.dom"));
    }

    #[test]
    fn parse_errors_carry_a_position() {
        let err = load_str("{\n  \"setoids\": [").unwrap_err();
        assert!(matches!(err, LoadError::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn unknown_sections_are_rejected() {
        assert!(matches!(load_str(r#"{"spaces": {}}"#), Err(LoadError::Parse { .. })));
    }
}

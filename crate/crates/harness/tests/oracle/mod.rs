//! A naive reading of structure documents straight from the JSON, used to
//! predict what the harness reports. Shares no code with the loader.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug)]
struct Set {
    n: usize,
    eq: Vec<Vec<bool>>,
}

impl Set {
    fn discrete(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.eq[x][y] == (x == y)))
    }
}

#[derive(Clone, Debug)]
struct Map {
    dom: String,
    cod: String,
    table: Vec<usize>,
}

fn uints(v: &Value) -> Option<Vec<usize>> {
    v.as_array()?.iter().map(|x| x.as_u64().map(|n| n as usize)).collect()
}

fn mask(members: &[usize]) -> u64 {
    members.iter().fold(0, |m, &x| m | 1 << x)
}

fn members_of(m: u64) -> Vec<usize> {
    (0..64).filter(|&i| m >> i & 1 == 1).collect()
}

fn section<'a>(doc: &'a Value, name: &str) -> Vec<(&'a String, &'a Value)> {
    doc.get(name)
        .and_then(Value::as_object)
        .map(|o| o.iter().collect())
        .unwrap_or_default()
}

struct Doc<'a> {
    raw: &'a Value,
    sets: BTreeMap<String, Set>,
    maps: BTreeMap<String, Map>,
    /// Apartness tables as declared, by name, with the base setoid name.
    aps: BTreeMap<String, (String, Vec<Vec<bool>>)>,
}

/// Every check id with its expected verdict, or `None` when the loader
/// should reject the document.
pub fn expected(raw: &Value) -> Option<BTreeMap<String, Verdict>> {
    let doc = well_formed(raw)?;
    let mut out = BTreeMap::new();
    apartness(&doc, &mut out);
    topologies(&doc, &mut out);
    transforms(&doc, &mut out);
    info_systems(&doc, &mut out);
    complemented(&doc, &mut out);
    predicates(&doc, &mut out);
    endofunctors(&doc, &mut out);
    Some(out)
}

fn well_formed(raw: &Value) -> Option<Doc<'_>> {
    let mut sets = BTreeMap::new();
    for (name, s) in section(raw, "setoids") {
        let n = s["size"].as_u64()? as usize;
        let eq: Vec<Vec<bool>> = match s.get("eq") {
            None => (0..n).map(|x| (0..n).map(|y| x == y).collect()).collect(),
            Some(rows) => {
                let rows = rows.as_array()?;
                if rows.len() != n {
                    return None;
                }
                let mut eq = Vec::new();
                for r in rows {
                    let r = uints(r)?;
                    if r.len() != n || r.iter().any(|&v| v > 1) {
                        return None;
                    }
                    eq.push(r.iter().map(|&v| v == 1).collect::<Vec<bool>>());
                }
                eq
            }
        };
        for x in 0..n {
            if !eq[x][x] {
                return None;
            }
            for y in 0..n {
                if eq[x][y] != eq[y][x] {
                    return None;
                }
                for z in 0..n {
                    if eq[x][y] && eq[y][z] && !eq[x][z] {
                        return None;
                    }
                }
            }
        }
        sets.insert(name.clone(), Set { n, eq });
    }
    let mut aps = BTreeMap::new();
    for (name, a) in section(raw, "apartness") {
        let base = a["setoid"].as_str()?.to_string();
        let s = &sets[&base];
        let denial = a.get("denial").and_then(Value::as_bool).unwrap_or(false);
        let pairs = a
            .get("pairs")
            .map(|p| p.as_array().cloned().unwrap_or_default())
            .unwrap_or_default();
        if denial && !pairs.is_empty() {
            return None;
        }
        let mut t: Vec<Vec<bool>> =
            s.eq.iter()
                .map(|row| row.iter().map(|&e| denial && !e).collect())
                .collect();
        for p in &pairs {
            let p = uints(p)?;
            if p.len() != 2 || p[0] >= s.n || p[1] >= s.n {
                return None;
            }
            t[p[0]][p[1]] = true;
        }
        aps.insert(name.clone(), (base, t));
    }
    let mut maps = BTreeMap::new();
    for (name, m) in section(raw, "maps") {
        let dom = m["dom"].as_str()?.to_string();
        let cod = m["cod"].as_str()?.to_string();
        let table = uints(&m["table"])?;
        let (d, c) = (&sets[&dom], &sets[&cod]);
        if table.len() != d.n || table.iter().any(|&v| v >= c.n) {
            return None;
        }
        for x in 0..d.n {
            for y in 0..d.n {
                if d.eq[x][y] && !c.eq[table[x]][table[y]] {
                    return None;
                }
            }
        }
        maps.insert(name.clone(), Map { dom, cod, table });
    }
    for (_, t) in section(raw, "topologies") {
        let n = sets[t["points"].as_str()?].n;
        for o in t["opens"].as_array()? {
            if uints(o)?.iter().any(|&p| p >= n) {
                return None;
            }
        }
    }
    for (_, c) in section(raw, "chu_spaces") {
        let (g, l, r) = (
            &sets[c["gamma"].as_str()?],
            &sets[c["left"].as_str()?],
            &sets[c["right"].as_str()?],
        );
        let rows = c["pairing"].as_array()?;
        if rows.len() != l.n {
            return None;
        }
        let mut m = Vec::new();
        for row in rows {
            let row = uints(row)?;
            if row.len() != r.n || row.iter().any(|&v| v >= g.n) {
                return None;
            }
            m.push(row);
        }
        for x in 0..l.n {
            for x2 in 0..l.n {
                for y in 0..r.n {
                    for y2 in 0..r.n {
                        if l.eq[x][x2] && r.eq[y][y2] && !g.eq[m[x][y]][m[x2][y2]] {
                            return None;
                        }
                    }
                }
            }
        }
    }
    for (_, i) in section(raw, "info_systems") {
        let n = i["tokens"].as_u64()? as usize;
        for c in i["con"].as_array()? {
            if uints(c)?.iter().any(|&t| t >= n) {
                return None;
            }
        }
        for e in i["entails"].as_array()? {
            let e = e.as_array()?;
            if e.len() != 2 || uints(&e[0])?.iter().any(|&t| t >= n) || e[1].as_u64()? as usize >= n {
                return None;
            }
        }
    }
    let closed = |s: &Set, m: &[usize]| {
        m.iter().all(|&x| x < s.n)
            && (0..s.n).all(|x| (0..s.n).all(|y| !s.eq[x][y] || m.contains(&x) == m.contains(&y)))
    };
    for (_, p) in section(raw, "predicates") {
        if !closed(&sets[p["ambient"].as_str()?], &uints(&p["members"])?) {
            return None;
        }
    }
    for (_, c) in section(raw, "complemented") {
        let base = &sets[&aps[c["apartness"].as_str()?].0];
        if !closed(base, &uints(&c["one"])?) || !closed(base, &uints(&c["zero"])?) {
            return None;
        }
    }
    Some(Doc { raw, sets, maps, aps })
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn apartness_ok(s: &Set, t: &[Vec<bool>]) -> bool {
    let n = s.n;
    let all = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| f(x, y)));
    all(&|x, y| !(s.eq[x][y] && t[x][y]))
        && all(&|x, y| !t[x][y] || t[y][x])
        && all(&|x, y| !t[x][y] || (0..n).all(|z| t[x][z] || t[z][y]))
        && all(&|x, y| !t[x][y] || (0..n).all(|x2| (0..n).all(|y2| !(s.eq[x][x2] && s.eq[y][y2]) || t[x2][y2])))
}

fn apartness(doc: &Doc, out: &mut BTreeMap<String, Verdict>) {
    for (name, (base, t)) in &doc.aps {
        out.insert(
            format!("doc/apartness/{name}"),
            verdict(apartness_ok(&doc.sets[base], t)),
        );
    }
}

fn topology_ok(s: &Set, opens: &[u64]) -> bool {
    let full = if s.n == 0 { 0 } else { (1u64 << s.n) - 1 };
    let distinct: BTreeSet<u64> = opens.iter().copied().collect();
    let eq_closed = |m: u64| (0..s.n).all(|x| (0..s.n).all(|y| !s.eq[x][y] || (m >> x & 1) == (m >> y & 1)));
    distinct.len() == opens.len()
        && opens.iter().all(|&m| eq_closed(m))
        && distinct.contains(&0)
        && distinct.contains(&full)
        && opens.iter().all(|a| {
            opens
                .iter()
                .all(|b| distinct.contains(&(a & b)) && distinct.contains(&(a | b)))
        })
}

fn topologies(doc: &Doc, out: &mut BTreeMap<String, Verdict>) {
    let tops: BTreeMap<&String, (&Set, Vec<u64>)> = section(doc.raw, "topologies")
        .into_iter()
        .map(|(name, t)| {
            let s = &doc.sets[t["points"].as_str().unwrap()];
            let opens = t["opens"]
                .as_array()
                .unwrap()
                .iter()
                .map(|o| mask(&uints(o).unwrap()))
                .collect();
            (name, (s, opens))
        })
        .collect();
    for (name, t) in section(doc.raw, "topologies") {
        let (s, opens) = &tops[name];
        let ok = topology_ok(s, opens);
        out.insert(format!("doc/topology/{name}"), verdict(ok));
        let claims = t
            .get("continuous")
            .and_then(Value::as_array)
            .cloned()
            .unwrap_or_default();
        for (k, c) in claims.iter().enumerate() {
            let id = format!("doc/topology/{name}/continuous/{k}");
            let (ts, topens) = &tops[&c["to"].as_str().unwrap().to_string()];
            if !ok || !topology_ok(ts, topens) {
                out.insert(id, Verdict::Skipped);
                continue;
            }
            let h = &doc.maps[c["map"].as_str().unwrap()].table;
            let continuous = topens.iter().all(|&v| {
                let pre = (0..s.n).filter(|&x| v >> h[x] & 1 == 1).fold(0u64, |m, x| m | 1 << x);
                opens.contains(&pre)
            });
            out.insert(id, verdict(continuous));
        }
    }
}

fn transforms(doc: &Doc, out: &mut BTreeMap<String, Verdict>) {
    let spaces: BTreeMap<&String, &Value> = section(doc.raw, "chu_spaces").into_iter().collect();
    let pairing = |v: &Value| -> Vec<Vec<usize>> {
        v["pairing"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| uints(r).unwrap())
            .collect()
    };
    for (name, c) in &spaces {
        let claims = c
            .get("transforms")
            .and_then(Value::as_array)
            .cloned()
            .unwrap_or_default();
        for (k, t) in claims.iter().enumerate() {
            let dst = spaces[&t["to"].as_str().unwrap().to_string()];
            let gamma = &doc.sets[c["gamma"].as_str().unwrap()];
            let (f, g) = (pairing(c), pairing(dst));
            let fwd = &doc.maps[t["fwd"].as_str().unwrap()].table;
            let bwd = &doc.maps[t["bwd"].as_str().unwrap()].table;
            let left = doc.sets[c["left"].as_str().unwrap()].n;
            let right = doc.sets[dst["right"].as_str().unwrap()].n;
            let ok = (0..left).all(|a| (0..right).all(|d| gamma.eq[f[a][bwd[d]]][g[fwd[a]][d]]));
            out.insert(format!("doc/chu/{name}/transform/{k}"), verdict(ok));
        }
    }
}

fn info_ok(n: usize, con: &[bool], ent: &[u64]) -> bool {
    let sets = 1usize << n;
    let entails = |a: usize, t: usize| ent[a] >> t & 1 == 1;
    if !con[0] || (0..n).any(|t| !con[1 << t]) {
        return false;
    }
    for a in 0..sets {
        if con[a] && (0..sets).any(|b| b & a == b && !con[b]) {
            return false;
        }
        if !con[a] && ent[a] != 0 {
            return false;
        }
    }
    for a in (0..sets).filter(|&a| con[a]) {
        for t in 0..n {
            if entails(a, t) && !con[a | 1 << t] {
                return false;
            }
            if a >> t & 1 == 1 && !entails(a, t) {
                return false;
            }
        }
        for b in (0..sets).filter(|&b| con[b]) {
            let covers = (0..n).all(|t| b >> t & 1 == 0 || entails(a, t));
            if covers && (0..n).any(|c| entails(b, c) && !entails(a, c)) {
                return false;
            }
        }
    }
    true
}

fn info_systems(doc: &Doc, out: &mut BTreeMap<String, Verdict>) {
    for (name, i) in section(doc.raw, "info_systems") {
        let n = i["tokens"].as_u64().unwrap() as usize;
        let mut con = vec![false; 1 << n];
        for c in i["con"].as_array().unwrap() {
            con[mask(&uints(c).unwrap()) as usize] = true;
        }
        let mut ent = vec![0u64; 1 << n];
        for e in i["entails"].as_array().unwrap() {
            let a = mask(&uints(&e[0]).unwrap()) as usize;
            ent[a] |= 1 << e[1].as_u64().unwrap();
        }
        out.insert(format!("doc/info/{name}"), verdict(info_ok(n, &con, &ent)));
    }
}

fn sorted(v: &Value) -> Vec<usize> {
    members_of(mask(&uints(v).unwrap()))
}

/// A map retypes onto a component when both ends are plain setoids of the
/// component's size.
fn fits(doc: &Doc, m: &Map, dom: usize, cod: usize) -> bool {
    let (d, c) = (&doc.sets[&m.dom], &doc.sets[&m.cod]);
    d.discrete() && c.discrete() && d.n == dom && c.n == cod
}

fn predicates(doc: &Doc, out: &mut BTreeMap<String, Verdict>) {
    let preds: BTreeMap<&String, &Value> = section(doc.raw, "predicates").into_iter().collect();
    for (name, p) in &preds {
        let a = sorted(&p["members"]);
        let claims = p.get("arrows").and_then(Value::as_array).cloned().unwrap_or_default();
        for (k, arrow) in claims.iter().enumerate() {
            let q = preds[&arrow["to"].as_str().unwrap().to_string()];
            let b = sorted(&q["members"]);
            let base = &doc.maps[arrow["base"].as_str().unwrap()];
            let fwd = &doc.maps[arrow["fwd"].as_str().unwrap()];
            let y = &doc.sets[q["ambient"].as_str().unwrap()];
            let ok = base.dom == p["ambient"].as_str().unwrap()
                && base.cod == q["ambient"].as_str().unwrap()
                && fits(doc, fwd, a.len(), b.len())
                && (0..a.len()).all(|i| y.eq[b[fwd.table[i]]][base.table[a[i]]]);
            out.insert(format!("doc/predicate/{name}/arrow/{k}"), verdict(ok));
        }
    }
}

fn complemented(doc: &Doc, out: &mut BTreeMap<String, Verdict>) {
    let parts: BTreeMap<&String, &Value> = section(doc.raw, "complemented").into_iter().collect();
    let valid = |c: &Value| {
        let (base, t) = &doc.aps[c["apartness"].as_str().unwrap()];
        let (one, zero) = (sorted(&c["one"]), sorted(&c["zero"]));
        apartness_ok(&doc.sets[base], t) && one.iter().all(|&x| zero.iter().all(|&y| t[x][y]))
    };
    for (name, c) in &parts {
        let (_, t) = &doc.aps[c["apartness"].as_str().unwrap()];
        let (one, zero) = (sorted(&c["one"]), sorted(&c["zero"]));
        let disjoint = one.iter().all(|&x| zero.iter().all(|&y| t[x][y]));
        out.insert(format!("doc/complemented/{name}"), verdict(disjoint));
        let claims = c.get("arrows").and_then(Value::as_array).cloned().unwrap_or_default();
        for (k, arrow) in claims.iter().enumerate() {
            let id = format!("doc/complemented/{name}/arrow/{k}");
            let d = parts[&arrow["to"].as_str().unwrap().to_string()];
            if !valid(c) || !valid(d) {
                out.insert(id, Verdict::Skipped);
                continue;
            }
            let (xb, xt) = &doc.aps[c["apartness"].as_str().unwrap()];
            let (yb, yt) = &doc.aps[d["apartness"].as_str().unwrap()];
            let (b1, b0) = (sorted(&d["one"]), sorted(&d["zero"]));
            let base = &doc.maps[arrow["base"].as_str().unwrap()];
            let fwd = &doc.maps[arrow["fwd"].as_str().unwrap()];
            let bwd = &doc.maps[arrow["bwd"].as_str().unwrap()];
            let (xn, y) = (doc.sets[xb].n, &doc.sets[yb]);
            let u = &base.table;
            let ok = &base.dom == xb
                && &base.cod == yb
                && fits(doc, fwd, one.len(), b1.len())
                && fits(doc, bwd, b0.len(), zero.len())
                && (0..xn).all(|p| (0..xn).all(|q| !yt[u[p]][u[q]] || xt[p][q]))
                && (0..one.len()).all(|i| y.eq[b1[fwd.table[i]]][u[one[i]]])
                && (0..b0.len()).all(|j| y.eq[u[zero[bwd.table[j]]]][b0[j]]);
            out.insert(id, verdict(ok));
        }
    }
}

fn endofunctors(doc: &Doc, out: &mut BTreeMap<String, Verdict>) {
    for (name, e) in section(doc.raw, "endofunctors") {
        let id = format!("doc/endofunctor/{name}");
        if e["kind"] != "custom" {
            out.insert(id, Verdict::Pass);
            continue;
        }
        let pairs = |key: &str| -> Vec<(String, String)> {
            e[key]
                .as_array()
                .unwrap()
                .iter()
                .map(|p| (p[0].as_str().unwrap().to_string(), p[1].as_str().unwrap().to_string()))
                .collect()
        };
        let (objects, arrows) = (pairs("objects"), pairs("arrows"));
        let same_set = |a: &str, b: &str| doc.sets[a].n == doc.sets[b].n && doc.sets[a].eq == doc.sets[b].eq;
        let ob = |s: &str| objects.iter().find(|(a, _)| same_set(a, s)).map(|(_, t)| t.clone());
        // a map is (dom, cod, table); the image of the first listed match
        let image = |d: &str, c: &str, t: &[usize]| {
            arrows.iter().find_map(|(f, g)| {
                let m = &doc.maps[f];
                (same_set(&m.dom, d) && same_set(&m.cod, c) && m.table == t).then(|| doc.maps[g].clone())
            })
        };
        let names: Vec<String> = objects.iter().map(|(s, _)| s.clone()).collect();
        let all_maps = |d: &str, c: &str| -> Vec<Vec<usize>> {
            let (dn, cn) = (doc.sets[d].n, doc.sets[c].n);
            let mut tables = vec![vec![]];
            for _ in 0..dn {
                tables = tables
                    .into_iter()
                    .flat_map(|t: Vec<usize>| (0..cn).map(move |v| [t.clone(), vec![v]].concat()))
                    .collect();
            }
            let (ds, cs) = (&doc.sets[d], &doc.sets[c]);
            tables
                .into_iter()
                .filter(|t| (0..dn).all(|x| (0..dn).all(|y| !ds.eq[x][y] || cs.eq[t[x]][t[y]])))
                .collect()
        };
        let mut ok = true;
        for a in &names {
            for b in &names {
                for f in all_maps(a, b) {
                    match image(a, b, &f) {
                        None => ok = false,
                        Some(g) => {
                            let typed = ob(a).is_some_and(|fa| same_set(&g.dom, &fa))
                                && ob(b).is_some_and(|fb| same_set(&g.cod, &fb));
                            ok &= typed;
                        }
                    }
                }
            }
            let id_a: Vec<usize> = (0..doc.sets[a].n).collect();
            let fa = ob(a).unwrap();
            let id_fa: Vec<usize> = (0..doc.sets[&fa].n).collect();
            ok &= image(a, a, &id_a).is_some_and(|g| g.table == id_fa);
        }
        for a in &names {
            for b in &names {
                for c in &names {
                    for f in all_maps(a, b) {
                        for g in all_maps(b, c) {
                            let gf: Vec<usize> = f.iter().map(|&x| g[x]).collect();
                            let lhs = image(a, c, &gf);
                            let rhs = image(a, b, &f).zip(image(b, c, &g));
                            ok &= match (lhs, rhs) {
                                (Some(l), Some((ff, gg))) => {
                                    let comp: Vec<usize> = ff.table.iter().map(|&x| gg.table[x]).collect();
                                    l.table == comp
                                }
                                _ => false,
                            };
                        }
                    }
                }
            }
        }
        out.insert(id, verdict(ok));
    }
}

/// Single-entry faults: every integer of every table moved by one, every
/// flag flipped, and every table entry deleted. Names and sizes stay fixed.
pub fn mutants(doc: &Value) -> Vec<(String, Value)> {
    let mut out = Vec::new();
    walk(doc, &mut Vec::new(), &mut |path, v| {
        let at = path.join(".");
        let last = path.last().map(String::as_str).unwrap_or("");
        if last == "size" || last == "tokens" {
            return;
        }
        match v {
            Value::Number(n) => {
                let n = n.as_u64().expect("document integers are unsigned");
                out.push((format!("{at} = {}", n + 1), set_at(doc, path, Value::from(n + 1))));
                if n > 0 {
                    out.push((format!("{at} = {}", n - 1), set_at(doc, path, Value::from(n - 1))));
                }
            }
            Value::Bool(b) => out.push((format!("{at} = {}", !b), set_at(doc, path, Value::from(!b)))),
            Value::Array(items) if is_table(v) => {
                for k in 0..items.len() {
                    let mut shorter = items.clone();
                    shorter.remove(k);
                    out.push((format!("{at} without [{k}]"), set_at(doc, path, Value::Array(shorter))));
                }
            }
            _ => {}
        }
    });
    out
}

/// Arrays of integers, or of arrays of integers, at any depth.
fn is_table(v: &Value) -> bool {
    match v {
        Value::Number(_) => true,
        Value::Array(items) => items.iter().all(is_table),
        _ => false,
    }
}

fn walk(v: &Value, path: &mut Vec<String>, f: &mut dyn FnMut(&[String], &Value)) {
    f(path, v);
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                path.push(k.clone());
                walk(x, path, f);
                path.pop();
            }
        }
        Value::Array(items) => {
            for (k, x) in items.iter().enumerate() {
                path.push(k.to_string());
                walk(x, path, f);
                path.pop();
            }
        }
        _ => {}
    }
}

fn set_at(doc: &Value, path: &[String], value: Value) -> Value {
    let mut out = doc.clone();
    let mut cur = &mut out;
    for p in path {
        cur = match cur {
            Value::Object(o) => o.get_mut(p).expect("path from walk"),
            Value::Array(a) => &mut a[p.parse::<usize>().expect("index")],
            _ => unreachable!("walk only descends into containers"),
        };
    }
    *cur = value;
    out
}

//! Checks of the claims a document makes about its own structures.

use finchu::category::{verify_functor_laws, FinSetoid};
use finchu::chu::adjointness_witness;
use finchu::finsetoid::{disjointness_witness, ComplementedSubset, Setoid, SetoidFn};
use finchu::genchu::{ComplPredArrow, Endofunctor, PredArrow};
use finchu::repr::{continuity_witness, topology_violation, FiniteTopology};
use serde_json::json;

use crate::document::Registry;
use crate::report::{violation, Check};

/// Which declared structures a suite looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Claims {
    Apartness,
    Topologies,
    Transforms,
    InfoSystems,
    Complemented,
    Predicates,
    ComplementedArrows,
    Endofunctors,
}

impl Claims {
    pub const ALL: [Claims; 8] = [
        Claims::Apartness,
        Claims::Topologies,
        Claims::Transforms,
        Claims::InfoSystems,
        Claims::Complemented,
        Claims::Predicates,
        Claims::ComplementedArrows,
        Claims::Endofunctors,
    ];
}

pub fn document_checks(reg: &Registry, kinds: &[Claims]) -> Vec<Check> {
    let mut out = Vec::new();
    for kind in kinds {
        match kind {
            Claims::Apartness => apartness(reg, &mut out),
            Claims::Topologies => topologies(reg, &mut out),
            Claims::Transforms => transforms(reg, &mut out),
            Claims::InfoSystems => info_systems(reg, &mut out),
            Claims::Complemented => complemented(reg, &mut out),
            Claims::Predicates => predicates(reg, &mut out),
            Claims::ComplementedArrows => complemented_arrows(reg, &mut out),
            Claims::Endofunctors => endofunctors(reg, &mut out),
        }
    }
    out
}

fn points(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn apartness(reg: &Registry, out: &mut Vec<Check>) {
    for (name, ap) in &reg.apartness {
        let id = format!("doc/apartness/{name}");
        out.push(match ap.check() {
            Ok(()) => Check::pass(id, "apartness axioms", ap.pairs().len()),
            Err(v) => Check::fail(
                id,
                "apartness axioms",
                json!({ "law": v.axiom(), "detail": v.to_string(), "apartness": name }),
            ),
        });
    }
}

fn topologies(reg: &Registry, out: &mut Vec<Check>) {
    for (name, t) in &reg.topologies {
        let id = format!("doc/topology/{name}");
        match topology_violation(&t.points, &t.opens) {
            Some(v) => {
                out.push(Check::fail(
                    id,
                    "topology axioms",
                    json!({ "law": "topology axioms", "detail": v.to_string(), "topology": name }),
                ));
                for k in 0..t.continuous.len() {
                    out.push(Check::skipped(
                        format!("doc/topology/{name}/continuous/{k}"),
                        "continuity",
                        format!("`{name}` is not a topology"),
                    ));
                }
                continue;
            }
            None => out.push(Check::pass(id, "topology axioms", t.opens.len())),
        }
        let src = FiniteTopology::new(t.points.clone(), t.opens.clone()).expect("axioms checked");
        for (k, c) in t.continuous.iter().enumerate() {
            let id = format!("doc/topology/{name}/continuous/{k}");
            let target = &reg.topologies[&c.to];
            if topology_violation(&target.points, &target.opens).is_some() {
                out.push(Check::skipped(
                    id,
                    "continuity",
                    format!("`{}` is not a topology", c.to),
                ));
                continue;
            }
            let dst = FiniteTopology::new(target.points.clone(), target.opens.clone()).expect("axioms checked");
            out.push(match continuity_witness(&reg.maps[&c.map], &src, &dst) {
                None => Check::pass(id, "continuity", dst.opens().len()),
                Some(open) => Check::fail(
                    id,
                    "continuity",
                    json!({
                        "law": "continuity",
                        "topology": name,
                        "claim": k,
                        "open": points(open),
                        "detail": format!("the preimage of {:?} is not open", points(open)),
                    }),
                ),
            });
        }
    }
}

fn transforms(reg: &Registry, out: &mut Vec<Check>) {
    for (name, decl) in &reg.chu_spaces {
        for (k, t) in decl.transforms.iter().enumerate() {
            let id = format!("doc/chu/{name}/transform/{k}");
            let dst = &reg.chu_spaces[&t.to].space;
            let (fwd, bwd) = (&reg.maps[&t.fwd], &reg.maps[&t.bwd]);
            let src = &decl.space;
            out.push(match adjointness_witness(fwd, bwd, src, dst).expect("typed at load") {
                None => Check::pass(id, "Chu transform adjointness", src.left().size() * dst.right().size()),
                Some((a, d)) => Check::fail(
                    id,
                    "Chu transform adjointness",
                    json!({
                        "law": "adjointness",
                        "space": name,
                        "claim": k,
                        "point": a,
                        "state": d,
                        "lhs": src.value(a, bwd.apply(d)),
                        "rhs": dst.value(fwd.apply(a), d),
                    }),
                ),
            });
        }
    }
}

fn info_systems(reg: &Registry, out: &mut Vec<Check>) {
    for (name, x) in &reg.info_systems {
        let id = format!("doc/info/{name}");
        out.push(match x.check() {
            Ok(()) => Check::pass(id, "information system axioms", x.consistent_sets().count()),
            Err(v) => Check::fail(
                id,
                "information system axioms",
                json!({ "law": "information system axioms", "detail": v.to_string(), "system": name }),
            ),
        });
    }
}

/// The declared complemented subset, or why it is not one.
pub fn complemented_subset(reg: &Registry, name: &str) -> Result<ComplementedSubset, String> {
    let decl = &reg.complemented[name];
    let ap = &reg.apartness[&decl.apartness];
    if let Err(v) = ap.check() {
        return Err(format!("`{}` is not an apartness: {v}", decl.apartness));
    }
    ComplementedSubset::new(decl.one.clone(), decl.zero.clone(), ap.clone()).map_err(|e| e.to_string())
}

fn complemented(reg: &Registry, out: &mut Vec<Check>) {
    for (name, decl) in &reg.complemented {
        let id = format!("doc/complemented/{name}");
        let ap = &reg.apartness[&decl.apartness];
        out.push(match disjointness_witness(&decl.one, &decl.zero, ap) {
            None => Check::pass(
                id,
                "complemented subsets are disjoint",
                decl.one.sub().size() * decl.zero.sub().size(),
            ),
            Some((i, j)) => {
                let (x, y) = (decl.one.inj().apply(i), decl.zero.inj().apply(j));
                Check::fail(
                    id,
                    "complemented subsets are disjoint",
                    json!({
                    "law": "disjointness",
                    "complemented": name,
                    "pair": [x, y],
                    "detail": format!("{x} is in the one part, {y} in the zero part, and they are not apart"),
                    }),
                )
            }
        });
    }
}

/// Documents declare component maps on plain setoids; canonical subsets
/// label their elements, so retype the table when the shapes agree.
fn onto(f: &SetoidFn, dom: &Setoid, cod: &Setoid) -> SetoidFn {
    if f.dom().unlabelled() == dom.unlabelled() && f.cod().unlabelled() == cod.unlabelled() {
        SetoidFn::new(dom.clone(), cod.clone(), f.table().to_vec()).unwrap_or_else(|_| f.clone())
    } else {
        f.clone()
    }
}

fn predicates(reg: &Registry, out: &mut Vec<Check>) {
    for (name, decl) in &reg.predicates {
        for (k, a) in decl.arrows.iter().enumerate() {
            let id = format!("doc/predicate/{name}/arrow/{k}");
            let dst = &reg.predicates[&a.to].subset;
            let fwd = onto(&reg.maps[&a.fwd], decl.subset.sub(), dst.sub());
            let r = PredArrow::new(&decl.subset, dst, reg.maps[&a.base].clone(), fwd);
            out.push(match r {
                Ok(_) => Check::pass(id, "predicate arrow square", decl.subset.sub().size()),
                Err(e) => Check::fail(
                    id,
                    "predicate arrow square",
                    json!({ "law": "predicate arrow", "predicate": name, "claim": k, "detail": e.to_string() }),
                ),
            });
        }
    }
}

fn complemented_arrows(reg: &Registry, out: &mut Vec<Check>) {
    for (name, decl) in &reg.complemented {
        for (k, a) in decl.arrows.iter().enumerate() {
            let id = format!("doc/complemented/{name}/arrow/{k}");
            let citation = "complemented predicate arrow";
            let ends = complemented_subset(reg, name).and_then(|s| Ok((s, complemented_subset(reg, &a.to)?)));
            let (src, dst) = match ends {
                Ok(p) => p,
                Err(reason) => {
                    out.push(Check::skipped(id, citation, reason));
                    continue;
                }
            };
            let bwd = a.bwd.as_ref().expect("checked at load");
            let r = ComplPredArrow::new(
                &src,
                &dst,
                reg.maps[&a.base].clone(),
                onto(&reg.maps[&a.fwd], src.one().sub(), dst.one().sub()),
                onto(&reg.maps[bwd], dst.zero().sub(), src.zero().sub()),
            );
            out.push(match r {
                Ok(_) => Check::pass(id, citation, src.ambient().size()),
                Err(e) => Check::fail(
                    id,
                    citation,
                    json!({ "law": "complemented predicate arrow", "complemented": name, "claim": k, "detail": e.to_string() }),
                ),
            });
        }
    }
}

fn endofunctors(reg: &Registry, out: &mut Vec<Check>) {
    for (name, f) in &reg.endofunctors {
        let id = format!("doc/endofunctor/{name}");
        let objects: Vec<Setoid> = match f {
            Endofunctor::Custom(c) => c.objects.iter().map(|(s, _)| s.clone()).collect(),
            _ => reg.setoids.values().cloned().collect(),
        };
        let mut objects = objects;
        objects.sort();
        objects.dedup();
        let r = f
            .on(&FinSetoid::with_objects(objects))
            .map_err(|e| finchu::category::Violation::new("coverage", e.to_string()))
            .and_then(|on| verify_functor_laws(&on));
        out.push(match r {
            Ok(n) => Check::pass(id, "endofunctor laws", n),
            Err(v) => {
                let mut w = violation(&v);
                w["endofunctor"] = json!(name);
                Check::fail(id, "endofunctor laws", w)
            }
        });
    }
}

//! Acceptance criteria, one line per criterion, each against its wall-clock
//! bound. Runs as a plain binary so the lines show in `cargo test` output.
//!
//! Three criteria cannot pass as stated: complemented subsets with an empty
//! part make every candidate Chu transform vacuous, so the complemented
//! representations are not full over all canonical complemented subsets.
//! Those criteria print FAIL, and the binary then checks that the failure is
//! exactly that one and nothing else.

mod oracle;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use finchu::category::{representation_report, verify_functor_laws, Category, FinSetoid, Violation};
use finchu::chu::{enumerate_hom, ChuCategory, LocalPushforward};
use finchu::finsetoid::{Apartness, ComplementedSubset, Setoid, SetoidFn, SubsetEmbedding};
use finchu::genchu::{compl_pred_space, enumerate_genchu_hom, ComplPredArrow, Endofunctor, PredArrow};
use finchu::repr::{complemented_space, preimage, topology_violation, ComplArrow, TopCategory};
use finchu_harness::claims::{complemented_subset, document_checks, Claims};
use finchu_harness::document::{load_str, Registry};
use finchu_harness::report::{Check, Report, Status};
use finchu_harness::suites::{run_suite, Ctx};
use oracle::Verdict;
use serde_json::Value;

type Outcome = Result<String, String>;

type Documented = fn(&str) -> Result<(), String>;

struct Criterion {
    number: u8,
    title: &'static str,
    bound: Duration,
    run: fn() -> Outcome,
    /// The one way this criterion is known to fail, checked when it does.
    documented: Option<Documented>,
}

fn suite(name: &str, cap: usize) -> Report {
    let registry = Registry::default();
    let ctx = Ctx {
        cap,
        seed: 0,
        registry: &registry,
    };
    run_suite(name, &ctx, true).expect("known suite")
}

fn check<'a>(r: &'a Report, id: &str) -> Result<&'a Check, String> {
    r.checks
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| format!("{id} missing from {}", r.suite))
}

/// Every listed check passed; returns the total instance count.
fn require(r: &Report, ids: &[&str]) -> Result<usize, String> {
    let mut total = 0;
    for id in ids {
        let c = check(r, id)?;
        if !c.passed() {
            return Err(format!(
                "{id}: {}",
                c.witness.as_ref().map(Value::to_string).unwrap_or_default()
            ));
        }
        total += c.instances.unwrap_or(0);
    }
    Ok(total)
}

fn chu_laws() -> Outcome {
    let r = suite("chu-laws", 2);
    let n = require(&r, &["chu-laws/category/γ2-c2"])?;
    Ok(format!("{n} composable triples over γ = 2, carriers ≤ 2"))
}

fn local_functor() -> Outcome {
    let r = suite("local-functor", 3);
    let n = require(
        &r,
        &[
            "local-functor/injection-full-embedding/γ3",
            "local-functor/non-injection-collapses-objects/γ3",
        ],
    )?;
    // an explicit collapse, independently of the suite
    let two = Setoid::discrete(2);
    let u = SetoidFn::constant(&two, &Setoid::unit(), 0).map_err(|e| e.to_string())?;
    let p = LocalPushforward::new(&u, ChuCategory::capped(&two, 1)).map_err(|e| e.to_string())?;
    let witness = match representation_report(&p).injective_on_objects {
        Err(v) => v.detail,
        Ok(()) => return Err("2 → 1 stays injective on objects".into()),
    };
    Ok(format!("{n} instances; 2 → 1 collapses: {}", truncate(&witness, 90)))
}

fn ccc() -> Outcome {
    let r = suite("chu-laws", 2);
    let n = require(
        &r,
        &[
            "chu-laws/ccc-representation/γ1-c2",
            "chu-laws/ccc-representation/γ2-c2",
            "chu-laws/curry/c2",
        ],
    )?;
    Ok(format!("{n} instances"))
}

fn global_functor() -> Outcome {
    let r = suite("global-functor", 2);
    let n = require(
        &r,
        &[
            "global-functor/pushforward-laws/c2",
            "global-functor/composition/c2",
            "global-functor/iso-fault-detected/c2",
        ],
    )?;
    let full = require(&r, &["global-functor/full-embedding/c2"])?;
    // eight monos 2 → 2 and 2 → 3, each with its own full-embedding check
    let monos = [2usize, 3]
        .iter()
        .map(|&k| {
            SetoidFn::all(&Setoid::discrete(2), &Setoid::discrete(k))
                .iter()
                .filter(|u| u.is_injection())
                .count()
        })
        .sum::<usize>();
    if monos < 3 {
        return Err(format!("only {monos} full-embedding instances"));
    }
    Ok(format!(
        "{n} instances over 36 pairs; full embedding on {monos} monos ({full} arrows)"
    ))
}

fn top_repr() -> Outcome {
    let r = suite("top-repr", 3);
    let n = require(
        &r,
        &[
            "top-repr/e-top/c3",
            "top-repr/separable-iff-t0/c3",
            "top-repr/delta-triangle/c3",
        ],
    )?;
    // labelled topologies on n discrete points: 1, 1, 4, 29
    let top = TopCategory::capped(3);
    let mut counts = [0usize; 4];
    for t in top.objects().iter().filter(|t| t.points().is_discrete()) {
        counts[t.points().size()] += 1;
    }
    if counts != [1, 1, 4, 29] {
        return Err(format!("topology census {counts:?}, expected [1, 1, 4, 29]"));
    }
    Ok(format!("{n} instances; census {counts:?} on discrete points"))
}

fn inf_repr() -> Outcome {
    let r = suite("inf-repr", 2);
    let n = require(
        &r,
        &[
            "inf-repr/realization-laws/t2",
            "inf-repr/scott-full-embedding/t2",
            "inf-repr/e-top-after-scott/t2",
            "inf-repr/realization-laws/spot-t3",
            "inf-repr/scott-full-embedding/spot-t3",
        ],
    )?;
    Ok(format!("{n} instances"))
}

fn subsets_and_complemented() -> Outcome {
    let s = suite("subsets-repr", 3);
    let c = suite("compl-repr", 3);
    let mut n = require(&s, &["subsets-repr/powerset/c3", "subsets-repr/sub/c2"])?;
    n += require(
        &c,
        &[
            "compl-repr/strict/inhabited-c3",
            "compl-repr/non-surjective/c3",
            "compl-repr/non-denial-instances/c3",
        ],
    )?;
    if check(&c, "compl-repr/non-denial-instances/c3")?.instances < Some(1) {
        return Err("no non-denial apartness was exercised".into());
    }
    require(&c, &["compl-repr/strict/all-c3"]).map_err(|e| format!("{n} instances pass, but {e}"))?;
    Ok(format!("{n} instances"))
}

/// The two complemented subsets `(∅, {0})` and `(∅, {1})` of 2 under denial:
/// no arrow between them, yet the vacuous transforms exist.
fn vacuous_complemented() -> Result<(), String> {
    let two = Setoid::discrete(2);
    let neq = Apartness::denial(&two);
    let part = |m| SubsetEmbedding::canonical(&two, m).unwrap();
    let a = ComplementedSubset::new(part(0), part(0b01), neq.clone()).unwrap();
    let b = ComplementedSubset::new(part(0), part(0b10), neq).unwrap();
    if ComplArrow::new(&a, &b).is_some() {
        return Err("expected no arrow (∅, {0}) → (∅, {1})".into());
    }
    let ts = enumerate_hom(&complemented_space(&a), &complemented_space(&b));
    if ts.is_empty() {
        return Err("expected a vacuous transform".into());
    }
    Ok(())
}

fn documented_complemented(detail: &str) -> Result<(), String> {
    let c = suite("compl-repr", 3);
    let failing: Vec<&str> = c.failures().map(|c| c.id.as_str()).collect();
    if failing != ["compl-repr/strict/all-c3"] {
        return Err(format!("unexpected failures {failing:?}"));
    }
    let w = check(&c, "compl-repr/strict/all-c3")?
        .witness
        .clone()
        .unwrap_or_default();
    if w["law"] != "full" {
        return Err(format!("expected a fullness failure, got {w}"));
    }
    if !detail.contains("compl-repr/strict/all-c3") {
        return Err(format!("criterion failed for another reason: {detail}"));
    }
    vacuous_complemented()
}

fn genchu() -> Outcome {
    let r = suite("genchu-laws", 2);
    let n = require(
        &r,
        &[
            "genchu-laws/closure/id-c2",
            "genchu-laws/closure/sq-c2",
            "genchu-laws/closure/const2-c2",
            "genchu-laws/category/id-c1",
            "genchu-laws/category/sq-c1",
            "genchu-laws/category/const2-c1",
            "genchu-laws/e-gamma/c2",
            "genchu-laws/injective-eta-full-embedding/c2",
        ],
    )?;
    let g = suite("global-functor", 2);
    let m = require(&g, &["global-functor/gen-composition/c2"])?;
    Ok(format!("{} instances", n + m))
}

fn pred() -> Outcome {
    let p = suite("pred-repr", 2);
    let q = suite("predneq-repr", 2);
    let mut n = require(
        &p,
        &[
            "pred-repr/pred/c2",
            "pred-repr/set-triangle/c2",
            "pred-repr/pred-c/c2",
            "pred-repr/pred-c-agrees/c2",
        ],
    )?;
    n += require(
        &q,
        &[
            "predneq-repr/derived-strong-extensionality/c2",
            "predneq-repr/strict/inhabited-c2",
            "predneq-repr/non-denial/c2",
        ],
    )?;
    require(&q, &["predneq-repr/strict/all-c2"]).map_err(|e| format!("{n} instances pass, but {e}"))?;
    Ok(format!("{n} instances"))
}

/// `(∅, {0})` over 1 and over 2: the anchor map 0 ↦ 1 carries a vacuous
/// transform but no complemented predicate arrow.
fn vacuous_predicate() -> Result<(), String> {
    let (one, two) = (Setoid::unit(), Setoid::discrete(2));
    let a = ComplementedSubset::new(
        SubsetEmbedding::canonical(&one, 0).unwrap(),
        SubsetEmbedding::canonical(&one, 1).unwrap(),
        Apartness::denial(&one),
    )
    .unwrap();
    let b = ComplementedSubset::new(
        SubsetEmbedding::canonical(&two, 0).unwrap(),
        SubsetEmbedding::canonical(&two, 1).unwrap(),
        Apartness::denial(&two),
    )
    .unwrap();
    let u = SetoidFn::new(one.clone(), two.clone(), vec![1]).unwrap();
    let ts = enumerate_genchu_hom(&Endofunctor::Square, &compl_pred_space(&a), &compl_pred_space(&b));
    let Some(t) = ts.iter().find(|t| t.anchor_map() == &u) else {
        return Err("expected a transform over 0 ↦ 1".into());
    };
    if ComplPredArrow::new(&a, &b, u, t.fwd().clone(), t.bwd().clone()).is_ok() {
        return Err("0 ↦ 1 should not be a complemented predicate arrow".into());
    }
    Ok(())
}

fn documented_predicate(detail: &str) -> Result<(), String> {
    let q = suite("predneq-repr", 2);
    let failing: Vec<&str> = q.failures().map(|c| c.id.as_str()).collect();
    if failing != ["predneq-repr/strict/all-c2"] || !detail.contains("predneq-repr/strict/all-c2") {
        return Err(format!("unexpected failures {failing:?}: {detail}"));
    }
    if check(&q, "predneq-repr/strict/all-c2")?
        .witness
        .as_ref()
        .map(|w| w["law"] == "full")
        != Some(true)
    {
        return Err("expected a fullness failure".into());
    }
    vacuous_predicate()
}

fn groth() -> Outcome {
    let g = suite("groth-identification", 2);
    let f = suite("fibred", 2);
    let n = require(
        &g,
        &[
            "groth-identification/chu-iso/c2",
            "groth-identification/antiparallel-closure/c2",
            "groth-identification/contravariant/c2",
            "groth-identification/hom-embedding/γ3-c2",
            "groth-identification/presheaf-fault-detected/c2",
        ],
    )?;
    let m = require(&f, &["fibred/reconstruction/c2"])?;
    Ok(format!("{} instances", n + m))
}

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/golden.json")
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_finchu"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 report"),
    )
}

fn statuses(reg: &Registry) -> BTreeMap<String, Verdict> {
    document_checks(reg, &Claims::ALL)
        .into_iter()
        .map(|c| {
            let v = match c.status {
                Status::Pass => Verdict::Pass,
                Status::Fail => Verdict::Fail,
                Status::Skipped => Verdict::Skipped,
            };
            (c.id, v)
        })
        .collect()
}

/// A declared map read as a map between subset components of the same sizes.
fn retype(f: &SetoidFn, dom: &Setoid, cod: &Setoid) -> Result<SetoidFn, String> {
    if f.dom().size() != dom.size() || f.cod().size() != cod.size() {
        return Err("mistyped".into());
    }
    SetoidFn::new(dom.clone(), cod.clone(), f.table().to_vec()).map_err(|e| e.to_string())
}

/// Replays a failing document check through the core library.
fn replay(reg: &Registry, c: &Check) -> Result<(), String> {
    let w = c.witness.as_ref().ok_or("no witness")?;
    let parts: Vec<&str> = c.id.split('/').collect();
    let fails = |ok: bool| {
        if ok {
            Err(format!("{} did not reproduce: {w}", c.id))
        } else {
            Ok(())
        }
    };
    let idx = |v: &Value| v.as_u64().map(|n| n as usize).ok_or(format!("bad witness {w}"));
    match parts[1..] {
        ["apartness", n] => {
            let law = reg.apartness[n].check().err().map(|v| v.axiom());
            fails(law != w["law"].as_str())
        }
        ["topology", n] => fails(topology_violation(&reg.topologies[n].points, &reg.topologies[n].opens).is_none()),
        ["topology", n, "continuous", k] => {
            let t = &reg.topologies[n];
            let claim = &t.continuous[k.parse::<usize>().unwrap()];
            let open = w["open"]
                .as_array()
                .ok_or("no open")?
                .iter()
                .try_fold(0u64, |m, p| idx(p).map(|p| m | 1 << p))?;
            fails(
                !reg.topologies[&claim.to].opens.contains(&open)
                    || t.opens.contains(&preimage(&reg.maps[&claim.map], open)),
            )
        }
        ["chu", n, "transform", k] => {
            let claim = &reg.chu_spaces[n].transforms[k.parse::<usize>().unwrap()];
            let (src, dst) = (&reg.chu_spaces[n].space, &reg.chu_spaces[&claim.to].space);
            let (a, d) = (idx(&w["point"])?, idx(&w["state"])?);
            let lhs = src.value(a, reg.maps[&claim.bwd].apply(d));
            let rhs = dst.value(reg.maps[&claim.fwd].apply(a), d);
            fails(lhs == rhs || Some(lhs as u64) != w["lhs"].as_u64() || Some(rhs as u64) != w["rhs"].as_u64())
        }
        ["info", n] => fails(reg.info_systems[n].check().is_ok()),
        ["complemented", n] => {
            let d = &reg.complemented[n];
            let (x, y) = (idx(&w["pair"][0])?, idx(&w["pair"][1])?);
            fails(!d.one.contains(x) || !d.zero.contains(y) || reg.apartness[&d.apartness].neq(x, y))
        }
        ["predicate", n, "arrow", k] => {
            let d = &reg.predicates[n];
            let a = &d.arrows[k.parse::<usize>().unwrap()];
            let dst = &reg.predicates[&a.to].subset;
            let fwd = retype(&reg.maps[&a.fwd], d.subset.sub(), dst.sub());
            fails(fwd.is_ok_and(|f| PredArrow::new(&d.subset, dst, reg.maps[&a.base].clone(), f).is_ok()))
        }
        ["complemented", n, "arrow", k] => {
            let a = &reg.complemented[n].arrows[k.parse::<usize>().unwrap()];
            let (src, dst) = (complemented_subset(reg, n)?, complemented_subset(reg, &a.to)?);
            let fwd = retype(&reg.maps[&a.fwd], src.one().sub(), dst.one().sub());
            let bwd = retype(&reg.maps[a.bwd.as_ref().unwrap()], dst.zero().sub(), src.zero().sub());
            let ok = fwd
                .and_then(|f| Ok((f, bwd?)))
                .is_ok_and(|(f, b)| ComplPredArrow::new(&src, &dst, reg.maps[&a.base].clone(), f, b).is_ok());
            fails(ok)
        }
        ["endofunctor", n] => {
            let f = &reg.endofunctors[n];
            let Endofunctor::Custom(c) = f else {
                return Err(format!("built-in {n} failed"));
            };
            let objects = c.objects.iter().map(|(s, _)| s.clone()).collect();
            let laws = f
                .on(&FinSetoid::with_objects(objects))
                .map_err(|e| Violation::new("coverage", e.to_string()));
            fails(laws.and_then(|on| verify_functor_laws(&on)).is_ok())
        }
        _ => Err(format!("no replay for {}", c.id)),
    }
}

struct Sweep {
    mutants: usize,
    rejected: usize,
    flipped: usize,
    benign: usize,
}

/// Every single-entry fault of the golden document, against the oracle.
fn fault_sweep() -> Result<Sweep, String> {
    let text = std::fs::read_to_string(golden_path()).map_err(|e| e.to_string())?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let base = oracle::expected(&doc).ok_or("oracle rejects the golden document")?;
    if base.values().any(|v| *v != Verdict::Pass) {
        return Err(format!("golden document is not clean: {base:?}"));
    }
    let mut sweep = Sweep {
        mutants: 0,
        rejected: 0,
        flipped: 0,
        benign: 0,
    };
    let mut flipped_kinds = std::collections::BTreeSet::new();
    for (label, mutant) in oracle::mutants(&doc) {
        sweep.mutants += 1;
        let expected = oracle::expected(&mutant);
        let loaded = load_str(&mutant.to_string());
        let reg = match (expected, loaded) {
            (None, Err(_)) => {
                sweep.rejected += 1;
                continue;
            }
            (None, Ok(_)) => return Err(format!("{label}: loads, but the oracle rejects it")),
            (Some(_), Err(e)) => return Err(format!("{label}: rejected ({e}), but the oracle accepts it")),
            (Some(exp), Ok(reg)) => {
                let got = statuses(&reg);
                if got != exp {
                    let diff: Vec<_> = exp.iter().filter(|(id, v)| got.get(*id) != Some(v)).collect();
                    return Err(format!("{label}: harness disagrees with the oracle on {diff:?}"));
                }
                reg
            }
        };
        let failing: Vec<Check> = document_checks(&reg, &Claims::ALL)
            .into_iter()
            .filter(|c| c.status == Status::Fail)
            .collect();
        if failing.is_empty() {
            sweep.benign += 1;
        } else {
            sweep.flipped += 1;
        }
        for c in &failing {
            replay(&reg, c).map_err(|e| format!("{label}: {e}"))?;
            flipped_kinds.insert(c.id.split('/').nth(1).unwrap().to_string());
        }
    }
    let kinds = [
        "apartness",
        "chu",
        "complemented",
        "endofunctor",
        "info",
        "predicate",
        "topology",
    ];
    for k in kinds {
        if !flipped_kinds.contains(k) {
            return Err(format!("no fault ever flipped a {k} check"));
        }
    }
    Ok(sweep)
}

fn end_to_end() -> Outcome {
    let sweep = fault_sweep()?;
    let golden = golden_path();
    let golden = golden.to_str().unwrap();
    let args = [
        "verify",
        "--suite",
        "all",
        "--max-size",
        "2",
        "--input",
        golden,
        "--report",
        "json",
        "--no-timing",
    ];
    let start = Instant::now();
    let (code, first) = cli(&args);
    let once = start.elapsed();
    if once > Duration::from_secs(300) {
        return Err(format!("verify --suite all took {once:?}"));
    }
    let (code2, second) = cli(&args);
    if first != second || code != code2 {
        return Err("two runs produced different reports".into());
    }
    let report: Report = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    let summary = format!(
        "{} mutants: {} rejected at load, {} flipped a check, {} benign; run {:.1} s, byte-identical",
        sweep.mutants,
        sweep.rejected,
        sweep.flipped,
        sweep.benign,
        once.as_secs_f64()
    );
    if code != 0 {
        let failing: Vec<&str> = report.failures().map(|c| c.id.as_str()).collect();
        return Err(format!("exit {code}; failing {failing:?}; {summary}"));
    }
    Ok(summary)
}

fn documented_end_to_end(detail: &str) -> Result<(), String> {
    let expected = r#"exit 1; failing ["compl-repr/strict/all-c2", "predneq-repr/strict/all-c2"]"#;
    if detail.starts_with(expected) {
        Ok(())
    } else {
        Err(format!("expected `{expected}`, got `{detail}`"))
    }
}

fn truncate(s: &str, n: usize) -> String {
    match s.char_indices().nth(n) {
        Some((i, _)) => format!("{}…", &s[..i]),
        None => s.to_string(),
    }
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            number: 1,
            title: "Chu category laws",
            bound: Duration::from_secs(10),
            run: chu_laws,
            documented: None,
        },
        Criterion {
            number: 2,
            title: "local Chu functor",
            bound: Duration::from_secs(30),
            run: local_functor,
            documented: None,
        },
        Criterion {
            number: 3,
            title: "evaluation representation",
            bound: Duration::from_secs(30),
            run: ccc,
            documented: None,
        },
        Criterion {
            number: 4,
            title: "global Chu functor",
            bound: Duration::from_secs(60),
            run: global_functor,
            documented: None,
        },
        Criterion {
            number: 5,
            title: "topological spaces",
            bound: Duration::from_secs(60),
            run: top_repr,
            documented: None,
        },
        Criterion {
            number: 6,
            title: "information systems",
            bound: Duration::from_secs(120),
            run: inf_repr,
            documented: None,
        },
        Criterion {
            number: 7,
            title: "subsets and complemented subsets",
            bound: Duration::from_secs(60),
            run: subsets_and_complemented,
            documented: Some(documented_complemented),
        },
        Criterion {
            number: 8,
            title: "generalized Chu",
            bound: Duration::from_secs(120),
            run: genchu,
            documented: None,
        },
        Criterion {
            number: 9,
            title: "predicates and complemented predicates",
            bound: Duration::from_secs(60),
            run: pred,
            documented: Some(documented_predicate),
        },
        Criterion {
            number: 10,
            title: "Grothendieck identifications",
            bound: Duration::from_secs(120),
            run: groth,
            documented: None,
        },
        Criterion {
            number: 11,
            title: "end to end",
            bound: Duration::from_secs(300),
            run: end_to_end,
            documented: Some(documented_end_to_end),
        },
    ];
    let filter: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut unexpected = 0;
    for c in criteria
        .iter()
        .filter(|c| filter.is_empty() || filter.contains(&c.number))
    {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let timing = format!("{:>6.1} s / {:>3} s", elapsed.as_secs_f64(), c.bound.as_secs());
        let (tag, detail) = match outcome {
            Ok(d) if elapsed <= c.bound => ("PASS", d),
            Ok(d) => ("FAIL", format!("over the time bound; {d}")),
            Err(d) => ("FAIL", d),
        };
        let note = if tag == "PASS" {
            ""
        } else {
            match c.documented.map(|f| f(&detail)) {
                Some(Ok(())) => "  (documented deviation)",
                Some(Err(e)) => {
                    unexpected += 1;
                    eprintln!("criterion {}: undocumented failure: {e}", c.number);
                    ""
                }
                None => {
                    unexpected += 1;
                    ""
                }
            }
        };
        println!(
            "{tag}  criterion {:>2}  {:<40} {timing}  {}{note}",
            c.number,
            c.title,
            truncate(&detail, 160)
        );
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

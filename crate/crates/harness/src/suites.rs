//! Named verification suites. Every suite takes a size cap and a seed and
//! returns checks with stable ids of the form `suite/claim/scope`.
//!
//! Each suite bounds its own fragment: the cap is lowered where the
//! exhaustive enumeration would not finish in reasonable time, and the bound
//! actually used is part of the check id.

use std::time::Instant;

use finchu::category::{
    representation_report, verify_category_laws, verify_functor_equality, verify_functor_laws, Category, Composite,
    FinSetoid, Functor, RepresentationReport, Violation,
};
use finchu::chu::{classify, AffCategory, AffRepresentation, CccRepresentation, ChuCategory, LocalPushforward};
use finchu::finsetoid::{Apartness, ExponentialWitness, Setoid, SetoidFn};
use finchu::genchu::{
    verify_pentagon_closure, ComplPredCategory, ComplPredRepresentation, EmbedConstant, Endofunctor, FullPredicates,
    GenChuCategory, GenLocalPushforward, NatTrans, PredC, PredCRepresentation, PredCategory, PredRepresentation,
    SetRepresentation,
};
use finchu::groth::{
    chu_groth_identification, fibred_chu, gen_groth_compose, perturbed_iso, sigma_hom_embedding,
    verify_antipar_closure, verify_contravariant_laws, verify_gen_global_composition, verify_global_composition,
    AntiparCategory, GenGrothMorphism, GrothMorphism, HomPairing, PPFunctor, Pushforward,
};
use finchu::info::{
    approx_compose, inf_chu_representation, ApproximableMapping, InfCategory, InfoSystem, ScottFunctor,
};
use finchu::repr::{
    find_preimage, image_nonsurjectivity_witness, membership_space, ComplRepresentation, ComplementedCategory, Delta,
    ESet, ETop, SubCategory, SubRepresentation, SubsetsRepresentation, TopCategory,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::claims::{document_checks, Claims};
use crate::document::Registry;
use crate::report::{violation, Check, Report};

pub const SUITES: [&str; 14] = [
    "chu-laws",
    "local-functor",
    "global-functor",
    "top-repr",
    "inf-repr",
    "subsets-repr",
    "compl-repr",
    "aff-repr",
    "genchu-laws",
    "pred-repr",
    "predneq-repr",
    "groth-identification",
    "fibred",
    "all",
];

#[derive(Debug, thiserror::Error)]
#[error("unknown suite `{0}`; expected one of {list}", list = SUITES.join(", "))]
pub struct UnknownSuite(pub String);

/// What every suite sees.
pub struct Ctx<'a> {
    pub cap: usize,
    pub seed: u64,
    pub registry: &'a Registry,
}

impl Ctx<'_> {
    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

type SuiteFn = fn(&Ctx) -> Vec<Check>;

fn suite_fn(name: &str) -> Option<(SuiteFn, &'static [Claims])> {
    Some(match name {
        "chu-laws" => (chu_laws, &[Claims::Transforms]),
        "local-functor" => (local_functor, &[]),
        "global-functor" => (global_functor, &[]),
        "top-repr" => (top_repr, &[Claims::Topologies]),
        "inf-repr" => (inf_repr, &[Claims::InfoSystems]),
        "subsets-repr" => (subsets_repr, &[]),
        "compl-repr" => (compl_repr, &[Claims::Apartness, Claims::Complemented]),
        "aff-repr" => (aff_repr, &[]),
        "genchu-laws" => (genchu_laws, &[Claims::Endofunctors]),
        "pred-repr" => (pred_repr, &[Claims::Predicates]),
        "predneq-repr" => (predneq_repr, &[Claims::Apartness, Claims::ComplementedArrows]),
        "groth-identification" => (groth_identification, &[]),
        "fibred" => (fibred, &[]),
        _ => return None,
    })
}

/// Runs one suite, or every suite for `all`. With `timed = false` the
/// report's elapsed time is zero, so reports are byte-identical across runs.
pub fn run_suite(name: &str, ctx: &Ctx, timed: bool) -> Result<Report, UnknownSuite> {
    let start = Instant::now();
    let names: Vec<&str> = if name == "all" {
        SUITES[..SUITES.len() - 1].to_vec()
    } else if suite_fn(name).is_some() {
        vec![name]
    } else {
        return Err(UnknownSuite(name.to_string()));
    };
    let mut checks = Vec::new();
    for n in names {
        let (f, claims) = suite_fn(n).expect("listed suite");
        checks.extend(f(ctx));
        checks.extend(document_checks(ctx.registry, claims));
    }
    let elapsed = if timed { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(Report::new(name, ctx.cap, ctx.seed, checks, elapsed))
}

/// Which representation property a check asserts.
#[derive(Clone, Copy)]
enum Want {
    Embedding,
    FullEmbedding,
    Strict,
}

fn wanted(r: &RepresentationReport, want: Want) -> Vec<(&'static str, &Result<(), Violation>)> {
    let keep: &[&str] = match want {
        Want::Embedding => &[
            "functor-laws",
            "injective-on-objects",
            "faithful",
            "injective-on-arrows",
        ],
        Want::FullEmbedding => &["functor-laws", "injective-on-objects", "faithful", "full"],
        Want::Strict => &[
            "functor-laws",
            "injective-on-objects",
            "faithful",
            "full",
            "injective-on-arrows",
        ],
    };
    r.checks().into_iter().filter(|(n, _)| keep.contains(n)).collect()
}

fn representation(id: String, citation: &str, r: &RepresentationReport, want: Want) -> Check {
    match wanted(r, want)
        .into_iter()
        .find_map(|(n, res)| res.as_ref().err().map(|v| (n, v)))
    {
        None => Check::pass(id, citation, r.arrows),
        Some((property, v)) => {
            let mut w = violation(v);
            w["property"] = json!(property);
            Check::fail(id, citation, w)
        }
    }
}

/// Folds per-instance results into one check, failing on the first bad
/// instance with its label attached.
fn all_instances(
    id: String,
    citation: &str,
    instances: impl IntoIterator<Item = (String, Result<usize, Violation>)>,
) -> Check {
    let mut total = 0;
    for (label, r) in instances {
        match r {
            Ok(n) => total += n,
            Err(v) => {
                let mut w = violation(&v);
                w["instance"] = json!(label);
                return Check::fail(id, citation, w);
            }
        }
    }
    Check::pass(id, citation, total)
}

fn require(cond: bool, law: &'static str, detail: impl FnOnce() -> String) -> Result<(), Violation> {
    if cond {
        Ok(())
    } else {
        Err(Violation::new(law, detail()))
    }
}

fn report_as(r: &RepresentationReport, want: Want) -> Result<usize, Violation> {
    match wanted(r, want).into_iter().find_map(|(_, res)| res.clone().err()) {
        None => Ok(r.arrows),
        Some(v) => Err(v),
    }
}

fn chu_laws(ctx: &Ctx) -> Vec<Check> {
    let c = ctx.cap.min(2);
    let c3 = ctx.cap.min(1);
    let summary = |gamma: usize, cap: usize| {
        verify_category_laws(&ChuCategory::capped(&Setoid::discrete(gamma), cap)).map(|s| s.composable_triples)
    };
    let m = ctx.cap.min(2);
    let curry = (|| {
        let mut n = 0;
        for a in Setoid::all_up_to(m) {
            for b in Setoid::all_up_to(m) {
                for g in 1..=m.max(1) {
                    let gamma = Setoid::discrete(g);
                    let w = ExponentialWitness::new(&a, &gamma);
                    let maps = SetoidFn::all(&finchu::finsetoid::product_setoid(&a, &b), &gamma);
                    let expo = SetoidFn::count(&b, &w.expo);
                    require(maps.len() == expo, "curry bijection", || {
                        format!(
                            "|Hom(a × b, γ)| = {} but |Hom(b, γ^a)| = {expo} for a = {a:?}, b = {b:?}",
                            maps.len()
                        )
                    })?;
                    let mut seen = std::collections::HashSet::new();
                    for f in &maps {
                        let cf = w
                            .curry(f, &b)
                            .map_err(|e| Violation::new("curry bijection", e.to_string()))?;
                        let back = w
                            .uncurry(&cf)
                            .map_err(|e| Violation::new("curry bijection", e.to_string()))?;
                        require(&back == f, "curry bijection", || {
                            format!("uncurry(curry({f:?})) = {back:?}")
                        })?;
                        require(seen.insert(cf.clone()), "curry bijection", || {
                            format!("curry is not injective at {f:?}")
                        })?;
                        n += 1;
                    }
                }
            }
        }
        Ok(n)
    })();
    vec![
        Check::from_result(
            format!("chu-laws/category/γ2-c{c}"),
            "Chu spaces and transforms form a category",
            summary(2, c),
        ),
        Check::from_result(
            format!("chu-laws/category/γ3-c{c3}"),
            "Chu spaces and transforms form a category",
            summary(3, c3),
        ),
        Check::from_result(
            format!("chu-laws/curry/c{m}"),
            "currying is a bijection onto exponential maps",
            curry,
        ),
        representation(
            format!("chu-laws/ccc-representation/γ1-c{m}"),
            "evaluation representation of finite setoids",
            &representation_report(&CccRepresentation::new(&Setoid::unit(), FinSetoid::capped(m))),
            Want::Strict,
        ),
        representation(
            format!("chu-laws/ccc-representation/γ2-c{m}"),
            "evaluation representation of finite setoids",
            &representation_report(&CccRepresentation::new(&Setoid::discrete(2), FinSetoid::capped(m))),
            Want::Strict,
        ),
    ]
}

fn local_functor(ctx: &Ctx) -> Vec<Check> {
    let m = ctx.cap.min(3);
    let setoids = Setoid::all_up_to(m);
    let mut injective = Vec::new();
    let mut collapsing = Vec::new();
    for x in setoids.iter().filter(|x| !x.is_empty()) {
        for y in &setoids {
            for u in SetoidFn::all(x, y) {
                if u.is_injection() {
                    injective.push(u);
                } else {
                    collapsing.push(u);
                }
            }
        }
    }
    // the source fragment shrinks as γ grows so the target stays enumerable
    let carriers = |u: &SetoidFn| if u.dom().size() <= 2 { 2 } else { 1 };
    let full = injective.iter().map(|u| {
        let src = ChuCategory::capped(u.dom(), carriers(u).min(ctx.cap));
        let r = LocalPushforward::new(u, src)
            .map_err(|e| Violation::new("construction", e.to_string()))
            .and_then(|p| report_as(&representation_report(&p), Want::FullEmbedding));
        (format!("{u:?}"), r)
    });
    let full = all_instances(
        format!("local-functor/injection-full-embedding/γ{m}"),
        "a monomorphism gives a full embedding of Chu categories",
        full,
    );
    let collapse = collapsing.iter().map(|u| {
        let src = ChuCategory::capped(u.dom(), 1);
        let r = LocalPushforward::new(u, src)
            .map_err(|e| Violation::new("construction", e.to_string()))
            .and_then(|p| match representation_report(&p).injective_on_objects {
                Err(_) => Ok(1),
                Ok(()) => Err(Violation::new("collapse", format!("{u:?} stays injective on objects"))),
            });
        (format!("{u:?}"), r)
    });
    let collapse = all_instances(
        format!("local-functor/non-injection-collapses-objects/γ{m}"),
        "a non-injective map identifies spaces",
        collapse,
    );
    vec![full, collapse]
}

fn two() -> Setoid {
    Setoid::discrete(2)
}

/// `(F, φ)` with `φ : F(𝟚) → 𝟚`, two of each kind.
fn groth_morphisms() -> Vec<(String, GrothMorphism)> {
    let t = two();
    let swap = SetoidFn::new(t.clone(), t.clone(), vec![1, 0]).expect("map");
    let sq = PPFunctor::square();
    let proj = |right| NatTrans::Projection { right }.component(&t);
    let term = PPFunctor::to_terminal();
    let constant = |v| SetoidFn::constant(&Setoid::unit(), &t, v).expect("map");
    [
        ("id,1", PPFunctor::identity(), SetoidFn::identity(&t)),
        ("id,swap", PPFunctor::identity(), swap),
        ("sq,π1", sq.clone(), proj(false)),
        ("sq,π2", sq, proj(true)),
        ("term,0", term.clone(), constant(0)),
        ("term,1", term, constant(1)),
    ]
    .into_iter()
    .map(|(n, f, phi)| (n.to_string(), GrothMorphism::new(f, &t, phi).expect("typed")))
    .collect()
}

fn global_functor(ctx: &Ctx) -> Vec<Check> {
    let c = ctx.cap.min(2);
    let src = ChuCategory::capped(&two(), c);
    let ms = groth_morphisms();
    let laws = ms.iter().map(|(n, m)| {
        let r = Pushforward::new(m.clone(), src.clone())
            .map_err(|e| Violation::new("construction", e.to_string()))
            .and_then(|p| verify_functor_laws(&p));
        (n.clone(), r)
    });
    let laws = all_instances(
        format!("global-functor/pushforward-laws/c{c}"),
        "pushforward along (F, φ) is a functor",
        laws,
    );
    let src_ref = &src;
    let pairs = ms.iter().flat_map(|(nf, f)| {
        ms.iter()
            .map(move |(ng, g)| (format!("({ng}) ∘ ({nf})"), verify_global_composition(g, f, src_ref)))
    });
    let composition = all_instances(
        format!("global-functor/composition/c{c}"),
        "pushforward of a composite is the composite of pushforwards",
        pairs.collect::<Vec<_>>(),
    );
    let three = Setoid::discrete(3);
    let monos: Vec<SetoidFn> = [two(), three.clone()]
        .iter()
        .flat_map(|y| SetoidFn::all(&two(), y))
        .filter(SetoidFn::is_injection)
        .collect();
    let full = monos.iter().map(|u| {
        let m = GrothMorphism::new(PPFunctor::identity(), &two(), u.clone()).expect("typed");
        let r = Pushforward::new(m, src.clone())
            .map_err(|e| Violation::new("construction", e.to_string()))
            .and_then(|p| {
                let local =
                    LocalPushforward::new(u, src.clone()).map_err(|e| Violation::new("construction", e.to_string()))?;
                verify_functor_equality(&p, &local)?;
                report_as(&representation_report(&p), Want::FullEmbedding)
            });
        (format!("{u:?}"), r)
    });
    let full = all_instances(
        format!("global-functor/full-embedding/c{c}"),
        "full embedding and mono give a full embedding, agreeing with the local functor",
        full.collect::<Vec<_>>(),
    );
    vec![laws, composition, full, iso_fault(ctx, c), gen_composition(c)]
}

/// Perturbs one seeded canonical isomorphism of `Sq` and expects the
/// composition check to notice.
fn iso_fault(ctx: &Ctx, c: usize) -> Check {
    let id = format!("global-functor/iso-fault-detected/c{c}");
    let citation = "a wrong canonical product isomorphism breaks composition";
    let carriers: Vec<Setoid> = Setoid::all_up_to(c).into_iter().filter(|s| !s.is_empty()).collect();
    let pairs: Vec<(Setoid, Setoid)> = carriers
        .iter()
        .flat_map(|a| carriers.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let sq = PPFunctor::square();
    let candidates: Vec<&(Setoid, Setoid)> = pairs
        .iter()
        .filter(|(a, b)| perturbed_iso(&sq, a, b).is_some())
        .collect();
    let Some((a, b)) = candidates.choose(&mut ctx.rng(1)).copied() else {
        return Check::skipped(id, citation, "no pair of carriers admits a perturbation");
    };
    let bad = perturbed_iso(&sq, a, b).expect("filtered");
    // φ = 1 keeps every coordinate of F(γ) visible in the pushforward
    let g = GrothMorphism::new(
        sq.clone().with_override(a, b, bad),
        &two(),
        SetoidFn::identity(&sq.ob(&two())),
    )
    .expect("typed");
    let f = GrothMorphism::identity(&two());
    match verify_global_composition(&g, &f, &ChuCategory::capped(&two(), c)) {
        Err(v) => Check::pass(id, citation, v.detail.len().min(1)),
        Ok(_) => Check::fail(
            id,
            citation,
            json!({ "law": "fault not detected", "detail": format!("perturbed iso at ({a:?}, {b:?}) went unnoticed") }),
        ),
    }
}

fn gen_composition(c: usize) -> Check {
    let id = format!("global-functor/gen-composition/c{c}");
    let citation = "generalized pushforward respects the star product";
    let frag = FinSetoid::capped(c);
    let r = (|| {
        let diag = GenGrothMorphism::new(
            PPFunctor::identity(),
            Endofunctor::Identity,
            Endofunctor::Square,
            NatTrans::Diagonal,
            &frag,
        )?;
        let sq = GenGrothMorphism::new(
            PPFunctor::square(),
            Endofunctor::Square,
            Endofunctor::Square,
            NatTrans::Identity(Endofunctor::Square.then(&Endofunctor::Square)),
            &frag,
        )?;
        let proj = GenGrothMorphism::new(
            PPFunctor::identity(),
            Endofunctor::Square,
            Endofunctor::Identity,
            NatTrans::Projection { right: true },
            &frag,
        )?;
        let mut n = 0;
        let id_src = GenChuCategory::over_carriers(&Endofunctor::Identity, &Setoid::all_up_to(c.min(1)));
        n += verify_gen_global_composition(&sq, &diag, &id_src)?;
        let sq_src = GenChuCategory::over_carriers(&Endofunctor::Square, &Setoid::all_up_to(c.min(1)));
        n += verify_gen_global_composition(&proj, &sq, &sq_src)?;
        let compose = |g: &GenGrothMorphism, f: &GenGrothMorphism| {
            gen_groth_compose(g, f).map_err(|e| Violation::new("star product", e.to_string()))
        };
        let left = compose(&compose(&proj, &sq)?, &diag)?;
        let right = compose(&proj, &compose(&sq, &diag)?)?;
        for x in Setoid::all_up_to(c) {
            require(
                left.eta().component(&x) == right.eta().component(&x),
                "star associativity",
                || format!("components differ at {x:?}"),
            )?;
            for m in [&diag, &sq, &proj] {
                let unit = compose(m, &GenGrothMorphism::identity(m.gamma()))?;
                require(unit.eta().component(&x) == m.eta().component(&x), "star unit", || {
                    format!("{:?} ∗ 1 differs at {x:?}", m.eta())
                })?;
            }
            n += 1;
        }
        left.check(&frag)?;
        Ok(n)
    })();
    Check::from_result(id, citation, r)
}

fn top_repr(ctx: &Ctx) -> Vec<Check> {
    let m = ctx.cap.min(3);
    let top = TopCategory::capped(m);
    let e_top = ETop::new(&top);
    let t0 = top.objects().into_iter().map(|t| {
        let separable = classify(&membership_space(&t)).separable;
        let r = require(separable == t.is_t0(), "separable iff T0", || {
            format!("{t:?}: separable = {separable}, T0 = {}", t.is_t0())
        })
        .map(|_| 1);
        (format!("{t:?}"), r)
    });
    let set = FinSetoid::capped(m);
    let delta = Delta::new(&set);
    let e_top_discrete = ETop::new(delta.target());
    let along = Composite {
        first: &delta,
        second: &e_top_discrete,
    };
    vec![
        representation(
            format!("top-repr/e-top/c{m}"),
            "topological spaces as Chu spaces",
            &representation_report(&e_top),
            Want::Strict,
        ),
        all_instances(
            format!("top-repr/separable-iff-t0/c{m}"),
            "separable image iff T0",
            t0.collect::<Vec<_>>(),
        ),
        Check::from_result(
            format!("top-repr/delta-triangle/c{m}"),
            "discrete topology then E^Top equals E^Set",
            verify_functor_equality(&along, &ESet::new(&set)),
        ),
        representation(
            format!("top-repr/e-set/c{m}"),
            "sets as Chu spaces by membership",
            &representation_report(&ESet::new(&set)),
            Want::Strict,
        ),
    ]
}

fn scott_laws(systems: &[InfoSystem]) -> Result<usize, Violation> {
    let mut n = 0;
    for x in systems {
        let id = ApproximableMapping::identity(x);
        require(
            id.realize() == SetoidFn::identity(&x.ideal_setoid()),
            "|⊢| = id",
            || format!("{x:?}"),
        )?;
        for y in systems {
            for r in ApproximableMapping::enumerate(x, y) {
                let back = ApproximableMapping::reconstruct(&r.realize(), x, y)
                    .map_err(|e| Violation::new("r = r_|r|", e.to_string()))?;
                require(back == r, "r = r_|r|", || format!("{r:?} reconstructs to {back:?}"))?;
                for z in systems {
                    for s in ApproximableMapping::enumerate(y, z) {
                        let sr = approx_compose(&s, &r).map_err(|e| Violation::new("|s ∘ r|", e.to_string()))?;
                        let pointwise = s.realize().after(&r.realize()).expect("composable");
                        require(sr.realize() == pointwise, "|s ∘ r| = |s| ∘ |r|", || {
                            format!("s = {s:?}, r = {r:?}")
                        })?;
                        n += 1;
                    }
                }
            }
        }
    }
    Ok(n)
}

fn inf_repr(ctx: &Ctx) -> Vec<Check> {
    let m = ctx.cap.min(2);
    let systems = InfoSystem::all_up_to(m);
    let scott = ScottFunctor::new(InfCategory::with_objects(systems.clone()));
    let mut spots = InfoSystem::all_on(3);
    spots.shuffle(&mut ctx.rng(2));
    spots.truncate(3);
    let spot_scott = ScottFunctor::new(InfCategory::with_objects(spots.clone()));
    vec![
        Check::from_result(
            format!("inf-repr/realization-laws/t{m}"),
            "realization of approximable mappings",
            scott_laws(&systems),
        ),
        representation(
            format!("inf-repr/scott-full-embedding/t{m}"),
            "ideal completion is a full embedding",
            &representation_report(&scott),
            Want::FullEmbedding,
        ),
        representation(
            format!("inf-repr/e-top-after-scott/t{m}"),
            "information systems as Chu spaces",
            &representation_report(&inf_chu_representation(&scott)),
            Want::Strict,
        ),
        Check::from_result(
            "inf-repr/realization-laws/spot-t3".to_string(),
            "realization of approximable mappings",
            scott_laws(&spots),
        ),
        representation(
            "inf-repr/scott-full-embedding/spot-t3".to_string(),
            "ideal completion is a full embedding",
            &representation_report(&spot_scott),
            Want::FullEmbedding,
        ),
    ]
}

fn subsets_repr(ctx: &Ctx) -> Vec<Check> {
    let m = ctx.cap.min(3);
    let powersets = Setoid::all_up_to(m).into_iter().map(|x| {
        (
            format!("{x:?}"),
            report_as(&representation_report(&SubsetsRepresentation::new(&x)), Want::Strict),
        )
    });
    let monos = Setoid::all_up_to(m.min(2)).into_iter().map(|g| {
        (
            format!("{g:?}"),
            report_as(
                &representation_report(&SubRepresentation::new(SubCategory::canonical(&g))),
                Want::Strict,
            ),
        )
    });
    vec![
        all_instances(
            format!("subsets-repr/powerset/c{m}"),
            "subsets of a setoid as Chu spaces",
            powersets.collect::<Vec<_>>(),
        ),
        all_instances(
            format!("subsets-repr/sub/c{}", m.min(2)),
            "subobjects as Chu spaces",
            monos.collect::<Vec<_>>(),
        ),
    ]
}

/// Every valid apartness on the setoids up to `m`, denial first.
fn apartnesses(m: usize) -> Vec<Apartness> {
    let mut out = Vec::new();
    for x in Setoid::all_up_to(m) {
        let denial = Apartness::denial(&x);
        out.push(denial.clone());
        out.extend(Apartness::all_valid(&x).into_iter().filter(|a| a != &denial));
    }
    out
}

fn compl_repr(ctx: &Ctx) -> Vec<Check> {
    let m = ctx.cap.min(3);
    let aps = apartnesses(m);
    let strict = |inhabited: bool| {
        aps.iter()
            .map(|ap| {
                let cat = if inhabited {
                    ComplementedCategory::inhabited(ap)
                } else {
                    ComplementedCategory::new(ap)
                };
                (
                    format!("{ap:?}"),
                    report_as(&representation_report(&ComplRepresentation::new(cat)), Want::Strict),
                )
            })
            .collect::<Vec<_>>()
    };
    let witness = Setoid::all_up_to(m).into_iter().filter(|x| !x.is_empty()).map(|x| {
        let r = image_nonsurjectivity_witness(&x)
            .map_err(|e| Violation::new("non-surjectivity", e.to_string()))
            .and_then(|w| match find_preimage(&w.space, &Apartness::denial(&x)) {
                None => Ok(1),
                Some(a) => Err(Violation::new(
                    "non-surjectivity",
                    format!("{a:?} maps onto the witness"),
                )),
            });
        (format!("{x:?}"), r)
    });
    let non_denial = aps.iter().filter(|a| !a.is_denial()).count();
    vec![
        all_instances(
            format!("compl-repr/strict/all-c{m}"),
            "complemented subsets as Chu spaces, every canonical complemented subset",
            strict(false),
        ),
        all_instances(
            format!("compl-repr/strict/inhabited-c{m}"),
            "complemented subsets as Chu spaces, both parts inhabited",
            strict(true),
        ),
        Check::pass(
            format!("compl-repr/non-denial-instances/c{m}"),
            "apartness relations other than denial",
            non_denial,
        ),
        all_instances(
            format!("compl-repr/non-surjective/c{m}"),
            "(X, 1, X) is outside the image",
            witness.collect::<Vec<_>>(),
        ),
    ]
}

fn aff_repr(ctx: &Ctx) -> Vec<Check> {
    let m = ctx.cap.min(2);
    let values = [Setoid::unit(), two()];
    let strict = values.iter().map(|x| {
        let cat = AffCategory::capped(x, m);
        (
            format!("{x:?}"),
            report_as(&representation_report(&AffRepresentation::new(&cat)), Want::Strict),
        )
    });
    let separable = values.iter().map(|x| {
        let cat = AffCategory::capped(x, m);
        let rep = AffRepresentation::new(&cat);
        let r = cat.objects().iter().try_fold(0, |n, a| {
            let s = classify(&rep.map_ob(a)).separable;
            require(s == a.separates_points(), "separable iff separating", || {
                format!("{a:?}")
            })
            .map(|_| n + 1)
        });
        (format!("{x:?}"), r)
    });
    vec![
        all_instances(
            format!("aff-repr/strict/c{m}"),
            "affine families as Chu spaces",
            strict.collect::<Vec<_>>(),
        ),
        all_instances(
            format!("aff-repr/separable-iff-separating/c{m}"),
            "separable image iff the family separates points",
            separable.collect::<Vec<_>>(),
        ),
    ]
}

fn genchu_laws(ctx: &Ctx) -> Vec<Check> {
    let c = ctx.cap.min(2);
    let c1 = ctx.cap.min(1);
    let functors = [
        ("id", Endofunctor::Identity),
        ("sq", Endofunctor::Square),
        ("const2", Endofunctor::Constant(two())),
    ];
    let mut out = Vec::new();
    for (name, g) in &functors {
        let closure = verify_pentagon_closure(&GenChuCategory::capped(g, c)).map(|s| s.composable_pairs);
        out.push(Check::from_result(
            format!("genchu-laws/closure/{name}-c{c}"),
            "pentagon arrows compose",
            closure,
        ));
        let laws = verify_category_laws(&GenChuCategory::capped(g, c1)).map(|s| s.composable_triples);
        out.push(Check::from_result(
            format!("genchu-laws/category/{name}-c{c1}"),
            "generalized Chu category laws",
            laws,
        ));
    }
    out.push(representation(
        format!("genchu-laws/e-gamma/c{c}"),
        "constant endofunctor embeds ordinary Chu",
        &representation_report(&EmbedConstant::new(ChuCategory::capped(&two(), c))),
        Want::Embedding,
    ));
    let id_src = GenChuCategory::capped(&Endofunctor::Identity, c);
    let diag = GenLocalPushforward::new(NatTrans::Diagonal, id_src.clone()).map(|p| representation_report(&p));
    out.push(match diag {
        Ok(r) => representation(
            format!("genchu-laws/injective-eta-full-embedding/c{c}"),
            "componentwise mono transformation gives a full embedding",
            &r,
            Want::FullEmbedding,
        ),
        Err(v) => Check::fail(
            format!("genchu-laws/injective-eta-full-embedding/c{c}"),
            "",
            violation(&v),
        ),
    });
    let identity = GenLocalPushforward::new(NatTrans::Identity(Endofunctor::Identity), id_src.clone()).and_then(|p| {
        id_src.objects().iter().try_fold(0, |n, s| {
            require(&p.map_ob(s) == s, "identity pushforward", || format!("moves {s:?}")).map(|_| n + 1)
        })
    });
    out.push(Check::from_result(
        format!("genchu-laws/identity-eta/c{c}"),
        "identity transformation gives the identity",
        identity,
    ));
    out
}

fn pred_repr(ctx: &Ctx) -> Vec<Check> {
    let m = ctx.cap.min(3);
    let c = ctx.cap.min(2);
    let set = FinSetoid::capped(m);
    let full = PredCategory::with_objects(set.objects().iter().map(finchu::genchu::full_predicate).collect());
    let along = Composite {
        first: FullPredicates::new(set.clone()),
        second: PredRepresentation::new(full),
    };
    let cat = FinSetoid::capped(c);
    let predc = PredC::monos(cat.clone());
    let agree = predc.objects().iter().try_fold(0, |n, i| {
        let s = finchu::finsetoid::SubsetEmbedding::new(i.clone())
            .map_err(|e| Violation::new("agreement", e.to_string()))?;
        let (a, b) = (finchu::genchu::predc_space(&cat, i), finchu::genchu::pred_space(&s));
        require(a == b, "agreement", || format!("{a:?} ≠ {b:?}")).map(|_| n + 1)
    });
    vec![
        representation(
            format!("pred-repr/pred/c{m}"),
            "predicates as generalized Chu spaces",
            &representation_report(&PredRepresentation::new(PredCategory::capped(m))),
            Want::Strict,
        ),
        Check::from_result(
            format!("pred-repr/set-triangle/c{m}"),
            "full predicates then E^Pred equals E^Set",
            verify_functor_equality(&along, &SetRepresentation::new(set.clone())),
        ),
        representation(
            format!("pred-repr/pred-c/c{c}"),
            "predicates over a category as generalized Chu spaces",
            &representation_report(&PredCRepresentation::new(predc)),
            Want::Strict,
        ),
        Check::from_result(
            format!("pred-repr/pred-c-agrees/c{c}"),
            "the two predicate representations agree",
            agree,
        ),
    ]
}

fn predneq_repr(ctx: &Ctx) -> Vec<Check> {
    let c = ctx.cap.min(2);
    let denial = ComplPredCategory::capped(c);
    let non_denial: Vec<Apartness> = Setoid::all_up_to(c)
        .iter()
        .flat_map(|x| Apartness::all_valid(x).into_iter().filter(|a| !a.is_denial()))
        .collect();
    let derived = |cat: &ComplPredCategory| {
        let p = finchu::category::Presentation::new(cat);
        p.morphisms()
            .iter()
            .try_fold(0, |n, u| u.derived_strong_extensionality().map(|_| n + 1))
    };
    let mut out = vec![
        representation(
            format!("predneq-repr/strict/all-c{c}"),
            "complemented predicates as generalized Chu spaces, every canonical complemented subset",
            &representation_report(&ComplPredRepresentation::new(denial.clone())),
            Want::Strict,
        ),
        representation(
            format!("predneq-repr/strict/inhabited-c{c}"),
            "complemented predicates as generalized Chu spaces, both parts inhabited",
            &representation_report(&ComplPredRepresentation::new(denial.clone().inhabited())),
            Want::Strict,
        ),
        Check::from_result(
            format!("predneq-repr/derived-strong-extensionality/c{c}"),
            "forward and backward maps are strongly extensional",
            derived(&denial),
        ),
    ];
    let instances = non_denial.iter().map(|ap| {
        let r = ComplPredCategory::with_apartnesses(std::slice::from_ref(ap))
            .map_err(|e| Violation::new("construction", e.to_string()))
            .and_then(|cat| {
                let n = derived(&cat)?;
                report_as(
                    &representation_report(&ComplPredRepresentation::new(cat.inhabited())),
                    Want::Strict,
                )
                .map(|k| n + k)
            });
        (format!("{ap:?}"), r)
    });
    out.push(all_instances(
        format!("predneq-repr/non-denial/c{c}"),
        "complemented predicates under other apartness relations, both parts inhabited",
        instances.collect::<Vec<_>>(),
    ));
    out
}

fn groth_identification(ctx: &Ctx) -> Vec<Check> {
    let c = ctx.cap.min(2);
    let carriers = Setoid::all_up_to(c);
    let pairing = HomPairing::new(&two());
    let antipar = AntiparCategory::over_carriers(pairing.clone(), &carriers);
    let gammas = [Setoid::unit(), two(), Setoid::discrete(3)];
    let mut out = vec![
        Check::from_result(
            format!("groth-identification/contravariant/c{c}"),
            "Hom(_ × _, γ) is contravariant in both arguments",
            verify_contravariant_laws(&pairing, &carriers),
        ),
        Check::from_result(
            format!("groth-identification/antiparallel-closure/c{c}"),
            "antiparallel arrows compose",
            verify_antipar_closure(&antipar),
        ),
        Check::from_result(
            format!("groth-identification/chu-iso/c{c}"),
            "Chu is the antiparallel Grothendieck category",
            chu_groth_identification(&two(), &carriers).map(|s| s.arrows),
        ),
        Check::from_result(
            // faithfulness is seen at the one-point carrier
            format!("groth-identification/hom-embedding/γ3-c{}", c.max(1)),
            "γ ↦ Hom(_ × _, γ) is an embedding",
            sigma_hom_embedding(&gammas, &Setoid::all_up_to(c.max(1))).map(|s| s.arrows),
        ),
    ];
    let id = format!("groth-identification/presheaf-fault-detected/c{c}");
    if c == 0 {
        out.push(Check::skipped(
            id,
            "a corrupted action is caught",
            "no inhabited carrier to corrupt",
        ));
        return out;
    }
    // a seeded single-entry fault in the presheaf's action, on the largest carrier
    let n = Setoid::discrete(c.clamp(1, 2));
    let maps: Vec<SetoidFn> = SetoidFn::all(&n, &n);
    let mut rng = ctx.rng(3);
    let f = maps.choose(&mut rng).expect("maps").clone();
    let g = maps
        .iter()
        .filter(|g| !g.is_bijection() || *g != &f)
        .cloned()
        .collect::<Vec<_>>();
    // on 1 only the identity pair is left, which the identity law catches
    let g = g.choose(&mut rng).unwrap_or(&f).clone();
    let faulty = HomPairing::new(&two()).with_fault(f.clone(), g.clone());
    let caught = verify_contravariant_laws(&faulty, &carriers).is_err()
        || verify_antipar_closure(&AntiparCategory::over_carriers(faulty, &carriers)).is_err();
    out.push(if caught {
        Check::pass(id, "a corrupted action is caught", 1)
    } else {
        Check::fail(
            id,
            "a corrupted action is caught",
            json!({ "law": "fault not detected", "detail": format!("fault at ({f:?}, {g:?}) went unnoticed") }),
        )
    });
    out
}

fn fibred(ctx: &Ctx) -> Vec<Check> {
    let c = ctx.cap.min(2);
    vec![Check::from_result(
        format!("fibred/reconstruction/c{c}"),
        "fibred presentation of Chu",
        fibred_chu(&two(), &Setoid::all_up_to(c)).map(|s| s.total_arrows + s.composites),
    )]
}

use std::collections::HashMap;

use rayon::prelude::*;

use super::presentation::Presentation;
use super::{Cartesian, Category, Functor, Mor, Ob, Violation};
use crate::error::{Error, Result};

fn first_err<T>(results: Vec<Result<T, Violation>>) -> Result<Vec<T>, Violation> {
    results.into_iter().collect()
}

/// Preservation of identities, typing and composition on the listed fragment
/// of the source. Returns the number of composable pairs checked.
pub fn verify_functor_laws<F: Functor>(functor: &F) -> Result<usize, Violation> {
    let p = Presentation::new(functor.source());
    let images: Vec<Mor<F::Dst>> = p.morphisms().par_iter().map(|f| functor.map_mor(f)).collect();
    functor_laws_on(functor, &p, &images)
}

fn functor_laws_on<F: Functor>(
    functor: &F,
    p: &Presentation<F::Src>,
    images: &[Mor<F::Dst>],
) -> Result<usize, Violation> {
    let (src, dst) = (functor.source(), functor.target());
    for a in p.objects() {
        let lhs = functor.map_mor(&src.identity(a));
        let rhs = dst.identity(&functor.map_ob(a));
        if lhs != rhs {
            return Err(Violation::new(
                "functor identity",
                format!("F(1) = {lhs:?} but 1_F = {rhs:?} at {a:?}"),
            ));
        }
    }
    let mors = p.morphisms();
    let counts = first_err(
        (0..mors.len())
            .into_par_iter()
            .map(|f| {
                let (a, b) = p.ends(f);
                let ff = &images[f];
                let (fa, fb) = (functor.map_ob(&p.objects()[a]), functor.map_ob(&p.objects()[b]));
                if dst.dom(ff) != fa || dst.cod(ff) != fb {
                    return Err(Violation::new(
                        "functor typing",
                        format!("F({:?}) = {ff:?} is not an arrow {fa:?} → {fb:?}", mors[f]),
                    ));
                }
                for &g in p.outgoing(b) {
                    let lhs = functor.map_mor(&src.compose(&mors[g], &mors[f]));
                    let rhs = dst.compose(&images[g], ff);
                    if lhs != rhs {
                        return Err(Violation::new(
                            "functor composition",
                            format!(
                                "F(g ∘ f) = {lhs:?} but F(g) ∘ F(f) = {rhs:?} for f = {:?}, g = {:?}",
                                mors[f], mors[g]
                            ),
                        ));
                    }
                }
                Ok(p.outgoing(b).len())
            })
            .collect(),
    )?;
    Ok(counts.into_iter().sum())
}

/// Everything the representation claims need about one functor on the
/// listed fragment of its source.
#[derive(Clone, Debug)]
pub struct RepresentationReport {
    pub objects: usize,
    pub arrows: usize,
    pub functor_laws: Result<(), Violation>,
    pub injective_on_objects: Result<(), Violation>,
    pub faithful: Result<(), Violation>,
    pub full: Result<(), Violation>,
    pub injective_on_arrows: Result<(), Violation>,
}

impl RepresentationReport {
    /// Injective on objects and faithful.
    pub fn is_embedding(&self) -> bool {
        self.functor_laws.is_ok() && self.injective_on_objects.is_ok() && self.faithful.is_ok()
    }

    pub fn is_full(&self) -> bool {
        self.full.is_ok()
    }

    pub fn is_full_embedding(&self) -> bool {
        self.is_embedding() && self.is_full()
    }

    /// A full embedding that is also injective on arrows.
    pub fn is_strict_representation(&self) -> bool {
        self.is_full_embedding() && self.injective_on_arrows.is_ok()
    }

    /// Named results in a fixed order.
    pub fn checks(&self) -> [(&'static str, &Result<(), Violation>); 5] {
        [
            ("functor-laws", &self.functor_laws),
            ("injective-on-objects", &self.injective_on_objects),
            ("faithful", &self.faithful),
            ("full", &self.full),
            ("injective-on-arrows", &self.injective_on_arrows),
        ]
    }

    pub fn first_failure(&self) -> Option<&Violation> {
        self.checks().into_iter().find_map(|(_, r)| r.as_ref().err())
    }
}

/// Functor laws, injectivity on objects and arrows, faithfulness and
/// fullness, each decided by enumerating hom-sets of both categories.
pub fn representation_report<F: Functor>(functor: &F) -> RepresentationReport {
    let p = Presentation::new(functor.source());
    let dst = functor.target();
    let images: Vec<Mor<F::Dst>> = p.morphisms().par_iter().map(|f| functor.map_mor(f)).collect();
    let ob_images: Vec<Ob<F::Dst>> = p.objects().par_iter().map(|a| functor.map_ob(a)).collect();
    let functor_laws = functor_laws_on(functor, &p, &images).map(|_| ());

    let mut seen: HashMap<&Ob<F::Dst>, usize> = HashMap::new();
    let mut injective_on_objects = Ok(());
    for (i, fa) in ob_images.iter().enumerate() {
        if let Some(&j) = seen.get(fa) {
            injective_on_objects = Err(Violation::new(
                "injective on objects",
                format!("{:?} and {:?} both map to {fa:?}", p.objects()[j], p.objects()[i]),
            ));
            break;
        }
        seen.insert(fa, i);
    }

    let mut seen: HashMap<&Mor<F::Dst>, usize> = HashMap::new();
    let mut injective_on_arrows = Ok(());
    for (i, ff) in images.iter().enumerate() {
        if let Some(&j) = seen.get(ff) {
            injective_on_arrows = Err(Violation::new(
                "injective on arrows",
                format!("{:?} and {:?} both map to {ff:?}", p.morphisms()[j], p.morphisms()[i]),
            ));
            break;
        }
        seen.insert(ff, i);
    }

    let n = p.objects().len();
    let per_pair: Vec<(Result<(), Violation>, Result<(), Violation>)> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (a, b) = (k / n, k % n);
            let hom = p.hom(a, b);
            let mut hit: HashMap<&Mor<F::Dst>, usize> = HashMap::new();
            let mut faithful = Ok(());
            for &f in hom {
                if let Some(&g) = hit.get(&images[f]) {
                    faithful = Err(Violation::new(
                        "faithful",
                        format!(
                            "parallel arrows {:?} and {:?} both map to {:?}",
                            p.morphisms()[g],
                            p.morphisms()[f],
                            images[f]
                        ),
                    ));
                    break;
                }
                hit.insert(&images[f], f);
            }
            let full = match dst
                .hom(&ob_images[a], &ob_images[b])
                .into_iter()
                .find(|g| !hit.contains_key(g))
            {
                Some(g) => Err(Violation::new(
                    "full",
                    format!(
                        "{g:?} : {:?} → {:?} is not the image of an arrow {:?} → {:?}",
                        ob_images[a],
                        ob_images[b],
                        p.objects()[a],
                        p.objects()[b]
                    ),
                )),
                None => Ok(()),
            };
            (faithful, full)
        })
        .collect();
    let faithful = per_pair.iter().find_map(|(f, _)| f.clone().err()).map_or(Ok(()), Err);
    let full = per_pair.iter().find_map(|(_, f)| f.clone().err()).map_or(Ok(()), Err);

    RepresentationReport {
        objects: n,
        arrows: p.morphisms().len(),
        functor_laws,
        injective_on_objects,
        faithful,
        full,
        injective_on_arrows,
    }
}

/// `f` is left-cancellable against every pair of arrows from listed objects.
pub fn is_mono<C: Category>(cat: &C, f: &C::Mor) -> bool {
    let a = cat.dom(f);
    cat.objects().iter().all(|c| {
        let hom = cat.hom(c, &a);
        let mut seen = HashMap::new();
        hom.iter().all(|g| seen.insert(cat.compose(f, g), ()).is_none())
    })
}

/// `f` is right-cancellable against every pair of arrows into listed objects.
pub fn is_epi<C: Category>(cat: &C, f: &C::Mor) -> bool {
    let b = cat.cod(f);
    cat.objects().iter().all(|c| {
        let hom = cat.hom(&b, c);
        let mut seen = HashMap::new();
        hom.iter().all(|g| seen.insert(cat.compose(g, f), ()).is_none())
    })
}

/// Checks the naturality square `G(f) ∘ η_a = η_b ∘ F(f)` for every listed
/// arrow `f : a → b`, and that each component runs `F(a) → G(a)`.
pub fn verify_naturality<F, G>(
    f: &F,
    g: &G,
    eta: impl Fn(&Ob<F::Src>) -> Mor<F::Dst> + Sync,
) -> Result<usize, Violation>
where
    F: Functor,
    G: Functor<Src = F::Src, Dst = F::Dst>,
{
    let (src, dst) = (f.source(), f.target());
    let objects = src.objects();
    for a in &objects {
        let c = eta(a);
        if dst.dom(&c) != f.map_ob(a) || dst.cod(&c) != g.map_ob(a) {
            return Err(Violation::new(
                "component typing",
                format!("component {c:?} at {a:?} does not run F(a) → G(a)"),
            ));
        }
    }
    let n = objects.len();
    let counts = first_err(
        (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (a, b) = (&objects[k / n], &objects[k % n]);
                let (ea, eb) = (eta(a), eta(b));
                let hom = src.hom(a, b);
                for m in &hom {
                    let lhs = dst.compose(&g.map_mor(m), &ea);
                    let rhs = dst.compose(&eb, &f.map_mor(m));
                    if lhs != rhs {
                        return Err(Violation::new(
                            "naturality",
                            format!("square fails at {m:?}: G(f) ∘ η_a = {lhs:?}, η_b ∘ F(f) = {rhs:?}"),
                        ));
                    }
                }
                Ok(hom.len())
            })
            .collect(),
    )?;
    Ok(counts.into_iter().sum())
}

/// The unique `F_ab : F(a) × F(b) → F(a × b)`, obtained as the inverse of
/// `⟨F(π₁), F(π₂)⟩`.
pub fn canonical_product_iso<F>(functor: &F, a: &Ob<F::Src>, b: &Ob<F::Src>) -> Result<Mor<F::Dst>>
where
    F: Functor,
    F::Src: Cartesian,
    F::Dst: Cartesian,
{
    let (src, dst) = (functor.source(), functor.target());
    let (_, p1, p2) = src.product(a, b);
    let compare = dst.tuple(&functor.map_mor(&p1), &functor.map_mor(&p2));
    dst.inverse(&compare).ok_or_else(|| {
        Error::NotProductPreserving(format!(
            "⟨F(π₁), F(π₂)⟩ = {compare:?} has no inverse for a = {a:?}, b = {b:?}"
        ))
    })
}

/// The rectangle `F_{a'b'} ∘ (F(f) × F(g)) = F(f × g) ∘ F_{ab}`.
pub fn check_product_iso_naturality<F>(functor: &F, f: &Mor<F::Src>, g: &Mor<F::Src>) -> Result<(), Violation>
where
    F: Functor,
    F::Src: Cartesian,
    F::Dst: Cartesian,
{
    let (src, dst) = (functor.source(), functor.target());
    let iso = |a: &Ob<F::Src>, b: &Ob<F::Src>| {
        canonical_product_iso(functor, a, b).map_err(|e| Violation::new("product preservation", e.to_string()))
    };
    let before = iso(&src.dom(f), &src.dom(g))?;
    let after = iso(&src.cod(f), &src.cod(g))?;
    let lhs = dst.compose(&after, &dst.product_mor(&functor.map_mor(f), &functor.map_mor(g)));
    let rhs = dst.compose(&functor.map_mor(&src.product_mor(f, g)), &before);
    if lhs != rhs {
        return Err(Violation::new(
            "product iso naturality",
            format!("rectangle fails for f = {f:?}, g = {g:?}: {lhs:?} vs {rhs:?}"),
        ));
    }
    Ok(())
}

/// `F = G` as presentation tables: equal object images and equal arrow
/// images on every listed arrow of the shared source. Returns the number of
/// arrows compared.
pub fn verify_functor_equality<F, G>(f: &F, g: &G) -> Result<usize, Violation>
where
    F: Functor,
    G: Functor<Src = F::Src, Dst = F::Dst>,
{
    let p = Presentation::new(f.source());
    for a in p.objects() {
        let (fa, ga) = (f.map_ob(a), g.map_ob(a));
        if fa != ga {
            return Err(Violation::new("object table", format!("at {a:?}: {fa:?} vs {ga:?}")));
        }
    }
    let mismatches: Vec<Result<(), Violation>> = p
        .morphisms()
        .par_iter()
        .map(|m| {
            let (fm, gm) = (f.map_mor(m), g.map_mor(m));
            if fm != gm {
                return Err(Violation::new("arrow table", format!("at {m:?}: {fm:?} vs {gm:?}")));
            }
            Ok(())
        })
        .collect();
    first_err(mismatches)?;
    Ok(p.morphisms().len())
}

/// Sizes of the two categories an isomorphism was checked on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IsoSummary {
    pub objects: usize,
    pub arrows: usize,
}

/// `F` is an isomorphism between the listed fragments: a functor, a bijection
/// from the source objects onto the target objects, and a bijection on every
/// hom-set.
pub fn verify_isomorphism<F: Functor>(functor: &F) -> Result<IsoSummary, Violation> {
    let p = Presentation::new(functor.source());
    let dst = functor.target();
    let images: Vec<Mor<F::Dst>> = p.morphisms().par_iter().map(|f| functor.map_mor(f)).collect();
    functor_laws_on(functor, &p, &images)?;

    let targets = dst.objects();
    let ob_images: Vec<Ob<F::Dst>> = p.objects().iter().map(|a| functor.map_ob(a)).collect();
    let mut hit: HashMap<&Ob<F::Dst>, usize> = HashMap::new();
    for (i, fa) in ob_images.iter().enumerate() {
        if let Some(j) = hit.insert(fa, i) {
            return Err(Violation::new(
                "bijective on objects",
                format!("{:?} and {:?} both map to {fa:?}", p.objects()[j], p.objects()[i]),
            ));
        }
    }
    if let Some(b) = targets.iter().find(|b| !hit.contains_key(b)) {
        return Err(Violation::new("bijective on objects", format!("{b:?} is not an image")));
    }
    if targets.len() != ob_images.len() {
        return Err(Violation::new(
            "bijective on objects",
            format!("{} source objects, {} target objects", ob_images.len(), targets.len()),
        ));
    }

    let n = p.objects().len();
    first_err(
        (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (a, b) = (k / n, k % n);
                let mut seen: HashMap<&Mor<F::Dst>, usize> = HashMap::new();
                for &f in p.hom(a, b) {
                    if let Some(g) = seen.insert(&images[f], f) {
                        return Err(Violation::new(
                            "bijective on arrows",
                            format!(
                                "{:?} and {:?} both map to {:?}",
                                p.morphisms()[g],
                                p.morphisms()[f],
                                images[f]
                            ),
                        ));
                    }
                }
                let hom = dst.hom(&ob_images[a], &ob_images[b]);
                if let Some(g) = hom.iter().find(|g| !seen.contains_key(g)) {
                    return Err(Violation::new("bijective on arrows", format!("{g:?} is not an image")));
                }
                if hom.len() != seen.len() {
                    return Err(Violation::new(
                        "bijective on arrows",
                        format!("{} source arrows, {} target arrows", seen.len(), hom.len()),
                    ));
                }
                Ok(())
            })
            .collect(),
    )?;
    Ok(IsoSummary {
        objects: n,
        arrows: p.morphisms().len(),
    })
}

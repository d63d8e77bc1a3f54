use std::fmt;

use super::{Endofunctor, GenChuCategory, GenChuSpace, GenChuTransform};
use crate::category::{is_mono, Cartesian, Category, FinSetoid, Functor, Violation};
use crate::error::{Error, Result};
use crate::finsetoid::{
    canonical_inequality, fn_product, strong_extensionality_witness, Apartness, ComplementedSubset, Setoid, SetoidFn,
    SubsetEmbedding,
};
use crate::util::for_each_choice;

/// The unique `u⁺ : A → B` with `j ∘ u⁺ = u⁰ ∘ i`, found by search.
fn lift(base: &SetoidFn, i: &SubsetEmbedding, j: &SubsetEmbedding) -> Option<SetoidFn> {
    let y = j.ambient();
    let table = (0..i.sub().size())
        .map(|a| {
            let target = base.apply(i.inj().apply(a));
            (0..j.sub().size()).find(|&b| y.eq(j.inj().apply(b), target))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(SetoidFn::new(i.sub().clone(), j.sub().clone(), table).expect("j reflects equality"))
}

/// First `a` with `j(fwd a) ≠ base(i a)`.
fn square_witness(base: &SetoidFn, fwd: &SetoidFn, i: &SubsetEmbedding, j: &SubsetEmbedding) -> Option<usize> {
    let y = j.ambient();
    (0..i.sub().size()).find(|&a| !y.eq(j.inj().apply(fwd.apply(a)), base.apply(i.inj().apply(a))))
}

fn check_typed(f: &SetoidFn, dom: &Setoid, cod: &Setoid, what: &str) -> Result<()> {
    if f.dom() != dom || f.cod() != cod {
        return Err(Error::Mismatch(format!("{what} has the wrong type")));
    }
    Ok(())
}

/// `(u⁰, u⁺) : (X, i, A) → (Y, j, B)` with `j ∘ u⁺ = u⁰ ∘ i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PredArrow {
    src: SubsetEmbedding,
    dst: SubsetEmbedding,
    base: SetoidFn,
    fwd: SetoidFn,
}

impl PredArrow {
    pub fn new(src: &SubsetEmbedding, dst: &SubsetEmbedding, base: SetoidFn, fwd: SetoidFn) -> Result<Self> {
        check_typed(&base, src.ambient(), dst.ambient(), "u⁰")?;
        check_typed(&fwd, src.sub(), dst.sub(), "u⁺")?;
        if let Some(a) = square_witness(&base, &fwd, src, dst) {
            return Err(Error::Invalid(format!("j ∘ u⁺ ≠ u⁰ ∘ i at {a}")));
        }
        Ok(PredArrow {
            src: src.clone(),
            dst: dst.clone(),
            base,
            fwd,
        })
    }

    pub fn src(&self) -> &SubsetEmbedding {
        &self.src
    }

    pub fn dst(&self) -> &SubsetEmbedding {
        &self.dst
    }

    pub fn base(&self) -> &SetoidFn {
        &self.base
    }

    pub fn fwd(&self) -> &SetoidFn {
        &self.fwd
    }
}

impl fmt::Debug for PredArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.base, self.fwd)
    }
}

/// Predicates `(X, i_A, A)` on finite setoids.
#[derive(Clone, Debug)]
pub struct PredCategory {
    objects: Vec<SubsetEmbedding>,
}

impl PredCategory {
    /// Every canonical subset of every setoid with at most `cap` elements.
    pub fn capped(cap: usize) -> Self {
        let objects = Setoid::all_up_to(cap)
            .iter()
            .flat_map(SubsetEmbedding::all_canonical)
            .collect();
        PredCategory { objects }
    }

    pub fn with_objects(objects: Vec<SubsetEmbedding>) -> Self {
        PredCategory { objects }
    }

    pub fn objects_ref(&self) -> &[SubsetEmbedding] {
        &self.objects
    }
}

impl Category for PredCategory {
    type Ob = SubsetEmbedding;
    type Mor = PredArrow;

    fn objects(&self) -> Vec<SubsetEmbedding> {
        self.objects.clone()
    }
    fn hom(&self, a: &SubsetEmbedding, b: &SubsetEmbedding) -> Vec<PredArrow> {
        SetoidFn::all(a.ambient(), b.ambient())
            .into_iter()
            .filter_map(|base| {
                let fwd = lift(&base, a, b)?;
                Some(PredArrow {
                    src: a.clone(),
                    dst: b.clone(),
                    base,
                    fwd,
                })
            })
            .collect()
    }
    fn dom(&self, f: &PredArrow) -> SubsetEmbedding {
        f.src.clone()
    }
    fn cod(&self, f: &PredArrow) -> SubsetEmbedding {
        f.dst.clone()
    }
    fn identity(&self, a: &SubsetEmbedding) -> PredArrow {
        PredArrow {
            src: a.clone(),
            dst: a.clone(),
            base: SetoidFn::identity(a.ambient()),
            fwd: SetoidFn::identity(a.sub()),
        }
    }
    fn compose(&self, g: &PredArrow, f: &PredArrow) -> PredArrow {
        PredArrow {
            src: f.src.clone(),
            dst: g.dst.clone(),
            base: g.base.after(&f.base).expect("composable"),
            fwd: g.fwd.after(&f.fwd).expect("composable"),
        }
    }
}

/// `(X, id_X, X)`.
pub fn full_predicate(x: &Setoid) -> SubsetEmbedding {
    SubsetEmbedding::new(SetoidFn::identity(x)).expect("identity is injective")
}

/// `(X; A, I_A, 𝟙)` with `I_A(a, 0) = i(a)`.
pub fn pred_space(a: &SubsetEmbedding) -> GenChuSpace {
    GenChuSpace::from_fn(&Endofunctor::Identity, a.ambient(), a.sub(), &Setoid::unit(), |x, _| {
        a.inj().apply(x)
    })
    .expect("i is extensional")
}

fn unit_id() -> SetoidFn {
    SetoidFn::identity(&Setoid::unit())
}

/// `E^Pred : Pred → Chu(FinSetoid, Id)`, `u ↦ (u⁰, u⁺, 1)`.
pub struct PredRepresentation {
    src: PredCategory,
    dst: GenChuCategory,
}

impl PredRepresentation {
    pub fn new(src: PredCategory) -> Self {
        let images = src.objects.iter().map(pred_space).collect();
        PredRepresentation {
            dst: GenChuCategory::with_objects(&Endofunctor::Identity, images),
            src,
        }
    }
}

impl Functor for PredRepresentation {
    type Src = PredCategory;
    type Dst = GenChuCategory;
    fn source(&self) -> &PredCategory {
        &self.src
    }
    fn target(&self) -> &GenChuCategory {
        &self.dst
    }
    fn map_ob(&self, a: &SubsetEmbedding) -> GenChuSpace {
        pred_space(a)
    }
    fn map_mor(&self, u: &PredArrow) -> GenChuTransform {
        GenChuTransform::new_unchecked(
            pred_space(&u.src),
            pred_space(&u.dst),
            u.base.clone(),
            u.fwd.clone(),
            unit_id(),
        )
    }
}

/// `E^Set : FinSetoid → Chu(FinSetoid, Id)`, `X ↦ (X; X, I_X, 𝟙)` and
/// `f ↦ (f, f, 1)`.
pub struct SetRepresentation {
    src: FinSetoid,
    dst: GenChuCategory,
}

impl SetRepresentation {
    pub fn new(src: FinSetoid) -> Self {
        let images = src.objects().iter().map(|x| pred_space(&full_predicate(x))).collect();
        SetRepresentation {
            dst: GenChuCategory::with_objects(&Endofunctor::Identity, images),
            src,
        }
    }
}

impl Functor for SetRepresentation {
    type Src = FinSetoid;
    type Dst = GenChuCategory;
    fn source(&self) -> &FinSetoid {
        &self.src
    }
    fn target(&self) -> &GenChuCategory {
        &self.dst
    }
    fn map_ob(&self, x: &Setoid) -> GenChuSpace {
        pred_space(&full_predicate(x))
    }
    fn map_mor(&self, f: &SetoidFn) -> GenChuTransform {
        GenChuTransform::new_unchecked(
            self.map_ob(f.dom()),
            self.map_ob(f.cod()),
            f.clone(),
            f.clone(),
            unit_id(),
        )
    }
}

/// `F : FinSetoid → Pred`, `X ↦ (X, id, X)` and `f ↦ (f, f)`.
pub struct FullPredicates {
    src: FinSetoid,
    dst: PredCategory,
}

impl FullPredicates {
    pub fn new(src: FinSetoid) -> Self {
        let dst = PredCategory::with_objects(src.objects().iter().map(full_predicate).collect());
        FullPredicates { src, dst }
    }
}

impl Functor for FullPredicates {
    type Src = FinSetoid;
    type Dst = PredCategory;
    fn source(&self) -> &FinSetoid {
        &self.src
    }
    fn target(&self) -> &PredCategory {
        &self.dst
    }
    fn map_ob(&self, x: &Setoid) -> SubsetEmbedding {
        full_predicate(x)
    }
    fn map_mor(&self, f: &SetoidFn) -> PredArrow {
        PredArrow {
            src: full_predicate(f.dom()),
            dst: full_predicate(f.cod()),
            base: f.clone(),
            fwd: f.clone(),
        }
    }
}

/// `(f⁰, f⁺) : (x, i) → (y, j)` in `Pred(C)`, with `j ∘ f⁺ = f⁰ ∘ i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PredCArrow<M> {
    src: M,
    dst: M,
    base: M,
    fwd: M,
}

impl<M> PredCArrow<M> {
    pub fn base(&self) -> &M {
        &self.base
    }

    pub fn fwd(&self) -> &M {
        &self.fwd
    }
}

/// `Pred(C)`: monos `i : a ↪ x` of `C` as objects.
#[derive(Clone, Debug)]
pub struct PredC<C: Category> {
    cat: C,
    objects: Vec<C::Mor>,
}

impl<C: Category> PredC<C> {
    /// Every arrow between listed objects of `cat` that is mono against the
    /// listed objects.
    pub fn monos(cat: C) -> Self {
        let obs = cat.objects();
        let objects = obs
            .iter()
            .flat_map(|a| obs.iter().map(move |x| (a, x)))
            .flat_map(|(a, x)| cat.hom(a, x))
            .filter(|i| is_mono(&cat, i))
            .collect();
        PredC { cat, objects }
    }

    pub fn category(&self) -> &C {
        &self.cat
    }
}

impl<C: Category> Category for PredC<C> {
    type Ob = C::Mor;
    type Mor = PredCArrow<C::Mor>;

    fn objects(&self) -> Vec<C::Mor> {
        self.objects.clone()
    }
    fn hom(&self, i: &C::Mor, j: &C::Mor) -> Vec<PredCArrow<C::Mor>> {
        let c = &self.cat;
        let fwds = c.hom(&c.dom(i), &c.dom(j));
        c.hom(&c.cod(i), &c.cod(j))
            .into_iter()
            .flat_map(|base| {
                let target = c.compose(&base, i);
                fwds.iter()
                    .filter(move |f| c.compose(j, f) == target)
                    .map(move |fwd| PredCArrow {
                        src: i.clone(),
                        dst: j.clone(),
                        base: base.clone(),
                        fwd: fwd.clone(),
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    }
    fn dom(&self, f: &Self::Mor) -> C::Mor {
        f.src.clone()
    }
    fn cod(&self, f: &Self::Mor) -> C::Mor {
        f.dst.clone()
    }
    fn identity(&self, i: &C::Mor) -> Self::Mor {
        PredCArrow {
            src: i.clone(),
            dst: i.clone(),
            base: self.cat.identity(&self.cat.cod(i)),
            fwd: self.cat.identity(&self.cat.dom(i)),
        }
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        PredCArrow {
            src: f.src.clone(),
            dst: g.dst.clone(),
            base: self.cat.compose(&g.base, &f.base),
            fwd: self.cat.compose(&g.fwd, &f.fwd),
        }
    }
}

/// `(x; a, i ∘ pr_a, 1)`, with the product and terminal taken from `cat`.
pub fn predc_space(cat: &FinSetoid, i: &SetoidFn) -> GenChuSpace {
    let (a, x) = (i.dom(), i.cod());
    let (_, pr, _) = cat.product(a, &cat.terminal());
    GenChuSpace::new(
        &Endofunctor::Identity,
        x.clone(),
        a.clone(),
        cat.terminal(),
        cat.compose(i, &pr),
    )
    .expect("i ∘ pr_a : a × 1 → x")
}

/// `E^{Pred(C)} : Pred(C) → Chu(C, Id)` for `C` a fragment of `FinSetoid`.
pub struct PredCRepresentation {
    src: PredC<FinSetoid>,
    dst: GenChuCategory,
}

impl PredCRepresentation {
    pub fn new(src: PredC<FinSetoid>) -> Self {
        let images = src.objects.iter().map(|i| predc_space(&src.cat, i)).collect();
        PredCRepresentation {
            dst: GenChuCategory::with_objects(&Endofunctor::Identity, images),
            src,
        }
    }
}

impl Functor for PredCRepresentation {
    type Src = PredC<FinSetoid>;
    type Dst = GenChuCategory;
    fn source(&self) -> &PredC<FinSetoid> {
        &self.src
    }
    fn target(&self) -> &GenChuCategory {
        &self.dst
    }
    fn map_ob(&self, i: &SetoidFn) -> GenChuSpace {
        predc_space(&self.src.cat, i)
    }
    fn map_mor(&self, f: &PredCArrow<SetoidFn>) -> GenChuTransform {
        let one = self.src.cat.terminal();
        GenChuTransform::new_unchecked(
            self.map_ob(&f.src),
            self.map_ob(&f.dst),
            f.base.clone(),
            f.fwd.clone(),
            self.src.cat.identity(&one),
        )
    }
}

/// `(u⁰, u⁺, u⁻) : (X, A) → (Y, B)` between complemented predicates, with
/// `u⁰` strongly extensional and both rectangles commuting.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplPredArrow {
    src: ComplementedSubset,
    dst: ComplementedSubset,
    base: SetoidFn,
    fwd: SetoidFn,
    bwd: SetoidFn,
}

impl ComplPredArrow {
    pub fn new(
        src: &ComplementedSubset,
        dst: &ComplementedSubset,
        base: SetoidFn,
        fwd: SetoidFn,
        bwd: SetoidFn,
    ) -> Result<Self> {
        check_typed(&base, src.ambient(), dst.ambient(), "u⁰")?;
        check_typed(&fwd, src.one().sub(), dst.one().sub(), "u⁺")?;
        check_typed(&bwd, dst.zero().sub(), src.zero().sub(), "u⁻")?;
        if let Some((x, y)) = strong_extensionality_witness(&base, src.apartness(), dst.apartness()) {
            return Err(Error::NotStronglyExtensional { x, y });
        }
        if let Some(a) = square_witness(&base, &fwd, src.one(), dst.one()) {
            return Err(Error::Invalid(format!("j¹ ∘ u⁺ ≠ u⁰ ∘ i¹ at {a}")));
        }
        let y = dst.ambient();
        if let Some(b) = (0..dst.zero().sub().size()).find(|&b| {
            !y.eq(
                base.apply(src.zero().inj().apply(bwd.apply(b))),
                dst.zero().inj().apply(b),
            )
        }) {
            return Err(Error::Invalid(format!("u⁰ ∘ i⁰ ∘ u⁻ ≠ j⁰ at {b}")));
        }
        Ok(ComplPredArrow {
            src: src.clone(),
            dst: dst.clone(),
            base,
            fwd,
            bwd,
        })
    }

    pub fn src(&self) -> &ComplementedSubset {
        &self.src
    }

    pub fn dst(&self) -> &ComplementedSubset {
        &self.dst
    }

    pub fn base(&self) -> &SetoidFn {
        &self.base
    }

    pub fn fwd(&self) -> &SetoidFn {
        &self.fwd
    }

    pub fn bwd(&self) -> &SetoidFn {
        &self.bwd
    }

    /// `u⁺` and `u⁻` are strongly extensional for the inequalities the
    /// components inherit from their ambients.
    pub fn derived_strong_extensionality(&self) -> Result<(), Violation> {
        let inherited = |s: &SubsetEmbedding, ap: &Apartness| canonical_inequality(s, ap);
        let (sa, da) = (self.src.apartness(), self.dst.apartness());
        let one = (inherited(self.src.one(), sa), inherited(self.dst.one(), da));
        if let Some((x, y)) = strong_extensionality_witness(&self.fwd, &one.0, &one.1) {
            return Err(Violation::new(
                "u⁺ strongly extensional",
                format!("u⁺({x}) and u⁺({y}) are apart in B¹ but {x}, {y} are not apart in A¹ for {self:?}"),
            ));
        }
        let zero = (inherited(self.dst.zero(), da), inherited(self.src.zero(), sa));
        if let Some((x, y)) = strong_extensionality_witness(&self.bwd, &zero.0, &zero.1) {
            return Err(Violation::new(
                "u⁻ strongly extensional",
                format!("u⁻({x}) and u⁻({y}) are apart in A⁰ but {x}, {y} are not apart in B⁰ for {self:?}"),
            ));
        }
        Ok(())
    }
}

impl fmt::Debug for ComplPredArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.base, self.fwd, self.bwd)
    }
}

/// Complemented predicates over setoids with one fixed inequality each.
#[derive(Clone, Debug)]
pub struct ComplPredCategory {
    objects: Vec<ComplementedSubset>,
}

impl ComplPredCategory {
    /// Every setoid with at most `cap` elements under denial inequality.
    pub fn capped(cap: usize) -> Self {
        let aps: Vec<Apartness> = Setoid::all_up_to(cap).iter().map(Apartness::denial).collect();
        Self::with_apartnesses(&aps).expect("distinct carriers")
    }

    /// Every canonical complemented subset of each listed setoid. Each setoid
    /// may appear once, since an object forgets nothing but its inequality.
    pub fn with_apartnesses(aps: &[Apartness]) -> Result<Self> {
        for (k, ap) in aps.iter().enumerate() {
            ap.check().map_err(|v| Error::Invalid(v.to_string()))?;
            if aps[..k].iter().any(|o| o.base() == ap.base()) {
                return Err(Error::Invalid(format!("{:?} carries two inequalities", ap.base())));
            }
        }
        let objects = aps.iter().flat_map(ComplementedSubset::all_canonical).collect();
        Ok(ComplPredCategory { objects })
    }

    pub fn with_objects(objects: Vec<ComplementedSubset>) -> Self {
        ComplPredCategory { objects }
    }

    /// Only the objects whose two components are both inhabited.
    pub fn inhabited(self) -> Self {
        let objects = self
            .objects
            .into_iter()
            .filter(|a| !a.one().sub().is_empty() && !a.zero().sub().is_empty())
            .collect();
        ComplPredCategory { objects }
    }

    pub fn objects_ref(&self) -> &[ComplementedSubset] {
        &self.objects
    }
}

impl Category for ComplPredCategory {
    type Ob = ComplementedSubset;
    type Mor = ComplPredArrow;

    fn objects(&self) -> Vec<ComplementedSubset> {
        self.objects.clone()
    }
    fn hom(&self, a: &ComplementedSubset, b: &ComplementedSubset) -> Vec<ComplPredArrow> {
        let (x, y) = (a.ambient(), b.ambient());
        let (a0, b0) = (a.zero(), b.zero());
        let b_reps: Vec<usize> = b0.sub().reps().collect();
        let a_reps: Vec<usize> = a0.sub().reps().collect();
        let mut out = Vec::new();
        for base in SetoidFn::all(x, y) {
            if strong_extensionality_witness(&base, a.apartness(), b.apartness()).is_some() {
                continue;
            }
            let Some(fwd) = lift(&base, a.one(), b.one()) else {
                continue;
            };
            let choices: Vec<Vec<usize>> = b_reps
                .iter()
                .map(|&d| {
                    a_reps
                        .iter()
                        .copied()
                        .filter(|&c| y.eq(base.apply(a0.inj().apply(c)), b0.inj().apply(d)))
                        .collect()
                })
                .collect();
            let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
            for_each_choice(&sizes, |pick| {
                let table = (0..b0.sub().size())
                    .map(|d| {
                        let k = b_reps.iter().position(|&r| r == b0.sub().rep(d)).expect("rep");
                        choices[k][pick[k]]
                    })
                    .collect();
                out.push(ComplPredArrow {
                    src: a.clone(),
                    dst: b.clone(),
                    base: base.clone(),
                    fwd: fwd.clone(),
                    bwd: SetoidFn::new_unchecked(b0.sub().clone(), a0.sub().clone(), table),
                });
            });
        }
        out
    }
    fn dom(&self, f: &ComplPredArrow) -> ComplementedSubset {
        f.src.clone()
    }
    fn cod(&self, f: &ComplPredArrow) -> ComplementedSubset {
        f.dst.clone()
    }
    fn identity(&self, a: &ComplementedSubset) -> ComplPredArrow {
        ComplPredArrow {
            src: a.clone(),
            dst: a.clone(),
            base: SetoidFn::identity(a.ambient()),
            fwd: SetoidFn::identity(a.one().sub()),
            bwd: SetoidFn::identity(a.zero().sub()),
        }
    }
    fn compose(&self, g: &ComplPredArrow, f: &ComplPredArrow) -> ComplPredArrow {
        ComplPredArrow {
            src: f.src.clone(),
            dst: g.dst.clone(),
            base: g.base.after(&f.base).expect("composable"),
            fwd: g.fwd.after(&f.fwd).expect("composable"),
            bwd: f.bwd.after(&g.bwd).expect("composable"),
        }
    }
}

/// `(X; A¹, i¹ × i⁰, A⁰)` over `Id²`.
pub fn compl_pred_space(a: &ComplementedSubset) -> GenChuSpace {
    GenChuSpace::new(
        &Endofunctor::Square,
        a.ambient().clone(),
        a.one().sub().clone(),
        a.zero().sub().clone(),
        fn_product(a.one().inj(), a.zero().inj()),
    )
    .expect("i¹ × i⁰ : A¹ × A⁰ → X × X")
}

/// `E^{Pred≠} : Pred≠ → Chu(FinSetoid, Id²)`, arrows unchanged.
pub struct ComplPredRepresentation {
    src: ComplPredCategory,
    dst: GenChuCategory,
}

impl ComplPredRepresentation {
    pub fn new(src: ComplPredCategory) -> Self {
        let images = src.objects.iter().map(compl_pred_space).collect();
        ComplPredRepresentation {
            dst: GenChuCategory::with_objects(&Endofunctor::Square, images),
            src,
        }
    }
}

impl Functor for ComplPredRepresentation {
    type Src = ComplPredCategory;
    type Dst = GenChuCategory;
    fn source(&self) -> &ComplPredCategory {
        &self.src
    }
    fn target(&self) -> &GenChuCategory {
        &self.dst
    }
    fn map_ob(&self, a: &ComplementedSubset) -> GenChuSpace {
        compl_pred_space(a)
    }
    fn map_mor(&self, u: &ComplPredArrow) -> GenChuTransform {
        GenChuTransform::new_unchecked(
            compl_pred_space(&u.src),
            compl_pred_space(&u.dst),
            u.base.clone(),
            u.fwd.clone(),
            u.bwd.clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{representation_report, verify_functor_equality, Composite, Presentation};
    use crate::genchu::is_genchu_transform;

    #[test]
    fn full_predicate_pairs_by_left_projection() {
        let x = Setoid::discrete(3);
        let s = pred_space(&full_predicate(&x));
        assert_eq!(s.right(), &Setoid::unit());
        for a in 0..3 {
            assert_eq!(s.value(a, 0), a);
        }
    }

    #[test]
    fn pred_is_strict_on_small_carriers() {
        let r = representation_report(&PredRepresentation::new(PredCategory::capped(2)));
        assert!(r.is_strict_representation(), "{:?}", r.first_failure());
    }

    #[test]
    fn set_triangle_commutes() {
        let set = FinSetoid::capped(3);
        let f = FullPredicates::new(set.clone());
        let along = Composite {
            first: f,
            second: PredRepresentation::new(PredCategory::with_objects(
                set.objects().iter().map(full_predicate).collect(),
            )),
        };
        assert!(verify_functor_equality(&along, &SetRepresentation::new(set)).unwrap() > 0);
    }

    #[test]
    fn predc_agrees_with_pred() {
        let cat = FinSetoid::capped(2);
        let p = PredC::monos(cat.clone());
        for i in p.objects() {
            let s = SubsetEmbedding::new(i.clone()).unwrap();
            assert_eq!(predc_space(&cat, &i), pred_space(&s));
        }
        assert!(representation_report(&PredCRepresentation::new(p)).is_strict_representation());
    }

    #[test]
    fn three_point_predicate_endomorphisms_share_their_components() {
        let three = Setoid::discrete(3);
        let neq = Apartness::denial(&three);
        let a = ComplementedSubset::new(
            SubsetEmbedding::canonical(&three, 0b001).unwrap(),
            SubsetEmbedding::canonical(&three, 0b100).unwrap(),
            neq,
        )
        .unwrap();
        let cat = ComplPredCategory::with_objects(vec![a.clone()]);
        // u⁰ must fix 0 and 2; the middle point is free
        let hom = cat.hom(&a, &a);
        assert_eq!(hom.len(), 3);
        assert!(hom.iter().all(|u| u.fwd() == &SetoidFn::identity(a.one().sub())));
        assert!(hom.iter().all(|u| u.bwd() == &SetoidFn::identity(a.zero().sub())));
    }

    #[test]
    fn compl_pred_arrows_are_pentagons() {
        let cat = ComplPredCategory::capped(2);
        for u in Presentation::new(&cat).morphisms() {
            let t = ComplPredRepresentation::new(cat.clone()).map_mor(u);
            assert!(is_genchu_transform(&Endofunctor::Square, &t).unwrap());
            u.derived_strong_extensionality().unwrap();
        }
    }

    #[test]
    fn inhabited_compl_pred_is_strict() {
        let r = representation_report(&ComplPredRepresentation::new(ComplPredCategory::capped(2).inhabited()));
        assert!(r.is_strict_representation(), "{:?}", r.first_failure());
    }

    #[test]
    fn empty_component_breaks_fullness() {
        let r = representation_report(&ComplPredRepresentation::new(ComplPredCategory::capped(2)));
        assert!(r.is_embedding());
        assert!(r.full.is_err());
    }

    #[test]
    fn non_strongly_extensional_base_is_rejected() {
        let two = Setoid::discrete(2);
        let (d, e) = (Apartness::denial(&two), Apartness::empty(&two));
        let none = SubsetEmbedding::canonical(&two, 0).unwrap();
        let a = ComplementedSubset::new(none.clone(), none.clone(), e).unwrap();
        let b = ComplementedSubset::new(none.clone(), none.clone(), d).unwrap();
        let id = SetoidFn::identity(&two);
        let empty = SetoidFn::identity(none.sub());
        let err = ComplPredArrow::new(&a, &b, id, empty.clone(), empty).unwrap_err();
        assert_eq!(err, Error::NotStronglyExtensional { x: 0, y: 1 });
    }
}

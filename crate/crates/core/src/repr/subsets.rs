use std::fmt;

use crate::category::{Category, Functor};
use crate::chu::{ChuCategory, ChuSpace, ChuTransform};
use crate::error::{Error, Result};
use crate::finsetoid::{
    product_setoid, Apartness, ComplementedSubset, ProductWitness, Setoid, SetoidFn, SubsetEmbedding,
};

/// An inclusion `A → B` between subsets of a common ambient setoid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Inclusion {
    src: SubsetEmbedding,
    dst: SubsetEmbedding,
    map: SetoidFn,
}

impl Inclusion {
    pub fn new(src: &SubsetEmbedding, dst: &SubsetEmbedding) -> Option<Self> {
        src.inclusion_into(dst).map(|map| Inclusion {
            src: src.clone(),
            dst: dst.clone(),
            map,
        })
    }

    pub fn src(&self) -> &SubsetEmbedding {
        &self.src
    }

    pub fn dst(&self) -> &SubsetEmbedding {
        &self.dst
    }

    pub fn map(&self) -> &SetoidFn {
        &self.map
    }
}

impl fmt::Debug for Inclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b} ⊆ {:#b}", self.src.image_mask(), self.dst.image_mask())
    }
}

/// The thin category `P(X)` of canonical subsets, in mask order.
#[derive(Clone, Debug)]
pub struct PowersetCategory {
    ambient: Setoid,
    objects: Vec<SubsetEmbedding>,
}

impl PowersetCategory {
    pub fn new(ambient: &Setoid) -> Self {
        PowersetCategory {
            ambient: ambient.clone(),
            objects: SubsetEmbedding::all_canonical(ambient),
        }
    }

    pub fn ambient(&self) -> &Setoid {
        &self.ambient
    }
}

impl Category for PowersetCategory {
    type Ob = SubsetEmbedding;
    type Mor = Inclusion;

    fn objects(&self) -> Vec<SubsetEmbedding> {
        self.objects.clone()
    }
    fn hom(&self, a: &SubsetEmbedding, b: &SubsetEmbedding) -> Vec<Inclusion> {
        Inclusion::new(a, b).into_iter().collect()
    }
    fn dom(&self, f: &Inclusion) -> SubsetEmbedding {
        f.src.clone()
    }
    fn cod(&self, f: &Inclusion) -> SubsetEmbedding {
        f.dst.clone()
    }
    fn identity(&self, a: &SubsetEmbedding) -> Inclusion {
        Inclusion::new(a, a).expect("reflexive")
    }
    fn compose(&self, g: &Inclusion, f: &Inclusion) -> Inclusion {
        Inclusion {
            src: f.src.clone(),
            dst: g.dst.clone(),
            map: g.map.after(&f.map).expect("composable"),
        }
    }
}

/// `(A, I_A, 𝟙)` with `I_A(a, 0) = i(a)`, a space over the ambient setoid.
pub fn subset_space(a: &SubsetEmbedding) -> ChuSpace {
    ChuSpace::from_fn(a.sub(), &Setoid::unit(), a.ambient(), |x, _| a.inj().apply(x)).expect("i is extensional")
}

/// `E^X : P(X) → Chu(FinSetoid, X)`.
pub struct SubsetsRepresentation {
    src: PowersetCategory,
    dst: ChuCategory,
}

impl SubsetsRepresentation {
    pub fn new(ambient: &Setoid) -> Self {
        let src = PowersetCategory::new(ambient);
        let images = src.objects.iter().map(subset_space).collect();
        SubsetsRepresentation {
            dst: ChuCategory::with_objects(ambient, images),
            src,
        }
    }
}

impl Functor for SubsetsRepresentation {
    type Src = PowersetCategory;
    type Dst = ChuCategory;
    fn source(&self) -> &PowersetCategory {
        &self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, a: &SubsetEmbedding) -> ChuSpace {
        subset_space(a)
    }
    fn map_mor(&self, f: &Inclusion) -> ChuTransform {
        ChuTransform::new_unchecked(
            subset_space(&f.src),
            subset_space(&f.dst),
            f.map.clone(),
            SetoidFn::identity(&Setoid::unit()),
        )
    }
}

/// A mono `i : a → γ`, as an object of `Sub(FinSetoid, γ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(SetoidFn);

impl Mono {
    pub fn new(i: SetoidFn) -> Result<Self> {
        match i.non_injective_pair() {
            Some((x, x2)) => Err(Error::NotInjective { x, x2 }),
            None => Ok(Mono(i)),
        }
    }

    pub fn map(&self) -> &SetoidFn {
        &self.0
    }
}

/// `f : (a, i) → (b, j)` with `j ∘ f = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubArrow {
    src: Mono,
    dst: Mono,
    map: SetoidFn,
}

impl SubArrow {
    pub fn new(src: &Mono, dst: &Mono, map: SetoidFn) -> Option<Self> {
        (map.dom() == src.0.dom() && map.cod() == dst.0.dom() && dst.0.after(&map).ok()? == src.0).then(|| SubArrow {
            src: src.clone(),
            dst: dst.clone(),
            map,
        })
    }

    pub fn map(&self) -> &SetoidFn {
        &self.map
    }
}

/// `Sub(FinSetoid, γ)`: monos into `γ` and the maps over `γ` between them.
#[derive(Clone, Debug)]
pub struct SubCategory {
    gamma: Setoid,
    objects: Vec<Mono>,
}

impl SubCategory {
    /// Every mono into `gamma` whose domain is one of `domains`.
    pub fn monos_from(gamma: &Setoid, domains: &[Setoid]) -> Self {
        let objects = domains
            .iter()
            .flat_map(|a| SetoidFn::all(a, gamma))
            .filter(SetoidFn::is_injection)
            .map(Mono)
            .collect();
        SubCategory {
            gamma: gamma.clone(),
            objects,
        }
    }

    /// One mono per canonical subset of `gamma`.
    pub fn canonical(gamma: &Setoid) -> Self {
        let objects = SubsetEmbedding::all_canonical(gamma)
            .into_iter()
            .map(|s| Mono(s.inj().clone()))
            .collect();
        SubCategory {
            gamma: gamma.clone(),
            objects,
        }
    }

    pub fn gamma(&self) -> &Setoid {
        &self.gamma
    }
}

impl Category for SubCategory {
    type Ob = Mono;
    type Mor = SubArrow;

    fn objects(&self) -> Vec<Mono> {
        self.objects.clone()
    }
    fn hom(&self, a: &Mono, b: &Mono) -> Vec<SubArrow> {
        SetoidFn::all(a.0.dom(), b.0.dom())
            .into_iter()
            .filter_map(|f| SubArrow::new(a, b, f))
            .collect()
    }
    fn dom(&self, f: &SubArrow) -> Mono {
        f.src.clone()
    }
    fn cod(&self, f: &SubArrow) -> Mono {
        f.dst.clone()
    }
    fn identity(&self, a: &Mono) -> SubArrow {
        SubArrow {
            src: a.clone(),
            dst: a.clone(),
            map: SetoidFn::identity(a.0.dom()),
        }
    }
    fn compose(&self, g: &SubArrow, f: &SubArrow) -> SubArrow {
        SubArrow {
            src: f.src.clone(),
            dst: g.dst.clone(),
            map: g.map.after(&f.map).expect("composable"),
        }
    }
}

/// `(a, i ∘ pr_a, 1)`, with `pr_a : a × 1 → a` the product projection.
pub fn mono_space(i: &Mono) -> ChuSpace {
    let a = i.0.dom();
    let pr = ProductWitness::new(a, &Setoid::unit()).proj_left;
    let pairing = i.0.after(&pr).expect("pr lands in a");
    ChuSpace::new(a.clone(), Setoid::unit(), pairing).expect("pairing on a × 1")
}

/// `Sub(FinSetoid, γ) → Chu(FinSetoid, γ)`.
pub struct SubRepresentation {
    src: SubCategory,
    dst: ChuCategory,
}

impl SubRepresentation {
    pub fn new(src: SubCategory) -> Self {
        let images = src.objects.iter().map(mono_space).collect();
        SubRepresentation {
            dst: ChuCategory::with_objects(&src.gamma, images),
            src,
        }
    }
}

impl Functor for SubRepresentation {
    type Src = SubCategory;
    type Dst = ChuCategory;
    fn source(&self) -> &SubCategory {
        &self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, a: &Mono) -> ChuSpace {
        mono_space(a)
    }
    fn map_mor(&self, f: &SubArrow) -> ChuTransform {
        ChuTransform::new_unchecked(
            mono_space(&f.src),
            mono_space(&f.dst),
            f.map.clone(),
            SetoidFn::identity(&Setoid::unit()),
        )
    }
}

/// `(f₁, f₀) : A → B` with `f₁ : A¹ → B¹` and `f₀ : B⁰ → A⁰` inclusions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ComplArrow {
    src: ComplementedSubset,
    dst: ComplementedSubset,
    one: SetoidFn,
    zero: SetoidFn,
}

impl ComplArrow {
    pub fn new(src: &ComplementedSubset, dst: &ComplementedSubset) -> Option<Self> {
        Some(ComplArrow {
            one: src.one().inclusion_into(dst.one())?,
            zero: dst.zero().inclusion_into(src.zero())?,
            src: src.clone(),
            dst: dst.clone(),
        })
    }

    pub fn one(&self) -> &SetoidFn {
        &self.one
    }

    pub fn zero(&self) -> &SetoidFn {
        &self.zero
    }
}

impl fmt::Debug for ComplArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.one, self.zero)
    }
}

/// The thin category of complemented subsets of `(X, ≠)`.
#[derive(Clone, Debug)]
pub struct ComplementedCategory {
    apartness: Apartness,
    objects: Vec<ComplementedSubset>,
}

impl ComplementedCategory {
    pub fn new(apartness: &Apartness) -> Self {
        ComplementedCategory {
            apartness: apartness.clone(),
            objects: ComplementedSubset::all_canonical(apartness),
        }
    }

    /// Only the complemented subsets with both components inhabited.
    pub fn inhabited(apartness: &Apartness) -> Self {
        let mut c = Self::new(apartness);
        c.objects
            .retain(|a| !a.one().sub().is_empty() && !a.zero().sub().is_empty());
        c
    }

    pub fn apartness(&self) -> &Apartness {
        &self.apartness
    }
}

impl Category for ComplementedCategory {
    type Ob = ComplementedSubset;
    type Mor = ComplArrow;

    fn objects(&self) -> Vec<ComplementedSubset> {
        self.objects.clone()
    }
    fn hom(&self, a: &ComplementedSubset, b: &ComplementedSubset) -> Vec<ComplArrow> {
        ComplArrow::new(a, b).into_iter().collect()
    }
    fn dom(&self, f: &ComplArrow) -> ComplementedSubset {
        f.src.clone()
    }
    fn cod(&self, f: &ComplArrow) -> ComplementedSubset {
        f.dst.clone()
    }
    fn identity(&self, a: &ComplementedSubset) -> ComplArrow {
        ComplArrow::new(a, a).expect("reflexive")
    }
    fn compose(&self, g: &ComplArrow, f: &ComplArrow) -> ComplArrow {
        ComplArrow {
            src: f.src.clone(),
            dst: g.dst.clone(),
            one: g.one.after(&f.one).expect("composable"),
            zero: f.zero.after(&g.zero).expect("composable"),
        }
    }
}

/// `(A¹, i¹ × i⁰, A⁰)` over `X × X`.
pub fn complemented_space(a: &ComplementedSubset) -> ChuSpace {
    let x = a.ambient();
    let square = ProductWitness::new(x, x);
    let (one, zero) = (a.one().inj(), a.zero().inj());
    ChuSpace::from_fn(one.dom(), zero.dom(), &square.prod, |p, q| {
        square.pair(one.apply(p), zero.apply(q))
    })
    .expect("product of extensional maps")
}

/// `Ē^X : P(X, ≠) → Chu(FinSetoid, X × X)`.
pub struct ComplRepresentation {
    src: ComplementedCategory,
    dst: ChuCategory,
}

impl ComplRepresentation {
    pub fn new(src: ComplementedCategory) -> Self {
        let x = src.apartness.base();
        let images = src.objects.iter().map(complemented_space).collect();
        ComplRepresentation {
            dst: ChuCategory::with_objects(&product_setoid(x, x), images),
            src,
        }
    }
}

impl Functor for ComplRepresentation {
    type Src = ComplementedCategory;
    type Dst = ChuCategory;
    fn source(&self) -> &ComplementedCategory {
        &self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, a: &ComplementedSubset) -> ChuSpace {
        complemented_space(a)
    }
    fn map_mor(&self, f: &ComplArrow) -> ChuTransform {
        ChuTransform::new_unchecked(
            complemented_space(&f.src),
            complemented_space(&f.dst),
            f.one.clone(),
            f.zero.clone(),
        )
    }
}

/// `(X, id_{X×X}, X)` together with a point lying in both carriers, which
/// no pair of disjoint subsets can produce.
#[derive(Clone, Debug)]
pub struct NonSurjectivityWitness {
    pub space: ChuSpace,
    pub point: usize,
}

pub fn image_nonsurjectivity_witness(x: &Setoid) -> Result<NonSurjectivityWitness> {
    if x.is_empty() {
        return Err(Error::Invalid("the witness needs an inhabited setoid".into()));
    }
    let square = product_setoid(x, x);
    let space = ChuSpace::new(x.clone(), x.clone(), SetoidFn::identity(&square)).expect("pairing on X × X");
    Ok(NonSurjectivityWitness { space, point: 0 })
}

/// The first complemented subset whose image is `space`, if any.
pub fn find_preimage(space: &ChuSpace, apartness: &Apartness) -> Option<ComplementedSubset> {
    ComplementedSubset::all_canonical(apartness)
        .into_iter()
        .find(|a| complemented_space(a) == *space)
}

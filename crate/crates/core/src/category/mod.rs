//! Finite category presentations and verifiers for the usual claims about
//! functors between them.

mod finset;
mod presentation;
mod table;
mod verify;

use std::collections::HashMap;
use std::fmt::{self, Debug};
use std::hash::Hash;
use std::sync::{Arc, RwLock};

pub use finset::FinSetoid;
pub use presentation::verify_presentation_laws;
pub use presentation::{verify_category_laws, LawSummary, Presentation};
pub use table::TableCategory;
pub use verify::{
    canonical_product_iso, check_product_iso_naturality, is_epi, is_mono, representation_report,
    verify_functor_equality, verify_functor_laws, verify_isomorphism, verify_naturality, IsoSummary,
    RepresentationReport,
};

/// A category whose hom-sets can be listed.
///
/// `objects` is the fragment the verifiers range over; `hom` must work for any
/// pair of objects of the category, not just listed ones, since functor images
/// may leave the listed fragment.
pub trait Category: Sync {
    type Ob: Clone + Eq + Hash + Debug + Send + Sync;
    type Mor: Clone + Eq + Hash + Debug + Send + Sync;

    fn objects(&self) -> Vec<Self::Ob>;
    fn hom(&self, a: &Self::Ob, b: &Self::Ob) -> Vec<Self::Mor>;
    fn dom(&self, f: &Self::Mor) -> Self::Ob;
    fn cod(&self, f: &Self::Mor) -> Self::Ob;
    fn identity(&self, a: &Self::Ob) -> Self::Mor;
    /// `g ∘ f`. Callers pass composable arrows.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;

    /// A two-sided inverse, found by searching the reverse hom-set.
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        let (a, b) = (self.dom(f), self.cod(f));
        let (ida, idb) = (self.identity(&a), self.identity(&b));
        self.hom(&b, &a)
            .into_iter()
            .find(|g| self.compose(g, f) == ida && self.compose(f, g) == idb)
    }
}

pub type Ob<C> = <C as Category>::Ob;
pub type Mor<C> = <C as Category>::Mor;

impl<C: Category> Category for &C {
    type Ob = C::Ob;
    type Mor = C::Mor;
    fn objects(&self) -> Vec<Self::Ob> {
        (**self).objects()
    }
    fn hom(&self, a: &Self::Ob, b: &Self::Ob) -> Vec<Self::Mor> {
        (**self).hom(a, b)
    }
    fn dom(&self, f: &Self::Mor) -> Self::Ob {
        (**self).dom(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Ob {
        (**self).cod(f)
    }
    fn identity(&self, a: &Self::Ob) -> Self::Mor {
        (**self).identity(a)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        (**self).compose(g, f)
    }
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        (**self).inverse(f)
    }
}

/// Chosen binary products and a terminal object.
pub trait Cartesian: Category {
    /// `a × b` with its two projections.
    fn product(&self, a: &Self::Ob, b: &Self::Ob) -> (Self::Ob, Self::Mor, Self::Mor);
    /// `⟨f, g⟩` for arrows with a common domain.
    fn tuple(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn terminal(&self) -> Self::Ob;

    /// `f × g = ⟨f ∘ π₁, g ∘ π₂⟩`.
    fn product_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor {
        let (_, p1, p2) = self.product(&self.dom(f), &self.dom(g));
        self.tuple(&self.compose(f, &p1), &self.compose(g, &p2))
    }
}

/// A functor between two categories.
pub trait Functor: Sync {
    type Src: Category;
    type Dst: Category;

    fn source(&self) -> &Self::Src;
    fn target(&self) -> &Self::Dst;
    fn map_ob(&self, a: &Ob<Self::Src>) -> Ob<Self::Dst>;
    fn map_mor(&self, f: &Mor<Self::Src>) -> Mor<Self::Dst>;
}

impl<F: Functor> Functor for &F {
    type Src = F::Src;
    type Dst = F::Dst;
    fn source(&self) -> &Self::Src {
        (**self).source()
    }
    fn target(&self) -> &Self::Dst {
        (**self).target()
    }
    fn map_ob(&self, a: &Ob<Self::Src>) -> Ob<Self::Dst> {
        (**self).map_ob(a)
    }
    fn map_mor(&self, f: &Mor<Self::Src>) -> Mor<Self::Dst> {
        (**self).map_mor(f)
    }
}

/// `G ∘ F`.
pub struct Composite<F, G> {
    pub first: F,
    pub second: G,
}

impl<F, G> Functor for Composite<F, G>
where
    F: Functor,
    G: Functor<Src = F::Dst>,
{
    type Src = F::Src;
    type Dst = G::Dst;

    fn source(&self) -> &Self::Src {
        self.first.source()
    }
    fn target(&self) -> &Self::Dst {
        self.second.target()
    }
    fn map_ob(&self, a: &Ob<Self::Src>) -> Ob<Self::Dst> {
        self.second.map_ob(&self.first.map_ob(a))
    }
    fn map_mor(&self, f: &Mor<Self::Src>) -> Mor<Self::Dst> {
        self.second.map_mor(&self.first.map_mor(f))
    }
}

/// The identity functor on a category.
pub struct IdentityFunctor<C>(pub C);

impl<C: Category> Functor for IdentityFunctor<C> {
    type Src = C;
    type Dst = C;
    fn source(&self) -> &C {
        &self.0
    }
    fn target(&self) -> &C {
        &self.0
    }
    fn map_ob(&self, a: &C::Ob) -> C::Ob {
        a.clone()
    }
    fn map_mor(&self, f: &C::Mor) -> C::Mor {
        f.clone()
    }
}

/// A failed law, with a description of the offending arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub detail: String,
}

impl Violation {
    pub fn new(law: &'static str, detail: impl Into<String>) -> Self {
        Violation {
            law,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.law, self.detail)
    }
}

impl std::error::Error for Violation {}

type HomCache<C> = HashMap<(<C as Category>::Ob, <C as Category>::Ob), Arc<Vec<<C as Category>::Mor>>>;

/// Caches hom-sets of an underlying category per ordered pair of objects.
pub struct Memoized<C: Category> {
    inner: C,
    cache: RwLock<HomCache<C>>,
}

impl<C: Category> Memoized<C> {
    pub fn new(inner: C) -> Self {
        Memoized {
            inner,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn inner(&self) -> &C {
        &self.inner
    }

    pub fn hom_shared(&self, a: &C::Ob, b: &C::Ob) -> Arc<Vec<C::Mor>> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.cache.read().expect("hom cache poisoned").get(&key) {
            return v.clone();
        }
        let v = Arc::new(self.inner.hom(a, b));
        self.cache
            .write()
            .expect("hom cache poisoned")
            .entry(key)
            .or_insert(v)
            .clone()
    }

    pub fn cached_pairs(&self) -> usize {
        self.cache.read().expect("hom cache poisoned").len()
    }
}

impl<C: Category> Category for Memoized<C> {
    type Ob = C::Ob;
    type Mor = C::Mor;
    fn objects(&self) -> Vec<Self::Ob> {
        self.inner.objects()
    }
    fn hom(&self, a: &Self::Ob, b: &Self::Ob) -> Vec<Self::Mor> {
        self.hom_shared(a, b).as_ref().clone()
    }
    fn dom(&self, f: &Self::Mor) -> Self::Ob {
        self.inner.dom(f)
    }
    fn cod(&self, f: &Self::Mor) -> Self::Ob {
        self.inner.cod(f)
    }
    fn identity(&self, a: &Self::Ob) -> Self::Mor {
        self.inner.identity(a)
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        self.inner.compose(g, f)
    }
    fn inverse(&self, f: &Self::Mor) -> Option<Self::Mor> {
        self.inner.inverse(f)
    }
}

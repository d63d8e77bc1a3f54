use std::fmt;
use std::sync::Arc;

use crate::category::{Category, FinSetoid, Functor, Violation};
use crate::error::{Error, Result};
use crate::finsetoid::{fn_product, product_setoid, Setoid, SetoidFn};

/// An endofunctor on finite setoids.
///
/// Composites are kept normalized: nested composites are flattened, identities
/// dropped, and anything applied after a constant functor is folded into
/// the constant. Structural equality is then equality of the normal forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Endofunctor {
    Identity,
    /// `X ↦ X × X`, `f ↦ f × f`.
    Square,
    /// `X ↦ γ`, `f ↦ 1_γ`.
    Constant(Setoid),
    /// Applied left to right; at least two factors, none an identity.
    Composite(Vec<Endofunctor>),
    Custom(Arc<CustomEndofunctor>),
}

/// An endofunctor given by explicit object and arrow tables on a fragment.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CustomEndofunctor {
    pub name: String,
    pub objects: Vec<(Setoid, Setoid)>,
    pub arrows: Vec<(SetoidFn, SetoidFn)>,
}

impl Endofunctor {
    /// `then ∘ first`.
    pub fn then(&self, then: &Endofunctor) -> Endofunctor {
        let mut factors = Vec::new();
        for g in [self, then] {
            match g {
                Endofunctor::Composite(fs) => factors.extend(fs.iter().cloned()),
                other => factors.push(other.clone()),
            }
        }
        let mut out: Vec<Endofunctor> = Vec::new();
        for g in factors {
            match (out.last(), &g) {
                (_, Endofunctor::Identity) => {}
                (Some(Endofunctor::Constant(c)), _) => {
                    let image = g.ob(c);
                    *out.last_mut().expect("non-empty") = Endofunctor::Constant(image);
                }
                (_, Endofunctor::Constant(_)) => {
                    out.clear();
                    out.push(g);
                }
                _ => out.push(g),
            }
        }
        match out.len() {
            0 => Endofunctor::Identity,
            1 => out.pop().expect("one factor"),
            _ => Endofunctor::Composite(out),
        }
    }

    /// The constant functor at the terminal setoid.
    pub fn terminal() -> Self {
        Endofunctor::Constant(Setoid::unit())
    }

    pub fn try_ob(&self, x: &Setoid) -> Option<Setoid> {
        match self {
            Endofunctor::Identity => Some(x.clone()),
            Endofunctor::Square => Some(product_setoid(x, x)),
            Endofunctor::Constant(c) => Some(c.clone()),
            Endofunctor::Composite(fs) => fs.iter().try_fold(x.clone(), |y, g| g.try_ob(&y)),
            Endofunctor::Custom(c) => c.objects.iter().find(|(s, _)| s == x).map(|(_, t)| t.clone()),
        }
    }

    pub fn try_mor(&self, f: &SetoidFn) -> Option<SetoidFn> {
        match self {
            Endofunctor::Identity => Some(f.clone()),
            Endofunctor::Square => Some(fn_product(f, f)),
            Endofunctor::Constant(c) => Some(SetoidFn::identity(c)),
            Endofunctor::Composite(fs) => fs.iter().try_fold(f.clone(), |h, g| g.try_mor(&h)),
            Endofunctor::Custom(c) => c.arrows.iter().find(|(s, _)| s == f).map(|(_, t)| t.clone()),
        }
    }

    /// Panics outside the tables of a custom functor; use
    /// [`Endofunctor::covers`] first.
    pub fn ob(&self, x: &Setoid) -> Setoid {
        self.try_ob(x)
            .unwrap_or_else(|| panic!("{self:?} is undefined at {x:?}"))
    }

    pub fn mor(&self, f: &SetoidFn) -> SetoidFn {
        self.try_mor(f)
            .unwrap_or_else(|| panic!("{self:?} is undefined at {f:?}"))
    }

    /// Defined on every listed setoid and every map between them.
    pub fn covers(&self, objects: &[Setoid]) -> bool {
        objects.iter().all(|x| self.try_ob(x).is_some())
            && objects
                .iter()
                .flat_map(|a| objects.iter().map(move |b| (a, b)))
                .all(|(a, b)| SetoidFn::all(a, b).iter().all(|f| self.try_mor(f).is_some()))
    }

    /// The functor restricted to a fragment of finite setoids, with the
    /// images as its target fragment.
    pub fn on(&self, fragment: &FinSetoid) -> Result<EndofunctorOn> {
        let objects = fragment.objects();
        if !self.covers(&objects) {
            return Err(Error::Undefined(format!("{self:?} does not cover the fragment")));
        }
        let mut images: Vec<Setoid> = objects.iter().map(|x| self.ob(x)).collect();
        images.sort();
        images.dedup();
        Ok(EndofunctorOn {
            functor: self.clone(),
            src: fragment.clone(),
            dst: FinSetoid::with_objects(images),
        })
    }
}

impl fmt::Debug for Endofunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endofunctor::Identity => write!(f, "Id"),
            Endofunctor::Square => write!(f, "Id²"),
            Endofunctor::Constant(c) => write!(f, "Const({c:?})"),
            Endofunctor::Composite(fs) => {
                let names: Vec<String> = fs.iter().rev().map(|g| format!("{g:?}")).collect();
                write!(f, "{}", names.join("∘"))
            }
            Endofunctor::Custom(c) => write!(f, "{}", c.name),
        }
    }
}

/// An [`Endofunctor`] presented as a functor between fragments.
pub struct EndofunctorOn {
    functor: Endofunctor,
    src: FinSetoid,
    dst: FinSetoid,
}

impl Functor for EndofunctorOn {
    type Src = FinSetoid;
    type Dst = FinSetoid;
    fn source(&self) -> &FinSetoid {
        &self.src
    }
    fn target(&self) -> &FinSetoid {
        &self.dst
    }
    fn map_ob(&self, a: &Setoid) -> Setoid {
        self.functor.ob(a)
    }
    fn map_mor(&self, f: &SetoidFn) -> SetoidFn {
        self.functor.mor(f)
    }
}

/// A natural transformation between endofunctors, described by how its
/// components are computed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum NatTrans {
    Identity(Endofunctor),
    /// `Id ⇒ Id²`, `x ↦ (x, x)`.
    Diagonal,
    /// `Id² ⇒ Id`, onto the left or right factor.
    Projection {
        right: bool,
    },
    /// `Γ ⇒ Const(𝟙)`.
    ToTerminal(Endofunctor),
    /// `Const(γ) ⇒ Const(δ)` with every component `u`.
    ConstantMap(SetoidFn),
    /// `μ ∘ η`, with `η` applied first.
    Vertical {
        outer: Box<NatTrans>,
        inner: Box<NatTrans>,
    },
    /// `(θ ∗ η)_a = θ_{F(a)} ∘ G(η_a)` for `η : F∘Γ ⇒ Δ∘F` and
    /// `θ : G∘Δ ⇒ E∘G`.
    Star {
        theta: Box<NatTrans>,
        eta: Box<NatTrans>,
        f: Endofunctor,
        g: Endofunctor,
    },
    /// Whiskering `H η : H∘Γ ⇒ H∘Δ`.
    Whisker {
        after: Endofunctor,
        inner: Box<NatTrans>,
    },
    Custom(Arc<CustomNatTrans>),
}

/// Explicit components, used to exercise the naturality check.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CustomNatTrans {
    pub name: String,
    pub src: Endofunctor,
    pub dst: Endofunctor,
    pub components: Vec<(Setoid, SetoidFn)>,
}

impl NatTrans {
    pub fn src(&self) -> Endofunctor {
        match self {
            NatTrans::Identity(g) => g.clone(),
            NatTrans::Diagonal => Endofunctor::Identity,
            NatTrans::Projection { .. } => Endofunctor::Square,
            NatTrans::ToTerminal(g) => g.clone(),
            NatTrans::ConstantMap(u) => Endofunctor::Constant(u.dom().clone()),
            NatTrans::Vertical { inner, .. } => inner.src(),
            NatTrans::Star { eta, g, .. } => eta.src().then(g),
            NatTrans::Whisker { after, inner } => inner.src().then(after),
            NatTrans::Custom(c) => c.src.clone(),
        }
    }

    pub fn dst(&self) -> Endofunctor {
        match self {
            NatTrans::Identity(g) => g.clone(),
            NatTrans::Diagonal => Endofunctor::Square,
            NatTrans::Projection { .. } => Endofunctor::Identity,
            NatTrans::ToTerminal(_) => Endofunctor::terminal(),
            NatTrans::ConstantMap(u) => Endofunctor::Constant(u.cod().clone()),
            NatTrans::Vertical { outer, .. } => outer.dst(),
            // θ : G∘Δ ⇒ E∘G, so the target is E∘G∘F
            NatTrans::Star { theta, f, .. } => f.then(&theta.dst()),
            NatTrans::Whisker { after, inner } => inner.dst().then(after),
            NatTrans::Custom(c) => c.dst.clone(),
        }
    }

    pub fn try_component(&self, x: &Setoid) -> Option<SetoidFn> {
        match self {
            NatTrans::Identity(g) => Some(SetoidFn::identity(&g.try_ob(x)?)),
            NatTrans::Diagonal => {
                let sq = product_setoid(x, x);
                let n = x.size();
                Some(SetoidFn::new(x.clone(), sq, (0..n).map(|p| p * n + p).collect()).expect("diagonal"))
            }
            NatTrans::Projection { right } => {
                let n = x.size();
                let table = (0..n * n).map(|p| if *right { p % n } else { p / n }).collect();
                Some(SetoidFn::new(product_setoid(x, x), x.clone(), table).expect("projection"))
            }
            NatTrans::ToTerminal(g) => SetoidFn::constant(&g.try_ob(x)?, &Setoid::unit(), 0).ok(),
            NatTrans::ConstantMap(u) => Some(u.clone()),
            NatTrans::Vertical { outer, inner } => {
                let first = inner.try_component(x)?;
                outer.try_component(x)?.after(&first).ok()
            }
            NatTrans::Star { theta, eta, f, g } => {
                let g_eta = g.try_mor(&eta.try_component(x)?)?;
                theta.try_component(&f.try_ob(x)?)?.after(&g_eta).ok()
            }
            NatTrans::Whisker { after, inner } => after.try_mor(&inner.try_component(x)?),
            NatTrans::Custom(c) => c.components.iter().find(|(s, _)| s == x).map(|(_, m)| m.clone()),
        }
    }

    pub fn component(&self, x: &Setoid) -> SetoidFn {
        self.try_component(x)
            .unwrap_or_else(|| panic!("{self:?} has no component at {x:?}"))
    }

    /// Component typing and the naturality square for every map of the
    /// fragment.
    pub fn verify_natural(&self, fragment: &FinSetoid) -> Result<usize, Violation> {
        let (s, d) = (self.src(), self.dst());
        let on = |g: &Endofunctor| g.on(fragment).map_err(|e| Violation::new("coverage", e.to_string()));
        let (sf, df) = (on(&s)?, on(&d)?);
        for x in fragment.objects() {
            if self.try_component(&x).is_none() {
                return Err(Violation::new(
                    "coverage",
                    format!("{self:?} has no component at {x:?}"),
                ));
            }
        }
        // components live in a category containing both image fragments
        let mut images = sf.target().objects();
        images.extend(df.target().objects());
        images.sort();
        images.dedup();
        let both = FinSetoid::with_objects(images);
        let sf = Retargeted {
            inner: sf,
            dst: both.clone(),
        };
        let df = Retargeted { inner: df, dst: both };
        crate::category::verify_naturality(&sf, &df, |x| self.component(x))
    }

    /// Every component is an injection on the fragment.
    pub fn is_componentwise_injective(&self, fragment: &FinSetoid) -> bool {
        fragment.objects().iter().all(|x| self.component(x).is_injection())
    }
}

impl fmt::Debug for NatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatTrans::Identity(g) => write!(f, "1_{g:?}"),
            NatTrans::Diagonal => write!(f, "δ"),
            NatTrans::Projection { right } => write!(f, "π{}", if *right { 2 } else { 1 }),
            NatTrans::ToTerminal(g) => write!(f, "!_{g:?}"),
            NatTrans::ConstantMap(u) => write!(f, "const({u:?})"),
            NatTrans::Vertical { outer, inner } => write!(f, "({outer:?} ∘ {inner:?})"),
            NatTrans::Star { theta, eta, .. } => write!(f, "({theta:?} ∗ {eta:?})"),
            NatTrans::Whisker { after, inner } => write!(f, "{after:?}{inner:?}"),
            NatTrans::Custom(c) => write!(f, "{}", c.name),
        }
    }
}

struct Retargeted {
    inner: EndofunctorOn,
    dst: FinSetoid,
}

impl Functor for Retargeted {
    type Src = FinSetoid;
    type Dst = FinSetoid;
    fn source(&self) -> &FinSetoid {
        self.inner.source()
    }
    fn target(&self) -> &FinSetoid {
        &self.dst
    }
    fn map_ob(&self, a: &Setoid) -> Setoid {
        self.inner.map_ob(a)
    }
    fn map_mor(&self, f: &SetoidFn) -> SetoidFn {
        self.inner.map_mor(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composites_normalize() {
        let id = Endofunctor::Identity;
        assert_eq!(id.then(&Endofunctor::Square), Endofunctor::Square);
        let sq2 = Endofunctor::Square.then(&Endofunctor::Square);
        assert_eq!(sq2.ob(&Setoid::discrete(2)).size(), 16);
        let c = Endofunctor::Constant(Setoid::discrete(2)).then(&Endofunctor::Square);
        assert_eq!(
            c,
            Endofunctor::Constant(product_setoid(&Setoid::discrete(2), &Setoid::discrete(2)))
        );
        assert_eq!(
            Endofunctor::Square.then(&Endofunctor::terminal()),
            Endofunctor::terminal()
        );
        // associativity of the normal form
        let a = Endofunctor::Square.then(&sq2);
        let b = sq2.then(&Endofunctor::Square);
        assert_eq!(a, b);
    }

    #[test]
    fn standard_transformations_are_natural() {
        let frag = FinSetoid::capped(2);
        for eta in [
            NatTrans::Identity(Endofunctor::Square),
            NatTrans::Diagonal,
            NatTrans::Projection { right: false },
            NatTrans::Projection { right: true },
            NatTrans::ToTerminal(Endofunctor::Square),
        ] {
            assert!(eta.verify_natural(&frag).is_ok(), "{eta:?}");
        }
    }

    #[test]
    fn swap_components_are_not_natural() {
        let frag = FinSetoid::capped(2);
        let two = Setoid::discrete(2);
        let mut components: Vec<(Setoid, SetoidFn)> = frag
            .objects()
            .iter()
            .map(|x| (x.clone(), SetoidFn::identity(x)))
            .collect();
        for (x, c) in components.iter_mut() {
            if *x == two {
                *c = SetoidFn::new(two.clone(), two.clone(), vec![1, 0]).unwrap();
            }
        }
        let eta = NatTrans::Custom(Arc::new(CustomNatTrans {
            name: "swap".into(),
            src: Endofunctor::Identity,
            dst: Endofunctor::Identity,
            components,
        }));
        assert_eq!(eta.verify_natural(&frag).unwrap_err().law, "naturality");
    }
}

use super::PPFunctor;
use crate::category::{verify_functor_equality, Composite, FinSetoid, Functor, Violation};
use crate::chu::{ChuCategory, ChuSpace, ChuTransform};
use crate::error::{Error, Result};
use crate::finsetoid::{Setoid, SetoidFn};
use crate::genchu::{Endofunctor, GenChuCategory, GenChuSpace, GenChuTransform, NatTrans};

/// `(F, φ) : (FinSetoid, γ) → (FinSetoid, δ)` with `φ : F(γ) → δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrothMorphism {
    functor: PPFunctor,
    gamma: Setoid,
    phi: SetoidFn,
}

impl GrothMorphism {
    pub fn new(functor: PPFunctor, gamma: &Setoid, phi: SetoidFn) -> Result<Self> {
        if phi.dom() != &functor.ob(gamma) {
            return Err(Error::Mismatch(format!(
                "φ must start at F(γ) = {:?}",
                functor.ob(gamma)
            )));
        }
        Ok(GrothMorphism {
            functor,
            gamma: gamma.clone(),
            phi,
        })
    }

    /// `(Id, 1_γ)`.
    pub fn identity(gamma: &Setoid) -> Self {
        GrothMorphism {
            functor: PPFunctor::identity(),
            gamma: gamma.clone(),
            phi: SetoidFn::identity(gamma),
        }
    }

    pub fn functor(&self) -> &PPFunctor {
        &self.functor
    }

    pub fn gamma(&self) -> &Setoid {
        &self.gamma
    }

    pub fn delta(&self) -> &Setoid {
        self.phi.cod()
    }

    pub fn phi(&self) -> &SetoidFn {
        &self.phi
    }
}

/// `(G, θ) ∘ (F, φ) = (G ∘ F, θ ∘ G(φ))`.
pub fn groth_compose(g: &GrothMorphism, f: &GrothMorphism) -> Result<GrothMorphism> {
    if g.gamma() != f.delta() {
        return Err(Error::Mismatch("morphisms are not composable".into()));
    }
    Ok(GrothMorphism {
        functor: f.functor.then(&g.functor),
        gamma: f.gamma.clone(),
        phi: g.phi.after(&g.functor.mor(&f.phi))?,
    })
}

/// `F_* : Chu(γ) → Chu(δ)`,
/// `(a, f, b) ↦ (F(a), φ ∘ F(f) ∘ F_ab, F(b))` and `(φ⁺, φ⁻) ↦ (F(φ⁺), F(φ⁻))`.
pub struct Pushforward {
    morphism: GrothMorphism,
    src: ChuCategory,
    dst: ChuCategory,
}

impl Pushforward {
    pub fn new(morphism: GrothMorphism, src: ChuCategory) -> Result<Self> {
        if src.gamma() != morphism.gamma() {
            return Err(Error::Mismatch("source is not over γ".into()));
        }
        let mut images = src
            .objects_ref()
            .iter()
            .map(|s| push_space(&morphism, s))
            .collect::<Result<Vec<_>>>()?;
        images.sort();
        images.dedup();
        Ok(Pushforward {
            dst: ChuCategory::with_objects(morphism.delta(), images),
            morphism,
            src,
        })
    }

    pub fn morphism(&self) -> &GrothMorphism {
        &self.morphism
    }
}

fn push_space(m: &GrothMorphism, s: &ChuSpace) -> Result<ChuSpace> {
    let f = &m.functor;
    let iso = f.product_iso(s.left(), s.right())?;
    let pairing = m.phi.after(&f.mor(s.pairing()))?.after(&iso)?;
    ChuSpace::new(f.ob(s.left()), f.ob(s.right()), pairing)
}

impl Functor for Pushforward {
    type Src = ChuCategory;
    type Dst = ChuCategory;
    fn source(&self) -> &ChuCategory {
        &self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, s: &ChuSpace) -> ChuSpace {
        push_space(&self.morphism, s).expect("F preserves this product")
    }
    fn map_mor(&self, t: &ChuTransform) -> ChuTransform {
        let f = &self.morphism.functor;
        ChuTransform::new_unchecked(
            self.map_ob(t.src()),
            self.map_ob(t.dst()),
            f.mor(t.fwd()),
            f.mor(t.bwd()),
        )
    }
}

/// `(G ∘ F)_* = G_* ∘ F_*` as tables on the source fragment.
pub fn verify_global_composition(g: &GrothMorphism, f: &GrothMorphism, src: &ChuCategory) -> Result<usize, Violation> {
    let lift = |e: Error| Violation::new("typing", e.to_string());
    let gf = groth_compose(g, f).map_err(lift)?;
    let whole = Pushforward::new(gf, src.clone()).map_err(lift)?;
    let first = Pushforward::new(f.clone(), src.clone()).map_err(lift)?;
    let second = Pushforward::new(g.clone(), first.target().clone()).map_err(lift)?;
    verify_functor_equality(&whole, &Composite { first, second })
}

/// `(F, η) : (FinSetoid, Γ) → (FinSetoid, Δ)` with `η : F∘Γ ⇒ Δ∘F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenGrothMorphism {
    functor: PPFunctor,
    gamma: Endofunctor,
    delta: Endofunctor,
    eta: NatTrans,
}

impl GenGrothMorphism {
    /// Checks the typing of `η` and its naturality on `fragment`.
    pub fn new(
        functor: PPFunctor,
        gamma: Endofunctor,
        delta: Endofunctor,
        eta: NatTrans,
        fragment: &FinSetoid,
    ) -> Result<Self, Violation> {
        let m = GenGrothMorphism {
            functor,
            gamma,
            delta,
            eta,
        };
        m.check(fragment)?;
        Ok(m)
    }

    /// `(Id, 1_Γ)`.
    pub fn identity(gamma: &Endofunctor) -> Self {
        GenGrothMorphism {
            functor: PPFunctor::identity(),
            gamma: gamma.clone(),
            delta: gamma.clone(),
            eta: NatTrans::Identity(gamma.clone()),
        }
    }

    pub fn check(&self, fragment: &FinSetoid) -> Result<usize, Violation> {
        let f = self.functor.functor();
        let (src, dst) = (self.gamma.then(f), f.then(&self.delta));
        if self.eta.src() != src || self.eta.dst() != dst {
            return Err(Violation::new(
                "typing",
                format!(
                    "{:?} runs {:?} ⇒ {:?}, not {src:?} ⇒ {dst:?}",
                    self.eta,
                    self.eta.src(),
                    self.eta.dst()
                ),
            ));
        }
        self.eta.verify_natural(fragment)
    }

    pub fn functor(&self) -> &PPFunctor {
        &self.functor
    }

    pub fn gamma(&self) -> &Endofunctor {
        &self.gamma
    }

    pub fn delta(&self) -> &Endofunctor {
        &self.delta
    }

    pub fn eta(&self) -> &NatTrans {
        &self.eta
    }
}

/// `(G, θ) ∘ (F, η) = (G ∘ F, θ ∗ η)`.
pub fn gen_groth_compose(g: &GenGrothMorphism, f: &GenGrothMorphism) -> Result<GenGrothMorphism> {
    if g.gamma != f.delta {
        return Err(Error::Mismatch("morphisms are not composable".into()));
    }
    Ok(GenGrothMorphism {
        functor: f.functor.then(&g.functor),
        gamma: f.gamma.clone(),
        delta: g.delta.clone(),
        eta: star_product(&g.eta, &f.eta, f.functor.functor(), g.functor.functor()),
    })
}

/// `(θ ∗ η)_a = θ_{F(a)} ∘ G(η_a)`.
pub fn star_product(theta: &NatTrans, eta: &NatTrans, f: &Endofunctor, g: &Endofunctor) -> NatTrans {
    NatTrans::Star {
        theta: Box::new(theta.clone()),
        eta: Box::new(eta.clone()),
        f: f.clone(),
        g: g.clone(),
    }
}

/// `F_* : Chu(FinSetoid, Γ) → Chu(FinSetoid, Δ)`,
/// `(x; a, f, b) ↦ (F(x); F(a), η_x ∘ F(f) ∘ F_ab, F(b))`.
pub struct GenPushforward {
    morphism: GenGrothMorphism,
    src: GenChuCategory,
    dst: GenChuCategory,
}

impl GenPushforward {
    pub fn new(morphism: GenGrothMorphism, src: GenChuCategory) -> Result<Self> {
        if src.functor() != morphism.gamma() {
            return Err(Error::Mismatch("source is not over Γ".into()));
        }
        let mut images = src
            .objects_ref()
            .iter()
            .map(|s| push_gen(&morphism, s))
            .collect::<Result<Vec<_>>>()?;
        images.sort();
        images.dedup();
        Ok(GenPushforward {
            dst: GenChuCategory::with_objects(morphism.delta(), images),
            morphism,
            src,
        })
    }
}

fn push_gen(m: &GenGrothMorphism, s: &GenChuSpace) -> Result<GenChuSpace> {
    let f = &m.functor;
    let eta = m
        .eta
        .try_component(s.anchor())
        .ok_or_else(|| Error::Undefined(format!("{:?} at {:?}", m.eta, s.anchor())))?;
    let iso = f.product_iso(s.left(), s.right())?;
    let pairing = eta.after(&f.mor(s.pairing()))?.after(&iso)?;
    GenChuSpace::new(&m.delta, f.ob(s.anchor()), f.ob(s.left()), f.ob(s.right()), pairing)
}

impl Functor for GenPushforward {
    type Src = GenChuCategory;
    type Dst = GenChuCategory;
    fn source(&self) -> &GenChuCategory {
        &self.src
    }
    fn target(&self) -> &GenChuCategory {
        &self.dst
    }
    fn map_ob(&self, s: &GenChuSpace) -> GenChuSpace {
        push_gen(&self.morphism, s).expect("F preserves this product")
    }
    fn map_mor(&self, t: &GenChuTransform) -> GenChuTransform {
        let f = &self.morphism.functor;
        GenChuTransform::new_unchecked(
            self.map_ob(t.src()),
            self.map_ob(t.dst()),
            f.mor(t.anchor_map()),
            f.mor(t.fwd()),
            f.mor(t.bwd()),
        )
    }
}

/// `(G ∘ F, θ ∗ η)_* = G_* ∘ F_*` as tables on the source fragment.
pub fn verify_gen_global_composition(
    g: &GenGrothMorphism,
    f: &GenGrothMorphism,
    src: &GenChuCategory,
) -> Result<usize, Violation> {
    let lift = |e: Error| Violation::new("typing", e.to_string());
    let gf = gen_groth_compose(g, f).map_err(lift)?;
    let whole = GenPushforward::new(gf, src.clone()).map_err(lift)?;
    let first = GenPushforward::new(f.clone(), src.clone()).map_err(lift)?;
    let second = GenPushforward::new(g.clone(), first.target().clone()).map_err(lift)?;
    verify_functor_equality(&whole, &Composite { first, second })
}

use super::{Endofunctor, GenChuCategory, GenChuSpace, GenChuTransform, NatTrans};
use crate::category::{FinSetoid, Functor, Violation};
use crate::chu::{ChuCategory, ChuSpace, ChuTransform};
use crate::finsetoid::{Setoid, SetoidFn};

/// `E^γ : Chu(FinSetoid, γ) → Chu(FinSetoid, Const(γ))`,
/// `(a, f, b) ↦ (γ; a, f, b)` and `(φ⁺, φ⁻) ↦ (1_γ, φ⁺, φ⁻)`.
pub struct EmbedConstant {
    gamma: Setoid,
    src: ChuCategory,
    dst: GenChuCategory,
}

impl EmbedConstant {
    pub fn new(src: ChuCategory) -> Self {
        let gamma = src.gamma().clone();
        let functor = Endofunctor::Constant(gamma.clone());
        let images = src.objects_ref().iter().map(|s| anchor_at(&gamma, s)).collect();
        EmbedConstant {
            dst: GenChuCategory::with_objects(&functor, images),
            gamma,
            src,
        }
    }
}

fn anchor_at(gamma: &Setoid, s: &ChuSpace) -> GenChuSpace {
    GenChuSpace::from_parts_unchecked(gamma.clone(), s.left().clone(), s.right().clone(), s.pairing().clone())
}

/// Drops the anchor of a space over a constant functor.
pub fn forget_anchor(s: &GenChuSpace) -> ChuSpace {
    ChuSpace::new(s.left().clone(), s.right().clone(), s.pairing().clone()).expect("pairing on left × right")
}

impl Functor for EmbedConstant {
    type Src = ChuCategory;
    type Dst = GenChuCategory;
    fn source(&self) -> &ChuCategory {
        &self.src
    }
    fn target(&self) -> &GenChuCategory {
        &self.dst
    }
    fn map_ob(&self, s: &ChuSpace) -> GenChuSpace {
        anchor_at(&self.gamma, s)
    }
    fn map_mor(&self, t: &ChuTransform) -> GenChuTransform {
        GenChuTransform::new_unchecked(
            anchor_at(&self.gamma, t.src()),
            anchor_at(&self.gamma, t.dst()),
            SetoidFn::identity(&self.gamma),
            t.fwd().clone(),
            t.bwd().clone(),
        )
    }
}

/// `Chu(η) : Chu(FinSetoid, Γ) → Chu(FinSetoid, Δ)` for `η : Γ ⇒ Δ`,
/// `(x; a, f, b) ↦ (x; a, η_x ∘ f, b)` and transforms unchanged.
pub struct GenLocalPushforward {
    eta: NatTrans,
    src: GenChuCategory,
    dst: GenChuCategory,
}

impl GenLocalPushforward {
    /// Rejects `η` unless it is natural on the anchors of the source and
    /// runs out of the source functor.
    pub fn new(eta: NatTrans, src: GenChuCategory) -> Result<Self, Violation> {
        if eta.src() != *src.functor() {
            return Err(Violation::new(
                "typing",
                format!("{eta:?} starts at {:?}, not {:?}", eta.src(), src.functor()),
            ));
        }
        let mut anchors: Vec<Setoid> = src.objects_ref().iter().map(|s| s.anchor().clone()).collect();
        anchors.sort();
        anchors.dedup();
        eta.verify_natural(&FinSetoid::with_objects(anchors))?;
        let mut images: Vec<GenChuSpace> = src.objects_ref().iter().map(|s| push(&eta, s)).collect();
        images.sort();
        images.dedup();
        Ok(GenLocalPushforward {
            dst: GenChuCategory::with_objects(&eta.dst(), images),
            eta,
            src,
        })
    }

    pub fn eta(&self) -> &NatTrans {
        &self.eta
    }
}

fn push(eta: &NatTrans, s: &GenChuSpace) -> GenChuSpace {
    let pairing = eta
        .component(s.anchor())
        .after(s.pairing())
        .expect("pairing lands in Γ(x)");
    GenChuSpace::from_parts_unchecked(s.anchor().clone(), s.left().clone(), s.right().clone(), pairing)
}

impl Functor for GenLocalPushforward {
    type Src = GenChuCategory;
    type Dst = GenChuCategory;
    fn source(&self) -> &GenChuCategory {
        &self.src
    }
    fn target(&self) -> &GenChuCategory {
        &self.dst
    }
    fn map_ob(&self, s: &GenChuSpace) -> GenChuSpace {
        push(&self.eta, s)
    }
    fn map_mor(&self, t: &GenChuTransform) -> GenChuTransform {
        GenChuTransform::new_unchecked(
            push(&self.eta, t.src()),
            push(&self.eta, t.dst()),
            t.anchor_map().clone(),
            t.fwd().clone(),
            t.bwd().clone(),
        )
    }
}

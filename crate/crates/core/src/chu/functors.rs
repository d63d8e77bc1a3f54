use super::{ChuCategory, ChuSpace, ChuTransform};
use crate::category::{FinSetoid, Functor};
use crate::error::{Error, Result};
use crate::finsetoid::{ExponentialWitness, Setoid, SetoidFn};

/// `u_* : Chu(γ) → Chu(δ)` for `u : γ → δ`, post-composing pairings with `u`
/// and leaving transforms unchanged.
pub struct LocalPushforward {
    u: SetoidFn,
    src: ChuCategory,
    dst: ChuCategory,
}

impl LocalPushforward {
    /// The target lists the images of the source fragment.
    pub fn new(u: &SetoidFn, src: ChuCategory) -> Result<Self> {
        if u.dom() != src.gamma() {
            return Err(Error::Mismatch(
                "u must start at the dualizing object of the source".into(),
            ));
        }
        let mut images: Vec<ChuSpace> = src.objects_ref().iter().map(|s| push(u, s)).collect();
        images.sort();
        images.dedup();
        let dst = ChuCategory::with_objects(u.cod(), images);
        Ok(LocalPushforward { u: u.clone(), src, dst })
    }

    pub fn u(&self) -> &SetoidFn {
        &self.u
    }
}

fn push(u: &SetoidFn, s: &ChuSpace) -> ChuSpace {
    let pairing = u.after(s.pairing()).expect("pairing lands in dom u");
    ChuSpace::from_parts_unchecked(s.left().clone(), s.right().clone(), pairing)
}

impl Functor for LocalPushforward {
    type Src = ChuCategory;
    type Dst = ChuCategory;
    fn source(&self) -> &ChuCategory {
        &self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, a: &ChuSpace) -> ChuSpace {
        push(&self.u, a)
    }
    fn map_mor(&self, f: &ChuTransform) -> ChuTransform {
        ChuTransform::new_unchecked(
            push(&self.u, f.src()),
            push(&self.u, f.dst()),
            f.fwd().clone(),
            f.bwd().clone(),
        )
    }
}

/// `E : FinSetoid → Chu(γ)`, sending `a` to the normal space
/// `(a, ev, γ^a)` and `f : a → b` to `(f, g ↦ g ∘ f)`.
pub struct CccRepresentation {
    gamma: Setoid,
    src: FinSetoid,
    dst: ChuCategory,
}

impl CccRepresentation {
    pub fn new(gamma: &Setoid, src: FinSetoid) -> Self {
        use crate::category::Category;
        let images = src.objects().iter().map(|a| evaluation_space(a, gamma)).collect();
        CccRepresentation {
            gamma: gamma.clone(),
            src,
            dst: ChuCategory::with_objects(gamma, images),
        }
    }
}

/// `(a, ev, γ^a)`.
pub fn evaluation_space(a: &Setoid, gamma: &Setoid) -> ChuSpace {
    let e = ExponentialWitness::new(a, gamma);
    ChuSpace::from_parts_unchecked(a.clone(), e.expo, e.ev)
}

/// Precomposition `γ^b → γ^a` along `f : a → b`, as a map of exponentials.
pub fn precompose_map(f: &SetoidFn, gamma: &Setoid) -> SetoidFn {
    let ea = ExponentialWitness::new(f.dom(), gamma);
    let eb = ExponentialWitness::new(f.cod(), gamma);
    let table = eb
        .maps
        .iter()
        .map(|g| {
            ea.index_of(&g.after(f).expect("g starts at cod f"))
                .expect("every map is listed")
        })
        .collect();
    SetoidFn::new(eb.expo.clone(), ea.expo.clone(), table).expect("discrete exponentials")
}

impl Functor for CccRepresentation {
    type Src = FinSetoid;
    type Dst = ChuCategory;
    fn source(&self) -> &FinSetoid {
        &self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, a: &Setoid) -> ChuSpace {
        evaluation_space(a, &self.gamma)
    }
    fn map_mor(&self, f: &SetoidFn) -> ChuTransform {
        ChuTransform::new_unchecked(
            evaluation_space(f.dom(), &self.gamma),
            evaluation_space(f.cod(), &self.gamma),
            f.clone(),
            precompose_map(f, &self.gamma),
        )
    }
}

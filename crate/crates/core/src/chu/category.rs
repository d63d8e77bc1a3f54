use super::{chu_compose, enumerate_hom, ChuSpace, ChuTransform};
use crate::category::Category;
use crate::finsetoid::Setoid;

/// `Chu(FinSetoid, γ)`, listing a chosen fragment of spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChuCategory {
    gamma: Setoid,
    objects: Vec<ChuSpace>,
}

impl ChuCategory {
    /// All spaces over `gamma` whose carriers have at most `cap` elements.
    pub fn capped(gamma: &Setoid, cap: usize) -> Self {
        ChuCategory {
            gamma: gamma.clone(),
            objects: ChuSpace::all_over(gamma, &Setoid::all_up_to(cap)),
        }
    }

    /// Spaces with carriers drawn from an explicit list.
    pub fn over_carriers(gamma: &Setoid, carriers: &[Setoid]) -> Self {
        ChuCategory {
            gamma: gamma.clone(),
            objects: ChuSpace::all_over(gamma, carriers),
        }
    }

    pub fn with_objects(gamma: &Setoid, objects: Vec<ChuSpace>) -> Self {
        ChuCategory {
            gamma: gamma.clone(),
            objects,
        }
    }

    pub fn gamma(&self) -> &Setoid {
        &self.gamma
    }
}

impl Category for ChuCategory {
    type Ob = ChuSpace;
    type Mor = ChuTransform;

    fn objects(&self) -> Vec<ChuSpace> {
        self.objects.clone()
    }
    fn hom(&self, a: &ChuSpace, b: &ChuSpace) -> Vec<ChuTransform> {
        enumerate_hom(a, b)
    }
    fn dom(&self, f: &ChuTransform) -> ChuSpace {
        f.src().clone()
    }
    fn cod(&self, f: &ChuTransform) -> ChuSpace {
        f.dst().clone()
    }
    fn identity(&self, a: &ChuSpace) -> ChuTransform {
        ChuTransform::identity(a)
    }
    fn compose(&self, g: &ChuTransform, f: &ChuTransform) -> ChuTransform {
        chu_compose(g, f).expect("composable transforms")
    }
}

impl ChuCategory {
    pub fn objects_ref(&self) -> &[ChuSpace] {
        &self.objects
    }
}

use super::{Cartesian, Category};
use crate::finsetoid::{ProductWitness, Setoid, SetoidFn};

/// Finite setoids and extensional maps, listing a chosen set of carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinSetoid {
    objects: Vec<Setoid>,
}

impl FinSetoid {
    /// All unlabelled setoids with at most `cap` elements.
    pub fn capped(cap: usize) -> Self {
        FinSetoid {
            objects: Setoid::all_up_to(cap),
        }
    }

    pub fn with_objects(objects: Vec<Setoid>) -> Self {
        FinSetoid { objects }
    }
}

impl Category for FinSetoid {
    type Ob = Setoid;
    type Mor = SetoidFn;

    fn objects(&self) -> Vec<Setoid> {
        self.objects.clone()
    }
    fn hom(&self, a: &Setoid, b: &Setoid) -> Vec<SetoidFn> {
        SetoidFn::all(a, b)
    }
    fn dom(&self, f: &SetoidFn) -> Setoid {
        f.dom().clone()
    }
    fn cod(&self, f: &SetoidFn) -> Setoid {
        f.cod().clone()
    }
    fn identity(&self, a: &Setoid) -> SetoidFn {
        SetoidFn::identity(a)
    }
    fn compose(&self, g: &SetoidFn, f: &SetoidFn) -> SetoidFn {
        g.after(f).expect("composable arrows")
    }
    fn inverse(&self, f: &SetoidFn) -> Option<SetoidFn> {
        f.inverse()
    }
}

impl Cartesian for FinSetoid {
    fn product(&self, a: &Setoid, b: &Setoid) -> (Setoid, SetoidFn, SetoidFn) {
        let w = ProductWitness::new(a, b);
        (w.prod, w.proj_left, w.proj_right)
    }
    fn tuple(&self, f: &SetoidFn, g: &SetoidFn) -> SetoidFn {
        ProductWitness::new(f.cod(), g.cod())
            .tuple(f, g)
            .expect("tupled arrows share a domain")
    }
    fn terminal(&self) -> Setoid {
        Setoid::unit()
    }
    fn product_mor(&self, f: &SetoidFn, g: &SetoidFn) -> SetoidFn {
        crate::finsetoid::fn_product(f, g)
    }
}

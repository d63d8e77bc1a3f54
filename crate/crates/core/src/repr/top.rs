use std::fmt;

use super::topology::{is_continuous, preimage, FiniteTopology};
use crate::category::{Category, FinSetoid, Functor};
use crate::chu::{ChuCategory, ChuSpace, ChuTransform};
use crate::finsetoid::{Setoid, SetoidFn};

/// A continuous map between finite spaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ContinuousMap {
    src: FiniteTopology,
    dst: FiniteTopology,
    map: SetoidFn,
}

impl ContinuousMap {
    pub fn new(src: FiniteTopology, dst: FiniteTopology, map: SetoidFn) -> Option<Self> {
        (map.dom() == src.points() && map.cod() == dst.points() && is_continuous(&map, &src, &dst))
            .then_some(ContinuousMap { src, dst, map })
    }

    pub fn src(&self) -> &FiniteTopology {
        &self.src
    }

    pub fn dst(&self) -> &FiniteTopology {
        &self.dst
    }

    pub fn map(&self) -> &SetoidFn {
        &self.map
    }
}

impl fmt::Debug for ContinuousMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.map)
    }
}

/// Finite topological spaces and continuous maps.
#[derive(Clone, Debug)]
pub struct TopCategory {
    objects: Vec<FiniteTopology>,
}

impl TopCategory {
    /// Every topology on every setoid with at most `cap` points.
    pub fn capped(cap: usize) -> Self {
        TopCategory {
            objects: Setoid::all_up_to(cap).iter().flat_map(FiniteTopology::all_on).collect(),
        }
    }

    pub fn with_objects(objects: Vec<FiniteTopology>) -> Self {
        TopCategory { objects }
    }
}

impl Category for TopCategory {
    type Ob = FiniteTopology;
    type Mor = ContinuousMap;

    fn objects(&self) -> Vec<FiniteTopology> {
        self.objects.clone()
    }
    fn hom(&self, a: &FiniteTopology, b: &FiniteTopology) -> Vec<ContinuousMap> {
        SetoidFn::all(a.points(), b.points())
            .into_iter()
            .filter_map(|h| ContinuousMap::new(a.clone(), b.clone(), h))
            .collect()
    }
    fn dom(&self, f: &ContinuousMap) -> FiniteTopology {
        f.src.clone()
    }
    fn cod(&self, f: &ContinuousMap) -> FiniteTopology {
        f.dst.clone()
    }
    fn identity(&self, a: &FiniteTopology) -> ContinuousMap {
        ContinuousMap {
            src: a.clone(),
            dst: a.clone(),
            map: SetoidFn::identity(a.points()),
        }
    }
    fn compose(&self, g: &ContinuousMap, f: &ContinuousMap) -> ContinuousMap {
        ContinuousMap {
            src: f.src.clone(),
            dst: g.dst.clone(),
            map: g.map.after(&f.map).expect("composable"),
        }
    }
}

/// The membership space `(X, ∈, T)` of a topology.
///
/// Membership in an equality-closed finite mask is decidable, so the usual
/// two-case definition of the pairing is available without classical logic.
pub fn membership_space(t: &FiniteTopology) -> ChuSpace {
    let opens = t.opens();
    ChuSpace::from_fn(
        t.points(),
        &Setoid::discrete(opens.len()),
        &Setoid::discrete(2),
        |x, k| (opens[k] >> x & 1) as usize,
    )
    .expect("opens are closed under equality")
}

/// `U ↦ h⁻¹(U)`, as a map between the open-index setoids.
pub fn preimage_map(h: &SetoidFn, t: &FiniteTopology, s: &FiniteTopology) -> SetoidFn {
    let table = s
        .opens()
        .iter()
        .map(|&u| t.open_index(preimage(h, u)).expect("h is continuous"))
        .collect();
    SetoidFn::new(
        Setoid::discrete(s.opens().len()),
        Setoid::discrete(t.opens().len()),
        table,
    )
    .expect("discrete index setoids")
}

fn boolean_target(images: Vec<ChuSpace>) -> ChuCategory {
    ChuCategory::with_objects(&Setoid::discrete(2), images)
}

/// `E^Top : Top → Chu(FinSetoid, 2)`.
pub struct ETop<'a> {
    src: &'a TopCategory,
    dst: ChuCategory,
}

impl<'a> ETop<'a> {
    pub fn new(src: &'a TopCategory) -> Self {
        let images = src.objects.iter().map(membership_space).collect();
        ETop {
            src,
            dst: boolean_target(images),
        }
    }
}

impl Functor for ETop<'_> {
    type Src = TopCategory;
    type Dst = ChuCategory;
    fn source(&self) -> &TopCategory {
        self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, t: &FiniteTopology) -> ChuSpace {
        membership_space(t)
    }
    fn map_mor(&self, f: &ContinuousMap) -> ChuTransform {
        e_top_arrow(f)
    }
}

pub(crate) fn e_top_arrow(f: &ContinuousMap) -> ChuTransform {
    ChuTransform::new_unchecked(
        membership_space(&f.src),
        membership_space(&f.dst),
        f.map.clone(),
        preimage_map(&f.map, &f.src, &f.dst),
    )
}

/// `Δ : FinSetoid → Top`, the discrete topology on every carrier.
pub struct Delta<'a> {
    src: &'a FinSetoid,
    dst: TopCategory,
}

impl<'a> Delta<'a> {
    pub fn new(src: &'a FinSetoid) -> Self {
        let images = src.objects().iter().map(FiniteTopology::discrete).collect();
        Delta {
            src,
            dst: TopCategory::with_objects(images),
        }
    }
}

impl Functor for Delta<'_> {
    type Src = FinSetoid;
    type Dst = TopCategory;
    fn source(&self) -> &FinSetoid {
        self.src
    }
    fn target(&self) -> &TopCategory {
        &self.dst
    }
    fn map_ob(&self, x: &Setoid) -> FiniteTopology {
        FiniteTopology::discrete(x)
    }
    fn map_mor(&self, f: &SetoidFn) -> ContinuousMap {
        ContinuousMap {
            src: FiniteTopology::discrete(f.dom()),
            dst: FiniteTopology::discrete(f.cod()),
            map: f.clone(),
        }
    }
}

/// `E^Set : FinSetoid → Chu(FinSetoid, 2)`, `X ↦ (X, ∈, P(X))` with subsets
/// in mask order.
pub struct ESet<'a> {
    src: &'a FinSetoid,
    dst: ChuCategory,
}

impl<'a> ESet<'a> {
    pub fn new(src: &'a FinSetoid) -> Self {
        let images = src.objects().iter().map(powerset_space).collect();
        ESet {
            src,
            dst: boolean_target(images),
        }
    }
}

/// `(X, ∈, P(X))`, built directly from the subset enumeration.
pub fn powerset_space(x: &Setoid) -> ChuSpace {
    let subsets = crate::finsetoid::SubsetEmbedding::closed_masks(x);
    ChuSpace::from_fn(x, &Setoid::discrete(subsets.len()), &Setoid::discrete(2), |p, k| {
        (subsets[k] >> p & 1) as usize
    })
    .expect("subsets are closed under equality")
}

impl Functor for ESet<'_> {
    type Src = FinSetoid;
    type Dst = ChuCategory;
    fn source(&self) -> &FinSetoid {
        self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, x: &Setoid) -> ChuSpace {
        powerset_space(x)
    }
    fn map_mor(&self, f: &SetoidFn) -> ChuTransform {
        let (t, s) = (FiniteTopology::discrete(f.dom()), FiniteTopology::discrete(f.cod()));
        ChuTransform::new_unchecked(
            powerset_space(f.dom()),
            powerset_space(f.cod()),
            f.clone(),
            preimage_map(f, &t, &s),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_membership_matrix() {
        let m = membership_space(&FiniteTopology::sierpinski());
        assert_eq!(m.row(0), vec![0, 0, 1]);
        assert_eq!(m.row(1), vec![0, 1, 1]);
    }

    #[test]
    fn powerset_of_two_points() {
        assert_eq!(powerset_space(&Setoid::unit()).right().size(), 2);
        let p = powerset_space(&Setoid::discrete(2));
        assert_eq!(p.right().size(), 4);
        assert_eq!(p.row(0), vec![0, 1, 0, 1]);
    }
}

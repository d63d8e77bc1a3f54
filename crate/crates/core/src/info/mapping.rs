use std::fmt;

use super::InfoSystem;
use crate::category::{Category, Composite, Functor};
use crate::error::{Error, Result};
use crate::finsetoid::SetoidFn;
use crate::repr::{ContinuousMap, ETop, TopCategory};

/// An approximable mapping `r ⊆ Con_X × Y`, stored as `rel[A] = {b | A r b}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ApproximableMapping {
    src: InfoSystem,
    dst: InfoSystem,
    rel: Vec<u64>,
}

/// The first approximable-mapping axiom that fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MappingViolation {
    InconsistentPremise { set: u64 },
    InconsistentImage { set: u64 },
    NotClosed { set: u64, via: u64, token: usize },
    NotMonotone { stronger: u64, weaker: u64, token: usize },
}

impl fmt::Display for MappingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingViolation::InconsistentPremise { set } => {
                write!(f, "{set:#b} is inconsistent but relates to tokens")
            }
            MappingViolation::InconsistentImage { set } => write!(f, "the image of {set:#b} is inconsistent"),
            MappingViolation::NotClosed { set, via, token } => {
                write!(
                    f,
                    "{set:#b} r {via:#b} and {via:#b} ⊢ {token} but not {set:#b} r {token}"
                )
            }
            MappingViolation::NotMonotone {
                stronger,
                weaker,
                token,
            } => {
                write!(
                    f,
                    "{stronger:#b} ⊢ {weaker:#b} and {weaker:#b} r {token} but not {stronger:#b} r {token}"
                )
            }
        }
    }
}

impl ApproximableMapping {
    /// From the related pairs `(A, b)`. Axioms are checked separately.
    pub fn new(src: &InfoSystem, dst: &InfoSystem, pairs: &[(u64, usize)]) -> Result<Self> {
        let mut rel = vec![0u64; 1 << src.token_count()];
        for &(a, b) in pairs {
            if a as usize >= rel.len() || b >= dst.token_count() {
                return Err(Error::Invalid(format!("pair ({a:#b}, {b}) is out of range")));
            }
            rel[a as usize] |= 1 << b;
        }
        Ok(ApproximableMapping {
            src: src.clone(),
            dst: dst.clone(),
            rel,
        })
    }

    fn from_table(src: &InfoSystem, dst: &InfoSystem, rel: Vec<u64>) -> Self {
        ApproximableMapping {
            src: src.clone(),
            dst: dst.clone(),
            rel,
        }
    }

    /// `⊢_X`, the identity on `X`.
    pub fn identity(x: &InfoSystem) -> Self {
        let rel = (0..1u64 << x.token_count()).map(|a| x.entailed(a)).collect();
        Self::from_table(x, x, rel)
    }

    pub fn src(&self) -> &InfoSystem {
        &self.src
    }

    pub fn dst(&self) -> &InfoSystem {
        &self.dst
    }

    /// `{b | A r b}`.
    pub fn image(&self, a: u64) -> u64 {
        self.rel.get(a as usize).copied().unwrap_or(0)
    }

    pub fn relates(&self, a: u64, b: usize) -> bool {
        self.image(a) >> b & 1 == 1
    }

    pub fn check(&self) -> Result<(), MappingViolation> {
        let (x, y) = (&self.src, &self.dst);
        for set in 0..self.rel.len() as u64 {
            if !x.is_consistent(set) && self.image(set) != 0 {
                return Err(MappingViolation::InconsistentPremise { set });
            }
        }
        for set in x.consistent_sets() {
            let img = self.image(set);
            if !y.is_consistent(img) {
                return Err(MappingViolation::InconsistentImage { set });
            }
            for via in y.consistent_sets().filter(|&b| b & img == b) {
                for token in 0..y.token_count() {
                    if y.entails(via, token) && img >> token & 1 == 0 {
                        return Err(MappingViolation::NotClosed { set, via, token });
                    }
                }
            }
        }
        for stronger in x.consistent_sets() {
            for weaker in x.consistent_sets().filter(|&a| x.entails_all(stronger, a)) {
                let missing = self.image(weaker) & !self.image(stronger);
                if missing != 0 {
                    return Err(MappingViolation::NotMonotone {
                        stronger,
                        weaker,
                        token: missing.trailing_zeros() as usize,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// `|r|(J) = {y | ∃ J′ ⊆fin J. J′ r y}`, as a map `|X| → |Y|`.
    pub fn realize(&self) -> SetoidFn {
        let (ix, iy) = (self.src.ideals(), self.dst.ideals());
        let table = ix
            .iter()
            .map(|&j| {
                let img = sub_iter(j).fold(0u64, |m, a| m | self.image(a));
                iy.binary_search(&img).expect("the image of an ideal is an ideal")
            })
            .collect();
        SetoidFn::new(self.src.ideal_setoid(), self.dst.ideal_setoid(), table).expect("discrete domain")
    }

    /// `A r_g y :⇔ y ∈ g(Ā)` for a map `g : |X| → |Y|` between ideal sets.
    pub fn reconstruct(g: &SetoidFn, src: &InfoSystem, dst: &InfoSystem) -> Result<Self> {
        let (ix, iy) = (src.ideals(), dst.ideals());
        if g.dom().size() != ix.len() || g.cod().size() != iy.len() {
            return Err(Error::Mismatch("g is not a map between the ideal sets".into()));
        }
        let rel = (0..1u64 << src.token_count())
            .map(|a| {
                if !src.is_consistent(a) {
                    return 0;
                }
                let k = ix
                    .binary_search(&src.closure(a))
                    .expect("closures of consistent sets are ideals");
                iy[g.apply(k)]
            })
            .collect();
        Ok(Self::from_table(src, dst, rel))
    }

    /// Every approximable mapping `X → Y`, one per monotone map between the
    /// ideal posets, in lexicographic order of that map.
    pub fn enumerate(src: &InfoSystem, dst: &InfoSystem) -> Vec<Self> {
        let (ix, iy) = (src.ideals(), dst.ideals());
        let mut out = Vec::new();
        let mut choice = Vec::with_capacity(ix.len());
        monotone_maps(&ix, &iy, &mut choice, &mut |m| {
            let g = SetoidFn::new(src.ideal_setoid(), dst.ideal_setoid(), m.to_vec()).expect("discrete domain");
            out.push(Self::reconstruct(&g, src, dst).expect("sizes match"));
        });
        out
    }
}

fn sub_iter(m: u64) -> impl Iterator<Item = u64> {
    (0..=m).filter(move |&s| s & m == s)
}

fn monotone_maps(ix: &[u64], iy: &[u64], choice: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    let k = choice.len();
    if k == ix.len() {
        visit(choice);
        return;
    }
    for (v, &target) in iy.iter().enumerate() {
        // ideals are listed in increasing mask order, so every ideal below
        // ix[k] has already been assigned
        let ok = (0..k).all(|p| ix[p] & ix[k] != ix[p] || iy[choice[p]] & target == iy[choice[p]]);
        if ok {
            choice.push(v);
            monotone_maps(ix, iy, choice, visit);
            choice.pop();
        }
    }
}

impl fmt::Debug for ApproximableMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<(u64, u64)> = self.src.consistent_sets().map(|a| (a, self.image(a))).collect();
        write!(f, "r{pairs:?}")
    }
}

/// `A (s ∘ r) z :⇔ ∃ B ∈ Con_Y. A r B ∧ B s z`.
pub fn approx_compose(s: &ApproximableMapping, r: &ApproximableMapping) -> Result<ApproximableMapping> {
    if r.dst != s.src {
        return Err(Error::Mismatch("r must end where s starts".into()));
    }
    let rel = (0..1u64 << r.src.token_count())
        .map(|a| {
            if !r.src.is_consistent(a) {
                return 0;
            }
            let img = r.image(a);
            r.dst
                .consistent_sets()
                .filter(|&b| b & img == b)
                .fold(0u64, |m, b| m | s.image(b))
        })
        .collect();
    Ok(ApproximableMapping::from_table(&r.src, &s.dst, rel))
}

/// A fragment of `Inf`: the listed systems and all approximable mappings.
#[derive(Clone, Debug)]
pub struct InfCategory {
    objects: Vec<InfoSystem>,
}

impl InfCategory {
    /// Every valid system on at most `n` tokens.
    pub fn capped(n: usize) -> Self {
        InfCategory {
            objects: InfoSystem::all_up_to(n),
        }
    }

    pub fn with_objects(objects: Vec<InfoSystem>) -> Self {
        InfCategory { objects }
    }

    pub fn objects_ref(&self) -> &[InfoSystem] {
        &self.objects
    }
}

impl Category for InfCategory {
    type Ob = InfoSystem;
    type Mor = ApproximableMapping;

    fn objects(&self) -> Vec<InfoSystem> {
        self.objects.clone()
    }
    fn hom(&self, a: &InfoSystem, b: &InfoSystem) -> Vec<ApproximableMapping> {
        ApproximableMapping::enumerate(a, b)
    }
    fn dom(&self, f: &ApproximableMapping) -> InfoSystem {
        f.src.clone()
    }
    fn cod(&self, f: &ApproximableMapping) -> InfoSystem {
        f.dst.clone()
    }
    fn identity(&self, a: &InfoSystem) -> ApproximableMapping {
        ApproximableMapping::identity(a)
    }
    fn compose(&self, g: &ApproximableMapping, f: &ApproximableMapping) -> ApproximableMapping {
        approx_compose(g, f).expect("composable")
    }
}

/// `S : Inf → Top`, `X ↦ (|X|, Scott topology)` and `r ↦ |r|`.
pub struct ScottFunctor {
    src: InfCategory,
    dst: TopCategory,
}

impl ScottFunctor {
    pub fn new(src: InfCategory) -> Self {
        let mut images: Vec<_> = src.objects.iter().map(InfoSystem::scott_topology).collect();
        images.sort();
        images.dedup();
        ScottFunctor {
            src,
            dst: TopCategory::with_objects(images),
        }
    }
}

impl Functor for ScottFunctor {
    type Src = InfCategory;
    type Dst = TopCategory;
    fn source(&self) -> &InfCategory {
        &self.src
    }
    fn target(&self) -> &TopCategory {
        &self.dst
    }
    fn map_ob(&self, x: &InfoSystem) -> crate::repr::FiniteTopology {
        x.scott_topology()
    }
    fn map_mor(&self, r: &ApproximableMapping) -> ContinuousMap {
        ContinuousMap::new(r.src.scott_topology(), r.dst.scott_topology(), r.realize())
            .expect("realizations are continuous")
    }
}

/// `E^Top ∘ S : Inf → Chu(FinSetoid, 2)`.
pub fn inf_chu_representation(s: &ScottFunctor) -> Composite<&ScottFunctor, ETop<'_>> {
    Composite {
        first: s,
        second: ETop::new(s.target()),
    }
}

use std::fmt;

use crate::category::{
    verify_functor_equality, verify_functor_laws, verify_isomorphism, Category, Composite, Functor, Violation,
};
use crate::chu::{is_chu_transform, ChuCategory, ChuSpace, ChuTransform};
use crate::finsetoid::{fn_product, Setoid, SetoidFn};

/// `Chu_x(γ)`: spaces `(a, f, x)` over a fixed right carrier and transforms
/// `(φ⁺, 1_x)`.
#[derive(Clone, Debug)]
pub struct Fibre {
    base: Setoid,
    objects: Vec<ChuSpace>,
}

impl Fibre {
    /// The members of `spaces` whose right carrier is `base`.
    pub fn over(base: &Setoid, spaces: &[ChuSpace]) -> Self {
        Fibre {
            base: base.clone(),
            objects: spaces.iter().filter(|s| s.right() == base).cloned().collect(),
        }
    }

    pub fn base(&self) -> &Setoid {
        &self.base
    }
}

impl Category for Fibre {
    type Ob = ChuSpace;
    type Mor = ChuTransform;

    fn objects(&self) -> Vec<ChuSpace> {
        self.objects.clone()
    }
    fn hom(&self, a: &ChuSpace, b: &ChuSpace) -> Vec<ChuTransform> {
        let id = SetoidFn::identity(&self.base);
        SetoidFn::all(a.left(), b.left())
            .into_iter()
            .filter_map(|fwd| ChuTransform::new(a.clone(), b.clone(), fwd, id.clone()).ok())
            .collect()
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
        crate::chu::chu_compose(g, f).expect("composable")
    }
}

/// `h*(a, f, x) = (a, f ∘ (1_a × h), x')` for `h : x' → x`.
pub fn reindex_space(h: &SetoidFn, s: &ChuSpace) -> ChuSpace {
    let pairing = s
        .pairing()
        .after(&fn_product(&SetoidFn::identity(s.left()), h))
        .expect("h lands in the right carrier");
    ChuSpace::new(s.left().clone(), h.dom().clone(), pairing).expect("typed")
}

/// The reindexing functor `h* : Chu_x → Chu_x'`, identity on `φ⁺`.
pub struct Reindex {
    h: SetoidFn,
    src: Fibre,
    dst: Fibre,
}

impl Reindex {
    /// `dst` must be the fibre over the domain of `h`.
    pub fn new(h: &SetoidFn, src: Fibre, dst: Fibre) -> Self {
        debug_assert_eq!(h.cod(), src.base());
        debug_assert_eq!(h.dom(), dst.base());
        Reindex { h: h.clone(), src, dst }
    }
}

impl Functor for Reindex {
    type Src = Fibre;
    type Dst = Fibre;
    fn source(&self) -> &Fibre {
        &self.src
    }
    fn target(&self) -> &Fibre {
        &self.dst
    }
    fn map_ob(&self, s: &ChuSpace) -> ChuSpace {
        reindex_space(&self.h, s)
    }
    fn map_mor(&self, t: &ChuTransform) -> ChuTransform {
        ChuTransform::new_unchecked(
            self.map_ob(t.src()),
            self.map_ob(t.dst()),
            t.fwd().clone(),
            SetoidFn::identity(self.h.dom()),
        )
    }
}

/// An arrow `(h, ψ) : (x, A) → (y, B)` of the total category, with the base
/// arrow reversed, `h : y → x`, and `ψ = (φ⁺, 1_y) : h*(A) → B` in `Chu_y`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TotalArrow {
    src: ChuSpace,
    dst: ChuSpace,
    base: SetoidFn,
    fibre: SetoidFn,
}

impl TotalArrow {
    pub fn base(&self) -> &SetoidFn {
        &self.base
    }

    pub fn fibre(&self) -> &SetoidFn {
        &self.fibre
    }
}

impl fmt::Debug for TotalArrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.base, self.fibre)
    }
}

/// `Groth(FinSetoid, Chu^γ)` on a listed set of spaces.
#[derive(Clone, Debug)]
pub struct FibredTotal {
    objects: Vec<ChuSpace>,
}

impl FibredTotal {
    pub fn new(objects: Vec<ChuSpace>) -> Self {
        FibredTotal { objects }
    }
}

impl Category for FibredTotal {
    type Ob = ChuSpace;
    type Mor = TotalArrow;

    fn objects(&self) -> Vec<ChuSpace> {
        self.objects.clone()
    }
    fn hom(&self, a: &ChuSpace, b: &ChuSpace) -> Vec<TotalArrow> {
        let mut out = Vec::new();
        let id = SetoidFn::identity(b.right());
        for h in SetoidFn::all(b.right(), a.right()) {
            let moved = reindex_space(&h, a);
            for fibre in SetoidFn::all(a.left(), b.left()) {
                if is_chu_transform(&fibre, &id, &moved, b).expect("typed") {
                    out.push(TotalArrow {
                        src: a.clone(),
                        dst: b.clone(),
                        base: h.clone(),
                        fibre,
                    });
                }
            }
        }
        out
    }
    fn dom(&self, f: &TotalArrow) -> ChuSpace {
        f.src.clone()
    }
    fn cod(&self, f: &TotalArrow) -> ChuSpace {
        f.dst.clone()
    }
    fn identity(&self, a: &ChuSpace) -> TotalArrow {
        TotalArrow {
            src: a.clone(),
            dst: a.clone(),
            base: SetoidFn::identity(a.right()),
            fibre: SetoidFn::identity(a.left()),
        }
    }
    /// `(k, χ) ∘ (h, ψ) = (h ∘ k, χ ∘ k*(ψ))`.
    fn compose(&self, g: &TotalArrow, f: &TotalArrow) -> TotalArrow {
        TotalArrow {
            src: f.src.clone(),
            dst: g.dst.clone(),
            base: f.base.after(&g.base).expect("composable"),
            fibre: g.fibre.after(&f.fibre).expect("composable"),
        }
    }
}

/// `(h, φ⁺) ↦ (φ⁺, h)`.
pub struct TotalToChu {
    src: FibredTotal,
    dst: ChuCategory,
}

impl TotalToChu {
    pub fn new(gamma: &Setoid, objects: Vec<ChuSpace>) -> Self {
        TotalToChu {
            src: FibredTotal::new(objects.clone()),
            dst: ChuCategory::with_objects(gamma, objects),
        }
    }
}

impl Functor for TotalToChu {
    type Src = FibredTotal;
    type Dst = ChuCategory;
    fn source(&self) -> &FibredTotal {
        &self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, s: &ChuSpace) -> ChuSpace {
        s.clone()
    }
    fn map_mor(&self, t: &TotalArrow) -> ChuTransform {
        ChuTransform::new_unchecked(t.src.clone(), t.dst.clone(), t.fibre.clone(), t.base.clone())
    }
}

/// Counts from [`fibred_chu`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FibredSummary {
    pub fibres: usize,
    pub reindexings: usize,
    pub composites: usize,
    pub total_objects: usize,
    pub total_arrows: usize,
}

/// Builds the fibres over `carriers`, checks that `x ↦ Chu_x` is a strict
/// contravariant functor, that every fibre arrow is a total arrow over the
/// identity, and that the total category is isomorphic to `Chu(γ)`.
pub fn fibred_chu(gamma: &Setoid, carriers: &[Setoid]) -> Result<FibredSummary, Violation> {
    let spaces = ChuSpace::all_over(gamma, carriers);
    let fibre = |x: &Setoid| Fibre::over(x, &spaces);
    let total = FibredTotal::new(spaces.clone());
    let mut reindexings = 0;
    let mut composites = 0;
    for x in carriers {
        let fx = fibre(x);
        for a in fx.objects() {
            for b in fx.objects() {
                for t in fx.hom(&a, &b) {
                    let lifted = TotalArrow {
                        src: a.clone(),
                        dst: b.clone(),
                        base: SetoidFn::identity(x),
                        fibre: t.fwd().clone(),
                    };
                    if !total.hom(&a, &b).contains(&lifted) {
                        return Err(Violation::new("fibre inclusion", format!("{t:?} is not a total arrow")));
                    }
                }
            }
        }
        for x1 in carriers {
            for h in SetoidFn::all(x1, x) {
                let hs = Reindex::new(&h, fx.clone(), fibre(x1));
                verify_functor_laws(&hs)?;
                if h == SetoidFn::identity(x) {
                    for s in fx.objects() {
                        if hs.map_ob(&s) != s {
                            return Err(Violation::new("identity reindexing", format!("1* moves {s:?}")));
                        }
                    }
                }
                reindexings += 1;
                for x2 in carriers {
                    for k in SetoidFn::all(x2, x1) {
                        let hk = h.after(&k).expect("composable");
                        let whole = Reindex::new(&hk, fx.clone(), fibre(x2));
                        let chain = Composite {
                            first: Reindex::new(&h, fx.clone(), fibre(x1)),
                            second: Reindex::new(&k, fibre(x1), fibre(x2)),
                        };
                        verify_functor_equality(&whole, &chain)?;
                        composites += 1;
                    }
                }
            }
        }
    }
    let iso = verify_isomorphism(&TotalToChu::new(gamma, spaces))?;
    Ok(FibredSummary {
        fibres: carriers.len(),
        reindexings,
        composites,
        total_objects: iso.objects,
        total_arrows: iso.arrows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_reindexing_is_identity() {
        let two = Setoid::discrete(2);
        let spaces = ChuSpace::all_over(&two, &[Setoid::unit(), two.clone()]);
        let f = Fibre::over(&two, &spaces);
        let id = Reindex::new(&SetoidFn::identity(&two), f.clone(), f.clone());
        for s in f.objects() {
            assert_eq!(id.map_ob(&s), s);
        }
    }

    #[test]
    fn total_category_is_chu() {
        let s = fibred_chu(&Setoid::discrete(2), &[Setoid::unit(), Setoid::discrete(2)]).unwrap();
        assert!(s.total_arrows > s.total_objects);
        assert_eq!(s.reindexings, 1 + 2 + 1 + 4);
    }
}

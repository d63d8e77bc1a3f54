use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::Endofunctor;
use crate::category::{Category, Presentation, Violation};
use crate::error::{Error, Result};
use crate::finsetoid::{product_setoid, Setoid, SetoidFn};
use crate::util::for_each_choice;

/// An object `(x; a, f, b)` of `Chu(FinSetoid, Γ)` with `f : a × b → Γ(x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenChuSpace {
    anchor: Setoid,
    left: Setoid,
    right: Setoid,
    pairing: SetoidFn,
}

impl GenChuSpace {
    pub fn new(functor: &Endofunctor, anchor: Setoid, left: Setoid, right: Setoid, pairing: SetoidFn) -> Result<Self> {
        if pairing.dom() != &product_setoid(&left, &right) {
            return Err(Error::Mismatch("pairing is not defined on left × right".into()));
        }
        match functor.try_ob(&anchor) {
            Some(g) if &g == pairing.cod() => {}
            Some(_) => return Err(Error::Mismatch("pairing does not land in Γ(anchor)".into())),
            None => return Err(Error::Undefined(format!("{functor:?} at {anchor:?}"))),
        }
        Ok(GenChuSpace {
            anchor,
            left,
            right,
            pairing,
        })
    }

    pub fn from_fn(
        functor: &Endofunctor,
        anchor: &Setoid,
        left: &Setoid,
        right: &Setoid,
        value: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let gx = functor
            .try_ob(anchor)
            .ok_or_else(|| Error::Undefined(format!("{functor:?} at {anchor:?}")))?;
        let n = right.size();
        let table = (0..left.size() * n).map(|p| value(p / n, p % n)).collect();
        let pairing = SetoidFn::new(product_setoid(left, right), gx, table)?;
        Ok(GenChuSpace {
            anchor: anchor.clone(),
            left: left.clone(),
            right: right.clone(),
            pairing,
        })
    }

    pub(crate) fn from_parts_unchecked(anchor: Setoid, left: Setoid, right: Setoid, pairing: SetoidFn) -> Self {
        GenChuSpace {
            anchor,
            left,
            right,
            pairing,
        }
    }

    pub fn anchor(&self) -> &Setoid {
        &self.anchor
    }

    pub fn left(&self) -> &Setoid {
        &self.left
    }

    pub fn right(&self) -> &Setoid {
        &self.right
    }

    pub fn pairing(&self) -> &SetoidFn {
        &self.pairing
    }

    #[inline]
    pub fn value(&self, a: usize, b: usize) -> usize {
        self.pairing.apply(a * self.right.size() + b)
    }

    /// Every space over `functor` with anchor and carriers drawn from
    /// `carriers`.
    pub fn all_over(functor: &Endofunctor, carriers: &[Setoid]) -> Vec<GenChuSpace> {
        let mut out = Vec::new();
        for x in carriers {
            let gx = functor.ob(x);
            for a in carriers {
                for b in carriers {
                    for f in SetoidFn::all(&product_setoid(a, b), &gx) {
                        out.push(GenChuSpace::from_parts_unchecked(x.clone(), a.clone(), b.clone(), f));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for GenChuSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:?}; {:?}, {:?}, {:?})",
            self.anchor, self.left, self.pairing, self.right
        )
    }
}

/// `(φ⁰, φ⁺, φ⁻) : (x; a, f, b) → (y; c, g, d)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenChuTransform {
    src: GenChuSpace,
    dst: GenChuSpace,
    anchor_map: SetoidFn,
    fwd: SetoidFn,
    bwd: SetoidFn,
}

impl GenChuTransform {
    /// Checks typing and the pentagon.
    pub fn new(
        functor: &Endofunctor,
        src: GenChuSpace,
        dst: GenChuSpace,
        anchor_map: SetoidFn,
        fwd: SetoidFn,
        bwd: SetoidFn,
    ) -> Result<Self> {
        let t = GenChuTransform {
            src,
            dst,
            anchor_map,
            fwd,
            bwd,
        };
        if let Some((a, d)) = pentagon_witness(functor, &t)? {
            return Err(Error::Invalid(format!("pentagon fails at ({a}, {d})")));
        }
        Ok(t)
    }

    pub(crate) fn new_unchecked(
        src: GenChuSpace,
        dst: GenChuSpace,
        anchor_map: SetoidFn,
        fwd: SetoidFn,
        bwd: SetoidFn,
    ) -> Self {
        GenChuTransform {
            src,
            dst,
            anchor_map,
            fwd,
            bwd,
        }
    }

    pub fn identity(space: &GenChuSpace) -> Self {
        GenChuTransform {
            src: space.clone(),
            dst: space.clone(),
            anchor_map: SetoidFn::identity(&space.anchor),
            fwd: SetoidFn::identity(&space.left),
            bwd: SetoidFn::identity(&space.right),
        }
    }

    pub fn src(&self) -> &GenChuSpace {
        &self.src
    }

    pub fn dst(&self) -> &GenChuSpace {
        &self.dst
    }

    pub fn anchor_map(&self) -> &SetoidFn {
        &self.anchor_map
    }

    pub fn fwd(&self) -> &SetoidFn {
        &self.fwd
    }

    pub fn bwd(&self) -> &SetoidFn {
        &self.bwd
    }
}

impl fmt::Debug for GenChuTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{:?}, {:?}, {:?}⟩", self.anchor_map, self.fwd, self.bwd)
    }
}

/// A point `(a, d)` where `Γ(φ⁰)(f(a, φ⁻ d)) ≠ g(φ⁺ a, d)`, if any.
pub fn pentagon_witness(functor: &Endofunctor, t: &GenChuTransform) -> Result<Option<(usize, usize)>> {
    let (src, dst) = (&t.src, &t.dst);
    if t.anchor_map.dom() != &src.anchor || t.anchor_map.cod() != &dst.anchor {
        return Err(Error::Mismatch("φ⁰ must run between the anchors".into()));
    }
    if t.fwd.dom() != &src.left || t.fwd.cod() != &dst.left {
        return Err(Error::Mismatch("φ⁺ must run between the left carriers".into()));
    }
    if t.bwd.dom() != &dst.right || t.bwd.cod() != &src.right {
        return Err(Error::Mismatch(
            "φ⁻ must run between the right carriers, reversed".into(),
        ));
    }
    let g0 = functor
        .try_mor(&t.anchor_map)
        .ok_or_else(|| Error::Undefined(format!("{functor:?} at {:?}", t.anchor_map)))?;
    if g0.dom() != src.pairing.cod() || g0.cod() != dst.pairing.cod() {
        return Err(Error::Mismatch(format!("spaces are not over {functor:?}")));
    }
    let gy = dst.pairing.cod();
    for a in 0..src.left.size() {
        for d in 0..dst.right.size() {
            if !gy.eq(g0.apply(src.value(a, t.bwd.apply(d))), dst.value(t.fwd.apply(a), d)) {
                return Ok(Some((a, d)));
            }
        }
    }
    Ok(None)
}

pub fn is_genchu_transform(functor: &Endofunctor, t: &GenChuTransform) -> Result<bool> {
    Ok(pentagon_witness(functor, t)?.is_none())
}

/// `θ ∘ φ = (θ⁰ ∘ φ⁰, θ⁺ ∘ φ⁺, φ⁻ ∘ θ⁻)`.
pub fn genchu_compose(theta: &GenChuTransform, phi: &GenChuTransform) -> Result<GenChuTransform> {
    if phi.dst != theta.src {
        return Err(Error::Mismatch("transforms are not composable".into()));
    }
    Ok(GenChuTransform {
        src: phi.src.clone(),
        dst: theta.dst.clone(),
        anchor_map: theta.anchor_map.after(&phi.anchor_map)?,
        fwd: theta.fwd.after(&phi.fwd)?,
        bwd: phi.bwd.after(&theta.bwd)?,
    })
}

/// Every transform `src → dst`, ordered by `φ⁰`, then `φ⁺`, then `φ⁻`.
///
/// Once `φ⁰` and `φ⁺` are fixed the pentagon constrains each `φ⁻(d)` on its
/// own, so the backward maps are a product of per-class choices.
pub fn enumerate_genchu_hom(functor: &Endofunctor, src: &GenChuSpace, dst: &GenChuSpace) -> Vec<GenChuTransform> {
    let d_reps: Vec<usize> = dst.right.reps().collect();
    let b_reps: Vec<usize> = src.right.reps().collect();
    let gy = dst.pairing.cod();
    let mut out = Vec::new();
    for anchor_map in SetoidFn::all(&src.anchor, &dst.anchor) {
        let g0 = functor.mor(&anchor_map);
        if g0.dom() != src.pairing.cod() || g0.cod() != gy {
            return Vec::new();
        }
        for fwd in SetoidFn::all(&src.left, &dst.left) {
            let choices: Vec<Vec<usize>> = d_reps
                .iter()
                .map(|&d| {
                    b_reps
                        .iter()
                        .copied()
                        .filter(|&b| {
                            (0..src.left.size()).all(|a| gy.eq(g0.apply(src.value(a, b)), dst.value(fwd.apply(a), d)))
                        })
                        .collect()
                })
                .collect();
            let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
            for_each_choice(&sizes, |pick| {
                let table = (0..dst.right.size())
                    .map(|d| {
                        let k = d_reps.binary_search(&dst.right.rep(d)).expect("rep listed");
                        choices[k][pick[k]]
                    })
                    .collect();
                out.push(GenChuTransform {
                    src: src.clone(),
                    dst: dst.clone(),
                    anchor_map: anchor_map.clone(),
                    fwd: fwd.clone(),
                    bwd: SetoidFn::new_unchecked(dst.right.clone(), src.right.clone(), table),
                });
            });
        }
    }
    out
}

/// Counts from [`verify_pentagon_closure`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClosureSummary {
    pub objects: usize,
    pub morphisms: usize,
    pub composable_pairs: usize,
}

/// Identities and closure of the pentagon condition under composition on
/// the listed fragment, without materializing the composition table.
///
/// Each composite is checked pointwise from the component tables, with
/// `Γ₁` evaluated once per anchor map.
pub fn verify_pentagon_closure(cat: &GenChuCategory) -> std::result::Result<ClosureSummary, Violation> {
    let p = Presentation::new(cat);
    let functor = cat.functor();
    let objects = p.objects();
    let mors = p.morphisms();
    for (a, ob) in objects.iter().enumerate() {
        let id = GenChuTransform::identity(ob);
        if p.find(a, a, &id).is_none() {
            return Err(Violation::new("identity", format!("identity of {ob:?} is missing")));
        }
    }
    let mut anchors: Vec<Setoid> = objects.iter().map(|s| s.anchor.clone()).collect();
    anchors.sort();
    anchors.dedup();
    let anchor_index = |x: &Setoid| anchors.binary_search(x).expect("listed anchor");
    let code = |table: &[usize], base: usize| table.iter().rev().fold(0u64, |acc, &v| acc * base as u64 + v as u64);
    let mut lifted: HashMap<(usize, usize, u64), SetoidFn> = HashMap::new();
    for (i, x) in anchors.iter().enumerate() {
        for (j, z) in anchors.iter().enumerate() {
            for u in SetoidFn::all(x, z) {
                if let Some(g) = functor.try_mor(&u) {
                    lifted.insert((i, j, code(u.table(), z.size())), g);
                }
            }
        }
    }
    let counts: Vec<std::result::Result<usize, Violation>> = (0..mors.len())
        .into_par_iter()
        .map(|fi| {
            let phi = &mors[fi];
            let (_, b) = p.ends(fi);
            let src = &phi.src;
            let xi = anchor_index(&src.anchor);
            let mut anchor_table = Vec::with_capacity(src.anchor.size());
            let mut count = 0;
            for &gi in p.outgoing(b) {
                let theta = &mors[gi];
                let dst = &theta.dst;
                anchor_table.clear();
                anchor_table.extend(phi.anchor_map.table().iter().map(|&x| theta.anchor_map.apply(x)));
                let key = (xi, anchor_index(&dst.anchor), code(&anchor_table, dst.anchor.size()));
                let g0 = lifted.get(&key).ok_or_else(|| {
                    Violation::new(
                        "closure",
                        format!("{functor:?} is undefined at the composite anchor map"),
                    )
                })?;
                let gy = dst.pairing.cod();
                for a in 0..src.left.size() {
                    let fa = theta.fwd.apply(phi.fwd.apply(a));
                    for e in 0..dst.right.size() {
                        let back = phi.bwd.apply(theta.bwd.apply(e));
                        if !gy.eq(g0.apply(src.value(a, back)), dst.value(fa, e)) {
                            return Err(Violation::new(
                                "closure",
                                format!("{theta:?} ∘ {phi:?} breaks the pentagon at ({a}, {e})"),
                            ));
                        }
                    }
                }
                count += 1;
            }
            Ok(count)
        })
        .collect();
    let pairs = counts.into_iter().sum::<std::result::Result<usize, Violation>>()?;
    Ok(ClosureSummary {
        objects: objects.len(),
        morphisms: mors.len(),
        composable_pairs: pairs,
    })
}

/// A fragment of `Chu(FinSetoid, Γ)`.
#[derive(Clone, Debug)]
pub struct GenChuCategory {
    functor: Endofunctor,
    objects: Vec<GenChuSpace>,
}

impl GenChuCategory {
    /// All spaces with anchor and carriers of at most `cap` elements.
    pub fn capped(functor: &Endofunctor, cap: usize) -> Self {
        GenChuCategory {
            functor: functor.clone(),
            objects: GenChuSpace::all_over(functor, &Setoid::all_up_to(cap)),
        }
    }

    pub fn over_carriers(functor: &Endofunctor, carriers: &[Setoid]) -> Self {
        GenChuCategory {
            functor: functor.clone(),
            objects: GenChuSpace::all_over(functor, carriers),
        }
    }

    pub fn with_objects(functor: &Endofunctor, objects: Vec<GenChuSpace>) -> Self {
        GenChuCategory {
            functor: functor.clone(),
            objects,
        }
    }

    pub fn functor(&self) -> &Endofunctor {
        &self.functor
    }

    pub fn objects_ref(&self) -> &[GenChuSpace] {
        &self.objects
    }
}

impl Category for GenChuCategory {
    type Ob = GenChuSpace;
    type Mor = GenChuTransform;

    fn objects(&self) -> Vec<GenChuSpace> {
        self.objects.clone()
    }
    fn hom(&self, a: &GenChuSpace, b: &GenChuSpace) -> Vec<GenChuTransform> {
        enumerate_genchu_hom(&self.functor, a, b)
    }
    fn dom(&self, f: &GenChuTransform) -> GenChuSpace {
        f.src.clone()
    }
    fn cod(&self, f: &GenChuTransform) -> GenChuSpace {
        f.dst.clone()
    }
    fn identity(&self, a: &GenChuSpace) -> GenChuTransform {
        GenChuTransform::identity(a)
    }
    fn compose(&self, g: &GenChuTransform, f: &GenChuTransform) -> GenChuTransform {
        let h = genchu_compose(g, f).expect("composable");
        debug_assert!(is_genchu_transform(&self.functor, &h).unwrap_or(false));
        h
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_a_transform() {
        let two = Setoid::discrete(2);
        let sq = Endofunctor::Square;
        let s = GenChuSpace::from_fn(&sq, &two, &two, &Setoid::unit(), |a, _| a * 2 + 1).unwrap();
        assert!(is_genchu_transform(&sq, &GenChuTransform::identity(&s)).unwrap());
    }

    #[test]
    fn wrong_anchor_map_has_witness() {
        let two = Setoid::discrete(2);
        let id = Endofunctor::Identity;
        let s = GenChuSpace::from_fn(&id, &two, &two, &Setoid::unit(), |a, _| a).unwrap();
        let swap = SetoidFn::new(two.clone(), two.clone(), vec![1, 0]).unwrap();
        let t = GenChuTransform::new_unchecked(
            s.clone(),
            s.clone(),
            swap,
            SetoidFn::identity(&two),
            SetoidFn::identity(&Setoid::unit()),
        );
        assert_eq!(pentagon_witness(&id, &t).unwrap(), Some((0, 0)));
    }

    #[test]
    fn constant_functor_ignores_anchor_map() {
        let two = Setoid::discrete(2);
        let c = Endofunctor::Constant(two.clone());
        let s = GenChuSpace::from_fn(&c, &two, &two, &Setoid::unit(), |a, _| a).unwrap();
        // φ⁰ is free, φ⁺ must be the identity
        assert_eq!(enumerate_genchu_hom(&c, &s, &s).len(), 4);
    }
}

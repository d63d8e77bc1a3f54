use crate::category::{canonical_product_iso, verify_functor_laws, Category, FinSetoid, Violation};
use crate::error::Result;
use crate::finsetoid::{fn_product, product_setoid, ProductWitness, Setoid, SetoidFn};
use crate::genchu::Endofunctor;

/// A product-preserving endofunctor of finite setoids together with its
/// canonical isomorphisms `F_ab : F(a) × F(b) → F(a × b)`.
///
/// Isomorphisms are computed on demand as the inverse of `⟨F(π₁), F(π₂)⟩`.
/// An explicit override replaces one of them, which is how the composition
/// checks are exercised against a wrong table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PPFunctor {
    functor: Endofunctor,
    overrides: Vec<(Setoid, Setoid, SetoidFn)>,
}

impl PPFunctor {
    pub fn new(functor: Endofunctor) -> Self {
        PPFunctor {
            functor,
            overrides: Vec::new(),
        }
    }

    pub fn identity() -> Self {
        Self::new(Endofunctor::Identity)
    }

    /// `x ↦ x × x`.
    pub fn square() -> Self {
        Self::new(Endofunctor::Square)
    }

    /// `x ↦ 𝟙`.
    pub fn to_terminal() -> Self {
        Self::new(Endofunctor::terminal())
    }

    pub fn functor(&self) -> &Endofunctor {
        &self.functor
    }

    pub fn ob(&self, x: &Setoid) -> Setoid {
        self.functor.ob(x)
    }

    pub fn mor(&self, f: &SetoidFn) -> SetoidFn {
        self.functor.mor(f)
    }

    /// `G ∘ F` with freshly computed isomorphisms.
    pub fn then(&self, g: &PPFunctor) -> PPFunctor {
        Self::new(self.functor.then(&g.functor))
    }

    /// Replaces `F_ab` by `iso`.
    pub fn with_override(mut self, a: &Setoid, b: &Setoid, iso: SetoidFn) -> Self {
        self.overrides.retain(|(x, y, _)| !(x == a && y == b));
        self.overrides.push((a.clone(), b.clone(), iso));
        self
    }

    pub fn product_iso(&self, a: &Setoid, b: &Setoid) -> Result<SetoidFn> {
        if let Some((_, _, iso)) = self.overrides.iter().find(|(x, y, _)| x == a && y == b) {
            return Ok(iso.clone());
        }
        let on = self.functor.on(&FinSetoid::with_objects(Vec::new()))?;
        canonical_product_iso(&on, a, b)
    }

    /// Functor laws, invertibility of every `F_ab` and the rectangle
    /// `F_{a'b'} ∘ (F(f) × F(g)) = F(f × g) ∘ F_ab` on the fragment.
    pub fn check(&self, fragment: &FinSetoid) -> Result<usize, Violation> {
        let on = self
            .functor
            .on(fragment)
            .map_err(|e| Violation::new("coverage", e.to_string()))?;
        let mut count = verify_functor_laws(&on)?;
        let objects = fragment.objects();
        for a in &objects {
            for b in &objects {
                let iso = self
                    .product_iso(a, b)
                    .map_err(|e| Violation::new("product preservation", e.to_string()))?;
                if iso.inverse().is_none() {
                    return Err(Violation::new(
                        "product preservation",
                        format!("F_ab = {iso:?} is not invertible"),
                    ));
                }
            }
        }
        let arrows: Vec<SetoidFn> = objects
            .iter()
            .flat_map(|a| objects.iter().flat_map(move |b| fragment.hom(a, b)))
            .collect();
        for f in &arrows {
            for g in &arrows {
                let iso = |a: &Setoid, b: &Setoid| {
                    self.product_iso(a, b)
                        .map_err(|e| Violation::new("product preservation", e.to_string()))
                };
                let before = iso(f.dom(), g.dom())?;
                let after = iso(f.cod(), g.cod())?;
                let lhs = after.after(&fn_product(&self.mor(f), &self.mor(g))).expect("typed");
                let rhs = self.mor(&fn_product(f, g)).after(&before).expect("typed");
                if lhs != rhs {
                    return Err(Violation::new(
                        "product iso naturality",
                        format!("rectangle fails for f = {f:?}, g = {g:?}"),
                    ));
                }
                count += 1;
            }
        }
        Ok(count)
    }
}

/// `(G ∘ F)_ab = G(F_ab) ∘ G_{F(a)F(b)}`.
pub fn composite_iso_agrees(f: &PPFunctor, g: &PPFunctor, a: &Setoid, b: &Setoid) -> Result<bool> {
    let direct = f.then(g).product_iso(a, b)?;
    let pasted = g
        .mor(&f.product_iso(a, b)?)
        .after(&g.product_iso(&f.ob(a), &f.ob(b))?)?;
    Ok(direct == pasted)
}

/// A bijection `F(a) × F(b) → F(a × b)` that differs from the canonical one,
/// obtained by swapping two values. `None` when the target has fewer than two
/// elements.
pub fn perturbed_iso(f: &PPFunctor, a: &Setoid, b: &Setoid) -> Option<SetoidFn> {
    let iso = f.product_iso(a, b).ok()?;
    let dst = iso.cod();
    let x = (0..dst.size()).find(|&y| !dst.eq(y, iso.apply(0)))?;
    let swap: Vec<usize> = (0..dst.size())
        .map(|y| {
            if dst.eq(y, iso.apply(0)) {
                x
            } else if dst.eq(y, x) {
                iso.apply(0)
            } else {
                y
            }
        })
        .collect();
    let swap = SetoidFn::new(dst.clone(), dst.clone(), swap).ok()?;
    swap.after(&iso).ok()
}

/// The domain `F(a) × F(b)` of `F_ab`.
pub fn iso_domain(f: &PPFunctor, a: &Setoid, b: &Setoid) -> Setoid {
    product_setoid(&f.ob(a), &f.ob(b))
}

/// `⟨F(π₁), F(π₂)⟩ : F(a × b) → F(a) × F(b)`.
pub fn comparison(f: &PPFunctor, a: &Setoid, b: &Setoid) -> SetoidFn {
    let w = ProductWitness::new(a, b);
    let (l, r) = (f.mor(&w.proj_left), f.mor(&w.proj_right));
    ProductWitness::new(l.cod(), r.cod())
        .tuple(&l, &r)
        .expect("common domain")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_functors_preserve_products() {
        let fragment = FinSetoid::capped(2);
        for f in [PPFunctor::identity(), PPFunctor::square(), PPFunctor::to_terminal()] {
            assert!(f.check(&fragment).unwrap() > 0, "{f:?}");
        }
    }

    #[test]
    fn identity_iso_is_identity() {
        let (a, b) = (Setoid::discrete(2), Setoid::indiscrete(2));
        let iso = PPFunctor::identity().product_iso(&a, &b).unwrap();
        assert_eq!(iso, SetoidFn::identity(&product_setoid(&a, &b)));
    }

    #[test]
    fn square_iso_shuffles_middle_factors() {
        let (a, b) = (Setoid::discrete(2), Setoid::discrete(3));
        let sq = PPFunctor::square();
        let iso = sq.product_iso(&a, &b).unwrap();
        assert_eq!(iso.dom(), &iso_domain(&sq, &a, &b));
        // ((x, x'), (y, y')) ↦ ((x, y), (x', y'))
        let (x, x2, y, y2) = (1, 0, 2, 1);
        let src = (x * 2 + x2) * 9 + (y * 3 + y2);
        assert_eq!(iso.apply(src), (x * 3 + y) * 6 + (x2 * 3 + y2));
        assert_eq!(
            comparison(&sq, &a, &b).after(&iso).unwrap(),
            SetoidFn::identity(iso.dom())
        );
    }

    #[test]
    fn composite_isos_paste() {
        let fs = [PPFunctor::identity(), PPFunctor::square(), PPFunctor::to_terminal()];
        let carriers = Setoid::all_up_to(2);
        for f in &fs {
            for g in &fs {
                for a in &carriers {
                    for b in &carriers {
                        assert!(composite_iso_agrees(f, g, a, b).unwrap(), "{f:?} {g:?} {a:?} {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn overridden_iso_breaks_the_rectangle() {
        let two = Setoid::discrete(2);
        let sq = PPFunctor::square();
        let bad = perturbed_iso(&sq, &two, &two).unwrap();
        let sq = sq.with_override(&two, &two, bad);
        let err = sq.check(&FinSetoid::with_objects(vec![two])).unwrap_err();
        assert_eq!(err.law, "product iso naturality");
    }
}

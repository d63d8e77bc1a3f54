use super::{HomPairing, PairPresheaf};
use crate::category::Violation;
use crate::finsetoid::{Setoid, SetoidFn};

/// `η^f_{(a,b)}(h) = f ∘ h`.
pub fn eta_component(f: &SetoidFn, h: &SetoidFn) -> SetoidFn {
    f.after(h).expect("h lands in dom f")
}

/// `η^f` commutes with the action of every `(φ⁺, φ⁻)` between listed
/// carriers.
pub fn verify_eta_natural(f: &SetoidFn, carriers: &[Setoid]) -> Result<usize, Violation> {
    let (s, t) = (HomPairing::new(f.dom()), HomPairing::new(f.cod()));
    let mut n = 0;
    for a in carriers {
        for b in carriers {
            let elems = s.elements(a, b);
            for a1 in carriers {
                for b1 in carriers {
                    for fwd in SetoidFn::all(a1, a) {
                        for bwd in SetoidFn::all(b1, b) {
                            for h in &elems {
                                let lhs = t.act(&fwd, &bwd, &eta_component(f, h));
                                let rhs = eta_component(f, &s.act(&fwd, &bwd, h));
                                if lhs != rhs {
                                    return Err(Violation::new(
                                        "η^f naturality",
                                        format!("f = {f:?} at h = {h:?}, ({fwd:?}, {bwd:?})"),
                                    ));
                                }
                                n += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(n)
}

/// A pair `(a, b)` where `Hom(a × b, γ)` and `Hom(a × b, γ')` have different
/// sizes, or failing that different elements.
pub fn separating_pair(gamma: &Setoid, gamma2: &Setoid, carriers: &[Setoid]) -> Option<(Setoid, Setoid)> {
    let (s, t) = (HomPairing::new(gamma), HomPairing::new(gamma2));
    let pairs = || carriers.iter().flat_map(|a| carriers.iter().map(move |b| (a, b)));
    pairs()
        .find(|(a, b)| s.elements(a, b).len() != t.elements(a, b).len())
        .or_else(|| pairs().find(|(a, b)| s.elements(a, b) != t.elements(a, b)))
        .map(|(a, b)| (a.clone(), b.clone()))
}

/// An `h : a × b → γ` with `f ∘ h ≠ f' ∘ h`.
pub fn separating_element(f: &SetoidFn, f2: &SetoidFn, carriers: &[Setoid]) -> Option<SetoidFn> {
    let s = HomPairing::new(f.dom());
    carriers
        .iter()
        .flat_map(|a| carriers.iter().map(move |b| (a, b)))
        .flat_map(|(a, b)| s.elements(a, b))
        .find(|h| eta_component(f, h) != eta_component(f2, h))
}

/// Counts from [`sigma_hom_embedding`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaSummary {
    pub objects: usize,
    pub arrows: usize,
    pub naturality_checks: usize,
}

/// `γ ↦ Hom(_ × _, γ)`, `f ↦ η^f` is a functor, each `η^f` is natural, and
/// the assignment is injective on the listed objects and arrows.
pub fn sigma_hom_embedding(gammas: &[Setoid], carriers: &[Setoid]) -> Result<SigmaSummary, Violation> {
    let elements = |g: &Setoid| -> Vec<SetoidFn> {
        let s = HomPairing::new(g);
        carriers
            .iter()
            .flat_map(|a| carriers.iter().map(move |b| (a, b)))
            .flat_map(|(a, b)| s.elements(a, b))
            .collect()
    };
    let mut arrows = 0;
    let mut naturality_checks = 0;
    for (i, g) in gammas.iter().enumerate() {
        let id = SetoidFn::identity(g);
        if let Some(h) = elements(g).into_iter().find(|h| &eta_component(&id, h) != h) {
            return Err(Violation::new("identity", format!("η^1 moves {h:?}")));
        }
        for g2 in &gammas[..i] {
            if separating_pair(g, g2, carriers).is_none() {
                return Err(Violation::new(
                    "injective on objects",
                    format!("{g:?} and {g2:?} give the same functor on the fragment"),
                ));
            }
        }
        for g2 in gammas {
            let maps = SetoidFn::all(g, g2);
            for (k, f) in maps.iter().enumerate() {
                naturality_checks += verify_eta_natural(f, carriers)?;
                arrows += 1;
                for f2 in &maps[..k] {
                    if separating_element(f, f2, carriers).is_none() {
                        return Err(Violation::new(
                            "injective on arrows",
                            format!("η^f = η^f' for f = {f:?}, f' = {f2:?}"),
                        ));
                    }
                }
                for g3 in gammas {
                    for f3 in SetoidFn::all(g2, g3) {
                        let composite = f3.after(f).expect("composable");
                        if let Some(h) = elements(g)
                            .into_iter()
                            .find(|h| eta_component(&composite, h) != eta_component(&f3, &eta_component(f, h)))
                        {
                            return Err(Violation::new(
                                "composition",
                                format!("η^(g∘f) ≠ η^g ∘ η^f at h = {h:?}"),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(SigmaSummary {
        objects: gammas.len(),
        arrows,
        naturality_checks,
    })
}

use std::fmt::{self, Debug};
use std::hash::Hash;

use rayon::prelude::*;

use crate::category::{verify_isomorphism, Category, Functor, IsoSummary, Presentation, Violation};
use crate::chu::{ChuCategory, ChuSpace, ChuTransform};
use crate::finsetoid::{fn_product, product_setoid, Setoid, SetoidFn};

/// A contravariant functor `S : (FinSetoid × FinSetoid)ᵒᵖ → Set` with finite
/// values.
pub trait PairPresheaf: Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    /// `S(a, x)`.
    fn elements(&self, a: &Setoid, x: &Setoid) -> Vec<Self::Elem>;

    /// `S(f, g) : S(a, x) → S(a', x')` for `f : a' → a` and `g : x' → x`.
    fn act(&self, f: &SetoidFn, g: &SetoidFn, u: &Self::Elem) -> Self::Elem;

    /// `S_a(g) = S(1_a, g)`.
    fn act_right(&self, a: &Setoid, g: &SetoidFn, u: &Self::Elem) -> Self::Elem {
        self.act(&SetoidFn::identity(a), g, u)
    }

    /// `_bS(f) = S(f, 1_b)`.
    fn act_left(&self, f: &SetoidFn, b: &Setoid, u: &Self::Elem) -> Self::Elem {
        self.act(f, &SetoidFn::identity(b), u)
    }
}

/// `Hom(_ × _, γ)`, acting by `h ↦ h ∘ (f × g)`.
///
/// A fault makes the action at one chosen pair `(f, g)` return a constant
/// map instead, which breaks functoriality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomPairing {
    gamma: Setoid,
    fault: Option<(SetoidFn, SetoidFn)>,
}

impl HomPairing {
    pub fn new(gamma: &Setoid) -> Self {
        HomPairing {
            gamma: gamma.clone(),
            fault: None,
        }
    }

    pub fn with_fault(mut self, f: SetoidFn, g: SetoidFn) -> Self {
        self.fault = Some((f, g));
        self
    }

    pub fn gamma(&self) -> &Setoid {
        &self.gamma
    }
}

impl PairPresheaf for HomPairing {
    type Elem = SetoidFn;

    fn elements(&self, a: &Setoid, x: &Setoid) -> Vec<SetoidFn> {
        SetoidFn::all(&product_setoid(a, x), &self.gamma)
    }

    fn act(&self, f: &SetoidFn, g: &SetoidFn, u: &SetoidFn) -> SetoidFn {
        let honest = u.after(&fn_product(f, g)).expect("u is defined on cod f × cod g");
        match &self.fault {
            Some((ff, gg)) if ff == f && gg == g && honest.dom().size() > 0 => {
                let gamma = &self.gamma;
                let other = (0..gamma.size()).find(|&c| !gamma.eq(c, honest.apply(0))).unwrap_or(0);
                SetoidFn::constant(honest.dom(), gamma, other).expect("in range")
            }
            _ => honest,
        }
    }
}

/// Identities act trivially and `S(f ∘ f', g ∘ g') = S(f', g') ∘ S(f, g)`
/// for every pair of maps between listed carriers.
pub fn verify_contravariant_laws<S: PairPresheaf>(s: &S, carriers: &[Setoid]) -> Result<usize, Violation> {
    let pairs: Vec<(&Setoid, &Setoid)> = carriers
        .iter()
        .flat_map(|a| carriers.iter().map(move |x| (a, x)))
        .collect();
    for &(a, x) in &pairs {
        let (ia, ix) = (SetoidFn::identity(a), SetoidFn::identity(x));
        for u in s.elements(a, x) {
            if s.act(&ia, &ix, &u) != u {
                return Err(Violation::new("contravariant identity", format!("S(1, 1) moves {u:?}")));
            }
        }
    }
    let counts: Vec<Result<usize, Violation>> = pairs
        .par_iter()
        .map(|&(a, x)| {
            let elems = s.elements(a, x);
            let mut n = 0;
            for &(a1, x1) in &pairs {
                for f in SetoidFn::all(a1, a) {
                    for g in SetoidFn::all(x1, x) {
                        for &(a2, x2) in &pairs {
                            for f1 in SetoidFn::all(a2, a1) {
                                for g1 in SetoidFn::all(x2, x1) {
                                    let ff = f.after(&f1).expect("composable");
                                    let gg = g.after(&g1).expect("composable");
                                    for u in &elems {
                                        let lhs = s.act(&ff, &gg, u);
                                        let rhs = s.act(&f1, &g1, &s.act(&f, &g, u));
                                        if lhs != rhs {
                                            return Err(Violation::new(
                                                "contravariant composition",
                                                format!(
                                                    "S(f∘f', g∘g')(u) ≠ S(f', g')(S(f, g)(u)) at f = {f:?}, g = {g:?}, f' = {f1:?}, g' = {g1:?}, u = {u:?}"
                                                ),
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
        })
        .collect();
    counts.into_iter().sum()
}

/// `(a, x, u)` with `u ∈ S(a, x)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AntiparObject<E> {
    pub a: Setoid,
    pub x: Setoid,
    pub u: E,
}

impl<E: Debug> Debug for AntiparObject<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.a, self.x, self.u)
    }
}

/// `(φ⁺, φ⁻) : (a, x, u) → (b, y, v)` with `φ⁺ : a → b` and `φ⁻ : y → x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AntiparArrow<E> {
    pub src: AntiparObject<E>,
    pub dst: AntiparObject<E>,
    pub fwd: SetoidFn,
    pub bwd: SetoidFn,
}

impl<E> Debug for AntiparArrow<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.fwd, self.bwd)
    }
}

/// `[S_a(φ⁻)](u) = [_yS(φ⁺)](v)`.
pub fn antipar_condition<S: PairPresheaf>(
    s: &S,
    src: &AntiparObject<S::Elem>,
    dst: &AntiparObject<S::Elem>,
    fwd: &SetoidFn,
    bwd: &SetoidFn,
) -> bool {
    s.act_right(&src.a, bwd, &src.u) == s.act_left(fwd, &dst.x, &dst.u)
}

/// The antiparallel Grothendieck category of `S` on a listed fragment.
#[derive(Clone, Debug)]
pub struct AntiparCategory<S: PairPresheaf> {
    s: S,
    objects: Vec<AntiparObject<S::Elem>>,
}

impl<S: PairPresheaf> AntiparCategory<S> {
    /// Every `(a, x, u)` with `a, x` among `carriers`.
    pub fn over_carriers(s: S, carriers: &[Setoid]) -> Self {
        let mut objects = Vec::new();
        for a in carriers {
            for x in carriers {
                for u in s.elements(a, x) {
                    objects.push(AntiparObject {
                        a: a.clone(),
                        x: x.clone(),
                        u,
                    });
                }
            }
        }
        AntiparCategory { s, objects }
    }

    pub fn presheaf(&self) -> &S {
        &self.s
    }
}

impl<S: PairPresheaf> Category for AntiparCategory<S> {
    type Ob = AntiparObject<S::Elem>;
    type Mor = AntiparArrow<S::Elem>;

    fn objects(&self) -> Vec<Self::Ob> {
        self.objects.clone()
    }
    fn hom(&self, p: &Self::Ob, q: &Self::Ob) -> Vec<Self::Mor> {
        let bwds = SetoidFn::all(&q.x, &p.x);
        SetoidFn::all(&p.a, &q.a)
            .into_iter()
            .flat_map(|fwd| {
                bwds.iter()
                    .filter(|bwd| antipar_condition(&self.s, p, q, &fwd, bwd))
                    .map(|bwd| AntiparArrow {
                        src: p.clone(),
                        dst: q.clone(),
                        fwd: fwd.clone(),
                        bwd: bwd.clone(),
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    }
    fn dom(&self, f: &Self::Mor) -> Self::Ob {
        f.src.clone()
    }
    fn cod(&self, f: &Self::Mor) -> Self::Ob {
        f.dst.clone()
    }
    fn identity(&self, p: &Self::Ob) -> Self::Mor {
        AntiparArrow {
            src: p.clone(),
            dst: p.clone(),
            fwd: SetoidFn::identity(&p.a),
            bwd: SetoidFn::identity(&p.x),
        }
    }
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor {
        AntiparArrow {
            src: f.src.clone(),
            dst: g.dst.clone(),
            fwd: g.fwd.after(&f.fwd).expect("composable"),
            bwd: f.bwd.after(&g.bwd).expect("composable"),
        }
    }
}

/// Every composite of two listed arrows satisfies the defining equation
/// `[S(1_a, φ⁻ ∘ θ⁻)](u) = [S(θ⁺ ∘ φ⁺, 1_z)](w)`.
pub fn verify_antipar_closure<S: PairPresheaf>(cat: &AntiparCategory<S>) -> Result<usize, Violation> {
    let p = Presentation::new(cat);
    let mors = p.morphisms();
    let counts: Vec<Result<usize, Violation>> = (0..mors.len())
        .into_par_iter()
        .map(|i| {
            let phi = &mors[i];
            let (_, b) = p.ends(i);
            for &j in p.outgoing(b) {
                let theta = &mors[j];
                let c = cat.compose(theta, phi);
                if !antipar_condition(&cat.s, &c.src, &c.dst, &c.fwd, &c.bwd) {
                    return Err(Violation::new(
                        "antiparallel closure",
                        format!("{theta:?} ∘ {phi:?} = {c:?} breaks the defining equation"),
                    ));
                }
            }
            Ok(p.outgoing(b).len())
        })
        .collect();
    counts.into_iter().sum()
}

/// `Chu(FinSetoid, γ) → Groth⇆(Hom(_ × _, γ))`, `(a, f, b) ↦ (a, b, f)` and
/// `(φ⁺, φ⁻) ↦ (φ⁺, φ⁻)`.
pub struct ChuAsGroth {
    src: ChuCategory,
    dst: AntiparCategory<HomPairing>,
}

impl ChuAsGroth {
    pub fn over_carriers(gamma: &Setoid, carriers: &[Setoid]) -> Self {
        ChuAsGroth {
            src: ChuCategory::over_carriers(gamma, carriers),
            dst: AntiparCategory::over_carriers(HomPairing::new(gamma), carriers),
        }
    }
}

fn as_object(s: &ChuSpace) -> AntiparObject<SetoidFn> {
    AntiparObject {
        a: s.left().clone(),
        x: s.right().clone(),
        u: s.pairing().clone(),
    }
}

impl Functor for ChuAsGroth {
    type Src = ChuCategory;
    type Dst = AntiparCategory<HomPairing>;
    fn source(&self) -> &ChuCategory {
        &self.src
    }
    fn target(&self) -> &AntiparCategory<HomPairing> {
        &self.dst
    }
    fn map_ob(&self, s: &ChuSpace) -> AntiparObject<SetoidFn> {
        as_object(s)
    }
    fn map_mor(&self, t: &ChuTransform) -> AntiparArrow<SetoidFn> {
        AntiparArrow {
            src: as_object(t.src()),
            dst: as_object(t.dst()),
            fwd: t.fwd().clone(),
            bwd: t.bwd().clone(),
        }
    }
}

/// The identification is an isomorphism of categories on the fragment.
pub fn chu_groth_identification(gamma: &Setoid, carriers: &[Setoid]) -> Result<IsoSummary, Violation> {
    verify_isomorphism(&ChuAsGroth::over_carriers(gamma, carriers))
}

use std::fmt;

use crate::error::{Error, Result};
use crate::finsetoid::{product_setoid, Setoid, SetoidFn};
use crate::util::for_each_choice;

/// A Chu space `(a, f, b)` with `f : a × b → γ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChuSpace {
    left: Setoid,
    right: Setoid,
    pairing: SetoidFn,
}

impl ChuSpace {
    /// `pairing` must be defined on the lexicographic product `left × right`;
    /// its codomain is the dualizing object.
    pub fn new(left: Setoid, right: Setoid, pairing: SetoidFn) -> Result<Self> {
        if pairing.dom() != &product_setoid(&left, &right) {
            return Err(Error::Mismatch("pairing is not defined on left × right".into()));
        }
        Ok(ChuSpace { left, right, pairing })
    }

    /// Builds the pairing from a value function; extensionality is checked.
    pub fn from_fn(
        left: &Setoid,
        right: &Setoid,
        gamma: &Setoid,
        value: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = right.size();
        let table = (0..left.size() * n).map(|p| value(p / n, p % n)).collect();
        let pairing = SetoidFn::new(product_setoid(left, right), gamma.clone(), table)?;
        Ok(ChuSpace {
            left: left.clone(),
            right: right.clone(),
            pairing,
        })
    }

    pub(crate) fn from_parts_unchecked(left: Setoid, right: Setoid, pairing: SetoidFn) -> Self {
        debug_assert_eq!(pairing.dom(), &product_setoid(&left, &right));
        ChuSpace { left, right, pairing }
    }

    pub fn gamma(&self) -> &Setoid {
        self.pairing.cod()
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
    pub fn value(&self, x: usize, y: usize) -> usize {
        self.pairing.apply(x * self.right.size() + y)
    }

    pub fn row(&self, x: usize) -> Vec<usize> {
        (0..self.right.size()).map(|y| self.value(x, y)).collect()
    }

    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.left.size()).map(|x| self.value(x, y)).collect()
    }

    /// Every space over `gamma` with both carriers drawn from `carriers`,
    /// ordered by left carrier, right carrier, then pairing table.
    pub fn all_over(gamma: &Setoid, carriers: &[Setoid]) -> Vec<ChuSpace> {
        let mut out = Vec::new();
        for a in carriers {
            for b in carriers {
                for f in SetoidFn::all(&product_setoid(a, b), gamma) {
                    out.push(ChuSpace::from_parts_unchecked(a.clone(), b.clone(), f));
                }
            }
        }
        out
    }
}

impl fmt::Debug for ChuSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.left, self.pairing, self.right)
    }
}

/// A Chu transform `(φ⁺, φ⁻) : (a, f, b) → (c, g, d)` with `φ⁺ : a → c` and
/// `φ⁻ : d → b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChuTransform {
    src: ChuSpace,
    dst: ChuSpace,
    fwd: SetoidFn,
    bwd: SetoidFn,
}

impl ChuTransform {
    pub fn new(src: ChuSpace, dst: ChuSpace, fwd: SetoidFn, bwd: SetoidFn) -> Result<Self> {
        if let Some((a, d)) = adjointness_witness(&fwd, &bwd, &src, &dst)? {
            return Err(Error::Invalid(format!(
                "not a Chu transform: f({a}, φ⁻({d})) ≠ g(φ⁺({a}), {d})"
            )));
        }
        Ok(ChuTransform { src, dst, fwd, bwd })
    }

    pub(crate) fn new_unchecked(src: ChuSpace, dst: ChuSpace, fwd: SetoidFn, bwd: SetoidFn) -> Self {
        ChuTransform { src, dst, fwd, bwd }
    }

    pub fn identity(space: &ChuSpace) -> Self {
        ChuTransform {
            src: space.clone(),
            dst: space.clone(),
            fwd: SetoidFn::identity(space.left()),
            bwd: SetoidFn::identity(space.right()),
        }
    }

    pub fn src(&self) -> &ChuSpace {
        &self.src
    }

    pub fn dst(&self) -> &ChuSpace {
        &self.dst
    }

    pub fn fwd(&self) -> &SetoidFn {
        &self.fwd
    }

    pub fn bwd(&self) -> &SetoidFn {
        &self.bwd
    }
}

impl fmt::Debug for ChuTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{:?}, {:?}⟩", self.fwd, self.bwd)
    }
}

fn check_typing(fwd: &SetoidFn, bwd: &SetoidFn, src: &ChuSpace, dst: &ChuSpace) -> Result<()> {
    if src.gamma() != dst.gamma() {
        return Err(Error::Mismatch("spaces over different dualizing objects".into()));
    }
    if fwd.dom() != src.left() || fwd.cod() != dst.left() {
        return Err(Error::Mismatch("forward map must run between the left carriers".into()));
    }
    if bwd.dom() != dst.right() || bwd.cod() != src.right() {
        return Err(Error::Mismatch(
            "backward map must run between the right carriers, reversed".into(),
        ));
    }
    Ok(())
}

/// A point `(a, d)` with `f(a, φ⁻ d) ≠ g(φ⁺ a, d)`, if there is one.
pub fn adjointness_witness(
    fwd: &SetoidFn,
    bwd: &SetoidFn,
    src: &ChuSpace,
    dst: &ChuSpace,
) -> Result<Option<(usize, usize)>> {
    check_typing(fwd, bwd, src, dst)?;
    let gamma = src.gamma();
    for a in 0..src.left().size() {
        for d in 0..dst.right().size() {
            if !gamma.eq(src.value(a, bwd.apply(d)), dst.value(fwd.apply(a), d)) {
                return Ok(Some((a, d)));
            }
        }
    }
    Ok(None)
}

pub fn is_chu_transform(fwd: &SetoidFn, bwd: &SetoidFn, src: &ChuSpace, dst: &ChuSpace) -> Result<bool> {
    Ok(adjointness_witness(fwd, bwd, src, dst)?.is_none())
}

/// `θ ∘ φ = (θ⁺ ∘ φ⁺, φ⁻ ∘ θ⁻)`.
pub fn chu_compose(theta: &ChuTransform, phi: &ChuTransform) -> Result<ChuTransform> {
    if phi.dst != theta.src {
        return Err(Error::Mismatch("transforms are not composable".into()));
    }
    let fwd = theta.fwd.after(&phi.fwd)?;
    let bwd = phi.bwd.after(&theta.bwd)?;
    debug_assert!(is_chu_transform(&fwd, &bwd, &phi.src, &theta.dst).unwrap_or(false));
    Ok(ChuTransform::new_unchecked(
        phi.src.clone(),
        theta.dst.clone(),
        fwd,
        bwd,
    ))
}

/// Every transform `src → dst`, forward map major, tables in lexicographic
/// order.
///
/// For a fixed forward map the adjointness condition constrains each value
/// `φ⁻(d)` separately, so the backward maps are the product of the admissible
/// choices on each class of `dst.right`.
pub fn enumerate_hom(src: &ChuSpace, dst: &ChuSpace) -> Vec<ChuTransform> {
    if src.gamma() != dst.gamma() {
        return Vec::new();
    }
    let gamma = src.gamma();
    let d_reps: Vec<usize> = dst.right().reps().collect();
    let b_reps: Vec<usize> = src.right().reps().collect();
    let mut out = Vec::new();
    for fwd in SetoidFn::all(src.left(), dst.left()) {
        let choices: Vec<Vec<usize>> = d_reps
            .iter()
            .map(|&d| {
                b_reps
                    .iter()
                    .copied()
                    .filter(|&y| (0..src.left().size()).all(|a| gamma.eq(src.value(a, y), dst.value(fwd.apply(a), d))))
                    .collect()
            })
            .collect();
        let sizes: Vec<usize> = choices.iter().map(Vec::len).collect();
        for_each_choice(&sizes, |pick| {
            let table = (0..dst.right().size())
                .map(|d| {
                    let k = d_reps.binary_search(&dst.right().rep(d)).expect("rep listed");
                    choices[k][pick[k]]
                })
                .collect();
            let bwd = SetoidFn::new_unchecked(dst.right().clone(), src.right().clone(), table);
            out.push(ChuTransform::new_unchecked(src.clone(), dst.clone(), fwd.clone(), bwd));
        });
    }
    out
}

/// Structural flags of a Chu space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ChuClass {
    /// Distinct points have distinct rows.
    pub separable: bool,
    /// Distinct states have distinct columns.
    pub extensional: bool,
    pub biextensional: bool,
    /// The right carrier is discrete and its columns are distinct canonical
    /// tables in increasing order, so the space is a literal sub-enumeration
    /// of the exponential with evaluation as pairing.
    pub normal: bool,
    /// The dualizing object has exactly two classes.
    pub boolean: bool,
}

pub fn classify(space: &ChuSpace) -> ChuClass {
    let distinct = |s: &Setoid, key: &dyn Fn(usize) -> Vec<usize>| {
        let reps: Vec<usize> = s.reps().collect();
        let keys: Vec<Vec<usize>> = reps.iter().map(|&x| key(x)).collect();
        (0..keys.len()).all(|i| (i + 1..keys.len()).all(|j| keys[i] != keys[j]))
    };
    let separable = distinct(space.left(), &|x| space.row(x));
    let extensional = distinct(space.right(), &|y| space.column(y));
    let normal =
        space.right().is_discrete() && (1..space.right().size()).all(|y| space.column(y - 1) < space.column(y));
    ChuClass {
        separable,
        extensional,
        biextensional: separable && extensional,
        normal,
        boolean: space.gamma().class_count() == 2,
    }
}

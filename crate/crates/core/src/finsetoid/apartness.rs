use std::fmt;
use std::sync::Arc;

use super::{Setoid, SetoidFn};

/// An inequality relation on a setoid, stored as a dense `size × size` table.
///
/// Construction does not validate the axioms; use [`Apartness::check`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Apartness {
    base: Setoid,
    neq: Arc<[bool]>,
}

/// The axiom an apartness table violates, with the offending elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ApartnessViolation {
    /// `x = y` and `x ≠ y`.
    Irreflexivity { x: usize, y: usize },
    /// `x ≠ y` but not `y ≠ x`.
    Symmetry { x: usize, y: usize },
    /// `x ≠ y` but neither `z ≠ x` nor `z ≠ y`.
    Cotransitivity { x: usize, y: usize, z: usize },
    /// `x ≠ y`, `x = x2`, `y = y2`, but not `x2 ≠ y2`.
    Extensionality { x: usize, y: usize, x2: usize, y2: usize },
}

impl ApartnessViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            ApartnessViolation::Irreflexivity { .. } => "Ap1",
            ApartnessViolation::Symmetry { .. } => "Ap2",
            ApartnessViolation::Cotransitivity { .. } => "Ap3",
            ApartnessViolation::Extensionality { .. } => "extensionality",
        }
    }
}

impl fmt::Display for ApartnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApartnessViolation::Irreflexivity { x, y } => write!(f, "Ap1: {x} = {y} and {x} ≠ {y}"),
            ApartnessViolation::Symmetry { x, y } => write!(f, "Ap2: {x} ≠ {y} but not {y} ≠ {x}"),
            ApartnessViolation::Cotransitivity { x, y, z } => {
                write!(f, "Ap3: {x} ≠ {y} but neither {z} ≠ {x} nor {z} ≠ {y}")
            }
            ApartnessViolation::Extensionality { x, y, x2, y2 } => {
                write!(f, "extensionality: {x} ≠ {y} but not {x2} ≠ {y2}")
            }
        }
    }
}

impl Apartness {
    pub fn from_fn(base: &Setoid, neq: impl Fn(usize, usize) -> bool) -> Self {
        let n = base.size();
        let table = (0..n * n).map(|i| neq(i / n, i % n)).collect();
        Apartness {
            base: base.clone(),
            neq: table,
        }
    }

    /// From explicit apart pairs. Indices out of range are ignored by the
    /// caller's responsibility; see the harness loader for validation.
    pub fn from_pairs(base: &Setoid, pairs: &[(usize, usize)]) -> Self {
        let n = base.size();
        let mut table = vec![false; n * n];
        for &(x, y) in pairs {
            if x < n && y < n {
                table[x * n + y] = true;
            }
        }
        Apartness {
            base: base.clone(),
            neq: table.into(),
        }
    }

    /// The denial inequality: `x ≠ y` iff not `x = y`.
    pub fn denial(base: &Setoid) -> Self {
        Self::from_fn(base, |x, y| !base.eq(x, y))
    }

    /// The empty inequality.
    pub fn empty(base: &Setoid) -> Self {
        Self::from_fn(base, |_, _| false)
    }

    pub fn base(&self) -> &Setoid {
        &self.base
    }

    #[inline]
    pub fn neq(&self, x: usize, y: usize) -> bool {
        self.neq[x * self.base.size() + y]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.base.size();
        (0..n * n).filter(|&i| self.neq[i]).map(|i| (i / n, i % n)).collect()
    }

    pub fn is_denial(&self) -> bool {
        *self == Self::denial(&self.base)
    }

    /// Checks the three apartness axioms and extensionality on `X × X`,
    /// returning the first violation found.
    pub fn check(&self) -> Result<(), ApartnessViolation> {
        let n = self.base.size();
        for x in 0..n {
            for y in 0..n {
                if self.base.eq(x, y) && self.neq(x, y) {
                    return Err(ApartnessViolation::Irreflexivity { x, y });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.neq(x, y) && !self.neq(y, x) {
                    return Err(ApartnessViolation::Symmetry { x, y });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !self.neq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !self.neq(z, x) && !self.neq(z, y) {
                        return Err(ApartnessViolation::Cotransitivity { x, y, z });
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !self.neq(x, y) {
                    continue;
                }
                for x2 in (0..n).filter(|&x2| self.base.eq(x, x2)) {
                    for y2 in (0..n).filter(|&y2| self.base.eq(y, y2)) {
                        if !self.neq(x2, y2) {
                            return Err(ApartnessViolation::Extensionality { x, y, x2, y2 });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// Every valid apartness on `base`, ordered by the bit pattern of the
    /// table. Intended for carriers of at most four elements.
    pub fn all_valid(base: &Setoid) -> Vec<Apartness> {
        let n = base.size();
        // apartness is symmetric and extensional, so it is a symmetric
        // relation on classes without the diagonal
        let reps: Vec<usize> = base.reps().collect();
        let slots: Vec<(usize, usize)> = (0..reps.len())
            .flat_map(|i| (i + 1..reps.len()).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        for bits in 0u64..(1u64 << slots.len()) {
            let apart = |x: usize, y: usize| {
                let (cx, cy) = (base.class_index(x), base.class_index(y));
                let (i, j) = if cx < cy { (cx, cy) } else { (cy, cx) };
                i != j && {
                    let k = slots.iter().position(|&s| s == (i, j)).expect("slot exists");
                    bits >> k & 1 == 1
                }
            };
            let a = Apartness::from_fn(base, apart);
            if a.is_valid() {
                out.push(a);
            }
        }
        debug_assert!(out.iter().all(|a| a.base.size() == n));
        out
    }
}

impl fmt::Debug for Apartness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Apartness({:?}, {:?})", self.base, self.pairs())
    }
}

/// `f` is strongly extensional when `f(x) ≠ f(x')` implies `x ≠ x'`.
pub fn is_strongly_extensional(f: &SetoidFn, dom_neq: &Apartness, cod_neq: &Apartness) -> bool {
    strong_extensionality_witness(f, dom_neq, cod_neq).is_none()
}

/// A pair whose images are apart while the pair itself is not.
pub fn strong_extensionality_witness(f: &SetoidFn, dom_neq: &Apartness, cod_neq: &Apartness) -> Option<(usize, usize)> {
    let n = f.dom().size();
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| cod_neq.neq(f.apply(x), f.apply(y)) && !dom_neq.neq(x, y))
}

use std::fmt;
use std::sync::Arc;

use super::Setoid;
use crate::error::{Error, Result};

/// A total, equality-respecting map between finite setoids.
///
/// Tables are stored with every value replaced by its canonical
/// representative, so structural equality of two maps with the same domain
/// and codomain is pointwise equality in the codomain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetoidFn {
    dom: Setoid,
    cod: Setoid,
    table: Arc<[usize]>,
}

impl SetoidFn {
    /// Checks totality, range and extensionality. Non-extensional tables are
    /// rejected rather than repaired.
    pub fn new(dom: Setoid, cod: Setoid, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size() {
            return Err(Error::NotTotal {
                expected: dom.size(),
                got: table.len(),
            });
        }
        for &v in &table {
            if v >= cod.size() {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    size: cod.size(),
                });
            }
        }
        for x in 0..dom.size() {
            let r = dom.rep(x);
            if !cod.eq(table[x], table[r]) {
                return Err(Error::NotExtensional {
                    x: r,
                    x2: x,
                    fx: table[r],
                    fx2: table[x],
                });
            }
        }
        Ok(Self::new_unchecked(dom, cod, table))
    }

    /// Caller guarantees the table is total, in range and extensional.
    pub(crate) fn new_unchecked(dom: Setoid, cod: Setoid, mut table: Vec<usize>) -> Self {
        for v in table.iter_mut() {
            *v = cod.rep(*v);
        }
        SetoidFn {
            dom,
            cod,
            table: table.into(),
        }
    }

    pub fn identity(s: &Setoid) -> Self {
        Self::new_unchecked(s.clone(), s.clone(), (0..s.size()).collect())
    }

    pub fn constant(dom: &Setoid, cod: &Setoid, value: usize) -> Result<Self> {
        Self::new(dom.clone(), cod.clone(), vec![value; dom.size()])
    }

    pub fn dom(&self) -> &Setoid {
        &self.dom
    }

    pub fn cod(&self) -> &Setoid {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &SetoidFn) -> Result<SetoidFn> {
        if f.cod != self.dom {
            return Err(Error::Mismatch(format!(
                "cannot compose: codomain {:?} is not domain {:?}",
                f.cod, self.dom
            )));
        }
        let table = f.table.iter().map(|&y| self.table[y]).collect();
        Ok(Self::new_unchecked(f.dom.clone(), self.cod.clone(), table))
    }

    /// Every extensional map `dom → cod`, in lexicographic order of tables.
    pub fn all(dom: &Setoid, cod: &Setoid) -> Vec<SetoidFn> {
        let reps: Vec<usize> = dom.reps().collect();
        let targets: Vec<usize> = cod.reps().collect();
        if targets.is_empty() && !reps.is_empty() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut choice = vec![0usize; reps.len()];
        loop {
            let table: Vec<usize> = (0..dom.size())
                .map(|x| targets[choice[reps.binary_search(&dom.rep(x)).expect("rep is listed")]])
                .collect();
            out.push(SetoidFn {
                dom: dom.clone(),
                cod: cod.clone(),
                table: table.into(),
            });
            // odometer, last representative fastest
            let mut i = reps.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < targets.len() {
                    break;
                }
                choice[i] = 0;
            }
        }
    }

    /// Number of extensional maps, without enumerating them.
    pub fn count(dom: &Setoid, cod: &Setoid) -> usize {
        cod.class_count().pow(dom.class_count() as u32)
    }

    pub fn is_injection(&self) -> bool {
        self.non_injective_pair().is_none()
    }

    /// Two unequal domain elements with equal images, if any.
    pub fn non_injective_pair(&self) -> Option<(usize, usize)> {
        let reps: Vec<usize> = self.dom.reps().collect();
        for (i, &x) in reps.iter().enumerate() {
            for &y in &reps[i + 1..] {
                if self.table[x] == self.table[y] {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_surjection(&self) -> bool {
        self.cod.reps().all(|y| self.table.contains(&y))
    }

    pub fn is_bijection(&self) -> bool {
        self.is_injection() && self.is_surjection()
    }

    /// The two-sided inverse of a bijection.
    pub fn inverse(&self) -> Option<SetoidFn> {
        if !self.is_bijection() {
            return None;
        }
        let table = (0..self.cod.size())
            .map(|y| {
                (0..self.dom.size())
                    .find(|&x| self.table[x] == self.cod.rep(y))
                    .map(|x| self.dom.rep(x))
            })
            .collect::<Option<Vec<usize>>>()?;
        Some(Self::new_unchecked(self.cod.clone(), self.dom.clone(), table))
    }
}

impl fmt::Debug for SetoidFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.table[..])
    }
}

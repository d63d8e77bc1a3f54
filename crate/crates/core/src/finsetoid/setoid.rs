use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite carrier `0..size` with an explicit equivalence relation.
///
/// The relation is stored as a table sending each index to the least index of
/// its class, so two setoids are equal exactly when they have the same size,
/// the same classes and the same (optional) element labels.
///
/// Labels name the elements when a carrier stands for a set of concrete
/// things (for instance the ideals of an information system). They take part
/// in equality, so two carriers of the same shape but with different elements
/// are different objects.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Setoid {
    reps: Arc<[usize]>,
    labels: Option<Arc<[u64]>>,
}

impl Setoid {
    /// The setoid whose equality is the identity relation.
    pub fn discrete(size: usize) -> Self {
        Self::from_reps_unchecked((0..size).collect())
    }

    /// The setoid in which all elements are equal.
    pub fn indiscrete(size: usize) -> Self {
        Self::from_reps_unchecked(vec![0; size])
    }

    pub fn empty() -> Self {
        Self::discrete(0)
    }

    /// The one-element setoid, used as the terminal object.
    pub fn unit() -> Self {
        Self::discrete(1)
    }

    pub(crate) fn from_reps_unchecked(reps: Vec<usize>) -> Self {
        Setoid {
            reps: reps.into(),
            labels: None,
        }
    }

    /// Builds the setoid whose equality is the equivalence closure of `pairs`.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut parent: Vec<usize> = (0..size).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for &(x, y) in pairs {
            for i in [x, y] {
                if i >= size {
                    return Err(Error::IndexOutOfRange { index: i, size });
                }
            }
            let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
            // the least index always becomes the root
            if rx < ry {
                parent[ry] = rx;
            } else {
                parent[rx] = ry;
            }
        }
        let reps = (0..size).map(|x| find(&mut parent, x)).collect();
        Ok(Self::from_reps_unchecked(reps))
    }

    /// Builds a setoid from a full relation given as a predicate, checking
    /// that it is an equivalence.
    pub fn from_relation(size: usize, related: impl Fn(usize, usize) -> bool) -> Result<Self> {
        for x in 0..size {
            if !related(x, x) {
                return Err(Error::NotEquivalence {
                    law: "reflexivity",
                    x,
                    y: x,
                });
            }
        }
        for x in 0..size {
            for y in 0..size {
                if related(x, y) && !related(y, x) {
                    return Err(Error::NotEquivalence { law: "symmetry", x, y });
                }
            }
        }
        for x in 0..size {
            for y in 0..size {
                if !related(x, y) {
                    continue;
                }
                for z in 0..size {
                    if related(y, z) && !related(x, z) {
                        return Err(Error::NotEquivalence {
                            law: "transitivity",
                            x,
                            y: z,
                        });
                    }
                }
            }
        }
        let reps = (0..size)
            .map(|x| (0..=x).find(|&y| related(x, y)).unwrap_or(x))
            .collect();
        Ok(Self::from_reps_unchecked(reps))
    }

    /// Attaches element labels. Labels must be constant on classes.
    pub fn with_labels(self, labels: Vec<u64>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::LabelCount {
                expected: self.size(),
                got: labels.len(),
            });
        }
        for x in 0..self.size() {
            if labels[x] != labels[self.rep(x)] {
                return Err(Error::Invalid(format!(
                    "label of {x} differs from the label of its class representative"
                )));
            }
        }
        Ok(Setoid {
            reps: self.reps,
            labels: Some(labels.into()),
        })
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// The same setoid with its labels removed.
    pub fn unlabelled(&self) -> Self {
        Setoid {
            reps: self.reps.clone(),
            labels: None,
        }
    }

    pub fn size(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Canonical representative: the least index of the class of `x`.
    #[inline]
    pub fn rep(&self, x: usize) -> usize {
        self.reps[x]
    }

    #[inline]
    pub fn eq(&self, x: usize, y: usize) -> bool {
        self.reps[x] == self.reps[y]
    }

    pub fn rep_table(&self) -> &[usize] {
        &self.reps
    }

    /// Class representatives in increasing order.
    pub fn reps(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).filter(move |&x| self.reps[x] == x)
    }

    pub fn class_count(&self) -> usize {
        self.reps().count()
    }

    pub fn is_discrete(&self) -> bool {
        self.reps().count() == self.size()
    }

    /// Position of the class of `x` among the classes, in representative order.
    pub fn class_index(&self, x: usize) -> usize {
        let r = self.rep(x);
        self.reps().take_while(|&y| y < r).count()
    }

    /// Every setoid with at most `max_size` elements (unlabelled), ordered by
    /// size and then by the restricted growth string of the partition.
    pub fn all_up_to(max_size: usize) -> Vec<Setoid> {
        let mut out = Vec::new();
        for n in 0..=max_size {
            out.extend(Self::all_of_size(n));
        }
        out
    }

    pub fn all_of_size(n: usize) -> Vec<Setoid> {
        if n == 0 {
            return vec![Setoid::empty()];
        }
        let mut out = Vec::new();
        let mut rgs = vec![0usize; n];
        loop {
            let mut first = Vec::new();
            let reps = rgs
                .iter()
                .enumerate()
                .map(|(i, &block)| {
                    if block == first.len() {
                        first.push(i);
                    }
                    first[block]
                })
                .collect();
            out.push(Self::from_reps_unchecked(reps));
            // next restricted growth string
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return out;
                }
                let bound = rgs[..i].iter().max().copied().unwrap_or(0) + 1;
                if rgs[i] < bound {
                    rgs[i] += 1;
                    for v in rgs.iter_mut().skip(i + 1) {
                        *v = 0;
                    }
                    break;
                }
                i -= 1;
            }
        }
    }
}

impl fmt::Debug for Setoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Setoid{:?}", &self.reps[..])?;
        if let Some(labels) = &self.labels {
            write!(f, "@{:?}", &labels[..])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let s = Setoid::from_pairs(3, &[]).unwrap();
        assert_eq!(s.class_count(), 3);
        let s = Setoid::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(s.class_count(), 1);
        let s = Setoid::from_pairs(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(s.rep_table(), &[0, 0, 0, 3]);
        // order of merging must not matter for the canonical representative
        let s = Setoid::from_pairs(4, &[(3, 2), (2, 1)]).unwrap();
        assert_eq!(s.rep_table(), &[0, 1, 1, 1]);
    }

    #[test]
    fn out_of_range_pair() {
        assert_eq!(
            Setoid::from_pairs(2, &[(0, 2)]),
            Err(Error::IndexOutOfRange { index: 2, size: 2 })
        );
    }

    #[test]
    fn relation_must_be_equivalence() {
        let err = Setoid::from_relation(2, |x, y| x == y || (x, y) == (0, 1)).unwrap_err();
        assert_eq!(
            err,
            Error::NotEquivalence {
                law: "symmetry",
                x: 0,
                y: 1
            }
        );
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let counts: Vec<usize> = (0..5).map(|n| Setoid::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15]);
        assert_eq!(Setoid::all_up_to(3).len(), 9);
    }

    #[test]
    fn labels_take_part_in_equality() {
        let a = Setoid::discrete(2).with_labels(vec![0, 1]).unwrap();
        let b = Setoid::discrete(2).with_labels(vec![0, 2]).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.unlabelled(), b.unlabelled());
        assert!(Setoid::indiscrete(2).with_labels(vec![0, 1]).is_err());
    }
}

use super::{Apartness, Setoid, SetoidFn};
use crate::error::{Error, Result};

/// A subset `(A, i)` of an ambient setoid, given by an injection `i : A → X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetEmbedding {
    inj: SetoidFn,
}

impl SubsetEmbedding {
    pub fn new(inj: SetoidFn) -> Result<Self> {
        if let Some((x, x2)) = inj.non_injective_pair() {
            return Err(Error::NotInjective { x, x2 });
        }
        Ok(SubsetEmbedding { inj })
    }

    /// The canonical subset picked out by an equality-closed bitmask.
    ///
    /// Its carrier lists the members in increasing order, inherits their
    /// equality, and is labelled by their ambient representatives, so subsets with
    /// different members have different carriers.
    pub fn canonical(ambient: &Setoid, mask: u64) -> Result<Self> {
        let n = ambient.size();
        if n < 64 && mask >> n != 0 {
            return Err(Error::Invalid(format!("mask {mask:#b} exceeds a carrier of size {n}")));
        }
        for x in 0..n {
            if (mask >> x & 1) != (mask >> ambient.rep(x) & 1) {
                return Err(Error::Invalid(format!(
                    "mask {mask:#b} is not closed under equality at {x}"
                )));
            }
        }
        let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
        let reps = members
            .iter()
            .map(|&x| members.iter().position(|&y| ambient.eq(x, y)).expect("x is a member"))
            .collect();
        let sub = Setoid::from_reps_unchecked(reps)
            .with_labels(members.iter().map(|&x| ambient.rep(x) as u64).collect())
            .expect("ambient representatives are constant on classes");
        let inj = SetoidFn::new_unchecked(sub, ambient.clone(), members);
        Ok(SubsetEmbedding { inj })
    }

    /// Every equality-closed bitmask of `ambient`, in increasing order.
    pub fn closed_masks(ambient: &Setoid) -> Vec<u64> {
        let reps: Vec<usize> = ambient.reps().collect();
        let mut out: Vec<u64> = (0u64..(1 << reps.len()))
            .map(|bits| {
                (0..ambient.size())
                    .filter(|&x| bits >> reps.iter().position(|&r| r == ambient.rep(x)).expect("rep") & 1 == 1)
                    .fold(0u64, |m, x| m | 1 << x)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// One canonical subset per equality-closed bitmask, in mask order.
    pub fn all_canonical(ambient: &Setoid) -> Vec<SubsetEmbedding> {
        Self::closed_masks(ambient)
            .into_iter()
            .map(|m| Self::canonical(ambient, m).expect("closed mask"))
            .collect()
    }

    pub fn sub(&self) -> &Setoid {
        self.inj.dom()
    }

    pub fn ambient(&self) -> &Setoid {
        self.inj.cod()
    }

    pub fn inj(&self) -> &SetoidFn {
        &self.inj
    }

    /// The equality-closed bitmask of the image.
    pub fn image_mask(&self) -> u64 {
        let amb = self.ambient();
        self.inj
            .table()
            .iter()
            .flat_map(|&y| (0..amb.size()).filter(move |&z| amb.eq(y, z)))
            .fold(0u64, |m, z| m | 1 << z)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.image_mask() >> x & 1 == 1
    }

    /// The unique map `self → other` over the ambient, if the image of
    /// `self` lies inside the image of `other`.
    pub fn inclusion_into(&self, other: &SubsetEmbedding) -> Option<SetoidFn> {
        if self.ambient() != other.ambient() {
            return None;
        }
        let amb = self.ambient();
        let table = (0..self.sub().size())
            .map(|a| (0..other.sub().size()).find(|&b| amb.eq(other.inj.apply(b), self.inj.apply(a))))
            .collect::<Option<Vec<_>>>()?;
        Some(SetoidFn::new_unchecked(self.sub().clone(), other.sub().clone(), table))
    }
}

/// Every image point of `a` is apart from every image point of `b`.
pub fn is_disjoint(a: &SubsetEmbedding, b: &SubsetEmbedding, neq: &Apartness) -> bool {
    disjointness_witness(a, b, neq).is_none()
}

/// A pair `(a, b)` of subset elements whose images are not apart.
pub fn disjointness_witness(a: &SubsetEmbedding, b: &SubsetEmbedding, neq: &Apartness) -> Option<(usize, usize)> {
    (0..a.sub().size())
        .flat_map(|x| (0..b.sub().size()).map(move |y| (x, y)))
        .find(|&(x, y)| !neq.neq(a.inj.apply(x), b.inj.apply(y)))
}

/// The inequality a subset inherits from its ambient.
pub fn canonical_inequality(a: &SubsetEmbedding, neq: &Apartness) -> Apartness {
    Apartness::from_fn(a.sub(), |x, y| neq.neq(a.inj.apply(x), a.inj.apply(y)))
}

/// A pair `(A¹, A⁰)` of subsets whose members are pairwise apart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComplementedSubset {
    one: SubsetEmbedding,
    zero: SubsetEmbedding,
    neq: Apartness,
}

impl ComplementedSubset {
    pub fn new(one: SubsetEmbedding, zero: SubsetEmbedding, neq: Apartness) -> Result<Self> {
        if one.ambient() != zero.ambient() || one.ambient() != neq.base() {
            return Err(Error::Mismatch(
                "complemented subset parts need a common ambient".into(),
            ));
        }
        if let Some((x, y)) = disjointness_witness(&one, &zero, &neq) {
            return Err(Error::NotDisjoint {
                one: one.inj.apply(x),
                zero: zero.inj.apply(y),
            });
        }
        Ok(ComplementedSubset { one, zero, neq })
    }

    /// Every complemented subset built from canonical parts, ordered by
    /// `(mask of A¹, mask of A⁰)`.
    pub fn all_canonical(neq: &Apartness) -> Vec<ComplementedSubset> {
        let parts = SubsetEmbedding::all_canonical(neq.base());
        let mut out = Vec::new();
        for one in &parts {
            for zero in &parts {
                if is_disjoint(one, zero, neq) {
                    out.push(ComplementedSubset {
                        one: one.clone(),
                        zero: zero.clone(),
                        neq: neq.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn one(&self) -> &SubsetEmbedding {
        &self.one
    }

    pub fn zero(&self) -> &SubsetEmbedding {
        &self.zero
    }

    pub fn apartness(&self) -> &Apartness {
        &self.neq
    }

    pub fn ambient(&self) -> &Setoid {
        self.one.ambient()
    }

    /// `χ(x)`: 1 on the image of `A¹`, 0 on the image of `A⁰`, undefined
    /// elsewhere.
    pub fn indicator(&self, x: usize) -> Result<u8> {
        if x >= self.ambient().size() {
            return Err(Error::IndexOutOfRange {
                index: x,
                size: self.ambient().size(),
            });
        }
        if self.one.contains(x) {
            Ok(1)
        } else if self.zero.contains(x) {
            Ok(0)
        } else {
            Err(Error::Undefined(format!(
                "{x} lies outside the domain of the complemented subset"
            )))
        }
    }

    /// `A ⊆ B` iff `A¹ ⊆ B¹` and `B⁰ ⊆ A⁰`.
    pub fn is_included_in(&self, other: &ComplementedSubset) -> bool {
        self.one.inclusion_into(&other.one).is_some() && other.zero.inclusion_into(&self.zero).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three() -> (Setoid, Apartness) {
        let s = Setoid::discrete(3);
        let d = Apartness::denial(&s);
        (s, d)
    }

    #[test]
    fn disjointness_examples() {
        let (s, d) = three();
        let sub = |m| SubsetEmbedding::canonical(&s, m).unwrap();
        assert!(is_disjoint(&sub(0b001), &sub(0b100), &d));
        assert!(!is_disjoint(&sub(0b001), &sub(0b001), &d));
        assert!(is_disjoint(&sub(0b011), &sub(0b100), &d));
    }

    #[test]
    fn inherited_inequality() {
        let (s, d) = three();
        let full = SubsetEmbedding::canonical(&s, 0b111).unwrap();
        assert_eq!(canonical_inequality(&full, &d).pairs(), d.pairs());
        let single = SubsetEmbedding::canonical(&s, 0b010).unwrap();
        assert!(canonical_inequality(&single, &d).pairs().is_empty());
        let ends = SubsetEmbedding::canonical(&s, 0b101).unwrap();
        let e = canonical_inequality(&ends, &d);
        assert!(e.is_denial());
        assert!(e.is_valid());
    }

    #[test]
    fn indicator_values() {
        let (s, d) = three();
        let a = ComplementedSubset::new(
            SubsetEmbedding::canonical(&s, 0b001).unwrap(),
            SubsetEmbedding::canonical(&s, 0b100).unwrap(),
            d,
        )
        .unwrap();
        assert_eq!(a.indicator(0), Ok(1));
        assert_eq!(a.indicator(2), Ok(0));
        assert!(matches!(a.indicator(1), Err(Error::Undefined(_))));
    }

    #[test]
    fn overlapping_parts_are_rejected() {
        let (s, d) = three();
        let one = SubsetEmbedding::canonical(&s, 0b011).unwrap();
        let zero = SubsetEmbedding::canonical(&s, 0b010).unwrap();
        assert_eq!(
            ComplementedSubset::new(one, zero, d),
            Err(Error::NotDisjoint { one: 1, zero: 1 })
        );
    }

    #[test]
    fn canonical_masks_respect_equality() {
        let s = Setoid::from_pairs(3, &[(0, 2)]).unwrap();
        assert_eq!(SubsetEmbedding::closed_masks(&s), vec![0b000, 0b010, 0b101, 0b111]);
        assert!(SubsetEmbedding::canonical(&s, 0b001).is_err());
        let both = SubsetEmbedding::canonical(&s, 0b101).unwrap();
        assert_eq!(both.sub().class_count(), 1);
    }

    #[test]
    fn subsets_of_the_same_shape_differ() {
        let s = Setoid::discrete(2);
        let a = SubsetEmbedding::canonical(&s, 0b01).unwrap();
        let b = SubsetEmbedding::canonical(&s, 0b10).unwrap();
        assert_ne!(a.sub(), b.sub());
    }
}

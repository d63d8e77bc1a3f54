//! Affine categories `Aff(FinSetoid, X)`: carriers equipped with a family of
//! `X`-valued functions, and maps that pull the family back into itself.

use std::fmt;

use super::{ChuCategory, ChuSpace, ChuTransform};
use crate::category::{Category, Functor};
use crate::error::{Error, Result};
use crate::finsetoid::{Setoid, SetoidFn};

/// A carrier `A` with a duplicate-free family `F` of maps `A → X`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffObject {
    carrier: Setoid,
    value: Setoid,
    functions: Vec<SetoidFn>,
}

impl AffObject {
    pub fn new(carrier: Setoid, value: Setoid, functions: Vec<SetoidFn>) -> Result<Self> {
        for (i, g) in functions.iter().enumerate() {
            if g.dom() != &carrier || g.cod() != &value {
                return Err(Error::Mismatch(format!("function {i} is not a map A → X")));
            }
            if let Some(j) = functions[..i].iter().position(|h| h == g) {
                return Err(Error::Invalid(format!("functions {j} and {i} are pointwise equal")));
            }
        }
        Ok(AffObject {
            carrier,
            value,
            functions,
        })
    }

    pub fn carrier(&self) -> &Setoid {
        &self.carrier
    }

    pub fn value(&self) -> &Setoid {
        &self.value
    }

    pub fn functions(&self) -> &[SetoidFn] {
        &self.functions
    }

    /// Every family on `carrier`, as sub-enumerations of the lexicographic
    /// list of maps selected by bitmask.
    pub fn all_on(carrier: &Setoid, value: &Setoid) -> Vec<AffObject> {
        let maps = SetoidFn::all(carrier, value);
        assert!(maps.len() < 20, "family enumeration is limited to small exponentials");
        (0u32..(1 << maps.len()))
            .map(|bits| AffObject {
                carrier: carrier.clone(),
                value: value.clone(),
                functions: (0..maps.len())
                    .filter(|k| bits >> k & 1 == 1)
                    .map(|k| maps[k].clone())
                    .collect(),
            })
            .collect()
    }

    /// Some pair of distinct points is told apart by a listed function.
    pub fn separates_points(&self) -> bool {
        let reps: Vec<usize> = self.carrier.reps().collect();
        reps.iter().enumerate().all(|(i, &x)| {
            reps[i + 1..]
                .iter()
                .all(|&y| self.functions.iter().any(|g| g.apply(x) != g.apply(y)))
        })
    }
}

impl fmt::Debug for AffObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.carrier, self.functions)
    }
}

/// A map `h : A → B` with `g ∘ h ∈ F` for every `g ∈ G`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffMorphism {
    src: AffObject,
    dst: AffObject,
    map: SetoidFn,
}

impl fmt::Debug for AffMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.map)
    }
}

impl AffMorphism {
    pub fn new(src: AffObject, dst: AffObject, map: SetoidFn) -> Result<Self> {
        pullback(&map, &src, &dst)?;
        Ok(AffMorphism { src, dst, map })
    }

    pub fn src(&self) -> &AffObject {
        &self.src
    }

    pub fn dst(&self) -> &AffObject {
        &self.dst
    }

    pub fn map(&self) -> &SetoidFn {
        &self.map
    }
}

/// `h^* : G → F`, `g ↦ g ∘ h`, as a map between the index setoids of the two
/// families.
pub fn pullback(h: &SetoidFn, src: &AffObject, dst: &AffObject) -> Result<SetoidFn> {
    if h.dom() != src.carrier() || h.cod() != dst.carrier() || src.value() != dst.value() {
        return Err(Error::Mismatch(
            "h must run between the carriers over a common X".into(),
        ));
    }
    let table = dst
        .functions
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let gh = g.after(h).expect("g starts at cod h");
            src.functions.iter().position(|f| *f == gh).ok_or_else(|| {
                Error::NotAffMorphism(format!("the pullback of function {k} is {gh:?}, which is not listed"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SetoidFn::new(
        Setoid::discrete(dst.functions.len()),
        Setoid::discrete(src.functions.len()),
        table,
    )
    .expect("discrete index setoids"))
}

/// `Aff(FinSetoid, X)` over a listed fragment of families.
pub struct AffCategory {
    value: Setoid,
    objects: Vec<AffObject>,
}

impl AffCategory {
    /// Every family over every carrier with at most `cap` elements.
    pub fn capped(value: &Setoid, cap: usize) -> Self {
        let objects = Setoid::all_up_to(cap)
            .iter()
            .flat_map(|a| AffObject::all_on(a, value))
            .collect();
        AffCategory {
            value: value.clone(),
            objects,
        }
    }

    pub fn with_objects(value: &Setoid, objects: Vec<AffObject>) -> Self {
        AffCategory {
            value: value.clone(),
            objects,
        }
    }

    pub fn value(&self) -> &Setoid {
        &self.value
    }
}

impl Category for AffCategory {
    type Ob = AffObject;
    type Mor = AffMorphism;

    fn objects(&self) -> Vec<AffObject> {
        self.objects.clone()
    }
    fn hom(&self, a: &AffObject, b: &AffObject) -> Vec<AffMorphism> {
        SetoidFn::all(a.carrier(), b.carrier())
            .into_iter()
            .filter(|h| pullback(h, a, b).is_ok())
            .map(|h| AffMorphism {
                src: a.clone(),
                dst: b.clone(),
                map: h,
            })
            .collect()
    }
    fn dom(&self, f: &AffMorphism) -> AffObject {
        f.src.clone()
    }
    fn cod(&self, f: &AffMorphism) -> AffObject {
        f.dst.clone()
    }
    fn identity(&self, a: &AffObject) -> AffMorphism {
        AffMorphism {
            src: a.clone(),
            dst: a.clone(),
            map: SetoidFn::identity(a.carrier()),
        }
    }
    fn compose(&self, g: &AffMorphism, f: &AffMorphism) -> AffMorphism {
        AffMorphism {
            src: f.src.clone(),
            dst: g.dst.clone(),
            map: g.map.after(&f.map).expect("composable"),
        }
    }
}

/// `(A, F) ↦ (A, ev, F)` and `h ↦ (h, h^*)`.
pub struct AffRepresentation<'a> {
    src: &'a AffCategory,
    dst: ChuCategory,
}

impl<'a> AffRepresentation<'a> {
    pub fn new(src: &'a AffCategory) -> Self {
        let images = src.objects.iter().map(aff_space).collect();
        AffRepresentation {
            src,
            dst: ChuCategory::with_objects(src.value(), images),
        }
    }
}

/// `(A, ev_{A,F}, F)` with `F` indexed by list position.
pub fn aff_space(a: &AffObject) -> ChuSpace {
    ChuSpace::from_fn(a.carrier(), &Setoid::discrete(a.functions.len()), a.value(), |x, k| {
        a.functions[k].apply(x)
    })
    .expect("listed functions are extensional")
}

impl Functor for AffRepresentation<'_> {
    type Src = AffCategory;
    type Dst = ChuCategory;
    fn source(&self) -> &AffCategory {
        self.src
    }
    fn target(&self) -> &ChuCategory {
        &self.dst
    }
    fn map_ob(&self, a: &AffObject) -> ChuSpace {
        aff_space(a)
    }
    fn map_mor(&self, f: &AffMorphism) -> ChuTransform {
        let bwd = pullback(&f.map, &f.src, &f.dst).expect("Aff morphisms pull back");
        ChuTransform::new_unchecked(aff_space(&f.src), aff_space(&f.dst), f.map.clone(), bwd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_family_accepts_every_map() {
        let x = Setoid::discrete(2);
        let a = Setoid::discrete(2);
        let c = |s: &Setoid| AffObject::new(s.clone(), x.clone(), vec![SetoidFn::constant(s, &x, 1).unwrap()]).unwrap();
        let cat = AffCategory::with_objects(&x, vec![]);
        assert_eq!(cat.hom(&c(&a), &c(&Setoid::unit())).len(), 1);
        assert_eq!(cat.hom(&c(&a), &c(&a)).len(), 4);
        assert_eq!(aff_space(&c(&a)).right().size(), 1);
    }

    #[test]
    fn non_member_pullback_is_rejected() {
        let x = Setoid::discrete(2);
        let a = Setoid::discrete(2);
        let id = SetoidFn::identity(&a);
        let src = AffObject::new(a.clone(), x.clone(), vec![]).unwrap();
        let dst = AffObject::new(a.clone(), x.clone(), vec![id.clone()]).unwrap();
        assert!(matches!(pullback(&id, &src, &dst), Err(Error::NotAffMorphism(_))));
    }
}

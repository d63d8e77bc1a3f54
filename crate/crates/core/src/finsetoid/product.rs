//! Binary products and exponentials of finite setoids.

use super::{Setoid, SetoidFn};
use crate::error::{Error, Result};

/// The product setoid of `left` and `right`: pairs indexed `x * |right| + y`
/// (lexicographic order), equal when both components are equal.
pub fn product_setoid(left: &Setoid, right: &Setoid) -> Setoid {
    let n = right.size();
    let mut reps = Vec::with_capacity(left.size() * n);
    for x in 0..left.size() {
        for y in 0..n {
            reps.push(left.rep(x) * n + right.rep(y));
        }
    }
    Setoid::from_reps_unchecked(reps)
}

/// A chosen product `left × right` with its projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductWitness {
    pub left: Setoid,
    pub right: Setoid,
    pub prod: Setoid,
    pub proj_left: SetoidFn,
    pub proj_right: SetoidFn,
}

impl ProductWitness {
    pub fn new(left: &Setoid, right: &Setoid) -> Self {
        let prod = product_setoid(left, right);
        let n = right.size();
        let proj_left = SetoidFn::new_unchecked(prod.clone(), left.clone(), (0..prod.size()).map(|p| p / n).collect());
        let proj_right =
            SetoidFn::new_unchecked(prod.clone(), right.clone(), (0..prod.size()).map(|p| p % n).collect());
        ProductWitness {
            left: left.clone(),
            right: right.clone(),
            prod,
            proj_left,
            proj_right,
        }
    }

    #[inline]
    pub fn pair(&self, x: usize, y: usize) -> usize {
        x * self.right.size() + y
    }

    #[inline]
    pub fn unpair(&self, p: usize) -> (usize, usize) {
        let n = self.right.size();
        (p / n, p % n)
    }

    /// The mediating map `⟨f, g⟩ : c → left × right`.
    pub fn tuple(&self, f: &SetoidFn, g: &SetoidFn) -> Result<SetoidFn> {
        if f.dom() != g.dom() || f.cod() != &self.left || g.cod() != &self.right {
            return Err(Error::Mismatch(
                "tupling needs a common domain and the product factors as codomains".into(),
            ));
        }
        let table = (0..f.dom().size()).map(|z| self.pair(f.apply(z), g.apply(z))).collect();
        Ok(SetoidFn::new_unchecked(f.dom().clone(), self.prod.clone(), table))
    }
}

/// `(f × g)(x, y) = (f(x), g(y))`.
pub fn fn_product(f: &SetoidFn, g: &SetoidFn) -> SetoidFn {
    let dom = product_setoid(f.dom(), g.dom());
    let cod = product_setoid(f.cod(), g.cod());
    let (n, m) = (g.dom().size(), g.cod().size());
    let table = (0..dom.size()).map(|p| f.apply(p / n) * m + g.apply(p % n)).collect();
    SetoidFn::new_unchecked(dom, cod, table)
}

/// The exponential `value^base`: one element per extensionality class of maps
/// `base → value`, in lexicographic order of canonical tables, together with
/// the evaluation map `base × value^base → value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentialWitness {
    pub base: Setoid,
    pub value: Setoid,
    pub expo: Setoid,
    pub maps: Vec<SetoidFn>,
    pub ev: SetoidFn,
}

impl ExponentialWitness {
    pub fn new(base: &Setoid, value: &Setoid) -> Self {
        let maps = SetoidFn::all(base, value);
        let expo = Setoid::discrete(maps.len());
        let k = maps.len();
        let dom = product_setoid(base, &expo);
        let table = (0..dom.size()).map(|p| maps[p % k].apply(p / k)).collect();
        let ev = SetoidFn::new_unchecked(dom, value.clone(), table);
        ExponentialWitness {
            base: base.clone(),
            value: value.clone(),
            expo,
            maps,
            ev,
        }
    }

    /// Position of a map `base → value` in the exponential.
    pub fn index_of(&self, map: &SetoidFn) -> Option<usize> {
        if map.dom() != &self.base || map.cod() != &self.value {
            return None;
        }
        self.maps.binary_search_by(|m| m.table().cmp(map.table())).ok()
    }

    /// The unique `f̂ : right → value^base` with `f = ev ∘ (1 × f̂)`, for
    /// `f : base × right → value`.
    pub fn curry(&self, f: &SetoidFn, right: &Setoid) -> Result<SetoidFn> {
        let prod = ProductWitness::new(&self.base, right);
        if f.dom() != &prod.prod || f.cod() != &self.value {
            return Err(Error::Mismatch("curry expects a map base × right → value".into()));
        }
        let table = (0..right.size())
            .map(|y| {
                let column: Vec<usize> = (0..self.base.size()).map(|x| f.apply(prod.pair(x, y))).collect();
                self.maps
                    .binary_search_by(|m| m.table().cmp(&column[..]))
                    .expect("columns of an extensional map are extensional")
            })
            .collect();
        Ok(SetoidFn::new_unchecked(right.clone(), self.expo.clone(), table))
    }

    /// `ev ∘ (1_base × g)` for `g : right → value^base`.
    pub fn uncurry(&self, g: &SetoidFn) -> Result<SetoidFn> {
        if g.cod() != &self.expo {
            return Err(Error::Mismatch("uncurry expects a map into the exponential".into()));
        }
        let lifted = fn_product(&SetoidFn::identity(&self.base), g);
        self.ev.after(&lifted)
    }
}

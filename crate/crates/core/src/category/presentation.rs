use std::collections::HashMap;

use rayon::prelude::*;

use super::{Category, Violation};

/// An indexed snapshot of a category's listed fragment: every object, every
/// arrow between listed objects, and the composition table on them.
pub struct Presentation<C: Category> {
    objects: Vec<C::Ob>,
    ob_index: HashMap<C::Ob, usize>,
    mors: Vec<C::Mor>,
    ends: Vec<(usize, usize)>,
    homs: Vec<Vec<usize>>,
    outs: Vec<Vec<usize>>,
    out_pos: Vec<usize>,
}

impl<C: Category> Presentation<C> {
    pub fn new(cat: &C) -> Self {
        Self::with_objects(cat, cat.objects())
    }

    /// Duplicate objects are dropped, keeping the first occurrence.
    pub fn with_objects(cat: &C, objects: Vec<C::Ob>) -> Self {
        let mut ob_index = HashMap::new();
        let mut uniq = Vec::new();
        for a in objects {
            if !ob_index.contains_key(&a) {
                ob_index.insert(a.clone(), uniq.len());
                uniq.push(a);
            }
        }
        let objects = uniq;
        let n = objects.len();
        let hom_lists: Vec<Vec<C::Mor>> = (0..n * n)
            .into_par_iter()
            .map(|k| cat.hom(&objects[k / n], &objects[k % n]))
            .collect();
        let mut mors = Vec::new();
        let mut ends = Vec::new();
        let mut homs = Vec::with_capacity(n * n);
        let mut outs = vec![Vec::new(); n];
        let mut out_pos = Vec::new();
        for (k, list) in hom_lists.into_iter().enumerate() {
            let (a, b) = (k / n, k % n);
            let mut ids = Vec::with_capacity(list.len());
            for f in list {
                let id = mors.len();
                mors.push(f);
                ends.push((a, b));
                out_pos.push(outs[a].len());
                outs[a].push(id);
                ids.push(id);
            }
            homs.push(ids);
        }
        Presentation {
            objects,
            ob_index,
            mors,
            ends,
            homs,
            outs,
            out_pos,
        }
    }

    pub fn objects(&self) -> &[C::Ob] {
        &self.objects
    }

    pub fn object_index(&self, a: &C::Ob) -> Option<usize> {
        self.ob_index.get(a).copied()
    }

    pub fn morphisms(&self) -> &[C::Mor] {
        &self.mors
    }

    pub fn ends(&self, f: usize) -> (usize, usize) {
        self.ends[f]
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        &self.homs[a * self.objects.len() + b]
    }

    /// Arrows out of object `a`, grouped by codomain in object order.
    pub fn outgoing(&self, a: usize) -> &[usize] {
        &self.outs[a]
    }

    pub fn composable_pairs(&self) -> usize {
        self.ends.iter().map(|&(_, b)| self.outs[b].len()).sum()
    }

    /// Looks `f` up in `Hom(a, b)`.
    pub fn find(&self, a: usize, b: usize, f: &C::Mor) -> Option<usize> {
        self.hom(a, b).iter().copied().find(|&id| &self.mors[id] == f)
    }

    /// For every arrow `f : a → b`, the indices of `g ∘ f` for each `g` in
    /// `outgoing(b)`, or the first composite that leaves its hom-set.
    pub fn compose_table(&self, cat: &C) -> Result<Vec<Vec<usize>>, Violation> {
        // hash each hom-set once so lookups stay cheap on large fragments
        let lookup: Vec<HashMap<&C::Mor, usize>> = self
            .homs
            .par_iter()
            .map(|ids| ids.iter().map(|&id| (&self.mors[id], id)).collect())
            .collect();
        let n = self.objects.len();
        let rows: Vec<Result<Vec<usize>, Violation>> = (0..self.mors.len())
            .into_par_iter()
            .map(|f| {
                let (a, b) = self.ends[f];
                self.outs[b]
                    .iter()
                    .map(|&g| {
                        let c = self.ends[g].1;
                        let gf = cat.compose(&self.mors[g], &self.mors[f]);
                        lookup[a * n + c].get(&gf).copied().ok_or_else(|| {
                            Violation::new(
                                "closure",
                                format!(
                                    "{:?} ∘ {:?} = {:?} is not an arrow {:?} → {:?}",
                                    self.mors[g], self.mors[f], gf, self.objects[a], self.objects[c]
                                ),
                            )
                        })
                    })
                    .collect()
            })
            .collect();
        rows.into_iter().collect()
    }
}

/// Counts gathered while verifying the category laws.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LawSummary {
    pub objects: usize,
    pub morphisms: usize,
    pub composable_pairs: usize,
    pub composable_triples: usize,
}

/// Identity, closure and associativity over the listed fragment.
pub fn verify_category_laws<C: Category>(cat: &C) -> Result<LawSummary, Violation> {
    let p = Presentation::new(cat);
    verify_presentation_laws(cat, &p)
}

pub fn verify_presentation_laws<C: Category>(cat: &C, p: &Presentation<C>) -> Result<LawSummary, Violation> {
    let n = p.objects.len();
    let mut ids = Vec::with_capacity(n);
    for (a, ob) in p.objects.iter().enumerate() {
        let id = cat.identity(ob);
        match p.find(a, a, &id) {
            Some(k) => ids.push(k),
            None => {
                return Err(Violation::new(
                    "identity",
                    format!("identity {id:?} of {ob:?} is not an endomorphism in the fragment"),
                ))
            }
        }
    }
    let comp = p.compose_table(cat)?;
    let units: Vec<Result<(), Violation>> = (0..p.mors.len())
        .into_par_iter()
        .map(|f| {
            let (a, b) = p.ends[f];
            let left = comp[ids[a]][p.out_pos[f]];
            let right = comp[f][p.out_pos[ids[b]]];
            if left != f || right != f {
                return Err(Violation::new(
                    "identity",
                    format!(
                        "unit law fails for {:?}: f ∘ 1 = {:?}, 1 ∘ f = {:?}",
                        p.mors[f], p.mors[left], p.mors[right]
                    ),
                ));
            }
            Ok(())
        })
        .collect();
    units.into_iter().collect::<Result<(), _>>()?;
    let triples = (0..p.mors.len())
        .into_par_iter()
        .map(|f| -> Result<usize, Violation> {
            let b = p.ends[f].1;
            let mut count = 0;
            for (gi, &g) in p.outs[b].iter().enumerate() {
                let gf = comp[f][gi];
                let c = p.ends[g].1;
                for (hi, &h) in p.outs[c].iter().enumerate() {
                    let left = comp[gf][hi];
                    let hg = comp[g][hi];
                    let right = comp[f][p.out_pos[hg]];
                    if left != right {
                        return Err(Violation::new(
                            "associativity",
                            format!(
                                "h ∘ (g ∘ f) = {:?} but (h ∘ g) ∘ f = {:?} for f = {:?}, g = {:?}, h = {:?}",
                                p.mors[left], p.mors[right], p.mors[f], p.mors[g], p.mors[h]
                            ),
                        ));
                    }
                    count += 1;
                }
            }
            Ok(count)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(LawSummary {
        objects: n,
        morphisms: p.mors.len(),
        composable_pairs: p.composable_pairs(),
        composable_triples: triples,
    })
}

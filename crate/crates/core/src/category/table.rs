use std::collections::HashMap;

use super::Category;

/// A category given by explicit tables over numbered objects and arrows.
///
/// A missing composite is reported as [`TableCategory::UNDEFINED`], which
/// the law verifier flags as a closure failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCategory {
    pub ends: Vec<(usize, usize)>,
    pub identities: Vec<usize>,
    pub composites: HashMap<(usize, usize), usize>,
}

impl TableCategory {
    pub const UNDEFINED: usize = usize::MAX;

    /// Objects `0..n` with identities only.
    pub fn discrete(n: usize) -> Self {
        TableCategory {
            ends: (0..n).map(|a| (a, a)).collect(),
            identities: (0..n).collect(),
            composites: (0..n).map(|a| ((a, a), a)).collect(),
        }
    }

    /// One object whose arrows `0..n` compose by `table[g][f]`; arrow 0 is the
    /// identity.
    pub fn monoid(table: Vec<Vec<usize>>) -> Self {
        let n = table.len();
        let mut composites = HashMap::new();
        for (g, row) in table.iter().enumerate() {
            for (f, &gf) in row.iter().enumerate() {
                composites.insert((g, f), gf);
            }
        }
        TableCategory {
            ends: vec![(0, 0); n],
            identities: vec![0],
            composites,
        }
    }

    /// Overwrites one composite, for fault injection.
    pub fn set_composite(&mut self, g: usize, f: usize, value: usize) {
        self.composites.insert((g, f), value);
    }
}

impl Category for TableCategory {
    type Ob = usize;
    type Mor = usize;

    fn objects(&self) -> Vec<usize> {
        (0..self.identities.len()).collect()
    }
    fn hom(&self, a: &usize, b: &usize) -> Vec<usize> {
        (0..self.ends.len()).filter(|&f| self.ends[f] == (*a, *b)).collect()
    }
    fn dom(&self, f: &usize) -> usize {
        self.ends[*f].0
    }
    fn cod(&self, f: &usize) -> usize {
        self.ends[*f].1
    }
    fn identity(&self, a: &usize) -> usize {
        self.identities[*a]
    }
    fn compose(&self, g: &usize, f: &usize) -> usize {
        self.composites.get(&(*g, *f)).copied().unwrap_or(Self::UNDEFINED)
    }
}

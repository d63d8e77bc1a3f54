use std::fmt;

use crate::error::{Error, Result};
use crate::finsetoid::{Setoid, SetoidFn, SubsetEmbedding};

/// A topology on a finite setoid, as a sorted list of equality-closed
/// bitmasks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteTopology {
    points: Setoid,
    opens: Vec<u64>,
}

/// Why a family of masks is not a topology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TopologyViolation {
    NotClosedUnderEquality(u64),
    Duplicate(u64),
    MissingEmpty,
    MissingWhole,
    Intersection(u64, u64),
    Union(u64, u64),
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::NotClosedUnderEquality(m) => write!(f, "{m:#b} is not closed under equality"),
            TopologyViolation::Duplicate(m) => write!(f, "{m:#b} is listed twice"),
            TopologyViolation::MissingEmpty => write!(f, "the empty set is not open"),
            TopologyViolation::MissingWhole => write!(f, "the whole carrier is not open"),
            TopologyViolation::Intersection(a, b) => write!(f, "{a:#b} ∩ {b:#b} is not open"),
            TopologyViolation::Union(a, b) => write!(f, "{a:#b} ∪ {b:#b} is not open"),
        }
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Checks the topology axioms. Finite unions reduce to binary ones.
pub fn topology_violation(points: &Setoid, opens: &[u64]) -> Option<TopologyViolation> {
    let closed = SubsetEmbedding::closed_masks(points);
    for (i, &m) in opens.iter().enumerate() {
        if closed.binary_search(&m).is_err() {
            return Some(TopologyViolation::NotClosedUnderEquality(m));
        }
        if opens[..i].contains(&m) {
            return Some(TopologyViolation::Duplicate(m));
        }
    }
    if !opens.contains(&0) {
        return Some(TopologyViolation::MissingEmpty);
    }
    if !opens.contains(&full_mask(points.size())) {
        return Some(TopologyViolation::MissingWhole);
    }
    for &a in opens {
        for &b in opens {
            if !opens.contains(&(a & b)) {
                return Some(TopologyViolation::Intersection(a, b));
            }
            if !opens.contains(&(a | b)) {
                return Some(TopologyViolation::Union(a, b));
            }
        }
    }
    None
}

pub fn is_topology(points: &Setoid, opens: &[u64]) -> bool {
    topology_violation(points, opens).is_none()
}

impl FiniteTopology {
    /// Opens may be given in any order; they are stored sorted.
    pub fn new(points: Setoid, mut opens: Vec<u64>) -> Result<Self> {
        if let Some(v) = topology_violation(&points, &opens) {
            return Err(Error::Invalid(format!("not a topology: {v}")));
        }
        opens.sort_unstable();
        Ok(FiniteTopology { points, opens })
    }

    pub fn discrete(points: &Setoid) -> Self {
        FiniteTopology {
            points: points.clone(),
            opens: SubsetEmbedding::closed_masks(points),
        }
    }

    pub fn indiscrete(points: &Setoid) -> Self {
        let mut opens = vec![0, full_mask(points.size())];
        opens.dedup();
        FiniteTopology {
            points: points.clone(),
            opens,
        }
    }

    /// `{∅, {1}, {0, 1}}` on two points.
    pub fn sierpinski() -> Self {
        FiniteTopology::new(Setoid::discrete(2), vec![0b00, 0b10, 0b11]).expect("Sierpiński space")
    }

    /// Every topology on `points`, in lexicographic order of the sorted open
    /// lists.
    pub fn all_on(points: &Setoid) -> Vec<FiniteTopology> {
        let whole = full_mask(points.size());
        let middle: Vec<u64> = SubsetEmbedding::closed_masks(points)
            .into_iter()
            .filter(|&m| m != 0 && m != whole)
            .collect();
        assert!(middle.len() < 24, "topology enumeration is limited to small carriers");
        let mut out: Vec<FiniteTopology> = (0u64..(1 << middle.len()))
            .filter_map(|bits| {
                let mut opens = vec![0];
                opens.extend((0..middle.len()).filter(|k| bits >> k & 1 == 1).map(|k| middle[k]));
                opens.push(whole);
                opens.sort_unstable();
                opens.dedup();
                is_topology(points, &opens).then(|| FiniteTopology {
                    points: points.clone(),
                    opens,
                })
            })
            .collect();
        out.sort();
        out
    }

    pub fn points(&self) -> &Setoid {
        &self.points
    }

    pub fn opens(&self) -> &[u64] {
        &self.opens
    }

    pub fn open_index(&self, mask: u64) -> Option<usize> {
        self.opens.binary_search(&mask).ok()
    }

    /// Distinct points are separated by some open.
    pub fn is_t0(&self) -> bool {
        let reps: Vec<usize> = self.points.reps().collect();
        reps.iter().enumerate().all(|(i, &x)| {
            reps[i + 1..]
                .iter()
                .all(|&y| self.opens.iter().any(|&u| (u >> x & 1) != (u >> y & 1)))
        })
    }
}

impl fmt::Debug for FiniteTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.points, self.opens)
    }
}

/// `h⁻¹(U)` as a mask over the domain.
pub fn preimage(h: &SetoidFn, mask: u64) -> u64 {
    (0..h.dom().size())
        .filter(|&x| mask >> h.apply(x) & 1 == 1)
        .fold(0, |m, x| m | 1 << x)
}

/// An open of `s` whose preimage is not open in `t`.
pub fn continuity_witness(h: &SetoidFn, t: &FiniteTopology, s: &FiniteTopology) -> Option<u64> {
    s.opens
        .iter()
        .copied()
        .find(|&u| t.open_index(preimage(h, u)).is_none())
}

pub fn is_continuous(h: &SetoidFn, t: &FiniteTopology, s: &FiniteTopology) -> bool {
    continuity_witness(h, t, s).is_none()
}

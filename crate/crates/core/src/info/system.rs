use std::fmt;

use crate::error::{Error, Result};
use crate::finsetoid::Setoid;
use crate::repr::FiniteTopology;

/// Largest token set an information system may have; ideals are stored as
/// `u64` masks over a powerset of tokens.
pub const MAX_TOKENS: usize = 6;

/// A finite information system `(X, Con, ⊢)` on the discrete tokens `0..n`.
///
/// `Con` is a table over token bitmasks; `ent[A]` is the mask of tokens
/// entailed by `A`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InfoSystem {
    n: usize,
    con: Vec<bool>,
    ent: Vec<u64>,
}

/// The first axiom an information system fails, with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfoViolation {
    EmptyInconsistent,
    SingletonInconsistent { token: usize },
    NotDownClosed { set: u64, subset: u64 },
    InconsistentPremise { set: u64, token: usize },
    Consistency { set: u64, token: usize },
    Reflexivity { set: u64, token: usize },
    Cut { a: u64, b: u64, c: usize },
}

impl fmt::Display for InfoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfoViolation::EmptyInconsistent => write!(f, "∅ is not consistent"),
            InfoViolation::SingletonInconsistent { token } => write!(f, "{{{token}}} is not consistent"),
            InfoViolation::NotDownClosed { set, subset } => {
                write!(f, "{set:#b} is consistent but its subset {subset:#b} is not")
            }
            InfoViolation::InconsistentPremise { set, token } => {
                write!(f, "{set:#b} ⊢ {token} from an inconsistent set")
            }
            InfoViolation::Consistency { set, token } => {
                write!(f, "{set:#b} ⊢ {token} but {set:#b} ∪ {{{token}}} is not consistent")
            }
            InfoViolation::Reflexivity { set, token } => write!(f, "{token} ∈ {set:#b} but not {set:#b} ⊢ {token}"),
            InfoViolation::Cut { a, b, c } => write!(f, "{a:#b} ⊢ {b:#b} and {b:#b} ⊢ {c} but not {a:#b} ⊢ {c}"),
        }
    }
}

fn submasks(m: u64) -> impl Iterator<Item = u64> {
    // all s ⊆ m, in increasing order
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == m {
            None
        } else {
            Some(((cur | !m).wrapping_add(1)) & m)
        };
        Some(cur)
    })
}

impl InfoSystem {
    /// From the consistent sets and the entailment pairs `(A, a)`.
    /// Axioms are not checked; see [`InfoSystem::check`].
    pub fn new(n: usize, con: &[u64], entails: &[(u64, usize)]) -> Result<Self> {
        if n > MAX_TOKENS {
            return Err(Error::Invalid(format!(
                "at most {MAX_TOKENS} tokens are supported, got {n}"
            )));
        }
        let width = 1usize << n;
        let mut con_table = vec![false; width];
        for &a in con {
            let slot = con_table
                .get_mut(a as usize)
                .ok_or_else(|| Error::Invalid(format!("consistent set {a:#b} mentions a token ≥ {n}")))?;
            *slot = true;
        }
        let mut ent = vec![0u64; width];
        for &(a, t) in entails {
            if t >= n || a as usize >= width {
                return Err(Error::Invalid(format!(
                    "entailment {a:#b} ⊢ {t} mentions a token ≥ {n}"
                )));
            }
            ent[a as usize] |= 1 << t;
        }
        Ok(InfoSystem { n, con: con_table, ent })
    }

    /// From full tables indexed by token bitmask.
    pub fn from_tables(n: usize, con: Vec<bool>, ent: Vec<u64>) -> Result<Self> {
        if n > MAX_TOKENS || con.len() != 1 << n || ent.len() != 1 << n {
            return Err(Error::Invalid("tables must have 2^n entries".into()));
        }
        Ok(InfoSystem { n, con, ent })
    }

    /// `Con = P(X)` and `A ⊢ a` iff `a ∈ A`.
    pub fn discrete_flat(n: usize) -> Self {
        InfoSystem {
            n,
            con: vec![true; 1 << n],
            ent: (0..1u64 << n).collect(),
        }
    }

    pub fn token_count(&self) -> usize {
        self.n
    }

    pub fn tokens(&self) -> Setoid {
        Setoid::discrete(self.n)
    }

    fn full(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn is_consistent(&self, a: u64) -> bool {
        a <= self.full() && self.con[a as usize]
    }

    pub fn consistent_sets(&self) -> impl Iterator<Item = u64> + '_ {
        (0..=self.full()).filter(|&a| self.con[a as usize])
    }

    /// The tokens entailed by `a`, or nothing if `a` is inconsistent.
    pub fn entailed(&self, a: u64) -> u64 {
        if self.is_consistent(a) {
            self.ent[a as usize]
        } else {
            0
        }
    }

    pub fn entails(&self, a: u64, token: usize) -> bool {
        self.entailed(a) >> token & 1 == 1
    }

    /// `A ⊢ b` for every `b ∈ B`.
    pub fn entails_all(&self, a: u64, b: u64) -> bool {
        self.entailed(a) & b == b
    }

    /// A copy with one entailment pair toggled, for fault injection.
    pub fn with_toggled_entailment(&self, a: u64, token: usize) -> Self {
        let mut out = self.clone();
        out.ent[a as usize] ^= 1 << token;
        out
    }

    pub fn check(&self) -> Result<(), InfoViolation> {
        let full = self.full();
        if !self.con[0] {
            return Err(InfoViolation::EmptyInconsistent);
        }
        for token in 0..self.n {
            if !self.con[1 << token] {
                return Err(InfoViolation::SingletonInconsistent { token });
            }
        }
        for set in self.consistent_sets() {
            if let Some(subset) = submasks(set).find(|&s| !self.con[s as usize]) {
                return Err(InfoViolation::NotDownClosed { set, subset });
            }
        }
        for set in 0..=full {
            let e = self.ent[set as usize];
            if !self.con[set as usize] && e != 0 {
                return Err(InfoViolation::InconsistentPremise {
                    set,
                    token: e.trailing_zeros() as usize,
                });
            }
        }
        for set in self.consistent_sets() {
            for token in 0..self.n {
                if self.entails(set, token) && !self.con[(set | 1 << token) as usize] {
                    return Err(InfoViolation::Consistency { set, token });
                }
                if set >> token & 1 == 1 && !self.entails(set, token) {
                    return Err(InfoViolation::Reflexivity { set, token });
                }
            }
        }
        for a in self.consistent_sets() {
            for b in self.consistent_sets().filter(|&b| self.entails_all(a, b)) {
                for c in 0..self.n {
                    if self.entails(b, c) && !self.entails(a, c) {
                        return Err(InfoViolation::Cut { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.check().is_ok()
    }

    /// `Ā`: `A` together with everything it entails, iterated to a fixpoint.
    pub fn closure(&self, a: u64) -> u64 {
        let mut cur = a;
        loop {
            let next = cur | self.entailed(cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// A consistent subset closed under entailment from its consistent
    /// subsets.
    pub fn is_ideal(&self, j: u64) -> bool {
        j <= self.full() && submasks(j).all(|a| self.con[a as usize]) && submasks(j).all(|a| self.entailed(a) & !j == 0)
    }

    /// `|X|`, in increasing mask order.
    pub fn ideals(&self) -> Vec<u64> {
        (0..=self.full()).filter(|&j| self.is_ideal(j)).collect()
    }

    /// The carrier of `|X|`: discrete, labelled by the ideal masks.
    pub fn ideal_setoid(&self) -> Setoid {
        let ideals = self.ideals();
        Setoid::discrete(ideals.len())
            .with_labels(ideals)
            .expect("discrete setoids accept any labels")
    }

    /// `(A, O_A)` for every consistent `A`, with `O_A` a mask over ideal
    /// indices.
    pub fn scott_base(&self) -> Vec<(u64, u64)> {
        let ideals = self.ideals();
        self.consistent_sets()
            .map(|a| {
                let o = ideals
                    .iter()
                    .enumerate()
                    .filter(|&(_, &j)| j & a == a)
                    .fold(0u64, |m, (k, _)| m | 1 << k);
                (a, o)
            })
            .collect()
    }

    /// The Scott topology on `|X|` generated by the base.
    pub fn scott_topology(&self) -> FiniteTopology {
        let points = self.ideal_setoid();
        let whole = (1u64 << points.size()) - 1;
        let mut opens: Vec<u64> = self.scott_base().into_iter().map(|(_, o)| o).collect();
        opens.extend([0, whole]);
        // finite intersections, then unions
        for op in [|x: u64, y: u64| x & y, |x: u64, y: u64| x | y] {
            loop {
                opens.sort_unstable();
                opens.dedup();
                let mut grown = opens.clone();
                for &x in &opens {
                    for &y in &opens {
                        grown.push(op(x, y));
                    }
                }
                grown.sort_unstable();
                grown.dedup();
                if grown.len() == opens.len() {
                    break;
                }
                opens = grown;
            }
        }
        FiniteTopology::new(points, opens).expect("generated family is a topology")
    }

    /// Every valid system on `n` tokens, ordered by the `Con` table and then
    /// the entailment table.
    pub fn all_on(n: usize) -> Vec<InfoSystem> {
        assert!(n <= 3, "exhaustive enumeration is limited to three tokens");
        let width = 1usize << n;
        let mut out = Vec::new();
        for con_bits in 0u64..(1 << width) {
            let con: Vec<bool> = (0..width).map(|a| con_bits >> a & 1 == 1).collect();
            let probe = InfoSystem {
                n,
                con: con.clone(),
                ent: (0..width as u64).map(|a| if con[a as usize] { a } else { 0 }).collect(),
            };
            if !probe.is_valid() {
                continue;
            }
            // every entailment table that contains the reflexive pairs
            let members: Vec<u64> = probe.consistent_sets().collect();
            let extra: Vec<u64> = members.iter().map(|&a| probe.full() & !a).collect();
            let sizes: Vec<usize> = extra.iter().map(|&e| 1 << e.count_ones()).collect();
            crate::util::for_each_choice(&sizes, |choice| {
                let mut ent = probe.ent.clone();
                for (k, &a) in members.iter().enumerate() {
                    ent[a as usize] = a | deposit(choice[k] as u64, extra[k]);
                }
                let sys = InfoSystem {
                    n,
                    con: con.clone(),
                    ent,
                };
                if sys.is_valid() {
                    out.push(sys);
                }
            });
        }
        out
    }

    pub fn all_up_to(n: usize) -> Vec<InfoSystem> {
        (0..=n).flat_map(Self::all_on).collect()
    }
}

/// Spreads the low bits of `bits` over the set bits of `mask`.
fn deposit(bits: u64, mask: u64) -> u64 {
    let mut out = 0;
    let mut k = 0;
    for t in 0..64 {
        if mask >> t & 1 == 1 {
            out |= (bits >> k & 1) << t;
            k += 1;
        }
    }
    out
}

impl fmt::Debug for InfoSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let con: Vec<u64> = self.consistent_sets().collect();
        let ent: Vec<(u64, u64)> = self.consistent_sets().map(|a| (a, self.entailed(a))).collect();
        write!(f, "Info(n={}, Con={con:?}, ⊢={ent:?})", self.n)
    }
}

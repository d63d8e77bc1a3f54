#![allow(dead_code)]

use finchu::finsetoid::Setoid;
use proptest::prelude::*;

/// 1, 1, 2, 5, 15, 52: set partitions of n points.
pub const BELL: [usize; 6] = [1, 1, 2, 5, 15, 52];

/// A setoid on at most `max` points, from an arbitrary block assignment.
pub fn setoid(max: usize) -> impl Strategy<Value = Setoid> {
    (0..=max)
        .prop_flat_map(|n| prop::collection::vec(0..n.max(1), n))
        .prop_map(|blocks| {
            Setoid::from_relation(blocks.len(), |x, y| blocks[x] == blocks[y])
                .expect("block equality is an equivalence")
        })
}

/// Every table `dom → cod` respecting equality, with values normalized to
/// representatives so that extensionally equal maps coincide.
pub fn naive_maps(dom: &Setoid, cod: &Setoid) -> Vec<Vec<usize>> {
    let (n, m) = (dom.size(), cod.size());
    let mut out = Vec::new();
    if n > 0 && m == 0 {
        return out;
    }
    let total = m.pow(n as u32);
    for code in 0..total {
        let table: Vec<usize> = (0..n).map(|i| code / m.pow(i as u32) % m).collect();
        let respects = (0..n).all(|x| (0..n).all(|y| !dom.eq(x, y) || cod.eq(table[x], table[y])));
        if respects {
            let norm: Vec<usize> = table.iter().map(|&v| cod.rep(v)).collect();
            if !out.contains(&norm) {
                out.push(norm);
            }
        }
    }
    out.sort();
    out
}

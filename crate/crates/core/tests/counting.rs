mod common;

use common::{naive_maps, setoid, BELL};
use finchu::finsetoid::{Apartness, ExponentialWitness, Setoid, SetoidFn};
use finchu::repr::FiniteTopology;
use proptest::prelude::*;

#[test]
fn setoids_are_counted_by_bell_numbers() {
    for (n, &b) in BELL.iter().enumerate() {
        assert_eq!(Setoid::all_of_size(n).len(), b, "n = {n}");
    }
}

#[test]
fn apartness_relations_are_complements_of_coarser_equivalences() {
    // on a setoid with k classes the valid apartness relations are exactly
    // the complements of equivalences containing ≈, so there are Bell(k)
    for s in Setoid::all_up_to(4) {
        assert_eq!(Apartness::all_valid(&s).len(), BELL[s.class_count()], "{s:?}");
    }
}

/// Families of ≈-closed masks closed under ∩ and ∪ and containing ∅ and X.
fn naive_topologies(points: &Setoid) -> Vec<Vec<u64>> {
    let n = points.size();
    let full = (1u64 << n) - 1;
    let closed: Vec<u64> = (0..=full)
        .filter(|&m| (0..n).all(|x| (0..n).all(|y| !points.eq(x, y) || (m >> x & 1) == (m >> y & 1))))
        .collect();
    let mut out = Vec::new();
    for family in 0u64..1 << closed.len() {
        let opens: Vec<u64> = (0..closed.len())
            .filter(|i| family >> i & 1 == 1)
            .map(|i| closed[i])
            .collect();
        let ok = opens.contains(&0)
            && opens.contains(&full)
            && opens.iter().all(|a| {
                opens
                    .iter()
                    .all(|b| opens.contains(&(a & b)) && opens.contains(&(a | b)))
            });
        if ok {
            out.push(opens);
        }
    }
    out.sort();
    out
}

#[test]
fn topology_enumeration_matches_brute_force() {
    for s in Setoid::all_up_to(3) {
        let mut ours: Vec<Vec<u64>> = FiniteTopology::all_on(&s).iter().map(|t| t.opens().to_vec()).collect();
        ours.sort();
        assert_eq!(ours, naive_topologies(&s), "{s:?}");
    }
    let discrete: Vec<usize> = (0..4)
        .map(|n| FiniteTopology::all_on(&Setoid::discrete(n)).len())
        .collect();
    assert_eq!(discrete, [1, 1, 4, 29]);
    let t0: Vec<usize> = (0..4)
        .map(|n| {
            FiniteTopology::all_on(&Setoid::discrete(n))
                .iter()
                .filter(|t| t.is_t0())
                .count()
        })
        .collect();
    assert_eq!(t0, [1, 1, 3, 19]);
}

proptest! {
    #[test]
    fn extensional_maps_match_brute_force(a in setoid(3), b in setoid(3)) {
        let ours: Vec<Vec<usize>> = SetoidFn::all(&a, &b).iter().map(|f| f.table().to_vec()).collect();
        let mut sorted = ours.clone();
        sorted.sort();
        prop_assert_eq!(&sorted, &naive_maps(&a, &b));
        prop_assert_eq!(ours.len(), SetoidFn::count(&a, &b));
        sorted.dedup();
        prop_assert_eq!(sorted.len(), ours.len());
    }

    #[test]
    fn curry_and_uncurry_are_inverse(a in setoid(2), x in setoid(2), g in setoid(2)) {
        let w = ExponentialWitness::new(&x, &g);
        let pair = finchu::finsetoid::product_setoid(&x, &a);
        let maps = SetoidFn::all(&pair, &g);
        let mut curried = Vec::new();
        for f in &maps {
            let c = w.curry(f, &a).unwrap();
            prop_assert_eq!(&w.uncurry(&c).unwrap(), f);
            curried.push(c.table().to_vec());
        }
        curried.sort();
        curried.dedup();
        prop_assert_eq!(curried.len(), SetoidFn::count(&a, &w.expo));
    }

    #[test]
    fn composition_is_associative_with_identities(a in setoid(3), b in setoid(3), c in setoid(2), seed: u64) {
        let fs = SetoidFn::all(&a, &b);
        let gs = SetoidFn::all(&b, &c);
        prop_assume!(!fs.is_empty() && !gs.is_empty());
        let f = &fs[seed as usize % fs.len()];
        let g = &gs[(seed >> 16) as usize % gs.len()];
        let h = SetoidFn::identity(&c);
        prop_assert_eq!(h.after(&g.after(f).unwrap()).unwrap(), h.after(g).unwrap().after(f).unwrap());
        prop_assert_eq!(&f.after(&SetoidFn::identity(&a)).unwrap(), f);
        prop_assert_eq!(&SetoidFn::identity(&b).after(f).unwrap(), f);
    }
}

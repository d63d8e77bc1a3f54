mod common;

use common::{naive_maps, setoid};
use finchu::chu::{chu_compose, classify, enumerate_hom, ChuSpace, ChuTransform};
use finchu::finsetoid::{Setoid, SetoidFn};
use finchu::repr::{membership_space, FiniteTopology};
use proptest::prelude::*;

fn space(g: usize, max: usize) -> impl Strategy<Value = ChuSpace> {
    (setoid(max), setoid(max))
        .prop_flat_map(move |(a, x)| {
            let cells = a.size() * x.size();
            (Just(a), Just(x), prop::collection::vec(0..g, cells))
        })
        .prop_map(move |(a, x, cells)| {
            // read the pairing off representatives so it is extensional
            let n = x.size();
            ChuSpace::from_fn(&a, &x, &Setoid::discrete(g), |i, j| cells[a.rep(i) * n + x.rep(j)]).unwrap()
        })
}

fn spaces<const K: usize>(max: usize) -> impl Strategy<Value = [ChuSpace; K]> {
    (1..=3usize).prop_flat_map(move |g| std::array::from_fn(|_| space(g, max)))
}

/// `(f, g)` with `r'(f a, x') = r(a, g x')`, by exhausting both tables.
fn naive_hom(src: &ChuSpace, dst: &ChuSpace) -> Vec<(Vec<usize>, Vec<usize>)> {
    let gamma = src.gamma();
    let mut out = Vec::new();
    for f in naive_maps(src.left(), dst.left()) {
        for g in naive_maps(dst.right(), src.right()) {
            let adjoint = (0..src.left().size())
                .all(|a| (0..dst.right().size()).all(|x| gamma.eq(dst.value(f[a], x), src.value(a, g[x]))));
            if adjoint {
                out.push((f.clone(), g));
            }
        }
    }
    out.sort();
    out
}

fn tables(ts: &[ChuTransform]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out: Vec<_> = ts
        .iter()
        .map(|t| (t.fwd().table().to_vec(), t.bwd().table().to_vec()))
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, max_global_rejects: 20_000, ..ProptestConfig::default() })]

    #[test]
    fn hom_sets_match_brute_force([s, t] in spaces::<2>(3)) {
        prop_assert_eq!(tables(&enumerate_hom(&s, &t)), naive_hom(&s, &t));
    }

    #[test]
    fn transforms_compose_associatively([a, b, c, d] in spaces::<4>(2), pick: u64) {
        let (ab, bc, cd) = (enumerate_hom(&a, &b), enumerate_hom(&b, &c), enumerate_hom(&c, &d));
        prop_assume!(!ab.is_empty() && !bc.is_empty() && !cd.is_empty());
        let f = &ab[pick as usize % ab.len()];
        let g = &bc[(pick >> 20) as usize % bc.len()];
        let h = &cd[(pick >> 40) as usize % cd.len()];
        let left = chu_compose(h, &chu_compose(g, f).unwrap()).unwrap();
        let right = chu_compose(&chu_compose(h, g).unwrap(), f).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&chu_compose(f, &ChuTransform::identity(&a)).unwrap(), f);
        prop_assert_eq!(&chu_compose(&ChuTransform::identity(&b), f).unwrap(), f);
        // the composite is itself in the hom-set
        prop_assert!(tables(&enumerate_hom(&a, &c)).contains(&(
            chu_compose(g, f).unwrap().fwd().table().to_vec(),
            chu_compose(g, f).unwrap().bwd().table().to_vec(),
        )));
    }
}

#[test]
fn membership_spaces_are_separable_exactly_for_t0_topologies() {
    for s in Setoid::all_up_to(3) {
        for t in FiniteTopology::all_on(&s) {
            // some open tells apart any two unequal points
            let naive = (0..s.size())
                .all(|x| (0..s.size()).all(|y| s.eq(x, y) || t.opens().iter().any(|o| (o >> x & 1) != (o >> y & 1))));
            assert_eq!(classify(&membership_space(&t)).separable, naive, "{t:?}");
            assert_eq!(t.is_t0(), naive);
        }
    }
}

#[test]
fn continuous_maps_are_the_chu_transforms_of_membership_spaces() {
    // every Chu transform between membership spaces has fwd continuous,
    // and each continuous map has exactly one bwd
    let tops: Vec<FiniteTopology> = Setoid::all_up_to(2).iter().flat_map(FiniteTopology::all_on).collect();
    for t in &tops {
        for s in &tops {
            let continuous: Vec<Vec<usize>> = naive_maps(t.points(), s.points())
                .into_iter()
                .filter(|h| {
                    s.opens().iter().all(|&v| {
                        let pre = (0..h.len())
                            .filter(|&x| v >> h[x] & 1 == 1)
                            .fold(0u64, |m, x| m | 1 << x);
                        t.opens().contains(&pre)
                    })
                })
                .collect();
            let ts = tables(&enumerate_hom(&membership_space(t), &membership_space(s)));
            let fwds: Vec<Vec<usize>> = ts.iter().map(|(f, _)| f.clone()).collect();
            assert_eq!(fwds, continuous, "{t:?} → {s:?}");
        }
    }
}

#[test]
fn empty_left_carrier_gives_vacuous_transforms() {
    let e = Setoid::empty();
    let (two, three) = (Setoid::discrete(2), Setoid::discrete(3));
    let hollow = ChuSpace::from_fn(&e, &two, &two, |_, _| 0).unwrap();
    let target = ChuSpace::from_fn(&two, &three, &two, |a, x| usize::from(x > a)).unwrap();
    assert_eq!(enumerate_hom(&hollow, &target).len(), SetoidFn::count(&three, &two));
    assert!(enumerate_hom(&target, &hollow).is_empty());
}

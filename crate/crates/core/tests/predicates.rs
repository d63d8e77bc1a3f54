mod common;

use common::naive_maps;
use finchu::category::Category;
use finchu::finsetoid::{Apartness, Setoid};
use finchu::genchu::{ComplPredCategory, PredCategory};

#[test]
fn predicate_homs_match_brute_force() {
    // j ∘ u⁺ = u⁰ ∘ i has at most one solution u⁺, so arrows are the maps
    // u⁰ carrying A into B
    let cat = PredCategory::capped(2);
    for a in cat.objects() {
        for b in cat.objects() {
            let naive = naive_maps(a.ambient(), b.ambient())
                .iter()
                .filter(|u| (0..a.sub().size()).all(|p| b.contains(u[a.inj().apply(p)])))
                .count();
            assert_eq!(cat.hom(&a, &b).len(), naive, "{a:?} → {b:?}");
        }
    }
}

#[test]
fn injective_base_maps_have_injective_restrictions() {
    let cat = PredCategory::capped(3);
    let mut seen = 0;
    for a in cat.objects() {
        for b in cat.objects() {
            for f in cat.hom(&a, &b).iter().filter(|f| f.base().is_injection()) {
                assert!(f.fwd().is_injection(), "{f:?}");
                seen += 1;
            }
        }
    }
    assert!(seen > 100);
}

/// `u⁰` with `u⁰ x # u⁰ y ⇒ x # y`.
fn strongly_extensional(u: &[usize], src: &Apartness, dst: &Apartness) -> bool {
    (0..u.len()).all(|x| (0..u.len()).all(|y| !dst.neq(u[x], u[y]) || src.neq(x, y)))
}

#[test]
fn complemented_homs_match_brute_force() {
    // one inequality per carrier, so sweep the choices on 2 separately
    for on_two in Apartness::all_valid(&Setoid::discrete(2)) {
        let aps: Vec<Apartness> = Setoid::all_up_to(2)
            .iter()
            .map(|s| {
                if *s == Setoid::discrete(2) {
                    on_two.clone()
                } else {
                    Apartness::all_valid(s)[0].clone()
                }
            })
            .collect();
        complemented_homs_agree(&ComplPredCategory::with_apartnesses(&aps).unwrap());
    }
}

fn complemented_homs_agree(cat: &ComplPredCategory) {
    for a in cat.objects() {
        for b in cat.objects() {
            let mut naive = 0;
            for u in naive_maps(a.ambient(), b.ambient()) {
                let ones = (0..a.one().sub().size()).all(|p| b.one().contains(u[a.one().inj().apply(p)]));
                if !ones || !strongly_extensional(&u, a.apartness(), b.apartness()) {
                    continue;
                }
                // u⁻ picks, per class of B⁰, a class of A⁰ landing on it
                let (az, bz) = (a.zero(), b.zero());
                naive += bz
                    .sub()
                    .reps()
                    .map(|q| {
                        let target = bz.inj().apply(q);
                        az.sub()
                            .reps()
                            .filter(|&p| b.ambient().eq(u[az.inj().apply(p)], target))
                            .count()
                    })
                    .product::<usize>();
            }
            assert_eq!(cat.hom(&a, &b).len(), naive, "{a:?} → {b:?}");
        }
    }
}

#[test]
fn strongly_extensional_bases_give_strongly_extensional_components() {
    let cat = ComplPredCategory::capped(3);
    let mut seen = 0;
    for a in cat.objects() {
        for b in cat.objects() {
            for f in cat.hom(&a, &b) {
                f.derived_strong_extensionality().unwrap();
                seen += 1;
            }
        }
    }
    assert!(seen > 100);
}

#[test]
fn derived_strong_extensionality_needs_the_denial_inequality() {
    use finchu::finsetoid::{ComplementedSubset, SetoidFn, SubsetEmbedding};
    use finchu::genchu::ComplPredArrow;

    // (∅, 2) under denial, into (∅, Y) with Y = {0 = 1, 2} and no apartness
    let two = Setoid::discrete(2);
    let y = Setoid::from_relation(3, |p, q| p == q || p + q == 1).unwrap();
    let a = ComplementedSubset::new(
        SubsetEmbedding::canonical(&two, 0).unwrap(),
        SubsetEmbedding::canonical(&two, 0b11).unwrap(),
        Apartness::denial(&two),
    )
    .unwrap();
    let b = ComplementedSubset::new(
        SubsetEmbedding::canonical(&y, 0).unwrap(),
        SubsetEmbedding::canonical(&y, 0b111).unwrap(),
        Apartness::empty(&y),
    )
    .unwrap();
    let base = SetoidFn::new(two, y, vec![0, 2]).unwrap();
    let fwd = SetoidFn::new(a.one().sub().clone(), b.one().sub().clone(), vec![]).unwrap();
    let bwd = SetoidFn::new(b.zero().sub().clone(), a.zero().sub().clone(), vec![0, 0, 1]).unwrap();
    let f = ComplPredArrow::new(&a, &b, base, fwd, bwd).unwrap();
    let v = f.derived_strong_extensionality().unwrap_err();
    assert_eq!(v.law, "u⁻ strongly extensional");
}

//! Subsets and complemented subsets as Chu spaces, including the case where
//! an empty part makes every candidate transform vacuous.

use finchu::category::representation_report;
use finchu::chu::enumerate_hom;
use finchu::finsetoid::{Apartness, ComplementedSubset, Setoid, SubsetEmbedding};
use finchu::repr::{complemented_space, ComplArrow, ComplRepresentation, ComplementedCategory};

fn main() {
    let two = Setoid::discrete(2);
    let neq = Apartness::denial(&two);
    let part = |m| SubsetEmbedding::canonical(&two, m).unwrap();

    let all = ComplementedSubset::all_canonical(&neq);
    println!("{} complemented subsets of 2 under ≠:", all.len());
    for c in &all {
        let ind: Vec<_> = (0..2).map(|x| c.indicator(x).ok()).collect();
        println!(
            "  one {:#b}, zero {:#b}, indicator {ind:?}",
            c.one().image_mask(),
            c.zero().image_mask()
        );
    }

    let inhabited = representation_report(&ComplRepresentation::new(ComplementedCategory::inhabited(&neq)));
    println!(
        "both parts inhabited: strict = {}",
        inhabited.is_strict_representation()
    );
    let every = representation_report(&ComplRepresentation::new(ComplementedCategory::new(&neq)));
    println!(
        "every complemented subset: strict = {}",
        every.is_strict_representation()
    );
    if let Some(v) = every.first_failure() {
        println!("  {v}");
    }

    // (∅, {0}) and (∅, {1}): no arrow, but transforms exist vacuously
    let a = ComplementedSubset::new(part(0), part(0b01), neq.clone()).unwrap();
    let b = ComplementedSubset::new(part(0), part(0b10), neq).unwrap();
    println!(
        "(∅, {{0}}) → (∅, {{1}}): arrow {}, {} Chu transforms",
        ComplArrow::new(&a, &b).is_some(),
        enumerate_hom(&complemented_space(&a), &complemented_space(&b)).len()
    );
}

//! Finite topologies as Chu spaces by membership: continuity is exactly
//! being the forward part of a transform.

use finchu::category::representation_report;
use finchu::chu::{classify, enumerate_hom};
use finchu::finsetoid::{Setoid, SetoidFn};
use finchu::repr::{continuity_witness, membership_space, ETop, FiniteTopology, TopCategory};

fn main() {
    let s = FiniteTopology::sierpinski();
    let two = Setoid::discrete(2);
    let swap = SetoidFn::new(two.clone(), two.clone(), vec![1, 0]).unwrap();
    match continuity_witness(&swap, &s, &s) {
        Some(open) => println!("swap is not continuous on Sierpiński space: preimage of {open:#b} is not open"),
        None => println!("swap is continuous"),
    }

    let e = membership_space(&s);
    let transforms = enumerate_hom(&e, &e);
    println!("E(S) has {} endotransforms:", transforms.len());
    for t in &transforms {
        println!("  h = {:?}, h⁻¹ on opens = {:?}", t.fwd().table(), t.bwd().table());
    }

    for n in 0..=3 {
        let tops = FiniteTopology::all_on(&Setoid::discrete(n));
        let t0 = tops.iter().filter(|t| classify(&membership_space(t)).separable).count();
        println!("{n} points: {} topologies, {t0} of them T0", tops.len());
    }

    let top = TopCategory::capped(2);
    let report = representation_report(&ETop::new(&top));
    println!(
        "E^Top on {} spaces and {} continuous maps: strict representation = {}",
        report.objects,
        report.arrows,
        report.is_strict_representation()
    );
}

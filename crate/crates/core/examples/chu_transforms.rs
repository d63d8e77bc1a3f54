//! Chu spaces over 2, their transforms, and the category laws checked by
//! exhaustion.

use finchu::category::{representation_report, verify_category_laws, FinSetoid};
use finchu::chu::{chu_compose, classify, enumerate_hom, CccRepresentation, ChuCategory, ChuSpace};
use finchu::finsetoid::Setoid;

fn main() {
    let two = Setoid::discrete(2);
    let three = Setoid::discrete(3);

    // points 0 and 1 against three states: x sees state s when s > x
    let a = ChuSpace::from_fn(&two, &three, &two, |x, s| usize::from(s > x)).unwrap();
    let b = ChuSpace::from_fn(&two, &two, &two, |x, s| usize::from(x == s)).unwrap();
    println!("A is {:?}", classify(&a));
    println!("B is {:?}", classify(&b));

    let ab = enumerate_hom(&a, &b);
    let ba = enumerate_hom(&b, &a);
    println!("{} transforms A → B, {} transforms B → A", ab.len(), ba.len());
    for t in &ab {
        println!("  fwd {:?}  bwd {:?}", t.fwd().table(), t.bwd().table());
    }
    if let (Some(f), Some(g)) = (ab.first(), ba.first()) {
        let loop_ = chu_compose(g, f).unwrap();
        println!("B → A after A → B: fwd {:?}", loop_.fwd().table());
    }

    let cat = ChuCategory::capped(&two, 2);
    let laws = verify_category_laws(&cat).unwrap();
    println!(
        "Chu(2) on carriers ≤ 2: {} spaces, {} transforms, {} composable triples checked",
        laws.objects, laws.morphisms, laws.composable_triples
    );

    let ev = representation_report(&CccRepresentation::new(&two, FinSetoid::capped(2)));
    println!("A ↦ (A, ev, 2^A) is a full embedding: {}", ev.is_full_embedding());
}

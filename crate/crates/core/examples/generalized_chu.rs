//! Generalized Chu spaces over an endofunctor, and predicates as such spaces.

use finchu::category::{representation_report, verify_category_laws};
use finchu::finsetoid::Setoid;
use finchu::genchu::{
    verify_pentagon_closure, ComplPredCategory, ComplPredRepresentation, Endofunctor, GenChuCategory, PredCategory,
    PredRepresentation,
};

fn main() {
    let functors = [
        ("Id", Endofunctor::Identity),
        ("Sq", Endofunctor::Square),
        ("2", Endofunctor::Constant(Setoid::discrete(2))),
    ];
    for (name, g) in &functors {
        let closure = verify_pentagon_closure(&GenChuCategory::capped(g, 2)).unwrap();
        let laws = verify_category_laws(&GenChuCategory::capped(g, 1)).unwrap();
        println!(
            "Chu({name}): {} spaces, {} arrows, {} composites closed; {} triples associate on carriers ≤ 1",
            closure.objects, closure.morphisms, closure.composable_pairs, laws.composable_triples
        );
    }

    let pred = representation_report(&PredRepresentation::new(PredCategory::capped(2)));
    println!("predicates into Chu(Id): strict = {}", pred.is_strict_representation());

    let inhabited = ComplPredCategory::capped(2).inhabited();
    let r = representation_report(&ComplPredRepresentation::new(inhabited));
    println!(
        "complemented predicates, both parts inhabited, into Chu(Sq): strict = {}",
        r.is_strict_representation()
    );
}

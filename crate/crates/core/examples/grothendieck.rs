//! Change of base between Chu categories, and Chu as a Grothendieck
//! construction.

use finchu::category::verify_functor_laws;
use finchu::chu::ChuCategory;
use finchu::finsetoid::{Setoid, SetoidFn};
use finchu::groth::{
    chu_groth_identification, fibred_chu, verify_global_composition, GrothMorphism, PPFunctor, Pushforward,
};

fn main() {
    let two = Setoid::discrete(2);
    let src = ChuCategory::capped(&two, 1);

    let swap = SetoidFn::new(two.clone(), two.clone(), vec![1, 0]).unwrap();
    let flip = GrothMorphism::new(PPFunctor::identity(), &two, swap).unwrap();
    let id = GrothMorphism::identity(&two);
    let p = Pushforward::new(flip.clone(), src.clone()).unwrap();
    let n = verify_functor_laws(&p).unwrap();
    println!("pushforward along the swap of 2 is a functor ({n} checks)");
    let k = verify_global_composition(&flip, &flip, &src).unwrap();
    println!("swap ∘ swap pushes forward as the composite ({k} checks)");
    verify_global_composition(&id, &flip, &src).unwrap();

    let carriers = Setoid::all_up_to(1);
    let iso = chu_groth_identification(&two, &carriers).unwrap();
    println!(
        "Chu(2) ≅ antiparallel Grothendieck category on {} objects, {} arrows",
        iso.objects, iso.arrows
    );
    let f = fibred_chu(&two, &carriers).unwrap();
    println!(
        "fibred presentation: {} fibres, {} reindexings, {} arrows in total",
        f.fibres, f.reindexings, f.total_arrows
    );
}

//! Information systems, their ideals, and approximable mappings realized
//! as Scott-continuous maps.

use finchu::category::representation_report;
use finchu::info::{inf_chu_representation, ApproximableMapping, InfCategory, InfoSystem, ScottFunctor};

fn main() {
    // tokens 0 and 1 are inconsistent together; {} entails nothing
    let flat = InfoSystem::new(2, &[0b00, 0b01, 0b10], &[(0b01, 0), (0b10, 1)]).unwrap();
    flat.check().unwrap();
    println!("ideals of the flat system: {:?}", flat.ideals());
    println!("Scott opens: {:?}", flat.scott_topology().opens());

    let maps = ApproximableMapping::enumerate(&flat, &flat);
    println!("{} approximable mappings flat → flat", maps.len());
    for m in &maps {
        let g = m.realize();
        let back = ApproximableMapping::reconstruct(&g, &flat, &flat).unwrap();
        assert_eq!(&back, m);
        println!("  on ideals: {:?}", g.table());
    }

    let systems = InfoSystem::all_up_to(2);
    let scott = ScottFunctor::new(InfCategory::with_objects(systems.clone()));
    let full = representation_report(&scott).is_full_embedding();
    let chu = representation_report(&inf_chu_representation(&scott)).is_strict_representation();
    println!(
        "{} systems on ≤ 2 tokens: Scott full embedding {full}, into Chu strict {chu}",
        systems.len()
    );
}

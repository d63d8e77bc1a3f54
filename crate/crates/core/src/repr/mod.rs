//! Boolean and subset representations into Chu categories over finite
//! setoids.

mod subsets;
mod top;
mod topology;

pub use subsets::{
    complemented_space, find_preimage, image_nonsurjectivity_witness, mono_space, subset_space, ComplArrow,
    ComplRepresentation, ComplementedCategory, Inclusion, Mono, NonSurjectivityWitness, PowersetCategory, SubArrow,
    SubCategory, SubRepresentation, SubsetsRepresentation,
};
pub use top::{membership_space, powerset_space, preimage_map, ContinuousMap, Delta, ESet, ETop, TopCategory};
pub use topology::{
    continuity_witness, is_continuous, is_topology, preimage, topology_violation, FiniteTopology, TopologyViolation,
};

//! Finite setoids and the cartesian closed structure on them.

mod apartness;
mod map;
mod product;
mod setoid;
mod subset;

pub use apartness::{is_strongly_extensional, strong_extensionality_witness, Apartness, ApartnessViolation};
pub use map::SetoidFn;
pub use product::{fn_product, product_setoid, ExponentialWitness, ProductWitness};
pub use setoid::Setoid;
pub use subset::{canonical_inequality, disjointness_witness, is_disjoint, ComplementedSubset, SubsetEmbedding};

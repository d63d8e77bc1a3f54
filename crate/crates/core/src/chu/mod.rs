//! Chu spaces over finite setoids and the functors into them.

mod aff;
mod category;
mod functors;
mod space;

pub use aff::{aff_space, pullback, AffCategory, AffMorphism, AffObject, AffRepresentation};
pub use category::ChuCategory;
pub use functors::{evaluation_space, precompose_map, CccRepresentation, LocalPushforward};
pub use space::{
    adjointness_witness, chu_compose, classify, enumerate_hom, is_chu_transform, ChuClass, ChuSpace, ChuTransform,
};

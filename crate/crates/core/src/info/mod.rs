//! Finite Scott information systems and their representations.

mod mapping;
mod system;

pub use mapping::{
    approx_compose, inf_chu_representation, ApproximableMapping, InfCategory, MappingViolation, ScottFunctor,
};
pub use system::{InfoSystem, InfoViolation, MAX_TOKENS};

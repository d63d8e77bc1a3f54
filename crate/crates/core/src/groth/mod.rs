//! Global Chu functors along product-preserving functors, and the
//! Grothendieck-style presentations of Chu categories.

mod antipar;
mod fibred;
mod global;
mod pp;
mod sigma;

pub use antipar::{
    antipar_condition, chu_groth_identification, verify_antipar_closure, verify_contravariant_laws, AntiparArrow,
    AntiparCategory, AntiparObject, ChuAsGroth, HomPairing, PairPresheaf,
};
pub use fibred::{fibred_chu, reindex_space, Fibre, FibredSummary, FibredTotal, Reindex, TotalArrow, TotalToChu};
pub use global::{
    gen_groth_compose, groth_compose, star_product, verify_gen_global_composition, verify_global_composition,
    GenGrothMorphism, GenPushforward, GrothMorphism, Pushforward,
};
pub use pp::{comparison, composite_iso_agrees, iso_domain, perturbed_iso, PPFunctor};
pub use sigma::{
    eta_component, separating_element, separating_pair, sigma_hom_embedding, verify_eta_natural, SigmaSummary,
};

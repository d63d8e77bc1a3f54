//! Chu categories over an endofunctor, and the predicate categories they
//! represent.

mod endofunctor;
mod functors;
mod pred;
mod space;

pub use endofunctor::{CustomEndofunctor, CustomNatTrans, Endofunctor, EndofunctorOn, NatTrans};
pub use functors::{forget_anchor, EmbedConstant, GenLocalPushforward};
pub use pred::{
    compl_pred_space, full_predicate, pred_space, predc_space, ComplPredArrow, ComplPredCategory,
    ComplPredRepresentation, FullPredicates, PredArrow, PredC, PredCArrow, PredCRepresentation, PredCategory,
    PredRepresentation, SetRepresentation,
};
pub use space::{
    enumerate_genchu_hom, genchu_compose, is_genchu_transform, pentagon_witness, verify_pentagon_closure,
    ClosureSummary, GenChuCategory, GenChuSpace, GenChuTransform,
};

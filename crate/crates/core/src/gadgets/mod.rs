//! Hardness gadgets, reduction instances and the hull-set certificates that
//! accompany them.

mod hw;
mod reduction;

pub use hw::{
    build_fuv, build_hw, hull_set_hw, hw_completion_set, hw_vertex, GadgetFuv, GadgetHw, HW_CYCLES, HW_NAMES, HW_ORDER, HW_SEEDS,
};
pub use reduction::{
    attached_seeds, base_graph, build_cartesian_hardness, build_cartesian_mini, build_identified_hh,
    cartesian_certificate, compact_cartesian_certificate, lift_hull_set, nonedge_set, project_back, reduce_p3_to_cc, Construction, GadgetIds,
    IdentifiedPair, Origin, Provenance, ReductionEnvelope, ReductionInstance,
};

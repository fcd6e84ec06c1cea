//! Majorana stars, geodesics and null phase curves.

pub mod geodesic;
pub mod npc;
pub mod stars;

pub use geodesic::{
    closed_form_star, degenerate_endpoints, degenerate_mapping_unitary, dual_index, geodesic, geodesic_decompose,
    radius_formula, BlochCurve, CircleFit, GeodesicDecomposition,
};
pub use npc::{
    default_g, dual_angles_from_state, dual_pair_state, npc_check, npc_from_dual_curves, npc_g_curve_angles,
    null_phase_curve, GCurveAngles, NpcReport,
};
pub use stars::{coherent_state, majorana_coefficients, state_to_stars, state_to_stars_with, stars_to_state, StarSet};

//! Discrete-time quantum walks: real-space engines and momentum-space bands.

pub mod bands;
pub mod engine;
pub mod spec;

pub use bands::{
    band_grid, band_point, closed_form, gamma_critical, k_grid, momentum_real_consistency, pt_check, quasi_energy,
    step_matrix_k, time_symmetric_k, BandGrid, BandPoint, GammaCritical, PtReport,
};
pub use engine::{
    classify_norm, dense_step, evolve, evolve_with, variance, Evolution, NormFit, NormRegime, StateVector, Stepper,
};
pub use spec::{domain_map, index, position, Angles, Coin4, Variant, WalkSpec};

//! Topological invariants: winding and Chern numbers, real-space winding, edge spectra, SSH.

pub mod chern;
pub mod edge;
pub mod realspace;
pub mod ssh;
pub mod winding;

pub use chern::{chern_fhs, chern_of_blocks, ChernResult};
pub use edge::{bulk_gaps, edge_bands_2d, edge_spectrum_1d, two_domain_ssqw, EdgeBands2d, EdgeSpectrum, Localization};
pub use realspace::{winding_realspace, RealspaceWinding};
pub use ssh::{ssh_reference, ssh_winding, SshReport, ZeroMode};
pub use winding::{planar_winding, smooth_loop, winding_momentum, winding_of_loop, ChiralAxis, WindingResult};

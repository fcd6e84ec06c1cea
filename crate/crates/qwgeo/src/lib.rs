//! Discrete-time quantum walks, topological invariants and geometric phases.
//!
//! Modules:
//! - [`numkit`]: dense complex linear algebra, eigensolver, polynomial roots, quadrature
//! - [`geophase`]: Bargmann invariants and pure/mixed-state geometric phases
//! - [`stargeo`]: Majorana stars, geodesics, null phase curves
//! - [`walks`]: 1D/2D walk engines, bands, PT checks
//! - [`topo`]: winding and Chern numbers, edge spectra, SSH
//! - [`cavity`]: rotating two-level atom in a lossy cavity
//! - [`cli`]: command-line front end

pub mod cavity;
pub mod cli;
pub mod error;
pub mod geophase;
pub mod numkit;
pub mod stargeo;
pub mod topo;
pub mod walks;

pub use error::{QwError, Result};
pub use num_complex::Complex64 as C64;

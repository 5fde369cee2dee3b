//! Planarity testing with rotation systems, apex detection, and the
//! potentials `psi` and `phi` of the strengthened apex bound.

mod dmp;
mod embedding;
mod potential;

pub use dmp::{is_planar, planar_embedding};
pub use embedding::Embedding;
pub use potential::{apex_certificate, apex_vertices, face_sizes, is_apex, phi, psi, ApexCertificate};

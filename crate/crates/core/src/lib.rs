//! Exact-arithmetic Steklov spectra of model orbifolds: canonical
//! orbisurfaces, cones and finite-group quotients of Euclidean balls, with
//! the inverse problem on the boundary data, Sunada-style isospectrality
//! checks, and the exact quantities behind the eigenvalue bounds.

pub mod bounds;
pub mod harmonic;
pub mod inverse;
pub mod matgroup;
pub mod rational;
pub mod spectra;
pub mod sunada;

pub use rational::Rat;
pub use spectra::{
    canonical_disk_spectrum, canonical_half_disk_spectrum, canonical_spectrum, enumerate,
    spectra_equal, ArithmeticSpectrum, BoundaryData, Length, SpectrumUnit, SpectrumView,
};

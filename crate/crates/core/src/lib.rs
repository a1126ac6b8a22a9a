//! Exact focal decomposition of flat tori.
//!
//! A flat torus `ℝⁿ/Λ` is described by the rational Gram matrix of a basis
//! of `Λ`; every computation here is in basis coordinates with exact
//! rationals. The crate covers
//!
//! * [`quadspace`]: rational vectors, Gram forms, affine flats;
//! * [`lattice`]: the catalog, the lattice file format, LLL reduction and
//!   exact ball enumeration;
//! * [`focal`]: B-planes, the indices `μ`, `ι`, `B`, Brillouin zones and
//!   radial profiles;
//! * [`spectra`]: length and focal spectra;
//! * [`isometry`]: isometry up to rescaling with certificates.

pub mod error;
pub mod focal;
pub mod isometry;
pub mod lattice;
pub mod quadspace;
pub mod spectra;

pub use error::{Error, Result};
pub use lattice::{catalog, Lattice, LatticePoint};
pub use quadspace::{GramForm, QVector, Scalar};

//! Quantum cluster characters for acyclic quivers over prime fields.
//!
//! The crate computes, exactly:
//!
//! - homological data of quiver representations over F_p (Hom, Ext^1,
//!   kernels, AR translates),
//! - quiver Grassmannian point counts and their counting polynomials via
//!   multi-prime interpolation,
//! - quantum cluster characters with values in a Lambda-twisted quantum
//!   torus over Z[s^{+-1}], s = t^{1/2},
//! - and executable verification suites for the cluster multiplication
//!   identities attached to exchange triangles, including convention
//!   calibration and per-stratum diagnostics.

pub mod character;
pub mod field_linalg;
pub mod grassmann;
pub mod quiver;
pub mod rep;
pub mod torus;
pub mod triangles;
pub mod verify;

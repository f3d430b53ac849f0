//! The contact category of the marked disk, made computable.
//!
//! Dividing sets on the disk with `2n` marked points are non-crossing
//! matchings; bypass surgeries connect them in three-term triangles, and
//! every matching resolves into a one-sided twisted complex over the
//! elementary multicurves indexed by the disk quiver. The crate also
//! carries the supporting cast: exact linear algebra over the two-element
//! field, arc diagrams with their surfaces and algebra presentations, a
//! small engine for presented differential categories, and the
//! Grothendieck-group computations.

pub mod acceptance;
pub mod arcdiag;
pub mod bypass;
pub mod cli;
pub mod disk;
pub mod gf2;
pub mod present;
pub mod quiver;
pub mod resolve;
pub mod twisted;

//! Verification kernels for function fields over small finite fields.
//!
//! The crate is layered bottom-up:
//!
//! - [`gfarith`]: exact arithmetic in GF(p^k), p in {2, 3}.
//! - [`polyring`]: univariate polynomials, places of GF(q)(x), residue maps.
//! - [`varieties`]: projective point enumeration and counting on plane
//!   quartics and cubic-quadric space curves.
//! - [`covers`]: degree-2 Artin-Schreier and Kummer covers of the projective
//!   line (ramification, genus, place census).
//! - [`zetafn`]: L-polynomials from point counts, class numbers, censuses.
//! - [`census64`]: the 64 cubic-quadric pairs of the genus-4 search.

pub mod census64;
pub mod covers;
pub mod error;
pub mod gfarith;
pub mod polyring;
pub mod text;
pub mod varieties;
pub mod zetafn;

pub use error::{Error, Result};

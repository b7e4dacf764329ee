//! Exact tools for torus actions of complexity one: symmetry of the action,
//! the quotient pair `(P^1, B)`, equivariant global log canonical thresholds
//! and the resulting Kähler–Einstein certificates, together with GIT
//! polystability of diagonal torus actions and toric Chow quotient fans.
//!
//! Everything is computed with exact rational (or quadratic-irrational)
//! arithmetic; there are no tolerances.

pub mod cli;
pub mod curvepair;
pub mod error;
pub mod exact;
pub mod group;
pub mod polyhedral;
pub mod quotients;
pub mod tvariety;

pub use error::{Error, ErrorClass, Result};

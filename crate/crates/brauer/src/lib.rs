//! Brauer graph algebras: ribbon-graph data, bound-quiver presentations,
//! string modules, syzygies, stable Hom and universal deformation rings.

// index loops mirror the matrix formulas
#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod presentation;
pub mod ribbon;
pub mod strmod;
pub mod udr;
pub mod verify;

pub use error::{Error, Result};

//! Exact computations for finite Weyl groups: one-W-type modules of the
//! rational Cherednik algebra at `t = 0`, character tables, and the cuspidal
//! Calogero-Moser cell reports derived from Dirac cohomology.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cells;
pub mod chars;
pub mod cli;
pub mod error;
pub mod onewtype;

pub use error::{Error, Result};
pub mod rootsys;
pub mod verify;
pub mod weyl;

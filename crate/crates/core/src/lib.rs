//! Exact p-adic triple indices, dilogarithms and regulator formulas on wide opens of the projective line.
#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod error;
pub mod padic;
pub mod series;
pub mod index;
pub mod p1geom;
pub mod polylog;
pub mod regulator;

pub use error::{Error, Result};
pub use padic::{Padic, PadicConfig, Ring};

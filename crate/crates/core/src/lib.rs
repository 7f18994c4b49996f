#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod heisenberg;
pub mod identities;
pub mod linalg;
pub mod partition;
pub mod reps;
pub mod scalar;
pub mod symfunc;

pub use error::{Error, Result};
pub use scalar::{Bindings, IntPoly, Scalar};

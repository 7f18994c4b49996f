//! Representations of Heisenberg algebras and the symmetric functions they
//! produce.

mod adjoint;
mod module;
mod params;
mod rep;

pub use adjoint::AdjointRep;
pub use module::{act_on_lambda, HModule, Route};
pub use params::{HeisenbergParams, PARAM_SAMPLE};
pub use rep::{Generator, Native, Representation, StateVec};

//! Exact root-system, lattice and Weyl-group computations for compact
//! simple Lie groups.

pub mod cochar;
pub mod error;
pub mod harness;
pub mod lattice;
pub mod linalg;
pub mod model;
pub mod parse;
pub mod rational;
pub mod reversor;
pub mod roots;
pub mod weyl;

pub use error::{Error, Result};
pub use lattice::{finite_quotient, lattice_from_generators, FiniteAbelianGroup, Lattice};
pub use model::{CartanModel, RatVector};
pub use rational::Rational;
pub use roots::{build_root_system, Family, Root, RootSystem, SimpleType};
pub use weyl::WeylWord;

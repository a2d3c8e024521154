//! Exact computation of Cartan commutants in the symmetric and enveloping
//! algebras of classical simple Lie algebras.

pub mod closure;
pub mod commutant;
pub mod error;
pub mod golden;
pub mod liealg;
pub mod matrix;
pub mod polyalg;
pub mod quantize;
pub mod rational;
pub mod superint;

pub use error::{Error, Result};
pub use closure::{close_catalog, BracketTable};
pub use commutant::{build_catalog, GeneratorCatalog, GeneratorId, ZeroWeightMonomial};
pub use liealg::{AlgebraType, Family, HatStyle, LieAlgebra, Root, RootSystem, StructureConstants};
pub use polyalg::{Monomial, Polynomial};
pub use quantize::{Enveloping, PbwElement, PbwMonomial};
pub use rational::Q;

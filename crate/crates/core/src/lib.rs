//! Exact lattice polytopes, Minkowski-sum normality checks and toric surface
//! fans in dimension 2 and 3.

pub mod catalog;
pub mod lattice;
pub mod normality;
pub mod polytope;
pub mod toric;
pub mod triangulation;

mod hull;

pub use lattice::{Int, LatticeError, LatticeVector, Rat, RatVector, UnimodularMap};
pub use normality::{CheckReport, Decomposition, NormalityError};
pub use polytope::{HalfSpace, NotReflexive, PolarDual, Polytope, PolytopeError, WidthCertificate};
pub use toric::{
    adjoint_polytope, normal_fan, BpfOutcome, Cone, Fan, SkipReason, SupportPoint, TDivisor,
    ToricError,
};

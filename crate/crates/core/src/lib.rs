//! Exact-arithmetic toolkit for cut polytopes, slack matrices, and the
//! gadget reductions that show various combinatorial polytopes arise as
//! projections of faces of one another.
//!
//! Everything is computed over the rationals and verified by exhaustive
//! enumeration, so all routines are meant for small instances and guard
//! their work with a [`Budget`].

pub mod acceptance;
pub mod bits;
pub mod cutpoly;
pub mod budget;
pub mod error;
pub mod graphs;
pub mod polyhedra;
pub mod ratmath;
pub mod reductions;
pub mod xcbounds;

pub use budget::Budget;
pub use error::{Result, XcError};
pub use graphs::{Crossing, Graph, Hypergraph3, MinorOp};
pub use ratmath::{RatMatrix, Rational};
pub use polyhedra::{AffineMap, FaceSpec, LinIneq, SlackMatrix, VPolytope};

//! Outer j-radii of polytopes.
//!
//! The outer j-radius of a convex body is the radius of its smallest
//! enclosing j-cylinder: a set `J + rho * B` where `J` is an (n-j)-flat.
//! Equivalently, it is the radius of the smallest enclosing j-ball over
//! all orthogonal projections onto j-dimensional subspaces.
//!
//! This crate provides:
//!
//! * [`geometry`] — dense small-scale linear algebra: orthonormal frames,
//!   projections, affine rank, and minimal enclosing balls.
//! * [`cylinder`] — enclosing-cylinder radius for a fixed axis frame,
//!   boundary-touching classification, and the facet-parallel recursion
//!   step for simplices.
//! * [`search`] — seeded multistart pattern search over orthonormal
//!   frames, the numerical oracle for arbitrary polytopes.
//! * [`simplex`] — the standard embedding of the regular simplex and the
//!   known closed forms for its outer radii.
//! * [`sympoly`] — the constrained quartic program over multiplicity
//!   triples that yields the smallest-enclosing-cylinder radius of a
//!   regular simplex, solved exactly in structure.
//! * [`certify`] — exact rational verification of the polynomial
//!   identities behind the closed forms, and high-precision certification
//!   of solver output.

pub mod certify;
pub mod cylinder;
pub mod geometry;
pub mod rational;
pub mod search;
pub mod simplex;
pub mod sympoly;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

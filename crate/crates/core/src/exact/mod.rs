//! Exact rational linear algebra and real-algebraic comparisons.

pub mod algebraic;
pub mod charpoly;
pub mod constants;
pub mod inertia;
pub mod matrix;
pub mod minors;
pub mod poly;
pub mod rational;
pub mod spectrum;
pub mod sturm;

pub use algebraic::AlgebraicNumber;
pub use charpoly::{char_poly, ScaledCharPoly};
pub use constants::{fundamental_constants, Constants};
pub use matrix::{Inertia, SymRatMatrix};
pub use minors::BorderedBareiss;
pub use poly::IntPolynomial;
pub use rational::Rational;
pub use spectrum::{count_eigs_below, count_eigs_below_algebraic, multiplicity_at, smallest_eig_interval, Spectrum};

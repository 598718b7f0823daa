//! Exact modular data of premodular categories over cyclotomic fields, their
//! higher Gauss sums and higher central charges, and exact verification of the
//! arithmetic identities these satisfy.

pub mod arith;
pub mod constructors;
pub mod cyclo;
pub mod fixtures;
pub mod invariants;
pub mod moddata;
pub mod reproduce;
pub mod witt;

pub use cyclo::{Cyclo, CycloError, CycloNum, GaloisAut, IntPolynomial, RootOfUnity, Scalar};

/// Cyclotomic numbers with `i64` rational coefficients; fast, but overflow is
/// the caller's problem.
pub type SmallCyclo = Cyclo<num_rational::Rational64>;

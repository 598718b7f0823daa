//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.

mod algebraic;
mod field;
pub mod interval;
mod json;
mod linear;
mod poly;
mod root;
mod scalar;

pub use algebraic::{Phase, MAX_BITS};
pub use field::{cyclotomic_polynomial, Cyclo};
pub use interval::{ComplexBall, IntervalSummary};
pub use linear::IntegerForm;
pub use poly::IntPolynomial;
pub use root::{GaloisAut, RootOfUnity};
pub use scalar::Scalar;

use num_rational::BigRational;

/// Cyclotomic numbers with arbitrary-precision rational coefficients.
pub type CycloNum = Cyclo<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{k} is not a unit modulo {n}")]
    NotCoprime { k: i64, n: u64 },
    #[error("element is not real")]
    NotReal,
    #[error("the phase of zero is undefined")]
    ZeroPhase,
    #[error("sign undecided at {bits} bits")]
    PrecisionExhausted { bits: u32 },
}

//! Builders for premodular data: pointed categories from metric groups,
//! abelian doubles, group-counting oracles, Kac-Peterson data in rank at most
//! two, and condensation of pointed categories.

mod group;
mod lie;
mod metric;

pub use group::{double_gauss_sum, parse_cycles, FiniteGroup, GroupSpec};
pub use lie::{kac_peterson, kac_peterson_with, LieDatum, LieType};
pub use metric::{abelian_double, condense_pointed, pointed, MetricGroup};

use crate::arith;
use crate::moddata::ModDataError;

#[derive(Debug, thiserror::Error)]
pub enum ConstructorError {
    #[error("quadratic form is not well defined: q changes under {element:?} + n_{generator} e_{generator}")]
    IllFormedQuadraticForm { element: Vec<i64>, generator: usize },
    #[error("bilinear form is not a bicharacter at {x:?}, {y:?}")]
    NotBicharacter { x: Vec<i64>, y: Vec<i64> },
    #[error("malformed metric group: {0}")]
    BadMetricGroup(String),
    #[error("subgroup is not isotropic: q({0:?}) != 1")]
    NotIsotropic(Vec<i64>),
    #[error("induced quadratic form is not well defined on the quotient")]
    IllDefinedInducedForm,
    #[error("unsupported Lie type {0}")]
    UnsupportedType(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error(transparent)]
    ModData(#[from] ModDataError),
}

/// Legendre symbol `(a/p)` by Euler's criterion.
///
/// # Panics
/// If `p` is not an odd prime.
pub fn legendre(a: i64, p: u64) -> i8 {
    assert!(p > 2 && arith::is_prime(p), "{p} is not an odd prime");
    let r = arith::rem(a, p);
    if r == 0 {
        return 0;
    }
    if arith::pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
///
/// # Panics
/// If `n` is even or zero.
pub fn jacobi(a: i64, n: u64) -> i8 {
    assert!(n % 2 == 1, "jacobi symbol needs odd n, got {n}");
    let mut a = arith::rem(a, n);
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

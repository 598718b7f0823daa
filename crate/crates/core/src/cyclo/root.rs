use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{CycloError, CycloNum};
use crate::arith;

/// The root of unity `zeta_M^e = exp(2 pi i e / M)`, with `M` its exact order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RootRepr", into = "RootRepr")]
pub struct RootOfUnity {
    order: u64,
    exp: u64,
}

#[derive(Serialize, Deserialize)]
struct RootRepr {
    #[serde(rename = "M")]
    m: u64,
    e: i64,
}

impl From<RootRepr> for RootOfUnity {
    fn from(r: RootRepr) -> Self {
        RootOfUnity::new(r.m.max(1), r.e)
    }
}

impl From<RootOfUnity> for RootRepr {
    fn from(r: RootOfUnity) -> Self {
        RootRepr { m: r.order, e: r.exp as i64 }
    }
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { order: 1, exp: 0 };

    /// `zeta_m^e`, reduced so that `m` becomes the exact order.
    pub fn new(m: u64, e: i64) -> Self {
        assert!(m >= 1, "root of unity needs a positive modulus");
        let e = arith::rem(e, m);
        let g = arith::gcd(e, m);
        RootOfUnity { order: m / g, exp: e / g }
    }

    /// `exp(2 pi i * r)` for a rational `r`.
    pub fn from_fraction(num: i64, den: u64) -> Self {
        Self::new(den, num)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn is_one(&self) -> bool {
        self.order == 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let m = arith::lcm(self.order, other.order);
        let e = self.exp * (m / self.order) + other.exp * (m / other.order);
        Self::new(m, e as i64)
    }

    pub fn inv(&self) -> Self {
        Self::new(self.order, -(self.exp as i64))
    }

    pub fn pow(&self, k: i64) -> Self {
        let e = (self.exp as i128 * k as i128).rem_euclid(self.order as i128);
        Self::new(self.order, e as i64)
    }

    /// Image under `zeta_n -> zeta_n^k` for any `n` divisible by the order.
    pub fn galois(&self, k: i64) -> Self {
        self.pow(k)
    }

    pub fn to_cyclo(&self) -> CycloNum {
        CycloNum::zeta_pow(self.order, self.exp as i64)
    }

    /// The argument as a fraction of a full turn, in `[0, 1)`.
    pub fn turns(&self) -> BigRational {
        if self.exp.is_zero() {
            return BigRational::zero();
        }
        BigRational::new(self.exp.into(), self.order.into())
    }

    /// The two square roots.
    pub fn square_roots(&self) -> [RootOfUnity; 2] {
        let r = RootOfUnity::new(2 * self.order, self.exp as i64);
        [r, r.mul(&RootOfUnity::new(2, 1))]
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exp) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (m, 1) => write!(f, "z{m}"),
            (m, e) => write!(f, "z{m}^{e}"),
        }
    }
}

/// The automorphism `zeta_N -> zeta_N^k` of `Q(zeta_N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaloisAut {
    conductor: u64,
    k: u64,
}

impl GaloisAut {
    pub fn new(conductor: u64, k: i64) -> Result<Self, CycloError> {
        if arith::gcd_signed(k, conductor) != 1 {
            return Err(CycloError::NotCoprime { k, n: conductor });
        }
        Ok(GaloisAut { conductor, k: arith::rem(k, conductor) })
    }

    pub fn identity(conductor: u64) -> Self {
        GaloisAut { conductor, k: 1 % conductor }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Composition: `(self o other)(zeta) = zeta^(k_self * k_other)`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        GaloisAut {
            conductor: self.conductor,
            k: (self.k as u128 * other.k as u128 % self.conductor as u128) as u64,
        }
    }

    pub fn inverse(&self) -> Self {
        GaloisAut {
            conductor: self.conductor,
            k: arith::mod_inverse(self.k as i64, self.conductor).expect("unit"),
        }
    }

    /// Extends to `Q(zeta_m)` for a multiple `m` of the conductor, choosing the
    /// smallest representative `k + j N` that is a unit modulo `m`.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.conductor), "lift target must be a multiple");
        let mut k = self.k;
        while arith::gcd(k, m) != 1 {
            k += self.conductor;
        }
        GaloisAut { conductor: m, k: k % m }
    }

    /// Applies the automorphism, lifting it first when the element's conductor
    /// does not divide ours.
    pub fn apply(&self, a: &CycloNum) -> CycloNum {
        let n = a.conductor();
        let aut = if self.conductor.is_multiple_of(n) {
            *self
        } else {
            self.lift(arith::lcm(self.conductor, n))
        };
        a.galois(aut.k as i64)
            .expect("unit modulo a multiple is a unit modulo the divisor")
    }

    pub fn apply_root(&self, r: &RootOfUnity) -> RootOfUnity {
        let aut = if self.conductor.is_multiple_of(r.order()) {
            *self
        } else {
            self.lift(arith::lcm(self.conductor, r.order()))
        };
        r.galois(aut.k as i64)
    }
}

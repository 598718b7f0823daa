//! Number-theoretic predicates on elements of `Q(zeta_N)` with rational coefficients.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::interval::{self, ComplexBall};
use super::{CycloError, CycloNum, IntPolynomial, RootOfUnity};
use crate::arith;

/// Largest precision tried before a sign decision is abandoned.
pub const MAX_BITS: u32 = 1 << 15;

/// Exact argument of a nonzero cyclotomic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Phase {
    /// `a / |a|` is this root of unity.
    Root(RootOfUnity),
    /// `a / conj(a)` is not a root of unity; its minimal polynomial is attached.
    NotRoot { ratio_minpoly: IntPolynomial },
}

impl CycloNum {
    pub fn from_ratio(num: i64, den: i64) -> Self {
        CycloNum::from_scalar(BigRational::new(num.into(), den.into()))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        CycloNum::from_scalar(BigRational::from_integer(v))
    }

    /// Galois orbit with duplicates removed.
    pub fn distinct_conjugates(&self) -> Vec<CycloNum> {
        let mut out: Vec<CycloNum> = Vec::new();
        for c in self.conjugates() {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// `N(a) = prod_sigma sigma(a)` over `Gal(Q(zeta_N)/Q)`.
    pub fn norm(&self) -> BigRational {
        let p: CycloNum = self.conjugates().into_iter().product();
        p.as_scalar().expect("norm is rational")
    }

    /// Primitive integer minimal polynomial, from the product over the distinct
    /// Galois conjugates.
    pub fn minimal_polynomial(&self) -> IntPolynomial {
        let mut poly: Vec<CycloNum> = vec![CycloNum::one()];
        for c in self.distinct_conjugates() {
            let mut next = vec![CycloNum::zero(); poly.len() + 1];
            for (j, p) in poly.iter().enumerate() {
                next[j + 1] = &next[j + 1] + p;
                next[j] = &next[j] - &(p * &c);
            }
            poly = next;
        }
        let rational: Vec<BigRational> = poly
            .iter()
            .map(|c| c.as_scalar().expect("symmetric functions of a Galois orbit are rational"))
            .collect();
        IntPolynomial::from_rationals(&rational)
    }

    /// Algebraic integrality. The power basis of `Z[zeta_N]` is an integral
    /// basis of the ring of integers, so this is coefficient integrality.
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_integer())
    }

    /// `Some(zeta_M^e)` when the element is a root of unity.
    ///
    /// Modulus one is checked exactly (`a * conj(a) = 1`); the order is then
    /// found among the divisors of `lcm(2, N)`.
    pub fn is_root_of_unity(&self) -> Option<RootOfUnity> {
        if self.is_zero() || !self.is_algebraic_integer() {
            return None;
        }
        if !(self * &self.conj()).is_one() {
            return None;
        }
        let n = self.conductor();
        let l = if n.is_multiple_of(2) { n } else { 2 * n };
        let a = self.lift(l);
        let phi = arith::euler_phi(l) as usize;
        // zeta_L^j for j < phi(L) is a basis vector
        let single: Vec<(usize, &BigRational)> = a.terms().collect();
        if single.len() == 1 && single[0].1.is_one() && single[0].0 < phi {
            return Some(RootOfUnity::new(l, single[0].0 as i64));
        }
        (phi as u64..l)
            .find(|&j| CycloNum::zeta_pow(l, j as i64) == a)
            .map(|j| RootOfUnity::new(l, j as i64))
    }

    /// `a` is a d-number: an algebraic integer whose principal ideal is fixed
    /// by every Galois automorphism, i.e. `sigma(a)/a` and `a/sigma(a)` are
    /// algebraic integers for all `sigma`. Zero counts as a d-number.
    pub fn is_d_number(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        if !self.is_algebraic_integer() {
            return false;
        }
        let inv = self.inv().expect("nonzero");
        arith::units(self.conductor()).into_iter().all(|k| {
            let s = self.galois(k as i64).expect("unit");
            let s_inv = inv.galois(k as i64).expect("unit");
            (&s * &inv).is_algebraic_integer() && (self * &s_inv).is_algebraic_integer()
        })
    }

    pub fn embed(&self, bits: u32) -> ComplexBall {
        interval::embed(self, bits)
    }

    /// Sign of a real (conjugation-fixed) element, escalating precision from
    /// `start_bits` until the certified interval excludes zero.
    pub fn real_sign(&self, start_bits: u32) -> Result<Ordering, CycloError> {
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        if !self.is_real() {
            return Err(CycloError::NotReal);
        }
        let mut bits = start_bits.max(32);
        loop {
            let b = self.embed(bits);
            if b.re.is_positive() {
                return Ok(Ordering::Greater);
            }
            if b.re.is_negative() {
                return Ok(Ordering::Less);
            }
            if bits >= MAX_BITS {
                return Err(CycloError::PrecisionExhausted { bits });
            }
            bits *= 2;
        }
    }

    /// Every Galois conjugate is real and strictly positive.
    pub fn is_totally_positive(&self, start_bits: u32) -> Result<bool, CycloError> {
        for c in self.distinct_conjugates() {
            if !c.is_real() || c.real_sign(start_bits)? != Ordering::Greater {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every Galois conjugate is real and nonnegative.
    pub fn is_totally_nonnegative(&self, start_bits: u32) -> Result<bool, CycloError> {
        for c in self.distinct_conjugates() {
            if !c.is_real() || c.real_sign(start_bits)? == Ordering::Less {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact `a / |a|`.
    ///
    /// `a / conj(a)` is tested for being a root of unity `alpha`; of the two
    /// square roots `+-zeta` of `alpha`, the one with `a / zeta` real and
    /// positive is returned. Realness is checked exactly, positivity through a
    /// certified interval.
    pub fn phase(&self, start_bits: u32) -> Result<Phase, CycloError> {
        if self.is_zero() {
            return Err(CycloError::ZeroPhase);
        }
        let alpha = self.checked_div(&self.conj())?;
        match alpha.is_root_of_unity() {
            Some(r) => {
                let [z, minus_z] = r.square_roots();
                let t = self * &z.inv().to_cyclo();
                debug_assert!(t.is_real());
                match t.real_sign(start_bits)? {
                    Ordering::Greater => Ok(Phase::Root(z)),
                    Ordering::Less => Ok(Phase::Root(minus_z)),
                    Ordering::Equal => Err(CycloError::ZeroPhase),
                }
            }
            None => Ok(Phase::NotRoot { ratio_minpoly: alpha.minimal_polynomial() }),
        }
    }

    /// Certified enclosure of `a / |a|` at roughly `bits` bits.
    pub fn unit_ball(&self, bits: u32) -> Result<ComplexBall, CycloError> {
        if self.is_zero() {
            return Err(CycloError::ZeroPhase);
        }
        let mut bits = bits.max(32);
        loop {
            let norm = (self * &self.conj()).embed(bits);
            if let Some(r) = norm.re.recip_sqrt() {
                return Ok(self.embed(bits).scale(&r));
            }
            if bits >= MAX_BITS {
                return Err(CycloError::PrecisionExhausted { bits });
            }
            bits *= 2;
        }
    }

    /// `|a|` as an exact cyclotomic number, available when the phase is a root of unity.
    pub fn abs_exact(&self, start_bits: u32) -> Result<Option<CycloNum>, CycloError> {
        match self.phase(start_bits)? {
            Phase::Root(z) => Ok(Some(self * &z.inv().to_cyclo())),
            Phase::NotRoot { .. } => Ok(None),
        }
    }
}

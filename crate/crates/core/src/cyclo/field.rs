use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::scalar::{reduce_generic, Scalar};
use super::CycloError;
use crate::arith;

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<[i64]>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<[i64]>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
///
/// Computed as `(x^n - 1) / prod_{d | n, d < n} Phi_d` and memoised; two threads
/// racing on the same `n` compute identical values.
pub fn cyclotomic_polynomial(n: u64) -> Arc<[i64]> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(p) = phi_cache().read().expect("cache poisoned").get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in arith::divisors(n) {
        if d == n {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        num = exact_div_monic(&num, &den);
    }
    let poly: Arc<[i64]> = num.into();
    phi_cache()
        .write()
        .expect("cache poisoned")
        .insert(n, poly.clone());
    poly
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quo = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        if c != 0 {
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

/// An element of the cyclotomic field `Q(zeta_N)`.
///
/// Stored as the residue of a polynomial in `zeta_N` modulo `Phi_N`, i.e. as a
/// dense vector of `phi(N)` coefficients in the power basis. The conductor is
/// not minimised automatically (see [`Cyclo::compress`]); operands with
/// different conductors are lifted to the lcm before arithmetic or comparison.
#[derive(Clone)]
pub struct Cyclo<Q> {
    conductor: u64,
    coeffs: Vec<Q>,
}

impl<Q: Scalar> Cyclo<Q> {
    /// `coeffs` must already be reduced: exactly `phi(n)` entries.
    pub(crate) fn from_reduced(n: u64, coeffs: Vec<Q>) -> Self {
        debug_assert_eq!(coeffs.len() + 1, cyclotomic_polynomial(n).len());
        Cyclo { conductor: n, coeffs }
    }

    fn from_buffer(n: u64, buf: Vec<Q>) -> Self {
        let modulus = cyclotomic_polynomial(n);
        let coeffs = reduce_generic(buf, &modulus);
        Cyclo { conductor: n, coeffs }
    }

    /// Builds `sum c * zeta_n^e` from arbitrary integer exponents.
    pub fn make<I>(n: u64, raw: I) -> Self
    where
        I: IntoIterator<Item = (i64, Q)>,
    {
        assert!(n >= 1, "conductor must be positive");
        let mut buf = vec![Q::zero(); n as usize];
        for (e, c) in raw {
            let k = arith::rem(e, n) as usize;
            buf[k] = buf[k].clone() + c;
        }
        Self::from_buffer(n, buf)
    }

    pub fn zero() -> Self {
        Cyclo { conductor: 1, coeffs: vec![Q::zero()] }
    }

    pub fn one() -> Self {
        Self::from_scalar(Q::one())
    }

    pub fn from_scalar(q: Q) -> Self {
        Cyclo { conductor: 1, coeffs: vec![q] }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_scalar(Q::from_i64(v))
    }

    /// `zeta_n^e`.
    pub fn zeta_pow(n: u64, e: i64) -> Self {
        Self::make(n, [(e, Q::one())])
    }

    pub fn zeta(n: u64) -> Self {
        Self::zeta_pow(n, 1)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients, `phi(N)` of them.
    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|q| q.is_one())
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_scalar(&self) -> Option<Q> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element over `Q(zeta_m)`; `m` must be a multiple of the conductor.
    pub fn lift(&self, m: u64) -> Self {
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot lift conductor {} to {}",
            self.conductor,
            m
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut buf = vec![Q::zero(); m as usize];
        for (e, c) in self.terms() {
            buf[e * step] = c.clone();
        }
        Self::from_buffer(m, buf)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let m = arith::lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m))
    }

    /// Applies `zeta_N -> zeta_N^k` where `N` is this element's conductor.
    pub fn galois(&self, k: i64) -> Result<Self, CycloError> {
        let n = self.conductor;
        if arith::gcd_signed(k, n) != 1 {
            return Err(CycloError::NotCoprime { k, n });
        }
        let k = arith::rem(k, n) as usize;
        if k == 1 % n as usize {
            return Ok(self.clone());
        }
        let mut buf = vec![Q::zero(); n as usize];
        for (e, c) in self.terms() {
            buf[(e * k) % n as usize] = c.clone();
        }
        Ok(Self::from_buffer(n, buf))
    }

    /// Complex conjugation, the automorphism `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit modulo every conductor")
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    pub fn scale(&self, q: &Q) -> Self {
        Cyclo {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c.clone() * q.clone()).collect(),
        }
    }

    /// All images under `Gal(Q(zeta_N)/Q)`, indexed by the units of `Z/N`.
    pub fn conjugates(&self) -> Vec<Self> {
        arith::units(self.conductor)
            .into_iter()
            .map(|k| self.galois(k as i64).expect("unit"))
            .collect()
    }

    /// Inverse through the norm: `a^-1 = (prod_{sigma != 1} sigma(a)) / N(a)`.
    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(q) = self.as_scalar() {
            let r = Cyclo::from_scalar(Q::one() / q);
            return Ok(if self.conductor == 1 { r } else { r.lift(self.conductor) });
        }
        let mut cofactor = Cyclo::one().lift(self.conductor);
        for k in arith::units(self.conductor).into_iter().skip(1) {
            cofactor = &cofactor * &self.galois(k as i64).expect("unit");
        }
        let norm = (&cofactor * self)
            .as_scalar()
            .expect("norm of a cyclotomic element is rational");
        Ok(cofactor.scale(&(Q::one() / norm)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, CycloError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Cyclo::one().lift(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Rewrites the element over the smallest conductor whose field contains it.
    pub fn compress(&self) -> Self {
        let n = self.conductor;
        for d in arith::divisors(n) {
            if d == n {
                break;
            }
            // Q(zeta_{2d}) = Q(zeta_d) for odd d, so even candidates with an odd
            // half are redundant; they are still tested, which is harmless.
            let fixed = arith::units(n)
                .into_iter()
                .filter(|&k| k % d == 1 % d)
                .all(|k| self.galois(k as i64).expect("unit") == *self);
            if fixed {
                if let Some(r) = self.express_over(d) {
                    return r;
                }
            }
        }
        self.clone()
    }

    // Solves for coordinates in the power basis of Q(zeta_d), d | N.
    fn express_over(&self, d: u64) -> Option<Self> {
        let k = arith::euler_phi(d) as usize;
        let cols: Vec<Vec<Q>> = (0..k)
            .map(|j| Cyclo::<Q>::zeta_pow(d, j as i64).lift(self.conductor).coeffs)
            .collect();
        let rows = self.coeffs.len();
        // augmented matrix rows x (k + 1)
        let mut m: Vec<Vec<Q>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Q> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..k {
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = Q::one() / m[r][c].clone();
            for x in m[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..=k {
                        m[i][j] = m[i][j].clone() - f.clone() * m[r][j].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        if m[r..].iter().any(|row| !row[k].is_zero()) {
            return None;
        }
        let mut sol = vec![Q::zero(); k];
        for (i, &c) in pivots.iter().enumerate() {
            sol[c] = m[i][k].clone();
        }
        Some(Cyclo::make(d, sol.into_iter().enumerate().map(|(e, c)| (e as i64, c))))
    }
}

impl<Q: Scalar> PartialEq for Cyclo<Q> {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl<Q: Scalar> Eq for Cyclo<Q> {}

impl<Q: Scalar> Zero for Cyclo<Q> {
    fn zero() -> Self {
        Cyclo::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
}

impl<Q: Scalar> One for Cyclo<Q> {
    fn one() -> Self {
        Cyclo::one()
    }
}

impl<Q: Scalar> Default for Cyclo<Q> {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl<'a, Q: Scalar> Add<&'a Cyclo<Q>> for &'a Cyclo<Q> {
    type Output = Cyclo<Q>;
    fn add(self, rhs: &'a Cyclo<Q>) -> Cyclo<Q> {
        let (a, b) = self.aligned(rhs);
        Cyclo {
            conductor: a.conductor,
            coeffs: a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a, Q: Scalar> Sub<&'a Cyclo<Q>> for &'a Cyclo<Q> {
    type Output = Cyclo<Q>;
    fn sub(self, rhs: &'a Cyclo<Q>) -> Cyclo<Q> {
        let (a, b) = self.aligned(rhs);
        Cyclo {
            conductor: a.conductor,
            coeffs: a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl<'a, Q: Scalar> Mul<&'a Cyclo<Q>> for &'a Cyclo<Q> {
    type Output = Cyclo<Q>;
    fn mul(self, rhs: &'a Cyclo<Q>) -> Cyclo<Q> {
        if let Some(q) = rhs.as_scalar() {
            return self.lift(arith::lcm(self.conductor, rhs.conductor)).scale(&q);
        }
        if let Some(q) = self.as_scalar() {
            return rhs.lift(arith::lcm(self.conductor, rhs.conductor)).scale(&q);
        }
        let (a, b) = self.aligned(rhs);
        let n = a.conductor;
        let modulus = cyclotomic_polynomial(n);
        let coeffs = Q::mul_reduce(&a.coeffs, &b.coeffs, n as usize, &modulus);
        Cyclo { conductor: n, coeffs }
    }
}

impl<'a, Q: Scalar> Div<&'a Cyclo<Q>> for &'a Cyclo<Q> {
    type Output = Cyclo<Q>;
    /// Panics on division by zero; see [`Cyclo::checked_div`].
    fn div(self, rhs: &'a Cyclo<Q>) -> Cyclo<Q> {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl<Q: Scalar> Neg for &Cyclo<Q> {
    type Output = Cyclo<Q>;
    fn neg(self) -> Cyclo<Q> {
        Cyclo {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<Q: Scalar> Neg for Cyclo<Q> {
    type Output = Cyclo<Q>;
    fn neg(self) -> Cyclo<Q> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<Q: Scalar> $tr<Cyclo<Q>> for Cyclo<Q> {
            type Output = Cyclo<Q>;
            fn $m(self, rhs: Cyclo<Q>) -> Cyclo<Q> { (&self).$m(&rhs) }
        }
        impl<'a, Q: Scalar> $tr<&'a Cyclo<Q>> for Cyclo<Q> {
            type Output = Cyclo<Q>;
            fn $m(self, rhs: &'a Cyclo<Q>) -> Cyclo<Q> { (&self).$m(rhs) }
        }
        impl<'a, Q: Scalar> $tr<Cyclo<Q>> for &'a Cyclo<Q> {
            type Output = Cyclo<Q>;
            fn $m(self, rhs: Cyclo<Q>) -> Cyclo<Q> { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl<Q: Scalar> std::iter::Sum for Cyclo<Q> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Cyclo::zero(), |acc, x| &acc + &x)
    }
}

impl<Q: Scalar> std::iter::Product for Cyclo<Q> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Cyclo::one(), |acc, x| &acc * &x)
    }
}

impl<Q: Scalar + fmt::Display> fmt::Display for Cyclo<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor;
        let mut first = true;
        for (e, c) in self.terms() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (e, mag.as_str()) {
                (0, m) => write!(f, "{m}")?,
                (1, "1") => write!(f, "z{n}")?,
                (_, "1") => write!(f, "z{n}^{e}")?,
                (1, m) => write!(f, "{m}*z{n}")?,
                (_, m) => write!(f, "{m}*z{n}^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<Q: Scalar> fmt::Debug for Cyclo<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[N={}](", self.conductor)?;
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "{e}:{c:?}")?;
        }
        write!(f, ")")
    }
}

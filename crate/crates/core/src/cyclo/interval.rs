//! Certified numerics: fixed-point balls `mid * 2^-prec +- rad * 2^-prec`.
//!
//! Only used to decide signs of exactly-known real numbers and to report
//! approximate values; every radius is a rigorous upper bound.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::CycloNum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    mid: BigInt,
    rad: BigInt,
    prec: u32,
}

impl Ball {
    pub fn exact_int(v: i64, prec: u32) -> Self {
        Ball { mid: BigInt::from(v) << prec, rad: BigInt::zero(), prec }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        let scaled = q.numer() << prec;
        let (quo, r) = scaled.div_mod_floor(q.denom());
        let rad = if r.is_zero() { BigInt::zero() } else { BigInt::from(1) };
        Ball { mid: quo, rad, prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn add(&self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        Ball { mid: &self.mid + &o.mid, rad: &self.rad + &o.rad, prec: self.prec }
    }

    pub fn sub(&self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        Ball { mid: &self.mid - &o.mid, rad: &self.rad + &o.rad, prec: self.prec }
    }

    pub fn mul(&self, o: &Ball) -> Ball {
        debug_assert_eq!(self.prec, o.prec);
        let p = self.prec;
        let prod = &self.mid * &o.mid;
        let mid = &prod >> p;
        let err = self.mid.abs() * &o.rad + o.mid.abs() * &self.rad + &self.rad * &o.rad;
        // floor shift loses < 1 ulp; err >> p rounds down, so add 1 more
        let rad = (err >> p) + 2;
        Ball { mid, rad, prec: p }
    }

    /// Division by a small positive integer.
    pub fn div_int(&self, d: u64) -> Ball {
        let d = BigInt::from(d);
        Ball {
            mid: self.mid.div_floor(&d),
            rad: self.rad.div_ceil(&d) + 1,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Ball {
        Ball { mid: -&self.mid, rad: self.rad.clone(), prec: self.prec }
    }

    /// Widens the radius by `ulps` units in the last place.
    pub fn widen(&self, ulps: &BigInt) -> Ball {
        Ball { mid: self.mid.clone(), rad: &self.rad + ulps, prec: self.prec }
    }

    pub fn is_positive(&self) -> bool {
        &self.mid - &self.rad > BigInt::zero()
    }

    pub fn is_negative(&self) -> bool {
        &self.mid + &self.rad < BigInt::zero()
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        // |q * 2^p - mid| <= rad, compared exactly
        let lhs = (q * BigRational::from_integer(BigInt::from(1) << self.prec))
            - BigRational::from_integer(self.mid.clone());
        lhs.abs() <= BigRational::from_integer(self.rad.clone())
    }

    pub fn mid_f64(&self) -> f64 {
        scaled_to_f64(&self.mid, self.prec)
    }

    pub fn rad_f64(&self) -> f64 {
        scaled_to_f64(&self.rad, self.prec)
    }

    /// log2 of the radius, `None` for an exact ball.
    pub fn rad_log2(&self) -> Option<f64> {
        if self.rad.is_zero() {
            return None;
        }
        Some(self.rad.bits() as f64 - self.prec as f64)
    }

    /// `1/sqrt(x)` for a ball of positive reals; `None` if it may contain 0.
    pub fn recip_sqrt(&self) -> Option<Ball> {
        if !self.is_positive() {
            return None;
        }
        // with x = m 2^-p the result scaled by 2^p is sqrt(2^(3p) / m), and
        // the map is decreasing in m
        let top = BigInt::from(1) << (3 * self.prec);
        let lo = (&top / (&self.mid + &self.rad)).sqrt();
        let hi = top.div_ceil(&(&self.mid - &self.rad)).sqrt() + 1;
        Some(Ball {
            mid: (&lo + &hi) >> 1,
            rad: ((hi - lo) >> 1) + 1,
            prec: self.prec,
        })
    }

    /// Drops `by` bits of precision, rounding the radius outward.
    pub fn truncate(&self, by: u32) -> Ball {
        Ball {
            mid: &self.mid >> by,
            rad: (&self.rad >> by) + 1,
            prec: self.prec - by,
        }
    }
}

fn scaled_to_f64(v: &BigInt, prec: u32) -> f64 {
    let bits = v.bits() as i64;
    let shift = (bits - 60).max(0);
    let head = (v >> shift as usize).to_f64().unwrap_or(0.0);
    head * 2f64.powi((shift - prec as i64) as i32)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    pub re: Ball,
    pub im: Ball,
}

impl ComplexBall {
    pub fn add(&self, o: &ComplexBall) -> ComplexBall {
        ComplexBall { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn mul(&self, o: &ComplexBall) -> ComplexBall {
        ComplexBall {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, q: &Ball) -> ComplexBall {
        ComplexBall { re: self.re.mul(q), im: self.im.mul(q) }
    }

    pub fn conj(&self) -> ComplexBall {
        ComplexBall { re: self.re.clone(), im: self.im.neg() }
    }

    /// Whether the two boxes intersect.
    pub fn overlaps(&self, o: &ComplexBall) -> bool {
        !self.re.sub(&o.re).is_positive()
            && !self.re.sub(&o.re).is_negative()
            && !self.im.sub(&o.im).is_positive()
            && !self.im.sub(&o.im).is_negative()
    }

    pub fn summary(&self) -> IntervalSummary {
        IntervalSummary {
            re: self.re.mid_f64(),
            im: self.im.mid_f64(),
            radius: self.re.rad_f64().max(self.im.rad_f64()),
        }
    }
}

/// Plain floating-point view of a certified interval, for reports.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IntervalSummary {
    pub re: f64,
    pub im: f64,
    pub radius: f64,
}

// arctan(1/x) in fixed point; returns (value, error bound in ulps)
fn atan_inv(x: u64, prec: u32) -> (BigInt, u64) {
    let one = BigInt::from(1) << prec;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = one / &x; // 1/x^(2k+1), floor
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    let mut terms = 0;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power = &power / &x2;
        k += 1;
        terms += 1;
    }
    (sum, 2 * terms + 2)
}

/// pi to `prec` bits via Machin's formula.
pub fn pi_ball(prec: u32) -> Ball {
    let (a, ea) = atan_inv(5, prec);
    let (b, eb) = atan_inv(239, prec);
    Ball {
        mid: a * 16 - b * 4,
        rad: BigInt::from(16 * ea + 4 * eb),
        prec,
    }
}

// cos and sin of a ball with |x| <= 4 by Taylor series.
fn cos_sin(x: &Ball) -> (Ball, Ball) {
    let p = x.prec;
    let one = BigInt::from(1) << p;
    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    let mut term = one.clone();
    let mut k: u64 = 0;
    let mut count: u64 = 0;
    loop {
        match k % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        k += 1;
        count += 1;
        term = ((&term * &x.mid) >> p) / k;
        if term.is_zero() && k > 8 {
            break;
        }
    }
    // per-term truncation errors grow at most by prod (|x|/j) <= e^|x| < 55
    let trunc = BigInt::from(2 * 55 * (count + 2));
    // series in x is 1-Lipschitz in x for both cos and sin
    let rad = trunc + &x.rad;
    (
        Ball { mid: cos, rad: rad.clone(), prec: p },
        Ball { mid: sin, rad, prec: p },
    )
}

fn trig_cache() -> &'static Mutex<HashMap<(u64, u32), Arc<Vec<ComplexBall>>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), Arc<Vec<ComplexBall>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Balls around `exp(2 pi i e / n)` for `e = 0..n`.
pub fn roots_of_unity(n: u64, prec: u32) -> Arc<Vec<ComplexBall>> {
    if let Some(v) = trig_cache().lock().expect("cache").get(&(n, prec)) {
        return v.clone();
    }
    let pi = pi_ball(prec + 8).truncate(8);
    let table: Vec<ComplexBall> = (0..n)
        .map(|e| {
            // angle in (-pi, pi]
            let signed = if 2 * e <= n { e as i64 } else { e as i64 - n as i64 };
            let x = pi.mul(&Ball::exact_int(2 * signed, prec)).div_int(n);
            let (c, s) = cos_sin(&x);
            ComplexBall { re: c, im: s }
        })
        .collect();
    let table = Arc::new(table);
    trig_cache()
        .lock()
        .expect("cache")
        .insert((n, prec), table.clone());
    table
}

/// Certified complex interval for the image of `a` under `zeta_N -> exp(2 pi i / N)`.
///
/// The working precision carries guard bits; the returned ball is at `bits`
/// of fractional precision.
pub fn embed(a: &CycloNum, bits: u32) -> ComplexBall {
    assert!(bits >= 32, "embedding precision must be at least 32 bits");
    let n = a.conductor();
    let guard = 24 + (64 - (a.coeffs().len() as u64).leading_zeros());
    let prec = bits + guard;
    let table = roots_of_unity(n, prec);
    let mut acc = ComplexBall {
        re: Ball::exact_int(0, prec),
        im: Ball::exact_int(0, prec),
    };
    for (e, c) in a.terms() {
        let cb = Ball::from_rational(c, prec);
        acc = acc.add(&table[e].scale(&cb));
    }
    ComplexBall { re: acc.re.truncate(guard), im: acc.im.truncate(guard) }
}

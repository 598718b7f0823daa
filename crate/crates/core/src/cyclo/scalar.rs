use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Coefficient field for cyclotomic elements.
///
/// Anything implementing exact field arithmetic through `num_traits::Num` can
/// serve as the coefficient type of [`Cyclo`](super::Cyclo). The two provided
/// instances are arbitrary-precision rationals (the default, see
/// [`CycloNum`](crate::CycloNum)) and `i64` rationals for quick experiments
/// where overflow is not a concern.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// `a * b` in `Q[x]/(x^n - 1)` followed by reduction modulo the monic
    /// integer polynomial `modulus` (low degree first, degree `a.len()`).
    fn mul_reduce(a: &[Self], b: &[Self], n: usize, modulus: &[i64]) -> Vec<Self> {
        let mut buf = vec![Self::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                buf[k] = buf[k].clone() + x.clone() * y.clone();
            }
        }
        reduce_generic(buf, modulus)
    }
}

/// Long division of `buf` by a monic integer polynomial, keeping the remainder.
pub(crate) fn reduce_generic<Q: Scalar>(mut buf: Vec<Q>, modulus: &[i64]) -> Vec<Q> {
    let deg = modulus.len() - 1;
    let nonzero: Vec<(usize, i64)> = modulus[..deg]
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, c)| (i, *c))
        .collect();
    for d in (deg..buf.len()).rev() {
        if buf[d].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut buf[d], Q::zero());
        let shift = d - deg;
        for &(j, m) in &nonzero {
            let slot = &mut buf[shift + j];
            *slot = match m {
                1 => slot.clone() - c.clone(),
                -1 => slot.clone() + c.clone(),
                _ => slot.clone() - c.clone() * Q::from_i64(m),
            };
        }
    }
    buf.truncate(deg);
    buf
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    // Clears denominators so the convolution and the reduction run over the
    // integers; only the final coefficients pay for a gcd.
    fn mul_reduce(a: &[Self], b: &[Self], n: usize, modulus: &[i64]) -> Vec<Self> {
        let (an, ad) = integer_parts(a);
        let (bn, bd) = integer_parts(b);
        if let Some(out) = mul_reduce_small(&an, &ad, &bn, &bd, n, modulus) {
            return out;
        }
        let mut buf = vec![BigInt::zero(); n];
        for (i, x) in an.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in bn.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                buf[(i + j) % n] += x * y;
            }
        }
        let deg = modulus.len() - 1;
        let nonzero: Vec<(usize, i64)> = modulus[..deg]
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (i, *c))
            .collect();
        for d in (deg..n).rev() {
            if buf[d].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut buf[d]);
            let shift = d - deg;
            for &(j, m) in &nonzero {
                match m {
                    1 => buf[shift + j] -= &c,
                    -1 => buf[shift + j] += &c,
                    _ => buf[shift + j] -= &c * m,
                }
            }
        }
        buf.truncate(deg);
        let den = ad * bd;
        buf.into_iter()
            .map(|x| {
                if x.is_zero() {
                    BigRational::zero()
                } else {
                    BigRational::new(x, den.clone())
                }
            })
            .collect()
    }
}

// Same computation in i128, abandoned on the first overflow.
fn mul_reduce_small(
    an: &[BigInt],
    ad: &BigInt,
    bn: &[BigInt],
    bd: &BigInt,
    n: usize,
    modulus: &[i64],
) -> Option<Vec<BigRational>> {
    let small = |v: &[BigInt]| v.iter().map(|x| x.to_i64().map(i128::from)).collect::<Option<Vec<_>>>();
    let (an, bn) = (small(an)?, small(bn)?);
    let den = ad.to_i64().map(i128::from)?.checked_mul(bd.to_i64().map(i128::from)?)?;
    let mut buf = vec![0i128; n];
    for (i, &x) in an.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in bn.iter().enumerate() {
            if y == 0 {
                continue;
            }
            let k = (i + j) % n;
            buf[k] = buf[k].checked_add(x.checked_mul(y)?)?;
        }
    }
    let deg = modulus.len() - 1;
    for d in (deg..n).rev() {
        let c = std::mem::take(&mut buf[d]);
        if c == 0 {
            continue;
        }
        let shift = d - deg;
        for (j, &m) in modulus[..deg].iter().enumerate() {
            if m != 0 {
                buf[shift + j] = buf[shift + j].checked_sub(c.checked_mul(i128::from(m))?)?;
            }
        }
    }
    buf.truncate(deg);
    Some(
        buf.into_iter()
            .map(|x| {
                if x == 0 {
                    return BigRational::zero();
                }
                let g = gcd_i128(x, den);
                BigRational::new_raw(BigInt::from(x / g), BigInt::from(den / g))
            })
            .collect(),
    )
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Numerators over a common denominator.
pub(crate) fn integer_parts(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for x in v {
        if !x.denom().is_one() {
            den = num_integer::Integer::lcm(&den, x.denom());
        }
    }
    let nums = v
        .iter()
        .map(|x| {
            if x.denom().is_one() {
                x.numer() * &den
            } else {
                x.numer() * (&den / x.denom())
            }
        })
        .collect();
    (nums, den.abs())
}

impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }
}

//! Sums of products of cyclotomic numbers with a single normalisation at the
//! end. Entries are lifted to one conductor and their denominators cleared, so
//! the inner loops run over machine integers (falling back to `BigInt`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::field::cyclotomic_polynomial;
use super::scalar::integer_parts;
use super::CycloNum;

/// A list of elements of `Q(zeta_N)` over a common denominator.
#[derive(Clone, Debug)]
pub struct IntegerForm {
    conductor: u64,
    nums: Vec<Vec<BigInt>>,
    small: Option<Vec<Vec<i128>>>,
    den: BigInt,
}

impl IntegerForm {
    /// `conductor` must be a multiple of every entry's conductor.
    pub fn new(items: &[CycloNum], conductor: u64) -> Self {
        let lifted: Vec<CycloNum> = items.iter().map(|x| x.lift(conductor)).collect();
        let flat: Vec<BigRational> = lifted.iter().flat_map(|x| x.coeffs().iter().cloned()).collect();
        let (flat_nums, den) = integer_parts(&flat);
        let phi = lifted.first().map_or(0, |x| x.coeffs().len());
        let nums: Vec<Vec<BigInt>> = flat_nums.chunks(phi.max(1)).map(<[BigInt]>::to_vec).collect();
        let small = nums
            .iter()
            .map(|v| v.iter().map(|x| x.to_i64().map(i128::from)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>();
        IntegerForm {
            conductor,
            nums,
            small,
            den,
        }
    }

    pub fn len(&self) -> usize {
        self.nums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nums.is_empty()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// `sum_a x_a y_a`.
    pub fn dot(&self, other: &IntegerForm) -> CycloNum {
        assert_eq!(self.conductor, other.conductor, "conductor mismatch");
        assert_eq!(self.len(), other.len(), "length mismatch");
        let den = &self.den * &other.den;
        if let (Some(a), Some(b)) = (&self.small, &other.small) {
            if let Some(buf) = dot_small(a, b) {
                return finish(self.conductor, buf.into_iter().map(BigInt::from).collect(), &den);
            }
        }
        let phi = self.nums.first().map_or(1, Vec::len);
        let mut buf = vec![BigInt::zero(); 2 * phi];
        for (x, y) in self.nums.iter().zip(&other.nums) {
            for (i, u) in x.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                for (j, v) in y.iter().enumerate() {
                    if !v.is_zero() {
                        buf[i + j] += u * v;
                    }
                }
            }
        }
        finish(self.conductor, buf, &den)
    }

    /// `sum_a c_a x_a` for integer weights.
    pub fn combination(&self, weights: &[i64]) -> CycloNum {
        assert_eq!(self.len(), weights.len(), "length mismatch");
        let phi = self.nums.first().map_or(1, Vec::len);
        if let Some(a) = &self.small {
            let mut buf = vec![0i128; phi];
            let ok = a.iter().zip(weights).all(|(x, &w)| {
                w == 0
                    || x.iter().enumerate().all(|(i, u)| {
                        u.checked_mul(i128::from(w))
                            .and_then(|t| buf[i].checked_add(t))
                            .map(|t| buf[i] = t)
                            .is_some()
                    })
            });
            if ok {
                return finish(self.conductor, buf.into_iter().map(BigInt::from).collect(), &self.den);
            }
        }
        let mut buf = vec![BigInt::zero(); phi];
        for (x, &w) in self.nums.iter().zip(weights) {
            if w != 0 {
                for (i, u) in x.iter().enumerate() {
                    buf[i] += u * w;
                }
            }
        }
        finish(self.conductor, buf, &self.den)
    }
}

fn dot_small(a: &[Vec<i128>], b: &[Vec<i128>]) -> Option<Vec<i128>> {
    let phi = a.first().map_or(1, Vec::len);
    let mut buf = vec![0i128; 2 * phi];
    for (x, y) in a.iter().zip(b) {
        for (i, &u) in x.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for (j, &v) in y.iter().enumerate() {
                if v != 0 {
                    buf[i + j] = buf[i + j].checked_add(u.checked_mul(v)?)?;
                }
            }
        }
    }
    Some(buf)
}

// Reduce modulo Phi_N over the integers, then divide by `den`.
fn finish(conductor: u64, mut buf: Vec<BigInt>, den: &BigInt) -> CycloNum {
    let modulus = cyclotomic_polynomial(conductor);
    let deg = modulus.len() - 1;
    for d in (deg..buf.len()).rev() {
        if buf[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut buf[d]);
        let shift = d - deg;
        for (j, &m) in modulus[..deg].iter().enumerate() {
            match m {
                0 => {}
                1 => buf[shift + j] -= &c,
                -1 => buf[shift + j] += &c,
                _ => buf[shift + j] -= &c * m,
            }
        }
    }
    buf.resize(deg, BigInt::zero());
    let coeffs = buf
        .into_iter()
        .map(|x| {
            if x.is_zero() {
                BigRational::zero()
            } else {
                BigRational::new(x, den.clone())
            }
        })
        .collect();
    CycloNum::from_reduced(conductor, coeffs)
}

//! `{"N": n, "coeffs": [[exp, "num", "den"], ...]}` with zero terms omitted.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CycloNum;

#[derive(Serialize, Deserialize)]
struct Repr {
    #[serde(rename = "N")]
    n: u64,
    coeffs: Vec<(i64, String, String)>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            n: self.conductor(),
            coeffs: self
                .terms()
                .map(|(e, c)| (e as i64, c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = Repr::deserialize(d)?;
        if r.n == 0 {
            return Err(D::Error::custom("conductor must be positive"));
        }
        let mut terms = Vec::with_capacity(r.coeffs.len());
        for (e, num, den) in r.coeffs {
            let num: BigInt = num.parse().map_err(D::Error::custom)?;
            let den: BigInt = den.parse().map_err(D::Error::custom)?;
            if den == BigInt::from(0) {
                return Err(D::Error::custom("zero denominator"));
            }
            terms.push((e, BigRational::new(num, den)));
        }
        Ok(CycloNum::make(r.n, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let x = &CycloNum::zeta_pow(12, 5).scale(&BigRational::new((-3).into(), 7.into())) + &CycloNum::from_int(2);
        let js = serde_json::to_string(&x).unwrap();
        assert_eq!(js, r#"{"N":12,"coeffs":[[0,"2","1"],[1,"3","7"],[3,"-3","7"]]}"#);
        let back: CycloNum = serde_json::from_str(&js).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&back).unwrap(), js);
        let zero: CycloNum = serde_json::from_str(r#"{"N":5,"coeffs":[]}"#).unwrap();
        assert!(zero.is_zero());
    }
}

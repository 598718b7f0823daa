//! Higher central charges as Witt-class invariants of pseudounitary modular
//! categories.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::cyclo::RootOfUnity;
use crate::invariants::{coprime_residues, gauss_report, InvariantError, Xi};
use crate::moddata::PremodularData;

/// `n -> xi_n(C)` over the residues `1 <= n <= N` coprime to `N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChargeSignature {
    pub name: String,
    pub t_order: u64,
    pub entries: BTreeMap<i64, RootOfUnity>,
}

impl ChargeSignature {
    /// `xi_n` for any `n` coprime to the T-order.
    pub fn xi(&self, n: i64) -> Option<RootOfUnity> {
        if arith::gcd_signed(n, self.t_order) != 1 {
            return None;
        }
        let r = arith::rem(n, self.t_order) as i64;
        let key = if r == 0 { self.t_order as i64 } else { r };
        self.entries.get(&key).copied()
    }

    /// Signature of `C boxtimes D`, by multiplicativity of `xi_n`.
    pub fn product(&self, other: &ChargeSignature) -> ChargeSignature {
        let t_order = arith::lcm(self.t_order, other.t_order);
        let entries = coprime_residues(t_order)
            .into_iter()
            .map(|n| {
                let z = self.xi(n).expect("coprime").mul(&other.xi(n).expect("coprime"));
                (n, z)
            })
            .collect();
        ChargeSignature {
            name: format!("{}⊠{}", self.name, other.name),
            t_order,
            entries,
        }
    }

    /// Signature of the `k`-fold Deligne power.
    pub fn power(&self, k: u64) -> ChargeSignature {
        ChargeSignature {
            name: format!("{}^{}", self.name, k),
            t_order: self.t_order,
            entries: self.entries.iter().map(|(n, z)| (*n, z.pow(k as i64))).collect(),
        }
    }

    /// Signature of `C^rev`.
    pub fn reverse(&self) -> ChargeSignature {
        ChargeSignature {
            name: format!("rev({})", self.name),
            t_order: self.t_order,
            entries: self.entries.iter().map(|(n, z)| (*n, z.inv())).collect(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.values().all(RootOfUnity::is_one)
    }
}

/// `xi_n(C)` for every `n` coprime to `N = ord(T)`.
pub fn signature(data: &PremodularData, bits: u32) -> Result<ChargeSignature, InvariantError> {
    if !data.is_modular().unwrap_or(false) {
        return Err(InvariantError::NotModular);
    }
    let t_order = data.t_order();
    let entries = coprime_residues(t_order)
        .into_par_iter()
        .map(|n| match gauss_report(data, n, bits)?.xi {
            Xi::ExactRoot { root } => Ok((n, root)),
            other => Err(InvariantError::Inconsistent(format!("xi_{n} of modular data is {other:?}"))),
        })
        .collect::<Result<BTreeMap<_, _>, _>>()?;
    Ok(ChargeSignature { name: data.name().to_string(), t_order, entries })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum WittOutcome {
    /// `xi_n` differs, so the two categories are not Witt equivalent.
    Distinguished { n: i64, xi_a: RootOfUnity, xi_b: RootOfUnity },
    /// All compared `xi_n` agree; this does not show Witt equivalence.
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct WittVerdict {
    pub a: String,
    pub b: String,
    pub outcome: WittOutcome,
    pub compared: usize,
    pub note: String,
}

/// Compares `xi_n` over `1 <= n <= lcm(N_a, N_b)` coprime to `N_a N_b`.
pub fn compare_signatures(a: &ChargeSignature, b: &ChargeSignature) -> WittVerdict {
    let ns = coprime_residues(arith::lcm(a.t_order, b.t_order));
    let mut outcome = WittOutcome::Inconclusive;
    let mut compared = 0;
    for n in ns {
        let (xa, xb) = (a.xi(n).expect("coprime"), b.xi(n).expect("coprime"));
        compared += 1;
        if xa != xb {
            outcome = WittOutcome::Distinguished { n, xi_a: xa, xi_b: xb };
            break;
        }
    }
    WittVerdict {
        a: a.name.clone(),
        b: b.name.clone(),
        outcome,
        compared,
        note: "a mismatch proves Witt inequivalence; agreement proves nothing".into(),
    }
}

/// Witt obstruction between two pseudounitary modular categories.
pub fn witt_obstruction(a: &PremodularData, b: &PremodularData, bits: u32) -> Result<WittVerdict, InvariantError> {
    for d in [a, b] {
        if !d.pseudounitary() {
            return Err(InvariantError::Inconsistent(format!(
                "{} is not flagged pseudounitary; the invariance theorem does not apply",
                d.name()
            )));
        }
    }
    Ok(compare_signatures(&signature(a, bits)?, &signature(b, bits)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct PowerLaw {
    pub name: String,
    pub t_order: u64,
    pub reps: u64,
    pub pass: bool,
    /// `k` with `xi_k(C)^{4N} != 1`.
    pub failures: Vec<i64>,
    /// Whether `tau_k` of the literal Deligne power was also evaluated.
    pub literal_checked: bool,
}

/// Largest number of simple objects enumerated for the literal power check.
pub const LITERAL_LIMIT: u128 = 100_000;

/// `xi_k(C^{boxtimes 4N}) = 1` for all `k` coprime to `N`.
pub fn power_law_check(data: &PremodularData, bits: u32) -> Result<PowerLaw, InvariantError> {
    let sig = signature(data, bits)?;
    let reps = 4 * sig.t_order;
    let powered = sig.power(reps);
    let failures: Vec<i64> = powered.entries.iter().filter(|(_, z)| !z.is_one()).map(|(n, _)| *n).collect();
    let size = (data.rank() as u128).checked_pow(reps as u32);
    let literal_checked = size.is_some_and(|s| s <= LITERAL_LIMIT);
    let mut pass = failures.is_empty();
    if literal_checked {
        let literal = data.without_s_matrix().deligne_power(reps as usize);
        for &k in sig.entries.keys() {
            let t = crate::invariants::tau(&literal, k);
            // xi = 1 iff tau_k is real and positive
            pass &= t.is_real() && t.real_sign(bits)?.is_gt();
        }
    }
    Ok(PowerLaw { name: data.name().to_string(), t_order: sig.t_order, reps, pass, failures, literal_checked })
}

/// `(xi_{n1}, xi_{n2})` on `C^a boxtimes D^b` for `a < a_max`, `b < b_max`.
pub fn pair_map(
    c: &ChargeSignature,
    d: &ChargeSignature,
    ns: [i64; 2],
    a_max: u64,
    b_max: u64,
) -> BTreeMap<(u64, u64), (RootOfUnity, RootOfUnity)> {
    let mut out = BTreeMap::new();
    for a in 0..a_max {
        for b in 0..b_max {
            let sig = c.power(a).product(&d.power(b));
            out.insert((a, b), (sig.xi(ns[0]).expect("coprime"), sig.xi(ns[1]).expect("coprime")));
        }
    }
    out
}

pub fn distinct_values(map: &BTreeMap<(u64, u64), (RootOfUnity, RootOfUnity)>) -> usize {
    map.values().map(|(x, y)| ((x.order(), x.exponent()), (y.order(), y.exponent()))).collect::<BTreeSet<_>>().len()
}

//! Higher Gauss sums `tau_n`, anomalies `alpha_n`, higher central charges
//! `xi_n`, indicators `nu_n`, lens space invariants, and exact checks of the
//! arithmetic identities relating them.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::constructors::{condense_pointed, pointed, ConstructorError, MetricGroup};
use crate::cyclo::{CycloError, CycloNum, GaloisAut, IntPolynomial, IntervalSummary, Phase, RootOfUnity};
use crate::moddata::{FusionTensor, ModDataError, PremodularData, DEFAULT_BITS};

#[derive(Debug, thiserror::Error)]
pub enum InvariantError {
    #[error("operation needs modular data")]
    NotModular,
    #[error("{n} is not coprime to the T-order {t_order}")]
    NotCoprime { n: i64, t_order: u64 },
    #[error("xi_1 is not a root of unity, so sqrt(dim C) has no exact form here")]
    CentralChargeNotRoot,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    ModData(#[from] ModDataError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error(transparent)]
    Constructor(#[from] ConstructorError),
}

/// Settings shared by the verification routines.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Starting precision for numeric sign decisions.
    pub bits: u32,
    /// Evaluate non-coprime `n` too, reporting instead of rejecting.
    pub allow_noncoprime: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { bits: DEFAULT_BITS, allow_noncoprime: false }
    }
}

/// `tau_n(C) = sum_X theta_X^n dim(X)^2`.
pub fn tau(data: &PremodularData, n: i64) -> CycloNum {
    data.gauss_sum(n)
}

/// The higher central charge `xi_n = tau_n / |tau_n|`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum Xi {
    ExactRoot { root: RootOfUnity },
    NonRootExact { alpha_minpoly: IntPolynomial, interval: IntervalSummary },
    Undefined,
}

impl Xi {
    pub fn root(&self) -> Option<RootOfUnity> {
        match self {
            Xi::ExactRoot { root } => Some(*root),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GaussReport {
    pub n: i64,
    pub tau: CycloNum,
    pub tau_conj: CycloNum,
    pub abs_sq: CycloNum,
    pub alpha: Option<CycloNum>,
    pub xi: Xi,
    /// Enclosure of `tau / |tau|` when `tau != 0`.
    pub xi_interval: Option<IntervalSummary>,
}

pub fn gauss_report(data: &PremodularData, n: i64, bits: u32) -> Result<GaussReport, InvariantError> {
    report_from_tau(n, tau(data, n), bits)
}

/// Report for a known `tau_n`; `tau_{-n}` is taken to be its conjugate.
pub fn report_from_tau(n: i64, t: CycloNum, bits: u32) -> Result<GaussReport, InvariantError> {
    let tau_conj = t.conj();
    let abs_sq = &t * &tau_conj;
    if t.is_zero() {
        return Ok(GaussReport { n, tau: t, tau_conj, abs_sq, alpha: None, xi: Xi::Undefined, xi_interval: None });
    }
    let alpha = t.checked_div(&tau_conj)?;
    let ball = t.unit_ball(bits)?;
    let xi = match t.phase(bits)? {
        Phase::Root(z) => {
            let check = z.to_cyclo().embed(bits);
            if !ball.overlaps(&check) {
                return Err(InvariantError::Inconsistent(format!("xi_{n} = {z} outside its enclosure")));
            }
            Xi::ExactRoot { root: z }
        }
        Phase::NotRoot { ratio_minpoly } => Xi::NonRootExact { alpha_minpoly: ratio_minpoly, interval: ball.summary() },
    };
    Ok(GaussReport { n, tau: t, tau_conj, abs_sq, alpha: Some(alpha), xi, xi_interval: Some(ball.summary()) })
}

/// `nu_n(C) = tau_n tau_{-n} / dim(C)`, checked to be a totally nonnegative
/// algebraic integer.
pub fn nu_aggregate(data: &PremodularData, n: i64, bits: u32) -> Result<CycloNum, InvariantError> {
    require_modular(data)?;
    let nu = (&tau(data, n) * &tau(data, -n)).checked_div(&data.global_dim())?;
    if !nu.is_algebraic_integer() || !nu.is_totally_nonnegative(bits)? {
        return Err(InvariantError::Inconsistent(format!("nu_{n} = {nu} is not a totally nonnegative algebraic integer")));
    }
    Ok(nu)
}

/// Bantay's formula `nu_n(X) = dim(C)^-1 sum_{i,j} N_ij^X d_i d_j (theta_i / theta_j)^n`.
pub fn nu_bantay(data: &PremodularData, fusion: &FusionTensor, x: usize, n: i64) -> Result<CycloNum, InvariantError> {
    require_modular(data)?;
    let r = data.rank();
    let d = data.dims();
    let t = data.twists();
    let mut acc = CycloNum::zero();
    for i in 0..r {
        for j in 0..r {
            let m = fusion.get(i, j, x);
            if m == 0 {
                continue;
            }
            let phase = t[i].mul(&t[j].inv()).pow(n).to_cyclo();
            let term = &(&d[i] * &d[j]) * &phase;
            acc = &acc + &term.scale(&num_rational::BigRational::from_integer(m.into()));
        }
    }
    Ok(acc.checked_div(&data.global_dim())?)
}

/// `sum_X dim(X) nu_n(X)` from Bantay's formula.
pub fn nu_bantay_total(data: &PremodularData, fusion: &FusionTensor, n: i64) -> Result<CycloNum, InvariantError> {
    (0..data.rank())
        .map(|x| Ok(&data.dims()[x] * &nu_bantay(data, fusion, x, n)?))
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct LensRt {
    pub n: i64,
    /// `D = tau_1 / xi_1`, the positive square root of `dim(C)`.
    pub d: CycloNum,
    /// `RT(L(n,1)) = D^-3 tau_{-1} tau_n`.
    pub value: CycloNum,
    /// `RT(-L(n,1)) = D^-1 tau_{-1}^-1 tau_{-n}`.
    pub reversed: CycloNum,
}

pub fn lens_rt(data: &PremodularData, n: i64, bits: u32) -> Result<LensRt, InvariantError> {
    require_modular(data)?;
    let t1 = tau(data, 1);
    let d = match t1.phase(bits)? {
        Phase::Root(z) => &t1 * &z.inv().to_cyclo(),
        Phase::NotRoot { .. } => return Err(InvariantError::CentralChargeNotRoot),
    };
    let tm1 = tau(data, -1);
    let d_inv = d.inv()?;
    let value = &(&(&d_inv * &d_inv) * &d_inv) * &(&tm1 * &tau(data, n));
    let reversed = &(&d_inv * &tm1.inv()?) * &tau(data, -n);
    if reversed != value.conj() {
        return Err(InvariantError::Inconsistent(format!("RT(-L({n},1)) is not the conjugate of RT(L({n},1))")));
    }
    Ok(LensRt { n, d, value, reversed })
}

fn require_modular(data: &PremodularData) -> Result<(), InvariantError> {
    match data.is_modular() {
        Ok(true) => Ok(()),
        Ok(false) | Err(ModDataError::MissingSMatrix) => Err(InvariantError::NotModular),
        Err(e) => Err(e.into()),
    }
}

/// `1 <= n <= N` with `gcd(n, N) = 1`.
pub fn coprime_residues(t_order: u64) -> Vec<i64> {
    (1..=t_order as i64).filter(|&n| arith::gcd_signed(n, t_order) == 1).collect()
}

/// One evaluated instance of an identity.
#[derive(Clone, Debug, Serialize)]
pub struct Case {
    pub n: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    pub pass: bool,
    pub lhs: Option<CycloNum>,
    pub rhs: Option<CycloNum>,
    pub notes: Vec<String>,
}

impl Case {
    fn new(n: i64, a: Option<i64>) -> Self {
        Case { n, a, pass: true, lhs: None, rhs: None, notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.pass = false;
            self.notes.push(what());
        }
    }

    fn sides(&mut self, lhs: CycloNum, rhs: CycloNum, what: &str) {
        let ok = lhs == rhs;
        self.require(ok, || format!("{what}: sides differ"));
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
    }
}

/// Outcome of a theorem check, with both exact sides of every case.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub check: String,
    pub category: String,
    pub pass: bool,
    pub cases: Vec<Case>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(check: &str, category: &str, cases: Vec<Case>) -> Self {
        Verdict {
            check: check.into(),
            category: category.into(),
            pass: cases.iter().all(|c| c.pass),
            cases,
            notes: Vec::new(),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

// sigma with sigma(zeta_N) = zeta_N^(n^-1)
fn sigma_for(n: i64, t_order: u64) -> Result<GaloisAut, InvariantError> {
    let inv = arith::mod_inverse(n, t_order).ok_or(InvariantError::NotCoprime { n, t_order })?;
    Ok(GaloisAut::new(t_order, inv as i64)?)
}

fn check_coprime(n: i64, t_order: u64) -> Result<(), InvariantError> {
    if arith::gcd_signed(n, t_order) == 1 {
        Ok(())
    } else {
        Err(InvariantError::NotCoprime { n, t_order })
    }
}

/// `tau_{an} = sigma(tau_a) dim(C) / sigma(dim(C)) theta_{sigma^(1)}^{an}` and
/// `tau_n != 0`, for `sigma(zeta_N) = zeta_N^{n^-1}`.
pub fn galois_theorem_case(data: &PremodularData, a: i64, n: i64) -> Result<Case, InvariantError> {
    require_modular(data)?;
    let t_order = data.t_order();
    let sigma = sigma_for(n, t_order)?;
    let sym = data.galois_symmetry(&sigma)?;
    let sigma = &sym.sigma;
    let theta = data.twists()[sym.perm[0]];
    let dim = data.global_dim();
    let lhs = tau(data, a * n);
    let rhs = &(&sigma.apply(&tau(data, a)) * &dim.checked_div(&sigma.apply(&dim))?) * &theta.pow(a * n).to_cyclo();
    let mut case = Case::new(n, Some(a));
    case.sides(lhs, rhs, "tau_an = sigma(tau_a) dim/sigma(dim) theta^an");
    case.require(!tau(data, n).is_zero(), || format!("tau_{n} = 0"));
    Ok(case)
}

pub fn verify_galois_theorem(data: &PremodularData, a_values: &[i64], opts: &Options) -> Result<Verdict, InvariantError> {
    require_modular(data)?;
    let ns = coprime_residues(data.t_order());
    let jobs: Vec<(i64, i64)> = a_values.iter().flat_map(|&a| ns.iter().map(move |&n| (a, n))).collect();
    let cases = jobs
        .into_par_iter()
        .map(|(a, n)| galois_theorem_case(data, a, n))
        .collect::<Result<Vec<_>, _>>()?;
    let mut v = Verdict::new("galois", data.name(), cases);
    if opts.allow_noncoprime {
        v.notes.push("the Galois identity needs gcd(n, N) = 1; non-coprime n were not evaluated".into());
    }
    Ok(v)
}

/// `alpha_n = sigma(alpha_1) theta_{sigma^(1)}^{2n}`, `xi_n^{4N} = 1` and
/// `tau_n` a d-number. With `opts.allow_noncoprime` a non-coprime `n` is
/// reported (anomaly integrality, xi classification) instead of rejected.
pub fn anomaly_case(data: &PremodularData, n: i64, opts: &Options) -> Result<Case, InvariantError> {
    require_modular(data)?;
    let t_order = data.t_order();
    let report = gauss_report(data, n, opts.bits)?;
    let mut case = Case::new(n, None);
    if check_coprime(n, t_order).is_err() {
        if !opts.allow_noncoprime {
            return Err(InvariantError::NotCoprime { n, t_order });
        }
        case.notes.push(format!("gcd({n}, {t_order}) != 1: theorem not applicable, values reported only"));
        match (&report.alpha, &report.xi) {
            (Some(alpha), Xi::NonRootExact { alpha_minpoly, .. }) => {
                case.notes.push(format!(
                    "alpha_{n} has minimal polynomial {alpha_minpoly}; algebraic integer: {}",
                    alpha.is_algebraic_integer()
                ));
            }
            (_, Xi::ExactRoot { root }) => case.notes.push(format!("xi_{n} = {root}")),
            _ => case.notes.push(format!("tau_{n} = 0")),
        }
        case.lhs = report.alpha.clone();
        return Ok(case);
    }
    let sigma = sigma_for(n, t_order)?;
    let sym = data.galois_symmetry(&sigma)?;
    let theta = data.twists()[sym.perm[0]];
    let alpha1 = gauss_report(data, 1, opts.bits)?
        .alpha
        .ok_or_else(|| InvariantError::Inconsistent("tau_1 = 0 for modular data".into()))?;
    let rhs = &sym.sigma.apply(&alpha1) * &theta.pow(2 * n).to_cyclo();
    match &report.alpha {
        Some(alpha) => case.sides(alpha.clone(), rhs, "alpha_n = sigma(alpha_1) theta^2n"),
        None => case.require(false, || format!("tau_{n} = 0")),
    }
    match report.xi.root() {
        Some(z) => case.require(z.pow(4 * t_order as i64).is_one(), || format!("xi_{n}^(4N) != 1")),
        None => case.require(false, || format!("xi_{n} is not a root of unity")),
    }
    case.require(report.tau.is_d_number(), || format!("tau_{n} is not a d-number"));
    Ok(case)
}

pub fn verify_anomaly_galois(data: &PremodularData, opts: &Options) -> Result<Verdict, InvariantError> {
    require_modular(data)?;
    let ns: Vec<i64> = if opts.allow_noncoprime {
        (1..=data.t_order() as i64).collect()
    } else {
        coprime_residues(data.t_order())
    };
    let cases = ns
        .into_par_iter()
        .map(|n| anomaly_case(data, n, opts))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Verdict::new("anomaly", data.name(), cases))
}

/// For `Z = C boxtimes C^rev` and `n` coprime to its T-order: `xi_n(Z) = 1`,
/// `tau_n(Z) = dim(C)^2 / sigma(dim C)` and `theta_{sigma^(1_Z)} = 1`.
pub fn verify_center(data: &PremodularData, opts: &Options) -> Result<Verdict, InvariantError> {
    require_modular(data)?;
    let z = data.deligne_product(&data.reverse());
    let t_order = z.t_order();
    let dim = data.global_dim();
    let cases = coprime_residues(t_order)
        .into_par_iter()
        .map(|n| {
            let sigma = sigma_for(n, t_order)?;
            let sym = z.galois_symmetry(&sigma)?;
            let report = gauss_report(&z, n, opts.bits)?;
            let mut case = Case::new(n, None);
            let rhs = (&dim * &dim).checked_div(&sym.sigma.apply(&dim))?;
            case.sides(report.tau.clone(), rhs, "tau_n(Z) = dim^2/sigma(dim)");
            case.require(report.xi.root().is_some_and(|r| r.is_one()), || format!("xi_{n}(Z) = {:?}", report.xi));
            case.require(z.twists()[sym.perm[0]].is_one(), || "theta_{sigma^(1)} != 1".into());
            Ok(case)
        })
        .collect::<Result<Vec<_>, InvariantError>>()?;
    Ok(Verdict::new("center", data.name(), cases))
}

/// `|H| tau_n(C^0) = tau_n(C)`, `xi_n(C^0) = xi_n(C)` and the scaling
/// `tau_n(C^0) = sigma(|H|) / |H|^2 tau_n(C)` for `n` coprime to the T-order of `C`.
pub fn verify_condensation(mg: &MetricGroup, h_gens: &[Vec<i64>], opts: &Options) -> Result<Verdict, InvariantError> {
    let c = pointed(mg);
    let quotient = condense_pointed(mg, h_gens)?;
    let c0 = pointed(&quotient);
    let h_order = mg.subgroup(&mg_normalized(mg, h_gens)).len() as i64;
    let h_dim = CycloNum::from_int(h_order);
    let t_order = c.t_order();
    let cases = coprime_residues(t_order)
        .into_par_iter()
        .map(|n| {
            let mut case = Case::new(n, None);
            let (t, t0) = (tau(&c, n), tau(&c0, n));
            case.sides(&t0 * &h_dim, t.clone(), "|H| tau_n(C0) = tau_n(C)");
            let scale = CycloNum::from_ratio(1, h_order);
            // sigma fixes the rational dim(A) = |H|
            case.require(&scale * &t == t0, || "tau_n(C0) != sigma(|H|)/|H|^2 tau_n(C)".into());
            let xi = gauss_report(&c, n, opts.bits)?.xi;
            let xi0 = gauss_report(&c0, n, opts.bits)?.xi;
            case.require(xi == xi0, || format!("xi_{n}: {xi:?} vs {xi0:?}"));
            Ok(case)
        })
        .collect::<Result<Vec<_>, InvariantError>>()?;
    let mut v = Verdict::new("condense", c.name(), cases);
    v.notes.push(format!("|G| = {}, |H| = {h_order}, |H^perp/H| = {}", mg.order(), quotient.order()));
    Ok(v)
}

fn mg_normalized(mg: &MetricGroup, h: &[Vec<i64>]) -> Vec<Vec<i64>> {
    h.iter().map(|x| mg.normalize(x)).collect()
}

/// `tau_1 tau_{-2}` is real, and `alpha_1 = alpha_2` when it is nonzero.
/// Holds for all premodular data.
pub fn verify_first_second(data: &PremodularData) -> Result<Verdict, InvariantError> {
    let (t1, t2) = (tau(data, 1), tau(data, 2));
    let prod = &t1 * &tau(data, -2);
    let mut case = Case::new(1, None);
    case.sides(prod.conj(), prod.clone(), "tau_1 tau_-2 real");
    if !prod.is_zero() {
        let a1 = t1.checked_div(&t1.conj())?;
        let a2 = t2.checked_div(&t2.conj())?;
        case.require(a1 == a2, || "alpha_1 != alpha_2".into());
        case.notes.push(format!("alpha_1 = alpha_2 = {a1}"));
    } else {
        case.notes.push("tau_1 tau_-2 = 0; alpha comparison vacuous".into());
    }
    Ok(Verdict::new("first-second", data.name(), vec![case]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{abelian_double, kac_peterson, LieDatum, LieType};

    fn cyclic(n: u64, q: RootOfUnity) -> PremodularData {
        pointed(&MetricGroup::cyclic(n, q).unwrap())
    }

    #[test]
    fn tau_examples() {
        let svec = cyclic(2, RootOfUnity::new(2, 1));
        assert!(tau(&svec, 1).is_zero());
        let z3 = cyclic(3, RootOfUnity::new(3, 1));
        assert_eq!(tau(&z3, 1), &CycloNum::one() + &(&CycloNum::zeta_pow(3, 1) * &CycloNum::from_int(2)));
        let rep = pointed(&MetricGroup::cyclic(4, RootOfUnity::ONE).unwrap());
        for n in -3..4 {
            assert_eq!(tau(&rep, n), CycloNum::from_int(4));
        }
        assert_eq!(tau(&z3, 0), z3.global_dim());
    }

    #[test]
    fn report_examples() {
        let c = cyclic(4, RootOfUnity::new(8, 1));
        let r = gauss_report(&c, 1, 128).unwrap();
        assert_eq!(r.xi, Xi::ExactRoot { root: RootOfUnity::new(8, 1) });
        let z2i = cyclic(2, RootOfUnity::new(4, 1));
        assert_eq!(gauss_report(&z2i, 2, 128).unwrap().xi, Xi::Undefined);
        let g2 = kac_peterson(&LieDatum::new(LieType::G2, 3).unwrap()).unwrap();
        match gauss_report(&g2, 3, 128).unwrap().xi {
            Xi::NonRootExact { alpha_minpoly, .. } => {
                assert_eq!(alpha_minpoly, IntPolynomial::from_i64(&[2, -3, 2]));
                assert_eq!(alpha_minpoly.compose_power(2), IntPolynomial::from_i64(&[2, 0, -3, 0, 2]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn nu_examples() {
        let z5 = cyclic(5, RootOfUnity::new(5, 1));
        assert!(nu_aggregate(&z5, 1, 128).unwrap().is_one());
        assert_eq!(nu_aggregate(&z5, 0, 128).unwrap(), CycloNum::from_int(5));
        let d2 = pointed(&abelian_double(&[2]).unwrap());
        assert_eq!(nu_aggregate(&d2, 2, 128).unwrap(), CycloNum::from_int(4));
        let sl2 = kac_peterson(&LieDatum::new(LieType::A1, 2).unwrap()).unwrap();
        let f = sl2.verlinde_fusion().unwrap();
        assert!(nu_bantay(&sl2, &f, 0, 1).unwrap().is_one());
        assert_eq!(nu_bantay_total(&sl2, &f, 2).unwrap(), nu_aggregate(&sl2, 2, 128).unwrap());
        let svec = cyclic(2, RootOfUnity::new(2, 1));
        assert!(matches!(nu_aggregate(&svec, 1, 128), Err(InvariantError::NotModular)));
    }

    #[test]
    fn lens_examples() {
        let z3 = cyclic(3, RootOfUnity::new(3, 1));
        let l = lens_rt(&z3, 1, 128).unwrap();
        assert_eq!(&l.d * &l.d, CycloNum::from_int(3));
        let l0 = lens_rt(&z3, 0, 128).unwrap();
        assert_eq!(l0.value, &l0.d.inv().unwrap() * &tau(&z3, -1));
        for n in 1..6 {
            let l = lens_rt(&z3, n, 128).unwrap();
            let a_n = tau(&z3, n).checked_div(&tau(&z3, -n)).unwrap();
            let a_1 = tau(&z3, 1).checked_div(&tau(&z3, -1)).unwrap();
            assert_eq!(l.value.checked_div(&l.reversed).unwrap(), a_n.checked_div(&a_1).unwrap());
        }
    }

    #[test]
    fn galois_examples() {
        let z5 = cyclic(5, RootOfUnity::new(5, 1));
        let case = galois_theorem_case(&z5, 1, 2).unwrap();
        assert!(case.pass);
        let sl2 = kac_peterson(&LieDatum::new(LieType::A1, 3).unwrap()).unwrap();
        let v = verify_galois_theorem(&sl2, &[1, 2, 3], &Options::default()).unwrap();
        assert!(v.pass, "{:?}", v.failures().collect::<Vec<_>>());
        let d3 = pointed(&abelian_double(&[3]).unwrap());
        assert!(galois_theorem_case(&d3, 1, 2).unwrap().pass);
        assert!(gauss_report(&d3, 2, 128).unwrap().xi.root().unwrap().is_one());
    }

    #[test]
    fn anomaly_examples() {
        let z7 = cyclic(7, RootOfUnity::new(7, 1));
        assert!(anomaly_case(&z7, 3, &Options::default()).unwrap().pass);
        let g2 = kac_peterson(&LieDatum::new(LieType::G2, 3).unwrap()).unwrap();
        assert!(matches!(anomaly_case(&g2, 3, &Options::default()), Err(InvariantError::NotCoprime { .. })));
        let opts = Options { allow_noncoprime: true, ..Options::default() };
        let case = anomaly_case(&g2, 3, &opts).unwrap();
        assert!(!case.lhs.unwrap().is_algebraic_integer());
    }

    #[test]
    fn center_examples() {
        let v = verify_center(&cyclic(5, RootOfUnity::new(5, 1)), &Options::default()).unwrap();
        assert!(v.pass);
        assert!(v.cases.iter().all(|c| c.lhs == Some(CycloNum::from_int(5))));
        let sl2 = kac_peterson(&LieDatum::new(LieType::A1, 1).unwrap()).unwrap();
        let v = verify_center(&sl2, &Options::default()).unwrap();
        assert!(v.pass);
        assert!(v.cases.iter().all(|c| c.lhs == Some(CycloNum::from_int(2))));
    }

    #[test]
    fn condensation_examples() {
        let hyp2 = MetricGroup::new(vec![2, 2], vec![RootOfUnity::ONE; 2], vec![(0, 1, RootOfUnity::new(2, 1))]).unwrap();
        let v = verify_condensation(&hyp2, &[vec![1, 0]], &Options::default()).unwrap();
        assert!(v.pass);
        assert!(v.cases.iter().all(|c| c.rhs == Some(CycloNum::from_int(2))));
        let hyp4 = MetricGroup::new(vec![4, 4], vec![RootOfUnity::ONE; 2], vec![(0, 1, RootOfUnity::new(4, 1))]).unwrap();
        assert!(verify_condensation(&hyp4, &[vec![2, 0]], &Options::default()).unwrap().pass);
        assert!(verify_condensation(&hyp4, &[], &Options::default()).unwrap().pass);
    }

    #[test]
    fn first_second_examples() {
        for c in [
            cyclic(2, RootOfUnity::new(2, 1)),
            cyclic(5, RootOfUnity::new(5, 1)),
            cyclic(2, RootOfUnity::new(4, 1)),
        ] {
            assert!(verify_first_second(&c).unwrap().pass);
        }
    }
}

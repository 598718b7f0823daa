//! Scripted comparisons of computed values against worked examples.

use serde::Serialize;

use crate::constructors::{self, double_gauss_sum, kac_peterson, legendre, pointed, LieDatum, LieType, MetricGroup};
use crate::cyclo::{CycloNum, IntPolynomial, RootOfUnity};
use crate::fixtures;
use crate::invariants::{self, coprime_residues, gauss_report, lens_rt, report_from_tau, InvariantError, Xi};
use crate::witt::{compare_signatures, distinct_values, pair_map, signature, WittOutcome};

pub const EXAMPLES: [&str; 7] = ["ty-table", "so5-xi-table", "g2-witt", "wpt2-generators", "h27", "zp-gauss", "lens"];

#[derive(Debug, thiserror::Error)]
pub enum ReproduceError {
    #[error("unknown example {0:?}; known: {known}", known = EXAMPLES.join(", "))]
    UnknownExample(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Constructor(#[from] constructors::ConstructorError),
}

#[derive(Clone, Debug, Serialize)]
pub struct Line {
    pub item: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub id: String,
    pub pass: bool,
    pub lines: Vec<Line>,
}

impl Report {
    fn new(id: &str) -> Self {
        Report { id: id.into(), pass: true, lines: Vec::new() }
    }

    fn push(&mut self, item: impl Into<String>, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.add(item, expected.clone(), computed.clone(), expected == computed);
    }

    fn add(&mut self, item: impl Into<String>, expected: String, computed: String, pass: bool) {
        self.pass &= pass;
        self.lines.push(Line { item: item.into(), expected, computed, pass });
    }
}

pub fn reproduce(id: &str, bits: u32) -> Result<Report, ReproduceError> {
    match id {
        "ty-table" => Ok(ty_table()),
        "so5-xi-table" => so5_xi_table(bits),
        "g2-witt" => g2_witt(bits),
        "wpt2-generators" => wpt2_generators(bits),
        "h27" => h27(bits),
        "zp-gauss" => zp_gauss(),
        "lens" => lens(bits),
        other => Err(ReproduceError::UnknownExample(other.into())),
    }
}

fn list<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn ty_table() -> Report {
    let mut r = Report::new("ty-table");
    for row in fixtures::TY_TABLE {
        let expected = list(row.taus);
        if row.reference_only {
            r.add(format!("{} (reference only)", row.group), expected, "not recomputed".into(), true);
            continue;
        }
        let g = fixtures::group(row.group).expect("bundled").expect("valid group");
        r.push(row.group, expected, list((1..=8).map(|n| double_gauss_sum(&g, n))));
    }
    r
}

fn so5_xi_table(bits: u32) -> Result<Report, ReproduceError> {
    let mut r = Report::new("so5-xi-table");
    let c = kac_peterson(&LieDatum::new(LieType::B2, 4)?)?;
    r.push("rank", 15, c.rank());
    r.push("t_order", 28, c.t_order());
    let table: [(i64, &[i64]); 4] =
        [(4, &[5, 13, 19, 27]), (6, &[3, 17]), (8, &[11, 25]), (10, &[1, 9, 15, 23])];
    for m in coprime_residues(28) {
        let (e, _) = table.iter().find(|(_, ms)| ms.contains(&m)).expect("table covers all m");
        let xi = gauss_report(&c, m, bits)?.xi;
        r.push(format!("xi_{m}"), RootOfUnity::new(14, *e), show_xi(&xi));
    }
    Ok(r)
}

fn show_xi(xi: &Xi) -> String {
    match xi {
        Xi::ExactRoot { root } => root.to_string(),
        Xi::NonRootExact { alpha_minpoly, .. } => format!("not a root of unity (alpha: {alpha_minpoly})"),
        Xi::Undefined => "undefined".into(),
    }
}

fn g2_witt(bits: u32) -> Result<Report, ReproduceError> {
    let mut r = Report::new("g2-witt");
    let c = kac_peterson(&LieDatum::new(LieType::G2, 8)?)?;
    let d = kac_peterson(&LieDatum::new(LieType::G2, 11)?)?;
    r.push("t_order C(G2,8)", 36, c.t_order());
    r.push("t_order C(G2,11)", 45, d.t_order());
    let sc = signature(&c, bits)?.power(5);
    let sd = signature(&d, bits)?.power(10);
    let minus_pi_3 = RootOfUnity::new(6, -1);
    r.push("xi_1 C(G2,8)^5", minus_pi_3, opt(sc.xi(1)));
    r.push("xi_1 C(G2,11)^10", minus_pi_3, opt(sd.xi(1)));
    let verdict = compare_signatures(&sc, &sd);
    let computed = match verdict.outcome {
        WittOutcome::Distinguished { n, xi_a, xi_b } => format!("n={n}: {xi_a} vs {xi_b}"),
        WittOutcome::Inconclusive => "inconclusive".into(),
    };
    r.push("first distinguishing n", "n=13: 1 vs -1", computed);
    Ok(r)
}

fn opt(z: Option<RootOfUnity>) -> String {
    z.map_or("missing".into(), |z| z.to_string())
}

fn wpt2_generators(bits: u32) -> Result<Report, ReproduceError> {
    let mut r = Report::new("wpt2-generators");
    let c = pointed(&MetricGroup::cyclic(4, RootOfUnity::new(8, 1))?);
    let d = c.deligne_product(&pointed(&MetricGroup::cyclic(2, RootOfUnity::new(4, -1))?));
    let (sc, sd) = (signature(&c, bits)?, signature(&d, bits)?);
    r.push("(xi_1, xi_3) of C", "(z8, z8^3)", format!("({}, {})", opt(sc.xi(1)), opt(sc.xi(3))));
    r.push("(xi_1, xi_3) of D", "(1, -1)", format!("({}, {})", opt(sd.xi(1)), opt(sd.xi(3))));
    r.push("distinct values on C^a D^b", 16, distinct_values(&pair_map(&sc, &sd, [1, 3], 8, 2)));
    Ok(r)
}

fn h27(bits: u32) -> Result<Report, ReproduceError> {
    let mut r = Report::new("h27");
    let rep = report_from_tau(3, fixtures::h27_tau3(), bits)?;
    let poly = match &rep.xi {
        Xi::NonRootExact { alpha_minpoly, .. } => alpha_minpoly.to_string(),
        other => show_xi(other),
    };
    r.push("minimal polynomial of alpha_3", IntPolynomial::from_i64(&[7, 2, 7]), poly);
    let integral = rep.alpha.as_ref().map(CycloNum::is_algebraic_integer);
    r.push("alpha_3 algebraic integer", "false", integral.map_or("undefined".into(), |b| b.to_string()));
    Ok(r)
}

// tau_n(C(Z_p, q_a)) against (an/p) times the classical quadratic Gauss sum.
fn zp_gauss() -> Result<Report, ReproduceError> {
    let mut r = Report::new("zp-gauss");
    for p in [3u64, 5, 7, 11, 13] {
        let g: CycloNum = (0..p as i64).map(|j| CycloNum::zeta_pow(p, j * j)).sum();
        let mut checked = 0;
        let mut bad = Vec::new();
        for a in 1..p as i64 {
            let c = pointed(&MetricGroup::cyclic(p, RootOfUnity::new(p, a))?);
            for n in -(p as i64)..=2 * p as i64 {
                if n % p as i64 == 0 {
                    continue;
                }
                let expected = &g * &CycloNum::from_int(legendre(a * n, p).into());
                checked += 1;
                if invariants::tau(&c, n) != expected {
                    bad.push(format!("a={a},n={n}"));
                }
            }
        }
        let computed = if bad.is_empty() { format!("{checked} cases equal") } else { format!("mismatch at {}", bad.join(" ")) };
        r.add(format!("p={p}"), "tau_n = (an/p) g_p exactly".into(), computed, bad.is_empty());
    }
    Ok(r)
}

fn lens(bits: u32) -> Result<Report, ReproduceError> {
    let mut r = Report::new("lens");
    let cases = [
        pointed(&MetricGroup::cyclic(3, RootOfUnity::new(3, 1))?),
        kac_peterson(&LieDatum::new(LieType::A1, 2)?)?,
    ];
    for c in &cases {
        let t = c.t_order() as i64;
        let d = lens_rt(c, 0, bits)?.d;
        r.push(format!("{}: D^2", c.name()), c.global_dim(), &d * &d);
        let l0 = lens_rt(c, 0, bits)?;
        let tm1 = invariants::tau(c, -1);
        r.push(format!("{}: RT(L(0,1))", c.name()), &d.inv().map_err(InvariantError::from)? * &tm1, &l0.value);
        let a1 = gauss_report(c, 1, bits)?.alpha;
        for n in 1..=2 * t {
            let l = lens_rt(c, n, bits)?;
            r.push(format!("{}: RT(-L({n},1))", c.name()), l.value.conj(), &l.reversed);
            let an = gauss_report(c, n, bits)?.alpha;
            if let (Some(an), Some(a1)) = (an, &a1) {
                let ratio = l.value.checked_div(&l.reversed).map_err(InvariantError::from)?;
                let expected = an.checked_div(a1).map_err(InvariantError::from)?;
                r.push(format!("{}: RT(L)/RT(-L) at n={n}", c.name()), expected, ratio);
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_targets_pass() {
        for id in ["ty-table", "wpt2-generators", "h27", "zp-gauss", "lens"] {
            let r = reproduce(id, 128).unwrap();
            for l in &r.lines {
                assert!(l.pass, "{id}: {} expected {} got {}", l.item, l.expected, l.computed);
            }
        }
    }

    #[test]
    fn unknown_id() {
        assert!(matches!(reproduce("nope", 128), Err(ReproduceError::UnknownExample(_))));
    }
}

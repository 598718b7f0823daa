//! End-to-end acceptance checks. Runs without the libtest harness so that the
//! per-criterion lines are always printed; exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hgauss_core::constructors::{
    abelian_double, condense_pointed, double_gauss_sum, kac_peterson, legendre, pointed, LieDatum, LieType,
    MetricGroup,
};
use hgauss_core::fixtures;
use hgauss_core::invariants::{
    coprime_residues, gauss_report, nu_aggregate, nu_bantay_total, report_from_tau, tau, verify_anomaly_galois,
    verify_center, verify_condensation, verify_first_second, verify_galois_theorem, Options, Xi,
};
use hgauss_core::moddata::PremodularData;
use hgauss_core::witt::{compare_signatures, distinct_values, pair_map, signature, WittOutcome};
use hgauss_core::{CycloNum, GaloisAut, IntPolynomial, RootOfUnity};

const BITS: u32 = 128;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cyclic(n: u64, q: RootOfUnity) -> PremodularData {
    pointed(&MetricGroup::cyclic(n, q).expect("valid metric group"))
}

fn lie(t: LieType, k: u32) -> PremodularData {
    kac_peterson(&LieDatum::new(t, k).expect("supported")).expect("builds")
}

/// Modular data shared by criteria 4, 5 and 13.
fn modular_catalog() -> Vec<PremodularData> {
    let mut out = vec![
        cyclic(5, RootOfUnity::new(5, 1)),
        cyclic(5, RootOfUnity::new(5, 2)),
        cyclic(7, RootOfUnity::new(7, 1)),
        cyclic(7, RootOfUnity::new(7, 3)),
    ];
    out.extend((1..=10).map(|k| lie(LieType::A1, k)));
    out.push(lie(LieType::B2, 4));
    let sl2_1 = lie(LieType::A1, 1);
    out.push(sl2_1.deligne_product(&sl2_1));
    out.push(cyclic(5, RootOfUnity::new(5, 1)).deligne_product(&lie(LieType::A1, 2)));
    out.push(cyclic(3, RootOfUnity::new(3, 1)).deligne_product(&cyclic(5, RootOfUnity::new(5, 1)).reverse()));
    out.push(lie(LieType::A1, 2).deligne_product(&lie(LieType::A1, 3)));
    out
}

/// Premodular but not modular entries.
fn degenerate_catalog() -> Vec<PremodularData> {
    vec![
        cyclic(2, RootOfUnity::new(2, 1)),
        cyclic(3, RootOfUnity::ONE),
        cyclic(4, RootOfUnity::new(2, 1)),
        cyclic(2, RootOfUnity::new(2, 1)).deligne_product(&cyclic(3, RootOfUnity::new(3, 1))),
    ]
}

// 1
fn pointed_prime_gauss_sums() -> Outcome {
    let mut cases = 0;
    for p in [3u64, 5, 7, 11, 13] {
        let pi = p as i64;
        let g: CycloNum = (0..pi).map(|j| CycloNum::zeta_pow(p, j * j)).sum();
        // g^2 = (-1/p) p
        let sign = if p % 4 == 1 { 1 } else { -1 };
        ensure(&g * &g == CycloNum::from_int(sign * pi), || format!("g_{p}^2 != (-1/{p}) {p}"))?;
        for a in 1..pi {
            let c = cyclic(p, RootOfUnity::new(p, a));
            for n in -2 * pi..=2 * pi {
                if n % pi == 0 {
                    continue;
                }
                let expected = &g * &CycloNum::from_int(legendre(a * n, p).into());
                ensure(tau(&c, n) == expected, || format!("p={p} a={a} n={n}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (p, a, n) cases equal (an/p) g_p exactly"))
}

// 2
fn zero_gauss_sum() -> Outcome {
    let c = cyclic(2, RootOfUnity::new(4, 1));
    let r = gauss_report(&c, 2, BITS).map_err(|e| e.to_string())?;
    ensure(r.tau.is_zero(), || format!("tau_2 = {}", r.tau))?;
    ensure(r.xi == Xi::Undefined, || format!("xi_2 = {:?}", r.xi))?;
    ensure(r.alpha.is_none(), || "alpha_2 defined".into())?;
    Ok("tau_2 = 0 and xi_2 Undefined".into())
}

// 3
fn doubles_counting() -> Outcome {
    let ds3 = fixtures::drinfeld_double_s3();
    let s3 = fixtures::group("S3").unwrap().map_err(|e| e.to_string())?;
    for n in 1..=12i64 {
        // S3: identity, three involutions, two 3-cycles
        let count = 1 + if n % 2 == 0 { 3 } else { 0 } + if n % 3 == 0 { 2 } else { 0 };
        ensure(tau(&ds3, n) == CycloNum::from_int(6 * count), || format!("D(S3) tau_{n} = {}", tau(&ds3, n)))?;
        ensure(double_gauss_sum(&s3, n) == 6 * count as u64, || format!("S3 counting at n={n}"))?;
    }
    for row in fixtures::TY_TABLE.iter().filter(|r| !r.reference_only) {
        let g = fixtures::group(row.group).unwrap().map_err(|e| e.to_string())?;
        let got: Vec<u64> = (1..=8).map(|n| double_gauss_sum(&g, n)).collect();
        ensure(got == row.taus, || format!("{}: {got:?} vs {:?}", row.group, row.taus))?;
    }
    Ok("D(S3) n = 1..12, D8 and Q8 rows n = 1..8 match".into())
}

// 4
fn galois_theorem(catalog: &[PremodularData]) -> Outcome {
    let mut cases = 0;
    for c in catalog {
        let v = verify_galois_theorem(c, &[1, 2, 3], &Options::default()).map_err(|e| format!("{}: {e}", c.name()))?;
        if let Some(f) = v.failures().next() {
            return Err(format!("{} a={:?} n={}: {}", c.name(), f.a, f.n, f.notes.join("; ")));
        }
        let t_order = c.t_order();
        let dim = c.global_dim().compress();
        ensure(t_order % dim.conductor() == 0, || format!("{}: dim outside Q(zeta_N)", c.name()))?;
        ensure(v.cases.len() == 3 * coprime_residues(t_order).len(), || format!("{}: case count", c.name()))?;
        // recompute both sides with sigma taken directly on Q(zeta_N), no lifting
        for case in &v.cases {
            let (a, n) = (case.a.unwrap(), case.n);
            let inv = (1..t_order as i64).find(|k| (k * n).rem_euclid(t_order as i64) == 1).unwrap();
            let sigma = GaloisAut::new(t_order, inv).map_err(|e| e.to_string())?;
            let ta = tau(c, a).compress();
            ensure(t_order % ta.conductor() == 0, || format!("{}: tau_{a} outside Q(zeta_N)", c.name()))?;
            ensure(case.lhs.as_ref() == Some(&tau(c, a * n)), || format!("{}: lhs at a={a} n={n}", c.name()))?;
            let sym = c.galois_symmetry(&sigma).map_err(|e| e.to_string())?;
            let theta = c.twists()[sym.perm[0]].pow(a * n).to_cyclo();
            let rhs = &(&sigma.apply(&ta) * &dim.checked_div(&sigma.apply(&dim)).unwrap()) * &theta;
            ensure(case.rhs.as_ref() == Some(&rhs), || format!("{}: rhs at a={a} n={n}", c.name()))?;
            ensure(!tau(c, n).is_zero(), || format!("{}: tau_{n} = 0", c.name()))?;
            cases += 1;
        }
    }
    Ok(format!("{} categories, {cases} (a, n) cases exact", catalog.len()))
}

// 5
fn root_of_unity_and_d_number(catalog: &[PremodularData]) -> Outcome {
    let mut cases = 0;
    for c in catalog {
        let t = c.t_order() as i64;
        for n in coprime_residues(c.t_order()) {
            let r = gauss_report(c, n, BITS).map_err(|e| e.to_string())?;
            let z = r.xi.root().ok_or_else(|| format!("{}: xi_{n} = {:?}", c.name(), r.xi))?;
            ensure(z.pow(4 * t).is_one(), || format!("{}: xi_{n}^(4N) != 1", c.name()))?;
            // xi^2 = alpha exactly
            ensure(Some(z.pow(2).to_cyclo()) == r.alpha, || format!("{}: xi_{n}^2 != alpha_{n}", c.name()))?;
            ensure(r.tau.is_d_number(), || format!("{}: tau_{n} not a d-number", c.name()))?;
            cases += 1;
        }
        let v = verify_anomaly_galois(c, &Options::default()).map_err(|e| e.to_string())?;
        ensure(v.pass, || format!("{}: anomaly identity failed", c.name()))?;
    }
    Ok(format!("{cases} coprime (category, n) cases"))
}

// 6
fn center_theorem() -> Outcome {
    let mut inputs = vec![cyclic(3, RootOfUnity::new(3, 1)), cyclic(5, RootOfUnity::new(5, 1))];
    inputs.extend((1..=4).map(|k| lie(LieType::A1, k)));
    let mut cases = 0;
    for c in &inputs {
        let v = verify_center(c, &Options::default()).map_err(|e| e.to_string())?;
        if let Some(f) = v.failures().next() {
            return Err(format!("{} n={}: {}", c.name(), f.n, f.notes.join("; ")));
        }
        let z = c.deligne_product(&c.reverse());
        for n in coprime_residues(z.t_order()) {
            // tau_n(Z) = |tau_n(C)|^2 > 0 independently
            let t = tau(&z, n);
            ensure(t == &tau(c, n) * &tau(c, -n), || format!("{}: tau_{n}(Z) != |tau_n(C)|^2", c.name()))?;
            ensure(t.is_real() && t.real_sign(BITS).unwrap().is_gt(), || format!("{}: xi_{n}(Z) != 1", c.name()))?;
        }
        cases += v.cases.len();
    }
    Ok(format!("{} inputs, {cases} coprime n", inputs.len()))
}

// 7
fn condensation() -> Outcome {
    let z2 = MetricGroup::new(vec![2, 2], vec![RootOfUnity::ONE; 2], vec![(0, 1, RootOfUnity::new(2, 1))])
        .map_err(|e| e.to_string())?;
    let z4 = MetricGroup::new(vec![4, 4], vec![RootOfUnity::ONE; 2], vec![(0, 1, RootOfUnity::new(4, 1))])
        .map_err(|e| e.to_string())?;
    // hand values for odd n: tau(C), tau(C0)
    let examples = [(z2, vec![1, 0], 2, 1, 1usize), (z4, vec![2, 0], 4, 2, 4usize)];
    let mut cases = 0;
    for (mg, h, t_c, t_c0, quotient_order) in examples {
        let v = verify_condensation(&mg, std::slice::from_ref(&h), &Options::default()).map_err(|e| e.to_string())?;
        ensure(v.pass, || format!("{:?}: {:?}", mg.orders(), v.failures().next()))?;
        let q = condense_pointed(&mg, &[h]).map_err(|e| e.to_string())?;
        ensure(q.order() == quotient_order, || format!("|H^perp/H| = {}", q.order()))?;
        let (c, c0) = (pointed(&mg), pointed(&q));
        for n in coprime_residues(c.t_order()) {
            ensure(tau(&c, n) == CycloNum::from_int(t_c), || format!("tau_{n}(C) = {}", tau(&c, n)))?;
            ensure(tau(&c0, n) == CycloNum::from_int(t_c0), || format!("tau_{n}(C0) = {}", tau(&c0, n)))?;
            let (x, x0) = (gauss_report(&c, n, BITS).unwrap().xi, gauss_report(&c0, n, BITS).unwrap().xi);
            ensure(x == x0, || format!("xi_{n}: {x:?} vs {x0:?}"))?;
            cases += 1;
        }
    }
    Ok(format!("Z2xZ2 and Z4xZ4 hyperbolic, {cases} coprime n"))
}

// 8
fn kac_peterson_anchors() -> Outcome {
    let c = lie(LieType::B2, 4);
    ensure(c.rank() == 15, || format!("rank {}", c.rank()))?;
    ensure(c.t_order() == 28, || format!("t_order {}", c.t_order()))?;
    let table: [(i64, &[i64]); 4] = [(4, &[5, 13, 19, 27]), (6, &[3, 17]), (8, &[11, 25]), (10, &[1, 9, 15, 23])];
    let mut seen = 0;
    for (e, ms) in table {
        for &m in ms {
            let xi = gauss_report(&c, m, BITS).map_err(|e| e.to_string())?.xi;
            ensure(xi == Xi::ExactRoot { root: RootOfUnity::new(14, e) }, || format!("xi_{m} = {xi:?}, want z14^{e}"))?;
            seen += 1;
        }
    }
    ensure(seen == coprime_residues(28).len(), || "table does not cover all m".into())?;
    Ok("rank 15, t_order 28, all 12 xi_m match".into())
}

// 9
fn g2_witt() -> Outcome {
    let c = lie(LieType::G2, 8);
    let d = lie(LieType::G2, 11);
    ensure(c.t_order() == 36 && d.t_order() == 45, || format!("t_orders {} {}", c.t_order(), d.t_order()))?;
    let sc = signature(&c, BITS).map_err(|e| e.to_string())?.power(5);
    let sd = signature(&d, BITS).map_err(|e| e.to_string())?.power(10);
    let target = RootOfUnity::new(6, -1);
    ensure(sc.xi(1) == Some(target) && sd.xi(1) == Some(target), || format!("xi_1: {:?} {:?}", sc.xi(1), sd.xi(1)))?;
    let outcome = compare_signatures(&sc, &sd).outcome;
    let want = WittOutcome::Distinguished { n: 13, xi_a: RootOfUnity::ONE, xi_b: RootOfUnity::new(2, 1) };
    ensure(outcome == want, || format!("{outcome:?}"))?;
    Ok("t_order 36/45, xi_1 = exp(-pi i/3) for both, distinguished at n = 13 (1 vs -1)".into())
}

// 10
fn wpt2_generators() -> Outcome {
    let c = cyclic(4, RootOfUnity::new(8, 1));
    let d = c.deligne_product(&cyclic(2, RootOfUnity::new(4, -1)));
    let (sc, sd) = (signature(&c, BITS).map_err(|e| e.to_string())?, signature(&d, BITS).map_err(|e| e.to_string())?);
    ensure(sc.xi(1) == Some(RootOfUnity::new(8, 1)) && sc.xi(3) == Some(RootOfUnity::new(8, 3)), || "C".into())?;
    ensure(sd.xi(1) == Some(RootOfUnity::ONE) && sd.xi(3) == Some(RootOfUnity::new(2, 1)), || "D".into())?;
    let map = pair_map(&sc, &sd, [1, 3], 8, 2);
    let k = distinct_values(&map);
    ensure(k == 16, || format!("{k} distinct values"))?;
    // the formula (z8^a, (-1)^b z8^3a)
    for ((a, b), (x1, x3)) in &map {
        let (a, b) = (*a as i64, *b as i64);
        ensure(*x1 == RootOfUnity::new(8, a), || format!("xi_1 at ({a},{b})"))?;
        ensure(*x3 == RootOfUnity::new(8, 3 * a + 4 * b), || format!("xi_3 at ({a},{b})"))?;
    }
    Ok("(z8, z8^3), (1, -1), 16 distinct pair values".into())
}

// 11
fn non_root_anomaly() -> Outcome {
    let c = lie(LieType::G2, 3);
    let r = gauss_report(&c, 3, BITS).map_err(|e| e.to_string())?;
    let want = IntPolynomial::from_i64(&[2, -3, 2]);
    match &r.xi {
        Xi::NonRootExact { alpha_minpoly, .. } => {
            ensure(*alpha_minpoly == want, || format!("alpha_3 min-poly {alpha_minpoly}"))?;
            ensure(!alpha_minpoly.is_monic(), || "monic".into())?;
            let xi_poly = IntPolynomial::from_i64(&[2, 0, -3, 0, 2]);
            ensure(alpha_minpoly.compose_power(2) == xi_poly, || "x -> x^2 mismatch".into())?;
        }
        other => return Err(format!("xi_3 = {other:?}")),
    }
    ensure(!r.alpha.as_ref().unwrap().is_algebraic_integer(), || "alpha_3 integral".into())?;
    Ok("alpha_3 min-poly 2x^2 - 3x + 2, xi_3 min-poly 2x^4 - 3x^2 + 2".into())
}

// 12
fn h27() -> Outcome {
    let r = report_from_tau(3, fixtures::h27_tau3(), BITS).map_err(|e| e.to_string())?;
    let alpha = r.alpha.ok_or("alpha_3 undefined")?;
    let poly = alpha.minimal_polynomial();
    ensure(poly == IntPolynomial::from_i64(&[7, 2, 7]), || format!("min-poly {poly}"))?;
    ensure(!alpha.is_algebraic_integer(), || "alpha_3 integral".into())?;
    ensure(matches!(r.xi, Xi::NonRootExact { .. }), || format!("{:?}", r.xi))?;
    Ok("alpha_3 min-poly 7x^2 + 2x + 7, not an algebraic integer".into())
}

// 13
fn property_suites(catalog: &[PremodularData]) -> Outcome {
    let mut extra = degenerate_catalog();
    extra.push(fixtures::drinfeld_double_s3());
    extra.push(pointed(&abelian_double(&[2, 3]).unwrap()));
    extra.push(lie(LieType::G2, 3));
    extra.push(lie(LieType::A2, 2));
    let all: Vec<&PremodularData> = catalog.iter().chain(extra.iter()).collect();
    let mut checks = 0usize;
    for c in &all {
        let n_max = 2 * c.t_order() as i64;
        for n in -n_max..=n_max {
            ensure(tau(c, n).conj() == tau(c, -n), || format!("{}: conj(tau_{n})", c.name()))?;
            checks += 1;
        }
        let v = verify_first_second(c).map_err(|e| e.to_string())?;
        ensure(v.pass, || format!("{}: tau_1 tau_-2 not real", c.name()))?;
        checks += 1;
    }
    // multiplicativity on products, including the catalog's own
    let pairs = [(0usize, 4usize), (4, 5), (2, 14), (14, 14)];
    for (i, j) in pairs {
        let (a, b) = (&catalog[i], &catalog[j]);
        let p = a.deligne_product(b);
        for n in -8..=8 {
            ensure(tau(&p, n) == &tau(a, n) * &tau(b, n), || format!("{} x {}: tau_{n}", a.name(), b.name()))?;
            checks += 1;
        }
    }
    for c in all.iter().filter(|c| c.is_modular().unwrap_or(false)) {
        let f = c.verlinde_fusion().map_err(|e| format!("{}: {e}", c.name()))?;
        ensure(f.satisfies_unit_and_symmetry(), || format!("{}: unit/symmetry", c.name()))?;
        let r = c.rank();
        // associativity of the fusion ring
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let left: u64 = (0..r).map(|m| (f.get(i, j, m) * f.get(m, k, l)) as u64).sum();
                        let right: u64 = (0..r).map(|m| (f.get(j, k, m) * f.get(i, m, l)) as u64).sum();
                        ensure(left == right, || format!("{}: associativity", c.name()))?;
                    }
                }
            }
        }
        for n in 1..=2 * c.t_order() as i64 {
            let agg = nu_aggregate(c, n, BITS).map_err(|e| format!("{}: {e}", c.name()))?;
            let bantay = nu_bantay_total(c, &f, n).map_err(|e| e.to_string())?;
            ensure(agg == bantay, || format!("{}: Bantay at n={n}", c.name()))?;
            let direct = (&tau(c, n) * &tau(c, -n)).checked_div(&c.global_dim()).unwrap();
            ensure(agg == direct, || format!("{}: aggregate at n={n}", c.name()))?;
            checks += 1;
        }
    }
    Ok(format!("{} categories ({} degenerate), {checks} exact checks", all.len(), degenerate_catalog().len()))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
}

fn run(c: Criterion, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let elapsed = start.elapsed();
    let in_time = c.limit.is_none_or(|l| elapsed <= l);
    let pass = result.is_ok() && in_time;
    let limit = c.limit.map_or(String::new(), |l| format!(", limit {:.0?}", l));
    let detail = match &result {
        Ok(s) => s.clone(),
        Err(e) => e.clone(),
    };
    let timing = if in_time { String::new() } else { " TIME LIMIT EXCEEDED".into() };
    println!(
        "[{}] {:>2}. {}: {} ({:.2?}{limit}){timing}",
        if pass { "PASS" } else { "FAIL" },
        c.id,
        c.title,
        detail,
        elapsed
    );
    pass
}

fn main() -> ExitCode {
    let sec = Duration::from_secs;
    let mut ok = true;
    ok &= run(Criterion { id: 1, title: "pointed prime Gauss sums", limit: Some(sec(1)) }, pointed_prime_gauss_sums);
    ok &= run(Criterion { id: 2, title: "zero Gauss sum", limit: Some(sec(1)) }, zero_gauss_sum);
    ok &= run(Criterion { id: 3, title: "doubles counting", limit: Some(sec(1)) }, doubles_counting);

    let start = Instant::now();
    let catalog = modular_catalog();
    let build = start.elapsed();
    // the catalog build counts against criterion 4
    ok &= run(Criterion { id: 4, title: "Galois theorem suite", limit: Some(sec(300).saturating_sub(build)) }, || {
        galois_theorem(&catalog).map(|s| format!("{s}; catalog built in {build:.2?}"))
    });
    ok &= run(Criterion { id: 5, title: "root of unity and d-number corollary", limit: None }, || {
        root_of_unity_and_d_number(&catalog)
    });
    ok &= run(Criterion { id: 6, title: "center theorem", limit: None }, center_theorem);
    ok &= run(Criterion { id: 7, title: "condensation", limit: None }, condensation);
    ok &= run(Criterion { id: 8, title: "Kac-Peterson anchors", limit: Some(sec(60)) }, kac_peterson_anchors);
    ok &= run(Criterion { id: 9, title: "g2 Witt separation", limit: Some(sec(120)) }, g2_witt);
    ok &= run(Criterion { id: 10, title: "W_pt(2) generators", limit: None }, wpt2_generators);
    ok &= run(Criterion { id: 11, title: "non-root anomaly", limit: None }, non_root_anomaly);
    ok &= run(Criterion { id: 12, title: "H27 fixture", limit: Some(sec(1)) }, h27);
    ok &= run(Criterion { id: 13, title: "property suites", limit: Some(sec(300)) }, || property_suites(&catalog));

    if ok {
        println!("acceptance: all 13 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}

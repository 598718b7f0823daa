use num_rational::BigRational;
use proptest::prelude::*;

use hgauss_core::constructors::{abelian_double, pointed, MetricGroup};
use hgauss_core::cyclo::interval::embed;
use hgauss_core::invariants::{coprime_residues, gauss_report, nu_aggregate, nu_bantay_total, tau, verify_first_second};
use hgauss_core::moddata::PremodularData;
use hgauss_core::witt::signature;
use hgauss_core::{CycloNum, GaloisAut, RootOfUnity};

const CONDUCTORS: [u64; 14] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 20];

fn cyclo() -> impl Strategy<Value = CycloNum> {
    (prop::sample::select(&CONDUCTORS[..]), prop::collection::vec((0i64..40, -6i64..=6, 1i64..=4), 0..5)).prop_map(
        |(n, terms)| CycloNum::make(n, terms.into_iter().map(|(e, a, b)| (e, BigRational::new(a.into(), b.into())))),
    )
}

/// Cyclic metric groups `C(Z_m, q)` with `q(1) = zeta_{2m}^e`, `e m` even when
/// `m` is odd so that `q` is well defined. Includes degenerate forms.
fn cyclic_category() -> impl Strategy<Value = PremodularData> {
    (1u64..=9, 0i64..18).prop_map(|(m, e)| {
        let q = if m % 2 == 0 { RootOfUnity::new(2 * m, e) } else { RootOfUnity::new(m, e) };
        pointed(&MetricGroup::cyclic(m, q).expect("well defined"))
    })
}

fn modular_cyclic() -> impl Strategy<Value = PremodularData> {
    cyclic_category().prop_filter("modular", |c| c.is_modular().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn field_axioms(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &CycloNum::zero());
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), CycloNum::one());
        }
    }

    #[test]
    fn galois_is_a_homomorphism(a in cyclo(), b in cyclo(), k in 1i64..60) {
        let n = 240;
        prop_assume!(num_integer::gcd(k, n) == 1);
        let s = GaloisAut::new(n as u64, k).unwrap();
        prop_assert_eq!(s.apply(&(&a * &b)), &s.apply(&a) * &s.apply(&b));
        prop_assert_eq!(s.apply(&(&a + &b)), &s.apply(&a) + &s.apply(&b));
        prop_assert_eq!(s.apply(&a.conj()), s.apply(&a).conj());
    }

    #[test]
    fn embedding_respects_conjugation_and_products(a in cyclo(), b in cyclo()) {
        prop_assert!(embed(&a.conj(), 96).overlaps(&embed(&a, 96).conj()));
        prop_assert!(embed(&(&a * &b), 96).overlaps(&embed(&a, 96).mul(&embed(&b, 96))));
    }

    #[test]
    fn minimal_polynomial_vanishes(a in cyclo()) {
        let p = a.minimal_polynomial();
        prop_assert!(p.eval(&a).is_zero());
        prop_assert!(a.conjugates().iter().all(|c| p.eval(c).is_zero()));
        prop_assert_eq!(a.is_algebraic_integer(), p.is_monic());
    }

    #[test]
    fn root_of_unity_matches_brute_force(n in 1u64..=40, e in 0i64..80, sign in any::<bool>(), scaled in any::<bool>()) {
        let mut x = CycloNum::zeta_pow(n, e);
        if sign {
            x = -&x;
        }
        if scaled {
            x = &x * &CycloNum::from_ratio(3, 2);
        }
        // roots of unity in Q(zeta_n) have order dividing lcm(2, n)
        let bound = if n % 2 == 0 { n } else { 2 * n };
        let brute = (1..=bound as i64).find(|&k| x.pow(k).unwrap().is_one());
        match x.is_root_of_unity() {
            Some(z) => {
                prop_assert_eq!(Some(z.order() as i64), brute);
                prop_assert_eq!(z.to_cyclo(), x);
            }
            None => prop_assert_eq!(brute, None),
        }
    }

    #[test]
    fn gauss_sum_conjugation(c in cyclic_category(), n in -40i64..40) {
        prop_assert_eq!(tau(&c, n).conj(), tau(&c, -n));
        prop_assert_eq!(tau(&c.reverse(), n), tau(&c, -n));
        prop_assert_eq!(tau(&c, 0), c.global_dim());
    }

    #[test]
    fn gauss_sum_multiplicative(a in cyclic_category(), b in cyclic_category(), n in -20i64..20) {
        prop_assert_eq!(tau(&a.deligne_product(&b), n), &tau(&a, n) * &tau(&b, n));
    }

    #[test]
    fn bantay_aggregate(c in modular_cyclic(), n in 1i64..20) {
        let f = c.verlinde_fusion().unwrap();
        let agg = nu_aggregate(&c, n, 128).unwrap();
        prop_assert_eq!(nu_bantay_total(&c, &f, n).unwrap(), agg.clone());
        prop_assert_eq!(agg, (&tau(&c, n) * &tau(&c, -n)).checked_div(&c.global_dim()).unwrap());
    }

    #[test]
    fn first_and_second_gauss_sums(c in cyclic_category()) {
        let prod = &tau(&c, 1) * &tau(&c, -2);
        prop_assert!(prod.is_real());
        prop_assert!(verify_first_second(&c).unwrap().pass);
    }

    #[test]
    fn anomaly_order_divides(c in modular_cyclic(), n in 1i64..30) {
        let t = c.t_order();
        if let Some(alpha) = gauss_report(&c, n, 128).unwrap().alpha {
            if let Some(z) = alpha.is_root_of_unity() {
                let bound = if t % 2 == 0 { t } else { 2 * t };
                prop_assert_eq!(bound % z.order(), 0);
            }
        }
    }

    #[test]
    fn signature_laws(a in modular_cyclic(), b in modular_cyclic()) {
        let (sa, sb) = (signature(&a, 128).unwrap(), signature(&b, 128).unwrap());
        let product = signature(&a.deligne_product(&b), 128).unwrap();
        prop_assert_eq!(sa.product(&sb).entries, product.entries);
        let rev = signature(&a.reverse(), 128).unwrap();
        prop_assert_eq!(sa.reverse().entries, rev.entries);
        for n in coprime_residues(a.t_order()) {
            prop_assert_eq!(sa.xi(n + a.t_order() as i64), sa.xi(n));
        }
        // tensoring with a center changes nothing
        let center = signature(&a.deligne_product(&a.reverse()), 128).unwrap();
        prop_assert!(center.is_trivial());
        let shifted = sa.product(&center);
        for n in coprime_residues(a.t_order()) {
            prop_assert_eq!(shifted.xi(n), sa.xi(n));
        }
    }

    #[test]
    fn pointed_bicharacter(c in cyclic_category(), y in 0usize..9, z in 0usize..9) {
        let s = c.s_matrix().unwrap();
        let r = c.rank();
        let (y, z) = (y % r, z % r);
        for x in 0..r {
            prop_assert_eq!(&s[x][y] * &s[x][z], s[x][(y + z) % r].clone());
        }
    }

    #[test]
    fn abelian_double_counting(orders in prop::collection::vec(1u64..=5, 1..=2), n in -12i64..=12) {
        let d = pointed(&abelian_double(&orders).unwrap());
        let size: u64 = orders.iter().product();
        // #{x in G : n x = 0} = prod gcd(n, m_i)
        let count: u64 = orders.iter().map(|&m| num_integer::gcd(n.unsigned_abs(), m)).product();
        prop_assert_eq!(tau(&d, n), CycloNum::from_int((size * count) as i64));
    }

    #[test]
    fn category_json_round_trip(c in cyclic_category()) {
        let text = c.to_json();
        let back = PremodularData::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
    }
}

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::ConstructorError;
use crate::arith;
use crate::cyclo::{CycloNum, RootOfUnity};
use crate::moddata::PremodularData;

/// `Z_{n_1} x ... x Z_{n_r}` with a quadratic form given on generators:
/// `q(x) = prod q(e_i)^{x_i^2} prod_{i<j} b(e_i, e_j)^{x_i x_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricGroup {
    orders: Vec<u64>,
    q_gen: Vec<RootOfUnity>,
    #[serde(default)]
    b_gen: Vec<(usize, usize, RootOfUnity)>,
    #[serde(skip)]
    cache: Exponents,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Exponents {
    modulus: u64,
    q: Vec<i128>,
    b: Vec<Vec<i128>>,
}

impl Exponents {
    fn build(orders: &[u64], q_gen: &[RootOfUnity], b_gen: &[(usize, usize, RootOfUnity)]) -> Self {
        let r = orders.len();
        let modulus = q_gen
            .iter()
            .chain(b_gen.iter().map(|t| &t.2))
            .fold(1, |m, z| arith::lcm(m, z.order()));
        let scaled = |z: &RootOfUnity| i128::from(z.exponent() * (modulus / z.order()));
        let mut b = vec![vec![0i128; r]; r];
        for (i, j, z) in b_gen {
            b[*i][*j] = scaled(z);
        }
        Exponents {
            modulus,
            q: q_gen.iter().map(scaled).collect(),
            b,
        }
    }
}

impl MetricGroup {
    /// Validates the generator data and that `q` is well defined on the group.
    pub fn new(
        orders: Vec<u64>,
        q_gen: Vec<RootOfUnity>,
        b_gen: Vec<(usize, usize, RootOfUnity)>,
    ) -> Result<Self, ConstructorError> {
        let mut mg = MetricGroup {
            orders,
            q_gen,
            b_gen,
            cache: Exponents::default(),
        };
        mg.prepare()?;
        Ok(mg)
    }

    /// `Z_n` with `q(1) = zeta`.
    pub fn cyclic(n: u64, q1: RootOfUnity) -> Result<Self, ConstructorError> {
        Self::new(vec![n], vec![q1], vec![])
    }

    /// Re-runs validation, e.g. after deserialisation.
    pub fn prepare(&mut self) -> Result<(), ConstructorError> {
        let r = self.orders.len();
        if self.orders.contains(&0) {
            return Err(ConstructorError::BadMetricGroup("cyclic order 0".into()));
        }
        if self.q_gen.len() != r {
            return Err(ConstructorError::BadMetricGroup(format!(
                "{} generators but {} values of q",
                r,
                self.q_gen.len()
            )));
        }
        let mut seen = HashSet::new();
        for (i, j, _) in &self.b_gen {
            if !(i < j && *j < r) || !seen.insert((*i, *j)) {
                return Err(ConstructorError::BadMetricGroup(format!(
                    "b_gen entry ({i}, {j}) must satisfy i < j < {r} and appear once"
                )));
            }
        }
        self.cache = Exponents::build(&self.orders, &self.q_gen, &self.b_gen);
        self.check_well_defined()
    }

    fn check_well_defined(&self) -> Result<(), ConstructorError> {
        for idx in 0..self.order() {
            let x = self.element(idx);
            let qx = self.q_exponent(&x);
            for (i, &n) in self.orders.iter().enumerate() {
                let mut y = x.clone();
                y[i] += n as i64;
                if self.q_exponent(&y) != qx {
                    return Err(ConstructorError::IllFormedQuadraticForm { element: x, generator: i });
                }
            }
        }
        // q is a quadratic polynomial on Z^r, so b is a bicharacter on Z^r; periodicity
        // of q makes it one on G. Spot-check against generators anyway.
        for idx in 0..self.order() {
            let x = self.element(idx);
            for jdx in 0..self.order() {
                let y = self.element(jdx);
                for g in 0..self.rank() {
                    let e = self.generator(g);
                    let lhs = self.b(&self.add(&x, &y), &e);
                    if lhs != self.b(&x, &e).mul(&self.b(&y, &e)) {
                        return Err(ConstructorError::NotBicharacter { x, y });
                    }
                }
            }
            if self.order() > 256 {
                break;
            }
        }
        Ok(())
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }
    pub fn q_gen(&self) -> &[RootOfUnity] {
        &self.q_gen
    }
    pub fn b_gen(&self) -> &[(usize, usize, RootOfUnity)] {
        &self.b_gen
    }
    pub fn rank(&self) -> usize {
        self.orders.len()
    }
    pub fn order(&self) -> usize {
        self.orders.iter().product::<u64>() as usize
    }

    /// Element with mixed-radix index `idx`, first coordinate fastest.
    pub fn element(&self, mut idx: usize) -> Vec<i64> {
        self.orders
            .iter()
            .map(|&n| {
                let c = idx % n as usize;
                idx /= n as usize;
                c as i64
            })
            .collect()
    }

    pub fn index(&self, x: &[i64]) -> usize {
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (c, &n) in x.iter().zip(&self.orders) {
            idx += arith::rem(*c, n) as usize * stride;
            stride *= n as usize;
        }
        idx
    }

    pub fn generator(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        e
    }

    pub fn normalize(&self, x: &[i64]) -> Vec<i64> {
        x.iter().zip(&self.orders).map(|(c, &n)| arith::rem(*c, n) as i64).collect()
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        self.normalize(&s)
    }

    pub fn scale(&self, k: i64, x: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = x.iter().map(|a| k * a).collect();
        self.normalize(&s)
    }

    fn q_exponent(&self, x: &[i64]) -> u64 {
        let c = &self.cache;
        let mut e: i128 = 0;
        for i in 0..x.len() {
            let xi = i128::from(x[i]);
            e += c.q[i] * xi * xi;
            for j in (i + 1)..x.len() {
                e += c.b[i][j] * xi * i128::from(x[j]);
            }
        }
        e.rem_euclid(i128::from(c.modulus)) as u64
    }

    pub fn q(&self, x: &[i64]) -> RootOfUnity {
        RootOfUnity::new(self.cache.modulus, self.q_exponent(x) as i64)
    }

    /// `b(x, y) = q(x + y) / (q(x) q(y))`.
    pub fn b(&self, x: &[i64], y: &[i64]) -> RootOfUnity {
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        let m = self.cache.modulus as i64;
        let e = self.q_exponent(&s) as i64 - self.q_exponent(x) as i64 - self.q_exponent(y) as i64;
        RootOfUnity::new(self.cache.modulus, e.rem_euclid(m))
    }

    /// Common order of all values of `q` and `b`.
    pub fn value_modulus(&self) -> u64 {
        self.cache.modulus
    }

    /// The radical `{x : b(x, -) = 1}` is trivial.
    pub fn is_nondegenerate(&self) -> bool {
        (1..self.order()).all(|idx| {
            let x = self.element(idx);
            (0..self.rank()).any(|g| !self.b(&x, &self.generator(g)).is_one())
        })
    }

    pub fn label(&self, x: &[i64]) -> String {
        match x.len() {
            0 => "0".into(),
            1 => x[0].to_string(),
            _ => format!(
                "({})",
                x.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            ),
        }
    }

    /// Closure of the given generators, as normalised elements.
    pub fn subgroup(&self, gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let zero = vec![0; self.rank()];
        let mut seen = HashSet::from([self.index(&zero)]);
        let mut out = vec![zero];
        let mut i = 0;
        while i < out.len() {
            for g in gens {
                let y = self.add(&out[i], g);
                if seen.insert(self.index(&y)) {
                    out.push(y);
                }
            }
            i += 1;
        }
        out
    }

    fn describe(&self) -> String {
        let q: Vec<String> = self.q_gen.iter().map(|z| z.to_string()).collect();
        let mut s = format!("orders={:?} q=[{}]", self.orders, q.join(","));
        if !self.b_gen.is_empty() {
            let b: Vec<String> = self.b_gen.iter().map(|(i, j, z)| format!("b{i}{j}={z}")).collect();
            s.push_str(&format!(" {}", b.join(" ")));
        }
        s
    }
}

/// The pointed category `C(G, q)`: dims 1, `theta_x = q(x)`, `S_xy = b(x, y)`.
pub fn pointed(mg: &MetricGroup) -> PremodularData {
    let n = mg.order();
    let elems: Vec<Vec<i64>> = (0..n).map(|i| mg.element(i)).collect();
    let m = mg.value_modulus();
    let s = elems
        .iter()
        .map(|x| {
            elems
                .iter()
                .map(|y| {
                    let z = mg.b(x, y);
                    CycloNum::zeta_pow(m, (z.exponent() * (m / z.order())) as i64)
                })
                .collect()
        })
        .collect();
    PremodularData::new(
        format!("C({})", mg.describe()),
        elems.iter().map(|x| mg.label(x)).collect(),
        vec![CycloNum::one(); n],
        elems.iter().map(|x| mg.q(x)).collect(),
        Some(s),
    )
    .with_provenance(format!("pointed {}", mg.describe()))
    .with_pseudounitary(true)
}

/// `G x G^` with `q(g, chi) = chi(g)`, the pointed model of `Z(Vec_G)`.
pub fn abelian_double(orders: &[u64]) -> Result<MetricGroup, ConstructorError> {
    let r = orders.len();
    let all: Vec<u64> = orders.iter().chain(orders).copied().collect();
    let b = (0..r).map(|i| (i, r + i, RootOfUnity::new(orders[i], 1))).collect();
    MetricGroup::new(all, vec![RootOfUnity::ONE; 2 * r], b)
}

/// `(H^perp / H, q)` for an isotropic subgroup `H` generated by `h_gens`.
pub fn condense_pointed(mg: &MetricGroup, h_gens: &[Vec<i64>]) -> Result<MetricGroup, ConstructorError> {
    let r = mg.rank();
    if h_gens.iter().any(|h| h.len() != r) {
        return Err(ConstructorError::BadMetricGroup(format!(
            "subgroup generators must have {r} coordinates"
        )));
    }
    let h_gens: Vec<Vec<i64>> = h_gens.iter().map(|h| mg.normalize(h)).collect();
    let h = mg.subgroup(&h_gens);
    if let Some(bad) = h.iter().find(|x| !mg.q(x).is_one()) {
        return Err(ConstructorError::NotIsotropic(bad.clone()));
    }
    let perp: Vec<Vec<i64>> = (0..mg.order())
        .map(|i| mg.element(i))
        .filter(|x| h_gens.iter().all(|g| mg.b(x, g).is_one()))
        .collect();
    for x in &perp {
        let qx = mg.q(x);
        if h.iter().any(|y| mg.q(&mg.add(x, y)) != qx) {
            return Err(ConstructorError::IllDefinedInducedForm);
        }
    }

    // Greedy cyclic decomposition of H^perp / H: take an element whose order
    // modulo the span so far is maximal and equals its order modulo H.
    let h_set: HashSet<usize> = h.iter().map(|x| mg.index(x)).collect();
    let mut span = h_set.clone();
    let mut gens: Vec<(Vec<i64>, u64)> = Vec::new();
    let order_mod = |x: &[i64], set: &HashSet<usize>| -> u64 {
        let mut k = 1;
        let mut y = x.to_vec();
        while !set.contains(&mg.index(&y)) {
            y = mg.add(&y, x);
            k += 1;
        }
        k
    };
    while span.len() < perp.len() {
        let best = perp
            .iter()
            .filter(|x| !span.contains(&mg.index(x)))
            .map(|x| (order_mod(x, &span), x))
            .filter(|(k, x)| *k == order_mod(x, &h_set))
            .max_by_key(|(k, _)| *k)
            .ok_or_else(|| ConstructorError::InternalInconsistency("quotient decomposition".into()))?;
        let (k, x) = (best.0, best.1.clone());
        let mut next = span.clone();
        for s in &span {
            let base = mg.element(*s);
            for c in 0..k as i64 {
                next.insert(mg.index(&mg.add(&base, &mg.scale(c, &x))));
            }
        }
        span = next;
        gens.push((x, k));
    }
    let orders = gens.iter().map(|(_, k)| *k).collect();
    let q_gen = gens.iter().map(|(x, _)| mg.q(x)).collect();
    let mut b_gen = Vec::new();
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let z = mg.b(&gens[i].0, &gens[j].0);
            if !z.is_one() {
                b_gen.push((i, j, z));
            }
        }
    }
    MetricGroup::new(orders, q_gen, b_gen).map_err(|_| ConstructorError::IllDefinedInducedForm)
}

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ConstructorError;
use crate::arith;
use crate::cyclo::{CycloNum, RootOfUnity};
use crate::moddata::PremodularData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieType {
    A1,
    A2,
    B2,
    G2,
}

impl FromStr for LieType {
    type Err = ConstructorError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "A1" | "SL2" => Ok(LieType::A1),
            "A2" | "SL3" => Ok(LieType::A2),
            "B2" | "C2" | "SO5" | "SP4" => Ok(LieType::B2),
            "G2" => Ok(LieType::G2),
            _ => Err(ConstructorError::UnsupportedType(s.to_string())),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::A1 => "A1",
            LieType::A2 => "A2",
            LieType::B2 => "B2",
            LieType::G2 => "G2",
        };
        f.write_str(s)
    }
}

type Mat = Vec<Vec<i64>>;

/// A simple Lie algebra of rank at most two at a positive level. Weights are
/// in Dynkin (fundamental weight) coordinates; the form is normalised so long
/// roots have squared length 2.
#[derive(Clone, Debug)]
pub struct LieDatum {
    lie_type: LieType,
    level: u32,
    weyl: Vec<Mat>,
    positive_roots: Vec<Vec<i64>>,
}

fn ratio(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

impl LieDatum {
    pub fn new(lie_type: LieType, level: u32) -> Result<Self, ConstructorError> {
        if level == 0 {
            return Err(ConstructorError::UnsupportedType(format!("{lie_type} at level 0")));
        }
        let mut ld = LieDatum {
            lie_type,
            level,
            weyl: Vec::new(),
            positive_roots: Vec::new(),
        };
        ld.weyl = ld.enumerate_weyl();
        ld.positive_roots = ld.enumerate_positive_roots();
        ld.check_constants()?;
        Ok(ld)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn rank(&self) -> usize {
        if self.lie_type == LieType::A1 {
            1
        } else {
            2
        }
    }

    /// `A_ij = <alpha_i^vee, alpha_j>`; row `i` is `alpha_i` in Dynkin coordinates.
    pub fn cartan(&self) -> Mat {
        match self.lie_type {
            LieType::A1 => vec![vec![2]],
            LieType::A2 => vec![vec![2, -1], vec![-1, 2]],
            LieType::B2 => vec![vec![2, -2], vec![-1, 2]],
            LieType::G2 => vec![vec![2, -1], vec![-3, 2]],
        }
    }

    /// Gram matrix of the fundamental weights.
    pub fn quadratic_form(&self) -> Vec<Vec<Rational64>> {
        match self.lie_type {
            LieType::A1 => vec![vec![ratio(1, 2)]],
            LieType::A2 => vec![vec![ratio(2, 3), ratio(1, 3)], vec![ratio(1, 3), ratio(2, 3)]],
            LieType::B2 => vec![vec![ratio(1, 1), ratio(1, 2)], vec![ratio(1, 2), ratio(1, 2)]],
            LieType::G2 => vec![vec![ratio(2, 3), ratio(1, 1)], vec![ratio(1, 1), ratio(2, 1)]],
        }
    }

    /// Coefficients of the highest coroot; the level bound is `sum a_i lambda_i <= k`.
    pub fn comarks(&self) -> Vec<i64> {
        match self.lie_type {
            LieType::A1 => vec![1],
            LieType::A2 | LieType::B2 => vec![1, 1],
            LieType::G2 => vec![1, 2],
        }
    }

    pub fn dual_coxeter(&self) -> i64 {
        match self.lie_type {
            LieType::A1 => 2,
            LieType::A2 | LieType::B2 => 3,
            LieType::G2 => 4,
        }
    }

    /// Ratio of long to short squared root lengths.
    pub fn scaling_m(&self) -> u64 {
        match self.lie_type {
            LieType::A1 | LieType::A2 => 1,
            LieType::B2 => 2,
            LieType::G2 => 3,
        }
    }

    pub fn weyl_group(&self) -> &[Mat] {
        &self.weyl
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank()]
    }

    pub fn inner(&self, x: &[i64], y: &[i64]) -> Rational64 {
        let f = self.quadratic_form();
        let mut acc = Rational64::zero();
        for i in 0..x.len() {
            for j in 0..y.len() {
                acc += f[i][j] * x[i] * y[j];
            }
        }
        acc
    }

    // s_i(lambda) = lambda - lambda_i alpha_i, as a matrix acting on columns
    fn reflection(&self, i: usize) -> Mat {
        let r = self.rank();
        let a = self.cartan();
        (0..r)
            .map(|row| {
                (0..r)
                    .map(|col| i64::from(row == col) - if col == i { a[i][row] } else { 0 })
                    .collect()
            })
            .collect()
    }

    fn enumerate_weyl(&self) -> Vec<Mat> {
        let r = self.rank();
        let id: Mat = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        let gens: Vec<Mat> = (0..r).map(|i| self.reflection(i)).collect();
        let mut seen = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for g in &gens {
                let w = mat_mul(g, &out[i]);
                if seen.insert(w.clone()) {
                    out.push(w);
                }
            }
            i += 1;
        }
        out
    }

    fn enumerate_positive_roots(&self) -> Vec<Vec<i64>> {
        let rho = self.rho();
        let mut roots = HashSet::new();
        for alpha in self.cartan() {
            for w in &self.weyl {
                roots.insert(mat_vec(w, &alpha));
            }
        }
        let mut pos: Vec<Vec<i64>> = roots
            .into_iter()
            .filter(|b| self.inner(b, &rho) > Rational64::zero())
            .collect();
        pos.sort();
        pos
    }

    fn check_constants(&self) -> Result<(), ConstructorError> {
        let expected = match self.lie_type {
            LieType::A1 => 2,
            LieType::A2 => 6,
            LieType::B2 => 8,
            LieType::G2 => 12,
        };
        let fail = |m: String| Err(ConstructorError::InternalInconsistency(m));
        if self.weyl.len() != expected {
            return fail(format!("|W({})| = {}", self.lie_type, self.weyl.len()));
        }
        let r = self.rank();
        let mut two_rho = vec![0; r];
        for b in &self.positive_roots {
            for i in 0..r {
                two_rho[i] += b[i];
            }
        }
        if two_rho != vec![2; r] {
            return fail(format!("half-sum of positive roots is {two_rho:?}/2"));
        }
        let theta = self
            .positive_roots
            .iter()
            .max_by_key(|b| self.inner(b, &self.rho()))
            .expect("nonempty root system");
        if self.inner(theta, theta) != Rational64::from_integer(2) {
            return fail("highest root is not long".into());
        }
        if self.inner(&self.rho(), theta) + 1 != Rational64::from_integer(self.dual_coxeter()) {
            return fail("<rho, theta> + 1 != h".into());
        }
        let marks: Vec<i64> = (0..r)
            .map(|i| {
                let mut e = vec![0; r];
                e[i] = 1;
                self.inner(&e, theta).to_integer()
            })
            .collect();
        if marks != self.comarks() {
            return fail("comarks disagree with the highest root".into());
        }
        let ratio_sq = self.positive_roots.iter().map(|b| self.inner(b, b)).fold(
            Rational64::from_integer(2),
            |acc: Rational64, l| if l < acc { l } else { acc },
        );
        if Rational64::from_integer(2) / ratio_sq != Rational64::from_integer(self.scaling_m() as i64)
        {
            return fail("long/short ratio disagrees with m".into());
        }
        Ok(())
    }

    /// Dominant weights with `sum a_i lambda_i <= k`, unit first, then by level.
    pub fn alcove(&self) -> Vec<Vec<i64>> {
        let k = i64::from(self.level);
        let a = self.comarks();
        let mut out: Vec<Vec<i64>> = match self.rank() {
            1 => (0..=k).map(|x| vec![x]).collect(),
            _ => (0..=k)
                .flat_map(|x| (0..=k).map(move |y| vec![x, y]))
                .filter(|l| l[0] * a[0] + l[1] * a[1] <= k)
                .collect(),
        };
        out.sort_by_key(|l| (l.iter().zip(&a).map(|(x, y)| x * y).sum::<i64>(), l.clone()));
        out
    }

    fn label(&self, l: &[i64]) -> String {
        if l.len() == 1 {
            l[0].to_string()
        } else {
            format!("({},{})", l[0], l[1])
        }
    }
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

fn mat_vec(a: &Mat, v: &[i64]) -> Vec<i64> {
    a.iter().map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
}

fn det(a: &Mat) -> i64 {
    match a.len() {
        1 => a[0][0],
        2 => a[0][0] * a[1][1] - a[0][1] * a[1][0],
        _ => unreachable!("rank at most two"),
    }
}

/// Modular data of `C(g, k)` from the Kac-Peterson formulas, with modularity
/// and Verlinde integrality checked.
pub fn kac_peterson(ld: &LieDatum) -> Result<PremodularData, ConstructorError> {
    kac_peterson_with(ld, true)
}

/// As [`kac_peterson`]; `verify_fusion = false` skips the Verlinde integrality
/// check, which dominates the cost at large rank.
pub fn kac_peterson_with(ld: &LieDatum, verify_fusion: bool) -> Result<PremodularData, ConstructorError> {
    let weights = ld.alcove();
    let h = ld.dual_coxeter();
    let kh = i64::from(ld.level) + h;
    let den = ld
        .quadratic_form()
        .iter()
        .flatten()
        .fold(1u64, |m, x| arith::lcm(m, *x.denom() as u64));
    let conductor = den * kh as u64;
    let rho = ld.rho();
    let shifted: Vec<Vec<i64>> = weights
        .iter()
        .map(|l| l.iter().zip(&rho).map(|(a, b)| a + b).collect())
        .collect();
    let orbits: Vec<Vec<(i64, Vec<i64>)>> = shifted
        .iter()
        .map(|x| ld.weyl.iter().map(|w| (det(w), mat_vec(w, x))).collect())
        .collect();
    let n = weights.len();
    let raw: Vec<Vec<CycloNum>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let terms = orbits[i].iter().map(|(sign, wx)| {
                        // exp(-2 pi i <w x, y> / (k + h)) with <,> in (1/den) Z
                        let ip = ld.inner(wx, &shifted[j]) * den as i64;
                        debug_assert!(ip.is_integer());
                        (-ip.to_integer(), *sign)
                    });
                    let mut acc = vec![0i64; conductor as usize];
                    for (e, sign) in terms {
                        acc[e.rem_euclid(conductor as i64) as usize] += sign;
                    }
                    CycloNum::make(
                        conductor,
                        acc.into_iter()
                            .enumerate()
                            .filter(|(_, c)| *c != 0)
                            .map(|(e, c)| (e as i64, num_rational::BigRational::from_integer(c.into()))),
                    )
                })
                .collect()
        })
        .collect();
    let norm = raw[0][0]
        .inv()
        .map_err(|_| ConstructorError::InternalInconsistency("S'_00 = 0".into()))?;
    let s: Vec<Vec<CycloNum>> = raw
        .par_iter()
        .map(|row| row.iter().map(|x| x * &norm).collect())
        .collect();
    let dims: Vec<CycloNum> = s.iter().map(|row| row[0].clone()).collect();
    let twists = weights
        .iter()
        .map(|l| {
            let two_rho: Vec<i64> = l.iter().map(|x| x + 2).collect();
            let t = ld.inner(l, &two_rho) / (2 * kh);
            RootOfUnity::from_fraction(*t.numer(), *t.denom() as u64)
        })
        .collect();
    let name = format!("C({},{})", ld.lie_type, ld.level);
    let data = PremodularData::new(
        name.clone(),
        weights.iter().map(|l| ld.label(l)).collect(),
        dims,
        twists,
        Some(s),
    )
    .with_provenance(format!("kac-peterson type={} level={}", ld.lie_type, ld.level))
    .with_pseudounitary(true);
    let diags = data.validate();
    if !diags.is_empty() {
        return Err(ConstructorError::InternalInconsistency(format!("{name}: {diags:?}")));
    }
    if !data.is_modular()? {
        return Err(ConstructorError::InternalInconsistency(format!("{name}: singular S")));
    }
    if verify_fusion {
        data.verlinde_fusion()
            .map_err(|e| ConstructorError::InternalInconsistency(format!("{name}: {e}")))?;
    }
    Ok(data)
}

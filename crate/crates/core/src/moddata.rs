//! Modular data of a premodular category: dimensions, twists and an optional
//! unnormalised S-matrix with `S[0][0] = 1`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::cyclo::{CycloError, CycloNum, GaloisAut, IntegerForm, RootOfUnity};

pub type SMatrix = Vec<Vec<CycloNum>>;

/// Default starting precision for sign decisions.
pub const DEFAULT_BITS: u32 = 128;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Diagnostic {
    Empty,
    LengthMismatch { labels: usize, dims: usize, twists: usize },
    UnitDimension,
    UnitTwist,
    NonRealDimension { index: usize },
    ZeroDimension { index: usize },
    SMatrixShape { rows: usize, expected: usize },
    SMatrixAsymmetric { i: usize, j: usize },
    SMatrixFirstRow { j: usize },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Empty => write!(f, "no simple objects"),
            Diagnostic::LengthMismatch { labels, dims, twists } => write!(
                f,
                "length mismatch: {labels} labels, {dims} dims, {twists} twists"
            ),
            Diagnostic::UnitDimension => write!(f, "dimension of the unit is not 1"),
            Diagnostic::UnitTwist => write!(f, "twist of the unit is not 1"),
            Diagnostic::NonRealDimension { index } => write!(f, "dimension {index} is not real"),
            Diagnostic::ZeroDimension { index } => write!(f, "dimension {index} is zero"),
            Diagnostic::SMatrixShape { rows, expected } => {
                write!(f, "S-matrix is not {expected}x{expected} (row count {rows})")
            }
            Diagnostic::SMatrixAsymmetric { i, j } => write!(f, "S[{i}][{j}] != S[{j}][{i}]"),
            Diagnostic::SMatrixFirstRow { j } => write!(f, "S[0][{j}] differs from dims[{j}]"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ModDataError {
    #[error("operation needs an S-matrix")]
    MissingSMatrix,
    #[error("modular data required, but the S-matrix is singular")]
    NotModular,
    #[error("Verlinde coefficient N[{i}][{j}]^{k} is not a nonnegative integer")]
    NonIntegralFusion { i: usize, j: usize, k: usize },
    #[error("no Galois permutation matches column {column}")]
    NoGaloisPermutation { column: usize },
    #[error("invalid modular data: {0:?}")]
    Invalid(Vec<Diagnostic>),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

/// Labels, dimensions, twists and (optionally) the S-matrix of a premodular
/// category. Index 0 is the unit object.
#[derive(Clone, Debug)]
pub struct PremodularData {
    name: String,
    labels: Vec<String>,
    dims: Vec<CycloNum>,
    twists: Vec<RootOfUnity>,
    s_matrix: Option<SMatrix>,
    provenance: String,
    pseudounitary: bool,
    modular: OnceLock<bool>,
}

impl PartialEq for PremodularData {
    fn eq(&self, o: &Self) -> bool {
        self.labels == o.labels
            && self.dims == o.dims
            && self.twists == o.twists
            && self.s_matrix == o.s_matrix
    }
}

impl PremodularData {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        dims: Vec<CycloNum>,
        twists: Vec<RootOfUnity>,
        s_matrix: Option<SMatrix>,
    ) -> Self {
        PremodularData {
            name: name.into(),
            labels,
            dims,
            twists,
            s_matrix,
            provenance: String::new(),
            pseudounitary: false,
            modular: OnceLock::new(),
        }
    }

    /// Like [`PremodularData::new`] but rejects data that fails [`validate`](Self::validate).
    pub fn checked(
        name: impl Into<String>,
        labels: Vec<String>,
        dims: Vec<CycloNum>,
        twists: Vec<RootOfUnity>,
        s_matrix: Option<SMatrix>,
    ) -> Result<Self, ModDataError> {
        let d = Self::new(name, labels, dims, twists, s_matrix);
        let diags = d.validate();
        if diags.is_empty() {
            Ok(d)
        } else {
            Err(ModDataError::Invalid(diags))
        }
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = p.into();
        self
    }

    pub fn with_pseudounitary(mut self, flag: bool) -> Self {
        self.pseudounitary = flag;
        self
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn dims(&self) -> &[CycloNum] {
        &self.dims
    }
    pub fn twists(&self) -> &[RootOfUnity] {
        &self.twists
    }
    pub fn s_matrix(&self) -> Option<&SMatrix> {
        self.s_matrix.as_ref()
    }
    pub fn provenance(&self) -> &str {
        &self.provenance
    }
    pub fn pseudounitary(&self) -> bool {
        self.pseudounitary
    }
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    fn s(&self) -> Result<&SMatrix, ModDataError> {
        self.s_matrix.as_ref().ok_or(ModDataError::MissingSMatrix)
    }

    /// Every violated structural invariant, with indices. Empty means valid.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let n = self.labels.len();
        if n == 0 {
            return vec![Diagnostic::Empty];
        }
        if self.dims.len() != n || self.twists.len() != n {
            return vec![Diagnostic::LengthMismatch {
                labels: n,
                dims: self.dims.len(),
                twists: self.twists.len(),
            }];
        }
        if !self.dims[0].is_one() {
            out.push(Diagnostic::UnitDimension);
        }
        if !self.twists[0].is_one() {
            out.push(Diagnostic::UnitTwist);
        }
        for (i, d) in self.dims.iter().enumerate() {
            if d.is_zero() {
                out.push(Diagnostic::ZeroDimension { index: i });
            } else if !d.is_real() {
                out.push(Diagnostic::NonRealDimension { index: i });
            }
        }
        if let Some(s) = &self.s_matrix {
            if s.len() != n || s.iter().any(|r| r.len() != n) {
                out.push(Diagnostic::SMatrixShape { rows: s.len(), expected: n });
                return out;
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    if s[i][j] != s[j][i] {
                        out.push(Diagnostic::SMatrixAsymmetric { i, j });
                    }
                }
            }
            for j in 0..n {
                if s[0][j] != self.dims[j] {
                    out.push(Diagnostic::SMatrixFirstRow { j });
                }
            }
        }
        out
    }

    /// `dim(C) = sum_X dim(X)^2`.
    pub fn global_dim(&self) -> CycloNum {
        self.dims.iter().map(|d| d * d).sum()
    }

    /// Least common multiple of the twist orders.
    pub fn t_order(&self) -> u64 {
        self.twists.iter().fold(1, |acc, t| arith::lcm(acc, t.order()))
    }

    /// A conductor whose cyclotomic field contains all dimensions, twists and
    /// S-entries.
    pub fn field_conductor(&self) -> u64 {
        let mut n = self.t_order();
        for d in &self.dims {
            n = arith::lcm(n, d.conductor());
        }
        if let Some(s) = &self.s_matrix {
            for x in s.iter().flatten() {
                n = arith::lcm(n, x.conductor());
            }
        }
        n
    }

    /// `sum_X theta_X^n dim(X)^2`.
    pub fn gauss_sum(&self, n: i64) -> CycloNum {
        let conductor = self.field_conductor();
        let mut acc = CycloNum::zero().lift(conductor);
        for (t, d) in self.twists.iter().zip(&self.dims) {
            let d2 = d * d;
            acc = &acc + &(&d2 * &t.pow(n).to_cyclo());
        }
        acc
    }

    /// Exact determinant of the S-matrix by Gaussian elimination.
    pub fn s_determinant(&self) -> Result<CycloNum, ModDataError> {
        Ok(determinant(self.s()?.clone()))
    }

    /// Invertibility of the S-matrix, cached after the first call.
    pub fn is_modular(&self) -> Result<bool, ModDataError> {
        if let Some(v) = self.modular.get() {
            return Ok(*v);
        }
        let s = self.s()?;
        let v = if self.is_s_unitary(s) {
            true
        } else {
            !determinant(s.clone()).is_zero()
        };
        let _ = self.modular.set(v);
        Ok(v)
    }

    // S * conj(S)^T = dim(C) * I implies invertibility
    fn is_s_unitary(&self, s: &SMatrix) -> bool {
        let dim = self.global_dim();
        if dim.is_zero() {
            return false;
        }
        let (rows, conj_rows) = self.row_forms(s);
        let n = self.rank();
        (0..n).into_par_iter().all(|i| {
            (0..n).all(|j| {
                let v = rows[i].dot(&conj_rows[j]);
                if i == j {
                    v == dim
                } else {
                    v.is_zero()
                }
            })
        })
    }

    fn s_conductor(&self, s: &SMatrix) -> u64 {
        s.iter().flatten().fold(1, |m, x| arith::lcm(m, x.conductor()))
    }

    fn row_forms(&self, s: &SMatrix) -> (Vec<IntegerForm>, Vec<IntegerForm>) {
        let l = self.s_conductor(s);
        let rows = s.par_iter().map(|r| IntegerForm::new(r, l)).collect();
        let conj = s
            .par_iter()
            .map(|r| IntegerForm::new(&r.iter().map(CycloNum::conj).collect::<Vec<_>>(), l))
            .collect();
        (rows, conj)
    }

    pub fn require_modular(&self) -> Result<(), ModDataError> {
        if self.is_modular()? {
            Ok(())
        } else {
            Err(ModDataError::NotModular)
        }
    }

    /// Fusion rules from the Verlinde formula,
    /// `N_ij^k = dim(C)^-1 sum_a S_ia S_ja conj(S_ka) / S_0a`.
    ///
    /// A floating-point evaluation proposes each row `N_ij^-`; the proposal is
    /// accepted only if `sum_k N_ij^k S_ka = S_ja S_ia / S_0a` holds exactly
    /// for every `a`, which pins it down because `S` is invertible. Rows that
    /// fail are recomputed from the exact formula.
    pub fn verlinde_fusion(&self) -> Result<FusionTensor, ModDataError> {
        self.require_modular()?;
        let s = self.s()?;
        let n = self.rank();
        let inv_dims: Vec<CycloNum> = self
            .dims
            .iter()
            .map(|d| d.inv())
            .collect::<Result<_, CycloError>>()?;
        let lambda: SMatrix = (0..n)
            .map(|i| (0..n).map(|a| &s[i][a] * &inv_dims[a]).collect())
            .collect();
        let approx: Vec<Vec<(f64, f64)>> = s
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        let b = x.embed(64);
                        (b.re.mid_f64(), b.im.mid_f64())
                    })
                    .collect()
            })
            .collect();
        let dim_f = self.global_dim().embed(64).re.mid_f64();
        let l = self.s_conductor(s);
        let columns: Vec<IntegerForm> = (0..n)
            .into_par_iter()
            .map(|a| IntegerForm::new(&s.iter().map(|r| r[a].clone()).collect::<Vec<_>>(), l))
            .collect();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let rows: Vec<((usize, usize), Vec<u32>)> = pairs
            .into_par_iter()
            .map(|(i, j)| {
                let row = match propose_row(&approx, dim_f, i, j) {
                    Some(row) if row_satisfies(s, &columns, &lambda, i, j, &row) => row,
                    _ => self.exact_fusion_row(s, &inv_dims, i, j)?,
                };
                Ok(((i, j), row))
            })
            .collect::<Result<_, ModDataError>>()?;
        let mut coeffs = vec![0u32; n * n * n];
        for ((i, j), row) in rows {
            for (k, v) in row.into_iter().enumerate() {
                coeffs[(i * n + j) * n + k] = v;
                coeffs[(j * n + i) * n + k] = v;
            }
        }
        Ok(FusionTensor { rank: n, coeffs })
    }

    fn exact_fusion_row(
        &self,
        s: &SMatrix,
        inv_dims: &[CycloNum],
        i: usize,
        j: usize,
    ) -> Result<Vec<u32>, ModDataError> {
        let n = self.rank();
        let dim_inv = self.global_dim().inv()?;
        let v: Vec<CycloNum> = (0..n)
            .map(|a| &(&(&s[i][a] * &s[j][a]) * &inv_dims[a]) * &dim_inv)
            .collect();
        let l = v.iter().fold(self.s_conductor(s), |m, x| arith::lcm(m, x.conductor()));
        let v = IntegerForm::new(&v, l);
        (0..n)
            .map(|k| {
                let conj: Vec<CycloNum> = s[k].iter().map(CycloNum::conj).collect();
                let x = v.dot(&IntegerForm::new(&conj, l));
                nonnegative_integer(&x).ok_or(ModDataError::NonIntegralFusion { i, j, k })
            })
            .collect()
    }

    /// Charge conjugation `X -> X*`, read off from `S^2 = dim(C) C`.
    pub fn duality(&self) -> Result<Vec<usize>, ModDataError> {
        self.require_modular()?;
        let s = self.s()?;
        let n = self.rank();
        let dim = self.global_dim();
        let (rows, _) = self.row_forms(s);
        (0..n)
            .map(|i| {
                // S is symmetric, so column j of S is row j
                (0..n)
                    .find(|&j| rows[i].dot(&rows[j]) == dim)
                    .ok_or(ModDataError::NotModular)
            })
            .collect()
    }

    /// Positive square root of the global dimension, realised as `|tau_1|`.
    pub fn sqrt_global_dim(&self, start_bits: u32) -> Result<CycloNum, ModDataError> {
        let tau1 = self.gauss_sum(1);
        tau1.abs_exact(start_bits)?.ok_or(ModDataError::NotModular)
    }

    /// The permutation `sigma^` and signs `epsilon_sigma` attached to a Galois
    /// automorphism.
    ///
    /// `sigma^` is found by matching `sigma` applied to each ratio column
    /// `S_XY / S_0Y` against all columns. Signs refer to the normalised
    /// `s = S / sqrt(dim C)` with the positive square root, and the defining
    /// identity `sigma(s_XY) = eps(X) s_{sigma^ X, Y} = eps(Y) s_{X, sigma^ Y}`
    /// is checked exactly for all entries.
    pub fn galois_symmetry(&self, sigma: &GaloisAut) -> Result<GaloisSymmetry, ModDataError> {
        self.require_modular()?;
        let s = self.s()?;
        let n = self.rank();
        let root_dim = self.sqrt_global_dim(DEFAULT_BITS)?;
        let field = arith::lcm(self.field_conductor(), root_dim.conductor());
        let sigma = sigma.lift(arith::lcm(sigma.conductor(), field));
        let ratio: SMatrix = (0..n)
            .map(|y| {
                let inv = self.dims[y].inv()?;
                Ok((0..n).map(|x| &s[x][y] * &inv).collect())
            })
            .collect::<Result<_, CycloError>>()?;
        let mut perm = Vec::with_capacity(n);
        for y in 0..n {
            let image: Vec<CycloNum> = ratio[y].iter().map(|v| sigma.apply(v)).collect();
            let target = (0..n)
                .find(|&z| ratio[z] == image)
                .ok_or(ModDataError::NoGaloisPermutation { column: y })?;
            perm.push(target);
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if std::mem::replace(&mut seen[p], true) {
                return Err(ModDataError::NoGaloisPermutation { column: p });
            }
        }
        // c = sqrt(D) / sigma(sqrt(D)) turns sigma(S) into sigma(s) * sqrt(D)
        let c = root_dim.checked_div(&sigma.apply(&root_dim))?;
        let mut signs = Vec::with_capacity(n);
        for x in 0..n {
            let lhs = &sigma.apply(&self.dims[x]) * &c;
            let rhs = &self.dims[perm[x]];
            let sign = if lhs == *rhs {
                1
            } else if lhs == -rhs {
                -1
            } else {
                return Err(ModDataError::NoGaloisPermutation { column: x });
            };
            signs.push(sign);
        }
        let ok = (0..n).into_par_iter().all(|x| {
            (0..n).all(|y| {
                let lhs = &sigma.apply(&s[x][y]) * &c;
                let by_row = signed(&s[perm[x]][y], signs[x]);
                let by_col = signed(&s[x][perm[y]], signs[y]);
                lhs == by_row && lhs == by_col
            })
        });
        if !ok {
            return Err(ModDataError::NoGaloisPermutation { column: 0 });
        }
        Ok(GaloisSymmetry { sigma, perm, signs })
    }

    /// `C boxtimes D`: labels pair up, dimensions, twists and S-entries multiply.
    pub fn deligne_product(&self, other: &PremodularData) -> PremodularData {
        let mut labels = Vec::new();
        let mut dims = Vec::new();
        let mut twists = Vec::new();
        for (i, li) in self.labels.iter().enumerate() {
            for (j, lj) in other.labels.iter().enumerate() {
                labels.push(format!("{li}⊠{lj}"));
                dims.push(&self.dims[i] * &other.dims[j]);
                twists.push(self.twists[i].mul(&other.twists[j]));
            }
        }
        let s_matrix = match (&self.s_matrix, &other.s_matrix) {
            (Some(a), Some(b)) => {
                let (n, m) = (self.rank(), other.rank());
                Some(
                    (0..n * m)
                        .map(|r| {
                            (0..n * m)
                                .map(|c| &a[r / m][c / m] * &b[r % m][c % m])
                                .collect()
                        })
                        .collect(),
                )
            }
            _ => None,
        };
        let out = PremodularData::new(
            format!("{}⊠{}", self.name, other.name),
            labels,
            dims,
            twists,
            s_matrix,
        )
        .with_provenance(format!("product({}, {})", self.name, other.name))
        .with_pseudounitary(self.pseudounitary && other.pseudounitary);
        if let (Some(a), Some(b)) = (self.modular.get(), other.modular.get()) {
            let _ = out.modular.set(*a && *b);
        }
        out
    }

    /// The same data with the S-matrix dropped.
    pub fn without_s_matrix(&self) -> PremodularData {
        let mut out = self.clone();
        out.s_matrix = None;
        out.modular = OnceLock::new();
        out
    }

    /// `k`-fold Deligne power, `Vec` for `k = 0`.
    pub fn deligne_power(&self, k: usize) -> PremodularData {
        let mut acc = PremodularData::vec_category();
        for _ in 0..k {
            acc = acc.deligne_product(self);
        }
        acc.with_name(format!("{}^{}", self.name, k))
    }

    /// The trivial modular category.
    pub fn vec_category() -> PremodularData {
        PremodularData::new(
            "Vec",
            vec!["1".into()],
            vec![CycloNum::one()],
            vec![RootOfUnity::ONE],
            Some(vec![vec![CycloNum::one()]]),
        )
        .with_pseudounitary(true)
        .with_provenance("vec")
    }

    /// `C^rev`: inverted twists, conjugated S-matrix.
    pub fn reverse(&self) -> PremodularData {
        let out = PremodularData::new(
            format!("rev({})", self.name),
            self.labels.clone(),
            self.dims.clone(),
            self.twists.iter().map(RootOfUnity::inv).collect(),
            self.s_matrix
                .as_ref()
                .map(|s| s.iter().map(|r| r.iter().map(CycloNum::conj).collect()).collect()),
        )
        .with_provenance(format!("rev({})", self.name))
        .with_pseudounitary(self.pseudounitary);
        if let Some(m) = self.modular.get() {
            let _ = out.modular.set(*m);
        }
        out
    }
}

/// On-disk layout of a category file. Key order is the field order.
#[derive(Serialize, Deserialize)]
struct CategoryFile {
    name: String,
    labels: Vec<String>,
    dims: Vec<CycloNum>,
    twists: Vec<RootOfUnity>,
    smatrix: Option<SMatrix>,
    provenance: String,
    #[serde(default)]
    pseudounitary: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed category JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid modular data: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Diagnostic>),
}

impl PremodularData {
    /// Pretty-printed category JSON with a trailing newline; deterministic.
    pub fn to_json(&self) -> String {
        let file = CategoryFile {
            name: self.name.clone(),
            labels: self.labels.clone(),
            dims: self.dims.clone(),
            twists: self.twists.clone(),
            smatrix: self.s_matrix.clone(),
            provenance: self.provenance.clone(),
            pseudounitary: self.pseudounitary,
        };
        let mut out = serde_json::to_string_pretty(&file).expect("category serialises");
        out.push('\n');
        out
    }

    /// Parses and validates category JSON.
    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let f: CategoryFile = serde_json::from_str(text)?;
        let data = PremodularData::new(f.name, f.labels, f.dims, f.twists, f.smatrix)
            .with_provenance(f.provenance)
            .with_pseudounitary(f.pseudounitary);
        let diags = data.validate();
        if diags.is_empty() {
            Ok(data)
        } else {
            Err(FormatError::Invalid(diags))
        }
    }
}

/// `sigma`, the label permutation `sigma^` and the signs `epsilon_sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisSymmetry {
    pub sigma: GaloisAut,
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
}

/// Fusion coefficients `N_ij^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTensor {
    rank: usize,
    coeffs: Vec<u32>,
}

impl FusionTensor {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.coeffs[(i * self.rank + j) * self.rank + k]
    }

    /// `N_0j^k = delta_jk` and `N_ij^k = N_ji^k`.
    pub fn satisfies_unit_and_symmetry(&self) -> bool {
        let n = self.rank;
        (0..n).all(|j| (0..n).all(|k| self.get(0, j, k) == u32::from(j == k)))
            && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.get(i, j, k) == self.get(j, i, k))))
    }

    /// `X_i (x) X_j` as `(k, multiplicity)` pairs.
    pub fn decompose(&self, i: usize, j: usize) -> Vec<(usize, u32)> {
        (0..self.rank)
            .map(|k| (k, self.get(i, j, k)))
            .filter(|(_, m)| *m > 0)
            .collect()
    }

    /// Nested `N[i][j][k]` tables.
    pub fn to_nested(&self) -> Vec<Vec<Vec<u32>>> {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.get(i, j, k)).collect()).collect())
            .collect()
    }
}

fn propose_row(approx: &[Vec<(f64, f64)>], dim: f64, i: usize, j: usize) -> Option<Vec<u32>> {
    let n = approx.len();
    let v: Vec<(f64, f64)> = (0..n)
        .map(|a| {
            let (p, q) = cmul(approx[i][a], approx[j][a]);
            let (d, _) = approx[0][a];
            (p / (d * dim), q / (d * dim))
        })
        .collect();
    (0..n)
        .map(|k| {
            let (re, im) = v.iter().zip(&approx[k]).fold((0.0, 0.0), |acc, (x, y)| {
                let t = cmul(*x, (y.0, -y.1));
                (acc.0 + t.0, acc.1 + t.1)
            });
            let r = re.round();
            ((re - r).abs() < 0.25 && im.abs() < 0.25 && r >= 0.0 && r < f64::from(u32::MAX))
                .then_some(r as u32)
        })
        .collect()
}

fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

// sum_k N_ij^k S_ka = S_ja S_ia / S_0a for all a
fn row_satisfies(
    s: &SMatrix,
    columns: &[IntegerForm],
    lambda: &SMatrix,
    i: usize,
    j: usize,
    row: &[u32],
) -> bool {
    let weights: Vec<i64> = row.iter().map(|&m| i64::from(m)).collect();
    columns
        .iter()
        .enumerate()
        .all(|(a, col)| col.combination(&weights) == &s[j][a] * &lambda[i][a])
}

fn signed(x: &CycloNum, sign: i8) -> CycloNum {
    if sign < 0 {
        -x
    } else {
        x.clone()
    }
}

fn nonnegative_integer(x: &CycloNum) -> Option<u32> {
    let q = x.as_scalar()?;
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    q.to_integer().to_u32()
}

/// Determinant by Gaussian elimination over `Q(zeta)`.
pub fn determinant(mut m: SMatrix) -> CycloNum {
    let n = m.len();
    let mut det = CycloNum::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return CycloNum::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det = &det * &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        let pivot_row = m[c].clone();
        m[c + 1..].par_iter_mut().for_each(|row| {
            if row[c].is_zero() {
                return;
            }
            let f = &row[c] * &inv;
            for j in c..n {
                row[j] = &row[j] - &(&f * &pivot_row[j]);
            }
        });
    }
    det
}

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::ConstructorError;

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
}

/// On-disk group description: a full table or permutation generators in
/// cycle notation on `{1..degree}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table { table: Vec<Vec<usize>> },
    Permutations { degree: usize, generators: Vec<String> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, ConstructorError> {
        match self {
            GroupSpec::Table { table } => FiniteGroup::from_table(table.clone()),
            GroupSpec::Permutations { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|g| parse_cycles(g, *degree))
                    .collect::<Result<Vec<_>, _>>()?;
                FiniteGroup::from_permutations(*degree, &gens)
            }
        }
    }
}

impl FiniteGroup {
    /// Checks closure, identity, inverses and associativity.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, ConstructorError> {
        let n = table.len();
        if n == 0 || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(ConstructorError::InvalidGroup("table is not square over 0..n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| ConstructorError::InvalidGroup("no identity".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| table[x][y] == identity && table[y][x] == identity) {
                return Err(ConstructorError::InvalidGroup(format!("element {x} has no inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(ConstructorError::InvalidGroup(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, identity })
    }

    /// The group generated by permutations of `{0..degree}` (images as vectors).
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<Self, ConstructorError> {
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        let table = elems
            .iter()
            .map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect())
            .collect();
        Ok(FiniteGroup { table, identity: 0 })
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// `x^n` by square-and-multiply; negative `n` uses `x^{-1}`.
    pub fn pow(&self, x: usize, n: i64) -> usize {
        let mut base = if n < 0 { self.inverse(x) } else { x };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self, x: usize) -> usize {
        (0..self.order())
            .find(|&y| self.mul(x, y) == self.identity)
            .expect("validated group")
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

// (a then b): i -> b[a[i]]
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&i| b[i]).collect()
}

/// Parses cycle notation such as `"(1 2 3)(4 5)"` on `{1..degree}` into an
/// image vector on `{0..degree}`.
pub fn parse_cycles(s: &str, degree: usize) -> Result<Vec<usize>, ConstructorError> {
    let bad = |m: &str| ConstructorError::InvalidGroup(format!("bad permutation {s:?}: {m}"));
    let mut perm: Vec<usize> = (0..degree).collect();
    let mut seen = vec![false; degree];
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let end = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let points = body[..end]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("not a number")))
            .collect::<Result<Vec<_>, _>>()?;
        for (k, &p) in points.iter().enumerate() {
            if p == 0 || p > degree {
                return Err(bad("point out of range"));
            }
            if std::mem::replace(&mut seen[p - 1], true) {
                return Err(bad("repeated point"));
            }
            perm[p - 1] = points[(k + 1) % points.len()] - 1;
        }
        rest = body[end + 1..].trim_start();
    }
    Ok(perm)
}

/// `tau_n(Z(Vec_G)) = |G| * #{x : x^n = e}`.
pub fn double_gauss_sum(g: &FiniteGroup, n: i64) -> u64 {
    let count = (0..g.order()).filter(|&x| g.pow(x, n) == g.identity()).count();
    (g.order() * count) as u64
}

//! Bundled data that is stored rather than computed: the Drinfeld double of
//! S3, small permutation groups, the H27 Gauss sum pair and reference rows for
//! Tambara-Yamagami categories.

use crate::constructors::{ConstructorError, FiniteGroup, GroupSpec};
use crate::cyclo::{CycloNum, RootOfUnity};
use crate::moddata::PremodularData;

/// Modular data of `Z(Vec_S3)`, written out from the centralizer character
/// tables of S3. Labels follow the usual A..H naming: A, B, C are the
/// identity class with the trivial, sign and 2-dimensional characters; D, E
/// the transpositions with the two characters of `Z2`; F, G, H the 3-cycles
/// with the characters `1, w, w^2` of `Z3`.
pub fn drinfeld_double_s3() -> PremodularData {
    let labels = ["A", "B", "C", "D", "E", "F", "G", "H"].map(String::from).to_vec();
    let dims = [1, 1, 2, 3, 3, 2, 2, 2].map(CycloNum::from_int).to_vec();
    let twists = vec![
        RootOfUnity::ONE,
        RootOfUnity::ONE,
        RootOfUnity::ONE,
        RootOfUnity::ONE,
        RootOfUnity::new(2, 1),
        RootOfUnity::ONE,
        RootOfUnity::new(3, 1),
        RootOfUnity::new(3, 2),
    ];
    let s: [[i64; 8]; 8] = [
        [1, 1, 2, 3, 3, 2, 2, 2],
        [1, 1, 2, -3, -3, 2, 2, 2],
        [2, 2, 4, 0, 0, -2, -2, -2],
        [3, -3, 0, 3, -3, 0, 0, 0],
        [3, -3, 0, -3, 3, 0, 0, 0],
        [2, 2, -2, 0, 0, 4, -2, -2],
        [2, 2, -2, 0, 0, -2, -2, 4],
        [2, 2, -2, 0, 0, -2, 4, -2],
    ];
    let s = s.iter().map(|row| row.iter().map(|&v| CycloNum::from_int(v)).collect()).collect();
    PremodularData::new("D(S3)", labels, dims, twists, Some(s))
        .with_provenance("fixture")
        .with_pseudounitary(true)
}

pub fn s3_spec() -> GroupSpec {
    GroupSpec::Permutations { degree: 3, generators: vec!["(1 2 3)".into(), "(1 2)".into()] }
}

pub fn d8_spec() -> GroupSpec {
    GroupSpec::Permutations { degree: 4, generators: vec!["(1 2 3 4)".into(), "(1 3)".into()] }
}

pub fn q8_spec() -> GroupSpec {
    GroupSpec::Permutations {
        degree: 8,
        generators: vec!["(1 2 3 4)(5 6 7 8)".into(), "(1 5 3 7)(2 8 4 6)".into()],
    }
}

/// Named group fixture: `S3`, `D8` or `Q8`.
pub fn group(name: &str) -> Option<Result<FiniteGroup, ConstructorError>> {
    let spec = match name.to_ascii_uppercase().as_str() {
        "S3" => s3_spec(),
        "D8" => d8_spec(),
        "Q8" => q8_spec(),
        _ => return None,
    };
    Some(spec.build())
}

/// `tau_3 = 81(5 + 4 zeta_3^2)` for the Drinfeld center of the Kac algebra
/// H27; `tau_{-3}` is its conjugate.
pub fn h27_tau3() -> CycloNum {
    let w2 = CycloNum::zeta_pow(3, 2);
    &(&CycloNum::from_int(5) + &(&CycloNum::from_int(4) * &w2)) * &CycloNum::from_int(81)
}

/// Dimension of `Z(Rep H27)`.
pub const H27_DIM: u64 = 729;

/// One row of the Tambara-Yamagami Gauss sum table, `tau_1..tau_8`.
#[derive(Clone, Copy, Debug)]
pub struct TyRow {
    pub group: &'static str,
    pub taus: [u64; 8],
    /// Rows for Kac algebras are quoted, not recomputed here.
    pub reference_only: bool,
}

pub const TY_TABLE: [TyRow; 4] = [
    TyRow { group: "D8", taus: [8, 48, 8, 64, 8, 48, 8, 64], reference_only: false },
    TyRow { group: "Q8", taus: [8, 16, 8, 64, 8, 16, 8, 64], reference_only: false },
    TyRow { group: "K", taus: [8, 48, 8, 32, 8, 48, 8, 64], reference_only: true },
    TyRow { group: "K_u", taus: [8, 16, 8, 32, 8, 16, 8, 64], reference_only: true },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::double_gauss_sum;

    #[test]
    fn ds3_is_valid_modular_and_integral() {
        let d = drinfeld_double_s3();
        assert!(d.validate().is_empty());
        assert_eq!(d.global_dim(), CycloNum::from_int(36));
        assert!(d.is_modular().unwrap());
        let f = d.verlinde_fusion().unwrap();
        assert!(f.satisfies_unit_and_symmetry());
        // C x C = A + B + C
        assert_eq!((0..8).map(|k| f.get(2, 2, k)).collect::<Vec<_>>(), vec![1, 1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn ds3_matches_counting() {
        let d = drinfeld_double_s3();
        let g = group("S3").unwrap().unwrap();
        for n in 1..=12 {
            assert_eq!(d.gauss_sum(n), CycloNum::from_int(double_gauss_sum(&g, n) as i64), "n = {n}");
        }
    }

    #[test]
    fn group_orders() {
        for (name, order) in [("S3", 6), ("D8", 8), ("Q8", 8)] {
            assert_eq!(group(name).unwrap().unwrap().order(), order);
        }
        assert!(group("A5").is_none());
    }

    #[test]
    fn h27_norm() {
        let t = h27_tau3();
        assert_eq!(&t * &t.conj(), CycloNum::from_int(81 * 81 * 21));
    }
}

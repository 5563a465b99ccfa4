//! Compiled-in example algebras and orders: the symmetric-group ring `s3`,
//! the cyclic group ring `c2`, the infinite-dihedral order `dihedral` over
//! `GF(q)[T]`, the matrix order `mat2`, and the Gaussian-integer-style
//! order `gauss` with `i^2 = -1`.

use num::BigInt;
use std::collections::BTreeMap;

use crate::algebra::descr::{AlgebraDescription, CoeffLit};
use crate::algebra::{GroupTable, ScAlgebra};
use crate::coeff::{BaseRing, FiniteField};
use crate::ring::Ring;
use crate::{Error, Result};

/// `S_3` as generators `a` (order 2) and `b` (order 3) with `b a = a b^2`;
/// element `a^i b^j` has index `3 i + j`, labels `e b b2 a ab ab2`.
pub fn s3_table() -> GroupTable {
    let labels = ["e", "b", "b2", "a", "ab", "ab2"];
    let mut mul = vec![vec![0usize; 6]; 6];
    for i in 0..2 {
        for j in 0..3 {
            for k in 0..2 {
                for l in 0..3 {
                    // (a^i b^j)(a^k b^l) = a^{i+k} b^{j 2^k + l}
                    let ii = (i + k) % 2;
                    let jj = (j * if k == 1 { 2 } else { 1 } + l) % 3;
                    mul[3 * i + j][3 * k + l] = 3 * ii + jj;
                }
            }
        }
    }
    GroupTable { labels: labels.iter().map(|s| s.to_string()).collect(), mul }
}

/// The cyclic group of order `n`, labels `e g g2 ...`.
pub fn cyclic_table(n: usize) -> GroupTable {
    assert!(n >= 1);
    let labels = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g{}", i),
        })
        .collect();
    let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupTable { labels, mul }
}

/// The Klein four-group, labels `e a b ab`.
pub fn klein_table() -> GroupTable {
    let labels = ["e", "a", "b", "ab"].iter().map(|s| s.to_string()).collect();
    let mul = (0..4usize).map(|i| (0..4usize).map(|j| i ^ j).collect()).collect();
    GroupTable { labels, mul }
}

/// A field viewed as a rank-1 algebra over itself.
pub fn field_as_algebra(f: FiniteField) -> ScAlgebra<FiniteField> {
    let one = f.one();
    ScAlgebra::build(f, vec!["e".into()], vec![one.clone()], vec![one]).expect("rank-1 algebra")
}

/// `F_q x F_q` with basis `u, v` (the two idempotent coordinates).
pub fn product_of_two_fields(f: FiniteField) -> ScAlgebra<FiniteField> {
    let (z, o) = (f.zero(), f.one());
    // u*u = u, u*v = 0, v*u = 0, v*v = v; unit = u + v
    let tensor = vec![
        o.clone(), z.clone(), // u*u
        z.clone(), z.clone(), // u*v
        z.clone(), z.clone(), // v*u
        z.clone(), o.clone(), // v*v
    ];
    ScAlgebra::build(f.clone(), vec!["u".into(), "v".into()], tensor, vec![o.clone(), o]).expect("product algebra")
}

fn int(n: i64) -> CoeffLit {
    CoeffLit::Int(BigInt::from(n))
}

fn tvar() -> CoeffLit {
    CoeffLit::Poly(vec![BigInt::from(0), BigInt::from(1)])
}

fn group_description(table: &GroupTable, base: BaseRing) -> AlgebraDescription {
    let n = table.labels.len();
    let mut products = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            products.insert((i, j), vec![(int(1), table.mul[i][j])]);
        }
    }
    AlgebraDescription { base, labels: table.labels.clone(), products }
}

/// Description of a named preset over the given base ring.
///
/// `s3` and `c2` are group rings usable over any base; `mat2` is the 2x2
/// matrix order with basis `e x y w` (`e` the identity, `w = E22`);
/// `gauss` is the rank-2 order with `i^2 = -1`; `dihedral` is the rank-4
/// order over `GF(q)[T]` with basis `e b a ab`, relations
/// `b^2 = T b - 1`, `(ab)^2 = 1` and `b a = T a - ab` (it requires an odd
/// polynomial base).
pub fn preset_description(name: &str, base: BaseRing) -> Result<AlgebraDescription> {
    match name {
        "s3" => Ok(group_description(&s3_table(), base)),
        "c2" => Ok(group_description(&cyclic_table(2), base)),
        "mat2" => {
            let labels = vec!["e".into(), "x".into(), "y".into(), "w".into()];
            let mut products = BTreeMap::new();
            for j in 0..4 {
                products.insert((0, j), vec![(int(1), j)]);
                if j != 0 {
                    products.insert((j, 0), vec![(int(1), j)]);
                }
            }
            // x = E12, y = E21, w = E22
            products.insert((1, 2), vec![(int(1), 0), (int(-1), 3)]); // x y = E11 = e - w
            products.insert((1, 3), vec![(int(1), 1)]); // x w = x
            products.insert((2, 1), vec![(int(1), 3)]); // y x = w
            products.insert((3, 2), vec![(int(1), 2)]); // w y = y
            products.insert((3, 3), vec![(int(1), 3)]); // w w = w
            Ok(AlgebraDescription { base, labels, products })
        }
        "gauss" => {
            let labels = vec!["e".into(), "i".into()];
            let mut products = BTreeMap::new();
            products.insert((0, 0), vec![(int(1), 0)]);
            products.insert((0, 1), vec![(int(1), 1)]);
            products.insert((1, 0), vec![(int(1), 1)]);
            products.insert((1, 1), vec![(int(-1), 0)]);
            Ok(AlgebraDescription { base, labels, products })
        }
        "dihedral" => {
            let BaseRing::PolyRing(f) = &base else {
                return Err(Error::Unsupported(
                    "the dihedral preset is an order over GF(q)[T]".into(),
                ));
            };
            if f.characteristic() == 2 {
                return Err(Error::Unsupported(
                    "the dihedral preset inverts 2 and needs an odd base".into(),
                ));
            }
            let labels = vec!["e".into(), "b".into(), "a".into(), "ab".into()];
            let mut products = BTreeMap::new();
            for j in 0..4 {
                products.insert((0, j), vec![(int(1), j)]);
                if j != 0 {
                    products.insert((j, 0), vec![(int(1), j)]);
                }
            }
            products.insert((1, 1), vec![(int(-1), 0), (tvar(), 1)]); // b b = -1 + T b
            products.insert((1, 2), vec![(tvar(), 2), (int(-1), 3)]); // b a = T a - ab
            products.insert((1, 3), vec![(int(1), 2)]); // b ab = a
            products.insert((2, 1), vec![(int(1), 3)]); // a b = ab
            products.insert((2, 2), vec![(int(1), 0)]); // a a = 1
            products.insert((2, 3), vec![(int(1), 1)]); // a ab = b
            products.insert((3, 1), vec![(int(-1), 2), (tvar(), 3)]); // ab b = -a + T ab
            products.insert((3, 2), vec![(tvar(), 0), (int(-1), 1)]); // ab a = T - b
            products.insert((3, 3), vec![(int(1), 0)]); // ab ab = 1
            Ok(AlgebraDescription { base, labels, products })
        }
        other => Err(Error::Unsupported(format!("unknown preset `{}`", other))),
    }
}

pub const PRESET_NAMES: &[&str] = &["s3", "c2", "mat2", "gauss", "dihedral"];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::make_field;

    #[test]
    fn s3_table_is_a_group_of_order_six() {
        let t = s3_table();
        assert_eq!(t.check().unwrap(), 0);
        // b a = a b^2: indices b = 1, a = 3, ab2 = 5
        assert_eq!(t.mul[1][3], 5);
    }

    #[test]
    fn klein_and_cyclic_tables_are_groups() {
        assert!(klein_table().check().is_ok());
        for n in 1..=4 {
            assert!(cyclic_table(n).check().is_ok());
        }
    }

    #[test]
    fn all_presets_build_over_a_valid_base() {
        let f3 = make_field(3, 1).unwrap();
        for name in ["s3", "c2", "mat2", "gauss"] {
            let d = preset_description(name, BaseRing::Integers).unwrap();
            d.build_int().unwrap();
            let d = preset_description(name, BaseRing::FiniteField(f3.clone())).unwrap();
            d.build_fq().unwrap();
        }
        let d = preset_description("dihedral", BaseRing::PolyRing(f3.clone())).unwrap();
        d.build_poly().unwrap();
        assert!(preset_description("dihedral", BaseRing::Integers).is_err());
        assert!(preset_description(
            "dihedral",
            BaseRing::PolyRing(make_field(2, 1).unwrap())
        )
        .is_err());
        assert!(preset_description("nope", BaseRing::Integers).is_err());
    }

    #[test]
    fn mat2_preset_is_the_matrix_algebra() {
        let f5 = make_field(5, 1).unwrap();
        let d = preset_description("mat2", BaseRing::FiniteField(f5)).unwrap();
        let a = d.build_fq().unwrap();
        let w = crate::structure::wedderburn(&a);
        assert_eq!(w.radical.dim(), 0);
        assert_eq!(w.blocks.len(), 1);
        assert_eq!((w.blocks[0].r, w.blocks[0].n), (2, 1));
    }
}

//! The three supported Jacobson base rings — `Z`, `GF(q)` and `GF(q)[T]` —
//! and the enumeration of their maximal ideals.
//!
//! Every maximal ideal of such a base has a finite residue field, which is
//! what makes the closed-point census (and hence every zeta computation)
//! a finite, exact procedure.

use crate::coeff::fq::{is_prime_u64, FiniteField};
use crate::coeff::poly::{self, Poly};
use crate::ring::Ring;
use crate::{Error, Result};

/// One of the supported coefficient base rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseRing {
    Integers,
    FiniteField(FiniteField),
    /// `GF(q)[T]` with the given coefficient field.
    PolyRing(FiniteField),
}

impl BaseRing {
    pub fn describe(&self) -> String {
        let gf = |f: &FiniteField| {
            if f.degree() == 1 {
                format!("GF({})", f.characteristic())
            } else {
                format!("GF({}^{})", f.characteristic(), f.degree())
            }
        };
        match self {
            BaseRing::Integers => "Z".into(),
            BaseRing::FiniteField(f) => gf(f),
            BaseRing::PolyRing(f) => format!("{}[T]", gf(f)),
        }
    }
}

/// A maximal ideal of a base ring, together with its residue field size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseMaxIdeal {
    /// `(p)` in `Z`.
    Prime(u64),
    /// `(0)` in a finite field.
    Zero,
    /// `(f)` in `GF(q)[T]` for a monic irreducible `f` (coefficients of the
    /// field attached to the ideal's base).
    Poly(Poly<FiniteField>),
}

impl BaseMaxIdeal {
    /// `N(m)`: the size of the residue field of the ideal inside `base`.
    pub fn residue_size(&self, base: &BaseRing) -> u128 {
        match (self, base) {
            (BaseMaxIdeal::Prime(p), BaseRing::Integers) => *p as u128,
            (BaseMaxIdeal::Zero, BaseRing::FiniteField(f)) => f.size(),
            (BaseMaxIdeal::Poly(f), BaseRing::PolyRing(k)) => k.size().pow((f.len() - 1) as u32),
            _ => panic!("ideal does not belong to this base ring"),
        }
    }

    pub fn describe(&self, base: &BaseRing) -> String {
        match (self, base) {
            (BaseMaxIdeal::Prime(p), _) => p.to_string(),
            (BaseMaxIdeal::Zero, _) => "0".into(),
            (BaseMaxIdeal::Poly(f), BaseRing::PolyRing(k)) => poly::fmt_poly(k, f, "T"),
            _ => panic!("ideal does not belong to this base ring"),
        }
    }
}

/// Every maximal ideal of `base` with residue size within `bound`, emitted
/// in increasing `N(m)`, ties broken by the canonical polynomial order.
///
/// For `Z` the bound caps the prime `p`; for `GF(q)[T]` it caps `deg f`.
/// The stream is an independent cursor: iterating it has no shared state.
pub fn base_max_ideals(base: &BaseRing, bound: u64) -> Box<dyn Iterator<Item = BaseMaxIdeal>> {
    assert!(bound >= 1, "bound must be at least 1");
    match base {
        BaseRing::Integers => Box::new((2..=bound).filter(is_prime_ref).map(BaseMaxIdeal::Prime)),
        BaseRing::FiniteField(_) => Box::new(std::iter::once(BaseMaxIdeal::Zero)),
        BaseRing::PolyRing(field) => {
            let field = field.clone();
            Box::new((1..=bound as usize).flat_map(move |d| {
                poly::irreducibles(&field, d).into_iter().map(BaseMaxIdeal::Poly)
            }))
        }
    }
}

fn is_prime_ref(n: &u64) -> bool {
    is_prime_u64(*n)
}

/// `F_{p^k}` presented by the lexicographically smallest monic irreducible
/// defining polynomial.
pub fn make_field(p: u64, k: usize) -> Result<FiniteField> {
    FiniteField::new(p, k)
}

/// Reduce an integer structure constant into a prime field.
pub fn int_mod_p(n: &num::BigInt, field: &FiniteField) -> crate::coeff::fq::FFElem {
    use num::ToPrimitive;
    let p = num::BigInt::from(field.characteristic());
    let r = ((n % &p) + &p) % &p;
    field.elem(&[r.to_u64().expect("residue fits in u64")])
}

/// Residue field `GF(q)[T]/(f)` of a maximal ideal of `GF(q)[T]`, together
/// with the reduction map for ring elements.
///
/// For a prime coefficient field the residue field is presented directly as
/// `F_p[T]/(f)`. For an extension coefficient field `F_{p^k}` the quotient
/// is flattened to a prime-field presentation `F_p[y]/(m)` by choosing a
/// primitive element; the returned closure performs the rewriting.
pub struct PolyResidue {
    pub field: FiniteField,
    reduce_fn: Box<dyn Fn(&Poly<FiniteField>) -> crate::coeff::fq::FFElem + Send + Sync>,
}

impl PolyResidue {
    pub fn reduce(&self, a: &Poly<FiniteField>) -> crate::coeff::fq::FFElem {
        (self.reduce_fn)(a)
    }
}

pub fn poly_residue(coeff_field: &FiniteField, modulus: &Poly<FiniteField>) -> PolyResidue {
    let e = modulus.len() - 1;
    assert!(e >= 1, "modulus must be non-constant");
    if coeff_field.degree() == 1 {
        // F_p[T]/(f) is already in prime-field presentation.
        let flat: Vec<u64> = modulus.iter().map(|c| c[0]).collect();
        let field = if e == 1 {
            coeff_field.clone()
        } else {
            FiniteField::with_modulus(coeff_field.characteristic(), flat).expect("fiber modulus irreducible")
        };
        let cf = coeff_field.clone();
        let m = modulus.clone();
        let fld = field.clone();
        let reduce_fn = move |a: &Poly<FiniteField>| -> crate::coeff::fq::FFElem {
            let r = poly::rem(&cf, a, &m);
            let mut out = vec![0u64; fld.degree()];
            for (i, c) in r.iter().enumerate() {
                out[i] = c[0];
            }
            out
        };
        return PolyResidue { field, reduce_fn: Box::new(reduce_fn) };
    }
    flatten_tower(coeff_field, modulus)
}

/// Flatten `F_{p^k}[T]/(f)` (deg f = e, f irreducible) to a prime-field
/// presentation of `F_{p^{ke}}`.
///
/// The quotient is a `p^{ke}`-element field with `F_p`-basis
/// `x^i T^j (i < k, j < e)`. A primitive element `theta` is found by a
/// deterministic scan (an element whose minimal polynomial over `F_p` has
/// degree `ke`); the change of basis to powers of `theta` is pure linear
/// algebra over `F_p`.
fn flatten_tower(coeff_field: &FiniteField, modulus: &Poly<FiniteField>) -> PolyResidue {
    use crate::linalg::Mat;
    let p = coeff_field.characteristic();
    let k = coeff_field.degree();
    let e = modulus.len() - 1;
    let n = k * e;
    let fp = FiniteField::prime_field(p).expect("characteristic is prime");

    // multiplication in the quotient, on (k, e)-coefficient grids
    let qmul = |a: &Poly<FiniteField>, b: &Poly<FiniteField>| -> Poly<FiniteField> {
        poly::rem(coeff_field, &poly::mul(coeff_field, a, b), modulus)
    };
    let to_flat = |a: &Poly<FiniteField>| -> Vec<u64> {
        let mut v = vec![0u64; n];
        for (j, c) in a.iter().enumerate() {
            for (i, &ci) in c.iter().enumerate() {
                v[j * k + i] = ci;
            }
        }
        v
    };
    let from_flat = |v: &[u64]| -> Poly<FiniteField> {
        let mut out = vec![];
        for j in 0..e {
            out.push(v[j * k..(j + 1) * k].to_vec());
        }
        poly::trim(coeff_field, out)
    };

    // scan elements in index order for a primitive one
    let total = (p as u128).pow(n as u32);
    let mut theta = None;
    'scan: for idx in 1..total {
        let mut digits = vec![0u64; n];
        let mut v = idx;
        for d in digits.iter_mut() {
            *d = (v % p as u128) as u64;
            v /= p as u128;
        }
        let cand = from_flat(&digits);
        // powers 1, theta, ..., theta^n as rows; minimal polynomial degree
        // n means the first n powers are independent
        let mut rows: Vec<Vec<u64>> = vec![];
        let mut pw: Poly<FiniteField> = vec![coeff_field.one()];
        for _ in 0..n {
            rows.push(to_flat(&pw));
            pw = qmul(&pw, &cand);
        }
        let mut m = Mat::from_rows(rows.iter().map(|r| r.iter().map(|&c| fp.elem(&[c])).collect()).collect());
        let piv = crate::linalg::rref(&fp, &mut m);
        if piv.len() == n {
            theta = Some(cand);
            break 'scan;
        }
    }
    let theta = theta.expect("a finite field has a multiplicative generator");

    // minimal polynomial of theta over F_p: theta^n as combination of lower powers
    let mut pw: Poly<FiniteField> = vec![coeff_field.one()];
    let mut rows: Vec<Vec<u64>> = vec![];
    for _ in 0..n {
        rows.push(to_flat(&pw));
        pw = qmul(&pw, &theta);
    }
    let theta_n = to_flat(&pw);
    // solve rows^T c = theta_n
    let a = Mat::from_rows(
        (0..n)
            .map(|i| (0..n).map(|j| fp.elem(&[rows[j][i]])).collect())
            .collect(),
    );
    let b: Vec<_> = theta_n.iter().map(|&c| fp.elem(&[c])).collect();
    let sol = crate::linalg::solve(&fp, &a, &b).expect("powers of theta span the field");
    let mut min_poly: Vec<u64> = sol.iter().map(|c| {
        let v = c[0];
        if v == 0 {
            0
        } else {
            p - v
        }
    }).collect();
    min_poly.push(1);
    let field = FiniteField::with_modulus(p, min_poly).expect("minimal polynomial of a primitive element is irreducible");

    // rewriting matrix: inverse of the powers-of-theta matrix
    let basis_in_theta = {
        let pow_rows = Mat::from_rows(
            rows.iter().map(|r| r.iter().map(|&c| fp.elem(&[c])).collect()).collect(),
        );
        crate::linalg::invert(&fp, &pow_rows).expect("power basis is invertible")
    };

    let cf = coeff_field.clone();
    let m = modulus.clone();
    let fld = field.clone();
    let reduce_fn = move |a: &Poly<FiniteField>| -> crate::coeff::fq::FFElem {
        let r = poly::rem(&cf, a, &m);
        let mut flat = vec![0u64; n];
        for (j, c) in r.iter().enumerate() {
            for (i, &ci) in c.iter().enumerate() {
                flat[j * k + i] = ci;
            }
        }
        // coordinates w.r.t. theta powers: flat * inv(power matrix)
        let mut out = vec![0u64; n];
        for (i, oi) in out.iter_mut().enumerate() {
            let mut acc: u128 = 0;
            for (j, &fj) in flat.iter().enumerate() {
                let mij = basis_in_theta.at(j, i)[0];
                acc = (acc + fj as u128 * mij as u128) % p as u128;
            }
            *oi = acc as u64;
        }
        debug_assert_eq!(out.len(), fld.degree());
        out
    };
    PolyResidue { field, reduce_fn: Box::new(reduce_fn) }
}

impl std::fmt::Display for BaseRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.describe())
    }
}

pub fn parse_base(s: &str) -> Result<BaseRing> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "Z" {
        return Ok(BaseRing::Integers);
    }
    let (inner, poly_ring) = if let Some(stripped) = s.strip_suffix("[T]") {
        (stripped, true)
    } else {
        (s.as_str(), false)
    };
    let inner = inner
        .strip_prefix("GF(")
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Unsupported(format!("unknown base ring `{}`", s)))?;
    let (p, k) = match inner.split_once('^') {
        Some((p, k)) => (
            p.parse::<u64>().map_err(|_| Error::Unsupported(format!("bad characteristic in `{}`", s)))?,
            k.parse::<usize>().map_err(|_| Error::Unsupported(format!("bad degree in `{}`", s)))?,
        ),
        None => {
            let q = inner
                .parse::<u64>()
                .map_err(|_| Error::Unsupported(format!("bad field size in `{}`", s)))?;
            // accept GF(q) for prime powers: factor q = p^k
            if q < 2 {
                return Err(Error::Unsupported(format!("GF({}) is not a prime power", q)));
            }
            let mut p = 2;
            while p * p <= q && q % p != 0 {
                p += 1;
            }
            if q % p != 0 {
                p = q; // q is prime
            }
            let mut k = 0;
            let mut w = q;
            while w > 1 {
                if w % p != 0 {
                    return Err(Error::Unsupported(format!("GF({}) is not a prime power", q)));
                }
                w /= p;
                k += 1;
            }
            (p, k)
        }
    };
    let field = make_field(p, k)?;
    Ok(if poly_ring { BaseRing::PolyRing(field) } else { BaseRing::FiniteField(field) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_up_to_ten() {
        let ids: Vec<_> = base_max_ideals(&BaseRing::Integers, 10).collect();
        assert_eq!(
            ids,
            vec![2, 3, 5, 7].into_iter().map(BaseMaxIdeal::Prime).collect::<Vec<_>>()
        );
    }

    #[test]
    fn degree_one_ideals_of_f3_t() {
        let f3 = make_field(3, 1).unwrap();
        let base = BaseRing::PolyRing(f3.clone());
        let ids: Vec<_> = base_max_ideals(&base, 1).collect();
        let names: Vec<_> = ids.iter().map(|m| m.describe(&base)).collect();
        assert_eq!(names, vec!["T", "T+1", "T+2"]);
        for m in &ids {
            assert_eq!(m.residue_size(&base), 3);
        }
    }

    #[test]
    fn field_base_has_single_zero_ideal() {
        let f5 = make_field(5, 1).unwrap();
        let base = BaseRing::FiniteField(f5);
        let ids: Vec<_> = base_max_ideals(&base, 100).collect();
        assert_eq!(ids, vec![BaseMaxIdeal::Zero]);
        assert_eq!(ids[0].residue_size(&base), 5);
    }

    #[test]
    fn max_ideals_monotone_in_residue_size_and_reproducible() {
        let f2 = make_field(2, 1).unwrap();
        let base = BaseRing::PolyRing(f2);
        let a: Vec<_> = base_max_ideals(&base, 5).collect();
        let b: Vec<_> = base_max_ideals(&base, 5).collect();
        assert_eq!(a, b);
        let sizes: Vec<_> = a.iter().map(|m| m.residue_size(&base)).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sizes, sorted);
    }

    #[test]
    fn parse_base_forms() {
        assert_eq!(parse_base("Z").unwrap(), BaseRing::Integers);
        assert_eq!(parse_base("GF(9)").unwrap(), BaseRing::FiniteField(make_field(3, 2).unwrap()));
        assert_eq!(parse_base("GF(3^2)").unwrap(), BaseRing::FiniteField(make_field(3, 2).unwrap()));
        assert_eq!(parse_base("GF(5)[T]").unwrap(), BaseRing::PolyRing(make_field(5, 1).unwrap()));
        assert!(parse_base("GF(6)").is_err());
    }

    #[test]
    fn residue_of_prime_base_fiber() {
        // F_3[T]/(T^2+1): nine elements
        let f3 = make_field(3, 1).unwrap();
        let modulus = vec![f3.elem(&[1]), f3.zero(), f3.one()];
        let res = poly_residue(&f3, &modulus);
        assert_eq!(res.field.size(), 9);
        // T^2 reduces to -1 = 2
        let t2 = vec![f3.zero(), f3.zero(), f3.one()];
        assert_eq!(res.reduce(&t2), res.field.elem(&[2, 0]));
    }

    #[test]
    fn residue_of_extension_base_fiber_flattens() {
        // GF(4)[T]/(T^2 + T + x) where x generates GF(4); the quotient is GF(16)
        let f4 = make_field(2, 2).unwrap();
        let modulus = vec![f4.gen(), f4.one(), f4.one()];
        assert!(poly::is_irreducible(&f4, &modulus));
        let res = poly_residue(&f4, &modulus);
        assert_eq!(res.field.size(), 16);
        // the reduction map is a ring homomorphism on a couple of samples
        let a = vec![f4.gen(), f4.one()]; // x + T
        let b = vec![f4.one(), f4.gen()]; // 1 + xT
        let prod = poly::mul(&f4, &a, &b);
        let lhs = res.reduce(&prod);
        let rhs = res.field.mul(&res.reduce(&a), &res.reduce(&b));
        assert_eq!(lhs, rhs);
    }
}

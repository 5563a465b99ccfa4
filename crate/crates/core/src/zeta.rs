//! Hasse zeta functions of orders as Euler products over closed points:
//! truncated exact power series in `u = q^{-s}` for function-field bases,
//! Dirichlet coefficient prefixes for base `Z`, comparison against rational
//! functions, and the norm-compatibility check along morphisms.
//!
//! Every closed point `x` with residue algebra `M_r(F_{q'})` contributes
//! the factor `(1 - N(x)^{-s})^{-1}` with `N(x) = q'`. Orders are finite
//! over their base by construction, so every truncation here is a finite
//! exact computation. Fibers are enumerated in parallel; the series product
//! is commutative and associative and factors are sorted before emission,
//! so the output is identical for every schedule.

use num::{BigInt, One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::coeff::{base_max_ideals, BaseMaxIdeal, BaseRing, FiniteField};
use crate::order::Order;
use crate::procesi::{self, AlgMorphism};
use crate::structure;
use crate::{Error, Result};

/// One Euler factor `(1 - u^degree)^{-multiplicity}` (function-field base)
/// or `(1 - p^{-degree s})^{-multiplicity}` (base `Z` at `p`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactor {
    pub degree: usize,
    pub multiplicity: usize,
}

/// A truncated exact power series in `u = q^{-s}`, with the list of
/// contributing fibers.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaSeries {
    pub truncation: usize,
    /// `coeffs[n]` is the coefficient of `u^n`; `coeffs[0] = 1`.
    pub coeffs: Vec<BigInt>,
    /// `(fiber description, factors)`, in enumeration order.
    pub provenance: Vec<(String, Vec<EulerFactor>)>,
}

/// Dirichlet coefficients `a_1 .. a_N` of the zeta function of an order
/// over `Z`, with the per-prime Euler factor lists.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletPrefix {
    pub len: usize,
    /// `coeffs[n - 1] = a_n`.
    pub coeffs: Vec<BigInt>,
    pub local_factors: Vec<(u64, Vec<EulerFactor>)>,
}

/// Euler factors of a single fiber algebra: one factor per maximal
/// two-sided ideal. `fiber_degree` is the degree of the fiber's base ideal
/// over the ground ring (so a point with center-residue `F_{(q^e)^n}`
/// contributes degree `e * n` in `u = q^{-s}`).
pub fn local_zeta(fiber: &crate::algebra::ScAlgebra<FiniteField>, fiber_degree: usize) -> Vec<EulerFactor> {
    let points = structure::max_two_sided_ideals(fiber);
    let mut merged: BTreeMap<usize, usize> = BTreeMap::new();
    for p in points {
        *merged.entry(fiber_degree * p.center_degree).or_insert(0) += 1;
    }
    merged.into_iter().map(|(degree, multiplicity)| EulerFactor { degree, multiplicity }).collect()
}

/// Multiply `series` by `(1 - u^d)^{-m}` truncated at degree `trunc`.
fn apply_factor(series: &mut [BigInt], d: usize, m: usize, trunc: usize) {
    for _ in 0..m {
        // multiply by 1 + u^d + u^{2d} + ... in place (ascending order is
        // safe because the geometric series has constant term 1)
        for n in d..=trunc {
            let add = series[n - d].clone();
            series[n] += add;
        }
    }
}

/// The zeta series of an order over `GF(q)` or `GF(q)[T]`, truncated at
/// `u^D` with exact integer coefficients.
pub fn zeta_series(order: &Order, truncation: usize) -> Result<ZetaSeries> {
    assert!(truncation >= 1, "truncation degree must be at least 1");
    let fibers: Vec<BaseMaxIdeal> = match &order.base {
        BaseRing::FiniteField(_) => vec![BaseMaxIdeal::Zero],
        BaseRing::PolyRing(_) => {
            base_max_ideals(&order.base, truncation as u64).collect()
        }
        BaseRing::Integers => {
            return Err(Error::Unsupported(
                "use dirichlet_prefix for orders over Z".into(),
            ))
        }
    };
    let provenance: Vec<(String, Vec<EulerFactor>)> = fibers
        .par_iter()
        .map(|m| {
            let fiber = order.fiber(m).expect("enumerated ideal belongs to the base");
            let e = match m {
                BaseMaxIdeal::Poly(f) => f.len() - 1,
                _ => 1,
            };
            (m.describe(&order.base), local_zeta(&fiber, e))
        })
        .collect();
    let mut coeffs = vec![BigInt::zero(); truncation + 1];
    coeffs[0] = BigInt::one();
    for (_, factors) in &provenance {
        for f in factors {
            if f.degree <= truncation {
                apply_factor(&mut coeffs, f.degree, f.multiplicity, truncation);
            }
        }
    }
    Ok(ZetaSeries { truncation, coeffs, provenance })
}

/// Dirichlet coefficients `a_1 .. a_N` of an order over `Z`: local factors
/// for every prime `p <= N`, expanded and multiplied.
pub fn dirichlet_prefix(order: &Order, len: usize) -> Result<DirichletPrefix> {
    assert!(len >= 1);
    if !matches!(order.base, BaseRing::Integers) {
        return Err(Error::Unsupported("dirichlet_prefix requires base Z".into()));
    }
    let primes: Vec<u64> = base_max_ideals(&BaseRing::Integers, len as u64)
        .map(|m| match m {
            BaseMaxIdeal::Prime(p) => p,
            _ => unreachable!(),
        })
        .collect();
    let local_factors: Vec<(u64, Vec<EulerFactor>)> = primes
        .par_iter()
        .map(|&p| {
            let fiber = order.fiber(&BaseMaxIdeal::Prime(p)).expect("prime fiber");
            (p, local_zeta(&fiber, 1))
        })
        .collect();
    // expand each local factor as a series in powers of p
    let mut coeffs = vec![BigInt::one(); len];
    for (p, factors) in &local_factors {
        let mut max_pow = 0usize;
        let mut ppow: u128 = 1;
        while ppow * (*p as u128) <= len as u128 {
            ppow *= *p as u128;
            max_pow += 1;
        }
        if max_pow == 0 {
            continue;
        }
        let mut local = vec![BigInt::zero(); max_pow + 1];
        local[0] = BigInt::one();
        for f in factors {
            if f.degree <= max_pow {
                apply_factor(&mut local, f.degree, f.multiplicity, max_pow);
            }
        }
        // multiply the multiplicative coefficients into every n = p^v * m
        for n in 1..=len {
            let mut v = 0usize;
            let mut rest = n;
            while rest % (*p as usize) == 0 {
                rest /= *p as usize;
                v += 1;
            }
            if v > 0 {
                let scale = local[v].clone();
                let base = coeffs[rest - 1].clone();
                coeffs[n - 1] = base * scale;
            }
        }
    }
    Ok(DirichletPrefix { len, coeffs, local_factors })
}

/// `true` iff `series * den = num (mod u^{D+1})`.
pub fn compare_rational(series: &ZetaSeries, num: &[BigInt], den: &[BigInt]) -> Result<bool> {
    if den.first().map_or(true, |c| c.is_zero()) {
        return Err(Error::Unsupported("denominator must have nonzero constant term".into()));
    }
    let d = series.truncation;
    let mut prod = vec![BigInt::zero(); d + 1];
    for (i, c) in series.coeffs.iter().enumerate() {
        for (j, dc) in den.iter().enumerate() {
            if i + j <= d {
                prod[i + j] += c * dc;
            }
        }
    }
    for n in 0..=d {
        let expected = num.get(n).cloned().unwrap_or_else(BigInt::zero);
        if prod[n] != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Norm compatibility along a morphism: for every maximal ideal `q` of the
/// target with pullback `p`, `N(q) = N(p)^n` for an integer `n >= 1`.
/// Returns the exponent table `(N_target, N_source, n)` per point of the
/// target, in point order.
pub fn norm_compatibility(h: &AlgMorphism) -> Result<Vec<(u128, u128, u32)>> {
    if !procesi::procesi_check(h) {
        return Err(Error::ProcesiFails);
    }
    let target_points = structure::max_two_sided_ideals(h.target());
    let source_points = structure::max_two_sided_ideals(h.source());
    let mut out = vec![];
    for q in &target_points {
        let pulled = procesi::pullback_point(h, &q.ideal)?;
        let src = source_points
            .iter()
            .find(|sp| sp.ideal == pulled)
            .expect("pullback of a maximal ideal is maximal for finite-dimensional algebras");
        let (nt, ns) = (q.residue_size, src.residue_size);
        let mut n = 1u32;
        let mut acc = ns;
        while acc < nt {
            acc = acc.checked_mul(ns).expect("norm within u128");
            n += 1;
        }
        assert_eq!(acc, nt, "residue norm must be an integer power of the source norm");
        out.push((nt, ns, n));
    }
    Ok(out)
}

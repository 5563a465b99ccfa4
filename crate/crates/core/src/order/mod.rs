//! Orders: algebras free of finite rank over a central base ring `Z`,
//! `GF(q)` or `GF(q)[T]`, with fiber extraction at maximal ideals of the
//! base, closed-point enumeration, generic-fiber minimal primes over `Q`,
//! and assembly of Spec posets with closure relations and smallest
//! neighborhoods.
//!
//! Fiber computations across distinct maximal ideals are independent pure
//! operations and safe to run in parallel; the zeta pipeline relies on
//! this.

pub mod presets;
pub mod qfactor;

use num::{BigInt, One, Signed, Zero};

use crate::algebra::descr::AlgebraDescription;
use crate::algebra::{ScAlgebra, Subspace};
use crate::coeff::base::{int_mod_p, poly_residue};
use crate::coeff::poly::PolyRing;
use crate::coeff::{BaseMaxIdeal, BaseRing, FiniteField};
use crate::ring::{common_denominator, Integers, Rationals, Ring};
use crate::structure::{self, Point};
use crate::{Error, Result};

/// The underlying structure-constant algebra of an order, by base ring.
#[derive(Debug, Clone)]
pub enum OrderAlgebra {
    Int(ScAlgebra<Integers>),
    Field(ScAlgebra<FiniteField>),
    Poly(ScAlgebra<PolyRing>),
}

/// An algebra free of finite rank over a central base ring.
///
/// The structure-constant presentation is bilinear over the base, so base
/// scalars commute with every element by construction; `make_order`
/// verifies the remaining content (associativity and the unit law)
/// exhaustively, which is what rejects tampered tables.
#[derive(Debug, Clone)]
pub struct Order {
    pub base: BaseRing,
    pub algebra: OrderAlgebra,
    base_central_verified: bool,
}

/// A point of the Spec of an order: either a closed point over a maximal
/// ideal of the base, or a generic minimal prime (kernel of the projection
/// of the rational fiber onto a simple factor).
#[derive(Debug, Clone)]
pub enum SpecPoint {
    Closed {
        base_ideal: BaseMaxIdeal,
        point: Point,
    },
    Generic {
        /// Ideal generators cleared to integer coefficients (primitive
        /// vectors in the order's basis).
        cleared_gens: Vec<Vec<BigInt>>,
        /// Dimension over `Q` of the residue (simple) algebra.
        residue_dim: usize,
        /// Degree over `Q` of the center of the residue algebra.
        center_degree: usize,
    },
}

impl SpecPoint {
    pub fn is_closed(&self) -> bool {
        matches!(self, SpecPoint::Closed { .. })
    }
}

/// Which fibers to include in a Spec poset, and whether to add the generic
/// minimal primes (base `Z` only).
#[derive(Debug, Clone)]
pub struct FiberSelector {
    pub fibers: Vec<BaseMaxIdeal>,
    pub include_generic: bool,
}

impl FiberSelector {
    /// Localize at a single prime of `Z`, with generic points included:
    /// the poset of the local order at `p`.
    pub fn localize(p: u64) -> Self {
        FiberSelector { fibers: vec![BaseMaxIdeal::Prime(p)], include_generic: true }
    }
}

/// A finite piece of Spec: points plus the closure relation
/// `(i, j)` meaning `points[j]` lies in the closure of `points[i]`.
#[derive(Debug, Clone)]
pub struct SpecPoset {
    pub points: Vec<SpecPoint>,
    pub closure: Vec<(usize, usize)>,
}

impl SpecPoset {
    pub fn closure_of(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.closure.iter().filter(|&&(p, _)| p == i).map(|&(_, m)| m).collect();
        out.sort_unstable();
        out
    }
}

/// Build a verified order from a description.
pub fn make_order(descr: &AlgebraDescription) -> Result<Order> {
    let algebra = match &descr.base {
        BaseRing::Integers => OrderAlgebra::Int(descr.build_int()?),
        BaseRing::FiniteField(_) => OrderAlgebra::Field(descr.build_fq()?),
        BaseRing::PolyRing(_) => OrderAlgebra::Poly(descr.build_poly()?),
    };
    Ok(Order { base: descr.base.clone(), algebra, base_central_verified: true })
}

/// Build an order from a named preset.
pub fn preset_order(name: &str, base: BaseRing) -> Result<Order> {
    make_order(&presets::preset_description(name, base)?)
}

impl Order {
    pub fn rank(&self) -> usize {
        match &self.algebra {
            OrderAlgebra::Int(a) => a.dim(),
            OrderAlgebra::Field(a) => a.dim(),
            OrderAlgebra::Poly(a) => a.dim(),
        }
    }

    pub fn labels(&self) -> &[String] {
        match &self.algebra {
            OrderAlgebra::Int(a) => a.labels(),
            OrderAlgebra::Field(a) => a.labels(),
            OrderAlgebra::Poly(a) => a.labels(),
        }
    }

    pub fn base_central_verified(&self) -> bool {
        self.base_central_verified
    }

    /// Serialize back to the description file format.
    pub fn describe(&self) -> Result<String> {
        match &self.algebra {
            OrderAlgebra::Int(a) => crate::algebra::descr::serialize_int(a),
            OrderAlgebra::Field(a) => crate::algebra::descr::serialize_fq(a),
            OrderAlgebra::Poly(a) => crate::algebra::descr::serialize_poly(a),
        }
    }

    /// The fiber at a maximal ideal of the base: structure constants
    /// reduced modulo the ideal, over its residue field.
    pub fn fiber(&self, m: &BaseMaxIdeal) -> Result<ScAlgebra<FiniteField>> {
        match (&self.algebra, m) {
            (OrderAlgebra::Int(a), BaseMaxIdeal::Prime(p)) => {
                let field = FiniteField::prime_field(*p)?;
                let tensor = a.tensor().iter().map(|c| int_mod_p(c, &field)).collect();
                let unit = a.unit().iter().map(|c| int_mod_p(c, &field)).collect();
                ScAlgebra::build(field, a.labels().to_vec(), tensor, unit)
            }
            (OrderAlgebra::Field(a), BaseMaxIdeal::Zero) => Ok(a.clone()),
            (OrderAlgebra::Poly(a), BaseMaxIdeal::Poly(f)) => {
                let res = poly_residue(&a.ring().field, f);
                let tensor = a.tensor().iter().map(|c| res.reduce(c)).collect();
                let unit = a.unit().iter().map(|c| res.reduce(c)).collect();
                ScAlgebra::build(res.field.clone(), a.labels().to_vec(), tensor, unit)
            }
            _ => Err(Error::Unsupported("maximal ideal does not belong to the order's base".into())),
        }
    }

    /// Closed points lying over a maximal ideal of the base.
    pub fn closed_points_over(&self, m: &BaseMaxIdeal) -> Result<Vec<SpecPoint>> {
        let fiber = self.fiber(m)?;
        let points = structure::max_two_sided_ideals(&fiber);
        Ok(points
            .into_iter()
            .map(|point| SpecPoint::Closed { base_ideal: m.clone(), point })
            .collect())
    }

    /// The rational fiber `A (x) Q` of an order over `Z`.
    pub fn rational_fiber(&self) -> Result<ScAlgebra<Rationals>> {
        let OrderAlgebra::Int(a) = &self.algebra else {
            return Err(Error::Unsupported("rational fiber requires base Z".into()));
        };
        let to_q = |c: &BigInt| num::BigRational::from_integer(c.clone());
        ScAlgebra::build(
            Rationals,
            a.labels().to_vec(),
            a.tensor().iter().map(to_q).collect(),
            a.unit().iter().map(to_q).collect(),
        )
    }

    /// Minimal primes of the generic fiber: kernels of the projections of
    /// `A (x) Q` onto its simple factors, with generators cleared to
    /// integer coefficients. Requires the rational fiber to be semisimple.
    pub fn generic_minimal_primes(&self) -> Result<Vec<SpecPoint>> {
        let aq = self.rational_fiber()?;
        let f = Rationals;
        let d = aq.dim();
        // semisimplicity: over Q the radical is the kernel of the trace form
        let mut rows = vec![vec![f.zero(); d]; d];
        for j in 0..d {
            for t in 0..d {
                let z = aq.mul_vec(&aq.basis_vec(t), &aq.basis_vec(j));
                rows[j][t] = crate::linalg::trace(&f, &aq.left_mult_mat(&z));
            }
        }
        if !crate::linalg::kernel(&f, &crate::linalg::Mat::from_rows(rows)).is_empty() {
            return Err(Error::GenericFiberNotSemisimple);
        }
        let z = aq.center();
        // deterministic primitive element: basis vectors, then pairwise sums
        let mut candidates: Vec<Vec<num::BigRational>> = z.basis().to_vec();
        for i in 0..z.dim() {
            for j in (i + 1)..z.dim() {
                candidates.push(aq.add_vec(&z.basis()[i], &z.basis()[j]));
            }
        }
        let mut found = None;
        for cand in candidates {
            // clear denominators so the minimal polynomial is integer monic
            let den = common_denominator(cand.iter());
            let zi: Vec<num::BigRational> = cand
                .iter()
                .map(|c| c * num::BigRational::from_integer(den.clone()))
                .collect();
            let (mu, powers) = minimal_polynomial(&aq, &zi);
            if mu.len() == z.dim() + 1 {
                found = Some((zi, mu, powers));
                break;
            }
        }
        let Some((zelt, mu, _powers)) = found else {
            return Err(Error::NoPrimitiveElement);
        };
        let mu_int: Vec<BigInt> = mu
            .iter()
            .map(|c| {
                assert!(c.denom().is_one(), "minimal polynomial of an integral element is integral");
                c.numer().clone()
            })
            .collect();
        // squarefree in a product of fields
        let dmu = crate::coeff::poly::derivative(&f, &mu);
        assert_eq!(
            crate::coeff::poly::gcd(&f, &mu, &dmu).len(),
            1,
            "minimal polynomial over a semisimple center is squarefree"
        );
        let factors = qfactor::factor_monic_squarefree(&mu_int);
        let mut out = vec![];
        for g in &factors {
            let gq: Vec<num::BigRational> =
                g.iter().map(|c| num::BigRational::from_integer(c.clone())).collect();
            let (h, _) = crate::coeff::poly::divrem(&f, &mu, &gq);
            let (one, s, _t) = crate::coeff::poly::ext_gcd(&f, &h, &gq);
            assert_eq!(one.len(), 1, "cofactor and factor are coprime for squarefree mu");
            // idempotent for the factor: s(z) h(z)
            let sh = crate::coeff::poly::mul(&f, &s, &h);
            let eps = eval_poly_at(&aq, &sh, &zelt);
            assert_eq!(aq.mul_vec(&eps, &eps), eps, "central idempotent must be exact");
            // minimal prime: A (1 - eps)
            let one_minus = aq.sub_vec(aq.unit(), &eps);
            let gens: Vec<Vec<num::BigRational>> =
                (0..d).map(|i| aq.mul_vec(&aq.basis_vec(i), &one_minus)).collect();
            let space = Subspace::from_vectors(&f, d, &gens);
            let cleared = clear_rows(space.basis());
            out.push(SpecPoint::Generic {
                cleared_gens: cleared,
                residue_dim: d - space.dim(),
                center_degree: g.len() - 1,
            });
        }
        out.sort_by_key(|p| match p {
            SpecPoint::Generic { cleared_gens, residue_dim, .. } => {
                (*residue_dim, cleared_gens.clone())
            }
            _ => unreachable!(),
        });
        Ok(out)
    }

    /// Assemble a Spec poset from selected fibers, optionally with the
    /// generic minimal primes; closure pairs are decided by reducing the
    /// cleared generators into each fiber and testing ideal membership.
    pub fn spec_poset(&self, selector: &FiberSelector) -> Result<SpecPoset> {
        let mut points = vec![];
        for m in &selector.fibers {
            points.extend(self.closed_points_over(m)?);
        }
        let closed_count = points.len();
        if selector.include_generic {
            if !matches!(self.base, BaseRing::Integers) {
                return Err(Error::Unsupported(
                    "generic minimal primes are only supported over base Z".into(),
                ));
            }
            points.extend(self.generic_minimal_primes()?);
        }
        let mut closure = vec![];
        for i in 0..points.len() {
            closure.push((i, i));
        }
        for g in closed_count..points.len() {
            let SpecPoint::Generic { cleared_gens, .. } = &points[g] else {
                unreachable!()
            };
            for m in 0..closed_count {
                let SpecPoint::Closed { base_ideal, point } = &points[m] else {
                    unreachable!()
                };
                let BaseMaxIdeal::Prime(p) = base_ideal else {
                    continue;
                };
                let field = FiniteField::prime_field(*p)?;
                let reduced = reduce_generators_mod_p(cleared_gens, &field);
                if reduced.iter().all(|v| point.ideal.contains(&field, v)) {
                    closure.push((g, m));
                }
            }
        }
        closure.sort_unstable();
        Ok(SpecPoset { points, closure })
    }
}

/// `U(x)`: every point whose closure contains the given closed point,
/// together with the point itself — the smallest neighborhood of `x`.
pub fn smallest_neighborhood(poset: &SpecPoset, point_index: usize) -> Result<Vec<usize>> {
    if point_index >= poset.points.len() {
        return Err(Error::PointNotInPoset);
    }
    if !poset.points[point_index].is_closed() {
        return Err(Error::NotAClosedPoint);
    }
    let mut out: Vec<usize> = poset
        .closure
        .iter()
        .filter(|&&(_, m)| m == point_index)
        .map(|&(p, _)| p)
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Minimal polynomial of an element of an algebra over the rationals,
/// together with the power list. Ascending coefficients, monic.
fn minimal_polynomial(
    aq: &ScAlgebra<Rationals>,
    x: &[num::BigRational],
) -> (Vec<num::BigRational>, Vec<Vec<num::BigRational>>) {
    let f = Rationals;
    let mut powers: Vec<Vec<num::BigRational>> = vec![aq.unit().to_vec()];
    loop {
        let next = aq.mul_vec(powers.last().unwrap(), x);
        let space = Subspace::from_vectors(&f, aq.dim(), &powers);
        if space.contains(&f, &next) {
            // t^m - sum of lower coefficients
            let cols: Vec<Vec<num::BigRational>> = (0..aq.dim())
                .map(|amb| powers.iter().map(|p| p[amb].clone()).collect())
                .collect();
            let sol = crate::linalg::solve(&f, &crate::linalg::Mat::from_rows(cols), &next)
                .expect("dependence is consistent");
            let mut mu: Vec<num::BigRational> = sol.into_iter().map(|c| -c).collect();
            mu.push(f.one());
            return (mu, powers);
        }
        powers.push(next);
    }
}

fn eval_poly_at(
    aq: &ScAlgebra<Rationals>,
    poly: &[num::BigRational],
    x: &[num::BigRational],
) -> Vec<num::BigRational> {
    let mut acc = aq.zero_vec();
    for c in poly.iter().rev() {
        acc = aq.mul_vec(&acc, x);
        let mut unit_term = aq.unit().to_vec();
        for u in unit_term.iter_mut() {
            *u = u.clone() * c;
        }
        acc = aq.add_vec(&acc, &unit_term);
    }
    acc
}

/// Scale each rational row to a primitive integer vector.
fn clear_rows(rows: &[Vec<num::BigRational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let den = common_denominator(row.iter());
            let ints: Vec<BigInt> = row
                .iter()
                .map(|c| {
                    let scaled = c * num::BigRational::from_integer(den.clone());
                    assert!(scaled.denom().is_one());
                    scaled.numer().clone()
                })
                .collect();
            let mut g = BigInt::zero();
            for c in &ints {
                g = num::integer::gcd(g, c.abs());
            }
            if g.is_zero() || g.is_one() {
                ints
            } else {
                ints.into_iter().map(|c| c / &g).collect()
            }
        })
        .collect()
}

/// Reduce integer generators into a fiber and compare with an ideal there.
pub fn reduce_generators_mod_p(
    gens: &[Vec<BigInt>],
    field: &FiniteField,
) -> Vec<Vec<crate::coeff::FFElem>> {
    gens.iter().map(|g| g.iter().map(|c| int_mod_p(c, field)).collect()).collect()
}

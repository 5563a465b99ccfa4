//! Exact computer algebra for associative algebras that are finitely
//! generated modules over their centers.
//!
//! The crate works with algebras presented by structure constants over an
//! exact coefficient ring (a finite field, the integers, or a univariate
//! polynomial ring over a finite field) and computes, without ever leaving
//! exact arithmetic:
//!
//! * centers, centralizers, two-sided ideals and quotients ([`algebra`]),
//! * Jacobson radicals, Wedderburn block data, maximal two-sided ideals
//!   and block idempotents over finite fields ([`structure`]),
//! * the tensor product `B ⊗_A C` of algebras over a possibly
//!   non-commutative base, together with prime-ideal pullback ([`procesi`]),
//! * fibers, closed points and Spec posets of orders over `Z`, `GF(q)` and
//!   `GF(q)[T]` ([`order`]),
//! * Hasse zeta functions as Euler products, expanded into exact power
//!   series in `u = q^{-s}` or Dirichlet coefficient prefixes ([`zeta`]).
//!
//! All values are immutable after construction and every operation is pure,
//! so everything here is safe to call from concurrent contexts.

pub mod algebra;
pub mod coeff;
pub mod linalg;
pub mod order;
pub mod procesi;
pub mod ring;
pub mod structure;
pub mod zeta;

use thiserror::Error;

/// Errors reported by the library.
///
/// Domain errors carry enough context to point at the offending datum
/// (a witnessing basis triple, a line number, a generator).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("algebra must have rank at least 1")]
    ZeroRank,
    #[error("multiplication is not associative: (e{0}*e{1})*e{2} != e{0}*(e{1}*e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element e{0}")]
    UnitLaw(usize),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("ideal is improper (contains 1)")]
    ImproperIdeal,
    #[error("operation requires a proper two-sided ideal of the given algebra")]
    BadIdeal,
    #[error("map is not a unital ring homomorphism: fails on basis pair (e{0}, e{1})")]
    NotAHomomorphism(usize, usize),
    #[error("map does not send 1 to 1")]
    NotUnital,
    #[error("morphism does not satisfy the A-algebra condition (target not generated by image and centralizer)")]
    ProcesiFails,
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("algebra has a nonzero radical")]
    NotSemisimple,
    #[error("rational fiber A (x) Q is not semisimple; generic primes are unsupported for this order")]
    GenericFiberNotSemisimple,
    #[error("no primitive element found for the rational center among the deterministic candidates")]
    NoPrimitiveElement,
    #[error("element is not an idempotent for the requested maximal ideal")]
    BadIdempotent,
    #[error("point is not a closed point of the poset")]
    NotAClosedPoint,
    #[error("point not found in the poset")]
    PointNotInPoset,
    #[error("{0}")]
    Unsupported(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

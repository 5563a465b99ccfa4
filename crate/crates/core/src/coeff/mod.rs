//! Exact arithmetic for coefficient rings: prime-power finite fields,
//! univariate polynomials over them, arbitrary-precision integers, and the
//! enumeration of maximal ideals of the supported base rings.

pub mod base;
pub mod fq;
pub mod poly;

pub use base::{base_max_ideals, make_field, parse_base, BaseMaxIdeal, BaseRing};
pub use fq::{FFElem, FiniteField};

//! The algebra description file format.
//!
//! ```text
//! # rank-2 order with i^2 = -1
//! base Z
//! basis e i
//! mul e e = 1*e
//! mul e i = 1*i
//! mul i e = 1*i
//! mul i i = (-1)*e
//! ```
//!
//! Line 1 names the base ring (`Z`, `GF(p^k)` or `GF(p^k)[T]`), line 2 the
//! basis labels (the first label is the unit), and every following `mul`
//! line one product `e_i e_j` as a sum of `coeff*label` terms. A
//! coefficient is an integer literal or a polynomial literal in `T` such as
//! `T^2-4`; coefficients containing a top-level `+` must be parenthesized.
//! Omitted products default to zero. `#` starts a comment and parsing is
//! otherwise whitespace-insensitive; when whitespace is stripped from a
//! `mul` left-hand side, the two labels are recovered greedily (longest
//! first label wins). Serialization reproduces the canonical ordering
//! (pairs `(i, j)` ascending, nonzero products only).

use num::BigInt;
use std::collections::BTreeMap;

use crate::coeff::poly::{self, PolyRing};
use crate::coeff::{parse_base, BaseRing, FiniteField};
use crate::ring::{Integers, Ring};
use crate::{Error, Result};

use super::ScAlgebra;

/// A coefficient literal as written in a description file.
#[derive(Debug, Clone, PartialEq)]
pub enum CoeffLit {
    Int(BigInt),
    /// Polynomial in `T` with integer coefficients, low degree first.
    Poly(Vec<BigInt>),
}

/// A parsed description: base ring, labels, and the nonzero products.
#[derive(Debug, Clone)]
pub struct AlgebraDescription {
    pub base: BaseRing,
    pub labels: Vec<String>,
    pub products: BTreeMap<(usize, usize), Vec<(CoeffLit, usize)>>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse(text: &str) -> Result<AlgebraDescription> {
    let mut base: Option<BaseRing> = None;
    let mut labels: Vec<String> = vec![];
    let mut products: BTreeMap<(usize, usize), Vec<(CoeffLit, usize)>> = BTreeMap::new();
    let mut stage = 0; // 0: expect base, 1: expect basis, 2: expect mul lines

    for (ln, raw) in text.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match (stage, kw) {
            (0, "base") => {
                base = Some(parse_base(rest.trim()).map_err(|e| perr(ln, e.to_string()))?);
                stage = 1;
            }
            (0, _) => return Err(perr(ln, "expected `base <ring>` as the first line")),
            (1, "basis") => {
                labels = rest.split_whitespace().map(String::from).collect();
                if labels.is_empty() {
                    return Err(perr(ln, "basis line must list at least one label (the unit)"));
                }
                let mut seen = std::collections::BTreeSet::new();
                for l in &labels {
                    if !seen.insert(l.clone()) {
                        return Err(perr(ln, format!("duplicate basis label `{}`", l)));
                    }
                }
                stage = 2;
            }
            (1, _) => return Err(perr(ln, "expected `basis <labels...>` on the second line")),
            (2, "mul") => {
                let rest: String = rest.chars().filter(|c| !c.is_whitespace()).collect();
                // left side up to '=', two labels; find the split between
                // them by matching known labels greedily
                let (lhs, rhs) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(ln, "mul line needs `= <sum of terms>`"))?;
                let (i, j) = split_label_pair(lhs, &labels)
                    .ok_or_else(|| perr(ln, format!("cannot read `{}` as two basis labels", lhs)))?;
                if products.contains_key(&(i, j)) {
                    return Err(perr(ln, format!("duplicate product for ({}, {})", labels[i], labels[j])));
                }
                let terms = parse_sum(rhs, &labels).map_err(|m| perr(ln, m))?;
                products.insert((i, j), terms);
            }
            (2, _) => return Err(perr(ln, format!("unknown directive `{}`", kw))),
            _ => unreachable!(),
        }
    }
    let base = base.ok_or_else(|| perr(1, "missing `base` line"))?;
    if labels.is_empty() {
        return Err(perr(2, "missing `basis` line"));
    }
    Ok(AlgebraDescription { base, labels, products })
}

/// `lhs` is two concatenated labels (whitespace was stripped). Labels are
/// matched greedily from the left.
fn split_label_pair(lhs: &str, labels: &[String]) -> Option<(usize, usize)> {
    let mut best = None;
    for (i, l) in labels.iter().enumerate() {
        if let Some(rest) = lhs.strip_prefix(l.as_str()) {
            if let Some(j) = labels.iter().position(|m| m == rest) {
                // prefer the longest first label (labels can share prefixes)
                if best.map_or(true, |(bl, _, _): (usize, usize, usize)| l.len() > bl) {
                    best = Some((l.len(), i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Parse a linear combination `coeff*label + ...` against a label list
/// (whitespace is removed first). Used for map lines and generators.
pub fn parse_combination(s: &str, labels: &[String]) -> std::result::Result<Vec<(CoeffLit, usize)>, String> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    parse_sum(&compact, labels)
}

/// Split a whitespace-free sum on top-level `+` (parentheses respected).
fn parse_sum(rhs: &str, labels: &[String]) -> std::result::Result<Vec<(CoeffLit, usize)>, String> {
    if rhs == "0" {
        return Ok(vec![]);
    }
    let mut terms = vec![];
    let mut depth = 0usize;
    let mut start = 0usize;
    let bytes = rhs.as_bytes();
    for (idx, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth = depth.checked_sub(1).ok_or("unbalanced parentheses")?,
            b'+' if depth == 0 && idx > start => {
                terms.push(&rhs[start..idx]);
                start = idx + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err("unbalanced parentheses".into());
    }
    terms.push(&rhs[start..]);
    let mut out = vec![];
    for t in terms {
        if t.is_empty() {
            return Err("empty term".into());
        }
        let (coeff, label) = match t.rsplit_once('*') {
            Some((c, l)) => (parse_coeff(c)?, l),
            None => (CoeffLit::Int(BigInt::from(1)), t),
        };
        let j = labels
            .iter()
            .position(|m| m == label)
            .ok_or_else(|| format!("unknown basis label `{}`", label))?;
        out.push((coeff, j));
    }
    Ok(out)
}

/// An integer literal or a polynomial literal in `T` (e.g. `T^2-4`,
/// `2T+1`, `3*T^2`). Outer parentheses are stripped.
fn parse_coeff(s: &str) -> std::result::Result<CoeffLit, String> {
    let mut s = s;
    while s.starts_with('(') && s.ends_with(')') {
        s = &s[1..s.len() - 1];
    }
    if s.is_empty() {
        return Err("empty coefficient".into());
    }
    if let Ok(n) = s.parse::<BigInt>() {
        return Ok(CoeffLit::Int(n));
    }
    // polynomial in T: scan signed monomials
    let mut coeffs: Vec<BigInt> = vec![];
    let mut rest = s;
    let mut sign = BigInt::from(1);
    if let Some(r) = rest.strip_prefix('-') {
        sign = BigInt::from(-1);
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        // monomial: [digits]['*']['T'['^'digits]]
        let digits_end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        let num = if digits_end == 0 {
            BigInt::from(1)
        } else {
            rest[..digits_end].parse::<BigInt>().map_err(|e| e.to_string())?
        };
        let mut tail = &rest[digits_end..];
        tail = tail.strip_prefix('*').unwrap_or(tail);
        let exp = if let Some(t) = tail.strip_prefix('T') {
            if let Some(t2) = t.strip_prefix('^') {
                let e_end = t2.find(|c: char| !c.is_ascii_digit()).unwrap_or(t2.len());
                if e_end == 0 {
                    return Err(format!("missing exponent in `{}`", s));
                }
                let e: usize = t2[..e_end].parse().map_err(|_| "bad exponent".to_string())?;
                tail = &t2[e_end..];
                e
            } else {
                tail = t;
                1
            }
        } else {
            if digits_end == 0 {
                return Err(format!("cannot read coefficient `{}`", s));
            }
            0
        };
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, BigInt::from(0));
        }
        coeffs[exp] += &sign * num;
        if tail.is_empty() {
            break;
        }
        if let Some(r) = tail.strip_prefix('-') {
            sign = BigInt::from(-1);
            rest = r;
        } else if let Some(r) = tail.strip_prefix('+') {
            sign = BigInt::from(1);
            rest = r;
        } else {
            return Err(format!("cannot read coefficient `{}`", s));
        }
    }
    while coeffs.last().map_or(false, |c| c == &BigInt::from(0)) {
        coeffs.pop();
    }
    Ok(CoeffLit::Poly(coeffs))
}

impl AlgebraDescription {
    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn unit_vec<R: Ring>(&self, ring: &R) -> Vec<R::Elem> {
        let mut u = vec![ring.zero(); self.dim()];
        u[0] = ring.one();
        u
    }

    /// Instantiate over `Z`. The base must be `Z` and all coefficients
    /// integer literals.
    pub fn build_int(&self) -> Result<ScAlgebra<Integers>> {
        if self.base != BaseRing::Integers {
            return Err(Error::Unsupported("description base is not Z".into()));
        }
        let ring = Integers;
        let d = self.dim();
        let mut tensor = vec![ring.zero(); d * d * d];
        for (&(i, j), terms) in &self.products {
            for (c, k) in terms {
                let v = match c {
                    CoeffLit::Int(n) => n.clone(),
                    CoeffLit::Poly(_) => {
                        return Err(Error::Unsupported(
                            "polynomial coefficient over base Z".into(),
                        ))
                    }
                };
                tensor[(i * d + j) * d + k] = &tensor[(i * d + j) * d + k] + v;
            }
        }
        ScAlgebra::build(ring, self.labels.clone(), tensor, self.unit_vec(&Integers))
    }

    /// Instantiate over the finite field base (integer literals are reduced
    /// into the prime subfield).
    pub fn build_fq(&self) -> Result<ScAlgebra<FiniteField>> {
        self.build_fq_with_unit(None)
    }

    /// Like [`Self::build_fq`], but with an explicit unit vector instead of
    /// the first basis element (used by the morphism file format, where a
    /// product algebra's unit is a sum of idempotents).
    pub fn build_fq_with_unit(
        &self,
        unit_terms: Option<&[(CoeffLit, usize)]>,
    ) -> Result<ScAlgebra<FiniteField>> {
        let BaseRing::FiniteField(field) = &self.base else {
            return Err(Error::Unsupported("description base is not a finite field".into()));
        };
        let d = self.dim();
        let mut tensor = vec![field.zero(); d * d * d];
        for (&(i, j), terms) in &self.products {
            for (c, k) in terms {
                let v = match c {
                    CoeffLit::Int(n) => int_to_field(n, field),
                    CoeffLit::Poly(_) => {
                        return Err(Error::Unsupported(
                            "polynomial coefficient over a field base".into(),
                        ))
                    }
                };
                let slot = &mut tensor[(i * d + j) * d + k];
                *slot = field.add(slot, &v);
            }
        }
        let unit = match unit_terms {
            None => self.unit_vec(field),
            Some(terms) => {
                let mut u = vec![field.zero(); d];
                for (c, k) in terms {
                    let v = match c {
                        CoeffLit::Int(n) => int_to_field(n, field),
                        CoeffLit::Poly(_) => {
                            return Err(Error::Unsupported(
                                "polynomial coefficient over a field base".into(),
                            ))
                        }
                    };
                    u[*k] = field.add(&u[*k], &v);
                }
                u
            }
        };
        ScAlgebra::build(field.clone(), self.labels.clone(), tensor, unit)
    }

    /// Instantiate over `GF(q)[T]` (both integer and `T`-polynomial
    /// literals allowed; integer coefficients reduce into the prime
    /// subfield).
    pub fn build_poly(&self) -> Result<ScAlgebra<PolyRing>> {
        let BaseRing::PolyRing(field) = &self.base else {
            return Err(Error::Unsupported("description base is not GF(q)[T]".into()));
        };
        let ring = PolyRing { field: field.clone() };
        let d = self.dim();
        let mut tensor = vec![ring.zero(); d * d * d];
        for (&(i, j), terms) in &self.products {
            for (c, k) in terms {
                let v: Vec<crate::coeff::FFElem> = match c {
                    CoeffLit::Int(n) => {
                        let e = int_to_field(n, field);
                        poly::trim(field, vec![e])
                    }
                    CoeffLit::Poly(cs) => {
                        poly::trim(field, cs.iter().map(|n| int_to_field(n, field)).collect())
                    }
                };
                let slot = &mut tensor[(i * d + j) * d + k];
                *slot = ring.add(slot, &v);
            }
        }
        ScAlgebra::build(ring.clone(), self.labels.clone(), tensor, self.unit_vec(&ring))
    }
}

fn int_to_field(n: &BigInt, field: &FiniteField) -> crate::coeff::FFElem {
    crate::coeff::base::int_mod_p(n, field)
}

/// Canonical serialization of an algebra over any of the three bases.
/// `coeff(i, j, k)` renders one structure constant, or `None` when zero.
fn serialize_with(
    base: &BaseRing,
    labels: &[String],
    dim: usize,
    coeff: impl Fn(usize, usize, usize) -> Option<String>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("base {}\n", base.describe()));
    out.push_str(&format!("basis {}\n", labels.join(" ")));
    for i in 0..dim {
        for j in 0..dim {
            let terms: Vec<String> = (0..dim)
                .filter_map(|k| {
                    coeff(i, j, k).map(|c| {
                        if c == "1" {
                            labels[k].clone()
                        } else if c.contains('+') || c.contains('-') {
                            format!("({})*{}", c, labels[k])
                        } else {
                            format!("{}*{}", c, labels[k])
                        }
                    })
                })
                .collect();
            if !terms.is_empty() {
                out.push_str(&format!("mul {} {} = {}\n", labels[i], labels[j], terms.join(" + ")));
            }
        }
    }
    out
}

pub fn serialize_int(a: &ScAlgebra<Integers>) -> Result<String> {
    require_unit_first(a.unit(), &Integers)?;
    Ok(serialize_with(&BaseRing::Integers, a.labels(), a.dim(), |i, j, k| {
        let c = a.c(i, j, k);
        if Integers.is_zero(c) {
            None
        } else {
            Some(c.to_string())
        }
    }))
}

pub fn serialize_fq(a: &ScAlgebra<FiniteField>) -> Result<String> {
    require_unit_first(a.unit(), a.ring())?;
    let field = a.ring().clone();
    for t in a.tensor() {
        if field.index(t) >= field.characteristic() as u128 {
            return Err(Error::Unsupported(
                "description files only express prime-subfield constants".into(),
            ));
        }
    }
    Ok(serialize_with(
        &BaseRing::FiniteField(field.clone()),
        a.labels(),
        a.dim(),
        |i, j, k| {
            let c = a.c(i, j, k);
            if field.is_zero(c) {
                None
            } else {
                Some(field.index(c).to_string())
            }
        },
    ))
}

pub fn serialize_poly(a: &ScAlgebra<PolyRing>) -> Result<String> {
    require_unit_first(a.unit(), a.ring())?;
    let ring = a.ring().clone();
    for t in a.tensor() {
        for c in t {
            if ring.field.index(c) >= ring.field.characteristic() as u128 {
                return Err(Error::Unsupported(
                    "description files only express prime-subfield constants".into(),
                ));
            }
        }
    }
    Ok(serialize_with(
        &BaseRing::PolyRing(ring.field.clone()),
        a.labels(),
        a.dim(),
        |i, j, k| {
            let c = a.c(i, j, k);
            if ring.is_zero(c) {
                None
            } else {
                let terms: Vec<String> = c
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, e)| !ring.field.is_zero(e))
                    .map(|(deg, e)| {
                        let v = ring.field.index(e);
                        match (deg, v) {
                            (0, v) => v.to_string(),
                            (1, 1) => "T".into(),
                            (1, v) => format!("{}T", v),
                            (d, 1) => format!("T^{}", d),
                            (d, v) => format!("{}T^{}", v, d),
                        }
                    })
                    .collect();
                Some(terms.join("+"))
            }
        },
    ))
}

fn require_unit_first<R: Ring>(unit: &[R::Elem], ring: &R) -> Result<()> {
    let ok = ring.is_one(&unit[0]) && unit[1..].iter().all(|c| ring.is_zero(c));
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported(
            "serialization requires the unit to be the first basis element".into(),
        ))
    }
}

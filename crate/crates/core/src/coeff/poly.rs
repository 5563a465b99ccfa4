//! Dense univariate polynomials over an arbitrary coefficient field.
//!
//! A polynomial is a coefficient vector, low degree first, with no trailing
//! zeros (the zero polynomial is the empty vector). Functions take the
//! coefficient field as context, in the same style as the rest of the crate.

use crate::coeff::fq::FiniteField;
use crate::ring::{Field, Ring};

pub type Poly<F> = Vec<<F as Ring>::Elem>;

pub fn trim<F: Field>(f: &F, mut v: Poly<F>) -> Poly<F> {
    while v.last().is_some_and(|c| f.is_zero(c)) {
        v.pop();
    }
    v
}

pub fn deg<F: Field>(_f: &F, v: &Poly<F>) -> Option<usize> {
    if v.is_empty() {
        None
    } else {
        Some(v.len() - 1)
    }
}

pub fn add<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        out.push(f.add(&x, &y));
    }
    trim(f, out)
}

pub fn neg<F: Field>(f: &F, a: &Poly<F>) -> Poly<F> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn sub<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    add(f, a, &neg(f, b))
}

pub fn mul<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if f.is_zero(ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(ai, bj));
        }
    }
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, a: &Poly<F>) -> Poly<F> {
    trim(f, a.iter().map(|x| f.mul(c, x)).collect())
}

/// Quotient and remainder; the divisor must be nonzero.
pub fn divrem<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![f.zero(); rem.len() - b.len() + 1];
    let linv = f.inv(b.last().unwrap());
    while rem.len() >= b.len() && !rem.is_empty() {
        let c = f.mul(rem.last().unwrap(), &linv);
        let shift = rem.len() - b.len();
        quot[shift] = c.clone();
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] = f.sub(&rem[shift + i], &f.mul(&c, bi));
        }
        rem = trim(f, rem);
    }
    (trim(f, quot), rem)
}

pub fn rem<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    divrem(f, a, b).1
}

pub fn monic<F: Field>(f: &F, a: &Poly<F>) -> Poly<F> {
    match a.last() {
        None => vec![],
        Some(l) => scale(f, &f.inv(l), a),
    }
}

/// Monic greatest common divisor.
pub fn gcd<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_empty() {
        let r = rem(f, &r0, &r1);
        r0 = r1;
        r1 = r;
    }
    monic(f, &r0)
}

/// Extended gcd: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn ext_gcd<F: Field>(f: &F, a: &Poly<F>, b: &Poly<F>) -> (Poly<F>, Poly<F>, Poly<F>) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![f.one()], vec![]);
    let (mut t0, mut t1) = (vec![], vec![f.one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let snew = sub(f, &s0, &mul(f, &q, &s1));
        let tnew = sub(f, &t0, &mul(f, &q, &t1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, snew);
        (t0, t1) = (t1, tnew);
    }
    if let Some(l) = r0.last().cloned() {
        let li = f.inv(&l);
        let sc = |v: &Poly<F>| scale(f, &li, v);
        (sc(&r0), sc(&s0), sc(&t0))
    } else {
        (r0, s0, t0)
    }
}

pub fn eval<F: Field>(f: &F, a: &Poly<F>, x: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in a.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

pub fn derivative<F: Field>(f: &F, a: &Poly<F>) -> Poly<F> {
    let mut out = vec![];
    for (i, c) in a.iter().enumerate().skip(1) {
        let mut term = f.zero();
        // i * c by repeated addition of the image of 1; i is small here
        let step = f.from_i64(i as i64);
        term = f.add(&term, &f.mul(&step, c));
        out.push(term);
    }
    trim(f, out)
}

pub fn pow_mod<F: Field>(f: &F, a: &Poly<F>, mut n: u128, m: &Poly<F>) -> Poly<F> {
    let mut base = rem(f, a, m);
    let mut acc = vec![f.one()];
    while n > 0 {
        if n & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &base), m);
        }
        base = rem(f, &mul(f, &base, &base), m);
        n >>= 1;
    }
    acc
}

pub fn fmt_poly<F: Field>(f: &F, a: &Poly<F>, var: &str) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut terms = vec![];
    for (i, c) in a.iter().enumerate().rev() {
        if f.is_zero(c) {
            continue;
        }
        let cs = f.fmt_elem(c);
        let needs_parens = cs.contains('+') || cs.contains('-');
        let cs = if needs_parens { format!("({})", cs) } else { cs };
        let t = match i {
            0 => cs,
            1 if f.is_one(c) => var.to_string(),
            1 => format!("{}{}", cs, var),
            _ if f.is_one(c) => format!("{}^{}", var, i),
            _ => format!("{}{}^{}", cs, var, i),
        };
        terms.push(t);
    }
    terms.join("+")
}

/// The polynomial ring `GF(q)[T]` as a coefficient ring for orders.
///
/// Elements are trimmed coefficient vectors over the attached field, so
/// equality of elements is plain vector equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    pub field: FiniteField,
}

impl Ring for PolyRing {
    type Elem = Poly<FiniteField>;

    fn zero(&self) -> Self::Elem {
        vec![]
    }
    fn one(&self) -> Self::Elem {
        vec![self.field.one()]
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        add(&self.field, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        neg(&self.field, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        mul(&self.field, a, b)
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        let c = self.field.from_i64(n);
        if self.field.is_zero(&c) {
            vec![]
        } else {
            vec![c]
        }
    }
    fn fmt_elem(&self, a: &Self::Elem) -> String {
        fmt_poly(&self.field, a, "T")
    }
}

impl PolyRing {
    /// The indeterminate `T`.
    pub fn var(&self) -> Poly<FiniteField> {
        vec![self.field.zero(), self.field.one()]
    }
}

// -- finite-field specific operations -------------------------------------

/// Irreducibility over a finite field `F_q`: `x^{q^d} = x (mod f)` and
/// `gcd(x^{q^{d/r}} - x, f) = 1` for every prime `r | d`.
pub fn is_irreducible(field: &FiniteField, poly: &Poly<FiniteField>) -> bool {
    let d = match deg(field, poly) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    if field.degree() == 1 {
        // prime field: use the flat u64 coefficient path
        let flat: Vec<u64> = poly.iter().map(|c| c[0]).collect();
        return crate::coeff::fq::is_irreducible_fp(&flat, field.characteristic());
    }
    let q = field.size();
    let x: Poly<FiniteField> = vec![field.zero(), field.one()];
    let xmod = rem(field, &x, poly);
    // frob[i] = x^{q^{i+1}} mod poly
    let mut cur = xmod.clone();
    let mut frob = Vec::with_capacity(d);
    for _ in 0..d {
        cur = pow_mod(field, &cur, q, poly);
        frob.push(cur.clone());
    }
    if frob[d - 1] != xmod {
        return false;
    }
    for r in crate::coeff::fq::prime_divisors(d as u64) {
        let e = d / r as usize;
        let h = sub(field, &frob[e - 1], &xmod);
        if gcd(field, &h, poly).len() != 1 {
            return false;
        }
    }
    true
}

/// All monic polynomials of degree `d` over `F_q`, in canonical order
/// (coefficient vectors read as base-`q` integers, low digit = constant
/// term).
pub fn monic_polys(field: &FiniteField, d: usize) -> impl Iterator<Item = Poly<FiniteField>> + '_ {
    let q = field.size();
    let total = q.checked_pow(d as u32).expect("degree bound too large");
    (0..total).map(move |mut v| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push(field.from_index(v % q));
            v /= q;
        }
        coeffs.push(field.one());
        coeffs
    })
}

/// Complete, duplicate-free, canonically ordered list of the monic
/// irreducible polynomials of degree `d` over `F_q`.
pub fn irreducibles(field: &FiniteField, d: usize) -> Vec<Poly<FiniteField>> {
    use rayon::prelude::*;
    assert!(d >= 1, "degree must be at least 1");
    let candidates: Vec<Poly<FiniteField>> = monic_polys(field, d).collect();
    if candidates.len() <= 4096 {
        candidates.into_iter().filter(|f| is_irreducible(field, f)).collect()
    } else {
        // order-preserving parallel filter; the result is identical to the
        // sequential scan
        candidates.into_par_iter().filter(|f| is_irreducible(field, f)).collect()
    }
}

/// Number of monic irreducibles of degree `d` over `F_q` by the Mobius
/// necklace formula `(1/d) sum_{e | d} mu(e) q^{d/e}`.
pub fn irreducible_count(q: u128, d: usize) -> u128 {
    let mut total: i128 = 0;
    for e in 1..=d {
        if d % e != 0 {
            continue;
        }
        let mu = moebius(e as u64);
        if mu == 0 {
            continue;
        }
        total += mu as i128 * q.pow((d / e) as u32) as i128;
    }
    (total / d as i128) as u128
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Canonical sort key for a polynomial over a finite field: degree, then
/// coefficients from the highest degree down, each as an integer.
pub fn sort_key(field: &FiniteField, a: &Poly<FiniteField>) -> (usize, Vec<u128>) {
    (a.len(), a.iter().rev().map(|c| field.index(c)).collect())
}

//! Prime-power finite fields `F_{p^k}`.
//!
//! An element is a dense coefficient vector of length `k` (a residue modulo
//! the defining polynomial, coefficients low degree first, each `< p`). The
//! fields in play are small (`p^k` well below `2^64`), so `u64` coefficients
//! with `u128` intermediate products are exact.

use crate::ring::{Field, Ring};
use crate::{Error, Result};

/// An element of a finite field: `k` coefficients, low degree first.
pub type FFElem = Vec<u64>;

/// A finite field `F_{p^k}`, presented as `F_p[x]/(m)` for a monic
/// irreducible `m` of degree `k`.
///
/// This is both the description of the field (characteristic, degree,
/// defining polynomial) and the arithmetic context for its elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: usize,
    /// Monic defining polynomial, `k + 1` coefficients, low degree first.
    modulus: Vec<u64>,
}

// -- scalar arithmetic mod p --------------------------------------------

#[inline]
fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn invm(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); p prime, a != 0
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "not invertible mod p");
    ((t % p as i128 + p as i128) % p as i128) as u64
}

// -- dense polynomial arithmetic over F_p (u64 coefficient vectors) -------

fn ptrim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(ai, bj, p), p);
        }
    }
    ptrim(&mut out);
    out
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn prem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    ptrim(&mut r);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &mi) in m.iter().enumerate() {
                r[shift + i] = subm(r[shift + i], mulm(lead, mi, p), p);
            }
        }
        r.pop();
        ptrim(&mut r);
    }
    r
}

fn pgcd_ext(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
    // returns (g, s, t) with s*a + t*b = g, g monic or zero
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], vec![]);
    let (mut t0, mut t1) = (vec![], vec![1u64]);
    ptrim(&mut r0);
    ptrim(&mut r1);
    while !r1.is_empty() {
        // divide r0 by r1
        let mut q = vec![0u64; r0.len().saturating_sub(r1.len()) + 1];
        let mut rem = r0.clone();
        let linv = invm(*r1.last().unwrap(), p);
        while rem.len() >= r1.len() && !rem.is_empty() {
            let c = mulm(*rem.last().unwrap(), linv, p);
            let shift = rem.len() - r1.len();
            q[shift] = c;
            for (i, &bi) in r1.iter().enumerate() {
                rem[shift + i] = subm(rem[shift + i], mulm(c, bi, p), p);
            }
            ptrim(&mut rem);
            if rem.len() < r1.len() {
                break;
            }
        }
        let snew = psub(&s0, &pmul(&q, &s1, p), p);
        let tnew = psub(&t0, &pmul(&q, &t1, p), p);
        (r0, r1) = (r1, rem);
        (s0, s1) = (s1, snew);
        (t0, t1) = (t1, tnew);
    }
    // normalize to monic
    if let Some(&lead) = r0.last() {
        let li = invm(lead, p);
        let scale = |v: &[u64]| v.iter().map(|&c| mulm(c, li, p)).collect::<Vec<_>>();
        (scale(&r0), scale(&s0), scale(&t0))
    } else {
        (r0, s0, t0)
    }
}

fn psub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let ai = a.get(i).copied().unwrap_or(0);
        let bi = b.get(i).copied().unwrap_or(0);
        out[i] = subm(ai, bi, p);
    }
    ptrim(&mut out);
    out
}

/// Irreducibility of a monic polynomial over `F_p`, by the standard
/// Frobenius criterion: `x^{p^d} = x (mod f)` and for every prime `r | d`,
/// `gcd(x^{p^{d/r}} - x, f) = 1`.
pub fn is_irreducible_fp(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    let xq = |e: &[u64]| -> Vec<u64> {
        // e^p mod f by square and multiply
        let mut base = e.to_vec();
        let mut acc = vec![1u64];
        let mut n = p;
        while n > 0 {
            if n & 1 == 1 {
                acc = prem(&pmul(&acc, &base, p), f, p);
            }
            base = prem(&pmul(&base, &base, p), f, p);
            n >>= 1;
        }
        acc
    };
    let x = vec![0u64, 1];
    // frob[i] = x^{p^{i+1}} mod f
    let mut cur = prem(&x, f, p);
    let mut frob_powers = Vec::with_capacity(d);
    for _ in 0..d {
        cur = xq(&cur);
        frob_powers.push(cur.clone());
    }
    if frob_powers[d - 1] != prem(&x, f, p) {
        return false;
    }
    for r in prime_divisors(d as u64) {
        let e = d / r as usize;
        let h = psub(&frob_powers[e - 1], &prem(&x, f, p), p);
        let (g, _, _) = pgcd_ext(&h, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// -- the field proper -----------------------------------------------------

impl FiniteField {
    /// The prime field `F_p`. Defining polynomial is `x`.
    pub fn prime_field(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FiniteField { p, k: 1, modulus: vec![0, 1] })
    }

    /// `F_{p^k}` with the lexicographically smallest monic irreducible
    /// defining polynomial of degree `k` (polynomials of equal degree are
    /// ordered by their value `sum c_i p^i`).
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::BadDegree);
        }
        if k == 1 {
            return Self::prime_field(p);
        }
        let bound = (p as u128).pow(k as u32);
        let mut v: u128 = 0;
        while v < bound {
            let mut f: Vec<u64> = Vec::with_capacity(k + 1);
            let mut w = v;
            for _ in 0..k {
                f.push((w % p as u128) as u64);
                w /= p as u128;
            }
            f.push(1);
            if is_irreducible_fp(&f, p) {
                return Ok(FiniteField { p, k, modulus: f });
            }
            v += 1;
        }
        unreachable!("irreducible polynomials of every degree exist over F_p")
    }

    /// Field with an explicitly chosen monic irreducible defining polynomial
    /// (low degree first, length `k + 1`). Used for fiber residue fields,
    /// where the natural modulus is the fiber's own irreducible.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let mut m = modulus;
        ptrim(&mut m);
        if m.len() < 2 || *m.last().unwrap() != 1 {
            return Err(Error::BadDegree);
        }
        if !is_irreducible_fp(&m, p) {
            return Err(Error::Unsupported(format!(
                "defining polynomial is not irreducible over F_{}",
                p
            )));
        }
        let k = m.len() - 1;
        Ok(FiniteField { p, k, modulus: m })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements, `p^k`.
    pub fn size(&self) -> u128 {
        (self.p as u128).pow(self.k as u32)
    }

    fn norm(&self, v: Vec<u64>) -> FFElem {
        let mut r = prem(&v, &self.modulus, self.p);
        r.resize(self.k, 0);
        r
    }

    /// Element with the given residue coefficients (reduced mod p and the
    /// defining polynomial as needed).
    pub fn elem(&self, coeffs: &[u64]) -> FFElem {
        self.norm(coeffs.iter().map(|&c| c % self.p).collect())
    }

    /// Image of the residue class of `x` (the generator) — for `k = 1` this
    /// is zero.
    pub fn gen(&self) -> FFElem {
        self.elem(&[0, 1])
    }

    /// Bijection onto `0..p^k`: `sum c_i p^i`.
    pub fn index(&self, a: &FFElem) -> u128 {
        let mut out: u128 = 0;
        for &c in a.iter().rev() {
            out = out * self.p as u128 + c as u128;
        }
        out
    }

    pub fn from_index(&self, mut v: u128) -> FFElem {
        let mut out = Vec::with_capacity(self.k);
        for _ in 0..self.k {
            out.push((v % self.p as u128) as u64);
            v /= self.p as u128;
        }
        out
    }

    pub fn pow(&self, a: &FFElem, mut n: u128) -> FFElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    /// `a^{p^i}` — the `i`-th power of the absolute Frobenius.
    pub fn frobenius(&self, a: &FFElem, i: usize) -> FFElem {
        let mut out = a.clone();
        for _ in 0..i % self.frobenius_order() {
            out = self.pow(&out, self.p as u128);
        }
        out
    }

    /// Inverse of the `i`-th Frobenius power.
    pub fn frobenius_inv(&self, a: &FFElem, i: usize) -> FFElem {
        let ord = self.frobenius_order();
        self.frobenius(a, (ord - i % ord) % ord)
    }

    /// Order of the absolute Frobenius `x -> x^p` on this field (= `k`).
    pub fn frobenius_order(&self) -> usize {
        self.k
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: &FFElem) -> u128 {
        assert!(!self.is_zero(a));
        let group = self.size() - 1;
        let mut ord = group;
        for r in prime_divisors_u128(group) {
            while ord % r == 0 && self.is_one(&self.pow(a, ord / r)) {
                ord /= r;
            }
        }
        ord
    }
}

fn prime_divisors_u128(mut n: u128) -> Vec<u128> {
    let mut out = vec![];
    let mut d: u128 = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Ring for FiniteField {
    type Elem = FFElem;

    fn zero(&self) -> FFElem {
        vec![0; self.k]
    }

    fn one(&self) -> FFElem {
        let mut v = vec![0; self.k];
        v[0] = 1 % self.p;
        v
    }

    fn is_zero(&self, a: &FFElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn add(&self, a: &FFElem, b: &FFElem) -> FFElem {
        a.iter().zip(b).map(|(&x, &y)| addm(x, y, self.p)).collect()
    }

    fn neg(&self, a: &FFElem) -> FFElem {
        a.iter().map(|&x| if x == 0 { 0 } else { self.p - x }).collect()
    }

    fn mul(&self, a: &FFElem, b: &FFElem) -> FFElem {
        self.norm(pmul(a, b, self.p))
    }

    fn from_i64(&self, n: i64) -> FFElem {
        let r = n.rem_euclid(self.p as i64) as u64;
        let mut v = vec![0; self.k];
        v[0] = r;
        v
    }

    fn fmt_elem(&self, a: &FFElem) -> String {
        if self.k == 1 {
            return a[0].to_string();
        }
        let mut terms: Vec<String> = vec![];
        for (i, &c) in a.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".into(),
                (1, c) => format!("{}x", c),
                (i, 1) => format!("x^{}", i),
                (i, c) => format!("{}x^{}", c, i),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl Field for FiniteField {
    fn inv(&self, a: &FFElem) -> FFElem {
        assert!(!self.is_zero(a), "division by zero");
        let mut av = a.clone();
        ptrim(&mut av);
        let (g, s, _) = pgcd_ext(&av, &self.modulus, self.p);
        assert_eq!(g, vec![1], "element not invertible");
        self.norm(s)
    }
}

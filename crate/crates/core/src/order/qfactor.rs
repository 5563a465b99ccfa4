//! Factorization of monic squarefree integer polynomials, used to split
//! the rational center of an order: factor modulo a good prime with
//! Berlekamp's kernel method, Hensel-lift the factors past a Mignotte-style
//! coefficient bound, and recombine subsets.

use num::{BigInt, One, Signed, Zero};

use crate::coeff::fq::is_prime_u64;
use crate::coeff::make_field;
use crate::coeff::poly as gp;
use crate::linalg::{self, Mat};
use crate::ring::Ring;

type ZPoly = Vec<BigInt>;

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn zp_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

/// Division by a monic divisor over `Z`; returns `(q, r)`.
fn zp_divrem_monic(a: &[BigInt], b: &[BigInt]) -> (ZPoly, ZPoly) {
    assert!(b.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let mut rem: ZPoly = a.to_vec();
    rem = trim(rem);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let c = rem.last().unwrap().clone();
        let shift = rem.len() - b.len();
        quot[shift] = c.clone();
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] -= &c * bi;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

// -- arithmetic modulo a BigInt modulus -----------------------------------

fn m_norm(a: &BigInt, m: &BigInt) -> BigInt {
    ((a % m) + m) % m
}

fn mp_norm(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| m_norm(c, m)).collect())
}

fn mp_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    mp_norm(&zp_mul(a, b), m)
}

fn mp_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        *o = m_norm(&(x - y), m);
    }
    trim(out)
}

fn mp_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero);
        let y = b.get(i).cloned().unwrap_or_else(BigInt::zero);
        *o = m_norm(&(x + y), m);
    }
    trim(out)
}

/// `(q, r)` with divisor monic, all coefficients mod `m`.
fn mp_divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    assert!(b.last().map_or(false, |c| c.is_one()), "divisor must be monic");
    let mut rem = mp_norm(a, m);
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let c = rem.last().unwrap().clone();
        let shift = rem.len() - b.len();
        quot[shift] = c.clone();
        for (i, bi) in b.iter().enumerate() {
            rem[shift + i] = m_norm(&(&rem[shift + i] - &c * bi), m);
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

fn centered(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let c = m_norm(c, m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

// -- Berlekamp factorization over F_p --------------------------------------

fn to_fp(f: &crate::coeff::FiniteField, a: &[BigInt]) -> gp::Poly<crate::coeff::FiniteField> {
    let p = BigInt::from(f.characteristic());
    gp::trim(
        f,
        a.iter()
            .map(|c| {
                use num::ToPrimitive;
                let r = m_norm(c, &p).to_u64().unwrap();
                f.elem(&[r])
            })
            .collect(),
    )
}

fn fp_to_z(f: &crate::coeff::FiniteField, a: &gp::Poly<crate::coeff::FiniteField>) -> ZPoly {
    a.iter().map(|c| BigInt::from(f.index(c) as u64)).collect()
}

/// Complete factorization of a squarefree monic polynomial over `F_p` into
/// monic irreducibles, by the Berlekamp kernel and deterministic splitting
/// over the prime field.
fn berlekamp(f: &crate::coeff::FiniteField, fbar: &gp::Poly<crate::coeff::FiniteField>) -> Vec<gp::Poly<crate::coeff::FiniteField>> {
    let n = fbar.len() - 1;
    let p = f.characteristic();
    if n == 1 {
        return vec![fbar.clone()];
    }
    // Q: columns are x^{ip} mod f
    let x = vec![f.zero(), f.one()];
    let xp = gp::pow_mod(f, &x, p as u128, fbar);
    let mut cur: gp::Poly<crate::coeff::FiniteField> = vec![f.one()];
    let mut q = Mat::zero_sized(n, n, f.zero());
    for col in 0..n {
        for (r, c) in cur.iter().enumerate() {
            *q.at_mut(r, col) = c.clone();
        }
        cur = gp::rem(f, &gp::mul(f, &cur, &xp), fbar);
    }
    for i in 0..n {
        let v = f.sub(q.at(i, i), &f.one());
        *q.at_mut(i, i) = v;
    }
    let kernel = linalg::kernel(f, &q);
    let r = kernel.len();
    let mut factors = vec![fbar.clone()];
    for kv in &kernel {
        if factors.len() == r {
            break;
        }
        let v = gp::trim(f, kv.clone());
        if v.len() <= 1 {
            continue; // constants do not split
        }
        let mut next = vec![];
        for g in factors {
            if g.len() <= 2 {
                next.push(g);
                continue;
            }
            let mut remaining = g.clone();
            let mut pieces = vec![];
            for cval in 0..p {
                if remaining.len() <= 1 {
                    break;
                }
                let shifted = gp::sub(f, &v, &vec![f.elem(&[cval])]);
                let h = gp::gcd(f, &remaining, &shifted);
                if h.len() > 1 && h.len() < remaining.len() {
                    remaining = gp::divrem(f, &remaining, &h).0;
                    pieces.push(h);
                } else if h.len() == remaining.len() {
                    remaining = h;
                }
            }
            if remaining.len() > 1 {
                pieces.push(remaining);
            }
            next.extend(pieces);
        }
        factors = next;
    }
    assert_eq!(factors.len(), r, "Berlekamp splitting must reach the kernel dimension");
    factors.sort_by_key(|g| gp::sort_key(f, g));
    factors
}

// -- Hensel lifting ---------------------------------------------------------

/// One quadratic step: from `f = g h (mod m)`, `s g + t h = 1 (mod m)` to
/// the same congruences mod `m^2`. All polynomials monic where stated.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    fz: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = mp_sub(fz, &mp_mul(g, h, &m2), &m2);
    let (_, r) = mp_divrem_monic(&mp_mul(s, &e, &m2), h, &m2);
    let num = mp_sub(&e, &mp_mul(g, &r, &m2), &m2);
    let (dg, rem) = mp_divrem_monic(&num, h, &m2);
    assert!(rem.is_empty(), "Hensel correction must divide exactly");
    let g2 = mp_add(g, &dg, &m2);
    let h2 = mp_add(h, &r, &m2);
    // refresh the Bezout pair
    let one = vec![BigInt::one()];
    let b = mp_sub(&mp_add(&mp_mul(s, &g2, &m2), &mp_mul(t, &h2, &m2), &m2), &one, &m2);
    let (_, ds) = mp_divrem_monic(&mp_mul(s, &b, &m2), &h2, &m2);
    let num2 = mp_sub(&b, &mp_mul(&g2, &ds, &m2), &m2);
    let (dt, rem2) = mp_divrem_monic(&num2, &h2, &m2);
    assert!(rem2.is_empty(), "Bezout correction must divide exactly");
    let s2 = mp_sub(s, &ds, &m2);
    let t2 = mp_sub(t, &dt, &m2);
    (g2, h2, s2, t2)
}

/// Lift a list of pairwise coprime monic factors of `fz` from mod `p` to
/// mod `p^(2^steps) >= target`.
fn hensel_list(fz: &[BigInt], factors: &[ZPoly], p: u64, target: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let mut m = BigInt::from(p);
        while &m < target {
            m = &m * &m;
        }
        return vec![mp_norm(fz, &m)];
    }
    let fp = make_field(p, 1).expect("p prime");
    let half = factors.len() / 2;
    let (left, right) = factors.split_at(half);
    let gl: ZPoly = left.iter().fold(vec![BigInt::one()], |acc, g| {
        mp_norm(&zp_mul(&acc, g), &BigInt::from(p))
    });
    let gr: ZPoly = right.iter().fold(vec![BigInt::one()], |acc, g| {
        mp_norm(&zp_mul(&acc, g), &BigInt::from(p))
    });
    let (gcd, s0, t0) = gp::ext_gcd(&fp, &to_fp(&fp, &gl), &to_fp(&fp, &gr));
    assert_eq!(gcd.len(), 1, "factor halves must be coprime mod p");
    let (mut g, mut h) = (gl, gr);
    let (mut s, mut t) = (fp_to_z(&fp, &s0), fp_to_z(&fp, &t0));
    let mut m = BigInt::from(p);
    while &m < target {
        let (g2, h2, s2, t2) = hensel_step(fz, &g, &h, &s, &t, &m);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    let mut out = hensel_list(&g, left, p, target);
    out.extend(hensel_list(&h, right, p, target));
    out
}

/// Factor a monic squarefree integer polynomial into monic irreducible
/// integer factors, sorted by degree then coefficients.
pub fn factor_monic_squarefree(fz: &[BigInt]) -> Vec<ZPoly> {
    let fz = trim(fz.to_vec());
    assert!(fz.last().map_or(false, |c| c.is_one()), "polynomial must be monic");
    let n = fz.len() - 1;
    if n <= 1 {
        return vec![fz];
    }
    // good prime: f stays squarefree mod p
    let mut p = 3u64;
    let (fp_field, fbar) = loop {
        if is_prime_u64(p) {
            let field = make_field(p, 1).unwrap();
            let fbar = to_fp(&field, &fz);
            if fbar.len() == fz.len() {
                let deriv = gp::derivative(&field, &fbar);
                if gp::gcd(&field, &fbar, &deriv).len() == 1 {
                    break (field, fbar);
                }
            }
        }
        p += 2;
    };
    let modular = berlekamp(&fp_field, &fbar);
    if modular.len() == 1 {
        return vec![fz];
    }
    // Mignotte-style bound: |coeff of any monic divisor| <= 2^n * sum |f_i|
    let height: BigInt = fz.iter().map(|c| c.abs()).sum();
    let bound: BigInt = (BigInt::one() << n) * height * 2 + 1;
    let p_big = BigInt::from(fp_field.characteristic());
    let zfactors: Vec<ZPoly> = modular.iter().map(|g| fp_to_z(&fp_field, g)).collect();
    let lifted = hensel_list(&mp_norm(&fz, &pow_to(&p_big, &bound)), &zfactors, fp_field.characteristic(), &bound);
    let modulus = pow_to(&p_big, &bound);
    // subset recombination
    let mut pool: Vec<ZPoly> = lifted;
    let mut remaining = fz.clone();
    let mut out: Vec<ZPoly> = vec![];
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut advanced = false;
        let combos = combinations(pool.len(), size);
        for combo in combos {
            let mut prod = vec![BigInt::one()];
            for &i in &combo {
                prod = mp_mul(&prod, &pool[i], &modulus);
            }
            let cand = centered(&prod, &modulus);
            if cand.len() <= 1 {
                continue;
            }
            let (q, r) = zp_divrem_monic(&remaining, &cand);
            if r.is_empty() {
                out.push(cand);
                remaining = q;
                let mut keep = vec![];
                for (i, item) in pool.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(item);
                    }
                }
                pool = keep;
                advanced = true;
                break;
            }
        }
        if !advanced {
            size += 1;
        }
    }
    if remaining.len() > 1 {
        out.push(remaining);
    }
    out.sort_by_key(|g| (g.len(), g.clone()));
    // exact reconstruction check
    let prod = out.iter().fold(vec![BigInt::one()], |acc, g| zp_mul(&acc, g));
    assert_eq!(prod, fz, "product of factors must reconstruct the input");
    out
}

/// Smallest power `p^(2^k)` at least `target`.
fn pow_to(p: &BigInt, target: &BigInt) -> BigInt {
    let mut m = p.clone();
    while &m < target {
        m = &m * &m;
    }
    m
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

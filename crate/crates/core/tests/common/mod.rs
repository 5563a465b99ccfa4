//! Independent oracles shared by the integration suites. Everything here
//! is deliberately brute force and independent of the library's own
//! algorithms for the quantities it checks.

use ncspec::algebra::{ScAlgebra, Subspace};
use ncspec::coeff::{FFElem, FiniteField};
use ncspec::ring::Ring;

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
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
    let mut out = vec![];
    rec(0, n, k, &mut vec![], &mut out);
    out
}

/// All subspaces of `F_q^d`, enumerated as reduced row-echelon forms:
/// every choice of pivot columns, every assignment of free entries (the
/// entries in non-pivot columns to the right of each pivot).
pub fn all_subspaces(field: &FiniteField, d: usize) -> Vec<Subspace<FiniteField>> {
    let q = field.size();
    let mut out = vec![Subspace::zero(d)];
    for k in 1..=d {
        for pivots in combinations(d, k) {
            let mut free = vec![];
            for (r, &p) in pivots.iter().enumerate() {
                for c in (p + 1)..d {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let total = q.pow(free.len() as u32);
            for combo in 0..total {
                let mut idx = combo;
                let mut rows = vec![vec![field.zero(); d]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = field.one();
                }
                for &(r, c) in &free {
                    rows[r][c] = field.from_index(idx % q);
                    idx /= q;
                }
                let s = Subspace::from_vectors(field, d, &rows);
                debug_assert_eq!(s.pivots(), &pivots[..]);
                out.push(s);
            }
        }
    }
    out
}

/// Is the subspace a two-sided ideal of `a`?
pub fn is_two_sided_ideal(a: &ScAlgebra<FiniteField>, s: &Subspace<FiniteField>) -> bool {
    let f = a.ring();
    s.basis().iter().all(|v| {
        (0..a.dim()).all(|i| {
            let e = a.basis_vec(i);
            s.contains(f, &a.mul_vec(&e, v)) && s.contains(f, &a.mul_vec(v, &e))
        })
    })
}

/// Is the subspace nilpotent as an ideal (some product power vanishes)?
pub fn is_nilpotent_space(a: &ScAlgebra<FiniteField>, s: &Subspace<FiniteField>) -> bool {
    let f = a.ring();
    let mut power: Vec<Vec<FFElem>> = s.basis().to_vec();
    for _ in 0..=a.dim() {
        if power.is_empty() {
            return true;
        }
        let next: Vec<Vec<FFElem>> = power
            .iter()
            .flat_map(|x| s.basis().iter().map(|y| a.mul_vec(x, y)))
            .collect();
        power = Subspace::from_vectors(f, a.dim(), &next).basis().to_vec();
    }
    power.is_empty()
}

/// The brute-force maximal nilpotent two-sided ideal, by enumerating every
/// subspace. Asserts the maximum is unique.
pub fn bruteforce_max_nilpotent_ideal(a: &ScAlgebra<FiniteField>) -> Subspace<FiniteField> {
    let field = a.ring();
    let candidates: Vec<Subspace<FiniteField>> = all_subspaces(field, a.dim())
        .into_iter()
        .filter(|s| is_two_sided_ideal(a, s) && is_nilpotent_space(a, s))
        .collect();
    let best_dim = candidates.iter().map(|s| s.dim()).max().unwrap();
    let best: Vec<&Subspace<FiniteField>> =
        candidates.iter().filter(|s| s.dim() == best_dim).collect();
    assert_eq!(best.len(), 1, "the maximal nilpotent ideal must be unique");
    best[0].clone()
}

/// Number of ideals of the Gaussian integers of norm `n`: lattice points on
/// `x^2 + y^2 = n`, divided by the four units.
pub fn gaussian_ideal_count(n: i64) -> i64 {
    let mut count = 0;
    let mut bound = 0i64;
    while bound * bound <= n {
        bound += 1;
    }
    for x in -bound..=bound {
        for y in -bound..=bound {
            if x * x + y * y == n {
                count += 1;
            }
        }
    }
    assert_eq!(count % 4, 0);
    count / 4
}

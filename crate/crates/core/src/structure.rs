//! Structure theory of finite-dimensional algebras over finite fields:
//! Jacobson radical, Wedderburn block data, maximal two-sided ideals with
//! residue data, primitive idempotent splitting of commutative semisimple
//! algebras, and block-idempotent lifting.
//!
//! The radical is computed by the Friedl-Ronyai perfect-field method: a
//! descending chain of ideals cut out by the characteristic-polynomial
//! coefficient forms `c_{p^i}(L_{xy})`. The plain trace form (the `i = 0`
//! stage) is wrong on its own in small characteristic; the higher stages are
//! Frobenius-twisted trace conditions, linearized by substituting
//! `eta = xi^{p^i}` and solving an ordinary linear system.

use crate::algebra::{ScAlgebra, Subspace, TwoSidedIdeal};
use crate::coeff::{FFElem, FiniteField};
use crate::linalg::{self, Mat};
use crate::ring::{Field, Ring};
use crate::{Error, Result};

/// One simple block of `A / J`: `M_r(F_{q^n})` together with the kernel of
/// the projection of `A` onto it (a maximal two-sided ideal).
#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub r: usize,
    pub n: usize,
    pub kernel: TwoSidedIdeal<FiniteField>,
}

/// Radical plus the complete list of simple blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct WedderburnData {
    pub radical: TwoSidedIdeal<FiniteField>,
    pub blocks: Vec<Block>,
}

/// A closed point of Spec: a maximal two-sided ideal with residue data
/// `kappa = M_r(F_{q'})`, `N = q'`.
#[derive(Debug, Clone, PartialEq)]
pub struct Point {
    pub ideal: TwoSidedIdeal<FiniteField>,
    pub r: usize,
    /// Degree `n` of the residue field of the center over the ground field.
    pub center_degree: usize,
    /// `N(x) = q^n`.
    pub residue_size: u128,
}

/// A complete orthogonal family of block idempotents: one idempotent per
/// maximal two-sided ideal, summing to 1.
#[derive(Debug, Clone)]
pub struct IdempotentFamily {
    pub entries: Vec<(Point, Vec<FFElem>)>,
}

/// Characteristic polynomial of a square matrix over a field, as ascending
/// coefficients (constant first, leading 1 last). Hessenberg reduction
/// followed by the principal-minor recurrence; exact over any field.
pub fn charpoly(f: &FiniteField, m: &Mat<FFElem>) -> Vec<FFElem> {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let mut h = m.clone();
    // similarity reduction to upper Hessenberg form
    for col in 0..n.saturating_sub(2) {
        let Some(pr) = ((col + 1)..n).find(|&r| !f.is_zero(h.at(r, col))) else {
            continue;
        };
        if pr != col + 1 {
            h.swap_rows(col + 1, pr);
            for r in 0..n {
                let tmp = h.at(r, col + 1).clone();
                *h.at_mut(r, col + 1) = h.at(r, pr).clone();
                *h.at_mut(r, pr) = tmp;
            }
        }
        let piv_inv = f.inv(h.at(col + 1, col));
        for r2 in (col + 2)..n {
            if f.is_zero(h.at(r2, col)) {
                continue;
            }
            let factor = f.mul(h.at(r2, col), &piv_inv);
            for c in 0..n {
                let v = f.sub(h.at(r2, c), &f.mul(&factor, h.at(col + 1, c)));
                *h.at_mut(r2, c) = v;
            }
            for r in 0..n {
                let v = f.add(h.at(r, col + 1), &f.mul(&factor, h.at(r, r2)));
                *h.at_mut(r, col + 1) = v;
            }
        }
    }
    // p_k = char poly of the leading k x k block
    let mut polys: Vec<Vec<FFElem>> = vec![vec![f.one()]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        // t * p_{k-1}
        let mut cur = vec![f.zero()];
        cur.extend(prev.iter().cloned());
        // - h[k-1][k-1] * p_{k-1}
        for (idx, c) in prev.iter().enumerate() {
            cur[idx] = f.sub(&cur[idx], &f.mul(h.at(k - 1, k - 1), c));
        }
        let mut prod = f.one();
        for m1 in 1..k {
            prod = f.mul(&prod, h.at(k - m1, k - m1 - 1));
            if f.is_zero(&prod) {
                break;
            }
            let coef = f.mul(h.at(k - 1 - m1, k - 1), &prod);
            for (idx, c) in polys[k - 1 - m1].iter().enumerate() {
                cur[idx] = f.sub(&cur[idx], &f.mul(&coef, c));
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// The Jacobson radical: the unique largest nilpotent two-sided ideal.
pub fn radical(a: &ScAlgebra<FiniteField>) -> TwoSidedIdeal<FiniteField> {
    let f = a.ring().clone();
    let d = a.dim();
    let p = f.characteristic();
    // number of stages: l is the largest exponent with p^l <= d
    let mut l = 0usize;
    let mut pw = 1u128;
    while pw * p as u128 <= d as u128 {
        pw *= p as u128;
        l += 1;
    }
    let mut current: Vec<Vec<FFElem>> = (0..d).map(|i| a.basis_vec(i)).collect();
    for stage in 0..=l {
        if current.is_empty() {
            break;
        }
        let m = current.len();
        let ppow = (p as usize).pow(stage as u32);
        // rows: conditions indexed by y = current[j]; columns: eta_t
        let mut rows = Vec::with_capacity(m);
        for j in 0..m {
            let mut row = Vec::with_capacity(m);
            for t in 0..m {
                let z = a.mul_vec(&current[t], &current[j]);
                let lm = a.left_mult_mat(&z);
                let g = if stage == 0 {
                    linalg::trace(&f, &lm)
                } else {
                    // coefficient of t^{d - p^stage} in the characteristic
                    // polynomial (ascending index d - p^stage)
                    charpoly(&f, &lm)[d - ppow].clone()
                };
                row.push(g);
            }
            rows.push(row);
        }
        let mat = Mat::from_rows(rows);
        let eta_basis = linalg::kernel(&f, &mat);
        let mut next: Vec<Vec<FFElem>> = vec![];
        for eta in eta_basis {
            let mut x = vec![f.zero(); d];
            for (t, et) in eta.iter().enumerate() {
                let xi = f.frobenius_inv(et, stage);
                if f.is_zero(&xi) {
                    continue;
                }
                for c in 0..d {
                    x[c] = f.add(&x[c], &f.mul(&xi, &current[t][c]));
                }
            }
            next.push(x);
        }
        let space = Subspace::from_vectors(&f, d, &next);
        current = space.basis().to_vec();
    }
    let space = Subspace::from_vectors(&f, d, &current);
    TwoSidedIdeal::from_subspace(a, space).expect("the radical is a two-sided ideal")
}

fn isqrt_exact(n: usize) -> usize {
    let mut r = 0;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    assert_eq!(r * r, n, "block dimension {} is not a perfect square multiple", n);
    r
}

/// Coordinates of `v` with respect to the echelonized basis of `space`.
/// Panics if `v` is not in the space.
fn coords_in(f: &FiniteField, space: &Subspace<FiniteField>, v: &[FFElem]) -> Vec<FFElem> {
    assert!(space.contains(f, v), "vector not in subspace");
    space.pivots().iter().map(|&pc| v[pc].clone()).collect()
}

fn subspace_key(f: &FiniteField, s: &Subspace<FiniteField>) -> (usize, Vec<usize>, Vec<u128>) {
    let flat = s.basis().iter().flat_map(|row| row.iter().map(|c| f.index(c))).collect();
    (s.dim(), s.pivots().to_vec(), flat)
}

/// `x^N` in the algebra, by square and multiply.
fn alg_pow(a: &ScAlgebra<FiniteField>, x: &[FFElem], mut n: u128) -> Vec<FFElem> {
    let mut base = x.to_vec();
    let mut acc = a.unit().to_vec();
    while n > 0 {
        if n & 1 == 1 {
            acc = a.mul_vec(&acc, &base);
        }
        base = a.mul_vec(&base, &base);
        n >>= 1;
    }
    acc
}

/// Basis of the fixed space of `x -> x^q` on a commutative subspace `z`
/// of `a` (ambient coordinates). This map is `F_q`-linear.
fn frobenius_fixed_space(
    a: &ScAlgebra<FiniteField>,
    z: &Subspace<FiniteField>,
) -> Vec<Vec<FFElem>> {
    let f = a.ring();
    let q = f.size();
    let m = z.dim();
    let mut rows = vec![vec![f.zero(); m]; m];
    for (t, zt) in z.basis().iter().enumerate() {
        let w = alg_pow(a, zt, q);
        let diff = a.sub_vec(&w, zt);
        let coords = coords_in(f, z, &diff);
        for (r, c) in coords.into_iter().enumerate() {
            rows[r][t] = c;
        }
    }
    let mat = Mat::from_rows(rows);
    linalg::kernel(f, &mat)
        .into_iter()
        .map(|ker| {
            let mut v = vec![f.zero(); a.dim()];
            for (t, c) in ker.iter().enumerate() {
                for amb in 0..a.dim() {
                    v[amb] = f.add(&v[amb], &f.mul(c, &z.basis()[t][amb]));
                }
            }
            v
        })
        .collect()
}

/// Primitive idempotents of the split commutative algebra spanned by
/// `fixed` inside `a` (`fixed` spans a subalgebra isomorphic to `F_q^m`).
/// Deterministic: refine along the basis vectors, splitting each part into
/// eigencomponents of multiplication.
fn split_fixed(a: &ScAlgebra<FiniteField>, fixed: &[Vec<FFElem>]) -> Vec<Vec<FFElem>> {
    let f = a.ring().clone();
    let q = f.size();
    let target = Subspace::from_vectors(&f, a.dim(), fixed).dim();
    let mut parts: Vec<Vec<FFElem>> = vec![a.unit().to_vec()];
    for b in fixed {
        if parts.len() == target {
            break;
        }
        let mut new_parts = vec![];
        for e in &parts {
            let span_vecs: Vec<Vec<FFElem>> = fixed.iter().map(|v| a.mul_vec(v, e)).collect();
            let part_space = Subspace::from_vectors(&f, a.dim(), &span_vecs);
            if part_space.dim() <= 1 {
                new_parts.push(e.clone());
                continue;
            }
            let x = a.mul_vec(b, e);
            // minimal polynomial of x acting on the part (unit element e)
            let mut powers: Vec<Vec<FFElem>> = vec![e.clone()];
            loop {
                let nxt = a.mul_vec(powers.last().unwrap(), &x);
                let space = Subspace::from_vectors(&f, a.dim(), &powers);
                if space.contains(&f, &nxt) {
                    break;
                }
                powers.push(nxt);
            }
            let deg = powers.len();
            if deg == 1 {
                new_parts.push(e.clone());
                continue;
            }
            // mu(t) = t^deg - sum a_i t^i from the linear dependence
            let cols: Vec<Vec<FFElem>> = (0..a.dim())
                .map(|amb| powers.iter().map(|pw| pw[amb].clone()).collect())
                .collect();
            let mat = Mat::from_rows(cols);
            let xdeg = a.mul_vec(powers.last().unwrap(), &x);
            let sol = linalg::solve(&f, &mat, &xdeg).expect("power relation is consistent");
            let mut mu: Vec<FFElem> = sol.iter().map(|c| f.neg(c)).collect();
            mu.push(f.one());
            // roots by deterministic scan of F_q
            let mut roots = vec![];
            for idx in 0..q {
                let c = f.from_index(idx);
                if f.is_zero(&crate::coeff::poly::eval(&f, &mu, &c)) {
                    roots.push(c);
                }
            }
            assert_eq!(roots.len(), deg, "split minimal polynomial must have distinct roots in F_q");
            // decompose e into eigencomponents of multiplication by x
            let pdim = part_space.dim();
            let mut tmat = Mat::zero_sized(pdim, pdim, f.zero());
            for (t, w) in part_space.basis().iter().enumerate() {
                let xw = a.mul_vec(&x, w);
                let coords = coords_in(&f, &part_space, &xw);
                for (r, c) in coords.into_iter().enumerate() {
                    *tmat.at_mut(r, t) = c;
                }
            }
            let mut eig_bases: Vec<Vec<Vec<FFElem>>> = vec![];
            for c in &roots {
                let mut shifted = tmat.clone();
                for i in 0..pdim {
                    let v = f.sub(shifted.at(i, i), c);
                    *shifted.at_mut(i, i) = v;
                }
                let ker = linalg::kernel(&f, &shifted);
                let amb: Vec<Vec<FFElem>> = ker
                    .iter()
                    .map(|k| {
                        let mut v = vec![f.zero(); a.dim()];
                        for (t, kc) in k.iter().enumerate() {
                            for ambi in 0..a.dim() {
                                v[ambi] = f.add(&v[ambi], &f.mul(kc, &part_space.basis()[t][ambi]));
                            }
                        }
                        v
                    })
                    .collect();
                eig_bases.push(amb);
            }
            // solve e = sum of eigencomponents
            let all: Vec<Vec<FFElem>> = eig_bases.iter().flatten().cloned().collect();
            let cols: Vec<Vec<FFElem>> = (0..a.dim())
                .map(|amb| all.iter().map(|v| v[amb].clone()).collect())
                .collect();
            let sol = linalg::solve(&f, &Mat::from_rows(cols), e).expect("eigenspaces span the part");
            let mut offset = 0;
            for basis in &eig_bases {
                let mut comp = vec![f.zero(); a.dim()];
                for (t, v) in basis.iter().enumerate() {
                    let c = &sol[offset + t];
                    for amb in 0..a.dim() {
                        comp[amb] = f.add(&comp[amb], &f.mul(c, &v[amb]));
                    }
                }
                offset += basis.len();
                if !a.is_zero_vec(&comp) {
                    new_parts.push(comp);
                }
            }
        }
        parts = new_parts;
    }
    parts.sort_by_key(|e| e.iter().map(|c| f.index(c)).collect::<Vec<_>>());
    parts
}

/// Primitive idempotents of a commutative semisimple algebra over `F_q`:
/// a complete orthogonal set summing to 1, one per field factor.
pub fn split_commutative(c: &ScAlgebra<FiniteField>) -> Result<Vec<Vec<FFElem>>> {
    let d = c.dim();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if c.c(i, j, k) != c.c(j, i, k) {
                    return Err(Error::NotCommutative);
                }
            }
        }
    }
    if radical(c).dim() != 0 {
        return Err(Error::NotSemisimple);
    }
    let whole = Subspace::from_vectors(c.ring(), d, &(0..d).map(|i| c.basis_vec(i)).collect::<Vec<_>>());
    let fixed = frobenius_fixed_space(c, &whole);
    let parts = split_fixed(c, &fixed);
    // family axioms, exact
    let mut sum = c.zero_vec();
    for e in &parts {
        assert_eq!(c.mul_vec(e, e), *e, "primitive idempotent fails e^2 = e");
        sum = c.add_vec(&sum, e);
    }
    assert_eq!(sum, c.unit().to_vec(), "primitive idempotents must sum to 1");
    for (i, e) in parts.iter().enumerate() {
        for (j, e2) in parts.iter().enumerate() {
            if i != j {
                assert!(c.is_zero_vec(&c.mul_vec(e, e2)), "idempotents must be orthogonal");
            }
        }
    }
    Ok(parts)
}

pub(crate) struct WedderburnFull {
    pub data: WedderburnData,
    /// Primitive central idempotents of `A/J`, aligned with `data.blocks`.
    pub central_idempotents: Vec<Vec<FFElem>>,
}

pub(crate) fn wedderburn_full(a: &ScAlgebra<FiniteField>) -> WedderburnFull {
    let f = a.ring().clone();
    let j = radical(a);
    let q = a.quotient(&j).expect("the radical is a proper ideal");
    let qalg = q.algebra.clone();
    let z = qalg.center();
    let fixed = frobenius_fixed_space(&qalg, &z);
    let k = Subspace::from_vectors(&f, qalg.dim(), &fixed).dim();
    let (mut blocks, mut idems): (Vec<Block>, Vec<Vec<FFElem>>) = if k == 1 {
        let n = z.dim();
        let r = isqrt_exact(qalg.dim() / n);
        (
            vec![Block { r, n, kernel: j.clone() }],
            vec![qalg.unit().to_vec()],
        )
    } else {
        let parts = split_fixed(&qalg, &fixed);
        assert_eq!(parts.len(), k, "splitting must produce one idempotent per factor");
        let mut blocks = vec![];
        let mut idems = vec![];
        for e in parts {
            let span: Vec<Vec<FFElem>> =
                (0..qalg.dim()).map(|i| qalg.mul_vec(&qalg.basis_vec(i), &e)).collect();
            let bspace = Subspace::from_vectors(&f, qalg.dim(), &span);
            let zspan: Vec<Vec<FFElem>> = z.basis().iter().map(|v| qalg.mul_vec(v, &e)).collect();
            let n = Subspace::from_vectors(&f, qalg.dim(), &zspan).dim();
            let r = isqrt_exact(bspace.dim() / n);
            // kernel of A -> block: x such that pi(x) * e = 0
            let mut rows = vec![vec![f.zero(); a.dim()]; bspace.dim()];
            for col in 0..a.dim() {
                let px = q.project(&a.basis_vec(col));
                let pe = qalg.mul_vec(&px, &e);
                let coords = coords_in(&f, &bspace, &pe);
                for (rr, c) in coords.into_iter().enumerate() {
                    rows[rr][col] = c;
                }
            }
            let ker = linalg::kernel(&f, &Mat::from_rows(rows));
            let kspace = Subspace::from_vectors(&f, a.dim(), &ker);
            let kernel = TwoSidedIdeal::from_subspace(a, kspace)
                .expect("the kernel of a projection onto a block is a two-sided ideal");
            blocks.push(Block { r, n, kernel });
            idems.push(e);
        }
        (blocks, idems)
    };
    // reproducible order: (n, r, canonical kernel basis)
    let mut order: Vec<usize> = (0..blocks.len()).collect();
    order.sort_by_key(|&i| {
        let b = &blocks[i];
        (b.n, b.r, subspace_key(&f, b.kernel.space()))
    });
    blocks = order.iter().map(|&i| blocks[i].clone()).collect();
    idems = order.iter().map(|&i| idems[i].clone()).collect();
    let dim_check: usize = blocks.iter().map(|b| b.r * b.r * b.n).sum();
    assert_eq!(dim_check + j.dim(), a.dim(), "Wedderburn dimensions must add up");
    WedderburnFull {
        data: WedderburnData { radical: j, blocks },
        central_idempotents: idems,
    }
}

/// Wedderburn decomposition: radical plus the complete block list. Each
/// block's matrix size is recovered as the exact integer square root of
/// (block dimension)/n, which is valid because the Brauer group of a finite
/// field is trivial.
pub fn wedderburn(a: &ScAlgebra<FiniteField>) -> WedderburnData {
    wedderburn_full(a).data
}

/// One `Point` per Wedderburn block, sorted by `(N, canonical ideal basis)`.
pub fn max_two_sided_ideals(a: &ScAlgebra<FiniteField>) -> Vec<Point> {
    let f = a.ring().clone();
    let q = f.size();
    let data = wedderburn(a);
    let mut points: Vec<Point> = data
        .blocks
        .into_iter()
        .map(|b| Point {
            residue_size: q.pow(b.n as u32),
            r: b.r,
            center_degree: b.n,
            ideal: b.kernel,
        })
        .collect();
    points.sort_by_key(|p| (p.residue_size, subspace_key(&f, p.ideal.space())));
    points
}

/// Block idempotents for every maximal two-sided ideal, lifted through the
/// radical with the recurrence `e <- e + (1 - 2e)(e^2 - e)` (exact after
/// finitely many steps since `J` is nilpotent). The family is orthogonal
/// and complete.
pub fn block_idempotents(a: &ScAlgebra<FiniteField>) -> IdempotentFamily {
    let f = a.ring().clone();
    let full = wedderburn_full(a);
    let comp = full.data.radical.space().complement_positions();
    let section = |w: &[FFElem]| -> Vec<FFElem> {
        let mut v = vec![f.zero(); a.dim()];
        for (r, &pos) in comp.iter().enumerate() {
            v[pos] = w[r].clone();
        }
        v
    };
    let k = full.data.blocks.len();
    let mut lifted: Vec<Vec<FFElem>> = vec![];
    for (i, ebar) in full.central_idempotents.iter().enumerate() {
        if i + 1 == k {
            // completeness: the last idempotent is forced by the sum
            let mut u = a.unit().to_vec();
            for e in &lifted {
                u = a.sub_vec(&u, e);
            }
            lifted.push(u);
            break;
        }
        let mut u = a.unit().to_vec();
        for e in &lifted {
            u = a.sub_vec(&u, e);
        }
        let cand = section(ebar);
        let mut e = a.mul_vec(&a.mul_vec(&u, &cand), &u);
        let mut steps = 0;
        loop {
            let defect = a.sub_vec(&a.mul_vec(&e, &e), &e);
            if a.is_zero_vec(&defect) {
                break;
            }
            steps += 1;
            assert!(steps <= a.dim() + 2, "idempotent lifting must terminate");
            // e + (1 - 2e) * defect
            let two_e = a.add_vec(&e, &e);
            let one_minus = a.sub_vec(a.unit(), &two_e);
            e = a.add_vec(&e, &a.mul_vec(&one_minus, &defect));
        }
        lifted.push(e);
    }
    let points = max_two_sided_ideals(a);
    // align lifted idempotents with sorted points: e belongs to the unique
    // point whose ideal does not contain it
    let mut entries = vec![];
    for p in points {
        let matching: Vec<usize> = (0..lifted.len())
            .filter(|&i| !p.ideal.contains(&f, &lifted[i]))
            .collect();
        assert_eq!(matching.len(), 1, "exactly one family member must avoid each maximal ideal");
        entries.push((p, lifted[matching[0]].clone()));
    }
    let family = IdempotentFamily { entries };
    verify_family(a, &family);
    family
}

fn verify_family(a: &ScAlgebra<FiniteField>, fam: &IdempotentFamily) {
    let f = a.ring();
    let mut sum = a.zero_vec();
    for (_, e) in &fam.entries {
        assert_eq!(a.mul_vec(e, e), *e, "family member is not idempotent");
        sum = a.add_vec(&sum, e);
    }
    assert_eq!(sum, a.unit().to_vec(), "family must sum to 1");
    for (i, (pi, ei)) in fam.entries.iter().enumerate() {
        for (j, (_, ej)) in fam.entries.iter().enumerate() {
            if i != j {
                assert!(a.is_zero_vec(&a.mul_vec(ei, ej)), "family must be orthogonal");
            }
        }
        assert!(!pi.ideal.contains(f, ei), "e must be nonzero in its own block");
        for (j, (pj, _)) in fam.entries.iter().enumerate() {
            if i != j {
                assert!(pj.ideal.contains(f, ei), "e must vanish in other blocks");
            }
        }
    }
}

/// Detect ideal containment with a block idempotent: for `e` an idempotent
/// for `(A, m)` and a two-sided ideal `I`, `I` is contained in `m` if and
/// only if `e` is not in `I`. Returns `I ⊆ m` after verifying `e` and
/// asserting the equivalence.
pub fn idempotent_detects_ideal(
    a: &ScAlgebra<FiniteField>,
    e: &[FFElem],
    m: &Point,
    ideal: &TwoSidedIdeal<FiniteField>,
) -> Result<bool> {
    let f = a.ring();
    if a.mul_vec(e, e) != e.to_vec() || m.ideal.contains(f, e) {
        return Err(Error::BadIdempotent);
    }
    for other in max_two_sided_ideals(a) {
        if other.ideal != m.ideal && !other.ideal.contains(f, e) {
            return Err(Error::BadIdempotent);
        }
    }
    let contained = ideal.space().basis().iter().all(|v| m.ideal.contains(f, v));
    let e_in_ideal = ideal.contains(f, e);
    assert_eq!(contained, !e_in_ideal, "idempotent containment criterion must agree");
    Ok(contained)
}

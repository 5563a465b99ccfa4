//! Structure-constant algebras and exact linear algebra on them: centers,
//! centralizers, two-sided ideals, quotients, and the constructors used by
//! the worked examples (group algebras, matrix algebras).
//!
//! An algebra is a free module of finite rank over its coefficient ring,
//! with multiplication given by a structure-constant tensor
//! `e_i e_j = sum_k c[i][j][k] e_k` and a distinguished unit vector. The
//! tensor is `R`-bilinear by construction, so scalars from the base ring
//! commute with everything; associativity and the unit law are verified
//! exhaustively over basis triples when an algebra is built.

pub mod descr;

use crate::linalg::{self, Mat};
use crate::ring::{Field, Ring};
use crate::{Error, Result};

/// A subspace of the coefficient space of an algebra, kept in reduced
/// row-echelon form so that equality of subspaces is representation
/// equality.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Vec<Vec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn from_vectors(f: &F, ambient: usize, vecs: &[Vec<F::Elem>]) -> Self {
        for v in vecs {
            assert_eq!(v.len(), ambient, "vector has wrong length");
        }
        if vecs.is_empty() {
            return Subspace { ambient, basis: vec![], pivots: vec![] };
        }
        let mut m = Mat::from_rows(vecs.to_vec());
        let pivots = linalg::rref(f, &mut m);
        let basis = m.rows_vec().into_iter().take(pivots.len()).collect();
        Subspace { ambient, basis, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: vec![], pivots: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residual of `v` after clearing all pivot coordinates against the
    /// basis. Zero iff `v` lies in the subspace.
    pub fn reduce(&self, f: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let mut w = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if f.is_zero(&w[pc]) {
                continue;
            }
            let factor = w[pc].clone();
            for c in 0..self.ambient {
                w[c] = f.sub(&w[c], &f.mul(&factor, &self.basis[row][c]));
            }
        }
        w
    }

    pub fn contains(&self, f: &F, v: &[F::Elem]) -> bool {
        self.reduce(f, v).iter().all(|c| f.is_zero(c))
    }

    pub fn contains_space(&self, f: &F, other: &Subspace<F>) -> bool {
        other.basis.iter().all(|v| self.contains(f, v))
    }

    pub fn sum(&self, f: &F, other: &Subspace<F>) -> Subspace<F> {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(f, self.ambient, &vecs)
    }

    /// Intersection, as the joint kernel of the two residual maps.
    pub fn intersect(&self, f: &F, other: &Subspace<F>) -> Subspace<F> {
        let n = self.ambient;
        assert_eq!(n, other.ambient);
        let mut rows = vec![];
        for which in [self, other] {
            for row in 0..n {
                let mut r = vec![f.zero(); n];
                for col in 0..n {
                    let mut e = vec![f.zero(); n];
                    e[col] = f.one();
                    r[col] = which.reduce(f, &e)[row].clone();
                }
                rows.push(r);
            }
        }
        let ker = linalg::kernel(f, &Mat::from_rows(rows));
        Subspace::from_vectors(f, n, &ker)
    }

    /// Indices not used as pivots: coordinates of a complement.
    pub fn complement_positions(&self) -> Vec<usize> {
        let pivot_set: std::collections::BTreeSet<usize> = self.pivots.iter().copied().collect();
        (0..self.ambient).filter(|c| !pivot_set.contains(c)).collect()
    }
}

/// A two-sided ideal, presented by its echelonized basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoSidedIdeal<F: Field> {
    space: Subspace<F>,
}

impl<F: Field> TwoSidedIdeal<F> {
    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, f: &F, v: &[F::Elem]) -> bool {
        self.space.contains(f, v)
    }

    /// Wrap a subspace after checking closure under left and right
    /// multiplication by every basis element of `a`.
    pub fn from_subspace(a: &ScAlgebra<F>, space: Subspace<F>) -> Result<Self> {
        let f = a.ring();
        for v in space.basis() {
            for i in 0..a.dim() {
                let ei = a.basis_vec(i);
                if !space.contains(f, &a.mul_vec(&ei, v)) || !space.contains(f, &a.mul_vec(v, &ei)) {
                    return Err(Error::BadIdeal);
                }
            }
        }
        Ok(TwoSidedIdeal { space })
    }
}

/// A unital associative algebra presented by structure constants, free of
/// finite rank over its coefficient ring.
#[derive(Debug, Clone, PartialEq)]
pub struct ScAlgebra<R: Ring> {
    ring: R,
    dim: usize,
    labels: Vec<String>,
    /// `tensor[(i*d + j)*d + k]` = coefficient of `e_k` in `e_i e_j`.
    tensor: Vec<R::Elem>,
    unit: Vec<R::Elem>,
}

impl<R: Ring> ScAlgebra<R> {
    /// Build an algebra, verifying associativity, the unit law and positive
    /// rank by full enumeration of basis triples.
    pub fn build(ring: R, labels: Vec<String>, tensor: Vec<R::Elem>, unit: Vec<R::Elem>) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::ZeroRank);
        }
        if tensor.len() != d * d * d || unit.len() != d {
            return Err(Error::DimMismatch { expected: d * d * d, got: tensor.len() });
        }
        let a = ScAlgebra { ring, dim: d, labels, tensor, unit };
        a.verify()?;
        Ok(a)
    }

    fn verify(&self) -> Result<()> {
        let d = self.dim;
        let r = &self.ring;
        // associativity: (e_i e_j) e_k = e_i (e_j e_k), all triples
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut lhs = r.zero();
                        let mut rhs = r.zero();
                        for m in 0..d {
                            lhs = r.add(&lhs, &r.mul(self.c(i, j, m), self.c(m, k, l)));
                            rhs = r.add(&rhs, &r.mul(self.c(j, k, m), self.c(i, m, l)));
                        }
                        if lhs != rhs {
                            return Err(Error::NotAssociative(i, j, k));
                        }
                    }
                }
            }
        }
        // unit law: u e_j = e_j u = e_j
        for j in 0..d {
            let ej = self.basis_vec(j);
            if self.mul_vec(&self.unit, &ej) != ej || self.mul_vec(&ej, &self.unit) != ej {
                return Err(Error::UnitLaw(j));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[R::Elem] {
        &self.unit
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> &R::Elem {
        &self.tensor[(i * self.dim + j) * self.dim + k]
    }

    pub fn tensor(&self) -> &[R::Elem] {
        &self.tensor
    }

    pub fn basis_vec(&self, i: usize) -> Vec<R::Elem> {
        let mut v = vec![self.ring.zero(); self.dim];
        v[i] = self.ring.one();
        v
    }

    pub fn zero_vec(&self) -> Vec<R::Elem> {
        vec![self.ring.zero(); self.dim]
    }

    pub fn is_zero_vec(&self, v: &[R::Elem]) -> bool {
        v.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn add_vec(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        a.iter().zip(b).map(|(x, y)| self.ring.add(x, y)).collect()
    }

    pub fn sub_vec(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        a.iter().zip(b).map(|(x, y)| self.ring.sub(x, y)).collect()
    }

    pub fn scale_vec(&self, c: &R::Elem, v: &[R::Elem]) -> Vec<R::Elem> {
        v.iter().map(|x| self.ring.mul(c, x)).collect()
    }

    /// Product of two elements given by coefficient vectors.
    pub fn mul_vec(&self, a: &[R::Elem], b: &[R::Elem]) -> Vec<R::Elem> {
        let d = self.dim;
        let r = &self.ring;
        let mut out = vec![r.zero(); d];
        for (i, ai) in a.iter().enumerate() {
            if r.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if r.is_zero(bj) {
                    continue;
                }
                let s = r.mul(ai, bj);
                for k in 0..d {
                    let c = self.c(i, j, k);
                    if !r.is_zero(c) {
                        out[k] = r.add(&out[k], &r.mul(&s, c));
                    }
                }
            }
        }
        out
    }

    pub fn pow_vec(&self, a: &[R::Elem], n: usize) -> Vec<R::Elem> {
        let mut acc = self.unit.clone();
        for _ in 0..n {
            acc = self.mul_vec(&acc, a);
        }
        acc
    }

    /// Present the same algebra on a basis whose first vector is the unit
    /// (labels become `g1, g2, ...`). Needed before serializing algebras
    /// built with a non-basis unit, such as products of fields.
    pub fn rebased_with_unit_first(&self) -> ScAlgebra<R>
    where
        R: Field,
    {
        let f = self.ring.clone();
        let d = self.dim;
        let mut rows = vec![self.unit.clone()];
        for i in 0..d {
            if rows.len() == d {
                break;
            }
            let mut cand = rows.clone();
            cand.push(self.basis_vec(i));
            if Subspace::from_vectors(&f, d, &cand).dim() > rows.len() {
                rows.push(self.basis_vec(i));
            }
        }
        let mat = Mat::from_rows((0..d).map(|r| (0..d).map(|c| rows[c][r].clone()).collect()).collect());
        let inv = linalg::invert(&f, &mat).expect("completed unit basis is invertible");
        let coords = |v: &[R::Elem]| linalg::mat_vec(&f, &inv, v);
        let mut tensor = vec![f.zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let prod = coords(&self.mul_vec(&rows[i], &rows[j]));
                for (k, c) in prod.into_iter().enumerate() {
                    tensor[(i * d + j) * d + k] = c;
                }
            }
        }
        let labels = (0..d).map(|k| format!("g{}", k + 1)).collect();
        let unit = coords(&self.unit);
        ScAlgebra::build(f, labels, tensor, unit).expect("change of basis preserves the algebra laws")
    }

    /// Format an element as a combination of basis labels.
    pub fn fmt_vec(&self, v: &[R::Elem]) -> String {
        let r = &self.ring;
        let mut terms = vec![];
        for (i, c) in v.iter().enumerate() {
            if r.is_zero(c) {
                continue;
            }
            if r.is_one(c) {
                terms.push(self.labels[i].clone());
            } else {
                let cs = r.fmt_elem(c);
                let cs = if cs.contains('+') || cs.contains('-') { format!("({})", cs) } else { cs };
                terms.push(format!("{}*{}", cs, self.labels[i]));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl<F: Field> ScAlgebra<F> {
    /// Matrix of left multiplication by `v` on the basis.
    pub fn left_mult_mat(&self, v: &[F::Elem]) -> Mat<F::Elem> {
        let d = self.dim;
        let f = &self.ring;
        let mut m = Mat::zero_sized(d, d, f.zero());
        for (i, vi) in v.iter().enumerate() {
            if f.is_zero(vi) {
                continue;
            }
            for j in 0..d {
                for k in 0..d {
                    let c = self.c(i, j, k);
                    if !f.is_zero(c) {
                        let cur = f.add(m.at(k, j), &f.mul(vi, c));
                        *m.at_mut(k, j) = cur;
                    }
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `v` on the basis.
    pub fn right_mult_mat(&self, v: &[F::Elem]) -> Mat<F::Elem> {
        let d = self.dim;
        let f = &self.ring;
        let mut m = Mat::zero_sized(d, d, f.zero());
        for (i, vi) in v.iter().enumerate() {
            if f.is_zero(vi) {
                continue;
            }
            for j in 0..d {
                for k in 0..d {
                    let c = self.c(j, i, k);
                    if !f.is_zero(c) {
                        let cur = f.add(m.at(k, j), &f.mul(vi, c));
                        *m.at_mut(k, j) = cur;
                    }
                }
            }
        }
        m
    }

    /// The center `Z(A)`: kernel of `x -> (e_i x - x e_i)_i`.
    pub fn center(&self) -> Subspace<F> {
        let elems: Vec<Vec<F::Elem>> = (0..self.dim).map(|i| self.basis_vec(i)).collect();
        self.centralizer(&elems)
    }

    /// The centralizer of a set of elements inside this algebra.
    pub fn centralizer(&self, elems: &[Vec<F::Elem>]) -> Subspace<F> {
        let d = self.dim;
        let f = &self.ring;
        let mut rows: Vec<Vec<F::Elem>> = vec![];
        for s in elems {
            let l = self.left_mult_mat(s);
            let r = self.right_mult_mat(s);
            for row in 0..d {
                let diff: Vec<F::Elem> = (0..d).map(|col| f.sub(l.at(row, col), r.at(row, col))).collect();
                rows.push(diff);
            }
        }
        if rows.is_empty() {
            // centralizer of the empty set is everything
            let all: Vec<Vec<F::Elem>> = (0..d).map(|i| self.basis_vec(i)).collect();
            return Subspace::from_vectors(f, d, &all);
        }
        let m = Mat::from_rows(rows);
        let ker = linalg::kernel(f, &m);
        Subspace::from_vectors(f, d, &ker)
    }

    /// Smallest two-sided ideal containing `gens`, by saturation to a fixed
    /// point.
    pub fn ideal_generated(&self, gens: &[Vec<F::Elem>]) -> TwoSidedIdeal<F> {
        let f = &self.ring;
        let mut space = Subspace::from_vectors(f, self.dim, gens);
        loop {
            let mut new_vecs: Vec<Vec<F::Elem>> = vec![];
            for v in space.basis() {
                for i in 0..self.dim {
                    let ei = self.basis_vec(i);
                    let lv = self.mul_vec(&ei, v);
                    if !space.contains(f, &lv) {
                        new_vecs.push(lv);
                    }
                    let rv = self.mul_vec(v, &ei);
                    if !space.contains(f, &rv) {
                        new_vecs.push(rv);
                    }
                }
            }
            if new_vecs.is_empty() {
                return TwoSidedIdeal { space };
            }
            let mut all = space.basis().to_vec();
            all.extend(new_vecs);
            space = Subspace::from_vectors(f, self.dim, &all);
        }
    }

    /// Quotient by a proper two-sided ideal, on the complement basis of the
    /// ideal's echelon form. Returns the quotient together with the
    /// projection, which is verified to be a surjective ring homomorphism.
    pub fn quotient(&self, ideal: &TwoSidedIdeal<F>) -> Result<QuotientResult<F>> {
        let f = self.ring.clone();
        if ideal.contains(&f, &self.unit) {
            return Err(Error::ImproperIdeal);
        }
        let comp = ideal.space().complement_positions();
        let dq = comp.len();
        assert_eq!(dq + ideal.dim(), self.dim);
        let reduce_coords = |v: &[F::Elem]| -> Vec<F::Elem> {
            let r = ideal.space().reduce(&f, v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let mut tensor = Vec::with_capacity(dq * dq * dq);
        for &i in &comp {
            for &j in &comp {
                let prod = self.mul_vec(&self.basis_vec(i), &self.basis_vec(j));
                tensor.extend(reduce_coords(&prod));
            }
        }
        let unit = reduce_coords(&self.unit);
        let labels: Vec<String> = comp.iter().map(|&c| self.labels[c].clone()).collect();
        let alg = ScAlgebra::build(f.clone(), labels, tensor, unit)?;
        // projection matrix: rows are quotient coordinates of e_col
        let mut proj = Mat::zero_sized(dq, self.dim, f.zero());
        for col in 0..self.dim {
            let coords = reduce_coords(&self.basis_vec(col));
            for (r, c) in coords.into_iter().enumerate() {
                *proj.at_mut(r, col) = c;
            }
        }
        // verified ring homomorphism: multiplicative on all basis pairs
        for i in 0..self.dim {
            for j in 0..self.dim {
                let pi = linalg::mat_vec(&f, &proj, &self.basis_vec(i));
                let pj = linalg::mat_vec(&f, &proj, &self.basis_vec(j));
                let lhs = linalg::mat_vec(&f, &proj, &self.mul_vec(&self.basis_vec(i), &self.basis_vec(j)));
                if alg.mul_vec(&pi, &pj) != lhs {
                    return Err(Error::NotAHomomorphism(i, j));
                }
            }
        }
        Ok(QuotientResult { algebra: alg, projection: proj })
    }

    /// Span of all pairwise products of two families of elements.
    pub fn product_span(&self, xs: &[Vec<F::Elem>], ys: &[Vec<F::Elem>]) -> Subspace<F> {
        let mut vecs = vec![];
        for x in xs {
            for y in ys {
                vecs.push(self.mul_vec(x, y));
            }
        }
        Subspace::from_vectors(&self.ring, self.dim, &vecs)
    }
}

/// A quotient algebra together with the projection map.
#[derive(Debug, Clone)]
pub struct QuotientResult<F: Field> {
    pub algebra: ScAlgebra<F>,
    pub projection: Mat<F::Elem>,
}

impl<F: Field> QuotientResult<F> {
    pub fn project(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        linalg::mat_vec(self.algebra.ring(), &self.projection, v)
    }
}

/// A finite group given by its multiplication table: `mul[i][j]` is the
/// index of the product of elements `i` and `j`.
#[derive(Debug, Clone)]
pub struct GroupTable {
    pub labels: Vec<String>,
    pub mul: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Check the table is a group: closure is implicit, verify
    /// associativity, a two-sided identity, and inverses.
    pub fn check(&self) -> Result<usize> {
        let n = self.labels.len();
        if n == 0 || self.mul.len() != n || self.mul.iter().any(|row| row.len() != n) {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        if self.mul.iter().flatten().any(|&v| v >= n) {
            return Err(Error::NotAGroup("entry out of range".into()));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.mul[self.mul[i][j]][k] != self.mul[i][self.mul[j][k]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            i, j, k
                        )));
                    }
                }
            }
        }
        let id = (0..n)
            .find(|&e| (0..n).all(|x| self.mul[e][x] == x && self.mul[x][e] == x))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| self.mul[x][y] == id && self.mul[y][x] == id) {
                return Err(Error::NotAGroup(format!("element {} has no inverse", x)));
            }
        }
        Ok(id)
    }
}

/// The group algebra `R[G]`: rank `|G|`, 0/1 permutation structure
/// constants.
pub fn group_algebra<R: Ring>(table: &GroupTable, ring: R) -> Result<ScAlgebra<R>> {
    let id = table.check()?;
    let n = table.labels.len();
    let mut tensor = vec![ring.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            tensor[(i * n + j) * n + table.mul[i][j]] = ring.one();
        }
    }
    let mut unit = vec![ring.zero(); n];
    unit[id] = ring.one();
    ScAlgebra::build(ring, table.labels.clone(), tensor, unit)
}

/// The matrix algebra `M_n(A)`, with basis indexed by `(row, col, b)` in
/// lexicographic order and multiplication `E_ij E_kl = delta_jk E_il`
/// tensored with the multiplication of `A`.
pub fn matrix_algebra<R: Ring>(a: &ScAlgebra<R>, n: usize) -> Result<ScAlgebra<R>> {
    assert!(n >= 1);
    let d = a.dim();
    let ring = a.ring().clone();
    let dim = n * n * d;
    let idx = |i: usize, j: usize, b: usize| (i * n + j) * d + b;
    let mut tensor = vec![ring.zero(); dim * dim * dim];
    for i in 0..n {
        for j in 0..n {
            for b in 0..d {
                for k in 0..n {
                    for l in 0..n {
                        if j != k {
                            continue;
                        }
                        for b2 in 0..d {
                            for m in 0..d {
                                let c = a.c(b, b2, m);
                                if !ring.is_zero(c) {
                                    let t = (idx(i, j, b) * dim + idx(k, l, b2)) * dim + idx(i, l, m);
                                    tensor[t] = c.clone();
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut unit = vec![ring.zero(); dim];
    for i in 0..n {
        for (b, ub) in a.unit().iter().enumerate() {
            unit[idx(i, i, b)] = ub.clone();
        }
    }
    let labels = (0..n)
        .flat_map(|i| {
            let a = &a;
            (0..n).flat_map(move |j| {
                (0..d).map(move |b| format!("E{}{}:{}", i + 1, j + 1, a.labels()[b]))
            })
        })
        .collect();
    ScAlgebra::build(ring, labels, tensor, unit)
}

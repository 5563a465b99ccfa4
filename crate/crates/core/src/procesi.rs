//! Morphisms in the category of algebras-with-pullback: the condition that
//! the target is generated by the image together with its centralizer, the
//! relatively-commutative refinement, prime-ideal pullback, and the tensor
//! product `B (x)_A C` with its ring structure and swap isomorphism.
//!
//! For a ring homomorphism `h: A -> B` the preimage of a prime ideal need
//! not be prime (the diagonal of `k x k` inside `M_2(k)` is the standard
//! counterexample). When `B` is generated by `h(A)` and the centralizer
//! `C_B(A)`, pullback of primes is well defined, and for two such algebras
//! `B`, `C` over `A` the tensor product carries a unique ring structure with
//! `(b (x) z)(b' (x) z') = bb' (x) zz'` for `z, z'` in the centralizer.

use crate::algebra::{ScAlgebra, Subspace, TwoSidedIdeal};
use crate::coeff::{FFElem, FiniteField};
use crate::linalg::{self, Mat};
use crate::ring::Ring;
use crate::structure;
use crate::{Error, Result};

/// A verified unital ring homomorphism between structure-constant algebras
/// over the same finite field.
#[derive(Debug, Clone)]
pub struct AlgMorphism {
    source: ScAlgebra<FiniteField>,
    target: ScAlgebra<FiniteField>,
    /// `target.dim x source.dim`; column `i` is the image of `e_i`.
    matrix: Mat<FFElem>,
}

impl AlgMorphism {
    pub fn source(&self) -> &ScAlgebra<FiniteField> {
        &self.source
    }

    pub fn target(&self) -> &ScAlgebra<FiniteField> {
        &self.target
    }

    pub fn matrix(&self) -> &Mat<FFElem> {
        &self.matrix
    }

    pub fn apply(&self, v: &[FFElem]) -> Vec<FFElem> {
        linalg::mat_vec(self.source.ring(), &self.matrix, v)
    }

    pub fn basis_images(&self) -> Vec<Vec<FFElem>> {
        (0..self.source.dim()).map(|i| self.apply(&self.source.basis_vec(i))).collect()
    }

    pub fn is_injective(&self) -> bool {
        linalg::kernel(self.source.ring(), &self.matrix).is_empty()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }
}

/// Build a morphism from the images of the source basis vectors, verifying
/// unitality and multiplicativity on every basis pair.
pub fn make_morphism(
    source: &ScAlgebra<FiniteField>,
    target: &ScAlgebra<FiniteField>,
    images: &[Vec<FFElem>],
) -> Result<AlgMorphism> {
    let f = source.ring();
    if f != target.ring() {
        return Err(Error::Unsupported("source and target must share the coefficient field".into()));
    }
    if images.len() != source.dim() || images.iter().any(|v| v.len() != target.dim()) {
        return Err(Error::DimMismatch { expected: source.dim(), got: images.len() });
    }
    let mut cols = Mat::zero_sized(target.dim(), source.dim(), f.zero());
    for (i, img) in images.iter().enumerate() {
        for (r, c) in img.iter().enumerate() {
            *cols.at_mut(r, i) = c.clone();
        }
    }
    let h = AlgMorphism { source: source.clone(), target: target.clone(), matrix: cols };
    if h.apply(source.unit()) != target.unit().to_vec() {
        return Err(Error::NotUnital);
    }
    for i in 0..source.dim() {
        for j in 0..source.dim() {
            let lhs = h.apply(&source.mul_vec(&source.basis_vec(i), &source.basis_vec(j)));
            let rhs = target.mul_vec(&h.apply(&source.basis_vec(i)), &h.apply(&source.basis_vec(j)));
            if lhs != rhs {
                return Err(Error::NotAHomomorphism(i, j));
            }
        }
    }
    Ok(h)
}

pub fn identity_morphism(a: &ScAlgebra<FiniteField>) -> AlgMorphism {
    let images: Vec<_> = (0..a.dim()).map(|i| a.basis_vec(i)).collect();
    make_morphism(a, a, &images).expect("identity is a morphism")
}

/// The unit map from the ground field (as a rank-1 algebra) into `a`.
pub fn unit_morphism(ground: &ScAlgebra<FiniteField>, a: &ScAlgebra<FiniteField>) -> Result<AlgMorphism> {
    if ground.dim() != 1 {
        return Err(Error::Unsupported("unit morphism needs a rank-1 source".into()));
    }
    make_morphism(ground, a, &[a.unit().to_vec()])
}

pub fn compose(outer: &AlgMorphism, inner: &AlgMorphism) -> Result<AlgMorphism> {
    let images: Vec<Vec<FFElem>> =
        inner.basis_images().iter().map(|v| outer.apply(v)).collect();
    make_morphism(inner.source(), outer.target(), &images)
}

/// The centralizer `C_B(A)` of the image of `h` inside its target.
pub fn image_centralizer(h: &AlgMorphism) -> Subspace<FiniteField> {
    h.target.centralizer(&h.basis_images())
}

/// The condition making prime pullback well defined: as a left module over
/// the source, the target is generated by the centralizer of the image,
/// i.e. `h(A) . C_B(A)` spans `B` linearly.
pub fn procesi_check(h: &AlgMorphism) -> bool {
    let cb = image_centralizer(h);
    let span = h.target.product_span(&h.basis_images(), cb.basis());
    span.dim() == h.target.dim()
}

/// The relatively-commutative condition: `h(A) . Z(B)` spans `B`.
pub fn rc_check(h: &AlgMorphism) -> bool {
    let z = h.target.center();
    let span = h.target.product_span(&h.basis_images(), z.basis());
    span.dim() == h.target.dim()
}

/// The preimage `h^{-1}(q)` as a two-sided ideal (a kernel computation).
fn preimage_ideal(h: &AlgMorphism, q: &TwoSidedIdeal<FiniteField>) -> Result<TwoSidedIdeal<FiniteField>> {
    let f = h.source.ring().clone();
    let quot = h.target.quotient(q)?;
    // kernel of (project after h)
    let mut rows = vec![vec![f.zero(); h.source.dim()]; quot.algebra.dim()];
    for col in 0..h.source.dim() {
        let v = quot.project(&h.apply(&h.source.basis_vec(col)));
        for (r, c) in v.into_iter().enumerate() {
            rows[r][col] = c;
        }
    }
    let ker = linalg::kernel(&f, &Mat::from_rows(rows));
    let space = Subspace::from_vectors(&f, h.source.dim(), &ker);
    TwoSidedIdeal::from_subspace(&h.source, space)
}

/// Outcome of a pullback primality analysis.
#[derive(Debug, Clone)]
pub struct PullbackReport {
    pub preimage: TwoSidedIdeal<FiniteField>,
    pub quotient_radical_dim: usize,
    pub quotient_blocks: usize,
    pub prime: bool,
}

/// Pull a prime (maximal) two-sided ideal of the target back along a
/// morphism satisfying the generation condition. Primality of the result is
/// asserted by checking that the quotient is simple (one Wedderburn block,
/// zero radical).
pub fn pullback_point(
    h: &AlgMorphism,
    q: &TwoSidedIdeal<FiniteField>,
) -> Result<TwoSidedIdeal<FiniteField>> {
    if !procesi_check(h) {
        return Err(Error::ProcesiFails);
    }
    let report = pullback_demonstration(h, q)?;
    assert!(report.prime, "pullback along a generation-condition morphism must be prime");
    Ok(report.preimage)
}

/// Demonstration mode: compute the preimage regardless of the generation
/// condition and report whether it is prime. Exhibits the failure on the
/// diagonal counterexample.
pub fn pullback_demonstration(
    h: &AlgMorphism,
    q: &TwoSidedIdeal<FiniteField>,
) -> Result<PullbackReport> {
    let preimage = preimage_ideal(h, q)?;
    let quot = h.source.quotient(&preimage)?;
    let w = structure::wedderburn(&quot.algebra);
    let prime = w.radical.dim() == 0 && w.blocks.len() == 1;
    Ok(PullbackReport {
        preimage,
        quotient_radical_dim: w.radical.dim(),
        quotient_blocks: w.blocks.len(),
        prime,
    })
}

/// The tensor product `B (x)_A C` of two algebras over `A`, with its
/// canonical morphisms and the spanning family `{b_i (x) z_j}` drawn from
/// the centralizer `C_C(A)`.
#[derive(Debug, Clone)]
pub struct TensorAlgebra {
    pub algebra: ScAlgebra<FiniteField>,
    pub from_left: AlgMorphism,
    pub from_right: AlgMorphism,
    /// `(i, j)`: the chosen basis elements are classes of `b_i (x) z_j`.
    pub family: Vec<(usize, usize)>,
    pub centralizer_basis: Vec<Vec<FFElem>>,
    left_dim: usize,
    right_dim: usize,
    /// Reduction of the full `B (x) C` space by the balancing relations.
    relations: Subspace<FiniteField>,
    /// Inverse of the chosen-family coordinate matrix.
    family_inv: Mat<FFElem>,
}

fn outer(f: &FiniteField, dc: usize, b: &[FFElem], c: &[FFElem]) -> Vec<FFElem> {
    let mut v = vec![f.zero(); b.len() * dc];
    for (i, bi) in b.iter().enumerate() {
        if f.is_zero(bi) {
            continue;
        }
        for (j, cj) in c.iter().enumerate() {
            v[i * dc + j] = f.mul(bi, cj);
        }
    }
    v
}

impl TensorAlgebra {
    /// Class of a simple tensor `b (x) c` in the coordinates of the chosen
    /// basis of `B (x)_A C`.
    pub fn class_of(&self, b: &[FFElem], c: &[FFElem]) -> Vec<FFElem> {
        let f = self.algebra.ring();
        let v = outer(f, self.right_dim, b, c);
        self.reduce_full(&v)
    }

    /// Reduce an element of the full `B (x) C` presentation into chosen
    /// coordinates.
    fn reduce_full(&self, v: &[FFElem]) -> Vec<FFElem> {
        let f = self.algebra.ring();
        let reduced = self.relations.reduce(f, v);
        let comp = self.relations.complement_positions();
        let coords: Vec<FFElem> = comp.iter().map(|&c| reduced[c].clone()).collect();
        linalg::mat_vec(f, &self.family_inv, &coords)
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }
}

/// Express an element of the full `B (x) C` presentation in the spanning
/// family `{b_i (x) z_j}`; the solve is exact with zero residual.
pub fn rewrite_over_centralizer(t: &TensorAlgebra, v: &[FFElem]) -> Result<Vec<FFElem>> {
    if v.len() != t.left_dim * t.right_dim {
        return Err(Error::DimMismatch { expected: t.left_dim * t.right_dim, got: v.len() });
    }
    Ok(t.reduce_full(v))
}

/// Build `B (x)_A C` from two morphisms out of the same source. Both must
/// satisfy the generation condition; the ring structure rewrites every
/// element over the centralizer family and multiplies with
/// `(b (x) z)(b' (x) z') = bb' (x) zz'`.
pub fn tensor(f_map: &AlgMorphism, g_map: &AlgMorphism) -> Result<TensorAlgebra> {
    if f_map.source().tensor() != g_map.source().tensor() || f_map.source().dim() != g_map.source().dim() {
        return Err(Error::Unsupported("tensor factors must share the same source algebra".into()));
    }
    if !procesi_check(f_map) || !procesi_check(g_map) {
        return Err(Error::ProcesiFails);
    }
    let b = f_map.target().clone();
    let c = g_map.target().clone();
    let f = b.ring().clone();
    let (db, dc) = (b.dim(), c.dim());
    let full = db * dc;

    // balancing relations: (b f(a)) (x) c - b (x) (g(a) c)
    let mut rel_vecs = vec![];
    for a_idx in 0..f_map.source().dim() {
        let fa = f_map.apply(&f_map.source().basis_vec(a_idx));
        let ga = g_map.apply(&g_map.source().basis_vec(a_idx));
        for i in 0..db {
            let bfa = b.mul_vec(&b.basis_vec(i), &fa);
            for j in 0..dc {
                let gac = c.mul_vec(&ga, &c.basis_vec(j));
                let lhs = outer(&f, dc, &bfa, &c.basis_vec(j));
                let rhs = outer(&f, dc, &b.basis_vec(i), &gac);
                let mut d = vec![f.zero(); full];
                for (t, (x, y)) in lhs.iter().zip(&rhs).enumerate() {
                    d[t] = f.sub(x, y);
                }
                rel_vecs.push(d);
            }
        }
    }
    let relations = Subspace::from_vectors(&f, full, &rel_vecs);
    let comp = relations.complement_positions();
    let dt = comp.len();

    // centralizer of the source image in C, canonical order
    let zc = image_centralizer(g_map);
    let reduce_to_comp = |v: &[FFElem]| -> Vec<FFElem> {
        let r = relations.reduce(&f, v);
        comp.iter().map(|&cpos| r[cpos].clone()).collect()
    };

    // greedy spanning family b_i (x) z_j in lexicographic order
    let mut family = vec![];
    let mut chosen: Vec<Vec<FFElem>> = vec![];
    let mut span = Subspace::zero(dt);
    'outer: for i in 0..db {
        for (j, z) in zc.basis().iter().enumerate() {
            let v = reduce_to_comp(&outer(&f, dc, &b.basis_vec(i), z));
            if !span.contains(&f, &v) {
                family.push((i, j));
                chosen.push(v.clone());
                let mut vs = span.basis().to_vec();
                vs.push(v);
                span = Subspace::from_vectors(&f, dt, &vs);
                if span.dim() == dt {
                    break 'outer;
                }
            }
        }
    }
    assert_eq!(
        span.dim(),
        dt,
        "the centralizer family must span the tensor product under the generation condition"
    );

    // chosen-family coordinate change
    let mut fam_mat = Mat::zero_sized(dt, dt, f.zero());
    for (col, v) in chosen.iter().enumerate() {
        for (r, x) in v.iter().enumerate() {
            *fam_mat.at_mut(r, col) = x.clone();
        }
    }
    let family_inv = linalg::invert(&f, &fam_mat).expect("family is a basis");

    // multiplication: (b_i (x) z_j)(b_k (x) z_l) = (b_i b_k) (x) (z_j z_l)
    let to_coords = |v: &[FFElem]| -> Vec<FFElem> {
        linalg::mat_vec(&f, &family_inv, &reduce_to_comp(v))
    };
    let mut tensor_c = vec![f.zero(); dt * dt * dt];
    for (a_idx, &(i, j)) in family.iter().enumerate() {
        for (b_idx, &(k, l)) in family.iter().enumerate() {
            let bprod = b.mul_vec(&b.basis_vec(i), &b.basis_vec(k));
            let zprod = c.mul_vec(&zc.basis()[j], &zc.basis()[l]);
            let coords = to_coords(&outer(&f, dc, &bprod, &zprod));
            for (m, x) in coords.into_iter().enumerate() {
                tensor_c[(a_idx * dt + b_idx) * dt + m] = x;
            }
        }
    }
    let unit = to_coords(&outer(&f, dc, &b.unit().to_vec(), &c.unit().to_vec()));
    let labels = (0..dt).map(|k| format!("t{}", k + 1)).collect();
    let algebra = ScAlgebra::build(f.clone(), labels, tensor_c, unit)?;

    // canonical morphisms (verified, and they satisfy the generation
    // condition themselves)
    let left_images: Vec<Vec<FFElem>> =
        (0..db).map(|i| to_coords(&outer(&f, dc, &b.basis_vec(i), &c.unit().to_vec()))).collect();
    let from_left = make_morphism(&b, &algebra, &left_images)?;
    let right_images: Vec<Vec<FFElem>> =
        (0..dc).map(|j| to_coords(&outer(&f, dc, &b.unit().to_vec(), &c.basis_vec(j)))).collect();
    let from_right = make_morphism(&c, &algebra, &right_images)?;
    if !procesi_check(&from_left) || !procesi_check(&from_right) {
        return Err(Error::ProcesiFails);
    }

    Ok(TensorAlgebra {
        algebra,
        from_left,
        from_right,
        family,
        centralizer_basis: zc.basis().to_vec(),
        left_dim: db,
        right_dim: dc,
        relations,
        family_inv,
    })
}

/// The swap isomorphism `B (x)_A C -> C (x)_A B`, sending the class of
/// `b (x) z` (with `z` in the centralizer) to the class of `z (x) b`.
/// Verified to be a bijective ring homomorphism.
pub fn swap_iso(bc: &TensorAlgebra, cb: &TensorAlgebra) -> Result<AlgMorphism> {
    if bc.left_dim != cb.right_dim || bc.right_dim != cb.left_dim {
        return Err(Error::Unsupported("swap needs the two tensor orders of the same factors".into()));
    }
    let b_alg = bc.from_left.source();
    let mut images = vec![];
    for &(i, j) in &bc.family {
        let z = &bc.centralizer_basis[j];
        images.push(cb.class_of(z, &b_alg.basis_vec(i)));
    }
    let h = make_morphism(&bc.algebra, &cb.algebra, &images)?;
    if !h.is_bijective() {
        return Err(Error::Unsupported("swap failed to be bijective".into()));
    }
    Ok(h)
}

/// Parse a morphism description file with three sections:
///
/// ```text
/// [source]
/// base GF(3)
/// basis u v
/// unit u + v          # optional: unit as a combination (default: first label)
/// mul u u = u
/// mul v v = v
/// [target]
/// base GF(3)
/// basis e x y w
/// mul ...
/// [map]
/// u = e + (-1)*w
/// v = w
/// ```
///
/// The `[source]` and `[target]` sections use the algebra description
/// format, extended with an optional `unit` line for algebras whose unit is
/// not a basis vector. The `[map]` section gives the image of every source
/// basis label as a combination of target labels. The resulting morphism is
/// verified (unital, multiplicative on all basis pairs).
pub fn parse_morphism_file(text: &str) -> Result<AlgMorphism> {
    use crate::algebra::descr::{self, CoeffLit};
    let mut section = None;
    let mut source_lines: Vec<(usize, String)> = vec![];
    let mut target_lines: Vec<(usize, String)> = vec![];
    let mut map_lines: Vec<(usize, String)> = vec![];
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match line {
            "[source]" => section = Some(0),
            "[target]" => section = Some(1),
            "[map]" => section = Some(2),
            _ => match section {
                Some(0) => source_lines.push((ln + 1, line.to_string())),
                Some(1) => target_lines.push((ln + 1, line.to_string())),
                Some(2) => map_lines.push((ln + 1, line.to_string())),
                _ => {
                    return Err(Error::Parse {
                        line: ln + 1,
                        msg: "expected a [source], [target] or [map] section header".into(),
                    })
                }
            },
        }
    }
    let build_section = |lines: &[(usize, String)]| -> Result<crate::algebra::ScAlgebra<FiniteField>> {
        let mut unit_line: Option<(usize, String)> = None;
        let mut body = String::new();
        for (ln, l) in lines {
            if let Some(rest) = l.strip_prefix("unit") {
                if rest.starts_with(char::is_whitespace) {
                    unit_line = Some((*ln, rest.trim().to_string()));
                    continue;
                }
            }
            body.push_str(l);
            body.push('\n');
        }
        let d = descr::parse(&body)?;
        let unit_terms: Option<Vec<(CoeffLit, usize)>> = match unit_line {
            None => None,
            Some((ln, expr)) => Some(
                descr::parse_combination(&expr, &d.labels)
                    .map_err(|msg| Error::Parse { line: ln, msg })?,
            ),
        };
        d.build_fq_with_unit(unit_terms.as_deref())
    };
    let source = build_section(&source_lines)?;
    let target = build_section(&target_lines)?;
    let f = target.ring().clone();
    let mut images = vec![target.zero_vec(); source.dim()];
    let mut seen = vec![false; source.dim()];
    for (ln, l) in &map_lines {
        let (lhs, rhs) = l.split_once('=').ok_or(Error::Parse {
            line: *ln,
            msg: "map line needs `<source label> = <combination>`".into(),
        })?;
        let lhs = lhs.trim();
        let idx = source.labels().iter().position(|m| m == lhs).ok_or(Error::Parse {
            line: *ln,
            msg: format!("unknown source label `{}`", lhs),
        })?;
        if seen[idx] {
            return Err(Error::Parse { line: *ln, msg: format!("duplicate map for `{}`", lhs) });
        }
        seen[idx] = true;
        let terms = crate::algebra::descr::parse_combination(rhs, &target.labels().to_vec())
            .map_err(|msg| Error::Parse { line: *ln, msg })?;
        let mut v = target.zero_vec();
        for (c, k) in terms {
            let e = match c {
                crate::algebra::descr::CoeffLit::Int(n) => crate::coeff::base::int_mod_p(&n, &f),
                crate::algebra::descr::CoeffLit::Poly(_) => {
                    return Err(Error::Parse {
                        line: *ln,
                        msg: "polynomial coefficients are not allowed in maps".into(),
                    })
                }
            };
            v[k] = f.add(&v[k], &e);
        }
        images[idx] = v;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::Parse {
            line: 0,
            msg: format!("no map line for source label `{}`", source.labels()[missing]),
        });
    }
    make_morphism(&source, &target, &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, matrix_algebra};
    use crate::coeff::make_field;
    use crate::order::presets;

    fn f3s3() -> ScAlgebra<FiniteField> {
        group_algebra(&presets::s3_table(), make_field(3, 1).unwrap()).unwrap()
    }

    fn m2(p: u64) -> ScAlgebra<FiniteField> {
        matrix_algebra(&presets::field_as_algebra(make_field(p, 1).unwrap()), 2).unwrap()
    }

    /// The diagonal embedding of `F_p x F_p` into `M_2(F_p)`.
    fn diagonal_embedding(p: u64) -> AlgMorphism {
        let f = make_field(p, 1).unwrap();
        let prod = presets::product_of_two_fields(f.clone());
        let m = m2(p);
        // basis of M2: E11, E12, E21, E22
        let images = vec![m.basis_vec(0), m.basis_vec(3)];
        make_morphism(&prod, &m, &images).unwrap()
    }

    #[test]
    fn identity_is_a_morphism_and_procesi() {
        let a = f3s3();
        let id = identity_morphism(&a);
        assert!(procesi_check(&id));
        assert!(rc_check(&id));
    }

    #[test]
    fn diagonal_embedding_is_a_hom_but_fails_generation() {
        for p in [2, 3, 5] {
            let h = diagonal_embedding(p);
            assert!(!procesi_check(&h), "p = {}", p);
        }
    }

    #[test]
    fn non_unital_map_is_rejected() {
        let a = f3s3();
        let zero_images: Vec<_> = (0..6).map(|_| a.zero_vec()).collect();
        assert_eq!(make_morphism(&a, &a, &zero_images).unwrap_err(), Error::NotUnital);
    }

    #[test]
    fn scalar_embedding_into_matrices_is_procesi() {
        let a = f3s3();
        let m = matrix_algebra(&a, 2).unwrap();
        // e_b maps to the diagonal E11:b + E22:b; basis index for (i, j, b)
        // in M_2(A) is (i*2 + j)*dim(A) + b
        let images: Vec<_> = (0..a.dim())
            .map(|b| {
                let mut v = m.zero_vec();
                v[b] = a.ring().one();
                v[3 * a.dim() + b] = a.ring().one();
                v
            })
            .collect();
        let h = make_morphism(&a, &m, &images).unwrap();
        assert!(procesi_check(&h));
    }

    #[test]
    fn rc_check_on_commutative_target_and_unit_map() {
        let f5 = make_field(5, 1).unwrap();
        let ground = presets::field_as_algebra(f5.clone());
        let c3 = group_algebra(&presets::cyclic_table(3), f5.clone()).unwrap();
        let h = unit_morphism(&ground, &c3).unwrap();
        assert!(rc_check(&h)); // commutative target: Z(B) = B
        let s3 = group_algebra(&presets::s3_table(), f5).unwrap();
        let h2 = unit_morphism(&ground, &s3).unwrap();
        // Z(F5[S3]) is 3-dimensional, spanning only 3 of 6 dimensions
        assert!(!rc_check(&h2));
        assert!(procesi_check(&h2)); // but the centralizer is everything
    }

    #[test]
    fn pullback_along_projection_of_f3s3() {
        let a = f3s3();
        let points = structure::max_two_sided_ideals(&a);
        // quotient by a maximal ideal is the residue field F3; pull the zero
        // ideal back along A -> A/m and recover m
        for p in &points {
            let q = a.quotient(&p.ideal).unwrap();
            let mut images = vec![];
            for i in 0..a.dim() {
                images.push(q.project(&a.basis_vec(i)));
            }
            let h = make_morphism(&a, &q.algebra, &images).unwrap();
            assert!(procesi_check(&h));
            let zero = TwoSidedIdeal::from_subspace(&q.algebra, Subspace::zero(q.algebra.dim())).unwrap();
            let pulled = pullback_point(&h, &zero).unwrap();
            assert_eq!(pulled, p.ideal);
        }
    }

    #[test]
    fn pullback_of_identity_is_identity() {
        let a = f3s3();
        let id = identity_morphism(&a);
        for p in structure::max_two_sided_ideals(&a) {
            let pulled = pullback_point(&id, &p.ideal).unwrap();
            assert_eq!(pulled, p.ideal);
        }
    }

    #[test]
    fn diagonal_counterexample_pullback_is_not_prime() {
        for p in [2, 3, 5] {
            let h = diagonal_embedding(p);
            assert_eq!(pullback_point(&h, &zero_ideal_of(h.target())).unwrap_err(), Error::ProcesiFails);
            let report = pullback_demonstration(&h, &zero_ideal_of(h.target())).unwrap();
            assert!(!report.prime);
            assert_eq!(report.quotient_blocks, 2);
            assert_eq!(report.preimage.dim(), 0);
        }
    }

    fn zero_ideal_of(a: &ScAlgebra<FiniteField>) -> TwoSidedIdeal<FiniteField> {
        TwoSidedIdeal::from_subspace(a, Subspace::zero(a.dim())).unwrap()
    }

    #[test]
    fn tensor_with_the_source_is_the_other_factor() {
        // A (x)_A C = C via the canonical map
        let a = f3s3();
        let id = identity_morphism(&a);
        let t = tensor(&id, &id).unwrap();
        assert_eq!(t.algebra.dim(), a.dim());
        assert!(t.from_right.is_bijective());
    }

    #[test]
    fn tensor_of_matrices_with_group_algebra_over_field() {
        // M_2(F_3) (x)_{F_3} F_3[C_2] has rank 8
        let f3 = make_field(3, 1).unwrap();
        let ground = presets::field_as_algebra(f3.clone());
        let m = m2(3);
        let c2 = group_algebra(&presets::cyclic_table(2), f3).unwrap();
        let fm = unit_morphism(&ground, &m).unwrap();
        let gm = unit_morphism(&ground, &c2).unwrap();
        let t = tensor(&fm, &gm).unwrap();
        assert_eq!(t.algebra.dim(), 8);
    }

    #[test]
    fn swap_is_an_involution() {
        let f3 = make_field(3, 1).unwrap();
        let ground = presets::field_as_algebra(f3.clone());
        let m = m2(3);
        let c2 = group_algebra(&presets::cyclic_table(2), f3).unwrap();
        let fm = unit_morphism(&ground, &m).unwrap();
        let gm = unit_morphism(&ground, &c2).unwrap();
        let bc = tensor(&fm, &gm).unwrap();
        let cb = tensor(&gm, &fm).unwrap();
        let swap = swap_iso(&bc, &cb).unwrap();
        let back = swap_iso(&cb, &bc).unwrap();
        let round = compose(&back, &swap).unwrap();
        let id = identity_morphism(&bc.algebra);
        assert_eq!(round.matrix(), id.matrix());
    }

    #[test]
    fn rewriting_moves_the_source_across() {
        // b (x) (z a) rewrites to (b a) (x) z when z centralizes
        let a = f3s3();
        let id = identity_morphism(&a);
        let t = tensor(&id, &id).unwrap();
        let f = a.ring();
        let b = a.basis_vec(3);
        let z = a.unit().to_vec();
        let aa = a.basis_vec(1);
        let za = a.mul_vec(&z, &aa);
        let ba = a.mul_vec(&b, &aa);
        let lhs = rewrite_over_centralizer(&t, &outer(f, t.right_dim(), &b, &za)).unwrap();
        let rhs = rewrite_over_centralizer(&t, &outer(f, t.right_dim(), &ba, &z)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_rule_holds_on_centralizer_pairs() {
        // (b (x) z)(b' (x) z') = bb' (x) zz' for all basis b, b' and all
        // centralizer basis z, z'
        let f3 = make_field(3, 1).unwrap();
        let ground = presets::field_as_algebra(f3.clone());
        let m = m2(3);
        let c2 = group_algebra(&presets::cyclic_table(2), f3).unwrap();
        let fm = unit_morphism(&ground, &m).unwrap();
        let gm = unit_morphism(&ground, &c2).unwrap();
        let t = tensor(&fm, &gm).unwrap();
        for i in 0..m.dim() {
            for k in 0..m.dim() {
                for z in &t.centralizer_basis.clone() {
                    for z2 in &t.centralizer_basis.clone() {
                        let lhs = t.algebra.mul_vec(
                            &t.class_of(&m.basis_vec(i), z),
                            &t.class_of(&m.basis_vec(k), z2),
                        );
                        let rhs = t.class_of(
                            &m.mul_vec(&m.basis_vec(i), &m.basis_vec(k)),
                            &c2.mul_vec(z, z2),
                        );
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn rewrite_roundtrips_through_the_normal_form() {
        // arbitrary elements of M_2(F_3) (x) F_3[C_2] reconstruct exactly
        // from their centralizer-family coordinates
        let f3 = make_field(3, 1).unwrap();
        let ground = presets::field_as_algebra(f3.clone());
        let m = m2(3);
        let c2 = group_algebra(&presets::cyclic_table(2), f3.clone()).unwrap();
        let fm = unit_morphism(&ground, &m).unwrap();
        let gm = unit_morphism(&ground, &c2).unwrap();
        let t = tensor(&fm, &gm).unwrap();
        let full = t.left_dim() * t.right_dim();
        // a deterministic pseudo-random sweep of full-space vectors
        for seed in 0..20u64 {
            let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let x: Vec<crate::coeff::FFElem> = (0..full)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    f3.from_i64((state >> 33) as i64)
                })
                .collect();
            let coords = rewrite_over_centralizer(&t, &x).unwrap();
            // reconstruct in the full space from the family and compare
            // classes
            let mut rebuilt = vec![f3.zero(); full];
            for (k, &(i, j)) in t.family.iter().enumerate() {
                let simple = outer(&f3, t.right_dim(), &m.basis_vec(i), &t.centralizer_basis[j]);
                for (pos, val) in simple.iter().enumerate() {
                    rebuilt[pos] = f3.add(&rebuilt[pos], &f3.mul(&coords[k], val));
                }
            }
            let back = rewrite_over_centralizer(&t, &rebuilt).unwrap();
            assert_eq!(coords, back);
        }
    }

    #[test]
    fn naive_componentwise_product_fails_for_matrix_algebra() {
        // with A = B = C = M_2(F_3), the rule
        // (b1 (x) c1)(b2 (x) c2) = b1 b2 (x) c1 c2 for arbitrary entries is
        // inconsistent: witness b1 = c2 = 1, c1 = E21, b2 = E12
        let m = m2(3);
        let id = identity_morphism(&m);
        let t = tensor(&id, &id).unwrap();
        let one = m.unit().to_vec();
        let e12 = m.basis_vec(1);
        let e21 = m.basis_vec(2);
        let x1 = t.class_of(&one, &e21);
        let x2 = t.class_of(&e12, &one);
        let true_prod = t.algebra.mul_vec(&x1, &x2);
        let naive = t.class_of(&m.mul_vec(&one, &e12), &m.mul_vec(&e21, &one));
        assert_ne!(true_prod, naive);
    }

    #[test]
    fn center_of_source_maps_into_center_of_target() {
        // along any generation-condition morphism
        let a = f3s3();
        let m = matrix_algebra(&a, 2).unwrap();
        let mut images = vec![];
        for b in 0..a.dim() {
            let mut v = m.zero_vec();
            v[b] = a.ring().one();
            v[3 * a.dim() + b] = a.ring().one();
            images.push(v);
        }
        let h = make_morphism(&a, &m, &images).unwrap();
        assert!(procesi_check(&h));
        let za = a.center();
        let zb = m.center();
        for v in za.basis() {
            assert!(zb.contains(m.ring(), &h.apply(v)));
        }
    }

    #[test]
    fn rc_implies_centralizer_equals_center() {
        // unit map into a commutative algebra is r.c., and there
        // C_B(A) = Z(B)
        let f5 = make_field(5, 1).unwrap();
        let ground = presets::field_as_algebra(f5.clone());
        let c3 = group_algebra(&presets::cyclic_table(3), f5).unwrap();
        let h = unit_morphism(&ground, &c3).unwrap();
        assert!(rc_check(&h));
        assert_eq!(image_centralizer(&h), h.target().center());
    }

    #[test]
    fn morphism_file_roundtrip_for_the_diagonal() {
        let text = "\
[source]
base GF(3)
basis u v
unit u + v
mul u u = u
mul v v = v

[target]
base GF(3)
basis e x y w
mul e e = e
mul e x = x
mul e y = y
mul e w = w
mul x e = x
mul y e = y
mul w e = w
mul x y = e + (-1)*w
mul x w = x
mul y x = w
mul w y = y
mul w w = w

[map]
u = e + (-1)*w
v = w
";
        let h = parse_morphism_file(text).unwrap();
        assert_eq!(h.source().dim(), 2);
        assert_eq!(h.target().dim(), 4);
        assert!(!procesi_check(&h));
        let demo = pullback_demonstration(&h, &zero_ideal_of(h.target())).unwrap();
        assert!(!demo.prime);
        // missing map line is reported
        let broken = text.replace("v = w\n", "");
        assert!(matches!(parse_morphism_file(&broken), Err(Error::Parse { .. })));
    }

    #[test]
    fn composition_of_generation_morphisms_passes_the_check() {
        let f3 = make_field(3, 1).unwrap();
        let ground = presets::field_as_algebra(f3.clone());
        let c2 = group_algebra(&presets::cyclic_table(2), f3.clone()).unwrap();
        let m = matrix_algebra(&c2, 2).unwrap();
        let h1 = unit_morphism(&ground, &c2).unwrap();
        // scalar embedding C2 -> M2(C2)
        let mut images = vec![];
        for b in 0..c2.dim() {
            let mut v = m.zero_vec();
            v[b] = f3.one();
            v[3 * c2.dim() + b] = f3.one();
            images.push(v);
        }
        let h2 = make_morphism(&c2, &m, &images).unwrap();
        assert!(procesi_check(&h1) && procesi_check(&h2));
        let comp = compose(&h2, &h1).unwrap();
        assert!(procesi_check(&comp));
    }
}

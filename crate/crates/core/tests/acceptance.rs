//! Acceptance suite: one test per criterion, each printing a pass line.
//! Everything is exact integer arithmetic; tolerances are equality.
//!
//! Run with `cargo test --test acceptance` (add `-- --nocapture` to see the
//! per-criterion lines while they pass).

mod common;

use num::BigInt;
use rayon::prelude::*;
use std::time::Instant;

use ncspec::algebra::{group_algebra, matrix_algebra, ScAlgebra, Subspace};
use ncspec::coeff::poly;
use ncspec::coeff::{base_max_ideals, make_field, parse_base, BaseMaxIdeal, BaseRing, FFElem, FiniteField};
use ncspec::order::{preset_order, presets, FiberSelector, Order, SpecPoint};
use ncspec::procesi;
use ncspec::ring::{Field, Rationals, Ring};
use ncspec::structure;
use ncspec::zeta;

fn elem(a: &ScAlgebra<FiniteField>, coeffs: &[i64]) -> Vec<FFElem> {
    coeffs.iter().map(|&c| a.ring().from_i64(c)).collect()
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn pass(n: usize, what: &str) {
    println!("[acceptance] criterion {} ({}): PASS", n, what);
}

#[test]
fn criterion_1_f3s3_suite() {
    let start = Instant::now();
    let a = group_algebra(&presets::s3_table(), make_field(3, 1).unwrap()).unwrap();

    // Spec has exactly 2 points
    let points = structure::max_two_sided_ideals(&a);
    assert_eq!(points.len(), 2);

    // Z(A) has dimension 3 and u^2 = v^2 = uv = 0 on the computed basis
    let z = a.center();
    assert_eq!(z.dim(), 3);
    let u = elem(&a, &[1, 1, 1, 0, 0, 0]); // 1 + b + b^2
    let v = elem(&a, &[0, 0, 0, 1, 1, 1]); // a(1 + b + b^2)
    assert!(z.contains(a.ring(), &u) && z.contains(a.ring(), &v));
    let span = Subspace::from_vectors(a.ring(), 6, &[a.unit().to_vec(), u.clone(), v.clone()]);
    assert_eq!(span, z);
    assert!(a.is_zero_vec(&a.mul_vec(&u, &u)));
    assert!(a.is_zero_vec(&a.mul_vec(&v, &v)));
    assert!(a.is_zero_vec(&a.mul_vec(&u, &v)));
    assert!(a.is_zero_vec(&a.mul_vec(&v, &u)));

    // radical has dimension 4
    assert_eq!(structure::radical(&a).dim(), 4);

    // zeta to D = 20 equals the expansion of (1-u)^{-2}
    let order = preset_order("s3", parse_base("GF(3)").unwrap()).unwrap();
    let series = zeta::zeta_series(&order, 20).unwrap();
    let expect: Vec<BigInt> = (1..=21).map(int).collect();
    assert_eq!(series.coeffs, expect);
    assert!(zeta::compare_rational(&series, &[int(1)], &[int(1), int(-2), int(1)]).unwrap());

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 1 must run in under 1 s, took {:?}", elapsed);
    pass(1, "F3[S3] suite");
}

#[test]
fn criterion_2_dihedral_zeta() {
    let start = Instant::now();
    for q in [3u64, 5] {
        let base = parse_base(&format!("GF({})[T]", q)).unwrap();
        let order = preset_order("dihedral", base.clone()).unwrap();
        let series = zeta::zeta_series(&order, 6).unwrap();
        // (1-u)^{-2} (1-qu)^{-1}: denominator (1-u)^2 (1-qu)
        let qe = int(q as i64);
        let den = vec![
            int(1),
            int(-2) - &qe,
            int(1) + int(2) * &qe,
            -qe.clone(),
        ];
        assert!(
            zeta::compare_rational(&series, &[int(1)], &den).unwrap(),
            "dihedral zeta mismatch for q = {}",
            q
        );

        // point census: 4 degree-1 points over T^2 - 4, one point of degree
        // deg f for every other monic irreducible f
        let field = make_field(q, 1).unwrap();
        let t2m4 = vec![field.from_i64(-4), field.zero(), field.one()];
        let mut ramified_points = 0;
        for m in base_max_ideals(&base, 6) {
            let BaseMaxIdeal::Poly(f) = &m else { unreachable!() };
            let fiber = order.fiber(&m).unwrap();
            let factors = zeta::local_zeta(&fiber, f.len() - 1);
            let divides = poly::rem(&field, &t2m4, f).is_empty();
            if divides {
                assert_eq!(
                    factors,
                    vec![zeta::EulerFactor { degree: 1, multiplicity: 2 }],
                    "ramified fiber must carry two degree-1 points"
                );
                ramified_points += 2;
            } else {
                assert_eq!(
                    factors,
                    vec![zeta::EulerFactor { degree: f.len() - 1, multiplicity: 1 }],
                    "unramified fiber must carry a single point of full degree"
                );
            }
        }
        assert_eq!(ramified_points, 4);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "criterion 2 must run in under 60 s, took {:?}", elapsed);
    pass(2, "dihedral zeta for q in {3, 5}");
}

/// 2x2 matrices over F_5[T], entries as coefficient vectors.
type PolyMat = [Vec<FFElem>; 4];

fn pm_mul(f: &FiniteField, x: &PolyMat, y: &PolyMat) -> PolyMat {
    let m = |a: &Vec<FFElem>, b: &Vec<FFElem>| poly::mul(f, a, b);
    let s = |a: Vec<FFElem>, b: Vec<FFElem>| poly::add(f, &a, &b);
    [
        s(m(&x[0], &y[0]), m(&x[1], &y[2])),
        s(m(&x[0], &y[1]), m(&x[1], &y[3])),
        s(m(&x[2], &y[0]), m(&x[3], &y[2])),
        s(m(&x[2], &y[1]), m(&x[3], &y[3])),
    ]
}

fn pm_scale(f: &FiniteField, c: &Vec<FFElem>, x: &PolyMat) -> PolyMat {
    [
        poly::mul(f, c, &x[0]),
        poly::mul(f, c, &x[1]),
        poly::mul(f, c, &x[2]),
        poly::mul(f, c, &x[3]),
    ]
}

fn pm_add(f: &FiniteField, x: &PolyMat, y: &PolyMat) -> PolyMat {
    [
        poly::add(f, &x[0], &y[0]),
        poly::add(f, &x[1], &y[1]),
        poly::add(f, &x[2], &y[2]),
        poly::add(f, &x[3], &y[3]),
    ]
}

fn pm_sub(f: &FiniteField, x: &PolyMat, y: &PolyMat) -> PolyMat {
    [
        poly::sub(f, &x[0], &y[0]),
        poly::sub(f, &x[1], &y[1]),
        poly::sub(f, &x[2], &y[2]),
        poly::sub(f, &x[3], &y[3]),
    ]
}

#[test]
fn criterion_3_matrix_embedding_over_gf5t() {
    let f = make_field(5, 1).unwrap();
    let base = parse_base("GF(5)[T]").unwrap();
    let order = preset_order("dihedral", base.clone()).unwrap();
    let alg = match &order.algebra {
        ncspec::order::OrderAlgebra::Poly(a) => a.clone(),
        _ => unreachable!(),
    };
    let c = |v: i64| -> Vec<FFElem> {
        let e = f.from_i64(v);
        if f.is_zero(&e) {
            vec![]
        } else {
            vec![e]
        }
    };
    let tvar: Vec<FFElem> = vec![f.zero(), f.one()];
    let t2m4 = poly::add(&f, &poly::mul(&f, &tvar, &tvar), &c(-4));
    let half = c(3); // 1/2 = 3 over F_5
    // images of e, b, a, ab
    let phi_e: PolyMat = [c(1), c(0), c(0), c(1)];
    let phi_b: PolyMat = pm_scale(&f, &half, &[tvar.clone(), c(1), t2m4.clone(), tvar.clone()]);
    let phi_a: PolyMat = [c(1), c(0), c(0), c(-1)];
    let phi_ab: PolyMat = pm_mul(&f, &phi_a, &phi_b);
    let images = [phi_e.clone(), phi_b.clone(), phi_a.clone(), phi_ab.clone()];

    // verified ring homomorphism: phi(e_i) phi(e_j) = sum_k c[i][j][k] phi(e_k)
    for i in 0..4 {
        for j in 0..4 {
            let lhs = pm_mul(&f, &images[i], &images[j]);
            let mut rhs: PolyMat = [c(0), c(0), c(0), c(0)];
            for k in 0..4 {
                let coeff = alg.c(i, j, k);
                if coeff.is_empty() {
                    continue;
                }
                rhs = pm_add(&f, &rhs, &pm_scale(&f, coeff, &images[k]));
            }
            assert_eq!(lhs, rhs, "homomorphism fails on pair ({}, {})", i, j);
        }
    }

    // injectivity: the four images are linearly independent over F_5[T]
    // (specialize T = 0 and check rank 4 over F_5)
    let eval0 = |m: &PolyMat| -> Vec<FFElem> {
        m.iter().map(|p| p.first().cloned().unwrap_or_else(|| f.zero())).collect()
    };
    let rows: Vec<Vec<FFElem>> = images.iter().map(eval0).collect();
    assert_eq!(Subspace::from_vectors(&f, 4, &rows).dim(), 4);

    // image lands in L = { lower-left entry divisible by T^2 - 4 }
    for m in &images {
        assert!(poly::rem(&f, &m[2], &t2m4).is_empty());
    }
    // and the spanning set of L is hit: E11, E22, E12, (T^2-4) E21
    let two = c(2);
    let u = pm_sub(&f, &pm_scale(&f, &two, &phi_b), &pm_scale(&f, &tvar, &phi_e));
    let v = pm_sub(&f, &pm_scale(&f, &two, &phi_ab), &pm_scale(&f, &tvar, &phi_a));
    let e11 = pm_scale(&f, &c(3), &pm_add(&f, &phi_e, &phi_a));
    let e22 = pm_scale(&f, &c(3), &pm_sub(&f, &phi_e, &phi_a));
    let e12 = pm_scale(&f, &c(3), &pm_add(&f, &u, &v));
    let e21_scaled = pm_scale(&f, &c(3), &pm_sub(&f, &u, &v));
    assert_eq!(e11, [c(1), c(0), c(0), c(0)]);
    assert_eq!(e22, [c(0), c(0), c(0), c(1)]);
    assert_eq!(e12, [c(0), c(1), c(0), c(0)]);
    assert_eq!(e21_scaled, [c(0), c(0), t2m4.clone(), c(0)]);

    // after inverting T^2 - 4: every fiber at f not dividing it, deg <= 3,
    // is a single Wedderburn block (2, 5^{deg f})
    let mut checked = 0;
    for m in base_max_ideals(&base, 3) {
        let BaseMaxIdeal::Poly(fp) = &m else { unreachable!() };
        if poly::rem(&f, &t2m4, fp).is_empty() {
            continue;
        }
        let fiber = order.fiber(&m).unwrap();
        let w = structure::wedderburn(&fiber);
        assert_eq!(w.radical.dim(), 0);
        assert_eq!(w.blocks.len(), 1);
        assert_eq!(w.blocks[0].r, 2);
        let pts = structure::max_two_sided_ideals(&fiber);
        assert_eq!(pts[0].residue_size, 5u128.pow((fp.len() - 1) as u32));
        checked += 1;
    }
    assert_eq!(checked, 5 + 10 + 40 - 2); // all monic irreducibles of degree <= 3 minus T +- 2
    pass(3, "M2 embedding over GF(5)[T]");
}

#[test]
fn criterion_4_spec_of_zs3_localized_at_three() {
    let order = preset_order("s3", BaseRing::Integers).unwrap();
    let poset = order.spec_poset(&FiberSelector::localize(3)).unwrap();
    assert_eq!(poset.points.len(), 5);

    // the reference generator sets in the basis e, b, b2, a, ab, ab2
    let am1 = [-1i64, 0, 0, 1, 0, 0]; // a - 1
    let ap1 = [1i64, 0, 0, 1, 0, 0]; // a + 1
    let bm1 = [-1i64, 1, 0, 0, 0, 0]; // b - 1
    let bb1 = [1i64, 1, 1, 0, 0, 0]; // b^2 + b + 1

    // closed points: m = (a-1, b-1, 3), m' = (a+1, b-1, 3) as ideals of the
    // fiber at 3
    let fiber = order.fiber(&BaseMaxIdeal::Prime(3)).unwrap();
    let fe = fiber.ring().clone();
    let gen = |coeffs: &[i64]| -> Vec<FFElem> { coeffs.iter().map(|&c| fe.from_i64(c)).collect() };
    let m_ideal = fiber.ideal_generated(&[gen(&am1), gen(&bm1)]);
    let mp_ideal = fiber.ideal_generated(&[gen(&ap1), gen(&bm1)]);
    assert_ne!(m_ideal, mp_ideal);
    let closed_idx: Vec<usize> =
        (0..5).filter(|&i| poset.points[i].is_closed()).collect();
    assert_eq!(closed_idx.len(), 2);
    let find_closed = |ideal: &ncspec::algebra::TwoSidedIdeal<FiniteField>| -> usize {
        *closed_idx
            .iter()
            .find(|&&i| match &poset.points[i] {
                SpecPoint::Closed { point, .. } => &point.ideal == ideal,
                _ => false,
            })
            .expect("reference ideal must appear among the closed points")
    };
    let m_idx = find_closed(&m_ideal);
    let mp_idx = find_closed(&mp_ideal);
    assert_ne!(m_idx, mp_idx);

    // generic points: p = (a-1, b-1), p' = (a+1, b-1), q = (b^2+b+1) as
    // ideals of A (x) Q
    let aq = order.rational_fiber().unwrap();
    let rq = Rationals;
    let qgen = |coeffs: &[i64]| -> Vec<num::BigRational> {
        coeffs.iter().map(|&c| rq.from_i64(c)).collect()
    };
    let ref_p = aq.ideal_generated(&[qgen(&am1), qgen(&bm1)]);
    let ref_pp = aq.ideal_generated(&[qgen(&ap1), qgen(&bm1)]);
    let ref_q = aq.ideal_generated(&[qgen(&bb1)]);
    let generic_space = |i: usize| -> Subspace<Rationals> {
        let SpecPoint::Generic { cleared_gens, .. } = &poset.points[i] else { panic!() };
        let vecs: Vec<Vec<num::BigRational>> = cleared_gens
            .iter()
            .map(|g| g.iter().map(|c| num::BigRational::from_integer(c.clone())).collect())
            .collect();
        Subspace::from_vectors(&rq, 6, &vecs)
    };
    let generic_idx: Vec<usize> = (0..5).filter(|&i| !poset.points[i].is_closed()).collect();
    assert_eq!(generic_idx.len(), 3);
    let find_generic = |target: &Subspace<Rationals>| -> usize {
        *generic_idx
            .iter()
            .find(|&&i| &generic_space(i) == target)
            .expect("reference ideal must appear among the generic points")
    };
    let p_idx = find_generic(ref_p.space());
    let pp_idx = find_generic(ref_pp.space());
    let q_idx = find_generic(ref_q.space());

    // the expected closures: cl(p) = {m, p}, cl(p') = {m', p'},
    // cl(q) = {m, m', q}
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    assert_eq!(poset.closure_of(p_idx), sorted(vec![m_idx, p_idx]));
    assert_eq!(poset.closure_of(pp_idx), sorted(vec![mp_idx, pp_idx]));
    assert_eq!(poset.closure_of(q_idx), sorted(vec![m_idx, mp_idx, q_idx]));
    assert_eq!(poset.closure_of(m_idx), vec![m_idx]);
    assert_eq!(poset.closure_of(mp_idx), vec![mp_idx]);
    pass(4, "Spec(Z[S3]) localized at 3");
}

#[test]
fn criterion_5_procesi_counterexample() {
    for p in [2u64, 3, 5] {
        let f = make_field(p, 1).unwrap();
        let source = presets::product_of_two_fields(f.clone());
        let target = matrix_algebra(&presets::field_as_algebra(f), 2).unwrap();
        let h = procesi::make_morphism(&source, &target, &[target.basis_vec(0), target.basis_vec(3)])
            .unwrap();
        assert!(!procesi::procesi_check(&h), "diagonal embedding must fail for p = {}", p);
        // demonstration mode: the preimage of (0) is not prime
        let zero = ncspec::algebra::TwoSidedIdeal::from_subspace(
            &target,
            Subspace::zero(target.dim()),
        )
        .unwrap();
        let demo = procesi::pullback_demonstration(&h, &zero).unwrap();
        assert!(!demo.prime);
        assert_eq!(demo.quotient_blocks, 2);
        assert_eq!(demo.preimage.dim(), 0);
    }
    pass(5, "diagonal embedding counterexample for p in {2, 3, 5}");
}

#[test]
fn criterion_6_radical_oracle() {
    let start = Instant::now();
    let groups: Vec<(&str, ncspec::algebra::GroupTable)> = vec![
        ("C1", presets::cyclic_table(1)),
        ("C2", presets::cyclic_table(2)),
        ("C3", presets::cyclic_table(3)),
        ("C4", presets::cyclic_table(4)),
        ("V4", presets::klein_table()),
    ];
    for p in [2u64, 3] {
        let field = make_field(p, 1).unwrap();
        for (name, table) in &groups {
            let a = group_algebra(table, field.clone()).unwrap();
            let expected = common::bruteforce_max_nilpotent_ideal(&a);
            let computed = structure::radical(&a);
            assert_eq!(
                computed.space(),
                &expected,
                "radical disagrees with the brute-force oracle for F_{}[{}]",
                p,
                name
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "criterion 6 must run in under 30 s, took {:?}", elapsed);
    pass(6, "radical matches brute force for |G| <= 4, p in {2, 3}");
}

#[test]
fn criterion_7_tensor_laws() {
    for (n, q, group) in [(2usize, 3u64, "c2"), (2, 5, "s3")] {
        let field = make_field(q, 1).unwrap();
        let table = if group == "c2" { presets::cyclic_table(2) } else { presets::s3_table() };
        let a = group_algebra(&table, field.clone()).unwrap();
        let ground = presets::field_as_algebra(field.clone());

        // A (x)_A A = A via the canonical map
        let id = procesi::identity_morphism(&a);
        let t_self = procesi::tensor(&id, &id).unwrap();
        assert_eq!(t_self.algebra.dim(), a.dim());
        assert!(t_self.from_right.is_bijective());

        // M_n(F_q) (x)_{F_q} A = M_n(A)
        let mn = matrix_algebra(&presets::field_as_algebra(field.clone()), n).unwrap();
        let f_map = procesi::unit_morphism(&ground, &mn).unwrap();
        let g_map = procesi::unit_morphism(&ground, &a).unwrap();
        let t = procesi::tensor(&f_map, &g_map).unwrap();
        let mna = matrix_algebra(&a, n).unwrap();
        assert_eq!(t.algebra.dim(), mna.dim());
        // the family is all of (E_kl, a_b) in lexicographic order, so the
        // identification with M_n(A)'s basis is position by position
        assert_eq!(t.family.len(), mna.dim());
        let images: Vec<Vec<FFElem>> = t
            .family
            .iter()
            .map(|&(i, j)| mna.basis_vec(i * a.dim() + j))
            .collect();
        let iso = procesi::make_morphism(&t.algebra, &mna, &images).unwrap();
        assert!(iso.is_bijective());

        // swap is an involution
        let tc = procesi::tensor(&g_map, &f_map).unwrap();
        let swap = procesi::swap_iso(&t, &tc).unwrap();
        let back = procesi::swap_iso(&tc, &t).unwrap();
        let round = procesi::compose(&back, &swap).unwrap();
        assert_eq!(round.matrix(), procesi::identity_morphism(&t.algebra).matrix());
    }

    // the naive componentwise product rule fails for A = B = C = M_2(F_3)
    let m = matrix_algebra(&presets::field_as_algebra(make_field(3, 1).unwrap()), 2).unwrap();
    let id = procesi::identity_morphism(&m);
    let t = procesi::tensor(&id, &id).unwrap();
    let one = m.unit().to_vec();
    let e12 = m.basis_vec(1);
    let e21 = m.basis_vec(2);
    let x1 = t.class_of(&one, &e21);
    let x2 = t.class_of(&e12, &one);
    let true_prod = t.algebra.mul_vec(&x1, &x2);
    let naive = t.class_of(&m.mul_vec(&one, &e12), &m.mul_vec(&e21, &one));
    assert_ne!(true_prod, naive, "naive rule must fail for noncommutative A");
    pass(7, "tensor unit law, matrix functor, swap involution, naive-product counterexample");
}

#[test]
fn criterion_8_dirichlet_prefix() {
    // gauss preset against the ideal-counting oracle for Q(i), N = 50
    let gauss = preset_order("gauss", BaseRing::Integers).unwrap();
    let d = zeta::dirichlet_prefix(&gauss, 50).unwrap();
    for n in 1..=50i64 {
        assert_eq!(
            d.coeffs[n as usize - 1],
            BigInt::from(common::gaussian_ideal_count(n)),
            "a_{} disagrees with the Gaussian ideal count",
            n
        );
    }

    // Z[S3] local factor structure
    let zs3 = preset_order("s3", BaseRing::Integers).unwrap();
    let d = zeta::dirichlet_prefix(&zs3, 23).unwrap();
    let by_p: std::collections::BTreeMap<u64, Vec<zeta::EulerFactor>> =
        d.local_factors.iter().cloned().collect();
    assert_eq!(by_p[&3], vec![zeta::EulerFactor { degree: 1, multiplicity: 2 }]);
    for p in [5u64, 7, 11, 13, 17, 19, 23] {
        assert_eq!(by_p[&p], vec![zeta::EulerFactor { degree: 1, multiplicity: 3 }]);
    }
    // at p = 2: two points with residue data (1, 2) and (2, 2)
    let pts = zs3.closed_points_over(&BaseMaxIdeal::Prime(2)).unwrap();
    let mut shape: Vec<(usize, u128)> = pts
        .iter()
        .map(|p| match p {
            SpecPoint::Closed { point, .. } => (point.r, point.residue_size),
            _ => panic!(),
        })
        .collect();
    shape.sort();
    assert_eq!(shape, vec![(1, 2), (2, 2)]);
    pass(8, "Dirichlet prefixes: gauss vs ideal count, Z[S3] local factors");
}

/// The fiber corpus of criteria 1-8, as (order, fiber ideal) pairs.
fn corpus() -> Vec<(String, Order, BaseMaxIdeal)> {
    let mut out = vec![];
    let zs3 = preset_order("s3", BaseRing::Integers).unwrap();
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
        out.push((format!("Z[S3]@{}", p), zs3.clone(), BaseMaxIdeal::Prime(p)));
    }
    let gauss = preset_order("gauss", BaseRing::Integers).unwrap();
    for m in base_max_ideals(&BaseRing::Integers, 50) {
        let BaseMaxIdeal::Prime(p) = m else { unreachable!() };
        out.push((format!("Z[i]@{}", p), gauss.clone(), BaseMaxIdeal::Prime(p)));
    }
    let mat2 = preset_order("mat2", BaseRing::Integers).unwrap();
    for p in [2u64, 3, 5] {
        out.push((format!("M2(Z)@{}", p), mat2.clone(), BaseMaxIdeal::Prime(p)));
    }
    for q in [3u64, 5] {
        let base = parse_base(&format!("GF({})[T]", q)).unwrap();
        let o = preset_order("dihedral", base.clone()).unwrap();
        for m in base_max_ideals(&base, 6) {
            let name = format!("dihedral{}@{}", q, m.describe(&base));
            out.push((name, o.clone(), m));
        }
    }
    let f3 = parse_base("GF(3)").unwrap();
    for preset in ["s3", "c2", "mat2", "gauss"] {
        let o = preset_order(preset, f3.clone()).unwrap();
        out.push((format!("{}/F3", preset), o, BaseMaxIdeal::Zero));
    }
    out
}

#[test]
fn criterion_9_property_suites() {
    let items = corpus();
    let rank_bound: std::collections::BTreeMap<String, usize> =
        items.iter().map(|(name, o, _)| (name.clone(), o.rank())).collect();
    items.par_iter().for_each(|(name, order, m)| {
        let fiber = order.fiber(m).expect("corpus fiber");
        let q = fiber.ring().size();

        // Wedderburn dimension identity and center degree sum
        let w = structure::wedderburn(&fiber);
        let blocks_dim: usize = w.blocks.iter().map(|b| b.r * b.r * b.n).sum();
        assert_eq!(blocks_dim + w.radical.dim(), fiber.dim(), "{}", name);
        let quot = fiber.quotient(&w.radical).unwrap();
        let n_sum: usize = w.blocks.iter().map(|b| b.n).sum();
        assert_eq!(quot.algebra.center().dim(), n_sum, "{}", name);

        // idempotent family axioms hold exactly (verified on construction)
        let fam = structure::block_idempotents(&fiber);
        assert_eq!(fam.entries.len(), w.blocks.len(), "{}", name);

        // pullback primality, exhaustively over all maximal ideals: along
        // the identity and along the unit map from the ground field
        let id = procesi::identity_morphism(&fiber);
        let ground = presets::field_as_algebra(fiber.ring().clone());
        let unit = procesi::unit_morphism(&ground, &fiber).unwrap();
        for p in structure::max_two_sided_ideals(&fiber) {
            let pulled = procesi::pullback_point(&id, &p.ideal).expect("identity pullback");
            assert_eq!(pulled, p.ideal, "{}", name);
            let pulled_unit = procesi::pullback_point(&unit, &p.ideal).expect("unit pullback");
            assert_eq!(pulled_unit.dim(), 0, "{}", name);

            // r(x)^2 <= rank of the order
            assert!(
                p.r * p.r <= rank_bound[name],
                "{}: r = {} exceeds the rank bound {}",
                name,
                p.r,
                rank_bound[name]
            );
            // N(x) is a power of the residue characteristic and the
            // dimension identity r^2 n = dim kappa holds
            assert_eq!(p.residue_size, q.pow(p.center_degree as u32), "{}", name);
            let quotient = fiber.quotient(&p.ideal).unwrap();
            assert_eq!(quotient.algebra.dim(), p.r * p.r * p.center_degree, "{}", name);
        }

        // norm compatibility N(x) = N(y)^n along the unit map
        let table = zeta::norm_compatibility(&unit).expect("unit norm table");
        for (nx, ny, n) in table {
            assert_eq!(nx, ny.pow(n), "{}", name);
        }
    });

    // norm compatibility across the preset morphisms: identity, unit map,
    // and the scalar embedding into M_2, on one fiber per preset shape
    let f3 = parse_base("GF(3)").unwrap();
    let f5base = parse_base("GF(5)[T]").unwrap();
    let f5 = make_field(5, 1).unwrap();
    let named_fibers: Vec<(String, ScAlgebra<FiniteField>)> = vec![
        (
            "Z[S3]@2".into(),
            preset_order("s3", BaseRing::Integers).unwrap().fiber(&BaseMaxIdeal::Prime(2)).unwrap(),
        ),
        (
            "Z[S3]@3".into(),
            preset_order("s3", BaseRing::Integers).unwrap().fiber(&BaseMaxIdeal::Prime(3)).unwrap(),
        ),
        (
            "Z[i]@3".into(),
            preset_order("gauss", BaseRing::Integers).unwrap().fiber(&BaseMaxIdeal::Prime(3)).unwrap(),
        ),
        (
            "mat2/F3".into(),
            preset_order("mat2", f3.clone()).unwrap().fiber(&BaseMaxIdeal::Zero).unwrap(),
        ),
        (
            "dihedral5@T".into(),
            preset_order("dihedral", f5base).unwrap()
                .fiber(&BaseMaxIdeal::Poly(vec![f5.zero(), f5.one()]))
                .unwrap(),
        ),
    ];
    for (name, fiber) in named_fibers {
        let id = procesi::identity_morphism(&fiber);
        for (nx, ny, n) in zeta::norm_compatibility(&id).unwrap() {
            assert_eq!(nx, ny.pow(n), "{} identity", name);
        }
        let ground = presets::field_as_algebra(fiber.ring().clone());
        let unit = procesi::unit_morphism(&ground, &fiber).unwrap();
        for (nx, ny, n) in zeta::norm_compatibility(&unit).unwrap() {
            assert_eq!(nx, ny.pow(n), "{} unit", name);
        }
        let m2 = matrix_algebra(&fiber, 2).unwrap();
        let images: Vec<Vec<FFElem>> = (0..fiber.dim())
            .map(|b| {
                let mut v = m2.zero_vec();
                v[b] = fiber.ring().one();
                v[3 * fiber.dim() + b] = fiber.ring().one();
                v
            })
            .collect();
        let scalar = procesi::make_morphism(&fiber, &m2, &images).unwrap();
        for (nx, ny, n) in zeta::norm_compatibility(&scalar).unwrap() {
            assert_eq!(nx, ny.pow(n), "{} scalar", name);
        }
    }
    pass(9, "property suites over the full fiber corpus");
}

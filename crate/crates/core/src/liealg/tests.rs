use proptest::prelude::*;

use super::*;
use crate::catalog;
use crate::exact::unit_vector;

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

fn series_dims(s: &[Subspace]) -> Vec<usize> {
    s.iter().map(Subspace::dim).collect()
}

/// Jacobi residual expanded straight from the constants, independent of
/// `bracket`.
fn jacobi_oracle(g: &LieAlgebra, i: usize, j: usize, k: usize) -> Vector {
    let n = g.dim();
    let mut out = vec![q(0); n];
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        for m in 0..n {
            let cab = g.constant(a, b, m);
            if cab.is_zero() {
                continue;
            }
            for (l, o) in out.iter_mut().enumerate() {
                *o += cab * g.constant(m, c, l);
            }
        }
    }
    out
}

fn bad_algebra() -> LieAlgebra {
    LieAlgebra::from_brackets(
        "bad",
        vec!["x".into(), "y".into(), "z".into()],
        [
            ((0, 1), vec![(0, q(1))]),
            ((1, 2), vec![(1, q(1))]),
            ((0, 2), vec![(2, q(1))]),
        ],
    )
    .unwrap()
}

#[test]
fn validate_structure_examples() {
    let sl2 = catalog::sl2();
    assert!(sl2.validate_structure().is_empty());
    assert!(jacobi_oracle(&sl2, 0, 1, 2).iter().all(Rational::is_zero));
    assert!(LieAlgebra::abelian(4).validate_structure().is_empty());

    let bad = bad_algebra();
    let violations = bad.validate_structure();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0].triple, (0, 1, 2));
    // [[x,y],z] + [[y,z],x] + [[z,x],y] = z - x + y
    assert_eq!(violations[0].residual, v(&[-1, 1, 1]));
    assert_eq!(violations[0].residual, jacobi_oracle(&bad, 0, 1, 2));
    assert!(matches!(
        LieAlgebra::new_validated("bad", bad.basis_names().to_vec(), bad.sparse_brackets()),
        Err(Error::Jacobi(t)) if t == vec![(0, 1, 2)]
    ));
}

#[test]
fn bracket_examples() {
    let sl2 = catalog::sl2();
    let (h, e, f) = (unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2));
    assert_eq!(sl2.bracket(&e, &f).unwrap(), h);
    let x = v(&[1, -2, 5]);
    assert!(is_zero_vector(&sl2.bracket(&x, &x).unwrap()));
    let heis = catalog::heisenberg(3);
    assert_eq!(heis.bracket(&unit_vector(3, 0), &unit_vector(3, 1)).unwrap(), unit_vector(3, 2));
    assert!(matches!(sl2.bracket(&v(&[1, 0]), &e), Err(Error::DimensionMismatch(_))));
}

#[test]
fn series_examples() {
    assert_eq!(series_dims(&catalog::heisenberg(3).derived_series()), vec![3, 1, 0]);
    assert_eq!(series_dims(&catalog::sl2().derived_series()), vec![3, 3]);
    assert_eq!(series_dims(&catalog::r2().lower_central_series()), vec![2, 1, 1]);
    assert!(catalog::r2().is_solvable());
    assert!(!catalog::r2().is_nilpotent());
}

#[test]
fn report_examples() {
    let r = catalog::sl2().structure_report();
    assert!(r.perfect && r.semisimple && r.unimodular && r.complete && r.sympathetic);

    let r = catalog::r2().structure_report();
    assert!(!r.perfect && r.complete && !r.unimodular && !r.sympathetic);
    assert_eq!(r.derivation_dim, 2);

    let r = catalog::heisenberg(3).structure_report();
    assert!(r.nilpotent && r.unimodular && !r.complete);
    assert_eq!((r.center_dim, r.derivation_dim), (1, 6));
}

#[test]
fn center_examples() {
    assert_eq!(catalog::heisenberg(3).center(), Subspace::span(3, &[unit_vector(3, 2)]));
    assert!(catalog::sl2().center().is_zero());
    assert!(LieAlgebra::abelian(3).center().is_full());
}

#[test]
fn killing_examples() {
    let k = catalog::sl2().killing_form();
    assert_eq!(k.gram, Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]));
    assert!(k.is_symmetric() && k.is_nondegenerate());
    assert!(catalog::heisenberg(3).killing_form().gram.is_zero());
    assert!(LieAlgebra::abelian(3).killing_form().gram.is_zero());
}

#[test]
fn killing_form_is_invariant() {
    for entry in catalog::standard_entries() {
        let g = &entry.algebra;
        let n = g.dim();
        let k = g.killing_form();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let lhs = k.evaluate(g.bracket_basis(i, j), &unit_vector(n, l));
                    let rhs = k.evaluate(&unit_vector(n, i), g.bracket_basis(j, l));
                    assert_eq!(lhs, rhs, "{}", entry.name);
                }
            }
        }
    }
}

#[test]
fn radical_and_nilradical_examples() {
    let gl2 = catalog::gln(2);
    // basis E11, E12, E21, E22
    let identity = Subspace::span(4, &[v(&[1, 0, 0, 1])]);
    assert!(catalog::sl2().radical().is_zero());
    assert_eq!(gl2.radical(), identity);
    assert!(catalog::r2().radical().is_full());

    assert_eq!(catalog::r2().nilradical(), Subspace::span(2, &[unit_vector(2, 1)]));
    assert!(catalog::heisenberg(3).nilradical().is_full());
    assert_eq!(gl2.nilradical(), identity);
}

#[test]
fn nilradical_needs_associative_closure() {
    // t acts on (x, y) with weights 1 and -1; tr(ad t)^2 = 2 but tr(ad t) = 0.
    let g = LieAlgebra::from_brackets(
        "weights",
        vec!["t".into(), "x".into(), "y".into()],
        [((0, 1), vec![(1, q(1))]), ((0, 2), vec![(2, q(-1))])],
    )
    .unwrap();
    assert!(g.radical().is_full());
    assert_eq!(g.nilradical(), Subspace::span(3, &[unit_vector(3, 1), unit_vector(3, 2)]));
}

/// Derivation system assembled directly from the definition.
fn derivation_rank_oracle(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = vec![q(0); n * n];
                // (D[b_i,b_j])_k = sum_l c_ij^l D_kl
                for l in 0..n {
                    row[k * n + l] += g.constant(i, j, l);
                }
                // ([D b_i, b_j])_k = sum_l D_li c_lj^k
                for l in 0..n {
                    row[l * n + i] -= g.constant(l, j, k);
                }
                // ([b_i, D b_j])_k = sum_l D_lj c_il^k
                for l in 0..n {
                    row[l * n + j] -= g.constant(i, l, k);
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_rows(rows).unwrap().rank()
}

#[test]
fn derivation_examples() {
    let sl2 = catalog::sl2();
    let ders = sl2.derivations();
    assert_eq!(ders.len(), 3);
    assert!(ders.iter().all(|d| sl2.inner_preimage(d).is_some()));

    let heis = catalog::heisenberg(3);
    assert_eq!(heis.derivations().len(), 6);
    assert_eq!(9 - derivation_rank_oracle(&heis), 6);
    assert_eq!(LieAlgebra::abelian(3).derivations().len(), 9);
}

#[test]
fn derivations_agree_with_oracle() {
    for entry in catalog::standard_entries() {
        let g = &entry.algebra;
        if g.dim() > 7 {
            continue;
        }
        let ders = g.derivations();
        let n = g.dim();
        assert_eq!(ders.len(), n * n - derivation_rank_oracle(g), "{}", entry.name);
        assert!(ders.iter().all(|d| g.is_derivation(d)), "{}", entry.name);
        for i in 0..n {
            assert!(g.is_derivation(&g.ad(i)));
        }
    }
}

#[test]
fn levi_examples() {
    let gl2 = catalog::gln(2);
    let l = gl2.levi_decomposition().unwrap();
    assert_eq!(l.radical, gl2.radical());
    assert_eq!(l.levi.dim(), 3);
    assert!(gl2.is_subalgebra(&l.levi));
    assert!(gl2.subalgebra(&l.levi).unwrap().is_semisimple());

    let g = catalog::sl2_semidirect_irrep(1);
    let l = g.levi_decomposition().unwrap();
    assert_eq!(l.radical, Subspace::span(5, &[unit_vector(5, 3), unit_vector(5, 4)]));
    assert_eq!(l.levi.dim(), 3);
    assert!(g.subalgebra(&l.levi).unwrap().is_semisimple());

    let l = catalog::r2().levi_decomposition().unwrap();
    assert!(l.levi.is_zero() && l.radical.is_full());
}

#[test]
fn quotient_examples() {
    let heis = catalog::heisenberg(3);
    let q1 = heis.quotient_algebra(&heis.center()).unwrap();
    assert_eq!(q1.algebra.dim(), 2);
    assert!(q1.algebra.is_abelian());
    assert_eq!(q1.projection.rows(), 2);

    let q2 = heis.quotient_algebra(&heis.whole()).unwrap();
    assert_eq!(q2.algebra.dim(), 0);

    let gl2 = catalog::gln(2);
    let q3 = gl2.quotient_algebra(&gl2.radical()).unwrap();
    let mut a = q3.algebra.structure_report();
    let mut b = catalog::sl2().structure_report();
    a.dim = 0;
    b.dim = 0;
    assert_eq!(a, b);

    let not_ideal = Subspace::span(3, &[unit_vector(3, 0)]);
    assert!(matches!(heis.quotient_algebra(&not_ideal), Err(Error::NotIdeal)));
}

#[test]
fn semidirect_examples() {
    let g = catalog::sl2_semidirect_irrep(1);
    assert_eq!(g.dim(), 5);
    assert!(g.is_perfect());

    let r = catalog::heisenberg(3);
    let zero = LieAlgebra::abelian(0);
    let action = crate::repn::Representation::new(3, vec![]).unwrap();
    let p = LieAlgebra::semidirect_product(&zero, &r, &action).unwrap();
    assert_eq!(p.sparse_brackets(), r.sparse_brackets());

    let gl1 = LieAlgebra::abelian(1);
    let line = LieAlgebra::abelian(1);
    let scalar = crate::repn::Representation::new(1, vec![Matrix::identity(1)]).unwrap();
    let p = LieAlgebra::semidirect_product(&gl1, &line, &scalar).unwrap();
    assert_eq!(p.sparse_brackets(), catalog::r2().sparse_brackets());

    // Scaling x alone is not a derivation of h3.
    let mut d = Matrix::zeros(3, 3);
    d[(0, 0)] = q(1);
    let bad = crate::repn::Representation::new(3, vec![d]).unwrap();
    assert!(matches!(
        LieAlgebra::semidirect_product(&gl1, &r, &bad),
        Err(Error::NotDerivation(0))
    ));
}

#[test]
fn change_of_basis_examples() {
    let sl2 = catalog::sl2();
    let same = sl2.change_of_basis(&Matrix::identity(3)).unwrap();
    assert_eq!(same.sparse_brackets(), sl2.sparse_brackets());

    let heis = catalog::heisenberg(3);
    let mut p = Matrix::identity(3);
    p[(2, 2)] = q(2);
    let h2 = heis.change_of_basis(&p).unwrap();
    assert!(h2.is_nilpotent());
    assert_eq!(h2.center().dim(), 1);
    // [x, y] = z = (1/2)(2z)
    assert_eq!(h2.constant(0, 1, 2), &Rational::new(1, 2));

    assert!(matches!(sl2.change_of_basis(&Matrix::zeros(3, 3)), Err(Error::Singular)));
}

#[test]
fn matrix_basis_rejects_unclosed_span() {
    let mut a = Matrix::zeros(2, 2);
    a[(0, 1)] = q(1);
    let mut b = Matrix::zeros(2, 2);
    b[(1, 0)] = q(1);
    assert!(matches!(
        LieAlgebra::from_matrix_basis("x", vec!["a".into(), "b".into()], &[a, b]),
        Err(Error::NotSubalgebra)
    ));
}

fn check_structure_invariants(g: &LieAlgebra) {
    let n = g.dim();
    let r = g.radical();
    let nil = g.nilradical();
    assert!(g.is_ideal(&r) && g.is_solvable_subalgebra(&r));
    assert!(g.is_ideal(&nil) && g.is_nilpotent_subalgebra(&nil));
    assert!(r.contains_space(&nil));
    assert!(nil.contains_space(&g.bracket_spaces(&g.whole(), &r)));
    let quotient = g.quotient_algebra(&r).unwrap();
    assert!(quotient.algebra.is_semisimple());

    let levi = g.levi_decomposition().unwrap();
    assert!(levi.levi.intersection(&levi.radical).is_zero());
    assert_eq!(levi.levi.dim() + levi.radical.dim(), n);
    assert!(g.is_subalgebra(&levi.levi));
    assert!(g.subalgebra(&levi.levi).unwrap().is_semisimple());

    if g.is_perfect() {
        assert_eq!(r, nil);
    }
    let report = g.structure_report();
    assert_eq!(report.sympathetic, report.perfect && report.complete);
    if report.semisimple {
        assert!(report.perfect && report.radical_dim == 0);
    }
}

#[test]
fn structure_invariants_on_catalog() {
    for entry in catalog::standard_entries() {
        check_structure_invariants(&entry.algebra);
    }
}

/// Invertible integer matrix `L U` with unit diagonals.
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n * 2).prop_map(move |xs| {
        let mut l = Matrix::identity(n);
        let mut u = Matrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    l[(i, j)] = q(xs[i * n + j]);
                } else if i < j {
                    u[(i, j)] = q(xs[n * n + i * n + j]);
                }
            }
        }
        l.mul(&u).unwrap()
    })
}

fn small_entries() -> Vec<LieAlgebra> {
    ["r2", "sl2", "heisenberg(3)", "gln(2)", "affine(1)", "oscillator", "sl2_semidirect_irrep(1)"]
        .iter()
        .map(|s| catalog::make_named(s).unwrap().algebra)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn report_is_basis_invariant(idx in 0usize..7, seed in invertible(5)) {
        let g = &small_entries()[idx];
        let n = g.dim();
        // Use the leading n x n block of a 5x5 LU product: still unit LU.
        let rows: Vec<Vector> = (0..n).map(|i| seed.row(i)[..n].to_vec()).collect();
        let p = Matrix::from_rows(rows).unwrap();
        let h = g.change_of_basis(&p).unwrap();
        prop_assert!(h.validate_structure().is_empty());
        prop_assert_eq!(h.structure_report(), g.structure_report());
        prop_assert_eq!(series_dims(&h.derived_series()), series_dims(&g.derived_series()));
        prop_assert_eq!(
            series_dims(&h.lower_central_series()),
            series_dims(&g.lower_central_series())
        );
        check_structure_invariants(&h);
    }
}

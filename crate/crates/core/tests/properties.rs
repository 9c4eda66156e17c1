use proptest::prelude::*;

use moufang_core::birep::{left_right_matrices, tangent_structure_constants, Algebra, SquareMatrix};
use moufang_core::finite_loop::{
    birep_axiom_residual_table, classify, cyclic_group, octonion_loop_16, parse_table, quaternion_group_8,
    CayleyTable,
};
use moufang_core::fock::{bilinear, conserves_number};
use moufang_core::malcev::{bracket, StructureTensor, TangentVector};
use moufang_core::octonion::{associator, product_bracketings};
use moufang_core::{ChartPoint, MulTable, Octonion};

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-1.0f64..1.0).prop_map(Octonion::new)
}

fn unit_octonion() -> impl Strategy<Value = Octonion> {
    octonion()
        .prop_filter("nonzero", |q| q.norm() > 1e-3)
        .prop_map(|q| q.normalized().unwrap())
}

fn chart_point(dim: usize) -> impl Strategy<Value = ChartPoint> {
    prop::collection::vec(-0.35f64..0.35, dim).prop_map(|x| ChartPoint::new(x).unwrap())
}

fn tangent(r: usize) -> impl Strategy<Value = TangentVector> {
    prop::collection::vec(-1.0f64..1.0, r).prop_map(TangentVector)
}

fn matrix(n: usize) -> impl Strategy<Value = SquareMatrix> {
    prop::collection::vec(-1.0f64..1.0, n * n).prop_map(move |v| SquareMatrix::from_vec(n, n, v))
}

fn close(a: &Octonion, b: &Octonion, tol: f64) -> bool {
    (*a - *b).norm() < tol
}

fn octonion_c() -> StructureTensor {
    tangent_structure_constants(Algebra::Octonion).unwrap().tensor
}

proptest! {
    #[test]
    fn moufang_identity(a in unit_octonion(), g in unit_octonion(), h in unit_octonion()) {
        prop_assert!(MulTable::STANDARD.moufang_residual(&a, &g, &h) < 1e-12);
    }

    #[test]
    fn alternativity(a in octonion(), b in octonion()) {
        prop_assert!(associator(&a, &a, &b).norm() < 1e-12);
        prop_assert!(associator(&a, &b, &b).norm() < 1e-12);
        prop_assert!(associator(&a, &b, &a).norm() < 1e-12);
    }

    #[test]
    fn two_generated_products_are_bracketing_free(
        x in octonion(),
        y in octonion(),
        pick in prop::array::uniform4(any::<bool>()),
    ) {
        let f = |p: bool| if p { x } else { y };
        let all = product_bracketings(&f(pick[0]), &f(pick[1]), &f(pick[2]), &f(pick[3]));
        for q in &all[1..] {
            prop_assert!(close(&all[0], q, 1e-12));
        }
    }

    #[test]
    fn norm_is_multiplicative(a in octonion(), b in octonion()) {
        prop_assert!(((a * b).norm() - a.norm() * b.norm()).abs() < 1e-13);
    }

    #[test]
    fn conjugation_reverses_products(a in octonion(), b in octonion()) {
        prop_assert!(close(&(a * b).conj(), &(b.conj() * a.conj()), 1e-13));
    }

    #[test]
    fn inverse_is_two_sided(a in unit_octonion()) {
        let inv = a.inverse().unwrap();
        prop_assert!(close(&(a * inv), &Octonion::ONE, 1e-14));
        prop_assert!(close(&(inv * a), &Octonion::ONE, 1e-14));
    }

    #[test]
    fn chart_round_trip(x in chart_point(7)) {
        let back = ChartPoint::project(&x.lift(), 7).unwrap();
        for (u, v) in back.coords().iter().zip(x.coords()) {
            prop_assert!((u - v).abs() < 1e-15);
        }
        prop_assert!((x.lift().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bracket_is_antisymmetric(x in tangent(7), y in tangent(7)) {
        let c = octonion_c();
        let xy = bracket(&c, &x, &y).unwrap();
        let yx = bracket(&c, &y, &x).unwrap();
        prop_assert!((&xy + &yx).norm() < 1e-12);
        prop_assert!(bracket(&c, &x, &x).unwrap().norm() < 1e-12);
    }

    #[test]
    fn translation_matrices_are_orthogonal(g in chart_point(7)) {
        let (s, t) = left_right_matrices(Algebra::Octonion, &g).unwrap();
        let id = SquareMatrix::identity(8, 8);
        prop_assert!((s.transpose() * &s - &id).amax() < 1e-14);
        prop_assert!((t.transpose() * &t - &id).amax() < 1e-14);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bilinear_is_a_lie_homomorphism(a in matrix(5), b in matrix(5)) {
        let lhs = bilinear(&a).unwrap().commutator(&bilinear(&b).unwrap());
        let rhs = bilinear(&(&a * &b - &b * &a)).unwrap();
        prop_assert!((&lhs - &rhs).max_abs() < 1e-12);
        prop_assert!(conserves_number(&bilinear(&a).unwrap()));
    }

    #[test]
    fn bilinear_is_linear(a in matrix(4), b in matrix(4), s in -2.0f64..2.0) {
        let lhs = bilinear(&(&a + &b * s)).unwrap();
        let mut rhs = bilinear(&a).unwrap();
        rhs.add_scaled(&bilinear(&b).unwrap(), num_complex::Complex64::new(s, 0.0));
        prop_assert!((&lhs - &rhs).max_abs() < 1e-14);
    }
}

fn builtin_tables() -> Vec<CayleyTable> {
    let mut tables = vec![octonion_loop_16(), quaternion_group_8()];
    tables.extend((1..=9).map(|n| cyclic_group(n).unwrap()));
    tables
}

fn relabeling(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|rest| std::iter::once(0).chain(rest).collect())
}

fn relabeled_group() -> impl Strategy<Value = CayleyTable> {
    let groups: Vec<CayleyTable> = std::iter::once(quaternion_group_8())
        .chain((1..=9).map(|n| cyclic_group(n).unwrap()))
        .collect();
    prop::sample::select(groups)
        .prop_flat_map(|t| (Just(t.clone()), relabeling(t.order())))
        .prop_map(|(t, p)| t.relabel(&p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn relabeled_groups_satisfy_birep_axioms(t in relabeled_group()) {
        prop_assert_eq!(birep_axiom_residual_table(&t), 0);
        prop_assert!(classify(&t).is_group.holds);
    }

    #[test]
    fn parse_inverts_serialize(t in prop::sample::select(builtin_tables())
        .prop_flat_map(|t| (Just(t.clone()), relabeling(t.order())))
        .prop_map(|(t, p)| t.relabel(&p).unwrap()))
    {
        prop_assert_eq!(parse_table(&t.serialize()).unwrap(), t);
    }

    #[test]
    fn classification_is_relabeling_invariant(p in relabeling(16)) {
        let t = octonion_loop_16();
        let (a, b) = (classify(&t), classify(&t.relabel(&p).unwrap()));
        prop_assert_eq!(a.is_moufang.holds, b.is_moufang.holds);
        prop_assert_eq!(a.is_group.holds, b.is_group.holds);
        prop_assert_eq!(b.is_flexible.holds, true);
    }
}

#[test]
fn builtins_round_trip_bit_exact() {
    for t in builtin_tables() {
        let text = t.serialize();
        assert_eq!(parse_table(&text).unwrap().serialize(), text);
    }
}

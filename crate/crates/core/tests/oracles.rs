//! Library results against oracles computed independently in this file.

use moufang_core::birep::{
    auxiliary_matrix, auxiliary_matrix_fd, derivative_generators, generators, generators_fd,
    structure_functions, tangent_structure_constants, Algebra, SquareMatrix,
};
use moufang_core::finite_loop::{
    classify, nonassociative_loop_5, octonion_loop_16, octonion_loop_element, CayleyTable, Law,
};
use moufang_core::numdiff::DiffConfig;
use moufang_core::sampling::{random_chart_point, random_unit_octonion, stream_rng};
use moufang_core::{ChartPoint, Octonion};

/// Recursive Cayley–Dickson product `(a,b)(c,d) = (ac − d̄b, da + bc̄)`.
fn cd_mul(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let conj = |v: &[f64]| -> Vec<f64> {
        let mut w: Vec<f64> = v.iter().map(|t| -t).collect();
        w[0] = v[0];
        w
    };
    let (a, b, c, d) = (&x[..h], &x[h..], &y[..h], &y[h..]);
    let ac = cd_mul(a, c);
    let db = cd_mul(&conj(d), b);
    let da = cd_mul(d, a);
    let bc = cd_mul(b, &conj(c));
    ac.iter()
        .zip(&db)
        .map(|(p, q)| p - q)
        .chain(da.iter().zip(&bc).map(|(p, q)| p + q))
        .collect()
}

fn oracle_mul(a: &Octonion, b: &Octonion) -> Octonion {
    let v = cd_mul(&a.coeff, &b.coeff);
    Octonion::new(v.try_into().unwrap())
}

fn max_diff(a: &Octonion, b: &Octonion) -> f64 {
    (*a - *b).coeff.iter().fold(0.0, |m, x| m.max(x.abs()))
}

#[test]
fn basis_table_matches_cayley_dickson() {
    for i in 0..8 {
        for j in 0..8 {
            let (a, b) = (Octonion::unit(i), Octonion::unit(j));
            assert_eq!((a * b).coeff, oracle_mul(&a, &b).coeff, "e{i} e{j}");
        }
    }
}

#[test]
fn random_products_match_cayley_dickson() {
    let mut rng = stream_rng(11, 0);
    for _ in 0..500 {
        let (a, b) = (random_unit_octonion(&mut rng), random_unit_octonion(&mut rng));
        assert!(max_diff(&(a * b), &oracle_mul(&a, &b)) < 1e-15);
    }
}

#[test]
fn octonion_loop_16_matches_signed_products() {
    let t = octonion_loop_16();
    for g in 0..16 {
        for h in 0..16 {
            let expect = oracle_mul(&octonion_loop_element(g), &octonion_loop_element(h));
            assert_eq!(octonion_loop_element(t.mul(g, h)).coeff, expect.coeff);
        }
    }
}

fn brute_first(t: &CayleyTable, fails: impl Fn(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if fails(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

#[test]
fn octonion_loop_classification_matches_brute_force() {
    let t = octonion_loop_16();
    let m = |a, b| t.mul(a, b);
    let cls = classify(&t);
    let assoc = brute_first(&t, |a, b, c| m(m(a, b), c) != m(a, m(b, c)));
    let moufang = brute_first(&t, |a, g, h| m(m(a, g), m(h, a)) != m(m(a, m(g, h)), a));
    assert_eq!(assoc, Some([1, 2, 4]));
    assert_eq!(cls.is_group.counterexample.map(|c| c.elements), assoc);
    assert_eq!(cls.is_group.counterexample.map(|c| c.law), Some(Law::Associative));
    assert_eq!(moufang, None);
    assert!(cls.is_moufang.holds);
    assert!(cls.is_loop.holds);
}

/// All order-5 loops with unit 0, in lexicographic order of their rows.
fn order5_loops() -> Vec<Vec<Vec<usize>>> {
    const N: usize = 5;
    fn fill(rows: &mut [[usize; N]; N], cell: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if cell == N * N {
            out.push(rows.iter().map(|r| r.to_vec()).collect());
            return;
        }
        let (i, j) = (cell / N, cell % N);
        if i == 0 || j == 0 {
            rows[i][j] = i + j;
            return fill(rows, cell + 1, out);
        }
        for v in 0..N {
            let used = (0..j).any(|k| rows[i][k] == v) || (0..i).any(|k| rows[k][j] == v);
            if !used {
                rows[i][j] = v;
                fill(rows, cell + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    fill(&mut [[0; N]; N], 0, &mut out);
    out
}

#[test]
fn nonassociative_loop_5_is_lex_first() {
    let loops = order5_loops();
    // 56 reduced Latin squares of order 5.
    assert_eq!(loops.len(), 56);
    let first = loops
        .into_iter()
        .find(|rows| {
            let m = |a: usize, b: usize| rows[a][b];
            let inverses = (0..5).all(|g| (0..5).any(|h| m(g, h) == 0 && m(h, g) == 0));
            let assoc = (0..125).all(|k| {
                let (a, b, c) = (k / 25, (k / 5) % 5, k % 5);
                m(m(a, b), c) == m(a, m(b, c))
            });
            inverses && !assoc
        })
        .unwrap();
    assert_eq!(nonassociative_loop_5().rows(), first);
}

fn imag_of_commutator(j: usize, k: usize) -> Octonion {
    let (a, b) = (Octonion::unit(j + 1), Octonion::unit(k + 1));
    oracle_mul(&a, &b) - oracle_mul(&b, &a)
}

#[test]
fn tangent_constants_match_basis_commutators() {
    for algebra in [Algebra::Octonion, Algebra::Quaternion] {
        let r = algebra.tangent_dim();
        let tc = tangent_structure_constants(algebra).unwrap();
        for j in 0..r {
            for k in 0..r {
                let comm = imag_of_commutator(j, k);
                for i in 0..r {
                    assert!((tc.tensor.get(j, k, i) - comm.coeff[i + 1]).abs() < 1e-6);
                }
            }
        }
    }
    let tc = tangent_structure_constants(Algebra::Octonion).unwrap();
    assert!((tc.tensor.get(0, 1, 2) - 2.0).abs() < 1e-6);
}

fn left_oracle(q: &Octonion) -> SquareMatrix {
    SquareMatrix::from_fn(8, 8, |i, j| oracle_mul(q, &Octonion::unit(j)).coeff[i])
}

fn right_oracle(q: &Octonion) -> SquareMatrix {
    SquareMatrix::from_fn(8, 8, |i, j| oracle_mul(&Octonion::unit(j), q).coeff[i])
}

#[test]
fn derivative_generators_match_conjugated_translations() {
    let mut rng = stream_rng(5, 0);
    for _ in 0..5 {
        let g = random_chart_point(&mut rng, 7, 0.5);
        let q = g.lift();
        let (rg, lg) = (right_oracle(&q), left_oracle(&q));
        let (rg_inv, lg_inv) = (rg.clone().try_inverse().unwrap(), lg.clone().try_inverse().unwrap());
        let frame = derivative_generators(Algebra::Octonion, &g).unwrap();
        for j in 0..7 {
            let e = Octonion::unit(j + 1);
            let s = &rg * left_oracle(&e) * &rg_inv;
            let t = &lg_inv * right_oracle(&e) * &lg;
            assert!((&frame.s_prime[j] - s).amax() < 1e-12);
            assert!((&frame.t_prime[j] - t).amax() < 1e-12);
        }
    }
}

#[test]
fn finite_difference_generators_match_closed_form() {
    for algebra in [Algebra::Octonion, Algebra::Quaternion] {
        let closed = generators(algebra);
        let fd = generators_fd(algebra, &DiffConfig::default()).unwrap();
        for j in 0..algebra.tangent_dim() {
            assert!((&closed.s[j] - &fd.s[j]).amax() < 1e-8);
            assert!((&closed.t[j] - &fd.t[j]).amax() < 1e-8);
        }
    }
}

#[test]
fn finite_difference_auxiliary_matrix_matches_closed_form() {
    let mut rng = stream_rng(6, 0);
    for _ in 0..5 {
        let g = random_chart_point(&mut rng, 7, 0.5);
        let closed = auxiliary_matrix(Algebra::Octonion, &g).unwrap();
        let fd = auxiliary_matrix_fd(Algebra::Octonion, &g, &DiffConfig::default()).unwrap();
        assert!((&closed.v - fd).amax() < 1e-8);
    }
}

#[test]
fn auxiliary_matrix_rows_are_imaginary_parts_of_g_ej() {
    let g = ChartPoint::new(vec![0.1, -0.3, 0.2, 0.05, 0.0, 0.15, -0.1]).unwrap();
    let aux = auxiliary_matrix(Algebra::Octonion, &g).unwrap();
    for j in 0..7 {
        let p = oracle_mul(&g.lift(), &Octonion::unit(j + 1));
        for n in 0..7 {
            assert!((aux.v[(j, n)] - p.coeff[n + 1]).abs() < 1e-14);
        }
    }
}

#[test]
fn quaternionic_structure_functions_are_constant() {
    // In the associative case the loop is a group and c(g) = c.
    let c0 = tangent_structure_constants(Algebra::Quaternion).unwrap().tensor;
    let mut rng = stream_rng(7, 0);
    for _ in 0..5 {
        let g = random_chart_point(&mut rng, 3, 0.5);
        let c = structure_functions(Algebra::Quaternion, &g, &DiffConfig::default()).unwrap();
        assert!(c.tensor.max_abs_diff(&c0) < 1e-8);
    }
}

use super::*;
use crate::rational::q;

fn alg(f: Family, n: usize) -> LieAlgebra {
    LieAlgebra::new(AlgebraType::new(f, n).unwrap()).unwrap()
}

fn small_types() -> Vec<(Family, usize)> {
    let mut v = Vec::new();
    for n in 1..=3 {
        v.push((Family::A, n));
        v.push((Family::B, n));
        v.push((Family::C, n));
    }
    v.push((Family::D, 2));
    v.push((Family::D, 3));
    v.push((Family::D, 4));
    v
}

fn root_index(a: &LieAlgebra, c: &[i64]) -> usize {
    a.roots.index_of(&Root::new(c.to_vec())).unwrap()
}

#[test]
fn dimensions_and_root_counts() {
    for (f, n) in small_types() {
        let a = alg(f, n);
        let ty = a.algebra_type();
        let expected_p = match f {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        };
        assert_eq!(a.roots.num_positive(), expected_p, "{ty}");
        let m = n + 1;
        let expected_dim = match f {
            Family::A => m * m - 1,
            Family::B | Family::C => 2 * n * n + n,
            Family::D => 2 * n * n - n,
        };
        assert_eq!(a.dim(), expected_dim, "{ty}");
        assert_eq!(a.basis.len(), expected_dim);
    }
}

#[test]
fn c3_long_root_is_e14() {
    let a = alg(Family::C, 3);
    assert_eq!(a.dim(), 21);
    assert_eq!(a.roots.num_positive(), 9);
    let k = root_index(&a, &[2, 0, 0]);
    let m = &a.basis[a.root_coordinate(k)].matrix;
    let nz: Vec<_> = m.nonzeros().map(|(r, c, v)| (r, c, v.clone())).collect();
    assert_eq!(nz, vec![(0, 3, q(1))]);
}

#[test]
fn d2_positive_roots() {
    let a = alg(Family::D, 2);
    assert_eq!(a.dim(), 6);
    let pos: Vec<Vec<i64>> = a.roots.positive().iter().map(|r| r.coeffs.clone()).collect();
    assert_eq!(pos, vec![vec![1, -1], vec![1, 1]]);
}

#[test]
fn a1_normalization() {
    let a = alg(Family::A, 1);
    assert_eq!(a.dim(), 3);
    // basis: H, E, F
    assert_eq!(a.sc.get(1, 2), &[(0, q(1))]);
    assert_eq!(a.sc.get(0, 1), &[(1, q(2))]);
    assert_eq!(a.sc.get(0, 2), &[(2, q(-2))]);
}

#[test]
fn b3_weights() {
    let a = alg(Family::B, 3);
    let rs = &a.roots;
    assert_eq!(rs.weight(&Root::new(vec![1, -1, 0]), 0), 2);
    assert_eq!(rs.weight(&Root::new(vec![1, -1, 0]), 1), -1);
    let short = Root::new(vec![0, 0, 1]);
    assert_eq!(rs.weight(&short, 2), 2);
    assert_eq!(rs.weight(&short, 1), -1);
    assert_eq!(rs.weight(&Root::new(vec![0, 1, -1]), 2), -2);
    for k in 0..rs.roots().len() {
        for i in 0..3 {
            assert_eq!(rs.weight_of(k, i) + rs.weight_of(rs.negative_index(k), i), 0);
        }
    }
}

#[test]
fn cartan_matrices() {
    assert_eq!(
        alg(Family::B, 3).roots.cartan_matrix(),
        vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
    );
    assert_eq!(
        alg(Family::C, 3).roots.cartan_matrix(),
        vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
    );
    assert_eq!(
        alg(Family::D, 3).roots.cartan_matrix(),
        vec![vec![2, -1, -1], vec![-1, 2, 0], vec![-1, 0, 2]]
    );
}

#[test]
fn realizations_are_consistent() {
    for (f, n) in small_types() {
        let a = alg(f, n);
        assert!(check_weight_eigenvectors(&a), "{}", a.algebra_type());
        assert!(check_invariant_form(&a), "{}", a.algebra_type());
        assert!(a.basis[..n].iter().all(|b| b.matrix.is_diagonal()));
    }
}

#[test]
fn positive_roots_are_nonnegative_simple_combinations() {
    for (f, n) in small_types() {
        let a = alg(f, n);
        let rs = &a.roots;
        for k in 0..rs.num_positive() {
            assert!(rs.height(k) >= 1);
        }
        let heights: Vec<i64> = (0..rs.num_positive()).map(|k| rs.height(k)).collect();
        assert!(heights.windows(2).all(|w| w[0] <= w[1]));
        for s in rs.simple() {
            assert_eq!(rs.height(rs.index_of(s).unwrap()), 1);
        }
    }
}

#[test]
fn antisymmetry_and_jacobi() {
    for (f, n) in small_types() {
        let a = alg(f, n);
        let sc = &a.sc;
        let dim = sc.dim();
        for i in 0..n {
            for j in 0..n {
                assert!(sc.get(i, j).is_empty());
            }
        }
        let ads: Vec<_> = (0..dim).map(|i| sc.ad(i)).collect();
        for i in 0..dim {
            for j in 0..dim {
                let neg: Vec<_> = sc.get(j, i).iter().map(|(k, c)| (*k, -c)).collect();
                assert_eq!(sc.get(i, j), neg.as_slice());
                let mut lhs = crate::matrix::Matrix::zeros(dim, dim);
                for (m, c) in sc.get(i, j) {
                    lhs = lhs.add(&ads[*m].scale(c));
                }
                assert_eq!(lhs, ads[i].commutator(&ads[j]), "{} ({i},{j})", a.algebra_type());
            }
        }
    }
}

#[test]
fn root_vector_brackets_follow_root_sums() {
    for (f, n) in small_types() {
        let a = alg(f, n);
        let rs = &a.roots;
        let r = rs.roots().len();
        for b in 0..r {
            for g in 0..r {
                let s = rs.root(b).add(rs.root(g));
                let m = a.basis[n + b].matrix.commutator(&a.basis[n + g].matrix);
                match rs.index_of(&s) {
                    Some(t) => {
                        let e = &a.basis[n + t].matrix;
                        let (r0, c0, v0) = e.nonzeros().next().unwrap();
                        let ratio = &m[(r0, c0)] / v0;
                        assert!(!m.is_zero());
                        assert_eq!(m, e.scale(&ratio));
                    }
                    None if s.is_zero() => {
                        assert!(!m.is_zero());
                        assert!(m.is_diagonal());
                    }
                    None => assert!(m.is_zero()),
                }
            }
        }
    }
}

#[test]
fn serre_relations() {
    for (f, n) in small_types() {
        let a = alg(f, n);
        let rs = &a.roots;
        let cm = rs.cartan_matrix();
        for sign in [false, true] {
            let simple: Vec<usize> = rs
                .simple()
                .iter()
                .map(|s| {
                    let k = rs.index_of(s).unwrap();
                    if sign {
                        rs.negative_index(k)
                    } else {
                        k
                    }
                })
                .collect();
            for i in 0..n {
                let ad = a.sc.ad(n + simple[i]);
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    let mut v = crate::matrix::Matrix::zeros(a.dim(), 1);
                    v[(n + simple[j], 0)] = q(1);
                    let power = (1 - cm[i][j]) as usize;
                    for _ in 0..power {
                        v = ad.mul(&v);
                    }
                    assert!(v.is_zero(), "{} ({i},{j})", a.algebra_type());
                }
            }
        }
    }
}

#[test]
fn killing_form_properties() {
    let a = alg(Family::A, 1);
    assert_eq!(a.killing_form()[(0, 0)], q(8));
    for (f, n) in small_types() {
        let a = alg(f, n);
        let k = a.killing_form();
        assert!(!k.determinant().is_zero());
        let rs = &a.roots;
        for i in 0..n {
            for b in 0..rs.roots().len() {
                assert!(k[(i, n + b)].is_zero());
            }
        }
        for b in 0..rs.roots().len() {
            for g in 0..rs.roots().len() {
                if g != rs.negative_index(b) {
                    assert!(k[(n + b, n + g)].is_zero());
                } else {
                    assert!(!k[(n + b, n + g)].is_zero());
                }
            }
        }
    }
}

#[test]
fn coordinate_names() {
    let a = alg(Family::B, 2);
    let names = a.coordinate_names(HatStyle::Caret);
    assert_eq!(&names[..2], &["h1", "h2"]);
    assert!(names.contains(&"e12-".to_string()));
    assert!(names.contains(&"e21-".to_string()));
    assert!(names.contains(&"^e12+".to_string()));
    assert!(names.contains(&"^e1".to_string()));
    let s = a.coordinate_names(HatStyle::Suffix);
    assert!(s.contains(&"e12+h".to_string()));
}

#[test]
fn json_has_schema_fields() {
    let a = alg(Family::B, 3);
    let v = serde_json::to_value(RootSystemJson::new(&a)).unwrap();
    assert_eq!(v["type"], "B");
    assert_eq!(v["rank"], 3);
    assert_eq!(v["roots"].as_array().unwrap().len(), 9);
    assert_eq!(v["cartan_matrix"][2][1], -2);
    let e = &v["structure"][0];
    assert!(e["c"].as_str().unwrap().contains('/'));
}

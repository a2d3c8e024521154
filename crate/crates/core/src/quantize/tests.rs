use proptest::prelude::*;

use super::*;
use crate::commutant::build_catalog;
use crate::liealg::AlgebraType;
use crate::polyalg::{Monomial, Polynomial};
use crate::rational::{q, q_frac, Q};

fn alg(s: &str) -> LieAlgebra {
    LieAlgebra::new(AlgebraType::parse(s).unwrap()).unwrap()
}

/// Independent normal-ordering oracle: repeatedly rewrite the rightmost
/// out-of-order adjacent pair of a word, keeping words unsorted until done.
fn oracle_normal_form(alg: &LieAlgebra, w: &[u32], leftmost: bool) -> PbwElement {
    let mut out = PbwElement::zero();
    let mut stack: Vec<(Vec<u32>, Q)> = vec![(w.to_vec(), q(1))];
    while let Some((w, c)) = stack.pop() {
        let pos: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        let i = match (pos.first(), pos.last()) {
            (None, _) => {
                out.add_term(PbwMonomial::from_sorted(w), c);
                continue;
            }
            (Some(&a), Some(&b)) => {
                if leftmost {
                    a
                } else {
                    b
                }
            }
            _ => unreachable!(),
        };
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        stack.push((swapped, c.clone()));
        for (l, k) in alg.sc.get(w[i] as usize, w[i + 1] as usize) {
            let mut v = w[..i].to_vec();
            v.push(*l as u32);
            v.extend_from_slice(&w[i + 2..]);
            stack.push((v, &c * k));
        }
    }
    out
}

/// Literal average over all orderings of the factor word.
fn oracle_symmetrize(alg: &LieAlgebra, m: &Monomial) -> PbwElement {
    let vars: Vec<u32> = m.to_vars().into_iter().map(|x| x as u32).collect();
    let n = vars.len();
    let mut perms = Vec::new();
    permute(&mut vars.clone(), 0, &mut perms);
    let mut out = PbwElement::zero();
    let mut fact = 1i64;
    for k in 2..=n as i64 {
        fact *= k;
    }
    for p in perms {
        out.add_scaled(&oracle_normal_form(alg, &p, false), &q_frac(1, fact));
    }
    out
}

fn permute(v: &mut Vec<u32>, k: usize, out: &mut Vec<Vec<u32>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

#[test]
fn a1_single_rewrite() {
    let a = alg("A1");
    let mut env = Enveloping::new(&a.sc);
    // coordinates: h1 = 0, e = 1, f = 2; [e, f] = h
    assert_eq!(a.sc.get(1, 2), &[(0, q(1))][..]);
    let fe = env.word(&[2, 1]);
    let mut expected = PbwElement::monomial(PbwMonomial::from_sorted(vec![1, 2]), q(1));
    expected.add_term(PbwMonomial::from_sorted(vec![0]), q(-1));
    assert_eq!(fe, expected);
    assert_eq!(env.word(&[1, 2]), PbwElement::monomial(PbwMonomial::from_sorted(vec![1, 2]), q(1)));
}

#[test]
fn cartan_products_unchanged() {
    let a = alg("B2");
    let mut env = Enveloping::new(&a.sc);
    let hh = env.multiply(&PbwElement::generator(0), &PbwElement::generator(1));
    assert_eq!(hh, PbwElement::monomial(PbwMonomial::from_sorted(vec![0, 1]), q(1)));
    assert!(env.commutator(&PbwElement::generator(0), &PbwElement::generator(1)).is_zero());
}

#[test]
fn symmetrize_quadratic() {
    let a = alg("B2");
    let mut env = Enveloping::new(&a.sc);
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let m = Monomial::from_vars(&[i, j]);
            let mut expected = env.word(&[i as u32, j as u32]);
            expected.add_scaled(&env.word(&[j as u32, i as u32]), &q(1));
            assert_eq!(env.symmetrize_monomial(&m), expected.scale(&q_frac(1, 2)));
        }
    }
    assert_eq!(env.symmetrize(&Polynomial::var(0)), PbwElement::generator(0));
}

#[test]
fn filtration_dims() {
    assert_eq!(filtration_dim(&alg("A1").sc, 2), 6u32.into());
    assert_eq!(filtration_dim(&alg("B2").sc, 1), 10u32.into());
    for s in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D2", "D3"] {
        let a = alg(s);
        assert_eq!(filtration_dim(&a.sc, 0), 1u32.into());
        for k in 0..=3 {
            assert_eq!(filtration_dim(&a.sc, k), pbw_monomials(a.dim(), k).len().into(), "{s} {k}");
        }
    }
}

#[test]
fn catalog_commutes_with_cartan_b2_d3() {
    for (s, n) in [("B2", 12), ("D3", 20)] {
        let a = alg(s);
        let cat = build_catalog(&a.roots, None).unwrap();
        let r = verify_quantization(&a, &cat, None).unwrap();
        assert!(r.holds(), "{:?}", r.failures);
        assert_eq!(r.cartan_commuting, n);
        assert_eq!(r.non_cartan, n);
        let total = cat.total();
        assert_eq!(r.pairs_checked, total * (total - 1) / 2);
        assert_eq!(r.profile.iter().map(|p| p.count).sum::<usize>(), r.pairs_checked);
    }
}

#[test]
fn rank_limit() {
    let a = alg("D4");
    let cat = build_catalog(&a.roots, Some(2)).unwrap();
    assert!(matches!(
        verify_quantization(&a, &cat, Some(&[])),
        Err(Error::UnsupportedRank { .. })
    ));
}

#[test]
fn symmetrized_casimir_is_central() {
    for s in ["A1", "B2", "D3"] {
        let a = alg(s);
        let mut env = Enveloping::new(&a.sc);
        let c = env.symmetrize(&a.quadratic_casimir().unwrap());
        for i in 0..a.dim() {
            assert!(env.commutator(&PbwElement::generator(i), &c).is_zero(), "{s} {i}");
        }
    }
}

#[test]
fn a1_eehat_commutes_with_h() {
    let a = alg("A1");
    let mut env = Enveloping::new(&a.sc);
    let l = env.symmetrize(&Polynomial::monomial(Monomial::from_vars(&[1, 2])));
    assert!(env.commutator(&PbwElement::generator(0), &l).is_zero());
}

fn small_word() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..10, 0..5)
}

fn small_element() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..10, 0..4), -3i64..4), 0..4)
}

fn build(env: &mut Enveloping, terms: &[(Vec<u32>, i64)]) -> PbwElement {
    let mut e = PbwElement::zero();
    for (w, c) in terms {
        e.add_scaled(&env.word(w), &q(*c));
    }
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_confluent(w in small_word()) {
        let a = alg("B2");
        let mut env = Enveloping::new(&a.sc);
        let nf = env.word(&w);
        prop_assert_eq!(&nf, &oracle_normal_form(&a, &w, true));
        prop_assert_eq!(&nf, &oracle_normal_form(&a, &w, false));
    }

    #[test]
    fn associative(x in small_element(), y in small_element(), z in small_element()) {
        let a = alg("B2");
        let mut env = Enveloping::new(&a.sc);
        let (x, y, z) = (build(&mut env, &x), build(&mut env, &y), build(&mut env, &z));
        let xy = env.multiply(&x, &y);
        let yz = env.multiply(&y, &z);
        prop_assert_eq!(env.multiply(&xy, &z), env.multiply(&x, &yz));
    }

    #[test]
    fn symmetrize_matches_permutation_average(vars in prop::collection::vec(0usize..10, 0..5)) {
        let a = alg("B2");
        let m = Monomial::from_vars(&vars);
        let mut env = Enveloping::new(&a.sc);
        prop_assert_eq!(env.symmetrize_monomial(&m), oracle_symmetrize(&a, &m));
    }

    #[test]
    fn cartan_adjoint_matches_bracket(terms in prop::collection::vec((prop::collection::vec(0usize..15, 1..4), -3i64..4), 1..4), i in 0usize..3) {
        let a = alg("D3");
        let p: Polynomial = terms.iter().map(|(v, c)| (Monomial::from_vars(v), q(*c))).collect();
        let mut env = Enveloping::new(&a.sc);
        let lp = env.symmetrize(&p);
        let lhs = env.commutator(&PbwElement::generator(i), &lp);
        let rhs = env.symmetrize(&crate::polyalg::poisson_bracket(&Polynomial::var(i), &p, &a.sc).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn leading_symbol_is_product(
        u in prop::collection::vec(0usize..10, 1..4),
        v in prop::collection::vec(0usize..10, 1..4),
    ) {
        let a = alg("B2");
        let (p, r) = (Polynomial::monomial(Monomial::from_vars(&u)), Polynomial::monomial(Monomial::from_vars(&v)));
        let mut env = Enveloping::new(&a.sc);
        let (lp, lr) = (env.symmetrize(&p), env.symmetrize(&r));
        let prod = env.multiply(&lp, &lr);
        prop_assert_eq!(prod.degree(), Some(u.len() + v.len()));
        prop_assert_eq!(prod.leading_symbol(), &p * &r);
    }
}

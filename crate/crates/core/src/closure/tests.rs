use super::*;
use crate::commutant::{build_catalog, GeneratorCatalog};
use crate::error::Error;
use crate::liealg::{AlgebraType, LieAlgebra};
use crate::polyalg::{poisson_bracket, Polynomial};
use crate::rational::q;

fn setup(s: &str) -> (LieAlgebra, GeneratorCatalog) {
    let alg = LieAlgebra::new(AlgebraType::parse(s).unwrap()).unwrap();
    let cat = build_catalog(&alg.roots, None).unwrap();
    (alg, cat)
}

fn gen(cat: &GeneratorCatalog, alg: &LieAlgebra, name: &str) -> Polynomial {
    cat.polynomial(cat.id_by_name(name).unwrap(), alg)
}

#[test]
fn algebra_degrees_small_ranks() {
    for (s, d) in [("D2", 0), ("A2", 2), ("B2", 3), ("C2", 3), ("D3", 3), ("A3", 3)] {
        let (alg, cat) = setup(s);
        let t = close_catalog(&cat, &alg).unwrap();
        assert_eq!(t.degree(), d, "{s}");
        assert_eq!(t.exhaustive_degree(), d, "{s}");
        assert_eq!(t.generator_count(), cat.total());
    }
}

#[test]
fn d2_brackets_all_vanish() {
    let (alg, cat) = setup("D2");
    let t = close_catalog(&cat, &alg).unwrap();
    assert_eq!(t.nonzero_count(), 0);
}

#[test]
fn d3_bracket_rewriting() {
    let (alg, cat) = setup("D3");
    let t = close_catalog(&cat, &alg).unwrap();
    let a = cat.id_by_name("p_{12-,21-}").unwrap();
    let b = cat.id_by_name("p_{12-,23-,31-}").unwrap();
    let expected = &(&(-&(&Polynomial::var(0) * &gen(&cat, &alg, "p_{12-,23-,31-}")))
        + &(&gen(&cat, &alg, "p_{12-,21-}") * &gen(&cat, &alg, "p_{13-,31-}")))
        - &(&gen(&cat, &alg, "p_{12-,21-}") * &gen(&cat, &alg, "p_{23-,32-}"));
    let direct = poisson_bracket(
        &gen(&cat, &alg, "p_{12-,21-}"),
        &gen(&cat, &alg, "p_{12-,23-,31-}"),
        &alg.sc,
    )
    .unwrap();
    assert_eq!(direct, expected);
    assert_eq!(t.bracket(a, b), expected);
    assert_eq!(t.bracket(b, a), -&expected);
    assert_eq!(t.expression(a, b).expand(&cat, &alg), expected);
    assert_eq!(
        t.expression(a, b).render(&cat),
        "-h1*p_{12-,23-,31-} - p_{12-,21-}*p_{23-,32-} + p_{12-,21-}*p_{13-,31-}"
    );
}

#[test]
fn rewrite_cartan_product() {
    let (alg, cat) = setup("D3");
    let p = &(&Polynomial::var(0) * &Polynomial::var(0)) * &Polynomial::var(1);
    let e = rewrite_in_generators(&p, &cat, &alg).unwrap();
    let terms: Vec<_> = e.terms().collect();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0].0, &vec![0, 0, 1]);
    assert_eq!(terms[0].1, &q(1));
    assert_eq!(e.non_cartan_degree(&cat), 0);
    assert_eq!(e.total_degree(), 3);
}

#[test]
fn rewrite_rejects_non_invariant() {
    let (alg, cat) = setup("D3");
    let p = Polynomial::var(alg.root_coordinate(0));
    assert!(matches!(
        rewrite_in_generators(&p, &cat, &alg),
        Err(Error::NotInvariant { .. })
    ));
}

#[test]
fn jacobi_exhaustive_small() {
    for s in ["B2", "C2", "D2", "A2"] {
        let (alg, cat) = setup(s);
        let t = close_catalog(&cat, &alg).unwrap();
        let r = jacobi_spot_check(&t, &cat, &alg, None, 0).unwrap();
        assert!(r.exhaustive);
        let n = cat.total();
        assert_eq!(r.triples.len(), n * (n - 1) * (n - 2) / 6);
    }
}

#[test]
fn jacobi_sampled_d3() {
    let (alg, cat) = setup("D3");
    let t = close_catalog(&cat, &alg).unwrap();
    let r = jacobi_spot_check(&t, &cat, &alg, Some(50), 1).unwrap();
    assert_eq!(r.triples.len(), 50);
    let again = jacobi_spot_check(&t, &cat, &alg, Some(50), 1).unwrap();
    assert_eq!(r.triples, again.triples);
}

#[test]
fn hat_reverses_brackets() {
    for s in ["B2", "C2", "D3"] {
        let (alg, cat) = setup(s);
        let t = close_catalog(&cat, &alg).unwrap();
        assert!(hat_antihomomorphism_failures(&t, &cat, &alg).unwrap().is_empty(), "{s}");
    }
}

#[test]
fn degree_report_shape() {
    let (alg, cat) = setup("D3");
    let t = close_catalog(&cat, &alg).unwrap();
    let r = t.degree_report(&cat);
    assert!(r.contains("{B,B} ~ C"));
    assert!(r.contains("{D,D} ~ AC^2 + B^2C + AB^3"));
}

#[test]
fn json_round_structure() {
    let (alg, cat) = setup("B2");
    let t = close_catalog(&cat, &alg).unwrap();
    let j = serde_json::to_value(t.to_json(&cat)).unwrap();
    assert_eq!(j["degree"], 3);
    assert_eq!(j["entries"].as_object().unwrap().len(), t.nonzero_count());
}

fn check_embedding(sub: &str, sup: &str) {
    let (a, ca) = setup(sub);
    let (b, cb) = setup(sup);
    let inj = standard_injection(&a, &b).unwrap();
    let r = verify_embedding(&a, &ca, &b, &cb, &inj).unwrap();
    assert!(r.holds, "{sub} -> {sup}: {:?}", r.failures);
    assert_eq!(r.images.len(), ca.total());
}

#[test]
fn embedding_chains() {
    check_embedding("A2", "A3");
    check_embedding("A2", "D3");
    check_embedding("D3", "B3");
    check_embedding("A2", "C3");
    check_embedding("A2", "B3");
    check_embedding("B2", "B2");
}

#[test]
fn embedding_rejects_non_additive() {
    let (a, ca) = setup("A2");
    let (b, cb) = setup("A3");
    let mut inj = standard_injection(&a, &b).unwrap();
    // send alpha_1 + alpha_2 somewhere else
    let top = a.roots.num_positive() - 1;
    inj[top] = b.roots.index_of(&crate::liealg::Root::new(vec![1, 0, 0, -1])).unwrap();
    assert!(matches!(
        verify_embedding(&a, &ca, &b, &cb, &inj),
        Err(Error::InjectionNotAdditive(_))
    ));
    assert!(standard_injection(&b, &a).is_err());
}

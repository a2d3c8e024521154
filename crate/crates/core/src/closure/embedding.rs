use std::collections::HashSet;

use num_traits::Zero;
use rayon::prelude::*;

use crate::commutant::{GeneratorCatalog, ZeroWeightMonomial};
use crate::error::{Error, Result};
use crate::liealg::{Family, LieAlgebra, Root};
use crate::matrix::Matrix;
use crate::polyalg::{poisson_bracket, Monomial, Polynomial};
use crate::rational::Q;

/// Outcome of [`verify_embedding`].
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub holds: bool,
    /// `(sub generator, image)` names; Cartan images are rendered as
    /// polynomials.
    pub images: Vec<(String, String)>,
    pub failures: Vec<String>,
}

/// Root injection given by a coordinate map, as sub root index -> sup root
/// index.
pub fn injection_from_fn(
    sub: &LieAlgebra,
    sup: &LieAlgebra,
    f: impl Fn(&Root) -> Root,
) -> Result<Vec<usize>> {
    sub.roots
        .roots()
        .iter()
        .map(|r| {
            let img = f(r);
            sup.roots.index_of(&img).ok_or_else(|| {
                Error::InjectionNotAdditive(format!("{r} maps to {img}, which is not a root"))
            })
        })
        .collect()
}

/// Natural inclusions: `A_r -> A_{r+1}` (pad), `A_{n-1} -> B_n, C_n, D_n`
/// (same coordinates), `D_n -> B_n` and any algebra into itself.
pub fn standard_injection(sub: &LieAlgebra, sup: &LieAlgebra) -> Result<Vec<usize>> {
    let (s, t) = (sub.algebra_type(), sup.algebra_type());
    let len = t.ambient_dim();
    let ok = s == t
        || matches!(
            (s.family(), t.family()),
            (Family::A, Family::A) if t.rank() == s.rank() + 1
        )
        || (s.family() == Family::A
            && matches!(t.family(), Family::B | Family::C | Family::D)
            && t.rank() == s.rank() + 1)
        || (s.family() == Family::D && t.family() == Family::B && s.rank() == t.rank());
    if !ok {
        return Err(Error::Invalid(format!("no standard inclusion {s} -> {t}")));
    }
    injection_from_fn(sub, sup, |r| {
        let mut c = r.coeffs.clone();
        c.resize(len, 0);
        Root::new(c)
    })
}

fn check_additive(sub: &LieAlgebra, sup: &LieAlgebra, inj: &[usize]) -> Result<()> {
    let rs = &sub.roots;
    let n = rs.roots().len();
    if inj.len() != n {
        return Err(Error::InjectionNotAdditive(format!(
            "expected images for {n} roots, got {}",
            inj.len()
        )));
    }
    if inj.iter().any(|&k| k >= sup.roots.roots().len()) {
        return Err(Error::InjectionNotAdditive("image index out of range".into()));
    }
    if inj.iter().collect::<HashSet<_>>().len() != n {
        return Err(Error::InjectionNotAdditive("map is not injective".into()));
    }
    for a in 0..n {
        for b in 0..n {
            let s = rs.root(a).add(rs.root(b));
            let img = sup.roots.root(inj[a]).add(sup.roots.root(inj[b]));
            let ok = if s.is_zero() {
                img.is_zero()
            } else {
                match rs.index_of(&s) {
                    Some(c) => &img == sup.roots.root(inj[c]),
                    None => true,
                }
            };
            if !ok {
                return Err(Error::InjectionNotAdditive(format!(
                    "{} + {} is not preserved",
                    rs.root(a),
                    rs.root(b)
                )));
            }
        }
    }
    Ok(())
}

/// Lie algebra map on coordinates: each sub basis element goes to a linear
/// polynomial in the sup coordinates. Root vectors map to multiples of the
/// injected root vectors, normalized to 1 on simple roots and propagated up
/// through brackets; Cartan elements are fixed by `[E_a, E_-a]`.
fn coordinate_map(sub: &LieAlgebra, sup: &LieAlgebra, inj: &[usize]) -> Result<Vec<Polynomial>> {
    let rs = &sub.roots;
    let n = sub.rank();
    let p = rs.num_positive();
    let mut coef: Vec<Option<Q>> = vec![None; 2 * p];
    let simple: Vec<usize> = rs.simple().iter().map(|s| rs.index_of(s).unwrap()).collect();
    for &s in &simple {
        coef[s] = Some(Q::from_integer(1.into()));
        coef[rs.negative_index(s)] = Some(Q::from_integer(1.into()));
    }
    let fail = |what: String| Error::InjectionNotAdditive(what);
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by_key(|&k| rs.height(k));
    for &k in &order {
        if coef[k].is_some() {
            continue;
        }
        for sign in [false, true] {
            let beta = if sign { rs.negative_index(k) } else { k };
            let (a, g) = simple
                .iter()
                .map(|&s| if sign { rs.negative_index(s) } else { s })
                .find_map(|a| {
                    let rest = rs.root(beta).add(&rs.root(a).neg());
                    rs.index_of(&rest).map(|g| (a, g))
                })
                .ok_or_else(|| fail(format!("no simple decomposition of {}", rs.root(beta))))?;
            let nsub = sub
                .sc
                .coefficient(sub.root_coordinate(a), sub.root_coordinate(g), sub.root_coordinate(beta));
            let nsup = sup.sc.coefficient(
                sup.root_coordinate(inj[a]),
                sup.root_coordinate(inj[g]),
                sup.root_coordinate(inj[beta]),
            );
            if nsub.is_zero() || nsup.is_zero() {
                return Err(fail(format!("bracket to {} vanishes", rs.root(beta))));
            }
            let c = coef[a].clone().unwrap() * coef[g].clone().unwrap() * nsup / nsub;
            coef[beta] = Some(c);
        }
    }
    // Cartan: psi(sum_k a_ik H_k) = c_a c_-a [E'_a, E'_-a] for simple a
    let m = sup.rank();
    let mut a_mat = Matrix::zeros(n, n);
    let mut b_rows: Vec<Vec<Q>> = Vec::new();
    for (i, &s) in simple.iter().enumerate() {
        let ns = rs.negative_index(s);
        for (k, c) in sub.sc.get(sub.root_coordinate(s), sub.root_coordinate(ns)) {
            if *k < n {
                a_mat[(i, *k)] = c.clone();
            }
        }
        let scale = coef[s].clone().unwrap() * coef[ns].clone().unwrap();
        let mut row = vec![Q::zero(); m];
        for (k, c) in sup.sc.get(sup.root_coordinate(inj[s]), sup.root_coordinate(inj[ns])) {
            if *k >= m {
                return Err(fail("image of a Cartan element leaves the Cartan subalgebra".into()));
            }
            row[*k] = c * &scale;
        }
        b_rows.push(row);
    }
    let a_inv = a_mat
        .inverse()
        .ok_or_else(|| fail("simple coroots are dependent".into()))?;
    let mut images = Vec::with_capacity(sub.dim());
    for k in 0..n {
        let mut poly = Polynomial::zero();
        for (i, row) in b_rows.iter().enumerate() {
            let w = &a_inv[(k, i)];
            for (mm, v) in row.iter().enumerate() {
                poly.add_term(Monomial::var(mm), w * v);
            }
        }
        images.push(poly);
    }
    for (r, c) in coef.into_iter().enumerate() {
        images.push(Polynomial::term(
            Monomial::var(sup.root_coordinate(inj[r])),
            c.unwrap(),
        ));
    }
    Ok(images)
}

/// Checks that the root injection induces a Poisson map carrying every sub
/// generator onto a sup generator (up to a scalar) and commuting with all
/// generator brackets.
pub fn verify_embedding(
    sub: &LieAlgebra,
    sub_cat: &GeneratorCatalog,
    sup: &LieAlgebra,
    sup_cat: &GeneratorCatalog,
    root_injection: &[usize],
) -> Result<EmbeddingReport> {
    check_additive(sub, sup, root_injection)?;
    let mut failures = Vec::new();
    let images = match coordinate_map(sub, sup, root_injection) {
        Ok(i) => i,
        Err(e) => {
            return Ok(EmbeddingReport {
                holds: false,
                images: Vec::new(),
                failures: vec![e.to_string()],
            })
        }
    };
    // Lie homomorphism on coordinates
    for a in 0..sub.dim() {
        for b in a + 1..sub.dim() {
            let lhs = poisson_bracket(&Polynomial::var(a), &Polynomial::var(b), &sub.sc)?
                .substitute(&images);
            let rhs = poisson_bracket(&images[a], &images[b], &sup.sc)?;
            if lhs != rhs {
                failures.push(format!("coordinate bracket ({a},{b}) not preserved"));
            }
        }
    }
    let sup_names = sup.coordinate_names(Default::default());
    let gens: Vec<Polynomial> = sub_cat
        .generators()
        .map(|id| sub_cat.polynomial(id, sub).substitute(&images))
        .collect();
    let mut image_names = Vec::new();
    for id in sub_cat.generators() {
        let img = &gens[id];
        let name = match sub_cat.monomial(id) {
            None => {
                if img.vars().iter().any(|&v| v >= sup.rank()) {
                    failures.push(format!("{} leaves the Cartan span", sub_cat.name(id)));
                }
                img.render(&sup_names)
            }
            Some(_) => {
                let target = img.terms().next().and_then(|(m, _)| {
                    if img.len() != 1 {
                        return None;
                    }
                    let roots: Option<Vec<usize>> = m
                        .to_vars()
                        .into_iter()
                        .map(|x| sup.coordinate_root(x))
                        .collect();
                    sup_cat.id_of(&ZeroWeightMonomial::new(roots?))
                });
                match target {
                    Some(t) => sup_cat.name(t),
                    None => {
                        failures.push(format!("image of {} is not a generator", sub_cat.name(id)));
                        img.render(&sup_names)
                    }
                }
            }
        };
        image_names.push((sub_cat.name(id), name));
    }
    let total = sub_cat.total();
    let pairs: Vec<(usize, usize)> = (0..total)
        .flat_map(|i| (i + 1..total).map(move |j| (i, j)))
        .collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let lhs = poisson_bracket(&sub_cat.polynomial(i, sub), &sub_cat.polynomial(j, sub), &sub.sc)
                .ok()?
                .substitute(&images);
            let rhs = poisson_bracket(&gens[i], &gens[j], &sup.sc).ok()?;
            (lhs != rhs).then(|| format!("bracket {{{}, {}}} not preserved", sub_cat.name(i), sub_cat.name(j)))
        })
        .collect();
    failures.extend(bad);
    Ok(EmbeddingReport {
        holds: failures.is_empty(),
        images: image_names,
        failures,
    })
}

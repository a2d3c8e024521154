//! Commutative polynomials over the coordinates of `g*` and the Lie-Poisson
//! bracket `{x_j, x_k} = C_{jk}^l x_l`.

mod monomial;
mod polynomial;

pub use monomial::Monomial;
pub use polynomial::{render_monomial, Polynomial, TermJson};

use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, StructureConstants};
use crate::rational::Q;

fn check_range(p: &Polynomial, dim: usize) -> Result<()> {
    match p.max_var() {
        Some(v) if v >= dim => Err(Error::CoordinateOutOfRange { index: v, dim }),
        _ => Ok(()),
    }
}

/// `{p, q} = sum C_{jk}^l x_l (dp/dx_j)(dq/dx_k)`.
pub fn poisson_bracket(p: &Polynomial, q: &Polynomial, sc: &StructureConstants) -> Result<Polynomial> {
    check_range(p, sc.dim())?;
    check_range(q, sc.dim())?;
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        for (n, d) in q.terms() {
            add_monomial_bracket(&mut out, m, n, &(c * d), sc);
        }
    }
    Ok(out)
}

/// Bracket of two monomials, no range check.
pub fn monomial_bracket(m: &Monomial, n: &Monomial, sc: &StructureConstants) -> Polynomial {
    let mut out = Polynomial::zero();
    add_monomial_bracket(&mut out, m, n, &Q::from_integer(1.into()), sc);
    out
}

fn add_monomial_bracket(out: &mut Polynomial, m: &Monomial, n: &Monomial, scale: &Q, sc: &StructureConstants) {
    for (a, ea) in m.iter() {
        let ma = m.div_var(a).unwrap();
        for (b, eb) in n.iter() {
            let entries = sc.get(a, b);
            if entries.is_empty() {
                continue;
            }
            let rest = ma.mul(&n.div_var(b).unwrap());
            let f = scale * Q::from_integer((ea * eb).into());
            for (l, c) in entries {
                out.add_term(rest.mul(&Monomial::var(*l)), &f * c);
            }
        }
    }
}

/// `{h_i, p}`, computed from the weights: every monomial is scaled by its
/// total `H_i`-weight.
pub fn derivation_action(alg: &LieAlgebra, i: usize, p: &Polynomial) -> Polynomial {
    p.terms()
        .map(|(m, c)| {
            let w: i64 = m
                .iter()
                .map(|(x, e)| alg.coordinate_weight(x, i) * i64::from(e))
                .sum();
            (m.clone(), c * Q::from_integer(w.into()))
        })
        .collect()
}

/// Total weight vector `(w_1, .., w_n)` of a monomial.
pub fn monomial_weight(alg: &LieAlgebra, m: &Monomial) -> Vec<i64> {
    (0..alg.rank())
        .map(|i| {
            m.iter()
                .map(|(x, e)| alg.coordinate_weight(x, i) * i64::from(e))
                .sum()
        })
        .collect()
}

/// True iff `{h_i, p} = 0` for every Cartan index.
pub fn is_cartan_invariant(alg: &LieAlgebra, p: &Polynomial) -> bool {
    p.terms()
        .all(|(m, _)| monomial_weight(alg, m).iter().all(|w| *w == 0))
}

/// `{prod p_i, prod q_j}` by the product rule over factor pairs.
pub fn leibniz_expand(
    factors_p: &[Polynomial],
    factors_q: &[Polynomial],
    sc: &StructureConstants,
) -> Result<Polynomial> {
    if factors_p.is_empty() || factors_q.is_empty() {
        return Err(Error::Invalid("leibniz_expand needs nonempty factor lists".into()));
    }
    let others = |fs: &[Polynomial], skip: usize| {
        fs.iter()
            .enumerate()
            .filter(|(k, _)| *k != skip)
            .fold(Polynomial::one(), |acc, (_, f)| &acc * f)
    };
    let mut out = Polynomial::zero();
    for (a, pa) in factors_p.iter().enumerate() {
        let rest_p = others(factors_p, a);
        for (b, qb) in factors_q.iter().enumerate() {
            let br = poisson_bracket(pa, qb, sc)?;
            if br.is_zero() {
                continue;
            }
            let rest_q = others(factors_q, b);
            out = &out + &(&(&br * &rest_p) * &rest_q);
        }
    }
    Ok(out)
}

/// `{{p,q},r} + {{q,r},p} + {{r,p},q}`.
pub fn jacobiator(
    p: &Polynomial,
    q: &Polynomial,
    r: &Polynomial,
    sc: &StructureConstants,
) -> Result<Polynomial> {
    let a = poisson_bracket(&poisson_bracket(p, q, sc)?, r, sc)?;
    let b = poisson_bracket(&poisson_bracket(q, r, sc)?, p, sc)?;
    let c = poisson_bracket(&poisson_bracket(r, p, sc)?, q, sc)?;
    Ok(&(&a + &b) + &c)
}

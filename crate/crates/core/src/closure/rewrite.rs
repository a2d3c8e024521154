use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::commutant::{GeneratorCatalog, GeneratorId, ZeroWeightMonomial};
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::polyalg::{monomial_weight, Monomial, Polynomial};
use crate::rational::{format_q, Q};

/// A polynomial in the generators: sorted generator-id multisets with
/// rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorExpression {
    terms: BTreeMap<Vec<GeneratorId>, Q>,
}

impl GeneratorExpression {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(id: GeneratorId) -> Self {
        let mut e = Self::zero();
        e.add_term(vec![id], Q::one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mut ids: Vec<GeneratorId>, c: Q) {
        if c.is_zero() {
            return;
        }
        ids.sort_unstable();
        match self.terms.entry(ids) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<GeneratorId>, &Q)> {
        self.terms.iter()
    }

    pub fn neg(&self) -> Self {
        GeneratorExpression {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    /// Expands back into a coordinate polynomial.
    pub fn expand(&self, cat: &GeneratorCatalog, alg: &LieAlgebra) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ids, c) in &self.terms {
            let mut m = Monomial::one();
            for &id in ids {
                m = m.mul(&generator_monomial(cat, alg, id));
            }
            out.add_term(m, c.clone());
        }
        out
    }

    /// Largest number of non-Cartan factors in a term.
    pub fn non_cartan_degree(&self, cat: &GeneratorCatalog) -> usize {
        self.terms
            .keys()
            .map(|ids| ids.iter().filter(|&&id| !cat.is_cartan(id)).count())
            .max()
            .unwrap_or(0)
    }

    /// Largest number of factors in a term, Cartan factors included.
    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// `-2*h1*p_{12-,21-} + p_{..}`, highest terms first.
    pub fn render(&self, cat: &GeneratorCatalog) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Vec<GeneratorId>, &Q)> = self.terms.iter().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        let mut s = String::new();
        for (k, (ids, c)) in terms.into_iter().enumerate() {
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                s.push_str(&crate::rational::format_q_short(&a));
                s.push('*');
            }
            s.push_str(&render_product(cat, ids));
        }
        s
    }

    pub fn to_json(&self, cat: &GeneratorCatalog) -> Vec<ExpressionTermJson> {
        self.terms
            .iter()
            .map(|(ids, c)| ExpressionTermJson {
                gens: ids.iter().map(|&id| cat.name(id)).collect(),
                c: format_q(c),
            })
            .collect()
    }
}

fn render_product(cat: &GeneratorCatalog, ids: &[GeneratorId]) -> String {
    let mut parts = Vec::new();
    let mut k = 0;
    while k < ids.len() {
        let mut e = 1;
        while k + e < ids.len() && ids[k + e] == ids[k] {
            e += 1;
        }
        let name = cat.name(ids[k]);
        parts.push(if e == 1 { name } else { format!("{name}^{e}") });
        k += e;
    }
    parts.join("*")
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpressionTermJson {
    pub gens: Vec<String>,
    pub c: String,
}

pub(crate) fn generator_monomial(cat: &GeneratorCatalog, alg: &LieAlgebra, id: GeneratorId) -> Monomial {
    match cat.monomial(id) {
        None => Monomial::var(id),
        Some(m) => m.to_monomial(alg),
    }
}

/// Splits a zero-weight coordinate monomial into Cartan coordinates and the
/// multiset of roots.
fn split(alg: &LieAlgebra, m: &Monomial) -> (Vec<GeneratorId>, ZeroWeightMonomial) {
    let mut cartan = Vec::new();
    let mut roots = Vec::new();
    for (x, e) in m.iter() {
        let target = match alg.coordinate_root(x) {
            None => &mut cartan,
            Some(k) => {
                roots.extend(std::iter::repeat_n(k, e as usize));
                continue;
            }
        };
        target.extend(std::iter::repeat_n(x, e as usize));
    }
    (cartan, ZeroWeightMonomial::new(roots))
}

/// Greedy factorization of a zero-sum root multiset: repeatedly remove the
/// first catalog member (lowest degree, then lexicographic) it contains.
pub(crate) fn factor_roots(cat: &GeneratorCatalog, m: &ZeroWeightMonomial) -> Option<Vec<GeneratorId>> {
    let mut rest = m.clone();
    let mut out = Vec::new();
    while rest.degree() > 0 {
        let (k, f) = cat
            .monomials()
            .iter()
            .enumerate()
            .find(|(_, f)| f.degree() <= rest.degree() && rest.contains(f))?;
        rest = rest.remove(f).unwrap();
        out.push(k + cat.rank());
    }
    Some(out)
}

/// Canonical rewriting of a Cartan-invariant polynomial in the generators.
pub fn rewrite_in_generators(
    p: &Polynomial,
    cat: &GeneratorCatalog,
    alg: &LieAlgebra,
) -> Result<GeneratorExpression> {
    let mut out = GeneratorExpression::zero();
    for (m, c) in p.terms() {
        if let Some(i) = monomial_weight(alg, m).iter().position(|&w| w != 0) {
            return Err(Error::NotInvariant { cartan: i + 1 });
        }
        let (mut ids, roots) = split(alg, m);
        let factors = factor_roots(cat, &roots).ok_or_else(|| Error::Unfactorable {
            monomial: crate::polyalg::render_monomial(m, &alg.coordinate_names(Default::default())),
            reason: "no catalog generator divides the remaining root multiset".into(),
        })?;
        ids.extend(factors);
        out.add_term(ids, c.clone());
    }
    let back = out.expand(cat, alg);
    if &back != p {
        return Err(Error::Unfactorable {
            monomial: (&back - p).render(&alg.coordinate_names(Default::default())),
            reason: "expansion does not reproduce the input".into(),
        });
    }
    Ok(out)
}

/// Largest number of catalog factors over all factorizations of a root
/// multiset, by exhaustive search with memoization.
pub fn max_factor_count(
    cat: &GeneratorCatalog,
    m: &ZeroWeightMonomial,
    memo: &mut HashMap<ZeroWeightMonomial, Option<usize>>,
) -> Option<usize> {
    if m.degree() == 0 {
        return Some(0);
    }
    if let Some(v) = memo.get(m) {
        return *v;
    }
    let first = m.roots()[0];
    let mut best: Option<usize> = None;
    for f in cat.monomials() {
        // every factorization has exactly one factor holding the first root
        if !f.roots().contains(&first) {
            continue;
        }
        if f.degree() > m.degree() || !m.contains(f) {
            continue;
        }
        let rest = m.remove(f).unwrap();
        if let Some(r) = max_factor_count(cat, &rest, memo) {
            best = Some(best.map_or(r + 1, |b: usize| b.max(r + 1)));
        }
    }
    memo.insert(m.clone(), best);
    best
}

/// Exhaustive maximum of non-Cartan factors over the terms of `p`.
pub fn exhaustive_degree(
    p: &Polynomial,
    cat: &GeneratorCatalog,
    alg: &LieAlgebra,
    memo: &mut HashMap<ZeroWeightMonomial, Option<usize>>,
) -> Option<usize> {
    let mut best = 0;
    for (m, _) in p.terms() {
        let (_, roots) = split(alg, m);
        best = best.max(max_factor_count(cat, &roots, memo)?);
    }
    Some(best)
}

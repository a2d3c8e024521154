use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::liealg::StructureConstants;
use crate::polyalg::{Monomial, Polynomial};
use crate::rational::{format_q, Q};

/// Ordered basis word `X_{i1} X_{i2} ... X_{in}` with `i1 <= ... <= in`.
/// Basis indices follow the coordinate order: Cartan, positive roots,
/// negative roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial(Vec::new())
    }

    /// Sorts the word; use only when the letters commute (e.g. building
    /// from a commutative monomial).
    pub fn from_sorted(mut word: Vec<u32>) -> Self {
        word.sort_unstable();
        PbwMonomial(word)
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Exponent vector over a basis of size `dim`.
    pub fn exponents(&self, dim: usize) -> Vec<u32> {
        let mut e = vec![0; dim];
        for &x in &self.0 {
            e[x as usize] += 1;
        }
        e
    }

    /// The commutative monomial with the same exponents.
    pub fn symbol(&self) -> Monomial {
        let v: Vec<usize> = self.0.iter().map(|&x| x as usize).collect();
        Monomial::from_vars(&v)
    }
}

/// Normal-ordered element of the enveloping algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PbwElement {
    terms: BTreeMap<PbwMonomial, Q>,
}

impl PbwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PbwMonomial::one(), Q::one())
    }

    /// Basis element `X_i`.
    pub fn generator(i: usize) -> Self {
        Self::monomial(PbwMonomial(vec![i as u32]), Q::one())
    }

    pub fn monomial(m: PbwMonomial, c: Q) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &PbwMonomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &PbwElement, c: &Q) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut e = Self::zero();
        e.add_scaled(self, c);
        e
    }

    /// Filtration degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Degree-`k` part read as a commutative polynomial (the grading map).
    pub fn graded_part(&self, k: usize) -> Polynomial {
        self.terms
            .iter()
            .filter(|(m, _)| m.degree() == k)
            .map(|(m, c)| (m.symbol(), c.clone()))
            .collect()
    }

    /// Top-degree symbol.
    pub fn leading_symbol(&self) -> Polynomial {
        match self.degree() {
            Some(k) => self.graded_part(k),
            None => Polynomial::zero(),
        }
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let word = render_word(m, names);
            if m.degree() == 0 {
                out.push_str(&crate::rational::format_q_short(&a));
            } else if a.is_one() {
                out.push_str(&word);
            } else {
                out.push_str(&format!("{}*{}", crate::rational::format_q_short(&a), word));
            }
        }
        out
    }

    pub fn to_json(&self, names: &[String]) -> Vec<PbwTermJson> {
        self.terms
            .iter()
            .map(|(m, c)| PbwTermJson {
                word: m.0.iter().map(|&x| names[x as usize].clone()).collect(),
                c: format_q(c),
            })
            .collect()
    }
}

fn render_word(m: &PbwMonomial, names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    let w = &m.0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        let n = &names[w[i] as usize];
        parts.push(if j - i == 1 { n.clone() } else { format!("{n}^{}", j - i) });
        i = j;
    }
    parts.join(" ")
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.0.iter().map(|x| format!("X{x}")).collect();
        write!(f, "{}", w.join(" "))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PbwTermJson {
    pub word: Vec<String>,
    pub c: String,
}

/// Normal-ordering engine for one algebra. Holds memo tables for right
/// multiplication by a basis element and for symmetrized monomials; use one
/// instance per thread.
pub struct Enveloping<'a> {
    sc: &'a StructureConstants,
    right: HashMap<(PbwMonomial, u32), PbwElement>,
    sym: HashMap<Monomial, PbwElement>,
}

impl<'a> Enveloping<'a> {
    pub fn new(sc: &'a StructureConstants) -> Self {
        Enveloping {
            sc,
            right: HashMap::new(),
            sym: HashMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    /// `m * X_k` in normal form. Out of order, `m' X_j X_k` becomes
    /// `(m' X_k) X_j + sum_l c^l_{jk} m' X_l`.
    fn times_generator(&mut self, m: &PbwMonomial, k: u32) -> PbwElement {
        match m.0.last() {
            None => return PbwElement::generator(k as usize),
            Some(&j) if j <= k => {
                let mut w = m.0.clone();
                w.push(k);
                return PbwElement::monomial(PbwMonomial(w), Q::one());
            }
            _ => {}
        }
        if let Some(e) = self.right.get(&(m.clone(), k)) {
            return e.clone();
        }
        let j = *m.0.last().unwrap();
        let prefix = PbwMonomial(m.0[..m.0.len() - 1].to_vec());
        let mut out = PbwElement::zero();
        let first = self.times_generator(&prefix, k);
        for (t, c) in first.terms() {
            let e = self.times_generator(t, j);
            out.add_scaled(&e, c);
        }
        let bracket: Vec<(usize, Q)> = self.sc.get(j as usize, k as usize).to_vec();
        for (l, c) in bracket {
            let e = self.times_generator(&prefix, l as u32);
            out.add_scaled(&e, &c);
        }
        self.right.insert((m.clone(), k), out.clone());
        out
    }

    fn times_word(&mut self, a: &PbwElement, word: &[u32]) -> PbwElement {
        let mut cur = a.clone();
        for &k in word {
            let mut next = PbwElement::zero();
            for (m, c) in cur.terms() {
                let e = self.times_generator(m, k);
                next.add_scaled(&e, c);
            }
            cur = next;
        }
        cur
    }

    /// Normal-ordered product `a b`.
    pub fn multiply(&mut self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in b.terms() {
            let e = self.times_word(a, &m.0);
            out.add_scaled(&e, c);
        }
        out
    }

    /// `a b - b a`.
    pub fn commutator(&mut self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut out = self.multiply(a, b);
        let ba = self.multiply(b, a);
        out.add_scaled(&ba, &-Q::one());
        out
    }

    /// Normal form of an arbitrary word.
    pub fn word(&mut self, w: &[u32]) -> PbwElement {
        self.times_word(&PbwElement::one(), w)
    }

    /// Symmetrization of a commutative monomial: the average over all
    /// orderings of its factors. Uses `Lambda(m) = (1/n) sum_v e_v
    /// Lambda(m / x_v) X_v`, grouping orderings by their last letter.
    pub fn symmetrize_monomial(&mut self, m: &Monomial) -> PbwElement {
        if m.degree() <= 1 {
            let word: Vec<u32> = m.to_vars().into_iter().map(|x| x as u32).collect();
            return PbwElement::monomial(PbwMonomial(word), Q::one());
        }
        if let Some(e) = self.sym.get(m) {
            return e.clone();
        }
        let n = m.degree() as i64;
        let mut out = PbwElement::zero();
        for (v, e) in m.iter().collect::<Vec<_>>() {
            let rest = m.div_var(v).expect("variable divides");
            let inner = self.symmetrize_monomial(&rest);
            let prod = self.times_word(&inner, &[v as u32]);
            out.add_scaled(&prod, &Q::new((e as i64).into(), n.into()));
        }
        self.sym.insert(m.clone(), out.clone());
        out
    }

    pub fn symmetrize(&mut self, p: &Polynomial) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in p.terms() {
            let e = self.symmetrize_monomial(m);
            out.add_scaled(&e, c);
        }
        out
    }
}

/// One-shot normal-ordered product.
pub fn nc_multiply(a: &PbwElement, b: &PbwElement, sc: &StructureConstants) -> PbwElement {
    Enveloping::new(sc).multiply(a, b)
}

/// One-shot commutator `ab - ba`.
pub fn nc_commutator(a: &PbwElement, b: &PbwElement, sc: &StructureConstants) -> PbwElement {
    Enveloping::new(sc).commutator(a, b)
}

/// One-shot symmetrization.
pub fn symmetrize(p: &Polynomial, sc: &StructureConstants) -> PbwElement {
    Enveloping::new(sc).symmetrize(p)
}

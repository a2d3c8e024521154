use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use super::Monomial;
use crate::rational::{format_q, format_q_short, Q};

/// Sparse polynomial with exact rational coefficients; no zero terms stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Polynomial::term(Monomial::var(i), Q::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(m, Q::one())
    }

    pub fn term(m: Monomial, c: Q) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> Polynomial {
        let mut out = Polynomial::zero();
        if c.is_zero() {
            return out;
        }
        for (n, v) in &self.terms {
            out.terms.insert(n.mul(m), v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree, `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.min_degree()
    }

    /// Part of exact degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates that occur, increasing.
    pub fn vars(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().flat_map(|m| m.vars()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().flat_map(|m| m.vars()).max()
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e > 0 {
                out.add_term(m.div_var(var).unwrap(), c * Q::from_integer(e.into()));
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[Q]) -> Q {
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, e) in m.iter() {
                for _ in 0..e {
                    v *= &point[x];
                }
            }
            total += v;
        }
        total
    }

    /// Substitutes a polynomial for every coordinate.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (x, e) in m.iter() {
                t = &t * &images[x].pow(e);
            }
            out = &out + &t;
        }
        out
    }

    /// Renames coordinates through `f` (which must be injective on the support).
    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            out.add_term(m.map_vars(&f), c.clone());
        }
        out
    }

    /// Human-readable form, highest terms first: `2*h1*e12-^2 - 1/2*e1`.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(m, names);
            if m.is_one() {
                s.push_str(&format_q_short(&a));
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format_q_short(&a));
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    /// Term list for JSON output.
    pub fn to_json_terms(&self, names: &[String]) -> Vec<TermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                vars: m.iter().map(|(x, e)| (names[x].clone(), e)).collect(),
                c: format_q(c),
            })
            .collect()
    }
}

pub fn render_monomial(m: &Monomial, names: &[String]) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.iter()
        .map(|(x, e)| {
            if e == 1 {
                names[x].clone()
            } else {
                format!("{}^{e}", names[x])
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub vars: Vec<(String, u32)>,
    pub c: String,
}

impl FromIterator<(Monomial, Q)> for Polynomial {
    fn from_iter<I: IntoIterator<Item = (Monomial, Q)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Q::one())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

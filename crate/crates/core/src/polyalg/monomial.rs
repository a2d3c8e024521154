use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Sparse exponent map: `(coordinate, exponent)` pairs sorted by coordinate,
/// no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        Monomial(vec![(i as u32, 1)])
    }

    /// Product of the listed coordinates (repetitions allowed).
    pub fn from_vars(vars: &[usize]) -> Self {
        let mut v: Vec<u32> = vars.iter().map(|&i| i as u32).collect();
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::new();
        for x in v {
            match out.last_mut() {
                Some((y, e)) if *y == x => *e += 1,
                _ => out.push((x, 1)),
            }
        }
        Monomial(out)
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: Vec<(u32, u32)> = pairs
            .into_iter()
            .filter(|(_, e)| *e > 0)
            .map(|(i, e)| (i as u32, e))
            .collect();
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (x, e) in v {
            match out.last_mut() {
                Some((y, f)) if *y == x => *f += e,
                _ => out.push((x, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0
            .binary_search_by_key(&(var as u32), |(v, _)| *v)
            .map_or(0, |k| self.0[k].1)
    }

    /// `(coordinate, exponent)` pairs in increasing coordinate order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&(v, _)| v as usize)
    }

    /// Coordinates with multiplicity, increasing.
    pub fn to_vars(&self) -> Vec<usize> {
        self.0
            .iter()
            .flat_map(|&(v, e)| std::iter::repeat_n(v as usize, e as usize))
            .collect()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Divides by one power of `var`; `None` if it does not occur.
    pub fn div_var(&self, var: usize) -> Option<Monomial> {
        let k = self.0.binary_search_by_key(&(var as u32), |(v, _)| *v).ok()?;
        let mut out = self.0.clone();
        if out[k].1 == 1 {
            out.remove(k);
        } else {
            out[k].1 -= 1;
        }
        Some(Monomial(out))
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            } else {
                out.push((v, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Renames coordinates through `f`.
    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_exponents(self.iter().map(|(v, e)| (f(v), e)))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the dense exponent
    /// vectors compared coordinate by coordinate.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (a, b) = (&self.0, &other.0);
            let mut i = 0;
            while i < a.len() && i < b.len() {
                if a[i].0 != b[i].0 {
                    // the one with the smaller coordinate has a positive
                    // exponent where the other has zero
                    return b[i].0.cmp(&a[i].0);
                }
                if a[i].1 != b[i].1 {
                    return a[i].1.cmp(&b[i].1);
                }
                i += 1;
            }
            a.len().cmp(&b.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

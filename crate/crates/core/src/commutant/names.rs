//! Generator names in index notation: `p_{12-,21-}`, `p_{13-;23+,^12+}`,
//! `p_{12+;^1,^2}`, `h1`; `[13-]` denotes an equivalence class of chains.

use crate::error::{Error, Result};
use crate::liealg::{Family, Root, RootKind, RootSystem};

/// One factor slot of a parsed name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NameToken {
    Root(usize),
    /// Alternatives, each a chain of permutation roots.
    Class(EquivalenceClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorName {
    Cartan(usize),
    Monomial(Vec<NameToken>),
}

/// `[eps_{ij}^-]`: all chains `e_i - e_l1, e_l1 - e_l2, .., e_lk - e_j` through
/// distinct intermediate indices (1-based endpoints).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EquivalenceClass {
    pub i: usize,
    pub j: usize,
}

impl EquivalenceClass {
    pub fn new(i: usize, j: usize) -> Self {
        EquivalenceClass { i, j }
    }

    /// Members as root-index lists, shortest chain first.
    pub fn expand(&self, rs: &RootSystem) -> Result<Vec<Vec<usize>>> {
        let m = rs.algebra_type().ambient_dim();
        if self.i == self.j || self.i == 0 || self.j == 0 || self.i > m || self.j > m {
            return Err(Error::MalformedName(format!("[{}{}-]", self.i, self.j)));
        }
        let mut out = Vec::new();
        let mut path = vec![self.i];
        chains(self.j, m, &mut path, &mut out);
        let mut members: Vec<Vec<usize>> = out
            .into_iter()
            .map(|p| {
                let mut idx: Vec<usize> = p
                    .windows(2)
                    .map(|w| perm_root_index(rs, w[0], w[1]).expect("perm root"))
                    .collect();
                idx.sort_unstable();
                idx
            })
            .collect();
        members.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(members)
    }
}

fn chains(end: usize, m: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    for next in 1..=m {
        if path.contains(&next) {
            continue;
        }
        path.push(next);
        if next == end {
            out.push(path.clone());
        } else {
            chains(end, m, path, out);
        }
        path.pop();
    }
}

fn perm_root_index(rs: &RootSystem, i: usize, j: usize) -> Option<usize> {
    let len = rs.algebra_type().ambient_dim();
    let mut c = vec![0; len];
    c[i - 1] = 1;
    c[j - 1] = -1;
    rs.index_of(&Root::new(c))
}

/// Sections of a name: permutation, long and short roots.
fn section(kind: RootKind) -> usize {
    match kind {
        RootKind::Perm { .. } => 0,
        RootKind::Long { .. } => 1,
        RootKind::Short { .. } => 2,
    }
}

/// `p_{perm;long;short}` with empty sections omitted.
pub fn monomial_name(rs: &RootSystem, roots: &[usize]) -> String {
    let mut sections: [Vec<String>; 3] = Default::default();
    let mut kinds: Vec<RootKind> = roots.iter().map(|&k| rs.kind(k)).collect();
    // positive roots first, then by indices
    kinds.sort_by_key(|k| match *k {
        RootKind::Perm { i, j } => (i > j, i.min(j), i.max(j)),
        RootKind::Long { i, j, negative } => (negative, i, j),
        RootKind::Short { i, negative } => (negative, i, 0),
    });
    for kind in kinds {
        sections[section(kind)].push(kind.token());
    }
    let parts: Vec<String> = sections
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.join(","))
        .collect();
    format!("p_{{{}}}", parts.join(";"))
}

fn parse_token(tok: &str, rs: &RootSystem, name: &str) -> Result<NameToken> {
    let bad = || Error::MalformedName(name.to_string());
    let tok = tok.trim();
    if let Some(inner) = tok.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(bad)?;
        let digits = inner.strip_suffix('-').ok_or_else(bad)?;
        let (i, j) = two_digits(digits).ok_or_else(bad)?;
        let ec = EquivalenceClass::new(i, j);
        ec.expand(rs).map_err(|_| bad())?;
        return Ok(NameToken::Class(ec));
    }
    let (hat, body) = match tok.strip_prefix('^') {
        Some(b) => (true, b),
        None => (false, tok),
    };
    let len = rs.algebra_type().ambient_dim();
    let mut c = vec![0i64; len];
    let check = |i: usize| if i == 0 || i > len { Err(bad()) } else { Ok(i - 1) };
    if let Some(d) = body.strip_suffix('-') {
        if hat {
            return Err(bad());
        }
        let (i, j) = two_digits(d).ok_or_else(bad)?;
        if i == j {
            return Err(bad());
        }
        c[check(i)?] = 1;
        c[check(j)?] = -1;
    } else if let Some(d) = body.strip_suffix('+') {
        let (i, j) = two_digits(d).ok_or_else(bad)?;
        if i == j {
            return Err(bad());
        }
        let s = if hat { -1 } else { 1 };
        c[check(i)?] = s;
        c[check(j)?] = s;
    } else {
        let i: usize = one_digit(body).ok_or_else(bad)?;
        let s = if hat { -1 } else { 1 };
        c[check(i)?] = match rs.algebra_type().family() {
            Family::B => s,
            Family::C => 2 * s,
            _ => return Err(bad()),
        };
    }
    rs.index_of(&Root::new(c)).map(NameToken::Root).ok_or_else(bad)
}

fn one_digit(s: &str) -> Option<usize> {
    let mut ch = s.chars();
    let d = ch.next()?.to_digit(10)? as usize;
    ch.next().is_none().then_some(d)
}

fn two_digits(s: &str) -> Option<(usize, usize)> {
    let mut ch = s.chars();
    let a = ch.next()?.to_digit(10)? as usize;
    let b = ch.next()?.to_digit(10)? as usize;
    ch.next().is_none().then_some((a, b))
}

/// Parses `h2`, `p_{12-,21-}`, `p_{[13-];23+,^12+}`.
pub fn parse_name(name: &str, rs: &RootSystem) -> Result<GeneratorName> {
    let s = name.trim();
    let bad = || Error::MalformedName(name.to_string());
    if let Some(d) = s.strip_prefix('h') {
        let i: usize = d.parse().map_err(|_| bad())?;
        if i == 0 || i > rs.rank() {
            return Err(bad());
        }
        return Ok(GeneratorName::Cartan(i - 1));
    }
    let body = s
        .strip_prefix("p_{")
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(bad)?;
    let mut tokens = Vec::new();
    for sec in body.split(';') {
        for tok in sec.split(',') {
            if tok.trim().is_empty() {
                return Err(bad());
            }
            tokens.push(parse_token(tok, rs, name)?);
        }
    }
    Ok(GeneratorName::Monomial(tokens))
}

impl GeneratorName {
    /// Every root multiset the name can stand for (one per choice of class
    /// members), sorted; empty for Cartan names.
    pub fn expansions(&self, rs: &RootSystem) -> Result<Vec<Vec<usize>>> {
        let GeneratorName::Monomial(tokens) = self else {
            return Ok(Vec::new());
        };
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for t in tokens {
            let options = match t {
                NameToken::Root(k) => vec![vec![*k]],
                NameToken::Class(ec) => ec.expand(rs)?,
            };
            out = out
                .iter()
                .flat_map(|prefix| {
                    options.iter().map(move |o| {
                        let mut v = prefix.clone();
                        v.extend(o);
                        v
                    })
                })
                .collect();
        }
        for v in &mut out {
            v.sort_unstable();
        }
        Ok(out)
    }
}

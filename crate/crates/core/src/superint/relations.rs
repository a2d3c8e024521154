use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::commutant::{monomial_name, parse_name, GeneratorCatalog, GeneratorName, ZeroWeightMonomial};
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::polyalg::Polynomial;

/// Product identity `a*b*.. = c*d*..` between named generators. Names may
/// contain class tokens such as `[13-]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s
            .split_once('=')
            .ok_or_else(|| Error::MalformedName(s.to_string()))?;
        let side = |t: &str| -> Result<Vec<String>> {
            let v: Vec<String> = t.split('*').map(|x| x.trim().to_string()).collect();
            if v.iter().any(|x| x.is_empty()) {
                return Err(Error::MalformedName(s.to_string()));
            }
            Ok(v)
        };
        Ok(Relation {
            lhs: side(l)?,
            rhs: side(r)?,
        })
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs.join("*"), self.rhs.join("*"))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
    /// Class-free names of a matching assignment, when one exists.
    pub witness: Option<(Vec<String>, Vec<String>)>,
    /// `lhs - rhs` for the first assignment, when none matches.
    pub residue: Option<String>,
    /// Factor names (after class resolution) that are not catalog generators.
    pub non_catalog_factors: Vec<String>,
}

/// Every polynomial a factor name can denote, with its class-free name.
fn alternatives(name: &str, alg: &LieAlgebra) -> Result<Vec<(String, Polynomial)>> {
    let rs = &alg.roots;
    match parse_name(name, rs)? {
        GeneratorName::Cartan(i) => Ok(vec![(format!("h{}", i + 1), Polynomial::var(i))]),
        g => Ok(g
            .expansions(rs)?
            .into_iter()
            .map(|roots| {
                let m = ZeroWeightMonomial::new(roots.clone());
                (monomial_name(rs, &roots), m.to_polynomial(alg))
            })
            .collect()),
    }
}

fn products(names: &[String], alg: &LieAlgebra) -> Result<Vec<(Vec<String>, Polynomial)>> {
    let mut out = vec![(Vec::new(), Polynomial::one())];
    for n in names {
        let alts = alternatives(n, alg)?;
        out = out
            .iter()
            .flat_map(|(ns, p)| {
                alts.iter().map(move |(a, q)| {
                    let mut v = ns.clone();
                    v.push(a.clone());
                    (v, p * q)
                })
            })
            .collect();
    }
    Ok(out)
}

/// Checks each relation as an exact polynomial identity: it holds when some
/// choice of class members on both sides gives identical polynomials.
pub fn verify_dependencies(
    relations: &[Relation],
    cat: &GeneratorCatalog,
    alg: &LieAlgebra,
) -> Result<Vec<RelationCheck>> {
    let rs = &alg.roots;
    relations
        .iter()
        .map(|rel| {
            let left = products(&rel.lhs, alg)?;
            let right = products(&rel.rhs, alg)?;
            let witness = left.iter().find_map(|(ln, lp)| {
                right
                    .iter()
                    .find(|(_, rp)| rp == lp)
                    .map(|(rn, _)| (ln.clone(), rn.clone()))
            });
            let names = alg.coordinate_names(Default::default());
            let residue = witness
                .is_none()
                .then(|| (&left[0].1 - &right[0].1).render(&names));
            let mut outside = BTreeSet::new();
            if let Some((l, r)) = &witness {
                for n in l.iter().chain(r) {
                    if !n.starts_with('h') && crate::commutant::resolve_generator(cat, rs, n).is_err() {
                        outside.insert(n.clone());
                    }
                }
            }
            Ok(RelationCheck {
                relation: rel.to_string(),
                holds: witness.is_some(),
                witness,
                residue,
                non_catalog_factors: outside.into_iter().collect(),
            })
        })
        .collect()
}

const D3_FAMILIES: [&str; 4] = [
    "p_{ij-,ji-}*p_{ik-,ki-}*p_{kj-,jk-} = p_{[ij-],ji-}*p_{[ik-],ki-}",
    "p_{ij-;jk+,^ik+}*p_{jk-;ik+,^ij+} = p_{[ik-];jk+,^ij+}*p_{ik+,^ik+}",
    "p_{ik-,kj-;jk+,^ik+}*p_{ji-,ik-;ik+,^ij+} = p_{ik-;jk+,^ij+}*p_{ik+,^ik+}*p_{[ij-],ji-}",
    "p_{jk-;ik+,^ij+}*p_{kj-;ij+,^ik+} = p_{kj-,jk-}*p_{ij+,^ij+}*p_{ik+,^ik+}",
];

/// The four dependency families of the D3 catalog, instantiated for every
/// permutation `(i, j, k)` of `(1, 2, 3)`; grouped by family.
pub fn d3_relation_families() -> Vec<Vec<Relation>> {
    let perms = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    D3_FAMILIES
        .iter()
        .map(|t| {
            perms
                .iter()
                .map(|p| {
                    let s: String = t
                        .chars()
                        .map(|c| match c {
                            'i' => char::from(b'0' + p[0]),
                            'j' => char::from(b'0' + p[1]),
                            'k' => char::from(b'0' + p[2]),
                            c => c,
                        })
                        .collect();
                    s.parse().expect("family template parses")
                })
                .collect()
        })
        .collect()
}

/// Instances of the second family as written out for the D3 system.
pub fn d3_printed_relations() -> Vec<Relation> {
    [
        "p_{12-;23+,^13+}*p_{23-;13+,^12+} = p_{[13-];23+,^12+}*p_{13+,^13+}",
        "p_{12-;23+,^13+}*p_{31-;12+,^23+} = p_{[32-];12+,^13+}*p_{23+,^23+}",
        "p_{13-;23+,^12+}*p_{21-;13+,^23+} = p_{[23-];13+,^12+}*p_{23+,^23+}",
        "p_{23-;13+,^12+}*p_{31-;12+,^23+} = p_{[21-];13+,^23+}*p_{12+,^12+}",
    ]
    .iter()
    .map(|s| s.parse().expect("relation parses"))
    .collect()
}

/// Twelve functionally independent elements of the D3 catalog.
pub const D3_INDEPENDENT_SET: [&str; 12] = [
    "h1",
    "h2",
    "h3",
    "p_{12-,21-}",
    "p_{13-,31-}",
    "p_{23-,32-}",
    "p_{12-,23-,31-}",
    "p_{12+,^12+}",
    "p_{13+,^13+}",
    "p_{23+,^23+}",
    "p_{12-;23+,^13+}",
    "p_{23-;13+,^12+}",
];

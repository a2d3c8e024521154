//! Layers of indecomposable zero-weight monomials: the generators of the
//! Cartan commutant in the symmetric algebra.

mod enumerate;
mod names;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{AlgebraType, Family, LieAlgebra, RootKind, RootSystem};
use crate::polyalg::{Monomial, Polynomial};

pub use names::{monomial_name, parse_name, EquivalenceClass, GeneratorName, NameToken};

use enumerate::{to_sumvec, Enumerator};

/// A multiset of roots with zero sum, stored as sorted root indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroWeightMonomial {
    roots: Vec<usize>,
}

impl ZeroWeightMonomial {
    /// Sorts the indices; does not check the zero-sum condition.
    pub fn new(mut roots: Vec<usize>) -> Self {
        roots.sort_unstable();
        ZeroWeightMonomial { roots }
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn root_sum(&self, rs: &RootSystem) -> Vec<i64> {
        let mut s = vec![0; rs.algebra_type().ambient_dim()];
        for &k in &self.roots {
            for (a, b) in s.iter_mut().zip(&rs.root(k).coeffs) {
                *a += b;
            }
        }
        s
    }

    pub fn is_zero_weight(&self, rs: &RootSystem) -> bool {
        self.root_sum(rs).iter().all(|&c| c == 0)
    }

    /// Image under `eps_b <-> eps_{-b}`.
    pub fn hat(&self, rs: &RootSystem) -> ZeroWeightMonomial {
        ZeroWeightMonomial::new(self.roots.iter().map(|&k| rs.negative_index(k)).collect())
    }

    pub fn to_monomial(&self, alg: &LieAlgebra) -> Monomial {
        let coords: Vec<usize> = self.roots.iter().map(|&k| alg.root_coordinate(k)).collect();
        Monomial::from_vars(&coords)
    }

    pub fn to_polynomial(&self, alg: &LieAlgebra) -> Polynomial {
        Polynomial::monomial(self.to_monomial(alg))
    }

    pub fn name(&self, rs: &RootSystem) -> String {
        monomial_name(rs, &self.roots)
    }

    /// Sub-multiset test.
    pub fn contains(&self, other: &ZeroWeightMonomial) -> bool {
        let (a, b) = (&self.roots, &other.roots);
        let mut i = 0;
        for x in b {
            while i < a.len() && a[i] < *x {
                i += 1;
            }
            if i == a.len() || a[i] != *x {
                return false;
            }
            i += 1;
        }
        true
    }

    /// `self` minus the sub-multiset `other`.
    pub fn remove(&self, other: &ZeroWeightMonomial) -> Option<ZeroWeightMonomial> {
        let mut rest = self.roots.clone();
        for x in &other.roots {
            let k = rest.iter().position(|y| y == x)?;
            rest.remove(k);
        }
        Some(ZeroWeightMonomial { roots: rest })
    }
}

/// All indecomposable zero-sum multisets of `h` roots, in lexicographic order
/// of their sorted root indices.
pub fn enumerate_layer(rs: &RootSystem, h: usize) -> Vec<ZeroWeightMonomial> {
    if h < 2 {
        return Vec::new();
    }
    Enumerator::new(rs)
        .layer(h)
        .into_iter()
        .map(|roots| ZeroWeightMonomial { roots })
        .collect()
}

/// True iff the root multiset sums to zero and no proper nonempty
/// sub-multiset does.
pub fn is_indecomposable(m: &ZeroWeightMonomial, rs: &RootSystem) -> bool {
    let vecs: Vec<_> = m.roots.iter().map(|&k| to_sumvec(&rs.root(k).coeffs)).collect();
    enumerate::indecomposable(&vecs)
}

/// The generator catalog: Cartan coordinates plus the layers.
#[derive(Clone, Debug)]
pub struct GeneratorCatalog {
    ty: AlgebraType,
    rank: usize,
    entries: Vec<ZeroWeightMonomial>,
    names: Vec<String>,
    index: HashMap<ZeroWeightMonomial, usize>,
    zeta: usize,
    last_degree: usize,
    complete: bool,
}

/// Stable identifier of a generator: `0..rank` are Cartan coordinates, the
/// rest follow the layers in order.
pub type GeneratorId = usize;

impl GeneratorCatalog {
    pub fn algebra_type(&self) -> AlgebraType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Largest degree with a nonempty layer.
    pub fn zeta(&self) -> usize {
        self.zeta
    }

    /// Highest degree that was enumerated.
    pub fn last_degree(&self) -> usize {
        self.last_degree
    }

    /// False when a `max_degree` cut the enumeration short.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Per-degree counts, degrees `2..=last_degree` (zeros included).
    pub fn layer_counts(&self) -> BTreeMap<usize, usize> {
        let mut out: BTreeMap<usize, usize> = (2..=self.last_degree).map(|h| (h, 0)).collect();
        for e in &self.entries {
            *out.entry(e.degree()).or_default() += 1;
        }
        out
    }

    /// Nonzero layer counts in degree order.
    pub fn nonzero_layer_counts(&self) -> Vec<usize> {
        self.layer_counts().into_values().filter(|&c| c > 0).collect()
    }

    pub fn layer(&self, h: usize) -> impl Iterator<Item = &ZeroWeightMonomial> {
        self.entries.iter().filter(move |e| e.degree() == h)
    }

    /// Non-Cartan generators in order.
    pub fn monomials(&self) -> &[ZeroWeightMonomial] {
        &self.entries
    }

    /// Number of generators including the Cartan coordinates.
    pub fn total(&self) -> usize {
        self.rank + self.entries.len()
    }

    pub fn is_cartan(&self, id: GeneratorId) -> bool {
        id < self.rank
    }

    pub fn monomial(&self, id: GeneratorId) -> Option<&ZeroWeightMonomial> {
        id.checked_sub(self.rank).map(|k| &self.entries[k])
    }

    pub fn name(&self, id: GeneratorId) -> String {
        match id.checked_sub(self.rank) {
            None => format!("h{}", id + 1),
            Some(k) => self.names[k].clone(),
        }
    }

    pub fn degree(&self, id: GeneratorId) -> usize {
        self.monomial(id).map_or(1, ZeroWeightMonomial::degree)
    }

    pub fn id_of(&self, m: &ZeroWeightMonomial) -> Option<GeneratorId> {
        self.index.get(m).map(|k| k + self.rank)
    }

    pub fn id_by_name(&self, name: &str) -> Option<GeneratorId> {
        (0..self.total()).find(|&id| self.name(id) == name)
    }

    pub fn polynomial(&self, id: GeneratorId, alg: &LieAlgebra) -> Polynomial {
        match self.monomial(id) {
            None => Polynomial::var(id),
            Some(m) => m.to_polynomial(alg),
        }
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> {
        0..self.total()
    }

    pub fn to_json(&self, rs: &RootSystem) -> CatalogJson {
        let mut layers: BTreeMap<String, Vec<CatalogEntryJson>> = BTreeMap::new();
        for (e, name) in self.entries.iter().zip(&self.names) {
            layers
                .entry(e.degree().to_string())
                .or_default()
                .push(CatalogEntryJson {
                    roots: e.roots.iter().map(|&k| rs.root(k).coeffs.clone()).collect(),
                    name: name.clone(),
                });
        }
        CatalogJson {
            family: self.ty.family().letter().to_string(),
            rank: self.rank,
            cartan: (1..=self.rank).map(|i| format!("h{i}")).collect(),
            counts: self
                .layer_counts()
                .into_iter()
                .map(|(h, c)| (h.to_string(), c))
                .collect(),
            layers,
            zeta: self.zeta,
            total: self.total(),
            complete: self.complete,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntryJson {
    pub roots: Vec<Vec<i64>>,
    pub name: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogJson {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub cartan: Vec<String>,
    pub counts: BTreeMap<String, usize>,
    pub layers: BTreeMap<String, Vec<CatalogEntryJson>>,
    pub zeta: usize,
    pub total: usize,
    pub complete: bool,
}

/// Enumerates layers from degree 2 upward. Stops at the first empty layer
/// above the rank, at `2|Phi+|`, or at `max_degree`.
pub fn build_catalog(rs: &RootSystem, max_degree: Option<usize>) -> Result<GeneratorCatalog> {
    if let Some(d) = max_degree {
        if d < 2 {
            return Err(Error::MaxDegreeTooSmall(d));
        }
    }
    let enumerator = Enumerator::new(rs);
    let cutoff = 2 * rs.num_positive();
    let mut entries = Vec::new();
    let mut zeta = 0;
    let mut h = 2;
    let mut complete = true;
    let mut last_degree = 1;
    loop {
        if h > cutoff {
            break;
        }
        if let Some(d) = max_degree {
            if h > d {
                complete = false;
                break;
            }
        }
        let layer = enumerator.layer(h);
        last_degree = h;
        if layer.is_empty() {
            if h > rs.rank() {
                break;
            }
        } else {
            zeta = h;
            entries.extend(layer.into_iter().map(|roots| ZeroWeightMonomial { roots }));
        }
        h += 1;
    }
    let names: Vec<String> = entries.iter().map(|e| e.name(rs)).collect();
    let index = entries.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect();
    Ok(GeneratorCatalog {
        ty: rs.algebra_type(),
        rank: rs.rank(),
        entries,
        names,
        index,
        zeta,
        last_degree,
        complete,
    })
}

/// Result of enumerating every degree the practical cutoff skipped.
#[derive(Clone, Debug)]
pub struct CutoffReport {
    pub from: usize,
    pub to: usize,
    /// Indecomposable monomials found above the catalog; empty when the
    /// practical cutoff was exact.
    pub extra: Vec<ZeroWeightMonomial>,
}

impl CutoffReport {
    pub fn is_exact(&self) -> bool {
        self.extra.is_empty()
    }
}

/// Enumerates degrees `last_degree + 1 ..= 2|Phi+|` of a catalog.
pub fn verify_cutoff(rs: &RootSystem, cat: &GeneratorCatalog) -> CutoffReport {
    let enumerator = Enumerator::new(rs);
    let from = cat.last_degree() + 1;
    let to = 2 * rs.num_positive();
    let mut extra = Vec::new();
    for h in from..=to {
        extra.extend(
            enumerator
                .layer(h)
                .into_iter()
                .map(|roots| ZeroWeightMonomial { roots }),
        );
    }
    CutoffReport { from, to, extra }
}

/// Observed maximal indecomposable degree.
pub fn max_indecomposable_degree(ty: AlgebraType) -> Result<usize> {
    let rs = RootSystem::new(ty);
    Ok(build_catalog(&rs, None)?.zeta())
}

/// `2n` for B_n and C_n, `2n - 2` for D_n.
pub fn closed_form_zeta(ty: AlgebraType) -> Option<usize> {
    let n = ty.rank();
    match ty.family() {
        Family::B | Family::C => Some(2 * n),
        Family::D => Some(2 * n - 2),
        Family::A => None,
    }
}

/// All chains in `[eps_{ij}^-]`.
pub fn expand_class(ec: &EquivalenceClass, rs: &RootSystem) -> Result<Vec<Vec<usize>>> {
    ec.expand(rs)
}

/// Classification cases by factor profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    /// One kind of factor only.
    A,
    /// Permutation and long.
    B,
    /// Permutation and short.
    C,
    /// Long and short.
    D,
    /// All three.
    E,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Case::A => "a",
            Case::B => "b",
            Case::C => "c",
            Case::D => "d",
            Case::E => "e",
        };
        write!(f, "({c})")
    }
}

pub fn classify(m: &ZeroWeightMonomial, rs: &RootSystem) -> Result<Case> {
    let mut has = [false; 3];
    for &k in m.roots() {
        let s = match rs.kind(k) {
            RootKind::Perm { .. } => 0,
            RootKind::Long { .. } => 1,
            RootKind::Short { .. } => 2,
        };
        has[s] = true;
    }
    let case = match has {
        [true, false, false] | [false, true, false] | [false, false, true] => Case::A,
        [true, true, false] => Case::B,
        [true, false, true] => Case::C,
        [false, true, true] => Case::D,
        [true, true, true] => Case::E,
        [false, false, false] => return Err(Error::Unclassifiable(m.name(rs))),
    };
    let allowed = match rs.algebra_type().family() {
        Family::A => matches!(case, Case::A),
        Family::D => matches!(case, Case::A | Case::B),
        Family::B | Family::C => true,
    };
    if !allowed {
        return Err(Error::Unclassifiable(m.name(rs)));
    }
    Ok(case)
}

/// Resolves a name without class tokens to a catalog generator.
pub fn resolve_generator(cat: &GeneratorCatalog, rs: &RootSystem, name: &str) -> Result<GeneratorId> {
    let not_gen = || Error::NotAGenerator {
        name: name.to_string(),
        algebra: cat.algebra_type().to_string(),
    };
    match parse_name(name, rs)? {
        GeneratorName::Cartan(i) => Ok(i),
        g @ GeneratorName::Monomial(_) => {
            let ex = g.expansions(rs)?;
            if ex.len() != 1 {
                return Err(not_gen());
            }
            cat.id_of(&ZeroWeightMonomial::new(ex[0].clone()))
                .ok_or_else(not_gen)
        }
    }
}

#[cfg(test)]
mod tests;

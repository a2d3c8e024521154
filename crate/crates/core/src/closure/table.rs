use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::rewrite::{
    exhaustive_degree, generator_monomial, rewrite_in_generators, ExpressionTermJson,
    GeneratorExpression,
};
use crate::commutant::{GeneratorCatalog, GeneratorId};
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::polyalg::{monomial_bracket, poisson_bracket, Polynomial};

/// One bracket `{p_i, p_j}`, `i < j`.
#[derive(Clone, Debug)]
pub struct BracketEntry {
    pub left: GeneratorId,
    pub right: GeneratorId,
    pub bracket: Polynomial,
    pub expression: GeneratorExpression,
    /// Non-Cartan factor count of the canonical rewriting.
    pub degree: usize,
    /// Maximal non-Cartan factor count over all factorizations.
    pub exhaustive_degree: usize,
}

/// Brackets of all generator pairs, rewritten in the generators.
#[derive(Clone, Debug)]
pub struct BracketTable {
    total: usize,
    entries: Vec<BracketEntry>,
    index: HashMap<(GeneratorId, GeneratorId), usize>,
}

/// Computes and rewrites every pairwise bracket of the catalog. A bracket
/// whose rewriting does not reproduce it exactly is an error.
pub fn close_catalog(cat: &GeneratorCatalog, alg: &LieAlgebra) -> Result<BracketTable> {
    let total = cat.total();
    let pairs: Vec<(GeneratorId, GeneratorId)> = (0..total)
        .flat_map(|i| (i + 1..total).map(move |j| (i, j)))
        .collect();
    let monos: Vec<_> = (0..total).map(|id| generator_monomial(cat, alg, id)).collect();
    let names = alg.coordinate_names(Default::default());
    let entries: Vec<Result<BracketEntry>> = pairs
        .par_iter()
        .map_init(HashMap::new, |memo, &(i, j)| {
            let bracket = monomial_bracket(&monos[i], &monos[j], &alg.sc);
            if let Some(d) = bracket.degree() {
                let expected = (cat.degree(i) + cat.degree(j) - 1) as u32;
                if !bracket.is_homogeneous() || d != expected {
                    return Err(Error::ClosureResidue {
                        left: cat.name(i),
                        right: cat.name(j),
                        residue: format!("bracket is not homogeneous of degree {expected}"),
                    });
                }
            }
            let expression = rewrite_in_generators(&bracket, cat, alg).map_err(|e| Error::ClosureResidue {
                left: cat.name(i),
                right: cat.name(j),
                residue: e.to_string(),
            })?;
            let residue = &expression.expand(cat, alg) - &bracket;
            if !residue.is_zero() {
                return Err(Error::ClosureResidue {
                    left: cat.name(i),
                    right: cat.name(j),
                    residue: residue.render(&names),
                });
            }
            let exhaustive = exhaustive_degree(&bracket, cat, alg, memo).ok_or_else(|| {
                Error::ClosureResidue {
                    left: cat.name(i),
                    right: cat.name(j),
                    residue: "no factorization found in exhaustive search".into(),
                }
            })?;
            Ok(BracketEntry {
                left: i,
                right: j,
                degree: expression.non_cartan_degree(cat),
                bracket,
                expression,
                exhaustive_degree: exhaustive,
            })
        })
        .collect();
    let entries: Vec<BracketEntry> = entries.into_iter().collect::<Result<_>>()?;
    let index = entries
        .iter()
        .enumerate()
        .map(|(k, e)| ((e.left, e.right), k))
        .collect();
    Ok(BracketTable {
        total,
        entries,
        index,
    })
}

impl BracketTable {
    /// Algebra degree: largest number of non-Cartan generators in a term of
    /// a canonical rewriting; zero iff every bracket vanishes.
    pub fn degree(&self) -> usize {
        self.entries.iter().map(|e| e.degree).max().unwrap_or(0)
    }

    /// Largest factor count with Cartan factors included.
    pub fn total_factor_degree(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.expression.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Largest non-Cartan factor count over all factorizations.
    pub fn exhaustive_degree(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.exhaustive_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn generator_count(&self) -> usize {
        self.total
    }

    pub fn entries(&self) -> &[BracketEntry] {
        &self.entries
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.bracket.is_zero()).count()
    }

    /// `{p_i, p_j}` as a polynomial, for either order of the pair.
    pub fn bracket(&self, i: GeneratorId, j: GeneratorId) -> Polynomial {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Polynomial::zero(),
            std::cmp::Ordering::Less => self.entries[self.index[&(i, j)]].bracket.clone(),
            std::cmp::Ordering::Greater => -&self.entries[self.index[&(j, i)]].bracket,
        }
    }

    pub fn expression(&self, i: GeneratorId, j: GeneratorId) -> GeneratorExpression {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => GeneratorExpression::zero(),
            std::cmp::Ordering::Less => self.entries[self.index[&(i, j)]].expression.clone(),
            std::cmp::Ordering::Greater => self.entries[self.index[&(j, i)]].expression.neg(),
        }
    }

    pub fn to_json(&self, cat: &GeneratorCatalog) -> BracketsJson {
        let mut entries = BTreeMap::new();
        for e in &self.entries {
            if e.expression.is_zero() {
                continue;
            }
            entries.insert(
                format!("{}|{}", cat.name(e.left), cat.name(e.right)),
                e.expression.to_json(cat),
            );
        }
        BracketsJson {
            family: cat.algebra_type().family().letter().to_string(),
            rank: cat.rank(),
            generators: cat.generators().map(|id| cat.name(id)).collect(),
            degree: self.degree(),
            total_factor_degree: self.total_factor_degree(),
            exhaustive_degree: self.exhaustive_degree(),
            entries,
        }
    }

    /// Schematic summary by generator degree: `A` = Cartan, `B` = quadratic,
    /// `C` = cubic, ... and for each class pair the shapes of the terms that
    /// occur, e.g. `{B,B} ~ C + AB + A^3`.
    pub fn degree_report(&self, cat: &GeneratorCatalog) -> String {
        let class = |id: GeneratorId| -> char { (b'A' + (cat.degree(id) - 1) as u8) as char };
        let mut shapes: BTreeMap<(char, char), BTreeSet<Vec<char>>> = BTreeMap::new();
        for e in &self.entries {
            let (mut a, mut b) = (class(e.left), class(e.right));
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            let set = shapes.entry((a, b)).or_default();
            for (ids, _) in e.expression.terms() {
                let mut s: Vec<char> = ids.iter().map(|&id| class(id)).collect();
                s.sort_unstable();
                set.insert(s);
            }
        }
        let mut out = String::new();
        for ((a, b), set) in &shapes {
            if set.is_empty() {
                continue;
            }
            let mut terms: Vec<&Vec<char>> = set.iter().collect();
            terms.sort_by(|x, y| y.iter().max().cmp(&x.iter().max()).then(x.len().cmp(&y.len())).then(x.cmp(y)));
            let rendered: Vec<String> = terms.iter().map(|s| render_shape(s)).collect();
            out.push_str(&format!("{{{a},{b}}} ~ {}\n", rendered.join(" + ")));
        }
        out
    }
}

fn render_shape(s: &[char]) -> String {
    let mut out = String::new();
    let mut k = 0;
    while k < s.len() {
        let mut e = 1;
        while k + e < s.len() && s[k + e] == s[k] {
            e += 1;
        }
        out.push(s[k]);
        if e > 1 {
            out.push_str(&format!("^{e}"));
        }
        k += e;
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct BracketsJson {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub generators: Vec<String>,
    pub degree: usize,
    pub total_factor_degree: usize,
    pub exhaustive_degree: usize,
    /// Keyed `"left|right"`; zero brackets omitted.
    pub entries: BTreeMap<String, Vec<ExpressionTermJson>>,
}

/// Triples checked by [`jacobi_spot_check`].
#[derive(Clone, Debug)]
pub struct JacobiReport {
    pub triples: Vec<(GeneratorId, GeneratorId, GeneratorId)>,
    pub exhaustive: bool,
}

/// Checks `{{p,q},r} + {{q,r},p} + {{r,p},q} = 0` with the inner brackets
/// taken from the table. `samples = None` checks every triple of distinct
/// generators; otherwise `samples` triples are drawn with a seeded RNG.
pub fn jacobi_spot_check(
    tbl: &BracketTable,
    cat: &GeneratorCatalog,
    alg: &LieAlgebra,
    samples: Option<usize>,
    seed: u64,
) -> Result<JacobiReport> {
    let n = tbl.generator_count();
    let triples: Vec<(usize, usize, usize)> = match samples {
        None => (0..n)
            .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
            .collect(),
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..s)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .collect()
        }
    };
    let polys: Vec<Polynomial> = (0..n).map(|id| cat.polynomial(id, alg)).collect();
    triples.par_iter().try_for_each(|&(a, b, c)| {
        let j = &(&poisson_bracket(&tbl.bracket(a, b), &polys[c], &alg.sc)?
            + &poisson_bracket(&tbl.bracket(b, c), &polys[a], &alg.sc)?)
            + &poisson_bracket(&tbl.bracket(c, a), &polys[b], &alg.sc)?;
        if j.is_zero() {
            Ok(())
        } else {
            Err(Error::JacobiViolation(cat.name(a), cat.name(b), cat.name(c)))
        }
    })?;
    Ok(JacobiReport {
        triples,
        exhaustive: samples.is_none(),
    })
}

/// The hat involution `eps_b <-> eps_{-b}` (Cartan coordinates fixed) maps the
/// catalog to itself and reverses brackets: `hat{p,q} = -{hat p, hat q}`.
/// Returns the pairs where this fails (empty when it holds).
pub fn hat_antihomomorphism_failures(
    tbl: &BracketTable,
    cat: &GeneratorCatalog,
    alg: &LieAlgebra,
) -> Result<Vec<(GeneratorId, GeneratorId)>> {
    let hat_id = |id: GeneratorId| -> Result<GeneratorId> {
        match cat.monomial(id) {
            None => Ok(id),
            Some(m) => cat.id_of(&m.hat(&alg.roots)).ok_or_else(|| Error::NotAGenerator {
                name: format!("hat of {}", cat.name(id)),
                algebra: cat.algebra_type().to_string(),
            }),
        }
    };
    let hats: Vec<GeneratorId> = cat.generators().map(hat_id).collect::<Result<_>>()?;
    let failures = tbl
        .entries()
        .par_iter()
        .filter(|e| {
            let lhs = e.bracket.map_vars(|x| alg.hat_coordinate(x));
            let rhs = -&tbl.bracket(hats[e.left], hats[e.right]);
            lhs != rhs
        })
        .map(|e| (e.left, e.right))
        .collect();
    Ok(failures)
}

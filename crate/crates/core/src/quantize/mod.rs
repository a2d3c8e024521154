//! The enveloping algebra side: PBW normal ordering, symmetrization, and the
//! commutant and filtration checks for symmetrized generators.

mod pbw;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::commutant::GeneratorCatalog;
use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, StructureConstants};
use crate::polyalg::poisson_bracket;

pub use pbw::{
    nc_commutator, nc_multiply, symmetrize, Enveloping, PbwElement, PbwMonomial, PbwTermJson,
};

/// Largest rank accepted by [`verify_quantization`].
pub const MAX_QUANTIZE_RANK: usize = 3;

/// `dim U^k(g) = binom(dim g + k - 1, k)`.
pub fn filtration_dim(sc: &StructureConstants, k: usize) -> BigUint {
    let n = sc.dim();
    if n == 0 {
        return BigUint::from(u8::from(k == 0));
    }
    num_integer::binomial(BigUint::from(n + k - 1), BigUint::from(k))
}

/// All ordered monomials of degree exactly `k` over a basis of size `dim`.
pub fn pbw_monomials(dim: usize, k: usize) -> Vec<PbwMonomial> {
    fn rec(dim: u32, k: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<PbwMonomial>) {
        if cur.len() == k {
            out.push(PbwMonomial::from_sorted(cur.clone()));
            return;
        }
        for x in start..dim {
            cur.push(x);
            rec(dim, k, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim as u32, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Degrees seen for `[Lambda p, Lambda q]` and for the correction
/// `[Lambda p, Lambda q] - Lambda{p,q}`, grouped by the generator degrees.
#[derive(Clone, Debug, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct DegreeProfileRow {
    pub left_degree: usize,
    pub right_degree: usize,
    pub commutator_degree: Option<usize>,
    pub correction_degree: Option<usize>,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuantizationReport {
    pub algebra: String,
    pub generators: usize,
    /// Non-Cartan generators whose symmetrization commutes with every `H_i`.
    pub cartan_commuting: usize,
    pub non_cartan: usize,
    pub pairs_checked: usize,
    pub profile: Vec<DegreeProfileRow>,
    pub failures: Vec<String>,
}

impl QuantizationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Symmetrizes the catalog and checks `[H_i, Lambda p] = 0` for every
/// generator and, for each pair, that `[Lambda p, Lambda q] - Lambda{p,q}`
/// has degree at most `deg p + deg q - 2`. `pairs = None` checks all pairs.
pub fn verify_quantization(
    alg: &LieAlgebra,
    cat: &GeneratorCatalog,
    pairs: Option<&[(usize, usize)]>,
) -> Result<QuantizationReport> {
    let ty = alg.algebra_type();
    if ty.rank() > MAX_QUANTIZE_RANK {
        return Err(Error::UnsupportedRank {
            family: ty.family().letter(),
            rank: ty.rank(),
            constraint: "quantization checks are limited to rank <= 3",
        });
    }
    let sc = &alg.sc;
    let total = cat.total();
    let polys: Vec<_> = (0..total).map(|id| cat.polynomial(id, alg)).collect();
    let lambdas: Vec<PbwElement> = polys
        .par_iter()
        .map_init(|| Enveloping::new(sc), |env, p| env.symmetrize(p))
        .collect();
    let mut failures = Vec::new();
    let cartan: Vec<PbwElement> = (0..cat.rank()).map(PbwElement::generator).collect();
    let commuting: Vec<bool> = lambdas
        .par_iter()
        .enumerate()
        .map_init(
            || Enveloping::new(sc),
            |env, (id, l)| {
                id < cat.rank() || cartan.iter().all(|h| env.commutator(h, l).is_zero())
            },
        )
        .collect();
    for (id, ok) in commuting.iter().enumerate() {
        if !ok {
            failures.push(format!("[H, Lambda({})] is nonzero", cat.name(id)));
        }
    }
    let all: Vec<(usize, usize)>;
    let pairs = match pairs {
        Some(p) => p,
        None => {
            all = (0..total)
                .flat_map(|i| (i + 1..total).map(move |j| (i, j)))
                .collect();
            &all
        }
    };
    let rows: Vec<Result<(DegreeProfileRow, Option<String>)>> = pairs
        .par_iter()
        .map_init(
            || Enveloping::new(sc),
            |env, &(i, j)| {
                let comm = env.commutator(&lambdas[i], &lambdas[j]);
                let classical = poisson_bracket(&polys[i], &polys[j], sc)?;
                let mut corr = comm.clone();
                corr.add_scaled(&env.symmetrize(&classical), &-crate::rational::q(1));
                let (a, b) = (cat.degree(i), cat.degree(j));
                let bound = (a + b).saturating_sub(2);
                let bad = corr.degree().is_some_and(|d| d > bound).then(|| {
                    format!(
                        "[Lambda({}), Lambda({})] - Lambda(bracket) has degree above {bound}",
                        cat.name(i),
                        cat.name(j)
                    )
                });
                Ok((
                    DegreeProfileRow {
                        left_degree: a.min(b),
                        right_degree: a.max(b),
                        commutator_degree: comm.degree(),
                        correction_degree: corr.degree(),
                        count: 1,
                    },
                    bad,
                ))
            },
        )
        .collect();
    let mut profile: BTreeMap<(usize, usize, Option<usize>, Option<usize>), usize> = BTreeMap::new();
    for r in rows {
        let (row, bad) = r?;
        *profile
            .entry((row.left_degree, row.right_degree, row.commutator_degree, row.correction_degree))
            .or_default() += 1;
        failures.extend(bad);
    }
    Ok(QuantizationReport {
        algebra: ty.to_string(),
        generators: total,
        cartan_commuting: commuting.iter().skip(cat.rank()).filter(|&&b| b).count(),
        non_cartan: total - cat.rank(),
        pairs_checked: pairs.len(),
        profile: profile
            .into_iter()
            .map(|((l, r, c, k), count)| DegreeProfileRow {
                left_degree: l,
                right_degree: r,
                commutator_degree: c,
                correction_degree: k,
                count,
            })
            .collect(),
        failures,
    })
}

#[cfg(test)]
mod tests;

//! Hamiltonians built from Cartan coordinates, commuting integrals drawn
//! from the generator catalog, and exact functional-independence ranks.

mod rank;
mod relations;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::commutant::{resolve_generator, GeneratorCatalog, GeneratorId};
use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::polyalg::{poisson_bracket, Monomial, Polynomial};
use crate::rational::Q;

pub use rank::{
    functional_rank, independence_bound, random_point, IndependenceBound, IndependenceReport,
    MAX_RANK_ATTEMPTS,
};
pub use relations::{
    d3_printed_relations, d3_relation_families, verify_dependencies, Relation, RelationCheck,
    D3_INDEPENDENT_SET,
};

/// `H = P(h_1, .., h_r) + c * C_2` with `C_2` the quadratic Casimir.
#[derive(Clone, Debug)]
pub struct Hamiltonian {
    cartan_part: Polynomial,
    casimir: Q,
    poly: Polynomial,
}

impl Hamiltonian {
    pub fn new(cartan_part: Polynomial, alg: &LieAlgebra) -> Result<Self> {
        if let Some(v) = cartan_part.vars().into_iter().find(|&v| v >= alg.rank()) {
            return Err(Error::NonCartanHamiltonian(
                alg.coordinate_name(v.min(alg.dim() - 1), Default::default()),
            ));
        }
        Ok(Hamiltonian {
            poly: cartan_part.clone(),
            cartan_part,
            casimir: Q::from_integer(0.into()),
        })
    }

    /// `sum_{i <= j} g_ij h_i h_j` with coefficients drawn from `1..=9`.
    pub fn quadratic_cartan(alg: &LieAlgebra, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p = Polynomial::zero();
        for i in 0..alg.rank() {
            for j in i..alg.rank() {
                let c: i64 = rng.gen_range(1..=9);
                p.add_term(Monomial::from_vars(&[i, j]), Q::from_integer(c.into()));
            }
        }
        Hamiltonian::new(p, alg).expect("Cartan support")
    }

    pub fn with_casimir(mut self, c: Q, alg: &LieAlgebra) -> Result<Self> {
        let cas = alg.quadratic_casimir()?;
        self.poly = &self.cartan_part + &cas.scale(&c);
        self.casimir = c;
        Ok(self)
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn render(&self, alg: &LieAlgebra) -> String {
        let names = alg.coordinate_names(Default::default());
        let base = self.cartan_part.render(&names);
        if num_traits::Zero::is_zero(&self.casimir) {
            base
        } else {
            format!("{base} + {}*C2", crate::rational::format_q_short(&self.casimir))
        }
    }
}

/// Machine-readable superintegrability certificate.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    #[serde(rename = "type")]
    pub ty: String,
    pub seed: u64,
    pub hamiltonian: String,
    pub hamiltonian_terms: Vec<crate::polyalg::TermJson>,
    pub integrals: Vec<String>,
    /// Jacobian rank of the integrals.
    pub rank: usize,
    /// `N = dim g - rank(C_ij^l x_l)`.
    pub bound: usize,
    pub commute: String,
    /// Jacobian rank of `{H} + integrals`.
    pub rank_with_hamiltonian: usize,
    /// Integrals independent of each other and of `H`.
    pub integrals_besides_hamiltonian: usize,
    /// `dim g - dim h - 1`.
    pub superintegrability_bound: usize,
    pub bound_holds: bool,
    pub independent_subset: Vec<String>,
    /// Whether the integrals also commute pairwise.
    pub integrals_commute: bool,
}

/// Verifies `{H, p} = 0` for every integral and the counting bound, and
/// assembles the certificate.
pub fn certify_system(
    h: &Hamiltonian,
    integrals: &[GeneratorId],
    cat: &GeneratorCatalog,
    alg: &LieAlgebra,
    seed: u64,
) -> Result<Certificate> {
    let polys: Vec<Polynomial> = integrals.iter().map(|&id| cat.polynomial(id, alg)).collect();
    let bad = polys
        .par_iter()
        .zip(integrals)
        .find_map_first(|(p, &id)| match poisson_bracket(h.poly(), p, &alg.sc) {
            Ok(b) if b.is_zero() => None,
            _ => Some(cat.name(id)),
        });
    if let Some(name) = bad {
        return Err(Error::NonCommutingIntegral(name));
    }
    let pairwise = (0..polys.len())
        .into_par_iter()
        .flat_map(|i| (i + 1..polys.len()).into_par_iter().map(move |j| (i, j)))
        .all(|(i, j)| poisson_bracket(&polys[i], &polys[j], &alg.sc).is_ok_and(|b| b.is_zero()));
    let rep = functional_rank(&polys, alg, seed)?;
    let mut with_h = vec![h.poly().clone()];
    with_h.extend(polys.iter().cloned());
    let rep_h = functional_rank(&with_h, alg, seed)?;
    let besides = rep_h.jacobian_rank.saturating_sub(1);
    let sbound = alg.dim() - alg.rank() - 1;
    Ok(Certificate {
        ty: alg.algebra_type().to_string(),
        seed,
        hamiltonian: h.render(alg),
        hamiltonian_terms: h.poly().to_json_terms(&alg.coordinate_names(Default::default())),
        integrals: integrals.iter().map(|&id| cat.name(id)).collect(),
        rank: rep.jacobian_rank,
        bound: rep.bound,
        commute: "all-zero".into(),
        rank_with_hamiltonian: rep_h.jacobian_rank,
        integrals_besides_hamiltonian: besides,
        superintegrability_bound: sbound,
        bound_holds: besides <= sbound && rep.jacobian_rank <= rep.bound,
        independent_subset: rep.certified_subset.iter().map(|&k| cat.name(integrals[k])).collect(),
        integrals_commute: pairwise,
    })
}

/// Default integrals: the named independent set for D3, the whole catalog
/// otherwise.
pub fn default_integrals(cat: &GeneratorCatalog, alg: &LieAlgebra) -> Result<Vec<GeneratorId>> {
    if alg.algebra_type().to_string() == "D3" {
        D3_INDEPENDENT_SET
            .iter()
            .map(|n| resolve_generator(cat, &alg.roots, n))
            .collect()
    } else {
        Ok(cat.generators().collect())
    }
}

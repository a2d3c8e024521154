use serde::Serialize;

use super::LieAlgebra;
use crate::rational::format_q;

#[derive(Clone, Debug, Serialize)]
pub struct StructureEntryJson {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: String,
}

/// Serialized root system with structure constants.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystemJson {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub dim: usize,
    pub roots: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<i64>>,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// `weights[k][i]` is the weight of positive root `k` under `H_i`.
    pub weights: Vec<Vec<i64>>,
    pub basis: Vec<String>,
    pub structure: Vec<StructureEntryJson>,
}

impl RootSystemJson {
    pub fn new(alg: &LieAlgebra) -> Self {
        let rs = &alg.roots;
        let ty = alg.algebra_type();
        RootSystemJson {
            family: ty.family().letter().to_string(),
            rank: ty.rank(),
            dim: alg.dim(),
            roots: rs.positive().iter().map(|r| r.coeffs.clone()).collect(),
            simple_roots: rs.simple().iter().map(|r| r.coeffs.clone()).collect(),
            cartan_matrix: rs.cartan_matrix(),
            weights: (0..rs.num_positive())
                .map(|k| (0..rs.rank()).map(|i| rs.weight_of(k, i)).collect())
                .collect(),
            basis: alg.coordinate_names(Default::default()),
            structure: alg
                .sc
                .entries()
                .map(|(i, j, k, c)| StructureEntryJson { i, j, k, c: format_q(c) })
                .collect(),
        }
    }
}

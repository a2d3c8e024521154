//! Published reference counts for small catalogs, embedded at build time.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::commutant::GeneratorCatalog;
use crate::liealg::AlgebraType;

const RAW: &str = include_str!("../data/golden_tables.json");

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct GoldenTable {
    pub cartan: usize,
    /// Degree -> number of indecomposable generators.
    pub layers: BTreeMap<usize, usize>,
    pub total: usize,
    /// Algebra degree of the bracket closure.
    pub degree: usize,
}

impl GoldenTable {
    pub fn layer_list(&self) -> Vec<usize> {
        self.layers.values().copied().collect()
    }
}

pub fn golden_tables() -> BTreeMap<String, GoldenTable> {
    serde_json::from_str(RAW).expect("embedded golden tables are valid")
}

pub fn golden_table(ty: AlgebraType) -> Option<GoldenTable> {
    golden_tables().remove(&ty.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenComparison {
    #[serde(rename = "type")]
    pub ty: String,
    pub matches: bool,
    pub expected: GoldenTable,
    pub computed_layers: BTreeMap<usize, usize>,
    pub computed_total: usize,
    pub diffs: Vec<String>,
}

/// Compares the layer counts and total of a catalog with the reference.
pub fn compare_catalog(cat: &GeneratorCatalog) -> Option<GoldenComparison> {
    let expected = golden_table(cat.algebra_type())?;
    let computed: BTreeMap<usize, usize> = cat
        .layer_counts()
        .into_iter()
        .filter(|&(_, n)| n > 0)
        .collect();
    let mut diffs = Vec::new();
    if expected.cartan != cat.rank() {
        diffs.push(format!("cartan: expected {}, computed {}", expected.cartan, cat.rank()));
    }
    let degrees: BTreeSet<usize> = expected.layers.keys().chain(computed.keys()).copied().collect();
    for d in degrees {
        let (e, c) = (
            expected.layers.get(&d).copied().unwrap_or(0),
            computed.get(&d).copied().unwrap_or(0),
        );
        if e != c {
            diffs.push(format!("degree {d}: expected {e}, computed {c}"));
        }
    }
    if expected.total != cat.total() {
        diffs.push(format!("total: expected {}, computed {}", expected.total, cat.total()));
    }
    Some(GoldenComparison {
        ty: cat.algebra_type().to_string(),
        matches: diffs.is_empty(),
        expected,
        computed_layers: computed,
        computed_total: cat.total(),
        diffs,
    })
}

//! Bracket closure of the generator catalog: rewriting brackets in the
//! generators, the algebra degree, Jacobi and involution checks, and
//! embeddings between catalogs.

mod embedding;
mod rewrite;
mod table;

pub use embedding::{injection_from_fn, standard_injection, verify_embedding, EmbeddingReport};
pub use rewrite::{
    exhaustive_degree, max_factor_count, rewrite_in_generators, ExpressionTermJson,
    GeneratorExpression,
};
pub use table::{
    close_catalog, hat_antihomomorphism_failures, jacobi_spot_check, BracketEntry, BracketTable,
    BracketsJson, JacobiReport,
};

#[cfg(test)]
mod tests;

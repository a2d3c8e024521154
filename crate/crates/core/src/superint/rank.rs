use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::liealg::LieAlgebra;
use crate::matrix::Matrix;
use crate::polyalg::Polynomial;
use crate::rational::Q;

/// Attempts before a rank is declared unstable.
pub const MAX_RANK_ATTEMPTS: usize = 5;

/// Random rational point: numerators in `[-10^4, 10^4]`, denominators in
/// `1..=100`.
pub fn random_point(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Q> {
    (0..dim)
        .map(|_| {
            let n: i64 = rng.gen_range(-10_000..=10_000);
            let d: i64 = rng.gen_range(1..=100);
            Q::new(n.into(), d.into())
        })
        .collect()
}

/// Generic rank of a matrix-valued function: samples points until the
/// largest rank seen has been observed twice. Returns the rank and the first
/// point attaining it.
pub(crate) fn generic_rank(
    dim: usize,
    seed: u64,
    eval: impl Fn(&[Q]) -> Matrix,
) -> Result<(usize, Vec<Q>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<(usize, Vec<Q>)> = None;
    let mut hits = 0;
    for _ in 0..MAX_RANK_ATTEMPTS {
        let x = random_point(&mut rng, dim);
        let r = eval(&x).rank();
        match &best {
            Some((b, _)) if *b == r => hits += 1,
            Some((b, _)) if *b > r => {}
            _ => {
                best = Some((r, x));
                hits = 1;
            }
        }
        if hits >= 2 {
            return Ok(best.unwrap());
        }
    }
    Err(Error::UnstableRank {
        attempts: MAX_RANK_ATTEMPTS,
    })
}

/// `N = dim g - rank(sum_l C_{ij}^l x_l)` over rows `i` in `rows` (the
/// Cartan coordinates by default), at a generic point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceBound {
    pub bound: usize,
    pub matrix_rank: usize,
}

pub fn independence_bound(alg: &LieAlgebra, rows: Option<&[usize]>, seed: u64) -> Result<IndependenceBound> {
    let cartan: Vec<usize> = (0..alg.rank()).collect();
    let rows = rows.unwrap_or(&cartan);
    let dim = alg.dim();
    if let Some(&bad) = rows.iter().find(|&&i| i >= dim) {
        return Err(Error::CoordinateOutOfRange { index: bad, dim });
    }
    let (r, _) = generic_rank(dim, seed, |x| {
        let mut m = Matrix::zeros(rows.len(), dim);
        for (a, &i) in rows.iter().enumerate() {
            for j in 0..dim {
                let mut s = Q::zero();
                for (l, c) in alg.sc.get(i, j) {
                    s += c * &x[*l];
                }
                m[(a, j)] = s;
            }
        }
        m
    })?;
    Ok(IndependenceBound {
        bound: dim - r,
        matrix_rank: r,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub jacobian_rank: usize,
    pub candidate_count: usize,
    /// Indices into the input list of a subset with full Jacobian rank.
    pub certified_subset: Vec<usize>,
    pub bound: usize,
}

fn jacobian(polys: &[Polynomial], grads: &[Vec<Polynomial>], x: &[Q]) -> Matrix {
    let mut m = Matrix::zeros(polys.len(), x.len());
    for (a, g) in grads.iter().enumerate() {
        for (j, d) in g.iter().enumerate() {
            m[(a, j)] = d.evaluate(x);
        }
    }
    m
}

/// Exact Jacobian rank of `polys` at a generic rational point, with a greedy
/// full-rank subset (earlier entries preferred).
pub fn functional_rank(polys: &[Polynomial], alg: &LieAlgebra, seed: u64) -> Result<IndependenceReport> {
    if polys.is_empty() {
        return Err(Error::Invalid("functional rank of an empty set".into()));
    }
    let dim = alg.dim();
    if let Some(v) = polys.iter().filter_map(|p| p.max_var()).find(|&v| v >= dim) {
        return Err(Error::CoordinateOutOfRange { index: v, dim });
    }
    let grads: Vec<Vec<Polynomial>> = polys
        .iter()
        .map(|p| (0..dim).map(|j| p.derivative(j)).collect())
        .collect();
    let (r, x) = generic_rank(dim, seed, |x| jacobian(polys, &grads, x))?;
    let j = jacobian(polys, &grads, &x);
    let mut subset = Vec::new();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for a in 0..polys.len() {
        rows.push(j.row(a).to_vec());
        if Matrix::from_rows(rows.clone()).rank() > subset.len() {
            subset.push(a);
        } else {
            rows.pop();
        }
        if subset.len() == r {
            break;
        }
    }
    let bound = independence_bound(alg, None, seed)?.bound;
    Ok(IndependenceReport {
        jacobian_rank: r,
        candidate_count: polys.len(),
        certified_subset: subset,
        bound,
    })
}

//! Classical Lie algebras from explicit matrix realizations: roots, weights,
//! structure constants, Killing form and the quadratic Casimir.

mod json;
mod realization;
mod types;

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polyalg::{Monomial, Polynomial};
use crate::rational::Q;

pub use json::{RootSystemJson, StructureEntryJson};
pub use types::{AlgebraType, Family, Root, RootKind, MAX_RANK};

/// Positive and simple roots together with the weight table.
///
/// Roots are indexed `0..2P`: positive roots first in basis order, then their
/// negatives in the same order, so root `k < P` has negative `k + P`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: AlgebraType,
    roots: Vec<Root>,
    simple: Vec<Root>,
    coroots: Vec<Vec<i64>>,
    heights: Vec<i64>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: AlgebraType) -> Self {
        let simple = realization::simple_roots(ty);
        let coroots = realization::simple_coroots(ty);
        let simple_mat = Matrix::from_rows(
            (0..ty.ambient_dim())
                .map(|k| simple.iter().map(|a| crate::rational::q(a.coeffs[k])).collect())
                .collect(),
        );
        let simple_coeffs = |r: &Root| -> Vec<i64> {
            let b: Vec<Q> = r.coeffs.iter().map(|&c| crate::rational::q(c)).collect();
            simple_mat
                .solve(&b)
                .expect("positive root outside the simple-root lattice")
                .into_iter()
                .map(|c| {
                    assert!(c.is_integer());
                    i64::try_from(c.to_integer()).unwrap()
                })
                .collect()
        };
        // order: height, then simple-root coefficients descending
        let mut pos: Vec<(i64, Vec<i64>, Root)> = realization::positive_roots(ty)
            .into_iter()
            .map(|r| {
                let c = simple_coeffs(&r);
                (c.iter().sum(), c, r)
            })
            .collect();
        pos.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
        let pos: Vec<(i64, Root)> = pos.into_iter().map(|(h, _, r)| (h, r)).collect();
        let mut heights: Vec<i64> = pos.iter().map(|(h, _)| *h).collect();
        heights.extend(pos.iter().map(|(h, _)| -h));
        let mut roots: Vec<Root> = pos.into_iter().map(|(_, r)| r).collect();
        let negs: Vec<Root> = roots.iter().map(Root::neg).collect();
        roots.extend(negs);
        let index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        RootSystem {
            ty,
            roots,
            simple,
            coroots,
            heights,
            index,
        }
    }

    pub fn algebra_type(&self) -> AlgebraType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// All roots, positive first.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn simple(&self) -> &[Root] {
        &self.simple
    }

    /// Simple coroots, i.e. the diagonal of the Cartan basis elements.
    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn negative_index(&self, k: usize) -> usize {
        let p = self.num_positive();
        if k < p {
            k + p
        } else {
            k - p
        }
    }

    pub fn is_positive(&self, k: usize) -> bool {
        k < self.num_positive()
    }

    pub fn height(&self, k: usize) -> i64 {
        self.heights[k]
    }

    pub fn kind(&self, k: usize) -> RootKind {
        RootKind::of(&self.roots[k]).expect("every classical root has a kind")
    }

    /// `beta(H_i)`.
    pub fn weight(&self, root: &Root, i: usize) -> i64 {
        root.dot(&self.coroots[i])
    }

    pub fn weight_of(&self, k: usize, i: usize) -> i64 {
        self.weight(&self.roots[k], i)
    }

    /// `a_ij = alpha_j(H_i)`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| self.weight(&self.simple[j], i)).collect())
            .collect()
    }

    /// Table `weight_table[i][k] = root_k(H_i)`.
    pub fn weight_table(&self) -> Vec<Vec<i64>> {
        (0..self.rank())
            .map(|i| (0..self.roots.len()).map(|k| self.weight_of(k, i)).collect())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Cartan(usize),
    /// Index into [`RootSystem::roots`].
    RootVector(usize),
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub kind: BasisKind,
    pub matrix: Matrix,
}

/// Sparse `C_{ij}^k` with `[X_i, X_j] = C_{ij}^k X_k`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Vec<(usize, Q)>>,
}

impl StructureConstants {
    pub fn from_table(dim: usize, table: Vec<Vec<(usize, Q)>>) -> Self {
        assert_eq!(table.len(), dim * dim);
        StructureConstants { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero `(k, C_{ij}^k)` in increasing `k`.
    pub fn get(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.table[i * self.dim + j]
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Q {
        self.get(i, j)
            .iter()
            .find(|(l, _)| *l == k)
            .map_or_else(Q::zero, |(_, c)| c.clone())
    }

    /// All nonzero entries `(i, j, k, c)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Q)> {
        self.table.iter().enumerate().flat_map(move |(ij, v)| {
            v.iter()
                .map(move |(k, c)| (ij / self.dim, ij % self.dim, *k, c))
        })
    }

    /// Matrix of `ad X_i` in the basis (column `j` holds `[X_i, X_j]`).
    pub fn ad(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for (k, c) in self.get(i, j) {
                m[(*k, j)] = c.clone();
            }
        }
        m
    }
}

/// A built algebra: roots, matrix basis and structure constants.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    pub roots: RootSystem,
    pub basis: Vec<BasisElement>,
    pub sc: StructureConstants,
}

/// Builds the algebra of the given type from its matrix realization.
pub fn build_algebra(ty: AlgebraType) -> Result<(RootSystem, Vec<BasisElement>, StructureConstants)> {
    let rs = RootSystem::new(ty);
    let n = ty.rank();
    let p = rs.num_positive();
    let mut basis: Vec<BasisElement> = (0..n)
        .map(|i| BasisElement {
            kind: BasisKind::Cartan(i),
            matrix: realization::cartan_matrix_of(ty, &rs.coroots[i]),
        })
        .collect();
    for k in 0..p {
        basis.push(BasisElement {
            kind: BasisKind::RootVector(k),
            matrix: realization::positive_root_matrix(ty, rs.root(k)),
        });
    }
    for k in 0..p {
        let m = basis[n + k].matrix.transpose();
        basis.push(BasisElement {
            kind: BasisKind::RootVector(p + k),
            matrix: m,
        });
    }
    let dim = basis.len();
    debug_assert_eq!(dim, ty.dim());

    let expander = Expander::new(&basis, n);
    let pairs: Vec<(usize, usize)> = (0..dim)
        .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
        .collect();
    let brackets: Vec<Result<Vec<(usize, Q)>>> = pairs
        .par_iter()
        .map(|&(i, j)| expander.expand(&basis[i].matrix.commutator(&basis[j].matrix)))
        .collect();
    let mut table = vec![Vec::new(); dim * dim];
    for (&(i, j), v) in pairs.iter().zip(brackets) {
        let v = v?;
        table[j * dim + i] = v.iter().map(|(k, c)| (*k, -c)).collect();
        table[i * dim + j] = v;
    }
    Ok((rs, basis, StructureConstants { dim, table }))
}

impl LieAlgebra {
    pub fn new(ty: AlgebraType) -> Result<Self> {
        let (roots, basis, sc) = build_algebra(ty)?;
        Ok(LieAlgebra { roots, basis, sc })
    }

    pub fn algebra_type(&self) -> AlgebraType {
        self.roots.algebra_type()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    /// Coordinate index of a root.
    pub fn root_coordinate(&self, root_index: usize) -> usize {
        self.rank() + root_index
    }

    /// Root index of a coordinate, `None` for Cartan coordinates.
    pub fn coordinate_root(&self, coord: usize) -> Option<usize> {
        coord.checked_sub(self.rank())
    }

    /// Coordinate under the hat involution: `eps_b <-> eps_{-b}`, `h_i` fixed.
    pub fn hat_coordinate(&self, coord: usize) -> usize {
        match self.coordinate_root(coord) {
            None => coord,
            Some(k) => self.root_coordinate(self.roots.negative_index(k)),
        }
    }

    /// Weight of a coordinate under `H_i` (zero for Cartan coordinates).
    pub fn coordinate_weight(&self, coord: usize, i: usize) -> i64 {
        self.coordinate_root(coord)
            .map_or(0, |k| self.roots.weight_of(k, i))
    }

    /// Coordinate names: `h1`, then root tokens prefixed by `e` (`e12-`, `^e12+`).
    pub fn coordinate_names(&self, style: HatStyle) -> Vec<String> {
        (0..self.dim()).map(|c| self.coordinate_name(c, style)).collect()
    }

    pub fn coordinate_name(&self, coord: usize, style: HatStyle) -> String {
        match self.coordinate_root(coord) {
            None => format!("h{}", coord + 1),
            Some(k) => {
                let token = self.roots.kind(k).token();
                match token.strip_prefix('^') {
                    None => format!("e{token}"),
                    Some(t) => match style {
                        HatStyle::Caret => format!("^e{t}"),
                        HatStyle::Suffix => format!("e{t}h"),
                    },
                }
            }
        }
    }

    pub fn killing_form(&self) -> Matrix {
        killing_form(&self.sc)
    }

    pub fn quadratic_casimir(&self) -> Result<Polynomial> {
        quadratic_casimir(&self.sc)
    }
}

/// How hatted coordinates are rendered.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HatStyle {
    /// `^e12+`
    #[default]
    Caret,
    /// `e12+h`
    Suffix,
}

/// Expands a matrix over the basis: root vectors through a pivot entry each,
/// the Cartan part through the diagonal.
struct Expander<'a> {
    basis: &'a [BasisElement],
    rank: usize,
    pivots: Vec<(usize, usize)>,
    cartan_diag: Matrix,
}

impl<'a> Expander<'a> {
    fn new(basis: &'a [BasisElement], rank: usize) -> Self {
        let pivots = basis[rank..]
            .iter()
            .map(|b| {
                let (r, c, _) = b.matrix.nonzeros().next().expect("zero root vector");
                (r, c)
            })
            .collect();
        let size = basis[0].matrix.rows();
        let mut cartan_diag = Matrix::zeros(size, rank);
        for i in 0..rank {
            for d in 0..size {
                cartan_diag[(d, i)] = basis[i].matrix[(d, d)].clone();
            }
        }
        Expander {
            basis,
            rank,
            pivots,
            cartan_diag,
        }
    }

    fn expand(&self, m: &Matrix) -> Result<Vec<(usize, Q)>> {
        let mut out = Vec::new();
        let diag: Vec<Q> = (0..m.rows()).map(|d| m[(d, d)].clone()).collect();
        if diag.iter().any(|v| !v.is_zero()) {
            let c = self.cartan_diag.solve(&diag).ok_or(Error::NotInSpan)?;
            for (i, v) in c.into_iter().enumerate() {
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
        }
        for (k, &(r, c)) in self.pivots.iter().enumerate() {
            let v = &m[(r, c)];
            if !v.is_zero() {
                let b = &self.basis[self.rank + k].matrix[(r, c)];
                out.push((self.rank + k, v / b));
            }
        }
        let mut rebuilt = Matrix::zeros(m.rows(), m.cols());
        for (k, c) in &out {
            rebuilt = rebuilt.add(&self.basis[*k].matrix.scale(c));
        }
        if &rebuilt != m {
            return Err(Error::NotInSpan);
        }
        Ok(out)
    }
}

/// `kappa(X_i, X_j) = tr(ad X_i ad X_j)`.
pub fn killing_form(sc: &StructureConstants) -> Matrix {
    let dim = sc.dim();
    let ads: Vec<Matrix> = (0..dim).map(|i| sc.ad(i)).collect();
    let mut k = Matrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let v = ads[i].mul(&ads[j]).trace();
            k[(j, i)] = v.clone();
            k[(i, j)] = v;
        }
    }
    k
}

/// `C_2 = sum kappa^{ij} x_i x_j`.
pub fn quadratic_casimir(sc: &StructureConstants) -> Result<Polynomial> {
    let kinv = killing_form(sc)
        .inverse()
        .ok_or(Error::SingularKillingForm)?;
    let mut p = Polynomial::zero();
    for i in 0..sc.dim() {
        for j in 0..sc.dim() {
            let c = &kinv[(i, j)];
            if !c.is_zero() {
                p.add_term(Monomial::from_vars(&[i, j]), c.clone());
            }
        }
    }
    Ok(p)
}

/// `[H_i, E_b] = b(H_i) E_b` for every root vector, as matrices.
pub fn check_weight_eigenvectors(alg: &LieAlgebra) -> bool {
    let n = alg.rank();
    (0..n).all(|i| {
        alg.basis[n..].iter().enumerate().all(|(k, b)| {
            let w = crate::rational::q(alg.roots.weight_of(k, i));
            alg.basis[i].matrix.commutator(&b.matrix) == b.matrix.scale(&w)
        })
    })
}

/// `X^T J + J X = 0` for every basis element (types B, C, D).
pub fn check_invariant_form(alg: &LieAlgebra) -> bool {
    match realization::invariant_form(alg.algebra_type()) {
        None => alg.basis.iter().all(|b| b.matrix.trace().is_zero()),
        Some(j) => alg
            .basis
            .iter()
            .all(|b| b.matrix.transpose().mul(&j).add(&j.mul(&b.matrix)).is_zero()),
    }
}

#[cfg(test)]
mod tests;

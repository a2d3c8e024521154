//! Matrix realizations of the classical families.
//!
//! A_r: sl(r+1).  B_n: so(2n+1) for J = [[0,I,0],[I,0,0],[0,0,1]].
//! C_n: sp(2n) for [[0,I],[-I,0]].  D_n: so(2n) for J = [[0,I],[I,0]].
//! Cartan elements are diag(v) (type A) or diag(v, -v[, 0]) where v is the
//! simple coroot; negative root vectors are transposes of positive ones.

use num_traits::One;

use super::types::{AlgebraType, Family, Root};
use crate::matrix::Matrix;
use crate::rational::{q, Q};

fn unit(size: usize, entries: &[(usize, usize, i64)]) -> Matrix {
    let mut m = Matrix::zeros(size, size);
    for &(a, b, v) in entries {
        m[(a, b)] += q(v);
    }
    m
}

/// Positive roots of the family, unsorted.
pub(crate) fn positive_roots(ty: AlgebraType) -> Vec<Root> {
    let n = ty.rank();
    let len = ty.ambient_dim();
    let mut out = Vec::new();
    let pairs = |m: usize| (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)));
    match ty.family() {
        Family::A => {
            for (i, j) in pairs(n + 1) {
                out.push(Root::unit_combo(len, &[(i, 1), (j, -1)]));
            }
        }
        f => {
            for (i, j) in pairs(n) {
                out.push(Root::unit_combo(len, &[(i, 1), (j, -1)]));
                out.push(Root::unit_combo(len, &[(i, 1), (j, 1)]));
            }
            match f {
                Family::B => out.extend((0..n).map(|i| Root::unit_combo(len, &[(i, 1)]))),
                Family::C => out.extend((0..n).map(|i| Root::unit_combo(len, &[(i, 2)]))),
                _ => {}
            }
        }
    }
    out
}

pub(crate) fn simple_roots(ty: AlgebraType) -> Vec<Root> {
    let n = ty.rank();
    let len = ty.ambient_dim();
    let mut out: Vec<Root> = match ty.family() {
        Family::A => (0..n)
            .map(|i| Root::unit_combo(len, &[(i, 1), (i + 1, -1)]))
            .collect(),
        _ => (0..n - 1)
            .map(|i| Root::unit_combo(len, &[(i, 1), (i + 1, -1)]))
            .collect(),
    };
    match ty.family() {
        Family::A => {}
        Family::B => out.push(Root::unit_combo(len, &[(n - 1, 1)])),
        Family::C => out.push(Root::unit_combo(len, &[(n - 1, 2)])),
        Family::D => out.push(Root::unit_combo(len, &[(n - 2, 1), (n - 1, 1)])),
    }
    out
}

/// Simple coroots `2 a / (a, a)`; these are the Cartan basis vectors.
pub(crate) fn simple_coroots(ty: AlgebraType) -> Vec<Vec<i64>> {
    simple_roots(ty)
        .into_iter()
        .map(|a| {
            let norm: i64 = a.coeffs.iter().map(|c| c * c).sum();
            a.coeffs.iter().map(|c| 2 * c / norm).collect()
        })
        .collect()
}

pub(crate) fn cartan_matrix_of(ty: AlgebraType, coroot: &[i64]) -> Matrix {
    let size = ty.matrix_size();
    let n = ty.rank();
    let mut m = Matrix::zeros(size, size);
    match ty.family() {
        Family::A => {
            for (k, &v) in coroot.iter().enumerate() {
                m[(k, k)] = q(v);
            }
        }
        _ => {
            for (k, &v) in coroot.iter().enumerate() {
                m[(k, k)] = q(v);
                m[(n + k, n + k)] = q(-v);
            }
        }
    }
    m
}

/// Matrix of the root vector for a positive root.
pub(crate) fn positive_root_matrix(ty: AlgebraType, root: &Root) -> Matrix {
    let size = ty.matrix_size();
    let n = ty.rank();
    let nz: Vec<(usize, i64)> = root
        .coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k, c))
        .collect();
    match (ty.family(), nz.as_slice()) {
        (Family::A, [(i, 1), (j, -1)]) => unit(size, &[(*i, *j, 1)]),
        (_, [(i, 1), (j, -1)]) => unit(size, &[(*i, *j, 1), (n + j, n + i, -1)]),
        (Family::C, [(i, 1), (j, 1)]) => unit(size, &[(*i, n + j, 1), (*j, n + i, 1)]),
        (_, [(i, 1), (j, 1)]) => unit(size, &[(*i, n + j, 1), (*j, n + i, -1)]),
        (Family::B, [(i, 1)]) => unit(size, &[(*i, 2 * n, 1), (2 * n, n + i, -1)]),
        (Family::C, [(i, 2)]) => unit(size, &[(*i, n + i, 1)]),
        _ => panic!("{root} is not a positive root of {ty}"),
    }
}

/// The invariant bilinear form the realization preserves (`X^T J + J X = 0`);
/// `None` for type A.
pub(crate) fn invariant_form(ty: AlgebraType) -> Option<Matrix> {
    let n = ty.rank();
    let size = ty.matrix_size();
    let mut j = Matrix::zeros(size, size);
    match ty.family() {
        Family::A => return None,
        Family::B | Family::D => {
            for k in 0..n {
                j[(k, n + k)] = Q::one();
                j[(n + k, k)] = Q::one();
            }
            if ty.family() == Family::B {
                j[(2 * n, 2 * n)] = Q::one();
            }
        }
        Family::C => {
            for k in 0..n {
                j[(k, n + k)] = Q::one();
                j[(n + k, k)] = -Q::one();
            }
        }
    }
    Some(j)
}

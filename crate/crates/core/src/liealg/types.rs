use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported rank. Generator names use single-digit indices.
pub const MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// A classical simple Lie algebra type `X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraType {
    family: Family,
    rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let err = |constraint| {
            Err(Error::UnsupportedRank {
                family: family.letter(),
                rank,
                constraint,
            })
        };
        if rank == 0 {
            return err("rank must be at least 1");
        }
        if family == Family::D && rank < 2 {
            return err("type D requires rank >= 2");
        }
        if rank > MAX_RANK {
            return err("rank must be at most 8");
        }
        Ok(AlgebraType { family, rank })
    }

    /// Parses `"B3"`, `"B 3"` or `"b3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| Error::UnknownFamily(String::new()))?
            .to_string()
            .parse()?;
        let rank = chars
            .as_str()
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("bad rank in `{s}`")))?;
        Self::new(family, rank)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Size of the defining matrices.
    pub fn matrix_size(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1,
            Family::B => 2 * n + 1,
            Family::C | Family::D => 2 * n,
        }
    }

    /// Length of root coordinate vectors.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.rank + 2 * self.num_positive_roots()
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Root as integer coordinates over the orthonormal basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    pub coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        self.coeffs.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// `e_i - e_j`, `e_i + e_j`, `e_i`, `2 e_i` with 0-based indices.
    pub(crate) fn unit_combo(len: usize, terms: &[(usize, i64)]) -> Root {
        let mut c = vec![0; len];
        for &(i, v) in terms {
            c[i] += v;
        }
        Root::new(c)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Shape of a root, used for naming and for the classification cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    /// `e_i - e_j` (1-based `i`, `j`; `i > j` for negative roots).
    Perm { i: usize, j: usize },
    /// `±(e_i + e_j)`, `i < j`.
    Long { i: usize, j: usize, negative: bool },
    /// `±e_i` in type B, `±2e_i` in type C.
    Short { i: usize, negative: bool },
}

impl RootKind {
    pub fn of(root: &Root) -> Option<RootKind> {
        let nz: Vec<(usize, i64)> = root
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k + 1, c))
            .collect();
        match nz.as_slice() {
            [(i, 1), (j, -1)] => Some(RootKind::Perm { i: *i, j: *j }),
            [(j, -1), (i, 1)] => Some(RootKind::Perm { i: *i, j: *j }),
            [(i, 1), (j, 1)] => Some(RootKind::Long {
                i: *i,
                j: *j,
                negative: false,
            }),
            [(i, -1), (j, -1)] => Some(RootKind::Long {
                i: *i,
                j: *j,
                negative: true,
            }),
            [(i, c)] if c.abs() == 1 || c.abs() == 2 => Some(RootKind::Short {
                i: *i,
                negative: *c < 0,
            }),
            _ => None,
        }
    }

    /// Token used inside generator names: `12-`, `21-`, `12+`, `^12+`, `1`, `^1`.
    pub fn token(&self) -> String {
        match *self {
            RootKind::Perm { i, j } => format!("{i}{j}-"),
            RootKind::Long { i, j, negative } => {
                format!("{}{i}{j}+", if negative { "^" } else { "" })
            }
            RootKind::Short { i, negative } => format!("{}{i}", if negative { "^" } else { "" }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_and_counts() {
        let t = |f, n| AlgebraType::new(f, n).unwrap();
        assert_eq!(t(Family::A, 1).dim(), 3);
        assert_eq!(t(Family::A, 3).dim(), 15);
        assert_eq!(t(Family::B, 3).dim(), 21);
        assert_eq!(t(Family::C, 3).dim(), 21);
        assert_eq!(t(Family::D, 3).dim(), 15);
        assert_eq!(t(Family::D, 2).dim(), 6);
    }

    #[test]
    fn rank_constraints() {
        assert!(AlgebraType::new(Family::D, 1).is_err());
        assert!(AlgebraType::new(Family::A, 0).is_err());
        assert!(AlgebraType::new(Family::B, 9).is_err());
        let e = AlgebraType::new(Family::D, 1).unwrap_err().to_string();
        assert!(e.contains("rank >= 2"), "{e}");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(AlgebraType::parse("B3").unwrap().to_string(), "B3");
        assert_eq!(AlgebraType::parse("d 2").unwrap().to_string(), "D2");
        assert!(AlgebraType::parse("E6").is_err());
    }

    #[test]
    fn tokens() {
        let r = Root::new(vec![0, -1, 1]);
        assert_eq!(RootKind::of(&r).unwrap().token(), "32-");
        let r = Root::new(vec![-1, 0, -1]);
        assert_eq!(RootKind::of(&r).unwrap().token(), "^13+");
        let r = Root::new(vec![0, 0, -2]);
        assert_eq!(RootKind::of(&r).unwrap().token(), "^3");
    }
}

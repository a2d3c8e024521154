//! Zero-sum multiset enumeration over a root system.
//!
//! A multiset of `h` roots summing to zero is indecomposable iff its first
//! `h - 1` elements (in any order) form a zero-sum-free multiset: a proper
//! zero-sum part either avoids the last element, or its complement does.
//! The search therefore walks nondecreasing zero-sum-free prefixes, keeping
//! their subset sums incrementally, and closes each prefix with the unique
//! root that cancels it.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::liealg::RootSystem;

pub(crate) const MAX_AMBIENT: usize = 9;

pub(crate) type SumVec = [i8; MAX_AMBIENT];

pub(crate) fn to_sumvec(coeffs: &[i64]) -> SumVec {
    let mut v = [0i8; MAX_AMBIENT];
    for (k, c) in coeffs.iter().enumerate() {
        v[k] = i8::try_from(*c).expect("root coordinate out of range");
    }
    v
}

fn add(a: &SumVec, b: &SumVec) -> SumVec {
    let mut out = *a;
    for k in 0..MAX_AMBIENT {
        out[k] += b[k];
    }
    out
}

fn neg(a: &SumVec) -> SumVec {
    let mut out = *a;
    for x in out.iter_mut() {
        *x = -*x;
    }
    out
}

pub(crate) struct Enumerator {
    vecs: Vec<SumVec>,
    index: HashMap<SumVec, usize>,
}

impl Enumerator {
    pub(crate) fn new(rs: &RootSystem) -> Self {
        let vecs: Vec<SumVec> = rs.roots().iter().map(|r| to_sumvec(&r.coeffs)).collect();
        let index = vecs.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        Enumerator { vecs, index }
    }

    /// `reach[t][s]`: sums of `t` roots with indices `>= s`.
    fn reach(&self, upto: usize) -> Vec<Vec<HashSet<SumVec>>> {
        let n = self.vecs.len();
        let zero = HashSet::from([[0i8; MAX_AMBIENT]]);
        let mut out: Vec<Vec<HashSet<SumVec>>> = vec![vec![zero; n + 1]];
        for t in 1..=upto {
            let mut row = vec![HashSet::new(); n + 1];
            for s in (0..n).rev() {
                let mut set = row[s + 1].clone();
                let v = self.vecs[s];
                set.extend(out[t - 1][s].iter().map(|x| add(x, &v)));
                row[s] = set;
            }
            out.push(row);
        }
        out
    }

    /// All indecomposable zero-sum multisets of `h >= 2` roots, as sorted
    /// root-index vectors in lexicographic order.
    pub(crate) fn layer(&self, h: usize) -> Vec<Vec<usize>> {
        assert!(h >= 2);
        let reach = self.reach(h - 1);
        let n = self.vecs.len();
        let mut out: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut found = Vec::new();
                let v = self.vecs[first];
                let mut prefix = vec![first];
                let sums = vec![v];
                self.extend(h, &reach, &mut prefix, v, &sums, &mut found);
                found
            })
            .collect();
        out.sort();
        out
    }

    fn extend(
        &self,
        h: usize,
        reach: &[Vec<HashSet<SumVec>>],
        prefix: &mut Vec<usize>,
        total: SumVec,
        sums: &[SumVec],
        found: &mut Vec<Vec<usize>>,
    ) {
        let last = *prefix.last().unwrap();
        let need = neg(&total);
        if prefix.len() == h - 1 {
            if let Some(&k) = self.index.get(&need) {
                if k >= last {
                    let mut m = prefix.clone();
                    m.push(k);
                    found.push(m);
                }
            }
            return;
        }
        // h - len more roots, none below `last`, must cancel the running total
        if !reach[h - prefix.len()][last].contains(&need) {
            return;
        }
        let present: HashSet<SumVec> = sums.iter().copied().collect();
        for r in last..self.vecs.len() {
            let v = self.vecs[r];
            if present.contains(&neg(&v)) {
                continue;
            }
            let mut next: Vec<SumVec> = sums.to_vec();
            next.push(v);
            for s in sums {
                let t = add(s, &v);
                if !present.contains(&t) {
                    next.push(t);
                }
            }
            next.sort_unstable();
            next.dedup();
            prefix.push(r);
            self.extend(h, reach, prefix, add(&total, &v), &next, found);
            prefix.pop();
        }
    }
}

/// True iff no proper nonempty sub-multiset sums to zero and the whole does.
/// Subset-sum search over (distinct root, multiplicity) groups with memoized
/// states.
pub(crate) fn indecomposable(vecs: &[SumVec]) -> bool {
    let total = vecs.iter().fold([0i8; MAX_AMBIENT], |a, b| add(&a, b));
    if total != [0i8; MAX_AMBIENT] || vecs.is_empty() {
        return false;
    }
    let mut groups: Vec<(SumVec, usize)> = Vec::new();
    let mut sorted = vecs.to_vec();
    sorted.sort_unstable();
    for v in sorted {
        match groups.last_mut() {
            Some((w, c)) if *w == v => *c += 1,
            _ => groups.push((v, 1)),
        }
    }
    // state: (group, partial sum, any chosen, all chosen so far)
    let mut seen: HashSet<(usize, SumVec, bool, bool)> = HashSet::new();
    fn search(
        g: usize,
        sum: SumVec,
        any: bool,
        all: bool,
        groups: &[(SumVec, usize)],
        seen: &mut HashSet<(usize, SumVec, bool, bool)>,
    ) -> bool {
        if g == groups.len() {
            return any && !all && sum == [0i8; MAX_AMBIENT];
        }
        if !seen.insert((g, sum, any, all)) {
            return false;
        }
        let (v, count) = groups[g];
        let mut s = sum;
        for c in 0..=count {
            if c > 0 {
                s = add(&s, &v);
            }
            if search(g + 1, s, any || c > 0, all && c == count, groups, seen) {
                return true;
            }
        }
        false
    }
    !search(0, [0i8; MAX_AMBIENT], false, true, &groups, &mut seen)
}

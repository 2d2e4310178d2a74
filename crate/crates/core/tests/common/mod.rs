//! Brute-force oracles that only use the raw independence test.
#![allow(dead_code)]

use matroid_union::{Matroid, Subset};

pub fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u64 << n).map(Subset::from_bits)
}

pub fn independent_sets(m: &Matroid) -> Vec<Subset> {
    subsets(m.len()).filter(|s| m.is_independent(*s)).collect()
}

/// Largest independent subset of `x`, by enumeration.
pub fn rank(m: &Matroid, x: Subset) -> usize {
    x.subsets()
        .filter(|s| m.is_independent(*s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

pub fn bases(m: &Matroid) -> Vec<Subset> {
    let ind = independent_sets(m);
    let r = ind.iter().map(|s| s.len()).max().unwrap_or(0);
    ind.into_iter().filter(|s| s.len() == r).collect()
}

/// A split `x = I1 ∪ I2` with disjoint independent parts, if any.
pub fn split(m1: &Matroid, m2: &Matroid, x: Subset) -> Option<(Subset, Subset)> {
    x.subsets()
        .find(|a| m1.is_independent(*a) && m2.is_independent(x - *a))
        .map(|a| (a, x - a))
}

pub fn union_family(m1: &Matroid, m2: &Matroid) -> Vec<Subset> {
    subsets(m1.len()).filter(|x| split(m1, m2, *x).is_some()).collect()
}

pub fn maximal(family: &[Subset]) -> Vec<Subset> {
    family
        .iter()
        .copied()
        .filter(|a| !family.iter().any(|b| b != a && a.is_subset(b)))
        .collect()
}

/// `k` pairwise disjoint bases, by backtracking over the base list.
pub fn disjoint_bases(m: &Matroid, k: usize) -> bool {
    fn go(bases: &[Subset], used: Subset, k: usize, start: usize) -> bool {
        if k == 0 {
            return true;
        }
        // The empty base is disjoint from itself, so it may repeat.
        (start..bases.len()).any(|i| {
            let next = if bases[i].is_empty() { i } else { i + 1 };
            bases[i].is_disjoint(&used) && go(bases, used | bases[i], k - 1, next)
        })
    }
    go(&bases(m), Subset::EMPTY, k, 0)
}

/// Every element assigned to one of `k` parts, each part independent.
pub fn coverable(m: &Matroid, k: usize) -> bool {
    fn go(m: &Matroid, elems: &[usize], parts: &mut Vec<Subset>) -> bool {
        let Some((&e, rest)) = elems.split_first() else {
            return true;
        };
        for j in 0..parts.len() {
            let next = parts[j].with(e);
            if m.is_independent(next) {
                let old = parts[j];
                parts[j] = next;
                if go(m, rest, parts) {
                    return true;
                }
                parts[j] = old;
            }
        }
        false
    }
    let elems: Vec<usize> = m.all().iter().collect();
    go(m, &elems, &mut vec![Subset::EMPTY; k])
}

/// `X ∈ I[N,k,c]`: each element of `X` placed in exactly `c` of `k` independent sets.
/// Sets can always be shrunk to `X` and to exactly `c` appearances, so this is exhaustive.
pub fn in_i_nkc(n: &Matroid, k: usize, c: usize, x: Subset) -> bool {
    let choices: Vec<u32> = (0u32..1 << k).filter(|m| m.count_ones() as usize == c).collect();
    fn go(n: &Matroid, elems: &[usize], choices: &[u32], parts: &mut Vec<Subset>) -> bool {
        let Some((&e, rest)) = elems.split_first() else {
            return true;
        };
        for &mask in choices {
            let before = parts.clone();
            let mut ok = true;
            for (j, p) in parts.iter_mut().enumerate() {
                if mask >> j & 1 == 1 {
                    *p = p.with(e);
                    ok &= n.is_independent(*p);
                }
            }
            if ok && go(n, rest, choices, parts) {
                return true;
            }
            *parts = before;
        }
        false
    }
    let elems: Vec<usize> = x.iter().collect();
    go(n, &elems, &choices, &mut vec![Subset::EMPTY; k])
}

/// Number of elements appearing in at least `c` sets.
pub fn g_c(sets: &[Subset], c: usize) -> Subset {
    let mut out = Subset::EMPTY;
    for e in 0..64 {
        if sets.iter().filter(|s| s.contains(e)).count() >= c {
            out.insert(e);
        }
    }
    out
}

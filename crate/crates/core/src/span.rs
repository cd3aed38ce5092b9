//! Subgroup closure over a dense addition table.

use std::collections::{HashSet, VecDeque};

use crate::bitset::BitSet;
use crate::error::{AlgebraError, Result};

/// Enlarge the subgroup `set` to the subgroup generated by `set` and `x`,
/// as the union of the cosets `set + k·x`.
pub(crate) fn adjoin(add: &[u32], set: &mut BitSet, x: usize) -> bool {
    if set.contains(x) {
        return false;
    }
    let n = set.universe();
    let base: Vec<usize> = set.iter().collect();
    let mut y = x;
    while !set.contains(y) {
        for &s in &base {
            set.insert(add[s * n + y] as usize);
        }
        y = add[y * n + x] as usize;
    }
    true
}

/// Subgroup generated by `gens`.
#[cfg(test)]
pub(crate) fn span<I: IntoIterator<Item = usize>>(add: &[u32], n: usize, gens: I) -> BitSet {
    let mut set = BitSet::singleton(n, 0);
    for g in gens {
        adjoin(add, &mut set, g);
    }
    set
}

/// Sum of two subgroups.
pub(crate) fn sum(add: &[u32], a: &BitSet, b: &BitSet) -> BitSet {
    let (mut big, small) = if a.count() >= b.count() {
        (a.clone(), b)
    } else {
        (b.clone(), a)
    };
    for x in small.iter() {
        adjoin(add, &mut big, x);
    }
    big
}

/// Every sum of the given subgroups, including the zero subgroup, in
/// canonical order.
pub(crate) fn all_sums(
    add: &[u32],
    n: usize,
    cyclics: &[BitSet],
    cap: usize,
    what: &'static str,
) -> Result<Vec<BitSet>> {
    let zero = BitSet::singleton(n, 0);
    let mut seen: HashSet<BitSet> = HashSet::new();
    seen.insert(zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(s) = queue.pop_front() {
        for c in cyclics {
            if c.is_subset(&s) {
                continue;
            }
            let t = sum(add, &s, c);
            if !seen.contains(&t) {
                if seen.len() >= cap {
                    return Err(AlgebraError::BudgetExceeded { what, cap });
                }
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    let mut out: Vec<BitSet> = seen.into_iter().collect();
    out.sort_by(BitSet::cmp_canonical);
    Ok(out)
}

/// Greedy generating set for the subgroup `target` from candidate
/// generators `(element, closure)`: largest closure first, ties by index.
pub(crate) fn greedy_generators(add: &[u32], target: &BitSet, mut candidates: Vec<(usize, BitSet)>) -> Vec<usize> {
    candidates.sort_by(|x, y| y.1.count().cmp(&x.1.count()).then(x.0.cmp(&y.0)));
    let mut set = BitSet::singleton(target.universe(), 0);
    let mut gens = Vec::new();
    for (a, closure) in candidates {
        if &set == target {
            break;
        }
        if !set.contains(a) {
            set = sum(add, &set, &closure);
            gens.push(a);
        }
    }
    gens
}

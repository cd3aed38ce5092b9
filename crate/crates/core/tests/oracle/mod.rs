//! Brute-force reference implementations used to freeze expected values.
//!
//! Nothing here calls the library's enumerators, radicals or closure
//! routines; only the raw operation tables are read.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use gzariski::module::GradedModule;
use gzariski::ring::GradedRing;

pub type Set = BTreeSet<usize>;

/// Close `seed` under the binary operation `add`.
fn additive_closure(seed: &Set, add: &dyn Fn(usize, usize) -> usize) -> Set {
    let mut s = seed.clone();
    s.insert(0);
    loop {
        let mut grown = s.clone();
        for &a in &s {
            for &b in &s {
                grown.insert(add(a, b));
            }
        }
        if grown.len() == s.len() {
            return s;
        }
        s = grown;
    }
}

/// Every additive subgroup of a finite group of order `n`, found by
/// adjoining one element at a time to already-found subgroups.
pub fn all_subgroups(n: usize, add: &dyn Fn(usize, usize) -> usize) -> Vec<Set> {
    let zero: Set = [0].into_iter().collect();
    let mut seen: HashSet<Set> = HashSet::new();
    seen.insert(zero.clone());
    let mut stack = vec![zero];
    while let Some(s) = stack.pop() {
        for x in 0..n {
            if s.contains(&x) {
                continue;
            }
            let mut seed = s.clone();
            seed.insert(x);
            let t = additive_closure(&seed, add);
            if seen.insert(t.clone()) {
                stack.push(t);
            }
        }
    }
    sorted(seen.into_iter().collect())
}

fn sorted(mut v: Vec<Set>) -> Vec<Set> {
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    v
}

pub fn graded_ideals(r: &GradedRing) -> Vec<Set> {
    let n = r.size();
    let g = r.group().order();
    all_subgroups(n, &|a, b| r.add(a, b))
        .into_iter()
        .filter(|s| s.iter().all(|&x| (0..n).all(|y| s.contains(&r.mul(y, x)))))
        .filter(|s| s.iter().all(|&x| (0..g).all(|h| s.contains(&r.part(x, h)))))
        .collect()
}

pub fn graded_submodules(m: &GradedModule) -> Vec<Set> {
    let r = m.ring();
    let g = r.group().order();
    all_subgroups(m.size(), &|a, b| m.add(a, b))
        .into_iter()
        .filter(|s| s.iter().all(|&x| (0..r.size()).all(|a| s.contains(&m.act(a, x)))))
        .filter(|s| s.iter().all(|&x| (0..g).all(|h| s.contains(&m.part(x, h)))))
        .collect()
}

pub fn homogeneous(r: &GradedRing) -> Vec<usize> {
    let g = r.group().order();
    (0..r.size())
        .filter(|&a| (0..g).filter(|&h| r.part(a, h) != 0).count() <= 1)
        .collect()
}

pub fn module_homogeneous(m: &GradedModule) -> Vec<usize> {
    let g = m.ring().group().order();
    (0..m.size())
        .filter(|&x| (0..g).filter(|&h| m.part(x, h) != 0).count() <= 1)
        .collect()
}

/// `a^k ∈ I` for some `1 ≤ k ≤ |R|`, by repeated multiplication.
fn has_power_in(r: &GradedRing, a: usize, i: &Set) -> bool {
    let mut p = a;
    for _ in 0..r.size() {
        if i.contains(&p) {
            return true;
        }
        p = r.mul(p, a);
    }
    false
}

pub fn radical(r: &GradedRing, i: &Set) -> Set {
    let g = r.group().order();
    (0..r.size())
        .filter(|&a| (0..g).all(|h| has_power_in(r, r.part(a, h), i)))
        .collect()
}

pub fn is_prime(r: &GradedRing, i: &Set) -> bool {
    if i.len() == r.size() {
        return false;
    }
    let h = homogeneous(r);
    h.iter().all(|&a| {
        h.iter()
            .all(|&b| !i.contains(&r.mul(a, b)) || i.contains(&a) || i.contains(&b))
    })
}

pub fn colon(m: &GradedModule, k: &Set) -> Set {
    let r = m.ring();
    (0..r.size())
        .filter(|&a| (0..m.size()).all(|x| k.contains(&m.act(a, x))))
        .collect()
}

pub fn is_prime_submodule(m: &GradedModule, p: &Set) -> bool {
    if p.len() == m.size() {
        return false;
    }
    let c = colon(m, p);
    let hr = homogeneous(m.ring());
    let hm = module_homogeneous(m);
    hr.iter().all(|&a| {
        hm.iter()
            .all(|&x| !p.contains(&m.act(a, x)) || p.contains(&x) || c.contains(&a))
    })
}

pub fn module_radical(m: &GradedModule, subs: &[Set], k: &Set) -> Set {
    let mut acc: Set = (0..m.size()).collect();
    for p in subs {
        if k.is_subset(p) && is_prime_submodule(m, p) {
            acc = acc.intersection(p).copied().collect();
        }
    }
    acc
}

pub fn is_quasi_primary_submodule(m: &GradedModule, subs: &[Set], q: &Set) -> bool {
    if q.len() == m.size() {
        return false;
    }
    let r = m.ring();
    let gc = radical(r, &colon(m, q));
    let gm = module_radical(m, subs, q);
    let hr = homogeneous(r);
    module_homogeneous(m).iter().all(|&x| {
        hr.iter()
            .all(|&a| !q.contains(&m.act(a, x)) || gc.contains(&a) || gm.contains(&x))
    })
}

pub fn is_primeful(m: &GradedModule, ideals: &[Set], subs: &[Set], k: &Set) -> bool {
    let r = m.ring();
    let c = colon(m, k);
    ideals.iter().filter(|p| is_prime(r, p) && c.is_subset(p)).all(|p| {
        subs.iter()
            .any(|s| k.is_subset(s) && is_prime_submodule(m, s) && colon(m, s) == *p)
    })
}

/// Points of qp.Spec with the graded primeful requirement.
pub fn qp_spec(m: &GradedModule) -> Vec<Set> {
    let ideals = graded_ideals(m.ring());
    let subs = graded_submodules(m);
    subs.iter()
        .filter(|q| is_quasi_primary_submodule(m, &subs, q) && is_primeful(m, &ideals, &subs, q))
        .cloned()
        .collect()
}

/// Closed sets of a finite topology given by an arbitrary generating family,
/// closed under finite unions and arbitrary intersections by fixpoint.
pub fn topology_closure(n: usize, family: &[Set]) -> Vec<Set> {
    let mut all: BTreeSet<Set> = family.iter().cloned().collect();
    all.insert(Set::new());
    all.insert((0..n).collect());
    loop {
        let v: Vec<Set> = all.iter().cloned().collect();
        let before = all.len();
        for a in &v {
            for b in &v {
                all.insert(a.union(b).copied().collect());
                all.insert(a.intersection(b).copied().collect());
            }
        }
        if all.len() == before {
            return all.into_iter().collect();
        }
    }
}

/// Smallest closed set containing `y`.
pub fn closure(closed: &[Set], y: &Set) -> Set {
    closed
        .iter()
        .filter(|c| y.is_subset(c))
        .min_by_key(|c| c.len())
        .cloned()
        .expect("full set is closed")
}

/// Irreducible: nonempty and not a union of two proper closed pieces.
pub fn is_irreducible(closed: &[Set], y: &Set) -> bool {
    if y.is_empty() {
        return false;
    }
    closed.iter().all(|a| {
        closed.iter().all(|b| {
            let covered = y.iter().all(|p| a.contains(p) || b.contains(p));
            !covered || y.is_subset(a) || y.is_subset(b)
        })
    })
}

pub fn subsets(n: usize) -> impl Iterator<Item = Set> {
    (0u64..1 << n).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

//! Finite topologies given by an explicit family of closed sets.

use std::collections::{HashMap, HashSet};

use crate::bitset::BitSet;
use crate::spectrum::SpectrumSpace;

#[derive(Debug, Clone)]
pub struct FiniteTopology {
    points: usize,
    /// Closed sets in canonical order.
    closed: Vec<BitSet>,
    /// For each closed set, the first seed whose variety it is, if built
    /// from a spectrum.
    seeds: Vec<Option<usize>>,
    lookup: HashSet<BitSet>,
}

/// Outcome of checking the closed-set axioms on a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub has_empty: bool,
    pub has_full: bool,
    /// A pair of closed sets whose union is not closed.
    pub union_failure: Option<(BitSet, BitSet)>,
    /// A pair of closed sets whose intersection is not closed.
    pub intersection_failure: Option<(BitSet, BitSet)>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.has_empty && self.has_full && self.union_failure.is_none() && self.intersection_failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericPoint {
    pub closed_set: BitSet,
    /// Least-index point whose closure is the set.
    pub point: Option<usize>,
    /// Whether that point is the only one.
    pub unique: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochsterReport {
    pub quasi_compact: bool,
    pub t0: bool,
    /// Quasi-compact opens are closed under finite intersection.
    pub qc_opens_intersection_closed: bool,
    /// Quasi-compact opens form a base.
    pub qc_opens_base: bool,
    /// Every irreducible closed set has a generic point.
    pub sober: bool,
}

impl HochsterReport {
    pub fn spectral(&self) -> bool {
        self.quasi_compact && self.t0 && self.qc_opens_intersection_closed && self.qc_opens_base && self.sober
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopologyProfile {
    pub is_t0: bool,
    pub is_t1: bool,
    pub is_connected: bool,
    pub is_irreducible_space: bool,
    /// Always true on a finite space; `longest_chain` records the length
    /// of the longest strictly descending chain of closed sets.
    pub is_noetherian: bool,
    pub longest_chain: usize,
    pub is_quasi_compact: bool,
    pub is_spectral: bool,
    pub hochster: HochsterReport,
    pub irreducible_components: Vec<BitSet>,
    pub generic_points: Vec<GenericPoint>,
}

impl FiniteTopology {
    /// Deduplicate a family of closed sets. Axioms are not enforced; see
    /// [`FiniteTopology::axiom_report`].
    pub fn from_closed_sets<I: IntoIterator<Item = BitSet>>(points: usize, family: I) -> Self {
        Self::from_seeded(points, family.into_iter().map(|c| (c, None)))
    }

    fn from_seeded<I: IntoIterator<Item = (BitSet, Option<usize>)>>(points: usize, family: I) -> Self {
        let mut first: HashMap<BitSet, Option<usize>> = HashMap::new();
        for (c, s) in family {
            assert_eq!(c.universe(), points, "closed set over the wrong point set");
            first.entry(c).or_insert(s);
        }
        let mut pairs: Vec<(BitSet, Option<usize>)> = first.into_iter().collect();
        pairs.sort_by(|a, b| a.0.cmp_canonical(&b.0));
        let lookup = pairs.iter().map(|p| p.0.clone()).collect();
        let (closed, seeds) = pairs.into_iter().unzip();
        FiniteTopology {
            points,
            closed,
            seeds,
            lookup,
        }
    }

    /// Closed sets are the varieties of every seed.
    pub fn build(space: &SpectrumSpace) -> Self {
        Self::from_seeded(
            space.len(),
            space.varieties().iter().enumerate().map(|(s, v)| (v.clone(), Some(s))),
        )
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn closed_sets(&self) -> &[BitSet] {
        &self.closed
    }

    pub fn seed_of(&self, closed_index: usize) -> Option<usize> {
        self.seeds[closed_index]
    }

    pub fn open_sets(&self) -> Vec<BitSet> {
        self.closed.iter().map(BitSet::complement).collect()
    }

    pub fn is_closed(&self, y: &BitSet) -> bool {
        self.lookup.contains(y)
    }

    pub fn is_open(&self, y: &BitSet) -> bool {
        self.lookup.contains(&y.complement())
    }

    pub fn axiom_report(&self) -> AxiomReport {
        let mut union_failure = None;
        let mut intersection_failure = None;
        'outer: for (i, a) in self.closed.iter().enumerate() {
            for b in &self.closed[i + 1..] {
                if union_failure.is_none() && !self.is_closed(&a.union(b)) {
                    union_failure = Some((a.clone(), b.clone()));
                }
                if intersection_failure.is_none() && !self.is_closed(&a.intersection(b)) {
                    intersection_failure = Some((a.clone(), b.clone()));
                }
                if union_failure.is_some() && intersection_failure.is_some() {
                    break 'outer;
                }
            }
        }
        AxiomReport {
            has_empty: self.is_closed(&BitSet::new(self.points)),
            has_full: self.is_closed(&BitSet::full(self.points)),
            union_failure,
            intersection_failure,
        }
    }

    /// Intersection of the closed sets containing `y`.
    pub fn closure(&self, y: &BitSet) -> BitSet {
        let mut acc = BitSet::full(self.points);
        for c in &self.closed {
            if y.is_subset(c) {
                acc.intersect_with(c);
            }
        }
        acc
    }

    pub fn point_closure(&self, p: usize) -> BitSet {
        self.closure(&BitSet::singleton(self.points, p))
    }

    /// Distinct points have distinct closures.
    pub fn is_t0(&self) -> bool {
        self.t0_witness().is_none()
    }

    /// Two points with the same closure, least pair first.
    pub fn t0_witness(&self) -> Option<(usize, usize)> {
        let closures: Vec<BitSet> = (0..self.points).map(|p| self.point_closure(p)).collect();
        for a in 0..self.points {
            for b in a + 1..self.points {
                if closures[a] == closures[b] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Every singleton is closed.
    pub fn is_t1(&self) -> bool {
        (0..self.points).all(|p| self.is_closed(&BitSet::singleton(self.points, p)))
    }

    /// No closed set other than the empty and full sets is also open.
    pub fn is_connected(&self) -> bool {
        self.closed
            .iter()
            .all(|c| c.is_empty() || c.is_full() || !self.is_closed(&c.complement()))
    }

    /// Nonempty, and covered by two closed sets only when contained in one
    /// of them.
    pub fn is_irreducible(&self, y: &BitSet) -> bool {
        if y.is_empty() {
            return false;
        }
        for (i, a) in self.closed.iter().enumerate() {
            if y.is_subset(a) {
                continue;
            }
            for b in &self.closed[i..] {
                if !y.is_subset(b) && y.is_subset(&a.union(b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn irreducible_closed_sets(&self) -> Vec<BitSet> {
        self.closed.iter().filter(|c| self.is_irreducible(c)).cloned().collect()
    }

    /// Maximal irreducible closed sets.
    pub fn irreducible_components(&self) -> Vec<BitSet> {
        let irr = self.irreducible_closed_sets();
        irr.iter()
            .filter(|c| !irr.iter().any(|d| d.count() > c.count() && c.is_subset(d)))
            .cloned()
            .collect()
    }

    pub fn generic_point(&self, c: &BitSet) -> GenericPoint {
        let hits: Vec<usize> = c.iter().filter(|&p| self.point_closure(p) == *c).collect();
        GenericPoint {
            closed_set: c.clone(),
            point: hits.first().copied(),
            unique: hits.len() == 1,
        }
    }

    /// Length (number of sets) of the longest strictly descending chain of
    /// closed sets.
    pub fn longest_descending_chain(&self) -> usize {
        // closed is sorted by cardinality, so proper subsets come first.
        let mut best = vec![1usize; self.closed.len()];
        for i in 0..self.closed.len() {
            for j in 0..i {
                if self.closed[j].count() < self.closed[i].count() && self.closed[j].is_subset(&self.closed[i]) {
                    best[i] = best[i].max(best[j] + 1);
                }
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// A finite subfamily of `cover` whose union contains `target`, of
    /// least size, or `None` when `cover` does not cover `target`.
    pub fn finite_subcover(target: &BitSet, cover: &[BitSet]) -> Option<Vec<usize>> {
        let mut union = BitSet::new(target.universe());
        for c in cover {
            union.union_with(c);
        }
        if !target.is_subset(&union) {
            return None;
        }
        if target.is_empty() {
            return Some(Vec::new());
        }
        let useful: Vec<usize> = (0..cover.len())
            .filter(|&i| !cover[i].intersection(target).is_empty())
            .collect();
        // Breadth-first search over the covered part of the target; the
        // first complete state reached uses the fewest sets.
        const STATE_CAP: usize = 1 << 16;
        let start = BitSet::new(target.universe());
        let mut parent: HashMap<BitSet, (BitSet, usize)> = HashMap::new();
        let mut frontier = vec![start.clone()];
        let mut seen: HashSet<BitSet> = HashSet::from([start]);
        while !frontier.is_empty() && seen.len() < STATE_CAP {
            let mut next = Vec::new();
            for state in &frontier {
                for &i in &useful {
                    let grown = state.union(&cover[i].intersection(target));
                    if seen.insert(grown.clone()) {
                        parent.insert(grown.clone(), (state.clone(), i));
                        if grown == *target {
                            let mut picks = Vec::new();
                            let mut cur = grown;
                            while let Some((prev, i)) = parent.get(&cur) {
                                picks.push(*i);
                                cur = prev.clone();
                            }
                            picks.sort_unstable();
                            return Some(picks);
                        }
                        next.push(grown);
                    }
                }
            }
            frontier = next;
        }
        // Greedy fallback when the state space is too large.
        let mut covered = BitSet::new(target.universe());
        let mut picks = Vec::new();
        while !target.is_subset(&covered) {
            let best = *useful.iter().max_by_key(|&&i| {
                (
                    cover[i].intersection(target).difference(&covered).count(),
                    usize::MAX - i,
                )
            })?;
            covered.union_with(&cover[best]);
            picks.push(best);
        }
        picks.sort_unstable();
        Some(picks)
    }

    /// Every cover of `target` by open sets has a finite subcover. The open
    /// sets inside `target` are the largest such cover, and every cover is
    /// a subfamily of it, so searching that one decides the question.
    pub fn is_quasi_compact(&self, target: &BitSet) -> bool {
        if !self.is_open(target) {
            return false;
        }
        let inside: Vec<BitSet> = self.open_sets().into_iter().filter(|u| u.is_subset(target)).collect();
        Self::finite_subcover(target, &inside).is_some()
    }

    pub fn hochster(&self) -> HochsterReport {
        let full = BitSet::full(self.points);
        let qc: Vec<BitSet> = self
            .open_sets()
            .into_iter()
            .filter(|u| self.is_quasi_compact(u))
            .collect();
        let qc_set: HashSet<&BitSet> = qc.iter().collect();
        let qc_opens_intersection_closed = qc
            .iter()
            .all(|a| qc.iter().all(|b| qc_set.contains(&a.intersection(b))));
        let qc_opens_base = self.open_sets().iter().all(|u| {
            let mut union = BitSet::new(self.points);
            for b in qc.iter().filter(|b| b.is_subset(u)) {
                union.union_with(b);
            }
            union == *u
        });
        let sober = self
            .irreducible_closed_sets()
            .iter()
            .all(|c| self.generic_point(c).point.is_some());
        HochsterReport {
            quasi_compact: self.is_quasi_compact(&full),
            t0: self.is_t0(),
            qc_opens_intersection_closed,
            qc_opens_base,
            sober,
        }
    }

    pub fn profile(&self) -> TopologyProfile {
        let hochster = self.hochster();
        let irreducible_components = self.irreducible_components();
        let generic_points = self
            .irreducible_closed_sets()
            .iter()
            .map(|c| self.generic_point(c))
            .collect();
        TopologyProfile {
            is_t0: self.is_t0(),
            is_t1: self.is_t1(),
            is_connected: self.is_connected(),
            is_irreducible_space: self.is_irreducible(&BitSet::full(self.points)),
            is_noetherian: true,
            longest_chain: self.longest_descending_chain(),
            is_quasi_compact: hochster.quasi_compact,
            is_spectral: hochster.spectral(),
            hochster,
            irreducible_components,
            generic_points,
        }
    }
}

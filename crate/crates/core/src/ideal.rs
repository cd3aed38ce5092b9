//! Graded ideals: generation, enumeration, radicals and classification.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::error::{AlgebraError, Result};
use crate::ring::GradedRing;
use crate::span;

/// A graded ideal stored as its element set.
#[derive(Debug, Clone)]
pub struct GradedIdeal {
    elements: BitSet,
    generators: Option<Vec<usize>>,
}

impl PartialEq for GradedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for GradedIdeal {}

impl Hash for GradedIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl GradedIdeal {
    pub(crate) fn from_set(elements: BitSet) -> Self {
        GradedIdeal {
            elements,
            generators: None,
        }
    }

    pub fn zero(r: &GradedRing) -> Self {
        Self::from_set(BitSet::singleton(r.size(), 0))
    }

    pub fn whole(r: &GradedRing) -> Self {
        Self::from_set(BitSet::full(r.size()))
    }

    pub fn elements(&self) -> &BitSet {
        &self.elements
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.contains(a)
    }

    /// Never zero: zero is always a member.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.elements.count()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_proper(&self) -> bool {
        !self.elements.is_full()
    }

    pub fn is_subset(&self, other: &GradedIdeal) -> bool {
        self.elements.is_subset(&other.elements)
    }

    /// Generators the ideal was built from, if any.
    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }
}

/// `Ra`
pub fn principal(r: &GradedRing, a: usize) -> BitSet {
    BitSet::from_indices(r.size(), (0..r.size()).map(|x| r.mul(x, a)))
}

/// The smallest ideal containing the homogeneous elements `gens`.
pub fn ideal_generated_by(r: &GradedRing, gens: &[usize]) -> Result<GradedIdeal> {
    let mut set = BitSet::singleton(r.size(), 0);
    for &g in gens {
        if !r.is_homogeneous(g) {
            return Err(AlgebraError::NonHomogeneousGenerator(r.label(g).to_string()));
        }
        set = span::sum(r.add_table(), &set, &principal(r, g));
    }
    Ok(GradedIdeal {
        elements: set,
        generators: Some(gens.to_vec()),
    })
}

pub fn ideal_sum(r: &GradedRing, i: &GradedIdeal, j: &GradedIdeal) -> GradedIdeal {
    GradedIdeal::from_set(span::sum(r.add_table(), &i.elements, &j.elements))
}

pub fn ideal_intersection(i: &GradedIdeal, j: &GradedIdeal) -> GradedIdeal {
    GradedIdeal::from_set(i.elements.intersection(&j.elements))
}

/// Every graded ideal, as sums of principal ideals on homogeneous
/// elements, in canonical order (cardinality, then element list).
pub fn enumerate_graded_ideals(r: &GradedRing, cap: usize) -> Result<Vec<GradedIdeal>> {
    let mut cyclics: Vec<BitSet> = r
        .homogeneous_elements()
        .iter()
        .filter(|&a| a != 0)
        .map(|a| principal(r, a))
        .collect();
    cyclics.sort_by(BitSet::cmp_canonical);
    cyclics.dedup();
    let sets = span::all_sums(r.add_table(), r.size(), &cyclics, cap, "graded ideals")?;
    Ok(sets.into_iter().map(GradedIdeal::from_set).collect())
}

/// `Gr(I)`: elements each of whose homogeneous parts has a power in `I`.
pub fn graded_radical(r: &GradedRing, i: &GradedIdeal) -> GradedIdeal {
    let k = r.power_bound();
    let mut rooted = BitSet::new(r.size());
    for h in r.homogeneous_elements().iter() {
        if i.contains(r.pow(h, k)) {
            rooted.insert(h);
        }
    }
    let set = BitSet::from_indices(
        r.size(),
        (0..r.size()).filter(|&a| r.parts(a).all(|p| rooted.contains(p))),
    );
    GradedIdeal::from_set(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdealClass {
    pub proper: bool,
    pub graded_prime: bool,
    pub graded_quasi_primary: bool,
    pub graded_maximal: bool,
}

fn homogeneous_pairs_avoid(r: &GradedRing, inside: &BitSet, target: &BitSet) -> bool {
    let h: Vec<usize> = r.homogeneous_elements().iter().collect();
    for (n, &a) in h.iter().enumerate() {
        if target.contains(a) {
            continue;
        }
        for &b in &h[n..] {
            if !target.contains(b) && inside.contains(r.mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Graded prime: proper, and `ab ∈ I` forces `a ∈ I` or `b ∈ I` for
/// homogeneous `a`, `b`.
pub fn is_graded_prime(r: &GradedRing, i: &GradedIdeal) -> bool {
    i.is_proper() && homogeneous_pairs_avoid(r, &i.elements, &i.elements)
}

/// Classify `I`. Quasi-primary is decided on homogeneous pairs
/// (`ab ∈ I` forces `a` or `b` into `Gr(I)`) and compared with primality
/// of `Gr(I)`.
pub fn classify_graded_ideal(r: &GradedRing, i: &GradedIdeal) -> Result<IdealClass> {
    let proper = i.is_proper();
    let graded_prime = is_graded_prime(r, i);
    let rad = graded_radical(r, i);
    let qp_pairs = proper && homogeneous_pairs_avoid(r, &i.elements, &rad.elements);
    let qp_radical = is_graded_prime(r, &rad);
    if qp_pairs != qp_radical {
        return Err(AlgebraError::InternalInconsistency(format!(
            "quasi-primary routes disagree on {}",
            ideal_label(r, i)
        )));
    }
    let graded_maximal = proper
        && r.homogeneous_elements()
            .iter()
            .all(|a| i.contains(a) || span::sum(r.add_table(), &i.elements, &principal(r, a)).is_full());
    Ok(IdealClass {
        proper,
        graded_prime,
        graded_quasi_primary: qp_pairs,
        graded_maximal,
    })
}

/// Homogeneous generators chosen greedily, largest principal ideal first and
/// ties broken by index.
pub fn canonical_generators(r: &GradedRing, i: &GradedIdeal) -> Vec<usize> {
    let candidates = i
        .elements
        .iter()
        .filter(|&a| a != 0 && r.is_homogeneous(a))
        .map(|a| (a, principal(r, a)))
        .collect();
    span::greedy_generators(r.add_table(), &i.elements, candidates)
}

/// `(0)` for the zero ideal, otherwise `(g1;g2;...)` on canonical generators.
pub fn ideal_label(r: &GradedRing, i: &GradedIdeal) -> String {
    let gens = canonical_generators(r, i);
    if gens.is_empty() {
        return "(0)".to_string();
    }
    let inner: Vec<&str> = gens.iter().map(|&g| r.label(g)).collect();
    format!("({})", inner.join(";"))
}

/// `R/I` with its projection, for a proper graded ideal.
pub fn quotient_ring(r: &GradedRing, i: &GradedIdeal) -> Result<(GradedRing, Vec<usize>)> {
    if !i.is_proper() {
        return Err(AlgebraError::ImproperIdeal);
    }
    r.quotient_by(&i.elements)
}

/// All graded ideals of a ring with their radicals and classifications.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    pub ideals: Vec<GradedIdeal>,
    pub radical: Vec<usize>,
    pub class: Vec<IdealClass>,
    index: HashMap<BitSet, usize>,
}

impl IdealLattice {
    pub fn build(r: &GradedRing, cap: usize) -> Result<Self> {
        Self::from_ideals(r, enumerate_graded_ideals(r, cap)?)
    }

    pub(crate) fn from_ideals(r: &GradedRing, ideals: Vec<GradedIdeal>) -> Result<Self> {
        let index: HashMap<BitSet, usize> = ideals
            .iter()
            .enumerate()
            .map(|(k, i)| (i.elements.clone(), k))
            .collect();
        let mut radical = Vec::with_capacity(ideals.len());
        let mut class = Vec::with_capacity(ideals.len());
        for i in &ideals {
            let rad = graded_radical(r, i);
            let k = *index.get(&rad.elements).ok_or_else(|| {
                AlgebraError::InternalInconsistency(format!(
                    "radical of {} is not an enumerated graded ideal",
                    ideal_label(r, i)
                ))
            })?;
            radical.push(k);
            class.push(classify_graded_ideal(r, i)?);
        }
        Ok(IdealLattice {
            ideals,
            radical,
            class,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn find(&self, set: &BitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn primes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&k| self.class[k].graded_prime)
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.len() - 1
    }
}

//! Graded submodules: generation, enumeration, colon ideals, radicals and
//! classification.

use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::error::{AlgebraError, Result};
use crate::ideal::{GradedIdeal, IdealLattice};
use crate::module::GradedModule;
use crate::span;

/// A graded submodule stored as its element set.
#[derive(Debug, Clone)]
pub struct GradedSubmodule {
    elements: BitSet,
    generators: Option<Vec<usize>>,
}

impl PartialEq for GradedSubmodule {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for GradedSubmodule {}

impl Hash for GradedSubmodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

impl GradedSubmodule {
    pub(crate) fn from_set(elements: BitSet) -> Self {
        GradedSubmodule {
            elements,
            generators: None,
        }
    }

    pub fn zero(m: &GradedModule) -> Self {
        Self::from_set(BitSet::singleton(m.size(), 0))
    }

    pub fn whole(m: &GradedModule) -> Self {
        Self::from_set(BitSet::full(m.size()))
    }

    pub fn elements(&self) -> &BitSet {
        &self.elements
    }

    pub fn contains(&self, m: usize) -> bool {
        self.elements.contains(m)
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

    pub fn is_subset(&self, other: &GradedSubmodule) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn generators(&self) -> Option<&[usize]> {
        self.generators.as_deref()
    }
}

/// `Rm`
pub fn cyclic(m: &GradedModule, x: usize) -> BitSet {
    let r = m.ring();
    BitSet::from_indices(m.size(), (0..r.size()).map(|a| m.act(a, x)))
}

pub fn submodule_generated_by(m: &GradedModule, gens: &[usize]) -> Result<GradedSubmodule> {
    let mut set = BitSet::singleton(m.size(), 0);
    for &g in gens {
        if !m.is_homogeneous(g) {
            return Err(AlgebraError::NonHomogeneousGenerator(m.label(g).to_string()));
        }
        set = span::sum(m.add_table(), &set, &cyclic(m, g));
    }
    Ok(GradedSubmodule {
        elements: set,
        generators: Some(gens.to_vec()),
    })
}

pub fn submodule_sum(m: &GradedModule, a: &GradedSubmodule, b: &GradedSubmodule) -> GradedSubmodule {
    GradedSubmodule::from_set(span::sum(m.add_table(), &a.elements, &b.elements))
}

pub fn submodule_intersection(a: &GradedSubmodule, b: &GradedSubmodule) -> GradedSubmodule {
    GradedSubmodule::from_set(a.elements.intersection(&b.elements))
}

/// Every graded submodule, as sums of cyclic submodules on homogeneous
/// elements, in canonical order.
pub fn enumerate_graded_submodules(m: &GradedModule, cap: usize) -> Result<Vec<GradedSubmodule>> {
    let mut cyclics: Vec<BitSet> = m
        .homogeneous_elements()
        .iter()
        .filter(|&x| x != 0)
        .map(|x| cyclic(m, x))
        .collect();
    cyclics.sort_by(BitSet::cmp_canonical);
    cyclics.dedup();
    let sets = span::all_sums(m.add_table(), m.size(), &cyclics, cap, "graded submodules")?;
    Ok(sets.into_iter().map(GradedSubmodule::from_set).collect())
}

/// `(K :_R M)`, tested on the additive generators of `M`.
pub fn colon_ideal(m: &GradedModule, k: &GradedSubmodule) -> GradedIdeal {
    let r = m.ring();
    let gens = m.additive_generators();
    GradedIdeal::from_set(BitSet::from_indices(
        r.size(),
        (0..r.size()).filter(|&a| gens.iter().all(|&f| k.contains(m.act(a, f)))),
    ))
}

/// `Ann(M) = (0 :_R M)`
pub fn annihilator(m: &GradedModule) -> GradedIdeal {
    colon_ideal(m, &GradedSubmodule::zero(m))
}

/// `IM`, spanned by `a·f` for homogeneous `a ∈ I` and additive generators `f`.
pub fn ideal_times_module(m: &GradedModule, i: &GradedIdeal) -> GradedSubmodule {
    let r = m.ring();
    let mut set = BitSet::singleton(m.size(), 0);
    for a in i.elements().iter() {
        if !r.is_homogeneous(a) {
            continue;
        }
        for &f in m.additive_generators() {
            span::adjoin(m.add_table(), &mut set, m.act(a, f));
        }
    }
    GradedSubmodule::from_set(set)
}

/// Proper, and `rm ∈ P` forces `m ∈ P` or `rM ⊆ P` for homogeneous `r`, `m`.
pub fn is_graded_prime_submodule(m: &GradedModule, p: &GradedSubmodule) -> bool {
    if !p.is_proper() {
        return false;
    }
    let colon = colon_ideal(m, p);
    prime_given_colon(m, p, &colon)
}

fn prime_given_colon(m: &GradedModule, p: &GradedSubmodule, colon: &GradedIdeal) -> bool {
    let r = m.ring();
    let outside: Vec<usize> = m.homogeneous_elements().iter().filter(|&x| !p.contains(x)).collect();
    r.homogeneous_elements()
        .iter()
        .filter(|&a| !colon.contains(a))
        .all(|a| outside.iter().all(|&x| !p.contains(m.act(a, x))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubmoduleClass {
    pub proper: bool,
    pub graded_prime: bool,
    pub graded_quasi_primary: bool,
    pub graded_primeful: bool,
    pub maximal: bool,
    pub in_qp_spec: bool,
}

/// All graded submodules of a module with colon ideals, radicals and
/// classifications. Indices into `ideals` refer to the ring's lattice.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    pub submodules: Vec<GradedSubmodule>,
    /// Index of `(K :_R M)` in the ideal lattice.
    pub colon: Vec<usize>,
    /// Index of `Gr((K :_R M))` in the ideal lattice.
    pub colon_radical: Vec<usize>,
    /// Index of `Gr_M(K)`.
    pub radical: Vec<usize>,
    pub class: Vec<SubmoduleClass>,
    pub require_primeful: bool,
    index: HashMap<BitSet, usize>,
}

impl SubmoduleLattice {
    pub fn build(m: &GradedModule, ideals: &IdealLattice, cap: usize, require_primeful: bool) -> Result<Self> {
        Self::from_submodules(m, ideals, enumerate_graded_submodules(m, cap)?, require_primeful)
    }

    pub(crate) fn from_submodules(
        m: &GradedModule,
        ideals: &IdealLattice,
        submodules: Vec<GradedSubmodule>,
        require_primeful: bool,
    ) -> Result<Self> {
        let r = m.ring();
        let index: HashMap<BitSet, usize> = submodules
            .iter()
            .enumerate()
            .map(|(k, s)| (s.elements.clone(), k))
            .collect();
        let mut colon = Vec::with_capacity(submodules.len());
        let mut prime = Vec::with_capacity(submodules.len());
        for s in &submodules {
            let c = colon_ideal(m, s);
            let ci = ideals.find(c.elements()).ok_or_else(|| {
                AlgebraError::InternalInconsistency(format!(
                    "colon of {} is not an enumerated graded ideal",
                    submodule_label(m, s)
                ))
            })?;
            prime.push(s.is_proper() && prime_given_colon(m, s, &c));
            colon.push(ci);
        }
        let colon_radical: Vec<usize> = colon.iter().map(|&c| ideals.radical[c]).collect();
        let primes: Vec<usize> = (0..submodules.len()).filter(|&k| prime[k]).collect();

        let mut radical = Vec::with_capacity(submodules.len());
        for s in &submodules {
            let mut acc = BitSet::full(m.size());
            for &p in &primes {
                if s.is_subset(&submodules[p]) {
                    acc.intersect_with(&submodules[p].elements);
                }
            }
            radical.push(*index.get(&acc).ok_or_else(|| {
                AlgebraError::InternalInconsistency(format!(
                    "radical of {} is not an enumerated graded submodule",
                    submodule_label(m, s)
                ))
            })?);
        }

        let mut class = Vec::with_capacity(submodules.len());
        for (k, s) in submodules.iter().enumerate() {
            let proper = s.is_proper();
            let gr_colon = ideals.ideals[colon_radical[k]].elements();
            let gr_m = &submodules[radical[k]].elements;
            let h_ring: Vec<usize> = r.homogeneous_elements().iter().collect();
            let quasi_primary = proper
                && m.homogeneous_elements().iter().all(|x| {
                    gr_m.contains(x) || h_ring.iter().all(|&a| gr_colon.contains(a) || !s.contains(m.act(a, x)))
                });
            let primeful = ideals
                .primes()
                .filter(|&p| ideals.ideals[colon[k]].is_subset(&ideals.ideals[p]))
                .all(|p| primes.iter().any(|&q| colon[q] == p && s.is_subset(&submodules[q])));
            let maximal = proper
                && !submodules
                    .iter()
                    .any(|t| t.is_proper() && t.len() > s.len() && s.is_subset(t));
            class.push(SubmoduleClass {
                proper,
                graded_prime: prime[k],
                graded_quasi_primary: quasi_primary,
                graded_primeful: primeful,
                maximal,
                in_qp_spec: proper && quasi_primary && (primeful || !require_primeful),
            });
        }
        Ok(SubmoduleLattice {
            submodules,
            colon,
            colon_radical,
            radical,
            class,
            require_primeful,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.submodules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.submodules.is_empty()
    }

    pub fn find(&self, set: &BitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.len() - 1
    }

    /// `Gr_M(K)`
    pub fn graded_submodule_radical(&self, k: usize) -> &GradedSubmodule {
        &self.submodules[self.radical[k]]
    }

    pub fn graded_maximal_submodules(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.class[k].maximal).collect()
    }

    pub fn prime_submodules(&self) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.class[k].graded_prime).collect()
    }
}

/// `K = (K :_R M)M` for every graded submodule `K`.
pub fn is_multiplication_module(m: &GradedModule, lattice: &SubmoduleLattice) -> bool {
    lattice
        .submodules
        .iter()
        .all(|k| ideal_times_module(m, &colon_ideal(m, k)) == *k)
}

pub fn canonical_generators(m: &GradedModule, k: &GradedSubmodule) -> Vec<usize> {
    let candidates = k
        .elements
        .iter()
        .filter(|&x| x != 0 && m.is_homogeneous(x))
        .map(|x| (x, cyclic(m, x)))
        .collect();
    span::greedy_generators(m.add_table(), &k.elements, candidates)
}

/// `(0)` for the zero submodule, otherwise `(g1;g2;...)`.
pub fn submodule_label(m: &GradedModule, k: &GradedSubmodule) -> String {
    let gens = canonical_generators(m, k);
    if gens.is_empty() {
        return "(0)".to_string();
    }
    let inner: Vec<&str> = gens.iter().map(|&g| m.label(g)).collect();
    format!("({})", inner.join(";"))
}

//! Finite G-graded commutative rings with unity.
//!
//! Elements are dense indices `0..size`; index 0 is zero. Rings built from a
//! description carry a mixed-radix presentation and index order is the
//! lexicographic order of residue tuples. Quotient rings index cosets by
//! their least representative.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::BitSet;
use crate::desc::{GroupDesc, RingDesc};
use crate::error::{AlgebraError, Result};
use crate::group::FiniteGroup;
use crate::limits::Limits;
use crate::presentation::{tuple, Presentation};

/// Exhaustive axiom checks over all element triples run up to this size;
/// above it only generator-level checks run, which suffice by
/// multilinearity.
pub const EXHAUSTIVE_VALIDATION_LIMIT: usize = 256;

#[derive(Clone)]
pub struct GradedRing {
    group: FiniteGroup,
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    mul: Vec<u32>,
    parts: Vec<u32>,
    homogeneous: BitSet,
    components: Vec<BitSet>,
    one: usize,
    labels: Vec<String>,
    additive_generators: Vec<usize>,
    presentation: Option<Presentation>,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedRing")
            .field("group_order", &self.group.order())
            .field("size", &self.size)
            .field("one", &self.labels[self.one])
            .finish()
    }
}

/// Structure constants `e_i · e_j` on generator coordinates, with mirror
/// entries filled in for commutativity.
pub(crate) fn structure_constants(
    pres: &Presentation,
    group: &FiniteGroup,
    products: &[crate::desc::Product],
    target_pres: &Presentation,
    right_pres: &Presentation,
    mirror: bool,
) -> Result<HashMap<(usize, usize), usize>> {
    let mut explicit: HashMap<(usize, usize), usize> = HashMap::new();
    for p in products {
        if p.left.grade >= group.order() || p.right.grade >= group.order() {
            return Err(AlgebraError::IllFormedConstants(format!(
                "grade out of range in {}:{} * {}:{}",
                p.left.grade,
                tuple(&p.left.residues),
                p.right.grade,
                tuple(&p.right.residues)
            )));
        }
        let i = pres.generator_of(&p.left)?;
        let j = right_pres.generator_of(&p.right)?;
        let gh = group.op(p.left.grade, p.right.grade);
        let witness = format!(
            "{}:{} * {}:{}",
            p.left.grade,
            tuple(&p.left.residues),
            p.right.grade,
            tuple(&p.right.residues)
        );
        if let Some(t) = p.target {
            if t != gh {
                return Err(AlgebraError::GradingViolation {
                    g: p.left.grade,
                    h: p.right.grade,
                    witness: format!("{witness} declared in component {t}"),
                });
            }
        }
        let value = target_pres.embed(&crate::desc::Tagged {
            grade: gh,
            residues: p.value.clone(),
        })?;
        for d in [pres.order(i), right_pres.order(j)] {
            if target_pres.scale(value, d as u64) != 0 {
                return Err(AlgebraError::IllFormedConstants(format!(
                    "{witness} = {}: {d} times the product is not zero",
                    tuple(&p.value)
                )));
            }
        }
        if let Some(&old) = explicit.get(&(i, j)) {
            if old != value {
                return Err(AlgebraError::IllFormedConstants(format!(
                    "{witness} is given twice with different values"
                )));
            }
        }
        explicit.insert((i, j), value);
    }
    if !mirror {
        return Ok(explicit);
    }
    let mut all = explicit.clone();
    for (&(i, j), &v) in &explicit {
        match explicit.get(&(j, i)) {
            Some(&w) if w != v => {
                return Err(AlgebraError::NonCommutative(format!(
                    "generators {} and {}: {} != {}",
                    pres.label(pres.generator(i)),
                    pres.label(pres.generator(j)),
                    target_pres.label(v),
                    target_pres.label(w)
                )));
            }
            Some(_) => {}
            None => {
                all.insert((j, i), v);
            }
        }
    }
    Ok(all)
}

impl GradedRing {
    /// Validate a ring description against a grading group.
    pub fn from_desc(group: &GroupDesc, desc: &RingDesc, limits: &Limits) -> Result<Self> {
        if group.order() > limits.max_group {
            return Err(AlgebraError::BudgetExceeded {
                what: "grading group",
                cap: limits.max_group,
            });
        }
        let group = FiniteGroup::new(group.identity, &group.table)?;
        Self::build(group, desc, limits)
    }

    pub fn build(group: FiniteGroup, desc: &RingDesc, limits: &Limits) -> Result<Self> {
        for c in &desc.components {
            if c.grade >= group.order() {
                return Err(AlgebraError::IllFormedConstants(format!(
                    "component {} is not a group element",
                    c.grade
                )));
            }
        }
        let pres = Presentation::new(
            &desc.component_orders(group.order()),
            limits.max_carrier,
            "ring carrier",
        )?;
        let n = pres.size();
        let consts = structure_constants(&pres, &group, &desc.mul, &pres, &pres, true)?;
        let add = pres.add_table();
        let neg: Vec<u32> = (0..n).map(|a| pres.neg(a) as u32).collect();

        // rows[j][b] = e_j * b
        let rank = pres.rank();
        let mut rows = vec![vec![0u32; n]; rank];
        for (j, row) in rows.iter_mut().enumerate() {
            for b in 1..n {
                let k = pres.last_nonzero(b).expect("nonzero");
                let prev = row[b - pres.stride(k)] as usize;
                let c = consts.get(&(j, k)).copied().unwrap_or(0);
                row[b] = add[prev * n + c] as u32;
            }
        }
        let mut mul = vec![0u32; n * n];
        for a in 1..n {
            let j = pres.last_nonzero(a).expect("nonzero");
            let prev = a - pres.stride(j);
            for b in 0..n {
                let x = mul[prev * n + b] as usize;
                mul[a * n + b] = add[x * n + rows[j][b] as usize];
            }
        }

        let order = group.order();
        let mut parts = vec![0u32; n * order];
        let mut components = vec![BitSet::new(n); order];
        let mut homogeneous = BitSet::new(n);
        for a in 0..n {
            let mut nonzero = 0;
            for g in 0..order {
                let p = pres.restrict(a, g);
                parts[a * order + g] = p as u32;
                if p == a {
                    components[g].insert(a);
                }
                if p != 0 {
                    nonzero += 1;
                }
            }
            if nonzero <= 1 {
                homogeneous.insert(a);
            }
        }
        let generators: Vec<usize> = (0..rank)
            .filter(|&j| pres.order(j) > 1)
            .map(|j| pres.generator(j))
            .collect();
        let labels = (0..n).map(|a| pres.label(a)).collect();
        let one = pres.embed(&desc.one)?;
        let ring = GradedRing {
            group,
            size: n,
            add,
            neg,
            mul,
            parts,
            homogeneous,
            components,
            one,
            labels,
            additive_generators: generators,
            presentation: Some(pres),
        };
        ring.validate(desc.one.grade)?;
        Ok(ring)
    }

    fn validate(&self, one_grade: usize) -> Result<()> {
        let e = self.group.identity();
        if one_grade != e || !self.components[e].contains(self.one) {
            return Err(AlgebraError::BadUnity(format!(
                "{} is not in the identity component",
                self.label(self.one)
            )));
        }
        let exhaustive = self.size <= EXHAUSTIVE_VALIDATION_LIMIT;
        let probe: Vec<usize> = if exhaustive {
            (0..self.size).collect()
        } else {
            self.additive_generators.clone()
        };
        for a in 0..self.size {
            if self.mul(self.one, a) != a || self.mul(a, self.one) != a {
                return Err(AlgebraError::BadUnity(format!(
                    "{} * {} = {}",
                    self.label(self.one),
                    self.label(a),
                    self.label(self.mul(self.one, a))
                )));
            }
        }
        for &a in &probe {
            for &b in &probe {
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(AlgebraError::NonCommutative(format!(
                        "{} * {} != {} * {}",
                        self.label(a),
                        self.label(b),
                        self.label(b),
                        self.label(a)
                    )));
                }
            }
        }
        for &a in &probe {
            for &b in &probe {
                let ab = self.mul(a, b);
                for &c in &probe {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(AlgebraError::NonAssociative(format!(
                            "({}, {}, {})",
                            self.label(a),
                            self.label(b),
                            self.label(c)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `Z/n` with the trivial grading.
    pub fn cyclic(n: u32) -> Result<Self> {
        Self::build(FiniteGroup::trivial(), &RingDesc::cyclic(n), &Limits::default())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub(crate) fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    pub(crate) fn add_table(&self) -> &[u32] {
        &self.add
    }

    /// Homogeneous component of `a` in degree `g`.
    #[inline]
    pub fn part(&self, a: usize, g: usize) -> usize {
        self.parts[a * self.group.order() + g] as usize
    }

    /// Nonzero homogeneous parts of `a`.
    pub fn parts(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.group.order())
            .map(move |g| self.part(a, g))
            .filter(|&p| p != 0)
    }

    pub fn is_homogeneous(&self, a: usize) -> bool {
        self.homogeneous.contains(a)
    }

    /// The set of homogeneous elements.
    pub fn homogeneous_elements(&self) -> &BitSet {
        &self.homogeneous
    }

    pub fn component(&self, g: usize) -> &BitSet {
        &self.components[g]
    }

    /// Degree of a nonzero homogeneous element.
    pub fn degree(&self, a: usize) -> Option<usize> {
        if a == 0 || !self.is_homogeneous(a) {
            return None;
        }
        (0..self.group.order()).find(|&g| self.part(a, g) == a)
    }

    /// Homogeneous elements that generate the additive group.
    pub fn additive_generators(&self) -> &[usize] {
        &self.additive_generators
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn pow(&self, a: usize, mut k: usize) -> usize {
        let mut base = a;
        let mut acc = self.one;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// An exponent `K` such that `a^k ∈ I` for some `k` implies `a^K ∈ I`
    /// for every ideal `I`: the least index with that property is at most
    /// the size of the ring.
    pub fn power_bound(&self) -> usize {
        self.size.next_power_of_two()
    }

    pub fn is_nilpotent(&self, a: usize) -> bool {
        self.pow(a, self.power_bound()) == 0
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size).any(|b| self.mul(a, b) == self.one)
    }

    /// Quotient by a graded ideal given as an element set. The ideal may be
    /// the whole ring, which yields the zero ring.
    pub(crate) fn quotient_by(&self, ideal: &BitSet) -> Result<(GradedRing, Vec<usize>)> {
        let n = self.size;
        if !ideal.contains(0) {
            return Err(AlgebraError::InternalInconsistency("kernel misses zero".into()));
        }
        for x in ideal.iter() {
            for y in ideal.iter() {
                if !ideal.contains(self.add(x, y)) {
                    return Err(AlgebraError::InternalInconsistency(
                        "kernel is not additively closed".into(),
                    ));
                }
            }
            if (0..n).any(|r| !ideal.contains(self.mul(r, x))) {
                return Err(AlgebraError::InternalInconsistency(
                    "kernel does not absorb products".into(),
                ));
            }
            if self.parts(x).any(|p| !ideal.contains(p)) {
                return Err(AlgebraError::NonHomogeneous(format!(
                    "kernel is not graded at {}",
                    self.label(x)
                )));
            }
        }
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if proj[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for i in ideal.iter() {
                proj[self.add(x, i)] = c;
            }
        }
        let m = reps.len();
        let order = self.group.order();
        let mut add = vec![0u32; m * m];
        let mut mul = vec![0u32; m * m];
        for (a, &ra) in reps.iter().enumerate() {
            for (b, &rb) in reps.iter().enumerate() {
                add[a * m + b] = proj[self.add(ra, rb)] as u32;
                mul[a * m + b] = proj[self.mul(ra, rb)] as u32;
            }
        }
        let neg = reps.iter().map(|&r| proj[self.neg(r)] as u32).collect();
        let mut parts = vec![0u32; m * order];
        let mut components = vec![BitSet::new(m); order];
        let mut homogeneous = BitSet::new(m);
        for (a, &r) in reps.iter().enumerate() {
            let mut nonzero = 0;
            for g in 0..order {
                let p = proj[self.part(r, g)];
                parts[a * order + g] = p as u32;
                if p == a {
                    components[g].insert(a);
                }
                if p != 0 {
                    nonzero += 1;
                }
            }
            if nonzero <= 1 {
                homogeneous.insert(a);
            }
        }
        let mut generators: Vec<usize> = self
            .additive_generators
            .iter()
            .map(|&g| proj[g])
            .filter(|&g| g != 0)
            .collect();
        generators.sort_unstable();
        generators.dedup();
        let q = GradedRing {
            group: self.group.clone(),
            size: m,
            add,
            neg,
            mul,
            parts,
            homogeneous,
            components,
            one: proj[self.one],
            labels: reps.iter().map(|&r| self.labels[r].clone()).collect(),
            additive_generators: generators,
            presentation: None,
        };
        Ok((q, proj))
    }
}

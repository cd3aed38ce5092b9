//! Finite graded modules over a graded ring.

use std::fmt;
use std::sync::Arc;

use crate::bitset::BitSet;
use crate::desc::ModuleDesc;
use crate::error::{AlgebraError, Result};
use crate::limits::Limits;
use crate::presentation::Presentation;
use crate::ring::{structure_constants, GradedRing, EXHAUSTIVE_VALIDATION_LIMIT};

#[derive(Clone)]
pub struct GradedModule {
    ring: Arc<GradedRing>,
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    act: Vec<u32>,
    parts: Vec<u32>,
    homogeneous: BitSet,
    components: Vec<BitSet>,
    labels: Vec<String>,
    additive_generators: Vec<usize>,
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedModule")
            .field("ring", &self.ring)
            .field("size", &self.size)
            .finish()
    }
}

impl GradedModule {
    /// Validate a module description over `ring`.
    pub fn from_desc(ring: Arc<GradedRing>, desc: &ModuleDesc, limits: &Limits) -> Result<Self> {
        if desc.regular {
            return Ok(Self::regular(ring));
        }
        let group = ring.group().clone();
        for c in &desc.components {
            if c.grade >= group.order() {
                return Err(AlgebraError::IllFormedConstants(format!(
                    "module component {} is not a group element",
                    c.grade
                )));
            }
        }
        let pres = Presentation::new(
            &desc.component_orders(group.order()),
            limits.max_carrier,
            "module carrier",
        )?;
        let ring_pres = ring
            .presentation()
            .ok_or_else(|| AlgebraError::IllFormedConstants("ring has no generator presentation".into()))?;
        let consts = structure_constants(ring_pres, &group, &desc.act, &pres, &pres, false)?;
        let n = pres.size();
        let rn = ring.size();
        let add = pres.add_table();
        let neg = (0..n).map(|a| pres.neg(a) as u32).collect();

        // rows[j][m] = e_j · m
        let mut rows = vec![vec![0u32; n]; ring_pres.rank()];
        for (j, row) in rows.iter_mut().enumerate() {
            for m in 1..n {
                let k = pres.last_nonzero(m).expect("nonzero");
                let prev = row[m - pres.stride(k)] as usize;
                let c = consts.get(&(j, k)).copied().unwrap_or(0);
                row[m] = add[prev * n + c];
            }
        }
        let mut act = vec![0u32; rn * n];
        for r in 1..rn {
            let j = ring_pres.last_nonzero(r).expect("nonzero");
            let prev = r - ring_pres.stride(j);
            for m in 0..n {
                let x = act[prev * n + m] as usize;
                act[r * n + m] = add[x * n + rows[j][m] as usize];
            }
        }

        let order = group.order();
        let mut parts = vec![0u32; n * order];
        let mut components = vec![BitSet::new(n); order];
        let mut homogeneous = BitSet::new(n);
        for m in 0..n {
            let mut nonzero = 0;
            for g in 0..order {
                let p = pres.restrict(m, g);
                parts[m * order + g] = p as u32;
                if p == m {
                    components[g].insert(m);
                }
                if p != 0 {
                    nonzero += 1;
                }
            }
            if nonzero <= 1 {
                homogeneous.insert(m);
            }
        }
        let module = GradedModule {
            size: n,
            add,
            neg,
            act,
            parts,
            homogeneous,
            components,
            labels: (0..n).map(|m| pres.label(m)).collect(),
            additive_generators: (0..pres.rank())
                .filter(|&j| pres.order(j) > 1)
                .map(|j| pres.generator(j))
                .collect(),
            ring,
        };
        module.validate()?;
        Ok(module)
    }

    fn validate(&self) -> Result<()> {
        let r = &*self.ring;
        for m in 0..self.size {
            if self.act(r.one(), m) != m {
                return Err(AlgebraError::NotUnital(format!(
                    "{} · {} = {}",
                    r.label(r.one()),
                    self.label(m),
                    self.label(self.act(r.one(), m))
                )));
            }
        }
        let exhaustive = r.size() <= EXHAUSTIVE_VALIDATION_LIMIT && self.size <= EXHAUSTIVE_VALIDATION_LIMIT;
        let scalars: Vec<usize> = if exhaustive {
            (0..r.size()).collect()
        } else {
            r.additive_generators().to_vec()
        };
        let vectors: Vec<usize> = if exhaustive {
            (0..self.size).collect()
        } else {
            self.additive_generators.clone()
        };
        for &a in &scalars {
            for &b in &scalars {
                let ab = r.mul(a, b);
                for &m in &vectors {
                    if self.act(ab, m) != self.act(a, self.act(b, m)) {
                        return Err(AlgebraError::ActionNotAssociative(format!(
                            "({}, {}, {})",
                            r.label(a),
                            r.label(b),
                            self.label(m)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The ring as a module over itself.
    pub fn regular(ring: Arc<GradedRing>) -> Self {
        let r = &*ring;
        let n = r.size();
        let order = r.group().order();
        GradedModule {
            size: n,
            add: r.add_table().to_vec(),
            neg: (0..n).map(|a| r.neg(a) as u32).collect(),
            act: (0..n * n).map(|k| r.mul(k / n, k % n) as u32).collect(),
            parts: (0..n * order).map(|k| r.part(k / order, k % order) as u32).collect(),
            homogeneous: r.homogeneous_elements().clone(),
            components: (0..order).map(|g| r.component(g).clone()).collect(),
            labels: (0..n).map(|a| r.label(a).to_string()).collect(),
            additive_generators: r.additive_generators().to_vec(),
            ring,
        }
    }

    pub fn zero(ring: Arc<GradedRing>) -> Self {
        let order = ring.group().order();
        GradedModule {
            size: 1,
            add: vec![0],
            neg: vec![0],
            act: vec![0; ring.size()],
            parts: vec![0; order],
            homogeneous: BitSet::full(1),
            components: vec![BitSet::full(1); order],
            labels: vec!["0".to_string()],
            additive_generators: Vec::new(),
            ring,
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    /// `r · m`
    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.act[r * self.size + m] as usize
    }

    pub(crate) fn add_table(&self) -> &[u32] {
        &self.add
    }

    #[inline]
    pub fn part(&self, m: usize, g: usize) -> usize {
        self.parts[m * self.ring.group().order() + g] as usize
    }

    pub fn parts(&self, m: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.ring.group().order())
            .map(move |g| self.part(m, g))
            .filter(|&p| p != 0)
    }

    pub fn is_homogeneous(&self, m: usize) -> bool {
        self.homogeneous.contains(m)
    }

    pub fn homogeneous_elements(&self) -> &BitSet {
        &self.homogeneous
    }

    pub fn component(&self, g: usize) -> &BitSet {
        &self.components[g]
    }

    pub fn degree(&self, m: usize) -> Option<usize> {
        if m == 0 || !self.is_homogeneous(m) {
            return None;
        }
        (0..self.ring.group().order()).find(|&g| self.part(m, g) == m)
    }

    /// Homogeneous elements that generate the additive group.
    pub fn additive_generators(&self) -> &[usize] {
        &self.additive_generators
    }

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m]
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;
    use crate::desc::{ComponentDecl, Product, Tagged};

    /// `F2 ⊕ F2` over `F2`, trivially graded.
    pub fn plane() -> GradedModule {
        let r = Arc::new(GradedRing::cyclic(2).unwrap());
        let t = |v: Vec<u32>| Tagged { grade: 0, residues: v };
        let desc = ModuleDesc {
            regular: false,
            components: vec![ComponentDecl {
                grade: 0,
                orders: vec![2, 2],
            }],
            act: vec![
                Product {
                    left: t(vec![1]),
                    right: t(vec![1, 0]),
                    target: None,
                    value: vec![1, 0],
                },
                Product {
                    left: t(vec![1]),
                    right: t(vec![0, 1]),
                    target: None,
                    value: vec![0, 1],
                },
            ],
        };
        GradedModule::from_desc(r, &desc, &Limits::default()).unwrap()
    }
}

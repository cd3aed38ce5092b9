//! A ring and module together with everything the spectra are built from:
//! both lattices, the annihilator, and the quotient `R/Ann(M)`.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::error::{AlgebraError, Result};
use crate::ideal::{GradedIdeal, IdealLattice};
use crate::limits::Limits;
use crate::module::GradedModule;
use crate::ring::GradedRing;
use crate::submodule::{annihilator, SubmoduleLattice};

#[derive(Debug, Clone)]
pub struct ModuleContext {
    pub ring: Arc<GradedRing>,
    pub ideals: IdealLattice,
    pub module: GradedModule,
    pub submodules: SubmoduleLattice,
    /// Index of `Ann(M)` in `ideals`.
    pub ann: usize,
    /// `R/Ann(M)`; the zero ring when `M = 0`.
    pub bar: Arc<GradedRing>,
    pub proj: Vec<usize>,
    pub bar_ideals: IdealLattice,
}

impl ModuleContext {
    pub fn new(module: GradedModule, limits: &Limits, require_primeful: bool) -> Result<Self> {
        let ring = module.ring_arc().clone();
        let ideals = IdealLattice::build(&ring, limits.max_lattice)?;
        let submodules = SubmoduleLattice::build(&module, &ideals, limits.max_lattice, require_primeful)?;
        Self::assemble(ring, ideals, module, submodules, limits)
    }

    /// Build from lattices computed elsewhere, e.g. loaded from a cache.
    pub fn from_lattices(
        module: GradedModule,
        ideals: IdealLattice,
        submodules: SubmoduleLattice,
        limits: &Limits,
    ) -> Result<Self> {
        let ring = module.ring_arc().clone();
        Self::assemble(ring, ideals, module, submodules, limits)
    }

    fn assemble(
        ring: Arc<GradedRing>,
        ideals: IdealLattice,
        module: GradedModule,
        submodules: SubmoduleLattice,
        limits: &Limits,
    ) -> Result<Self> {
        let a = annihilator(&module);
        let ann = ideals
            .find(a.elements())
            .ok_or_else(|| AlgebraError::InternalInconsistency("annihilator is not an enumerated ideal".into()))?;
        let (bar, proj) = ring.quotient_by(a.elements())?;
        let bar_ideals = IdealLattice::build(&bar, limits.max_lattice)?;
        Ok(ModuleContext {
            ring,
            ideals,
            module,
            submodules,
            ann,
            bar: Arc::new(bar),
            proj,
            bar_ideals,
        })
    }

    /// Index in `bar_ideals` of the image of ideal `i` of `R`.
    pub fn project_ideal(&self, i: usize) -> usize {
        let set = BitSet::from_indices(
            self.bar.size(),
            self.ideals.ideals[i].elements().iter().map(|a| self.proj[a]),
        );
        self.bar_ideals
            .find(&set)
            .expect("image of a graded ideal is a graded ideal of the quotient")
    }

    /// Index in `ideals` of the full preimage of ideal `j` of `R/Ann(M)`.
    pub fn lift_ideal(&self, j: usize) -> usize {
        let target = self.bar_ideals.ideals[j].elements();
        let set = BitSet::from_indices(
            self.ring.size(),
            (0..self.ring.size()).filter(|&a| target.contains(self.proj[a])),
        );
        self.ideals
            .find(&set)
            .expect("preimage of a graded ideal is a graded ideal")
    }

    pub fn ideal(&self, i: usize) -> &GradedIdeal {
        &self.ideals.ideals[i]
    }
}

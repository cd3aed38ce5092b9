//! The natural maps between module spectra and spectra of `R/Ann(M)`.
//!
//! Every map is a plain assignment of point indices. Continuity, openness
//! and closedness are decided by iterating the explicit closed-set families,
//! never by appeal to the algebra.

use crate::bitset::BitSet;
use crate::context::ModuleContext;
use crate::error::Result;
use crate::spectrum::{SpectrumKind, SpectrumSpace, VarietySemantics};
use crate::topology::FiniteTopology;

/// A function between two finite spectra. `assignment[i]` is `None` when
/// the image of point `i` is not a point of the target; `failures` then
/// says why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumMap {
    pub name: &'static str,
    pub target_len: usize,
    pub assignment: Vec<Option<usize>>,
    pub failures: Vec<(usize, String)>,
}

impl SpectrumMap {
    fn new(name: &'static str, target_len: usize, assignment: Vec<Option<usize>>, why: &str) -> Self {
        let failures = assignment
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_none())
            .map(|(i, _)| (i, why.to_string()))
            .collect();
        SpectrumMap {
            name,
            target_len,
            assignment,
            failures,
        }
    }

    pub fn identity(name: &'static str, n: usize) -> Self {
        SpectrumMap::new(name, n, (0..n).map(Some).collect(), "")
    }

    pub fn source_len(&self) -> usize {
        self.assignment.len()
    }

    /// Every point has an image.
    pub fn is_total(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn image(&self, y: &BitSet) -> BitSet {
        BitSet::from_indices(self.target_len, y.iter().filter_map(|p| self.assignment[p]))
    }

    pub fn preimage(&self, z: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.source_len(),
            (0..self.source_len()).filter(|&p| self.assignment[p].is_some_and(|t| z.contains(t))),
        )
    }

    /// Source points with image `t`.
    pub fn fiber(&self, t: usize) -> BitSet {
        BitSet::from_indices(
            self.source_len(),
            (0..self.source_len()).filter(|&p| self.assignment[p] == Some(t)),
        )
    }

    pub fn is_injective(&self) -> bool {
        self.is_total() && self.first_collision().is_none()
    }

    /// Least pair of distinct points with the same image.
    pub fn first_collision(&self) -> Option<(usize, usize)> {
        let mut seen: Vec<Option<usize>> = vec![None; self.target_len];
        for (p, t) in self.assignment.iter().enumerate() {
            if let Some(t) = *t {
                if let Some(q) = seen[t] {
                    return Some((q, p));
                }
                seen[t] = Some(p);
            }
        }
        None
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&BitSet::full(self.source_len())).is_full()
    }

    /// `g ∘ self`.
    pub fn then(&self, name: &'static str, g: &SpectrumMap) -> SpectrumMap {
        let assignment = self
            .assignment
            .iter()
            .map(|a| a.and_then(|t| g.assignment[t]))
            .collect();
        SpectrumMap::new(name, g.target_len, assignment, "composition undefined")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MapProfile {
    pub total: bool,
    pub injective: bool,
    pub surjective: bool,
    pub continuous: bool,
    pub closed_map: bool,
    pub open_map: bool,
    pub homeomorphism: bool,
}

impl MapProfile {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective
    }
}

/// Profile of `f : (X, source) → (Y, target)`. A partial map has every
/// flag false except `total`'s honest value.
pub fn map_profile(f: &SpectrumMap, source: &FiniteTopology, target: &FiniteTopology) -> MapProfile {
    if !f.is_total() {
        return MapProfile::default();
    }
    let continuous = target.closed_sets().iter().all(|c| source.is_closed(&f.preimage(c)));
    let closed_map = source.closed_sets().iter().all(|c| target.is_closed(&f.image(c)));
    let open_map = source
        .closed_sets()
        .iter()
        .all(|c| target.is_open(&f.image(&c.complement())));
    let injective = f.is_injective();
    let surjective = f.is_surjective();
    MapProfile {
        total: true,
        injective,
        surjective,
        continuous,
        closed_map,
        open_map,
        // A continuous bijection is a homeomorphism iff its inverse is
        // continuous, i.e. iff it is closed.
        homeomorphism: injective && surjective && continuous && closed_map,
    }
}

/// The spectra involved in the natural maps, with their topologies.
#[derive(Debug, Clone)]
pub struct NaturalMaps {
    /// `qp.Spec_g(M)`
    pub qp_module: SpectrumSpace,
    /// `Spec_g(M)`
    pub spec_module: SpectrumSpace,
    /// `qp.Spec_g(R̄)`
    pub qp_bar: SpectrumSpace,
    /// `Spec_g(R̄)`
    pub spec_bar: SpectrumSpace,
    pub qp_module_top: FiniteTopology,
    pub spec_module_top: FiniteTopology,
    pub qp_bar_top: FiniteTopology,
    pub spec_bar_top: FiniteTopology,
    /// `Q ↦ (Q :_R M)` mod `Ann(M)`, into `qp.Spec_g(R̄)`.
    pub psi_q: SpectrumMap,
    /// `q̄ ↦ Gr(q̄)`, into `Spec_g(R̄)`.
    pub phi_r: SpectrumMap,
    /// `Q ↦ (Gr_M(Q) :_R M)` mod `Ann(M)`, into `Spec_g(R̄)`.
    pub phi: SpectrumMap,
    /// `phi_r ∘ psi_q`.
    pub phi_composed: SpectrumMap,
    /// `P ↦ (P :_R M)` mod `Ann(M)` on `Spec_g(M)`.
    pub psi: SpectrumMap,
}

impl NaturalMaps {
    /// `semantics` selects the ring-side qp-varieties of `qp.Spec_g(R̄)`.
    pub fn build(ctx: &ModuleContext, semantics: VarietySemantics) -> Result<Self> {
        let qp_module = SpectrumSpace::of_module(&ctx.module, &ctx.ideals, &ctx.submodules, SpectrumKind::QpModule)?;
        let spec_module =
            SpectrumSpace::of_module(&ctx.module, &ctx.ideals, &ctx.submodules, SpectrumKind::SpecModule)?;
        let qp_bar = SpectrumSpace::of_ring(&ctx.bar, &ctx.bar_ideals, SpectrumKind::QpRing, semantics)?;
        let spec_bar = SpectrumSpace::of_ring(&ctx.bar, &ctx.bar_ideals, SpectrumKind::SpecRing, semantics)?;
        let subs = &ctx.submodules;

        let psi_q = SpectrumMap::new(
            "psi_q",
            qp_bar.len(),
            qp_module
                .points
                .iter()
                .map(|&q| qp_bar.position(ctx.project_ideal(subs.colon[q])))
                .collect(),
            "colon is not quasi-primary modulo Ann(M)",
        );
        let phi_r = SpectrumMap::new(
            "phi_R",
            spec_bar.len(),
            qp_bar
                .points
                .iter()
                .map(|&q| spec_bar.position(ctx.bar_ideals.radical[q]))
                .collect(),
            "radical is not prime",
        );
        let phi = SpectrumMap::new(
            "phi",
            spec_bar.len(),
            qp_module
                .points
                .iter()
                .map(|&q| spec_bar.position(ctx.project_ideal(subs.colon[subs.radical[q]])))
                .collect(),
            "(Gr_M(Q):M) is not prime modulo Ann(M)",
        );
        let phi_composed = psi_q.then("phi_composed", &phi_r);
        let psi = SpectrumMap::new(
            "psi",
            spec_bar.len(),
            spec_module
                .points
                .iter()
                .map(|&p| spec_bar.position(ctx.project_ideal(subs.colon[p])))
                .collect(),
            "colon is not prime modulo Ann(M)",
        );

        Ok(NaturalMaps {
            qp_module_top: FiniteTopology::build(&qp_module),
            spec_module_top: FiniteTopology::build(&spec_module),
            qp_bar_top: FiniteTopology::build(&qp_bar),
            spec_bar_top: FiniteTopology::build(&spec_bar),
            qp_module,
            spec_module,
            qp_bar,
            spec_bar,
            psi_q,
            phi_r,
            phi,
            phi_composed,
            psi,
        })
    }

    pub fn phi_profile(&self) -> MapProfile {
        map_profile(&self.phi, &self.qp_module_top, &self.spec_bar_top)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleProfile {
    pub quasi_primaryful: bool,
    /// The zero submodule has the graded primeful property.
    pub graded_primeful_module: bool,
}

/// Decides quasi-primaryful by its quantifier: every graded quasi-primary
/// `q ⊇ Ann(M)` has `Gr(q)` realised as `Gr((Q :_R M))` by a point `Q`.
///
/// Containment and radical readings of `q ∈ qp-V(Ann(M))` produce the same
/// set of radicals `Gr(q)`, namely the graded primes over `Ann(M)`.
pub fn module_profile(ctx: &ModuleContext) -> ModuleProfile {
    let subs = &ctx.submodules;
    let realised: Vec<usize> = (0..subs.len())
        .filter(|&k| subs.class[k].in_qp_spec)
        .map(|k| subs.colon_radical[k])
        .collect();
    let ann = ctx.ideal(ctx.ann);
    let quasi_primaryful = ctx.module.is_zero()
        || (0..ctx.ideals.len())
            .filter(|&q| ctx.ideals.class[q].graded_quasi_primary && ann.is_subset(ctx.ideal(q)))
            .all(|q| realised.contains(&ctx.ideals.radical[q]));
    ModuleProfile {
        quasi_primaryful,
        graded_primeful_module: subs.class[subs.zero()].graded_primeful,
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::limits::Limits;
    use crate::module::tests_support::plane;
    use crate::module::GradedModule;
    use crate::ring::GradedRing;

    fn ctx(m: GradedModule) -> ModuleContext {
        ModuleContext::new(m, &Limits::default(), true).unwrap()
    }

    fn z(n: u32) -> ModuleContext {
        ctx(GradedModule::regular(Arc::new(GradedRing::cyclic(n).unwrap())))
    }

    #[test]
    fn z6_phi_is_a_homeomorphism() {
        let c = z(6);
        let maps = NaturalMaps::build(&c, VarietySemantics::Radical).unwrap();
        assert_eq!(maps.phi.assignment, maps.phi_composed.assignment);
        let p = maps.phi_profile();
        assert!(p.bijective() && p.continuous && p.closed_map && p.open_map && p.homeomorphism);
        assert!(module_profile(&c).quasi_primaryful);
    }

    #[test]
    fn dual_numbers_phi_collapses() {
        let (g, d) = crate::ring::tests_support::dual_numbers();
        let r = Arc::new(GradedRing::from_desc(&g, &d, &Limits::default()).unwrap());
        let c = ctx(GradedModule::regular(r));
        let maps = NaturalMaps::build(&c, VarietySemantics::Radical).unwrap();
        assert_eq!(maps.phi.assignment, [Some(0), Some(0)]);
        let p = maps.phi_profile();
        assert!(!p.injective && p.surjective && p.continuous);
    }

    #[test]
    fn plane_phi_not_injective() {
        let c = ctx(plane());
        let maps = NaturalMaps::build(&c, VarietySemantics::Radical).unwrap();
        assert_eq!(maps.phi.fiber(0).count(), 4);
        let p = maps.phi_profile();
        assert!(!p.injective && p.continuous);
        assert!(module_profile(&c).quasi_primaryful);
    }

    #[test]
    fn zero_module_is_quasi_primaryful() {
        let r = Arc::new(GradedRing::cyclic(4).unwrap());
        let c = ctx(GradedModule::zero(r));
        let maps = NaturalMaps::build(&c, VarietySemantics::Radical).unwrap();
        assert!(maps.qp_module.is_empty() && maps.spec_bar.is_empty());
        assert!(module_profile(&c).quasi_primaryful);
    }

    #[test]
    fn identity_profile() {
        let t = FiniteTopology::from_closed_sets(2, [BitSet::new(2), BitSet::singleton(2, 0), BitSet::full(2)]);
        let p = map_profile(&SpectrumMap::identity("id", 2), &t, &t);
        assert!(p.total && p.bijective() && p.continuous && p.closed_map && p.open_map && p.homeomorphism);
    }
}

//! The four spectra as finite point sets, with variety operators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{AlgebraError, Result};
use crate::ideal::{ideal_label, principal, IdealLattice};
use crate::module::GradedModule;
use crate::ring::GradedRing;
use crate::submodule::{submodule_label, SubmoduleLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpectrumKind {
    SpecRing,
    QpRing,
    SpecModule,
    QpModule,
}

impl SpectrumKind {
    pub fn is_module(self) -> bool {
        matches!(self, SpectrumKind::SpecModule | SpectrumKind::QpModule)
    }

    pub fn name(self) -> &'static str {
        match self {
            SpectrumKind::SpecRing => "spec-ring",
            SpectrumKind::QpRing => "qp-ring",
            SpectrumKind::SpecModule => "spec-module",
            SpectrumKind::QpModule => "qp-module",
        }
    }
}

impl fmt::Display for SpectrumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SpectrumKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "spec-ring" => Ok(SpectrumKind::SpecRing),
            "qp-ring" => Ok(SpectrumKind::QpRing),
            "spec-module" => Ok(SpectrumKind::SpecModule),
            "qp-module" => Ok(SpectrumKind::QpModule),
            _ => Err(format!("unknown spectrum kind `{s}`")),
        }
    }
}

/// How ring quasi-primary varieties compare a point `q` with a seed `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum VarietySemantics {
    /// `Gr(q) ⊇ Gr(I)`
    #[default]
    Radical,
    /// `q ⊇ I`
    Containment,
}

impl VarietySemantics {
    pub fn name(self) -> &'static str {
        match self {
            VarietySemantics::Radical => "radical",
            VarietySemantics::Containment => "containment",
        }
    }

    pub fn other(self) -> Self {
        match self {
            VarietySemantics::Radical => VarietySemantics::Containment,
            VarietySemantics::Containment => VarietySemantics::Radical,
        }
    }
}

impl fmt::Display for VarietySemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VarietySemantics {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "radical" => Ok(VarietySemantics::Radical),
            "containment" => Ok(VarietySemantics::Containment),
            _ => Err(format!("unknown variety semantics `{s}`")),
        }
    }
}

/// A spectrum: its points are indices into an ideal or submodule lattice.
/// Varieties are precomputed for every seed of the lattice.
#[derive(Debug, Clone)]
pub struct SpectrumSpace {
    pub kind: SpectrumKind,
    pub semantics: VarietySemantics,
    /// Lattice index of each point, in canonical order.
    pub points: Vec<usize>,
    /// Element sets of the points.
    pub point_sets: Vec<BitSet>,
    /// `Gr(q)` for ring points, `Gr((Q :_R M))` for module points, as
    /// indices into the ideal lattice.
    pub radicals: Vec<usize>,
    pub labels: Vec<String>,
    /// `varieties[s]` is the variety of lattice element `s`.
    varieties: Vec<BitSet>,
    /// Size of the underlying ring or module.
    carrier: usize,
}

impl SpectrumSpace {
    /// `Spec_g(R)` or `qp.Spec_g(R)`.
    pub fn of_ring(
        r: &GradedRing,
        ideals: &IdealLattice,
        kind: SpectrumKind,
        semantics: VarietySemantics,
    ) -> Result<Self> {
        let keep = |k: usize| match kind {
            SpectrumKind::SpecRing => Ok(ideals.class[k].graded_prime),
            SpectrumKind::QpRing => Ok(ideals.class[k].graded_quasi_primary),
            _ => Err(AlgebraError::KindMismatch(format!("{kind} is not a ring spectrum"))),
        };
        let mut points = Vec::new();
        for k in 0..ideals.len() {
            if keep(k)? {
                points.push(k);
            }
        }
        // Key ideal compared by containment.
        let key = |k: usize| match (kind, semantics) {
            (SpectrumKind::QpRing, VarietySemantics::Radical) => ideals.radical[k],
            _ => k,
        };
        let varieties = (0..ideals.len())
            .map(|s| {
                let seed = ideals.ideals[key(s)].elements();
                BitSet::from_indices(
                    points.len(),
                    (0..points.len()).filter(|&p| seed.is_subset(ideals.ideals[key(points[p])].elements())),
                )
            })
            .collect();
        Ok(SpectrumSpace {
            kind,
            semantics,
            point_sets: points.iter().map(|&k| ideals.ideals[k].elements().clone()).collect(),
            radicals: points.iter().map(|&k| ideals.radical[k]).collect(),
            labels: points.iter().map(|&k| ideal_label(r, &ideals.ideals[k])).collect(),
            points,
            varieties,
            carrier: r.size(),
        })
    }

    /// `Spec_g(M)` or `qp.Spec_g(M)`.
    pub fn of_module(
        m: &GradedModule,
        ideals: &IdealLattice,
        subs: &SubmoduleLattice,
        kind: SpectrumKind,
    ) -> Result<Self> {
        let points: Vec<usize> = match kind {
            SpectrumKind::SpecModule => subs.prime_submodules(),
            SpectrumKind::QpModule => (0..subs.len()).filter(|&k| subs.class[k].in_qp_spec).collect(),
            _ => return Err(AlgebraError::KindMismatch(format!("{kind} is not a module spectrum"))),
        };
        let key = |k: usize| match kind {
            SpectrumKind::SpecModule => subs.colon[k],
            _ => subs.colon_radical[k],
        };
        let varieties = (0..subs.len())
            .map(|s| {
                let seed = ideals.ideals[key(s)].elements();
                BitSet::from_indices(
                    points.len(),
                    (0..points.len()).filter(|&p| seed.is_subset(ideals.ideals[key(points[p])].elements())),
                )
            })
            .collect();
        Ok(SpectrumSpace {
            kind,
            semantics: VarietySemantics::Radical,
            point_sets: points.iter().map(|&k| subs.submodules[k].elements().clone()).collect(),
            radicals: points.iter().map(|&k| subs.colon_radical[k]).collect(),
            labels: points
                .iter()
                .map(|&k| submodule_label(m, &subs.submodules[k]))
                .collect(),
            points,
            varieties,
            carrier: m.size(),
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of seeds (lattice elements) varieties are defined for.
    pub fn seed_count(&self) -> usize {
        self.varieties.len()
    }

    /// Variety of the lattice element `seed`.
    pub fn variety(&self, seed: usize) -> &BitSet {
        &self.varieties[seed]
    }

    pub fn varieties(&self) -> &[BitSet] {
        &self.varieties
    }

    pub fn full(&self) -> BitSet {
        BitSet::full(self.len())
    }

    /// Position of lattice element `k` among the points.
    pub fn position(&self, k: usize) -> Option<usize> {
        self.points.binary_search(&k).ok()
    }

    /// `ℑ(Y)`: intersection of the points of `Y` as an element set; the
    /// whole carrier when `Y` is empty.
    pub fn intersection_of_points(&self, y: &BitSet) -> BitSet {
        let mut acc = BitSet::full(self.carrier);
        for p in y.iter() {
            acc.intersect_with(&self.point_sets[p]);
        }
        acc
    }

    /// Points whose radical is ideal `p`.
    pub fn fiber(&self, p: usize) -> BitSet {
        BitSet::from_indices(self.len(), (0..self.len()).filter(|&i| self.radicals[i] == p))
    }

    /// Canonical print of a point set: `{p1,p2}`.
    pub fn subset_label(&self, y: &BitSet) -> String {
        let inner: Vec<&str> = y.iter().map(|p| self.labels[p].as_str()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// `rM` for homogeneous `r`, as a lattice index.
pub fn scaled_module(m: &GradedModule, subs: &SubmoduleLattice, r: usize) -> Result<usize> {
    if !m.ring().is_homogeneous(r) {
        return Err(AlgebraError::NonHomogeneous(m.ring().label(r).to_string()));
    }
    let set = BitSet::from_indices(m.size(), (0..m.size()).map(|x| m.act(r, x)));
    subs.find(&set)
        .ok_or_else(|| AlgebraError::InternalInconsistency("rM is not an enumerated submodule".into()))
}

/// `rR` for homogeneous `r`, as a lattice index.
pub fn scaled_ring(ring: &GradedRing, ideals: &IdealLattice, r: usize) -> Result<usize> {
    if !ring.is_homogeneous(r) {
        return Err(AlgebraError::NonHomogeneous(ring.label(r).to_string()));
    }
    ideals
        .find(&principal(ring, r))
        .ok_or_else(|| AlgebraError::InternalInconsistency("rR is not an enumerated ideal".into()))
}

/// `GX_r`: the complement of the variety of `rM` (module spaces) or `rR`
/// (ring spaces).
pub fn basic_open_module(space: &SpectrumSpace, m: &GradedModule, subs: &SubmoduleLattice, r: usize) -> Result<BitSet> {
    if !space.kind.is_module() {
        return Err(AlgebraError::KindMismatch(format!(
            "{} is not a module spectrum",
            space.kind
        )));
    }
    Ok(space.variety(scaled_module(m, subs, r)?).complement())
}

pub fn basic_open_ring(space: &SpectrumSpace, ring: &GradedRing, ideals: &IdealLattice, r: usize) -> Result<BitSet> {
    if space.kind.is_module() {
        return Err(AlgebraError::KindMismatch(format!(
            "{} is not a ring spectrum",
            space.kind
        )));
    }
    Ok(space.variety(scaled_ring(ring, ideals, r)?).complement())
}

/// Zqp-radical of submodule `k`: the intersection of the points of
/// `qp.Spec_g(M)` in its variety, as an element set.
pub fn zqp_radical(space: &SpectrumSpace, k: usize) -> BitSet {
    space.intersection_of_points(space.variety(k))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::context::ModuleContext;
    use crate::limits::Limits;
    use crate::module::tests_support::plane;

    fn ctx(m: GradedModule) -> ModuleContext {
        ModuleContext::new(m, &Limits::default(), true).unwrap()
    }

    fn dual() -> ModuleContext {
        let (g, d) = crate::ring::tests_support::dual_numbers();
        let r = Arc::new(GradedRing::from_desc(&g, &d, &Limits::default()).unwrap());
        ctx(GradedModule::regular(r))
    }

    fn z(n: u32) -> ModuleContext {
        ctx(GradedModule::regular(Arc::new(GradedRing::cyclic(n).unwrap())))
    }

    #[test]
    fn dual_number_spectra() {
        let c = dual();
        let qp = SpectrumSpace::of_ring(&c.ring, &c.ideals, SpectrumKind::QpRing, VarietySemantics::Radical).unwrap();
        assert_eq!(qp.labels, ["(0)", "(0,1)"]);
        let sp = SpectrumSpace::of_ring(&c.ring, &c.ideals, SpectrumKind::SpecRing, VarietySemantics::Radical).unwrap();
        assert_eq!(sp.labels, ["(0,1)"]);
        let qm = SpectrumSpace::of_module(&c.module, &c.ideals, &c.submodules, SpectrumKind::QpModule).unwrap();
        assert_eq!(qm.labels, ["(0)", "(0,1)"]);
        assert!(qm.variety(0).is_full());
        assert!(qm.variety(c.submodules.whole()).is_empty());
        assert!(zqp_radical(&qm, 0).count() == 1);
    }

    #[test]
    fn z6_spectrum_and_basic_opens() {
        let c = z(6);
        let qm = SpectrumSpace::of_module(&c.module, &c.ideals, &c.submodules, SpectrumKind::QpModule).unwrap();
        assert_eq!(qm.labels, ["(3)", "(2)"]);
        let gx2 = basic_open_module(&qm, &c.module, &c.submodules, 2).unwrap();
        assert_eq!(qm.subset_label(&gx2), "{(3)}");
        assert!(basic_open_module(&qm, &c.module, &c.submodules, 0).unwrap().is_empty());
        assert!(basic_open_module(&qm, &c.module, &c.submodules, 1).unwrap().is_full());
        let all = qm.full();
        assert_eq!(qm.intersection_of_points(&all).count(), 1);
        assert_eq!(qm.intersection_of_points(&BitSet::new(2)).count(), 6);
    }

    #[test]
    fn plane_spectrum() {
        let c = ctx(plane());
        let qm = SpectrumSpace::of_module(&c.module, &c.ideals, &c.submodules, SpectrumKind::QpModule).unwrap();
        assert_eq!(qm.len(), 4);
        let sm = SpectrumSpace::of_module(&c.module, &c.ideals, &c.submodules, SpectrumKind::SpecModule).unwrap();
        assert_eq!(sm.len(), 4);
        assert_eq!(qm.fiber(0).count(), 4);
    }

    #[test]
    fn kind_mismatch() {
        let c = z(4);
        assert!(matches!(
            SpectrumSpace::of_ring(&c.ring, &c.ideals, SpectrumKind::QpModule, VarietySemantics::Radical),
            Err(AlgebraError::KindMismatch(_))
        ));
        let qr = SpectrumSpace::of_ring(&c.ring, &c.ideals, SpectrumKind::QpRing, VarietySemantics::Radical).unwrap();
        assert!(basic_open_module(&qr, &c.module, &c.submodules, 1).is_err());
    }
}

//! The theorem-check catalog.
//!
//! Each check recomputes both sides of its claim from the lattices and the
//! explicit topologies. Implications whose hypothesis fails on an instance
//! are reported as skipped; biconditionals always run.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::context::ModuleContext;
use crate::error::Result;
use crate::ideal::{ideal_label, ideal_sum};
use crate::maps::{map_profile, module_profile, ModuleProfile, NaturalMaps};
use crate::spectrum::{basic_open_module, scaled_ring, zqp_radical, SpectrumKind, SpectrumSpace, VarietySemantics};
use crate::submodule::{ideal_times_module, is_multiplication_module, submodule_intersection, submodule_label};
use crate::topology::FiniteTopology;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Outcome {
            status: Status::Fail,
            witness: Some(witness.into()),
            notes: Vec::new(),
        }
    }

    pub fn skipped(hypothesis: &str) -> Self {
        Outcome {
            status: Status::Skipped,
            witness: None,
            notes: vec![format!("hypothesis:{hypothesis}")],
        }
    }

    /// Pass when there is no counterexample.
    pub fn from_witness(w: Option<String>) -> Self {
        w.map_or_else(Outcome::pass, Outcome::fail)
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

/// How subset-quantified checks pick their subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    /// All `2^n` subsets are used when `n` is at most this.
    pub exhaustive_up_to: usize,
    /// Random subsets drawn otherwise, on top of the empty set, the full set
    /// and all singletons.
    pub samples: usize,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling {
            seed: 0x5EED,
            exhaustive_up_to: 12,
            samples: 4096,
        }
    }
}

impl Sampling {
    pub fn describe(&self) -> String {
        format!(
            "all subsets up to {} points, else {} ChaCha8 subsets from seed {:#x}",
            self.exhaustive_up_to, self.samples, self.seed
        )
    }

    pub fn subsets(&self, n: usize) -> Vec<BitSet> {
        if n == 0 {
            return vec![BitSet::new(0)];
        }
        if n <= self.exhaustive_up_to {
            return (0u64..1 << n)
                .map(|mask| BitSet::from_words(n, vec![mask]).expect("mask fits"))
                .collect();
        }
        let mut out = vec![BitSet::new(n), BitSet::full(n)];
        out.extend((0..n).map(|p| BitSet::singleton(n, p)));
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ n as u64);
        for _ in 0..self.samples {
            out.push(BitSet::from_indices(n, (0..n).filter(|_| rng.gen::<bool>())));
        }
        out
    }
}

/// Everything the checks of one instance share. All of it is derived from
/// the module context; no check result feeds another.
pub struct Env<'a> {
    pub ctx: &'a ModuleContext,
    pub semantics: VarietySemantics,
    pub sampling: Sampling,
    pub maps: NaturalMaps,
    /// `qp.Spec_g(R)` under `semantics` and under the other reading.
    pub ring_qp: [(SpectrumSpace, FiniteTopology); 2],
    pub ring_spec: (SpectrumSpace, FiniteTopology),
    pub profile: ModuleProfile,
    pub multiplication: bool,
    /// Lattice index of `IM` for every ideal `I`.
    pub ideal_times: Vec<usize>,
    homogeneous: Vec<usize>,
}

impl<'a> Env<'a> {
    pub fn new(ctx: &'a ModuleContext, semantics: VarietySemantics, sampling: Sampling) -> Result<Self> {
        let ring_space = |s| -> Result<(SpectrumSpace, FiniteTopology)> {
            let sp = SpectrumSpace::of_ring(&ctx.ring, &ctx.ideals, SpectrumKind::QpRing, s)?;
            let top = FiniteTopology::build(&sp);
            Ok((sp, top))
        };
        let spec = SpectrumSpace::of_ring(&ctx.ring, &ctx.ideals, SpectrumKind::SpecRing, semantics)?;
        let spec_top = FiniteTopology::build(&spec);
        let ideal_times = ctx
            .ideals
            .ideals
            .iter()
            .map(|i| {
                let k = ideal_times_module(&ctx.module, i);
                ctx.submodules.find(k.elements()).expect("IM is a graded submodule")
            })
            .collect();
        Ok(Env {
            ctx,
            semantics,
            sampling,
            maps: NaturalMaps::build(ctx, semantics)?,
            ring_qp: [ring_space(semantics)?, ring_space(semantics.other())?],
            ring_spec: (spec, spec_top),
            profile: module_profile(ctx),
            multiplication: is_multiplication_module(&ctx.module, &ctx.submodules),
            ideal_times,
            homogeneous: ctx.ring.homogeneous_elements().iter().collect(),
        })
    }

    fn x(&self) -> &SpectrumSpace {
        &self.maps.qp_module
    }

    fn top(&self) -> &FiniteTopology {
        &self.maps.qp_module_top
    }

    fn v(&self, k: usize) -> &BitSet {
        self.x().variety(k)
    }

    fn subs(&self) -> usize {
        self.ctx.submodules.len()
    }

    fn sub_label(&self, k: usize) -> String {
        submodule_label(&self.ctx.module, &self.ctx.submodules.submodules[k])
    }

    fn ideal_label(&self, i: usize) -> String {
        ideal_label(&self.ctx.ring, &self.ctx.ideals.ideals[i])
    }

    fn bar_label(&self, j: usize) -> String {
        ideal_label(&self.ctx.bar, &self.ctx.bar_ideals.ideals[j])
    }

    fn pair(a: String, b: String) -> String {
        format!("({a},{b})")
    }

    fn ideal(&self, i: usize) -> &BitSet {
        self.ctx.ideals.ideals[i].elements()
    }

    /// `Gr((K :_R M))` as an ideal index.
    fn gr_colon(&self, k: usize) -> usize {
        self.ctx.submodules.colon_radical[k]
    }

    fn sum_index(&self, i: usize, j: usize) -> usize {
        let s = ideal_sum(&self.ctx.ring, &self.ctx.ideals.ideals[i], &self.ctx.ideals.ideals[j]);
        self.ctx
            .ideals
            .find(s.elements())
            .expect("sum of graded ideals is graded")
    }

    /// Lattice index of `ℑ(Y)`.
    fn meet_of(&self, y: &BitSet) -> usize {
        let set = self.x().intersection_of_points(y);
        self.ctx
            .submodules
            .find(&set)
            .expect("intersection of graded submodules is graded")
    }

    /// `GX_r` in `qp.Spec_g(M)`.
    fn gx(&self, r: usize) -> BitSet {
        basic_open_module(self.x(), &self.ctx.module, &self.ctx.submodules, r).expect("r is homogeneous")
    }

    /// Module points that are maximal among the points by inclusion.
    fn maximal_points(&self) -> BitSet {
        let x = self.x();
        BitSet::from_indices(
            x.len(),
            (0..x.len()).filter(|&p| !(0..x.len()).any(|q| q != p && x.point_sets[p].is_subset(&x.point_sets[q]))),
        )
    }

    fn bar_minimal_primes(&self) -> Vec<usize> {
        minimal_primes(&self.ctx.bar_ideals.primes().collect::<Vec<_>>(), |i| {
            self.ctx.bar_ideals.ideals[i].elements()
        })
    }

    fn subsets(&self, n: usize) -> Vec<BitSet> {
        self.sampling.subsets(n)
    }
}

fn minimal_primes<'b>(primes: &[usize], set: impl Fn(usize) -> &'b BitSet) -> Vec<usize> {
    primes
        .iter()
        .copied()
        .filter(|&p| !primes.iter().any(|&q| q != p && set(q).is_subset(set(p))))
        .collect()
}

fn flag(name: &str, v: bool) -> String {
    format!("{name}={v}")
}

fn all_equal(values: &[bool]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// Length of the longest strict chain in a finite family ordered by
/// inclusion.
fn longest_chain(family: &[BitSet]) -> usize {
    let mut order: Vec<usize> = (0..family.len()).collect();
    order.sort_by_key(|&i| family[i].count());
    let mut best = vec![1usize; family.len()];
    for (a, &i) in order.iter().enumerate() {
        for &j in &order[..a] {
            if family[j].count() < family[i].count() && family[j].is_subset(&family[i]) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

// ---------------------------------------------------------------- §3 checks

fn t3_1(e: &Env) -> Outcome {
    let subs = &e.ctx.submodules;
    if !e.v(subs.zero()).is_full() {
        return Outcome::fail("V(0)");
    }
    if !e.v(subs.whole()).is_empty() {
        return Outcome::fail("V(M)");
    }
    let n = e.subs();
    for a in 0..n {
        for b in a..n {
            let meet = submodule_intersection(&subs.submodules[a], &subs.submodules[b]);
            let k = subs.find(meet.elements()).expect("graded");
            if e.v(a).union(e.v(b)) != *e.v(k) {
                return Outcome::fail(Env::pair(e.sub_label(a), e.sub_label(b)));
            }
        }
    }
    // Families of seeds: V(K_1) ∩ ... = V((Σ (K_i : M)) M).
    for family in e.subsets(n) {
        let mut lhs = e.x().full();
        let mut sum = e.ctx.ideals.zero();
        for k in family.iter() {
            lhs.intersect_with(e.v(k));
            sum = e.sum_index(sum, subs.colon[k]);
        }
        if lhs != *e.v(e.ideal_times[sum]) {
            let labels: Vec<String> = family.iter().map(|k| e.sub_label(k)).collect();
            return Outcome::fail(format!("{{{}}}", labels.join(",")));
        }
    }
    let axioms = e.top().axiom_report();
    if !axioms.holds() {
        return Outcome::fail("closed-family-axioms");
    }
    Outcome::pass()
}

fn p3_2_1(e: &Env) -> Outcome {
    let subs = &e.ctx.submodules;
    for n in 0..e.subs() {
        for k in 0..e.subs() {
            if subs.submodules[n].is_subset(&subs.submodules[k]) && !e.v(k).is_subset(e.v(n)) {
                return Outcome::fail(Env::pair(e.sub_label(n), e.sub_label(k)));
            }
        }
    }
    Outcome::pass()
}

fn p3_2_2(e: &Env) -> Outcome {
    let subs = &e.ctx.submodules;
    for k in 0..e.subs() {
        let gr = subs.radical[k];
        if !e.v(gr).is_subset(e.v(k)) {
            return Outcome::fail(e.sub_label(k));
        }
        if e.multiplication && e.v(gr) != e.v(k) {
            return Outcome::fail(e.sub_label(k)).note("equality:multiplication");
        }
    }
    Outcome::pass().note(flag("multiplication", e.multiplication))
}

fn p3_2_3(e: &Env) -> Outcome {
    Outcome::from_witness(
        (0..e.subs())
            .find(|&k| e.v(k) != e.v(e.ideal_times[e.gr_colon(k)]))
            .map(|k| e.sub_label(k)),
    )
}

fn p3_2_4(e: &Env) -> Outcome {
    let n = e.subs();
    for k in 0..n {
        for l in k + 1..n {
            if e.gr_colon(k) == e.gr_colon(l) && e.v(k) != e.v(l) {
                return Outcome::fail(Env::pair(e.sub_label(k), e.sub_label(l)));
            }
        }
    }
    let x = e.x();
    for p in 0..x.len() {
        for q in p + 1..x.len() {
            if e.v(x.points[p]) == e.v(x.points[q]) && x.radicals[p] != x.radicals[q] {
                return Outcome::fail(Env::pair(x.labels[p].clone(), x.labels[q].clone())).note("converse");
            }
        }
    }
    Outcome::pass()
}

fn p3_2_5(e: &Env) -> Outcome {
    let primes: Vec<usize> = e.ctx.ideals.primes().collect();
    for k in 0..e.subs() {
        let colon = e.ideal(e.ctx.submodules.colon[k]);
        let mut union = BitSet::new(e.x().len());
        for &p in primes.iter().filter(|&&p| colon.is_subset(e.ideal(p))) {
            union.union_with(&e.x().fiber(p));
        }
        if union != *e.v(k) {
            return Outcome::fail(e.sub_label(k));
        }
    }
    Outcome::pass()
}

fn p3_2_6(e: &Env) -> Outcome {
    let ys = e.subsets(e.x().len());
    for y in &ys {
        let meet = e.gr_colon(e.meet_of(y));
        for k in 0..e.subs() {
            let lhs = y.is_subset(e.v(k));
            let rhs = e.ideal(e.gr_colon(k)).is_subset(e.ideal(meet));
            if lhs != rhs {
                return Outcome::fail(Env::pair(e.x().subset_label(y), e.sub_label(k)));
            }
        }
    }
    Outcome::pass().note(format!("subsets:{}", ys.len()))
}

fn p3_4_1(e: &Env) -> Outcome {
    let m = &e.maps;
    if !m.phi_r.is_total() {
        return Outcome::fail(m.qp_bar.labels[m.phi_r.failures[0].0].clone()).note("phi_R-undefined");
    }
    for j in 0..e.ctx.bar_ideals.len() {
        let pre = m.phi_r.preimage(m.spec_bar.variety(j));
        if pre != *m.qp_bar.variety(j) {
            return Outcome::fail(e.bar_label(j));
        }
        if m.phi_composed.preimage(m.spec_bar.variety(j)) != m.psi_q.preimage(m.qp_bar.variety(j)) {
            return Outcome::fail(e.bar_label(j)).note("composite");
        }
    }
    Outcome::pass().note(format!("semantics:{}", e.semantics))
}

fn p3_4_2(e: &Env) -> Outcome {
    let m = &e.maps;
    if !m.phi_r.is_total() {
        return Outcome::fail(m.qp_bar.labels[m.phi_r.failures[0].0].clone()).note("phi_R-undefined");
    }
    for j in 0..e.ctx.bar_ideals.len() {
        let closed = m.qp_bar.variety(j);
        if m.phi_r.image(closed) != *m.spec_bar.variety(j) {
            return Outcome::fail(e.bar_label(j)).note("closed");
        }
        if m.phi_r.image(&closed.complement()) != m.spec_bar.variety(j).complement() {
            return Outcome::fail(e.bar_label(j)).note("open");
        }
    }
    let p = map_profile(&m.phi_r, &m.qp_bar_top, &m.spec_bar_top);
    if !(p.closed_map && p.open_map && p.surjective) {
        return Outcome::fail("phi_R")
            .note(flag("closed", p.closed_map))
            .note(flag("open", p.open_map));
    }
    Outcome::pass().note(format!("semantics:{}", e.semantics))
}

fn p3_4_3(_: &Env) -> Outcome {
    Outcome {
        status: Status::Skipped,
        witness: None,
        notes: vec!["undefined:phi^M".into()],
    }
}

fn r3_6(e: &Env) -> Outcome {
    let m = &e.maps;
    let x = e.x();
    let subs = &e.ctx.submodules;
    for (p, &q) in x.points.iter().enumerate() {
        if m.phi.assignment[p].is_none() {
            return Outcome::fail(x.labels[p].clone()).note("phi-undefined");
        }
        if m.phi.assignment[p] != m.phi_composed.assignment[p] {
            return Outcome::fail(x.labels[p].clone()).note("routes-differ");
        }
        if subs.colon[subs.radical[q]] != subs.colon_radical[q] {
            return Outcome::fail(x.labels[p].clone()).note("(Gr_M(Q):M)!=Gr((Q:M))");
        }
    }
    Outcome::pass()
}

/// The three conditions shared by the injectivity characterisations.
fn injectivity_sides(e: &Env) -> (Option<String>, Option<String>, bool) {
    let x = e.x();
    let mut variety = None;
    'outer: for p in 0..x.len() {
        for q in p + 1..x.len() {
            if e.v(x.points[p]) == e.v(x.points[q]) {
                variety = Some(Env::pair(x.labels[p].clone(), x.labels[q].clone()));
                break 'outer;
            }
        }
    }
    let fiber = e
        .ctx
        .ideals
        .primes()
        .find(|&p| x.fiber(p).count() > 1)
        .map(|p| e.ideal_label(p));
    (variety, fiber, e.maps.phi.is_injective())
}

fn t3_7(e: &Env) -> Outcome {
    let (variety, fiber, injective) = injectivity_sides(e);
    let sides = [variety.is_none(), fiber.is_none(), injective];
    let notes = [
        flag("variety-separates", sides[0]),
        flag("fibers-le-1", sides[1]),
        flag("phi-injective", sides[2]),
    ];
    let out = if all_equal(&sides) {
        Outcome::pass()
    } else {
        Outcome::fail(variety.or(fiber).unwrap_or_else(|| "phi".into()))
    };
    notes.into_iter().fold(out, Outcome::note)
}

fn r3_10(e: &Env) -> Outcome {
    let qpf = e.profile.quasi_primaryful;
    let surj = e.maps.phi.is_surjective();
    let out = if qpf == surj {
        Outcome::pass()
    } else {
        Outcome::fail("phi")
    };
    out.note(flag("quasi-primaryful", qpf))
        .note(flag("phi-surjective", surj))
}

fn t3_11(e: &Env) -> Outcome {
    let m = &e.maps;
    let ann = e.ideal(e.ctx.ann);
    for i in 0..e.ctx.ideals.len() {
        if !ann.is_subset(e.ideal(i)) {
            continue;
        }
        let j = e.ctx.project_ideal(i);
        let a = m.phi.preimage(m.spec_bar.variety(j));
        let b = m.psi_q.preimage(m.qp_bar.variety(j));
        let c = e.v(e.ideal_times[i]);
        if a != *c {
            return Outcome::fail(e.ideal_label(i)).note("phi-preimage");
        }
        if b != *c {
            return Outcome::fail(e.ideal_label(i)).note("psi_q-preimage");
        }
    }
    let p = e.maps.phi_profile();
    if !p.continuous {
        return Outcome::fail("phi").note("not-continuous");
    }
    Outcome::pass()
}

fn t3_12(e: &Env) -> Outcome {
    if !e.profile.quasi_primaryful {
        return Outcome::skipped("quasi_primaryful");
    }
    let m = &e.maps;
    for k in 0..e.subs() {
        let j = e.ctx.project_ideal(e.gr_colon(k));
        let target = m.spec_bar.variety(j);
        if m.phi.image(e.v(k)) != *target {
            return Outcome::fail(e.sub_label(k)).note("closed");
        }
        if m.phi.image(&e.v(k).complement()) != target.complement() {
            return Outcome::fail(e.sub_label(k)).note("open");
        }
    }
    Outcome::pass()
}

fn c3_13(e: &Env) -> Outcome {
    let m = &e.maps;
    let direct = map_profile(&m.phi, &m.qp_module_top, &m.spec_bar_top);
    let composed = map_profile(&m.phi_composed, &m.qp_module_top, &m.spec_bar_top);
    let notes = [
        flag("bijective", direct.bijective()),
        flag("homeomorphism", direct.homeomorphism),
    ];
    let out = if direct.bijective() != direct.homeomorphism {
        Outcome::fail("phi")
    } else if composed.bijective() != composed.homeomorphism {
        Outcome::fail("phi_composed")
    } else if direct != composed {
        Outcome::fail("routes-differ")
    } else {
        Outcome::pass()
    };
    notes.into_iter().fold(out, Outcome::note)
}

fn t3_14(e: &Env) -> Outcome {
    let basics: Vec<(usize, BitSet)> = e.homogeneous.iter().map(|&r| (r, e.gx(r))).collect();
    for (r, b) in &basics {
        if !e.top().is_open(b) {
            return Outcome::fail(e.ctx.ring.label(*r).to_string()).note("basic-not-open");
        }
    }
    let opens = e.top().open_sets();
    for u in &opens {
        let mut union = BitSet::new(e.x().len());
        for (_, b) in basics.iter().filter(|(_, b)| b.is_subset(u)) {
            union.union_with(b);
        }
        if union != *u {
            return Outcome::fail(e.x().subset_label(u));
        }
    }
    Outcome::pass().note(format!("opens:{}", opens.len()))
}

/// One part of the ring-side basic-open laws on `qp.Spec_g(R)`.
fn t3_15_part(e: &Env, which: usize, part: u8) -> Option<String> {
    let (space, top) = &e.ring_qp[which];
    let ring = &e.ctx.ring;
    let gx = |r: usize| {
        space
            .variety(scaled_ring(ring, &e.ctx.ideals, r).expect("homogeneous"))
            .complement()
    };
    match part {
        1 => e
            .homogeneous
            .iter()
            .find(|&&r| gx(r).is_empty() != ring.is_nilpotent(r))
            .map(|&r| ring.label(r).to_string()),
        2 => e
            .homogeneous
            .iter()
            .find(|&&r| gx(r).is_full() != ring.is_unit(r))
            .map(|&r| ring.label(r).to_string()),
        3 => {
            let n = e.ctx.ideals.len();
            let rad = &e.ctx.ideals.radical;
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| (space.variety(i) == space.variety(j)) != (rad[i] == rad[j]))
                .map(|(i, j)| Env::pair(e.ideal_label(i), e.ideal_label(j)))
        }
        4 => {
            let h = &e.homogeneous;
            h.iter()
                .flat_map(|&r| h.iter().map(move |&s| (r, s)))
                .find(|&(r, s)| gx(ring.mul(r, s)) != gx(r).intersection(&gx(s)))
                .map(|(r, s)| Env::pair(ring.label(r).to_string(), ring.label(s).to_string()))
        }
        5 => (!top.is_quasi_compact(&space.full())).then(|| "qp.Spec(R)".to_string()),
        6 => top
            .t0_witness()
            .map(|(a, b)| Env::pair(space.labels[a].clone(), space.labels[b].clone())),
        _ => unreachable!("T3.15 has six parts"),
    }
}

fn t3_15(e: &Env, part: u8) -> Outcome {
    let primary = t3_15_part(e, 0, part);
    let other = t3_15_part(e, 1, part);
    let other_status = if other.is_none() { Status::Pass } else { Status::Fail };
    Outcome::from_witness(primary)
        .note(format!("semantics:{}", e.semantics))
        .note(format!("{}:{}", e.semantics.other(), other_status))
}

fn psi_q_surjective(e: &Env) -> bool {
    e.maps.psi_q.is_total() && e.maps.psi_q.is_surjective()
}

/// `GX_{r̄}` in `qp.Spec_g(R̄)`.
fn gx_bar(e: &Env, r: usize) -> BitSet {
    let rb = e.ctx.proj[r];
    let seed = scaled_ring(&e.ctx.bar, &e.ctx.bar_ideals, rb).expect("image of a homogeneous element is homogeneous");
    e.maps.qp_bar.variety(seed).complement()
}

fn p3_16_1(e: &Env) -> Outcome {
    if !e.maps.psi_q.is_total() {
        return Outcome::fail(e.x().labels[e.maps.psi_q.failures[0].0].clone()).note("psi_q-undefined");
    }
    Outcome::from_witness(
        e.homogeneous
            .iter()
            .find(|&&r| e.maps.psi_q.preimage(&gx_bar(e, r)) != e.gx(r))
            .map(|&r| e.ctx.ring.label(r).to_string()),
    )
}

fn p3_16_2(e: &Env) -> Outcome {
    let surjective = psi_q_surjective(e);
    for &r in &e.homogeneous {
        let image = e.maps.psi_q.image(&e.gx(r));
        let target = gx_bar(e, r);
        if !image.is_subset(&target) || (surjective && image != target) {
            return Outcome::fail(e.ctx.ring.label(r).to_string());
        }
    }
    Outcome::pass().note(flag("equality-exercised", surjective))
}

fn p3_16_3(e: &Env) -> Outcome {
    let ring = &e.ctx.ring;
    for &r in &e.homogeneous {
        for &s in &e.homogeneous {
            if e.gx(ring.mul(r, s)) != e.gx(r).intersection(&e.gx(s)) {
                return Outcome::fail(Env::pair(ring.label(r).to_string(), ring.label(s).to_string()));
            }
        }
    }
    Outcome::pass()
}

fn t3_16(e: &Env) -> Outcome {
    if !psi_q_surjective(e) {
        return Outcome::skipped("psi_q_surjective");
    }
    for &r in &e.homogeneous {
        if !e.top().is_quasi_compact(&e.gx(r)) {
            return Outcome::fail(e.ctx.ring.label(r).to_string());
        }
    }
    if !e.top().is_quasi_compact(&e.x().full()) {
        return Outcome::fail("qp.Spec(M)");
    }
    Outcome::pass()
}

fn t3_17(e: &Env) -> Outcome {
    if !psi_q_surjective(e) {
        return Outcome::skipped("psi_q_surjective");
    }
    let h = e.top().hochster();
    if !h.qc_opens_intersection_closed {
        return Outcome::fail("qc-opens").note("intersection");
    }
    if !h.qc_opens_base {
        return Outcome::fail("qc-opens").note("base");
    }
    Outcome::pass()
}

// ---------------------------------------------------------------- §4 checks

fn t4_1(e: &Env) -> Outcome {
    if !e.profile.quasi_primaryful {
        return Outcome::skipped("quasi_primaryful");
    }
    let m = &e.maps;
    let c = [
        m.spec_bar_top.is_connected(),
        m.qp_bar_top.is_connected(),
        m.qp_module_top.is_connected(),
        m.spec_module_top.is_connected(),
    ];
    let notes: Vec<String> = ["spec-bar", "qp-spec-bar", "qp-spec-m", "spec-m"]
        .iter()
        .zip(c)
        .map(|(n, v)| flag(n, v))
        .collect();
    let out = if !all_equal(&c[..3]) {
        Outcome::fail("(1)(2)(3)")
    } else if c[2] && !c[3] {
        Outcome::fail("(3)=>(4)")
    } else if e.profile.graded_primeful_module && c[3] && !c[0] {
        Outcome::fail("(4)=>(1)")
    } else {
        Outcome::pass()
    };
    notes.into_iter().fold(out, Outcome::note)
}

fn t4_2_1(e: &Env) -> Outcome {
    let x = e.x();
    for p in 0..x.len() {
        if e.top().point_closure(p) != *e.v(x.points[p]) {
            return Outcome::fail(x.labels[p].clone()).note("point");
        }
    }
    let ys = e.subsets(x.len());
    for y in &ys {
        if e.top().closure(y) != *e.v(e.meet_of(y)) {
            return Outcome::fail(x.subset_label(y));
        }
    }
    Outcome::pass().note(format!("subsets:{}", ys.len()))
}

fn t4_2_2(e: &Env) -> Outcome {
    let Some(z) = e.x().position(e.ctx.submodules.zero()) else {
        return Outcome::skipped("zero_in_qp_spec");
    };
    Outcome::from_witness(
        e.subsets(e.x().len())
            .iter()
            .find(|y| y.contains(z) && !e.top().closure(y).is_full())
            .map(|y| e.x().subset_label(y)),
    )
}

fn t4_2_3(e: &Env) -> Outcome {
    let x = e.x();
    for p in 0..x.len() {
        let closed = e.top().is_closed(&BitSet::singleton(x.len(), p));
        let rad = e.ideal(x.radicals[p]);
        let maximal = !x
            .radicals
            .iter()
            .any(|&q| q != x.radicals[p] && rad.is_subset(e.ideal(q)));
        let alone = x.fiber(x.radicals[p]).count() == 1;
        if closed != (maximal && alone) {
            return Outcome::fail(x.labels[p].clone());
        }
    }
    Outcome::pass()
}

fn t4_2_4(e: &Env) -> Outcome {
    let x = e.x();
    let closed: Vec<usize> = (0..x.len())
        .filter(|&p| e.top().is_closed(&BitSet::singleton(x.len(), p)))
        .collect();
    if closed.is_empty() {
        return Outcome::skipped("closed_point");
    }
    let maximal = e.maximal_points();
    Outcome::from_witness(
        closed
            .into_iter()
            .find(|&p| !maximal.contains(p))
            .map(|p| x.labels[p].clone()),
    )
}

fn t4_3(e: &Env) -> Outcome {
    let (variety, fiber, injective) = injectivity_sides(e);
    let t0 = e.top().t0_witness();
    let sides = [t0.is_none(), variety.is_none(), fiber.is_none(), injective];
    let notes = [
        flag("t0", sides[0]),
        flag("variety-separates", sides[1]),
        flag("fibers-le-1", sides[2]),
        flag("phi-injective", sides[3]),
    ];
    let out = if all_equal(&sides) {
        Outcome::pass()
    } else {
        let x = e.x();
        let w = t0
            .map(|(a, b)| Env::pair(x.labels[a].clone(), x.labels[b].clone()))
            .or(variety)
            .or(fiber)
            .unwrap_or_else(|| "phi".into());
        Outcome::fail(w)
    };
    notes.into_iter().fold(out, Outcome::note)
}

fn c4_4(e: &Env, part: u8) -> Outcome {
    let x = e.x();
    let top = e.top();
    let t0 = top.is_t0();
    let t1 = top.is_t1();
    let max_points = e.maximal_points();
    let max_g: Vec<usize> = e.ctx.submodules.graded_maximal_submodules();
    let out = match part {
        1 => {
            let rad_maximal = (0..x.len()).all(|p| {
                let rad = e.ideal(x.radicals[p]);
                !x.radicals
                    .iter()
                    .any(|&q| q != x.radicals[p] && rad.is_subset(e.ideal(q)))
            });
            (t1 != (t0 && rad_maximal)).then(|| "T1".to_string())
        }
        2 => (t1 != (t0 && max_points.is_full())).then(|| "T1".to_string()),
        3 => {
            let Some(z) = x.position(e.ctx.submodules.zero()) else {
                return Outcome::skipped("zero_in_qp_spec").note(flag("t1", t1));
            };
            (t1 != (x.len() == 1 && z == 0)).then(|| "T1".to_string())
        }
        4 => {
            if !(t0 && x.points == max_g) {
                return Outcome::skipped("t0_and_qp_spec_is_max");
            }
            (!t1).then(|| "T1".to_string())
        }
        _ => unreachable!("C4.4 has four parts"),
    };
    Outcome::from_witness(out).note(flag("t0", t0)).note(flag("t1", t1))
}

fn t4_5(e: &Env) -> Outcome {
    let t1 = e.top().is_t1();
    let max_g = e.ctx.submodules.graded_maximal_submodules();
    let is_max = e.x().points == max_g;
    let out = if t1 != is_max {
        Outcome::fail("T1")
    } else if t1 && e.maps.spec_module.points != max_g {
        Outcome::fail("Spec(M)")
    } else {
        Outcome::pass()
    };
    out.note(flag("t1", t1))
        .note(flag("qp-spec-is-max", is_max))
        .note("finite-instance:finitely-generated")
}

fn t4_6(e: &Env) -> Outcome {
    let x = e.x();
    Outcome::from_witness(
        (0..x.len())
            .find(|&p| {
                let v = e.v(x.points[p]);
                !(e.top().is_closed(v) && e.top().is_irreducible(v))
            })
            .map(|p| x.labels[p].clone()),
    )
}

fn t4_7(e: &Env) -> Outcome {
    let subs = &e.ctx.submodules;
    let ys = e.subsets(e.x().len());
    let mut exercised = 0;
    for y in &ys {
        let k = e.meet_of(y);
        let qp = subs.class[k].proper && subs.class[k].graded_quasi_primary;
        let irreducible = e.top().is_irreducible(y);
        if qp {
            exercised += 1;
            if !irreducible {
                return Outcome::fail(e.x().subset_label(y));
            }
        }
        if e.multiplication && subs.class[k].graded_primeful && irreducible && !qp {
            return Outcome::fail(e.x().subset_label(y)).note("converse");
        }
    }
    let out = if exercised == 0 {
        Outcome::skipped("quasi_primary_meet")
    } else {
        Outcome::pass()
    };
    out.note(flag("converse-exercised", e.multiplication))
        .note(format!("subsets:{}", ys.len()))
}

fn l4_8(e: &Env) -> Outcome {
    let (space, top) = &e.ring_spec;
    let ys = e.subsets(space.len());
    for y in &ys {
        let meet = space.intersection_of_points(y);
        let prime = e
            .ctx
            .ideals
            .find(&meet)
            .is_some_and(|i| e.ctx.ideals.class[i].graded_prime);
        if top.is_irreducible(y) != prime {
            return Outcome::fail(space.subset_label(y));
        }
    }
    Outcome::pass().note(format!("subsets:{}", ys.len()))
}

fn t4_9(e: &Env) -> Outcome {
    if !e.profile.quasi_primaryful {
        return Outcome::skipped("quasi_primaryful");
    }
    let x = e.x();
    let point_varieties: Vec<&BitSet> = x.points.iter().map(|&q| e.v(q)).collect();
    for c in e.top().closed_sets() {
        let irreducible = e.top().is_irreducible(c);
        let is_point_variety = point_varieties.contains(&c);
        if irreducible != is_point_variety {
            return Outcome::fail(x.subset_label(c));
        }
        if irreducible && e.top().generic_point(c).point.is_none() {
            return Outcome::fail(x.subset_label(c)).note("no-generic-point");
        }
    }
    Outcome::pass()
}

fn c4_10(e: &Env) -> Outcome {
    if !(e.maps.phi.is_total() && e.maps.phi.is_surjective()) {
        return Outcome::skipped("phi_surjective");
    }
    let x = e.x();
    let subs = &e.ctx.submodules;
    let components = e.top().irreducible_components();
    let mut images = Vec::new();
    for c in &components {
        let mut image = None;
        for (p, &q) in x.points.iter().enumerate() {
            if e.v(q) != c {
                continue;
            }
            let j = e.ctx.project_ideal(subs.colon[subs.radical[q]]);
            match image {
                None => image = Some(j),
                Some(i) if i != j => return Outcome::fail(x.labels[p].clone()).note("ill-defined"),
                _ => {}
            }
        }
        match image {
            Some(j) => images.push(j),
            None => return Outcome::fail(x.subset_label(c)).note("component-not-a-point-variety"),
        }
    }
    let mut sorted = images.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != images.len() {
        return Outcome::fail("components").note("not-injective");
    }
    let mut minimal = e.bar_minimal_primes();
    minimal.sort_unstable();
    if sorted != minimal {
        let labels: Vec<String> = minimal.iter().map(|&j| e.bar_label(j)).collect();
        return Outcome::fail(format!("{{{}}}", labels.join(","))).note("minimal-primes");
    }
    Outcome::pass().note(format!("components:{}", components.len()))
}

fn t4_11(e: &Env) -> Outcome {
    if !e.profile.quasi_primaryful {
        return Outcome::skipped("quasi_primaryful");
    }
    let ideals = &e.ctx.ideals;
    let ann = e.ideal(e.ctx.ann);
    let over_ann: Vec<usize> = ideals.primes().filter(|&p| ann.is_subset(e.ideal(p))).collect();
    let minimal = minimal_primes(&over_ann, |i| e.ideal(i));
    let mut phi: Vec<BitSet> = (0..ideals.len())
        .filter(|&q| ideals.class[q].graded_quasi_primary && ann.is_subset(e.ideal(q)))
        .filter(|&q| minimal.contains(&ideals.radical[q]))
        .map(|q| e.v(e.ideal_times[ideals.radical[q]]).clone())
        .collect();
    phi.sort_by(|a, b| a.cmp_canonical(b));
    phi.dedup();
    let mut components = e.top().irreducible_components();
    components.sort_by(|a, b| a.cmp_canonical(b));
    if phi != components {
        let missing = components
            .iter()
            .find(|c| !phi.contains(c))
            .or_else(|| phi.iter().find(|c| !components.contains(c)))
            .expect("the families differ");
        return Outcome::fail(e.x().subset_label(missing));
    }
    Outcome::pass().note(format!("components:{}", components.len()))
}

fn t4_13(e: &Env) -> Outcome {
    let closed_chain = e.top().longest_descending_chain();
    let noetherian = closed_chain <= e.top().closed_sets().len();
    let radicals: Vec<BitSet> = (0..e.subs())
        .filter(|&k| zqp_radical(e.x(), k) == *e.ctx.submodules.submodules[k].elements())
        .map(|k| e.ctx.submodules.submodules[k].elements().clone())
        .collect();
    let zqp_chain = longest_chain(&radicals);
    let acc = zqp_chain <= radicals.len();
    let out = if noetherian == acc {
        Outcome::pass()
    } else {
        Outcome::fail("noetherian")
    };
    out.note("finite-instance:vacuously-true")
        .note(format!("closed-chain:{closed_chain}"))
        .note(format!("zqp-chain:{zqp_chain}"))
}

fn t4_14(e: &Env, part: u8) -> Outcome {
    if !e.profile.quasi_primaryful {
        return Outcome::skipped("quasi_primaryful");
    }
    // Every finite space is Noetherian; the chain scan is the evidence.
    let chain = e.top().longest_descending_chain();
    if chain > e.top().closed_sets().len() {
        return Outcome::skipped("noetherian");
    }
    match part {
        1 => {
            if !e.maps.phi.is_injective() {
                return Outcome::skipped("phi_injective");
            }
            let points = e.x().point_sets.clone();
            let longest = longest_chain(&points);
            let out = if longest <= points.len() {
                Outcome::pass()
            } else {
                Outcome::fail("chain")
            };
            out.note(format!("longest-chain:{longest}"))
        }
        2 => {
            let primes: Vec<usize> = e.ctx.ideals.primes().collect();
            let minimal = minimal_primes(&primes, |i| e.ideal(i));
            let labels: Vec<String> = minimal.iter().map(|&p| e.ideal_label(p)).collect();
            Outcome::pass().note(format!("minimal-primes:{{{}}}", labels.join(",")))
        }
        _ => unreachable!("T4.14 has two parts"),
    }
}

fn t4_15(e: &Env) -> Outcome {
    if !psi_q_surjective(e) {
        return Outcome::skipped("psi_q_surjective");
    }
    let (variety, _, injective) = injectivity_sides(e);
    let x = e.x();
    let ann = e.ideal(e.ctx.ann);
    let fibers = e
        .ctx
        .ideals
        .primes()
        .filter(|&p| ann.is_subset(e.ideal(p)))
        .all(|p| x.fiber(p).count() <= 1);
    let profile = e.maps.phi_profile();
    let sides = [
        e.top().hochster().spectral(),
        e.top().is_t0(),
        injective,
        variety.is_none(),
        fibers,
        profile.homeomorphism,
    ];
    let names = [
        "spectral",
        "t0",
        "phi-injective",
        "variety-separates",
        "fibers-le-1",
        "homeomorphism",
    ];
    let out = if all_equal(&sides) {
        Outcome::pass()
    } else {
        Outcome::fail("equivalence")
    };
    names.iter().zip(sides).fold(out, |o, (n, v)| o.note(flag(n, v)))
}

/// A catalog entry.
pub struct Check {
    pub id: &'static str,
    pub title: &'static str,
    run: fn(&Env) -> Outcome,
}

impl Check {
    pub fn run(&self, env: &Env) -> Outcome {
        (self.run)(env)
    }
}

macro_rules! catalog {
    ($( $id:literal, $title:literal, $f:expr; )*) => {
        &[ $( Check { id: $id, title: $title, run: $f } ),* ]
    };
}

/// The catalog in report order.
pub static CATALOG: &[Check] = catalog![
    "T3.1", "closed-set axioms for qp-varieties", t3_1;
    "P3.2.1", "varieties reverse inclusion", p3_2_1;
    "P3.2.2", "V(Gr_M K) inside V(K)", p3_2_2;
    "P3.2.3", "V(K) = V(Gr((K:M))M)", p3_2_3;
    "P3.2.4", "equal radical colons give equal varieties", p3_2_4;
    "P3.2.5", "varieties are unions of fibers", p3_2_5;
    "P3.2.6", "Y in V(K) iff radical colons compare", p3_2_6;
    "P3.4.1", "phi_R preimages of varieties", p3_4_1;
    "P3.4.2", "phi_R is closed and open", p3_4_2;
    "P3.4.3", "phi^M continuity", p3_4_3;
    "R3.6", "two routes to phi agree", r3_6;
    "T3.7", "injectivity characterisations", t3_7;
    "R3.10", "quasi-primaryful iff phi surjective", r3_10;
    "T3.11", "preimages of varieties under phi and psi_q", t3_11;
    "T3.12", "phi images of closed and open sets", t3_12;
    "C3.13", "phi bijective iff homeomorphism", c3_13;
    "T3.14", "basic opens form a base", t3_14;
    "T3.15.1", "GX_r empty iff r nilpotent", |e| t3_15(e, 1);
    "T3.15.2", "GX_r full iff r unit", |e| t3_15(e, 2);
    "T3.15.3", "GX(I) = GX(J) iff Gr(I) = Gr(J)", |e| t3_15(e, 3);
    "T3.15.4", "GX_rs = GX_r meet GX_s", |e| t3_15(e, 4);
    "T3.15.5", "qp.Spec(R) quasi-compact", |e| t3_15(e, 5);
    "T3.15.6", "qp.Spec(R) is T0", |e| t3_15(e, 6);
    "T3.16", "basic opens are quasi-compact", t3_16;
    "P3.16.1", "psi_q preimage of basic opens", p3_16_1;
    "P3.16.2", "psi_q image of basic opens", p3_16_2;
    "P3.16.3", "module GX_rs = GX_r meet GX_s", p3_16_3;
    "T3.17", "quasi-compact opens: meets and base", t3_17;
    "T4.1", "connectedness transfers", t4_1;
    "T4.2.1", "closure is the variety of the meet", t4_2_1;
    "T4.2.2", "sets containing (0) are dense", t4_2_2;
    "T4.2.3", "closed points", t4_2_3;
    "T4.2.4", "closed points are maximal", t4_2_4;
    "T4.3", "T0 characterisations", t4_3;
    "C4.4.1", "T1 via maximal radical colons", |e| c4_4(e, 1);
    "C4.4.2", "T1 via maximal points", |e| c4_4(e, 2);
    "C4.4.3", "T1 when (0) is a point", |e| c4_4(e, 3);
    "C4.4.4", "T0 and qp.Spec = Max give T1", |e| c4_4(e, 4);
    "T4.5", "T1 iff qp.Spec = Max", t4_5;
    "T4.6", "point varieties are irreducible", t4_6;
    "T4.7", "quasi-primary meets give irreducible sets", t4_7;
    "L4.8", "irreducible iff prime meet in Spec(R)", l4_8;
    "T4.9", "irreducible closed sets are point varieties", t4_9;
    "C4.10", "components match minimal primes", c4_10;
    "T4.11", "components from minimal primes over Ann(M)", t4_11;
    "T4.13", "Noetherian iff ACC on Zqp-radicals", t4_13;
    "T4.14.1", "ascending chains of points stabilise", |e| t4_14(e, 1);
    "T4.14.2", "finitely many minimal primes", |e| t4_14(e, 2);
    "T4.15", "spectral characterisations", t4_15;
];

/// Catalog entries matching `selection`: an id selects itself and all of
/// its parts (`T3.15` selects `T3.15.1` to `T3.15.6`). Returns the first
/// selector that matches nothing as the error.
pub fn select(selection: &[String]) -> std::result::Result<Vec<&'static Check>, String> {
    if selection.is_empty() {
        return Ok(CATALOG.iter().collect());
    }
    let matches = |c: &Check, s: &str| c.id == s || c.id.strip_prefix(s).is_some_and(|rest| rest.starts_with('.'));
    if let Some(bad) = selection.iter().find(|s| !CATALOG.iter().any(|c| matches(c, s))) {
        return Err(bad.clone());
    }
    Ok(CATALOG
        .iter()
        .filter(|c| selection.iter().any(|s| matches(c, s)))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub id: &'static str,
    pub title: &'static str,
    pub outcome: Outcome,
    pub elapsed: Duration,
}

/// Run `checks` on one instance, in parallel, returning results in catalog
/// order.
pub fn run_checks(env: &Env, checks: &[&'static Check]) -> Vec<CheckResult> {
    checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = c.run(env);
            CheckResult {
                id: c.id,
                title: c.title,
                outcome,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

/// Index of each id in the catalog, for ordering merged reports.
pub fn catalog_position() -> HashMap<&'static str, usize> {
    CATALOG.iter().enumerate().map(|(i, c)| (c.id, i)).collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::limits::Limits;
    use crate::module::GradedModule;
    use crate::ring::GradedRing;

    fn run(ctx: &ModuleContext, id: &str) -> Outcome {
        let env = Env::new(ctx, VarietySemantics::Radical, Sampling::default()).unwrap();
        let c = CATALOG.iter().find(|c| c.id == id).unwrap();
        c.run(&env)
    }

    fn z(n: u32) -> ModuleContext {
        let m = GradedModule::regular(Arc::new(GradedRing::cyclic(n).unwrap()));
        ModuleContext::new(m, &Limits::default(), true).unwrap()
    }

    #[test]
    fn catalog_ids_are_unique_and_ordered() {
        let ids: Vec<&str> = CATALOG.iter().map(|c| c.id).collect();
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(ids, dedup);
        let key = |id: &str| -> Vec<u32> { id[1..].split('.').map(|p| p.parse().unwrap()).collect() };
        assert!(ids.windows(2).all(|w| key(w[0]) <= key(w[1])));
    }

    #[test]
    fn selection_expands_parts() {
        let sel = select(&["T3.15".into()]).unwrap();
        assert_eq!(sel.len(), 6);
        assert_eq!(select(&["T3.1".into()]).unwrap().len(), 1);
        assert_eq!(select(&["X9".into()]).err(), Some("X9".to_string()));
    }

    #[test]
    fn sampling_is_exhaustive_then_seeded() {
        let s = Sampling::default();
        assert_eq!(s.subsets(3).len(), 8);
        assert_eq!(s.subsets(0).len(), 1);
        let big = s.subsets(13);
        assert_eq!(big.len(), 2 + 13 + 4096);
        assert_eq!(big, s.subsets(13));
    }

    #[test]
    fn z6_suite_passes() {
        let c = z(6);
        let env = Env::new(&c, VarietySemantics::Radical, Sampling::default()).unwrap();
        for r in run_checks(&env, &select(&[]).unwrap()) {
            assert_ne!(r.outcome.status, Status::Fail, "{} {:?}", r.id, r.outcome);
        }
    }

    #[test]
    fn z4_ring_t0_fails_under_radical_reading() {
        let o = run(&z(4), "T3.15.6");
        assert_eq!(o.status, Status::Fail);
        assert_eq!(o.witness.as_deref(), Some("((0),(2))"));
        assert_eq!(o.notes, ["semantics:radical", "containment:PASS"]);
    }
}

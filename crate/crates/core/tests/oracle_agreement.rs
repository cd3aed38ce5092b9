//! Library lattices, classifications and topologies against the brute-force
//! oracle on every built-in instance.

mod oracle;

use gzariski::bitset::BitSet;
use gzariski::context::ModuleContext;
use gzariski::corpus::builtin_corpus;
use gzariski::limits::Limits;
use gzariski::spectrum::{SpectrumKind, SpectrumSpace};
use gzariski::topology::FiniteTopology;
use oracle::Set;

fn to_set(b: &BitSet) -> Set {
    b.iter().collect()
}

fn contexts() -> Vec<(String, ModuleContext)> {
    builtin_corpus()
        .into_iter()
        .filter_map(|d| {
            let ctx = d.context(&Limits::default()).unwrap();
            (ctx.ring.size() <= 64 && ctx.module.size() <= 64).then(|| (d.display_name().to_string(), ctx))
        })
        .collect()
}

#[test]
fn ideals_match_oracle() {
    for (name, ctx) in contexts() {
        let ours: Vec<Set> = ctx.ideals.ideals.iter().map(|i| to_set(i.elements())).collect();
        let mut sorted = ours.clone();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        let theirs = oracle::graded_ideals(&ctx.ring);
        assert_eq!(sorted, theirs, "{name}");
        assert!(
            ours.windows(2).all(|w| w[0].len() <= w[1].len()),
            "{name}: not ordered by size"
        );
    }
}

#[test]
fn submodules_match_oracle() {
    for (name, ctx) in contexts() {
        let mut ours: Vec<Set> = ctx.submodules.submodules.iter().map(|k| to_set(k.elements())).collect();
        ours.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        assert_eq!(ours, oracle::graded_submodules(&ctx.module), "{name}");
    }
}

#[test]
fn radicals_and_primes_match_oracle() {
    for (name, ctx) in contexts() {
        for (k, i) in ctx.ideals.ideals.iter().enumerate() {
            let s = to_set(i.elements());
            let rad = to_set(ctx.ideals.ideals[ctx.ideals.radical[k]].elements());
            assert_eq!(rad, oracle::radical(&ctx.ring, &s), "{name}: radical of {s:?}");
            assert_eq!(
                ctx.ideals.class[k].graded_prime,
                oracle::is_prime(&ctx.ring, &s),
                "{name}: {s:?}"
            );
        }
    }
}

#[test]
fn submodule_classes_match_oracle() {
    for (name, ctx) in contexts() {
        let m = &ctx.module;
        let subs = oracle::graded_submodules(m);
        let ideals = oracle::graded_ideals(&ctx.ring);
        for (k, sub) in ctx.submodules.submodules.iter().enumerate() {
            let s = to_set(sub.elements());
            let class = ctx.submodules.class[k];
            let colon = to_set(ctx.ideals.ideals[ctx.submodules.colon[k]].elements());
            assert_eq!(colon, oracle::colon(m, &s), "{name}: colon {s:?}");
            let gr = to_set(ctx.submodules.graded_submodule_radical(k).elements());
            assert_eq!(gr, oracle::module_radical(m, &subs, &s), "{name}: Gr_M {s:?}");
            assert_eq!(
                class.graded_prime,
                oracle::is_prime_submodule(m, &s),
                "{name}: prime {s:?}"
            );
            if class.proper {
                assert_eq!(
                    class.graded_quasi_primary,
                    oracle::is_quasi_primary_submodule(m, &subs, &s),
                    "{name}: qp {s:?}"
                );
            }
            assert_eq!(
                class.graded_primeful,
                oracle::is_primeful(m, &ideals, &subs, &s),
                "{name}: primeful {s:?}"
            );
        }
    }
}

fn qp_module(ctx: &ModuleContext) -> SpectrumSpace {
    SpectrumSpace::of_module(&ctx.module, &ctx.ideals, &ctx.submodules, SpectrumKind::QpModule).unwrap()
}

#[test]
fn qp_spectrum_points_match_oracle() {
    for (name, ctx) in contexts() {
        let space = qp_module(&ctx);
        let mut ours: Vec<Set> = space.point_sets.iter().map(to_set).collect();
        ours.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        assert_eq!(ours, oracle::qp_spec(&ctx.module), "{name}");
    }
}

/// Oracle varieties: a point `Q` lies in `qp-V(N)` when `Gr((N:M)) ⊆ Gr((Q:M))`.
fn oracle_closed_sets(ctx: &ModuleContext, points: &[Set]) -> Vec<Set> {
    let m = &ctx.module;
    let r = m.ring();
    let key = |s: &Set| oracle::radical(r, &oracle::colon(m, s));
    let point_keys: Vec<Set> = points.iter().map(key).collect();
    let family: Vec<Set> = oracle::graded_submodules(m)
        .iter()
        .map(|n| {
            let kn = key(n);
            (0..points.len()).filter(|&p| kn.is_subset(&point_keys[p])).collect()
        })
        .collect();
    oracle::topology_closure(points.len(), &family)
}

#[test]
fn topology_and_closures_match_oracle() {
    for (name, ctx) in contexts() {
        let space = qp_module(&ctx);
        let top = FiniteTopology::build(&space);
        let points: Vec<Set> = space.point_sets.iter().map(to_set).collect();
        let closed = oracle_closed_sets(&ctx, &points);
        let mut ours: Vec<Set> = top.closed_sets().iter().map(to_set).collect();
        ours.sort();
        let mut theirs = closed.clone();
        theirs.sort();
        assert_eq!(ours, theirs, "{name}: closed sets");
        let n = space.len();
        if n > 12 {
            continue;
        }
        for y in oracle::subsets(n) {
            let b = BitSet::from_indices(n, y.iter().copied());
            assert_eq!(
                to_set(&top.closure(&b)),
                oracle::closure(&closed, &y),
                "{name}: cl({y:?})"
            );
            assert_eq!(
                top.is_irreducible(&b),
                oracle::is_irreducible(&closed, &y),
                "{name}: irreducible {y:?}"
            );
        }
    }
}

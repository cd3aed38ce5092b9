//! Varieties and basic opens at the trivial seeds, on every built-in
//! instance and for both ring semantics.

use gzariski::corpus::builtin_corpus;
use gzariski::limits::Limits;
use gzariski::spectrum::{basic_open_module, basic_open_ring, SpectrumKind, SpectrumSpace, VarietySemantics};

#[test]
fn module_varieties_of_zero_and_whole() {
    for d in builtin_corpus() {
        let c = d.context(&Limits::default()).unwrap();
        for kind in [SpectrumKind::QpModule, SpectrumKind::SpecModule] {
            let x = SpectrumSpace::of_module(&c.module, &c.ideals, &c.submodules, kind).unwrap();
            let name = d.display_name();
            assert!(x.variety(c.submodules.zero()).is_full(), "{name} {kind}");
            assert!(x.variety(c.submodules.whole()).is_empty(), "{name} {kind}");
            let zero = basic_open_module(&x, &c.module, &c.submodules, 0).unwrap();
            let one = basic_open_module(&x, &c.module, &c.submodules, c.ring.one()).unwrap();
            assert!(zero.is_empty(), "{name} {kind}");
            assert!(one.is_full(), "{name} {kind}");
        }
    }
}

#[test]
fn ring_varieties_of_zero_and_whole() {
    for d in builtin_corpus() {
        let c = d.context(&Limits::default()).unwrap();
        let whole = c.ideals.len() - 1;
        assert_eq!(c.ideals.ideals[whole].len(), c.ring.size());
        for kind in [SpectrumKind::QpRing, SpectrumKind::SpecRing] {
            for sem in [VarietySemantics::Radical, VarietySemantics::Containment] {
                let x = SpectrumSpace::of_ring(&c.ring, &c.ideals, kind, sem).unwrap();
                let tag = format!("{} {kind} {sem}", d.display_name());
                assert!(x.variety(0).is_full(), "{tag}");
                assert!(x.variety(whole).is_empty(), "{tag}");
                assert!(basic_open_ring(&x, &c.ring, &c.ideals, 0).unwrap().is_empty(), "{tag}");
                assert!(
                    basic_open_ring(&x, &c.ring, &c.ideals, c.ring.one()).unwrap().is_full(),
                    "{tag}"
                );
            }
        }
    }
}

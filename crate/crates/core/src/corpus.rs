//! Instances shipped with the library.

use crate::instance::{parse_instance, InstanceDesc};

/// `(file name, source)` of every built-in instance, in report order.
pub const SOURCES: &[(&str, &str)] = &[
    ("inst-a.inst", include_str!("../corpus/inst-a.inst")),
    ("inst-b.inst", include_str!("../corpus/inst-b.inst")),
    ("inst-c.inst", include_str!("../corpus/inst-c.inst")),
    ("inst-d.inst", include_str!("../corpus/inst-d.inst")),
    ("inst-zero.inst", include_str!("../corpus/inst-zero.inst")),
    ("inst-simple.inst", include_str!("../corpus/inst-simple.inst")),
    ("z8.inst", include_str!("../corpus/z8.inst")),
    ("z12.inst", include_str!("../corpus/z12.inst")),
    ("truncated-cube.inst", include_str!("../corpus/truncated-cube.inst")),
    ("klein.inst", include_str!("../corpus/klein.inst")),
    ("z4-sum.inst", include_str!("../corpus/z4-sum.inst")),
    ("z6-z2.inst", include_str!("../corpus/z6-z2.inst")),
    ("shifted.inst", include_str!("../corpus/shifted.inst")),
];

pub fn builtin_corpus() -> Vec<InstanceDesc> {
    SOURCES
        .iter()
        .map(|(file, src)| parse_instance(src).unwrap_or_else(|e| panic!("corpus file {file}: {e}")))
        .collect()
}

/// A built-in instance by name, e.g. `INST-A`.
pub fn builtin(name: &str) -> Option<InstanceDesc> {
    builtin_corpus().into_iter().find(|d| d.name.as_deref() == Some(name))
}

//! Graded quasi-primary spectra of finite graded modules.
//!
//! Rings and modules are finite and graded by a finite group, so every
//! lattice, spectrum and topology here is enumerated outright. The
//! [`checks`] catalog evaluates properties of these spaces on concrete
//! instances; the `gzariski` binary drives it.
//!
//! ```
//! use gzariski::corpus::builtin;
//! use gzariski::limits::Limits;
//! use gzariski::spectrum::{SpectrumKind, SpectrumSpace};
//!
//! let ctx = builtin("INST-D").unwrap().context(&Limits::default()).unwrap();
//! let x = SpectrumSpace::of_module(&ctx.module, &ctx.ideals, &ctx.submodules, SpectrumKind::QpModule).unwrap();
//! assert_eq!(x.labels, ["(3)", "(2)"]);
//! ```
//!
//! The guide in `book/` walks through the pieces in order.

pub mod bitset;
pub mod cache;
pub mod checks;
pub mod context;
pub mod corpus;
pub mod desc;
pub mod error;
pub mod group;
pub mod ideal;
pub mod instance;
pub mod limits;
pub mod maps;
pub mod module;
mod presentation;
pub mod report;
pub mod ring;
mod span;
pub mod spectrum;
pub mod submodule;
pub mod topology;

/// Guide chapters, compiled so their snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
    #[doc = include_str!("../../../book/src/instances.md")]
    pub struct Instances;
    #[doc = include_str!("../../../book/src/ideals.md")]
    pub struct Ideals;
    #[doc = include_str!("../../../book/src/modules.md")]
    pub struct Modules;
    #[doc = include_str!("../../../book/src/spectra.md")]
    pub struct Spectra;
    #[doc = include_str!("../../../book/src/topology.md")]
    pub struct Topology;
    #[doc = include_str!("../../../book/src/maps.md")]
    pub struct Maps;
    #[doc = include_str!("../../../book/src/checks.md")]
    pub struct Checks;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}

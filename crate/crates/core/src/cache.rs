//! On-disk cache of enumerated lattices.
//!
//! Only the element sets of the graded ideals and submodules are stored;
//! classifications, radicals and spectra are recomputed on load, so a cache
//! hit produces exactly the same context as a fresh build. Entries are
//! keyed by a hash of the canonical instance text, the limits, the primeful
//! setting and the format version. Anything unreadable counts as a miss.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bitset::BitSet;
use crate::context::ModuleContext;
use crate::error::{Error, Result as AlgResult};
use crate::ideal::{enumerate_graded_ideals, GradedIdeal, IdealLattice};
use crate::instance::{serialize_instance, InstanceDesc};
use crate::limits::Limits;
use crate::submodule::{enumerate_graded_submodules, GradedSubmodule, SubmoduleLattice};

const VERSION: &str = "gzariski-cache-1";

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    version: String,
    key: String,
    ring_size: usize,
    module_size: usize,
    ideals: Vec<Vec<u64>>,
    submodules: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
}

#[derive(Debug, Clone)]
pub struct LatticeCache {
    dir: PathBuf,
}

pub fn cache_key(desc: &InstanceDesc, limits: &Limits) -> String {
    let mut h = Sha256::new();
    h.update(VERSION.as_bytes());
    h.update(b"\0");
    h.update(serialize_instance(desc).as_bytes());
    h.update(b"\0");
    h.update(
        format!(
            "{} {} {} {}",
            limits.max_carrier,
            limits.max_group,
            limits.max_lattice,
            desc.require_primeful()
        )
        .as_bytes(),
    );
    hex::encode(h.finalize())
}

impl LatticeCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        LatticeCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Context for `desc`, from the cache when a valid entry exists.
    pub fn context(&self, desc: &InstanceDesc, limits: &Limits) -> Result<(ModuleContext, CacheStatus), Error> {
        let ring = desc.build_ring(limits)?;
        let module = desc.build_module(ring, limits)?;
        let key = cache_key(desc, limits);
        if let Some(entry) = self.load(&key) {
            if let Some(ctx) = from_entry(&entry, module.clone(), desc.require_primeful(), limits) {
                return Ok((ctx, CacheStatus::Hit));
            }
        }
        let ring = module.ring_arc().clone();
        let ideals = enumerate_graded_ideals(&ring, limits.max_lattice)?;
        let submodules = enumerate_graded_submodules(&module, limits.max_lattice)?;
        let entry = Entry {
            version: VERSION.into(),
            key: key.clone(),
            ring_size: ring.size(),
            module_size: module.size(),
            ideals: ideals.iter().map(|i| i.elements().words().to_vec()).collect(),
            submodules: submodules.iter().map(|k| k.elements().words().to_vec()).collect(),
        };
        let ideals = IdealLattice::from_ideals(&ring, ideals)?;
        let subs = SubmoduleLattice::from_submodules(&module, &ideals, submodules, desc.require_primeful())?;
        let ctx = ModuleContext::from_lattices(module, ideals, subs, limits)?;
        self.store(&key, &entry)?;
        Ok((ctx, CacheStatus::Miss))
    }

    fn load(&self, key: &str) -> Option<Entry> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        (entry.version == VERSION && entry.key == key).then_some(entry)
    }

    fn store(&self, key: &str, entry: &Entry) -> Result<(), Error> {
        let io = |source| Error::Io {
            path: self.dir.display().to_string(),
            source,
        };
        fs::create_dir_all(&self.dir).map_err(io)?;
        let mut tmp = tempfile_in(&self.dir).map_err(io)?;
        let json = serde_json::to_string(entry).expect("cache entry serializes");
        tmp.1.write_all(json.as_bytes()).map_err(io)?;
        tmp.1.sync_all().map_err(io)?;
        drop(tmp.1);
        fs::rename(&tmp.0, self.path(key)).map_err(io)
    }
}

fn tempfile_in(dir: &Path) -> std::io::Result<(PathBuf, fs::File)> {
    let pid = std::process::id();
    for n in 0u32.. {
        let p = dir.join(format!(".tmp-{pid}-{n}"));
        match fs::OpenOptions::new().write(true).create_new(true).open(&p) {
            Ok(f) => return Ok((p, f)),
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => continue,
            Err(e) => return Err(e),
        }
    }
    unreachable!()
}

fn sets(len: usize, words: &[Vec<u64>]) -> Option<Vec<BitSet>> {
    words.iter().map(|w| BitSet::from_words(len, w.clone())).collect()
}

fn from_entry(
    entry: &Entry,
    module: crate::module::GradedModule,
    require_primeful: bool,
    limits: &Limits,
) -> Option<ModuleContext> {
    let ring = module.ring_arc().clone();
    if entry.ring_size != ring.size() || entry.module_size != module.size() {
        return None;
    }
    let ideals: Vec<GradedIdeal> = sets(ring.size(), &entry.ideals)?
        .into_iter()
        .map(GradedIdeal::from_set)
        .collect();
    let subs: Vec<GradedSubmodule> = sets(module.size(), &entry.submodules)?
        .into_iter()
        .map(GradedSubmodule::from_set)
        .collect();
    let built = (|| -> AlgResult<ModuleContext> {
        let ideals = IdealLattice::from_ideals(&ring, ideals)?;
        let subs = SubmoduleLattice::from_submodules(&module, &ideals, subs, require_primeful)?;
        ModuleContext::from_lattices(module, ideals, subs, limits)
    })();
    built.ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::builtin;

    #[test]
    fn hit_reproduces_context() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path());
        let desc = builtin("INST-B").unwrap();
        let limits = desc.limits(Limits::default());
        let (a, s1) = cache.context(&desc, &limits).unwrap();
        let (b, s2) = cache.context(&desc, &limits).unwrap();
        assert_eq!((s1, s2), (CacheStatus::Miss, CacheStatus::Hit));
        assert_eq!(a.ideals.ideals.len(), b.ideals.ideals.len());
        for (x, y) in a.submodules.submodules.iter().zip(&b.submodules.submodules) {
            assert_eq!(x.elements(), y.elements());
        }
        assert_eq!(a.submodules.class, b.submodules.class);
    }

    #[test]
    fn corrupt_entry_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = LatticeCache::new(dir.path());
        let desc = builtin("INST-A").unwrap();
        let limits = desc.limits(Limits::default());
        cache.context(&desc, &limits).unwrap();
        let path = cache.path(&cache_key(&desc, &limits));
        fs::write(&path, "{not json").unwrap();
        let (_, s) = cache.context(&desc, &limits).unwrap();
        assert_eq!(s, CacheStatus::Miss);
        let (_, s) = cache.context(&desc, &limits).unwrap();
        assert_eq!(s, CacheStatus::Hit);
    }

    #[test]
    fn key_depends_on_primeful_setting() {
        let mut desc = builtin("INST-A").unwrap();
        let limits = Limits::default();
        let k1 = cache_key(&desc, &limits);
        desc.options.require_primeful = Some(false);
        assert_ne!(k1, cache_key(&desc, &limits));
    }
}

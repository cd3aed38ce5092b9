/// Size caps applied before any table is allocated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring or module carrier.
    pub max_carrier: usize,
    /// Largest grading group.
    pub max_group: usize,
    /// Largest number of ideals or submodules an enumeration may produce.
    pub max_lattice: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_carrier: 4096,
            max_group: 16,
            max_lattice: 1 << 16,
        }
    }
}

//! Plain descriptions of groups, rings and modules as they appear in
//! instance files, before any validation.

/// A group given by its Cayley table on `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDesc {
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupDesc {
    pub fn trivial() -> Self {
        GroupDesc {
            identity: 0,
            table: vec![vec![0]],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        GroupDesc {
            identity: 0,
            table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
}

/// `component <g> = d1 x d2 x ...`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecl {
    pub grade: usize,
    pub orders: Vec<u32>,
}

/// A residue tuple pinned to a component, e.g. `0:(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tagged {
    pub grade: usize,
    pub residues: Vec<u32>,
}

/// One structure constant: the product of a generator of component `left.grade`
/// with a generator of component `right.grade`.
///
/// `target` is the component the product is declared to land in; when absent
/// it is the product of the two grades.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub left: Tagged,
    pub right: Tagged,
    pub target: Option<usize>,
    pub value: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingDesc {
    pub components: Vec<ComponentDecl>,
    pub mul: Vec<Product>,
    pub one: Tagged,
}

impl RingDesc {
    /// `Z/n` concentrated in the identity component.
    pub fn cyclic(n: u32) -> Self {
        RingDesc {
            components: vec![ComponentDecl {
                grade: 0,
                orders: vec![n],
            }],
            mul: vec![Product {
                left: Tagged {
                    grade: 0,
                    residues: vec![1],
                },
                right: Tagged {
                    grade: 0,
                    residues: vec![1],
                },
                target: None,
                value: vec![1 % n],
            }],
            one: Tagged {
                grade: 0,
                residues: vec![1 % n],
            },
        }
    }

    /// Cyclic orders of every component, indexed by group element.
    pub fn component_orders(&self, group_order: usize) -> Vec<Vec<u32>> {
        layout(&self.components, group_order)
    }
}

/// In `act` products the left factor is a ring generator and the right
/// factor a module generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDesc {
    pub regular: bool,
    pub components: Vec<ComponentDecl>,
    pub act: Vec<Product>,
}

impl ModuleDesc {
    pub fn regular() -> Self {
        ModuleDesc {
            regular: true,
            components: Vec::new(),
            act: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        ModuleDesc {
            regular: false,
            components: Vec::new(),
            act: Vec::new(),
        }
    }

    pub fn component_orders(&self, group_order: usize) -> Vec<Vec<u32>> {
        layout(&self.components, group_order)
    }
}

fn layout(decls: &[ComponentDecl], group_order: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); group_order];
    for d in decls {
        if d.grade < group_order {
            out[d.grade] = d.orders.clone();
        }
    }
    out
}

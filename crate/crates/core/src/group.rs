//! Finite groups given by a Cayley table.

use crate::error::{AlgebraError, Result};

/// A finite group on the indices `0..order`, verified exhaustively on
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    cayley: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(identity: usize, table: &[Vec<usize>]) -> Result<Self> {
        let order = table.len();
        let bad = |msg: String| Err(AlgebraError::InvalidGroup(msg));
        if order == 0 {
            return bad("empty table".into());
        }
        if identity >= order {
            return bad(format!("identity {identity} is not an element"));
        }
        let mut cayley = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return bad(format!("row {a} has {} entries, expected {order}", row.len()));
            }
            if let Some(&c) = row.iter().find(|&&c| c >= order) {
                return bad(format!("row {a} contains {c}, outside 0..{order}"));
            }
            cayley.extend_from_slice(row);
        }
        let op = |a: usize, b: usize| cayley[a * order + b];
        for a in 0..order {
            if op(identity, a) != a || op(a, identity) != a {
                return bad(format!("{identity} is not neutral for {a}"));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return bad(format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            match (0..order).find(|&b| op(a, b) == identity && op(b, a) == identity) {
                Some(b) => inverse.push(b),
                None => return bad(format!("{a} has no inverse")),
            }
        }
        Ok(FiniteGroup {
            order,
            identity,
            cayley,
            inverse,
        })
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            order: 1,
            identity: 0,
            cayley: vec![0],
            inverse: vec![0],
        }
    }

    /// The cyclic group `Z/n` written additively on `0..n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(0, &table).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(<[usize]>::to_vec).collect()
    }
}
